#ifndef DICHROMA_GENERATORS_HPP
#define DICHROMA_GENERATORS_HPP

#include <dichroma/graph.hpp>
#include <dichroma/products.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dichroma
{
    inline constexpr std::size_t default_generator_vertex_limit = 5000;

    /// All k-subsets of {1..n}, adjacent when disjoint. Vertices follow
    /// colexicographic order and are labelled "{1,2}" etc.
    auto kneser(std::size_t n, std::size_t k, std::size_t vertex_limit = default_generator_vertex_limit) -> Graph;

    /// The k-subsets of {0..n-1} as bitmasks, colexicographically ordered
    /// (this is the vertex order of kneser(n, k)). Requires n <= 63.
    auto colex_subsets(std::size_t n, std::size_t k) -> std::vector<Mask>;

    /// Index of a k-subset in colexicographic order.
    auto colex_rank(Mask subset) -> std::size_t;

    /// r parts of m vertices each; vertex p*m+i is labelled "p<p>.<i>".
    auto complete_multipartite(std::size_t m, std::size_t r, std::size_t vertex_limit = default_generator_vertex_limit) -> Graph;

    /// K_n x K_n: vertex (i,j) at index i*n+j, labelled "(i,j)", adjacent
    /// when both coordinates differ.
    auto rook(std::size_t n, std::size_t vertex_limit = default_generator_vertex_limit) -> Graph;

    /// K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other.
    auto complete_bipartite(std::size_t a, std::size_t b) -> Graph;

    /// The d-dimensional cube graph on 2^d vertices (d <= 12).
    auto hypercube(std::size_t d) -> Graph;

    /// A hub (vertex 0) joined to every vertex of a rim cycle of length n >= 3.
    auto wheel(std::size_t n) -> Graph;

    /// Small named graphs: K<n>, C<n>, P<n>, E<n> (edgeless), W<n>, Q<d>,
    /// K<a>,<b>, Petersen, Octahedron; digraphs DC<n> (directed cycle) and TT<n>
    /// (transitive tournament). Throws InvalidArgument on an unknown name.
    auto named_graph(const std::string & name) -> AnyGraph;

    using Point = std::vector<double>;

    struct BorsukSampleConfig
    {
        /// The sphere S^n sits in R^(n+1).
        std::size_t n = 1;
        /// Adjacency threshold on Euclidean distance, in (0,2).
        double a = 1.9;
        /// Cap radius; defaults to (2-a)/2.
        std::optional<double> delta;
        double cube_side = 0.1;
        double perturbation_scale = 1.0;
        std::size_t point_limit = default_generator_vertex_limit;

        auto effective_delta() const -> double;
        auto validate() const -> void;
    };

    struct BorsukSample
    {
        Graph graph;
        std::vector<Point> points;
    };

    /// Finite sample of the Borsuk graph: one point per lattice cube of side
    /// cube_side lying inside the ball of radius 1+2*delta, taken as the
    /// cube centre plus a small hash-keyed offset, projected radially onto
    /// the unit sphere. Labels are the integer lattice coordinates of the cube.
    auto borsuk_sample(const BorsukSampleConfig & config) -> BorsukSample;

    /// Points adjacent when their distance is at least a.
    auto borsuk_graph(const std::vector<Point> & points, double a) -> Graph;

    /// n+2 unit vectors in R^(n+1) forming a regular simplex centred at the origin.
    auto regular_simplex(std::size_t dimension) -> std::vector<Point>;

    /// Colours each unit vector x by argmin_i <x, s_i> over the vertices of
    /// regular_simplex, breaking ties (within 1e-12) towards the lower index.
    auto simplex_coloring(const std::vector<Point> & points) -> Coloring;

    /// An injective map from source vertices to target vertices that
    /// preserves adjacency and non-adjacency.
    struct EmbeddingWitness
    {
        Graph source;
        Graph target;
        std::vector<Vertex> map;
    };

    /// Checks injectivity and that u~v in source iff map(u)~map(v) in target,
    /// over every pair.
    auto verify_embedding(const EmbeddingWitness & w) -> bool;

    /// rook(floor(n/k)) inside kneser(n,k): (i,j) goes to {i} together with
    /// the j-th block of k-1 elements taken after the first floor(n/k).
    auto embed_rook_in_kneser(std::size_t n, std::size_t k, std::size_t vertex_limit = default_generator_vertex_limit) -> EmbeddingWitness;

    /// kneser(n1,k1) x kneser(n-n1,k-k1) inside kneser(n,k): (A,B) goes to
    /// A together with B shifted past the first n1 elements.
    auto embed_kneser_tensor(std::size_t n, std::size_t k, std::size_t n1, std::size_t k1,
            std::size_t vertex_limit = default_generator_vertex_limit) -> EmbeddingWitness;
}

#endif
