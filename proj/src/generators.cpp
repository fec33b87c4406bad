#include <dichroma/combinatorics.hpp>
#include <dichroma/core.hpp>
#include <dichroma/error.hpp>
#include <dichroma/generators.hpp>
#include <dichroma/products.hpp>
#include <dichroma/rng.hpp>

#include <algorithm>
#include <cmath>
#include <map>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace dichroma
{
    using std::to_string;

    namespace
    {
        auto check_vertex_count(const BigInt & count, size_t limit, const string & what) -> void
        {
            if (count > limit)
                throw LimitExceeded(what + " would have " + count.str() + " vertices, limit is " + to_string(limit));
        }

        auto subset_label(Mask s) -> string
        {
            string result = "{";
            bool first = true;
            for_each_bit(s, [&](Vertex e) {
                if (! first)
                    result += ",";
                result += to_string(e + 1);
                first = false;
            });
            return result + "}";
        }

        auto norm(const Point & p) -> double
        {
            double s = 0;
            for (auto x : p)
                s += x * x;
            return std::sqrt(s);
        }

        auto distance(const Point & p, const Point & q) -> double
        {
            double s = 0;
            for (size_t i = 0; i < p.size(); ++i)
                s += (p[i] - q[i]) * (p[i] - q[i]);
            return std::sqrt(s);
        }
    }

    auto colex_subsets(size_t n, size_t k) -> vector<Mask>
    {
        if (n > 63)
            throw LimitExceeded("ground sets above 63 elements are not supported");
        if (k > n)
            return {};
        vector<Mask> result;
        if (k == 0)
            return {Mask{0}};
        Mask s = low_bits(k), limit = Mask{1} << n;
        while (s < limit) {
            result.push_back(s);
            // Gosper's hack: next larger integer with the same popcount.
            Mask c = s & (0 - s), r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
        return result;
    }

    auto colex_rank(Mask subset) -> size_t
    {
        size_t rank = 0, i = 1;
        for_each_bit(subset, [&](Vertex e) {
            rank += static_cast<size_t>(binomial_u64(e, i));
            ++i;
        });
        return rank;
    }

    auto kneser(size_t n, size_t k, size_t vertex_limit) -> Graph
    {
        if (k < 1 || k > n)
            throw InvalidArgument("kneser(n,k) needs 1 <= k <= n");
        check_vertex_count(binomial(n, k), vertex_limit, "kneser(" + to_string(n) + "," + to_string(k) + ")");

        auto subsets = colex_subsets(n, k);
        Graph g(subsets.size());
        for (size_t i = 0; i < subsets.size(); ++i)
            for (size_t j = i + 1; j < subsets.size(); ++j)
                if (! (subsets[i] & subsets[j]))
                    g.add_edge(i, j);

        vector<string> labels;
        for (auto s : subsets)
            labels.push_back(subset_label(s));
        g.set_labels(std::move(labels));
        return g;
    }

    auto complete_multipartite(size_t m, size_t r, size_t vertex_limit) -> Graph
    {
        if (m < 1 || r < 1)
            throw InvalidArgument("complete_multipartite needs m >= 1 and r >= 1");
        check_vertex_count(BigInt(m) * r, vertex_limit, "complete_multipartite");

        Graph g(m * r);
        vector<string> labels;
        for (size_t u = 0; u < m * r; ++u) {
            for (size_t v = u + 1; v < m * r; ++v)
                if (u / m != v / m)
                    g.add_edge(u, v);
            labels.push_back("p" + to_string(u / m) + "." + to_string(u % m));
        }
        g.set_labels(std::move(labels));
        return g;
    }

    auto rook(size_t n, size_t vertex_limit) -> Graph
    {
        if (n < 1)
            throw InvalidArgument("rook needs n >= 1");
        check_vertex_count(BigInt(n) * n, vertex_limit, "rook");

        Graph g(n * n);
        vector<string> labels;
        for (size_t u = 0; u < n * n; ++u) {
            for (size_t v = u + 1; v < n * n; ++v)
                if (u / n != v / n && u % n != v % n)
                    g.add_edge(u, v);
            labels.push_back("(" + to_string(u / n) + "," + to_string(u % n) + ")");
        }
        g.set_labels(std::move(labels));
        return g;
    }

    auto BorsukSampleConfig::effective_delta() const -> double
    {
        return delta.value_or((2.0 - a) / 2.0);
    }

    auto BorsukSampleConfig::validate() const -> void
    {
        if (n < 1)
            throw InvalidArgument("borsuk sample needs n >= 1");
        if (! (a > 0.0 && a < 2.0))
            throw InvalidArgument("borsuk threshold a must lie in (0,2)");
        auto d = effective_delta();
        if (! (d > 0.0 && d <= (2.0 - a) / 2.0))
            throw InvalidArgument("delta must lie in (0, (2-a)/2]");
        if (! (cube_side > 0.0))
            throw InvalidArgument("cube side must be positive");
        if (! (perturbation_scale >= 0.0))
            throw InvalidArgument("perturbation scale must be non-negative");
    }

    auto borsuk_sample(const BorsukSampleConfig & config) -> BorsukSample
    {
        config.validate();
        auto dim = config.n + 1;
        auto c = config.cube_side;
        auto radius = 1.0 + 2.0 * config.effective_delta();
        auto reach = static_cast<long>(std::ceil(radius / c));
        auto epsilon = config.perturbation_scale * c * 1e-3;

        // Rough count of cubes inside the ball, to refuse absurd requests
        // before walking the lattice.
        auto estimate = std::pow(2.0 * radius / c, static_cast<double>(dim));
        if (estimate > 64.0 * static_cast<double>(config.point_limit) + 1e6)
            throw LimitExceeded("borsuk lattice would be too large (about " + to_string(static_cast<long long>(estimate)) + " cubes)");

        BorsukSample result;
        vector<string> labels;
        vector<long> k(dim, -reach);
        for (;;) {
            double far = 0;
            for (auto ki : k) {
                double lo = std::abs(c * static_cast<double>(ki)), hi = std::abs(c * static_cast<double>(ki + 1));
                far += std::max(lo, hi) * std::max(lo, hi);
            }

            if (far <= radius * radius) {
                if (result.points.size() >= config.point_limit)
                    throw LimitExceeded("borsuk sample exceeds " + to_string(config.point_limit) + " points");

                Point h(dim);
                std::uint64_t key = 0x243f6a8885a308d3ULL;
                for (auto ki : k)
                    key = mix64(key ^ static_cast<std::uint64_t>(ki));
                for (size_t i = 0; i < dim; ++i)
                    h[i] = static_cast<double>(mix64(key + i) >> 11) * 0x1.0p-52 - 1.0;
                auto hn = norm(h);

                Point x(dim);
                for (size_t i = 0; i < dim; ++i)
                    x[i] = c * (static_cast<double>(k[i]) + 0.5) + (hn > 0 ? epsilon * h[i] / hn : 0.0);
                auto xn = norm(x);
                if (xn == 0.0)
                    throw InvalidArgument("perturbed cube centre lies at the origin");
                for (auto & xi : x)
                    xi /= xn;
                result.points.push_back(std::move(x));

                string label = "Q(";
                for (size_t i = 0; i < dim; ++i)
                    label += (i ? "," : "") + to_string(k[i]);
                labels.push_back(label + ")");
            }

            size_t i = 0;
            while (i < dim && ++k[i] == reach)
                k[i++] = -reach;
            if (i == dim)
                break;
        }

        result.graph = borsuk_graph(result.points, config.a);
        for (size_t i = 0; i < result.points.size(); ++i)
            for (size_t j = i + 1; j < result.points.size(); ++j)
                if (distance(result.points[i], result.points[j]) < 1e-12)
                    throw InvalidArgument("perturbation failed to separate the projections of " + labels[i] + " and " + labels[j]);
        result.graph.set_labels(std::move(labels));
        return result;
    }

    auto borsuk_graph(const vector<Point> & points, double a) -> Graph
    {
        Graph g(points.size());
        for (size_t i = 0; i < points.size(); ++i)
            for (size_t j = i + 1; j < points.size(); ++j)
                if (distance(points[i], points[j]) >= a)
                    g.add_edge(i, j);
        return g;
    }

    auto regular_simplex(size_t dimension) -> vector<Point>
    {
        if (dimension < 1)
            throw InvalidArgument("simplex needs dimension >= 1");
        // Centred standard basis of R^(d+1), written in the Helmert
        // orthonormal basis of the hyperplane orthogonal to (1,...,1),
        // with d = dimension + 1.
        auto d = dimension + 1;
        auto scale = std::sqrt(static_cast<double>(d + 1) / static_cast<double>(d));
        vector<Point> result(d + 1, Point(d, 0.0));
        for (size_t j = 1; j <= d; ++j) {
            auto denom = std::sqrt(static_cast<double>(j * (j + 1)));
            for (size_t i = 0; i < j; ++i)
                result[i][j - 1] = scale / denom;
            result[j][j - 1] = -scale * static_cast<double>(j) / denom;
        }
        return result;
    }

    auto simplex_coloring(const vector<Point> & points) -> Coloring
    {
        if (points.empty())
            throw InvalidArgument("simplex colouring needs at least one point");
        auto dim = points.front().size();
        if (dim < 2)
            throw InvalidArgument("points must live in R^(n+1) with n >= 1");
        auto simplex = regular_simplex(dim - 1);

        auto result = Coloring::over_first(dim + 1, {});
        for (auto & p : points) {
            if (p.size() != dim)
                throw InvalidArgument("points have mixed dimensions");
            if (std::abs(norm(p) - 1.0) > 1e-9)
                throw InvalidArgument("simplex colouring needs unit vectors");
            Colour best = 0;
            double best_dot = 0;
            for (size_t i = 0; i < simplex.size(); ++i) {
                double dot = 0;
                for (size_t j = 0; j < dim; ++j)
                    dot += p[j] * simplex[i][j];
                if (i == 0 || dot < best_dot - 1e-12) {
                    best = static_cast<Colour>(i);
                    best_dot = dot;
                }
            }
            result.assignment.push_back(best);
        }
        return result;
    }

    auto verify_embedding(const EmbeddingWitness & w) -> bool
    {
        auto n = w.source.order();
        if (w.map.size() != n)
            return false;
        vector<bool> used(w.target.order(), false);
        for (auto t : w.map) {
            if (t >= w.target.order() || used[t])
                return false;
            used[t] = true;
        }
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (w.source.has_edge(u, v) != w.target.has_edge(w.map[u], w.map[v]))
                    return false;
        return true;
    }

    auto embed_rook_in_kneser(size_t n, size_t k, size_t vertex_limit) -> EmbeddingWitness
    {
        if (k < 2 || k > n)
            throw InvalidArgument("embed_rook_in_kneser needs 2 <= k <= n");
        auto q = n / k;
        if (q + q * (k - 1) > n)
            throw InvalidArgument("ground set too small for the rook embedding");

        EmbeddingWitness w{rook(q, vertex_limit), kneser(n, k, vertex_limit), {}};
        for (size_t i = 0; i < q; ++i)
            for (size_t j = 0; j < q; ++j) {
                Mask block = low_bits(k - 1) << (q + j * (k - 1));
                w.map.push_back(colex_rank(bit(i) | block));
            }

        if (! verify_embedding(w))
            throw std::logic_error("rook embedding failed verification");
        return w;
    }

    auto embed_kneser_tensor(size_t n, size_t k, size_t n1, size_t k1, size_t vertex_limit) -> EmbeddingWitness
    {
        if (n1 > n || k1 >= k || k1 < 1)
            throw InvalidArgument("embed_kneser_tensor needs n1 <= n and 1 <= k1 < k");
        auto n2 = n - n1, k2 = k - k1;
        if (2 * k1 > n1 || 2 * k2 > n2)
            throw InvalidArgument("embed_kneser_tensor needs 2*k1 <= n1 and 2*(k-k1) <= n-n1");

        auto first = kneser(n1, k1, vertex_limit), second = kneser(n2, k2, vertex_limit);
        EmbeddingWitness w{tensor_product(first, second), kneser(n, k, vertex_limit), {}};
        auto a_sets = colex_subsets(n1, k1), b_sets = colex_subsets(n2, k2);
        for (auto a : a_sets)
            for (auto b : b_sets)
                w.map.push_back(colex_rank(a | (b << n1)));

        if (! verify_embedding(w))
            throw std::logic_error("kneser tensor embedding failed verification");
        return w;
    }
}

namespace dichroma
{
    auto complete_bipartite(size_t a, size_t b) -> Graph
    {
        Graph g(a + b);
        for (size_t i = 0; i < a; ++i)
            for (size_t j = 0; j < b; ++j)
                g.add_edge(i, a + j);
        return g;
    }

    auto hypercube(size_t d) -> Graph
    {
        if (d > 12)
            throw LimitExceeded("hypercube dimension above 12");
        size_t n = size_t{1} << d;
        Graph g(n);
        for (size_t v = 0; v < n; ++v)
            for (size_t i = 0; i < d; ++i)
                if (auto w = v ^ (size_t{1} << i); v < w)
                    g.add_edge(v, w);
        return g;
    }

    auto wheel(size_t n) -> Graph
    {
        if (n < 3)
            throw InvalidArgument("a wheel needs a rim of at least 3 vertices");
        Graph g(n + 1);
        for (size_t i = 0; i < n; ++i) {
            g.add_edge(0, 1 + i);
            g.add_edge(1 + i, 1 + (i + 1) % n);
        }
        return g;
    }

    namespace
    {
        auto parse_size(const string & digits, const string & name) -> size_t
        {
            if (digits.empty() || digits.size() > 6 || ! std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw InvalidArgument("unknown graph name '" + name + "'");
            return static_cast<size_t>(std::stoul(digits));
        }
    }

    auto named_graph(const string & name) -> AnyGraph
    {
        if (name == "Petersen")
            return kneser(5, 2);
        if (name == "Octahedron")
            return complete_multipartite(2, 3);
        auto prefixed = [&](const string & prefix) { return name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0; };

        if (prefixed("DC"))
            return directed_cycle(parse_size(name.substr(2), name));
        if (prefixed("TT"))
            return transitive_tournament(parse_size(name.substr(2), name));
        if (prefixed("K")) {
            auto rest = name.substr(1);
            if (auto comma = rest.find(','); comma != string::npos)
                return complete_bipartite(parse_size(rest.substr(0, comma), name), parse_size(rest.substr(comma + 1), name));
            return complete_graph(parse_size(rest, name));
        }
        if (prefixed("C"))
            return cycle_graph(parse_size(name.substr(1), name));
        if (prefixed("P"))
            return path_graph(parse_size(name.substr(1), name));
        if (prefixed("E"))
            return Graph(parse_size(name.substr(1), name));
        if (prefixed("W"))
            return wheel(parse_size(name.substr(1), name));
        if (prefixed("Q"))
            return hypercube(parse_size(name.substr(1), name));
        throw InvalidArgument("unknown graph name '" + name + "'");
    }
}
