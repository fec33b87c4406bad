#ifndef DICHROMA_VERIFY_HPP
#define DICHROMA_VERIFY_HPP

#include <dichroma/graph.hpp>
#include <dichroma/record.hpp>
#include <dichroma/rng.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dichroma
{
    /// Outcome of a verification suite. The payload holds everything the
    /// suite computed (never timings), so equal inputs give byte-identical
    /// payloads whatever the thread count.
    struct SuiteResult
    {
        std::string name;
        bool passed = true;
        std::uint64_t cases = 0;
        std::uint64_t failures = 0;
        std::string summary;
        Json payload = Json::object();
    };

    /// chi(KG(n,k)) = n-2k+2 on each pair, with re-validated witnesses.
    auto suite_kneser_chi(const std::vector<std::pair<std::size_t, std::size_t>> & pairs) -> SuiteResult;

    /// For every unordered pair of catalogue digraphs on <= max_n vertices,
    /// and for `random_pairs` seeded pairs on <= random_max_n vertices:
    /// the Cartesian product's dichromatic number is the maximum of the
    /// factors', and the modular colouring of optimal factor colourings is
    /// an acyclic colouring.
    auto suite_sabidussi(std::size_t max_n, std::size_t random_pairs, std::size_t random_max_n, RngSpec rng,
            std::size_t threads) -> SuiteResult;

    /// dichromatic(bidirect(g)) = chromatic(g) over the graph catalogue.
    auto suite_bidirect(std::size_t max_n, std::size_t threads) -> SuiteResult;

    /// dichromatic(G x H) <= min over unordered catalogue digraph pairs.
    auto suite_tensor_bound(std::size_t max_n, std::size_t threads) -> SuiteResult;

    /// Every catalogue graph with chromatic number at least 3 has an
    /// orientation with a directed cycle (so dichromatic number >= 2);
    /// the orientation is recorded and rechecked.
    auto suite_small_graph_orientations(std::size_t max_n, std::size_t threads) -> SuiteResult;

    struct BicliqueCell
    {
        std::string name;
        Graph graph;
        std::size_t l = 2;
        std::uint64_t seed = 0;
    };

    /// Ten small graphs (<= 12 edges) times seeds 1, 2, 3. Eight of them have
    /// an acyclic-biclique probability strictly between 0 and 1.
    auto default_biclique_grid() -> std::vector<BicliqueCell>;

    /// Monte Carlo estimates of the acyclic-biclique event against the exact
    /// probability; passes when at least `coverage_target` of the Wilson
    /// intervals contain it.
    auto suite_biclique_grid(const std::vector<BicliqueCell> & cells, std::uint64_t trials, std::size_t threads,
            double coverage_target = 0.93) -> SuiteResult;

    /// Exact acceptance probabilities against the g bound wherever the
    /// hypothesis 4tu <= (l1-l2)n holds and g < 1: a tiny grid (n <= 4,
    /// l1 <= 3) and a larger one (n in 6..8) where the hypothesis can hold.
    auto suite_acceptance_bound(std::size_t threads) -> SuiteResult;

    /// FNV-1a over a byte string, as 16 hex digits.
    auto digest(const std::string & bytes) -> std::string;
}

#endif
