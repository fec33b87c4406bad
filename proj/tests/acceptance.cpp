// End-to-end acceptance run: one PASS/FAIL line per criterion, with its
// runtime against the time limit. Exits non-zero if any criterion fails.

#include "oracles.hpp"

#include <dichroma/catalogue.hpp>
#include <dichroma/combinatorics.hpp>
#include <dichroma/core.hpp>
#include <dichroma/covers.hpp>
#include <dichroma/error.hpp>
#include <dichroma/generators.hpp>
#include <dichroma/parallel.hpp>
#include <dichroma/products.hpp>
#include <dichroma/randomized.hpp>
#include <dichroma/solvers.hpp>
#include <dichroma/verify.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace dichroma;

namespace
{
    struct Outcome
    {
        bool passed = false;
        std::string detail;
    };

    struct Criterion
    {
        int number;
        std::string name;
        double limit_seconds;
        std::function<Outcome ()> check;
    };

    auto threads() -> std::size_t
    {
        return resolve_threads();
    }

    auto from_suite(const SuiteResult & s) -> Outcome
    {
        return {s.passed, s.summary};
    }

    auto kneser_identity() -> Outcome
    {
        return from_suite(suite_kneser_chi({{4, 1}, {5, 1}, {5, 2}, {6, 2}, {7, 2}, {7, 3}}));
    }

    auto sabidussi(std::size_t t) -> SuiteResult
    {
        return suite_sabidussi(4, 200, 5, RngSpec{2024}, t);
    }

    auto counting() -> Outcome
    {
        std::vector<std::string> problems;
        if (count_acyclic_orientations(complete_graph(3)) != 6)
            problems.push_back("K3");
        if (count_acyclic_orientations(complete_bipartite(2, 2)) != 14)
            problems.push_back("K2,2");
        std::string counts;
        for (std::size_t l = 1; l <= 3; ++l) {
            auto c = count_acyclic_orientations(complete_bipartite(l, l));
            counts += " K" + std::to_string(l) + "," + std::to_string(l) + "=" + c.str();
            if (c > factorial(2 * l))
                problems.push_back("K" + std::to_string(l) + "," + std::to_string(l));
        }
        return {problems.empty(), "K3=6, K2,2=14;" + counts + (problems.empty() ? "" : "; wrong: " + problems.front())};
    }

    auto biclique_grid(std::size_t t) -> SuiteResult
    {
        return suite_biclique_grid(default_biclique_grid(), 2000, t, 0.93);
    }

    auto cover_oracle() -> Outcome
    {
        std::size_t mismatches = 0, holds = 0;
        const std::size_t samples = 100;
        for (std::uint64_t i = 0; i < samples; ++i) {
            auto rng = RngSpec{7001}.child(i);
            auto d = random_digraph(8, rng.child(0));
            auto n = d.order();
            Stream s(rng.child(1));

            SetCollection c;
            std::vector<oracle::Bits> bits;
            auto add = [&](oracle::Bits m) {
                c.members.push_back(from_mask(m, n));
                bits.push_back(m);
            };
            // Thirds: random members only; all maximal acyclic sets; all
            // but one of them plus random members.
            auto kind = i % 3;
            if (kind != 1)
                for (std::size_t j = 0, count = 1 + s.below(4); j < count; ++j)
                    add(s.next() & oracle::all_bits(n));
            if (kind != 0) {
                auto maximal = oracle::maximal_acyclic_sets(d);
                std::vector<oracle::Bits> list(maximal.begin(), maximal.end());
                if (kind == 2 && list.size() > 1)
                    list.erase(list.begin() + static_cast<std::ptrdiff_t>(s.below(list.size())));
                for (auto m : list)
                    add(m);
            }
            c.s = static_cast<double>(std::max<std::size_t>(1, c.members.size()));
            c.t = static_cast<double>(n);

            auto verdict = verify_cover_all_acyclic(d, c);
            mismatches += verdict.holds != oracle::covers_all_acyclic_partitions(d, bits) ? 1 : 0;
            holds += verdict.holds ? 1 : 0;
        }
        return {mismatches == 0, std::to_string(samples) + " instances, " + std::to_string(holds) + " covered, " +
            std::to_string(mismatches) + " mismatches"};
    }

    auto embeddings() -> Outcome
    {
        std::size_t verified = 0, failures = 0;
        for (std::size_t n = 4; n <= 12; ++n)
            for (std::size_t k = 2; k <= 4 && 2 * k <= n; ++k) {
                auto w = embed_rook_in_kneser(n, k);
                bool ok = verify_embedding(w) && w.source.order() == (n / k) * (n / k);
                (ok ? verified : failures) += 1;
            }
        for (auto [n, k, n1, k1] : std::vector<std::array<std::size_t, 4>>{{7, 3, 3, 1}, {8, 4, 4, 2}}) {
            auto w = embed_kneser_tensor(n, k, n1, k1);
            bool ok = verify_embedding(w) && w.source.edges() == tensor_product(kneser(n1, k1), kneser(n - n1, k - k1)).edges();
            (ok ? verified : failures) += 1;
        }
        bool rejected = false;
        try {
            embed_kneser_tensor(7, 3, 3, 3);
        }
        catch (const InvalidArgument &) {
            rejected = true;
        }
        failures += rejected ? 0 : 1;
        return {failures == 0, std::to_string(verified) + " witnesses verified, k1 = k " + (rejected ? "rejected" : "accepted")};
    }

    auto list_values() -> Outcome
    {
        auto c3 = list_dichromatic_number(directed_cycle(3)).value;
        auto c4 = list_chromatic_number(cycle_graph(4)).value;
        auto k3 = list_chromatic_number(complete_graph(3)).value;
        return {c3 == 2 && c4 == 2 && k3 == 3,
            "directed C3 " + std::to_string(c3) + ", C4 " + std::to_string(c4) + ", K3 " + std::to_string(k3)};
    }

    auto determinism() -> Outcome
    {
        std::vector<std::string> differing;
        auto compare = [&](const std::string & name, const SuiteResult & one, const SuiteResult & many) {
            if (one.payload.dump() != many.payload.dump() || one.passed != many.passed)
                differing.push_back(name);
        };
        compare("sabidussi", sabidussi(1), sabidussi(8));
        compare("biclique-grid", biclique_grid(1), biclique_grid(8));
        compare("acceptance-bound", suite_acceptance_bound(1), suite_acceptance_bound(8));
        std::string detail = "payloads of criteria 2, 5, 6 at 1 and 8 threads ";
        detail += differing.empty() ? "identical" : "differ: " + differing.front();
        return {differing.empty(), detail};
    }
}

auto main() -> int
{
    std::vector<Criterion> criteria{
        {1, "kneser chromatic identity", 60, kneser_identity},
        {2, "sabidussi equality", 600, [] { return from_suite(sabidussi(threads())); }},
        {3, "bidirected correspondence", 300, [] { return from_suite(suite_bidirect(6, threads())); }},
        {4, "acyclic orientation counts", 30, counting},
        {5, "monte carlo against exact", 300, [] { return from_suite(biclique_grid(threads())); }},
        {6, "acceptance probability bound", 600, [] { return from_suite(suite_acceptance_bound(threads())); }},
        {7, "cover checker oracle equivalence", 300, cover_oracle},
        {8, "embedding witnesses", 120, embeddings},
        {9, "tensor upper bound", 300, [] { return from_suite(suite_tensor_bound(4, threads())); }},
        {10, "list solver values", 120, list_values},
        {11, "small graph orientations", 600, [] { return from_suite(suite_small_graph_orientations(7, threads())); }},
        {12, "thread-count determinism", 3600, determinism},
    };

    int failed = 0;
    for (auto & c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        }
        catch (const std::exception & e) {
            o = {false, std::string("error: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = seconds < c.limit_seconds;
        bool passed = o.passed && in_time;
        failed += passed ? 0 : 1;
        std::printf("%s criterion %d (%s): %s [%.2f s, limit %.0f s%s]\n", passed ? "PASS" : "FAIL", c.number, c.name.c_str(),
                o.detail.c_str(), seconds, c.limit_seconds, in_time ? "" : ", exceeded");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
