#include <catch2/catch_amalgamated.hpp>

#include "binsum/instance.hpp"
#include "binsum/solver.hpp"
#include "binsum/sum_state.hpp"
#include "support/brute.hpp"

using namespace binsum;

TEST_CASE("fresh state holds every sum in the uncomputed list") {
    SumState s(5);
    REQUIRE(s.live_nodes() == std::vector<sum_t>{1, 2, 3, 4, 5});
    for (sum_t x = 1; x <= 5; ++x) REQUIRE_FALSE(s.is_computed(x));
}

TEST_CASE("divisor rebuild keeps only multiples") {
    SumState s(10);
    s.rebuild_uncomputed(2);
    REQUIRE(s.live_nodes() == std::vector<sum_t>{2, 4, 6, 8, 10});
}

TEST_CASE("boundary target") {
    SumState s(1);
    REQUIRE(s.live_nodes() == std::vector<sum_t>{1});
}

TEST_CASE("unlink keeps the removed node's neighbour links") {
    SumState s(5);
    auto nb = s.unlink(3);
    REQUIRE(nb.prev == 2);
    REQUIRE(nb.next == 4);
    REQUIRE(s.live_nodes() == std::vector<sum_t>{1, 2, 4, 5});
    REQUIRE(s.prev_of(3) == 2); // stale but preserved
    REQUIRE(s.next_of(3) == 4);

    auto head = s.unlink(1);
    REQUIRE(head.prev == 0);
    REQUIRE(s.first_uncomputed() == 2);
    REQUIRE(s.live_nodes() == std::vector<sum_t>{2, 4, 5});
}

TEST_CASE("state trace while marking sums computed") {
    // Drive the full path through a tiny solve: [2,3] T=5 computes 2, 3+2.
    Decision d = solve(ingest({2, 3}, 5));
    REQUIRE(d.yes);
    std::vector<sum_t> expect{2, 3};
    REQUIRE(d.witness == expect);
}

TEST_CASE("backtrack on a hand-built chain") {
    std::vector<value_index_t> creator(7, 0);
    std::vector<sum_t> values{0, 2, 3}; // indexed from 1
    creator[2] = 1;                     // 2 = v1
    creator[5] = 2;                     // 5 = 2 + v2
    auto chain = backtrack_chain(creator, values, 5);
    std::sort(chain.begin(), chain.end());
    REQUIRE(chain == std::vector<sum_t>{2, 3});
}

TEST_CASE("singleton witness") {
    Decision d = solve(ingest({5}, 5));
    REQUIRE(d.yes);
    REQUIRE(d.witness == std::vector<sum_t>{5});
}

TEST_CASE("repeated values are both usable in one witness") {
    Decision d = solve(ingest({3, 3}, 6));
    REQUIRE(d.yes);
    REQUIRE(d.witness == std::vector<sum_t>{3, 3});
}

TEST_CASE("candidate outcomes and duplicate rejection") {
    // [2,2,3] T=7: value 2 computes 2; second 2 computes 4; 3 computes 3,5,6,7.
    SolveOptions opt;
    opt.early_exit = false;
    Solver solver(ingest({2, 2, 3}, 7), opt);
    Decision d = solver.run();
    REQUIRE(d.yes);
    auto sums = solver.computed_sums();
    REQUIRE(sums == std::vector<sum_t>{2, 3, 4, 5, 6, 7});
    REQUIRE(brute::witness_valid(d.witness, {2, 2, 3}, 7));
    // every computed sum's chain is well founded
    for (sum_t x : sums) {
        auto chain = backtrack_chain(solver.state().creator_span(), solver.indexed_values(), x);
        sum_t total = 0;
        for (sum_t v : chain) total += v;
        REQUIRE(total == x);
    }
}

TEST_CASE("sum space stays partitioned between computed and uncomputed") {
    SolveOptions opt;
    opt.early_exit = false;
    opt.value_observer = [](const Solver& s) {
        if (s.current_divisor() != 1) return; // divisor passes exclude sums
        std::int64_t computed = 0;
        for (sum_t x = 1; x <= s.state().target(); ++x)
            if (s.state().is_computed(x)) ++computed;
        std::int64_t live = static_cast<std::int64_t>(s.state().live_nodes().size());
        REQUIRE(computed + live == s.state().target());
    };
    auto cases = brute::random_cases(25, 12, 40, 120, 0xbead);
    for (const auto& c : cases) {
        Solver solver(ingest(c.values, c.target), opt);
        solver.run();
    }
}
