#include <catch2/catch_amalgamated.hpp>

#include "binsum/bins.hpp"
#include "binsum/instance.hpp"
#include "binsum/solver.hpp"
#include "binsum/sum_state.hpp"
#include "support/brute.hpp"
#include "support/invariants.hpp"

using namespace binsum;

namespace {

// Marks a sum computed the way the solver does, so bin summaries stay honest.
void mark(SumState& state, BinTable& bins, sum_t x, value_index_t i) {
    auto nb = state.unlink(x);
    state.set_creator(x, i);
    bins.on_computed(x, nb.prev, nb.next);
}

} // namespace

TEST_CASE("bin index arithmetic matches the range definition") {
    SumState state(2000);
    BinTable bins;
    bins.init(state, 2, 2, 500, 1);
    REQUIRE(bins.width() == 500);
    REQUIRE(bins.count() == 4);
    REQUIRE(bins.bin_of(1) == 1);
    REQUIRE(bins.bin_of(500) == 1);
    REQUIRE(bins.bin_of(501) == 2);
    REQUIRE(bins.bin_of(2000) == 4);

    // bin_of inverts the range formula on every bin
    for (int j = 1; j <= bins.count(); ++j) {
        REQUIRE(bins.bin_of(bins.bin(j).lo_sum) == j);
        REQUIRE(bins.bin_of(bins.bin(j).hi_sum) == j);
    }
}

TEST_CASE("bin geometry follows the width rule") {
    REQUIRE(BinTable::width_for(2000, 2, 2, 500) == 500);
    REQUIRE(BinTable::width_for(1000000, 1000, 2, 500) == 500);
    // minimum width dominates when T/(k*n) would be tiny
    REQUIRE(BinTable::width_for(1000000, 1000000, 2, 500) == 500);
    REQUIRE(BinTable::width_for(10000000, 1000, 2, 500) == 5000);

    SumState state(1000000);
    BinTable bins;
    bins.init(state, 1000, 2, 500, 1);
    REQUIRE(bins.count() == 2000);
    REQUIRE(bins.bin(2000).hi_sum == 1000000);
}

TEST_CASE("last bin can be narrower") {
    SumState state(1700);
    BinTable bins;
    bins.init(state, 2, 2, 500, 1);
    REQUIRE(bins.count() == 4);
    REQUIRE(bins.bin(4).lo_sum == 1501);
    REQUIRE(bins.bin(4).hi_sum == 1700);
}

TEST_CASE("marking a computed sum updates the bin summary") {
    SumState state(500);
    BinTable bins;
    bins.init(state, 1, 2, 500, 1);
    REQUIRE(bins.count() == 1);

    mark(state, bins, 250, 1);
    const Bin& b = bins.bin(1);
    REQUIRE(b.computed == std::vector<sum_t>{250});
    REQUIRE(b.lo_computed == 250);
    REQUIRE(b.hi_computed == 250);
    REQUIRE(b.lo_uncomputed == 1);
    REQUIRE(b.hi_uncomputed == 500);

    mark(state, bins, 500, 1);
    REQUIRE(b.hi_computed == 500);
    REQUIRE(b.hi_uncomputed == 499);

    mark(state, bins, 1, 2);
    REQUIRE(b.lo_computed == 1);
    REQUIRE(b.lo_uncomputed == 2);
}

TEST_CASE("a bin leaves the uncomputed list when it empties") {
    SumState state(8);
    BinTable bins;
    bins.init(state, 2, 2, 4, 1); // two bins of width 4
    REQUIRE(bins.count() == 2);
    REQUIRE(bins.bins_with_uncomputed_count() == 2);

    for (sum_t x : {1, 2, 4}) mark(state, bins, x, 1);
    REQUIRE(bins.bin(1).lo_uncomputed == 3);
    REQUIRE(bins.bin(1).hi_uncomputed == 3);
    REQUIRE(bins.bins_with_uncomputed_count() == 2);

    mark(state, bins, 3, 1); // last uncomputed sum of bin 1
    REQUIRE_FALSE(bins.bin(1).has_uncomputed());
    REQUIRE(bins.bin(1).lo_uncomputed == 0);
    REQUIRE(bins.bin(1).hi_uncomputed == 0);
    REQUIRE(bins.bins_with_uncomputed_count() == 1);
}

TEST_CASE("useful source bins: single computed sum yields its bin") {
    SumState state(2000);
    BinTable bins;
    bins.init(state, 2, 2, 500, 1);
    mark(state, bins, 40, 1);
    auto useful = bins.useful_source_bins(900);
    REQUIRE(std::vector<int>(useful.begin(), useful.end()) == std::vector<int>{1});
}

TEST_CASE("useful source bins: no uncomputed sums anywhere means none") {
    SumState state(6);
    BinTable bins;
    bins.init(state, 1, 2, 6, 1);
    for (sum_t x = 1; x <= 6; ++x) mark(state, bins, x, 1);
    auto useful = bins.useful_source_bins(2);
    REQUIRE(useful.empty());
}

TEST_CASE("useful source bins: qualification follows the candidate mapping") {
    SumState state(2000);
    BinTable bins;
    bins.init(state, 2, 2, 500, 1);
    // computed sums in bins 1 and 3; everything except bin 4 computed
    for (sum_t x = 1; x <= 1500; ++x) mark(state, bins, x, 1);
    REQUIRE(bins.bins_with_uncomputed_count() == 1);

    // with v=1600, bin 1's candidates land in bin 4 (uncomputed), bin 3's
    // candidates land beyond the target
    auto useful = bins.useful_source_bins(1600);
    REQUIRE(std::vector<int>(useful.begin(), useful.end()) == std::vector<int>{1});
}

TEST_CASE("bin summaries survive a full solve (brute rescan)") {
    SolveOptions opt;
    opt.early_exit = false;
    opt.min_bin_width = 16; // several bins even at tiny targets
    opt.value_observer = [](const Solver& s) { REQUIRE(invariants::bins_consistent(s)); };
    auto cases = brute::random_cases(20, 14, 60, 200, 0xb1b5);
    for (const auto& c : cases) {
        Solver solver(ingest(c.values, c.target), opt);
        solver.run();
    }
}

TEST_CASE("heuristic never changes the computed-sum set") {
    auto cases = brute::random_cases(40, 14, 60, 200, 0x5eed);
    for (const auto& c : cases) {
        SolveOptions with, without;
        with.early_exit = without.early_exit = false;
        with.min_bin_width = without.min_bin_width = 16;
        without.heuristic = false;
        Solver a(ingest(c.values, c.target), with);
        Solver b(ingest(c.values, c.target), without);
        a.run();
        b.run();
        REQUIRE(a.computed_sums() == b.computed_sums());
    }
}
