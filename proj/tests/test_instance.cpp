#include <catch2/catch_amalgamated.hpp>

#include "binsum/instance.hpp"

using namespace binsum;

TEST_CASE("ingest sorts values ascending") {
    Instance inst = ingest({3, 1, 2}, 6);
    REQUIRE(inst.values == std::vector<sum_t>{1, 2, 3});
    REQUIRE(inst.target == 6);
    REQUIRE(inst.dropped == 0);
}

TEST_CASE("ingest drops values above the target but keeps equal ones") {
    Instance inst = ingest({5, 9}, 5);
    REQUIRE(inst.values == std::vector<sum_t>{5});
    REQUIRE(inst.dropped == 1);
    REQUIRE(inst.input_count == 2);

    Instance all_kept = ingest({2, 4, 6}, 5);
    REQUIRE(all_kept.values == std::vector<sum_t>{2, 4, 6});
    REQUIRE(all_kept.dropped == 0);
}

TEST_CASE("ingest rejects bad input with distinct errors") {
    auto kind_of = [](auto&& call) {
        try {
            call();
        } catch (const IngestError& e) {
            return e.kind();
        }
        FAIL("expected IngestError");
        return IngestError::Kind::EmptyInput;
    };

    REQUIRE(kind_of([] { ingest({}, 5); }) == IngestError::Kind::EmptyInput);
    REQUIRE(kind_of([] { ingest({1, 0, 3}, 5); }) == IngestError::Kind::NonPositiveValue);
    REQUIRE(kind_of([] { ingest({1, -2}, 5); }) == IngestError::Kind::NonPositiveValue);
    REQUIRE(kind_of([] { ingest({1}, 0); }) == IngestError::Kind::NonPositiveTarget);
    REQUIRE(kind_of([] { ingest({1}, max_target + 1); }) == IngestError::Kind::TargetTooLarge);
}

TEST_CASE("ingest keeps duplicates") {
    Instance inst = ingest({4, 4, 4}, 10);
    REQUIRE(inst.values == std::vector<sum_t>{4, 4, 4});
}
