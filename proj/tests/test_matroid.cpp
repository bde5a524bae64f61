#include <catch2/catch_amalgamated.hpp>

#include "lpm/matroid.hpp"
#include "lpm/verify.hpp"

using namespace lpm;

namespace {

BasisMask mask_of(std::initializer_list<int> elements) { return list_to_mask(elements); }

std::vector<BasisMask> masks_of(std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<BasisMask> out;
    for (auto s : sets) out.push_back(list_to_mask(s));
    std::sort(out.begin(), out.end(), basis_lex_less);
    return out;
}

SkewRegion running_example() {
    return make_region(LatticePath("EENNN"), LatticePath("NNENE"));
}

} // namespace

TEST_CASE("running example bases match the published nine sets") {
    LatticeMatroid m = bases_by_paths(running_example());
    CHECK(m.n == 5);
    CHECK(m.rank == 3);
    CHECK(m.bases == masks_of({{1, 2, 4},
                               {1, 2, 5},
                               {1, 3, 4},
                               {1, 3, 5},
                               {1, 4, 5},
                               {2, 3, 4},
                               {2, 3, 5},
                               {2, 4, 5},
                               {3, 4, 5}}));
}

TEST_CASE("presentation intervals come from the two bounding paths") {
    LatticeMatroid m = bases_by_paths(running_example());
    REQUIRE(m.presentation.size() == 3);
    CHECK(m.presentation[0] == std::pair<int, int>{1, 3});
    CHECK(m.presentation[1] == std::pair<int, int>{2, 4});
    CHECK(m.presentation[2] == std::pair<int, int>{4, 5});
}

TEST_CASE("path and transversal enumerations agree") {
    for (int n = 1; n <= 7; ++n)
        for (const SkewRegion& r : connected_regions_with_steps(n))
            CHECK(bases_by_paths(r).bases == bases_by_transversals(r).bases);
}

TEST_CASE("path and transversal enumerations agree on larger regions", "[.slow]") {
    for (int n = 8; n <= 10; ++n)
        for (const SkewRegion& r : connected_regions_with_steps(n))
            CHECK(bases_by_paths(r).bases == bases_by_transversals(r).bases);
}

TEST_CASE("deletion of 2 matches the published minor") {
    LatticeMatroid m = bases_by_paths(running_example());
    LatticeMatroid del = delete_element(m, 2);
    CHECK(del.bases == masks_of({{1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {3, 4, 5}}));
}

TEST_CASE("contraction of 4 matches the published minor") {
    LatticeMatroid m = bases_by_paths(running_example());
    LatticeMatroid con = contract_element(m, 4);
    CHECK(con.bases == masks_of({{1, 2, 4}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 4, 5}, {3, 4, 5}}));
}

TEST_CASE("direct sum at the corner matches the published split") {
    LatticeMatroid m = bases_by_paths(running_example());
    OutsideCorner corner{1, 2, OutsideCorner::Side::upper};
    LatticeMatroid sum = direct_sum_at(m, corner);
    CHECK(sum.bases ==
          masks_of({{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 3, 5}}));
    CHECK(connected_components(sum).size() == 2);
}

TEST_CASE("loops and coloops refuse the wrong minor") {
    // P = Q = EN: element 1 is a loop, element 2 a coloop
    LatticeMatroid m = bases_by_paths(make_region(LatticePath("EN"), LatticePath("EN")));
    REQUIRE(m.bases == masks_of({{2}}));
    CHECK_THROWS_AS(delete_element(m, 2), domain_error);
    CHECK_THROWS_AS(contract_element(m, 1), domain_error);
}

TEST_CASE("basis exchange holds for enumerated matroids") {
    CHECK(satisfies_exchange(bases_by_paths(running_example())));
    for (const SkewRegion& r : connected_regions_with_steps(5))
        CHECK(satisfies_exchange(bases_by_paths(r)));
}

TEST_CASE("basis cap aborts oversized enumerations") {
    CHECK_THROWS_AS(bases_by_paths(running_example(), 3), resource_error);
    CHECK_THROWS_AS(bases_by_transversals(running_example(), 3), resource_error);
}

TEST_CASE("component count drives the dimension formula") {
    LatticeMatroid m = bases_by_paths(running_example());
    CHECK(connected_components(m).size() == 1);
    CHECK(polytope_dimension(running_example()) == 4);
    SkewRegion pinched = make_region(LatticePath("ENEN"), LatticePath("NENE"));
    CHECK_FALSE(pinched.connected());
    CHECK(polytope_dimension(pinched) == 2);
    CHECK(connected_components(bases_by_paths(pinched)).size() == 2);
}

TEST_CASE("mask list round trip") {
    BasisMask b = mask_of({1, 3, 5});
    CHECK(mask_to_list(b) == std::vector<int>{1, 3, 5});
    CHECK(list_to_mask(mask_to_list(b)) == b);
}
