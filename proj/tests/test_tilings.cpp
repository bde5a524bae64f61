#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "lpm/facet_ops.hpp"
#include "lpm/matroid.hpp"
#include "lpm/tilings.hpp"

using namespace lpm;

namespace {

SkewRegion square() { return make_region(LatticePath("EENN"), LatticePath("NNEE")); }

SkewRegion pyramid() { return make_region(LatticePath("EENN"), LatticePath("NENE")); }

SkewRegion hook_strip() { return make_region(LatticePath("EENNEN"), LatticePath("NENNEE")); }

// Single-box tiling of the band just above the region's lower path.
TiledBand top_band(const SkewRegion& region) {
    TiledBand band;
    band.lambda = region.lower;
    band.nu = strip_above(region.lower).upper;
    for (int t = 1; t <= region.steps() - 1; ++t)
        band.blocks.push_back(Block{{Box{t - 1 - region.lower.norths(t), region.lower.norths(t)}}});
    return band;
}

std::vector<std::size_t> bottoms_profile(const SkewRegion& region) {
    std::vector<std::size_t> out;
    for (int n = 0; n <= region.steps() - 1; ++n) {
        std::size_t c = enumerate_bottoms(region, n).size();
        if (c == 0) break;
        out.push_back(c);
    }
    return out;
}

std::vector<BasisMask> masks_of(std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<BasisMask> out;
    for (auto s : sets) out.push_back(list_to_mask(s));
    std::sort(out.begin(), out.end(), basis_lex_less);
    return out;
}

} // namespace

TEST_CASE("bottoms of the square region count the octahedron's faces") {
    CHECK(bottoms_profile(square()) == std::vector<std::size_t>{6, 12, 8, 1});
    CHECK(enumerate_bottoms_all(square()).size() == 27);
}

TEST_CASE("bottoms of the pyramid region count its faces") {
    CHECK(bottoms_profile(pyramid()) == std::vector<std::size_t>{5, 8, 5, 1});
}

TEST_CASE("zero-block bottoms are the bare paths") {
    auto bare = enumerate_bottoms(square(), 0);
    REQUIRE(bare.size() == all_paths(square()).size());
    for (const TiledBand& b : bare) {
        CHECK(b.block_count() == 0);
        CHECK(b.lambda.word() == b.nu.word());
    }
}

TEST_CASE("bottom enumeration rejects block counts outside the range") {
    CHECK_THROWS_AS(enumerate_bottoms(square(), -1), domain_error);
    CHECK_THROWS_AS(enumerate_bottoms(square(), 4), domain_error);
}

TEST_CASE("strip bottoms agree with the strip subset counts level by level") {
    for (const SkewRegion& region : {pyramid(), hook_strip()}) {
        int n = region.steps();
        for (int t = 0; t <= n - 1; ++t)
            CHECK(enumerate_face_subsets(region, t).size() ==
                  enumerate_bottoms(region, n - 1 - t).size());
    }
}

TEST_CASE("the top tiling of the square region has two family members") {
    auto members = family_members(square(), top_band(square()));
    REQUIRE(members.size() == 2);
    std::set<std::string> lowers;
    for (const TiledBand& m : members) lowers.insert(m.lambda.word());
    CHECK(lowers == std::set<std::string>{"EENN", "ENEN"});
}

TEST_CASE("the canonical bottom is the member with the lowest upper path") {
    // start from the higher member and expect the lower one back
    TiledBand high;
    high.lambda = LatticePath("ENEN");
    high.nu = LatticePath("NNEE");
    high.blocks = {Block{{Box{0, 0}}}, Block{{Box{0, 1}}}, Block{{Box{1, 1}}}};
    REQUIRE(valid_tiled_band(square(), high));
    TiledBand low = canonical_bottom(square(), high);
    CHECK(low.lambda.word() == "EENN");
    CHECK(low.nu.word() == "NENE");
    REQUIRE(low.blocks.size() == 3);
    CHECK(low.blocks[1].boxes == std::vector<Box>{Box{1, 0}});
}

TEST_CASE("junction letters separate tilings into different families") {
    TiledBand east;
    east.lambda = LatticePath("EENN");
    east.nu = LatticePath("NENE");
    east.blocks = {Block{{Box{0, 0}, Box{1, 0}}}, Block{{Box{1, 1}}}};
    TiledBand north;
    north.lambda = LatticePath("EENN");
    north.nu = LatticePath("NENE");
    north.blocks = {Block{{Box{0, 0}}}, Block{{Box{1, 0}, Box{1, 1}}}};
    REQUIRE(valid_tiled_band(square(), east));
    REQUIRE(valid_tiled_band(square(), north));
    CHECK(east.blocks[0].shape() == "E");
    CHECK(north.blocks[1].shape() == "N");
    CHECK(family_key(east) != family_key(north));
    CHECK(family_members(square(), east).size() == 1);
}

TEST_CASE("band validity rejects malformed tilings") {
    SkewRegion region = square();

    TiledBand unanchored; // paths pinch at an interior point with no corner
    unanchored.lambda = LatticePath("ENEN");
    unanchored.nu = LatticePath("NENE");
    unanchored.blocks = {Block{{Box{0, 0}}}, Block{{Box{1, 1}}}};
    CHECK(!valid_tiled_band(region, unanchored));

    TiledBand uncovered;
    uncovered.lambda = LatticePath("EENN");
    uncovered.nu = LatticePath("NENE");
    uncovered.blocks = {Block{{Box{0, 0}}}};
    CHECK(!valid_tiled_band(region, uncovered));

    TiledBand skipping; // one block on diagonals 1 and 3, not a border strip
    skipping.lambda = LatticePath("EENN");
    skipping.nu = LatticePath("NENE");
    skipping.blocks = {Block{{Box{0, 0}, Box{1, 1}}}, Block{{Box{1, 0}}}};
    CHECK(!valid_tiled_band(region, skipping));

    TiledBand wide; // gap two between the paths
    wide.lambda = LatticePath("EENN");
    wide.nu = LatticePath("NNEE");
    wide.blocks = {Block{{Box{0, 0}}}, Block{{Box{1, 0}}}, Block{{Box{0, 1}}},
                   Block{{Box{1, 1}}}};
    CHECK(!valid_tiled_band(region, wide));
}

TEST_CASE("the top bottom of the square grows to the whole region") {
    TiledBand top = canonical_bottom(square(), top_band(square()));
    BlockTiledRegion grown = bottom_to_maximal_region(square(), top);
    CHECK(grown.mu.word() == "NNEE");
    CHECK(grown.tiles.size() == 4);
    CHECK(face_vertices(square(), top).size() == 6);
}

TEST_CASE("face vertices respect the blocked steps of each tiling") {
    SkewRegion region = square();

    TiledBand east;
    east.lambda = LatticePath("EENN");
    east.nu = LatticePath("NENE");
    east.blocks = {Block{{Box{0, 0}, Box{1, 0}}}, Block{{Box{1, 1}}}};
    CHECK(face_vertices(region, east) == masks_of({{3, 4}, {1, 4}, {1, 3}}));

    TiledBand north;
    north.lambda = LatticePath("EENN");
    north.nu = LatticePath("NENE");
    north.blocks = {Block{{Box{0, 0}}}, Block{{Box{1, 0}, Box{1, 1}}}};
    CHECK(face_vertices(region, north) == masks_of({{3, 4}, {2, 3}, {1, 3}}));

    TiledBand domino;
    domino.lambda = LatticePath("EENN");
    domino.nu = LatticePath("NEEN");
    domino.blocks = {Block{{Box{0, 0}, Box{1, 0}}}};
    REQUIRE(valid_tiled_band(region, domino));
    CHECK(face_vertices(region, domino) == masks_of({{3, 4}, {1, 4}}));
}

TEST_CASE("an edge covers exactly its two endpoints") {
    TiledBand domino;
    domino.lambda = LatticePath("EENN");
    domino.nu = LatticePath("NEEN");
    domino.blocks = {Block{{Box{0, 0}, Box{1, 0}}}};
    auto children = covering_subfaces(square(), domino);
    REQUIRE(children.size() == 2);
    std::set<std::string> words;
    for (const TiledBand& c : children) {
        CHECK(c.block_count() == 0);
        words.insert(c.lambda.word());
    }
    CHECK(words == std::set<std::string>{"EENN", "NEEN"});
}

TEST_CASE("a triangle face covers three edges") {
    TiledBand east;
    east.lambda = LatticePath("EENN");
    east.nu = LatticePath("NENE");
    east.blocks = {Block{{Box{0, 0}, Box{1, 0}}}, Block{{Box{1, 1}}}};
    auto children = covering_subfaces(square(), east);
    REQUIRE(children.size() == 3);
    for (const TiledBand& c : children) CHECK(c.block_count() == 1);
}

TEST_CASE("the square's top face covers its eight facets") {
    TiledBand top = canonical_bottom(square(), top_band(square()));
    auto children = covering_subfaces(square(), top);
    REQUIRE(children.size() == 8);
    for (const TiledBand& c : children) CHECK(c.block_count() == 2);
}

TEST_CASE("covers of the hook strip's top face match its facet count") {
    SkewRegion region = hook_strip();
    TiledBand top = canonical_bottom(region, top_band(region));
    auto children = covering_subfaces(region, top);
    CHECK(children.size() == facet_operations(region).size());
    bool found = false;
    for (const TiledBand& c : children)
        if (c.lambda.word() == "EENNEN" && c.nu.word() == "NENENE") found = true;
    CHECK(found); // the corner collapse across the lower outside corner
}

TEST_CASE("a mid-stretch block straddling a corner still collapses to a cover") {
    // The middle block below reaches past the outside corner at (2,1); pinching
    // it upward yields the square face [ENEEN, NEENE], which a stricter rule
    // that only removes blocks lying wholly beyond a corner used to miss.
    SkewRegion region = make_region(LatticePath("EEENN"), LatticePath("NEENE"));
    TiledBand parent;
    parent.lambda = LatticePath("EEENN");
    parent.nu = LatticePath("NEENE");
    parent.blocks = {Block{{Box{0, 0}}}, Block{{Box{1, 0}, Box{2, 0}}},
                     Block{{Box{2, 1}}}};
    REQUIRE(valid_tiled_band(region, parent));
    auto children = covering_subfaces(region, parent);
    CHECK(children.size() == 5); // a square pyramid: four triangles and a square
    bool square_child = false;
    for (const TiledBand& c : children) {
        CHECK(c.block_count() == 2);
        if (c.lambda.word() == "ENEEN" && c.nu.word() == "NEENE") square_child = true;
    }
    CHECK(square_child);
}

TEST_CASE("covering requires a face with at least one block") {
    TiledBand bare{LatticePath("EENN"), LatticePath("EENN"), {}};
    CHECK_THROWS_AS(covering_subfaces(square(), bare), domain_error);
}

TEST_CASE("face poset of the pyramid region is graded as its face lattice") {
    FacePoset poset = face_poset(pyramid());
    CHECK(poset.rank_sizes == std::vector<std::size_t>{5, 8, 5, 1});
    CHECK(poset.covers.size() == 37);
    CHECK(poset.nodes[0].rank == 3);
}

TEST_CASE("face poset of the square region is the octahedron's") {
    FacePoset poset = face_poset(square());
    CHECK(poset.rank_sizes == std::vector<std::size_t>{6, 12, 8, 1});
    CHECK(poset.covers.size() == 56);
}

TEST_CASE("face poset of a one-step region is a single point") {
    FacePoset poset = face_poset(make_region(LatticePath("E"), LatticePath("E")));
    CHECK(poset.rank_sizes == std::vector<std::size_t>{1});
    CHECK(poset.covers.empty());
}

TEST_CASE("face poset guards its inputs") {
    SkewRegion pinched = make_region(LatticePath("ENEN"), LatticePath("NENE"));
    CHECK_THROWS_AS(face_poset(pinched), domain_error);
    CHECK_THROWS_AS(face_poset(square(), 3), resource_error);
}

TEST_CASE("edge counts by area match the other routes") {
    CHECK(edge_count_by_area(square()) == 12);
    CHECK(edge_count_by_area(pyramid()) == 8);
    CHECK(edge_count_by_area(hook_strip()) ==
          static_cast<long long>(enumerate_bottoms(hook_strip(), 1).size()));
}
