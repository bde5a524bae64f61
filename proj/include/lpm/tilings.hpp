#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "facet_ops.hpp"
#include "matroid.hpp"
#include "skew_region.hpp"

namespace lpm {

// A border strip of boxes on consecutive diagonals, each box adjacent to the
// next. Blocks tile bands; their translates along (-1,+1) are clones.
struct Block {
    std::vector<Box> boxes;

    Point start() const { return {boxes.front().x, boxes.front().y}; }
    Point end() const { return {boxes.back().x + 1, boxes.back().y + 1}; }
    int first_diag() const { return boxes.front().diag(); }
    int last_diag() const { return boxes.back().diag(); }

    // Junction letters between consecutive boxes; empty for a single box.
    std::string shape() const {
        std::string s;
        for (std::size_t i = 1; i < boxes.size(); ++i)
            s.push_back(boxes[i].x == boxes[i - 1].x + 1 ? 'E' : 'N');
        return s;
    }

    friend bool operator==(const Block& a, const Block& b) { return a.boxes == b.boxes; }
};

// A band between two paths with gap at most one, tiled into blocks. With an
// empty tiling and lambda = nu it stands for a bare path (a vertex).
struct TiledBand {
    LatticePath lambda;
    LatticePath nu;
    std::vector<Block> blocks; // sorted by first diagonal

    int block_count() const { return static_cast<int>(blocks.size()); }
};

// A band grown upward by clones until maximal; tiles include the clones.
struct BlockTiledRegion {
    LatticePath lambda;
    LatticePath mu;
    std::vector<Block> tiles;
};

namespace detail {

// Maximal runs of prefixes where the two paths coincide, as point lists.
inline std::vector<std::vector<Point>> pinch_pieces(const LatticePath& lambda,
                                                    const LatticePath& nu) {
    std::vector<std::vector<Point>> out;
    bool open = false;
    for (int t = 0; t <= lambda.length(); ++t) {
        if (lambda.norths(t) == nu.norths(t)) {
            if (!open) {
                out.emplace_back();
                open = true;
            }
            out.back().push_back(lambda.at(t));
        } else {
            open = false;
        }
    }
    return out;
}

// Every maximal shared piece must pass through an outside corner of the
// bounding region or one of its endpoints.
inline bool shared_pieces_anchored(const SkewRegion& region, const LatticePath& lambda,
                                   const LatticePath& nu) {
    std::set<Point> anchors{{0, 0}, region.lower.endpoint()};
    for (const OutsideCorner& c : outside_corners(region)) anchors.insert({c.x, c.y});
    for (const auto& piece : pinch_pieces(lambda, nu)) {
        bool hit = false;
        for (const Point& p : piece)
            if (anchors.count(p)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

inline std::string point_token(const Point& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

} // namespace detail

// Structural check for a tiled band inside a region: bounded by the region,
// gap at most one, blocks tile the boxes exactly, and every shared piece of
// the two paths is anchored at a corner or endpoint.
inline bool valid_tiled_band(const SkewRegion& region, const TiledBand& band) {
    int n = region.steps();
    if (band.lambda.length() != n || band.nu.length() != n) return false;
    if (band.lambda.endpoint() != region.lower.endpoint()) return false;
    if (band.nu.endpoint() != region.lower.endpoint()) return false;
    for (int t = 0; t <= n; ++t) {
        int yl = band.lambda.norths(t), yu = band.nu.norths(t);
        if (yl < region.lower.norths(t) || yu > region.upper.norths(t)) return false;
        if (yu - yl < 0 || yu - yl > 1) return false;
    }
    // every boxed diagonal covered exactly once, by adjacent-chain blocks
    std::vector<int> covered(static_cast<std::size_t>(n) + 1, 0);
    for (const Block& b : band.blocks) {
        if (b.boxes.empty()) return false;
        for (std::size_t i = 0; i < b.boxes.size(); ++i) {
            const Box& box = b.boxes[i];
            int t = box.diag();
            if (t < 1 || t > n - 1) return false;
            if (band.nu.norths(t) - band.lambda.norths(t) != 1) return false;
            if (box.y != band.lambda.norths(t)) return false;
            if (covered[static_cast<std::size_t>(t)]++) return false;
            if (i > 0) {
                const Box& prev = b.boxes[i - 1];
                bool east = box.x == prev.x + 1 && box.y == prev.y;
                bool north = box.x == prev.x && box.y == prev.y + 1;
                if (!east && !north) return false;
            }
        }
    }
    for (int t = 1; t <= n - 1; ++t)
        if ((band.nu.norths(t) - band.lambda.norths(t) == 1) != (covered[static_cast<std::size_t>(t)] == 1))
            return false;
    return detail::shared_pieces_anchored(region, band.lambda, band.nu);
}

namespace detail {

inline LatticePath path_from_norths(const std::vector<int>& norths) {
    std::string w;
    for (std::size_t t = 1; t < norths.size(); ++t) {
        int diff = norths[t] - norths[t - 1];
        if (diff == 0)
            w.push_back('E');
        else if (diff == 1)
            w.push_back('N');
        else
            throw domain_error("height sequence is not a lattice path");
    }
    return LatticePath(w);
}

inline bool monotone_norths(const std::vector<int>& norths) {
    for (std::size_t t = 1; t < norths.size(); ++t) {
        int diff = norths[t] - norths[t - 1];
        if (diff != 0 && diff != 1) return false;
    }
    return true;
}

// Rebuilds a tiled band from box heights per diagonal plus the original
// pinch heights; blocks keep their diagonal ranges.
inline TiledBand band_from_heights(const TiledBand& base, const std::vector<int>& box_height) {
    int n = base.lambda.length();
    std::vector<int> ln(static_cast<std::size_t>(n) + 1), un(static_cast<std::size_t>(n) + 1);
    for (int t = 0; t <= n; ++t) {
        if (box_height[static_cast<std::size_t>(t)] >= 0) {
            ln[static_cast<std::size_t>(t)] = box_height[static_cast<std::size_t>(t)];
            un[static_cast<std::size_t>(t)] = box_height[static_cast<std::size_t>(t)] + 1;
        } else {
            ln[static_cast<std::size_t>(t)] = base.lambda.norths(t);
            un[static_cast<std::size_t>(t)] = ln[static_cast<std::size_t>(t)];
        }
    }
    TiledBand out;
    out.lambda = path_from_norths(ln);
    out.nu = path_from_norths(un);
    for (const Block& b : base.blocks) {
        Block nb;
        for (const Box& box : b.boxes) {
            int t = box.diag();
            nb.boxes.push_back(Box{t - 1 - box_height[static_cast<std::size_t>(t)],
                                   box_height[static_cast<std::size_t>(t)]});
        }
        out.blocks.push_back(std::move(nb));
    }
    return out;
}

} // namespace detail

// All bands in the family of the given one: blocks may slide along their
// diagonals through the free junctions between tiles, while tile shapes,
// diagonal ranges and the shared pieces of the two paths stay fixed.
inline std::vector<TiledBand> family_members(const SkewRegion& region, const TiledBand& band) {
    int n = region.steps();

    // stretch = maximal run of boxed diagonals; tiles listed per stretch
    struct Stretch {
        int first = 0, last = 0;
        std::vector<std::size_t> tiles;
    };
    std::vector<Stretch> stretches;
    for (std::size_t bi = 0; bi < band.blocks.size(); ++bi) {
        const Block& b = band.blocks[bi];
        if (!stretches.empty() && stretches.back().last + 1 == b.first_diag()) {
            stretches.back().last = b.last_diag();
            stretches.back().tiles.push_back(bi);
        } else {
            stretches.push_back(Stretch{b.first_diag(), b.last_diag(), {bi}});
        }
    }

    // per-stretch DFS over free junction letters; boxes pinned at both ends
    std::vector<std::vector<std::vector<int>>> options; // stretch -> choice -> heights per diag
    for (const Stretch& s : stretches) {
        Point a = band.lambda.at(s.first - 1); // divergence point = first box corner
        Point z = band.lambda.at(s.last + 1);  // convergence point = last box end
        std::string letters;                   // junction letters, fixed inside tiles
        std::vector<char> fixed;
        for (std::size_t k = 0; k < s.tiles.size(); ++k) {
            const Block& b = band.blocks[s.tiles[k]];
            std::string sh = b.shape();
            for (char c : sh) {
                letters.push_back(c);
                fixed.push_back(1);
            }
            if (k + 1 < s.tiles.size()) {
                letters.push_back('?');
                fixed.push_back(0);
            }
        }
        std::vector<std::vector<int>> found;
        std::vector<int> heights;
        std::function<void(int, int, int)> walk = [&](int idx, int x, int y) {
            if (!region.contains_box(x, y)) return;
            heights.push_back(y);
            if (idx == static_cast<int>(letters.size())) {
                if (x == z.x - 1 && y == z.y - 1) found.push_back(heights);
            } else if (fixed[static_cast<std::size_t>(idx)]) {
                char c = letters[static_cast<std::size_t>(idx)];
                walk(idx + 1, c == 'E' ? x + 1 : x, c == 'E' ? y : y + 1);
            } else {
                walk(idx + 1, x + 1, y);
                walk(idx + 1, x, y + 1);
            }
            heights.pop_back();
        };
        walk(0, a.x, a.y);
        if (found.empty()) throw domain_error("band has no family members; invalid band");
        options.push_back(std::move(found));
    }

    // cartesian product of the per-stretch choices
    std::vector<TiledBand> out;
    std::vector<int> box_height(static_cast<std::size_t>(n) + 1, -1);
    std::function<void(std::size_t)> combine = [&](std::size_t si) {
        if (si == stretches.size()) {
            out.push_back(detail::band_from_heights(band, box_height));
            return;
        }
        const Stretch& s = stretches[si];
        for (const auto& choice : options[si]) {
            for (int t = s.first; t <= s.last; ++t)
                box_height[static_cast<std::size_t>(t)] = choice[static_cast<std::size_t>(t - s.first)];
            combine(si + 1);
        }
        for (int t = s.first; t <= s.last; ++t) box_height[static_cast<std::size_t>(t)] = -1;
    };
    combine(0);
    return out;
}

// Dedup and ordering key: the lower path word plus the sorted block list.
inline std::string canonical_key(const TiledBand& band) {
    std::string key = band.lambda.word();
    for (const Block& b : band.blocks)
        key += ";" + detail::point_token(b.start()) + b.shape();
    return key;
}

// Grouping key of the family: the shared pieces of the two paths plus the
// multiset of clone classes (first diagonal and shape) of the blocks.
inline std::string family_key(const TiledBand& band) {
    std::string key;
    for (const auto& piece : detail::pinch_pieces(band.lambda, band.nu)) {
        key += "|";
        for (const Point& p : piece) key += detail::point_token(p);
    }
    std::vector<std::string> classes;
    for (const Block& b : band.blocks)
        classes.push_back(std::to_string(b.first_diag()) + ":" + b.shape());
    std::sort(classes.begin(), classes.end());
    for (const auto& c : classes) key += "#" + c;
    return key;
}

// The lowest member of the band's family: the one whose upper path is
// coordinatewise minimal. Errors if the minimum is not attained by a single
// member (the family would have no well-defined bottom).
inline TiledBand canonical_bottom(const SkewRegion& region, const TiledBand& band) {
    std::vector<TiledBand> members = family_members(region, band);
    std::size_t best = 0;
    auto norths = [&](const TiledBand& f, int t) { return f.nu.norths(t); };
    for (std::size_t i = 1; i < members.size(); ++i) {
        for (int t = 0; t <= region.steps(); ++t) {
            int a = norths(members[i], t), b = norths(members[best], t);
            if (a != b) {
                if (a < b) best = i;
                break;
            }
        }
    }
    for (const TiledBand& f : members)
        for (int t = 0; t <= region.steps(); ++t)
            if (norths(members[best], t) > norths(f, t))
                throw domain_error("family has incomparable lowest members");
    return members[best];
}

// All block-tiled bottoms inside the region, sorted by block count and then
// canonical key. Zero-block bottoms are the bare lattice paths.
inline std::vector<TiledBand> enumerate_bottoms_all(const SkewRegion& region) {
    if (!region.connected())
        throw domain_error("bottom enumeration requires a connected region");
    int n = region.steps();

    // enumerate bands (pairs of paths with gap <= 1) by a joint walk
    std::vector<std::pair<LatticePath, LatticePath>> bands;
    std::string wl, wu;
    std::function<void(int, int, int)> walk = [&](int t, int yl, int yu) {
        if (t == n) {
            bands.emplace_back(LatticePath(wl), LatticePath(wu));
            return;
        }
        for (int dl = 0; dl <= 1; ++dl)
            for (int du = 0; du <= 1; ++du) {
                int nyl = yl + dl, nyu = yu + du;
                if (nyl < region.lower.norths(t + 1) || nyu > region.upper.norths(t + 1)) continue;
                if (nyu - nyl < 0 || nyu - nyl > 1) continue;
                wl.push_back(dl ? 'N' : 'E');
                wu.push_back(du ? 'N' : 'E');
                walk(t + 1, nyl, nyu);
                wl.pop_back();
                wu.pop_back();
            }
    };
    walk(0, 0, 0);

    // group every tiling of every anchored band by family; the group is the
    // family member list, and the bottom is its coordinatewise-lowest band
    struct Group {
        TiledBand best;
        std::vector<int> min_norths;
        bool seen = false;
    };
    std::map<std::string, Group> families;

    for (const auto& [lambda, nu] : bands) {
        if (!detail::shared_pieces_anchored(region, lambda, nu)) continue;
        // stretch structure of the band
        std::vector<std::pair<int, int>> stretches;
        for (int t = 1; t <= n; ++t) {
            if (nu.norths(t) - lambda.norths(t) == 1) {
                if (!stretches.empty() && stretches.back().second == t - 1)
                    stretches.back().second = t;
                else
                    stretches.emplace_back(t, t);
            }
        }
        // all tilings: independent cut subsets per stretch
        std::vector<Block> blocks;
        std::function<void(std::size_t)> tile = [&](std::size_t si) {
            if (si == stretches.size()) {
                TiledBand band{lambda, nu, blocks};
                std::string key = family_key(band);
                std::vector<int> nn(static_cast<std::size_t>(n) + 1);
                for (int t = 0; t <= n; ++t) nn[static_cast<std::size_t>(t)] = nu.norths(t);
                auto [it, fresh] = families.try_emplace(key);
                Group& g = it->second;
                if (fresh || !g.seen) {
                    g.best = band;
                    g.min_norths = nn;
                    g.seen = true;
                } else {
                    bool lower = std::lexicographical_compare(nn.begin(), nn.end(),
                                                              g.min_norths.begin(),
                                                              g.min_norths.end());
                    for (int t = 0; t <= n; ++t)
                        g.min_norths[static_cast<std::size_t>(t)] =
                            std::min(g.min_norths[static_cast<std::size_t>(t)],
                                     nn[static_cast<std::size_t>(t)]);
                    if (lower) g.best = band;
                }
                return;
            }
            auto [first, last] = stretches[si];
            // choose cut positions between consecutive diagonals
            int len = last - first + 1;
            for (std::uint32_t cuts = 0; cuts < (1u << (len - 1)); ++cuts) {
                std::size_t added = 0;
                Block cur;
                for (int t = first; t <= last; ++t) {
                    cur.boxes.push_back(Box{t - 1 - lambda.norths(t), lambda.norths(t)});
                    bool cut = (t == last) || ((cuts >> (t - first)) & 1u);
                    if (cut) {
                        blocks.push_back(cur);
                        ++added;
                        cur = Block{};
                    }
                }
                tile(si + 1);
                blocks.resize(blocks.size() - added);
            }
        };
        tile(0);
    }

    std::vector<TiledBand> out;
    for (auto& [key, g] : families) {
        for (int t = 0; t <= n; ++t)
            if (g.best.nu.norths(t) != g.min_norths[static_cast<std::size_t>(t)])
                throw domain_error("family has incomparable lowest members");
        out.push_back(std::move(g.best));
    }
    std::sort(out.begin(), out.end(), [](const TiledBand& a, const TiledBand& b) {
        if (a.block_count() != b.block_count()) return a.block_count() < b.block_count();
        return canonical_key(a) < canonical_key(b);
    });
    return out;
}

// Bottoms with exactly n blocks; their count is the number of n-dimensional
// faces of the base polytope.
inline std::vector<TiledBand> enumerate_bottoms(const SkewRegion& region, int n) {
    if (n < 0 || n > region.steps() - 1)
        throw domain_error("block count must lie between 0 and m+r-1");
    std::vector<TiledBand> out;
    for (TiledBand& b : enumerate_bottoms_all(region))
        if (b.block_count() == n) out.push_back(std::move(b));
    return out;
}

// Grows a bottom to its maximal block-tiled region by stacking clones of
// each block upward while the upper bound stays a lattice path, the boxes
// stay inside the region, and the shared pieces stay anchored.
inline BlockTiledRegion bottom_to_maximal_region(const SkewRegion& region,
                                                 const TiledBand& bottom) {
    int n = region.steps();
    std::vector<int> mu(static_cast<std::size_t>(n) + 1);
    for (int t = 0; t <= n; ++t) mu[static_cast<std::size_t>(t)] = bottom.nu.norths(t);

    BlockTiledRegion out;
    out.lambda = bottom.lambda;
    out.tiles = bottom.blocks;

    std::vector<int> copies(bottom.blocks.size(), 0);
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t bi = 0; bi < bottom.blocks.size(); ++bi) {
            const Block& b = bottom.blocks[bi];
            int k = copies[bi] + 1; // shift of the next clone
            Block clone;
            bool ok = true;
            for (const Box& box : b.boxes) {
                Box shifted{box.x - k, box.y + k};
                if (!region.contains_box(shifted.x, shifted.y)) {
                    ok = false;
                    break;
                }
                clone.boxes.push_back(shifted);
            }
            if (!ok) continue;
            std::vector<int> mu2 = mu;
            for (int t = b.first_diag(); t <= b.last_diag(); ++t)
                ++mu2[static_cast<std::size_t>(t)];
            if (!detail::monotone_norths(mu2)) continue;
            LatticePath mu_path = detail::path_from_norths(mu2);
            if (!detail::shared_pieces_anchored(region, bottom.lambda, mu_path)) continue;
            mu = std::move(mu2);
            out.tiles.push_back(std::move(clone));
            ++copies[bi];
            progress = true;
        }
    }
    out.mu = detail::path_from_norths(mu);
    return out;
}

// Vertices of the face named by a bottom: paths through the maximal region
// that never cross the interior of a tile. A step is interior when it is the
// shared edge of two consecutive boxes of one tile.
inline std::vector<BasisMask> face_vertices(const SkewRegion& region, const TiledBand& bottom) {
    BlockTiledRegion reg = bottom_to_maximal_region(region, bottom);
    std::set<std::pair<Point, char>> blocked;
    for (const Block& b : reg.tiles)
        for (std::size_t i = 1; i < b.boxes.size(); ++i) {
            const Box& prev = b.boxes[i - 1];
            const Box& cur = b.boxes[i];
            if (cur.x == prev.x + 1)
                blocked.insert({Point{cur.x, cur.y}, 'N'});
            else
                blocked.insert({Point{cur.x, cur.y}, 'E'});
        }

    int n = region.steps();
    std::vector<BasisMask> out;
    std::function<void(int, int, BasisMask)> walk = [&](int t, int y, BasisMask mask) {
        if (t == n) {
            out.push_back(mask);
            return;
        }
        Point here{t - y, y};
        if (y >= reg.lambda.norths(t + 1) && !blocked.count({here, 'E'}))
            walk(t + 1, y, mask);
        if (y + 1 <= reg.mu.norths(t + 1) && !blocked.count({here, 'N'}))
            walk(t + 1, y + 1, mask | (BasisMask{1} << t));
    };
    walk(0, 0, 0);
    std::sort(out.begin(), out.end(), basis_lex_less);
    return out;
}

namespace detail {

// Candidate cover: remove one block and pinch the band across its span,
// either down onto lambda or up onto nu.
inline bool try_collapse(const SkewRegion& region, const TiledBand& member, std::size_t bi,
                         bool down, TiledBand& out) {
    int n = region.steps();
    const Block& b = member.blocks[bi];
    std::vector<int> ln(static_cast<std::size_t>(n) + 1), un(static_cast<std::size_t>(n) + 1);
    for (int t = 0; t <= n; ++t) {
        ln[static_cast<std::size_t>(t)] = member.lambda.norths(t);
        un[static_cast<std::size_t>(t)] = member.nu.norths(t);
    }
    for (int t = b.first_diag(); t <= b.last_diag(); ++t) {
        if (down)
            un[static_cast<std::size_t>(t)] = ln[static_cast<std::size_t>(t)];
        else
            ln[static_cast<std::size_t>(t)] = un[static_cast<std::size_t>(t)];
    }
    if (!monotone_norths(ln) || !monotone_norths(un)) return false;
    TiledBand cand;
    cand.lambda = path_from_norths(ln);
    cand.nu = path_from_norths(un);
    for (std::size_t i = 0; i < member.blocks.size(); ++i)
        if (i != bi) cand.blocks.push_back(member.blocks[i]);
    if (!valid_tiled_band(region, cand)) return false;
    out = std::move(cand);
    return true;
}

} // namespace detail

// Codimension-one subfaces of the face of a bottom. Candidates come from
// removing one block of a family member and pinching the band across its span
// (either direction), and from merges of adjacent blocks; a candidate counts
// only when its vertex set lies inside the parent face's vertex set, which
// together with the one-smaller block count makes it a covered subface.
inline std::vector<TiledBand> covering_subfaces(const SkewRegion& region,
                                                const TiledBand& bottom) {
    if (bottom.block_count() < 1)
        throw domain_error("covering_subfaces requires at least one block");
    std::set<BasisMask> parent_vertices;
    for (BasisMask v : face_vertices(region, bottom)) parent_vertices.insert(v);
    std::map<std::string, TiledBand> out;
    auto emit = [&](const TiledBand& cand) {
        TiledBand canon = canonical_bottom(region, cand);
        std::string key = canonical_key(canon);
        if (out.count(key)) return;
        for (BasisMask v : face_vertices(region, canon))
            if (!parent_vertices.count(v)) return;
        out.emplace(std::move(key), std::move(canon));
    };

    for (const TiledBand& f : family_members(region, bottom)) {
        for (std::size_t bi = 0; bi < f.blocks.size(); ++bi) {
            const Block& b = f.blocks[bi];
            bool has_next = bi + 1 < f.blocks.size() &&
                            b.last_diag() + 1 == f.blocks[bi + 1].first_diag();
            TiledBand cand;
            if (detail::try_collapse(region, f, bi, true, cand)) emit(cand);
            if (detail::try_collapse(region, f, bi, false, cand)) emit(cand);
            // merge with the next block along the stretch
            if (has_next) {
                TiledBand merged;
                merged.lambda = f.lambda;
                merged.nu = f.nu;
                for (std::size_t i = 0; i < f.blocks.size(); ++i) {
                    if (i == bi + 1) continue;
                    Block nb = f.blocks[i];
                    if (i == bi)
                        nb.boxes.insert(nb.boxes.end(), f.blocks[bi + 1].boxes.begin(),
                                        f.blocks[bi + 1].boxes.end());
                    merged.blocks.push_back(std::move(nb));
                }
                if (valid_tiled_band(region, merged)) emit(merged);
            }
        }
    }
    std::vector<TiledBand> result;
    for (auto& [key, band] : out) result.push_back(std::move(band));
    return result;
}

// Graded face poset built downward from the top face; rank = block count.
struct FacePoset {
    struct Node {
        TiledBand bottom;
        int rank = 0;
    };
    std::vector<Node> nodes;
    std::vector<std::pair<int, int>> covers; // (higher node, lower node)
    std::vector<std::size_t> rank_sizes;     // index = rank
};

// Builds the poset by repeated covering steps from the top face whose bottom
// tiles the band just above the lower bounding path with single boxes.
inline FacePoset face_poset(const SkewRegion& region, int max_steps = 12,
                            std::size_t max_faces = 200000) {
    if (!region.connected())
        throw domain_error("face_poset requires a connected region");
    if (region.steps() > max_steps)
        throw resource_error("region exceeds the poset size cap");

    FacePoset poset;
    int n = region.steps();
    std::map<std::string, int> ids;

    TiledBand top;
    if (n == 1) {
        top = TiledBand{region.lower, region.lower, {}};
    } else {
        top.lambda = region.lower;
        top.nu = strip_above(region.lower).upper;
        for (int t = 1; t <= n - 1; ++t)
            top.blocks.push_back(
                Block{{Box{t - 1 - region.lower.norths(t), region.lower.norths(t)}}});
        top = canonical_bottom(region, top);
    }

    std::queue<int> frontier;
    auto intern = [&](const TiledBand& band) {
        std::string key = canonical_key(band);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        if (poset.nodes.size() >= max_faces)
            throw resource_error("face count exceeds the poset cap");
        int id = static_cast<int>(poset.nodes.size());
        ids.emplace(key, id);
        poset.nodes.push_back({band, band.block_count()});
        frontier.push(id);
        return id;
    };
    intern(top);
    while (!frontier.empty()) {
        int id = frontier.front();
        frontier.pop();
        if (poset.nodes[static_cast<std::size_t>(id)].rank == 0) continue;
        TiledBand bottom = poset.nodes[static_cast<std::size_t>(id)].bottom;
        for (const TiledBand& child : covering_subfaces(region, bottom))
            poset.covers.emplace_back(id, intern(child));
    }
    poset.rank_sizes.assign(static_cast<std::size_t>(polytope_dimension(region)) + 1, 0);
    for (const auto& node : poset.nodes)
        ++poset.rank_sizes[static_cast<std::size_t>(node.rank)];
    return poset;
}

// Edge count by the area formula: one edge per unit of area between each
// path and its straightened companion.
inline long long edge_count_by_area(const SkewRegion& region) {
    if (!region.connected())
        throw domain_error("edge_count_by_area requires a connected region");
    long long total = 0;
    for (const LatticePath& l : all_paths(region))
        total += area_between(l_prime(region.lower, l), l);
    return total;
}

} // namespace lpm
