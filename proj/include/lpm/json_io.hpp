#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "exact/cd_index.hpp"
#include "facet_ops.hpp"
#include "matroid.hpp"
#include "tilings.hpp"

namespace lpm {

using ordered_json = nlohmann::ordered_json;

inline ordered_json bases_json(const LatticeMatroid& m) {
    ordered_json out;
    out["n"] = m.n;
    out["rank"] = m.rank;
    out["count"] = m.bases.size();
    ordered_json list = ordered_json::array();
    for (BasisMask b : m.bases) list.push_back(mask_to_list(b));
    out["bases"] = std::move(list);
    return out;
}

inline ordered_json facet_operation_json(const FacetOperation& op) {
    ordered_json out;
    switch (op.kind) {
    case FacetOperation::Kind::deletion:
        out["op"] = "deletion";
        out["i"] = op.index;
        break;
    case FacetOperation::Kind::contraction:
        out["op"] = "contraction";
        out["i"] = op.index;
        break;
    case FacetOperation::Kind::direct_sum:
        out["op"] = "direct_sum";
        out["p"] = op.corner.x;
        out["q"] = op.corner.y;
        break;
    }
    return out;
}

inline ordered_json facet_operations_json(const std::vector<FacetOperation>& ops) {
    ordered_json list = ordered_json::array();
    for (const FacetOperation& op : ops) list.push_back(facet_operation_json(op));
    ordered_json out;
    out["count"] = ops.size();
    out["operations"] = std::move(list);
    return out;
}

inline ordered_json bottom_json(const TiledBand& band) {
    ordered_json out;
    out["lambda"] = band.lambda.word();
    ordered_json blocks = ordered_json::array();
    for (const Block& b : band.blocks) {
        ordered_json jb;
        jb["start"] = {b.start().x, b.start().y};
        jb["shape"] = b.shape();
        blocks.push_back(std::move(jb));
    }
    out["blocks"] = std::move(blocks);
    return out;
}

inline ordered_json face_poset_json(const FacePoset& poset) {
    ordered_json out;
    ordered_json ranks = ordered_json::array();
    for (std::size_t c : poset.rank_sizes) ranks.push_back(c);
    out["ranks"] = std::move(ranks);
    std::vector<std::pair<int, int>> covers = poset.covers;
    std::sort(covers.begin(), covers.end());
    ordered_json edges = ordered_json::array();
    for (const auto& [hi, lo] : covers) edges.push_back(ordered_json::array({hi, lo}));
    out["covers"] = std::move(edges);
    return out;
}

inline ordered_json cd_polynomial_json(const exact::CdPolynomial& poly) {
    ordered_json out = ordered_json::object();
    for (const auto& [word, coef] : poly.terms) out[word] = coef.str();
    return out;
}

} // namespace lpm
