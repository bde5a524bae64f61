#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lpm/json_io.hpp"
#include "lpm/rank2.hpp"
#include "lpm/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_resource = 2;
constexpr int exit_mismatch = 3;

long long basis_cap_from_env() {
    if (const char* raw = std::getenv("LPM_MAX_BASES")) {
        char* end = nullptr;
        long long v = std::strtoll(raw, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw lpm::domain_error("LPM_MAX_BASES must be a positive integer");
    }
    return lpm::default_basis_cap;
}

lpm::SkewRegion region_from_words(const std::string& lower, const std::string& upper) {
    return lpm::make_region(lpm::LatticePath(lpm::expand_word(lower)),
                            lpm::LatticePath(lpm::expand_word(upper)));
}

void emit(const lpm::ordered_json& j) { std::cout << j.dump() << "\n"; }

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~Timer() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cerr << "elapsed " << ms << " ms\n";
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice path matroid base polytope toolkit"};
    app.require_subcommand(1);

    std::string lower, upper;
    auto add_region_flags = [&](CLI::App* cmd) {
        cmd->add_option("--lower", lower, "lower bounding path word")->required();
        cmd->add_option("--upper", upper, "upper bounding path word")->required();
    };

    CLI::App* cmd_bases = app.add_subcommand("bases", "enumerate bases");
    add_region_flags(cmd_bases);

    CLI::App* cmd_dim = app.add_subcommand("dim", "base polytope dimension");
    add_region_flags(cmd_dim);

    CLI::App* cmd_facets = app.add_subcommand("facets", "facet operations");
    add_region_flags(cmd_facets);

    CLI::App* cmd_faces = app.add_subcommand("faces", "face descriptions");
    add_region_flags(cmd_faces);
    int face_t = -1, face_n = -1;
    CLI::Option* opt_t =
        cmd_faces->add_option("--t", face_t, "operation subset size (border strips)");
    CLI::Option* opt_n = cmd_faces->add_option("--n", face_n, "block count (general regions)");
    opt_t->excludes(opt_n);
    opt_n->excludes(opt_t);

    CLI::App* cmd_fvector = app.add_subcommand("fvector", "face counts by dimension");
    add_region_flags(cmd_fvector);
    std::string fvector_method = "combinatorial";
    cmd_fvector->add_option("--method", fvector_method, "combinatorial or oracle")
        ->check(CLI::IsMember({"combinatorial", "oracle"}));

    CLI::App* cmd_edges = app.add_subcommand("edges", "edge count");
    add_region_flags(cmd_edges);
    std::string edges_method = "area";
    cmd_edges->add_option("--method", edges_method, "area, bottoms, or oracle")
        ->check(CLI::IsMember({"area", "bottoms", "oracle"}));

    CLI::App* cmd_cdindex = app.add_subcommand("cdindex", "cd-index of the base polytope");
    std::vector<int> rank2;
    cmd_cdindex->add_option("--rank2", rank2, "alpha beta gamma for the rank-2 identity")
        ->expected(3);
    std::string cd_lower, cd_upper;
    cmd_cdindex->add_option("--lower", cd_lower, "lower bounding path word");
    cmd_cdindex->add_option("--upper", cd_upper, "upper bounding path word");

    CLI::App* cmd_verify = app.add_subcommand("verify", "cross-check suite");
    int max_steps = 6;
    cmd_verify->add_option("--max-steps", max_steps, "largest total step count")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        Timer timer;
        long long cap = basis_cap_from_env();

        if (cmd_bases->parsed()) {
            lpm::SkewRegion region = region_from_words(lower, upper);
            emit(lpm::bases_json(lpm::bases_by_paths(region, cap)));
            return exit_ok;
        }
        if (cmd_dim->parsed()) {
            lpm::SkewRegion region = region_from_words(lower, upper);
            lpm::ordered_json j;
            j["dim"] = lpm::polytope_dimension(region);
            emit(j);
            return exit_ok;
        }
        if (cmd_facets->parsed()) {
            lpm::SkewRegion region = region_from_words(lower, upper);
            emit(lpm::facet_operations_json(lpm::facet_operations(region)));
            return exit_ok;
        }
        if (cmd_faces->parsed()) {
            lpm::SkewRegion region = region_from_words(lower, upper);
            if ((face_t < 0) == (face_n < 0))
                throw lpm::domain_error("faces needs exactly one of --t or --n");
            lpm::ordered_json j;
            if (face_t >= 0) {
                auto subsets = lpm::enumerate_face_subsets(region, face_t);
                j["t"] = face_t;
                j["count"] = subsets.size();
                lpm::ordered_json list = lpm::ordered_json::array();
                for (const auto& subset : subsets) {
                    lpm::ordered_json ops = lpm::ordered_json::array();
                    for (const auto& op : subset) ops.push_back(lpm::facet_operation_json(op));
                    list.push_back(std::move(ops));
                }
                j["subsets"] = std::move(list);
            } else {
                auto bottoms = lpm::enumerate_bottoms(region, face_n);
                j["n"] = face_n;
                j["count"] = bottoms.size();
                lpm::ordered_json list = lpm::ordered_json::array();
                for (const auto& b : bottoms) list.push_back(lpm::bottom_json(b));
                j["bottoms"] = std::move(list);
            }
            emit(j);
            return exit_ok;
        }
        if (cmd_fvector->parsed()) {
            lpm::SkewRegion region = region_from_words(lower, upper);
            int dim = lpm::polytope_dimension(region);
            std::vector<long long> f;
            if (fvector_method == "combinatorial") {
                f.assign(static_cast<std::size_t>(dim) + 1, 0);
                for (const auto& b : lpm::enumerate_bottoms_all(region))
                    ++f[static_cast<std::size_t>(b.block_count())];
            } else {
                f = lpm::oracle_lattice(lpm::bases_by_paths(region, cap)).f_vector();
            }
            lpm::ordered_json j;
            j["method"] = fvector_method;
            j["dim"] = dim;
            j["f"] = f;
            emit(j);
            return exit_ok;
        }
        if (cmd_edges->parsed()) {
            lpm::SkewRegion region = region_from_words(lower, upper);
            long long edges = 0;
            if (edges_method == "area") {
                edges = lpm::edge_count_by_area(region);
            } else if (edges_method == "bottoms") {
                if (lpm::polytope_dimension(region) >= 1)
                    edges = static_cast<long long>(lpm::enumerate_bottoms(region, 1).size());
            } else {
                auto f = lpm::oracle_lattice(lpm::bases_by_paths(region, cap)).f_vector();
                edges = f.size() > 1 ? f[1] : 0;
            }
            lpm::ordered_json j;
            j["method"] = edges_method;
            j["edges"] = edges;
            emit(j);
            return exit_ok;
        }
        if (cmd_cdindex->parsed()) {
            lpm::ordered_json j;
            if (!rank2.empty()) {
                auto lhs = lpm::rank2_cd_lhs(rank2[0], rank2[1], rank2[2]);
                auto rhs = lpm::rank2_cd_rhs(rank2[0], rank2[1], rank2[2]);
                j["alpha"] = rank2[0];
                j["beta"] = rank2[1];
                j["gamma"] = rank2[2];
                j["lhs"] = lpm::cd_polynomial_json(lhs);
                j["rhs"] = lpm::cd_polynomial_json(rhs);
                j["equal"] = lhs == rhs;
                emit(j);
                return lhs == rhs ? exit_ok : exit_mismatch;
            }
            if (cd_lower.empty() || cd_upper.empty())
                throw lpm::domain_error("cdindex needs --lower and --upper or --rank2");
            lpm::SkewRegion region = region_from_words(cd_lower, cd_upper);
            auto lattice = lpm::oracle_lattice(lpm::bases_by_paths(region, cap));
            j["dim"] = lattice.dim;
            j["cd"] = lpm::cd_polynomial_json(lpm::exact::cd_index(lattice));
            emit(j);
            return exit_ok;
        }
        if (cmd_verify->parsed()) {
            lpm::VerifyReport report = lpm::verify_connected_regions(
                max_steps, std::min(max_steps, 8), std::min(max_steps, 6),
                std::min(max_steps, 6));
            lpm::ordered_json j;
            j["regions"] = report.regions;
            j["failures"] = report.failures;
            j["ok"] = report.ok();
            emit(j);
            return report.ok() ? exit_ok : exit_mismatch;
        }
        throw lpm::domain_error("no subcommand selected");
    } catch (const lpm::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return exit_resource;
    } catch (const lpm::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
}
