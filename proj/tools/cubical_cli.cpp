// Command-line front door: every library operation behind one binary.
//
// Exit codes: 0 = success / verdict true, 1 = verdict false or violations
// found, 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cubical.hpp"

namespace {

using cubical::json;

constexpr int kOk = 0;
constexpr int kVerdictFalse = 1;
constexpr int kUsage = 2;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) cubical::fail(cubical::Errc::bad_parameters, "cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

cubical::CubeComplex load_complex(const std::string& path) {
    return cubical::complex_from_json(load_json(path));
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) cubical::fail(cubical::Errc::bad_parameters, "cannot write '" + out_path + "'");
    out << text;
}

struct Emit {
    std::string format = "json";
    void operator()(const json& j, const std::string& text) const {
        if (format == "json")
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text;
    }
};

std::string join_ids(const cubical::CubeComplex& X, const std::vector<cubical::Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += " ";
        s += X.id(vs[i]);
    }
    return s;
}

// maximal cubes ordered by (dimension descending, vertex list): the indexing
// used by cube-separates and the criterion scan output
std::vector<int> maximal_cube_order(const std::vector<cubical::Cube>& cubes) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < cubes.size(); ++i)
        if (cubes[i].maximal) idx.push_back(static_cast<int>(i));
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (cubes[a].dimension != cubes[b].dimension)
            return cubes[a].dimension > cubes[b].dimension;
        return cubes[a].vertices < cubes[b].vertices;
    });
    return idx;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubical — combinatorial geometry of cube complex skeletons"};
    app.require_subcommand(1);

    std::string file, out_path, map_path, group_path, sidecar_path;
    std::string format = "json", oracle_name = "auto", kind_str, obj_a, obj_b, what = "skeleton";
    std::vector<int> pair, family, cube_idx, range_lh;
    std::vector<std::string> gen_params;
    int hyp = -1, side = 0, err_L = 0, threshold = 0, length = 1;
    std::uint64_t seed = 0;
    bool interior_only = false;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };

    auto* validate = app.add_subcommand("validate", "median-graph validation (exit 0 iff median)");
    validate->add_option("file", file)->required();
    validate->add_flag("--interior-only", interior_only, "restrict triples to interior vertices");
    add_format(validate);

    auto* hyperplanes_cmd = app.add_subcommand("hyperplanes", "list Theta classes and halfspaces");
    hyperplanes_cmd->add_option("file", file)->required();
    add_format(hyperplanes_cmd);

    auto* classify = app.add_subcommand(
        "classify", "separation class of a hyperplane pair (all pairs when --pair is omitted)");
    classify->add_option("file", file)->required();
    classify->add_option("--pair", pair, "two hyperplane ids")->expected(2);
    add_format(classify);

    auto* crossing = app.add_subcommand("crossing", "crossing graph summary");
    crossing->add_option("file", file)->required();
    add_format(crossing);

    auto* bridge_cmd = app.add_subcommand("bridge", "bridge between two parallel hyperplanes");
    bridge_cmd->add_option("file", file)->required();
    bridge_cmd->add_option("--pair", pair)->expected(2)->required();
    add_format(bridge_cmd);

    auto* bridge_check = app.add_subcommand(
        "bridge-check", "gate formula (and bridge cut when uber-separated); exit 1 on violations");
    bridge_check->add_option("file", file)->required();
    bridge_check->add_option("--pair", pair)->expected(2)->required();
    add_format(bridge_check);

    auto* sectors_cmd = app.add_subcommand("sectors", "sectors of a pairwise-crossing family");
    sectors_cmd->add_option("file", file)->required();
    sectors_cmd->add_option("--family", family, "hyperplane ids")->required();
    add_format(sectors_cmd);

    auto* free_faces_cmd =
        app.add_subcommand("free-faces", "free faces; exit 0 iff none (geodesically complete)");
    free_faces_cmd->add_option("file", file)->required();
    free_faces_cmd->add_flag("--interior-only", interior_only, "ignore window-rim faces");
    add_format(free_faces_cmd);

    auto* irreducible_cmd =
        app.add_subcommand("irreducible", "crossing-graph join test; exit 0 iff irreducible");
    irreducible_cmd->add_option("file", file)->required();
    add_format(irreducible_cmd);

    auto* cube_sep = app.add_subcommand(
        "cube-separates",
        "does the maximal-cube pair separate a pair of hyperplanes (exit 1: no witness); cubes are "
        "indexed over maximal cubes, largest dimension first, then vertex order");
    cube_sep->add_option("file", file)->required();
    cube_sep->add_option("--cube", cube_idx, "maximal cube index (give twice)")
        ->expected(1, 2)
        ->required();
    add_format(cube_sep);

    auto add_checkpoint_opts = [&](CLI::App* sub) {
        sub->add_option("file", file)->required();
        sub->add_option("--map", map_path, "automorphism file")->required();
        sub->add_option("--hyperplane", hyp, "skewered hyperplane id")->required();
        sub->add_option("--side", side, "halfspace side (0 or 1)")->required();
        sub->add_option("--range", range_lh, "translate index range lo hi")->expected(2)->required();
        sub->add_option("--error-constant", err_L, "hop distance L")->required();
        add_format(sub);
    };
    auto* checkpoints_cmd = app.add_subcommand("checkpoints", "build a checkpoint system");
    add_checkpoint_opts(checkpoints_cmd);
    auto* verify_cp = app.add_subcommand(
        "verify-checkpoints", "build and verify a checkpoint system; exit 1 on violations");
    add_checkpoint_opts(verify_cp);

    auto* stab = app.add_subcommand("stabilizers", "stabiliser intersection of two objects");
    stab->add_option("file", file)->required();
    stab->add_option("--group", group_path, "group file")->required();
    stab->add_option("--kind", kind_str, "vertex | hyperplane | cube")
        ->check(CLI::IsMember({"vertex", "hyperplane", "cube"}))
        ->required();
    stab->add_option("--a", obj_a)->required();
    stab->add_option("--b", obj_b)->required();
    add_format(stab);

    auto* criterion_cmd = app.add_subcommand(
        "criterion", "scan stabiliser hypotheses; one witness per line; exit 1 when none");
    criterion_cmd->add_option("file", file)->required();
    criterion_cmd->add_option("--group", group_path)->required();
    criterion_cmd->add_option("--threshold", threshold, "max finite intersection order")->required();
    add_format(criterion_cmd);

    auto* weak_acyl = app.add_subcommand("weak-acyl", "pointwise pair-fixing profile at distance >= L");
    weak_acyl->add_option("file", file)->required();
    weak_acyl->add_option("--group", group_path)->required();
    weak_acyl->add_option("--error-constant", err_L, "distance threshold L")->required();
    add_format(weak_acyl);

    auto* artin_fc = app.add_subcommand("artin-fc", "FC-type test for a Coxeter graph; exit 1 if not");
    artin_fc->add_option("file", file)->required();
    add_format(artin_fc);

    auto* artin_deligne = app.add_subcommand("artin-deligne", "Deligne ball export");
    artin_deligne->add_option("file", file)->required();
    artin_deligne->add_option("--length", length,
                              "bound on canonical coset representative word length (not a metric "
                              "ball: vertex stabilisers are infinite)")
        ->required();
    artin_deligne->add_option("--oracle", oracle_name, "auto | free | right-angled")
        ->check(CLI::IsMember({"auto", "free", "right-angled"}));
    artin_deligne->add_option("--out", out_path, "write the skeleton here instead of stdout");
    artin_deligne->add_option("--sidecar", sidecar_path, "write coset/edge-label sidecar JSON");
    add_format(artin_deligne);

    auto* ruth = app.add_subcommand(
        "ruth", "disjoint-link generator pair at distance >= 3; exit 1 when none exists");
    ruth->add_option("file", file)->required();
    add_format(ruth);

    auto* gen = app.add_subcommand("gen", "emit a named fixture in the exchange format");
    gen->add_option("kind", gen_params, "kind and integer parameters (e.g. grid 3 3)")->required();
    gen->add_option("--seed", seed, "seed for randomized tree shapes");
    gen->add_option("--out", out_path);
    add_format(gen);

    auto* export_dot = app.add_subcommand("export-dot", "DOT export of skeleton or crossing graph");
    export_dot->add_option("file", file)->required();
    export_dot->add_option("--what", what)->check(CLI::IsMember({"skeleton", "crossing"}));
    export_dot->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);
    Emit emit{format};

    try {
        if (validate->parsed()) {
            auto X = load_complex(file);
            auto res = cubical::is_median_graph(X, interior_only);
            json j{{"median", res.ok}, {"vertices", X.vertex_count()}, {"edges", X.edge_count()}};
            std::string text = res.ok ? "median graph\n" : "not a median graph\n";
            if (!res.ok) {
                j["witness"] = {X.id(res.witness[0]), X.id(res.witness[1]), X.id(res.witness[2])};
                j["witness_median_count"] = res.witness_medians.size();
                text += "witness triple: " + X.id(res.witness[0]) + " " + X.id(res.witness[1]) +
                        " " + X.id(res.witness[2]) + " with " +
                        std::to_string(res.witness_medians.size()) + " medians\n";
            }
            emit(j, text);
            return res.ok ? kOk : kVerdictFalse;
        }

        if (hyperplanes_cmd->parsed()) {
            auto X = load_complex(file);
            cubical::HyperplaneSet H(X);
            json j = cubical::hyperplane_report(X, H);
            std::ostringstream text;
            text << H.count() << " hyperplanes\n";
            emit(j, text.str());
            return kOk;
        }

        if (classify->parsed()) {
            auto X = load_complex(file);
            cubical::HyperplaneSet H(X);
            if (pair.empty()) {
                json j = cubical::classification_report(H);
                emit(j, std::to_string(j.at("pairs").size()) + " pairs classified\n");
                return kOk;
            }
            if (pair[0] < 0 || pair[0] >= H.count() || pair[1] < 0 || pair[1] >= H.count())
                cubical::fail(cubical::Errc::bad_parameters, "hyperplane id out of range");
            auto G = H.crossing_graph();
            json j = cubical::pair_report(H, G, pair[0], pair[1]);
            emit(j, std::string(j.at("class").get<std::string>()) + "\n");
            return kOk;
        }

        if (crossing->parsed()) {
            auto X = load_complex(file);
            cubical::HyperplaneSet H(X);
            auto G = H.crossing_graph();
            json adj = json::array();
            int edge_count = 0;
            for (int i = 0; i < G.node_count; ++i) {
                adj.push_back(G.adjacency[i]);
                edge_count += static_cast<int>(G.adjacency[i].size());
            }
            json j{{"nodes", G.node_count}, {"edge_count", edge_count / 2}, {"adjacency", adj}};
            emit(j, "crossing graph: " + std::to_string(G.node_count) + " nodes, " +
                        std::to_string(edge_count / 2) + " edges\n");
            return kOk;
        }

        if (bridge_cmd->parsed()) {
            auto X = load_complex(file);
            cubical::HyperplaneSet H(X);
            auto b = cubical::bridge(H, pair[0], pair[1]);
            json j = cubical::bridge_report(X, b);
            std::ostringstream text;
            text << "bridge width " << b.width << ", gates (" << X.id(b.gate1) << ", "
                 << X.id(b.gate2) << "), " << (b.unique ? "unique" : "not unique") << "\n";
            emit(j, text.str());
            return kOk;
        }

        if (bridge_check->parsed()) {
            auto X = load_complex(file);
            cubical::HyperplaneSet H(X);
            if (pair.size() != 2) cubical::fail(cubical::Errc::bad_parameters, "--pair required");
            auto cls = H.classify_pair(pair[0], pair[1]);
            auto rep = cubical::check_gate_formula(H, pair[0], pair[1]);
            json gate_viols = json::array();
            for (const auto& v : rep.violations)
                gate_viols.push_back(json{{"y1", X.id(v.y1)},
                                          {"y2", X.id(v.y2)},
                                          {"distance", v.lhs},
                                          {"through_gates", v.rhs}});
            json j{{"h1", pair[0]},
                   {"h2", pair[1]},
                   {"class", cubical::pair_class_name(cls.cls)},
                   {"gate_formula_pairs", rep.pairs_checked},
                   {"gate_formula_violations", gate_viols}};
            std::size_t violations = rep.violations.size();
            if (cls.cls == cubical::PairClass::uber_separated) {
                auto cut = cubical::check_bridge_cut(H, pair[0], pair[1]);
                json cut_viols = json::array();
                for (auto [x, y] : cut.violations)
                    cut_viols.push_back(json::array({X.id(x), X.id(y)}));
                j["bridge_cut_pairs"] = cut.pairs_checked;
                j["bridge_cut_violations"] = cut_viols;
                violations += cut.violations.size();
            }
            emit(j, std::to_string(violations) + " violations\n");
            return violations == 0 ? kOk : kVerdictFalse;
        }

        if (sectors_cmd->parsed()) {
            auto X = load_complex(file);
            cubical::HyperplaneSet H(X);
            auto S = cubical::sectors(H, family);
            json secs = json::array();
            for (int m = 0; m < S.sector_count(); ++m) {
                json ids = json::array();
                for (cubical::Vertex v : S.sector_vertices[m]) ids.push_back(X.id(v));
                secs.push_back(json{{"signature", m},
                                    {"vertices", ids},
                                    {"contained_hyperplanes", S.contained_hyperplanes[m]}});
            }
            json j{{"family", S.family},
                   {"sectors", secs},
                   {"boundary_affected", S.boundary_affected}};
            emit(j, std::to_string(S.sector_count()) + " sectors\n");
            return kOk;
        }

        if (free_faces_cmd->parsed()) {
            auto X = load_complex(file);
            cubical::HyperplaneSet H(X);
            auto cubes = cubical::enumerate_cubes(H);
            auto ff = cubical::free_faces(cubes);
            if (interior_only) {
                ff.erase(std::remove_if(ff.begin(), ff.end(),
                                        [](const cubical::Cube& c) { return !c.interior; }),
                         ff.end());
            }
            json faces = json::array();
            for (const auto& f : ff) {
                json ids = json::array();
                for (cubical::Vertex v : f.vertices) ids.push_back(X.id(v));
                faces.push_back(json{{"dimension", f.dimension},
                                     {"vertices", ids},
                                     {"interior", f.interior}});
            }
            emit(json{{"free_faces", faces}, {"count", ff.size()}},
                 std::to_string(ff.size()) + " free faces\n");
            return ff.empty() ? kOk : kVerdictFalse;
        }

        if (irreducible_cmd->parsed()) {
            auto X = load_complex(file);
            cubical::HyperplaneSet H(X);
            auto rep = cubical::is_irreducible(H);
            json j{{"irreducible", rep.irreducible}};
            if (!rep.irreducible) {
                j["family_1"] = rep.family_1;
                j["family_2"] = rep.family_2;
            }
            emit(j, rep.irreducible ? "irreducible\n" : "reducible\n");
            return rep.irreducible ? kOk : kVerdictFalse;
        }

        if (cube_sep->parsed()) {
            auto X = load_complex(file);
            cubical::HyperplaneSet H(X);
            auto cubes = cubical::enumerate_cubes(H);
            auto order = maximal_cube_order(cubes);
            if (cube_idx.size() == 1) cube_idx.push_back(cube_idx[0]);
            for (int ci : cube_idx)
                if (ci < 0 || ci >= static_cast<int>(order.size()))
                    cubical::fail(cubical::Errc::bad_parameters, "cube index out of range");
            const auto& A = cubes[order[cube_idx[0]]];
            const auto& B = cubes[order[cube_idx[1]]];
            auto w = cubical::cube_pair_separates(H, A, B);
            json j{{"cube_1", cube_idx[0]}, {"cube_2", cube_idx[1]}, {"witness", nullptr}};
            if (w) {
                j["witness"] = json{{"h1", w->h1},
                                    {"h2", w->h2},
                                    {"h1_half", w->h1_half},
                                    {"h2_half", w->h2_half}};
            }
            emit(j, w ? "witness found\n" : "no witness\n");
            return w ? kOk : kVerdictFalse;
        }

        if (checkpoints_cmd->parsed() || verify_cp->parsed()) {
            auto X = load_complex(file);
            cubical::HyperplaneSet H(X);
            auto g = cubical::automorphism_from_json(X, load_json(map_path));
            auto cs = cubical::build_checkpoint_system(H, g, {hyp, side}, range_lh[0], range_lh[1],
                                                       err_L);
            json translates = json::object();
            for (const auto& [i, S] : cs.translates) {
                json ids = json::array();
                for (cubical::Vertex v : S) ids.push_back(X.id(v));
                translates[std::to_string(i)] = ids;
            }
            json j{{"h1", cs.h1},
                   {"h2", cs.h2},
                   {"base_size", cs.base.size()},
                   {"translates", translates},
                   {"skipped_indices", cs.skipped_indices},
                   {"error_constant", cs.error_constant},
                   {"overlapping", cs.overlapping},
                   {"boundary_affected", cs.boundary_affected}};
            if (checkpoints_cmd->parsed()) {
                emit(j, std::to_string(cs.translates.size()) + " checkpoints built\n");
                return kOk;
            }
            auto rep = cubical::verify_checkpoint_system(X, cs);
            json viols = json::array();
            for (const auto& v : rep.violations)
                viols.push_back(json{{"x", X.id(v.x)}, {"y", X.id(v.y)}, {"index", v.index}});
            j["violations"] = viols;
            j["pairs_checked"] = rep.pairs_checked;
            j["cuts_checked"] = rep.cuts_checked;
            emit(j, std::to_string(rep.violations.size()) + " violations\n");
            return rep.violations.empty() ? kOk : kVerdictFalse;
        }

        if (stab->parsed()) {
            auto X = load_complex(file);
            cubical::HyperplaneSet H(X);
            auto cubes = cubical::enumerate_cubes(H);
            auto gf = cubical::group_from_json(X, load_json(group_path));
            auto G = cubical::group_closure(X, gf.generators, gf.bound);
            auto parse_obj = [&](const std::string& s) -> cubical::ObjectRef {
                if (kind_str == "vertex") return {cubical::ObjectRef::Kind::vertex, X.index(s)};
                int idx = std::stoi(s);
                if (kind_str == "hyperplane") {
                    if (idx < 0 || idx >= H.count())
                        cubical::fail(cubical::Errc::bad_parameters, "hyperplane id out of range");
                    return {cubical::ObjectRef::Kind::hyperplane, idx};
                }
                auto order = maximal_cube_order(cubes);
                if (idx < 0 || idx >= static_cast<int>(order.size()))
                    cubical::fail(cubical::Errc::bad_parameters, "cube index out of range");
                return {cubical::ObjectRef::Kind::cube, order[idx]};
            };
            auto rep = cubical::stabilizer_intersection(X, H, cubes, G, parse_obj(obj_a),
                                                        parse_obj(obj_b));
            json j{{"group_order", G.order()},
                   {"order", rep.order},
                   {"elements", rep.elements},
                   {"subgroup_verified", rep.subgroup_verified}};
            emit(j, "intersection order " + std::to_string(rep.order) + "\n");
            return kOk;
        }

        if (criterion_cmd->parsed()) {
            auto X = load_complex(file);
            cubical::HyperplaneSet H(X);
            auto cubes = cubical::enumerate_cubes(H);
            auto gf = cubical::group_from_json(X, load_json(group_path));
            auto G = cubical::group_closure(X, gf.generators, gf.bound);
            auto witnesses = cubical::criterion_scan(X, H, cubes, G, threshold);
            // cube ids reported in the documented maximal-cube order
            auto order = maximal_cube_order(cubes);
            std::vector<int> pos(cubes.size(), -1);
            for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
            for (const auto& w : witnesses) {
                json line{{"witness", "hypothesis"},
                          {"type", w.kind == cubical::CriterionWitness::Kind::hyperplane_pair
                                       ? "hyperplane-pair"
                                       : "cube-pair"},
                          {"intersection_order", w.intersection_order}};
                if (w.kind == cubical::CriterionWitness::Kind::hyperplane_pair)
                    line["ids"] = {w.a, w.b};
                else
                    line["ids"] = {pos[w.a], pos[w.b]};
                std::cout << line.dump() << "\n";
            }
            return witnesses.empty() ? kVerdictFalse : kOk;
        }

        if (weak_acyl->parsed()) {
            auto X = load_complex(file);
            auto gf = cubical::group_from_json(X, load_json(group_path));
            auto G = cubical::group_closure(X, gf.generators, gf.bound);
            auto rep = cubical::weak_acyl_scan(X, G, err_L);
            json j{{"L", err_L}, {"no_pairs", rep.no_pairs}, {"max_count", rep.max_count}};
            if (!rep.no_pairs) j["pair"] = {X.id(rep.pair_x), X.id(rep.pair_y)};
            emit(j, rep.no_pairs ? "no pairs at this distance\n"
                                 : "max fixing count " + std::to_string(rep.max_count) + "\n");
            return kOk;
        }

        if (artin_fc->parsed()) {
            auto G = cubical::coxeter_from_json(load_json(file));
            auto rep = cubical::is_fc_type(G);
            json j{{"fc", rep.fc}};
            if (!rep.fc) {
                json clique = json::array();
                for (int t : rep.failing_clique) clique.push_back(G.name(t));
                j["failing_clique"] = clique;
            }
            emit(j, rep.fc ? "FC type\n" : "not FC type\n");
            return rep.fc ? kOk : kVerdictFalse;
        }

        if (artin_deligne->parsed()) {
            auto G = cubical::coxeter_from_json(load_json(file));
            std::unique_ptr<cubical::NormalFormOracle> oracle;
            if (oracle_name == "free")
                oracle = std::make_unique<cubical::FreeOracle>();
            else if (oracle_name == "right-angled")
                oracle = std::make_unique<cubical::RightAngledOracle>(G);
            else
                oracle = cubical::builtin_oracle(G);
            auto ball = cubical::deligne_ball(G, length, *oracle);
            write_output(out_path, cubical::serialize_complex(ball.skeleton));
            if (!sidecar_path.empty()) {
                std::ofstream sc(sidecar_path);
                sc << cubical::deligne_sidecar(G, ball).dump(2) << "\n";
            }
            return kOk;
        }

        if (ruth->parsed()) {
            auto G = cubical::coxeter_from_json(load_json(file));
            auto diam = cubical::coxeter_diameter(G);
            auto w = cubical::ruth_witness(G);
            json j{{"diameter", diam ? json(*diam) : json("inf")}, {"witness", nullptr}};
            if (w) {
                auto ls = G.link(w->first);
                auto lt = G.link(w->second);
                json l1 = json::array(), l2 = json::array();
                for (int t : ls) l1.push_back(G.name(t));
                for (int t : lt) l2.push_back(G.name(t));
                j["witness"] = {G.name(w->first), G.name(w->second)};
                j["stabilizer_labels"] = {l1, l2};
            }
            emit(j, w ? "witness (" + G.name(w->first) + ", " + G.name(w->second) + ")\n"
                      : "no witness\n");
            return w ? kOk : kVerdictFalse;
        }

        if (gen->parsed()) {
            if (gen_params.empty()) cubical::fail(cubical::Errc::bad_parameters, "missing kind");
            cubical::GeneratorSpec spec;
            spec.kind = cubical::parse_generator_kind(gen_params[0]);
            for (std::size_t i = 1; i < gen_params.size(); ++i)
                spec.parameters.push_back(std::stoi(gen_params[i]));
            spec.seed = seed;
            auto X = cubical::generate(spec);
            write_output(out_path, cubical::serialize_complex(X));
            return kOk;
        }

        if (export_dot->parsed()) {
            auto X = load_complex(file);
            if (what == "crossing") {
                cubical::HyperplaneSet H(X);
                write_output(out_path, cubical::crossing_graph_dot(H.crossing_graph()));
            } else {
                write_output(out_path, cubical::skeleton_dot(X));
            }
            return kOk;
        }
    } catch (const cubical::Error& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
