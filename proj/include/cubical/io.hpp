#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cubical/actions.hpp"
#include "cubical/bridges.hpp"
#include "cubical/checkpoints.hpp"
#include "cubical/complex.hpp"
#include "cubical/coxeter.hpp"
#include "cubical/cubes.hpp"
#include "cubical/deligne.hpp"
#include "cubical/errors.hpp"
#include "cubical/hyperplanes.hpp"

namespace cubical {

using json = nlohmann::json;

// ── Complex exchange format ─────────────────────────────────────────
// {"vertices":[id...], "edges":[[id,id]...], "interior":[id...]} with
// vertices sorted and edges sorted smaller endpoint first.

inline json complex_to_json(const CubeComplex& X) {
    json j;
    j["vertices"] = json::array();
    for (const auto& id : X.ids()) j["vertices"].push_back(id);
    j["edges"] = json::array();
    std::vector<std::pair<std::string, std::string>> es;
    for (auto [u, v] : X.edges()) {
        std::string a = X.id(u), b = X.id(v);
        if (b < a) std::swap(a, b);
        es.emplace_back(a, b);
    }
    std::sort(es.begin(), es.end());
    for (const auto& [a, b] : es) j["edges"].push_back(json::array({a, b}));
    if (X.has_window()) j["interior"] = X.interior_ids();
    return j;
}

inline CubeComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        fail(Errc::bad_parameters, "complex file needs 'vertices' and 'edges'");
    std::vector<std::string> vs;
    for (const auto& v : j.at("vertices")) vs.push_back(v.get<std::string>());
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) fail(Errc::bad_parameters, "edge must be a pair");
        es.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    std::vector<std::string> interior;
    bool window = j.contains("interior");
    if (window)
        for (const auto& v : j.at("interior")) interior.push_back(v.get<std::string>());
    return CubeComplex::build(vs, es, interior, window);
}

inline std::string serialize_complex(const CubeComplex& X) { return complex_to_json(X).dump(2) + "\n"; }

// ── Automorphism and group files ────────────────────────────────────
// {"map": {id: id, ...}}  /  {"generators": [map...], "bound": N}

inline Automorphism automorphism_from_json(const CubeComplex& X, const json& j) {
    if (!j.is_object() || !j.contains("map"))
        fail(Errc::bad_parameters, "automorphism file needs 'map'");
    std::vector<std::pair<std::string, std::string>> m;
    for (const auto& [k, v] : j.at("map").items()) m.emplace_back(k, v.get<std::string>());
    return verify_automorphism(X, m);
}

inline json automorphism_to_json(const CubeComplex& X, const Automorphism& g) {
    json m = json::object();
    for (Vertex v = 0; v < X.vertex_count(); ++v)
        if (g.defined(v)) m[X.id(v)] = X.id(g.image[v]);
    return json{{"map", m}};
}

struct GroupFile {
    std::vector<Automorphism> generators;
    int bound = 0;
};

inline GroupFile group_from_json(const CubeComplex& X, const json& j) {
    if (!j.is_object() || !j.contains("generators"))
        fail(Errc::bad_parameters, "group file needs 'generators'");
    GroupFile g;
    for (const auto& gen : j.at("generators")) {
        std::vector<std::pair<std::string, std::string>> m;
        for (const auto& [k, v] : gen.items()) m.emplace_back(k, v.get<std::string>());
        g.generators.push_back(verify_automorphism(X, m));
    }
    g.bound = j.value("bound", 10000);
    return g;
}

// ── Coxeter graph file ──────────────────────────────────────────────
// {"generators": ["s0",...], "edges": [["s0","s1",3],...]}; missing edges
// mean label infinity.

inline CoxeterGraph coxeter_from_json(const json& j) {
    if (!j.is_object() || !j.contains("generators"))
        fail(Errc::bad_parameters, "coxeter file needs 'generators'");
    std::vector<std::string> gens;
    for (const auto& g : j.at("generators")) gens.push_back(g.get<std::string>());
    std::vector<std::tuple<std::string, std::string, int>> edges;
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                fail(Errc::bad_parameters, "coxeter edge must be [s, t, label]");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<int>());
        }
    return CoxeterGraph::build(gens, edges);
}

inline json coxeter_to_json(const CoxeterGraph& G) {
    json j;
    j["generators"] = G.names();
    j["edges"] = json::array();
    for (auto [a, b] : G.edge_list())
        j["edges"].push_back(json::array({G.name(a), G.name(b), G.label(a, b)}));
    return j;
}

// ── Reports ─────────────────────────────────────────────────────────

inline json crossing_distance_json(std::uint16_t d) {
    if (d == CrossingGraph::kInf) return json("inf");
    return json(static_cast<int>(d));
}

inline json classification_report(const HyperplaneSet& H) {
    const CrossingGraph G = H.crossing_graph();
    json pairs = json::array();
    for (int i = 0; i < H.count(); ++i)
        for (int j = i + 1; j < H.count(); ++j) {
            auto c = H.classify_pair(i, j);
            pairs.push_back(json{{"ids", {i, j}},
                                 {"class", pair_class_name(c.cls)},
                                 {"crossing_distance", crossing_distance_json(G.distance(i, j))}});
        }
    return json{{"hyperplanes", H.count()}, {"pairs", pairs}};
}

inline json pair_report(const HyperplaneSet& H, const CrossingGraph& G, int i, int j) {
    auto c = H.classify_pair(i, j);
    json out{{"ids", {i, j}},
             {"class", pair_class_name(c.cls)},
             {"crossing_distance", crossing_distance_json(G.distance(i, j))}};
    if (c.cls != PairClass::equal && c.cls != PairClass::transverse)
        out["disjoint_sides"] = {c.disjoint_side_1, c.disjoint_side_2};
    return out;
}

inline json bridge_report(const CubeComplex& X, const Bridge& b) {
    json gates = json::array();
    for (auto [a, p] : b.minimizing_pairs) gates.push_back(json::array({X.id(a), X.id(p)}));
    json members = json::array();
    for (Vertex v : b.members) members.push_back(X.id(v));
    return json{{"h1", b.h1},
                {"h2", b.h2},
                {"class", pair_class_name(b.cls)},
                {"gates", gates},
                {"width", b.width},
                {"unique", b.unique},
                {"members", members},
                {"boundary_affected", b.boundary_affected}};
}

inline json hyperplane_report(const CubeComplex& X, const HyperplaneSet& H) {
    json hs = json::array();
    for (int i = 0; i < H.count(); ++i) {
        const Hyperplane& h = H[i];
        auto depth = halfspace_depth(H, i);
        hs.push_back(json{{"id", h.id},
                          {"edge_count", static_cast<int>(h.edges.size())},
                          {"first_edge", {X.id(h.edges.front().first), X.id(h.edges.front().second)}},
                          {"side_sizes", {h.side(0).count(), h.side(1).count()}},
                          {"depth", {depth.depth[0], depth.depth[1]}},
                          {"boundary_touching", h.boundary_touching}});
    }
    return json{{"count", H.count()}, {"hyperplanes", hs}};
}

// ── DOT export ──────────────────────────────────────────────────────

inline std::string crossing_graph_dot(const CrossingGraph& G) {
    std::string s = "graph crossing {\n";
    for (int i = 0; i < G.node_count; ++i) s += "  h" + std::to_string(i) + ";\n";
    for (int i = 0; i < G.node_count; ++i)
        for (int j : G.adjacency[i])
            if (i < j) s += "  h" + std::to_string(i) + " -- h" + std::to_string(j) + ";\n";
    s += "}\n";
    return s;
}

inline std::string skeleton_dot(const CubeComplex& X) {
    std::string s = "graph skeleton {\n";
    for (const auto& id : X.ids()) s += "  \"" + id + "\";\n";
    for (auto [u, v] : X.edges()) s += "  \"" + X.id(u) + "\" -- \"" + X.id(v) + "\";\n";
    s += "}\n";
    return s;
}

// ── Deligne sidecar ────────────────────────────────────────────────

inline json deligne_sidecar(const CoxeterGraph& G, const DeligneBall& ball) {
    json cosets = json::object();
    for (const auto& v : ball.vertices) {
        json T = json::array();
        for (int t : v.T) T.push_back(G.name(t));
        cosets[v.id] = json{{"rep", word_to_string(G, v.rep)}, {"T", T}};
    }
    json labels = json::object();
    for (auto [u, v, t] : ball.edges)
        labels[ball.vertices[u].id + " -- " + ball.vertices[v].id] = G.name(t);
    return json{{"cosets", cosets}, {"edge_labels", labels}};
}

}  // namespace cubical
