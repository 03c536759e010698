#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cubical/bitset.hpp"
#include "cubical/complex.hpp"
#include "cubical/errors.hpp"

namespace cubical {

/// A hyperplane: one Theta-class of edges together with the two vertex
/// halfspaces its removal leaves. side(0) is the side containing the
/// lexicographically least vertex of the complex.
struct Hyperplane {
    int id = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;  // oriented (side-0 endpoint, side-1 endpoint)
    Bitset sides[2];
    Bitset carrier;          // all class endpoints
    bool boundary_touching = false;  // some endpoint is on the window rim

    const Bitset& side(int s) const { return sides[s]; }
};

enum class PairClass { equal, transverse, parallel, strongly_separated, uber_separated };

inline const char* pair_class_name(PairClass c) {
    switch (c) {
        case PairClass::equal: return "equal";
        case PairClass::transverse: return "transverse";
        case PairClass::parallel: return "parallel";
        case PairClass::strongly_separated: return "strongly_separated";
        case PairClass::uber_separated: return "uber_separated";
    }
    return "?";
}

/// classify_pair result. For non-transverse distinct pairs exactly one of
/// the four side intersections is empty; (disjoint_side_1, disjoint_side_2)
/// names it, i.e. side(disjoint_side_1) of h1 and side(disjoint_side_2) of
/// h2 are the two halfspaces facing away from each other, and
/// side_{d1}(h1) is contained in side_{1-d2}(h2).
struct PairClassification {
    PairClass cls = PairClass::equal;
    int disjoint_side_1 = -1;
    int disjoint_side_2 = -1;
};

struct CrossingGraph {
    static constexpr std::uint16_t kInf = 0xFFFF;
    int node_count = 0;
    std::vector<std::vector<int>> adjacency;     // sorted neighbor lists
    std::vector<std::uint16_t> dist;             // flattened node_count^2, kInf = unreachable

    std::uint16_t distance(int i, int j) const {
        return dist[static_cast<std::size_t>(i) * node_count + j];
    }
};

/// Extracts all hyperplanes of a validated complex and answers pairwise
/// queries (transversality, separation classes, crossing-graph distances).
/// The complex must outlive this object.
class HyperplaneSet {
public:
    explicit HyperplaneSet(const CubeComplex& X) : X_(&X) {
        const auto& es = X.edges();
        const int m = static_cast<int>(es.size());

        // Theta relation, pairwise, then components; the Djokovic-Winkler
        // relation is transitive exactly on partial cubes, so a violation
        // inside a component is evidence of non-median input.
        std::vector<int> parent(m);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (theta_related(X, es[i], es[j])) parent[find(i)] = find(j);

        // Deterministic ids: classes ordered by their smallest edge.
        std::vector<int> roots;
        for (int i = 0; i < m; ++i)
            if (find(i) == i) roots.push_back(i);
        std::vector<int> first_edge(roots.size(), m);
        std::vector<int> root_index(m, -1);
        for (std::size_t r = 0; r < roots.size(); ++r) root_index[roots[r]] = static_cast<int>(r);
        for (int i = 0; i < m; ++i) {
            int r = root_index[find(i)];
            first_edge[r] = std::min(first_edge[r], i);
        }
        std::vector<std::size_t> order(roots.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return first_edge[a] < first_edge[b]; });

        hyperplanes_.resize(roots.size());
        std::vector<int> id_of_root(m, -1);
        for (std::size_t k = 0; k < order.size(); ++k) id_of_root[roots[order[k]]] = static_cast<int>(k);

        edge_class_.assign(m, -1);
        for (int i = 0; i < m; ++i) edge_class_[i] = id_of_root[find(i)];

        const int n = X.vertex_count();
        for (std::size_t h = 0; h < hyperplanes_.size(); ++h) {
            Hyperplane& H = hyperplanes_[h];
            H.id = static_cast<int>(h);
            H.carrier = Bitset(n);
        }
        for (int i = 0; i < m; ++i) {
            Hyperplane& H = hyperplanes_[edge_class_[i]];
            H.edges.push_back(es[i]);
            H.carrier.set(es[i].first);
            H.carrier.set(es[i].second);
        }

        // Transitivity audit inside each class.
        for (const Hyperplane& H : hyperplanes_)
            for (std::size_t i = 0; i < H.edges.size(); ++i)
                for (std::size_t j = i + 1; j < H.edges.size(); ++j)
                    if (!theta_related(X, H.edges[i], H.edges[j]))
                        fail(Errc::theta_not_transitive,
                             "edges (" + X.id(H.edges[i].first) + "," + X.id(H.edges[i].second) +
                                 ") and (" + X.id(H.edges[j].first) + "," + X.id(H.edges[j].second) +
                                 ") are in one Theta component but not directly related");

        compute_sides();
        compute_transversality();
    }

    const CubeComplex& complex() const { return *X_; }
    int count() const { return static_cast<int>(hyperplanes_.size()); }
    const Hyperplane& operator[](int i) const { return hyperplanes_[i]; }

    int class_of_edge(Vertex u, Vertex v) const {
        auto e = std::make_pair(std::min(u, v), std::max(u, v));
        const auto& es = X_->edges();
        auto it = std::lower_bound(es.begin(), es.end(), e);
        if (it == es.end() || *it != e) fail(Errc::unknown_endpoint, "no such edge");
        return edge_class_[it - es.begin()];
    }

    bool transverse(int i, int j) const { return i != j && cross_rows_[i].test(j); }
    const Bitset& crossing_adjacency(int i) const { return cross_rows_[i]; }

    void check_id(int i) const {
        if (i < 0 || i >= count())
            fail(Errc::bad_parameters, "hyperplane id " + std::to_string(i) + " out of range");
    }

    PairClassification classify_pair(int i, int j) const {
        check_id(i);
        check_id(j);
        PairClassification out;
        if (i == j) {
            out.cls = PairClass::equal;
            return out;
        }
        if (transverse(i, j)) {
            out.cls = PairClass::transverse;
            return out;
        }
        // Exactly one of the four side intersections is empty for a
        // distinct parallel pair.
        for (int a = 0; a < 2 && out.disjoint_side_1 < 0; ++a)
            for (int b = 0; b < 2; ++b)
                if (!hyperplanes_[i].side(a).intersects(hyperplanes_[j].side(b))) {
                    out.disjoint_side_1 = a;
                    out.disjoint_side_2 = b;
                    break;
                }
        out.cls = PairClass::parallel;
        if (cross_rows_[i].intersects(cross_rows_[j])) return out;  // common transversal
        out.cls = PairClass::strongly_separated;
        // Uber: no transverse pair (k1, k2) with k1 crossing h_i, k2 crossing h_j.
        bool uber = true;
        cross_rows_[i].for_each([&](int k1) {
            if (uber && cross_rows_[k1].intersects(cross_rows_[j])) uber = false;
        });
        if (uber) out.cls = PairClass::uber_separated;
        return out;
    }

    CrossingGraph crossing_graph() const {
        CrossingGraph G;
        const int h = count();
        G.node_count = h;
        G.adjacency.resize(h);
        for (int i = 0; i < h; ++i) G.adjacency[i] = cross_rows_[i].to_vector();
        G.dist.assign(static_cast<std::size_t>(h) * h, CrossingGraph::kInf);
        std::vector<int> queue(h);
        for (int s = 0; s < h; ++s) {
            std::uint16_t* row = G.dist.data() + static_cast<std::size_t>(s) * h;
            int head = 0, tail = 0;
            row[s] = 0;
            queue[tail++] = s;
            while (head < tail) {
                int u = queue[head++];
                for (int w : G.adjacency[u])
                    if (row[w] == CrossingGraph::kInf) {
                        row[w] = static_cast<std::uint16_t>(row[u] + 1);
                        queue[tail++] = w;
                    }
            }
        }
        return G;
    }

private:
    static bool theta_related(const CubeComplex& X, std::pair<Vertex, Vertex> e,
                              std::pair<Vertex, Vertex> f) {
        return X.distance(e.first, f.first) + X.distance(e.second, f.second) !=
               X.distance(e.first, f.second) + X.distance(e.second, f.first);
    }

    void compute_sides() {
        const CubeComplex& X = *X_;
        const int n = X.vertex_count();
        std::vector<Vertex> stack;
        for (Hyperplane& H : hyperplanes_) {
            const std::vector<std::pair<Vertex, Vertex>> cutset = H.edges;  // sorted (min,max)
            auto is_class_edge = [&](Vertex a, Vertex b) {
                return std::binary_search(cutset.begin(), cutset.end(),
                                          std::make_pair(std::min(a, b), std::max(a, b)));
            };
            auto component_from = [&](Vertex start, const Bitset* inside) {
                Bitset seen(n);
                seen.set(start);
                stack.assign(1, start);
                while (!stack.empty()) {
                    Vertex u = stack.back();
                    stack.pop_back();
                    for (Vertex w : X.neighbors(u)) {
                        if (seen.test(w) || is_class_edge(u, w)) continue;
                        if (inside && !inside->test(w)) continue;
                        seen.set(w);
                        stack.push_back(w);
                    }
                }
                return seen;
            };

            H.sides[0] = component_from(0, nullptr);
            H.sides[1] = Bitset(n);
            for (Vertex v = 0; v < n; ++v)
                if (!H.sides[0].test(v)) H.sides[1].set(v);
            if (H.sides[1].none())
                fail(Errc::theta_not_transitive,
                     "removing Theta class " + std::to_string(H.id) + " does not disconnect");
            Vertex s1 = H.sides[1].next_set(0);
            if (component_from(s1, &H.sides[1]).count() != H.sides[1].count())
                fail(Errc::theta_not_transitive,
                     "removing Theta class " + std::to_string(H.id) +
                         " leaves more than two components");
            for (auto& [u, v] : H.edges) {
                if (H.sides[0].test(u) == H.sides[0].test(v))
                    fail(Errc::theta_not_transitive, "class edge does not straddle its hyperplane");
                if (!H.sides[0].test(u)) std::swap(u, v);  // orient (side-0, side-1)
            }
            std::sort(H.edges.begin(), H.edges.end());
            H.carrier.for_each([&](int v) {
                if (!X.is_interior(v)) H.boundary_touching = true;
            });
        }
    }

    void compute_transversality() {
        const int h = count();
        cross_rows_.assign(h, Bitset(h));
        for (int i = 0; i < h; ++i)
            for (int j = i + 1; j < h; ++j) {
                const Hyperplane &A = hyperplanes_[i], &B = hyperplanes_[j];
                bool t = A.side(0).intersects(B.side(0)) && A.side(0).intersects(B.side(1)) &&
                         A.side(1).intersects(B.side(0)) && A.side(1).intersects(B.side(1));
                if (t) {
                    cross_rows_[i].set(j);
                    cross_rows_[j].set(i);
                }
            }
    }

    const CubeComplex* X_;
    std::vector<Hyperplane> hyperplanes_;
    std::vector<int> edge_class_;     // per edge index in X.edges()
    std::vector<Bitset> cross_rows_;  // transversality adjacency
};

// ── Irreducibility ──────────────────────────────────────────────────

struct IrreducibilityReport {
    bool irreducible = false;
    // when reducible: the two families whose crossing graph forms a join
    std::vector<int> family_1, family_2;
};

/// Reducible iff the crossing graph is a join, i.e. its complement is
/// disconnected; the complement components give the product factors.
inline IrreducibilityReport is_irreducible(const HyperplaneSet& H) {
    const int h = H.count();
    if (h < 2) fail(Errc::too_few_hyperplanes, "need at least two hyperplanes");
    IrreducibilityReport out;
    std::vector<int> comp(h, -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        const Bitset& row = H.crossing_adjacency(u);
        for (int w = 0; w < h; ++w)
            if (comp[w] < 0 && w != u && !row.test(w)) {
                comp[w] = 0;
                stack.push_back(w);
            }
    }
    for (int w = 0; w < h; ++w)
        if (comp[w] < 0)
            out.family_2.push_back(w);
        else
            out.family_1.push_back(w);
    out.irreducible = out.family_2.empty();
    if (out.irreducible) {
        out.family_1.clear();
    }
    return out;
}

// ── Sectors ─────────────────────────────────────────────────────────

/// The 2^n regions cut out by a pairwise-crossing family; a hyperplane is
/// contained in a sector when its whole carrier lies in that sector's
/// vertex set.
struct SectorAssignment {
    std::vector<int> family;                             // hyperplane ids, as given
    std::vector<std::vector<Vertex>> sector_vertices;    // indexed by signature mask
    std::vector<std::vector<int>> contained_hyperplanes; // indexed by signature mask
    bool boundary_affected = false;

    int sector_count() const { return static_cast<int>(sector_vertices.size()); }
};

inline SectorAssignment sectors(const HyperplaneSet& H, const std::vector<int>& family) {
    const CubeComplex& X = H.complex();
    if (family.empty() || family.size() > 16)
        fail(Errc::bad_parameters, "sector family size out of range [1,16]");
    for (int f : family) H.check_id(f);
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!H.transverse(family[i], family[j]))
                fail(Errc::not_pairwise_crossing,
                     "hyperplanes " + std::to_string(family[i]) + " and " +
                         std::to_string(family[j]) + " do not cross");

    SectorAssignment out;
    out.family = family;
    const int n = static_cast<int>(family.size());
    out.sector_vertices.assign(std::size_t{1} << n, {});
    out.contained_hyperplanes.assign(std::size_t{1} << n, {});

    std::vector<std::uint32_t> sig(X.vertex_count(), 0);
    for (int t = 0; t < n; ++t) {
        const Bitset& side1 = H[family[t]].side(1);
        side1.for_each([&](int v) { sig[v] |= (1u << t); });
    }
    for (Vertex v = 0; v < X.vertex_count(); ++v) {
        out.sector_vertices[sig[v]].push_back(v);
        if (!X.is_interior(v)) out.boundary_affected = true;
    }

    for (int k = 0; k < H.count(); ++k) {
        if (std::find(family.begin(), family.end(), k) != family.end()) continue;
        bool crosses = false;
        for (int f : family)
            if (H.transverse(k, f)) {
                crosses = true;
                break;
            }
        if (crosses) continue;
        // carrier lies in a single sector
        int v0 = H[k].carrier.next_set(0);
        out.contained_hyperplanes[sig[v0]].push_back(k);
    }
    return out;
}

// ── Halfspace depth (essentiality proxy) ────────────────────────────

/// Depth of a side: the largest number of hops any of its vertices needs to
/// reach the other side, i.e. max over the side of the distance to the
/// nearest class endpoint across the hyperplane.
struct HalfspaceDepth {
    int depth[2] = {0, 0};
    bool boundary_affected = false;
};

inline HalfspaceDepth halfspace_depth(const HyperplaneSet& H, int h) {
    H.check_id(h);
    const CubeComplex& X = H.complex();
    const Hyperplane& hp = H[h];
    HalfspaceDepth out;
    out.boundary_affected = X.has_window();
    for (int s = 0; s < 2; ++s) {
        int depth = 0;
        hp.side(s).for_each([&](int v) {
            int best = -1;
            for (auto [a, b] : hp.edges) {
                Vertex far = (s == 0) ? b : a;  // endpoint across the wall
                int d = X.distance(v, far);
                if (best < 0 || d < best) best = d;
            }
            depth = std::max(depth, best);
        });
        out.depth[s] = depth;
    }
    return out;
}

}  // namespace cubical
