#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubical/bitset.hpp"
#include "cubical/errors.hpp"

namespace cubical {

using Vertex = int;

/// A finite connected simple graph with a cached hop metric, used as the
/// 1-skeleton of a cube complex. Vertices carry opaque string identifiers;
/// indices follow the lexicographic order of the identifiers, so all derived
/// orderings are deterministic. Instances are immutable after build() and
/// every operation on them is a pure function.
///
/// An optional interior flag per vertex gives window semantics: a finite
/// piece of an infinite complex, with the incomplete rim marked non-interior.
class CubeComplex {
public:
    static CubeComplex build(const std::vector<std::string>& vertex_ids,
                             const std::vector<std::pair<std::string, std::string>>& edge_list,
                             const std::vector<std::string>& interior_ids = {},
                             bool has_window = false) {
        CubeComplex X;
        if (vertex_ids.empty()) fail(Errc::bad_parameters, "empty vertex list");
        X.ids_ = vertex_ids;
        std::sort(X.ids_.begin(), X.ids_.end());
        for (std::size_t i = 1; i < X.ids_.size(); ++i)
            if (X.ids_[i] == X.ids_[i - 1])
                fail(Errc::duplicate_vertex, "vertex '" + X.ids_[i] + "' listed twice");
        for (int i = 0; i < static_cast<int>(X.ids_.size()); ++i) X.index_[X.ids_[i]] = i;

        const int n = X.vertex_count();
        X.adj_.assign(n, {});
        std::vector<std::pair<Vertex, Vertex>> es;
        for (const auto& [a, b] : edge_list) {
            Vertex u = X.index(a);
            Vertex v = X.index(b);
            if (u == v) fail(Errc::self_loop, "edge '" + a + "' -- '" + b + "'");
            es.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        X.edges_ = std::move(es);
        for (auto [u, v] : X.edges_) {
            X.adj_[u].push_back(v);
            X.adj_[v].push_back(u);
        }
        for (auto& nb : X.adj_) std::sort(nb.begin(), nb.end());

        X.has_window_ = has_window || !interior_ids.empty();
        if (X.has_window_) {
            X.interior_.assign(n, 0);
            for (const auto& id : interior_ids) X.interior_[X.index(id)] = 1;
        }

        X.compute_metric();
        return X;
    }

    int vertex_count() const { return static_cast<int>(ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& id(Vertex v) const { return ids_[v]; }
    const std::vector<std::string>& ids() const { return ids_; }

    Vertex index(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) fail(Errc::unknown_endpoint, "no vertex '" + id + "'");
        return it->second;
    }
    std::optional<Vertex> find(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    bool adjacent(Vertex u, Vertex v) const {
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int distance(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * vertex_count() + v]; }

    int diameter() const {
        int d = 0;
        for (std::uint16_t x : dist_) d = std::max(d, static_cast<int>(x));
        return d;
    }

    bool has_window() const { return has_window_; }
    bool is_interior(Vertex v) const { return !has_window_ || interior_[v]; }

    std::vector<std::string> interior_ids() const {
        std::vector<std::string> out;
        if (!has_window_) return out;
        for (int v = 0; v < vertex_count(); ++v)
            if (interior_[v]) out.push_back(ids_[v]);
        return out;
    }

private:
    void compute_metric() {
        const int n = vertex_count();
        constexpr std::uint16_t unreached = 0xFFFF;
        dist_.assign(static_cast<std::size_t>(n) * n, unreached);
        std::vector<Vertex> queue(n);
        for (Vertex s = 0; s < n; ++s) {
            std::uint16_t* row = dist_.data() + static_cast<std::size_t>(s) * n;
            int head = 0, tail = 0;
            row[s] = 0;
            queue[tail++] = s;
            while (head < tail) {
                Vertex u = queue[head++];
                for (Vertex w : adj_[u])
                    if (row[w] == unreached) {
                        row[w] = static_cast<std::uint16_t>(row[u] + 1);
                        queue[tail++] = w;
                    }
            }
            if (tail != n) fail(Errc::disconnected, "graph is not connected");
        }
    }

    std::vector<std::string> ids_;
    std::map<std::string, Vertex> index_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::uint16_t> dist_;
    std::vector<std::uint8_t> interior_;
    bool has_window_ = false;
};

// ── Intervals and convexity ─────────────────────────────────────────

/// I(x,y) = { z : d(x,z) + d(z,y) = d(x,y) }, the union of all geodesics.
struct Interval {
    Vertex source = -1;
    Vertex target = -1;
    std::vector<Vertex> members;  // sorted
    bool boundary_affected = false;
};

inline Bitset interval_bitset(const CubeComplex& X, Vertex x, Vertex y) {
    const int n = X.vertex_count();
    Bitset b(n);
    const int d = X.distance(x, y);
    for (Vertex z = 0; z < n; ++z)
        if (X.distance(x, z) + X.distance(z, y) == d) b.set(z);
    return b;
}

inline Interval interval(const CubeComplex& X, Vertex x, Vertex y) {
    Interval I;
    I.source = x;
    I.target = y;
    const int d = X.distance(x, y);
    for (Vertex z = 0; z < X.vertex_count(); ++z)
        if (X.distance(x, z) + X.distance(z, y) == d) {
            I.members.push_back(z);
            if (!X.is_interior(z)) I.boundary_affected = true;
        }
    return I;
}

inline bool is_convex(const CubeComplex& X, const std::vector<Vertex>& S) {
    if (S.empty()) fail(Errc::bad_parameters, "convexity of the empty set");
    const int n = X.vertex_count();
    Bitset inS(n);
    for (Vertex v : S) inS.set(v);
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            const Vertex x = S[i], y = S[j];
            const int d = X.distance(x, y);
            for (Vertex z = 0; z < n; ++z)
                if (!inS.test(z) && X.distance(x, z) + X.distance(z, y) == d) return false;
        }
    return true;
}

// ── Medians ─────────────────────────────────────────────────────────

inline std::vector<Vertex> medians_of_triple(const CubeComplex& X, Vertex x, Vertex y, Vertex z) {
    std::vector<Vertex> out;
    const int dxy = X.distance(x, y), dyz = X.distance(y, z), dxz = X.distance(x, z);
    for (Vertex m = 0; m < X.vertex_count(); ++m) {
        if (X.distance(x, m) + X.distance(m, y) != dxy) continue;
        if (X.distance(y, m) + X.distance(m, z) != dyz) continue;
        if (X.distance(x, m) + X.distance(m, z) != dxz) continue;
        out.push_back(m);
    }
    return out;
}

/// The unique vertex lying on geodesics between each pair of {x,y,z}.
/// Throws NotMedian when the triple has zero or several medians, which
/// signals a complex that was never validated as a median graph.
inline Vertex median(const CubeComplex& X, Vertex x, Vertex y, Vertex z) {
    auto ms = medians_of_triple(X, x, y, z);
    if (ms.size() != 1)
        fail(Errc::not_median, "triple (" + X.id(x) + ", " + X.id(y) + ", " + X.id(z) + ") has " +
                                   std::to_string(ms.size()) + " medians");
    return ms[0];
}

struct MedianCheck {
    bool ok = true;
    std::array<Vertex, 3> witness{-1, -1, -1};     // first failing triple when !ok
    std::vector<Vertex> witness_medians;           // its medians (empty or >= 2)
};

/// Exhaustive O(|V|^3) validation that every vertex triple has exactly one
/// median; this is the gate for treating X as the skeleton of a CAT(0) cube
/// complex. With `interior_triples_only`, triples are restricted to interior
/// vertices (median candidates still range over the whole window), which is
/// the meaningful check for truncated windows of infinite complexes.
inline MedianCheck is_median_graph(const CubeComplex& X, bool interior_triples_only = false) {
    const int n = X.vertex_count();
    const int W = (n + 63) / 64;
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (pairs * W * 8 > (std::size_t{2} << 30))
        fail(Errc::bad_parameters, "complex too large for exhaustive median validation");

    // Interval membership bitsets for every unordered pair, packed flat.
    std::vector<std::uint64_t> I(pairs * W, 0);
    auto off = [&](int a, int b) {  // requires a < b
        return (static_cast<std::size_t>(b) * (b - 1) / 2 + a) * W;
    };
    for (int y = 1; y < n; ++y)
        for (int x = 0; x < y; ++x) {
            std::uint64_t* row = I.data() + off(x, y);
            const int d = X.distance(x, y);
            for (int z = 0; z < n; ++z)
                if (X.distance(x, z) + X.distance(z, y) == d) row[z >> 6] |= std::uint64_t{1} << (z & 63);
        }

    MedianCheck res;
    for (int x = 0; x < n; ++x) {
        if (interior_triples_only && !X.is_interior(x)) continue;
        for (int y = x; y < n; ++y) {
            if (interior_triples_only && !X.is_interior(y)) continue;
            const std::uint64_t* ixy = (x < y) ? I.data() + off(x, y) : nullptr;
            for (int z = y; z < n; ++z) {
                if (interior_triples_only && !X.is_interior(z)) continue;
                // Degenerate triples always have the repeated vertex as median.
                if (x == y || y == z) continue;
                const std::uint64_t* ixz = I.data() + off(x, z);
                const std::uint64_t* iyz = I.data() + off(y, z);
                int cnt = 0;
                for (int w = 0; w < W; ++w) cnt += std::popcount(ixy[w] & ixz[w] & iyz[w]);
                if (cnt != 1) {
                    res.ok = false;
                    res.witness = {x, y, z};
                    res.witness_medians = medians_of_triple(X, x, y, z);
                    return res;
                }
            }
        }
    }
    return res;
}

// ── Geodesic cuts ───────────────────────────────────────────────────

struct GeodesicCut {
    bool cut = false;             // every geodesic from x to y meets S
    bool endpoint_in_cut = false; // informational: x or y itself lies in S
};

/// True iff every geodesic between x and y passes through S. Computed as
/// non-reachability of y from x in the interval DAG (edges oriented by
/// increasing distance from x) after deleting S \ {x,y}.
inline GeodesicCut geodesic_cut(const CubeComplex& X, Vertex x, Vertex y,
                                const std::vector<Vertex>& S) {
    GeodesicCut out;
    const int n = X.vertex_count();
    Bitset blocked(n);
    for (Vertex s : S) {
        blocked.set(s);
        if (s == x || s == y) out.endpoint_in_cut = true;
    }
    if (out.endpoint_in_cut) {
        out.cut = true;
        return out;
    }
    const int d = X.distance(x, y);
    std::vector<Vertex> stack{x};
    Bitset seen(n);
    seen.set(x);
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        if (u == y) {
            out.cut = false;
            return out;
        }
        const int du = X.distance(x, u);
        for (Vertex w : X.neighbors(u)) {
            if (seen.test(w) || blocked.test(w)) continue;
            if (X.distance(x, w) != du + 1) continue;
            if (X.distance(x, w) + X.distance(w, y) != d) continue;
            seen.set(w);
            stack.push_back(w);
        }
    }
    out.cut = true;
    return out;
}

// ── Geodesic extension ──────────────────────────────────────────────

/// Given a geodesic path (as a vertex sequence), returns a vertex w adjacent
/// to the endpoint such that path+w is again geodesic, or nullopt when the
/// path cannot be extended inside X. Smallest identifier wins ties.
inline std::optional<Vertex> extend_geodesic_step(const CubeComplex& X,
                                                  const std::vector<Vertex>& path) {
    if (path.empty()) fail(Errc::not_geodesic, "empty path");
    const Vertex x = path.front();
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!X.adjacent(path[i], path[i + 1]))
            fail(Errc::not_geodesic, "consecutive vertices not adjacent");
    for (std::size_t i = 0; i < path.size(); ++i)
        if (X.distance(x, path[i]) != static_cast<int>(i))
            fail(Errc::not_geodesic, "path is not a geodesic");
    const Vertex last = path.back();
    const int len = static_cast<int>(path.size()) - 1;
    for (Vertex w : X.neighbors(last))
        if (X.distance(x, w) == len + 1) return w;
    return std::nullopt;
}

// ── Vertex links ────────────────────────────────────────────────────

/// The link of v as a graph: one node per edge at v, one link edge per
/// square corner at v. `is_join` is true iff the complement of the link's
/// 1-skeleton is disconnected, the combinatorial reducibility test for
/// the local structure at v.
struct VertexLink {
    Vertex center = -1;
    std::vector<Vertex> nodes;                      // neighbors of v, sorted
    std::vector<std::pair<int, int>> link_edges;    // indices into nodes
    bool is_join = false;
};

inline VertexLink vertex_link(const CubeComplex& X, Vertex v) {
    VertexLink L;
    L.center = v;
    L.nodes = X.neighbors(v);
    const int k = static_cast<int>(L.nodes.size());
    std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const Vertex a = L.nodes[i], b = L.nodes[j];
            // A square corner at v: a common neighbor w of a and b with
            // d(v,w) = 2 completing the 4-cycle v-a-w-b.
            bool corner = false;
            for (Vertex w : X.neighbors(a)) {
                if (w == v || X.distance(v, w) != 2) continue;
                if (X.adjacent(w, b)) {
                    corner = true;
                    break;
                }
            }
            if (corner) {
                L.link_edges.emplace_back(i, j);
                adj[i][j] = adj[j][i] = true;
            }
        }
    // Join test: complement graph of the link connected?
    if (k >= 2) {
        std::vector<int> comp(k, -1);
        std::vector<int> stack{0};
        comp[0] = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w = 0; w < k; ++w)
                if (comp[w] < 0 && w != u && !adj[u][w]) {
                    comp[w] = 0;
                    stack.push_back(w);
                }
        }
        L.is_join = std::any_of(comp.begin(), comp.end(), [](int c) { return c < 0; });
    }
    return L;
}

}  // namespace cubical
