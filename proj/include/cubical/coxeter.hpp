#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cubical/errors.hpp"

namespace cubical {

/// A Coxeter graph: finite simple graph with integer edge labels m >= 2;
/// absent edges mean m = infinity. Defines an Artin group A and the Coxeter
/// quotient W.
class CoxeterGraph {
public:
    static constexpr int kInfinity = 0;  // label value for "no edge"

    static CoxeterGraph build(const std::vector<std::string>& generators,
                              const std::vector<std::tuple<std::string, std::string, int>>& edges) {
        CoxeterGraph G;
        if (generators.empty()) fail(Errc::bad_parameters, "empty generator list");
        G.names_ = generators;
        std::sort(G.names_.begin(), G.names_.end());
        for (std::size_t i = 1; i < G.names_.size(); ++i)
            if (G.names_[i] == G.names_[i - 1])
                fail(Errc::duplicate_vertex, "generator '" + G.names_[i] + "' listed twice");
        for (int i = 0; i < static_cast<int>(G.names_.size()); ++i) G.index_[G.names_[i]] = i;
        for (const auto& [a, b, m] : edges) {
            int u = G.index(a), v = G.index(b);
            if (u == v) fail(Errc::self_loop, "loop at generator '" + a + "'");
            if (m < 2) fail(Errc::bad_parameters, "edge label must be at least 2");
            auto [it, fresh] = G.labels_.emplace(std::make_pair(std::min(u, v), std::max(u, v)), m);
            if (!fresh && it->second != m)
                fail(Errc::bad_parameters, "conflicting labels on edge " + a + "-" + b);
        }
        return G;
    }

    int count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    int index(const std::string& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) fail(Errc::unknown_generator, "no generator '" + s + "'");
        return it->second;
    }

    /// m(s,t); kInfinity when s and t are not joined by an edge.
    int label(int i, int j) const {
        auto it = labels_.find(std::make_pair(std::min(i, j), std::max(i, j)));
        return it == labels_.end() ? kInfinity : it->second;
    }
    bool adjacent(int i, int j) const { return i != j && label(i, j) != kInfinity; }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (const auto& [e, m] : labels_) out.push_back(e);
        return out;
    }

    /// lk(s): the neighbours of s, which also label the stabiliser of the
    /// hyperplane dual to the edge {1}-A_s in the Deligne complex.
    std::vector<int> link(int s) const {
        std::vector<int> out;
        for (int t = 0; t < count(); ++t)
            if (adjacent(s, t)) out.push_back(t);
        return out;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::map<std::pair<int, int>, int> labels_;
};

/// Cosine matrix of the standard bilinear form on T: B_ss = 1,
/// B_st = -cos(pi/m(s,t)), with m = infinity contributing -1.
inline std::vector<std::vector<double>> cosine_matrix(const CoxeterGraph& G,
                                                      const std::vector<int>& T) {
    if (T.empty()) fail(Errc::bad_parameters, "empty generating set");
    const int n = static_cast<int>(T.size());
    std::vector<std::vector<double>> B(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                B[i][j] = 1.0;
                continue;
            }
            int m = G.label(T[i], T[j]);
            B[i][j] = (m == CoxeterGraph::kInfinity) ? -1.0 : -std::cos(std::numbers::pi / m);
        }
    return B;
}

/// W_T finite iff the cosine form is positive definite; decided through the
/// leading principal minors with a fixed 1e-9 tolerance. T = empty is the
/// trivial group, hence finite.
inline bool is_finite_type(const CoxeterGraph& G, const std::vector<int>& T) {
    if (T.empty()) return true;
    auto B = cosine_matrix(G, T);
    const int n = static_cast<int>(T.size());
    constexpr double tol = 1e-9;
    // Gaussian elimination without pivoting: the k-th pivot is the ratio of
    // consecutive leading minors, so all minors positive iff all pivots are.
    for (int k = 0; k < n; ++k) {
        if (B[k][k] <= tol) return false;
        for (int i = k + 1; i < n; ++i) {
            double f = B[i][k] / B[k][k];
            for (int j = k; j < n; ++j) B[i][j] -= f * B[k][j];
        }
    }
    return true;
}

struct FcReport {
    bool fc = false;
    std::vector<int> failing_clique;  // smallest clique that is not finite type
};

/// FC type: every complete subgraph spans a finite-type standard subgroup.
/// Cliques are checked in ascending size so the witness is minimal.
inline FcReport is_fc_type(const CoxeterGraph& G) {
    const int n = G.count();
    std::vector<std::vector<int>> cliques;
    std::vector<int> cur;
    std::function<void(int)> grow = [&](int start) {
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : cur)
                if (!G.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(v);
            cliques.push_back(cur);
            grow(v + 1);
            cur.pop_back();
        }
    };
    grow(0);
    std::stable_sort(cliques.begin(), cliques.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    FcReport rep;
    for (const auto& T : cliques)
        if (!is_finite_type(G, T)) {
            rep.failing_clique = T;
            return rep;
        }
    rep.fc = true;
    return rep;
}

/// All subsets T for which A_T is of finite type (the spherical subsets):
/// within an FC graph these are exactly the cliques, plus the empty set.
inline std::vector<std::vector<int>> spherical_subsets(const CoxeterGraph& G) {
    const int n = G.count();
    std::vector<std::vector<int>> out{{}};
    std::vector<int> cur;
    std::function<void(int)> grow = [&](int start) {
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : cur)
                if (!G.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(v);
            if (is_finite_type(G, cur)) {
                out.push_back(cur);
                grow(v + 1);
            }
            cur.pop_back();
        }
    };
    grow(0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

/// Graph diameter of the Coxeter graph; nullopt when disconnected.
inline std::optional<int> coxeter_diameter(const CoxeterGraph& G) {
    const int n = G.count();
    int diam = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> d(n, -1);
        std::vector<int> queue{s};
        d[s] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (int w = 0; w < n; ++w)
                if (G.adjacent(u, w) && d[w] < 0) {
                    d[w] = d[u] + 1;
                    queue.push_back(w);
                }
        }
        for (int w = 0; w < n; ++w) {
            if (d[w] < 0) return std::nullopt;
            diam = std::max(diam, d[w]);
        }
    }
    return diam;
}

/// A pair of generators with disjoint links at graph distance >= 3: the
/// dual hyperplanes in the Deligne complex then have stabiliser labels
/// intersecting trivially. Lexicographically first such pair.
inline std::optional<std::pair<int, int>> ruth_witness(const CoxeterGraph& G) {
    const int n = G.count();
    auto dist = [&](int s, int t) -> int {  // -1 = unreachable
        std::vector<int> d(n, -1);
        std::vector<int> queue{s};
        d[s] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (int w = 0; w < n; ++w)
                if (G.adjacent(u, w) && d[w] < 0) {
                    d[w] = d[u] + 1;
                    queue.push_back(w);
                }
        }
        return d[t];
    };
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            auto ls = G.link(s), lt = G.link(t);
            std::vector<int> common;
            std::set_intersection(ls.begin(), ls.end(), lt.begin(), lt.end(),
                                  std::back_inserter(common));
            if (!common.empty()) continue;
            int d = dist(s, t);
            if (d < 0 || d >= 3) return std::make_pair(s, t);
        }
    return std::nullopt;
}

/// Stabiliser label of the hyperplane dual to generator s: its link in the
/// Coxeter graph.
inline std::vector<int> hyperplane_stabilizer_label(const CoxeterGraph& G, const std::string& s) {
    return G.link(G.index(s));
}

}  // namespace cubical
