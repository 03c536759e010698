#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cubical/complex.hpp"
#include "cubical/coxeter.hpp"
#include "cubical/errors.hpp"

namespace cubical {

/// Words over the Artin generators: letter +-(i+1) is generator i or its
/// inverse.
using Word = std::vector<int>;

inline Word inverse_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

inline Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Reduction procedures for one Artin group: canonical forms for elements
/// and minimal canonical representatives for cosets of standard subgroups.
/// Canonical forms are idempotent and equal elements get equal forms; that
/// is what the Deligne ball construction relies on.
class NormalFormOracle {
public:
    virtual ~NormalFormOracle() = default;
    virtual Word normal_form(Word w) const = 0;
    /// Canonical minimal-length representative of the coset w * A_T.
    virtual Word coset_representative(Word w, const std::vector<int>& T) const = 0;

    /// Same coset test: w1^-1 w2 lies in A_T iff its form only uses T.
    bool same_coset(const Word& a, const Word& b, const std::vector<int>& T) const {
        Word d = normal_form(concat(inverse_word(a), b));
        for (int x : d)
            if (!std::binary_search(T.begin(), T.end(), std::abs(x) - 1)) return false;
        return true;
    }
};

/// Free groups (edgeless Coxeter graphs): plain free reduction.
class FreeOracle : public NormalFormOracle {
public:
    Word normal_form(Word w) const override {
        Word out;
        for (int x : w) {
            if (!out.empty() && out.back() == -x)
                out.pop_back();
            else
                out.push_back(x);
        }
        return out;
    }

    Word coset_representative(Word w, const std::vector<int>& T) const override {
        Word out = normal_form(std::move(w));
        while (!out.empty() && std::binary_search(T.begin(), T.end(), std::abs(out.back()) - 1))
            out.pop_back();
        return out;
    }
};

/// Right-angled Artin groups (every label 2): shortlex forms through
/// adjacent cancellation and order-restoring swaps of commuting letters.
class RightAngledOracle : public NormalFormOracle {
public:
    explicit RightAngledOracle(const CoxeterGraph& G) : n_(G.count()) {
        commute_.assign(n_, std::vector<bool>(n_, false));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                int m = G.label(i, j);
                if (i != j && m != CoxeterGraph::kInfinity) {
                    if (m != 2)
                        fail(Errc::no_oracle, "right-angled oracle needs all labels equal to 2");
                    commute_[i][j] = true;
                }
            }
    }

    Word normal_form(Word w) const override {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i + 1 < w.size();) {
                if (w[i] == -w[i + 1]) {
                    w.erase(w.begin() + i, w.begin() + i + 2);
                    changed = true;
                    if (i > 0) --i;
                    continue;
                }
                int a = std::abs(w[i]) - 1, b = std::abs(w[i + 1]) - 1;
                if (a > b && commute_[a][b]) {
                    std::swap(w[i], w[i + 1]);
                    changed = true;
                }
                ++i;
            }
        }
        return w;
    }

    Word coset_representative(Word w, const std::vector<int>& T) const override {
        w = normal_form(std::move(w));
        bool stripped = true;
        while (stripped) {
            stripped = false;
            for (int p = static_cast<int>(w.size()) - 1; p >= 0; --p) {
                int g = std::abs(w[p]) - 1;
                if (!std::binary_search(T.begin(), T.end(), g)) continue;
                bool movable = true;
                for (std::size_t q = p + 1; q < w.size(); ++q)
                    if (std::abs(w[q]) - 1 != g && !commute_[g][std::abs(w[q]) - 1]) {
                        movable = false;
                        break;
                    }
                if (!movable) continue;
                w.erase(w.begin() + p);
                w = normal_form(std::move(w));
                stripped = true;
                break;
            }
        }
        return w;
    }

private:
    int n_;
    std::vector<std::vector<bool>> commute_;
};

/// Picks the built-in oracle matching the graph: free when edgeless,
/// right-angled when every label is 2.
inline std::unique_ptr<NormalFormOracle> builtin_oracle(const CoxeterGraph& G) {
    if (G.edge_list().empty()) return std::make_unique<FreeOracle>();
    bool all2 = true;
    for (auto [i, j] : G.edge_list())
        if (G.label(i, j) != 2) all2 = false;
    if (all2) return std::make_unique<RightAngledOracle>(G);
    fail(Errc::no_oracle, "no built-in normal form oracle for this Coxeter graph");
}

/// Finite piece of the Deligne complex: vertices are cosets a*A_T with T
/// spherical and canonical representative of length at most ell; an edge
/// joins a*A_T to a*A_{T+t'} and is labeled by t'. Cosets whose
/// representative has length exactly ell form the window rim.
struct DeligneBall {
    struct Vtx {
        Word rep;
        std::vector<int> T;
        std::string id;
    };
    int radius = 0;
    std::vector<Vtx> vertices;                       // sorted by id (= skeleton order)
    std::vector<std::tuple<int, int, int>> edges;    // (u, v, generator label), u,v into vertices
    CubeComplex skeleton;
};

inline std::string word_to_string(const CoxeterGraph& G, const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ".";
        s += G.name(std::abs(w[i]) - 1);
        if (w[i] < 0) s += "'";
    }
    return s;
}

inline std::string coset_id(const CoxeterGraph& G, const Word& rep, const std::vector<int>& T) {
    std::string s = word_to_string(G, rep) + "|A(";
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (i) s += ",";
        s += G.name(T[i]);
    }
    return s + ")";
}

inline DeligneBall deligne_ball(const CoxeterGraph& G, int ell, const NormalFormOracle& oracle) {
    if (ell < 0) fail(Errc::bad_parameters, "negative radius");
    auto fc = is_fc_type(G);
    if (!fc.fc) fail(Errc::not_fc_type, "Coxeter graph is not of FC type");

    // ball of group elements: breadth-first over canonical forms
    std::set<Word> elements{Word{}};
    std::vector<Word> frontier{Word{}};
    for (int len = 0; len < ell; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (int g = 0; g < G.count(); ++g)
                for (int sgn : {+1, -1}) {
                    Word e = oracle.normal_form(concat(w, {sgn * (g + 1)}));
                    if (static_cast<int>(e.size()) <= ell && !elements.count(e)) {
                        elements.insert(e);
                        next.push_back(e);
                    }
                }
        frontier = std::move(next);
    }

    const auto spherical = spherical_subsets(G);

    std::map<std::pair<Word, std::vector<int>>, int> vertex_index;
    DeligneBall ball;
    ball.radius = ell;
    auto intern = [&](const Word& rep, const std::vector<int>& T) {
        auto key = std::make_pair(rep, T);
        auto it = vertex_index.find(key);
        if (it != vertex_index.end()) return it->second;
        int id = static_cast<int>(ball.vertices.size());
        vertex_index[key] = id;
        ball.vertices.push_back({rep, T, coset_id(G, rep, T)});
        return id;
    };

    for (const Word& a : elements)
        for (const auto& T : spherical) {
            Word rep = oracle.coset_representative(a, T);
            if (static_cast<int>(rep.size()) <= ell) intern(rep, T);
        }

    // edges: from each coset, add one generator to T
    std::set<std::pair<int, int>> seen_edges;
    const std::size_t base_count = ball.vertices.size();
    for (std::size_t u = 0; u < base_count; ++u) {
        const Word rep = ball.vertices[u].rep;
        const std::vector<int> T = ball.vertices[u].T;
        for (int t = 0; t < G.count(); ++t) {
            if (std::binary_search(T.begin(), T.end(), t)) continue;
            std::vector<int> Tp = T;
            Tp.insert(std::lower_bound(Tp.begin(), Tp.end(), t), t);
            if (!std::binary_search(spherical.begin(), spherical.end(), Tp,
                                    [](const auto& a, const auto& b) {
                                        if (a.size() != b.size()) return a.size() < b.size();
                                        return a < b;
                                    }))
                continue;
            Word rp = oracle.coset_representative(rep, Tp);
            int v = intern(rp, Tp);
            int lo = std::min(static_cast<int>(u), v), hi = std::max(static_cast<int>(u), v);
            if (seen_edges.emplace(lo, hi).second) ball.edges.emplace_back(u, v, t);
        }
    }

    // export the skeleton; ids are unique so the complex reorders them
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> es;
    std::vector<std::string> interior;
    for (const auto& v : ball.vertices) {
        ids.push_back(v.id);
        if (static_cast<int>(v.rep.size()) < ell) interior.push_back(v.id);
    }
    for (auto [u, v, t] : ball.edges) es.emplace_back(ball.vertices[u].id, ball.vertices[v].id);
    ball.skeleton = CubeComplex::build(ids, es, interior, /*has_window=*/true);

    // reorder the vertex table to the skeleton's id order
    std::vector<int> perm(ball.vertices.size());
    for (std::size_t i = 0; i < ball.vertices.size(); ++i)
        perm[i] = ball.skeleton.index(ball.vertices[i].id);
    std::vector<DeligneBall::Vtx> sorted_vs(ball.vertices.size());
    for (std::size_t i = 0; i < ball.vertices.size(); ++i)
        sorted_vs[perm[i]] = std::move(ball.vertices[i]);
    ball.vertices = std::move(sorted_vs);
    for (auto& [u, v, t] : ball.edges) {
        u = perm[u];
        v = perm[v];
        if (u > v) std::swap(u, v);
    }
    std::sort(ball.edges.begin(), ball.edges.end());
    return ball;
}

}  // namespace cubical
