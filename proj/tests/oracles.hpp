// Brute-force reference oracles used by the test and acceptance suites.
// These deliberately avoid the library's own computation paths.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cubical/complex.hpp"
#include "cubical/coxeter.hpp"
#include "cubical/errors.hpp"

namespace oracles {

// ── Geodesic enumeration ────────────────────────────────────────────

/// Every geodesic from x to y, as explicit vertex sequences.
inline std::vector<std::vector<cubical::Vertex>> enumerate_geodesics(const cubical::CubeComplex& X,
                                                                     cubical::Vertex x,
                                                                     cubical::Vertex y) {
    std::vector<std::vector<cubical::Vertex>> out;
    std::vector<cubical::Vertex> path{x};
    const int d = X.distance(x, y);
    std::function<void()> dfs = [&]() {
        cubical::Vertex u = path.back();
        if (u == y) {
            out.push_back(path);
            return;
        }
        const int du = X.distance(x, u);
        for (cubical::Vertex w : X.neighbors(u))
            if (X.distance(x, w) == du + 1 && X.distance(x, w) + X.distance(w, y) == d) {
                path.push_back(w);
                dfs();
                path.pop_back();
            }
    };
    dfs();
    return out;
}

/// Reference for geodesic_cut: walk every geodesic and test the hit.
inline bool brute_force_geodesic_cut(const cubical::CubeComplex& X, cubical::Vertex x,
                                     cubical::Vertex y, const std::vector<cubical::Vertex>& S) {
    std::set<cubical::Vertex> cut(S.begin(), S.end());
    for (const auto& g : enumerate_geodesics(X, x, y)) {
        bool hit = false;
        for (cubical::Vertex v : g)
            if (cut.count(v)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

// ── Coxeter group enumeration ───────────────────────────────────────
//
// Exact breadth-first closure of the reflection representation. Matrix
// entries live in Z[phi, sqrt2, sqrt3]: an 8-dimensional ring with basis
// {1, phi} x {1, sqrt2, sqrt3, sqrt6} and integer coordinates, which holds
// every 2cos(pi/m) for m in {2,...,6} and the value 2 for m = infinity.
// The representation is faithful, so distinct matrices are distinct group
// elements; enumeration past the cap (or past the coefficient bound, which
// only unbounded orbits can reach) reports "not finite".

struct RingElem {
    std::array<long long, 8> c{};  // index = f*4 + s, f in {1,phi}, s in {1,v2,v3,v6}

    bool operator==(const RingElem& o) const { return c == o.c; }
    bool operator<(const RingElem& o) const { return c < o.c; }
};

inline RingElem ring_int(long long n) {
    RingElem r;
    r.c[0] = n;
    return r;
}

inline RingElem ring_add(const RingElem& a, const RingElem& b) {
    RingElem r;
    for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

/// s-part multiplication: (index, integer factor) of sqrt-basis products.
inline std::pair<int, long long> sqrt_mul(int a, int b) {
    if (a == 0) return {b, 1};
    if (b == 0) return {a, 1};
    if (a == b) {
        static const long long sq[4] = {1, 2, 3, 6};
        return {0, sq[a]};
    }
    int lo = std::min(a, b), hi = std::max(a, b);
    if (lo == 1 && hi == 2) return {3, 1};  // v2*v3 = v6
    if (lo == 1 && hi == 3) return {2, 2};  // v2*v6 = 2*v3
    return {1, 3};                          // v3*v6 = 3*v2
}

inline bool ring_mul(const RingElem& a, const RingElem& b, RingElem& out) {
    constexpr long long kBound = 1LL << 40;
    out = RingElem{};
    for (int i = 0; i < 8; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < 8; ++j) {
            if (b.c[j] == 0) continue;
            long long prod = a.c[i] * b.c[j];
            auto [s, factor] = sqrt_mul(i & 3, j & 3);
            prod *= factor;
            int f = (i >> 2) + (j >> 2);
            if (f < 2) {
                out.c[(f << 2) | s] += prod;
            } else {  // phi^2 = 1 + phi
                out.c[s] += prod;
                out.c[4 | s] += prod;
            }
        }
    }
    for (long long v : out.c)
        if (v > kBound || v < -kBound) return false;
    return true;
}

struct CoxeterEnumeration {
    bool finite = false;
    long order = 0;  // valid when finite
};

/// Breadth-first closure of the Coxeter group W_T in its reflection
/// representation, up to `cap` elements.
inline CoxeterEnumeration enumerate_coxeter_group(const cubical::CoxeterGraph& G,
                                                  const std::vector<int>& T, long cap) {
    const int n = static_cast<int>(T.size());
    using Matrix = std::vector<RingElem>;  // row-major n x n

    auto two_cos = [&](int m) -> RingElem {
        RingElem r;
        switch (m) {
            case 2: break;                                  // 0
            case 3: r.c[0] = 1; break;                      // 1
            case 4: r.c[1] = 1; break;                      // sqrt2
            case 5: r.c[4] = 1; break;                      // phi = (1+sqrt5)/2
            case 6: r.c[2] = 1; break;                      // sqrt3
            case cubical::CoxeterGraph::kInfinity: r.c[0] = 2; break;
            default:
                cubical::fail(cubical::Errc::bad_parameters,
                              "oracle supports labels 2..6 and infinity");
        }
        return r;
    };

    Matrix identity(n * n);
    for (int i = 0; i < n; ++i) identity[i * n + i] = ring_int(1);

    std::vector<Matrix> gens;
    for (int i = 0; i < n; ++i) {
        Matrix g = identity;
        for (int j = 0; j < n; ++j)
            g[i * n + j] = (i == j) ? ring_int(-1) : two_cos(G.label(T[i], T[j]));
        gens.push_back(std::move(g));
    }

    auto mat_mul = [&](const Matrix& a, const Matrix& b, Matrix& out) -> bool {
        out.assign(n * n, RingElem{});
        RingElem tmp;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const RingElem& aik = a[i * n + k];
                bool zero = true;
                for (long long v : aik.c)
                    if (v) zero = false;
                if (zero) continue;
                for (int j = 0; j < n; ++j) {
                    if (!ring_mul(aik, b[k * n + j], tmp)) return false;
                    out[i * n + j] = ring_add(out[i * n + j], tmp);
                }
            }
        return true;
    };

    std::set<Matrix> seen{identity};
    std::vector<Matrix> frontier{identity};
    while (!frontier.empty()) {
        std::vector<Matrix> next;
        for (const Matrix& m : frontier)
            for (const Matrix& g : gens) {
                Matrix prod;
                if (!mat_mul(g, m, prod)) return {false, 0};  // coefficient blow-up
                if (seen.count(prod)) continue;
                if (static_cast<long>(seen.size()) >= cap) return {false, 0};
                seen.insert(prod);
                next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }
    return {true, static_cast<long>(seen.size())};
}

}  // namespace oracles
