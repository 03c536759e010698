#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "cubical/complex.hpp"
#include "cubical/errors.hpp"
#include "cubical/hyperplanes.hpp"

namespace cubical {

/// Closest-point projection onto a convex set: the unique vertex of S
/// nearest to x.
inline Vertex gate(const CubeComplex& X, Vertex x, const std::vector<Vertex>& S) {
    if (!is_convex(X, S)) fail(Errc::not_convex, "gate target set is not convex");
    Vertex best = S.front();
    int bd = X.distance(x, best);
    int ties = 1;
    for (std::size_t i = 1; i < S.size(); ++i) {
        int d = X.distance(x, S[i]);
        if (d < bd) {
            bd = d;
            best = S[i];
            ties = 1;
        } else if (d == bd) {
            ++ties;
        }
    }
    if (ties != 1) fail(Errc::not_convex, "nearest point in S is not unique");
    return best;
}

/// The combinatorial bridge between two parallel hyperplanes: the union of
/// all geodesics between cross pairs realizing the distance between the two
/// facing-away halfspaces. For strongly separated pairs the minimizing pair
/// (the gates) is unique and the bridge is a single interval.
struct Bridge {
    int h1 = -1, h2 = -1;
    PairClass cls = PairClass::parallel;
    int far_side_1 = -1, far_side_2 = -1;  // the disjoint halfspaces minimized over
    std::vector<std::pair<Vertex, Vertex>> minimizing_pairs;  // sorted
    Vertex gate1 = -1, gate2 = -1;  // first minimizing pair
    int width = 0;                   // d(gate1, gate2)
    bool unique = false;
    std::vector<Vertex> members;     // sorted union of minimizing intervals
    bool boundary_affected = false;
};

inline Bridge bridge(const HyperplaneSet& H, int h1, int h2) {
    auto cls = H.classify_pair(h1, h2);
    if (cls.cls == PairClass::equal || cls.cls == PairClass::transverse)
        fail(Errc::not_parallel, "hyperplanes " + std::to_string(h1) + " and " +
                                     std::to_string(h2) + " are not parallel");
    const CubeComplex& X = H.complex();
    Bridge b;
    b.h1 = h1;
    b.h2 = h2;
    b.cls = cls.cls;
    b.far_side_1 = cls.disjoint_side_1;
    b.far_side_2 = cls.disjoint_side_2;

    const auto A = H[h1].side(cls.disjoint_side_1).to_vector();
    const auto B = H[h2].side(cls.disjoint_side_2).to_vector();
    int best = -1;
    for (Vertex a : A)
        for (Vertex p : B) {
            int d = X.distance(a, p);
            if (best < 0 || d < best) best = d;
        }
    b.width = best;
    for (Vertex a : A)
        for (Vertex p : B)
            if (X.distance(a, p) == best) b.minimizing_pairs.emplace_back(a, p);
    std::sort(b.minimizing_pairs.begin(), b.minimizing_pairs.end());
    b.unique = b.minimizing_pairs.size() == 1;
    b.gate1 = b.minimizing_pairs.front().first;
    b.gate2 = b.minimizing_pairs.front().second;

    Bitset members(X.vertex_count());
    for (auto [a, p] : b.minimizing_pairs) members |= interval_bitset(X, a, p);
    b.members = members.to_vector();
    for (Vertex v : b.members)
        if (!X.is_interior(v)) b.boundary_affected = true;
    return b;
}

/// Checks the additive gate formula d(y1,y2) = d(y1,x1) + d(x1,x2) + d(x2,y2)
/// for every cross-side pair of a strongly separated hyperplane pair; the
/// violation list localizes any failing pair.
struct GateFormulaReport {
    int h1 = -1, h2 = -1;
    Vertex gate1 = -1, gate2 = -1;
    int width = 0;
    long pairs_checked = 0;
    struct Violation {
        Vertex y1, y2;
        int lhs, rhs;
    };
    std::vector<Violation> violations;
};

inline GateFormulaReport check_gate_formula(const HyperplaneSet& H, int h1, int h2) {
    auto cls = H.classify_pair(h1, h2);
    if (cls.cls != PairClass::strongly_separated && cls.cls != PairClass::uber_separated)
        fail(Errc::not_strongly_separated,
             "pair is " + std::string(pair_class_name(cls.cls)));
    const CubeComplex& X = H.complex();
    Bridge b = bridge(H, h1, h2);
    GateFormulaReport rep;
    rep.h1 = h1;
    rep.h2 = h2;
    rep.gate1 = b.gate1;
    rep.gate2 = b.gate2;
    rep.width = b.width;
    for (Vertex y1 : H[h1].side(cls.disjoint_side_1).to_vector())
        for (Vertex y2 : H[h2].side(cls.disjoint_side_2).to_vector()) {
            ++rep.pairs_checked;
            int lhs = X.distance(y1, y2);
            int rhs = X.distance(y1, b.gate1) + b.width + X.distance(b.gate2, y2);
            if (lhs != rhs) rep.violations.push_back({y1, y2, lhs, rhs});
        }
    return rep;
}

/// Checks that every geodesic between cross-side vertices of an
/// uber-separated pair meets the bridge.
struct BridgeCutReport {
    int h1 = -1, h2 = -1;
    long pairs_checked = 0;
    std::vector<std::pair<Vertex, Vertex>> violations;
};

inline BridgeCutReport check_bridge_cut(const HyperplaneSet& H, int h1, int h2) {
    auto cls = H.classify_pair(h1, h2);
    if (cls.cls != PairClass::uber_separated)
        fail(Errc::not_uber_separated, "pair is " + std::string(pair_class_name(cls.cls)));
    const CubeComplex& X = H.complex();
    Bridge b = bridge(H, h1, h2);
    BridgeCutReport rep;
    rep.h1 = h1;
    rep.h2 = h2;
    for (Vertex x : H[h1].side(cls.disjoint_side_1).to_vector())
        for (Vertex y : H[h2].side(cls.disjoint_side_2).to_vector()) {
            ++rep.pairs_checked;
            if (!geodesic_cut(X, x, y, b.members).cut) rep.violations.emplace_back(x, y);
        }
    std::sort(rep.violations.begin(), rep.violations.end());
    return rep;
}

}  // namespace cubical
