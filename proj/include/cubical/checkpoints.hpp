#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "cubical/actions.hpp"
#include "cubical/bridges.hpp"
#include "cubical/complex.hpp"
#include "cubical/errors.hpp"
#include "cubical/hyperplanes.hpp"

namespace cubical {

/// Checkpoint system for a skewering partial automorphism: the bridge between
/// a halfspace and its image, translated through the window. Translates that
/// would leave the automorphism's domain are skipped and recorded. The index
/// map plays the role of the coarse line coordinate: coarse separation is
/// read as strict index betweenness.
struct CheckpointSystem {
    Automorphism mover;
    int h1 = -1, h2 = -1;            // hyperplane and its image under the mover
    HalfspaceRef inner;              // the skewered halfspace
    std::vector<Vertex> base;        // bridge members between h1 and h2
    std::map<int, std::vector<Vertex>> translates;  // index -> sorted vertex set
    std::vector<int> skipped_indices;
    int error_constant = 0;          // L, in hops
    std::vector<Vertex> lambda;      // union of translates, sorted
    std::map<Vertex, std::vector<int>> index_map;
    bool overlapping = false;        // translates are not pairwise disjoint
    bool boundary_affected = false;
};

/// Builds the system of checkpoints for `g` skewering the halfspace `h1`:
/// requires that g properly skewers h1 into g(h1) and that (h1, g·h1) is an
/// uber-separated pair. Translate indices run over [lo, hi].
inline CheckpointSystem build_checkpoint_system(const HyperplaneSet& H, const Automorphism& g,
                                                HalfspaceRef h1, int lo, int hi, int L) {
    const CubeComplex& X = H.complex();
    if (h1.hyperplane < 0 || h1.hyperplane >= H.count() || h1.side < 0 || h1.side > 1)
        fail(Errc::bad_parameters, "bad halfspace reference");
    if (lo > 0 || hi < 0 || L < 0) fail(Errc::bad_parameters, "range must contain 0 and L >= 0");

    auto hmap = induced_hyperplane_map(H, g);
    const int h2 = hmap[h1.hyperplane];
    if (h2 < 0)
        fail(Errc::domain_too_small, "automorphism does not determine the image hyperplane");
    if (h2 == h1.hyperplane)
        fail(Errc::bad_parameters, "automorphism fixes the hyperplane, nothing to skewer");

    // image halfspace: follow one oriented class edge
    auto [e0, e1] = H[h1.hyperplane].edges.front();
    Vertex inner_rep = (h1.side == 0) ? e0 : e1;
    if (!g.defined(inner_rep))
        fail(Errc::domain_too_small, "automorphism domain does not cover the Theta class");
    const int h2_side = H[h2].side(0).test(g.image[inner_rep]) ? 0 : 1;

    // proper skewering: h1 strictly inside g(h1), decided inside the window
    const Bitset& S1 = H[h1.hyperplane].side(h1.side);
    const Bitset& S2 = H[h2].side(h2_side);
    bool nested_ok = true, strict = false, boundary = !g.total;
    for (Vertex v = 0; v < X.vertex_count(); ++v) {
        Vertex pre = g.preimage[v];
        if (S1.test(v) && !S2.test(v)) nested_ok = false;
        if (S2.test(v) && pre < 0) boundary = true;
        if (pre >= 0 && S1.test(pre) && !S1.test(v)) strict = true;  // g(h1) sticks out of h1
    }
    if (!nested_ok || !strict)
        fail(Errc::bad_parameters, "halfspace is not properly skewered by the automorphism");

    auto cls = H.classify_pair(h1.hyperplane, h2);
    if (cls.cls != PairClass::uber_separated)
        fail(Errc::not_uber_separated,
             "pair (h1, g·h1) is " + std::string(pair_class_name(cls.cls)));

    CheckpointSystem cs;
    cs.mover = g;
    cs.h1 = h1.hyperplane;
    cs.h2 = h2;
    cs.inner = h1;
    cs.error_constant = L;
    cs.boundary_affected = boundary;
    cs.base = bridge(H, h1.hyperplane, h2).members;

    auto translate = [&](const std::vector<Vertex>& S, const Automorphism& step)
        -> std::vector<Vertex> {
        std::vector<Vertex> out;
        for (Vertex v : S) {
            if (!step.defined(v)) return {};
            out.push_back(step.image[v]);
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    cs.translates[0] = cs.base;
    std::vector<Vertex> cur = cs.base;
    for (int i = 1; i <= hi; ++i) {
        cur = translate(cur, g);
        if (cur.empty()) {
            for (int j = i; j <= hi; ++j) cs.skipped_indices.push_back(j);
            break;
        }
        cs.translates[i] = cur;
    }
    Automorphism ginv = inverse(g);
    cur = cs.base;
    for (int i = -1; i >= lo; --i) {
        cur = translate(cur, ginv);
        if (cur.empty()) {
            for (int j = i; j >= lo; --j) cs.skipped_indices.push_back(j);
            break;
        }
        cs.translates[i] = cur;
    }
    std::sort(cs.skipped_indices.begin(), cs.skipped_indices.end());
    if (!cs.skipped_indices.empty()) cs.boundary_affected = true;

    for (const auto& [i, S] : cs.translates)
        for (Vertex v : S) {
            cs.index_map[v].push_back(i);
            cs.lambda.push_back(v);
        }
    std::sort(cs.lambda.begin(), cs.lambda.end());
    cs.lambda.erase(std::unique(cs.lambda.begin(), cs.lambda.end()), cs.lambda.end());
    for (const auto& [v, is] : cs.index_map)
        if (is.size() > 1) cs.overlapping = true;
    return cs;
}

/// Verification of the checkpoint property: whenever the projections of x
/// and y to the translate union sit in translates at index gap at least two
/// on both sides of checkpoint i, and checkpoint i keeps hop distance at
/// least L from both projections, every geodesic from x to y must meet it.
/// Quantified over every projection choice; violations localize (x, y, i).
struct CheckpointReport {
    struct Violation {
        Vertex x, y;
        int index;
    };
    std::vector<Violation> violations;
    long pairs_checked = 0;
    long cuts_checked = 0;
};

inline CheckpointReport verify_checkpoint_system(const CubeComplex& X, const CheckpointSystem& cs) {
    CheckpointReport rep;
    if (cs.translates.empty()) return rep;

    // rebuild the union and index lists from the translates, so that
    // tampered systems are verified as given
    std::map<Vertex, std::vector<int>> index_of;
    for (const auto& [i, S] : cs.translates)
        for (Vertex v : S) index_of[v].push_back(i);
    std::vector<Vertex> lambda;
    for (const auto& [v, is] : index_of) lambda.push_back(v);

    const int n = X.vertex_count();
    std::vector<std::vector<Vertex>> proj(n);  // nearest lambda vertices
    for (Vertex x = 0; x < n; ++x) {
        int best = -1;
        for (Vertex w : lambda) {
            int d = X.distance(x, w);
            if (best < 0 || d < best) best = d;
        }
        for (Vertex w : lambda)
            if (X.distance(x, w) == best) proj[x].push_back(w);
    }

    auto dist_to_set = [&](Vertex v, const std::vector<Vertex>& S) {
        int best = -1;
        for (Vertex w : S) {
            int d = X.distance(v, w);
            if (best < 0 || d < best) best = d;
        }
        return best;
    };

    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            ++rep.pairs_checked;
            std::vector<int> to_check;
            for (Vertex xp : proj[x])
                for (Vertex yp : proj[y])
                    for (int ix : index_of.at(xp))
                        for (int iy : index_of.at(yp)) {
                            const int a = std::min(ix, iy), b = std::max(ix, iy);
                            for (const auto& [i, S] : cs.translates) {
                                if (i < a + 2 || i > b - 2) continue;
                                if (dist_to_set(xp, S) < cs.error_constant) continue;
                                if (dist_to_set(yp, S) < cs.error_constant) continue;
                                to_check.push_back(i);
                            }
                        }
            std::sort(to_check.begin(), to_check.end());
            to_check.erase(std::unique(to_check.begin(), to_check.end()), to_check.end());
            for (int i : to_check) {
                ++rep.cuts_checked;
                if (!geodesic_cut(X, x, y, cs.translates.at(i)).cut)
                    rep.violations.push_back({x, y, i});
            }
        }
    return rep;
}

}  // namespace cubical
