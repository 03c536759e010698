#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubical/complex.hpp"
#include "cubical/cubes.hpp"
#include "cubical/errors.hpp"
#include "cubical/hyperplanes.hpp"

namespace cubical {

/// A partial automorphism of the complex: an injective, adjacency-preserving
/// vertex map. Window fixtures use genuinely partial maps (a shift of a path
/// window is undefined near the rim); group machinery requires total ones.
struct Automorphism {
    std::vector<Vertex> image;     // -1 where undefined
    std::vector<Vertex> preimage;  // -1 where not hit
    bool total = false;

    bool defined(Vertex v) const { return image[v] >= 0; }
    Vertex operator()(Vertex v) const { return image[v]; }
    int domain_size() const {
        int c = 0;
        for (Vertex v : image) c += (v >= 0);
        return c;
    }
};

inline Automorphism verify_automorphism(const CubeComplex& X,
                                        const std::vector<std::pair<std::string, std::string>>& map) {
    const int n = X.vertex_count();
    Automorphism g;
    g.image.assign(n, -1);
    g.preimage.assign(n, -1);
    if (map.empty()) fail(Errc::bad_parameters, "empty vertex map");
    for (const auto& [from, to] : map) {
        Vertex u = X.index(from), v = X.index(to);
        if (g.image[u] >= 0 && g.image[u] != v)
            fail(Errc::not_injective, "vertex '" + from + "' mapped twice");
        if (g.preimage[v] >= 0 && g.preimage[v] != u)
            fail(Errc::not_injective, "vertex '" + to + "' hit twice");
        g.image[u] = v;
        g.preimage[v] = u;
    }
    for (auto [u, v] : X.edges())
        if (g.defined(u) && g.defined(v) && !X.adjacent(g.image[u], g.image[v]))
            fail(Errc::not_adjacency_preserving,
                 "edge (" + X.id(u) + "," + X.id(v) + ") maps to a non-edge");
    g.total = g.domain_size() == n;
    return g;
}

inline Automorphism identity_automorphism(const CubeComplex& X) {
    Automorphism g;
    g.image.resize(X.vertex_count());
    for (Vertex v = 0; v < X.vertex_count(); ++v) g.image[v] = v;
    g.preimage = g.image;
    g.total = true;
    return g;
}

inline Automorphism inverse(const Automorphism& g) {
    Automorphism h;
    h.image = g.preimage;
    h.preimage = g.image;
    h.total = g.total;
    return h;
}

/// g after f (apply f first); the domain shrinks to where both legs are defined.
inline Automorphism compose(const Automorphism& g, const Automorphism& f) {
    const int n = static_cast<int>(g.image.size());
    Automorphism h;
    h.image.assign(n, -1);
    h.preimage.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        Vertex w = f.image[v];
        if (w >= 0 && g.image[w] >= 0) {
            h.image[v] = g.image[w];
            h.preimage[g.image[w]] = v;
        }
    }
    h.total = h.domain_size() == n;
    return h;
}

/// The map induced on hyperplane ids: class -> class of the image of any
/// mapped class edge. Unmapped or inconsistently mapped classes get -1.
inline std::vector<int> induced_hyperplane_map(const HyperplaneSet& H, const Automorphism& g) {
    std::vector<int> out(H.count(), -1);
    for (int h = 0; h < H.count(); ++h) {
        int target = -1;
        bool consistent = true;
        for (auto [u, v] : H[h].edges) {
            if (!g.defined(u) || !g.defined(v)) continue;
            int t = H.class_of_edge(g.image[u], g.image[v]);
            if (target < 0)
                target = t;
            else if (target != t)
                consistent = false;
        }
        out[h] = consistent ? target : -1;
    }
    return out;
}

// ── Finite groups of automorphisms ──────────────────────────────────

struct FiniteActingGroup {
    std::vector<Automorphism> elements;  // [0] is the identity
    std::vector<std::vector<int>> table; // table[i][j] = index of elements[i] ∘ elements[j]
    std::vector<int> inverse_of;

    int order() const { return static_cast<int>(elements.size()); }
};

/// Breadth-first closure of total generators under composition and inverse.
inline FiniteActingGroup group_closure(const CubeComplex& X,
                                       const std::vector<Automorphism>& generators, int bound) {
    for (const Automorphism& g : generators)
        if (!g.total)
            fail(Errc::domain_too_small, "group closure requires total automorphisms");

    FiniteActingGroup G;
    std::map<std::vector<Vertex>, int> index;
    auto intern = [&](const Automorphism& g) -> int {
        auto it = index.find(g.image);
        if (it != index.end()) return it->second;
        if (static_cast<int>(G.elements.size()) >= bound)
            fail(Errc::overflow, "group closure exceeds bound " + std::to_string(bound));
        int id = static_cast<int>(G.elements.size());
        index[g.image] = id;
        G.elements.push_back(g);
        return id;
    };

    intern(identity_automorphism(X));
    std::vector<Automorphism> gens = generators;
    for (const Automorphism& g : generators) gens.push_back(inverse(g));
    std::size_t head = 0;
    while (head < G.elements.size()) {
        Automorphism base = G.elements[head++];
        for (const Automorphism& g : gens) intern(compose(g, base));
    }

    const int m = G.order();
    G.table.assign(m, std::vector<int>(m, -1));
    G.inverse_of.assign(m, -1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            auto it = index.find(compose(G.elements[i], G.elements[j]).image);
            if (it == index.end()) fail(Errc::overflow, "closure not closed under composition");
            G.table[i][j] = it->second;
            if (it->second == 0) G.inverse_of[i] = j;
        }
    return G;
}

// ── Double skewering ────────────────────────────────────────────────

struct HalfspaceRef {
    int hyperplane = -1;
    int side = -1;  // 0 or 1
};

struct SkewerReport {
    bool holds = false;
    bool boundary_affected = false;  // some containments were undecidable in the window
};

/// h1 ⊂ h2 ⊂ g(h1) as vertex sets, decided inside the window: h1 must sit
/// strictly inside h2, and every h2 vertex whose g-preimage is known must
/// come from h1. Vertices of h2 with no preimage in the window cannot
/// witness either way and only set the boundary annotation.
inline SkewerReport double_skewers(const HyperplaneSet& H, const Automorphism& g,
                                   HalfspaceRef h1, HalfspaceRef h2) {
    const Hyperplane &A = H[h1.hyperplane], &B = H[h2.hyperplane];
    for (const Hyperplane* hp : {&A, &B})
        for (auto [u, v] : hp->edges)
            if (!g.defined(u) || !g.defined(v))
                fail(Errc::domain_too_small, "automorphism domain does not cover a Theta class");

    const Bitset &S1 = A.side(h1.side), &S2 = B.side(h2.side);
    if (!S1.is_subset_of(S2) || S1 == S2)
        fail(Errc::bad_parameters, "halfspaces are not strictly nested");

    SkewerReport out;
    out.holds = true;
    out.boundary_affected = !g.total;
    const int n = static_cast<int>(g.image.size());
    for (Vertex v = 0; v < n; ++v) {
        if (!S2.test(v)) continue;
        Vertex pre = g.preimage[v];
        if (pre < 0)
            out.boundary_affected = true;
        else if (!S1.test(pre))
            out.holds = false;  // v ∈ h2 but v ∉ g(h1)
    }
    return out;
}

// ── Stabilisers and hypothesis scans ────────────────────────────────

struct ObjectRef {
    enum class Kind { vertex, hyperplane, cube } kind;
    int index;
};

struct StabiliserReport {
    ObjectRef a, b;
    std::vector<int> elements;  // indices into the group
    int order = 0;
    bool subgroup_verified = false;
};

namespace detail {

inline bool stabilizes(const CubeComplex& X, const HyperplaneSet& H,
                       const std::vector<Cube>& cubes, const std::vector<int>& hyperplane_map,
                       const Automorphism& g, const ObjectRef& obj) {
    switch (obj.kind) {
        case ObjectRef::Kind::vertex:
            return g.image[obj.index] == obj.index;
        case ObjectRef::Kind::hyperplane:
            return hyperplane_map[obj.index] == obj.index;
        case ObjectRef::Kind::cube: {
            const auto& vs = cubes[obj.index].vertices;
            std::vector<Vertex> img;
            img.reserve(vs.size());
            for (Vertex v : vs) img.push_back(g.image[v]);
            std::sort(img.begin(), img.end());
            return img == vs;
        }
    }
    return false;
}

}  // namespace detail

/// Elements of G stabilising both objects setwise (fixing, for vertices).
inline StabiliserReport stabilizer_intersection(const CubeComplex& X, const HyperplaneSet& H,
                                                const std::vector<Cube>& cubes,
                                                const FiniteActingGroup& G, ObjectRef a,
                                                ObjectRef b) {
    StabiliserReport rep;
    rep.a = a;
    rep.b = b;
    for (int i = 0; i < G.order(); ++i) {
        auto hmap = induced_hyperplane_map(H, G.elements[i]);
        if (detail::stabilizes(X, H, cubes, hmap, G.elements[i], a) &&
            detail::stabilizes(X, H, cubes, hmap, G.elements[i], b))
            rep.elements.push_back(i);
    }
    rep.order = static_cast<int>(rep.elements.size());
    // subgroup check straight off the multiplication table
    rep.subgroup_verified = true;
    Bitset in(G.order());
    for (int e : rep.elements) in.set(e);
    for (int x : rep.elements) {
        if (!in.test(G.inverse_of[x])) rep.subgroup_verified = false;
        for (int y : rep.elements)
            if (!in.test(G.table[x][y])) rep.subgroup_verified = false;
    }
    return rep;
}

/// A hypothesis witness from the stabiliser scans. No conclusion about the
/// group is drawn; these only mark where the finite-intersection hypotheses
/// hold at window scale.
struct CriterionWitness {
    enum class Kind { hyperplane_pair, cube_pair } kind;
    int a = -1, b = -1;        // hyperplane ids or maximal-cube positions
    int intersection_order = 0;
    CubeSeparationWitness separation;  // for cube pairs
};

/// Scans (i) all hyperplane pairs for stabiliser intersections of order at
/// most `threshold` and (ii) all maximal-cube pairs for the same plus a
/// separated hyperplane pair.
inline std::vector<CriterionWitness> criterion_scan(const CubeComplex& X, const HyperplaneSet& H,
                                                    const std::vector<Cube>& cubes,
                                                    const FiniteActingGroup& G, int threshold) {
    std::vector<CriterionWitness> out;
    std::vector<std::vector<int>> hmaps;
    hmaps.reserve(G.order());
    for (int i = 0; i < G.order(); ++i) hmaps.push_back(induced_hyperplane_map(H, G.elements[i]));

    for (int a = 0; a < H.count(); ++a)
        for (int b = a; b < H.count(); ++b) {
            int ord = 0;
            for (int i = 0; i < G.order(); ++i)
                if (hmaps[i][a] == a && hmaps[i][b] == b) ++ord;
            if (ord <= threshold) {
                CriterionWitness w;
                w.kind = CriterionWitness::Kind::hyperplane_pair;
                w.a = a;
                w.b = b;
                w.intersection_order = ord;
                out.push_back(w);
            }
        }

    std::vector<int> maximal;
    for (std::size_t i = 0; i < cubes.size(); ++i)
        if (cubes[i].maximal) maximal.push_back(static_cast<int>(i));
    for (std::size_t ia = 0; ia < maximal.size(); ++ia)
        for (std::size_t ib = ia; ib < maximal.size(); ++ib) {
            const Cube &C = cubes[maximal[ia]], &Cp = cubes[maximal[ib]];
            auto sep = cube_pair_separates(H, C, Cp);
            if (!sep) continue;
            int ord = 0;
            for (int i = 0; i < G.order(); ++i) {
                ObjectRef ra{ObjectRef::Kind::cube, maximal[ia]};
                ObjectRef rb{ObjectRef::Kind::cube, maximal[ib]};
                if (detail::stabilizes(X, H, cubes, hmaps[i], G.elements[i], ra) &&
                    detail::stabilizes(X, H, cubes, hmaps[i], G.elements[i], rb))
                    ++ord;
            }
            if (ord <= threshold) {
                CriterionWitness w;
                w.kind = CriterionWitness::Kind::cube_pair;
                w.a = maximal[ia];
                w.b = maximal[ib];
                w.intersection_order = ord;
                w.separation = *sep;
                out.push_back(w);
            }
        }
    return out;
}

struct WeakAcylReport {
    bool no_pairs = false;     // no vertex pair at distance >= L in the window
    int max_count = 0;         // largest number of elements fixing both ends
    Vertex pair_x = -1, pair_y = -1;
};

/// Profile of |{g : g fixes x and y}| over all vertex pairs at distance >= L.
inline WeakAcylReport weak_acyl_scan(const CubeComplex& X, const FiniteActingGroup& G, int L) {
    WeakAcylReport rep;
    rep.no_pairs = true;
    const int n = X.vertex_count();
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            if (X.distance(x, y) < L) continue;
            rep.no_pairs = false;
            int cnt = 0;
            for (const Automorphism& g : G.elements)
                if (g.image[x] == x && g.image[y] == y) ++cnt;
            if (cnt > rep.max_count) {
                rep.max_count = cnt;
                rep.pair_x = x;
                rep.pair_y = y;
            }
        }
    return rep;
}

}  // namespace cubical
