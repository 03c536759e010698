#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cubical/complex.hpp"
#include "cubical/errors.hpp"
#include "cubical/hyperplanes.hpp"

namespace cubical {

/// A cube of the complex, derived from the skeleton: 2^d vertices spanned by
/// d pairwise-crossing Theta classes.
struct Cube {
    int dimension = 0;
    std::vector<Vertex> vertices;  // sorted
    std::vector<int> classes;      // sorted hyperplane ids, one per dimension
    bool maximal = false;
    bool interior = false;         // every vertex interior (window semantics)
};

/// All cubes of every dimension, each exactly once, ordered by
/// (dimension, vertex list). A (d+1)-cube is two parallel d-cubes joined by
/// a perfect matching inside one further Theta class.
inline std::vector<Cube> enumerate_cubes(const HyperplaneSet& H) {
    const CubeComplex& X = H.complex();
    const int n = X.vertex_count();

    // per-vertex: class -> neighbor along that class (unique in a median graph)
    std::vector<std::vector<std::pair<int, Vertex>>> class_edge_at(n);
    for (int h = 0; h < H.count(); ++h)
        for (auto [u, v] : H[h].edges) {
            class_edge_at[u].emplace_back(h, v);
            class_edge_at[v].emplace_back(h, u);
        }
    for (auto& lst : class_edge_at) std::sort(lst.begin(), lst.end());
    auto neighbor_along = [&](Vertex v, int cls) -> Vertex {
        const auto& lst = class_edge_at[v];
        auto it = std::lower_bound(lst.begin(), lst.end(), std::make_pair(cls, Vertex{-1}));
        if (it != lst.end() && it->first == cls) return it->second;
        return -1;
    };

    std::vector<Cube> cubes;
    std::set<std::vector<Vertex>> known;

    // dimension 0 and 1
    for (Vertex v = 0; v < n; ++v) {
        Cube c;
        c.dimension = 0;
        c.vertices = {v};
        known.insert(c.vertices);
        cubes.push_back(std::move(c));
    }
    std::vector<Cube> frontier;
    for (auto [u, v] : X.edges()) {
        Cube c;
        c.dimension = 1;
        c.vertices = {u, v};
        c.classes = {H.class_of_edge(u, v)};
        known.insert(c.vertices);
        frontier.push_back(c);
        cubes.push_back(std::move(c));
    }

    while (!frontier.empty()) {
        std::vector<Cube> next;
        for (const Cube& q : frontier) {
            // candidate extension classes: classes with an edge at the first
            // corner, not already spanned
            for (auto [cls, nb] : class_edge_at[q.vertices.front()]) {
                (void)nb;
                if (std::binary_search(q.classes.begin(), q.classes.end(), cls)) continue;
                std::vector<Vertex> mate(q.vertices.size());
                bool ok = true;
                for (std::size_t i = 0; i < q.vertices.size() && ok; ++i) {
                    mate[i] = neighbor_along(q.vertices[i], cls);
                    if (mate[i] < 0) ok = false;
                }
                if (!ok) continue;
                // the matched copy must replicate the cube's edges
                for (std::size_t i = 0; i < q.vertices.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < q.vertices.size() && ok; ++j)
                        if (X.adjacent(q.vertices[i], q.vertices[j]) &&
                            !X.adjacent(mate[i], mate[j]))
                            ok = false;
                if (!ok) continue;
                Cube c;
                c.dimension = q.dimension + 1;
                c.vertices = q.vertices;
                c.vertices.insert(c.vertices.end(), mate.begin(), mate.end());
                std::sort(c.vertices.begin(), c.vertices.end());
                if (known.count(c.vertices)) continue;
                c.classes = q.classes;
                c.classes.insert(std::lower_bound(c.classes.begin(), c.classes.end(), cls), cls);
                known.insert(c.vertices);
                next.push_back(c);
                cubes.push_back(std::move(c));
            }
        }
        frontier = std::move(next);
    }

    std::sort(cubes.begin(), cubes.end(), [](const Cube& a, const Cube& b) {
        if (a.dimension != b.dimension) return a.dimension < b.dimension;
        return a.vertices < b.vertices;
    });

    // maximality: a cube is non-maximal iff it is a facet of some larger
    // cube; facet-marking propagates down the dimensions
    std::map<std::vector<Vertex>, int> index_of;
    for (std::size_t i = 0; i < cubes.size(); ++i) index_of[cubes[i].vertices] = static_cast<int>(i);
    std::vector<bool> non_maximal(cubes.size(), false);
    for (const Cube& c : cubes) {
        if (c.dimension == 0) continue;
        for (int cls : c.classes)
            for (int s = 0; s < 2; ++s) {
                std::vector<Vertex> facet;
                for (Vertex v : c.vertices)
                    if (H[cls].side(s).test(v)) facet.push_back(v);
                non_maximal[index_of.at(facet)] = true;
            }
    }
    for (std::size_t i = 0; i < cubes.size(); ++i) {
        cubes[i].maximal = !non_maximal[i];
        cubes[i].interior = std::all_of(cubes[i].vertices.begin(), cubes[i].vertices.end(),
                                        [&](Vertex v) { return X.is_interior(v); });
    }
    return cubes;
}

/// Free faces: non-maximal cubes with exactly one proper coface. A complex
/// has no free face exactly when every non-maximal cube sits in at least two
/// maximal cubes, and this is the set of elementary-collapse candidates.
inline std::vector<Cube> free_faces(const std::vector<Cube>& cubes) {
    std::vector<Cube> out;
    for (const Cube& c : cubes) {
        if (c.maximal) continue;
        int cofaces = 0;
        for (const Cube& d : cubes) {
            if (d.dimension <= c.dimension) continue;
            if (std::includes(d.vertices.begin(), d.vertices.end(), c.vertices.begin(),
                              c.vertices.end()))
                ++cofaces;
        }
        if (cofaces == 1) out.push_back(c);
    }
    return out;
}

/// Witness that the cube pair (C, C') separates a pair of hyperplanes:
/// hyperplanes p, q and halfspace picks such that every hyperplane spanned
/// by an edge of C or C' has the p-halfspace on one side and the
/// q-halfspace on the other.
struct CubeSeparationWitness {
    int h1 = -1, h2 = -1;
    int h1_half = -1, h2_half = -1;  // the separated halfspaces (side indices)
};

inline std::optional<CubeSeparationWitness> cube_pair_separates(const HyperplaneSet& H,
                                                                const Cube& C, const Cube& Cp) {
    std::vector<int> family = C.classes;
    family.insert(family.end(), Cp.classes.begin(), Cp.classes.end());
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    if (family.empty()) return std::nullopt;

    // For each candidate hyperplane parallel to the whole family, one of its
    // halfspaces is nested inside a side of every family member; candidates
    // with a consistent inner halfspace get a side-signature over the family.
    struct Candidate {
        int id;
        int half;               // the inner halfspace of the candidate
        std::uint32_t signature;  // bit t: which side of family[t] contains it
    };
    std::vector<Candidate> candidates;
    for (int p = 0; p < H.count(); ++p) {
        if (std::binary_search(family.begin(), family.end(), p)) continue;
        int half = -1;
        std::uint32_t sig = 0;
        bool ok = true;
        for (std::size_t t = 0; t < family.size() && ok; ++t) {
            auto cls = H.classify_pair(p, family[t]);
            if (cls.cls == PairClass::transverse) {
                ok = false;
                break;
            }
            // side(disjoint_side_1) of p is contained in the side of
            // family[t] opposite to its disjoint side
            if (half < 0)
                half = cls.disjoint_side_1;
            else if (half != cls.disjoint_side_1)
                ok = false;
            if (cls.disjoint_side_2 == 0) sig |= (1u << t);  // contained in side 1
        }
        if (ok) candidates.push_back({p, half, sig});
    }

    // A separated pair needs complementary signatures.
    std::map<std::uint32_t, const Candidate*> first_by_sig;
    const std::uint32_t full = (family.size() >= 32)
                                   ? ~std::uint32_t{0}
                                   : ((std::uint32_t{1} << family.size()) - 1);
    for (const Candidate& c : candidates) {
        auto it = first_by_sig.find(full & ~c.signature);
        if (it != first_by_sig.end()) {
            CubeSeparationWitness w;
            const Candidate* other = it->second;
            w.h1 = std::min(other->id, c.id);
            w.h2 = std::max(other->id, c.id);
            w.h1_half = (w.h1 == other->id) ? other->half : c.half;
            w.h2_half = (w.h2 == c.id) ? c.half : other->half;
            return w;
        }
        if (!first_by_sig.count(c.signature)) first_by_sig[c.signature] = &c;
    }
    return std::nullopt;
}

}  // namespace cubical
