#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubical/complex.hpp"
#include "cubical/errors.hpp"

namespace cubical {

/// Deterministic construction of the named test complexes. Same spec, same
/// output, down to the vertex naming.
enum class GeneratorKind { grid, tree, ncube, staircase, spiked, pentagon_plane, line };

struct GeneratorSpec {
    GeneratorKind kind;
    std::vector<int> parameters;
    std::uint64_t seed = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr int kMaxVertices = 2000;

inline void check_size(std::size_t n) {
    if (n > kMaxVertices) fail(Errc::bad_parameters, "generator would exceed 2000 vertices");
}

}  // namespace detail

/// grid(w,h): the product of two paths, w x h vertices named "x,y".
inline CubeComplex make_grid(int w, int h) {
    if (w < 1 || h < 1) fail(Errc::bad_parameters, "grid needs positive side lengths");
    detail::check_size(static_cast<std::size_t>(w) * h);
    auto name = [](int x, int y) { return std::to_string(x) + "," + std::to_string(y); };
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int x = 0; x < w; ++x)
        for (int y = 0; y < h; ++y) {
            vs.push_back(name(x, y));
            if (x + 1 < w) es.emplace_back(name(x, y), name(x + 1, y));
            if (y + 1 < h) es.emplace_back(name(x, y), name(x, y + 1));
        }
    return CubeComplex::build(vs, es);
}

/// tree(n, seed): random recursive tree, vertex t_i hangs off a seeded
/// uniform pick among t_0..t_{i-1}.
inline CubeComplex make_tree(int n, std::uint64_t seed) {
    if (n < 1) fail(Errc::bad_parameters, "tree needs at least one vertex");
    detail::check_size(n);
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < n; ++i) {
        vs.push_back("t" + std::to_string(i));
        if (i > 0) {
            int p = static_cast<int>(detail::splitmix64(seed ^ (0x51ed2701ULL * i)) % i);
            es.emplace_back(vs[i], "t" + std::to_string(p));
        }
    }
    return CubeComplex::build(vs, es);
}

/// ncube(n): the n-dimensional hypercube skeleton, vertices named by bitstrings.
inline CubeComplex make_ncube(int n) {
    if (n < 1 || n > 10) fail(Errc::bad_parameters, "ncube dimension out of range [1,10]");
    auto name = [n](unsigned mask) {
        std::string s(n, '0');
        for (int b = 0; b < n; ++b)
            if (mask & (1u << b)) s[n - 1 - b] = '1';
        return s;
    };
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (unsigned m = 0; m < (1u << n); ++m) {
        vs.push_back(name(m));
        for (int b = 0; b < n; ++b)
            if (!(m & (1u << b))) es.emplace_back(name(m), name(m | (1u << b)));
    }
    return CubeComplex::build(vs, es);
}

/// staircase(k): k unit squares glued edge to edge along the monotone
/// diagonal; cell j sits at (0,0) + sum of alternating right/up steps.
inline CubeComplex make_staircase(int k) {
    if (k < 1) fail(Errc::bad_parameters, "staircase needs at least one square");
    detail::check_size(static_cast<std::size_t>(2) * k + 2);
    auto name = [](int x, int y) { return std::to_string(x) + "," + std::to_string(y); };
    std::vector<std::pair<std::string, std::string>> es;
    std::vector<std::string> vs;
    auto add_vertex = [&](int x, int y) {
        std::string id = name(x, y);
        for (const auto& v : vs)
            if (v == id) return;
        vs.push_back(id);
    };
    int ax = 0, ay = 0;
    for (int j = 0; j < k; ++j) {
        add_vertex(ax, ay);
        add_vertex(ax + 1, ay);
        add_vertex(ax, ay + 1);
        add_vertex(ax + 1, ay + 1);
        es.emplace_back(name(ax, ay), name(ax + 1, ay));
        es.emplace_back(name(ax, ay + 1), name(ax + 1, ay + 1));
        es.emplace_back(name(ax, ay), name(ax, ay + 1));
        es.emplace_back(name(ax + 1, ay), name(ax + 1, ay + 1));
        if (j % 2 == 0)
            ax += 1;
        else
            ay += 1;
    }
    return CubeComplex::build(vs, es);
}

/// spiked(k): k spiked 3-cubes (a unit cube plus a spike edge at each of the
/// corners 100, 010, 001, 111) glued tip to tip along a breadth-first
/// 4-regular tree, truncated at k cubes. Unglued tips are the window rim.
inline CubeComplex make_spiked(int k) {
    if (k < 1) fail(Errc::bad_parameters, "spiked needs at least one cube");
    detail::check_size(static_cast<std::size_t>(12) * k);
    static const int spike_corner[4][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    auto corner = [](int i, int x, int y, int z) {
        return "q" + std::to_string(i) + ".c" + std::to_string(x) + std::to_string(y) + std::to_string(z);
    };
    auto tip = [](int i, int j) { return "q" + std::to_string(i) + ".s" + std::to_string(j); };

    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    std::vector<std::string> glued_tips;

    struct Slot {
        int cube, spike;
    };
    std::vector<Slot> open;  // breadth-first frontier of free spike slots

    for (int i = 0; i < k; ++i) {
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z) {
                    vs.push_back(corner(i, x, y, z));
                    if (x == 0) es.emplace_back(corner(i, 0, y, z), corner(i, 1, y, z));
                    if (y == 0) es.emplace_back(corner(i, x, 0, z), corner(i, x, 1, z));
                    if (z == 0) es.emplace_back(corner(i, x, y, 0), corner(i, x, y, 1));
                }
        int first_own_spike = 0;
        if (i > 0) {
            Slot up = open.front();
            open.erase(open.begin());
            // child's spike 0 shares the parent's tip vertex
            const auto& c = spike_corner[0];
            std::string shared = tip(up.cube, up.spike);
            es.emplace_back(corner(i, c[0], c[1], c[2]), shared);
            glued_tips.push_back(shared);
            first_own_spike = 1;
        }
        for (int j = first_own_spike; j < 4; ++j) {
            const auto& c = spike_corner[j];
            vs.push_back(tip(i, j));
            es.emplace_back(corner(i, c[0], c[1], c[2]), tip(i, j));
            open.push_back({i, j});
        }
    }

    // interior = everything except tips that were never glued
    std::vector<std::string> interior = vs;
    for (const Slot& s : open) {
        std::string t = tip(s.cube, s.spike);
        interior.erase(std::remove(interior.begin(), interior.end(), t), interior.end());
    }
    return CubeComplex::build(vs, es, interior);
}

/// pentagon_plane(r): radius-r window of the square tessellation with five
/// squares around every vertex, grown layer by layer so that every interior
/// vertex has degree 5 and a 5-cycle link. The final boundary cycle is the
/// window rim. Each completed boundary vertex receives a fan of new squares;
/// neighbouring fans share the square over their common boundary edge, which
/// keeps the window locally convex.
inline CubeComplex make_pentagon_plane(int r) {
    if (r < 1 || r > 4) fail(Errc::bad_parameters, "pentagon_plane radius out of range [1,4]");
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    std::vector<int> squares_at;  // squares already present at vertex index
    auto new_vertex = [&](int layer, int k) {
        vs.push_back("p" + std::to_string(layer) + "." + std::to_string(k));
        squares_at.push_back(0);
        return static_cast<int>(vs.size()) - 1;
    };
    auto add_edge = [&](int a, int b) { es.emplace_back(vs[a], vs[b]); };

    // layer 1: one full vertex star
    int center = new_vertex(0, 0);
    std::vector<int> boundary;
    {
        std::vector<int> spokes, diags;
        int counter = 0;
        for (int j = 0; j < 5; ++j) {
            spokes.push_back(new_vertex(1, counter++));
            diags.push_back(new_vertex(1, counter++));
        }
        // renumber: creation order around the cycle is u0,w0,u1,w1,...
        for (int j = 0; j < 5; ++j) {
            add_edge(center, spokes[j]);
            add_edge(spokes[j], diags[j]);
            add_edge(diags[j], spokes[(j + 1) % 5]);
            squares_at[center] += 1;
            squares_at[spokes[j]] += 1;
            squares_at[spokes[(j + 1) % 5]] += 1;
            squares_at[diags[j]] += 1;
            boundary.push_back(spokes[j]);
            boundary.push_back(diags[j]);
        }
    }

    for (int layer = 2; layer <= r; ++layer) {
        const int M = static_cast<int>(boundary.size());
        std::vector<std::vector<int>> fan(M);  // spokes v^i_1..v^i_{n_i}
        std::vector<int> next_boundary;
        int counter = 0;
        for (int i = 0; i < M; ++i) {
            const int b = boundary[i];
            const int missing = 5 - squares_at[b];
            const int n = missing - 1;  // new spokes at b
            for (int j = 0; j < n; ++j) {
                int z = -1;
                if (j > 0) z = new_vertex(layer, counter++);
                int v = new_vertex(layer, counter++);
                fan[i].push_back(v);
                add_edge(b, v);
                if (j > 0) {
                    // intermediate square (b, v_{j-1}, z, v_j)
                    add_edge(fan[i][j - 1], z);
                    add_edge(z, v);
                    squares_at[b] += 1;
                    squares_at[fan[i][j - 1]] += 1;
                    squares_at[v] += 1;
                    squares_at[z] += 1;
                    next_boundary.push_back(z);
                }
                next_boundary.push_back(v);
            }
        }
        // shared square over each boundary edge (b_i, b_{i+1})
        for (int i = 0; i < M; ++i) {
            const int ni = (i + 1) % M;
            int a = fan[i].back();
            int b = fan[ni].front();
            add_edge(a, b);
            squares_at[boundary[i]] += 1;
            squares_at[boundary[ni]] += 1;
            squares_at[a] += 1;
            squares_at[b] += 1;
        }
        boundary = std::move(next_boundary);
        detail::check_size(vs.size());
    }

    std::vector<std::string> interior;
    std::vector<bool> on_rim(vs.size(), false);
    for (int b : boundary) on_rim[b] = true;
    for (std::size_t v = 0; v < vs.size(); ++v)
        if (!on_rim[v]) interior.push_back(vs[v]);
    return CubeComplex::build(vs, es, interior);
}

/// line(n): the path window on vertices -n..n; the two ends are the rim.
inline CubeComplex make_line(int n) {
    if (n < 1) fail(Errc::bad_parameters, "line needs positive radius");
    detail::check_size(static_cast<std::size_t>(2) * n + 1);
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    std::vector<std::string> interior;
    for (int i = -n; i <= n; ++i) {
        vs.push_back(std::to_string(i));
        if (i > -n) es.emplace_back(std::to_string(i - 1), std::to_string(i));
        if (i > -n && i < n) interior.push_back(std::to_string(i));
    }
    return CubeComplex::build(vs, es, interior);
}

inline CubeComplex generate(const GeneratorSpec& spec) {
    const auto& p = spec.parameters;
    auto want = [&](std::size_t n) {
        if (p.size() != n) fail(Errc::bad_parameters, "wrong parameter count for generator");
    };
    switch (spec.kind) {
        case GeneratorKind::grid:
            want(2);
            return make_grid(p[0], p[1]);
        case GeneratorKind::tree:
            want(1);
            return make_tree(p[0], spec.seed);
        case GeneratorKind::ncube:
            want(1);
            return make_ncube(p[0]);
        case GeneratorKind::staircase:
            want(1);
            return make_staircase(p[0]);
        case GeneratorKind::spiked:
            want(1);
            return make_spiked(p[0]);
        case GeneratorKind::pentagon_plane:
            want(1);
            return make_pentagon_plane(p[0]);
        case GeneratorKind::line:
            want(1);
            return make_line(p[0]);
    }
    fail(Errc::bad_parameters, "unknown generator kind");
}

inline GeneratorKind parse_generator_kind(const std::string& s) {
    if (s == "grid") return GeneratorKind::grid;
    if (s == "tree") return GeneratorKind::tree;
    if (s == "ncube") return GeneratorKind::ncube;
    if (s == "staircase") return GeneratorKind::staircase;
    if (s == "spiked") return GeneratorKind::spiked;
    if (s == "pentagon_plane") return GeneratorKind::pentagon_plane;
    if (s == "line") return GeneratorKind::line;
    fail(Errc::bad_parameters, "unknown generator kind '" + s + "'");
}

inline const char* generator_kind_name(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::grid: return "grid";
        case GeneratorKind::tree: return "tree";
        case GeneratorKind::ncube: return "ncube";
        case GeneratorKind::staircase: return "staircase";
        case GeneratorKind::spiked: return "spiked";
        case GeneratorKind::pentagon_plane: return "pentagon_plane";
        case GeneratorKind::line: return "line";
    }
    return "?";
}

}  // namespace cubical
