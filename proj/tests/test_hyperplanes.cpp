#include "catch2/catch_amalgamated.hpp"

#include "cubical/cubes.hpp"
#include "cubical/generators.hpp"
#include "cubical/hyperplanes.hpp"

using namespace cubical;

namespace {

bool side_has(const Hyperplane& h, int side, const CubeComplex& X, const std::string& id) {
    return h.side(side).test(X.index(id));
}

}  // namespace

TEST_CASE("Theta classes of standard fixtures") {
    for (int n : {2, 3, 4}) {
        auto X = make_ncube(n);
        HyperplaneSet H(X);
        REQUIRE(H.count() == n);
        for (int i = 0; i < n; ++i) CHECK(H[i].edges.size() == (1u << (n - 1)));
    }
    {
        auto X = make_line(5);  // path with 10 edges
        HyperplaneSet H(X);
        CHECK(H.count() == 10);
    }
    {
        auto X = make_spiked(3);
        HyperplaneSet H(X);
        CHECK(H.count() == 3 * 3 + 4 * 3);  // 3 per cube plus 1 per spike edge
    }
    {
        auto X = make_staircase(6);
        HyperplaneSet H(X);
        CHECK(H.count() == 7);
    }
}

TEST_CASE("Theta transitivity violations are surfaced") {
    auto k23 = CubeComplex::build({"a", "b", "x", "y", "z"}, {{"a", "x"},
                                                              {"a", "y"},
                                                              {"a", "z"},
                                                              {"b", "x"},
                                                              {"b", "y"},
                                                              {"b", "z"}});
    CHECK_THROWS_MATCHES(HyperplaneSet(k23), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::theta_not_transitive;
                         }));
}

TEST_CASE("halfspaces partition and are convex") {
    for (const auto& X : {make_staircase(6), make_grid(4, 4), make_spiked(2)}) {
        HyperplaneSet H(X);
        for (int i = 0; i < H.count(); ++i) {
            CHECK(H[i].side(0).count() + H[i].side(1).count() == X.vertex_count());
            CHECK(is_convex(X, H[i].side(0).to_vector()));
            CHECK(is_convex(X, H[i].side(1).to_vector()));
            for (auto [u, v] : H[i].edges) {
                CHECK(H[i].side(0).test(u));
                CHECK(H[i].side(1).test(v));
            }
        }
    }
}

TEST_CASE("pair classification basics") {
    auto g = make_grid(5, 5);
    HyperplaneSet Hg(g);
    // two vertical lines: parallel but never strongly separated
    int v1 = Hg.class_of_edge(g.index("0,0"), g.index("1,0"));
    int v2 = Hg.class_of_edge(g.index("2,0"), g.index("3,0"));
    auto c = Hg.classify_pair(v1, v2);
    CHECK(c.cls == PairClass::parallel);
    CHECK(Hg.classify_pair(v1, v1).cls == PairClass::equal);
    int h1 = Hg.class_of_edge(g.index("0,0"), g.index("0,1"));
    CHECK(Hg.classify_pair(v1, h1).cls == PairClass::transverse);

    // any two distinct tree edges are uber-separated (vacuously)
    auto t = make_tree(12, 4);
    HyperplaneSet Ht(t);
    for (int i = 0; i < Ht.count(); ++i)
        for (int j = i + 1; j < Ht.count(); ++j)
            CHECK(Ht.classify_pair(i, j).cls == PairClass::uber_separated);
}

TEST_CASE("classification matches crossing-graph distance") {
    for (const auto& X : {make_staircase(6), make_staircase(8), make_spiked(2),
                          make_pentagon_plane(2), make_grid(4, 4)}) {
        HyperplaneSet H(X);
        auto G = H.crossing_graph();
        bool found_uber_at_4 = false, found_ss_at_3 = false;
        for (int i = 0; i < H.count(); ++i)
            for (int j = i + 1; j < H.count(); ++j) {
                auto c = H.classify_pair(i, j);
                int d = G.distance(i, j);
                bool far = d == CrossingGraph::kInf || d >= 4;
                CHECK((c.cls == PairClass::uber_separated) == far);
                if (c.cls == PairClass::transverse) CHECK(d == 1);
                if (c.cls == PairClass::strongly_separated) {
                    CHECK(d >= 3);
                    if (d == 3) found_ss_at_3 = true;
                }
                if (c.cls == PairClass::uber_separated && d == 4) found_uber_at_4 = true;
            }
        if (X.vertex_count() == 14) {  // staircase(6) has both witnesses
            CHECK(found_uber_at_4);
            CHECK(found_ss_at_3);
        }
    }
}

TEST_CASE("nested chains of strongly separated pairs are uber-separated") {
    // h < k < l pairwise strongly separated forces (h, l) uber-separated
    auto X = make_staircase(8);
    HyperplaneSet H(X);
    int checked = 0;
    auto ss = [&](int i, int j) {
        auto c = H.classify_pair(i, j).cls;
        return c == PairClass::strongly_separated || c == PairClass::uber_separated;
    };
    for (int h = 0; h < H.count(); ++h)
        for (int k = 0; k < H.count(); ++k)
            for (int l = 0; l < H.count(); ++l) {
                if (h == k || k == l || h == l) continue;
                if (!ss(h, k) || !ss(k, l) || !ss(h, l)) continue;
                // k lies between h and l when its away-sides differ
                if (H.classify_pair(k, h).disjoint_side_1 ==
                    H.classify_pair(k, l).disjoint_side_1)
                    continue;
                ++checked;
                CHECK(H.classify_pair(h, l).cls == PairClass::uber_separated);
            }
    CHECK(checked > 0);
}

TEST_CASE("crossing graphs") {
    auto cube = make_ncube(3);
    HyperplaneSet Hc(cube);
    auto Gc = Hc.crossing_graph();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(Gc.distance(i, j) == 1);

    auto t = make_tree(10, 1);
    HyperplaneSet Ht(t);
    auto Gt = Ht.crossing_graph();
    for (int i = 0; i < Gt.node_count; ++i) {
        CHECK(Gt.adjacency[i].empty());
        for (int j = 0; j < Gt.node_count; ++j)
            if (i != j) CHECK(Gt.distance(i, j) == CrossingGraph::kInf);
    }

    // staircase(6): the crossing graph is a path on 7 nodes
    auto s = make_staircase(6);
    HyperplaneSet Hs(s);
    auto Gs = Hs.crossing_graph();
    int deg1 = 0, deg2 = 0;
    for (int i = 0; i < Gs.node_count; ++i) {
        if (Gs.adjacency[i].size() == 1) ++deg1;
        if (Gs.adjacency[i].size() == 2) ++deg2;
    }
    CHECK(deg1 == 2);
    CHECK(deg2 == 5);
}

TEST_CASE("irreducibility") {
    auto g = make_grid(3, 3);
    HyperplaneSet Hg(g);
    auto rg = is_irreducible(Hg);
    REQUIRE_FALSE(rg.irreducible);
    CHECK(rg.family_1.size() + rg.family_2.size() == static_cast<std::size_t>(Hg.count()));
    CHECK(rg.family_1.size() == 2);
    CHECK(rg.family_2.size() == 2);

    auto tripod = CubeComplex::build({"c", "a", "b", "d"}, {{"c", "a"}, {"c", "b"}, {"c", "d"}});
    HyperplaneSet Htri(tripod);
    CHECK(is_irreducible(Htri).irreducible);

    auto s = make_staircase(6);
    HyperplaneSet Hs(s);
    CHECK(is_irreducible(Hs).irreducible);

    auto edge = CubeComplex::build({"a", "b"}, {{"a", "b"}});
    HyperplaneSet He(edge);
    CHECK_THROWS_MATCHES(is_irreducible(He), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::too_few_hyperplanes;
                         }));
}

TEST_CASE("reducible complexes have no strongly separated pairs") {
    for (const auto& X : {make_grid(3, 3), make_grid(5, 4), make_grid(6, 6)}) {
        HyperplaneSet H(X);
        REQUIRE_FALSE(is_irreducible(H).irreducible);
        for (int i = 0; i < H.count(); ++i)
            for (int j = i + 1; j < H.count(); ++j) {
                auto c = H.classify_pair(i, j).cls;
                CHECK(c != PairClass::strongly_separated);
                CHECK(c != PairClass::uber_separated);
            }
    }
}

TEST_CASE("sectors") {
    auto g = make_grid(5, 5);
    HyperplaneSet Hg(g);
    int v = Hg.class_of_edge(g.index("2,0"), g.index("3,0"));
    int h = Hg.class_of_edge(g.index("0,2"), g.index("0,3"));
    auto S = sectors(Hg, {v, h});
    REQUIRE(S.sector_count() == 4);
    int nonempty = 0;
    std::size_t total = 0;
    for (int m = 0; m < 4; ++m) {
        if (!S.sector_vertices[m].empty()) ++nonempty;
        total += S.sector_vertices[m].size();
        CHECK(S.contained_hyperplanes[m].empty());  // every grid hyperplane meets both
    }
    CHECK(nonempty == 4);
    CHECK(total == static_cast<std::size_t>(g.vertex_count()));

    int v2 = Hg.class_of_edge(g.index("0,0"), g.index("1,0"));
    CHECK_THROWS_MATCHES(sectors(Hg, {v, v2}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::not_pairwise_crossing;
                         }));
}

TEST_CASE("spiked cube sector profile") {
    auto X = make_spiked(2);
    HyperplaneSet H(X);
    auto cubes = enumerate_cubes(H);
    int three_cubes = 0;
    for (const auto& c : cubes) {
        if (c.dimension != 3) continue;
        ++three_cubes;
        auto S = sectors(H, c.classes);
        int bearing = 0, singleton = 0;
        for (int m = 0; m < 8; ++m) {
            if (!S.contained_hyperplanes[m].empty()) ++bearing;
            if (S.sector_vertices[m].size() == 1) ++singleton;
        }
        CHECK(bearing == 4);
        CHECK(singleton == 4);
        for (int m = 0; m < 8; ++m)
            CHECK_FALSE((!S.contained_hyperplanes[m].empty() &&
                         !S.contained_hyperplanes[7 - m].empty()));
        CHECK_FALSE(cube_pair_separates(H, c, c).has_value());
    }
    CHECK(three_cubes == 2);
}

TEST_CASE("cube enumeration") {
    auto cube = make_ncube(3);
    HyperplaneSet H(cube);
    auto cubes = enumerate_cubes(H);
    int cnt[4] = {0, 0, 0, 0};
    for (const auto& c : cubes) {
        ++cnt[c.dimension];
        CHECK(c.vertices.size() == (1u << c.dimension));
        CHECK(c.classes.size() == static_cast<std::size_t>(c.dimension));
        for (std::size_t a = 0; a < c.classes.size(); ++a)
            for (std::size_t b = a + 1; b < c.classes.size(); ++b)
                CHECK(H.transverse(c.classes[a], c.classes[b]));
    }
    CHECK(cnt[0] == 8);
    CHECK(cnt[1] == 12);
    CHECK(cnt[2] == 6);
    CHECK(cnt[3] == 1);

    auto g = make_grid(3, 3);
    HyperplaneSet Hg(g);
    auto gcubes = enumerate_cubes(Hg);
    int squares = 0;
    for (const auto& c : gcubes)
        if (c.dimension == 2) {
            ++squares;
            CHECK(c.maximal);
        }
    CHECK(squares == 4);

    // spiked(k): maximal cubes are the k three-cubes and the 4k spike edges
    auto sp = make_spiked(3);
    HyperplaneSet Hs(sp);
    int max_by_dim[4] = {0, 0, 0, 0};
    for (const auto& c : enumerate_cubes(Hs))
        if (c.maximal) ++max_by_dim[c.dimension];
    CHECK(max_by_dim[0] == 0);
    CHECK(max_by_dim[1] == 12);
    CHECK(max_by_dim[2] == 0);
    CHECK(max_by_dim[3] == 3);
}

TEST_CASE("every square spans exactly two classes") {
    for (const auto& X : {make_staircase(6), make_grid(4, 4), make_spiked(2),
                          make_pentagon_plane(2)}) {
        HyperplaneSet H(X);
        for (const auto& c : enumerate_cubes(H)) {
            if (c.dimension != 2) continue;
            std::set<int> cls;
            for (std::size_t i = 0; i < c.vertices.size(); ++i)
                for (std::size_t j = i + 1; j < c.vertices.size(); ++j)
                    if (X.adjacent(c.vertices[i], c.vertices[j]))
                        cls.insert(H.class_of_edge(c.vertices[i], c.vertices[j]));
            CHECK(cls.size() == 2);
        }
    }
}

TEST_CASE("free faces") {
    auto cube = make_ncube(3);
    HyperplaneSet H(cube);
    auto ff = free_faces(enumerate_cubes(H));
    CHECK(ff.size() == 6);
    for (const auto& f : ff) CHECK(f.dimension == 2);

    // spiked complex: interior free faces are exactly the 3-cube 2-faces
    auto sp = make_spiked(2);
    HyperplaneSet Hs(sp);
    auto sff = free_faces(enumerate_cubes(Hs));
    int interior_squares = 0;
    for (const auto& f : sff) {
        if (!f.interior) {
            CHECK(f.dimension == 0);  // window-rim spike tips
            continue;
        }
        CHECK(f.dimension == 2);
        ++interior_squares;
    }
    CHECK(interior_squares == 12);
}

TEST_CASE("cube pair separation on a path") {
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < 8; ++i) {
        vs.push_back("u" + std::to_string(i));
        if (i) es.emplace_back("u" + std::to_string(i - 1), "u" + std::to_string(i));
    }
    auto X = CubeComplex::build(vs, es);
    HyperplaneSet H(X);
    auto cubes = enumerate_cubes(H);
    auto edge_cube = [&](const std::string& a, const std::string& b) {
        std::vector<Vertex> want{X.index(a), X.index(b)};
        std::sort(want.begin(), want.end());
        for (const auto& c : cubes)
            if (c.dimension == 1 && c.vertices == want) return c;
        FAIL("edge cube not found");
        return cubes[0];
    };
    // edges with further edges beyond both get a separated pair
    auto w = cube_pair_separates(H, edge_cube("u2", "u3"), edge_cube("u4", "u5"));
    REQUIRE(w.has_value());
    CHECK(w->h1 != w->h2);
    // an edge at the very end cannot be separated from anything beyond it
    CHECK_FALSE(cube_pair_separates(H, edge_cube("u0", "u1"), edge_cube("u0", "u1")).has_value());
    // a middle edge alone is fine
    CHECK(cube_pair_separates(H, edge_cube("u3", "u4"), edge_cube("u3", "u4")).has_value());
}

TEST_CASE("halfspace depth") {
    // 6-vertex path, middle hyperplane: three hops to cross from either end
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < 6; ++i) {
        vs.push_back("u" + std::to_string(i));
        if (i) es.emplace_back("u" + std::to_string(i - 1), "u" + std::to_string(i));
    }
    auto P = CubeComplex::build(vs, es);
    HyperplaneSet Hp(P);
    int mid = Hp.class_of_edge(P.index("u2"), P.index("u3"));
    auto d = halfspace_depth(Hp, mid);
    CHECK(std::max(d.depth[0], d.depth[1]) == 3);
    CHECK(std::min(d.depth[0], d.depth[1]) == 3);

    // spike edge at the rim: tip side crosses in one hop, cube side is deep
    auto sp = make_spiked(2);
    HyperplaneSet Hs(sp);
    int spike = Hs.class_of_edge(sp.index("q0.c010"), sp.index("q0.s1"));
    auto ds = halfspace_depth(Hs, spike);
    CHECK(std::min(ds.depth[0], ds.depth[1]) == 1);
    CHECK(std::max(ds.depth[0], ds.depth[1]) >= 6);
    CHECK(ds.boundary_affected);

    auto g = make_grid(5, 5);
    HyperplaneSet Hg(g);
    int v = Hg.class_of_edge(g.index("2,0"), g.index("3,0"));
    auto dg = halfspace_depth(Hg, v);
    CHECK(std::max(dg.depth[0], dg.depth[1]) == 3);
    CHECK(std::min(dg.depth[0], dg.depth[1]) == 2);
}
