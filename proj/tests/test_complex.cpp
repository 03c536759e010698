#include "catch2/catch_amalgamated.hpp"

#include "cubical/complex.hpp"
#include "cubical/generators.hpp"
#include "oracles.hpp"

using namespace cubical;

namespace {

CubeComplex square() {
    return CubeComplex::build({"00", "01", "10", "11"},
                              {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
}

CubeComplex six_cycle() {
    return CubeComplex::build({"0", "1", "2", "3", "4", "5"},
                              {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "0"}});
}

Vertex at(const CubeComplex& X, const std::string& id) { return X.index(id); }

}  // namespace

TEST_CASE("build validates its input") {
    CHECK_THROWS_MATCHES(CubeComplex::build({"a", "a"}, {}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::duplicate_vertex; }));
    CHECK_THROWS_MATCHES(CubeComplex::build({"a", "b"}, {{"a", "c"}}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::unknown_endpoint; }));
    CHECK_THROWS_MATCHES(CubeComplex::build({"a", "b"}, {{"a", "a"}}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::self_loop; }));
    CHECK_THROWS_MATCHES(CubeComplex::build({"a", "b", "c"}, {{"a", "b"}}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::disconnected; }));
}

TEST_CASE("metric cache") {
    auto sq = square();
    CHECK(sq.diameter() == 2);
    CHECK(sq.distance(at(sq, "00"), at(sq, "11")) == 2);
    auto cube = make_ncube(3);
    CHECK(cube.vertex_count() == 8);
    CHECK(cube.edge_count() == 12);
    CHECK(cube.diameter() == 3);
}

TEST_CASE("median of triples") {
    auto sq = square();
    CHECK(median(sq, at(sq, "00"), at(sq, "01"), at(sq, "11")) == at(sq, "01"));
    CHECK(median(sq, at(sq, "00"), at(sq, "00"), at(sq, "11")) == at(sq, "00"));
    auto cube = make_ncube(3);
    CHECK(median(cube, at(cube, "100"), at(cube, "010"), at(cube, "001")) == at(cube, "000"));

    auto c6 = six_cycle();
    CHECK_THROWS_MATCHES(median(c6, at(c6, "0"), at(c6, "2"), at(c6, "4")), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::not_median; }));
}

TEST_CASE("median graph validation") {
    CHECK(is_median_graph(make_grid(5, 5)).ok);
    CHECK(is_median_graph(make_tree(30, 5)).ok);
    CHECK(is_median_graph(make_staircase(6)).ok);
    CHECK(is_median_graph(make_spiked(2)).ok);

    auto c6 = six_cycle();
    auto res = is_median_graph(c6);
    REQUIRE_FALSE(res.ok);
    // the alternating triple has no median at all
    CHECK(res.witness_medians.size() != 1);
    CHECK(medians_of_triple(c6, at(c6, "0"), at(c6, "2"), at(c6, "4")).empty());

    // K_{2,3} has a triple with two medians
    auto k23 = CubeComplex::build({"a", "b", "x", "y", "z"}, {{"a", "x"},
                                                              {"a", "y"},
                                                              {"a", "z"},
                                                              {"b", "x"},
                                                              {"b", "y"},
                                                              {"b", "z"}});
    CHECK_FALSE(is_median_graph(k23).ok);
}

TEST_CASE("intervals") {
    auto g = make_grid(5, 5);
    auto I = interval(g, at(g, "0,0"), at(g, "2,2"));
    CHECK(I.members.size() == 9);

    auto single = interval(g, at(g, "1,1"), at(g, "1,1"));
    CHECK(single.members == std::vector<Vertex>{at(g, "1,1")});

    auto t = make_tree(20, 3);
    for (Vertex x = 0; x < t.vertex_count(); x += 5)
        for (Vertex y = 0; y < t.vertex_count(); y += 3)
            CHECK(static_cast<int>(interval(t, x, y).members.size()) == t.distance(x, y) + 1);
}

TEST_CASE("interval convexity holds for every pair") {
    for (const auto& X : {make_staircase(6), make_grid(4, 4), make_spiked(1)}) {
        for (Vertex x = 0; x < X.vertex_count(); ++x)
            for (Vertex y = x; y < X.vertex_count(); ++y)
                CHECK(is_convex(X, interval(X, x, y).members));
    }
}

TEST_CASE("convexity") {
    auto g = make_grid(5, 5);
    std::vector<Vertex> column;
    for (int y = 0; y < 5; ++y) column.push_back(at(g, "3," + std::to_string(y)));
    CHECK(is_convex(g, column));
    CHECK_FALSE(is_convex(g, {at(g, "0,0"), at(g, "1,1")}));
}

TEST_CASE("geodesic cut") {
    auto g = make_grid(5, 5);
    Vertex a = at(g, "0,0"), b = at(g, "2,2");
    CHECK(geodesic_cut(g, a, b, {at(g, "1,0"), at(g, "0,1")}).cut);
    CHECK_FALSE(geodesic_cut(g, a, b, {at(g, "1,1")}).cut);
    // the oracle agrees: 6 geodesics, only 2 pass the middle
    auto all = oracles::enumerate_geodesics(g, a, b);
    CHECK(all.size() == 6);
    CHECK_FALSE(oracles::brute_force_geodesic_cut(g, a, b, {at(g, "1,1")}));

    auto rep = geodesic_cut(g, a, b, {a});
    CHECK(rep.cut);
    CHECK(rep.endpoint_in_cut);

    auto t = make_tree(20, 9);
    auto path = interval(t, 0, t.vertex_count() - 1).members;
    if (path.size() > 2) CHECK(geodesic_cut(t, 0, t.vertex_count() - 1, {path[1]}).cut);
}

TEST_CASE("geodesic cut agrees with enumeration on all pairs") {
    for (const auto& X : {make_grid(4, 4), make_staircase(6), make_spiked(1), make_tree(14, 2)}) {
        for (Vertex x = 0; x < X.vertex_count(); ++x)
            for (Vertex y = x + 1; y < X.vertex_count(); ++y) {
                if (X.distance(x, y) > 8) continue;
                // a few structured cut sets per pair
                std::vector<std::vector<Vertex>> cuts;
                cuts.push_back({});
                cuts.push_back({(x + y) % X.vertex_count()});
                auto I = interval(X, x, y).members;
                cuts.push_back({I[I.size() / 2]});
                if (I.size() > 3) cuts.push_back({I[1], I[I.size() - 2]});
                for (const auto& S : cuts)
                    REQUIRE(geodesic_cut(X, x, y, S).cut ==
                            oracles::brute_force_geodesic_cut(X, x, y, S));
            }
    }
}

TEST_CASE("geodesic extension") {
    auto g = make_grid(5, 5);
    std::vector<Vertex> straight{at(g, "0,2"), at(g, "1,2"), at(g, "2,2")};
    auto next = extend_geodesic_step(g, straight);
    REQUIRE(next.has_value());
    CHECK(g.distance(straight.front(), *next) == 3);

    // spanning both directions at a far corner: nothing extends
    std::vector<Vertex> full;
    for (int x = 0; x <= 4; ++x) full.push_back(at(g, std::to_string(x) + ",0"));
    for (int y = 1; y <= 4; ++y) full.push_back(at(g, "4," + std::to_string(y)));
    CHECK_FALSE(extend_geodesic_step(g, full).has_value());

    std::vector<Vertex> bad{at(g, "0,0"), at(g, "1,0"), at(g, "0,0")};
    CHECK_THROWS_MATCHES(extend_geodesic_step(g, bad), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::not_geodesic; }));
}

TEST_CASE("vertex links") {
    auto g = make_grid(3, 3);
    auto center = vertex_link(g, at(g, "1,1"));
    CHECK(center.nodes.size() == 4);
    CHECK(center.link_edges.size() == 4);  // 4-cycle
    CHECK(center.is_join);

    auto sq = square();
    auto corner = vertex_link(sq, at(sq, "00"));
    CHECK(corner.nodes.size() == 2);
    CHECK(corner.link_edges.size() == 1);
    CHECK(corner.is_join);

    // spiked cube corner carrying a spike: the spike is isolated in the link
    auto sp = make_spiked(1);
    auto L = vertex_link(sp, at(sp, "q0.c100"));
    CHECK(L.nodes.size() == 4);
    CHECK_FALSE(L.is_join);
}

TEST_CASE("windows carry interior flags") {
    auto line = make_line(4);
    CHECK(line.has_window());
    CHECK(line.is_interior(at(line, "0")));
    CHECK_FALSE(line.is_interior(at(line, "4")));
    CHECK_FALSE(line.is_interior(at(line, "-4")));

    // intervals reaching the rim say so
    CHECK(interval(line, at(line, "-4"), at(line, "0")).boundary_affected);
    CHECK_FALSE(interval(line, at(line, "-1"), at(line, "1")).boundary_affected);

    auto g = make_grid(3, 3);
    CHECK_FALSE(g.has_window());
    CHECK(g.is_interior(0));
}
