#include <doctest.h>

#include <set>

#include "qsh/quiver.hpp"
#include "qsh/scalars.hpp"

using namespace qsh;

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

Path path_of(const Quiver& q, const std::string& expr) {
    return parse_path_expr(q, expr);
}

}  // namespace

TEST_SUITE("quiver") {

TEST_CASE("builtin shapes") {
    Quiver k3 = make_kronecker(3);
    CHECK(k3.vertex_count() == 2);
    CHECK(k3.arrow_count() == 3);
    for (Arrow a : k3.arrows()) {
        CHECK(k3.vertex_name(k3.source(a)) == "e");
        CHECK(k3.vertex_name(k3.target(a)) == "z");
    }

    Quiver s2 = make_subspace(2);
    CHECK(s2.vertex_count() == 3);
    CHECK(s2.arrows_into(*s2.find_vertex("e")).size() == 2);
    CHECK(s2.arrows_from(*s2.find_vertex("f1")).size() == 1);

    Quiver a4 = make_linear_a(4);
    CHECK(a4.vertex_count() == 4);
    CHECK(a4.arrow_count() == 3);
    CHECK(a4.vertex_name(a4.target(*a4.find_arrow("a3"))) == "v4");

    Quiver ainf = make_ainfinity(10);
    CHECK(ainf.vertex_count() == 11);
    CHECK(ainf.arrow_count() == 10);
    CHECK(ainf.vertex_name(Vertex{7}) == "g7");
    CHECK(ainf.source(Arrow{4}) == Vertex{4});
    CHECK(ainf.target(Arrow{4}) == Vertex{5});

    CHECK_THROWS_AS(make_linear_a(1), std::domain_error);
    CHECK_THROWS_AS(make_kronecker(0), std::domain_error);
    CHECK_THROWS_AS(builtin_quiver("heart", 3), std::invalid_argument);
}

TEST_CASE("validation catches dangling endpoints and duplicates") {
    CHECK(make_linear_a(3).validate().ok());
    CHECK(make_ainfinity(10).validate().ok());

    Quiver bad = Quiver::finite({"e"}, {{"a1", "e", "zz"}});
    auto report = bad.validate();
    REQUIRE_FALSE(report.ok());
    CHECK(report.issues[0].subject == "arrow 'a1'");
    CHECK(report.str().find("zz") != std::string::npos);

    Quiver dup = Quiver::finite({"e", "e"}, {});
    CHECK_FALSE(dup.validate().ok());
}

TEST_CASE("paths_from") {
    Quiver a4 = make_linear_a(4);
    auto paths = paths_from(a4, *a4.find_vertex("v1"), 2);
    REQUIRE(paths.size() == 1);
    CHECK(path_str(a4, paths[0]) == "a2a1");

    Quiver k2 = make_kronecker(2);
    auto len1 = paths_from(k2, *k2.find_vertex("e"), 1);
    REQUIRE(len1.size() == 2);
    CHECK(path_str(k2, len1[0]) == "a1");
    CHECK(path_str(k2, len1[1]) == "a2");
    CHECK(paths_from(k2, *k2.find_vertex("e"), 2).empty());

    // length 1 over all vertices recovers the arrow set
    for (const Quiver& q : {make_kronecker(3), make_subspace(3), make_linear_a(5)}) {
        std::set<int> seen;
        for (Vertex v : q.vertices())
            for (const Path& p : paths_from(q, v, 1)) seen.insert(p.arrows[0].id);
        CHECK(static_cast<int>(seen.size()) == q.arrow_count());
    }

    Quiver ainf = make_ainfinity(5);
    CHECK(paths_from(ainf, Vertex{2}, 3).size() == 1);
    CHECK_THROWS_AS(paths_from(ainf, Vertex{2}, 4), support_bound_error);
}

TEST_CASE("concat laws") {
    Quiver a3 = make_linear_a(3);
    Path a1 = path_of(a3, "a1");
    Path a2 = path_of(a3, "a2");
    CHECK(concat(a3, trivial_path(path_target(a3, a1)), a1) == a1);
    CHECK(concat(a3, a1, trivial_path(a1.source)) == a1);
    CHECK(path_str(a3, concat(a3, a2, a1)) == "a2a1");
    CHECK_THROWS_AS(concat(a3, a1, a2), std::invalid_argument);

    // associativity where defined
    Quiver a5 = make_linear_a(5);
    Path p1 = path_of(a5, "a1");
    Path p2 = path_of(a5, "a3a2");
    Path p3 = path_of(a5, "a4");
    CHECK(concat(a5, p3, concat(a5, p2, p1)) == concat(a5, concat(a5, p3, p2), p1));
}

TEST_CASE("thin splits of an arrow") {
    Quiver k1 = make_kronecker(1);
    Path a = path_of(k1, "a1");
    auto splits = thin_splits(k1, a, 2);
    REQUIRE(splits.size() == 2);
    // lexicographic bit order: (0,1) then (1,0)
    CHECK(splits[0].bits == std::vector<std::uint8_t>{0, 1});
    CHECK(std::get<Vertex>(splits[0].entries[0]) == *k1.find_vertex("e"));
    CHECK(std::get<Arrow>(splits[0].entries[1]) == a.arrows[0]);
    CHECK(splits[1].bits == std::vector<std::uint8_t>{1, 0});
    CHECK(std::get<Arrow>(splits[1].entries[0]) == a.arrows[0]);
    CHECK(std::get<Vertex>(splits[1].entries[1]) == *k1.find_vertex("z"));
}

TEST_CASE("thin splits of a trivial path") {
    Quiver a3 = make_linear_a(3);
    Path g = trivial_path(*a3.find_vertex("v2"));
    auto splits = thin_splits(a3, g, 3);
    REQUIRE(splits.size() == 1);
    for (const auto& entry : splits[0].entries)
        CHECK(std::get<Vertex>(entry) == *a3.find_vertex("v2"));
}

TEST_CASE("thin split counts and reassembly") {
    Quiver a5 = make_linear_a(5);
    for (Vertex v : a5.vertices())
        for (int len = 0; len <= 4; ++len)
            for (const Path& p : paths_from(a5, v, len))
                for (int n = len; n <= 8; ++n) {
                    auto splits = thin_splits(a5, p, n);
                    CHECK(static_cast<long>(splits.size()) == binom(n, len));
                    if (n >= 1)
                        for (const auto& split : splits) CHECK(reassemble(a5, split) == p);
                }
    CHECK_THROWS_AS(thin_splits(a5, path_of(a5, "a2a1"), 1), std::invalid_argument);
}

TEST_CASE("complement") {
    CHECK(complement({1, 0}) == std::vector<std::uint8_t>{0, 1});
    CHECK(complement({}) == std::vector<std::uint8_t>{});
    CHECK(complement({1, 1, 0, 0}) == std::vector<std::uint8_t>{0, 0, 1, 1});
}

TEST_CASE("path expressions") {
    Quiver a3 = make_linear_a(3);
    CHECK(path_of(a3, "a2*a1") == path_of(a3, "a2a1"));
    CHECK(path_of(a3, "a2a1").arrows.size() == 2);
    CHECK(path_of(a3, "a2a1").arrows[0] == *a3.find_arrow("a1"));
    CHECK(path_of(a3, "v2") == trivial_path(*a3.find_vertex("v2")));
    CHECK(path_of(a3, "a2*v2*a1") == path_of(a3, "a2a1"));
    CHECK_THROWS_AS(path_of(a3, "a1*a2"), parse_error);
    CHECK_THROWS_AS(path_of(a3, "b9"), parse_error);
    CHECK_THROWS_AS(path_of(a3, ""), parse_error);

    Quiver ainf = make_ainfinity(12);
    Path p = path_of(ainf, "a2a1a0");
    CHECK(p.source == Vertex{0});
    CHECK(p.arrows.size() == 3);
    CHECK(path_str(ainf, p) == "a2a1a0");
}

}  // TEST_SUITE
