#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "vws/diagram.hpp"
#include "vws/lincomb.hpp"

using namespace vws;

namespace {

bool canon_equal(const Diagram& a, const Diagram& b) {
    auto ca = canonicalize(a), cb = canonicalize(b);
    if (ca.sign == 0 || cb.sign == 0) return ca.sign == cb.sign;
    return ca.sign == cb.sign && encode_diagram(ca.diagram) == encode_diagram(cb.diagram);
}

// valid random diagram of the requested degree (structure unconstrained
// beyond the invariants)
Diagram random_diagram(std::mt19937& rng, DiagramKind kind, int degree, int p) {
    for (;;) {
        Diagram d;
        d.kind = kind;
        d.p = p;
        int total = 2 * degree;
        int T = 0;
        if (kind != DiagramKind::chord)
            T = (int)(rng() % (total + 1));
        d.num_vertices = T;
        d.num_legs = total - T;
        if (d.num_legs < 0) continue;

        int D = d.darts();
        if (D % 2) continue;
        std::vector<int> darts(D);
        for (int i = 0; i < D; ++i) darts[i] = i;
        std::shuffle(darts.begin(), darts.end(), rng);
        d.mate.assign(D, -1);
        for (int i = 0; i < D; i += 2) {
            d.mate[darts[i]] = darts[i + 1];
            d.mate[darts[i + 1]] = darts[i];
        }
        if (kind == DiagramKind::jacobi) {
            for (int l = 0; l < d.num_legs; ++l)
                d.leg_color.push_back(1 + (int)(rng() % p));
        } else {
            d.string_legs.assign(p, {});
            for (int l = 0; l < d.num_legs; ++l)
                d.string_legs[rng() % p].push_back(l);
        }
        try {
            d.validate();
        } catch (const diagram_error&) {
            continue;
        }
        return d;
    }
}

} // namespace

TEST_CASE("chord shorthand parses with the written crossing pattern") {
    Diagram d = parse_diagram("p=2; s1: A B; s2: B A");
    CHECK(d.kind == DiagramKind::chord);
    CHECK(d.p == 2);
    CHECK(d.degree() == 2);
    // s1 bottom-to-top: A B ; s2 bottom-to-top: B A  =>  crossing chords
    int a1 = d.string_legs[0][0], b1 = d.string_legs[0][1];
    int b2 = d.string_legs[1][0], a2 = d.string_legs[1][1];
    CHECK(d.mate[a1] == a2);
    CHECK(d.mate[b1] == b2);
}

TEST_CASE("jacobi single edge parses, terse and full form") {
    Diagram d1 = parse_diagram("jacobi; leg a 1; leg b 2; edge a b");
    Diagram d2 = parse_diagram("type jacobi\nleg a color 1\nleg b color 2\nedge a b\n");
    CHECK(d1.kind == DiagramKind::jacobi);
    CHECK(d1.num_legs == 2);
    CHECK(d1.leg_color == std::vector<int>{1, 2});
    CHECK(canon_equal(d1, d2));
}

TEST_CASE("two-valent vertex is an arity error") {
    CHECK_THROWS_AS(parse_diagram("type jacobi\nvertex v a b\n"), diagram_error);
}

TEST_CASE("syntax errors carry line/column") {
    try {
        parse_diagram("type chord\nstrings 2\nbogus x\n");
        FAIL("expected a parse error");
    } catch (const diagram_error& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("unpaired half-edge is rejected") {
    CHECK_THROWS_WITH_AS(parse_diagram("type jacobi\nleg a color 1\n"),
                         doctest::Contains("unpaired"), diagram_error);
}

TEST_CASE("color out of range is rejected") {
    CHECK_THROWS_AS(parse_diagram("type jacobi\nleg a color 0\nleg b color 1\nedge a b"),
                    diagram_error);
}

TEST_CASE("serialize of a canonical single chord is frozen") {
    Diagram d = parse_diagram("p=1; s1: A A");
    auto c = canonicalize(d);
    REQUIRE(c.sign == 1);
    CHECK(serialize_diagram(c.diagram) ==
          "type chord\nstrings 1\nleg l0 on 1\nleg l1 on 1\nedge l0 l1\n");
}

TEST_CASE("serialize round trip is isomorphic and byte idempotent") {
    const char* texts[] = {
        "p=2; s1: A B; s2: B A",
        "type generalized\nstrings 2\nleg u1 on 1\nleg u2 on 1\nleg u3 on 2\nleg u4 on 2\n"
        "vertex a a0 a1 a2\nvertex b b0 b1 b2\n"
        "edge a.0 u1\nedge a.1 u3\nedge a.2 b.1\nedge b.0 u2\nedge b.2 u4\n",
        "type jacobi\nleg x color 1\nleg y color 2\nleg z color 2\n"
        "vertex v s0 s1 s2\nedge v.0 x\nedge v.1 y\nedge v.2 z\n",
    };
    for (const char* t : texts) {
        Diagram d = parse_diagram(t);
        std::string s1 = serialize_diagram(d);
        Diagram r = parse_diagram(s1);
        CHECK(canon_equal(d, r));
        CHECK(serialize_diagram(r) == s1);
    }
}

TEST_CASE("canonicalize: chord diagrams get sign +1 and stable form") {
    Diagram d = parse_diagram("p=2; s1: A B; s2: A B");
    auto c = canonicalize(d);
    CHECK(c.sign == 1);
    auto c2 = canonicalize(c.diagram);
    CHECK(c2.sign == 1);
    CHECK(encode_diagram(c2.diagram) == encode_diagram(c.diagram));
}

TEST_CASE("canonicalize is idempotent on a random corpus") {
    std::mt19937 rng(7);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        auto kind = i % 3 == 0   ? DiagramKind::chord
                    : i % 3 == 1 ? DiagramKind::generalized
                                 : DiagramKind::jacobi;
        Diagram d = random_diagram(rng, kind, 1 + (int)(rng() % 5), 2);
        auto c = canonicalize(d);
        if (c.sign == 0) continue;
        auto c2 = canonicalize(c.diagram);
        CHECK(c2.sign == 1);
        CHECK(encode_diagram(c2.diagram) == encode_diagram(c.diagram));
        CHECK(c.diagram.degree() == d.degree());
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("parse/serialize preserves the canonical form on a random corpus") {
    std::mt19937 rng(23);
    for (int i = 0; i < 120; ++i) {
        auto kind = i % 3 == 0   ? DiagramKind::chord
                    : i % 3 == 1 ? DiagramKind::generalized
                                 : DiagramKind::jacobi;
        Diagram d = random_diagram(rng, kind, 1 + (int)(rng() % 5), 2);
        Diagram r = parse_diagram(serialize_diagram(d));
        CHECK(canon_equal(d, r));
        CHECK(r.degree() == d.degree());
    }
}

TEST_CASE("tadpole is antisymmetry degenerate") {
    Diagram d = parse_diagram(
        "type jacobi\nleg a color 1\nvertex v s0 s1 s2\nedge v.0 v.1\nedge v.2 a\n");
    CHECK(canonicalize(d).sign == 0);
}

TEST_CASE("theta graph: one flipped cyclic order gives the opposite sign") {
    Diagram t1 = parse_diagram(
        "type jacobi\nvertex a a0 a1 a2\nvertex b b0 b1 b2\n"
        "edge a.0 b.0\nedge a.1 b.1\nedge a.2 b.2\n");
    Diagram t2 = parse_diagram(
        "type jacobi\nvertex a a0 a1 a2\nvertex b b0 b1 b2\n"
        "edge a.0 b.0\nedge a.1 b.2\nedge a.2 b.1\n");
    auto c1 = canonicalize(t1), c2 = canonicalize(t2);
    REQUIRE(c1.sign != 0);
    REQUIRE(c2.sign != 0);
    CHECK(encode_diagram(c1.diagram) == encode_diagram(c2.diagram));
    CHECK(c1.sign == -c2.sign);
}

TEST_CASE("tau_A fixes the symmetric single chord") {
    Diagram d = parse_diagram("p=2; s1: A; s2: A");
    CHECK(canon_equal(d, tau_A(d)));
}

TEST_CASE("tau_A moves the three-string two-chord example") {
    Diagram d = parse_diagram("p=3; s1: A; s2: A B; s3: B");
    CHECK(!canon_equal(d, tau_A(d)));
}

TEST_CASE("tau_A is an involution on a corpus") {
    std::mt19937 rng(11);
    for (int i = 0; i < 80; ++i) {
        auto kind = i % 2 ? DiagramKind::chord : DiagramKind::generalized;
        Diagram d = random_diagram(rng, kind, 1 + (int)(rng() % 4), 2);
        Diagram dd = tau_A(tau_A(d));
        CHECK(canon_equal(d, dd));
        CHECK(tau_A(d).degree() == d.degree());
    }
}

TEST_CASE("tau_A rejects jacobi diagrams") {
    Diagram d = parse_diagram("jacobi; leg a 1; leg b 1; edge a b");
    CHECK_THROWS_AS(tau_A(d), diagram_error);
}

TEST_CASE("tau_B signs") {
    Diagram two = parse_diagram("jacobi; leg a 1; leg b 2; edge a b");
    CHECK(tau_B_apply(two).first == 1);

    Diagram theta = parse_diagram(
        "type jacobi\nvertex a a0 a1 a2\nvertex b b0 b1 b2\n"
        "edge a.0 b.0\nedge a.1 b.1\nedge a.2 b.2\n");
    CHECK(tau_B_apply(theta).first == 1);

    Diagram tri = parse_diagram(
        "type jacobi\nleg x color 1\nleg y color 2\nleg z color 2\n"
        "vertex v s0 s1 s2\nedge v.0 x\nedge v.1 y\nedge v.2 z\n");
    auto [s, d] = tau_B_apply(tri);
    CHECK(s == -1);
    CHECK(canon_equal(d, tri));
    auto [s2, d2] = tau_B_apply(d);
    CHECK(s * s2 == 1);
}

TEST_CASE("isolated chords") {
    CHECK(has_isolated_chord(parse_diagram("p=2; s1: A A")));
    CHECK(!has_isolated_chord(parse_diagram("p=2; s1: A; s2: A")));
    CHECK(has_isolated_chord(parse_diagram("p=2; s1: B A A B")));
    CHECK(!has_isolated_chord(parse_diagram("p=2; s1: A B A B")));
    CHECK_THROWS_AS(has_isolated_chord(parse_diagram(
                        "type generalized\nstrings 1\nleg a on 1\nleg b on 1\nleg c on 1\n"
                        "vertex v s0 s1 s2\nedge v.0 a\nedge v.1 b\nedge v.2 c\n")),
                    diagram_error);
}

TEST_CASE("empty diagram is valid, degree 0") {
    Diagram d = parse_diagram("type chord\nstrings 2\n");
    CHECK(d.degree() == 0);
    auto c = canonicalize(d);
    CHECK(c.sign == 1);
    std::string s = serialize_diagram(c.diagram);
    CHECK(canon_equal(parse_diagram(s), d));
}

TEST_CASE("lincomb accumulates canonical forms with AS signs") {
    Diagram t1 = parse_diagram(
        "type jacobi\nvertex a a0 a1 a2\nvertex b b0 b1 b2\n"
        "edge a.0 b.0\nedge a.1 b.1\nedge a.2 b.2\n");
    Diagram t2 = parse_diagram(
        "type jacobi\nvertex a a0 a1 a2\nvertex b b0 b1 b2\n"
        "edge a.0 b.0\nedge a.1 b.2\nedge a.2 b.1\n");
    LinComb lc;
    lc.add(t1, 1);
    lc.add(t2, 1); // equals -t1 after canonicalization
    CHECK(lc.zero());

    Diagram tadpole = parse_diagram(
        "type jacobi\nleg a color 1\nvertex v s0 s1 s2\nedge v.0 v.1\nedge v.2 a\n");
    lc.add(tadpole, 5);
    CHECK(lc.zero());
}
