#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "vws/necklace.hpp"

using namespace vws;

namespace {

NecklacePoly poly(int p, std::vector<std::pair<std::vector<std::string>, ZPolyN>> terms) {
    NecklacePoly q;
    q.p = p;
    for (auto& [words, c] : terms) {
        std::vector<Necklace> mono;
        for (auto& w : words) mono.push_back(canonical_necklace(w));
        q.add_term(std::move(mono), c);
    }
    return q;
}

// every 2-colored word of the given length
std::vector<std::string> all_words(int len) {
    std::vector<std::string> out;
    for (int m = 0; m < (1 << len); ++m) {
        std::string w;
        for (int k = 0; k < len; ++k) w += (m >> k) & 1 ? '2' : '1';
        out.push_back(w);
    }
    return out;
}

} // namespace

TEST_CASE("canonical rotation") {
    CHECK(canonical_necklace("21").word == "12");
    CHECK(canonical_necklace("1212").word == "1212");
    CHECK(canonical_necklace("2121122").word == "1122212");
    CHECK_THROWS(canonical_necklace(""));
    CHECK_THROWS(canonical_necklace("1a2"));
}

TEST_CASE("reversal") {
    CHECK(reverse_necklace(canonical_necklace("12")).word == "12");
    CHECK(reverse_necklace(canonical_necklace("112122")).word == "112212");
    CHECK(reverse_necklace(canonical_necklace("1121222")).word == "1122212");
}

TEST_CASE("coefficient polynomials in N") {
    ZPolyN a = ZPolyN::constant(3);
    ZPolyN b = ZPolyN::n_power(1);
    CHECK(a.str() == "3");
    CHECK(b.str() == "1*N");
    ZPolyN c = a;
    c += b;
    CHECK(c.str() == "3 + 1*N");
    CHECK((b * b).str() == "1*N^2");
    CHECK(c.eval(4) == 7);
    ZPolyN z = c;
    z += -c;
    CHECK(z.zero());
}

TEST_CASE("tau_S on polynomials, worked terms") {
    auto q = poly(2, {{{"12"}, ZPolyN::constant(1)}});
    CHECK(tau_S_poly(q) == q);

    auto a = poly(2, {{{"112122"}, ZPolyN::constant(1)}});
    auto b = poly(2, {{{"112212"}, ZPolyN::constant(1)}});
    CHECK(tau_S_poly(a) == b);

    auto na = poly(2, {{{"1121222"}, ZPolyN::n_power(1)}});
    auto nb = poly(2, {{{"1122212"}, ZPolyN::n_power(1)}});
    CHECK(tau_S_poly(na) == nb);
}

TEST_CASE("tau_S is an involution on random polynomials") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        NecklacePoly q;
        q.p = 2;
        for (int t = 0; t < 3; ++t) {
            std::vector<Necklace> mono;
            int nf = 1 + (int)(rng() % 2);
            for (int f = 0; f < nf; ++f) {
                std::string w;
                int len = 1 + (int)(rng() % 7);
                for (int k = 0; k < len; ++k) w += char('1' + rng() % 2);
                mono.push_back(canonical_necklace(w));
            }
            q.add_term(std::move(mono), ZPolyN::n_power((int)(rng() % 3), 1 + (int)(rng() % 9)));
        }
        CHECK(tau_S_poly(tau_S_poly(q)) == q);
    }
}

TEST_CASE("ring operations") {
    auto x2 = poly(2, {{{"2"}, ZPolyN::constant(1)}});
    auto big = poly(2, {{{"112122"}, ZPolyN::constant(1)}});
    auto prod = npoly_mul(x2, big);
    REQUIRE(prod.terms.size() == 1);
    CHECK(prod.terms.begin()->first ==
          std::vector<Necklace>{canonical_necklace("112122"), canonical_necklace("2")});

    auto q = npoly_add(big, x2);
    auto z = npoly_add(q, npoly_scale(q, ZPolyN::constant(-1)));
    CHECK(z.zero());

    auto nx12 = npoly_scale(poly(2, {{{"12"}, ZPolyN::constant(1)}}), ZPolyN::n_power(1));
    auto sq = npoly_mul(nx12, poly(2, {{{"12"}, ZPolyN::constant(1)}}));
    REQUIRE(sq.terms.size() == 1);
    CHECK(sq.terms.begin()->second == ZPolyN::n_power(1));
    CHECK(sq.terms.begin()->first ==
          std::vector<Necklace>{canonical_necklace("12"), canonical_necklace("12")});

    CHECK_THROWS(npoly_add(poly(2, {}), poly(3, {})));

    // commutative and associative on random triples
    std::mt19937 rng(19);
    for (int t = 0; t < 30; ++t) {
        auto r = [&]() {
            std::string w;
            int len = 1 + (int)(rng() % 5);
            for (int k = 0; k < len; ++k) w += char('1' + rng() % 2);
            return poly(2, {{{w}, ZPolyN::constant(1 + (int)(rng() % 4))}});
        };
        auto a = r(), b = r(), c = r();
        CHECK(npoly_mul(a, b) == npoly_mul(b, a));
        CHECK(npoly_mul(npoly_mul(a, b), c) == npoly_mul(a, npoly_mul(b, c)));
    }
}

TEST_CASE("expand_necklace worked examples") {
    // x2 at N=1: a single e_11 in factor 2
    auto e = expand_necklace(canonical_necklace("2"), 1, 2);
    REQUIRE(e.terms.size() == 1);
    Monomial m = e.terms.begin()->first;
    CHECK(m[0].empty());
    REQUIRE(m[1].size() == 1);
    CHECK(m[1][0] == Gen{1, 1});

    // x12 at N=2: sum over i,j of e_ij (x) e_ji, 4 monomials
    auto e2 = expand_necklace(canonical_necklace("12"), 2, 2);
    CHECK(e2.terms.size() == 4);
    for (const auto& [mono, c] : e2.terms) {
        CHECK(c == 1);
        REQUIRE(mono[0].size() == 1);
        REQUIRE(mono[1].size() == 1);
        CHECK(mono[0][0].i == mono[1][0].j);
        CHECK(mono[0][0].j == mono[1][0].i);
    }
}

TEST_CASE("expand_necklace monomial count and color bookkeeping") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        std::string w;
        int len = 1 + (int)(rng() % 5);
        for (int k = 0; k < len; ++k) w += char('1' + rng() % 2);
        auto neck = canonical_necklace(w);
        int N = 2 + (int)(rng() % 2);
        auto e = expand_necklace(neck, N, 2);
        // N^len assignments before like-term collection
        long total = 0;
        long expect = 1;
        for (size_t k = 0; k < neck.word.size(); ++k) expect *= N;
        std::multiset<int> colors_expected;
        for (char c : neck.word) colors_expected.insert(c - '0');
        for (const auto& [mono, c] : e.terms) {
            long cnum = 0;
            mpz_class num = c.get_num();
            cnum = num.get_si();
            total += cnum;
            std::multiset<int> colors;
            for (int f = 0; f < 2; ++f)
                for (size_t k = 0; k < mono[f].size(); ++k) colors.insert(f + 1);
            CHECK(colors == colors_expected);
        }
        CHECK(total == expect);
    }
}

TEST_CASE("minimal non-symmetric 2-colored necklace is 112122") {
    std::set<std::string> seen;
    std::vector<std::string> nonfixed;
    for (int len = 1; len <= 6; ++len)
        for (const auto& w : all_words(len)) {
            auto n = canonical_necklace(w);
            if (!seen.insert(n.word).second) continue;
            if (reverse_necklace(n) != n) {
                nonfixed.push_back(n.word);
                CHECK(len == 6); // none shorter
            }
        }
    std::sort(nonfixed.begin(), nonfixed.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    REQUIRE(!nonfixed.empty());
    CHECK(nonfixed.front() == "112122");
}

TEST_CASE("text format") {
    auto q = npoly_scale(poly(2, {{{"1121222"}, ZPolyN::constant(1)}}), ZPolyN::n_power(1));
    CHECK(npoly_to_text(q) == "(1*N) * x[1121222]\n");
    auto pr = npoly_mul(poly(2, {{{"2"}, ZPolyN::constant(3)}}),
                        poly(2, {{{"112212"}, ZPolyN::constant(1)}}));
    CHECK(npoly_to_text(pr) == "(3) * x[112212] * x[2]\n");
    CHECK(npoly_to_text(poly(2, {})) == "0\n");
}
