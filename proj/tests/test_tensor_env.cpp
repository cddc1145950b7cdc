#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "vws/tensor_env.hpp"

using namespace vws;

namespace {

TensorEnvPoly make(int N, int p, std::vector<std::pair<Monomial, Rational>> raw) {
    return normal_order(raw, N, p);
}

Monomial mono(std::vector<std::vector<std::pair<int, int>>> factors) {
    Monomial m;
    for (auto& f : factors) {
        Word w;
        for (auto [i, j] : f) w.push_back({(uint8_t)i, (uint8_t)j});
        m.push_back(std::move(w));
    }
    return m;
}

// integer N x N matrices, the defining representation
using Mat = std::vector<std::vector<long>>;
Mat unit(int N, int i, int j) {
    Mat m(N, std::vector<long>(N, 0));
    m[i - 1][j - 1] = 1;
    return m;
}
Mat mul(const Mat& a, const Mat& b) {
    int N = (int)a.size();
    Mat c(N, std::vector<long>(N, 0));
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k)
            if (a[i][k])
                for (int j = 0; j < N; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}
Mat sub(Mat a, const Mat& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) a[i][j] -= b[i][j];
    return a;
}

Monomial random_monomial(std::mt19937& rng, int N, int p, int maxdeg) {
    Monomial m(p);
    for (auto& w : m) {
        int len = (int)(rng() % (maxdeg + 1));
        for (int k = 0; k < len; ++k)
            w.push_back({(uint8_t)(1 + rng() % N), (uint8_t)(1 + rng() % N)});
    }
    return m;
}

} // namespace

TEST_CASE("matrix-unit commutator oracle fixes the rewrite constants") {
    // [E_ij, E_kl] = d_jk E_il - d_li E_kj checked on concrete matrices
    for (int N : {2, 3, 4})
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                for (int k = 1; k <= N; ++k)
                    for (int l = 1; l <= N; ++l) {
                        Mat lhs = sub(mul(unit(N, i, j), unit(N, k, l)),
                                      mul(unit(N, k, l), unit(N, i, j)));
                        Mat rhs(N, std::vector<long>(N, 0));
                        if (j == k) rhs = unit(N, i, l);
                        if (l == i) rhs = sub(rhs, unit(N, k, j));
                        CHECK(lhs == rhs);
                    }
}

TEST_CASE("already ordered commuting monomial is untouched") {
    auto p = make(4, 1, {{mono({{{1, 2}, {3, 4}}}), 1}});
    REQUIRE(p.terms.size() == 1);
    CHECK(p.terms.begin()->first == mono({{{1, 2}, {3, 4}}}));
    CHECK(p.terms.begin()->second == 1);
}

TEST_CASE("e21 e12 = e12 e21 + e22 - e11") {
    auto p = make(2, 1, {{mono({{{2, 1}, {1, 2}}}), 1}});
    TensorEnvPoly expect;
    expect.N = 2;
    expect.p = 1;
    expect.terms[mono({{{1, 2}, {2, 1}}})] = 1;
    expect.terms[mono({{{2, 2}}})] = 1;
    expect.terms[mono({{{1, 1}}})] = -1;
    CHECK(p == expect);
}

TEST_CASE("index out of range is rejected") {
    CHECK_THROWS(make(2, 1, {{mono({{{3, 1}}}), 1}}));
}

TEST_CASE("normal ordering is strategy independent") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        Monomial m = random_monomial(rng, 3, 2, 5);
        std::map<Monomial, Rational> first, shuffled;
        normal_order_term(first, m, 1);
        std::function<int(int)> pick = [&](int n) { return (int)(rng() % n); };
        normal_order_term(shuffled, m, 1, &pick);
        CHECK(first == shuffled);
    }
}

TEST_CASE("poly ops: cancellation, product, unit") {
    std::mt19937 rng(9);
    Monomial m = random_monomial(rng, 3, 2, 3);
    auto a = make(3, 2, {{m, Rational(2, 3)}});
    auto zero = tep_add(a, tep_scale(a, -1));
    CHECK(zero.zero());

    auto x = make(2, 1, {{mono({{{2, 1}}}), 1}});
    auto y = make(2, 1, {{mono({{{1, 2}}}), 1}});
    CHECK(tep_mul(x, y) == make(2, 1, {{mono({{{2, 1}, {1, 2}}}), 1}}));

    CHECK(tep_mul(tep_unit(3, 2), a) == a);
    CHECK(tep_mul(a, tep_unit(3, 2)) == a);

    CHECK_THROWS(tep_add(a, make(2, 2, {})));
}

TEST_CASE("tau_U worked example") {
    // e12 e23 (x) e13 e24  ->  e32 e21 (x) e42 e31
    auto lhs = tau_U(make(4, 2, {{mono({{{1, 2}, {2, 3}}, {{1, 3}, {2, 4}}}), 1}}));
    auto rhs = make(4, 2, {{mono({{{3, 2}, {2, 1}}, {{4, 2}, {3, 1}}}), 1}});
    CHECK(lhs == rhs);
}

TEST_CASE("tau_U fixes the symmetric pairing element") {
    std::vector<std::pair<Monomial, Rational>> raw;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            raw.push_back({mono({{{i, j}}, {{j, i}}}), 1});
    auto c = make(2, 2, raw);
    CHECK(tau_U(c) == c);
}

TEST_CASE("tau_U is an involution and an anti-homomorphism") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = make(3, 2, {{random_monomial(rng, 3, 2, 4), Rational(1 + (int)(rng() % 5))},
                             {random_monomial(rng, 3, 2, 4), Rational(-2)}});
        auto b = make(3, 2, {{random_monomial(rng, 3, 2, 3), Rational(3)}});
        CHECK(tau_U(tau_U(a)) == a);
        CHECK(tau_U(tep_mul(a, b)) == tep_mul(tau_U(b), tau_U(a)));
    }
}

TEST_CASE("pi on degree-1 monomials is the identity") {
    CommTensorPoly c;
    c.N = 2;
    c.p = 2;
    c.add_term(mono({{{1, 2}}, {{2, 1}}}), 1);
    auto u = pi_symmetrize(c);
    CHECK(u == make(2, 2, {{mono({{{1, 2}}, {{2, 1}}}), 1}}));
}

TEST_CASE("pi averages orderings: e12 e21 commutative") {
    CommTensorPoly c;
    c.N = 2;
    c.p = 1;
    c.add_term(mono({{{1, 2}, {2, 1}}}), 1);
    auto u = pi_symmetrize(c);
    TensorEnvPoly expect;
    expect.N = 2;
    expect.p = 1;
    expect.terms[mono({{{1, 2}, {2, 1}}})] = 1;
    expect.terms[mono({{{2, 2}}})] = Rational(1, 2);
    expect.terms[mono({{{1, 1}}})] = Rational(-1, 2);
    CHECK(u == expect);
}

TEST_CASE("pi is linear and sends 1 to 1") {
    CHECK(pi_symmetrize(ctp_unit(3, 2)) == tep_unit(3, 2));

    std::mt19937 rng(17);
    CommTensorPoly a, b;
    a.N = b.N = 3;
    a.p = b.p = 2;
    a.add_term(random_monomial(rng, 3, 2, 3), Rational(2, 5));
    b.add_term(random_monomial(rng, 3, 2, 3), Rational(-7));
    auto sum = pi_symmetrize(ctp_add(a, b));
    CHECK(sum == tep_add(pi_symmetrize(a), pi_symmetrize(b)));
}

TEST_CASE("text output format") {
    auto p = make(2, 2, {{mono({{{1, 2}}, {{2, 1}}}), Rational(3, 2)}});
    CHECK(tep_to_text(p) == "3/2 e[1,2] (x) e[2,1]\n");
    auto u = tep_unit(2, 2);
    CHECK(tep_to_text(u) == "1/1 1 (x) 1\n");
}
