#ifndef VWS_NECKLACE_HPP
#define VWS_NECKLACE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vws/tensor_env.hpp"

namespace vws {

// Cyclic word of colors 1..p, stored as the lexicographically smallest
// rotation. Words use digit characters, so colors are capped at 9.
struct Necklace {
    std::string word;
    auto operator<=>(const Necklace&) const = default;
};

Necklace canonical_necklace(const std::string& word);
Necklace reverse_necklace(const Necklace& m);

// Integer polynomial in the symbolic rank N; coeff[k] multiplies N^k.
struct ZPolyN {
    std::vector<long long> coeff;

    static ZPolyN constant(long long c);
    static ZPolyN n_power(int k, long long c = 1);
    bool zero() const { return coeff.empty(); }
    long long eval(long long n) const;
    std::string str() const; // "a0 + a1*N + a2*N^2"
    ZPolyN& operator+=(const ZPolyN& o);
    ZPolyN operator*(const ZPolyN& o) const;
    ZPolyN operator-() const;
    bool operator==(const ZPolyN&) const = default;
};

// Element of the necklace algebra: monomials are multisets of necklaces,
// coefficients are integer polynomials in N.
struct NecklacePoly {
    int p = 0;
    std::map<std::vector<Necklace>, ZPolyN> terms; // keys sorted multisets

    void add_term(std::vector<Necklace> mono, const ZPolyN& c);
    bool zero() const { return terms.empty(); }
    bool operator==(const NecklacePoly& o) const { return p == o.p && terms == o.terms; }
};

NecklacePoly npoly_add(const NecklacePoly& a, const NecklacePoly& b);
NecklacePoly npoly_mul(const NecklacePoly& a, const NecklacePoly& b);
NecklacePoly npoly_scale(const NecklacePoly& a, const ZPolyN& c);
NecklacePoly npoly_unit(int p);

// Reverses the orientation of every necklace in every monomial.
NecklacePoly tau_S_poly(const NecklacePoly& q);

// Sum over index assignments to the arcs between consecutive beads: each
// bead of color c becomes e_{(incoming arc),(outgoing arc)} in factor c.
CommTensorPoly expand_necklace(const Necklace& m, int N, int p);

// Substitutes a concrete N into the coefficients and expands every factor.
CommTensorPoly expand_necklace_poly(const NecklacePoly& q, int N);

// "(<coeff>) * x[<word>] * x[<word>]", terms in monomial order.
std::string npoly_to_text(const NecklacePoly& q);
std::string npoly_to_json(const NecklacePoly& q);

} // namespace vws

#endif
