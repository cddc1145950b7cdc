#ifndef VWS_TENSOR_ENV_HPP
#define VWS_TENSOR_ENV_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vws/rational.hpp"

namespace vws {

// Matrix unit e_{ij}, indices 1-based. The frozen total order on generators
// is lexicographic on (i, j); PBW monomials are nondecreasing in it.
struct Gen {
    uint8_t i = 0, j = 0;
    auto operator<=>(const Gen&) const = default;
};

using Word = std::vector<Gen>;      // one tensor factor, product left to right
using Monomial = std::vector<Word>; // one word per tensor factor

Gen transpose(Gen g);

// Exact polynomial in U(gl_N)^{(x)p}, every stored monomial normal-ordered.
struct TensorEnvPoly {
    int N = 0;
    int p = 0;
    std::map<Monomial, Rational> terms;

    bool zero() const { return terms.empty(); }
    bool operator==(const TensorEnvPoly& o) const {
        return N == o.N && p == o.p && terms == o.terms;
    }
};

// Accumulates coeff * monomial into `out`, rewriting adjacent out-of-order
// pairs with e_ij e_kl = e_kl e_ij + d_jk e_il - d_li e_kj until normal
// ordered. `pick` (tests only) selects which inversion to rewrite next among
// `count` candidates; the result is independent of that choice.
void normal_order_term(std::map<Monomial, Rational>& out, Monomial m, Rational c,
                       const std::function<int(int count)>* pick = nullptr);

// Normal-ordered polynomial from raw (not necessarily ordered) terms.
TensorEnvPoly normal_order(const std::vector<std::pair<Monomial, Rational>>& raw,
                           int N, int p);

TensorEnvPoly tep_add(const TensorEnvPoly& a, const TensorEnvPoly& b);
TensorEnvPoly tep_scale(const TensorEnvPoly& a, const Rational& c);
TensorEnvPoly tep_mul(const TensorEnvPoly& a, const TensorEnvPoly& b);
TensorEnvPoly tep_unit(int N, int p);

// Anti-involution: each factor word reversed, each generator transposed,
// then re-normal-ordered.
TensorEnvPoly tau_U(const TensorEnvPoly& a);

// Commutative polynomial in S(gl_N)^{(x)p}: factor words kept sorted.
struct CommTensorPoly {
    int N = 0;
    int p = 0;
    std::map<Monomial, Rational> terms;

    void add_term(Monomial m, const Rational& c);
    bool operator==(const CommTensorPoly& o) const {
        return N == o.N && p == o.p && terms == o.terms;
    }
};

CommTensorPoly ctp_mul(const CommTensorPoly& a, const CommTensorPoly& b);
CommTensorPoly ctp_add(const CommTensorPoly& a, const CommTensorPoly& b);
CommTensorPoly ctp_unit(int N, int p);

// Poincare-Birkhoff-Witt symmetrization: each commutative factor of degree k
// becomes the average of its k! orderings.
TensorEnvPoly pi_symmetrize(const CommTensorPoly& c);

// One term per line: "<num>/<den> e[i,j]e[k,l] (x) ...", factors separated
// by "(x)", empty factors written "1", lines in monomial order.
std::string tep_to_text(const TensorEnvPoly& a);
std::string tep_to_json(const TensorEnvPoly& a);

} // namespace vws

#endif
