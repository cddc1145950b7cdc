#include "vws/necklace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vws {

Necklace canonical_necklace(const std::string& word) {
    if (word.empty()) throw std::invalid_argument("empty necklace word");
    for (char c : word)
        if (c < '1' || c > '9') throw std::invalid_argument("color out of range");
    // words here are short (<= 14 beads); scan all rotations
    std::string best = word;
    std::string rot = word;
    for (size_t k = 1; k < word.size(); ++k) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return {best};
}

Necklace reverse_necklace(const Necklace& m) {
    std::string w = m.word;
    std::reverse(w.begin(), w.end());
    return canonical_necklace(w);
}

ZPolyN ZPolyN::constant(long long c) {
    ZPolyN r;
    if (c != 0) r.coeff = {c};
    return r;
}

ZPolyN ZPolyN::n_power(int k, long long c) {
    ZPolyN r;
    if (c != 0) {
        r.coeff.assign(k + 1, 0);
        r.coeff[k] = c;
    }
    return r;
}

long long ZPolyN::eval(long long n) const {
    long long acc = 0;
    for (size_t k = coeff.size(); k-- > 0;) acc = acc * n + coeff[k];
    return acc;
}

std::string ZPolyN::str() const {
    if (coeff.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < coeff.size(); ++k) {
        if (coeff[k] == 0) continue;
        if (!s.empty()) s += coeff[k] > 0 ? " + " : " - ";
        else if (coeff[k] < 0) s += "-";
        long long a = coeff[k] < 0 ? -coeff[k] : coeff[k];
        if (k == 0) s += std::to_string(a);
        else if (k == 1) s += std::to_string(a) + "*N";
        else s += std::to_string(a) + "*N^" + std::to_string(k);
    }
    return s;
}

ZPolyN& ZPolyN::operator+=(const ZPolyN& o) {
    if (o.coeff.size() > coeff.size()) coeff.resize(o.coeff.size(), 0);
    for (size_t k = 0; k < o.coeff.size(); ++k) coeff[k] += o.coeff[k];
    while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
    return *this;
}

ZPolyN ZPolyN::operator*(const ZPolyN& o) const {
    ZPolyN r;
    if (coeff.empty() || o.coeff.empty()) return r;
    r.coeff.assign(coeff.size() + o.coeff.size() - 1, 0);
    for (size_t a = 0; a < coeff.size(); ++a)
        for (size_t b = 0; b < o.coeff.size(); ++b)
            r.coeff[a + b] += coeff[a] * o.coeff[b];
    while (!r.coeff.empty() && r.coeff.back() == 0) r.coeff.pop_back();
    return r;
}

ZPolyN ZPolyN::operator-() const {
    ZPolyN r = *this;
    for (auto& c : r.coeff) c = -c;
    return r;
}

void NecklacePoly::add_term(std::vector<Necklace> mono, const ZPolyN& c) {
    if (c.zero()) return;
    std::sort(mono.begin(), mono.end());
    auto it = terms.find(mono);
    if (it == terms.end()) {
        terms.emplace(std::move(mono), c);
    } else {
        it->second += c;
        if (it->second.zero()) terms.erase(it);
    }
}

NecklacePoly npoly_add(const NecklacePoly& a, const NecklacePoly& b) {
    if (a.p != b.p) throw std::invalid_argument("mismatched p");
    NecklacePoly out = a;
    for (const auto& [m, c] : b.terms) out.add_term(m, c);
    return out;
}

NecklacePoly npoly_mul(const NecklacePoly& a, const NecklacePoly& b) {
    if (a.p != b.p) throw std::invalid_argument("mismatched p");
    NecklacePoly out;
    out.p = a.p;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            std::vector<Necklace> m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(std::move(m), ca * cb);
        }
    return out;
}

NecklacePoly npoly_scale(const NecklacePoly& a, const ZPolyN& c) {
    NecklacePoly out;
    out.p = a.p;
    for (const auto& [m, x] : a.terms) out.add_term(m, x * c);
    return out;
}

NecklacePoly npoly_unit(int p) {
    NecklacePoly out;
    out.p = p;
    out.terms.emplace(std::vector<Necklace>{}, ZPolyN::constant(1));
    return out;
}

NecklacePoly tau_S_poly(const NecklacePoly& q) {
    NecklacePoly out;
    out.p = q.p;
    for (const auto& [m, c] : q.terms) {
        std::vector<Necklace> r;
        r.reserve(m.size());
        for (const auto& n : m) r.push_back(reverse_necklace(n));
        out.add_term(std::move(r), c);
    }
    return out;
}

CommTensorPoly expand_necklace(const Necklace& m, int N, int p) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    CommTensorPoly out;
    out.N = N;
    out.p = p;
    const size_t n = m.word.size();
    // arc k sits between bead k-1 and bead k (cyclically)
    std::vector<int> idx(n, 1);
    for (;;) {
        Monomial mono(p);
        for (size_t b = 0; b < n; ++b) {
            int color = m.word[b] - '0';
            int in = idx[b], outgoing = idx[(b + 1) % n];
            mono[color - 1].push_back({(uint8_t)in, (uint8_t)outgoing});
        }
        out.add_term(std::move(mono), Rational(1));
        size_t k = 0;
        while (k < n && ++idx[k] > N) {
            idx[k] = 1;
            ++k;
        }
        if (k == n) break;
    }
    return out;
}

CommTensorPoly expand_necklace_poly(const NecklacePoly& q, int N) {
    CommTensorPoly out;
    out.N = N;
    out.p = q.p;
    for (const auto& [m, c] : q.terms) {
        CommTensorPoly prod = ctp_unit(N, q.p);
        for (const auto& n : m) prod = ctp_mul(prod, expand_necklace(n, N, q.p));
        long long cc = c.eval(N);
        if (cc == 0) continue;
        for (const auto& [mono, x] : prod.terms) {
            Monomial mm = mono;
            out.add_term(std::move(mm), x * (long)cc);
        }
    }
    return out;
}

std::string npoly_to_text(const NecklacePoly& q) {
    if (q.terms.empty()) return "0\n";
    std::ostringstream os;
    for (const auto& [m, c] : q.terms) {
        os << "(" << c.str() << ")";
        for (const auto& n : m) os << " * x[" << n.word << "]";
        if (m.empty()) os << " * 1";
        os << "\n";
    }
    return os.str();
}

std::string npoly_to_json(const NecklacePoly& q) {
    nlohmann::json j;
    j["p"] = q.p;
    j["terms"] = nlohmann::json::array();
    for (const auto& [m, c] : q.terms) {
        nlohmann::json t;
        t["coeff_poly_in_N"] = c.coeff;
        t["necklaces"] = nlohmann::json::array();
        for (const auto& n : m) t["necklaces"].push_back(n.word);
        j["terms"].push_back(t);
    }
    return j.dump(2);
}

} // namespace vws
