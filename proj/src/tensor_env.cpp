#include "vws/tensor_env.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vws {

Gen transpose(Gen g) { return {g.j, g.i}; }

namespace {

// positions of adjacent strict inversions across all factors
void find_inversions(const Monomial& m, std::vector<std::pair<int, int>>& inv) {
    inv.clear();
    for (size_t f = 0; f < m.size(); ++f)
        for (size_t i = 0; i + 1 < m[f].size(); ++i)
            if (m[f][i + 1] < m[f][i]) inv.push_back({(int)f, (int)i});
}

void accumulate(std::map<Monomial, Rational>& out, Monomial&& m, Rational&& c) {
    auto it = out.find(m);
    if (it == out.end()) {
        out.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
}

} // namespace

void normal_order_term(std::map<Monomial, Rational>& out, Monomial m0, Rational c0,
                       const std::function<int(int)>* pick) {
    std::vector<std::pair<Monomial, Rational>> stack;
    stack.emplace_back(std::move(m0), std::move(c0));
    std::vector<std::pair<int, int>> inv;
    while (!stack.empty()) {
        auto [m, c] = std::move(stack.back());
        stack.pop_back();
        find_inversions(m, inv);
        if (inv.empty()) {
            accumulate(out, std::move(m), std::move(c));
            continue;
        }
        auto [f, i] = inv[pick ? (*pick)((int)inv.size()) : 0];
        Gen a = m[f][i], b = m[f][i + 1]; // a > b
        {
            Monomial ms = m;
            std::swap(ms[f][i], ms[f][i + 1]);
            stack.emplace_back(std::move(ms), c);
        }
        if (a.j == b.i) { // delta_{jk} e_{il}
            Monomial md = m;
            md[f][i] = {a.i, b.j};
            md[f].erase(md[f].begin() + i + 1);
            stack.emplace_back(std::move(md), c);
        }
        if (b.j == a.i) { // -delta_{li} e_{kj}
            Monomial md = m;
            md[f][i] = {b.i, a.j};
            md[f].erase(md[f].begin() + i + 1);
            stack.emplace_back(std::move(md), -c);
        }
    }
}

TensorEnvPoly normal_order(const std::vector<std::pair<Monomial, Rational>>& raw,
                           int N, int p) {
    TensorEnvPoly out;
    out.N = N;
    out.p = p;
    for (const auto& [m, c] : raw) {
        if ((int)m.size() != p) throw std::invalid_argument("wrong tensor width");
        for (const auto& w : m)
            for (Gen g : w)
                if (g.i < 1 || g.i > N || g.j < 1 || g.j > N)
                    throw std::invalid_argument("generator index out of range");
        normal_order_term(out.terms, m, c);
    }
    return out;
}

TensorEnvPoly tep_add(const TensorEnvPoly& a, const TensorEnvPoly& b) {
    if (a.N != b.N || a.p != b.p) throw std::invalid_argument("mismatched N or p");
    TensorEnvPoly out = a;
    for (const auto& [m, c] : b.terms) {
        Monomial mm = m;
        Rational cc = c;
        accumulate(out.terms, std::move(mm), std::move(cc));
    }
    return out;
}

TensorEnvPoly tep_scale(const TensorEnvPoly& a, const Rational& c) {
    TensorEnvPoly out;
    out.N = a.N;
    out.p = a.p;
    if (c == 0) return out;
    out.terms = a.terms;
    for (auto& [m, x] : out.terms) x *= c;
    return out;
}

TensorEnvPoly tep_mul(const TensorEnvPoly& a, const TensorEnvPoly& b) {
    if (a.N != b.N || a.p != b.p) throw std::invalid_argument("mismatched N or p");
    TensorEnvPoly out;
    out.N = a.N;
    out.p = a.p;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Monomial m = ma;
            for (int f = 0; f < a.p; ++f)
                m[f].insert(m[f].end(), mb[f].begin(), mb[f].end());
            normal_order_term(out.terms, std::move(m), ca * cb);
        }
    return out;
}

TensorEnvPoly tep_unit(int N, int p) {
    TensorEnvPoly out;
    out.N = N;
    out.p = p;
    out.terms.emplace(Monomial(p), Rational(1));
    return out;
}

TensorEnvPoly tau_U(const TensorEnvPoly& a) {
    TensorEnvPoly out;
    out.N = a.N;
    out.p = a.p;
    for (const auto& [m, c] : a.terms) {
        Monomial r = m;
        for (auto& w : r) {
            std::reverse(w.begin(), w.end());
            for (Gen& g : w) g = transpose(g);
        }
        normal_order_term(out.terms, std::move(r), Rational(c));
    }
    return out;
}

void CommTensorPoly::add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    for (auto& w : m) std::sort(w.begin(), w.end());
    accumulate(terms, std::move(m), Rational(c));
}

CommTensorPoly ctp_add(const CommTensorPoly& a, const CommTensorPoly& b) {
    if (a.N != b.N || a.p != b.p) throw std::invalid_argument("mismatched N or p");
    CommTensorPoly out = a;
    for (const auto& [m, c] : b.terms) {
        Monomial mm = m;
        Rational cc = c;
        accumulate(out.terms, std::move(mm), std::move(cc));
    }
    return out;
}

CommTensorPoly ctp_mul(const CommTensorPoly& a, const CommTensorPoly& b) {
    if (a.N != b.N || a.p != b.p) throw std::invalid_argument("mismatched N or p");
    CommTensorPoly out;
    out.N = a.N;
    out.p = a.p;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Monomial m = ma;
            for (int f = 0; f < a.p; ++f)
                m[f].insert(m[f].end(), mb[f].begin(), mb[f].end());
            out.add_term(std::move(m), ca * cb);
        }
    return out;
}

CommTensorPoly ctp_unit(int N, int p) {
    CommTensorPoly out;
    out.N = N;
    out.p = p;
    out.terms.emplace(Monomial(p), Rational(1));
    return out;
}

namespace {

// all orderings of one sorted word, with multiplicity weight 1/k!
void orderings_of(const Word& sorted, std::vector<Word>& out) {
    out.clear();
    Word w = sorted;
    std::vector<int> idx(w.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = (int)i;
    // iterate permutations of positions (equal generators counted separately)
    std::sort(idx.begin(), idx.end());
    do {
        Word perm(w.size());
        for (size_t i = 0; i < w.size(); ++i) perm[i] = w[idx[i]];
        out.push_back(std::move(perm));
    } while (std::next_permutation(idx.begin(), idx.end()));
}

} // namespace

TensorEnvPoly pi_symmetrize(const CommTensorPoly& c) {
    TensorEnvPoly out;
    out.N = c.N;
    out.p = c.p;
    std::vector<std::vector<Word>> per_factor;
    for (const auto& [m, coeff] : c.terms) {
        per_factor.assign(m.size(), {});
        Rational weight = coeff;
        for (size_t f = 0; f < m.size(); ++f) {
            orderings_of(m[f], per_factor[f]);
            weight /= (long)per_factor[f].size();
        }
        // product over factors of the ordering choices
        std::vector<size_t> choice(m.size(), 0);
        for (;;) {
            Monomial mono(m.size());
            for (size_t f = 0; f < m.size(); ++f) mono[f] = per_factor[f][choice[f]];
            normal_order_term(out.terms, std::move(mono), weight);
            size_t f = 0;
            while (f < m.size() && ++choice[f] == per_factor[f].size()) {
                choice[f] = 0;
                ++f;
            }
            if (f == m.size()) break;
        }
    }
    return out;
}

namespace {

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (Gen g : w)
        s += "e[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
    return s;
}

} // namespace

std::string tep_to_text(const TensorEnvPoly& a) {
    std::ostringstream os;
    for (const auto& [m, c] : a.terms) {
        os << rational_to_string(c) << " ";
        for (size_t f = 0; f < m.size(); ++f) {
            if (f) os << " (x) ";
            os << word_str(m[f]);
        }
        os << "\n";
    }
    return os.str();
}

std::string tep_to_json(const TensorEnvPoly& a) {
    nlohmann::json j;
    j["N"] = a.N;
    j["p"] = a.p;
    j["terms"] = nlohmann::json::array();
    for (const auto& [m, c] : a.terms) {
        nlohmann::json t;
        t["coeff"] = rational_to_string(c);
        t["factors"] = nlohmann::json::array();
        for (const auto& w : m) {
            nlohmann::json fw = nlohmann::json::array();
            for (Gen g : w) fw.push_back({g.i, g.j});
            t["factors"].push_back(fw);
        }
        j["terms"].push_back(t);
    }
    return j.dump(2);
}

} // namespace vws
