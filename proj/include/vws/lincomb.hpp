#ifndef VWS_LINCOMB_HPP
#define VWS_LINCOMB_HPP

#include <map>

#include "vws/diagram.hpp"
#include "vws/rational.hpp"

namespace vws {

// Formal rational linear combination of diagrams. Keys are canonical forms;
// antisymmetry signs are absorbed on insertion and degenerate diagrams drop
// out. Zero coefficients are never stored.
class LinComb {
public:
    struct Entry {
        Diagram diagram;
        Rational coeff;
    };

    LinComb() = default;

    // Canonicalizes d and accumulates sign * c.
    void add(const Diagram& d, const Rational& c) {
        if (c == 0) return;
        SignedDiagram sd = canonicalize(d);
        if (sd.sign == 0) return;
        add_canonical(sd.diagram, sd.sign < 0 ? Rational(-c) : c);
    }

    // d must already be a canonical representative.
    void add_canonical(const Diagram& d, const Rational& c) {
        if (c == 0) return;
        auto key = encode_diagram(d);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), Entry{d, c});
        } else {
            it->second.coeff += c;
            if (it->second.coeff == 0) terms_.erase(it);
        }
    }

    void add(const LinComb& o, const Rational& scale = 1) {
        for (const auto& [k, e] : o.terms_) {
            Rational c = e.coeff * scale;
            if (c == 0) continue;
            auto it = terms_.find(k);
            if (it == terms_.end()) terms_.emplace(k, Entry{e.diagram, c});
            else {
                it->second.coeff += c;
                if (it->second.coeff == 0) terms_.erase(it);
            }
        }
    }

    void scale(const Rational& c) {
        if (c == 0) { terms_.clear(); return; }
        for (auto& [k, e] : terms_) e.coeff *= c;
    }

    bool zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    bool operator==(const LinComb& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        for (; a != terms_.end(); ++a, ++b)
            if (a->first != b->first || a->second.coeff != b->second.coeff) return false;
        return true;
    }

    const std::map<std::string, Entry>& terms() const { return terms_; }

private:
    std::map<std::string, Entry> terms_;
};

} // namespace vws

#endif
