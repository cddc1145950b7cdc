#include "vws/diagram.hpp"

#include <algorithm>
#include <cstring>

namespace vws {

std::string kind_name(DiagramKind k) {
    switch (k) {
        case DiagramKind::chord: return "chord";
        case DiagramKind::generalized: return "generalized";
        case DiagramKind::jacobi: return "jacobi";
    }
    return "?";
}

void Diagram::validate() const {
    const int D = darts();
    if ((int)mate.size() != D)
        throw diagram_error("pairing table has wrong size");
    for (int d = 0; d < D; ++d) {
        if (mate[d] < 0 || mate[d] >= D)
            throw diagram_error("unpaired half-edge");
        if (mate[d] == d)
            throw diagram_error("half-edge paired with itself");
        if (mate[mate[d]] != d)
            throw diagram_error("pairing is not an involution");
    }
    if ((num_legs + num_vertices) % 2 != 0)
        throw diagram_error("odd vertex count: degree is not an integer");

    if (kind == DiagramKind::jacobi) {
        if (!string_legs.empty())
            throw diagram_error("jacobi diagram cannot carry strings");
        if ((int)leg_color.size() != num_legs)
            throw diagram_error("missing leg colors");
        for (int c : leg_color)
            if (c < 1 || c > p)
                throw diagram_error("color out of range");
    } else {
        if (p < 1)
            throw diagram_error("need at least one string");
        if ((int)string_legs.size() != p)
            throw diagram_error("string table has wrong size");
        if (!leg_color.empty())
            throw diagram_error("support legs do not carry colors");
        std::vector<char> seen(num_legs, 0);
        for (const auto& s : string_legs)
            for (int leg : s) {
                if (leg < 0 || leg >= num_legs || seen[leg])
                    throw diagram_error("leg/string table inconsistent");
                seen[leg] = 1;
            }
        for (char c : seen)
            if (!c) throw diagram_error("leg not placed on any string");
        if (kind == DiagramKind::chord && num_vertices != 0)
            throw diagram_error("chord diagram cannot contain trivalent vertices");
    }
}

std::string encode_diagram(const Diagram& d) {
    std::vector<int32_t> out;
    out.push_back((int32_t)d.kind);
    out.push_back(d.p);
    out.push_back(d.num_legs);
    out.push_back(d.num_vertices);
    if (d.kind == DiagramKind::jacobi) {
        for (int c : d.leg_color) out.push_back(c);
    } else {
        for (const auto& s : d.string_legs) {
            out.push_back((int32_t)s.size());
            for (int leg : s) out.push_back(leg);
        }
    }
    for (int m : d.mate) out.push_back(m);
    std::string bytes(out.size() * 4, '\0');
    std::memcpy(bytes.data(), out.data(), bytes.size());
    return bytes;
}

Diagram tau_A(const Diagram& d) {
    if (d.kind == DiagramKind::jacobi)
        throw diagram_error("tau_A is defined on diagrams with strings; use tau_B_apply");
    Diagram r = d;
    for (auto& s : r.string_legs) std::reverse(s.begin(), s.end());
    // flip every cyclic order: swap slots 1 and 2 of each vertex
    for (int v = 0; v < d.num_vertices; ++v) {
        int d1 = d.slot_dart(v, 1), d2 = d.slot_dart(v, 2);
        std::swap(r.mate[d1], r.mate[d2]);
    }
    // re-point mates at the swapped slots
    auto remap = [&](int dart) {
        if (!d.is_leg_dart(dart)) {
            int s = d.dart_slot(dart);
            if (s == 1) return dart + 1;
            if (s == 2) return dart - 1;
        }
        return dart;
    };
    for (int x = 0; x < r.darts(); ++x) r.mate[x] = remap(r.mate[x]);
    return r;
}

Diagram reverse_strings_only(const Diagram& d) {
    if (d.kind == DiagramKind::jacobi)
        throw diagram_error("no strings to reverse");
    Diagram r = d;
    for (auto& s : r.string_legs) std::reverse(s.begin(), s.end());
    return r;
}

std::pair<int, Diagram> tau_B_apply(const Diagram& d) {
    if (d.kind != DiagramKind::jacobi)
        throw diagram_error("tau_B_apply is defined on jacobi diagrams");
    return {d.num_legs % 2 == 0 ? 1 : -1, d};
}

bool has_isolated_chord(const Diagram& d) {
    if (d.kind != DiagramKind::chord)
        throw diagram_error("isolated-chord test is defined on chord diagrams");
    for (const auto& s : d.string_legs)
        for (size_t i = 0; i + 1 < s.size(); ++i)
            if (d.mate[s[i]] == s[i + 1]) return true;
    return false;
}

} // namespace vws
