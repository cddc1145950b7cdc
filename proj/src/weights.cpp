#include "vws/weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace vws {

namespace {

// side nodes: 2*dart = cw side, 2*dart + 1 = ccw side
int succ_node(const Diagram& d, uint32_t mask, int node, bool leg_tips) {
    int dart = node >> 1;
    if ((node & 1) == 0) return 2 * d.mate[dart] + 1; // along the band
    if (d.is_leg_dart(dart)) return leg_tips ? 2 * dart : -1;
    int v = d.dart_vertex(dart), s = d.dart_slot(dart);
    int next = ((mask >> v) & 1) ? (s + 2) % 3 : (s + 1) % 3;
    return 2 * d.slot_dart(v, next);
}

} // namespace

std::vector<ResolvedFatGraph> resolve_vertices(const Diagram& d) {
    int t = d.num_vertices;
    if (t > 20) throw diagram_error("too many trivalent vertices to resolve");
    std::vector<ResolvedFatGraph> out;
    out.reserve(1u << t);
    for (uint32_t m = 0; m < (1u << t); ++m) {
        uint32_t mask = 0;
        for (int v = 0; v < t; ++v)
            if ((m >> (t - 1 - v)) & 1) mask |= 1u << v;
        out.push_back({__builtin_parity(mask) ? -1 : 1, mask});
    }
    return out;
}

BoundaryDecomposition boundary_walk(const Diagram& d, uint32_t mask) {
    const bool leg_tips = d.kind == DiagramKind::jacobi;
    const int nodes = 2 * d.darts();
    BoundaryDecomposition out;
    out.leg_comp.assign(d.num_legs, {-1, -1});
    std::vector<int> comp_of(nodes, -1);

    auto trace = [&](int start, bool cycle) {
        int c = out.components++;
        out.comp_is_cycle.push_back(cycle);
        out.cycle_legs.push_back({});
        int x = start;
        while (x >= 0 && comp_of[x] < 0) {
            comp_of[x] = c;
            int dart = x >> 1;
            if (d.is_leg_dart(dart)) {
                if ((x & 1) == 0) out.leg_comp[dart].first = c;
                else out.leg_comp[dart].second = c;
                if (leg_tips && (x & 1))
                    out.cycle_legs[c].push_back(dart); // tip passage
            }
            x = succ_node(d, mask, x, leg_tips);
        }
    };

    if (!leg_tips)
        for (int l = 0; l < d.num_legs; ++l) trace(2 * l, false);
    for (int x = 0; x < nodes; ++x)
        if (comp_of[x] < 0) trace(x, true);

    for (int c = 0; c < out.components; ++c)
        if (out.comp_is_cycle[c] && out.cycle_legs[c].empty()) ++out.beadfree_cycles;
    return out;
}

std::vector<PhiSymbolicTerm> phi_symbolic_terms(const Diagram& d) {
    if (d.kind == DiagramKind::jacobi)
        throw diagram_error("phi is defined on diagrams with strings");
    std::vector<PhiSymbolicTerm> out;
    for (const auto& r : resolve_vertices(d)) {
        auto bw = boundary_walk(d, r.reversed_mask);
        PhiSymbolicTerm term;
        term.sign = r.sign;
        term.closed_components = bw.beadfree_cycles;
        std::vector<int> rename(bw.components, -1);
        int next = 0;
        auto id = [&](int c) {
            if (rename[c] < 0) rename[c] = next++;
            return rename[c];
        };
        for (const auto& s : d.string_legs) {
            term.beads_per_string.push_back({});
            for (int leg : s)
                term.beads_per_string.back().push_back(
                    {id(bw.leg_comp[leg].first), id(bw.leg_comp[leg].second)});
        }
        out.push_back(std::move(term));
    }
    return out;
}

namespace {

void phi_accumulate_resolution(const Diagram& d, int N, const ResolvedFatGraph& r,
                               std::map<Monomial, Rational>& out) {
    auto bw = boundary_walk(d, r.reversed_mask);
    // arcs get free indices; bead-free cycles each contribute a factor N
    std::vector<int> arcs;
    for (int c = 0; c < bw.components; ++c)
        if (!bw.comp_is_cycle[c]) arcs.push_back(c);
    std::vector<int> arc_pos(bw.components, -1);
    for (size_t i = 0; i < arcs.size(); ++i) arc_pos[arcs[i]] = (int)i;

    Rational base(r.sign);
    for (int k = 0; k < bw.beadfree_cycles; ++k) base *= N;

    const size_t na = arcs.size();
    std::vector<int> idx(na, 1);
    for (;;) {
        Monomial m(d.p);
        for (int s = 0; s < d.p; ++s) {
            m[s].reserve(d.string_legs[s].size());
            for (int leg : d.string_legs[s])
                m[s].push_back({(uint8_t)idx[arc_pos[bw.leg_comp[leg].first]],
                                (uint8_t)idx[arc_pos[bw.leg_comp[leg].second]]});
        }
        normal_order_term(out, std::move(m), Rational(base));
        size_t k = 0;
        while (k < na && ++idx[k] > N) {
            idx[k] = 1;
            ++k;
        }
        if (k == na) break;
    }
}

} // namespace

TensorEnvPoly phi(const Diagram& d, int N, int jobs) {
    if (d.kind == DiagramKind::jacobi)
        throw diagram_error("phi is defined on diagrams with strings");
    if (N < 1) throw std::invalid_argument("N must be positive");
    auto res = resolve_vertices(d);

    TensorEnvPoly out;
    out.N = N;
    out.p = d.p;
    if (jobs <= 1 || res.size() < 2) {
        for (const auto& r : res) phi_accumulate_resolution(d, N, r, out.terms);
        return out;
    }

    int nt = std::min<int>(jobs, (int)res.size());
    std::vector<std::map<Monomial, Rational>> part(nt);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&, t]() {
            for (size_t i = t; i < res.size(); i += nt)
                phi_accumulate_resolution(d, N, res[i], part[t]);
        });
    for (auto& th : pool) th.join();
    for (auto& pm : part)
        for (auto& [m, c] : pm) {
            auto it = out.terms.find(m);
            if (it == out.terms.end()) out.terms.emplace(std::move(m), std::move(c));
            else {
                it->second += c;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    return out;
}

TensorEnvPoly phi(const LinComb& v, int N, int p, int jobs) {
    TensorEnvPoly acc;
    acc.N = N;
    acc.p = p;
    for (const auto& [k, e] : v.terms())
        acc = tep_add(acc, tep_scale(phi(e.diagram, N, jobs), e.coeff));
    return acc;
}

namespace {

NecklacePoly psi_impl(const Diagram& d, bool reversed) {
    if (d.kind != DiagramKind::jacobi)
        throw diagram_error("psi is defined on jacobi diagrams");
    NecklacePoly out;
    out.p = d.p;
    for (const auto& r : resolve_vertices(d)) {
        auto bw = boundary_walk(d, r.reversed_mask);
        std::vector<Necklace> mono;
        for (int c = 0; c < bw.components; ++c) {
            if (bw.cycle_legs[c].empty()) continue;
            std::string word;
            for (int leg : bw.cycle_legs[c]) word += char('0' + d.leg_color[leg]);
            if (reversed) std::reverse(word.begin(), word.end());
            mono.push_back(canonical_necklace(word));
        }
        out.add_term(std::move(mono), ZPolyN::n_power(bw.beadfree_cycles, r.sign));
    }
    return out;
}

} // namespace

NecklacePoly psi(const Diagram& d) { return psi_impl(d, false); }
NecklacePoly psi_reversed_convention(const Diagram& d) { return psi_impl(d, true); }

NecklacePoly psi(const LinComb& v, int p) {
    NecklacePoly acc;
    acc.p = p;
    for (const auto& [k, e] : v.terms()) {
        if (e.coeff.get_den() != 1)
            throw std::invalid_argument("psi over lincombs needs integer coefficients");
        acc = npoly_add(acc, npoly_scale(psi(e.diagram),
                                         ZPolyN::constant(e.coeff.get_num().get_si())));
    }
    return acc;
}

std::vector<PsiTerm> psi_terms(const Diagram& d) {
    if (d.kind != DiagramKind::jacobi)
        throw diagram_error("psi is defined on jacobi diagrams");
    std::vector<PsiTerm> out;
    for (const auto& r : resolve_vertices(d)) {
        auto bw = boundary_walk(d, r.reversed_mask);
        PsiTerm t;
        t.sign = r.sign;
        t.n_power = bw.beadfree_cycles;
        for (int c = 0; c < bw.components; ++c) {
            if (bw.cycle_legs[c].empty()) continue;
            std::string word;
            for (int leg : bw.cycle_legs[c]) word += char('0' + d.leg_color[leg]);
            t.necklaces.push_back(canonical_necklace(word));
        }
        std::sort(t.necklaces.begin(), t.necklaces.end());
        out.push_back(std::move(t));
    }
    return out;
}

LinComb chi(const Diagram& d) {
    if (d.kind != DiagramKind::jacobi)
        throw diagram_error("chi is defined on jacobi diagrams");
    const int p = d.p;
    std::vector<std::vector<int>> by_color(p);
    for (int l = 0; l < d.num_legs; ++l) by_color[d.leg_color[l] - 1].push_back(l);

    Rational weight(1);
    long total = 1;
    for (int c = 0; c < p; ++c) {
        long f = 1;
        for (size_t k = 2; k <= by_color[c].size(); ++k) f *= (long)k;
        weight /= f;
        total *= f;
        if (total > 2000000) throw diagram_error("too many leg attachments");
    }

    LinComb out;
    std::vector<std::vector<int>> perm = by_color; // current order per color
    for (auto& v : perm) std::sort(v.begin(), v.end());

    // product of per-color permutations, odometer over next_permutation
    std::vector<std::vector<int>> cur = perm;
    for (;;) {
        Diagram g;
        g.kind = DiagramKind::generalized;
        g.p = p;
        g.num_legs = d.num_legs;
        g.num_vertices = d.num_vertices;
        g.mate = d.mate;
        g.string_legs.assign(p, {});
        for (int c = 0; c < p; ++c) g.string_legs[c] = cur[c];
        out.add(g, weight);

        int c = 0;
        while (c < p && !std::next_permutation(cur[c].begin(), cur[c].end())) {
            std::sort(cur[c].begin(), cur[c].end());
            ++c;
        }
        if (c == p) break;
    }
    return out;
}

} // namespace vws
