#include "vws/relations.hpp"

#include <algorithm>
#include <stdexcept>

namespace vws {

namespace {

std::vector<StuSite> stu_sites(const Diagram& d) {
    std::vector<StuSite> sites;
    int g = 0;
    std::vector<int> order(d.num_legs, 0);
    for (int s = 0; s < d.p; ++s)
        for (size_t i = 0; i < d.string_legs[s].size(); ++i)
            order[d.string_legs[s][i]] = g++;
    for (int leg = 0; leg < d.num_legs; ++leg) {
        int m = d.mate[leg];
        if (!d.is_leg_dart(m)) sites.push_back({d.dart_vertex(m), leg});
    }
    std::sort(sites.begin(), sites.end(), [&](const StuSite& a, const StuSite& b) {
        return order[a.leg] < order[b.leg];
    });
    return sites;
}

} // namespace

std::pair<Diagram, Diagram> stu_step(const Diagram& d, int v, int leg) {
    int entry = d.mate[leg];
    if (d.is_leg_dart(entry) || d.dart_vertex(entry) != v)
        throw diagram_error("vertex is not attached to that leg");
    int es = d.dart_slot(entry);
    int port1 = d.slot_dart(v, (es + 1) % 3); // attaches below in the T term
    int port2 = d.slot_dart(v, (es + 2) % 3);

    auto build = [&](int lower_port, int upper_port) {
        Diagram r;
        r.kind = d.num_vertices == 1 ? DiagramKind::chord : DiagramKind::generalized;
        r.p = d.p;
        r.num_legs = d.num_legs + 1;
        r.num_vertices = d.num_vertices - 1;

        // old leg k (k != leg) -> compacted id; two fresh legs at the end
        std::vector<int> leg_map(d.num_legs, -1);
        int next = 0;
        for (int k = 0; k < d.num_legs; ++k)
            if (k != leg) leg_map[k] = next++;
        int nl_lower = next, nl_upper = next + 1;

        std::vector<int> vmap(d.num_vertices, -1);
        next = 0;
        for (int w = 0; w < d.num_vertices; ++w)
            if (w != v) vmap[w] = next++;

        auto map_dart = [&](int x) -> int {
            if (d.is_leg_dart(x)) return leg_map[x];
            int w = d.dart_vertex(x), s = d.dart_slot(x);
            return r.num_legs + 3 * vmap[w] + s;
        };

        r.mate.assign(r.darts(), -1);
        auto connect = [&](int a, int b) {
            r.mate[a] = b;
            r.mate[b] = a;
        };
        for (int x = 0; x < d.darts(); ++x) {
            int y = d.mate[x];
            if (x == leg || x == entry || y == leg || y == entry) continue;
            if (x == lower_port || x == upper_port) continue;
            if (y == lower_port || y == upper_port) continue;
            if (x < y) connect(map_dart(x), map_dart(y));
        }
        // the freed edges now end on the fresh legs
        if (d.mate[lower_port] == upper_port) {
            connect(nl_lower, nl_upper);
        } else {
            connect(nl_lower, map_dart(d.mate[lower_port]));
            connect(nl_upper, map_dart(d.mate[upper_port]));
        }

        r.string_legs.assign(d.p, {});
        for (int s = 0; s < d.p; ++s)
            for (int k : d.string_legs[s]) {
                if (k == leg) {
                    r.string_legs[s].push_back(nl_lower);
                    r.string_legs[s].push_back(nl_upper);
                } else {
                    r.string_legs[s].push_back(leg_map[k]);
                }
            }
        r.validate();
        return r;
    };

    return {build(port1, port2), build(port2, port1)};
}

LinComb stu_expand_with(const Diagram& d,
                        const std::function<int(const std::vector<StuSite>&)>& choose) {
    LinComb out;
    if (d.kind == DiagramKind::jacobi)
        throw diagram_error("stu expansion needs support strings");
    struct Item {
        Diagram dg;
        Rational c;
    };
    std::vector<Item> work{{d, Rational(1)}};
    while (!work.empty()) {
        Item it = std::move(work.back());
        work.pop_back();
        if (it.dg.num_vertices == 0) {
            out.add(it.dg, it.c);
            continue;
        }
        auto sites = stu_sites(it.dg);
        if (sites.empty())
            throw diagram_error("internal graph component not attached to any string");
        const StuSite& site = sites[choose ? choose(sites) : 0];
        auto [t, u] = stu_step(it.dg, site.vertex, site.leg);
        work.push_back({std::move(t), it.c});
        work.push_back({std::move(u), -it.c});
    }
    return out;
}

LinComb stu_expand(const Diagram& d) { return stu_expand_with(d, nullptr); }

std::vector<Diagram> enumerate_chord_diagrams(int degree, int p, long guard) {
    if (degree < 0 || p < 1) throw std::invalid_argument("bad degree or p");
    long matchings = 1;
    for (int k = 2 * degree - 1; k > 1; k -= 2) matchings *= k;
    long comps = 1; // C(2n + p - 1, p - 1)
    for (int k = 1; k <= p - 1; ++k)
        comps = comps * (2 * degree + k) / k;
    if (comps * matchings > guard)
        throw guard_error("enumeration guard exceeded");

    std::vector<Diagram> out;
    const int L = 2 * degree;
    std::vector<int> sizes(p, 0);

    std::vector<int> pairing(L, -1);
    std::function<void()> match = [&]() {
        int first = -1;
        for (int i = 0; i < L; ++i)
            if (pairing[i] < 0) { first = i; break; }
        if (first < 0) {
            Diagram d;
            d.kind = DiagramKind::chord;
            d.p = p;
            d.num_legs = L;
            d.mate = pairing;
            d.string_legs.assign(p, {});
            int g = 0;
            for (int s = 0; s < p; ++s)
                for (int k = 0; k < sizes[s]; ++k) d.string_legs[s].push_back(g++);
            out.push_back(std::move(d));
            return;
        }
        for (int j = first + 1; j < L; ++j) {
            if (pairing[j] >= 0) continue;
            pairing[first] = j;
            pairing[j] = first;
            match();
            pairing[first] = -1;
            pairing[j] = -1;
        }
    };

    std::function<void(int, int)> comp = [&](int s, int left) {
        if (s == p - 1) {
            sizes[s] = left;
            match();
            return;
        }
        for (int k = left; k >= 0; --k) {
            sizes[s] = k;
            comp(s + 1, left - k);
        }
    };
    comp(0, L);
    return out;
}

RelationSet relation_generators(RelationKind kind, int degree, int p) {
    RelationSet rs;
    rs.degree = degree;
    rs.p = p;
    rs.kind = kind;

    if (kind == RelationKind::oneT) {
        for (const auto& d : enumerate_chord_diagrams(degree, p))
            if (has_isolated_chord(d)) {
                LinComb lc;
                lc.add(d, 1);
                rs.relations.push_back(std::move(lc));
            }
        return rs;
    }

    if (degree < 2) return rs;

    // every placement of one trivalent vertex joined to three legs, with the
    // remaining 2(degree-2) legs paired into chords
    const int L = 2 * degree - 1;
    std::vector<int> sizes(p, 0);

    auto emit = [&](const std::vector<int>& pairing, const std::vector<int>& tripod) {
        Diagram g;
        g.kind = DiagramKind::generalized;
        g.p = p;
        g.num_legs = L;
        g.num_vertices = 1;
        g.mate.assign(L + 3, -1);
        for (int i = 0; i < L; ++i)
            if (pairing[i] >= 0) g.mate[i] = pairing[i];
        for (int s = 0; s < 3; ++s) {
            g.mate[tripod[s]] = g.slot_dart(0, s);
            g.mate[g.slot_dart(0, s)] = tripod[s];
        }
        g.string_legs.assign(p, {});
        int gpos = 0;
        for (int s = 0; s < p; ++s)
            for (int k = 0; k < sizes[s]; ++k) g.string_legs[s].push_back(gpos++);
        g.validate();

        // confluence of the expansions through different legs
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                auto [ta, ua] = stu_step(g, 0, tripod[a]);
                auto [tb, ub] = stu_step(g, 0, tripod[b]);
                LinComb rel;
                rel.add(ta, 1);
                rel.add(ua, -1);
                rel.add(tb, -1);
                rel.add(ub, 1);
                if (!rel.zero()) rs.relations.push_back(std::move(rel));
            }
    };

    std::vector<int> pairing(L, -1);
    std::vector<int> tripod;
    std::function<void()> match = [&]() {
        int first = -1;
        for (int i = 0; i < L; ++i)
            if (pairing[i] < 0 && !std::count(tripod.begin(), tripod.end(), i)) {
                first = i;
                break;
            }
        if (first < 0) {
            emit(pairing, tripod);
            return;
        }
        for (int j = first + 1; j < L; ++j) {
            if (pairing[j] >= 0 || std::count(tripod.begin(), tripod.end(), j)) continue;
            pairing[first] = j;
            pairing[j] = first;
            match();
            pairing[first] = -1;
            pairing[j] = -1;
        }
    };

    std::function<void(int)> pick_tripod = [&](int from) {
        if (tripod.size() == 3) {
            match();
            return;
        }
        for (int i = from; i < L; ++i) {
            tripod.push_back(i);
            pick_tripod(i + 1);
            tripod.pop_back();
        }
    };

    std::function<void(int, int)> comp = [&](int s, int left) {
        if (s == p - 1) {
            sizes[s] = left;
            pick_tripod(0);
            return;
        }
        for (int k = left; k >= 0; --k) {
            sizes[s] = k;
            comp(s + 1, left - k);
        }
    };
    comp(0, L);
    return rs;
}

namespace {

Diagram flip_vertex(const Diagram& d, int v) {
    Diagram r = d;
    int d1 = d.slot_dart(v, 1), d2 = d.slot_dart(v, 2);
    std::swap(r.mate[d1], r.mate[d2]);
    auto remap = [&](int x) {
        if (x == d1) return d2;
        if (x == d2) return d1;
        return x;
    };
    for (int x = 0; x < r.darts(); ++x) r.mate[x] = remap(r.mate[x]);
    return r;
}

} // namespace

LinComb local_relation(const Diagram& d, int site, LocalRelation kind) {
    LinComb out;
    if (kind == LocalRelation::AS) {
        if (site < 0 || site >= d.num_vertices)
            throw diagram_error("AS site must be a trivalent vertex");
        out.add(d, 1);
        out.add(flip_vertex(d, site), 1);
        return out;
    }

    // IHX at the edge through dart `site`
    if (site < 0 || site >= d.darts() || d.is_leg_dart(site) ||
        d.is_leg_dart(d.mate[site]))
        throw diagram_error("IHX site must be an edge joining two trivalent vertices");
    int a = d.dart_vertex(site), b = d.dart_vertex(d.mate[site]);
    if (a == b) throw diagram_error("IHX site must join two distinct vertices");
    int s = d.dart_slot(site), t = d.dart_slot(d.mate[site]);

    // ports in the counterclockwise order after the middle edge
    int P = d.slot_dart(a, (s + 1) % 3), Q = d.slot_dart(a, (s + 2) % 3);
    int R = d.slot_dart(b, (t + 1) % 3), S = d.slot_dart(b, (t + 2) % 3);

    // Reattach the four outer edges: slot_of maps each port to the slot it
    // occupies in the reconnected diagram (a permutation of {P,Q,R,S}).
    auto reconnect = [&](int slotP, int slotQ, int slotR, int slotS) {
        int slot_of[4] = {slotP, slotQ, slotR, slotS};
        int port[4] = {P, Q, R, S};
        Diagram r = d;
        for (int k = 0; k < 4; ++k) {
            int m = d.mate[port[k]];
            int internal = -1;
            for (int l = 0; l < 4; ++l)
                if (port[l] == m) internal = slot_of[l];
            if (internal >= 0) {
                r.mate[slot_of[k]] = internal;
            } else {
                r.mate[slot_of[k]] = m;
                r.mate[m] = slot_of[k];
            }
        }
        r.validate();
        return r;
    };

    // I - H + X
    out.add(d, 1);
    out.add(reconnect(/*P->*/ d.slot_dart(a, (s + 2) % 3), /*Q->*/ d.slot_dart(b, (t + 1) % 3),
                      /*R->*/ d.slot_dart(b, (t + 2) % 3), /*S->*/ d.slot_dart(a, (s + 1) % 3)),
            -1);
    out.add(reconnect(/*P->*/ d.slot_dart(a, (s + 2) % 3), /*Q->*/ d.slot_dart(b, (t + 1) % 3),
                      /*R->*/ d.slot_dart(a, (s + 1) % 3), /*S->*/ d.slot_dart(b, (t + 2) % 3)),
            1);
    return out;
}

} // namespace vws
