#include "vws/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace vws {

namespace {

// Parity sets: which flip parities reach the minimal encoding.
enum { PAR_EVEN = 1, PAR_ODD = 2 };

int parity_combine(int a, int b) {
    if (a == (PAR_EVEN | PAR_ODD) || b == (PAR_EVEN | PAR_ODD))
        return PAR_EVEN | PAR_ODD;
    int pa = (a == PAR_ODD), pb = (b == PAR_ODD);
    return (pa ^ pb) ? PAR_ODD : PAR_EVEN;
}

using Enc = std::vector<int32_t>;

// One traversal of (part of) a diagram under a fixed flip assignment.
// Vertices are labeled in first-visit order; each vertex is read starting
// at the slot through which it was first reached (rotation is free), going
// forward for flip 0 and backward for flip 1 (a flip costs a sign).
struct Walker {
    const Diagram& d;
    const std::vector<int>& legpos; // global position per leg (non-jacobi)
    Enc enc;
    std::vector<int> label, order, rot, flp;
    std::vector<int> legs_seen;
    std::vector<char> leg_done;
    int parity = 0;

    Walker(const Diagram& dd, const std::vector<int>& lp)
        : d(dd), legpos(lp), label(dd.num_vertices, -1),
          rot(dd.num_vertices, 0), flp(dd.num_vertices, 0),
          leg_done(dd.num_legs, 0) {}

    int rel_of_slot(int v, int s) const {
        return flp[v] ? (rot[v] - s + 3) % 3 : (s - rot[v] + 3) % 3;
    }
    int slot_of_rel(int v, int r) const {
        return flp[v] ? (rot[v] - r + 3) % 3 : (rot[v] + r) % 3;
    }

    void touch_vertex(int v, int entry_slot, int flip_bit) {
        label[v] = (int)order.size();
        order.push_back(v);
        rot[v] = entry_slot;
        flp[v] = flip_bit;
        parity ^= flip_bit;
    }

    // Emit the token describing the mate of a dart.
    void emit_mate(int m, uint64_t flips) {
        if (d.is_leg_dart(m)) {
            if (d.kind == DiagramKind::jacobi) {
                enc.push_back(0);
                enc.push_back(d.leg_color[m]);
                if (!leg_done[m]) { leg_done[m] = 1; legs_seen.push_back(m); }
            } else {
                enc.push_back(0);
                enc.push_back(legpos[m]);
            }
            return;
        }
        int v = d.dart_vertex(m), s = d.dart_slot(m);
        if (label[v] < 0) {
            touch_vertex(v, s, (flips >> v) & 1);
            enc.push_back(1);
            enc.push_back(label[v]);
            enc.push_back(0);
        } else {
            enc.push_back(1);
            enc.push_back(label[v]);
            enc.push_back(rel_of_slot(v, s));
        }
    }

    // Describe every slot of every labeled vertex, labeling new ones as they
    // appear (breadth-first in label order).
    void sweep(uint64_t flips) {
        for (size_t i = 0; i < order.size(); ++i) {
            int v = order[i];
            for (int r = 0; r < 3; ++r)
                emit_mate(d.mate[d.slot_dart(v, slot_of_rel(v, r))], flips);
        }
    }
};

struct PartResult {
    Enc enc;
    int parities = 0;
    // witness
    std::vector<int> label, rot, flp, legs_seen;
};

void consider(PartResult& best, Walker& w) {
    int par = w.parity ? PAR_ODD : PAR_EVEN;
    if (best.parities == 0 || w.enc < best.enc) {
        best.enc = std::move(w.enc);
        best.parities = par;
        best.label = w.label;
        best.rot = w.rot;
        best.flp = w.flp;
        best.legs_seen = w.legs_seen;
    } else if (w.enc == best.enc) {
        best.parities |= par;
    }
}

// Part of the diagram reachable from the support strings: legs are anchored
// by their global position, so only flips are searched.
PartResult canon_anchored(const Diagram& d, const std::vector<int>& global_legs,
                          const std::vector<int>& legpos,
                          const std::vector<int>& verts) {
    PartResult best;
    uint64_t nmask = verts.empty() ? 1 : (1ull << verts.size());
    for (uint64_t m = 0; m < nmask; ++m) {
        uint64_t flips = 0;
        for (size_t i = 0; i < verts.size(); ++i)
            if ((m >> i) & 1) flips |= 1ull << verts[i];
        Walker w(d, legpos);
        for (int leg : global_legs) w.emit_mate(d.mate[leg], flips);
        w.enc.push_back(8);
        w.sweep(flips);
        consider(best, w);
    }
    return best;
}

// Jacobi component containing at least one leg (and at least one vertex).
PartResult canon_legged(const Diagram& d, const std::vector<int>& legs,
                        const std::vector<int>& verts,
                        const std::vector<int>& legpos_dummy) {
    PartResult best;
    for (int root : legs) {
        for (uint64_t m = 0; m < (1ull << verts.size()); ++m) {
            uint64_t flips = 0;
            for (size_t i = 0; i < verts.size(); ++i)
                if ((m >> i) & 1) flips |= 1ull << verts[i];
            Walker w(d, legpos_dummy);
            w.enc.push_back(2);
            w.enc.push_back(d.leg_color[root]);
            w.leg_done[root] = 1;
            w.legs_seen.push_back(root);
            w.emit_mate(d.mate[root], flips);
            w.sweep(flips);
            consider(best, w);
        }
    }
    return best;
}

// Closed trivalent component: root over every (vertex, slot, flip).
PartResult canon_closed(const Diagram& d, const std::vector<int>& verts,
                        const std::vector<int>& legpos_dummy) {
    PartResult best;
    for (int rv : verts)
        for (int rs = 0; rs < 3; ++rs)
            for (uint64_t m = 0; m < (1ull << verts.size()); ++m) {
                uint64_t flips = 0;
                for (size_t i = 0; i < verts.size(); ++i)
                    if ((m >> i) & 1) flips |= 1ull << verts[i];
                Walker w(d, legpos_dummy);
                w.enc.push_back(4);
                w.enc.push_back((int32_t)verts.size());
                w.touch_vertex(rv, rs, (flips >> rv) & 1);
                w.sweep(flips);
                consider(best, w);
            }
    return best;
}

struct Component {
    std::vector<int> legs, verts;
    bool anchored = false; // touches a string
};

std::vector<Component> split_components(const Diagram& d) {
    int D = d.darts();
    std::vector<int> comp(D, -1);
    int nc = 0;
    for (int s = 0; s < D; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            std::vector<int> nb{d.mate[x]};
            if (!d.is_leg_dart(x)) {
                int v = d.dart_vertex(x);
                for (int t = 0; t < 3; ++t) nb.push_back(d.slot_dart(v, t));
            }
            for (int y : nb)
                if (comp[y] < 0) { comp[y] = nc; stack.push_back(y); }
        }
        ++nc;
    }
    std::vector<Component> out(nc);
    for (int l = 0; l < d.num_legs; ++l) out[comp[l]].legs.push_back(l);
    for (int v = 0; v < d.num_vertices; ++v)
        out[comp[d.slot_dart(v, 0)]].verts.push_back(v);
    if (d.kind != DiagramKind::jacobi)
        for (auto& c : out) c.anchored = !c.legs.empty();
    return out;
}

} // namespace

SignedDiagram canonicalize(const Diagram& d) {
    d.validate();

    std::vector<int> global_legs, legpos(d.num_legs, 0);
    if (d.kind != DiagramKind::jacobi) {
        for (const auto& s : d.string_legs)
            for (int leg : s) {
                legpos[leg] = (int)global_legs.size();
                global_legs.push_back(leg);
            }
    }

    auto comps = split_components(d);

    // Anchored part (all string-reachable components together) plus a list
    // of free parts, each canonicalized independently.
    std::vector<int> anchored_verts;
    struct Piece { Enc enc; PartResult res; bool leg_edge = false; int l1 = -1, l2 = -1; };
    std::vector<Piece> pieces;
    int parities = PAR_EVEN;

    for (auto& c : comps) {
        if (c.anchored) {
            anchored_verts.insert(anchored_verts.end(), c.verts.begin(), c.verts.end());
            continue;
        }
        Piece pc;
        if (c.verts.empty()) {
            // single edge joining two legs (jacobi only)
            int a = c.legs[0], b = c.legs[1];
            int ca = d.leg_color[a], cb = d.leg_color[b];
            if (ca > cb) { std::swap(a, b); std::swap(ca, cb); }
            pc.enc = {3, ca, cb};
            pc.leg_edge = true;
            pc.l1 = a;
            pc.l2 = b;
            pc.res.parities = PAR_EVEN;
        } else if (!c.legs.empty()) {
            pc.res = canon_legged(d, c.legs, c.verts, legpos);
            pc.enc = pc.res.enc;
        } else {
            pc.res = canon_closed(d, c.verts, legpos);
            pc.enc = pc.res.enc;
        }
        pieces.push_back(std::move(pc));
    }

    PartResult anchored;
    bool have_anchored = d.kind != DiagramKind::jacobi;
    if (have_anchored) {
        anchored = canon_anchored(d, global_legs, legpos, anchored_verts);
        parities = parity_combine(parities, anchored.parities);
    }

    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& a, const Piece& b) { return a.enc < b.enc; });
    for (const auto& pc : pieces) parities = parity_combine(parities, pc.res.parities);

    if (parities == (PAR_EVEN | PAR_ODD)) return {0, {}};

    // Rebuild the diagram in canonical labels from the witnessing traversals.
    Diagram out;
    out.kind = d.kind;
    out.p = d.p;
    if (d.kind == DiagramKind::jacobi) {
        // p is derived for jacobi diagrams: the largest color in use
        out.p = 1;
        for (int c : d.leg_color) out.p = std::max(out.p, c);
    }
    out.num_legs = d.num_legs;
    out.num_vertices = d.num_vertices;

    std::vector<int> vlabel(d.num_vertices, -1), vrot(d.num_vertices, 0),
        vflp(d.num_vertices, 0);
    std::vector<int> leg_map(d.num_legs, -1);
    int vbase = 0, lbase = 0;

    auto absorb = [&](const PartResult& r) {
        for (int v = 0; v < d.num_vertices; ++v)
            if (r.label[v] >= 0) {
                vlabel[v] = vbase + r.label[v];
                vrot[v] = r.rot[v];
                vflp[v] = r.flp[v];
            }
        int cnt = 0;
        for (int v = 0; v < d.num_vertices; ++v) cnt += r.label[v] >= 0;
        vbase += cnt;
        for (int l : r.legs_seen) leg_map[l] = lbase++;
    };

    if (have_anchored) {
        for (int l : global_legs) leg_map[l] = lbase++;
        absorb(anchored);
    }
    for (const auto& pc : pieces) {
        if (pc.leg_edge) {
            leg_map[pc.l1] = lbase++;
            leg_map[pc.l2] = lbase++;
        } else {
            absorb(pc.res);
        }
    }

    auto new_dart = [&](int x) {
        if (d.is_leg_dart(x)) return leg_map[x];
        int v = d.dart_vertex(x), s = d.dart_slot(x);
        int r = vflp[v] ? (vrot[v] - s + 3) % 3 : (s - vrot[v] + 3) % 3;
        return out.num_legs + 3 * vlabel[v] + r;
    };

    out.mate.assign(d.darts(), -1);
    for (int x = 0; x < d.darts(); ++x) out.mate[new_dart(x)] = new_dart(d.mate[x]);

    if (d.kind == DiagramKind::jacobi) {
        out.leg_color.assign(d.num_legs, 0);
        for (int l = 0; l < d.num_legs; ++l) out.leg_color[leg_map[l]] = d.leg_color[l];
    } else {
        out.string_legs.assign(d.p, {});
        for (int s = 0; s < d.p; ++s)
            for (int leg : d.string_legs[s]) out.string_legs[s].push_back(leg_map[leg]);
    }

    return {parities == PAR_ODD ? -1 : 1, out};
}

} // namespace vws
