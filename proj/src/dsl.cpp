#include "vws/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vws {

namespace {

struct Token {
    std::string text;
    int line, col;
};

// Statements are newline- or ';'-separated; '#' starts a comment.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> stmts;
    std::vector<Token> cur;
    int line = 1, col = 1;
    size_t i = 0;
    auto flush = [&]() {
        if (!cur.empty()) stmts.push_back(std::move(cur));
        cur.clear();
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (c == '\n' || c == ';') {
            flush();
            if (c == '\n') { ++line; col = 1; } else ++col;
            ++i;
            continue;
        }
        if (isspace((unsigned char)c)) { ++i; ++col; continue; }
        int start_col = col;
        std::string t;
        while (i < text.size() && !isspace((unsigned char)text[i]) &&
               text[i] != ';' && text[i] != '#') {
            t += text[i];
            ++i;
            ++col;
        }
        cur.push_back({t, line, start_col});
    }
    flush();
    return stmts;
}

[[noreturn]] void fail(const Token& t, const std::string& msg) {
    std::ostringstream os;
    os << "line " << t.line << ", column " << t.col << ": " << msg;
    throw diagram_error(os.str(), t.line, t.col);
}

int parse_int(const Token& t, int lo, int hi, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(t.text, &pos);
        if (pos != t.text.size() || v < lo || v > hi) throw std::invalid_argument("");
        return v;
    } catch (...) {
        fail(t, std::string("expected ") + what + ", got '" + t.text + "'");
    }
}

Diagram parse_chord_shorthand(const std::vector<std::vector<Token>>& stmts) {
    Diagram d;
    d.kind = DiagramKind::chord;
    const Token& head = stmts[0][0];
    d.p = parse_int({head.text.substr(2), head.line, head.col + 2}, 1, 64, "p=<strings>");
    d.string_legs.assign(d.p, {});
    std::map<std::string, std::vector<int>> chord_legs; // label -> legs
    for (size_t si = 1; si < stmts.size(); ++si) {
        const auto& st = stmts[si];
        const Token& h = st[0];
        if (h.text.size() < 2 || h.text[0] != 's' || h.text.back() != ':')
            fail(h, "expected 's<i>:'");
        int s = parse_int({h.text.substr(1, h.text.size() - 2), h.line, h.col + 1},
                          1, d.p, "string number");
        for (size_t k = 1; k < st.size(); ++k) {
            int leg = d.num_legs++;
            d.string_legs[s - 1].push_back(leg);
            chord_legs[st[k].text].push_back(leg);
            if (chord_legs[st[k].text].size() > 2)
                fail(st[k], "chord label '" + st[k].text + "' used more than twice");
        }
    }
    d.mate.assign(d.num_legs, -1);
    for (const auto& [label, legs] : chord_legs) {
        if (legs.size() != 2)
            throw diagram_error("chord label '" + label + "' must appear exactly twice");
        d.mate[legs[0]] = legs[1];
        d.mate[legs[1]] = legs[0];
    }
    d.validate();
    return d;
}

} // namespace

Diagram parse_diagram(const std::string& text) {
    auto stmts = tokenize(text);
    if (stmts.empty()) throw diagram_error("empty input");
    if (stmts[0][0].text.rfind("p=", 0) == 0) return parse_chord_shorthand(stmts);

    Diagram d;
    bool have_type = false, have_strings = false;
    std::map<std::string, int> leg_id;
    std::map<std::string, int> vertex_id;
    std::map<std::string, std::pair<int, int>> slot_name; // -> (vertex, slot)
    struct PendingEdge { Token a, b; };
    std::vector<PendingEdge> edges;

    for (const auto& st : stmts) {
        const Token& h = st[0];
        auto want = [&](size_t n) {
            if (st.size() != n) fail(h, "'" + h.text + "' takes " +
                                            std::to_string(n - 1) + " arguments");
        };
        if (st.size() == 1 && (h.text == "chord" || h.text == "generalized" ||
                               h.text == "jacobi")) {
            // bare kind line, shorthand for 'type <kind>'
            d.kind = h.text == "chord" ? DiagramKind::chord
                     : h.text == "generalized" ? DiagramKind::generalized
                                               : DiagramKind::jacobi;
            have_type = true;
        } else if (h.text == "type") {
            want(2);
            const std::string& k = st[1].text;
            if (k == "chord") d.kind = DiagramKind::chord;
            else if (k == "generalized") d.kind = DiagramKind::generalized;
            else if (k == "jacobi") d.kind = DiagramKind::jacobi;
            else fail(st[1], "unknown diagram type '" + k + "'");
            have_type = true;
        } else if (h.text == "strings") {
            want(2);
            d.p = parse_int(st[1], 1, 64, "string count");
            d.string_legs.assign(d.p, {});
            have_strings = true;
        } else if (h.text == "leg") {
            if (!have_type) fail(h, "'type' must come first");
            if (st.size() == 3) {
                // 'leg <name> <n>': color for jacobi, string otherwise
                if (leg_id.count(st[1].text)) fail(st[1], "duplicate leg name");
                int id = d.num_legs++;
                leg_id[st[1].text] = id;
                if (d.kind == DiagramKind::jacobi) {
                    d.leg_color.push_back(parse_int(st[2], 1, 1 << 20, "color"));
                } else {
                    if (!have_strings) fail(h, "'strings' must come before legs");
                    int s = parse_int(st[2], 1, d.p, "string number");
                    d.string_legs[s - 1].push_back(id);
                }
                continue;
            }
            want(4);
            if (leg_id.count(st[1].text)) fail(st[1], "duplicate leg name");
            int id = d.num_legs++;
            leg_id[st[1].text] = id;
            if (st[2].text == "on") {
                if (d.kind == DiagramKind::jacobi) fail(st[2], "jacobi legs carry colors, not strings");
                if (!have_strings) fail(h, "'strings' must come before legs");
                int s = parse_int(st[3], 1, d.p, "string number");
                d.string_legs[s - 1].push_back(id);
            } else if (st[2].text == "color") {
                if (d.kind != DiagramKind::jacobi) fail(st[2], "only jacobi legs carry colors");
                int c = parse_int(st[3], 1, 1 << 20, "color");
                d.leg_color.push_back(c);
            } else {
                fail(st[2], "expected 'on' or 'color'");
            }
        } else if (h.text == "vertex") {
            if (!have_type) fail(h, "'type' must come first");
            if (st.size() != 5)
                fail(h, "vertex must be trivalent: " + std::to_string(st.size() - 2) +
                            " half-edges given");
            int v = d.num_vertices++;
            vertex_id[st[1].text] = v;
            for (int s = 0; s < 3; ++s) {
                if (slot_name.count(st[2 + s].text) || leg_id.count(st[2 + s].text))
                    fail(st[2 + s], "duplicate half-edge name");
                slot_name[st[2 + s].text] = {v, s};
            }
        } else if (h.text == "edge") {
            want(3);
            edges.push_back({st[1], st[2]});
        } else {
            fail(h, "unknown directive '" + h.text + "'");
        }
    }
    if (!have_type) throw diagram_error("missing 'type' line");
    if (d.kind == DiagramKind::jacobi) {
        d.p = 1;
        for (int c : d.leg_color) d.p = std::max(d.p, c);
    }

    auto resolve = [&](const Token& t) -> int {
        auto dot = t.text.find('.');
        if (dot != std::string::npos) {
            std::string vn = t.text.substr(0, dot);
            auto it = vertex_id.find(vn);
            if (it == vertex_id.end()) fail(t, "unknown vertex '" + vn + "'");
            int s = parse_int({t.text.substr(dot + 1), t.line, (int)(t.col + dot + 1)},
                              0, 2, "slot 0|1|2");
            return d.slot_dart(it->second, s);
        }
        if (auto it = leg_id.find(t.text); it != leg_id.end())
            return d.leg_dart(it->second);
        if (auto it = slot_name.find(t.text); it != slot_name.end())
            return d.slot_dart(it->second.first, it->second.second);
        fail(t, "unknown endpoint '" + t.text + "'");
    };

    d.mate.assign(d.darts(), -1);
    for (const auto& e : edges) {
        int a = resolve(e.a), b = resolve(e.b);
        if (a == b) fail(e.a, "edge endpoints coincide");
        if (d.mate[a] != -1) fail(e.a, "endpoint already used");
        if (d.mate[b] != -1) fail(e.b, "endpoint already used");
        d.mate[a] = b;
        d.mate[b] = a;
    }
    for (int x = 0; x < d.darts(); ++x)
        if (d.mate[x] == -1) throw diagram_error("unpaired half-edge");
    d.validate();
    return d;
}

std::string serialize_diagram(const Diagram& d) {
    std::ostringstream os;
    os << "type " << kind_name(d.kind) << "\n";
    std::vector<std::string> leg_name(d.num_legs);
    if (d.kind == DiagramKind::jacobi) {
        for (int l = 0; l < d.num_legs; ++l) leg_name[l] = "l" + std::to_string(l);
        for (int l = 0; l < d.num_legs; ++l)
            os << "leg " << leg_name[l] << " color " << d.leg_color[l] << "\n";
    } else {
        os << "strings " << d.p << "\n";
        int k = 0;
        for (int s = 0; s < d.p; ++s)
            for (int leg : d.string_legs[s]) {
                leg_name[leg] = "l" + std::to_string(k++);
                os << "leg " << leg_name[leg] << " on " << s + 1 << "\n";
            }
    }
    for (int v = 0; v < d.num_vertices; ++v) {
        os << "vertex v" << v;
        for (int s = 0; s < 3; ++s) os << " v" << v << "s" << s;
        os << "\n";
    }
    auto ep = [&](int dart) {
        if (d.is_leg_dart(dart)) return leg_name[dart];
        return "v" + std::to_string(d.dart_vertex(dart)) + "." +
               std::to_string(d.dart_slot(dart));
    };
    for (int x = 0; x < d.darts(); ++x)
        if (x < d.mate[x]) os << "edge " << ep(x) << " " << ep(d.mate[x]) << "\n";
    return os.str();
}

} // namespace vws
