#ifndef VWS_DIAGRAM_HPP
#define VWS_DIAGRAM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vws {

enum class DiagramKind { chord, generalized, jacobi };

std::string kind_name(DiagramKind k);

// Raised by parsing and by structural validation.
struct diagram_error : std::runtime_error {
    int line = 0, column = 0;
    diagram_error(const std::string& msg, int line_ = 0, int col_ = 0)
        : std::runtime_error(msg), line(line_), column(col_) {}
};

// Raised when a computation would exceed a configured size ceiling.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/*
 * A diagram is a uni-trivalent fat graph, optionally attached to p ordered
 * support strings.
 *
 * Darts (half-edges) are numbered 0 .. num_legs + 3*num_vertices - 1:
 *   dart k            (k < num_legs)  : the unique dart of leg k
 *   dart L + 3*v + s                  : slot s of trivalent vertex v
 * `mate` is a fixed-point-free involution pairing darts into edges.
 * The stored slot order (0,1,2) of each trivalent vertex is its cyclic
 * (counterclockwise) order; rotating it is free, transposing it is the
 * antisymmetry flip tracked by canonicalize().
 *
 * chord / generalized: every leg sits on a string; string_legs[s] lists the
 * legs of string s+1 bottom-to-top. chord additionally has no trivalent
 * vertices (so every edge joins two legs).
 *
 * jacobi: no strings; leg_color[k] in 1..p colors leg k.
 *
 * Values are immutable in spirit: operations build new diagrams.
 */
struct Diagram {
    DiagramKind kind = DiagramKind::chord;
    int p = 0;
    int num_legs = 0;
    int num_vertices = 0;
    std::vector<std::vector<int>> string_legs;
    std::vector<int> leg_color;
    std::vector<int> mate;

    int darts() const { return num_legs + 3 * num_vertices; }
    int leg_dart(int leg) const { return leg; }
    int slot_dart(int v, int s) const { return num_legs + 3 * v + s; }
    bool is_leg_dart(int d) const { return d < num_legs; }
    int dart_vertex(int d) const { return (d - num_legs) / 3; }
    int dart_slot(int d) const { return (d - num_legs) % 3; }

    // (#legs + #trivalent vertices) / 2
    int degree() const { return (num_legs + num_vertices) / 2; }

    // Throws diagram_error when a structural invariant fails.
    void validate() const;

    bool operator==(const Diagram& o) const = default;
};

// Result of canonicalize(). sign 0 means the diagram is antisymmetry
// degenerate (equal to minus itself); `diagram` is absent in that case.
struct SignedDiagram {
    int sign = 0;
    Diagram diagram;
};

// Byte encoding of a diagram *as labeled*, without canonicalizing.
// Equal encodings <=> equal labeled structures.
std::string encode_diagram(const Diagram& d);

// Minimal encoding over internal-vertex relabelings, slot rotations and
// signed slot flips (and leg relabelings for jacobi diagrams). The returned
// diagram is rebuilt in canonical labels; sign is +1/-1 for the flip parity
// relating the input to the canonical form, 0 when both parities realize it.
SignedDiagram canonicalize(const Diagram& d);

// Per-kind orientation reversal.
// tau_A: chord/generalized only; reverses every string and flips every
// cyclic order (plane reflection, no sign).
Diagram tau_A(const Diagram& d);

// Reverses the strings without touching cyclic orders. Not an involution on
// the quotient by itself; used to cross-check tau_A against the signed
// convention (reverse strings, multiply by (-1)^#vertices) modulo 4T.
Diagram reverse_strings_only(const Diagram& d);

// tau_B: jacobi only; the diagram is fixed, the sign is (-1)^#legs.
std::pair<int, Diagram> tau_B_apply(const Diagram& d);

// chord only: some chord has both endpoints adjacent on one string.
bool has_isolated_chord(const Diagram& d);

// --- DSL ---------------------------------------------------------------

Diagram parse_diagram(const std::string& text);
std::string serialize_diagram(const Diagram& d);

} // namespace vws

#endif
