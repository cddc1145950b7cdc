#ifndef VWS_WEIGHTS_HPP
#define VWS_WEIGHTS_HPP

#include <cstdint>
#include <vector>

#include "vws/diagram.hpp"
#include "vws/lincomb.hpp"
#include "vws/necklace.hpp"
#include "vws/tensor_env.hpp"

namespace vws {

/*
 * Boundary walk of a resolved fat graph.
 *
 * Every dart has a clockwise and a counterclockwise side; the boundary of
 * the thickened graph is traced by the deterministic successor
 *
 *     (d, cw)  -> (mate d, ccw)                      along the band
 *     (d, ccw) -> (next slot of d, cw)               around a vertex corner
 *     (l, ccw) -> (l, cw)   for a free (jacobi) leg  around the tip
 *
 * where "next" follows the vertex's resolved cyclic order. Legs on strings
 * break the walk: (l, cw) starts an open arc, (l, ccw) ends one. A vertex
 * resolved against its stored order contributes a factor -1.
 */
struct BoundaryDecomposition {
    int components = 0;
    std::vector<int> comp_is_cycle;              // per component
    std::vector<std::pair<int, int>> leg_comp;   // per leg: (cw side, ccw side)
    std::vector<std::vector<int>> cycle_legs;    // per component: legs in walk order
    int beadfree_cycles = 0;
};

struct ResolvedFatGraph {
    int sign = 1;
    uint32_t reversed_mask = 0; // bit v set = vertex v uses the reversed order
};

// All 2^t resolutions, vertex 0 most significant, original order first.
std::vector<ResolvedFatGraph> resolve_vertices(const Diagram& d);

BoundaryDecomposition boundary_walk(const Diagram& d, uint32_t reversed_mask);

// One resolution term of phi before index summation: beads carry component
// labels renumbered by first occurrence along the strings.
struct PhiSymbolicTerm {
    int sign = 1;
    std::vector<std::vector<std::pair<int, int>>> beads_per_string;
    int closed_components = 0;
};

std::vector<PhiSymbolicTerm> phi_symbolic_terms(const Diagram& d);

// gl_N weight system on diagrams with strings. Arc components get summed
// indices 1..N, bead-free cycles give factors N, beads multiply
// bottom-to-top along each string; the result is normal-ordered.
TensorEnvPoly phi(const Diagram& d, int N, int jobs = 1);
TensorEnvPoly phi(const LinComb& v, int N, int p, int jobs = 1);

// gl_N weight system on jacobi diagrams, valued in necklace polynomials
// with symbolic rank N.
NecklacePoly psi(const Diagram& d);
NecklacePoly psi(const LinComb& v, int p);

// Raw per-resolution contributions (sign, bead-free cycle count, necklaces).
struct PsiTerm {
    int sign = 1;
    int n_power = 0;
    std::vector<Necklace> necklaces;
};
std::vector<PsiTerm> psi_terms(const Diagram& d);

// psi with every walk read backwards; equals tau_S_poly(psi(d)).
NecklacePoly psi_reversed_convention(const Diagram& d);

// Symmetrization B(p) -> A(p): averages all ways to attach the color-c legs
// to string c, one permutation order per color.
LinComb chi(const Diagram& d);

} // namespace vws

#endif
