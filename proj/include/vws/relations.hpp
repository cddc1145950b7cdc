#ifndef VWS_RELATIONS_HPP
#define VWS_RELATIONS_HPP

#include <functional>
#include <vector>

#include "vws/diagram.hpp"
#include "vws/lincomb.hpp"

namespace vws {

enum class RelationKind { fourT, oneT };

struct RelationSet {
    int degree = 0;
    int p = 0;
    RelationKind kind = RelationKind::fourT;
    std::vector<LinComb> relations;
};

// Fully expands a generalized diagram into chord diagrams, eliminating one
// string-adjacent vertex at a time (S = T - U; in T the edge at the slot
// counterclockwise-next after the string edge attaches below the other).
LinComb stu_expand(const Diagram& d);

// Test hook: `choose` picks which (vertex, leg) elimination site to use among
// the candidates at every step; the result must not depend on it.
struct StuSite {
    int vertex;
    int leg;
};
LinComb stu_expand_with(const Diagram& d,
                        const std::function<int(const std::vector<StuSite>&)>& choose);

// Single S = T - U step at the given site (degree preserved).
std::pair<Diagram, Diagram> stu_step(const Diagram& d, int vertex, int leg);

// fourT: differences of the two expansions of every degree-n diagram whose
// single trivalent vertex joins three legs. oneT: every degree-n chord
// diagram containing an isolated chord, as a singleton.
RelationSet relation_generators(RelationKind kind, int degree, int p);

enum class LocalRelation { AS, IHX };

// AS site: trivalent vertex index. IHX site: a dart on the middle edge,
// which must join two distinct trivalent vertices.
LinComb local_relation(const Diagram& d, int site, LocalRelation kind);

// All chord diagrams of the given degree on p strings, canonical, in a
// deterministic order. The guard caps the total count.
std::vector<Diagram> enumerate_chord_diagrams(int degree, int p,
                                              long guard = 200000);

} // namespace vws

#endif
