#ifndef VWS_SPAN_HPP
#define VWS_SPAN_HPP

#include <gmpxx.h>
#include <map>
#include <string>
#include <vector>

#include "vws/lincomb.hpp"
#include "vws/relations.hpp"

namespace vws {

// Row space of the chosen relation families over the canonical chord-diagram
// basis in enumeration order. Rows are integer, content-reduced, leading
// coefficient positive, in reduced echelon form.
struct SpanBasis {
    int degree = 0;
    int p = 0;
    bool with_4T = false;
    bool with_1T = false;
    int enum_version = 1;
    std::vector<Diagram> columns;
    std::map<std::string, int> col_index; // encode_diagram -> column
    std::vector<std::vector<std::pair<int, mpz_class>>> rows; // sorted by lead
    int rank() const { return (int)rows.size(); }
};

// Degree 5 on two strings is the supported ceiling; larger spaces are
// refused with guard_error.
SpanBasis build_span(int degree, int p, bool fourT, bool oneT);

// Same, from caller-provided relations (test hook for shuffled input).
SpanBasis build_span_from(int degree, int p, bool fourT, bool oneT,
                          const std::vector<LinComb>& relations);

bool in_span(const LinComb& v, const SpanBasis& basis);

std::string span_to_triplets(const SpanBasis& basis);
SpanBasis span_from_triplets(const std::string& text);

} // namespace vws

#endif
