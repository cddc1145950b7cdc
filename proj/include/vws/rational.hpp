#ifndef VWS_RATIONAL_HPP
#define VWS_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace vws {

// Exact rational scalar used throughout. GMP keeps values canonical
// (reduced, denominator > 0) as long as arithmetic goes through mpq_class.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return q;
}

// Always "num/den", matching the polynomial text formats.
inline std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace vws

#endif
