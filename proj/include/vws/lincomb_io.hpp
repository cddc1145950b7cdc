#ifndef VWS_LINCOMB_IO_HPP
#define VWS_LINCOMB_IO_HPP

#include <string>

#include "vws/lincomb.hpp"

namespace vws {

/*
 * Text form of a linear combination: blocks of
 *
 *     term <num>/<den>
 *     <diagram DSL lines>
 *     end
 *
 * Blank lines and '#' comments are allowed between blocks.
 */
LinComb parse_lincomb(const std::string& text);
std::string lincomb_to_text(const LinComb& lc);
std::string lincomb_to_json(const LinComb& lc);

} // namespace vws

#endif
