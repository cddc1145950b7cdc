#include "vws/lincomb_io.hpp"

#include <sstream>

#include "json.hpp"
#include "vws/diagram.hpp"

namespace vws {

LinComb parse_lincomb(const std::string& text) {
    LinComb out;
    std::istringstream is(text);
    std::string line;
    bool in_term = false;
    Rational coeff;
    std::string block;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        std::string head;
        ls >> head;
        if (!in_term) {
            if (head.empty()) continue;
            if (head != "term")
                throw diagram_error("expected 'term <num>/<den>'", lineno, 1);
            std::string c;
            ls >> c;
            coeff = rational_from_string(c);
            block.clear();
            in_term = true;
        } else if (head == "end") {
            out.add(parse_diagram(block), coeff);
            in_term = false;
        } else {
            block += stripped;
            block += "\n";
        }
    }
    if (in_term) throw diagram_error("unterminated term block (missing 'end')");
    return out;
}

std::string lincomb_to_text(const LinComb& lc) {
    std::ostringstream os;
    for (const auto& [k, e] : lc.terms()) {
        os << "term " << rational_to_string(e.coeff) << "\n";
        os << serialize_diagram(e.diagram);
        os << "end\n";
    }
    if (lc.terms().empty()) os << "# zero\n";
    return os.str();
}

std::string lincomb_to_json(const LinComb& lc) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [k, e] : lc.terms()) {
        nlohmann::json t;
        t["coeff"] = rational_to_string(e.coeff);
        t["diagram"] = serialize_diagram(e.diagram);
        j.push_back(t);
    }
    return j.dump(2);
}

} // namespace vws
