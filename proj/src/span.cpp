#include "vws/span.hpp"

#include <algorithm>
#include <sstream>

namespace vws {

namespace {

using Row = std::vector<std::pair<int, mpz_class>>;

void content_reduce(Row& r) {
    if (r.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, x] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    if (r.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, x] : r) x /= g;
}

// r <- lead(q)*r - lead(r)*q, fraction-free single step; lead columns match
Row eliminate(const Row& r, const Row& q) {
    Row out;
    out.reserve(r.size() + q.size());
    const mpz_class a = q.front().second, b = r.front().second;
    size_t i = 0, j = 0;
    while (i < r.size() || j < q.size()) {
        if (j == q.size() || (i < r.size() && r[i].first < q[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i == r.size() || q[j].first < r[i].first) {
            out.emplace_back(q[j].first, -b * q[j].second);
            ++j;
        } else {
            mpz_class x = a * r[i].second - b * q[j].second;
            if (x != 0) out.emplace_back(r[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    content_reduce(out);
    return out;
}

long span_size_guard(int degree, int p) {
    // ~10^4 columns (degree 5, two strings) is the supported ceiling
    long matchings = 1;
    for (int k = 2 * degree - 1; k > 1; k -= 2) matchings *= k;
    long comps = 1;
    for (int k = 1; k <= p - 1; ++k) comps = comps * (2 * degree + k) / k;
    return comps * matchings;
}

} // namespace

SpanBasis build_span_from(int degree, int p, bool fourT, bool oneT,
                          const std::vector<LinComb>& relations) {
    if (span_size_guard(degree, p) > 12000)
        throw guard_error("span ceiling exceeded (degree 5 on 2 strings is the maximum)");

    SpanBasis basis;
    basis.degree = degree;
    basis.p = p;
    basis.with_4T = fourT;
    basis.with_1T = oneT;
    basis.columns = enumerate_chord_diagrams(degree, p);
    for (size_t i = 0; i < basis.columns.size(); ++i)
        basis.col_index.emplace(encode_diagram(basis.columns[i]), (int)i);

    const int ncols = (int)basis.columns.size();
    std::vector<Row> pending;
    pending.reserve(relations.size());
    for (const auto& rel : relations) {
        Row r;
        mpz_class lcm = 1;
        for (const auto& [k, e] : rel.terms())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.coeff.get_den().get_mpz_t());
        for (const auto& [k, e] : rel.terms()) {
            auto it = basis.col_index.find(k);
            if (it == basis.col_index.end())
                throw diagram_error("relation term outside the basis (degree or p mismatch)");
            r.emplace_back(it->second, e.coeff.get_num() * (lcm / e.coeff.get_den()));
        }
        std::sort(r.begin(), r.end());
        content_reduce(r);
        if (!r.empty()) pending.push_back(std::move(r));
    }

    // structured elimination: per column, the sparsest waiting row pivots
    std::vector<std::vector<int>> bucket(ncols);
    for (size_t i = 0; i < pending.size(); ++i)
        bucket[pending[i].front().first].push_back((int)i);

    std::vector<int> pivot_row_of_col(ncols, -1);
    std::vector<Row> pivots;
    for (int c = 0; c < ncols; ++c) {
        auto& ids = bucket[c];
        if (ids.empty()) continue;
        int best = -1;
        for (int id : ids)
            if (best < 0 || pending[id].size() < pending[best].size() ||
                (pending[id].size() == pending[best].size() && id < best))
                best = id;
        Row piv = std::move(pending[best]);
        for (int id : ids) {
            if (id == best) continue;
            Row red = eliminate(pending[id], piv);
            pending[id] = std::move(red);
            if (!pending[id].empty())
                bucket[pending[id].front().first].push_back(id);
        }
        ids.clear();
        pivot_row_of_col[c] = (int)pivots.size();
        pivots.push_back(std::move(piv));
    }

    // backward pass: clear pivot columns above, giving reduced echelon form
    for (int i = (int)pivots.size() - 1; i >= 0; --i) {
        for (int j = i - 1; j >= 0; --j) {
            const int pc = pivots[i].front().first;
            auto it = std::lower_bound(pivots[j].begin(), pivots[j].end(),
                                       std::make_pair(pc, mpz_class(0)),
                                       [](const auto& a, const auto& b) {
                                           return a.first < b.first;
                                       });
            if (it == pivots[j].end() || it->first != pc) continue;
            // row_j <- lead(piv_i)*row_j - coef*piv_i
            Row out;
            const mpz_class a = pivots[i].front().second, b = it->second;
            size_t x = 0, y = 0;
            const Row& rj = pivots[j];
            const Row& ri = pivots[i];
            while (x < rj.size() || y < ri.size()) {
                if (y == ri.size() || (x < rj.size() && rj[x].first < ri[y].first)) {
                    out.emplace_back(rj[x].first, a * rj[x].second);
                    ++x;
                } else if (x == rj.size() || ri[y].first < rj[x].first) {
                    out.emplace_back(ri[y].first, -b * ri[y].second);
                    ++y;
                } else {
                    mpz_class v = a * rj[x].second - b * ri[y].second;
                    if (v != 0) out.emplace_back(rj[x].first, std::move(v));
                    ++x;
                    ++y;
                }
            }
            content_reduce(out);
            pivots[j] = std::move(out);
        }
    }

    basis.rows = std::move(pivots);
    return basis;
}

SpanBasis build_span(int degree, int p, bool fourT, bool oneT) {
    std::vector<LinComb> rels;
    if (fourT) {
        auto rs = relation_generators(RelationKind::fourT, degree, p);
        rels.insert(rels.end(), rs.relations.begin(), rs.relations.end());
    }
    if (oneT) {
        auto rs = relation_generators(RelationKind::oneT, degree, p);
        rels.insert(rels.end(), rs.relations.begin(), rs.relations.end());
    }
    return build_span_from(degree, p, fourT, oneT, rels);
}

bool in_span(const LinComb& v, const SpanBasis& basis) {
    Row r;
    mpz_class lcm = 1;
    for (const auto& [k, e] : v.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.coeff.get_den().get_mpz_t());
    for (const auto& [k, e] : v.terms()) {
        auto it = basis.col_index.find(k);
        if (it == basis.col_index.end())
            throw diagram_error("vector is not homogeneous of the basis degree");
        r.emplace_back(it->second, e.coeff.get_num() * (lcm / e.coeff.get_den()));
    }
    std::sort(r.begin(), r.end());
    content_reduce(r);

    size_t next = 0;
    while (!r.empty()) {
        int lead = r.front().first;
        while (next < basis.rows.size() && basis.rows[next].front().first < lead) ++next;
        if (next == basis.rows.size() || basis.rows[next].front().first != lead)
            return false;
        r = eliminate(r, basis.rows[next]);
    }
    return true;
}

std::string span_to_triplets(const SpanBasis& basis) {
    std::ostringstream os;
    os << "# span-basis v1\n";
    os << "degree " << basis.degree << "\n";
    os << "strings " << basis.p << "\n";
    os << "kinds " << (basis.with_4T ? "4T" : "") << (basis.with_4T && basis.with_1T ? "," : "")
       << (basis.with_1T ? "1T" : "") << "\n";
    os << "enum-version " << basis.enum_version << "\n";
    os << "columns " << basis.columns.size() << "\n";
    os << "rows " << basis.rows.size() << "\n";
    for (size_t i = 0; i < basis.rows.size(); ++i)
        for (const auto& [c, x] : basis.rows[i])
            os << i << " " << c << " " << x.get_str() << "\n";
    return os.str();
}

SpanBasis span_from_triplets(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    SpanBasis basis;
    size_t nrows = 0, ncols = 0;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "degree") ls >> basis.degree;
        else if (key == "strings") ls >> basis.p;
        else if (key == "kinds") {
            std::string k;
            ls >> k;
            basis.with_4T = k.find("4T") != std::string::npos;
            basis.with_1T = k.find("1T") != std::string::npos;
        } else if (key == "enum-version") ls >> basis.enum_version;
        else if (key == "columns") ls >> ncols;
        else if (key == "rows") {
            ls >> nrows;
            break;
        }
    }
    basis.columns = enumerate_chord_diagrams(basis.degree, basis.p);
    if (basis.columns.size() != ncols)
        throw diagram_error("column count mismatch in span file");
    for (size_t i = 0; i < basis.columns.size(); ++i)
        basis.col_index.emplace(encode_diagram(basis.columns[i]), (int)i);
    basis.rows.assign(nrows, {});
    size_t r;
    int c;
    std::string num;
    while (is >> r >> c >> num) basis.rows[r].emplace_back(c, mpz_class(num));
    for (auto& row : basis.rows)
        if (row.empty()) throw diagram_error("empty row in span file");
    return basis;
}

} // namespace vws
