#include "cutjoin/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cutjoin/version.hpp"

namespace cutjoin {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

std::optional<Rational> parse_number(Cursor& c) {
    c.skip_ws();
    size_t start = c.pos;
    while (c.pos < c.s.size() &&
           (std::isdigit(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '/'))
        ++c.pos;
    if (c.pos == start) return std::nullopt;
    return parse_rational(c.s.substr(start, c.pos - start));
}

std::optional<Partition> parse_bracketed(Cursor& c, std::string* error) {
    if (!c.eat('[')) {
        if (error) *error = "expected '[' after basis letter";
        return std::nullopt;
    }
    std::vector<int> parts;
    if (!c.eat(']')) {
        while (true) {
            auto num = parse_number(c);
            if (!num || num->get_den() != 1 || *num <= 0) {
                if (error) *error = "partition entries must be positive integers";
                return std::nullopt;
            }
            parts.push_back(static_cast<int>(num->get_num().get_si()));
            if (c.eat(']')) break;
            if (!c.eat(',')) {
                if (error) *error = "expected ',' or ']' in partition";
                return std::nullopt;
            }
        }
    }
    return Partition::from_unsorted(std::move(parts));
}

}  // namespace

std::optional<SymFun> parse_symfun(const std::string& text, std::string* error) {
    Cursor c{text};
    SymFun out;
    bool first = true;
    while (!c.done()) {
        Rational sign = 1;
        if (c.eat('+')) {
        } else if (c.eat('-')) {
            sign = -1;
        } else if (!first) {
            if (error) *error = "expected '+' or '-' between terms";
            return std::nullopt;
        }
        first = false;
        Rational coeff = 1;
        c.skip_ws();
        if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
            auto num = parse_number(c);
            if (!num) {
                if (error) *error = "malformed rational coefficient";
                return std::nullopt;
            }
            coeff = *num;
            c.eat('*');
        }
        char basis = c.peek();
        if (basis != 'p' && basis != 'v') {
            if (error) *error = "expected p[...] or v[...]";
            return std::nullopt;
        }
        ++c.pos;
        auto lambda = parse_bracketed(c, error);
        if (!lambda) return std::nullopt;
        if (basis == 'v') coeff /= Rational(z_factor(*lambda));
        out.add_term(*lambda, sign * coeff);
    }
    return out;
}

std::string format_symfun(const SymFun& f, bool v_coords) {
    if (f.is_zero()) return "0";
    std::string out;
    auto coords = v_coords ? normalized_basis_coords(f) : f.terms();
    for (const auto& [lambda, c] : coords) {
        Rational a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string mono = (v_coords ? "v" : "p") + lambda.str();
        out += (a == 1) ? mono : rational_str(a) + "*" + mono;
    }
    return out;
}

Json partition_to_json(const Partition& p) {
    Json j = Json::array();
    for (int x : p.parts()) j.push_back(x);
    return j;
}

Json symfun_to_json(const SymFun& f) {
    Json j = Json::array();
    for (const auto& [lambda, c] : f.terms())
        j.push_back({{"partition", partition_to_json(lambda)}, {"coeff", rational_str(c)}});
    return j;
}

Json terms_to_json(const std::vector<NOTerm>& terms) {
    Json j = Json::array();
    for (const auto& t : terms)
        j.push_back({{"coeff", rational_str(t.coeff)},
                     {"create", partition_to_json(t.create)},
                     {"annihilate", partition_to_json(t.annihilate)}});
    return j;
}

Json matrix_to_json(const OpMatrix& m) {
    Json rows = Json::array(), cols = Json::array(), entries = Json::array();
    for (const auto& l : m.row_labels) rows.push_back(partition_to_json(l));
    for (const auto& l : m.col_labels) cols.push_back(partition_to_json(l));
    for (const auto& row : m.entries) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(rational_str(e));
        entries.push_back(r);
    }
    return {{"row_labels", rows}, {"col_labels", cols}, {"entries", entries},
            {"convention", "rows are source partitions"}};
}

std::string matrix_to_csv(const OpMatrix& m, const Json& meta) {
    std::ostringstream out;
    for (auto it = meta.begin(); it != meta.end(); ++it)
        out << "# " << it.key() << ": " << it.value().dump() << "\n";
    out << "source";
    for (const auto& l : m.col_labels) out << ",\"" << l.str() << "\"";
    out << "\n";
    for (size_t i = 0; i < m.entries.size(); ++i) {
        out << "\"" << m.row_labels[i].str() << "\"";
        for (const auto& e : m.entries[i]) out << "," << rational_str(e);
        out << "\n";
    }
    return out.str();
}

Json graph_to_json(const RimhookGraph& g) {
    Json vertices = Json::array(), edges = Json::array();
    for (const auto& v : g.vertices) vertices.push_back(partition_to_json(v));
    for (const auto& e : g.edges)
        edges.push_back({{"from", partition_to_json(g.vertices[e.from])},
                         {"to", partition_to_json(g.vertices[e.to])},
                         {"value", rational_str(e.value)},
                         {"channel", e.cut ? "cut" : "join"}});
    return {{"n", g.n}, {"vertices", vertices}, {"edges", edges}};
}

std::string graph_to_dot(const RimhookGraph& g, const Json& meta) {
    std::ostringstream out;
    for (auto it = meta.begin(); it != meta.end(); ++it)
        out << "// " << it.key() << ": " << it.value().dump() << "\n";
    out << "digraph cutjoin {\n";
    for (size_t i = 0; i < g.vertices.size(); ++i)
        out << "  v" << i << " [label=\"" << g.vertices[i].str() << "\"];\n";
    for (const auto& e : g.edges)
        out << "  v" << e.from << " -> v" << e.to << " [label=\"" << rational_str(e.value)
            << " (" << (e.cut ? "cut" : "join") << ")\"];\n";
    out << "}\n";
    return out.str();
}

Json moment_table_to_json(const MomentTable& t) {
    Json moments = Json::array();
    for (const auto& [mu, m] : t.moments)
        moments.push_back({{"partition", partition_to_json(mu)}, {"value", rational_str(m)}});
    return {{"N", t.N}, {"beta", t.beta}, {"moments", moments}};
}

Json weight_table_to_json(int n, const EquivParams& p) {
    Json rows = Json::array();
    for (const auto& lambda : enumerate_partitions(n)) {
        FixedPointData d = fixed_point_data(lambda, p);
        Json tangent = Json::array(), taut = Json::array();
        for (const auto& w : d.tangent) tangent.push_back(rational_str(w));
        for (const auto& w : d.taut) taut.push_back(rational_str(w));
        rows.push_back({{"partition", partition_to_json(lambda)},
                        {"tangent_weights", tangent},
                        {"taut_weights", taut},
                        {"euler_tangent", rational_str(d.euler)}});
    }
    return {{"n", n},
            {"eps1", rational_str(p.e1)},
            {"eps2", rational_str(p.e2)},
            {"self_dual", p.self_dual()},
            {"fixed_points", rows}};
}

Json make_meta(const std::string& command, const Json& params) {
    return {{"tool", "cutjoin"}, {"version", kVersion}, {"command", command}, {"params", params}};
}

std::string dump_with_meta(Json doc, const Json& meta) {
    doc["meta"] = meta;
    return doc.dump(2) + "\n";
}

}  // namespace cutjoin
