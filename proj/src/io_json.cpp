#include "heisrep/io_json.hpp"

#include <fstream>

namespace heisrep {

namespace {
json int_to_json(const Int& v) {
    // stay numeric for JSON-friendly magnitudes, strings beyond
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}
Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer or integer string in JSON");
}
} // namespace

json heis_to_json(const HeisenbergElement& h) {
    json m = json::array(), n = json::array();
    for (const auto& v : h.m()) m.push_back(int_to_json(v));
    for (const auto& v : h.n()) n.push_back(int_to_json(v));
    return json{{"m", m}, {"n", n}, {"l", int_to_json(h.l())}};
}

HeisenbergElement heis_from_json(const json& j, long g, QuotientSpec q) {
    std::vector<Int> m, n;
    for (const auto& v : j.at("m")) m.push_back(int_from_json(v));
    for (const auto& v : j.at("n")) n.push_back(int_from_json(v));
    if (static_cast<long>(m.size()) != g || static_cast<long>(n.size()) != g)
        throw std::invalid_argument("element JSON has wrong genus");
    return HeisenbergElement(g, m, n, int_from_json(j.at("l")), q);
}

HeisRing parse_ring_element(const std::string& text, long g, QuotientSpec q) {
    // terms separated by top-level + or -, each "coeff*element", "element" or "coeff"
    HeisRing acc;
    std::size_t i = 0;
    int pending_sign = +1;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        pending_sign = text[i] == '-' ? -1 : +1;
        ++i;
    }
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        // term: optional integer, optional '*', element text up to next top-level +/- separated by spaces
        std::size_t term_start = i;
        Int coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t s = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            coeff = Int(text.substr(s, i - s));
            have_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
        }
        // element runs until a top-level +/-: one at the very start of the
        // element slot (bare-integer term) or preceded by whitespace; the
        // minus of an exponent like s^-2 follows '^' and is kept
        std::size_t elt_start = i;
        while (i < text.size()) {
            if ((text[i] == '+' || text[i] == '-') &&
                (i == elt_start || std::isspace(static_cast<unsigned char>(text[i - 1]))))
                break;
            ++i;
        }
        std::string elt = text.substr(elt_start, i - elt_start);
        // trim
        while (!elt.empty() && std::isspace(static_cast<unsigned char>(elt.back()))) elt.pop_back();
        HeisenbergElement h = HeisenbergElement::identity(g, q);
        if (!elt.empty()) h = parse_heisenberg(elt, g, q);
        else if (!have_coeff)
            throw ParseError("empty term in ring element", term_start);
        acc.add_term(h, coeff * pending_sign);
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] == '+') pending_sign = +1;
        else if (text[i] == '-') pending_sign = -1;
        else throw ParseError("expected + or - between ring terms", i);
        ++i;
    }
    return acc;
}

json diagram1_to_json(const IntersectionDiagram1& d) {
    json pts = json::array();
    for (const auto& p : d.points) {
        json jp{{"sign", p.sign}};
        if (p.sigma_exp) jp["sigma_exp"] = int_to_json(*p.sigma_exp);
        if (p.loop) jp["loop"] = p.loop->str();
        pts.push_back(jp);
    }
    return json{{"type", "one_point"}, {"genus", d.genus}, {"points", pts}};
}

IntersectionDiagram1 diagram1_from_json(const json& j) {
    IntersectionDiagram1 d;
    d.genus = j.value("genus", 1);
    for (const auto& jp : j.at("points")) {
        DiagramPoint p;
        p.sign = jp.at("sign").get<int>();
        if (jp.contains("sigma_exp")) p.sigma_exp = int_from_json(jp.at("sigma_exp"));
        if (jp.contains("loop"))
            p.loop = parse_surface_word(jp.at("loop").get<std::string>(), d.genus, 1);
        d.points.push_back(p);
    }
    return d;
}

json diagram_npt_to_json(const NPointDiagram& d) {
    json nj = json::array();
    for (const auto& v : d.n_j) nj.push_back(int_to_json(v));
    json a = json::array();
    for (std::size_t i = 0; i < d.A.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < d.A.cols(); ++c) row.push_back(int_to_json(d.A(i, c)));
        a.push_back(row);
    }
    return json{{"type", "n_point"}, {"genus", d.genus}, {"n_j", nj}, {"A", a}};
}

NPointDiagram diagram_npt_from_json(const json& j) {
    NPointDiagram d;
    d.genus = j.value("genus", 1);
    for (const auto& v : j.at("n_j")) d.n_j.push_back(int_from_json(v));
    std::size_t k = d.n_j.size();
    d.A = IntMatrix(k, k);
    if (j.contains("A")) {
        const auto& a = j.at("A");
        if (a.size() != k) throw std::invalid_argument("A has wrong size");
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t c = 0; c < k; ++c) d.A(i, c) = int_from_json(a.at(i).at(c));
    }
    return d;
}

bool json_is_npt(const json& j) { return j.value("type", "one_point") == std::string("n_point"); }

json catalog_to_json(const CurveCatalog& c) {
    json curves = json::array();
    for (const auto& cur : c.curves) {
        json row;
        for (const auto& [sym, d] : cur.row) row[sym] = diagram1_to_json(d);
        json jc{{"name", cur.name}, {"genus", cur.genus}, {"row", row}};
        if (!cur.splitting.empty()) {
            json spl;
            for (const auto& [sym, s] : cur.splitting) {
                json ext, interior;
                for (const auto& [k2, v] : s.ext.coords) ext[k2] = v.str();
                for (const auto& [k2, v] : s.interior.coords) interior[k2] = v.str();
                spl[sym] = json{{"ext", ext}, {"int", interior}};
            }
            jc["splitting"] = spl;
        }
        curves.push_back(jc);
    }
    return json{{"g", c.g}, {"curves", curves}};
}

CurveCatalog catalog_from_json(const json& j) {
    CurveCatalog c;
    c.g = j.at("g").get<long>();
    for (const auto& jc : j.at("curves")) {
        SeparatingCurveData cur;
        cur.name = jc.at("name").get<std::string>();
        cur.genus = jc.at("genus").get<long>();
        if (jc.contains("row"))
            for (const auto& [sym, jd] : jc.at("row").items())
                cur.row[sym] = diagram1_from_json(jd);
        if (jc.contains("splitting"))
            for (const auto& [sym, js] : jc.at("splitting").items()) {
                ChainSplitting s;
                if (js.contains("ext"))
                    for (const auto& [k2, v] : js.at("ext").items())
                        s.ext.coords[k2] = parse_ring_element(v.get<std::string>(), c.g);
                if (js.contains("int"))
                    for (const auto& [k2, v] : js.at("int").items())
                        s.interior.coords[k2] = parse_ring_element(v.get<std::string>(), c.g);
                cur.splitting[sym] = s;
            }
        c.curves.push_back(cur);
    }
    return c;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::string fixtures_dir() {
#ifdef HEISREP_FIXTURES_DIR
    return HEISREP_FIXTURES_DIR;
#else
    return "fixtures";
#endif
}

} // namespace heisrep
