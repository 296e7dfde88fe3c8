#include "paramhom/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace paramhom
{

namespace
{

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json const& require_key(json const& doc, char const* key)
{
    auto it = doc.find(key);
    if (it == doc.end())
        throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

json const& require_array(json const& j, std::string const& what)
{
    if (!j.is_array())
        throw ParseError(what + " must be a list");
    return j;
}

int read_id(json const& j, std::string const& what)
{
    if (!j.is_number_integer())
        throw ParseError(what + " must be an integer vertex id");
    auto const v = j.get<long long>();
    if (v < 0 || v > 1'000'000'000)
        throw ParseError(what + " is out of range (" + std::to_string(v) + ")");
    return static_cast<int>(v);
}

SimplicialComplex read_complex(json const& j, std::string const& what)
{
    require_array(j, what);
    std::vector<Simplex> simplices;
    for (std::size_t s = 0; s < j.size(); ++s) {
        std::string const where = what + ", simplex " + std::to_string(s + 1);
        require_array(j[s], where);
        Simplex simplex;
        for (auto const& v : j[s])
            simplex.push_back(read_id(v, where));
        if (auto problem = check_simplex(simplex))
            throw ParseError(where + ": " + *problem);
        simplices.push_back(std::move(simplex));
    }
    return SimplicialComplex::closure(simplices);
}

SimplicialMap read_map(json const& j, std::string const& what)
{
    require_array(j, what);
    std::map<int, int> table;
    for (std::size_t e = 0; e < j.size(); ++e) {
        std::string const where = what + ", entry " + std::to_string(e + 1);
        if (!j[e].is_array() || j[e].size() != 2)
            throw ParseError(where + " must be a [source, target] pair");
        int const src = read_id(j[e][0], where);
        int const tgt = read_id(j[e][1], where);
        auto [it, inserted] = table.emplace(src, tgt);
        if (!inserted && it->second != tgt)
            throw ParseError(where + ": vertex " + std::to_string(src) + " mapped twice");
    }
    return SimplicialMap(std::move(table));
}

template <class T, class F>
std::vector<T> read_list(json const& doc, char const* key, F read_one)
{
    auto const& arr = require_array(require_key(doc, key), key);
    std::vector<T> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(read_one(arr[i], std::string(key) + " " + std::to_string(i + 1)));
    return out;
}

ordered_json complex_json(SimplicialComplex const& k)
{
    ordered_json out = ordered_json::array();
    for (auto const& s : k.all())
        out.push_back(s);
    return out;
}

ordered_json map_json(SimplicialMap const& f)
{
    ordered_json out = ordered_json::array();
    for (auto const& [s, t] : f.table())
        out.push_back({s, t});
    return out;
}

std::string trim(std::string const& s)
{
    auto const b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    auto const e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string fixed(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

InputDocument parse_input(std::string const& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (json::parse_error const& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("input must be a JSON object");

    InputDocument out;
    if (auto it = doc.find("characteristic"); it != doc.end()) {
        if (!it->is_number_integer() || it->get<long long>() < 2 ||
            it->get<long long>() > 2147483647LL)
            throw ParseError("characteristic must be an integer prime");
        auto const p = it->get<long long>();
        if (!is_prime(static_cast<std::uint32_t>(p)))
            throw ParseError("characteristic " + std::to_string(p) + " is not prime");
        out.characteristic = static_cast<std::uint32_t>(p);
    }

    auto& x = out.space;
    x.critical_values = read_list<double>(doc, "critical_values", [](json const& j, std::string const& w) {
        if (!j.is_number())
            throw ParseError(w + " must be a number");
        return j.get<double>();
    });
    x.vertex_complexes = read_list<SimplicialComplex>(doc, "vertex_complexes", read_complex);
    x.edge_complexes = read_list<SimplicialComplex>(doc, "edge_complexes", read_complex);
    x.left_maps = read_list<SimplicialMap>(doc, "left_maps", read_map);
    x.right_maps = read_list<SimplicialMap>(doc, "right_maps", read_map);

    int top = 0;
    for (auto const& v : x.vertex_complexes)
        top = std::max(top, v.dimension());
    for (auto const& e : x.edge_complexes)
        top = std::max(top, e.dimension());
    out.max_dim = top;
    if (auto it = doc.find("max_dim"); it != doc.end()) {
        if (!it->is_number_integer() || it->get<long long>() < 0 || it->get<long long>() > 64)
            throw ParseError("max_dim must be an integer between 0 and 64");
        out.max_dim = static_cast<int>(it->get<long long>());
    }
    require_valid(x);
    return out;
}

std::string write_input(InputDocument const& doc)
{
    ordered_json out;
    out["characteristic"] = doc.characteristic;
    out["max_dim"] = doc.max_dim;
    out["critical_values"] = doc.space.critical_values;
    ordered_json vs = ordered_json::array(), es = ordered_json::array();
    ordered_json ls = ordered_json::array(), rs = ordered_json::array();
    for (auto const& v : doc.space.vertex_complexes)
        vs.push_back(complex_json(v));
    for (auto const& e : doc.space.edge_complexes)
        es.push_back(complex_json(e));
    for (auto const& l : doc.space.left_maps)
        ls.push_back(map_json(l));
    for (auto const& r : doc.space.right_maps)
        rs.push_back(map_json(r));
    out["vertex_complexes"] = vs;
    out["edge_complexes"] = es;
    out["left_maps"] = ls;
    out["right_maps"] = rs;
    return out.dump(2) + "\n";
}

std::string format_value(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double parse_value(std::string const& s)
{
    if (s == "inf" || s == "+inf")
        return infinity;
    if (s == "-inf")
        return -infinity;
    if (s.empty())
        throw ParseError("empty number");
    char* end = nullptr;
    errno = 0;
    double const v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
        throw ParseError("not a number: '" + s + "'");
    return v;
}

DiagramDocument make_document(std::vector<DiagramSet> const& diagrams)
{
    DiagramDocument out;
    for (auto const& set : diagrams)
        for (auto const& d : set.diagrams)
            for (auto const& [pt, m] : d.points())
                out.entries.push_back({set.dim, d.type(), pt.p, pt.q, m});
    std::sort(out.entries.begin(), out.entries.end());
    return out;
}

DecoratedDiagram select(DiagramDocument const& doc, int dim, Behavior type)
{
    DecoratedDiagram out(dim, type);
    for (auto const& e : doc.entries)
        if (e.dim == dim && e.type == type)
            out.add(e.birth, e.death, e.multiplicity);
    return out;
}

std::string serialize(DiagramDocument const& doc)
{
    std::ostringstream out;
    out << "# dim type birth death multiplicity\n";
    for (auto const& e : doc.entries)
        out << e.dim << ' ' << behavior_code(e.type) << ' ' << format_value(e.birth) << ' '
            << format_value(e.death) << ' ' << e.multiplicity << '\n';
    return out.str();
}

DiagramDocument parse_diagram_document(std::string const& text)
{
    std::map<std::tuple<int, Behavior, double, double>, std::size_t> merged;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;)
            tok.push_back(t);
        std::string const where = "line " + std::to_string(lineno) + ": ";
        if (tok.size() != 5)
            throw ParseError(where + "expected 'dim type birth death multiplicity'");
        DiagramEntry e{};
        try {
            std::size_t used = 0;
            long const dim = std::stol(tok[0], &used);
            if (used != tok[0].size() || dim < 0)
                throw ParseError("bad dimension");
            e.dim = static_cast<int>(dim);
            e.type = behavior_from_code(tok[1]);
            e.birth = parse_value(tok[2]);
            e.death = parse_value(tok[3]);
            long long const m = std::stoll(tok[4], &used);
            if (used != tok[4].size() || m < 1)
                throw ParseError("multiplicity must be a positive integer");
            e.multiplicity = static_cast<std::size_t>(m);
        } catch (std::exception const& ex) {
            throw ParseError(where + ex.what());
        }
        auto const [pd, qd] = decorations_of(e.type);
        if (!DecoratedPoint{e.birth, pd, e.death, qd}.valid())
            throw ParseError(where + "point (" + tok[2] + ", " + tok[3] +
                             ") is not valid for type " + tok[1]);
        merged[{e.dim, e.type, e.birth, e.death}] += e.multiplicity;
    }
    DiagramDocument out;
    for (auto const& [key, m] : merged)
        out.entries.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key),
                               std::get<3>(key), m});
    return out;
}

std::string render_svg(DiagramDocument const& doc)
{
    static char const* const palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                          "#9467bd", "#ff7f0e", "#8c564b"};
    double const left = 80, right = 380, top = 100, bottom = 400;
    double const minus_gutter = 45, plus_gutter = 60;

    double lo = infinity, hi = -infinity;
    for (auto const& e : doc.entries)
        for (double v : {e.birth, e.death})
            if (std::isfinite(v)) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
    if (!std::isfinite(lo)) {
        lo = 0;
        hi = 1;
    }
    if (lo == hi) {
        lo -= 1;
        hi += 1;
    }
    double const pad = (hi - lo) * 0.08;
    lo -= pad;
    hi += pad;
    auto sx = [&](double v) {
        if (v == -infinity)
            return minus_gutter;
        return left + (v - lo) / (hi - lo) * (right - left);
    };
    auto sy = [&](double v) {
        if (v == infinity)
            return plus_gutter;
        return bottom - (v - lo) / (hi - lo) * (bottom - top);
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"560\" height=\"460\" "
           "viewBox=\"0 0 560 460\" font-family=\"sans-serif\" font-size=\"11\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"560\" height=\"460\" fill=\"white\"/>\n"
        << "<text x=\"230\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
           "parametrized persistence diagram</text>\n";

    // axes and diagonal, then the gutters for infinite coordinates
    out << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(bottom) << "\" x2=\"" << fixed(right)
        << "\" y2=\"" << fixed(bottom) << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(bottom) << "\" x2=\"" << fixed(left)
        << "\" y2=\"" << fixed(top) << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << fixed(left) << "\" y1=\"" << fixed(bottom) << "\" x2=\"" << fixed(right)
        << "\" y2=\"" << fixed(top) << "\" stroke=\"#888888\" stroke-dasharray=\"4 3\"/>\n"
        << "<line x1=\"" << fixed(minus_gutter) << "\" y1=\"" << fixed(bottom) << "\" x2=\""
        << fixed(minus_gutter) << "\" y2=\"" << fixed(plus_gutter)
        << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"2 3\"/>\n"
        << "<line x1=\"" << fixed(minus_gutter) << "\" y1=\"" << fixed(plus_gutter) << "\" x2=\""
        << fixed(right) << "\" y2=\"" << fixed(plus_gutter)
        << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"2 3\"/>\n"
        << "<text x=\"" << fixed(minus_gutter) << "\" y=\"" << fixed(bottom + 16)
        << "\" text-anchor=\"middle\">-inf</text>\n"
        << "<text x=\"" << fixed(minus_gutter - 8) << "\" y=\"" << fixed(plus_gutter + 4)
        << "\" text-anchor=\"end\">+inf</text>\n"
        << "<text x=\"" << fixed((left + right) / 2) << "\" y=\"" << fixed(bottom + 36)
        << "\" text-anchor=\"middle\">birth</text>\n"
        << "<text x=\"20\" y=\"" << fixed((top + bottom) / 2) << "\" text-anchor=\"middle\" "
        << "transform=\"rotate(-90 20 " << fixed((top + bottom) / 2) << ")\">death</text>\n";
    for (int i = 0; i <= 4; ++i) {
        double const v = lo + (hi - lo) * i / 4;
        char label[32];
        std::snprintf(label, sizeof label, "%.3g", std::fabs(v) < 1e-12 ? 0.0 : v);
        out << "<text x=\"" << fixed(sx(v)) << "\" y=\"" << fixed(bottom + 16)
            << "\" text-anchor=\"middle\">" << label << "</text>\n"
            << "<text x=\"" << fixed(left - 6) << "\" y=\"" << fixed(sy(v) + 4)
            << "\" text-anchor=\"end\">" << label << "</text>\n";
    }

    std::set<int> dims;
    for (auto const& e : doc.entries) {
        dims.insert(e.dim);
        char const* color = palette[static_cast<std::size_t>(e.dim) % 6];
        double const x = sx(e.birth), y = sy(e.death);
        auto const [pd, qd] = decorations_of(e.type);
        auto const [tx, ty] = DecoratedPoint{e.birth, pd, e.death, qd}.tick();
        out << "<g class=\"point\" data-dim=\"" << e.dim << "\" data-type=\""
            << behavior_code(e.type) << "\">"
            << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(x + 9 * tx)
            << "\" y2=\"" << fixed(y - 9 * ty) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>"
            << "<circle cx=\"" << fixed(x) << "\" cy=\"" << fixed(y) << "\" r=\"3.5\" fill=\""
            << color << "\"/>";
        if (e.multiplicity > 1)
            out << "<text x=\"" << fixed(x - 6) << "\" y=\"" << fixed(y - 6)
                << "\" text-anchor=\"end\" fill=\"" << color << "\">" << e.multiplicity
                << "</text>";
        out << "</g>\n";
    }

    // legend: one color per dimension, then the four tick orientations
    double ly = top;
    out << "<g class=\"legend\">\n";
    for (int d : dims) {
        out << "<circle cx=\"420\" cy=\"" << fixed(ly) << "\" r=\"4\" fill=\""
            << palette[static_cast<std::size_t>(d) % 6] << "\"/><text x=\"432\" y=\""
            << fixed(ly + 4) << "\">H" << d << "</text>\n";
        ly += 18;
    }
    ly += 8;
    for (auto t : all_behaviors) {
        auto const [pd, qd] = decorations_of(t);
        auto const [tx, ty] = DecoratedPoint{0, pd, 1, qd}.tick();
        out << "<line x1=\"420\" y1=\"" << fixed(ly) << "\" x2=\"" << fixed(420 + 8 * tx)
            << "\" y2=\"" << fixed(ly - 8 * ty) << "\" stroke=\"black\" stroke-width=\"2\"/>"
            << "<circle cx=\"420\" cy=\"" << fixed(ly) << "\" r=\"3\" fill=\"black\"/>"
            << "<text x=\"436\" y=\"" << fixed(ly + 4) << "\">" << behavior_code(t) << "</text>\n";
        ly += 20;
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string read_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(std::string const& path, std::string const& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << contents))
        throw std::runtime_error("cannot write '" + path + "'");
}

} // namespace paramhom
