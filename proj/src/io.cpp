#include "gradla/io.hpp"

#include "gradla/error.hpp"
#include "gradla/presets.hpp"

#include <fstream>
#include <sstream>

namespace gradla::io {

namespace {

[[noreturn]] void parse_fail(const std::string& msg)
{
    fail(ErrorCode::ParseError, msg);
}

// Turns nlohmann type/range errors into ParseError with a location hint.
template <class F>
auto guarded(const std::string& where, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        parse_fail(where + ": " + e.what());
    }
}

const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        parse_fail(where + ": missing field '" + key + "'");
    return j.at(key);
}

std::vector<std::vector<int>> int_matrix(const Json& j, const std::string& where)
{
    return guarded(where, [&] { return j.get<std::vector<std::vector<int>>>(); });
}

} // namespace

Json parse_json(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(source + ": byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        parse_fail(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

CycloScalar scalar_from_json(const Json& j, int root_order)
{
    if (j.is_number_integer())
        return CycloScalar(Rational(j.get<long>()), root_order);
    if (j.is_string())
        return CycloScalar::parse(j.get<std::string>(), root_order);
    parse_fail("scalar: expected a string or an integer, got " + j.dump());
}

GradingGroup group_from_json(const Json& j)
{
    const Json& m = j.is_object() ? field(j, "moduli", "group") : j;
    auto moduli = guarded("group.moduli", [&] { return m.get<std::vector<int>>(); });
    for (int v : moduli)
        if (v < 1)
            parse_fail("group.moduli: moduli must be positive");
    return GradingGroup(moduli);
}

Json to_json(const BiadditiveMap& f)
{
    return {{"moduli", f.group().moduli()}, {"root_order", f.root_order()}, {"exponents", f.exponents()}};
}

namespace {

BiadditiveMap biadditive_from_json(const Json& j, const std::string& where)
{
    GradingGroup g = group_from_json(field(j, "moduli", where));
    int n = guarded(where + ".root_order", [&] { return field(j, "root_order", where).get<int>(); });
    if (n < 1)
        parse_fail(where + ".root_order: must be positive");
    return BiadditiveMap(g, n, int_matrix(field(j, "exponents", where), where + ".exponents"));
}

} // namespace

Bicharacter bicharacter_from_json(const Json& j)
{
    BiadditiveMap f = biadditive_from_json(j, "lambda");
    return Bicharacter(f.group(), f.root_order(), f.exponents());
}

Multiplier multiplier_from_json(const Json& j)
{
    BiadditiveMap f = biadditive_from_json(j, "sigma");
    return Multiplier(f.group(), f.root_order(), f.exponents());
}

GroupElement degree_from_json(const GradingGroup& g, const Json& j)
{
    auto r = guarded("degree", [&] { return j.get<std::vector<int>>(); });
    if ((int)r.size() != g.rank())
        parse_fail("degree " + j.dump() + ": expected " + std::to_string(g.rank()) + " residues");
    return g.element(r);
}

Json to_json(const GroupElement& x)
{
    return x.residues();
}

GradedAlgebra algebra_from_json(const Json& j)
{
    AlgebraSpec s;
    s.group = group_from_json(field(j, "group", "algebra"));
    s.lambda = bicharacter_from_json(field(j, "lambda", "algebra"));
    s.root_order = guarded("algebra.root_order", [&] { return field(j, "root_order", "algebra").get<int>(); });
    if (s.root_order < 1)
        parse_fail("algebra.root_order: must be positive");
    const Json& basis = field(j, "basis", "algebra");
    if (!basis.is_array() || basis.empty())
        parse_fail("algebra.basis: expected a nonempty array");
    std::map<std::string, int> index;
    for (size_t i = 0; i < basis.size(); ++i) {
        std::string where = "algebra.basis[" + std::to_string(i) + "]";
        std::string label = guarded(where, [&] { return field(basis[i], "label", where).get<std::string>(); });
        if (!index.emplace(label, (int)i).second)
            parse_fail(where + ": duplicate label '" + label + "'");
        s.labels.push_back(label);
        s.degrees.push_back(degree_from_json(s.group, field(basis[i], "degree", where)));
    }
    int d = (int)s.labels.size();
    auto lookup = [&](const std::string& label, const std::string& where) {
        auto it = index.find(label);
        if (it == index.end())
            parse_fail(where + ": unknown basis label '" + label + "'");
        return it->second;
    };
    s.table.assign((size_t)d * d, {});
    const Json& table = field(j, "table", "algebra");
    if (!table.is_object())
        parse_fail("algebra.table: expected an object keyed by \"a,b\"");
    for (const auto& [key, terms] : table.items()) {
        std::string where = "algebra.table[\"" + key + "\"]";
        auto comma = key.find(',');
        if (comma == std::string::npos)
            parse_fail(where + ": key must be \"a,b\"");
        int a = lookup(key.substr(0, comma), where), b = lookup(key.substr(comma + 1), where);
        if (!terms.is_array())
            parse_fail(where + ": expected an array of terms");
        for (const auto& t : terms) {
            int k = lookup(guarded(where, [&] { return field(t, "k", where).get<std::string>(); }), where);
            s.table[(size_t)a * d + b].push_back({k, scalar_from_json(field(t, "c", where), s.root_order)});
        }
    }
    return make_algebra(std::move(s));
}

Json to_json(const GradedAlgebra& a)
{
    Json basis = Json::array();
    for (int i = 0; i < a.dim(); ++i)
        basis.push_back({{"label", a.label(i)}, {"degree", to_json(a.degree(i))}});
    Json table = Json::object();
    for (int i = 0; i < a.dim(); ++i)
        for (int k = 0; k < a.dim(); ++k) {
            const auto& p = a.product(i, k);
            if (p.empty())
                continue;
            Json terms = Json::array();
            for (const auto& t : p)
                terms.push_back({{"k", a.label(t.k)}, {"c", t.c.to_string()}});
            table[a.label(i) + "," + a.label(k)] = terms;
        }
    return {{"format", 1},
            {"group", {{"moduli", a.group().moduli()}}},
            {"lambda", to_json(a.lambda())},
            {"root_order", a.root_order()},
            {"basis", basis},
            {"table", table}};
}

GradedAlgebra load_algebra(const std::string& source)
{
    const std::string prefix = "preset:";
    if (source.rfind(prefix, 0) == 0)
        return presets::by_name(source.substr(prefix.size()));
    return algebra_from_json(read_json_file(source));
}

AlgebraElement element_from_json(const GradedAlgebra& a, const Json& j)
{
    if (!j.is_array())
        parse_fail("element: expected an array of {\"b\", \"c\"} terms, got " + j.dump());
    AlgebraElement e = a.zero();
    for (const auto& t : j) {
        std::string label = guarded("element", [&] { return field(t, "b", "element").get<std::string>(); });
        e += a.basis(label) * scalar_from_json(field(t, "c", "element"), a.root_order());
    }
    return e;
}

Json to_json(const AlgebraElement& e)
{
    Json out = Json::array();
    for (const auto& [k, c] : e.terms())
        out.push_back({{"b", e.algebra().label(k)}, {"c", c.to_string()}});
    return out;
}

namespace {

std::vector<GroupElement> degree_list(const GradingGroup& g, const Json& j, const std::string& where)
{
    if (!j.is_array())
        parse_fail(where + ": expected an array of degrees");
    std::vector<GroupElement> out;
    for (const auto& d : j)
        out.push_back(degree_from_json(g, d));
    return out;
}

} // namespace

GradedMatrix matrix_from_json(const GradedAlgebra& a, const Json& j)
{
    auto rows = degree_list(a.group(), field(j, "row_degrees", "matrix"), "matrix.row_degrees");
    auto cols = j.contains("col_degrees") ? degree_list(a.group(), j.at("col_degrees"), "matrix.col_degrees") : rows;
    const Json& entries = field(j, "entries", "matrix");
    if (!entries.is_array() || entries.size() != rows.size())
        parse_fail("matrix.entries: expected " + std::to_string(rows.size()) + " rows");
    std::vector<AlgebraElement> flat;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (!entries[r].is_array() || entries[r].size() != cols.size())
            parse_fail("matrix.entries[" + std::to_string(r) + "]: expected " + std::to_string(cols.size()) +
                       " entries");
        for (const auto& e : entries[r])
            flat.push_back(element_from_json(a, e));
    }
    return GradedMatrix(a, rows, cols, std::move(flat));
}

Json to_json(const GradedMatrix& m)
{
    Json rows = Json::array(), cols = Json::array(), entries = Json::array();
    for (const auto& d : m.row_degrees())
        rows.push_back(to_json(d));
    for (const auto& d : m.col_degrees())
        cols.push_back(to_json(d));
    for (int r = 0; r < m.nrows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.ncols(); ++c)
            row.push_back(to_json(m.at(r, c)));
        entries.push_back(row);
    }
    return {{"format", 1}, {"row_degrees", rows}, {"col_degrees", cols}, {"entries", entries}};
}

GradedMatrix override_degrees(const GradedMatrix& m, const Json& degrees)
{
    const GradingGroup& g = m.algebra().group();
    auto rows = m.row_degrees(), cols = m.col_degrees();
    if (degrees.is_array()) {
        rows = cols = degree_list(g, degrees, "degrees");
    } else if (degrees.is_object()) {
        if (degrees.contains("row_degrees"))
            rows = degree_list(g, degrees.at("row_degrees"), "degrees.row_degrees");
        if (degrees.contains("col_degrees"))
            cols = degree_list(g, degrees.at("col_degrees"), "degrees.col_degrees");
    } else {
        parse_fail("degrees: expected an array or an object");
    }
    if (rows.size() != (size_t)m.nrows() || cols.size() != (size_t)m.ncols())
        parse_fail("degrees: length does not match the matrix shape");
    return m.with_degrees(rows, cols);
}

Json result_document(const AlgebraElement& e)
{
    Json doc = {{"format", 1}, {"result", to_json(e)}};
    auto deg = e.homogeneous_degree();
    if (deg)
        doc["degree"] = to_json(*deg);
    else
        doc["degree"] = "inhomogeneous";
    return doc;
}

} // namespace gradla::io
