#include "freeavg/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace freeavg {

using nlohmann::json;

namespace {

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

Rational rational_of(const json& v, const std::string& where)
{
    try {
        if (v.is_string()) return Rational::parse(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    } catch (const std::invalid_argument& e) {
        throw InputError(where + ": " + e.what());
    }
    throw InputError(where + ": expected a rational string such as \"1/2\"");
}

std::map<std::string, std::string> name_map(const json& obj, const std::string& where)
{
    if (!obj.is_object()) throw InputError(where + " must be an object of element names");
    std::map<std::string, std::string> out;
    for (const auto& [key, value] : obj.items()) {
        if (!value.is_string()) throw InputError(where + ": value for '" + key + "' must be an element name");
        out[key] = value.get<std::string>();
    }
    return out;
}

}  // namespace

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GroupFile parse_group_json(const std::string& text)
{
    json doc = parse_json(text);
    if (!doc.is_object()) throw InputError("group file must be a JSON object");
    if (!doc.contains("elements") || !doc.contains("mul")) throw InputError("group file needs 'elements' and 'mul'");

    GroupFile out;
    const json& elements = doc.at("elements");
    if (!elements.is_array()) throw InputError("'elements' must be an array");
    std::set<std::string> seen;
    for (const json& e : elements) {
        if (!e.is_string()) throw InputError("element names must be strings");
        if (!seen.insert(e.get<std::string>()).second) throw InputError("duplicate element '" + e.get<std::string>() + "'");
        out.table.elements.push_back(e.get<std::string>());
    }
    const json& mul = doc.at("mul");
    if (!mul.is_array()) throw InputError("'mul' must be an array of rows");
    for (const json& row : mul) {
        if (!row.is_array()) throw InputError("'mul' rows must be arrays");
        std::vector<std::size_t> r;
        for (const json& x : row) {
            if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0))
                throw InputError("'mul' entries must be non-negative indices");
            r.push_back(x.get<std::size_t>());
        }
        out.table.mul.push_back(std::move(r));
    }
    if (doc.contains("op")) out.op = name_map(doc.at("op"), "'op'");
    return out;
}

GroupFile load_group_file(const std::string& path) { return parse_group_json(read_text_file(path)); }

OperatorTable resolve_operator(const FiniteGroup& g, const std::map<std::string, std::string>& by_name)
{
    OperatorTable op(g.size(), g.size());
    for (const auto& [from, to] : by_name) {
        std::size_t a, b;
        try {
            a = g.index_of(from);
            b = g.index_of(to);
        } catch (const std::out_of_range&) {
            throw InputError("operator mentions unknown element in '" + from + "' -> '" + to + "'");
        }
        op[a] = b;
    }
    for (std::size_t a = 0; a < g.size(); ++a)
        if (op[a] == g.size()) throw InputError("operator is not defined on '" + g.name(a) + "'");
    return op;
}

std::map<std::string, std::string> load_operator_map(const std::string& path)
{
    json doc = parse_json(read_text_file(path));
    if (doc.is_object() && doc.contains("op")) return name_map(doc.at("op"), "'op'");
    return name_map(doc, "operator file");
}

LieAlgebraSpec parse_lie_json(const std::string& text)
{
    json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("dim")) throw InputError("Lie file needs 'dim'");
    if (!doc.at("dim").is_number_integer() || doc.at("dim").get<std::int64_t>() < 1)
        throw InputError("'dim' must be a positive integer");
    const auto d = doc.at("dim").get<std::size_t>();
    LieAlgebraSpec lie(d);

    auto index_of = [d](const json& v, const std::string& key) {
        if (!v.is_number_integer()) throw InputError("'" + key + "' must be an integer");
        auto i = v.get<std::int64_t>();
        if (i < 1 || static_cast<std::size_t>(i) > d) throw InputError("'" + key + "' out of range 1.." + std::to_string(d));
        return static_cast<std::size_t>(i - 1);
    };

    std::set<std::pair<std::size_t, std::size_t>> given;
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>> entries;
    if (doc.contains("brackets")) {
        if (!doc.at("brackets").is_array()) throw InputError("'brackets' must be an array");
        for (const json& b : doc.at("brackets")) {
            if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("coeffs"))
                throw InputError("each bracket needs 'i', 'j' and 'coeffs'");
            std::size_t i = index_of(b.at("i"), "i");
            std::size_t j = index_of(b.at("j"), "j");
            if (!given.insert({i, j}).second)
                throw InputError("bracket (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") given twice");
            if (!b.at("coeffs").is_object()) throw InputError("'coeffs' must be an object");
            auto& row = entries[{i, j}];
            for (const auto& [key, value] : b.at("coeffs").items()) {
                std::size_t k;
                try {
                    std::size_t used = 0;
                    long parsed = std::stol(key, &used);
                    if (used != key.size() || parsed < 1 || static_cast<std::size_t>(parsed) > d) throw std::out_of_range(key);
                    k = static_cast<std::size_t>(parsed - 1);
                } catch (const std::logic_error&) {
                    throw InputError("coefficient index '" + key + "' out of range 1.." + std::to_string(d));
                }
                row[k] = rational_of(value, "coefficient " + key);
            }
        }
    }
    for (const auto& [ij, row] : entries)
        for (const auto& [k, c] : row) {
            lie.set(ij.first, ij.second, k, c);
            if (!given.count({ij.second, ij.first})) lie.set(ij.second, ij.first, k, -c);
        }
    return lie;
}

LieAlgebraSpec load_lie_file(const std::string& path) { return parse_lie_json(read_text_file(path)); }

LinearOperatorMatrix parse_matrix_json(const std::string& text)
{
    json doc = parse_json(text);
    const json& rows = doc.is_object() && doc.contains("rows") ? doc.at("rows") : doc;
    if (!rows.is_array() || rows.empty()) throw InputError("operator matrix must be a non-empty array of rows");
    const std::size_t d = rows.size();
    std::vector<Rational> entries;
    for (std::size_t i = 0; i < d; ++i) {
        if (!rows[i].is_array() || rows[i].size() != d) throw InputError("operator matrix must be square");
        for (std::size_t j = 0; j < d; ++j)
            entries.push_back(rational_of(rows[i][j], "matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"));
    }
    return LinearOperatorMatrix(d, std::move(entries));
}

LinearOperatorMatrix load_matrix_file(const std::string& path) { return parse_matrix_json(read_text_file(path)); }

}  // namespace freeavg
