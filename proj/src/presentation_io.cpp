#include "liediff/presentation_io.hpp"

#include "liediff/errors.hpp"
#include "liediff/parse.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace liediff {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& what) {
    throw Error(ErrorCode::SchemaError, what);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path.string());
    return ss.str();
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        schema(std::string("malformed JSON: ") + e.what());
    }
}

bool valid_variable_name(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    if (!std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
        return false;
    if (s == "X" || s == "S") return false;
    const bool derivation_like = s.size() > 1 && s[0] == 'D' &&
                                 std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    return !derivation_like;
}

RatFunc field_value(const json& v, const std::vector<std::string>& vars, const std::string& where) {
    std::string text;
    if (v.is_string())
        text = v.get<std::string>();
    else if (v.is_number_integer())
        text = v.dump();
    else
        schema(where + ": expected a field expression string");
    try {
        return parse_field_expr(text, vars);
    } catch (const Error& e) {
        schema(where + ": " + e.what());
    }
}

std::size_t index_field(const json& entry, const char* key, std::size_t n, const std::string& where) {
    if (!entry.contains(key) || !entry[key].is_number_integer()) schema(where + ": missing integer '" + key + "'");
    const auto v = entry[key].get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > n)
        schema(where + ": '" + key + "' = " + std::to_string(v) + " outside 1.." + std::to_string(n));
    return static_cast<std::size_t>(v - 1);
}

StructureConstants structure_constants_from(const json& entries, std::size_t n, const std::vector<std::string>& vars,
                                            const std::string& label) {
    StructureConstants sc(n, vars.size());
    if (entries.is_null()) return sc;
    if (!entries.is_array()) schema(label + " must be an array");
    using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
    std::map<Key, RatFunc> given;
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const auto& entry = entries[e];
        const std::string where = label + "[" + std::to_string(e) + "]";
        if (!entry.is_object()) schema(where + " must be an object");
        const auto k = index_field(entry, "k", n, where);
        const auto l = index_field(entry, "l", n, where);
        const auto m = index_field(entry, "m", n, where);
        if (!entry.contains("value")) schema(where + ": missing 'value'");
        if (!given.emplace(Key{k, l, m}, field_value(entry["value"], vars, where)).second)
            schema(where + ": duplicate entry");
    }
    for (const auto& [key, value] : given) {
        const auto [k, l, m] = key;
        sc.set(k, l, m, value);
        if (k == l) continue;
        auto mirror = given.find(Key{l, k, m});
        if (mirror == given.end()) {
            sc.set(l, k, m, -value);
        } else if (!(mirror->second == -value)) {
            schema(label + ": entries (" + std::to_string(k + 1) + "," + std::to_string(l + 1) + "," +
                   std::to_string(m + 1) + ") and (" + std::to_string(l + 1) + "," + std::to_string(k + 1) + "," +
                   std::to_string(m + 1) + ") are not antisymmetric");
        }
    }
    return sc;
}

} // namespace

Presentation parse_presentation_json(std::string_view text, bool validate) {
    const json doc = parse_json(text);
    if (!doc.is_object()) schema("presentation must be a JSON object");

    Presentation p;
    if (!doc.contains("vars") || !doc["vars"].is_array()) schema("missing array 'vars'");
    for (const auto& v : doc["vars"]) {
        if (!v.is_string()) schema("variable names must be strings");
        const auto name = v.get<std::string>();
        if (!valid_variable_name(name)) schema("invalid variable name '" + name + "'");
        if (std::find(p.variables.begin(), p.variables.end(), name) != p.variables.end())
            schema("duplicate variable '" + name + "'");
        p.variables.push_back(name);
    }

    if (!doc.contains("derivations") || !doc["derivations"].is_array() || doc["derivations"].empty())
        schema("'derivations' must be a nonempty array");
    const auto& ders = doc["derivations"];
    for (std::size_t i = 0; i < ders.size(); ++i) {
        const auto& d = ders[i];
        const std::string where = "derivations[" + std::to_string(i) + "]";
        if (!d.is_object()) schema(where + " must be an object");
        DerivationAction action;
        action.name = "D" + std::to_string(i + 1);
        if (d.contains("name")) {
            if (!d["name"].is_string()) schema(where + ".name must be a string");
            action.name = d["name"].get<std::string>();
        }
        if (!d.contains("action") || !d["action"].is_object()) schema(where + ": missing object 'action'");
        const auto& act = d["action"];
        for (const auto& [key, value] : act.items())
            if (std::find(p.variables.begin(), p.variables.end(), key) == p.variables.end())
                schema(where + ": action on undeclared variable '" + key + "'");
        for (const auto& var : p.variables) {
            if (!act.contains(var)) schema(where + ": no image for variable '" + var + "'");
            action.images.push_back(field_value(act[var], p.variables, where + ".action." + var));
        }
        p.derivations.push_back(std::move(action));
    }

    p.alpha = structure_constants_from(doc.contains("alpha") ? doc["alpha"] : json(), p.dim(), p.variables, "alpha");

    if (validate) {
        const auto report = check_presentation(p);
        if (!report.ok()) throw Error(ErrorCode::PresentationInvalid, "\n" + describe(report, p));
    }
    return p;
}

Presentation load_presentation(const std::filesystem::path& path, bool validate) {
    return parse_presentation_json(read_file(path), validate);
}

BasisMatrix parse_basis_matrix_json(std::string_view text, const Presentation& p) {
    const json doc = parse_json(text);
    if (!doc.is_object()) schema("basis matrix must be a JSON object");
    if (!doc.contains("entries") || !doc["entries"].is_array()) schema("missing array 'entries'");
    const auto& rows = doc["entries"];
    const std::size_t n = rows.size();
    if (doc.contains("n") && (!doc["n"].is_number_integer() || doc["n"].get<long long>() != static_cast<long long>(n)))
        schema("'n' does not match the number of rows");
    BasisMatrix a(n, n, p.nvars());
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) schema("row " + std::to_string(i + 1) + " must have n entries");
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = field_value(rows[i][j], p.variables,
                                  "entries[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
    return a;
}

BasisMatrix load_basis_matrix(const std::filesystem::path& path, const Presentation& p) {
    return parse_basis_matrix_json(read_file(path), p);
}

StructureConstants parse_structure_constants_json(std::string_view text, const Presentation& p) {
    const json doc = parse_json(text);
    if (doc.is_array()) return structure_constants_from(doc, p.dim(), p.variables, "beta");
    if (!doc.is_object()) schema("structure constants must be a JSON object or array");
    return structure_constants_from(doc.contains("beta") ? doc["beta"] : json(), p.dim(), p.variables, "beta");
}

StructureConstants load_structure_constants(const std::filesystem::path& path, const Presentation& p) {
    return parse_structure_constants_json(read_file(path), p);
}

} // namespace liediff
