#include "lbz/fileio.hpp"

#include "lbz/errors.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace lbz {

namespace {

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(std::string("invalid JSON in '") + path + "': " + err.what(),
                         static_cast<std::size_t>(err.byte));
    }
}

const nlohmann::json& require(const nlohmann::json& j, const char* key,
                              const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing \"" + key + "\"", 0);
    return *it;
}

std::string require_string(const nlohmann::json& j, const char* key,
                           const std::string& where) {
    const nlohmann::json& v = require(j, key, where);
    if (!v.is_string()) throw ParseError(where + ": \"" + key + "\" must be a string", 0);
    return v.get<std::string>();
}

} // namespace

VarietySpec load_variety_file(const std::string& path) {
    const nlohmann::json j = load_json(path);
    if (!j.is_object()) throw ParseError(path + ": top level must be an object", 0);

    VarietySpec spec;
    spec.name = require_string(j, "name", path);
    if (spec.name.empty()) throw ParseError(path + ": \"name\" must be nonempty", 0);

    const nlohmann::json& ids = require(j, "identities", path);
    if (!ids.is_array()) throw ParseError(path + ": \"identities\" must be an array", 0);

    int position = 0;
    for (const nlohmann::json& id : ids) {
        ++position;
        const std::string where = path + ": identity #" + std::to_string(position);
        if (!id.is_object()) throw ParseError(where + " must be an object", 0);

        Identity out;
        if (auto it = id.find("name"); it != id.end()) {
            if (!it->is_string()) throw ParseError(where + ": \"name\" must be a string", 0);
            out.name = it->get<std::string>();
        }
        if (out.name.empty()) out.name = "identity" + std::to_string(position);

        const nlohmann::json& terms = require(id, "terms", where);
        if (!terms.is_array() || terms.empty())
            throw ParseError(where + ": \"terms\" must be a nonempty array", 0);
        for (const nlohmann::json& rec : terms) {
            if (!rec.is_object()) throw ParseError(where + ": each term must be an object", 0);
            Rat coeff(1);
            if (auto it = rec.find("coefficient"); it != rec.end()) {
                if (!it->is_string())
                    throw ParseError(where + ": \"coefficient\" must be a string like \"p/q\"", 0);
                coeff = rat_from_string(it->get<std::string>());
            }
            out.element.add(parse_term(require_string(rec, "term", where)), coeff);
        }
        if (out.element.is_zero())
            throw ParseError(where + ": terms cancel to zero", 0);
        spec.identities.push_back(std::move(out));
    }
    return spec;
}

Assignment load_assignment_file(const std::string& path) {
    const nlohmann::json j = load_json(path);
    if (!j.is_object()) throw ParseError(path + ": top level must be an object", 0);

    Assignment a;
    for (const auto& [key, value] : j.items()) {
        if (key.size() < 2 || key[0] != 'x' ||
            key.find_first_not_of("0123456789", 1) != std::string::npos || key[1] == '0')
            throw ParseError(path + ": key \"" + key + "\" is not a generator (use \"x1\", \"x2\", ...)",
                             0);
        if (!value.is_string())
            throw ParseError(path + ": value for \"" + key + "\" must be a string", 0);
        const int index = std::stoi(key.substr(1));
        if (!a.emplace(index, helement_from_string(value.get<std::string>())).second)
            throw ParseError(path + ": duplicate generator \"" + key + "\"", 0);
    }
    return a;
}

} // namespace lbz
