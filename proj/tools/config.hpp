#pragma once

// Minimal TOML reader for the figure configs: [section] headers, key = value pairs with
// numbers, strings, booleans and single-line flat arrays, '#' comments. Anything else is
// rejected. The result is a JSON object so configs can be merged over built-in defaults.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <bcsq/common.hpp>

namespace bcsq::cli {

using json = nlohmann::json;

namespace detail {

inline std::string trim(const std::string& s)
{
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// drop a trailing comment that is not inside a string
inline std::string strip_comment(const std::string& line)
{
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"')
            in_string = !in_string;
        else if (line[i] == '#' && !in_string)
            return line.substr(0, i);
    }
    return line;
}

inline bool is_bare_key(const std::string& k)
{
    if (k.empty())
        return false;
    for (char c : k)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'))
            return false;
    return true;
}

inline json parse_scalar(const std::string& text, const std::string& where)
{
    const std::string v = trim(text);
    if (v.empty())
        throw ValidationError(where + ": missing value");
    if (v.front() == '"') {
        if (v.size() < 2 || v.back() != '"' || v.find('"', 1) != v.size() - 1)
            throw ValidationError(where + ": malformed string " + v);
        return v.substr(1, v.size() - 2);
    }
    if (v == "true")
        return true;
    if (v == "false")
        return false;
    std::string num;
    for (char c : v)
        if (c != '_')
            num += c;
    std::size_t used = 0;
    const bool integral = num.find_first_of(".eE") == std::string::npos && num != "inf" && num != "nan";
    try {
        if (integral) {
            const long long i = std::stoll(num, &used);
            if (used == num.size())
                return i;
        } else {
            const double d = std::stod(num, &used);
            if (used == num.size())
                return d;
        }
    } catch (const std::exception&) {
    }
    throw ValidationError(where + ": cannot parse value " + v);
}

inline json parse_value(const std::string& text, const std::string& where)
{
    const std::string v = trim(text);
    if (!v.empty() && v.front() == '[') {
        if (v.back() != ']')
            throw ValidationError(where + ": arrays must be written on one line");
        json arr = json::array();
        const std::string body = trim(v.substr(1, v.size() - 2));
        if (body.empty())
            return arr;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (trim(item).empty())
                continue;   // trailing comma
            arr.push_back(parse_scalar(item, where));
        }
        return arr;
    }
    return parse_scalar(v, where);
}

} // namespace detail

inline json parse_toml(std::istream& in, const std::string& name = "config")
{
    json root = json::object();
    json* section = &root;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = name + ":" + std::to_string(lineno);
        const std::string s = detail::trim(detail::strip_comment(line));
        if (s.empty())
            continue;
        if (s.front() == '[') {
            if (s.back() != ']' || s.size() < 3 || s[1] == '[')
                throw ValidationError(where + ": malformed section header");
            const std::string key = detail::trim(s.substr(1, s.size() - 2));
            if (!detail::is_bare_key(key))
                throw ValidationError(where + ": bad section name '" + key + "'");
            if (root.contains(key))
                throw ValidationError(where + ": duplicate section [" + key + "]");
            root[key] = json::object();
            section = &root[key];
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ValidationError(where + ": expected key = value");
        const std::string key = detail::trim(s.substr(0, eq));
        if (!detail::is_bare_key(key))
            throw ValidationError(where + ": bad key '" + key + "'");
        if (section->contains(key))
            throw ValidationError(where + ": duplicate key '" + key + "'");
        (*section)[key] = detail::parse_value(s.substr(eq + 1), where);
    }
    return root;
}

inline json parse_toml_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open config file " + path);
    return parse_toml(in, path);
}

// Overlay `config` on `defaults`. Every section and key in the config must exist in the
// defaults, and numbers may only replace numbers, strings strings, arrays arrays.
inline json merge_strict(const json& defaults, const json& config)
{
    json out = defaults;
    for (auto it = config.begin(); it != config.end(); ++it) {
        if (!defaults.contains(it.key()))
            throw ValidationError("unknown config section [" + it.key() + "]");
        const json& dsec = defaults.at(it.key());
        if (!it->is_object())
            throw ValidationError("config entry '" + it.key() + "' must be a section");
        for (auto kv = it->begin(); kv != it->end(); ++kv) {
            const std::string path = it.key() + "." + kv.key();
            if (!dsec.contains(kv.key()))
                throw ValidationError("unknown config key " + path);
            const json& d = dsec.at(kv.key());
            const bool ok = (d.is_number() && kv->is_number()) || (d.is_string() && kv->is_string()) ||
                            (d.is_boolean() && kv->is_boolean()) || (d.is_array() && kv->is_array());
            if (!ok)
                throw ValidationError("config key " + path + " has the wrong type");
            if (d.is_array())
                for (const auto& e : *kv)
                    if (!e.is_number())
                        throw ValidationError("config key " + path + " must be an array of numbers");
            out[it.key()][kv.key()] = *kv;
        }
    }
    return out;
}

// Typed accessors with the section.key name in error messages.
inline double get_number(const json& cfg, const std::string& sec, const std::string& key)
{
    const json& v = cfg.at(sec).at(key);
    const double x = v.get<double>();
    if (!std::isfinite(x))
        throw ValidationError("config key " + sec + "." + key + " must be finite");
    return x;
}

inline long get_integer(const json& cfg, const std::string& sec, const std::string& key)
{
    const double x = get_number(cfg, sec, key);
    if (x != std::floor(x) || std::abs(x) > 9.0e15)
        throw ValidationError("config key " + sec + "." + key + " must be an integer");
    return static_cast<long>(x);
}

inline std::string get_string(const json& cfg, const std::string& sec, const std::string& key)
{
    return cfg.at(sec).at(key).get<std::string>();
}

inline std::vector<double> get_numbers(const json& cfg, const std::string& sec, const std::string& key)
{
    std::vector<double> out;
    for (const auto& e : cfg.at(sec).at(key))
        out.push_back(e.get<double>());
    return out;
}

} // namespace bcsq::cli
