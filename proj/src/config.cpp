#include "rbc/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "rbc/errors.hpp"

namespace rbc {
namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& text) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad number for '" + key + "': " + text);
    }
}

}  // namespace

KeyValues parse_key_values(std::istream& in) {
    KeyValues kv;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config: line " + std::to_string(line_no) +
                              " is not 'key = value': " + text);
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("config: empty key on line " + std::to_string(line_no));
        }
        kv[key] = value;
    }
    return kv;
}

KeyValues load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    try {
        return parse_key_values(in);
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

bool has_key(const KeyValues& kv, const std::string& key) {
    return kv.find(key) != kv.end();
}

double get_double(const KeyValues& kv, const std::string& key, double fallback) {
    const auto it = kv.find(key);
    return it == kv.end() ? fallback : parse_double(key, it->second);
}

int get_int(const KeyValues& kv, const std::string& key, int fallback) {
    const auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
        std::size_t pos = 0;
        const int v = std::stoi(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument(it->second);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer for '" + key + "': " + it->second);
    }
}

std::uint64_t get_u64(const KeyValues& kv, const std::string& key,
                      std::uint64_t fallback) {
    const auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument(it->second);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad unsigned for '" + key + "': " + it->second);
    }
}

bool get_bool(const KeyValues& kv, const std::string& key, bool fallback) {
    const auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    std::string v = it->second;
    std::transform(v.begin(), v.end(), v.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("config: bad boolean for '" + key + "': " + it->second);
}

std::string get_string(const KeyValues& kv, const std::string& key,
                       const std::string& fallback) {
    const auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string token = trim(item);
        if (token.empty()) throw ConfigError("config: empty list entry in: " + text);
        out.push_back(parse_double("list", token));
    }
    if (out.empty()) throw ConfigError("config: empty list: " + text);
    return out;
}

std::vector<double> get_double_list(const KeyValues& kv, const std::string& key,
                                    const std::vector<double>& fallback) {
    const auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
        return parse_double_list(it->second);
    } catch (const ConfigError&) {
        throw ConfigError("config: bad list for '" + key + "': " + it->second);
    }
}

std::vector<int> get_int_list(const KeyValues& kv, const std::string& key,
                              const std::vector<int>& fallback) {
    const auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    std::vector<int> out;
    for (double v : get_double_list(kv, key, {})) {
        const int i = static_cast<int>(v);
        if (static_cast<double>(i) != v) {
            throw ConfigError("config: non-integer entry for '" + key + "': " +
                              it->second);
        }
        out.push_back(i);
    }
    return out;
}

void require_known_keys(const KeyValues& kv,
                        const std::vector<std::string>& known) {
    for (const auto& [key, value] : kv) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    }
}

}  // namespace rbc
