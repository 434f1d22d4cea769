#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace rbc {

/// Flat `key = value` configuration. Blank lines and lines starting with
/// '#' are ignored; keys and values are trimmed.
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_key_values(std::istream& in);
KeyValues load_config_file(const std::string& path);

bool has_key(const KeyValues& kv, const std::string& key);

double get_double(const KeyValues& kv, const std::string& key, double fallback);
int get_int(const KeyValues& kv, const std::string& key, int fallback);
std::uint64_t get_u64(const KeyValues& kv, const std::string& key,
                      std::uint64_t fallback);
bool get_bool(const KeyValues& kv, const std::string& key, bool fallback);
std::string get_string(const KeyValues& kv, const std::string& key,
                       const std::string& fallback);

/// Comma-separated lists, e.g. "10,15,20" or "0.5, 0.25".
std::vector<double> get_double_list(const KeyValues& kv, const std::string& key,
                                    const std::vector<double>& fallback);
std::vector<int> get_int_list(const KeyValues& kv, const std::string& key,
                              const std::vector<int>& fallback);

std::vector<double> parse_double_list(const std::string& text);

/// Rejects keys outside `known` with a ConfigError naming the offender.
void require_known_keys(const KeyValues& kv,
                        const std::vector<std::string>& known);

}  // namespace rbc
