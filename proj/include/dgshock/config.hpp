#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgshock {

/// Raised for malformed or invalid configuration; `key` names the offending
/// entry (empty when the problem is not tied to a single key).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Flat typed key-value configuration.
///
/// Text format: one `key = value` per line, `#` starts a comment, and a
/// `[section]` header prefixes the following keys with `section.`.
class Config {
 public:
  Config() = default;

  static Config parse(const std::string& text, const std::string& origin = "<string>");
  static Config load(const std::string& path);

  /// Later values win.
  void merge(const Config& other);
  void set(const std::string& key, const std::string& value);
  /// Parses "key=value".
  void apply_override(const std::string& assignment);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::map<std::string, std::string>& entries() const { return values_; }

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key) const;
  bool get_bool(const std::string& key, bool fallback) const;
  /// Comma- or whitespace-separated list of reals.
  std::vector<double> get_doubles(const std::string& key) const;
  std::vector<double> get_doubles(const std::string& key,
                                  const std::vector<double>& fallback) const;
  std::vector<int> get_ints(const std::string& key) const;
  std::vector<int> get_ints(const std::string& key, const std::vector<int>& fallback) const;

  /// Throws ConfigError for the first key not in `known`.
  void check_known(const std::vector<std::string>& known) const;

  std::string to_text() const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace dgshock
