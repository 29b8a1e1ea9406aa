#pragma once

#include <map>
#include <string>
#include <vector>

namespace curvebody {

// Flat `key = value` configuration text: one pair per line, '#' starts a
// comment, keys may be dotted (potential.kind).  Values are kept verbatim;
// typed access parses on demand and rejects trailing garbage, so a typo like
// "dt = 1e-3x" fails loudly instead of truncating.
class RunConfig {
 public:
  static RunConfig parse(const std::string& text);
  static RunConfig parse_file(const std::string& path);

  // Canonical form: sorted keys, one "key = value" line each.  parse() of
  // the result reproduces the same config.
  std::string serialize() const;

  bool has(const std::string& key) const;
  const std::string& get_string(const std::string& key) const;
  double get_double(const std::string& key) const;
  int get_int(const std::string& key) const;
  bool get_bool(const std::string& key) const;

  std::string get_string_or(const std::string& key, const std::string& fallback) const;
  double get_double_or(const std::string& key, double fallback) const;
  int get_int_or(const std::string& key, int fallback) const;
  bool get_bool_or(const std::string& key, bool fallback) const;

  void set(const std::string& key, const std::string& value);

  // Every present key must appear in `allowed`; the first offender is named
  // in the exception.  Commands call this with their own key list so that
  // misspelled or misplaced keys never pass silently.
  void require_known(const std::vector<std::string>& allowed) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace curvebody
