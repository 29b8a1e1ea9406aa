#include "curvebody/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace curvebody {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool valid_key(const std::string& key) {
  if (key.empty()) return false;
  for (char c : key) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
    if (!ok) return false;
  }
  return true;
}

[[noreturn]] void fail_line(int line, const std::string& what) {
  throw std::invalid_argument("config line " + std::to_string(line) + ": " + what);
}

}  // namespace

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig out;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail_line(line_no, "expected `key = value`");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!valid_key(key))
      fail_line(line_no, "bad key `" + key + "` (letters, digits, `_`, `.` only)");
    if (value.empty()) fail_line(line_no, "empty value for `" + key + "`");
    if (out.entries_.count(key)) fail_line(line_no, "duplicate key `" + key + "`");
    out.entries_.emplace(key, value);
  }
  return out;
}

RunConfig RunConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string RunConfig::serialize() const {
  std::ostringstream out;
  for (const auto& [key, value] : entries_) out << key << " = " << value << "\n";
  return out.str();
}

bool RunConfig::has(const std::string& key) const { return entries_.count(key) != 0; }

const std::string& RunConfig::get_string(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end())
    throw std::invalid_argument("missing config key `" + key + "`");
  return it->second;
}

double RunConfig::get_double(const std::string& key) const {
  const std::string& v = get_string(key);
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size())
    throw std::invalid_argument("config key `" + key + "`: `" + v + "` is not a number");
  return x;
}

int RunConfig::get_int(const std::string& key) const {
  const std::string& v = get_string(key);
  std::size_t used = 0;
  long x = 0;
  try {
    x = std::stol(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || x != static_cast<int>(x))
    throw std::invalid_argument("config key `" + key + "`: `" + v +
                                "` is not a small integer");
  return static_cast<int>(x);
}

bool RunConfig::get_bool(const std::string& key) const {
  const std::string& v = get_string(key);
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw std::invalid_argument("config key `" + key + "`: `" + v +
                              "` is not a boolean (true/false/1/0)");
}

std::string RunConfig::get_string_or(const std::string& key,
                                     const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}

double RunConfig::get_double_or(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

int RunConfig::get_int_or(const std::string& key, int fallback) const {
  return has(key) ? get_int(key) : fallback;
}

bool RunConfig::get_bool_or(const std::string& key, bool fallback) const {
  return has(key) ? get_bool(key) : fallback;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (!valid_key(key)) throw std::invalid_argument("bad config key `" + key + "`");
  entries_[key] = value;
}

void RunConfig::require_known(const std::vector<std::string>& allowed) const {
  for (const auto& [key, value] : entries_) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw std::invalid_argument("unknown config key `" + key + "`");
  }
}

}  // namespace curvebody
