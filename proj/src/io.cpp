#include "afcount/io.hpp"

#include <sstream>
#include <unordered_map>

#include "afcount/errors.hpp"

namespace afc {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw parse_error("line " + std::to_string(line) + ": " + msg);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == '(' || c == ')' || c == ',' || c == '.' || isspace((unsigned char)c)) return false;
  return true;
}

}  // namespace

Framework parse_apx(const std::string& text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  std::vector<std::pair<int, int>> attacks;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    size_t cmt = raw.find('%');
    if (cmt != std::string::npos) raw.resize(cmt);
    std::string line = strip(raw);
    if (line.empty()) continue;
    if (line.back() != '.') fail(lineno, "missing terminating '.'");
    line.pop_back();
    line = strip(line);

    auto open = line.find('(');
    if (open == std::string::npos || line.back() != ')')
      fail(lineno, "expected arg(...) or att(...,...)");
    std::string head = strip(line.substr(0, open));
    std::string body = line.substr(open + 1, line.size() - open - 2);

    if (head == "arg") {
      std::string name = strip(body);
      if (!valid_name(name)) fail(lineno, "bad argument name '" + name + "'");
      if (index.count(name)) fail(lineno, "duplicate argument '" + name + "'");
      index[name] = int(names.size());
      names.push_back(name);
    } else if (head == "att") {
      auto comma = body.find(',');
      if (comma == std::string::npos) fail(lineno, "att needs two arguments");
      std::string a = strip(body.substr(0, comma));
      std::string b = strip(body.substr(comma + 1));
      if (!valid_name(a) || !valid_name(b)) fail(lineno, "bad attack endpoints");
      auto ia = index.find(a), ib = index.find(b);
      if (ia == index.end()) fail(lineno, "attack references undeclared argument '" + a + "'");
      if (ib == index.end()) fail(lineno, "attack references undeclared argument '" + b + "'");
      attacks.emplace_back(ia->second, ib->second);
    } else {
      fail(lineno, "unknown directive '" + head + "'");
    }
  }
  if (names.empty()) throw parse_error("no arguments declared");
  return Framework(std::move(names), std::move(attacks));
}

Framework parse_tgf(const std::string& text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  std::vector<std::pair<int, int>> attacks;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool in_edges = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty()) continue;
    if (line == "#") {
      if (in_edges) fail(lineno, "second '#' separator");
      in_edges = true;
      continue;
    }
    std::istringstream ss(line);
    if (!in_edges) {
      std::string name, extra;
      ss >> name;
      if (ss >> extra) fail(lineno, "node line must be a single token");
      if (!valid_name(name)) fail(lineno, "bad argument name '" + name + "'");
      if (index.count(name)) fail(lineno, "duplicate argument '" + name + "'");
      index[name] = int(names.size());
      names.push_back(name);
    } else {
      std::string a, b, extra;
      ss >> a >> b;
      if (b.empty()) fail(lineno, "edge line needs two tokens");
      if (ss >> extra) fail(lineno, "edge line must be two tokens");
      auto ia = index.find(a), ib = index.find(b);
      if (ia == index.end()) fail(lineno, "edge references unknown node '" + a + "'");
      if (ib == index.end()) fail(lineno, "edge references unknown node '" + b + "'");
      attacks.emplace_back(ia->second, ib->second);
    }
  }
  if (names.empty()) throw parse_error("no arguments declared");
  return Framework(std::move(names), std::move(attacks));
}

std::string to_apx(const Framework& f) {
  std::ostringstream os;
  for (const auto& n : f.names()) os << "arg(" << n << ").\n";
  for (auto [a, b] : f.attacks()) os << "att(" << f.name(a) << "," << f.name(b) << ").\n";
  return os.str();
}

}  // namespace afc
