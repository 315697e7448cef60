#include "poset/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace poset {
namespace {

std::string trim(const std::string& s) {
  std::size_t lo = s.find_first_not_of(" \t\r");
  if (lo == std::string::npos) return "";
  std::size_t hi = s.find_last_not_of(" \t\r");
  return s.substr(lo, hi - lo + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string token;
  while (is >> token) out.push_back(token);
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error(errc::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

void check_label_token(std::size_t line_no, const std::string& label) {
  if (label.find(':') != std::string::npos)
    fail(line_no, "label '" + label + "' contains ':'");
}

// Significant lines of a document: (line number, trimmed text), comments and
// blanks dropped.
std::vector<std::pair<std::size_t, std::string>> significant_lines(const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream is(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    out.emplace_back(line_no, std::move(line));
  }
  return out;
}

std::string quote_dot(const std::string& label) {
  std::string out = "\"";
  for (char ch : label) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += "\"";
  return out;
}

}  // namespace

Poset parse_poset(const std::string& text, bool strict_covers) {
  const auto lines = significant_lines(text);
  if (lines.empty()) fail(1, "missing 'poset v1' header");
  if (lines[0].second != "poset v1")
    fail(lines[0].first, "expected 'poset v1' header, got '" + lines[0].second + "'");

  std::vector<std::string> labels;
  bool have_elements = false;
  std::vector<std::pair<std::string, std::string>> rels;
  std::vector<std::size_t> rel_lines;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line_no, line] = lines[i];
    auto tokens = split_ws(line);
    if (tokens[0] == "elements:") {
      if (have_elements) fail(line_no, "duplicate 'elements:' line");
      have_elements = true;
      if (tokens.size() < 2) fail(line_no, "'elements:' needs at least one label");
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        check_label_token(line_no, tokens[t]);
        if (std::find(labels.begin(), labels.end(), tokens[t]) != labels.end())
          fail(line_no, "duplicate label '" + tokens[t] + "'");
        labels.push_back(tokens[t]);
      }
    } else if (tokens[0] == "rel:") {
      if (!have_elements) fail(line_no, "'rel:' before 'elements:'");
      if (tokens.size() != 3) fail(line_no, "'rel:' needs exactly two labels");
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        check_label_token(line_no, tokens[t]);
        if (std::find(labels.begin(), labels.end(), tokens[t]) == labels.end())
          fail(line_no, "unknown label '" + tokens[t] + "'");
      }
      rels.emplace_back(tokens[1], tokens[2]);
      rel_lines.push_back(line_no);
    } else {
      fail(line_no, "expected 'elements:' or 'rel:', got '" + tokens[0] + "'");
    }
  }
  if (!have_elements) fail(lines[0].first, "missing 'elements:' line");

  Poset p = [&] {
    try {
      return Poset::build(labels, rels);
    } catch (const Error& e) {
      throw Error(errc::parse_error, e.what());
    }
  }();

  if (strict_covers) {
    for (std::size_t i = 0; i < rels.size(); ++i) {
      NodeId a = p.node_or_throw(rels[i].first);
      NodeId b = p.node_or_throw(rels[i].second);
      if (!p.covers(a, b))
        fail(rel_lines[i], "'rel: " + rels[i].first + " " + rels[i].second +
                               "' is not a cover pair");
    }
  }
  return p;
}

std::vector<std::pair<std::string, std::string>> parse_map(const std::string& text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) fail(1, "missing 'map v1' header");
  if (lines[0].second != "map v1")
    fail(lines[0].first, "expected 'map v1' header, got '" + lines[0].second + "'");

  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line_no, line] = lines[i];
    auto tokens = split_ws(line);
    if (tokens[0] != "pair:") fail(line_no, "expected 'pair:', got '" + tokens[0] + "'");
    if (tokens.size() != 3) fail(line_no, "'pair:' needs exactly two labels");
    check_label_token(line_no, tokens[1]);
    check_label_token(line_no, tokens[2]);
    for (const auto& pr : pairs)
      if (pr.first == tokens[1])
        fail(line_no, "domain label '" + tokens[1] + "' assigned twice");
    pairs.emplace_back(tokens[1], tokens[2]);
  }
  return pairs;
}

std::string emit_poset(const Poset& p) {
  std::ostringstream os;
  os << "poset v1\n";
  os << "elements:";
  for (const std::string& label : p.labels()) os << " " << label;
  os << "\n";

  std::vector<std::pair<std::string, std::string>> edges;
  for (NodeId a : p.nodes())
    for (NodeId b : p.nodes())
      if (p.covers(a, b)) edges.emplace_back(p.label(a), p.label(b));
  std::sort(edges.begin(), edges.end());
  for (const auto& [lo, hi] : edges) os << "rel: " << lo << " " << hi << "\n";
  return os.str();
}

std::string emit_map(const PosetMap& f) {
  std::ostringstream os;
  os << "map v1\n";
  for (NodeId v : f.dom.sort_by_label(f.dom.nodes()))
    os << "pair: " << f.dom.label(v) << " " << f.cod.label(f.assign[v.value]) << "\n";
  return os.str();
}

std::string render_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph poset {\n";
  os << "  rankdir=BT;\n";
  for (NodeId v : p.sort_by_label(p.nodes())) os << "  " << quote_dot(p.label(v)) << ";\n";

  for (std::size_t h = 0; h <= p.dim(); ++h) {
    std::vector<NodeId> rank;
    for (NodeId v : p.sort_by_label(p.nodes()))
      if (p.height(v) == h) rank.push_back(v);
    if (rank.empty()) continue;
    os << "  { rank=same;";
    for (NodeId v : rank) os << " " << quote_dot(p.label(v)) << ";";
    os << " }\n";
  }

  std::vector<std::pair<std::string, std::string>> edges;
  for (NodeId a : p.nodes())
    for (NodeId b : p.nodes())
      if (p.covers(a, b)) edges.emplace_back(p.label(a), p.label(b));
  std::sort(edges.begin(), edges.end());
  for (const auto& [lo, hi] : edges)
    os << "  " << quote_dot(lo) << " -> " << quote_dot(hi) << ";\n";
  os << "}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace poset
