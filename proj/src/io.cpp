#include "spix/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "spix/error.hpp"

namespace spix {

std::string_view to_string(GraphFormat f) noexcept {
  return f == GraphFormat::Gml ? "gml" : "edgelist";
}

GraphFormat format_for_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".gml" ? GraphFormat::Gml : GraphFormat::EdgeList;
}

namespace {

std::optional<double> to_double(std::string_view s) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<long long> to_integer(std::string_view s) {
  long long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string format_weight(double w) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

// Tracks labels, edges, and the line each pair was first seen on.
class GraphBuilder {
 public:
  NodeId node(const std::string& label) {
    auto [it, inserted] = ids_.try_emplace(label, static_cast<NodeId>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
  }

  void declare(const std::string& label, std::size_t line) {
    if (ids_.count(label) != 0) throw ParseError("duplicate node '" + label + "'", line);
    node(label);
  }

  void edge(NodeId u, NodeId v, double w, std::size_t line) {
    if (u == v) throw ParseError("self-loop on '" + labels_[u] + "'", line);
    if (!std::isfinite(w) || w <= 0.0) {
      throw ParseError("edge weight must be finite and > 0, got " + format_weight(w), line);
    }
    const auto key = std::minmax(u, v);
    auto [it, inserted] = seen_.try_emplace(key, line);
    if (!inserted) {
      throw ParseError("duplicate edge '" + labels_[u] + "' - '" + labels_[v] + "' (first on line " +
                           std::to_string(it->second) + ")",
                       line);
    }
    edges_.push_back({u, v, w});
  }

  WeightedGraph build() && {
    if (labels_.empty()) throw ParseError("graph has no nodes", 0);
    const std::size_t n = labels_.size();
    return WeightedGraph(n, std::move(edges_), std::move(labels_));
  }

 private:
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::map<std::pair<NodeId, NodeId>, std::size_t> seen_;
};

std::vector<std::string> split_edgelist_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::string tok;
    if (c == '"') {
      ++i;
      bool closed = false;
      while (i < line.size()) {
        if (line[i] == '\\' && i + 1 < line.size()) {
          tok += line[i + 1];
          i += 2;
        } else if (line[i] == '"') {
          ++i;
          closed = true;
          break;
        } else {
          tok += line[i++];
        }
      }
      if (!closed) throw ParseError("unterminated quoted label", line_no);
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') {
        tok += line[i++];
      }
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

struct Token {
  enum Kind { Open, Close, String, Word } kind;
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize_gml(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '[') {
      out.push_back({Token::Open, "[", line});
      ++i;
    } else if (c == ']') {
      out.push_back({Token::Close, "]", line});
      ++i;
    } else if (c == '"') {
      const std::size_t start_line = line;
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"') {
        if (text[j] == '\n') ++line;
        ++j;
      }
      if (j >= text.size()) throw ParseError("unterminated string", start_line);
      out.push_back({Token::String, std::string(text.substr(i + 1, j - i - 1)), start_line});
      i = j + 1;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '[' &&
             text[j] != ']' && text[j] != '"') {
        ++j;
      }
      out.push_back({Token::Word, std::string(text.substr(i, j - i)), line});
      i = j;
    }
  }
  return out;
}

class GmlReader {
 public:
  explicit GmlReader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }

  const Token& next() {
    if (done()) {
      throw ParseError("unexpected end of input", tokens_.empty() ? 0 : tokens_.back().line);
    }
    return tokens_[pos_++];
  }

  const Token& key() {
    const Token& t = next();
    if (t.kind != Token::Word || !std::isalpha(static_cast<unsigned char>(t.text.front()))) {
      throw ParseError("expected a key, got '" + t.text + "'", t.line);
    }
    return t;
  }

  void expect_open() {
    const Token& t = next();
    if (t.kind != Token::Open) throw ParseError("expected '[', got '" + t.text + "'", t.line);
  }

  // Consumes one value; lists are skipped whole.
  void skip_value() {
    const Token& t = next();
    if (t.kind == Token::Close) throw ParseError("unexpected ']'", t.line);
    if (t.kind != Token::Open) return;
    for (int depth = 1; depth > 0;) {
      const Token& u = next();
      if (u.kind == Token::Open) ++depth;
      if (u.kind == Token::Close) --depth;
    }
  }

  bool at_close() const { return !done() && peek().kind == Token::Close; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

struct GmlRecord {
  std::map<std::string, Token> scalars;
  std::size_t line = 0;
};

GmlRecord read_record(GmlReader& r, std::size_t line) {
  GmlRecord rec;
  rec.line = line;
  r.expect_open();
  while (!r.at_close()) {
    const Token k = r.key();
    if (!r.done() && r.peek().kind == Token::Open) {
      r.skip_value();
      continue;
    }
    const Token& v = r.next();
    if (v.kind == Token::Close) throw ParseError("key '" + k.text + "' has no value", k.line);
    if (!rec.scalars.try_emplace(k.text, v).second) {
      throw ParseError("repeated key '" + k.text + "'", k.line);
    }
  }
  r.next();
  return rec;
}

long long integer_field(const GmlRecord& rec, const std::string& name, const char* what) {
  auto it = rec.scalars.find(name);
  if (it == rec.scalars.end()) throw ParseError(std::string(what) + " without '" + name + "'", rec.line);
  const auto v = it->second.kind == Token::Word ? to_integer(it->second.text) : std::nullopt;
  if (!v) throw ParseError("'" + name + "' must be an integer, got '" + it->second.text + "'", it->second.line);
  return *v;
}

}  // namespace

WeightedGraph parse_edgelist(std::string_view text) {
  GraphBuilder b;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    start = end + 1;

    const auto tokens = split_edgelist_line(line, line_no);
    if (tokens.empty()) continue;
    if (tokens.size() > 3) throw ParseError("expected 'u v [w]', got " + std::to_string(tokens.size()) + " fields", line_no);
    if (tokens.size() == 1) {
      b.node(tokens[0]);
      continue;
    }
    double w = 1.0;
    if (tokens.size() == 3) {
      const auto parsed = to_double(tokens[2]);
      if (!parsed) throw ParseError("malformed weight '" + tokens[2] + "'", line_no);
      w = *parsed;
    }
    const NodeId u = b.node(tokens[0]);
    const NodeId v = b.node(tokens[1]);
    b.edge(u, v, w, line_no);
  }
  return std::move(b).build();
}

WeightedGraph parse_gml(std::string_view text) {
  GmlReader r(tokenize_gml(text));
  GraphBuilder b;
  bool found = false;
  std::unordered_map<long long, NodeId> by_gml_id;
  std::vector<GmlRecord> edges;

  while (!r.done()) {
    const Token k = r.key();
    if (k.text != "graph") {
      r.skip_value();
      continue;
    }
    if (found) throw ParseError("more than one graph block", k.line);
    found = true;
    r.expect_open();
    while (!r.at_close()) {
      const Token item = r.key();
      if (item.text == "node") {
        const GmlRecord rec = read_record(r, item.line);
        const long long id = integer_field(rec, "id", "node");
        auto label = rec.scalars.find("label");
        const std::string name = label == rec.scalars.end() ? std::to_string(id) : label->second.text;
        if (by_gml_id.count(id) != 0) throw ParseError("duplicate node id " + std::to_string(id), rec.line);
        b.declare(name, rec.line);
        by_gml_id.emplace(id, static_cast<NodeId>(by_gml_id.size()));
      } else if (item.text == "edge") {
        edges.push_back(read_record(r, item.line));
      } else if (item.text == "directed") {
        const Token& v = r.next();
        if (v.text != "0") throw ParseError("directed graphs are not supported", v.line);
      } else {
        r.skip_value();
      }
    }
    r.next();
  }
  if (!found) throw ParseError("no 'graph [ ... ]' block", 0);

  for (const auto& rec : edges) {
    const long long s = integer_field(rec, "source", "edge");
    const long long t = integer_field(rec, "target", "edge");
    auto su = by_gml_id.find(s);
    auto tv = by_gml_id.find(t);
    if (su == by_gml_id.end()) throw ParseError("edge source " + std::to_string(s) + " is not a node", rec.line);
    if (tv == by_gml_id.end()) throw ParseError("edge target " + std::to_string(t) + " is not a node", rec.line);
    double w = 1.0;
    if (auto it = rec.scalars.find("value"); it != rec.scalars.end()) {
      const auto parsed = it->second.kind == Token::Word ? to_double(it->second.text) : std::nullopt;
      if (!parsed) throw ParseError("malformed edge value '" + it->second.text + "'", it->second.line);
      w = *parsed;
    }
    b.edge(su->second, tv->second, w, rec.line);
  }
  return std::move(b).build();
}

namespace {

std::string quote_if_needed(const std::string& label) {
  const bool plain = !label.empty() && std::none_of(label.begin(), label.end(), [](unsigned char c) {
    return std::isspace(c) || c == '#' || c == '"' || c == '\\';
  });
  if (plain) return label;
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_edgelist(std::ostream& os, const WeightedGraph& g) {
  for (NodeId v = 0; v < g.node_count(); ++v) os << quote_if_needed(g.label(v)) << '\n';
  for (const auto& e : g.edges()) {
    os << quote_if_needed(g.label(e.u)) << ' ' << quote_if_needed(g.label(e.v)) << ' ' << format_weight(e.weight)
       << '\n';
  }
}

void write_gml(std::ostream& os, const WeightedGraph& g) {
  os << "graph\n[\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.label(v).find('"') != std::string::npos) {
      throw DomainError("GML cannot store a label containing '\"': " + g.label(v));
    }
    os << "  node\n  [\n    id " << v << "\n    label \"" << g.label(v) << "\"\n  ]\n";
  }
  for (const auto& e : g.edges()) {
    os << "  edge\n  [\n    source " << e.u << "\n    target " << e.v << "\n    value " << format_weight(e.weight)
       << "\n  ]\n";
  }
  os << "]\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

WeightedGraph load_graph(const std::filesystem::path& path, GraphFormat format) {
  const std::string text = read_file(path);
  try {
    return format == GraphFormat::Gml ? parse_gml(text) : parse_edgelist(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

WeightedGraph largest_component(const WeightedGraph& g) {
  if (g.empty()) throw DomainError("largest_component of an empty graph");
  const auto comps = connected_components(g);
  if (comps.size() == 1) return g;
  auto smallest_label = [&](const Subgraph& sg) {
    const std::string* best = &g.label(sg.nodes.front());
    for (NodeId v : sg.nodes) best = std::min(best, &g.label(v), [](auto* a, auto* b) { return *a < *b; });
    return *best;
  };
  std::size_t pick = 0;
  for (std::size_t i = 1; i < comps.size(); ++i) {
    if (comps[i].size() > comps[pick].size() ||
        (comps[i].size() == comps[pick].size() && smallest_label(comps[i]) < smallest_label(comps[pick]))) {
      pick = i;
    }
  }
  return to_graph(comps[pick]);
}

}  // namespace spix
