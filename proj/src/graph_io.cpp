#include "hopfdg/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "hopfdg/error.hpp"

namespace hopfdg {
namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Token> split_words(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) {
      out.push_back({std::string(line.substr(start, i - start)),
                     offset + start + 1});
    }
  }
  return out;
}

}  // namespace

Digraph parse_graph(std::string_view text) {
  std::optional<LabelSet> vertices;
  std::vector<std::pair<Label, Label>> edges;
  std::set<std::pair<Label, Label>> seen_edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_words(line, 0);
    if (tokens.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    if (!vertices) {
      const std::string_view keyword = "vertices:";
      const auto first = line.find_first_not_of(" \t\r");
      if (line.substr(first, keyword.size()) != keyword) {
        throw ParseError(line_no, first + 1,
                         "expected 'vertices:' before any edge");
      }
      const auto labels =
          split_words(line.substr(first + keyword.size()), first + keyword.size());
      std::vector<Label> names;
      std::set<Label> unique;
      for (const auto& t : labels) {
        if (t.text.find("->") != std::string::npos) {
          throw ParseError(line_no, t.column, "'->' inside a vertex label");
        }
        if (!unique.insert(t.text).second) {
          throw ParseError(line_no, t.column,
                           "duplicate vertex '" + t.text + "'");
        }
        names.push_back(t.text);
      }
      vertices = LabelSet(std::move(names));
    } else {
      const auto arrow = line.find("->");
      if (arrow == std::string_view::npos) {
        throw ParseError(line_no, tokens.front().column,
                         "expected an edge 'u -> v'");
      }
      const auto left = split_words(line.substr(0, arrow), 0);
      const auto right = split_words(line.substr(arrow + 2), arrow + 2);
      if (left.size() != 1) {
        throw ParseError(line_no, left.empty() ? arrow + 1 : left[0].column,
                         "expected exactly one tail vertex");
      }
      if (right.size() != 1 || right[0].text.find("->") != std::string::npos) {
        throw ParseError(line_no, right.empty() ? arrow + 3 : right[0].column,
                         "expected exactly one head vertex");
      }
      for (const auto* t : {&left[0], &right[0]}) {
        if (!vertices->index_of(t->text)) {
          throw ParseError(line_no, t->column,
                           "unknown vertex '" + t->text + "'");
        }
      }
      if (left[0].text == right[0].text) {
        throw ParseError(line_no, left[0].column,
                         "self-loop at '" + left[0].text + "'");
      }
      if (!seen_edges.emplace(left[0].text, right[0].text).second) {
        throw ParseError(line_no, left[0].column,
                         "parallel edge " + left[0].text + " -> " +
                             right[0].text);
      }
      edges.emplace_back(left[0].text, right[0].text);
    }
    if (eol == text.size()) break;
  }
  if (!vertices) throw ParseError(line_no, 1, "missing 'vertices:' line");
  return Digraph(std::move(*vertices), edges);
}

Digraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string format_graph(const Digraph& g) {
  std::string out = "vertices:";
  for (const auto& v : g.vertices()) out += " " + v;
  out += "\n";
  for (const auto& [tail, head] : g.labeled_edges()) {
    out += tail + " -> " + head + "\n";
  }
  return out;
}

}  // namespace hopfdg
