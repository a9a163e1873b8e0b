#include "wst/io.hpp"

#include <charconv>
#include <vector>

#include "wst/recognition.hpp"

namespace wst {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

// Whitespace-separated token scanner that tracks line/column for errors.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  std::string_view token(const char* what) {
    skip_space();
    if (pos_ == text_.size()) fail(std::string("expected ") + what + ", got end of input");
    tok_line_ = line_;
    tok_col_ = col_;
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) advance();
    return text_.substr(start, pos_ - start);
  }

  std::uint64_t number(const char* what, std::uint64_t max) {
    std::string_view tok = token(what);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError(tok_line_, tok_col_, std::string("expected ") + what +
                                                ", got '" + std::string(tok) + "'");
    if (value > max)
      throw ParseError(tok_line_, tok_col_,
                       std::string(what) + " out of range: " + std::string(tok));
    return value;
  }

  void expect_keyword(const char* kw) {
    std::string_view tok = token(kw);
    if (tok != kw)
      throw ParseError(tok_line_, tok_col_, std::string("expected '") + kw +
                                                "', got '" + std::string(tok) + "'");
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(line_, col_, message);
  }

  // Position of the most recently read token.
  int line() const { return tok_line_; }
  int column() const { return tok_col_; }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  int tok_line_ = 1;
  int tok_col_ = 1;
};

}  // namespace

Instance parse_instance(std::string_view text) {
  Scanner in(text);
  in.expect_keyword("p");
  in.expect_keyword("wst");
  int n = static_cast<int>(in.number("vertex count", kMaxVertices));
  int m = static_cast<int>(
      in.number("edge count", kMaxVertices * (kMaxVertices - 1) / 2));

  std::vector<Weight> weights(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    in.expect_keyword("w");
    int line = in.line(), col = in.column();
    int v = static_cast<int>(in.number("vertex id", static_cast<std::uint64_t>(n))) - 1;
    if (v < 0) throw ParseError(line, col, "vertex ids are 1-indexed");
    if (seen[static_cast<std::size_t>(v)])
      throw ParseError(line, col, "duplicate weight for vertex " + std::to_string(v + 1));
    seen[static_cast<std::size_t>(v)] = true;
    weights[static_cast<std::size_t>(v)] = in.number("weight", kMaxVertexWeight);
  }

  std::vector<std::pair<int, int>> edges;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < m; ++i) {
    in.expect_keyword("e");
    int line = in.line(), col = in.column();
    int u = static_cast<int>(in.number("vertex id", static_cast<std::uint64_t>(n))) - 1;
    int v = static_cast<int>(in.number("vertex id", static_cast<std::uint64_t>(n))) - 1;
    if (u < 0 || v < 0) throw ParseError(line, col, "vertex ids are 1-indexed");
    if (u == v)
      throw ParseError(line, col, "self-loop at vertex " + std::to_string(u + 1));
    if ((adj[static_cast<std::size_t>(u)] >> v) & 1u)
      throw ParseError(line, col, "duplicate edge " + std::to_string(u + 1) + " " +
                                      std::to_string(v + 1));
    adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }

  {
    in.expect_keyword("t");
    int k = static_cast<int>(in.number("terminal count", static_cast<std::uint64_t>(n)));
    VertexSet terminals;
    for (int i = 0; i < k; ++i) {
      int v = static_cast<int>(in.number("terminal id", static_cast<std::uint64_t>(n))) - 1;
      int line = in.line(), col = in.column();
      if (v < 0) throw ParseError(line, col, "vertex ids are 1-indexed");
      if (terminals.test(v))
        throw ParseError(line, col, "duplicate terminal " + std::to_string(v + 1));
      terminals.set(v);
    }
    if (!in.at_end()) in.fail("trailing input after terminal line");
    return Instance::build(n, edges, weights, terminals);
  }
}

std::string serialize_instance(const Instance& g) {
  std::string out = "p wst " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (int v = 0; v < g.n(); ++v)
    out += "w " + std::to_string(v + 1) + " " + std::to_string(g.weight(v)) + "\n";
  for (auto [u, v] : g.edges())
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  out += "t " + std::to_string(g.terminals().count());
  g.terminals().for_each([&](int v) { out += " " + std::to_string(v + 1); });
  out += "\n";
  return out;
}

std::string solve_report(const SolveResult& result, Problem problem) {
  std::string out = "problem ";
  out += problem == Problem::OCT ? "oct" : "fvs";
  out += "\nclass " + result.label.name();
  out += "\nweight " + std::to_string(result.solution.weight);
  out += "\nremoved";
  result.solution.removed.for_each([&](int v) { out += " " + std::to_string(v + 1); });
  out += "\n";
  return out;
}

std::string recognize_report(const Instance& g) {
  ClassLabel label = classify(g);
  std::string out = "class " + label.name() + "\n";
  if (label.kind == ClassLabel::Kind::Unsupported) {
    auto p4 = contains_induced(g, patterns::p4());
    out += "witness";
    if (p4)
      for (int v : *p4) out += " " + std::to_string(v + 1);
    out += "\n";
  }
  return out;
}

}  // namespace wst
