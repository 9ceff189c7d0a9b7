#include "apsp/io.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "apsp/errors.hpp"

namespace apsp {

namespace {

constexpr int kMaxVertexCount = 1 << 20;

struct Token {
  std::string text;
  std::size_t line;
  std::size_t col;
};

// Whitespace-separated tokens with 1-based line/column positions.
class Tokenizer {
 public:
  explicit Tokenizer(std::istream& in) : in_(in) {}

  std::optional<Token> next() {
    for (;;) {
      while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
      if (pos_ >= line_.size()) {
        if (!std::getline(in_, line_)) return std::nullopt;
        ++line_no_;
        pos_ = 0;
        continue;
      }
      const std::size_t start = pos_;
      while (pos_ < line_.size() && !is_space(line_[pos_])) ++pos_;
      return Token{line_.substr(start, pos_ - start), line_no_, start + 1};
    }
  }

  std::size_t line() const { return line_no_ == 0 ? 1 : line_no_; }
  std::size_t col() const { return pos_ + 1; }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
  }

  std::istream& in_;
  std::string line_;
  std::size_t line_no_ = 0;
  std::size_t pos_ = 0;
};

std::int64_t parse_int(const Token& t, const char* what) {
  std::int64_t value = 0;
  const char* begin = t.text.data();
  const char* end = begin + t.text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(std::string("malformed ") + what + " '" + t.text + "'", t.line, t.col);
  return value;
}

void check_weight_bound(std::int64_t w, const Token& t) {
  if (w > Weight::kMaxFiniteMagnitude || w < -Weight::kMaxFiniteMagnitude)
    throw ParseError("weight " + t.text + " exceeds |w| <= 2^40", t.line, t.col);
}

}  // namespace

DistanceMatrix read_matrix(std::istream& in, InfinityMode mode) {
  Tokenizer tok(in);

  const auto header = tok.next();
  if (!header) throw ParseError("missing vertex count", tok.line(), tok.col());
  const std::int64_t n64 = parse_int(*header, "vertex count");
  if (n64 < 1 || n64 > kMaxVertexCount)
    throw ParseError("vertex count out of range", header->line, header->col);
  const int n = static_cast<int>(n64);

  DistanceMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto t = tok.next();
      if (!t)
        throw ParseError("expected " + std::to_string(static_cast<std::int64_t>(n) * n) +
                             " cells, input ended early",
                         tok.line(), tok.col());
      Weight cell = Weight::finite(0);
      if (t->text == "INF") {
        cell = Weight::infinity();
      } else {
        const std::int64_t v = parse_int(*t, "cell");
        check_weight_bound(v, *t);
        cell = (mode.legacy_sentinel_enabled && v == mode.sentinel)
                   ? Weight::infinity()
                   : Weight::finite(v);
      }
      if (i == j) {
        if (!mode.legacy_sentinel_enabled && cell != Weight::finite(0))
          throw ParseError("nonzero diagonal (self-loop weight) at vertex " +
                               std::to_string(i + 1),
                           t->line, t->col);
        // Diagonal is zero by definition; legacy files may carry anything.
        continue;
      }
      m(i, j) = cell;
    }
  }

  if (const auto extra = tok.next())
    throw ParseError("trailing content '" + extra->text + "'", extra->line, extra->col);
  return m;
}

void write_matrix(const DistanceMatrix& m, std::ostream& out) {
  const int n = m.size();
  out << n << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j > 0) out << ' ';
      const Weight w = m(i, j);
      if (w.is_infinite())
        out << 'X';
      else
        out << w.value();
    }
    out << '\n';
  }
  if (!out) throw Error("matrix write failed");
}

EdgeListGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  int n = 0;
  std::int64_t m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    // Tokenize one line, keeping column positions.
    std::vector<Token> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
      if (pos >= line.size()) break;
      const std::size_t start = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
      fields.push_back({line.substr(start, pos - start), line_no, start + 1});
    }
    if (fields.empty() || fields[0].text == "c") continue;

    if (fields[0].text == "p") {
      if (have_header) throw ParseError("duplicate header line", line_no, fields[0].col);
      if (fields.size() != 4 || fields[1].text != "sp")
        throw ParseError("expected header 'p sp <n> <m>'", line_no, fields[0].col);
      const std::int64_t n64 = parse_int(fields[2], "vertex count");
      if (n64 < 1 || n64 > kMaxVertexCount)
        throw ParseError("vertex count out of range", fields[2].line, fields[2].col);
      n = static_cast<int>(n64);
      m = parse_int(fields[3], "edge count");
      if (m < 0) throw ParseError("negative edge count", fields[3].line, fields[3].col);
      have_header = true;
      continue;
    }

    if (fields[0].text == "a") {
      if (!have_header) throw ParseError("edge before header line", line_no, fields[0].col);
      if (fields.size() != 4)
        throw ParseError("expected edge 'a <src> <dst> <w>'", line_no, fields[0].col);
      const std::int64_t src = parse_int(fields[1], "vertex id");
      const std::int64_t dst = parse_int(fields[2], "vertex id");
      const std::int64_t w = parse_int(fields[3], "weight");
      if (src < 1 || src > n) throw ParseError("vertex id out of range", fields[1].line, fields[1].col);
      if (dst < 1 || dst > n) throw ParseError("vertex id out of range", fields[2].line, fields[2].col);
      if (src == dst) throw ParseError("self loop", fields[1].line, fields[1].col);
      check_weight_bound(w, fields[3]);
      edges.push_back({static_cast<int>(src - 1), static_cast<int>(dst - 1), w});
      continue;
    }

    throw ParseError("unknown line type '" + fields[0].text + "'", line_no, fields[0].col);
  }

  if (!have_header) throw ParseError("missing header line", line_no == 0 ? 1 : line_no, 1);
  if (static_cast<std::int64_t>(edges.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     line_no == 0 ? 1 : line_no, 1);
  return EdgeListGraph(n, std::move(edges));  // dedup/self-loop validation
}

void write_edge_list(const EdgeListGraph& g, std::ostream& out, std::string_view comment) {
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p sp " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges())
    out << "a " << e.src + 1 << ' ' << e.dst + 1 << ' ' << e.weight << '\n';
  if (!out) throw Error("edge list write failed");
}

}  // namespace apsp
