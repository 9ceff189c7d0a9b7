#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace apsp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid graph/matrix/config data (duplicate edges, self loops, bad bounds).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed input text; positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A negative-weight edge where non-negative weights are required.
// Vertex ids are stored 0-based; the message renders them 1-based.
class NegativeEdgeError : public Error {
 public:
  NegativeEdgeError(int src, int dst, std::int64_t weight)
      : Error("negative edge " + std::to_string(src + 1) + " -> " +
              std::to_string(dst + 1) + " (w=" + std::to_string(weight) + ")"),
        src_(src),
        dst_(dst),
        weight_(weight) {}

  int src() const { return src_; }
  int dst() const { return dst_; }
  std::int64_t weight() const { return weight_; }

 private:
  int src_;
  int dst_;
  std::int64_t weight_;
};

// A negative-weight cycle; carries one on-cycle vertex as witness (0-based).
class NegativeCycleError : public Error {
 public:
  explicit NegativeCycleError(int vertex)
      : Error("negative cycle through vertex " + std::to_string(vertex + 1)),
        vertex_(vertex) {}

  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

}  // namespace apsp
