#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lpds::yaml {

// Restricted .yml subset, parsed natively: maps via `key: value`, nesting
// by 2-space indentation, sequences via `- `, `#` comments, scalar types
// string/int/float/bool. Tabs in indentation are rejected. Quoted scalars
// (single or double) are always strings; double quotes support the escapes
// \n \t \r \\ \" \'.

enum class YamlErrorKind { Syntax, TabIndentation };

class YamlError : public std::runtime_error {
 public:
  YamlError(YamlErrorKind kind, int line, int col, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                           ": " + what),
        kind_(kind), line_(line), col_(col) {}
  YamlErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  YamlErrorKind kind_;
  int line_, col_;
};

struct Node {
  enum class Kind { Scalar, Map, Seq };
  Kind kind = Kind::Scalar;
  std::string scalar;  // unescaped text for Kind::Scalar
  bool quoted = false; // scalar was quoted in the source (always a string)
  std::vector<std::pair<std::string, Node>> entries;  // Kind::Map, source order
  std::vector<Node> items;                            // Kind::Seq
  int line = 0;

  bool is_scalar() const { return kind == Kind::Scalar; }
  bool is_map() const { return kind == Kind::Map; }
  bool is_seq() const { return kind == Kind::Seq; }
  const Node* get(std::string_view key) const;

  // Typed accessors; nullopt when the scalar does not parse as the type.
  // Quoted scalars never convert to bool/int/float.
  std::optional<bool> as_bool() const;
  std::optional<long long> as_int() const;
  std::optional<double> as_double() const;
  const std::string& as_string() const { return scalar; }
};

Node parse(std::string_view text);

}  // namespace lpds::yaml
