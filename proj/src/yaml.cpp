#include "lpds/yaml.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>

namespace lpds::yaml {

namespace {

struct Line {
  int indent = 0;
  std::string content;  // comment-stripped, trailing ws trimmed
  int number = 0;       // 1-based source line
};

bool key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string strip_comment(const std::string& s) {
  bool in_single = false, in_double = false;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (in_double) {
      if (c == '\\') { ++i; continue; }
      if (c == '"') in_double = false;
    } else if (in_single) {
      if (c == '\'') in_single = false;
    } else if (c == '"') {
      in_double = true;
    } else if (c == '\'') {
      in_single = true;
    } else if (c == '#' && (i == 0 || s[i - 1] == ' ' || s[i - 1] == '\t')) {
      return s.substr(0, i);
    }
  }
  return s;
}

std::string rtrim(std::string s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
  return s;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  size_t pos = 0;
  int number = 0;
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string raw(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                  : nl - pos));
    ++number;
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

    int indent = 0;
    size_t i = 0;
    while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) {
      if (raw[i] == '\t') {
        throw YamlError(YamlErrorKind::TabIndentation, number, static_cast<int>(i + 1),
                        "tab character in indentation; use spaces");
      }
      ++indent;
      ++i;
    }
    std::string content = rtrim(strip_comment(raw.substr(i)));
    if (content.empty()) continue;
    out.push_back(Line{indent, std::move(content), number});
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Line> lines) : lines_(std::move(lines)) {}

  Node parse_document() {
    if (lines_.empty()) {
      Node n;
      n.kind = Node::Kind::Map;
      return n;
    }
    if (lines_.front().indent != 0) {
      throw YamlError(YamlErrorKind::Syntax, lines_.front().number, 1,
                      "top-level content must not be indented");
    }
    Node root = parse_block(0);
    if (pos_ < lines_.size()) {
      throw YamlError(YamlErrorKind::Syntax, lines_[pos_].number, 1, "unexpected indentation");
    }
    return root;
  }

 private:
  Node parse_block(int indent) {
    const Line& first = lines_[pos_];
    if (first.content[0] == '-' &&
        (first.content.size() == 1 || first.content[1] == ' ')) {
      return parse_seq(indent);
    }
    return parse_map(indent);
  }

  Node parse_map(int indent) {
    Node node;
    node.kind = Node::Kind::Map;
    node.line = lines_[pos_].number;
    while (pos_ < lines_.size() && lines_[pos_].indent == indent) {
      const Line& line = lines_[pos_];
      if (line.content[0] == '-') {
        throw YamlError(YamlErrorKind::Syntax, line.number, indent + 1,
                        "sequence item where a map entry was expected");
      }
      auto [key, rest] = split_key(line);
      for (const auto& [k, v] : node.entries) {
        if (k == key) {
          throw YamlError(YamlErrorKind::Syntax, line.number, indent + 1,
                          "duplicate key '" + key + "'");
        }
      }
      ++pos_;
      Node value;
      if (!rest.empty()) {
        value = parse_scalar(rest, line.number);
      } else if (pos_ < lines_.size() && lines_[pos_].indent > indent) {
        expect_child_indent(indent);
        value = parse_block(indent + 2);
      } else {
        value.kind = Node::Kind::Scalar;
        value.scalar.clear();
        value.line = line.number;
      }
      node.entries.emplace_back(std::move(key), std::move(value));
    }
    if (pos_ < lines_.size() && lines_[pos_].indent > indent) {
      throw YamlError(YamlErrorKind::Syntax, lines_[pos_].number, lines_[pos_].indent + 1,
                      "unexpected indentation");
    }
    return node;
  }

  Node parse_seq(int indent) {
    Node node;
    node.kind = Node::Kind::Seq;
    node.line = lines_[pos_].number;
    while (pos_ < lines_.size() && lines_[pos_].indent == indent &&
           lines_[pos_].content[0] == '-') {
      const Line& line = lines_[pos_];
      if (line.content.size() < 2 || line.content[1] != ' ') {
        throw YamlError(YamlErrorKind::Syntax, line.number, indent + 1,
                        "sequence items use '- <value>'");
      }
      std::string rest = line.content.substr(2);
      size_t lead = rest.find_first_not_of(' ');
      if (lead == std::string::npos) {
        throw YamlError(YamlErrorKind::Syntax, line.number, indent + 1, "empty sequence item");
      }
      rest = rest.substr(lead);

      if (looks_like_map_entry(rest)) {
        // Inline first entry of a map item; the rest of the map continues
        // two columns past the dash.
        Line synthetic{indent + 2, rest, line.number};
        ++pos_;
        lines_.insert(lines_.begin() + static_cast<long>(pos_), synthetic);
        node.items.push_back(parse_map(indent + 2));
      } else {
        ++pos_;
        node.items.push_back(parse_scalar(rest, line.number));
      }
    }
    if (pos_ < lines_.size() && lines_[pos_].indent > indent) {
      throw YamlError(YamlErrorKind::Syntax, lines_[pos_].number, lines_[pos_].indent + 1,
                      "unexpected indentation");
    }
    return node;
  }

  void expect_child_indent(int indent) {
    const Line& line = lines_[pos_];
    if (line.indent != indent + 2) {
      throw YamlError(YamlErrorKind::Syntax, line.number, line.indent + 1,
                      "nested blocks are indented by exactly 2 spaces");
    }
  }

  static bool looks_like_map_entry(const std::string& s) {
    if (s.empty() || !key_char(s[0])) return false;
    size_t i = 0;
    while (i < s.size() && key_char(s[i])) ++i;
    if (i >= s.size() || s[i] != ':') return false;
    return i + 1 == s.size() || s[i + 1] == ' ';
  }

  std::pair<std::string, std::string> split_key(const Line& line) {
    const std::string& s = line.content;
    size_t i = 0;
    while (i < s.size() && key_char(s[i])) ++i;
    if (i == 0 || i >= s.size() || s[i] != ':') {
      throw YamlError(YamlErrorKind::Syntax, line.number, line.indent + static_cast<int>(i) + 1,
                      "expected 'key: value'");
    }
    if (i + 1 < s.size() && s[i + 1] != ' ') {
      throw YamlError(YamlErrorKind::Syntax, line.number, line.indent + static_cast<int>(i) + 2,
                      "missing space after ':'");
    }
    std::string key = s.substr(0, i);
    std::string rest = (i + 1 < s.size()) ? s.substr(i + 2) : std::string();
    size_t lead = rest.find_first_not_of(' ');
    rest = (lead == std::string::npos) ? std::string() : rest.substr(lead);
    return {std::move(key), std::move(rest)};
  }

  Node parse_scalar(const std::string& text, int number) {
    Node n;
    n.kind = Node::Kind::Scalar;
    n.line = number;
    if (text.front() == '"') {
      std::string out;
      size_t i = 1;
      for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '\\') {
          if (i + 1 >= text.size()) {
            throw YamlError(YamlErrorKind::Syntax, number, static_cast<int>(i + 1),
                            "dangling escape in string");
          }
          char e = text[++i];
          switch (e) {
            case 'n': out += '\n'; break;
            case 't': out += '\t'; break;
            case 'r': out += '\r'; break;
            case '\\': out += '\\'; break;
            case '"': out += '"'; break;
            case '\'': out += '\''; break;
            default:
              throw YamlError(YamlErrorKind::Syntax, number, static_cast<int>(i + 1),
                              std::string("unsupported escape \\") + e);
          }
          continue;
        }
        if (c == '"') break;
        out += c;
      }
      if (i >= text.size() || text[i] != '"' || i + 1 != text.size()) {
        throw YamlError(YamlErrorKind::Syntax, number, static_cast<int>(i + 1),
                        "unterminated or trailing content after string");
      }
      n.scalar = std::move(out);
      n.quoted = true;
      return n;
    }
    if (text.front() == '\'') {
      if (text.size() < 2 || text.back() != '\'' ||
          text.find('\'', 1) != text.size() - 1) {
        throw YamlError(YamlErrorKind::Syntax, number, 1,
                        "unterminated or trailing content after string");
      }
      n.scalar = text.substr(1, text.size() - 2);
      n.quoted = true;
      return n;
    }
    n.scalar = text;
    return n;
  }

  std::vector<Line> lines_;
  size_t pos_ = 0;
};

}  // namespace

const Node* Node::get(std::string_view key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::optional<bool> Node::as_bool() const {
  if (kind != Kind::Scalar || quoted) return std::nullopt;
  if (scalar == "true") return true;
  if (scalar == "false") return false;
  return std::nullopt;
}

std::optional<long long> Node::as_int() const {
  if (kind != Kind::Scalar || quoted || scalar.empty()) return std::nullopt;
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(scalar.c_str(), &end, 10);
  if (errno != 0 || end != scalar.c_str() + scalar.size()) return std::nullopt;
  return v;
}

std::optional<double> Node::as_double() const {
  if (kind != Kind::Scalar || quoted || scalar.empty()) return std::nullopt;
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(scalar.c_str(), &end);
  if (errno != 0 || end != scalar.c_str() + scalar.size()) return std::nullopt;
  return v;
}

Node parse(std::string_view text) { return Parser(split_lines(text)).parse_document(); }

}  // namespace lpds::yaml
