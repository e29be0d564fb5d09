#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lpds/diagnostics.hpp"

namespace lpds {

// One key-value filename component, e.g. part-01. Keys are lowercase
// tokens ([a-z][a-z0-9]*), values are alphanumeric tokens ([A-Za-z0-9]+);
// neither may contain hyphens or underscores.
struct Entity {
  std::string key;
  std::string value;

  friend bool operator==(const Entity&, const Entity&) = default;
};

bool is_valid_entity_key(std::string_view key);
bool is_valid_entity_value(std::string_view value);

// Known entity keys in their canonical filename order. part has rank 0;
// unknown keys have no rank and always sort after all known keys.
class EntityKeyRegistry {
 public:
  static const EntityKeyRegistry& instance();

  std::optional<int> rank(std::string_view key) const;
  bool known(std::string_view key) const { return rank(key).has_value(); }
  const std::vector<std::string>& keys() const { return keys_; }

  // Common content suffixes (transcript, recording, ...). Non-exhaustive
  // by design; names outside the list are flagged, never rejected.
  static bool known_suffix(std::string_view suffix);

 private:
  EntityKeyRegistry();
  std::vector<std::string> keys_;
};

// A parsed filename: ordered entities, optional suffix, extension.
struct LpdsName {
  std::vector<Entity> entities;
  std::optional<std::string> suffix;
  std::string extension;  // without the dot, never empty

  const Entity* find(std::string_view key) const;
  bool has(std::string_view key) const { return find(key) != nullptr; }

  friend bool operator==(const LpdsName&, const LpdsName&) = default;
};

enum class NameErrorKind {
  NotBareName,            // contains a path separator
  EmptyStem,              // nothing before the extension dot
  NoExtension,            // no dot, or nothing after the final dot
  EmptyToken,             // empty underscore-separated token
  EmptyEntityValue,       // "key-" with nothing after the hyphen
  HyphenInValue,          // a second hyphen inside an entity token
  UppercaseKey,           // entity key contains uppercase characters
  InvalidKey,             // entity key violates [a-z][a-z0-9]*
  InvalidValue,           // entity value or suffix violates [A-Za-z0-9]+
  DuplicateKey,            // two entities share a key
  HyphenFreeTokenNotLast,  // suffix-like token before the end
  NoEntities               // stem holds no key-value entity at all
};

std::string_view to_string(NameErrorKind kind);

struct NameError {
  NameErrorKind kind;
  std::string message;

  friend bool operator==(const NameError&, const NameError&) = default;
};

using ParseResult = std::variant<LpdsName, NameError>;

inline bool parse_ok(const ParseResult& r) { return std::holds_alternative<LpdsName>(r); }

// Splits the final dot off as extension, the stem on underscores, each
// hyphenated token at its first hyphen into an entity, and a trailing
// hyphen-free token into the suffix. Entity order is preserved as written.
ParseResult parse_name(std::string_view filename);

// Joins entities as key-value with underscores, appends _suffix and
// .extension. With canonical=true entities are emitted in registry rank
// order; unknown keys come after all known keys, preserving their relative
// input order.
std::string serialize_name(const LpdsName& name, bool canonical = false);

// Returns the name with entities in canonical order. Idempotent.
LpdsName canonicalize(LpdsName name);

// Validation profile: which entities are mandatory and which processing
// entities are admissible for a given file class.
enum class NameProfile { RawData, Derivative, Aggregation };

std::string_view to_string(NameProfile profile);

// Applies the naming rules for the given profile; all findings come back
// as diagnostics with an empty path (callers fill in the location).
std::vector<Diagnostic> validate_name(const LpdsName& name, NameProfile profile);

}  // namespace lpds
