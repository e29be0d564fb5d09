#include "lpds/name_grammar.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace lpds {

namespace {

bool is_lower_alnum(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); }
bool is_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}
bool has_upper(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
}

NameError err(NameErrorKind kind, std::string message) { return NameError{kind, std::move(message)}; }

}  // namespace

bool is_valid_entity_key(std::string_view key) {
  if (key.empty() || key.front() < 'a' || key.front() > 'z') return false;
  return std::all_of(key.begin(), key.end(), is_lower_alnum);
}

bool is_valid_entity_value(std::string_view value) {
  return !value.empty() && std::all_of(value.begin(), value.end(), is_alnum);
}

EntityKeyRegistry::EntityKeyRegistry()
    : keys_{"part", "ses",   "task",  "cat",   "acq",   "run",
            "proc", "metric", "model", "group", "param", "description"} {}

const EntityKeyRegistry& EntityKeyRegistry::instance() {
  static const EntityKeyRegistry registry;
  return registry;
}

std::optional<int> EntityKeyRegistry::rank(std::string_view key) const {
  for (size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i] == key) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool EntityKeyRegistry::known_suffix(std::string_view suffix) {
  static const std::array<std::string_view, 9> table = {
      "transcript", "text",   "recording", "audio",      "table",
      "embeddings", "logits", "features",  "annotations"};
  return std::find(table.begin(), table.end(), suffix) != table.end();
}

const Entity* LpdsName::find(std::string_view key) const {
  for (const auto& e : entities) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

std::string_view to_string(NameErrorKind kind) {
  switch (kind) {
    case NameErrorKind::NotBareName: return "NotBareName";
    case NameErrorKind::EmptyStem: return "EmptyStem";
    case NameErrorKind::NoExtension: return "NoExtension";
    case NameErrorKind::EmptyToken: return "EmptyToken";
    case NameErrorKind::EmptyEntityValue: return "EmptyEntityValue";
    case NameErrorKind::HyphenInValue: return "HyphenInValue";
    case NameErrorKind::UppercaseKey: return "UppercaseKey";
    case NameErrorKind::InvalidKey: return "InvalidKey";
    case NameErrorKind::InvalidValue: return "InvalidValue";
    case NameErrorKind::DuplicateKey: return "DuplicateKey";
    case NameErrorKind::HyphenFreeTokenNotLast: return "HyphenFreeTokenNotLast";
    case NameErrorKind::NoEntities: return "NoEntities";
  }
  return "NameError";
}

ParseResult parse_name(std::string_view filename) {
  if (filename.empty()) return err(NameErrorKind::EmptyStem, "empty filename");
  if (filename.find('/') != std::string_view::npos ||
      filename.find('\\') != std::string_view::npos) {
    return err(NameErrorKind::NotBareName, "filename contains a path separator");
  }

  const size_t dot = filename.rfind('.');
  if (dot == std::string_view::npos) {
    return err(NameErrorKind::NoExtension, "missing file extension");
  }
  std::string_view stem = filename.substr(0, dot);
  std::string_view extension = filename.substr(dot + 1);
  if (extension.empty()) {
    return err(NameErrorKind::NoExtension, "empty file extension");
  }
  if (stem.empty()) {
    return err(NameErrorKind::EmptyStem, "nothing before the extension");
  }

  LpdsName name;
  name.extension = std::string(extension);

  // Split the stem on underscores, keeping empty tokens so they can be
  // reported precisely.
  std::vector<std::string_view> tokens;
  size_t pos = 0;
  while (true) {
    size_t us = stem.find('_', pos);
    if (us == std::string_view::npos) {
      tokens.push_back(stem.substr(pos));
      break;
    }
    tokens.push_back(stem.substr(pos, us - pos));
    pos = us + 1;
  }

  std::unordered_set<std::string_view> seen;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const std::string_view tok = tokens[i];
    const bool last = (i + 1 == tokens.size());
    if (tok.empty()) {
      return err(NameErrorKind::EmptyToken, "empty token between underscores");
    }
    const size_t hy = tok.find('-');
    if (hy == std::string_view::npos) {
      if (!last) {
        return err(NameErrorKind::HyphenFreeTokenNotLast,
                   "token '" + std::string(tok) + "' has no key-value hyphen but is not the suffix");
      }
      if (!is_valid_entity_value(tok)) {
        return err(NameErrorKind::InvalidValue,
                   "suffix '" + std::string(tok) + "' is not alphanumeric");
      }
      name.suffix = std::string(tok);
      continue;
    }
    std::string_view key = tok.substr(0, hy);
    std::string_view value = tok.substr(hy + 1);
    if (has_upper(key)) {
      return err(NameErrorKind::UppercaseKey,
                 "entity key '" + std::string(key) + "' contains uppercase characters");
    }
    if (!is_valid_entity_key(key)) {
      return err(NameErrorKind::InvalidKey, "invalid entity key '" + std::string(key) + "'");
    }
    if (value.empty()) {
      return err(NameErrorKind::EmptyEntityValue, "entity '" + std::string(key) + "-' has no value");
    }
    if (value.find('-') != std::string_view::npos) {
      return err(NameErrorKind::HyphenInValue,
                 "entity '" + std::string(key) + "-" + std::string(value) +
                     "' contains a second hyphen");
    }
    if (!is_valid_entity_value(value)) {
      return err(NameErrorKind::InvalidValue,
                 "entity value '" + std::string(value) + "' is not alphanumeric");
    }
    if (!seen.insert(key).second) {
      return err(NameErrorKind::DuplicateKey, "duplicate entity key '" + std::string(key) + "'");
    }
    name.entities.push_back(Entity{std::string(key), std::string(value)});
  }

  if (name.entities.empty()) {
    return err(NameErrorKind::NoEntities, "filename contains no key-value entities");
  }
  return name;
}

namespace {

std::vector<size_t> canonical_order(const std::vector<Entity>& entities) {
  const auto& reg = EntityKeyRegistry::instance();
  std::vector<size_t> idx(entities.size());
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    int ra = reg.rank(entities[a].key).value_or(INT_MAX);
    int rb = reg.rank(entities[b].key).value_or(INT_MAX);
    if (ra != rb) return ra < rb;
    return a < b;  // unknown keys keep their relative input order
  });
  return idx;
}

}  // namespace

std::string serialize_name(const LpdsName& name, bool canonical) {
  std::string out;
  std::vector<size_t> order;
  if (canonical) {
    order = canonical_order(name.entities);
  } else {
    order.resize(name.entities.size());
    std::iota(order.begin(), order.end(), size_t{0});
  }
  for (size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += '_';
    const Entity& e = name.entities[order[i]];
    out += e.key;
    out += '-';
    out += e.value;
  }
  if (name.suffix) {
    if (!out.empty()) out += '_';
    out += *name.suffix;
  }
  out += '.';
  out += name.extension;
  return out;
}

LpdsName canonicalize(LpdsName name) {
  const auto order = canonical_order(name.entities);
  std::vector<Entity> sorted;
  sorted.reserve(order.size());
  for (size_t i : order) sorted.push_back(std::move(name.entities[i]));
  name.entities = std::move(sorted);
  return name;
}

std::string_view to_string(NameProfile profile) {
  switch (profile) {
    case NameProfile::RawData: return "raw-data";
    case NameProfile::Derivative: return "derivative";
    case NameProfile::Aggregation: return "aggregation";
  }
  return "raw-data";
}

std::vector<Diagnostic> validate_name(const LpdsName& name, NameProfile profile) {
  std::vector<Diagnostic> out;
  const auto& reg = EntityKeyRegistry::instance();
  const bool mandatory = profile != NameProfile::Aggregation;

  if (mandatory) {
    if (!name.has("part")) {
      out.push_back(make_diagnostic(codes::MandatoryEntityMissing, "",
                                    "mandatory entity 'part' is missing",
                                    "start the filename with part-<label>"));
    } else if (name.entities.front().key != "part") {
      out.push_back(make_diagnostic(codes::PartNotFirst, "",
                                    "the part entity must be the first entity",
                                    "move part-" + name.find("part")->value +
                                        " to the front of the filename"));
    }
    if (!name.has("task")) {
      out.push_back(make_diagnostic(codes::MandatoryEntityMissing, "",
                                    "mandatory entity 'task' is missing",
                                    "include task-<label> in the filename"));
    }
  }

  if (profile == NameProfile::RawData) {
    for (const char* key : {"proc", "metric", "model"}) {
      if (name.has(key)) {
        out.push_back(make_diagnostic(
            codes::ProcessingEntityInRaw, "",
            std::string("processing entity '") + key + "' in a raw data filename",
            "processing entities belong to derivatives"));
      }
    }
  }

  // Order check against the canonical entity order.
  {
    const auto order = canonical_order(name.entities);
    bool sorted = true;
    for (size_t i = 0; i < order.size(); ++i) {
      if (order[i] != i) {
        sorted = false;
        break;
      }
    }
    if (!sorted) {
      out.push_back(make_diagnostic(codes::EntityOrderDeviates, "",
                                    "entity order deviates from the standard entity order",
                                    "reorder entities: part first, then ses, task, cat, acq, ..."));
    }
  }

  for (const auto& e : name.entities) {
    if (!reg.known(e.key)) {
      out.push_back(make_diagnostic(codes::UnknownEntityKey, "",
                                    "unknown entity key '" + e.key + "'",
                                    "custom keys are allowed but not part of the core entity set"));
    }
  }

  if (!name.suffix) {
    out.push_back(make_diagnostic(codes::SuffixAbsent, "", "filename has no content suffix",
                                  "consider a suffix such as transcript, recording or text"));
  } else if (!EntityKeyRegistry::known_suffix(*name.suffix)) {
    out.push_back(make_diagnostic(codes::UnknownSuffix, "",
                                  "suffix '" + *name.suffix + "' is not a common content suffix",
                                  "common suffixes: transcript, text, recording, audio, table, "
                                  "embeddings, logits, features, annotations"));
  }

  return out;
}

}  // namespace lpds
