#include "lpds/unicode_lite.hpp"

#include <stdexcept>

namespace lpds::uni {

namespace {

struct Range {
  char32_t lo, hi;
};

// Letter ranges kept by the special-character filter.
constexpr Range kLetterRanges[] = {
    {0x0041, 0x005A}, {0x0061, 0x007A},  // ASCII
    {0x00C0, 0x00D6}, {0x00D8, 0x00F6}, {0x00F8, 0x024F},  // Latin-1 + Extended A/B
    {0x0250, 0x02AF},                                      // IPA extensions
    {0x0300, 0x036F},  // combining diacritics (kept: they belong to letters)
    {0x0370, 0x0373}, {0x0376, 0x0377}, {0x037B, 0x037D}, {0x0386, 0x0386},
    {0x0388, 0x03FF},                                      // Greek
    {0x0400, 0x052F},                                      // Cyrillic
    {0x0531, 0x0556}, {0x0561, 0x0587},                    // Armenian
    {0x05D0, 0x05EA},                                      // Hebrew
    {0x0621, 0x064A}, {0x0671, 0x06D3},                    // Arabic
    {0x0900, 0x097F},                                      // Devanagari
    {0x1E00, 0x1EFF},                                      // Latin Extended Additional
    {0x3041, 0x3096}, {0x30A1, 0x30FA},                    // Hiragana, Katakana
    {0x4E00, 0x9FFF},                                      // CJK unified
    {0xAC00, 0xD7A3},                                      // Hangul syllables
};

constexpr Range kSpaceRanges[] = {
    {0x0009, 0x000D}, {0x0020, 0x0020}, {0x0085, 0x0085}, {0x00A0, 0x00A0},
    {0x1680, 0x1680}, {0x2000, 0x200A}, {0x2028, 0x2029}, {0x202F, 0x202F},
    {0x205F, 0x205F}, {0x3000, 0x3000},
};

bool in_ranges(char32_t cp, const Range* ranges, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    if (cp >= ranges[i].lo && cp <= ranges[i].hi) return true;
  }
  return false;
}

}  // namespace

bool is_letter(char32_t cp) {
  return in_ranges(cp, kLetterRanges, sizeof(kLetterRanges) / sizeof(Range));
}

bool is_ascii_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

bool is_space(char32_t cp) {
  return in_ranges(cp, kSpaceRanges, sizeof(kSpaceRanges) / sizeof(Range));
}

bool is_cleanable_punct(char32_t cp) {
  switch (cp) {
    case '.': case ',': case ';': case ':': case '!': case '?':
    case '(': case ')': case '\'': case '"': case '-':
    case 0x2013:  // en dash
    case 0x2014:  // em dash
    case 0x2026:  // ellipsis
      return true;
    default:
      return false;
  }
}

char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;  // Latin-1
  if (cp == 0x0130) return 'i';  // dotted capital I
  if (cp >= 0x0100 && cp <= 0x0137) return (cp % 2 == 0) ? cp + 1 : cp;  // Latin Ext-A pairs
  if (cp >= 0x0139 && cp <= 0x0148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x014A && cp <= 0x0177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x0178) return 0x00FF;  // Y with diaeresis
  if (cp >= 0x0179 && cp <= 0x017E) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp == 0x017F) return 's';  // long s
  // Greek with tonos
  if (cp == 0x0386) return 0x03AC;
  if (cp == 0x0388) return 0x03AD;
  if (cp == 0x0389) return 0x03AE;
  if (cp == 0x038A) return 0x03AF;
  if (cp == 0x038C) return 0x03CC;
  if (cp == 0x038E) return 0x03CD;
  if (cp == 0x038F) return 0x03CE;
  if (cp >= 0x0391 && cp <= 0x03A1) return cp + 0x20;  // Greek
  if (cp >= 0x03A3 && cp <= 0x03AB) return cp + 0x20;
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;  // Cyrillic
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;
  if (cp >= 0x0531 && cp <= 0x0556) return cp + 0x30;  // Armenian
  if (cp >= 0x1E00 && cp <= 0x1E95) return (cp % 2 == 0) ? cp + 1 : cp;  // Latin Ext Additional
  if (cp == 0x1E9E) return 0x00DF;  // capital sharp s
  if (cp >= 0x1EA0 && cp <= 0x1EFF) return (cp % 2 == 0) ? cp + 1 : cp;
  return cp;
}

bool valid_utf8(std::string_view bytes) {
  size_t i = 0;
  const size_t n = bytes.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(bytes[i]);
    size_t len;
    char32_t cp;
    if (c < 0x80) { len = 1; cp = c; }
    else if ((c & 0xE0) == 0xC0) { len = 2; cp = c & 0x1F; }
    else if ((c & 0xF0) == 0xE0) { len = 3; cp = c & 0x0F; }
    else if ((c & 0xF8) == 0xF0) { len = 4; cp = c & 0x07; }
    else return false;
    if (i + len > n) return false;
    for (size_t k = 1; k < len; ++k) {
      unsigned char cc = static_cast<unsigned char>(bytes[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // overlongs, surrogates, out of range
    if (len == 2 && cp < 0x80) return false;
    if (len == 3 && cp < 0x800) return false;
    if (len == 4 && cp < 0x10000) return false;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += len;
  }
  return true;
}

std::vector<char32_t> decode_utf8(std::string_view bytes) {
  if (!valid_utf8(bytes)) throw std::invalid_argument("malformed UTF-8");
  std::vector<char32_t> out;
  out.reserve(bytes.size());
  size_t i = 0;
  while (i < bytes.size()) {
    unsigned char c = static_cast<unsigned char>(bytes[i]);
    size_t len;
    char32_t cp;
    if (c < 0x80) { len = 1; cp = c; }
    else if ((c & 0xE0) == 0xC0) { len = 2; cp = c & 0x1F; }
    else if ((c & 0xF0) == 0xE0) { len = 3; cp = c & 0x0F; }
    else { len = 4; cp = c & 0x07; }
    for (size_t k = 1; k < len; ++k) {
      cp = (cp << 6) | (static_cast<unsigned char>(bytes[i + k]) & 0x3F);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

std::string lowercase_utf8(std::string_view bytes) {
  auto cps = decode_utf8(bytes);
  for (auto& cp : cps) cp = to_lower(cp);
  return encode_utf8(cps);
}

}  // namespace lpds::uni
