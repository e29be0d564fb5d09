#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lpds::uni {

// Small, self-contained Unicode support for the cleaning pipeline. Covers
// the Latin, Greek and Cyrillic ranges plus common CJK/Hangul letter
// blocks; codepoints outside the table keep their identity under
// lowercasing and are not classified as letters. The tables are frozen so
// cleaning output is stable across platforms and library versions.

bool valid_utf8(std::string_view bytes);

// Throws std::invalid_argument on malformed input.
std::vector<char32_t> decode_utf8(std::string_view bytes);
std::string encode_utf8(const std::vector<char32_t>& cps);
void append_utf8(std::string& out, char32_t cp);

bool is_letter(char32_t cp);
bool is_ascii_digit(char32_t cp);
bool is_space(char32_t cp);

// The cleaning punctuation set: . , ; : ! ? ( ) ' " - and the em dash,
// en dash and horizontal ellipsis.
bool is_cleanable_punct(char32_t cp);

char32_t to_lower(char32_t cp);

std::string lowercase_utf8(std::string_view bytes);

}  // namespace lpds::uni
