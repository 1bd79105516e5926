#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// UTF-8 decoding plus the character classes and case mapping the cleaning
// pipeline needs. Only ASCII and the Cyrillic block get real case handling;
// everything else passes through unchanged.

namespace feedback::text {

// Decodes one code point starting at byte offset `i`; advances `i`.
// Throws DataError naming the byte offset on malformed input.
char32_t decode_utf8(std::string_view s, size_t& i);

void append_utf8(std::string& out, char32_t cp);

// Full decode with validation (same error contract as decode_utf8).
std::vector<char32_t> decode_utf8(std::string_view s);

// Validation only; returns the byte offset of the first invalid byte or
// npos if the string is valid UTF-8.
size_t find_invalid_utf8(std::string_view s);

bool is_cyrillic_letter(char32_t cp);  // U+0400..U+04FF
bool is_latin_letter(char32_t cp);     // ASCII letters + Latin-1 letters
bool is_space(char32_t cp);

// ASCII A-Z, Cyrillic U+0400..U+042F, and the U+0460..U+04FF pairs
// (covers Mongolian Cyrillic's Өө and Үү).
char32_t to_lower(char32_t cp);

}  // namespace feedback::text
