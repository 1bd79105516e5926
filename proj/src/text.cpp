#include "feedback/text.hpp"

#include <string>

#include "feedback/common.hpp"

namespace feedback::text {

namespace {

// Returns false and sets err_off to the offending byte on malformed input.
bool try_decode(std::string_view s, size_t& i, char32_t& cp, size_t& err_off) {
  const auto b = [&](size_t k) { return static_cast<unsigned char>(s[k]); };
  const size_t start = i;
  unsigned char c0 = b(i);
  if (c0 < 0x80) {
    cp = c0;
    ++i;
    return true;
  }
  int len;
  if ((c0 & 0xE0) == 0xC0) {
    len = 2;
    cp = c0 & 0x1F;
  } else if ((c0 & 0xF0) == 0xE0) {
    len = 3;
    cp = c0 & 0x0F;
  } else if ((c0 & 0xF8) == 0xF0) {
    len = 4;
    cp = c0 & 0x07;
  } else {
    err_off = start;
    return false;
  }
  if (start + len > s.size()) {
    err_off = start;
    return false;
  }
  for (int k = 1; k < len; ++k) {
    unsigned char ck = b(start + k);
    if ((ck & 0xC0) != 0x80) {
      err_off = start + k;
      return false;
    }
    cp = (cp << 6) | (ck & 0x3F);
  }
  // reject overlong encodings and surrogates
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
      (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
      (cp >= 0xD800 && cp <= 0xDFFF)) {
    err_off = start;
    return false;
  }
  i = start + len;
  return true;
}

}  // namespace

char32_t decode_utf8(std::string_view s, size_t& i) {
  char32_t cp = 0;
  size_t err_off = 0;
  if (!try_decode(s, i, cp, err_off)) {
    throw DataError("invalid UTF-8 byte at offset " + std::to_string(err_off));
  }
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) out.push_back(decode_utf8(s, i));
  return out;
}

size_t find_invalid_utf8(std::string_view s) {
  size_t i = 0;
  char32_t cp = 0;
  size_t err_off = 0;
  while (i < s.size()) {
    if (!try_decode(s, i, cp, err_off)) return err_off;
  }
  return std::string_view::npos;
}

bool is_cyrillic_letter(char32_t cp) { return cp >= 0x0400 && cp <= 0x04FF; }

bool is_latin_letter(char32_t cp) {
  if ((cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z')) return true;
  // Latin-1 letters, excluding multiplication/division signs
  if (cp >= 0xC0 && cp <= 0xFF && cp != 0xD7 && cp != 0xF7) return true;
  return false;
}

bool is_space(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
         cp == '\v' || cp == 0xA0 /* nbsp */;
}

char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;  // А..Я
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;  // Ѐ..Џ (incl. Ё)
  // Historic/extended Cyrillic pairs: even=upper, odd=lower. U+04C0 is the
  // lone exception and has no +1 partner, so leave it alone.
  if (cp >= 0x0460 && cp <= 0x04FF && (cp & 1) == 0 && cp != 0x04C0)
    return cp + 1;
  return cp;
}

}  // namespace feedback::text
