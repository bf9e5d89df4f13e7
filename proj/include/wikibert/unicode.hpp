#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Minimal UTF-8 and character-class support for corpus processing.
// Tables cover the scripts this pipeline is normally run on (Latin incl.
// extended, Greek, Cyrillic, common RTL blocks, CJK); everything else
// falls through to conservative defaults.

namespace wikibert {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes one code point starting at s[i] and advances i past it.
// Malformed sequences decode to U+FFFD and advance a single byte.
inline char32_t decode_utf8(std::string_view s, size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return kReplacementChar;
  }
  if (i + len > s.size()) {
    ++i;
    return kReplacementChar;
  }
  for (int k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return kReplacementChar;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  // Reject overlong encodings and surrogates.
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
      (len == 4 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF) ||
      cp > 0x10FFFF) {
    ++i;
    return kReplacementChar;
  }
  i += len;
  return cp;
}

inline void append_utf8(std::string& out, char32_t cp) {
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

inline std::u32string to_u32(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) out.push_back(decode_utf8(s, i));
  return out;
}

inline std::string to_utf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size() * 2);
  for (char32_t cp : s) append_utf8(out, cp);
  return out;
}

inline std::string to_utf8(char32_t cp) {
  std::string out;
  append_utf8(out, cp);
  return out;
}

inline bool is_whitespace(char32_t c) {
  switch (c) {
    case 0x20:
    case 0x09:
    case 0x0A:
    case 0x0D:
    case 0xA0:
    case 0x1680:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return (c >= 0x2000 && c <= 0x200A) || c == 0x2028 || c == 0x2029;
  }
}

// Cc controls except tab/newline/CR, plus the usual Cf troublemakers
// (soft hyphen, zero-width and directional marks, BOM).
inline bool is_control(char32_t c) {
  if (c == 0x09 || c == 0x0A || c == 0x0D) return false;
  if (c < 0x20 || (c >= 0x7F && c < 0xA0)) return true;
  return c == 0xAD || (c >= 0x200B && c <= 0x200F) ||
         (c >= 0x202A && c <= 0x202E) || (c >= 0x2060 && c <= 0x2064) ||
         c == 0xFEFF;
}

// ASCII follows the BERT convention: every non-alphanumeric printable
// character counts as punctuation. Beyond ASCII, common P-category blocks.
inline bool is_punct(char32_t c) {
  if (c < 0x80) {
    return (c >= 33 && c <= 47) || (c >= 58 && c <= 64) ||
           (c >= 91 && c <= 96) || (c >= 123 && c <= 126);
  }
  switch (c) {
    case 0xA1:   // inverted exclamation
    case 0xA7:   // section sign
    case 0xAB:
    case 0xB6:
    case 0xB7:
    case 0xBB:
    case 0xBF:   // inverted question
    case 0x589:  // Armenian full stop
    case 0x5BE:
    case 0x60C:  // Arabic comma
    case 0x61B:
    case 0x61F:  // Arabic question mark
    case 0x6D4:  // Arabic full stop
    case 0x964:  // danda
    case 0x965:
    case 0x3030:
    case 0x303D:
    case 0x30FB:
      return true;
    default:
      break;
  }
  return (c >= 0x55A && c <= 0x55F) || (c >= 0x66A && c <= 0x66D) ||
         (c >= 0x2010 && c <= 0x2027) || (c >= 0x2030 && c <= 0x205E) ||
         (c >= 0x3001 && c <= 0x3003) || (c >= 0x3008 && c <= 0x3011) ||
         (c >= 0x3014 && c <= 0x301F) || (c >= 0xFE50 && c <= 0xFE6B) ||
         (c >= 0xFF01 && c <= 0xFF0F) || (c >= 0xFF1A && c <= 0xFF20) ||
         (c >= 0xFF3B && c <= 0xFF40) || (c >= 0xFF5B && c <= 0xFF65);
}

// CJK ideograph ranges (the blocks BERT splits per character).
inline bool is_cjk(char32_t c) {
  return (c >= 0x4E00 && c <= 0x9FFF) || (c >= 0x3400 && c <= 0x4DBF) ||
         (c >= 0x20000 && c <= 0x2A6DF) || (c >= 0x2A700 && c <= 0x2B73F) ||
         (c >= 0x2B740 && c <= 0x2B81F) || (c >= 0x2B820 && c <= 0x2CEAF) ||
         (c >= 0xF900 && c <= 0xFAFF) || (c >= 0x2F800 && c <= 0x2FA1F);
}

inline bool is_digit(char32_t c) {
  return (c >= '0' && c <= '9') || (c >= 0x660 && c <= 0x669) ||
         (c >= 0x6F0 && c <= 0x6F9) || (c >= 0x966 && c <= 0x96F) ||
         (c >= 0x9E6 && c <= 0x9EF) || (c >= 0xFF10 && c <= 0xFF19);
}

// Letter test, coarse by design: used for script-agnostic heuristics
// (alphabetic ratio, casing decisions), not for exact Unicode semantics.
inline bool is_alpha(char32_t c) {
  if (c < 0x80) return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  if (c == 0xD7 || c == 0xF7) return false;
  if (c >= 0xC0 && c <= 0x24F) return true;
  if (c >= 0x370 && c <= 0x1FFF)
    return !is_punct(c) && !is_digit(c) && !is_whitespace(c) && !is_control(c);
  if ((c >= 0x3040 && c <= 0x30FF) || (c >= 0x3130 && c <= 0x318F) ||
      (c >= 0xAC00 && c <= 0xD7A3) || (c >= 0x1100 && c <= 0x11FF))
    return true;
  return is_cjk(c);
}

namespace detail {

// Latin Extended-A pairing irregularities: which code points are uppercase.
inline bool latin_ext_a_upper(char32_t c) {
  if (c >= 0x100 && c <= 0x137) return (c % 2) == 0;
  if (c >= 0x139 && c <= 0x148) return (c % 2) == 1;
  if (c >= 0x14A && c <= 0x177) return (c % 2) == 0;
  if (c == 0x178) return true;
  if (c >= 0x179 && c <= 0x17E) return (c % 2) == 1;
  return false;
}

}  // namespace detail

inline bool is_upper(char32_t c) {
  if (c >= 'A' && c <= 'Z') return true;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return true;
  if (c >= 0x100 && c <= 0x17E) return detail::latin_ext_a_upper(c);
  if (c >= 0x391 && c <= 0x3A9 && c != 0x3A2) return true;
  if (c >= 0x400 && c <= 0x42F) return true;
  return false;
}

inline char32_t to_lower(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 0x20;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
  if (c >= 0x100 && c <= 0x17E && detail::latin_ext_a_upper(c)) {
    if (c == 0x130) return 'i';  // dotted capital I
    if (c == 0x178) return 0xFF;
    return c + 1;
  }
  if (c >= 0x391 && c <= 0x3A9 && c != 0x3A2) return c + 0x20;
  if (c >= 0x410 && c <= 0x42F) return c + 0x20;
  if (c >= 0x400 && c <= 0x40F) return c + 0x50;
  return c;
}

namespace detail {

// Base letters for precomposed Latin; '-' marks "no decomposition".
inline constexpr char kLatin1Base[] =
    "AAAAAA-CEEEEIIII-NOOOOO--UUUUY--"
    "aaaaaa-ceeeeiiii-nooooo--uuuuy-y";
inline constexpr char kLatinExtABase[] =
    "AaAaAaCcCcCcCcDd--EeEeEeEeEeGgGg"
    "GgGgHh--IiIiIiIiI---JjKk-LlLlLl-"
    "---NnNnNn---OoOoOo--RrRrRrSsSsSs"
    "SsTtTt--UuUuUuUuUuUuWwYyYZzZzZz-";

}  // namespace detail

inline bool is_combining_mark(char32_t c) {
  return (c >= 0x300 && c <= 0x36F) || (c >= 0x1AB0 && c <= 0x1AFF) ||
         (c >= 0x1DC0 && c <= 0x1DFF) || (c >= 0x20D0 && c <= 0x20FF) ||
         (c >= 0xFE20 && c <= 0xFE2F);
}

// Returns the base letter for a precomposed Latin character, or the input
// unchanged when there is nothing to strip. Combining marks are handled
// separately (dropped by callers).
inline char32_t strip_accent(char32_t c) {
  if (c >= 0xC0 && c <= 0xFF) {
    const char b = detail::kLatin1Base[c - 0xC0];
    return b == '-' ? c : static_cast<char32_t>(b);
  }
  if (c >= 0x100 && c <= 0x17F) {
    const char b = detail::kLatinExtABase[c - 0x100];
    return b == '-' ? c : static_cast<char32_t>(b);
  }
  return c;
}

inline std::string lowercase_utf8(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) append_utf8(out, to_lower(decode_utf8(s, i)));
  return out;
}

}  // namespace wikibert
