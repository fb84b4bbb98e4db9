#ifndef MIFTAH_TEXT_HPP_
#define MIFTAH_TEXT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

// Small UTF-8 helpers shared by the lexicon and the segmenter. All
// document processing is byte-oriented UTF-8; these helpers only decode
// enough to recognize individual Arabic codepoints.

namespace miftah::text {

inline constexpr char32_t kTatweel = 0x0640;        // ـ
inline constexpr char32_t kAlef = 0x0627;           // ا
inline constexpr char32_t kAlefMadda = 0x0622;      // آ
inline constexpr char32_t kAlefHamzaAbove = 0x0623; // أ
inline constexpr char32_t kAlefHamzaBelow = 0x0625; // إ
inline constexpr char32_t kArabicComma = 0x060C;    // ،
inline constexpr char32_t kArabicSemicolon = 0x061B; // ؛
inline constexpr char32_t kArabicQuestion = 0x061F;  // ؟

// Decodes the codepoint starting at byte offset i. Returns {codepoint,
// byte length}. Malformed sequences decode as one byte so that bad
// input degrades instead of crashing.
inline std::pair<char32_t, int> decode_codepoint(std::string_view s,
                                                 std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  auto cont = [&](std::size_t k) {
    return k < s.size() && (static_cast<unsigned char>(s[k]) & 0xC0) == 0x80;
  };
  if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
    char32_t cp = (b0 & 0x1Fu) << 6 |
                  (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
    return {cp, 2};
  }
  if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
    char32_t cp = (b0 & 0x0Fu) << 12 |
                  (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6 |
                  (static_cast<unsigned char>(s[i + 2]) & 0x3Fu);
    return {cp, 3};
  }
  if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
    char32_t cp = (b0 & 0x07u) << 18 |
                  (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12 |
                  (static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6 |
                  (static_cast<unsigned char>(s[i + 3]) & 0x3Fu);
    return {cp, 4};
  }
  return {b0, 1};
}

inline void append_codepoint(std::string& out, char32_t cp) {
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

inline bool is_ascii_space(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
         cp == '\v';
}

// Lookup-side normalization for lexicon misses: alef variants fold to
// bare alef and tatweel is dropped. Entries themselves are never
// rewritten.
inline std::string fold_alef_strip_tatweel(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (std::size_t i = 0; i < word.size();) {
    auto [cp, len] = decode_codepoint(word, i);
    i += len;
    if (cp == kTatweel) continue;
    if (cp == kAlefMadda || cp == kAlefHamzaAbove || cp == kAlefHamzaBelow)
      cp = kAlef;
    append_codepoint(out, cp);
  }
  return out;
}

}  // namespace miftah::text

#endif  // MIFTAH_TEXT_HPP_
