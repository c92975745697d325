#ifndef DOTSEG_UTF8_HPP
#define DOTSEG_UTF8_HPP

#include <string>
#include <string_view>
#include <vector>

namespace dotseg::utf8 {

// Decodes UTF-8; throws dotseg::Error on malformed, overlong or surrogate
// sequences.
std::u32string decode(std::string_view bytes);
std::string encode(std::u32string_view text);

// Simple (one-to-one) case folding for the letters of Latin-1, Latin
// Extended-A, Greek, Cyrillic and Armenian. Other code points are unchanged.
char32_t fold_case(char32_t c);
bool is_punctuation(char32_t c);
bool is_space(char32_t c);

std::string fold_case(std::string_view word);

// Splits on Unicode whitespace; empty pieces are never returned.
std::vector<std::u32string> split_words(std::u32string_view line);

} // namespace dotseg::utf8

#endif
