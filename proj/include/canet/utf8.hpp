#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace canet::utf8 {

// Decodes the code point starting at s[i] and advances i. Malformed bytes
// decode as U+FFFD and advance by one byte.
char32_t decode(std::string_view s, std::size_t& i);
void encode(char32_t cp, std::string& out);
std::vector<char32_t> decode_all(std::string_view s);
std::string encode_all(const std::vector<char32_t>& cps);

// Lowercasing covers ASCII, Latin-1 Supplement and Latin Extended-A, which
// is what Portuguese (and most western-European) bios need; other scripts
// pass through unchanged.
char32_t to_lower(char32_t cp);
std::string lowercase(std::string_view s);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_space(char32_t cp);

}  // namespace canet::utf8
