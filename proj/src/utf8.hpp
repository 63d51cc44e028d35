#ifndef SES_UTF8_HPP
#define SES_UTF8_HPP

#include <cstddef>
#include <string_view>

namespace ses::utf8 {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Byte offset of the first invalid UTF-8 sequence, or npos if the whole
// input is well formed. Rejects overlong encodings, surrogates and
// code points above U+10FFFF.
std::size_t find_invalid(std::string_view text);

bool is_valid(std::string_view text);

// Number of Unicode scalar values. Input must be valid UTF-8.
std::size_t scalar_count(std::string_view text);

// Byte length of the scalar value starting at `pos`. Input must be valid
// UTF-8 and pos must be a scalar boundary.
std::size_t scalar_length_at(std::string_view text, std::size_t pos);

}  // namespace ses::utf8

#endif
