#include "utf8.hpp"

namespace ses::utf8 {

namespace {

// Returns the sequence length (1..4) when a well-formed scalar value starts
// at text[pos], otherwise 0.
std::size_t decode_length(std::string_view text, std::size_t pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[pos + i]);
  };
  const unsigned char b0 = byte(0);
  if (b0 < 0x80) return 1;
  if (b0 < 0xC2) return 0;  // continuation byte or overlong lead
  const std::size_t remaining = text.size() - pos;
  const auto is_cont = [&](std::size_t i) {
    return (byte(i) & 0xC0) == 0x80;
  };
  if (b0 < 0xE0) {
    if (remaining < 2 || !is_cont(1)) return 0;
    return 2;
  }
  if (b0 < 0xF0) {
    if (remaining < 3 || !is_cont(1) || !is_cont(2)) return 0;
    const unsigned char b1 = byte(1);
    if (b0 == 0xE0 && b1 < 0xA0) return 0;  // overlong
    if (b0 == 0xED && b1 > 0x9F) return 0;  // surrogate range
    return 3;
  }
  if (b0 < 0xF5) {
    if (remaining < 4 || !is_cont(1) || !is_cont(2) || !is_cont(3)) return 0;
    const unsigned char b1 = byte(1);
    if (b0 == 0xF0 && b1 < 0x90) return 0;  // overlong
    if (b0 == 0xF4 && b1 > 0x8F) return 0;  // above U+10FFFF
    return 4;
  }
  return 0;
}

}  // namespace

std::size_t find_invalid(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t len = decode_length(text, pos);
    if (len == 0) return pos;
    pos += len;
  }
  return npos;
}

bool is_valid(std::string_view text) { return find_invalid(text) == npos; }

std::size_t scalar_count(std::string_view text) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    pos += decode_length(text, pos);
    ++count;
  }
  return count;
}

std::size_t scalar_length_at(std::string_view text, std::size_t pos) {
  return decode_length(text, pos);
}

}  // namespace ses::utf8
