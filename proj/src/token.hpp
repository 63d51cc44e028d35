#ifndef SES_TOKEN_HPP
#define SES_TOKEN_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ses {

/// Unit of atomicity for diffing: one Unicode scalar value, one word, or
/// one line (including its trailing terminator).
enum class Granularity { character, word, line };

std::string_view granularity_name(Granularity g);

/// Equality is exact text equality: case sensitive, no normalization.
struct Token {
  std::string text;

  friend auto operator<=>(const Token&, const Token&) = default;
};

/// An ordered list of tokens at a fixed granularity.
///
/// Word-granularity sequences carry the inter-token whitespace as metadata
/// so detokenize() can reproduce the original text exactly. The metadata is
/// invisible to equality: two sequences compare equal when granularity and
/// token texts match, so whitespace-only changes never register as edits.
class TokenSequence {
public:
  TokenSequence() = default;

  /// Builds a sequence from explicit tokens, validating the per-granularity
  /// token invariants (character tokens are single scalar values, word
  /// tokens contain no whitespace, line tokens contain no interior '\n').
  /// Word sequences get single-space separators.
  static TokenSequence from_tokens(std::vector<Token> tokens, Granularity g);

  /// Word-granularity constructor with explicit whitespace metadata.
  /// `separators[i]` follows token i; every separator must be whitespace
  /// only and interior separators must be non-empty, or tokenization of the
  /// detokenized text would not reproduce the same tokens.
  static TokenSequence with_separators(std::vector<Token> tokens,
                                       std::string leading,
                                       std::vector<std::string> separators);

  Granularity granularity() const noexcept { return granularity_; }
  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }
  const std::vector<Token>& tokens() const noexcept { return tokens_; }
  const Token& operator[](std::size_t i) const { return tokens_[i]; }

  const std::string& leading_separator() const noexcept { return leading_; }
  const std::vector<std::string>& separators() const noexcept {
    return separators_;
  }

  /// Granularity plus token texts; separator metadata is ignored.
  friend bool operator==(const TokenSequence& a, const TokenSequence& b) {
    return a.granularity_ == b.granularity_ && a.tokens_ == b.tokens_;
  }

private:
  friend TokenSequence tokenize(std::string_view, Granularity);

  std::vector<Token> tokens_;
  Granularity granularity_ = Granularity::character;
  // Word granularity only: leading_ precedes the first token and
  // separators_[i] follows token i (separators_.size() == tokens_.size()).
  std::string leading_;
  std::vector<std::string> separators_;
};

/// Splits `text` into tokens of the requested granularity. The
/// concatenation of the result (via detokenize) reproduces `text` exactly.
/// Throws Error(ErrorCode::encoding) when `text` is not valid UTF-8.
TokenSequence tokenize(std::string_view text, Granularity g);

/// Exact inverse of tokenize for sequences produced by it.
std::string detokenize(const TokenSequence& seq);

}  // namespace ses

#endif
