#include "token.hpp"

#include <utility>

#include "error.hpp"
#include "utf8.hpp"

namespace ses {

namespace {

bool is_word_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool all_word_space(std::string_view s) {
  for (char c : s) {
    if (!is_word_space(c)) return false;
  }
  return true;
}

void require_valid_utf8(std::string_view text, const char* what) {
  const std::size_t bad = utf8::find_invalid(text);
  if (bad != utf8::npos) {
    throw Error(ErrorCode::encoding,
                std::string(what) + ": invalid UTF-8 at byte offset " +
                    std::to_string(bad));
  }
}

void validate_token(const Token& token, Granularity g) {
  require_valid_utf8(token.text, "token");
  switch (g) {
    case Granularity::character:
      if (utf8::scalar_count(token.text) != 1) {
        throw Error(ErrorCode::invalid_argument,
                    "character token must be exactly one Unicode scalar "
                    "value, got \"" +
                        token.text + "\"");
      }
      break;
    case Granularity::word:
      if (token.text.empty()) {
        throw Error(ErrorCode::invalid_argument, "word token must be non-empty");
      }
      for (char c : token.text) {
        if (is_word_space(c)) {
          throw Error(ErrorCode::invalid_argument,
                      "word token must not contain whitespace: \"" +
                          token.text + "\"");
        }
      }
      break;
    case Granularity::line: {
      if (token.text.empty()) {
        throw Error(ErrorCode::invalid_argument, "line token must be non-empty");
      }
      const std::size_t nl = token.text.find('\n');
      if (nl != std::string::npos && nl + 1 != token.text.size()) {
        throw Error(ErrorCode::invalid_argument,
                    "line token may contain '\\n' only as its final byte");
      }
      break;
    }
  }
}

}  // namespace

std::string_view granularity_name(Granularity g) {
  switch (g) {
    case Granularity::character: return "char";
    case Granularity::word: return "word";
    case Granularity::line: return "line";
  }
  return "?";
}

TokenSequence TokenSequence::from_tokens(std::vector<Token> tokens,
                                         Granularity g) {
  for (const Token& t : tokens) validate_token(t, g);
  TokenSequence seq;
  seq.granularity_ = g;
  if (g == Granularity::word && !tokens.empty()) {
    seq.separators_.assign(tokens.size() - 1, " ");
    seq.separators_.push_back("");
  }
  seq.tokens_ = std::move(tokens);
  return seq;
}

TokenSequence TokenSequence::with_separators(
    std::vector<Token> tokens, std::string leading,
    std::vector<std::string> separators) {
  for (const Token& t : tokens) validate_token(t, Granularity::word);
  if (separators.size() != tokens.size()) {
    throw Error(ErrorCode::invalid_argument,
                "separator count must equal token count");
  }
  if (!all_word_space(leading)) {
    throw Error(ErrorCode::invalid_argument,
                "leading separator must be whitespace");
  }
  for (std::size_t i = 0; i < separators.size(); ++i) {
    if (!all_word_space(separators[i])) {
      throw Error(ErrorCode::invalid_argument,
                  "separators must be whitespace");
    }
    if (separators[i].empty() && i + 1 != separators.size()) {
      throw Error(ErrorCode::invalid_argument,
                  "interior separators must be non-empty");
    }
  }
  TokenSequence seq;
  seq.granularity_ = Granularity::word;
  seq.tokens_ = std::move(tokens);
  seq.leading_ = std::move(leading);
  seq.separators_ = std::move(separators);
  return seq;
}

TokenSequence tokenize(std::string_view text, Granularity g) {
  require_valid_utf8(text, "input");

  TokenSequence seq;
  seq.granularity_ = g;

  switch (g) {
    case Granularity::character: {
      std::size_t pos = 0;
      while (pos < text.size()) {
        const std::size_t len = utf8::scalar_length_at(text, pos);
        seq.tokens_.push_back(Token{std::string(text.substr(pos, len))});
        pos += len;
      }
      break;
    }
    case Granularity::word: {
      std::size_t pos = 0;
      const auto take_space_run = [&] {
        const std::size_t start = pos;
        while (pos < text.size() && is_word_space(text[pos])) ++pos;
        return std::string(text.substr(start, pos - start));
      };
      seq.leading_ = take_space_run();
      while (pos < text.size()) {
        const std::size_t start = pos;
        while (pos < text.size() && !is_word_space(text[pos])) ++pos;
        seq.tokens_.push_back(Token{std::string(text.substr(start, pos - start))});
        seq.separators_.push_back(take_space_run());
      }
      break;
    }
    case Granularity::line: {
      std::size_t start = 0;
      while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        std::size_t end = (nl == std::string_view::npos) ? text.size() : nl + 1;
        seq.tokens_.push_back(Token{std::string(text.substr(start, end - start))});
        start = end;
      }
      break;
    }
  }
  return seq;
}

std::string detokenize(const TokenSequence& seq) {
  std::string out;
  if (seq.granularity() == Granularity::word) {
    out += seq.leading_separator();
    for (std::size_t i = 0; i < seq.size(); ++i) {
      out += seq[i].text;
      out += seq.separators()[i];
    }
  } else {
    for (const Token& t : seq.tokens()) out += t.text;
  }
  return out;
}

}  // namespace ses
