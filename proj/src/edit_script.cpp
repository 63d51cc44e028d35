#include "edit_script.hpp"

#include <algorithm>
#include <tuple>

#include "error.hpp"
#include "utf8.hpp"

namespace ses {

namespace {

void validate_op_token(const Token& token, const char* role) {
  if (token.text.empty())
    throw Error(ErrorCode::invalid_argument,
                std::string(role) + " token must not be empty");
  if (!utf8::is_valid(token.text))
    throw Error(ErrorCode::encoding,
                std::string(role) + " token is not valid UTF-8");
}

int kind_rank(EditOp::Kind kind) {
  switch (kind) {
    case EditOp::Kind::Delete: return 0;
    case EditOp::Kind::Substitute: return 1;
    case EditOp::Kind::Insert: return 2;
  }
  return 3;
}

const std::string& sort_text(const EditOp& op) {
  return op.kind == EditOp::Kind::Delete ? op.old_token->text
                                         : op.new_token->text;
}

}  // namespace

std::string_view kind_name(EditOp::Kind kind) {
  switch (kind) {
    case EditOp::Kind::Insert: return "insert";
    case EditOp::Kind::Delete: return "delete";
    case EditOp::Kind::Substitute: return "substitute";
  }
  return "unknown";
}

EditOp EditOp::insertion(std::size_t source_pos, std::size_t target_pos,
                         Token new_token) {
  validate_op_token(new_token, "inserted");
  EditOp op;
  op.kind = Kind::Insert;
  op.source_pos = source_pos;
  op.target_pos = target_pos;
  op.new_token = std::move(new_token);
  return op;
}

EditOp EditOp::deletion(std::size_t source_pos, std::size_t target_pos,
                        Token old_token) {
  validate_op_token(old_token, "deleted");
  EditOp op;
  op.kind = Kind::Delete;
  op.source_pos = source_pos;
  op.target_pos = target_pos;
  op.old_token = std::move(old_token);
  return op;
}

EditOp EditOp::substitution(std::size_t source_pos, std::size_t target_pos,
                            Token old_token, Token new_token) {
  validate_op_token(old_token, "substituted");
  validate_op_token(new_token, "replacement");
  if (old_token == new_token)
    throw Error(ErrorCode::invalid_argument,
                "substitution must change the token");
  EditOp op;
  op.kind = Kind::Substitute;
  op.source_pos = source_pos;
  op.target_pos = target_pos;
  op.old_token = std::move(old_token);
  op.new_token = std::move(new_token);
  return op;
}

bool canonical_less(const EditOp& a, const EditOp& b) {
  return std::tie(a.source_pos, a.target_pos) <
             std::tie(b.source_pos, b.target_pos) ||
         (a.source_pos == b.source_pos && a.target_pos == b.target_pos &&
          (kind_rank(a.kind) < kind_rank(b.kind) ||
           (kind_rank(a.kind) == kind_rank(b.kind) &&
            sort_text(a) < sort_text(b))));
}

namespace {

void validate_script(const std::vector<EditOp>& ops, std::size_t source_len,
                     std::size_t target_len) {
  std::size_t inserts = 0;
  std::size_t deletes = 0;
  const EditOp* prev = nullptr;
  const EditOp* prev_consumer = nullptr;  // last Delete/Substitute
  for (const EditOp& op : ops) {
    switch (op.kind) {
      case EditOp::Kind::Insert:
        ++inserts;
        if (op.source_pos > source_len || op.target_pos >= target_len)
          throw Error(ErrorCode::invalid_argument,
                      "insert position out of range");
        break;
      case EditOp::Kind::Delete:
        ++deletes;
        if (op.source_pos >= source_len || op.target_pos > target_len)
          throw Error(ErrorCode::invalid_argument,
                      "delete position out of range");
        break;
      case EditOp::Kind::Substitute:
        if (op.source_pos >= source_len || op.target_pos >= target_len)
          throw Error(ErrorCode::invalid_argument,
                      "substitute position out of range");
        break;
    }
    if (prev && canonical_less(op, *prev))
      throw Error(ErrorCode::invalid_argument,
                  "ops are not in canonical order");
    if (op.kind != EditOp::Kind::Insert) {
      if (prev_consumer && prev_consumer->source_pos == op.source_pos)
        throw Error(ErrorCode::conflict,
                    "source position " + std::to_string(op.source_pos) +
                        " is consumed twice");
      prev_consumer = &op;
    }
    prev = &op;
  }
  // Consumers arrive sorted by source_pos, so the neighbour check above
  // suffices for them; producers are not sorted by target_pos.
  std::vector<std::size_t> produced;
  for (const EditOp& op : ops)
    if (op.kind != EditOp::Kind::Delete) produced.push_back(op.target_pos);
  std::sort(produced.begin(), produced.end());
  if (std::adjacent_find(produced.begin(), produced.end()) != produced.end())
    throw Error(ErrorCode::conflict, "target position is produced twice");

  if (source_len + inserts != target_len + deletes)
    throw Error(ErrorCode::invalid_argument,
                "op counts do not connect the declared endpoints");
}

}  // namespace

EditScript EditScript::from_sorted(std::vector<EditOp> ops,
                                   std::size_t source_len,
                                   std::size_t target_len) {
  validate_script(ops, source_len, target_len);
  EditScript script;
  script.ops_ = std::move(ops);
  script.source_len_ = source_len;
  script.target_len_ = target_len;
  return script;
}

EditScript EditScript::canonicalize(std::vector<EditOp> ops,
                                    std::size_t source_len,
                                    std::size_t target_len) {
  std::stable_sort(ops.begin(), ops.end(), canonical_less);
  return from_sorted(std::move(ops), source_len, target_len);
}

namespace {

std::string position_mismatch_message(std::size_t op_index,
                                      const EditOp& op,
                                      const Token& found) {
  return "op #" + std::to_string(op_index) + ": expected \"" +
         op.old_token->text + "\" at source position " +
         std::to_string(op.source_pos) + ", found \"" + found.text + "\"";
}

}  // namespace

TokenSequence apply(const EditScript& script, const TokenSequence& source) {
  if (source.size() != script.source_len())
    throw Error(ErrorCode::apply_mismatch,
                "script expects a source of length " +
                    std::to_string(script.source_len()) + ", got " +
                    std::to_string(source.size()));

  const std::vector<EditOp>& ops = script.ops();
  std::vector<Token> out;
  out.reserve(script.target_len());

  // Word granularity keeps one separator per emitted token; copied and
  // substituted tokens carry the separator of their source index.
  const bool words = source.granularity() == Granularity::word;
  std::vector<std::string> seps;
  if (words) seps.reserve(script.target_len());

  std::size_t next = 0;
  for (std::size_t s = 0; s <= source.size(); ++s) {
    bool consumed = false;
    for (; next < ops.size() && ops[next].source_pos == s; ++next) {
      const EditOp& op = ops[next];
      switch (op.kind) {
        case EditOp::Kind::Insert:
          out.push_back(*op.new_token);
          if (words) seps.push_back(" ");
          break;
        case EditOp::Kind::Delete:
          if (source[s] != *op.old_token)
            throw Error(ErrorCode::apply_mismatch,
                        position_mismatch_message(next, op, source[s]));
          consumed = true;
          break;
        case EditOp::Kind::Substitute:
          if (source[s] != *op.old_token)
            throw Error(ErrorCode::apply_mismatch,
                        position_mismatch_message(next, op, source[s]));
          out.push_back(*op.new_token);
          if (words) seps.push_back(source.separators()[s]);
          consumed = true;
          break;
      }
    }
    if (s < source.size() && !consumed) {
      out.push_back(source[s]);
      if (words) seps.push_back(source.separators()[s]);
    }
  }

  if (!words)
    return TokenSequence::from_tokens(std::move(out), source.granularity());

  // Interior separators must keep tokens apart; the source's trailing
  // separator follows the last emitted token.
  for (std::size_t i = 0; i + 1 < seps.size(); ++i)
    if (seps[i].empty()) seps[i] = " ";
  if (!seps.empty())
    seps.back() = source.empty() ? "" : source.separators().back();
  return TokenSequence::with_separators(std::move(out),
                                        source.leading_separator(),
                                        std::move(seps));
}

EditScript invert(const EditScript& script) {
  std::vector<EditOp> ops;
  ops.reserve(script.size());
  for (const EditOp& op : script.ops()) {
    switch (op.kind) {
      case EditOp::Kind::Insert:
        ops.push_back(
            EditOp::deletion(op.target_pos, op.source_pos, *op.new_token));
        break;
      case EditOp::Kind::Delete:
        ops.push_back(
            EditOp::insertion(op.target_pos, op.source_pos, *op.old_token));
        break;
      case EditOp::Kind::Substitute:
        ops.push_back(EditOp::substitution(op.target_pos, op.source_pos,
                                           *op.new_token, *op.old_token));
        break;
    }
  }
  return EditScript::canonicalize(std::move(ops), script.target_len(),
                                  script.source_len());
}

std::string_view format_name(Format format) {
  switch (format) {
    case Format::compact: return "compact";
    case Format::verbose: return "verbose";
    case Format::json: return "json";
  }
  return "unknown";
}

std::optional<Format> format_from_name(std::string_view name) {
  if (name == "compact") return Format::compact;
  if (name == "verbose") return Format::verbose;
  if (name == "json") return Format::json;
  return std::nullopt;
}

}  // namespace ses
