#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "edit_script.hpp"
#include "error.hpp"

namespace ses {

namespace {

bool needs_escape(char c) {
  return c == '%' || c == ':' || c == '>' || c == ',' || c == '\n' ||
         c == '\r';
}

void append_encoded(std::string& out, std::string_view text) {
  static const char hex[] = "0123456789ABCDEF";
  for (char c : text) {
    if (needs_escape(c)) {
      unsigned char b = static_cast<unsigned char>(c);
      out += '%';
      out += hex[b >> 4];
      out += hex[b & 0xF];
    } else {
      out += c;
    }
  }
}

std::string serialize_compact(const EditScript& script) {
  std::string out = "@ " + std::to_string(script.source_len()) + " " +
                    std::to_string(script.target_len()) + "\n";
  for (const EditOp& op : script.ops()) {
    switch (op.kind) {
      case EditOp::Kind::Insert: out += '+'; break;
      case EditOp::Kind::Delete: out += '-'; break;
      case EditOp::Kind::Substitute: out += '~'; break;
    }
    out += std::to_string(op.source_pos);
    out += ',';
    out += std::to_string(op.target_pos);
    out += ':';
    if (op.kind == EditOp::Kind::Insert) {
      append_encoded(out, op.new_token->text);
    } else if (op.kind == EditOp::Kind::Delete) {
      append_encoded(out, op.old_token->text);
    } else {
      append_encoded(out, op.old_token->text);
      out += '>';
      append_encoded(out, op.new_token->text);
    }
    out += '\n';
  }
  return out;
}

std::string serialize_verbose(const EditScript& script) {
  std::string out;
  for (const EditOp& op : script.ops()) {
    switch (op.kind) {
      case EditOp::Kind::Insert:
        out += "At position " + std::to_string(op.target_pos) + " add " +
               op.new_token->text + "\n";
        break;
      case EditOp::Kind::Delete:
        out += "At position " + std::to_string(op.source_pos) + " delete " +
               op.old_token->text + "\n";
        break;
      case EditOp::Kind::Substitute:
        out += "At position " + std::to_string(op.source_pos) +
               " substitute " + op.old_token->text + " with " +
               op.new_token->text + "\n";
        break;
    }
  }
  return out;
}

std::string serialize_json(const EditScript& script) {
  nlohmann::ordered_json doc;
  doc["source_len"] = script.source_len();
  doc["target_len"] = script.target_len();
  doc["ops"] = nlohmann::ordered_json::array();
  for (const EditOp& op : script.ops()) {
    nlohmann::ordered_json entry;
    entry["kind"] = kind_name(op.kind);
    entry["source_pos"] = op.source_pos;
    entry["target_pos"] = op.target_pos;
    if (op.old_token) entry["old"] = op.old_token->text;
    if (op.new_token) entry["new"] = op.new_token->text;
    doc["ops"].push_back(std::move(entry));
  }
  return doc.dump();
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::parse,
              "line " + std::to_string(line_no) + ": " + what);
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Decodes a compact token field, stopping at an unencoded '>' when
// `stop_at_gt` is set. Advances `pos` past the consumed input.
std::string decode_field(std::string_view line, std::size_t& pos,
                         bool stop_at_gt, std::size_t line_no) {
  std::string out;
  while (pos < line.size()) {
    char c = line[pos];
    if (c == '>' && stop_at_gt) break;
    if (c == '%') {
      if (pos + 2 >= line.size())
        fail_line(line_no, "truncated %-escape");
      if (hex_value(line[pos + 1]) < 0 || hex_value(line[pos + 2]) < 0)
        fail_line(line_no, "malformed %-escape");
      out += static_cast<char>(hex_value(line[pos + 1]) * 16 +
                               hex_value(line[pos + 2]));
      pos += 3;
    } else {
      out += c;
      ++pos;
    }
  }
  return out;
}

std::size_t parse_number(std::string_view line, std::size_t& pos,
                         std::size_t line_no) {
  std::size_t value = 0;
  const char* begin = line.data() + pos;
  const char* end = line.data() + line.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin)
    fail_line(line_no, "expected a position");
  pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

void expect_char(std::string_view line, std::size_t& pos, char want,
                 std::size_t line_no) {
  if (pos >= line.size() || line[pos] != want)
    fail_line(line_no, std::string("expected '") + want + "'");
  ++pos;
}

EditScript parse_compact(std::string_view text) {
  if (text.find('\r') != std::string_view::npos)
    throw Error(ErrorCode::parse, "carriage returns are not allowed");

  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start < text.size();) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));  // tolerate a missing final LF
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }

  if (lines.empty()) throw Error(ErrorCode::parse, "missing header");
  std::string_view header = lines[0];
  std::size_t pos = 0;
  expect_char(header, pos, '@', 1);
  expect_char(header, pos, ' ', 1);
  std::size_t source_len = parse_number(header, pos, 1);
  expect_char(header, pos, ' ', 1);
  std::size_t target_len = parse_number(header, pos, 1);
  if (pos != header.size()) fail_line(1, "trailing characters in header");

  std::vector<EditOp> ops;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    std::size_t line_no = i + 1;
    if (line.empty()) fail_line(line_no, "empty line");
    char tag = line[0];
    if (tag != '+' && tag != '-' && tag != '~')
      fail_line(line_no, "unknown op tag");
    pos = 1;
    std::size_t source_pos = parse_number(line, pos, line_no);
    expect_char(line, pos, ',', line_no);
    std::size_t target_pos = parse_number(line, pos, line_no);
    expect_char(line, pos, ':', line_no);
    try {
      if (tag == '+') {
        std::string tok = decode_field(line, pos, false, line_no);
        ops.push_back(
            EditOp::insertion(source_pos, target_pos, Token{std::move(tok)}));
      } else if (tag == '-') {
        std::string tok = decode_field(line, pos, false, line_no);
        ops.push_back(
            EditOp::deletion(source_pos, target_pos, Token{std::move(tok)}));
      } else {
        std::string old_tok = decode_field(line, pos, true, line_no);
        expect_char(line, pos, '>', line_no);
        std::string new_tok = decode_field(line, pos, false, line_no);
        ops.push_back(EditOp::substitution(source_pos, target_pos,
                                           Token{std::move(old_tok)},
                                           Token{std::move(new_tok)}));
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::parse) throw;
      fail_line(line_no, e.what());
    }
  }

  return EditScript::canonicalize(std::move(ops), source_len, target_len);
}

std::size_t json_size_field(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key))
    throw Error(ErrorCode::parse, std::string("missing field \"") + key + "\"");
  const nlohmann::json& value = doc.at(key);
  if (!value.is_number_unsigned())
    throw Error(ErrorCode::parse,
                std::string("field \"") + key +
                    "\" must be a non-negative integer");
  return value.get<std::size_t>();
}

std::string json_text_field(const nlohmann::json& op, const char* key) {
  if (!op.contains(key) || !op.at(key).is_string())
    throw Error(ErrorCode::parse,
                std::string("op needs a string \"") + key + "\" field");
  return op.at(key).get<std::string>();
}

EditScript parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::parse, "expected an object");

  std::size_t source_len = json_size_field(doc, "source_len");
  std::size_t target_len = json_size_field(doc, "target_len");
  if (!doc.contains("ops") || !doc.at("ops").is_array())
    throw Error(ErrorCode::parse, "field \"ops\" must be an array");

  std::vector<EditOp> ops;
  for (const nlohmann::json& entry : doc.at("ops")) {
    if (!entry.is_object())
      throw Error(ErrorCode::parse, "each op must be an object");
    std::string kind = json_text_field(entry, "kind");
    std::size_t source_pos = json_size_field(entry, "source_pos");
    std::size_t target_pos = json_size_field(entry, "target_pos");
    if (kind == "insert") {
      ops.push_back(EditOp::insertion(source_pos, target_pos,
                                      Token{json_text_field(entry, "new")}));
    } else if (kind == "delete") {
      ops.push_back(EditOp::deletion(source_pos, target_pos,
                                     Token{json_text_field(entry, "old")}));
    } else if (kind == "substitute") {
      ops.push_back(EditOp::substitution(source_pos, target_pos,
                                         Token{json_text_field(entry, "old")},
                                         Token{json_text_field(entry, "new")}));
    } else {
      throw Error(ErrorCode::parse, "unknown op kind \"" + kind + "\"");
    }
  }

  return EditScript::canonicalize(std::move(ops), source_len, target_len);
}

}  // namespace

std::string serialize(const EditScript& script, Format format) {
  switch (format) {
    case Format::compact: return serialize_compact(script);
    case Format::verbose: return serialize_verbose(script);
    case Format::json: return serialize_json(script);
  }
  throw Error(ErrorCode::invalid_argument, "unknown format");
}

EditScript parse(std::string_view text, Format format) {
  switch (format) {
    case Format::compact: return parse_compact(text);
    case Format::json: return parse_json(text);
    case Format::verbose:
      throw Error(ErrorCode::parse, "the verbose format cannot be parsed");
  }
  throw Error(ErrorCode::invalid_argument, "unknown format");
}

}  // namespace ses
