#include "ses.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "bench.hpp"
#include "check.hpp"
#include "core.hpp"
#include "edit_script.hpp"
#include "error.hpp"
#include "oracle.hpp"
#include "token.hpp"

struct ses_sequence {
  ses::TokenSequence value;
};

struct ses_script {
  ses::EditScript value;
};

struct ses_matrix {
  ses::ScriptMatrix value;
};

namespace {

thread_local std::string g_last_error;

void set_error(std::string message) { g_last_error = std::move(message); }

ses_status map_code(ses::ErrorCode code) {
  switch (code) {
    case ses::ErrorCode::invalid_argument: return SES_ERROR_INVALID_ARGUMENT;
    case ses::ErrorCode::encoding: return SES_ERROR_ENCODING;
    case ses::ErrorCode::granularity_mismatch:
      return SES_ERROR_GRANULARITY_MISMATCH;
    case ses::ErrorCode::parse: return SES_ERROR_PARSE;
    case ses::ErrorCode::conflict: return SES_ERROR_CONFLICT;
    case ses::ErrorCode::apply_mismatch: return SES_ERROR_APPLY_MISMATCH;
    case ses::ErrorCode::guard: return SES_ERROR_GUARD;
    case ses::ErrorCode::no_result: return SES_ERROR_NO_RESULT;
  }
  return SES_ERROR_INTERNAL;
}

template <typename F>
ses_status wrap(F&& body) noexcept {
  try {
    return body();
  } catch (const ses::Error& e) {
    set_error(e.what());
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return SES_ERROR_NOMEM;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SES_ERROR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return SES_ERROR_INTERNAL;
  }
}

ses_status require(bool condition, const char* message) {
  if (condition) return SES_OK;
  set_error(message);
  return SES_ERROR_INVALID_ARGUMENT;
}

/* Copies a string into a malloc buffer with a trailing NUL. */
ses_status copy_out(const std::string& text, char** out, size_t* len_out) {
  char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
  if (!buffer) {
    set_error("out of memory");
    return SES_ERROR_NOMEM;
  }
  std::memcpy(buffer, text.data(), text.size());
  buffer[text.size()] = '\0';
  *out = buffer;
  if (len_out) *len_out = text.size();
  return SES_OK;
}

ses::Granularity to_granularity(ses_granularity g) {
  switch (g) {
    case SES_GRANULARITY_CHARACTER: return ses::Granularity::character;
    case SES_GRANULARITY_WORD: return ses::Granularity::word;
    case SES_GRANULARITY_LINE: return ses::Granularity::line;
  }
  throw ses::Error(ses::ErrorCode::invalid_argument, "unknown granularity");
}

ses_granularity from_granularity(ses::Granularity g) {
  switch (g) {
    case ses::Granularity::character: return SES_GRANULARITY_CHARACTER;
    case ses::Granularity::word: return SES_GRANULARITY_WORD;
    case ses::Granularity::line: return SES_GRANULARITY_LINE;
  }
  return SES_GRANULARITY_CHARACTER;
}

ses::Format to_format(ses_format f) {
  switch (f) {
    case SES_FORMAT_COMPACT: return ses::Format::compact;
    case SES_FORMAT_VERBOSE: return ses::Format::verbose;
    case SES_FORMAT_JSON: return ses::Format::json;
  }
  throw ses::Error(ses::ErrorCode::invalid_argument, "unknown format");
}

}  // namespace

extern "C" {

const char* ses_version(void) { return "0.1.0"; }

const char* ses_status_name(ses_status status) {
  switch (status) {
    case SES_OK: return "ok";
    case SES_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case SES_ERROR_ENCODING: return "encoding error";
    case SES_ERROR_GRANULARITY_MISMATCH: return "granularity mismatch";
    case SES_ERROR_PARSE: return "parse error";
    case SES_ERROR_CONFLICT: return "conflicting ops";
    case SES_ERROR_APPLY_MISMATCH: return "apply mismatch";
    case SES_ERROR_GUARD: return "guard exceeded";
    case SES_ERROR_NO_RESULT: return "no result";
    case SES_ERROR_NOMEM: return "out of memory";
    case SES_ERROR_INTERNAL: return "internal error";
    case SES_ERROR_CHECK_FAILED: return "check failed";
  }
  return "unknown";
}

const char* ses_last_error(void) { return g_last_error.c_str(); }

void ses_string_free(char* text) { std::free(text); }

ses_status ses_tokenize(const char* text, size_t text_len,
                        ses_granularity granularity, ses_sequence** out) {
  if (ses_status s = require(out && (text || text_len == 0),
                             "ses_tokenize: null argument"))
    return s;
  return wrap([&] {
    auto seq = ses::tokenize(std::string_view(text ? text : "", text_len),
                             to_granularity(granularity));
    *out = new ses_sequence{std::move(seq)};
    return SES_OK;
  });
}

void ses_sequence_free(ses_sequence* seq) { delete seq; }

size_t ses_sequence_size(const ses_sequence* seq) {
  return seq ? seq->value.size() : 0;
}

ses_granularity ses_sequence_granularity(const ses_sequence* seq) {
  return seq ? from_granularity(seq->value.granularity())
             : SES_GRANULARITY_CHARACTER;
}

const char* ses_sequence_token(const ses_sequence* seq, size_t index,
                               size_t* len_out) {
  if (!seq || index >= seq->value.size()) {
    if (len_out) *len_out = 0;
    return nullptr;
  }
  const std::string& text = seq->value[index].text;
  if (len_out) *len_out = text.size();
  return text.c_str();
}

ses_status ses_detokenize(const ses_sequence* seq, char** out,
                          size_t* len_out) {
  if (ses_status s = require(seq && out, "ses_detokenize: null argument"))
    return s;
  return wrap([&] { return copy_out(ses::detokenize(seq->value), out, len_out); });
}

ses_status ses_distance(const ses_sequence* source, const ses_sequence* target,
                        size_t* out) {
  if (ses_status s =
          require(source && target && out, "ses_distance: null argument"))
    return s;
  return wrap([&] {
    *out = ses::distance(source->value, target->value);
    return SES_OK;
  });
}

ses_status ses_shortest_script(const ses_sequence* source,
                               const ses_sequence* target, ses_script** out) {
  if (ses_status s = require(source && target && out,
                             "ses_shortest_script: null argument"))
    return s;
  return wrap([&] {
    *out = new ses_script{ses::shortest_script(source->value, target->value)};
    return SES_OK;
  });
}

ses_status ses_backtrace_script(const ses_sequence* source,
                                const ses_sequence* target, ses_script** out) {
  if (ses_status s = require(source && target && out,
                             "ses_backtrace_script: null argument"))
    return s;
  return wrap([&] {
    *out = new ses_script{ses::backtrace_script(source->value, target->value)};
    return SES_OK;
  });
}

void ses_script_free(ses_script* script) { delete script; }

size_t ses_script_size(const ses_script* script) {
  return script ? script->value.size() : 0;
}

size_t ses_script_source_len(const ses_script* script) {
  return script ? script->value.source_len() : 0;
}

size_t ses_script_target_len(const ses_script* script) {
  return script ? script->value.target_len() : 0;
}

ses_status ses_script_op(const ses_script* script, size_t index,
                         ses_op_kind* kind_out, size_t* source_pos_out,
                         size_t* target_pos_out, const char** old_out,
                         size_t* old_len_out, const char** new_out,
                         size_t* new_len_out) {
  if (ses_status s = require(script != nullptr, "ses_script_op: null script"))
    return s;
  if (index >= script->value.size()) {
    set_error("ses_script_op: index out of range");
    return SES_ERROR_INVALID_ARGUMENT;
  }
  const ses::EditOp& op = script->value.ops()[index];
  if (kind_out) {
    switch (op.kind) {
      case ses::EditOp::Kind::Insert: *kind_out = SES_OP_INSERT; break;
      case ses::EditOp::Kind::Delete: *kind_out = SES_OP_DELETE; break;
      case ses::EditOp::Kind::Substitute: *kind_out = SES_OP_SUBSTITUTE; break;
    }
  }
  if (source_pos_out) *source_pos_out = op.source_pos;
  if (target_pos_out) *target_pos_out = op.target_pos;
  if (old_out) *old_out = op.old_token ? op.old_token->text.c_str() : nullptr;
  if (old_len_out) *old_len_out = op.old_token ? op.old_token->text.size() : 0;
  if (new_out) *new_out = op.new_token ? op.new_token->text.c_str() : nullptr;
  if (new_len_out) *new_len_out = op.new_token ? op.new_token->text.size() : 0;
  return SES_OK;
}

ses_status ses_script_serialize(const ses_script* script, ses_format format,
                                char** out, size_t* len_out) {
  if (ses_status s =
          require(script && out, "ses_script_serialize: null argument"))
    return s;
  return wrap([&] {
    return copy_out(ses::serialize(script->value, to_format(format)), out,
                    len_out);
  });
}

ses_status ses_script_parse(const char* text, size_t text_len,
                            ses_format format, ses_script** out) {
  if (ses_status s = require(out && (text || text_len == 0),
                             "ses_script_parse: null argument"))
    return s;
  return wrap([&] {
    auto script = ses::parse(std::string_view(text ? text : "", text_len),
                             to_format(format));
    *out = new ses_script{std::move(script)};
    return SES_OK;
  });
}

ses_status ses_script_invert(const ses_script* script, ses_script** out) {
  if (ses_status s =
          require(script && out, "ses_script_invert: null argument"))
    return s;
  return wrap([&] {
    *out = new ses_script{ses::invert(script->value)};
    return SES_OK;
  });
}

ses_status ses_script_apply(const ses_script* script,
                            const ses_sequence* source, ses_sequence** out) {
  if (ses_status s = require(script && source && out,
                             "ses_script_apply: null argument"))
    return s;
  return wrap([&] {
    *out = new ses_sequence{ses::apply(script->value, source->value)};
    return SES_OK;
  });
}

ses_status ses_script_matrix(const ses_sequence* source,
                             const ses_sequence* target, ses_matrix** out) {
  if (ses_status s = require(source && target && out,
                             "ses_script_matrix: null argument"))
    return s;
  return wrap([&] {
    *out = new ses_matrix{ses::script_matrix(source->value, target->value)};
    return SES_OK;
  });
}

void ses_matrix_free(ses_matrix* matrix) { delete matrix; }

size_t ses_matrix_rows(const ses_matrix* matrix) {
  return matrix ? matrix->value.rows() : 0;
}

size_t ses_matrix_cols(const ses_matrix* matrix) {
  return matrix ? matrix->value.cols() : 0;
}

ses_status ses_matrix_distance_at(const ses_matrix* matrix, size_t i, size_t j,
                                  size_t* out) {
  if (ses_status s =
          require(matrix && out, "ses_matrix_distance_at: null argument"))
    return s;
  return wrap([&] {
    *out = matrix->value.distance_at(i, j);
    return SES_OK;
  });
}

ses_status ses_matrix_script_length_at(const ses_matrix* matrix, size_t i,
                                       size_t j, size_t* out) {
  if (ses_status s =
          require(matrix && out, "ses_matrix_script_length_at: null argument"))
    return s;
  return wrap([&] {
    *out = matrix->value.script_length_at(i, j);
    return SES_OK;
  });
}

ses_status ses_matrix_script_at(const ses_matrix* matrix, size_t i, size_t j,
                                ses_script** out) {
  if (ses_status s =
          require(matrix && out, "ses_matrix_script_at: null argument"))
    return s;
  return wrap([&] {
    *out = new ses_script{matrix->value.script_at(i, j)};
    return SES_OK;
  });
}

ses_status ses_matrix_total_instructions(const ses_matrix* matrix,
                                         size_t* out) {
  if (ses_status s = require(matrix && out,
                             "ses_matrix_total_instructions: null argument"))
    return s;
  return wrap([&] {
    *out = matrix->value.total_instructions();
    return SES_OK;
  });
}

ses_status ses_oracle_distance(const ses_sequence* source,
                               const ses_sequence* target, size_t* out) {
  if (ses_status s = require(source && target && out,
                             "ses_oracle_distance: null argument"))
    return s;
  return wrap([&] {
    *out = ses::oracle::distance(source->value, target->value);
    return SES_OK;
  });
}

ses_status ses_oracle_check(size_t max_len, size_t alphabet,
                            char** summary_out) {
  if (ses_status s =
          require(summary_out != nullptr, "ses_oracle_check: null argument"))
    return s;
  return wrap([&]() -> ses_status {
    ses::AgreementReport report =
        ses::check_oracle_agreement(max_len, alphabet);
    if (report.ok) {
      std::string summary = "all pairs agree (" +
                            std::to_string(report.distance_pairs) +
                            " distance pairs, " +
                            std::to_string(report.script_pairs) +
                            " script pairs)";
      return copy_out(summary, summary_out, nullptr);
    }
    if (ses_status s = copy_out(report.detail, summary_out, nullptr))
      return s;
    set_error(report.detail);
    return SES_ERROR_CHECK_FAILED;
  });
}

ses_status ses_tie_rule_search(size_t max_len, size_t alphabet, int* found_out,
                               char** report_out) {
  if (ses_status s = require(report_out != nullptr,
                             "ses_tie_rule_search: null argument"))
    return s;
  return wrap([&]() -> ses_status {
    auto witness = ses::oracle::tie_rule_witness_search(max_len, alphabet);
    if (found_out) *found_out = witness ? 1 : 0;
    std::string line;
    if (witness) {
      line = "tie rule witness: \"" + witness->source + "\" -> \"" +
             witness->target + "\" comes out as " +
             std::to_string(witness->rule_distance) + ", minimum is " +
             std::to_string(witness->true_distance);
    } else {
      line = "no tie rule witness found (lengths <= " +
             std::to_string(max_len) + ", alphabet " +
             std::to_string(alphabet) + ")";
    }
    return copy_out(line, report_out, nullptr);
  });
}

ses_status ses_bench_time_scaling(const size_t* sizes, size_t size_count,
                                  size_t trials, char** csv_out) {
  if (ses_status s = require(csv_out && (sizes || size_count == 0),
                             "ses_bench_time_scaling: null argument"))
    return s;
  return wrap([&] {
    std::vector<std::size_t> list(sizes, sizes + size_count);
    ses::bench::BenchReport report =
        ses::bench::run_time_scaling(std::move(list), trials);
    return copy_out(report.to_csv(), csv_out, nullptr);
  });
}

ses_status ses_bench_space_measurement(const size_t* sizes, size_t size_count,
                                       char** csv_out) {
  if (ses_status s = require(csv_out && (sizes || size_count == 0),
                             "ses_bench_space_measurement: null argument"))
    return s;
  return wrap([&] {
    std::vector<std::size_t> list(sizes, sizes + size_count);
    ses::bench::BenchReport report =
        ses::bench::run_space_measurement(std::move(list));
    return copy_out(report.to_csv(), csv_out, nullptr);
  });
}

}  // extern "C"
