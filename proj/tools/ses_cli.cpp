// Command line front end for the shortest-edit-script library. Talks to
// the library through its C interface only.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ses.h"

namespace {

struct cli_error {
  std::string message;
};

void check(ses_status status) {
  if (status != SES_OK) throw cli_error{ses_last_error()};
}

std::string read_stream(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

// Literal text, a file path, or "-" for stdin (one input per command).
std::string load_input(const std::string& arg, bool literal,
                       bool& stdin_taken) {
  if (literal) return arg;
  if (arg == "-") {
    if (stdin_taken) throw cli_error{"only one input may come from stdin"};
    stdin_taken = true;
    return read_stream(std::cin);
  }
  std::ifstream file(arg, std::ios::binary);
  if (!file) throw cli_error{"cannot open " + arg};
  return read_stream(file);
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::fwrite(data.data(), 1, data.size(), stdout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw cli_error{"cannot open " + path + " for writing"};
  file.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!file) throw cli_error{"failed to write " + path};
}

ses_granularity pick_granularity(const std::string& name, bool literal) {
  if (name.empty())
    return literal ? SES_GRANULARITY_CHARACTER : SES_GRANULARITY_LINE;
  if (name == "char") return SES_GRANULARITY_CHARACTER;
  if (name == "word") return SES_GRANULARITY_WORD;
  return SES_GRANULARITY_LINE;
}

ses_format pick_format(const std::string& name) {
  if (name == "verbose") return SES_FORMAT_VERBOSE;
  if (name == "json") return SES_FORMAT_JSON;
  return SES_FORMAT_COMPACT;
}

// Owner wrappers so error paths cannot leak handles.
struct sequence_ptr {
  ses_sequence* get = nullptr;
  ~sequence_ptr() { ses_sequence_free(get); }
};
struct script_ptr {
  ses_script* get = nullptr;
  ~script_ptr() { ses_script_free(get); }
};
struct matrix_ptr {
  ses_matrix* get = nullptr;
  ~matrix_ptr() { ses_matrix_free(get); }
};
struct string_ptr {
  char* get = nullptr;
  ~string_ptr() { ses_string_free(get); }
};

struct pair_options {
  std::string source;
  std::string target;
  bool literal = false;
  std::string granularity;
};

void tokenize_pair(const pair_options& opts, sequence_ptr& a,
                   sequence_ptr& b) {
  bool stdin_taken = false;
  std::string source_text = load_input(opts.source, opts.literal, stdin_taken);
  std::string target_text = load_input(opts.target, opts.literal, stdin_taken);
  ses_granularity gran = pick_granularity(opts.granularity, opts.literal);
  check(ses_tokenize(source_text.data(), source_text.size(), gran, &a.get));
  check(ses_tokenize(target_text.data(), target_text.size(), gran, &b.get));
}

int run_diff(const pair_options& opts, const std::string& format,
             const std::string& algorithm, const std::string& output) {
  sequence_ptr a, b;
  tokenize_pair(opts, a, b);

  script_ptr script;
  if (algorithm == "backtrace")
    check(ses_backtrace_script(a.get, b.get, &script.get));
  else
    check(ses_shortest_script(a.get, b.get, &script.get));

  string_ptr text;
  size_t len = 0;
  check(ses_script_serialize(script.get, pick_format(format), &text.get, &len));
  std::string payload(text.get, len);
  if (format == "json") payload += '\n';
  write_output(output, payload);
  return ses_script_size(script.get) == 0 ? 0 : 1;
}

int run_distance(const pair_options& opts) {
  sequence_ptr a, b;
  tokenize_pair(opts, a, b);
  size_t value = 0;
  check(ses_distance(a.get, b.get, &value));
  std::printf("%zu\n", value);
  return 0;
}

// Short display label for a grid axis; index 0 is the empty prefix.
std::string cell_label(const ses_sequence* seq, std::size_t index) {
  if (index == 0) return "-";
  size_t len = 0;
  const char* text = ses_sequence_token(seq, index - 1, &len);
  std::string label;
  bool cut = false;
  for (std::size_t k = 0; k < len; ++k) {
    const unsigned char c = static_cast<unsigned char>(text[k]);
    if (label.size() >= 8 && (c & 0xC0) != 0x80) {
      cut = true;
      break;
    }
    if (c == '\n')
      label += "\\n";
    else if (c == '\t')
      label += "\\t";
    else if (c == '\r')
      label += "\\r";
    else
      label += static_cast<char>(c);
  }
  if (cut) label += "..";
  return label;
}

int run_matrix(const pair_options& opts, const std::string& format,
               std::size_t max_cells) {
  sequence_ptr a, b;
  tokenize_pair(opts, a, b);

  const std::size_t m = ses_sequence_size(a.get);
  const std::size_t n = ses_sequence_size(b.get);
  if (m * n > max_cells)
    throw cli_error{"the table would need " + std::to_string(m * n) +
                    " cells, the limit is " + std::to_string(max_cells) +
                    " (raise --max-cells)"};

  matrix_ptr matrix;
  check(ses_script_matrix(a.get, b.get, &matrix.get));
  const std::size_t rows = ses_matrix_rows(matrix.get);
  const std::size_t cols = ses_matrix_cols(matrix.get);

  std::vector<std::string> row_labels(rows), col_labels(cols);
  for (std::size_t i = 0; i < rows; ++i) row_labels[i] = cell_label(b.get, i);
  for (std::size_t j = 0; j < cols; ++j) col_labels[j] = cell_label(a.get, j);

  std::string out;
  auto grid = [&](const char* title, auto value_at) {
    std::vector<std::vector<std::string>> values(
        rows, std::vector<std::string>(cols));
    std::vector<std::size_t> widths(cols);
    for (std::size_t j = 0; j < cols; ++j) widths[j] = col_labels[j].size();
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        values[i][j] = std::to_string(value_at(i, j));
        widths[j] = std::max(widths[j], values[i][j].size());
      }
    }
    std::size_t row_width = 0;
    for (const std::string& label : row_labels)
      row_width = std::max(row_width, label.size());

    auto pad = [&](const std::string& text, std::size_t width) {
      out.append(width - text.size(), ' ');
      out += text;
    };
    out += title;
    out += ":\n";
    pad("", row_width);
    for (std::size_t j = 0; j < cols; ++j) {
      out += "  ";
      pad(col_labels[j], widths[j]);
    }
    out += '\n';
    for (std::size_t i = 0; i < rows; ++i) {
      pad(row_labels[i], row_width);
      for (std::size_t j = 0; j < cols; ++j) {
        out += "  ";
        pad(values[i][j], widths[j]);
      }
      out += '\n';
    }
  };

  grid("distances", [&](std::size_t i, std::size_t j) {
    size_t value = 0;
    check(ses_matrix_distance_at(matrix.get, i, j, &value));
    return value;
  });
  grid("script lengths", [&](std::size_t i, std::size_t j) {
    size_t value = 0;
    check(ses_matrix_script_length_at(matrix.get, i, j, &value));
    return value;
  });

  const ses_format fmt = pick_format(format);
  out += "scripts:\n";
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      size_t d = 0;
      check(ses_matrix_distance_at(matrix.get, i, j, &d));
      script_ptr cell;
      check(ses_matrix_script_at(matrix.get, i, j, &cell.get));
      string_ptr text;
      size_t text_len = 0;
      check(ses_script_serialize(cell.get, fmt, &text.get, &text_len));
      out += "cell (" + std::to_string(i) + ", " + std::to_string(j) +
             "): distance " + std::to_string(d) + "\n";
      out.append(text.get, text_len);
      if (text_len && out.back() != '\n') out += '\n';
    }
  }

  size_t total = 0;
  check(ses_matrix_total_instructions(matrix.get, &total));
  out += "total instructions: " + std::to_string(total) + "\n";
  std::fwrite(out.data(), 1, out.size(), stdout);

  size_t d = 0;
  check(ses_matrix_distance_at(matrix.get, rows - 1, cols - 1, &d));
  return d == 0 ? 0 : 1;
}

int run_apply(const std::string& script_arg, const std::string& source_arg,
              bool literal, const std::string& granularity,
              const std::string& format, bool inverted,
              const std::string& output) {
  bool stdin_taken = false;
  std::string script_text = load_input(script_arg, false, stdin_taken);
  std::string source_text = load_input(source_arg, literal, stdin_taken);

  script_ptr script;
  check(ses_script_parse(script_text.data(), script_text.size(),
                         pick_format(format), &script.get));
  if (inverted) {
    script_ptr flipped;
    check(ses_script_invert(script.get, &flipped.get));
    std::swap(script.get, flipped.get);
  }

  sequence_ptr source;
  ses_granularity gran = pick_granularity(granularity, literal);
  check(ses_tokenize(source_text.data(), source_text.size(), gran,
                     &source.get));

  sequence_ptr result;
  check(ses_script_apply(script.get, source.get, &result.get));

  string_ptr text;
  size_t len = 0;
  check(ses_detokenize(result.get, &text.get, &len));
  write_output(output, std::string(text.get, len));
  return 0;
}

int run_oracle_check(std::size_t max_len, std::size_t alphabet) {
  string_ptr summary;
  ses_status status = ses_oracle_check(max_len, alphabet, &summary.get);
  if (status != SES_OK && status != SES_ERROR_CHECK_FAILED)
    throw cli_error{ses_last_error()};

  if (status == SES_OK)
    std::printf("oracle-check: %s\n", summary.get);
  else
    std::printf("oracle-check: FAILED: %s\n", summary.get);

  string_ptr report;
  check(ses_tie_rule_search(max_len, alphabet, nullptr, &report.get));
  std::printf("%s\n", report.get);
  return status == SES_OK ? 0 : 1;
}

int run_bench(const std::vector<std::size_t>& sizes, std::size_t trials,
              const std::string& mode, const std::string& output) {
  string_ptr csv;
  if (mode == "space")
    check(ses_bench_space_measurement(sizes.data(), sizes.size(), &csv.get));
  else
    check(ses_bench_time_scaling(sizes.data(), sizes.size(), trials,
                                 &csv.get));
  write_output(output, csv.get);
  if (std::string_view{csv.get}.find("_exponent=") == std::string_view::npos)
    std::fprintf(stderr,
                 "ses: warning: too few usable sizes to fit a trend\n");
  return 0;
}

void add_pair_options(CLI::App* cmd, pair_options& opts) {
  cmd->add_option("source", opts.source,
                  "source file, or a literal with --string; - reads stdin")
      ->required();
  cmd->add_option("target", opts.target,
                  "target file, or a literal with --string; - reads stdin")
      ->required();
  cmd->add_flag("--string", opts.literal,
                "treat source and target as literal strings");
  cmd->add_option("--granularity", opts.granularity,
                  "token granularity (default: char for --string, line for "
                  "files)")
      ->check(CLI::IsMember({"char", "word", "line"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shortest edit script toolkit"};
  app.require_subcommand(1);

  pair_options diff_opts;
  std::string diff_format = "compact";
  std::string diff_algorithm = "cell-script";
  std::string diff_output;
  CLI::App* diff = app.add_subcommand("diff", "compute an edit script");
  add_pair_options(diff, diff_opts);
  diff->add_option("--format", diff_format, "output format")
      ->check(CLI::IsMember({"compact", "verbose", "json"}))
      ->capture_default_str();
  diff->add_option("--algorithm", diff_algorithm, "script extraction method")
      ->check(CLI::IsMember({"cell-script", "backtrace"}))
      ->capture_default_str();
  diff->add_option("--output", diff_output, "write the script here");

  std::string apply_script;
  std::string apply_source;
  bool apply_literal = false;
  std::string apply_granularity;
  std::string apply_format = "compact";
  std::string apply_output;
  CLI::App* apply = app.add_subcommand("apply", "apply an edit script");
  apply->add_option("script", apply_script, "script file; - reads stdin")
      ->required();
  apply->add_option("source", apply_source,
                    "source file, or a literal with --string; - reads stdin")
      ->required();
  apply->add_flag("--string", apply_literal,
                  "treat source as a literal string");
  apply->add_option("--granularity", apply_granularity,
                    "token granularity (default: char for --string, line "
                    "for files)")
      ->check(CLI::IsMember({"char", "word", "line"}));
  apply->add_option("--format", apply_format, "script format")
      ->check(CLI::IsMember({"compact", "json"}))
      ->capture_default_str();
  bool apply_inverted = false;
  apply->add_flag("--invert", apply_inverted,
                  "invert the script first, turning target back into source");
  apply->add_option("--output", apply_output, "write the result here");

  pair_options distance_opts;
  CLI::App* distance =
      app.add_subcommand("distance", "print the edit distance");
  add_pair_options(distance, distance_opts);

  pair_options matrix_opts;
  std::string matrix_format = "compact";
  std::size_t max_cells = 10000;
  CLI::App* matrix =
      app.add_subcommand("matrix", "print the distance and script tables");
  add_pair_options(matrix, matrix_opts);
  matrix->add_option("--format", matrix_format, "per-cell script format")
      ->check(CLI::IsMember({"compact", "verbose", "json"}))
      ->capture_default_str();
  matrix->add_option("--max-cells", max_cells,
                     "refuse tables with more cells than this")
      ->capture_default_str();

  std::size_t oracle_max_len = 3;
  std::size_t oracle_alphabet = 2;
  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "cross-check the dynamic program against brute force");
  oracle->add_option("--max-len", oracle_max_len, "maximum string length")
      ->check(CLI::Range(std::size_t{0}, std::size_t{4}))
      ->capture_default_str();
  oracle->add_option("--alphabet", oracle_alphabet, "alphabet size")
      ->check(CLI::Range(std::size_t{1}, std::size_t{3}))
      ->capture_default_str();

  std::vector<std::size_t> bench_sizes{64, 128, 256, 512};
  std::size_t bench_trials = 5;
  std::string bench_mode = "time";
  std::string bench_output;
  CLI::App* bench =
      app.add_subcommand("bench", "measure worst-case scaling");
  bench->add_option("--sizes", bench_sizes, "comma separated input sizes")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--trials", bench_trials, "trials per size")
      ->capture_default_str();
  bench->add_option("--mode", bench_mode, "what to measure")
      ->check(CLI::IsMember({"time", "space"}))
      ->capture_default_str();
  bench->add_option("--output", bench_output, "write the CSV here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*diff)
      return run_diff(diff_opts, diff_format, diff_algorithm, diff_output);
    if (*apply)
      return run_apply(apply_script, apply_source, apply_literal,
                       apply_granularity, apply_format, apply_inverted,
                       apply_output);
    if (*distance) return run_distance(distance_opts);
    if (*matrix) return run_matrix(matrix_opts, matrix_format, max_cells);
    if (*oracle) return run_oracle_check(oracle_max_len, oracle_alphabet);
    if (*bench)
      return run_bench(bench_sizes, bench_trials, bench_mode, bench_output);
  } catch (const cli_error& e) {
    std::fprintf(stderr, "ses: %s\n", e.message.c_str());
    return 2;
  }
  return 2;
}
