#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "core.hpp"
#include "error.hpp"

namespace ses::bench {

namespace {

constexpr std::uint64_t drop_threshold_ns = 1000;

std::vector<std::size_t> clean_sizes(std::vector<std::size_t> sizes,
                                     std::size_t limit) {
  if (sizes.empty())
    throw Error(ErrorCode::invalid_argument, "no sizes given");
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes.front() < 1 || sizes.back() > limit)
    throw Error(ErrorCode::invalid_argument,
                "sizes must lie between 1 and " + std::to_string(limit));
  return sizes;
}

double median(std::vector<std::uint64_t> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return static_cast<double>(values[mid]);
  return (static_cast<double>(values[mid - 1]) +
          static_cast<double>(values[mid])) /
         2.0;
}

std::optional<double> log_log_slope(const std::vector<double>& x,
                                    const std::vector<double>& y) {
  if (x.size() < 2) return std::nullopt;
  double sx = 0, sy = 0;
  std::vector<double> lx(x.size()), ly(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
    sx += lx[i];
    sy += ly[i];
  }
  const double mx = sx / static_cast<double>(x.size());
  const double my = sy / static_cast<double>(x.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  if (den == 0) return std::nullopt;
  return num / den;
}

struct CellScan {
  bool within_bound = true;
  std::size_t max_len = 0;
};

CellScan scan_cells(const ScriptMatrix& matrix) {
  CellScan scan;
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      const std::size_t len = matrix.script_length_at(i, j);
      scan.max_len = std::max(scan.max_len, len);
      if (len > std::max(i, j)) scan.within_bound = false;
    }
  }
  return scan;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

std::string join_sizes(const std::vector<std::size_t>& sizes) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes[i]);
  }
  return out;
}

}  // namespace

std::pair<TokenSequence, TokenSequence> worst_case_pair(std::size_t size) {
  std::vector<Token> source;
  std::vector<Token> target;
  source.reserve(size);
  target.reserve(size);
  for (std::size_t k = 0; k < size; ++k) {
    source.push_back(Token{"s" + std::to_string(k)});
    target.push_back(Token{"t" + std::to_string(k)});
  }
  return {TokenSequence::from_tokens(std::move(source), Granularity::word),
          TokenSequence::from_tokens(std::move(target), Granularity::word)};
}

BenchReport run_time_scaling(std::vector<std::size_t> sizes,
                             std::size_t trials) {
  sizes = clean_sizes(std::move(sizes), 1024);
  if (trials < 3)
    throw Error(ErrorCode::invalid_argument, "need at least 3 trials");

  BenchReport report;
  report.mode = "time";
  std::vector<double> kept_sizes_f;
  std::vector<double> kept_medians;
  std::vector<double> all_sizes_f;
  std::vector<double> totals_f;

  for (std::size_t size : sizes) {
    auto [source, target] = worst_case_pair(size);
    std::vector<std::uint64_t> times;
    std::size_t total = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
      const auto t0 = std::chrono::steady_clock::now();
      ScriptMatrix matrix = script_matrix(source, target);
      const auto t1 = std::chrono::steady_clock::now();
      const auto ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
              .count();
      times.push_back(static_cast<std::uint64_t>(ns));
      total = matrix.total_instructions();
      const CellScan scan = scan_cells(matrix);
      if (!scan.within_bound) report.per_cell_bound_ok = false;
      report.max_script_len = std::max(report.max_script_len, scan.max_len);
      report.rows.push_back({size, trial, static_cast<std::uint64_t>(ns),
                             total, matrix.rows() * matrix.cols()});
    }
    const double med = median(times);
    all_sizes_f.push_back(static_cast<double>(size));
    totals_f.push_back(static_cast<double>(total));
    if (med < static_cast<double>(drop_threshold_ns)) {
      report.dropped.push_back(size);
    } else {
      report.kept.push_back(size);
      kept_sizes_f.push_back(static_cast<double>(size));
      kept_medians.push_back(med);
    }
  }

  report.time_exponent = log_log_slope(kept_sizes_f, kept_medians);
  report.instruction_exponent = log_log_slope(all_sizes_f, totals_f);
  if (kept_medians.size() >= 2)
    report.last_pair_ratio =
        kept_medians.back() / kept_medians[kept_medians.size() - 2];
  return report;
}

BenchReport run_space_measurement(std::vector<std::size_t> sizes) {
  sizes = clean_sizes(std::move(sizes), 512);

  BenchReport report;
  report.mode = "space";
  std::vector<double> sizes_f;
  std::vector<double> totals_f;

  for (std::size_t size : sizes) {
    auto [source, target] = worst_case_pair(size);
    const auto t0 = std::chrono::steady_clock::now();
    ScriptMatrix matrix = script_matrix(source, target);
    const auto t1 = std::chrono::steady_clock::now();
    const auto ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    const std::size_t total = matrix.total_instructions();
    const CellScan scan = scan_cells(matrix);
    if (!scan.within_bound) report.per_cell_bound_ok = false;
    report.max_script_len = std::max(report.max_script_len, scan.max_len);
    report.rows.push_back({size, 0, static_cast<std::uint64_t>(ns), total,
                           matrix.rows() * matrix.cols()});
    report.kept.push_back(size);
    sizes_f.push_back(static_cast<double>(size));
    totals_f.push_back(static_cast<double>(total));
  }

  report.instruction_exponent = log_log_slope(sizes_f, totals_f);
  return report;
}

std::string BenchReport::to_csv() const {
  std::string out = "size,trial,wall_time_ns,total_instructions\n";
  for (const BenchRow& row : rows) {
    out += std::to_string(row.size) + "," + std::to_string(row.trial) + "," +
           std::to_string(row.wall_time_ns) + "," +
           std::to_string(row.total_instructions) + "\n";
  }
  out += "# mode=" + mode + "\n";
  out += "# kept_sizes=" + join_sizes(kept) + "\n";
  out += "# dropped_sizes=" + join_sizes(dropped) + "\n";
  if (time_exponent)
    out += "# time_exponent=" + format_double(*time_exponent) + "\n";
  if (instruction_exponent)
    out += "# instruction_exponent=" + format_double(*instruction_exponent) +
           "\n";
  if (last_pair_ratio)
    out += "# last_pair_ratio=" + format_double(*last_pair_ratio) + "\n";
  out += std::string("# per_cell_bound_ok=") +
         (per_cell_bound_ok ? "true" : "false") + "\n";
  out += "# max_script_len=" + std::to_string(max_script_len) + "\n";
  return out;
}

}  // namespace ses::bench
