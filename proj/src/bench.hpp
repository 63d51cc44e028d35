#ifndef SES_BENCH_HPP
#define SES_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "token.hpp"

namespace ses::bench {

/// A source/target pair of `size` word tokens with nothing in common, so
/// every inner cell of the table takes the mismatch path and the distance
/// equals `size`.
std::pair<TokenSequence, TokenSequence> worst_case_pair(std::size_t size);

struct BenchRow {
  std::size_t size = 0;
  std::size_t trial = 0;
  std::uint64_t wall_time_ns = 0;
  std::size_t total_instructions = 0;
  std::size_t peak_logical_cells = 0;  // (m+1)*(n+1) cells held at once
};

struct BenchReport {
  std::string mode;                 // "time" or "space"
  std::vector<BenchRow> rows;
  std::vector<std::size_t> kept;    // sizes that enter the fits
  std::vector<std::size_t> dropped; // sizes whose median ran under 1us
  std::optional<double> time_exponent;        // log-log slope of median time
  std::optional<double> instruction_exponent; // log-log slope of totals
  std::optional<double> last_pair_ratio;      // median(time) largest / next
  bool per_cell_bound_ok = true;    // script length <= max(i, j) in every cell
  std::size_t max_script_len = 0;   // longest per-cell script seen

  /// CSV rows under a `size,trial,wall_time_ns,total_instructions` header,
  /// followed by `# key=value` summary comments.
  std::string to_csv() const;
};

/// Times the script-in-cell fill on worst-case pairs of the given sizes,
/// several trials each. Sizes are deduplicated and sorted; each must be
/// between 1 and 1024, and at least 3 trials are required.
BenchReport run_time_scaling(std::vector<std::size_t> sizes,
                             std::size_t trials);

/// Counts the edit instructions the table stores for worst-case pairs of
/// the given sizes (one trial each) and fits their growth exponent.
/// Sizes must be between 1 and 512.
BenchReport run_space_measurement(std::vector<std::size_t> sizes);

}  // namespace ses::bench

#endif
