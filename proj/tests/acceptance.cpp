// Acceptance gate: one check per release criterion, each printed as a
// single PASS/FAIL line. Exits nonzero if any criterion fails or runs
// past its wall-clock budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "check.hpp"
#include "core.hpp"
#include "edit_script.hpp"
#include "oracle.hpp"
#include "token.hpp"

namespace {

std::mt19937 rng(20260817u);

// Set by a criterion body; printed right after its PASS/FAIL line.
std::string post_line_note;

std::string random_string(std::size_t max_len, int alphabet) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> char_dist(0, alphabet - 1);
  std::string text;
  const std::size_t len = len_dist(rng);
  for (std::size_t i = 0; i < len; ++i)
    text.push_back(static_cast<char>('a' + char_dist(rng)));
  return text;
}

ses::TokenSequence chars(const std::string& text) {
  return ses::tokenize(text, ses::Granularity::character);
}

ses::TokenSequence random_sequence(const std::vector<std::string>& pool,
                                   std::size_t max_len,
                                   ses::Granularity granularity) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<ses::Token> tokens;
  const std::size_t len = len_dist(rng);
  for (std::size_t i = 0; i < len; ++i) tokens.push_back({pool[pick(rng)]});
  return ses::TokenSequence::from_tokens(std::move(tokens), granularity);
}

bool worked_example(std::string& detail) {
  const ses::TokenSequence source = chars("abac");
  const ses::TokenSequence target = chars("aabc");
  const ses::ScriptMatrix matrix = ses::script_matrix(source, target);
  const std::size_t want[5][5] = {{0, 1, 2, 3, 4},
                                  {1, 0, 1, 2, 3},
                                  {2, 1, 1, 1, 2},
                                  {3, 2, 1, 2, 2},
                                  {4, 3, 2, 2, 2}};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      if (matrix.distance_at(i, j) != want[i][j]) {
        std::ostringstream msg;
        msg << "cell (" << i << ", " << j << ") holds "
            << matrix.distance_at(i, j) << ", expected " << want[i][j];
        detail = msg.str();
        return false;
      }
      if (matrix.script_length_at(i, j) != want[i][j]) {
        detail = "a cell's script length disagrees with its distance";
        return false;
      }
    }
  }
  const ses::EditScript script = matrix.script();
  if (script.size() != 2) {
    detail = "final script should hold 2 ops, holds " +
             std::to_string(script.size());
    return false;
  }
  if (!(ses::apply(script, source) == target)) {
    detail = "final script does not patch the source into the target";
    return false;
  }
  detail = "all 25 cells match; final script has 2 ops and patches abac";
  return true;
}

bool disjoint_worst_case(std::string& detail) {
  const ses::TokenSequence source = chars("abcd");
  const ses::TokenSequence target = chars("efgh");
  const ses::DistanceMatrix plain = ses::distance_matrix(source, target);
  for (std::size_t j = 0; j < plain.cols(); ++j) {
    if (plain.at(plain.rows() - 1, j) != 4) {
      detail = "distance matrix bottom row is not 4,4,4,4,4";
      return false;
    }
  }
  const ses::ScriptMatrix matrix = ses::script_matrix(source, target);
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      const std::size_t expect = std::max(i, j);
      if (matrix.distance_at(i, j) != expect) {
        detail = "disjoint-alphabet cell distance is not max(i, j)";
        return false;
      }
      if (matrix.script_length_at(i, j) > expect) {
        detail = "a cell stores more than max(i, j) instructions";
        return false;
      }
    }
  }
  if (matrix.distance() != 4) {
    detail = "corner distance should be 4";
    return false;
  }
  detail = "every cell holds max(i, j) and respects the per-cell bound";
  return true;
}

bool oracle_agreement(std::string& detail) {
  const ses::AgreementReport report = ses::check_oracle_agreement(3, 2);
  if (!report.ok) {
    detail = "exhaustive sweep: " + report.detail;
    return false;
  }
  std::size_t random_distance = 0;
  for (int k = 0; k < 200; ++k) {
    const ses::TokenSequence a = chars(random_string(6, 3));
    const ses::TokenSequence b = chars(random_string(6, 3));
    if (ses::distance(a, b) != ses::oracle::distance(a, b)) {
      detail = "random pair disagrees with the recursive oracle";
      return false;
    }
    ++random_distance;
  }
  std::size_t random_minimal = 0;
  for (int k = 0; k < 200; ++k) {
    const ses::TokenSequence a = chars(random_string(5, 3));
    const ses::TokenSequence b = chars(random_string(5, 3));
    const ses::EditScript script = ses::shortest_script(a, b);
    const std::size_t cap = std::max(a.size(), b.size());
    if (script.size() != ses::oracle::min_scripts(a, b, cap).min_length) {
      detail = "random pair produced a non-minimal script";
      return false;
    }
    ++random_minimal;
  }
  std::ostringstream msg;
  msg << report.distance_pairs << " exhaustive pairs, " << random_distance
      << " random distance pairs, " << random_minimal
      << " random minimality pairs agree";
  detail = msg.str();
  return true;
}

bool script_properties(std::string& detail) {
  for (int k = 0; k < 1000; ++k) {
    const ses::TokenSequence a = chars(random_string(12, 4));
    const ses::TokenSequence b = chars(random_string(12, 4));
    const std::size_t dist = ses::distance(a, b);
    const ses::EditScript script = ses::shortest_script(a, b);
    if (script.size() != dist) {
      detail = "script length differs from the distance";
      return false;
    }
    if (!(ses::apply(script, a) == b)) {
      detail = "script does not reach the target";
      return false;
    }
    if (!(ses::apply(ses::invert(script), b) == a)) {
      detail = "inverted script does not restore the source";
      return false;
    }
    if (ses::backtrace_script(a, b).size() != dist) {
      detail = "backtrace finds a script of a different length";
      return false;
    }
  }
  for (int k = 0; k < 300; ++k) {
    const ses::TokenSequence a = chars(random_string(10, 3));
    const ses::TokenSequence b = chars(random_string(10, 3));
    const ses::TokenSequence c = chars(random_string(10, 3));
    const std::size_t ab = ses::distance(a, b);
    const std::size_t ba = ses::distance(b, a);
    const std::size_t bc = ses::distance(b, c);
    const std::size_t ac = ses::distance(a, c);
    if (ses::distance(a, a) != 0) {
      detail = "distance to self is not zero";
      return false;
    }
    if ((ab == 0) != (a == b)) {
      detail = "zero distance does not coincide with equality";
      return false;
    }
    if (ab != ba) {
      detail = "distance is not symmetric";
      return false;
    }
    if (ac > ab + bc) {
      detail = "triangle inequality violated";
      return false;
    }
  }
  detail = "1000 random scripts are minimal, reach the target and invert; "
           "300 triples satisfy the metric axioms";
  return true;
}

bool time_scaling(std::string& detail) {
  const ses::bench::BenchReport report =
      ses::bench::run_time_scaling({64, 128, 256, 512}, 5);
  if (!report.last_pair_ratio || !report.time_exponent) {
    detail = "too few sizes survived the 1us floor to fit a trend";
    return false;
  }
  const double ratio = *report.last_pair_ratio;
  const double exponent = *report.time_exponent;
  std::ostringstream msg;
  msg << "doubling ratio " << ratio << ", fitted exponent " << exponent;
  detail = msg.str();
  if (ratio < 3.2 || ratio > 5.0) {
    detail += " (ratio outside [3.2, 5.0])";
    return false;
  }
  if (exponent < 1.8 || exponent > 2.3) {
    detail += " (exponent outside [1.8, 2.3])";
    return false;
  }
  return true;
}

bool space_growth(std::string& detail) {
  const ses::bench::BenchReport report = ses::bench::run_space_measurement({8, 16, 32, 64});
  const std::size_t want[4] = {444, 3128, 23408, 180960};
  if (report.rows.size() != 4) {
    detail = "expected one row per size";
    return false;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (report.rows[i].total_instructions != want[i]) {
      std::ostringstream msg;
      msg << "size " << report.rows[i].size << " stores "
          << report.rows[i].total_instructions << " instructions, expected "
          << want[i];
      detail = msg.str();
      return false;
    }
  }
  if (!report.instruction_exponent) {
    detail = "no growth exponent was fitted";
    return false;
  }
  std::ostringstream msg;
  msg << "stored instruction totals match n(n+1)(2n+1)/3 + n(n+1)/2 "
         "exactly; fitted exponent "
      << *report.instruction_exponent;
  detail = msg.str();
  char note[512];
  std::snprintf(
      note, sizeof note,
      "  finding: a table that keeps a full edit script in every cell "
      "stores sum(max(i, j)) instructions, which the fit puts near n^3 "
      "(exponent %.2f), not n^2. The quadratic figure only describes the "
      "cell count. Resident memory can still stay quadratic if cells share "
      "their predecessor chains, since then each cell adds a single node, "
      "but the logical instruction count remains cubic either way.",
      *report.instruction_exponent);
  post_line_note = note;
  return *report.instruction_exponent > 2.5 &&
         *report.instruction_exponent < 3.1;
}

bool serialization_round_trip(std::string& detail) {
  const std::vector<std::string> word_pool = {
      "a", ":", ">>", ",x", "%3A", "b:c>d", "%%", "x,y,z", "\xC3\xA9"};
  const std::vector<std::string> line_pool = {
      "a\n", ":\n", ">,>\n", "%0A\n", "x,y:z\n", "plain\n"};
  std::size_t scripts = 0;
  for (int k = 0; k < 250; ++k) {
    for (const bool words : {true, false}) {
      const auto& pool = words ? word_pool : line_pool;
      const ses::Granularity granularity =
          words ? ses::Granularity::word : ses::Granularity::line;
      const ses::TokenSequence a = random_sequence(pool, 12, granularity);
      const ses::TokenSequence b = random_sequence(pool, 12, granularity);
      const ses::EditScript script = ses::shortest_script(a, b);
      for (const ses::Format format :
           {ses::Format::compact, ses::Format::json}) {
        const std::string text = ses::serialize(script, format);
        if (!(ses::parse(text, format) == script)) {
          detail = "round trip changed a script in the " +
                   std::string(ses::format_name(format)) + " format";
          return false;
        }
      }
      ++scripts;
    }
  }
  detail = std::to_string(scripts) +
           " fuzzed scripts survive compact and json round trips";
  return true;
}

// The criterion is that the probe completes and its outcome is logged,
// whichever way the open question falls.
bool tie_rule_probe(std::string& detail) {
  const std::optional<ses::oracle::TieRuleWitness> witness =
      ses::oracle::tie_rule_witness_search(4, 3);
  if (!witness) {
    detail = "none found in scope (lengths <= 4, alphabet 3); the "
             "unguarded tie rule held on every pair";
    return true;
  }
  if (witness->rule_distance <= witness->true_distance) {
    detail = "witness does not actually overshoot the true distance";
    return false;
  }
  std::ostringstream msg;
  msg << "counterexample: resolving ties toward the diagonal without "
         "comparing it overshoots on \""
      << witness->source << "\" -> \"" << witness->target << "\", which "
         "comes out "
      << witness->rule_distance << " against a true distance of "
      << witness->true_distance << "; the guarded rule is required";
  detail = msg.str();
  return true;
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<bool(std::string&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked example matrix", 1.0, worked_example},
      {2, "disjoint-alphabet worst case", 1.0, disjoint_worst_case},
      {3, "oracle agreement", 60.0, oracle_agreement},
      {4, "script properties and metric axioms", 60.0, script_properties},
      {5, "time scaling", 300.0, time_scaling},
      {6, "stored-instruction growth", 60.0, space_growth},
      {7, "serialization round trips", 10.0, serialization_round_trip},
      {8, "tie rule probe", 300.0, tie_rule_probe},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.body(detail);
    } catch (const std::exception& error) {
      detail = std::string("threw: ") + error.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    if (ok && elapsed > criterion.budget_seconds) {
      ok = false;
      detail += " (exceeded the time budget)";
    }
    std::printf("%s criterion %d: %s - %s [%.2fs]\n", ok ? "PASS" : "FAIL",
                criterion.number, criterion.name, detail.c_str(), elapsed);
    if (!post_line_note.empty()) {
      std::printf("%s\n", post_line_note.c_str());
      post_line_note.clear();
    }
    if (!ok) ++failed;
  }
  if (failed) {
    std::printf("%d criterion(s) failed\n", failed);
    return 1;
  }
  std::puts("all criteria passed");
  return 0;
}
