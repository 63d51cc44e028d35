#ifndef SES_ORACLE_HPP
#define SES_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "edit_script.hpp"
#include "token.hpp"

// Brute-force reference implementations, deliberately independent of the
// dynamic-programming code: they recurse over the textbook definition and
// enumerate scripts outright. Everything here is exponential and guarded
// to small inputs.
namespace ses::oracle {

/// Levenshtein distance by the plain recursive definition, no memoization.
/// Guard: both sequences at most 8 tokens.
std::size_t distance(const TokenSequence& source, const TokenSequence& target);

struct MinScriptsResult {
  std::size_t min_length = 0;
  std::size_t script_count = 0;  // distinct canonical scripts of min length
  EditScript witness;            // the first minimal script found
};

/// Enumerates every canonical edit script of length 0..max_len between the
/// sequences and reports the minimum length that converts source to target,
/// how many distinct scripts reach it, and one of them. Throws no_result if
/// no script within max_len works. Guards: both sequences and max_len at
/// most 5. A max_len of max(m, n) always suffices.
MinScriptsResult min_scripts(const TokenSequence& source,
                             const TokenSequence& target,
                             std::size_t max_len);

struct TieRuleWitness {
  std::string source;
  std::string target;
  std::size_t rule_distance = 0;  // distance the tie rule produces
  std::size_t true_distance = 0;
};

/// Searches for a pair of strings on which the unguarded tie rule (on a
/// mismatch, take the diagonal whenever the horizontal and vertical
/// predecessors are equal, without comparing the diagonal itself) yields
/// a non-minimal distance. Scans all pairs of strings over the first
/// `alphabet` letters with lengths up to max_len, in deterministic order,
/// and confirms any divergence against the recursive oracle.
/// Guards: max_len <= 6, 1 <= alphabet <= 3.
std::optional<TieRuleWitness> tie_rule_witness_search(std::size_t max_len,
                                                      std::size_t alphabet);

}  // namespace ses::oracle

#endif
