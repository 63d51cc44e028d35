#include "oracle.hpp"

#include <algorithm>
#include <vector>

#include "error.hpp"

namespace ses::oracle {

namespace {

constexpr std::size_t distance_guard = 8;
constexpr std::size_t scripts_guard = 5;

void check_guard(const TokenSequence& a, const TokenSequence& b,
                 std::size_t limit, const char* what) {
  if (a.granularity() != b.granularity())
    throw Error(ErrorCode::granularity_mismatch,
                "sequences have different granularities");
  if (a.size() > limit || b.size() > limit)
    throw Error(ErrorCode::guard,
                std::string(what) + " is limited to sequences of at most " +
                    std::to_string(limit) + " tokens");
}

std::size_t distance_rec(const TokenSequence& a, const TokenSequence& b,
                         std::size_t s, std::size_t p) {
  if (s == a.size()) return b.size() - p;
  if (p == b.size()) return a.size() - s;
  if (a[s] == b[p]) return distance_rec(a, b, s + 1, p + 1);
  std::size_t replace = distance_rec(a, b, s + 1, p + 1);
  std::size_t erase = distance_rec(a, b, s + 1, p);
  std::size_t add = distance_rec(a, b, s, p + 1);
  return 1 + std::min({replace, erase, add});
}

struct ScriptSearch {
  const TokenSequence& a;
  const TokenSequence& b;
  std::size_t max_len;
  std::vector<EditOp> current;
  std::size_t best;  // max_len + 1 until a script within the cap completes
  std::size_t count = 0;
  std::vector<EditOp> witness;

  // Every op sequence this walk emits has strictly increasing
  // (source_pos, target_pos) pairs, so each distinct canonical script is
  // produced exactly once.
  void walk(std::size_t s, std::size_t p) {
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    const std::size_t left_s = m - s;
    const std::size_t left_p = n - p;
    const std::size_t floor =
        left_s > left_p ? left_s - left_p : left_p - left_s;
    if (current.size() + floor > best) return;

    if (s == m && p == n) {
      if (current.size() > max_len) return;
      if (current.size() < best) {
        best = current.size();
        count = 1;
        witness = current;
      } else if (current.size() == best) {
        ++count;
      }
      return;
    }

    if (s < m && p < n && a[s] == b[p]) {
      walk(s + 1, p + 1);
    }
    if (s < m && p < n && a[s] != b[p]) {
      current.push_back(EditOp::substitution(s, p, a[s], b[p]));
      walk(s + 1, p + 1);
      current.pop_back();
    }
    if (s < m) {
      current.push_back(EditOp::deletion(s, p, a[s]));
      walk(s + 1, p);
      current.pop_back();
    }
    if (p < n) {
      current.push_back(EditOp::insertion(s, p, b[p]));
      walk(s, p + 1);
      current.pop_back();
    }
  }
};

}  // namespace

std::size_t distance(const TokenSequence& source, const TokenSequence& target) {
  check_guard(source, target, distance_guard, "the recursive oracle");
  return distance_rec(source, target, 0, 0);
}

MinScriptsResult min_scripts(const TokenSequence& source,
                             const TokenSequence& target,
                             std::size_t max_len) {
  check_guard(source, target, scripts_guard, "script enumeration");
  if (max_len > scripts_guard)
    throw Error(ErrorCode::guard,
                "script enumeration is limited to max_len of at most " +
                    std::to_string(scripts_guard));
  ScriptSearch search{source, target, max_len, {}, max_len + 1, 0, {}};
  search.walk(0, 0);
  if (search.best > max_len)
    throw Error(ErrorCode::no_result,
                "no canonical script of length at most " +
                    std::to_string(max_len) +
                    " converts the source into the target");
  MinScriptsResult result;
  result.min_length = search.best;
  result.script_count = search.count;
  result.witness = EditScript::from_sorted(std::move(search.witness),
                                           source.size(), target.size());
  return result;
}

namespace {

// Both helpers work on raw strings so the probe stays self-contained.

std::size_t reference_distance(const std::string& a, const std::string& b) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  std::vector<std::size_t> grid((n + 1) * (m + 1));
  auto d = [&](std::size_t i, std::size_t j) -> std::size_t& {
    return grid[i * (m + 1) + j];
  };
  for (std::size_t j = 0; j <= m; ++j) d(0, j) = j;
  for (std::size_t i = 1; i <= n; ++i) {
    d(i, 0) = i;
    for (std::size_t j = 1; j <= m; ++j) {
      if (a[j - 1] == b[i - 1])
        d(i, j) = d(i - 1, j - 1);
      else
        d(i, j) = 1 + std::min({d(i - 1, j - 1), d(i, j - 1), d(i - 1, j)});
    }
  }
  return d(n, m);
}

std::size_t tie_rule_distance(const std::string& a, const std::string& b) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  std::vector<std::size_t> grid((n + 1) * (m + 1));
  auto d = [&](std::size_t i, std::size_t j) -> std::size_t& {
    return grid[i * (m + 1) + j];
  };
  for (std::size_t j = 0; j <= m; ++j) d(0, j) = j;
  for (std::size_t i = 1; i <= n; ++i) {
    d(i, 0) = i;
    for (std::size_t j = 1; j <= m; ++j) {
      if (a[j - 1] == b[i - 1]) {
        d(i, j) = d(i - 1, j - 1);
      } else if (d(i - 1, j) == d(i, j - 1)) {
        // The rule under test: equal predecessors send the cell to the
        // diagonal without checking whether the diagonal is smaller.
        d(i, j) = d(i - 1, j - 1) + 1;
      } else {
        d(i, j) = std::min(d(i - 1, j), d(i, j - 1)) + 1;
      }
    }
  }
  return d(n, m);
}

void enumerate_strings(std::size_t max_len, std::size_t alphabet,
                       std::vector<std::string>& out) {
  out.push_back("");
  std::size_t start = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t k = start; k < end; ++k)
      for (std::size_t c = 0; c < alphabet; ++c)
        out.push_back(out[k] + static_cast<char>('a' + c));
    start = end;
  }
}

}  // namespace

std::optional<TieRuleWitness> tie_rule_witness_search(std::size_t max_len,
                                                      std::size_t alphabet) {
  if (max_len > 6)
    throw Error(ErrorCode::guard,
                "the tie rule probe is limited to lengths of at most 6");
  if (alphabet < 1 || alphabet > 3)
    throw Error(ErrorCode::guard,
                "the tie rule probe needs an alphabet of 1 to 3 letters");

  std::vector<std::string> strings;
  enumerate_strings(max_len, alphabet, strings);

  for (const std::string& a : strings) {
    for (const std::string& b : strings) {
      std::size_t ruled = tie_rule_distance(a, b);
      if (ruled == reference_distance(a, b)) continue;
      std::size_t truth = distance(tokenize(a, Granularity::character),
                                   tokenize(b, Granularity::character));
      return TieRuleWitness{a, b, ruled, truth};
    }
  }
  return std::nullopt;
}

}  // namespace ses::oracle
