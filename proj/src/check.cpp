#include "check.hpp"

#include <algorithm>
#include <vector>

#include "core.hpp"
#include "edit_script.hpp"
#include "error.hpp"
#include "oracle.hpp"
#include "token.hpp"

namespace ses {

namespace {

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

std::string pair_label(const std::string& a, const std::string& b) {
  return "\"" + a + "\" -> \"" + b + "\"";
}

}  // namespace

AgreementReport check_oracle_agreement(std::size_t max_len,
                                       std::size_t alphabet) {
  if (max_len > 4)
    throw Error(ErrorCode::guard,
                "agreement checking is limited to lengths of at most 4");
  if (alphabet < 1 || alphabet > 3)
    throw Error(ErrorCode::guard,
                "agreement checking needs an alphabet of 1 to 3 letters");

  std::vector<std::string> strings;
  enumerate_strings(max_len, alphabet, strings);

  AgreementReport report;
  for (const std::string& sa : strings) {
    for (const std::string& sb : strings) {
      TokenSequence a = tokenize(sa, Granularity::character);
      TokenSequence b = tokenize(sb, Granularity::character);

      std::size_t dp = distance(a, b);
      std::size_t ref = oracle::distance(a, b);
      ++report.distance_pairs;
      if (dp != ref) {
        report.ok = false;
        report.detail = pair_label(sa, sb) + ": distance " +
                        std::to_string(dp) + ", oracle says " +
                        std::to_string(ref);
        return report;
      }

      EditScript script = shortest_script(a, b);
      oracle::MinScriptsResult minimal =
          oracle::min_scripts(a, b, std::max(a.size(), b.size()));
      ++report.script_pairs;
      if (script.size() != minimal.min_length) {
        report.ok = false;
        report.detail = pair_label(sa, sb) + ": script has " +
                        std::to_string(script.size()) + " ops, minimum is " +
                        std::to_string(minimal.min_length);
        return report;
      }
      if (apply(script, a) != b) {
        report.ok = false;
        report.detail = pair_label(sa, sb) + ": script does not reach the target";
        return report;
      }
    }
  }
  return report;
}

}  // namespace ses
