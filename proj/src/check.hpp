#ifndef SES_CHECK_HPP
#define SES_CHECK_HPP

#include <cstddef>
#include <string>

namespace ses {

struct AgreementReport {
  bool ok = true;
  std::size_t distance_pairs = 0;  // pairs whose distance was cross-checked
  std::size_t script_pairs = 0;    // pairs whose script length was checked
  std::string detail;              // first disagreement, empty when ok
};

/// Cross-validates the dynamic program against the brute-force oracle on
/// every pair of strings over the first `alphabet` letters with lengths up
/// to max_len: distances must agree, and where script enumeration is
/// feasible the cell script must have the minimal length and apply cleanly.
/// Guards: max_len <= 4, 1 <= alphabet <= 3.
AgreementReport check_oracle_agreement(std::size_t max_len,
                                       std::size_t alphabet);

}  // namespace ses

#endif
