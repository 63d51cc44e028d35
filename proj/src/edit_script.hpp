#ifndef SES_EDIT_SCRIPT_HPP
#define SES_EDIT_SCRIPT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "token.hpp"

namespace ses {

/// One edit instruction with coordinates in both frames.
///
/// Positions always refer to the ORIGINAL source and target sequences,
/// never to intermediate states during application:
///   - source_pos indexes the source; for Insert it is the source boundary
///     before which the new token goes, and may equal the source length.
///   - target_pos indexes the target; for Delete it is the target index at
///     which the deletion point falls, and may equal the target length.
struct EditOp {
  enum class Kind { Insert, Delete, Substitute };

  Kind kind = Kind::Insert;
  std::size_t source_pos = 0;
  std::size_t target_pos = 0;
  std::optional<Token> old_token;  // absent for Insert
  std::optional<Token> new_token;  // absent for Delete

  static EditOp insertion(std::size_t source_pos, std::size_t target_pos,
                          Token new_token);
  static EditOp deletion(std::size_t source_pos, std::size_t target_pos,
                         Token old_token);
  static EditOp substitution(std::size_t source_pos, std::size_t target_pos,
                             Token old_token, Token new_token);

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

std::string_view kind_name(EditOp::Kind kind);

/// An ordered list of edit operations between declared endpoints.
///
/// Canonical invariants, enforced on construction:
///   - ops sorted non-decreasing by (source_pos, target_pos);
///   - at most one Delete/Substitute consumes any source position;
///   - at most one Insert/Substitute populates any target position;
///   - insert count minus delete count equals target_len - source_len;
///   - positions lie within the declared endpoints.
class EditScript {
public:
  EditScript() = default;

  /// Validates ops that are already in canonical order.
  static EditScript from_sorted(std::vector<EditOp> ops,
                                std::size_t source_len,
                                std::size_t target_len);

  /// Sorts an unordered op list into canonical order, then validates.
  /// Conflicting ops (two consumers of one source position, two producers
  /// of one target position) are rejected.
  static EditScript canonicalize(std::vector<EditOp> ops,
                                 std::size_t source_len,
                                 std::size_t target_len);

  const std::vector<EditOp>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }
  std::size_t source_len() const noexcept { return source_len_; }
  std::size_t target_len() const noexcept { return target_len_; }

  friend bool operator==(const EditScript&, const EditScript&) = default;

private:
  std::vector<EditOp> ops_;
  std::size_t source_len_ = 0;
  std::size_t target_len_ = 0;
};

/// Total order used for canonical scripts: (source_pos, target_pos), then
/// Delete < Substitute < Insert, then token text.
bool canonical_less(const EditOp& a, const EditOp& b);

/// Applies `script` to `source` in a single left-to-right pass: tokens not
/// named by any op are copied, deleted tokens are skipped, substituted
/// tokens are replaced, inserted tokens are emitted at their source
/// boundaries. Old tokens are validated against the source; a mismatch
/// reports the op index, the position and both tokens.
TokenSequence apply(const EditScript& script, const TokenSequence& source);

/// Swaps the direction of a script: inserts become deletes and vice versa
/// (source_pos and target_pos swap roles), substitutions swap old and new,
/// and the endpoints swap. The result is canonical.
EditScript invert(const EditScript& script);

enum class Format { compact, verbose, json };

/// Serialized script representations.
///
/// compact: one op per line, LF terminated
///     @ <source_len> <target_len>
///     +<source_pos>,<target_pos>:<new>
///     -<source_pos>,<target_pos>:<old>
///     ~<source_pos>,<target_pos>:<old>><new>
///   Token text percent-encodes '%', ':', '>', ',', LF and CR as %XX.
///
/// verbose: English phrasing, one op per line (emit only)
///     At position <target_pos> add <token>
///     At position <source_pos> delete <token>
///     At position <source_pos> substitute <old> with <new>
///
/// json: {"source_len": m, "target_len": n, "ops": [{"kind", "source_pos",
///   "target_pos", "old"?, "new"?}, ...]}
std::string serialize(const EditScript& script, Format format);

/// Inverse of serialize for the compact and json formats; parsing the
/// verbose format is not supported. Malformed compact input is reported
/// with its line number.
EditScript parse(std::string_view text, Format format);

std::string_view format_name(Format format);
std::optional<Format> format_from_name(std::string_view name);

}  // namespace ses

#endif
