#ifndef SES_CORE_HPP
#define SES_CORE_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "edit_script.hpp"
#include "token.hpp"

namespace ses {

/// Levenshtein distance with unit costs, computed with two rolling rows.
std::size_t distance(const TokenSequence& source, const TokenSequence& target);

/// Full (target_len+1) x (source_len+1) distance table. Row i, column j
/// holds the distance between the first j source tokens and the first i
/// target tokens, so the bottom-right cell is the full distance.
class DistanceMatrix {
public:
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t at(std::size_t i, std::size_t j) const;
  std::size_t distance() const { return at(rows_ - 1, cols_ - 1); }

private:
  friend DistanceMatrix distance_matrix(const TokenSequence&,
                                        const TokenSequence&);
  std::size_t rows_ = 1;
  std::size_t cols_ = 1;
  std::vector<std::size_t> values_;
};

DistanceMatrix distance_matrix(const TokenSequence& source,
                               const TokenSequence& target);

namespace detail {

struct ScriptNode {
  EditOp op;
  std::shared_ptr<ScriptNode> prev;
};

/// A persistent op chain: appending shares the existing nodes, so every
/// matrix cell keeps its whole script in O(1) extra space and time.
struct SharedScript {
  std::shared_ptr<ScriptNode> tail;
  std::size_t length = 0;

  SharedScript appended(EditOp op) const {
    return {std::make_shared<ScriptNode>(ScriptNode{std::move(op), tail}),
            length + 1};
  }
};

void release_chain(std::shared_ptr<ScriptNode> node) noexcept;

}  // namespace detail

/// The script-in-cell table: every cell carries both the distance and a
/// shortest edit script for the corresponding prefix pair. Cell scripts
/// share structure internally; script_at materializes a standalone copy.
class ScriptMatrix {
public:
  ScriptMatrix() = default;
  ScriptMatrix(ScriptMatrix&&) noexcept = default;
  ScriptMatrix& operator=(ScriptMatrix&&) noexcept = default;
  ScriptMatrix(const ScriptMatrix&) = delete;
  ScriptMatrix& operator=(const ScriptMatrix&) = delete;
  ~ScriptMatrix();

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t distance_at(std::size_t i, std::size_t j) const;
  std::size_t script_length_at(std::size_t i, std::size_t j) const;
  EditScript script_at(std::size_t i, std::size_t j) const;

  std::size_t distance() const { return distance_at(rows_ - 1, cols_ - 1); }
  EditScript script() const { return script_at(rows_ - 1, cols_ - 1); }

  /// Sum of script lengths over all cells: the number of edit instructions
  /// the table stores, counting shared nodes once per cell that uses them.
  std::size_t total_instructions() const;

private:
  friend ScriptMatrix script_matrix(const TokenSequence&,
                                    const TokenSequence&);
  std::size_t index(std::size_t i, std::size_t j) const;
  std::size_t rows_ = 1;
  std::size_t cols_ = 1;
  std::vector<std::size_t> distances_;
  std::vector<detail::SharedScript> scripts_;
};

ScriptMatrix script_matrix(const TokenSequence& source,
                           const TokenSequence& target);

/// Shortest edit script read straight out of the script-in-cell table.
EditScript shortest_script(const TokenSequence& source,
                           const TokenSequence& target);

/// Shortest edit script recovered by walking a distance table backwards
/// from the bottom-right cell. Uses the same move preference as the
/// forward pass, so it reproduces shortest_script exactly.
EditScript backtrace_script(const TokenSequence& source,
                            const TokenSequence& target);

}  // namespace ses

#endif
