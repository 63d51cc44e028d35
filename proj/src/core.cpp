#include "core.hpp"

#include <algorithm>
#include <utility>

#include "error.hpp"

namespace ses {

namespace {

void check_pair(const TokenSequence& source, const TokenSequence& target) {
  if (source.granularity() != target.granularity())
    throw Error(ErrorCode::granularity_mismatch,
                std::string("cannot diff ") +
                    std::string(granularity_name(source.granularity())) +
                    " tokens against " +
                    std::string(granularity_name(target.granularity())) +
                    " tokens");
}

}  // namespace

std::size_t distance(const TokenSequence& source,
                     const TokenSequence& target) {
  check_pair(source, target);
  const std::size_t m = source.size();
  const std::size_t n = target.size();
  std::vector<std::size_t> prev(m + 1);
  std::vector<std::size_t> cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      if (source[j - 1] == target[i - 1]) {
        cur[j] = prev[j - 1];
      } else {
        cur[j] = 1 + std::min({prev[j - 1], cur[j - 1], prev[j]});
      }
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

std::size_t DistanceMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw Error(ErrorCode::invalid_argument, "matrix index out of range");
  return values_[i * cols_ + j];
}

DistanceMatrix distance_matrix(const TokenSequence& source,
                               const TokenSequence& target) {
  check_pair(source, target);
  const std::size_t m = source.size();
  const std::size_t n = target.size();
  DistanceMatrix dm;
  dm.rows_ = n + 1;
  dm.cols_ = m + 1;
  dm.values_.assign(dm.rows_ * dm.cols_, 0);
  auto cell = [&](std::size_t i, std::size_t j) -> std::size_t& {
    return dm.values_[i * dm.cols_ + j];
  };
  for (std::size_t j = 0; j <= m; ++j) cell(0, j) = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cell(i, 0) = i;
    for (std::size_t j = 1; j <= m; ++j) {
      if (source[j - 1] == target[i - 1]) {
        cell(i, j) = cell(i - 1, j - 1);
      } else {
        cell(i, j) =
            1 + std::min({cell(i - 1, j - 1), cell(i, j - 1), cell(i - 1, j)});
      }
    }
  }
  return dm;
}

namespace detail {

// Unlinks a chain head-first so destruction never recurses; nodes still
// referenced by other cells stop the walk.
void release_chain(std::shared_ptr<ScriptNode> node) noexcept {
  while (node && node.use_count() == 1) {
    std::shared_ptr<ScriptNode> prev = std::move(node->prev);
    node = std::move(prev);
  }
}

}  // namespace detail

ScriptMatrix::~ScriptMatrix() {
  for (auto it = scripts_.rbegin(); it != scripts_.rend(); ++it)
    detail::release_chain(std::move(it->tail));
}

std::size_t ScriptMatrix::index(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw Error(ErrorCode::invalid_argument, "matrix index out of range");
  return i * cols_ + j;
}

std::size_t ScriptMatrix::distance_at(std::size_t i, std::size_t j) const {
  return distances_[index(i, j)];
}

std::size_t ScriptMatrix::script_length_at(std::size_t i,
                                           std::size_t j) const {
  return scripts_[index(i, j)].length;
}

EditScript ScriptMatrix::script_at(std::size_t i, std::size_t j) const {
  const detail::SharedScript& cell = scripts_[index(i, j)];
  std::vector<EditOp> ops(cell.length);
  std::size_t k = cell.length;
  for (const detail::ScriptNode* node = cell.tail.get(); node;
       node = node->prev.get())
    ops[--k] = node->op;
  return EditScript::from_sorted(std::move(ops), /*source_len=*/j,
                                 /*target_len=*/i);
}

std::size_t ScriptMatrix::total_instructions() const {
  std::size_t total = 0;
  for (const detail::SharedScript& cell : scripts_) total += cell.length;
  return total;
}

ScriptMatrix script_matrix(const TokenSequence& source,
                           const TokenSequence& target) {
  check_pair(source, target);
  const std::size_t m = source.size();
  const std::size_t n = target.size();
  ScriptMatrix sm;
  sm.rows_ = n + 1;
  sm.cols_ = m + 1;
  sm.distances_.assign(sm.rows_ * sm.cols_, 0);
  sm.scripts_.assign(sm.rows_ * sm.cols_, {});
  auto dist = [&](std::size_t i, std::size_t j) -> std::size_t& {
    return sm.distances_[i * sm.cols_ + j];
  };
  auto cell = [&](std::size_t i, std::size_t j) -> detail::SharedScript& {
    return sm.scripts_[i * sm.cols_ + j];
  };

  // Row 0 deletes the source prefix; column 0 inserts the target prefix.
  for (std::size_t j = 1; j <= m; ++j) {
    dist(0, j) = j;
    cell(0, j) =
        cell(0, j - 1).appended(EditOp::deletion(j - 1, 0, source[j - 1]));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    dist(i, 0) = i;
    cell(i, 0) =
        cell(i - 1, 0).appended(EditOp::insertion(0, i - 1, target[i - 1]));
  }

  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (source[j - 1] == target[i - 1]) {
        // A matching diagonal is never worse than either alternative, so
        // the copy needs no comparison.
        dist(i, j) = dist(i - 1, j - 1);
        cell(i, j) = cell(i - 1, j - 1);
        continue;
      }
      const std::size_t diag = dist(i - 1, j - 1);
      const std::size_t left = dist(i, j - 1);
      const std::size_t above = dist(i - 1, j);
      const std::size_t best = std::min({diag, left, above});
      dist(i, j) = best + 1;
      if (diag == best) {
        cell(i, j) = cell(i - 1, j - 1)
                         .appended(EditOp::substitution(
                             j - 1, i - 1, source[j - 1], target[i - 1]));
      } else if (left == best) {
        cell(i, j) =
            cell(i, j - 1).appended(EditOp::deletion(j - 1, i, source[j - 1]));
      } else {
        cell(i, j) = cell(i - 1, j)
                         .appended(EditOp::insertion(j, i - 1, target[i - 1]));
      }
    }
  }
  return sm;
}

EditScript shortest_script(const TokenSequence& source,
                           const TokenSequence& target) {
  return script_matrix(source, target).script();
}

EditScript backtrace_script(const TokenSequence& source,
                            const TokenSequence& target) {
  DistanceMatrix dm = distance_matrix(source, target);
  const std::size_t m = source.size();
  const std::size_t n = target.size();
  std::vector<EditOp> ops;
  ops.reserve(dm.distance());
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && source[j - 1] == target[i - 1]) {
      --i, --j;
      continue;
    }
    const std::size_t here = dm.at(i, j);
    if (i > 0 && j > 0 && dm.at(i - 1, j - 1) + 1 == here) {
      ops.push_back(
          EditOp::substitution(j - 1, i - 1, source[j - 1], target[i - 1]));
      --i, --j;
    } else if (j > 0 && dm.at(i, j - 1) + 1 == here) {
      ops.push_back(EditOp::deletion(j - 1, i, source[j - 1]));
      --j;
    } else {
      ops.push_back(EditOp::insertion(j, i - 1, target[i - 1]));
      --i;
    }
  }
  std::reverse(ops.begin(), ops.end());
  return EditScript::from_sorted(std::move(ops), m, n);
}

}  // namespace ses
