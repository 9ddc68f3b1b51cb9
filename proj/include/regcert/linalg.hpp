#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "regcert/scalar.hpp"

namespace regcert {

/// Sparse row: (column, nonzero entry) pairs with strictly increasing columns.
template <class K>
using SparseRow = std::vector<std::pair<std::uint32_t, K>>;

/// Exact rank of the matrix with the given rows. Over GF(p) this is plain
/// Gaussian elimination; over QQ the rows are cleared to integers and
/// eliminated fraction-free with content removal.
template <class K>
std::size_t sparse_rank(std::vector<SparseRow<K>> rows);

/// Sorts by column, merges duplicates and drops zeros.
template <class K>
SparseRow<K> make_row(std::vector<std::pair<std::uint32_t, K>> entries);

}  // namespace regcert
