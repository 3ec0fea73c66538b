#include "cbf/baseline.hpp"

#include <string>

#include "cbf/construction.hpp"
#include "cbf/error.hpp"

namespace cbf {

BigInt kernel_cardinality(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::UnsupportedLength, "kernel sequence starts at n = 3");
  BigInt prev = 1;  // |S(3)|
  BigInt cur = 1;   // |S(4)|
  if (n == 3) return prev;
  for (std::size_t i = 5; i <= n; ++i) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CardinalityTable compare_table(std::size_t n_min, std::size_t n_max, bool cross_check,
                               std::size_t cap) {
  if (n_min < 3 || n_min > n_max) {
    throw Error(ErrorCode::InvalidArgument, "compare_table needs 3 <= from <= to");
  }
  if (cross_check && n_max > cap) {
    throw Error(ErrorCode::CapExceeded, "cross-check above enumeration cap " + std::to_string(cap));
  }
  CardinalityTable table{n_min, n_max, {}};
  for (std::size_t n = n_min; n <= n_max; ++n) {
    CardinalityRow row{n, bifix_free_count(2, n), cbfs_cardinality(n), kernel_cardinality(n)};
    if (cross_check) {
      if (BigInt(enumerate_bifix_free(n, cap).size()) != row.bf_count ||
          BigInt(cbfs(n).size()) != row.cbfs_count) {
        throw Error(ErrorCode::ConsistencyFailure,
                    "enumeration disagrees with closed form at n = " + std::to_string(n));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace cbf
