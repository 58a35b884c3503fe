#pragma once

#include <cstdint>
#include <vector>

namespace sinkopt {

// binomial(n, k) clamped at `cap` to avoid overflow; callers compare against
// their own enumeration budgets.
std::uint64_t binomial_capped(int n, int k, std::uint64_t cap);

// First k-combination of {0..n-1} in lexicographic order.
std::vector<int> first_combination(int k);

// Advances `comb` to the next k-combination of {0..n-1}; false when exhausted.
bool next_combination(std::vector<int>& comb, int n);

// Combination with the given lexicographic rank (combinatorial number system).
// Requires rank < binomial(n, k).
std::vector<int> unrank_combination(int n, int k, std::uint64_t rank);

} // namespace sinkopt
