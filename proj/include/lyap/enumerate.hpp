#pragma once

#include <vector>

namespace lyap {

// All partitions of n into parts >= 1 (descending parts, lexicographically
// descending order). partitions(0) is the single empty partition.
std::vector<std::vector<int>> partitions(int n, int max_part = -1);

/*
 * All genus-0 quadratic signatures (order sum -4) with |d_1|+...+|d_n|
 * bounded by max_abs_sum, optionally capping individual entries. Each
 * signature lists the positive orders descending followed by the poles.
 * Signatures whose double cover has genus < 2 are skipped when
 * require_cover is set.
 */
std::vector<std::vector<int>> base_genus0_signatures(int max_abs_sum, int max_entry = -1,
                                                     bool require_cover = true);

} // namespace lyap
