#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "joinortho/tuples.hpp"

namespace joinortho {

struct PairBounds {
    int max_total = 6;
    int max_k = 0;  // 0: bounded only by the partner length
    int max_l = 4;
    std::optional<int> pin_k;  // restrict to one exact length
    std::optional<int> pin_l;
};

/* Non-increasing positive tuples with total in [1, max_total] and length in
 * [1, max_len], ordered by (total, lexicographic). */
std::vector<IntTuple> partitions_bounded(int max_total, int max_len);

/* Non-increasing tuples with entries in [1, max_entry] and length in
 * [1, max_len], ordered by (length, lexicographic). */
std::vector<IntTuple> tuples_with_max_entry(int max_entry, int max_len);

/* Every pair (m, n) of non-increasing tuples within the bounds with
 * length(m) <= length(n), ordered by (total(m), total(n), m, n). */
std::vector<std::pair<IntTuple, IntTuple>> sorted_pairs(const PairBounds& bounds);

} // namespace joinortho
