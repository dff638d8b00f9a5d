#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "joinortho/errors.hpp"

namespace joinortho {

/* A finite sequence of non-negative integers: component sizes, row sums,
 * column demands, perturbation vectors.  Entries are kept in the order they
 * were given (witness columns refer back to them); order-sensitive formulas
 * read the cached non-increasing view instead. */
class IntTuple {
public:
    IntTuple() = default;
    IntTuple(std::initializer_list<int> parts);
    explicit IntTuple(std::vector<int> parts);

    // (value, value, ..., value) with `count` entries
    static IntTuple repeated(int value, int count);

    const std::vector<int>& parts() const { return parts_; }
    const std::vector<int>& sorted() const { return sorted_; }

    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    int min_part() const;  // 0 for the empty tuple

    friend bool operator==(const IntTuple&, const IntTuple&) = default;

private:
    std::vector<int> parts_;
    std::vector<int> sorted_;
};

int total(const IntTuple& x);

// number of entries equal to 1
int iota(const IntTuple& x);

// conjugate partition of the sorted view; empty when all entries are zero
IntTuple conjugate(const IntTuple& x);

// x*_j = #{i : x_i >= j}; zero beyond the largest entry; requires j >= 1
int conjugate_at(const IntTuple& x, int j);

/* Weak majorization x <=_w y: every prefix sum of the non-increasing
 * rearrangement of x is bounded by the matching prefix sum of y, the shorter
 * side padded with zeros.  majorized() additionally requires equal totals. */
bool weakly_majorized(const IntTuple& x, const IntTuple& y);
bool majorized(const IntTuple& x, const IntTuple& y);

/* Text syntax shared by the command line: comma-separated positive integers
 * with an exponent shorthand, e.g. "2^3" == "2,2,2" and "3,1^5" ==
 * "3,1,1,1,1,1".  Zeros, signs and non-integers are rejected. */
IntTuple parse_tuple(std::string_view text);
std::string format_tuple(const IntTuple& x);  // "3,1,1,1"

} // namespace joinortho
