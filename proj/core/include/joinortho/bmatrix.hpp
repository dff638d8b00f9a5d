#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "joinortho/tuples.hpp"

namespace joinortho {

/* Dense 0-1 matrix with bit-packed rows and cached marginals. */
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols);  // all zeros

    // every entry must be 0 or 1 and the rows rectangular
    static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const;
    void set(int r, int c, bool value);

    const std::vector<int>& row_sums() const { return row_sums_; }
    const std::vector<int>& col_sums() const { return col_sums_; }

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> row_sums_;
    std::vector<int> col_sums_;
};

struct Marginals {
    IntTuple r;  // row sums
    IntTuple c;  // column sums
};

Marginals marginals(const BinaryMatrix& M);

/* Gale-Ryser criterion: a 0-1 matrix with row sums r and column sums c
 * exists iff total(r) == total(c) and sorted(c) is majorized by
 * conjugate(r). */
bool gale_ryser_feasible(const IntTuple& r, const IntTuple& c);

/* Deterministic realisation of feasible marginals.  Rows are processed in
 * non-increasing row-sum order and each row's ones go to the columns of
 * largest residual demand, ties broken by lowest original column index.
 * Throws DimensionError when some r_i exceeds the column count or some c_j
 * the row count, InfeasibleError when the criterion fails. */
BinaryMatrix gale_ryser_construct(const IntTuple& r, const IntTuple& c);

/* True iff every entry of V^T W is positive, i.e. every column of V shares
 * at least one row with every column of W.  Requires equal row counts. */
bool product_positive(const BinaryMatrix& V, const BinaryMatrix& W);

// one comma-free bit string per row, rows joined by '\n'
std::string to_bit_lines(const BinaryMatrix& M);

} // namespace joinortho
