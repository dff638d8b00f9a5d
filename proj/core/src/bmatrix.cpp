#include "joinortho/bmatrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace joinortho {

namespace {

int checked_dim(int v) {
    if (v < 0) throw DimensionError("matrix dimensions must be non-negative");
    return v;
}

} // namespace

BinaryMatrix::BinaryMatrix(int rows, int cols)
    : rows_(checked_dim(rows)), cols_(checked_dim(cols)), words_per_row_((cols + 63) / 64),
      bits_(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(words_per_row_), 0),
      row_sums_(static_cast<std::size_t>(rows_), 0),
      col_sums_(static_cast<std::size_t>(cols_), 0) {}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.front().size()) : 0;
    BinaryMatrix M(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw DimensionError("ragged rows");
        for (int j = 0; j < c; ++j) {
            int e = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (e != 0 && e != 1) throw Error("matrix entries must be 0 or 1");
            if (e) M.set(i, j, true);
        }
    }
    return M;
}

bool BinaryMatrix::get(int r, int c) const {
    std::size_t word = static_cast<std::size_t>(r) * static_cast<std::size_t>(words_per_row_) +
                       static_cast<std::size_t>(c / 64);
    return (bits_[word] >> (c % 64)) & 1u;
}

void BinaryMatrix::set(int r, int c, bool value) {
    std::size_t word = static_cast<std::size_t>(r) * static_cast<std::size_t>(words_per_row_) +
                       static_cast<std::size_t>(c / 64);
    std::uint64_t mask = std::uint64_t{1} << (c % 64);
    bool old = bits_[word] & mask;
    if (old == value) return;
    bits_[word] ^= mask;
    int d = value ? 1 : -1;
    row_sums_[static_cast<std::size_t>(r)] += d;
    col_sums_[static_cast<std::size_t>(c)] += d;
}

Marginals marginals(const BinaryMatrix& M) {
    return Marginals{IntTuple(M.row_sums()), IntTuple(M.col_sums())};
}

bool gale_ryser_feasible(const IntTuple& r, const IntTuple& c) {
    return total(r) == total(c) && majorized(c, conjugate(r));
}

BinaryMatrix gale_ryser_construct(const IntTuple& r, const IntTuple& c) {
    int a = r.size(), b = c.size();
    for (int i = 0; i < a; ++i)
        if (r[i] > b) throw DimensionError("row sum exceeds the column count");
    for (int j = 0; j < b; ++j)
        if (c[j] > a) throw DimensionError("column sum exceeds the row count");
    if (!gale_ryser_feasible(r, c)) throw InfeasibleError("no 0-1 matrix has these marginals");

    std::vector<int> row_order(static_cast<std::size_t>(a));
    std::iota(row_order.begin(), row_order.end(), 0);
    std::stable_sort(row_order.begin(), row_order.end(),
                     [&](int x, int y) { return r[x] > r[y]; });

    BinaryMatrix M(a, b);
    std::vector<int> demand(c.parts());
    std::vector<int> cols(static_cast<std::size_t>(b));
    std::iota(cols.begin(), cols.end(), 0);
    for (int i : row_order) {
        int need = r[i];
        if (need == 0) continue;
        std::sort(cols.begin(), cols.end(), [&](int x, int y) {
            int dx = demand[static_cast<std::size_t>(x)], dy = demand[static_cast<std::size_t>(y)];
            return dx != dy ? dx > dy : x < y;  // ties to the lowest column index
        });
        for (int t = 0; t < need; ++t) {
            int j = cols[static_cast<std::size_t>(t)];
            if (demand[static_cast<std::size_t>(j)] <= 0)
                throw InfeasibleError("greedy placement ran out of demand");
            M.set(i, j, true);
            --demand[static_cast<std::size_t>(j)];
        }
    }
    for (int d : demand)
        if (d != 0) throw InfeasibleError("greedy placement left demand unmet");
    return M;
}

namespace {

// column c of M as a bitset over rows
std::vector<std::uint64_t> column_mask(const BinaryMatrix& M, int c) {
    std::vector<std::uint64_t> mask(static_cast<std::size_t>((M.rows() + 63) / 64), 0);
    for (int i = 0; i < M.rows(); ++i)
        if (M.get(i, c)) mask[static_cast<std::size_t>(i / 64)] |= std::uint64_t{1} << (i % 64);
    return mask;
}

} // namespace

bool product_positive(const BinaryMatrix& V, const BinaryMatrix& W) {
    if (V.rows() != W.rows()) throw DimensionError("row counts differ");
    std::vector<std::vector<std::uint64_t>> vcols, wcols;
    vcols.reserve(static_cast<std::size_t>(V.cols()));
    wcols.reserve(static_cast<std::size_t>(W.cols()));
    for (int i = 0; i < V.cols(); ++i) vcols.push_back(column_mask(V, i));
    for (int j = 0; j < W.cols(); ++j) wcols.push_back(column_mask(W, j));
    for (const auto& vc : vcols)
        for (const auto& wc : wcols) {
            bool meet = false;
            for (std::size_t w = 0; w < vc.size(); ++w)
                if (vc[w] & wc[w]) { meet = true; break; }
            if (!meet) return false;
        }
    return true;
}

std::string to_bit_lines(const BinaryMatrix& M) {
    std::string out;
    out.reserve(static_cast<std::size_t>(M.rows()) * static_cast<std::size_t>(M.cols() + 1));
    for (int i = 0; i < M.rows(); ++i) {
        if (i) out += '\n';
        for (int j = 0; j < M.cols(); ++j) out += M.get(i, j) ? '1' : '0';
    }
    return out;
}

} // namespace joinortho
