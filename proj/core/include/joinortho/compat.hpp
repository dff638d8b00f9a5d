#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "joinortho/bmatrix.hpp"

namespace joinortho {

enum class WitnessMode { DTilde, D };

/* A checked membership certificate.
 *
 * Mode DTilde: V and W share the row-sum vector shared_r, have column sums
 * m and n, and V^T W has no zero entry.
 *
 * Mode D: V and W have at least three rows; deleting the first and last row
 * of each leaves matrices with equal row sums shared_r whose product has no
 * zero entry; the column sums of the full matrices are m and n. */
struct WitnessPair {
    BinaryMatrix V;
    BinaryMatrix W;
    IntTuple shared_r;
    WitnessMode mode = WitnessMode::DTilde;
    IntTuple m;
    IntTuple n;
};

enum class OracleStatus { Member, NonMember, BudgetExceeded };

struct OracleOutcome {
    OracleStatus status = OracleStatus::NonMember;
    std::optional<WitnessPair> witness;  // present exactly when status == Member
    std::uint64_t nodes_explored = 0;
};

inline constexpr std::uint64_t kUnlimitedBudget = ~std::uint64_t{0};
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// drop the first and last row; throws TooFewRowsError below three rows
BinaryMatrix trim(const BinaryMatrix& X);

/* Compatibility test for equally tall matrices with at least three rows:
 * the trimmed matrices must have equal row sums and a nowhere-zero
 * product. */
bool is_compatible(const BinaryMatrix& V, const BinaryMatrix& W);

/* Wrap a shared-row-sum pair (Vt, Wt) into a mode-D witness for
 * (colsums(Vt) + delta, colsums(Wt) + eps).  Each increment entry must lie
 * in {0,1,2}; min(delta,1) becomes the new first row of V and the remainder
 * the new last row, likewise for W with eps. */
WitnessPair extend_pair(const BinaryMatrix& Vt, const BinaryMatrix& Wt,
                        const IntTuple& delta, const IntTuple& eps);

/* Append |p| == |q| unit rows to a DTilde witness: p and q are decomposed
 * into unit vectors in index order and paired up, so the result certifies
 * (m + p, n + q).  Throws UnequalTotalsError when |p| != |q|. */
WitnessPair lemma_extend_rows(const WitnessPair& wp, const IntTuple& p, const IntTuple& q);

/* Constructive witness for strongly suitable pairs (k <= l required): picks
 * the illustrating (delta, eps), builds the psi-row core from an all-ones
 * block and a Gale-Ryser realisation, then extends by unit rows and the
 * increment rows.  Returns nothing when the pair is not strongly
 * suitable. */
std::optional<WitnessPair> dtilde_constructive(const IntTuple& m, const IntTuple& n);

/* Exact membership oracle: depth-first search over multisets of row pairs
 * (v, w) with equal positive row sums, rows kept in non-increasing
 * lexicographic order on the concatenated pair.  All prunes are exact, so
 * Member/NonMember answers are decisions; when the node budget runs out the
 * outcome is BudgetExceeded.  Deterministic for a fixed budget. */
OracleOutcome dtilde_exact(const IntTuple& m, const IntTuple& n, std::uint64_t budget);

/* Membership with boundary increments: scans delta in {0,1,2}^k and eps in
 * {0,1,2}^l (ascending total, then lexicographic) with m-delta, n-eps
 * entrywise positive and of equal total, running dtilde_exact on each
 * reduced pair.  A hit is assembled into a mode-D witness via
 * extend_pair. */
OracleOutcome d_exact(const IntTuple& m, const IntTuple& n, std::uint64_t budget);

/* Re-checks a witness from scratch against the invariants of its mode.  On
 * failure returns false and, when `why` is non-null, stores a diagnostic. */
bool validate_witness(const WitnessPair& wp, std::string* why = nullptr);

} // namespace joinortho
