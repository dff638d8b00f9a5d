#pragma once

#include <optional>

#include "joinortho/tuples.hpp"

namespace joinortho {

/* Result of a suitability test.  When the property holds, delta and eps
 * carry an illustrating increment pair for the tuple pair in normalised
 * orientation; swapped records whether the inputs were exchanged to put the
 * shorter tuple first. */
struct SuitabilityReport {
    int psi = 1;
    bool weakly = false;
    bool strongly = false;
    std::optional<IntTuple> delta;
    std::optional<IntTuple> eps;
    bool swapped = false;
};

// ceil(l/k); throws OrderError unless 1 <= k <= l
int psi(int k, int l);

/* Largest number of unit entries the longer tuple may carry:
 * max{(psi-1)k, psi(l-k)/(psi-1)}, the second term compared as an exact
 * rational and floored.  Requires k < l. */
int iota_max(int k, int l);

/* Closed form: every entry of m at least psi and
 * |n| - n*_2 - n*_3 <= |m| <= |n| + m*_{psi+1} + m*_{psi+2}.
 * Inputs in either order; the report records the normalisation. */
SuitabilityReport weakly_suitable(const IntTuple& m, const IntTuple& n);

/* Weak suitability plus sum_{j<=psi} n*_j >= k psi + max{0, |n| - |m|
 * - n*_{psi+1} - n*_{psi+2}}.  The illustrating eps charges reductions
 * against entries above psi first so it also illustrates the strong
 * property. */
SuitabilityReport strongly_suitable(const IntTuple& m, const IntTuple& n);

/* Exhaustive scan of delta in {0,1,2}^k, eps in {0,1,2}^l for an
 * illustrating pair of the requested flavour, lexicographically first pair
 * winning.  Test oracle for the closed forms; the weakly flag is always
 * filled, the strongly flag only when `strong` is set. */
SuitabilityReport suitable_by_definition(const IntTuple& m, const IntTuple& n, bool strong);

/* Equivalent rewriting of weak suitability for |m| >= l:
 * n <=_w (3 + |m| - l, 3^{l-1}) and |n| >= |m| - m*_{psi+1} - m*_{psi+2}. */
bool majorization_form(const IntTuple& m, const IntTuple& n);

/* Decides whether some simultaneous choice of graphs with these component
 * sizes yields a two-eigenvalue join (complete-graph criterion).  Inputs in
 * either order. */
bool sometimes_jo(const IntTuple& m, const IntTuple& n);

/* Direct evaluation of the strong-suitability inequality, no illustrating
 * pair built.  Agrees with strongly_suitable on every input; kept separate
 * as a cross-check. */
bool strong_suitability_closed_form(const IntTuple& m, const IntTuple& n);

/* Necessary condition for the always verdict: the weak two-sided interval,
 * the entrywise floor m >= (psi^k), and (for k < l) iota(n) <= iota_max. */
bool ajo_necessary_condition(const IntTuple& m, const IntTuple& n);

/* Sharp criterion for length-3 versus length-4 pairs: m >= (2,2,2),
 * |n| - n*_2 - n*_3 <= |m| <= |n| + m*_3 + m*_4 and iota(n) <= 3.
 * Throws DimensionError unless the lengths are exactly 3 and 4. */
bool case34_condition(const IntTuple& m, const IntTuple& n);

} // namespace joinortho
