#pragma once

#include <cstdint>
#include <optional>

#include "joinortho/compat.hpp"
#include "joinortho/suitability.hpp"

namespace joinortho {

enum class AjoStatus { Yes, No, Unknown };

enum class AjoRule {
    StrongSuitability,  // sufficient closed form fired
    WeakFail,           // necessary closed form violated
    IotaFail,           // too many unit entries on the long side
    CondIvFail,         // combined interval/floor/unit-count necessary test violated
    KDividesEquiv,      // k | l or k | l+1: weak suitability decides
    Case34,             // (k,l) == (3,4): sharp criterion decides
    Oracle,             // settled by exhaustive search
    Budget,             // search budget ran out before a decision
};

struct Verdict {
    IntTuple m;  // as supplied by the caller
    IntTuple n;
    AjoStatus ajo = AjoStatus::Unknown;
    AjoRule rule = AjoRule::Budget;
    bool sjo = false;
    std::optional<WitnessPair> witness;  // present on every Yes
    SuitabilityReport report;
    std::uint64_t nodes_explored = 0;
};

/* Decision cascade for always-join-orthogonalisable pairs: necessary
 * closed forms first, then the sufficient one (with a constructive
 * witness), then the divisibility and (3,4) equivalences, finally the exact
 * oracle.  With `verify` set every decided verdict is cross-checked against
 * the oracle and a disagreement throws std::logic_error. */
Verdict classify(const IntTuple& m, const IntTuple& n, std::uint64_t budget = kDefaultBudget,
                 bool verify = false);

/* Same decision specialised to joins of disjoint path unions, where the
 * two-eigenvalue property is equivalent to the matrix condition in both
 * directions. */
Verdict classify_paths(const IntTuple& m, const IntTuple& n, std::uint64_t budget = kDefaultBudget,
                       bool verify = false);

/* Join of two unions of complete graphs: true iff some choice of graphs
 * with these component sizes gives a two-eigenvalue join. */
bool classify_complete_graphs(const IntTuple& m, const IntTuple& n);

const char* to_string(AjoStatus s);
const char* to_string(AjoRule r);

} // namespace joinortho
