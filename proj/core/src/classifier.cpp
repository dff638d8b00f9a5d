#include "joinortho/classifier.hpp"

#include <stdexcept>
#include <string>

namespace joinortho {

namespace {

WitnessPair oriented(WitnessPair wp, bool swapped) {
    if (!swapped) return wp;
    std::swap(wp.V, wp.W);
    std::swap(wp.m, wp.n);
    return wp;
}

void attach_witness(Verdict& v, WitnessPair wp, bool swapped) {
    std::string why;
    if (!validate_witness(wp, &why))
        throw std::logic_error("classifier produced an invalid witness: " + why);
    v.witness = oriented(std::move(wp), swapped);
}

// in verification mode every verdict settled without the oracle is replayed
// against it; a disagreement means a bug, not a property of the pair
void cross_check(const Verdict& v, const IntTuple& a, const IntTuple& b,
                 std::uint64_t budget) {
    OracleOutcome oc = d_exact(a, b, budget);
    if (oc.status == OracleStatus::BudgetExceeded) return;
    bool member = oc.status == OracleStatus::Member;
    bool claimed = v.ajo == AjoStatus::Yes;
    if (member != claimed)
        throw std::logic_error(std::string("cascade verdict ") + to_string(v.ajo) +
                               " (" + to_string(v.rule) + ") contradicts the exact search on " +
                               format_tuple(a) + " vs " + format_tuple(b));
}

} // namespace

Verdict classify(const IntTuple& m, const IntTuple& n, std::uint64_t budget, bool verify) {
    const IntTuple* a = &m;
    const IntTuple* b = &n;
    bool swapped = false;
    if (a->size() > b->size()) {
        std::swap(a, b);
        swapped = true;
    }
    int k = a->size(), l = b->size();

    Verdict v;
    v.m = m;
    v.n = n;
    v.sjo = sometimes_jo(m, n);
    v.report = strongly_suitable(*a, *b);
    v.report.swapped = swapped;

    if (!v.report.weakly) {
        v.ajo = AjoStatus::No;
        v.rule = AjoRule::WeakFail;
        if (verify) cross_check(v, *a, *b, budget);
        return v;
    }
    if (k < l && iota(*b) > iota_max(k, l)) {
        v.ajo = AjoStatus::No;
        v.rule = AjoRule::IotaFail;
        if (verify) cross_check(v, *a, *b, budget);
        return v;
    }
    if (!ajo_necessary_condition(*a, *b)) {
        v.ajo = AjoStatus::No;
        v.rule = AjoRule::CondIvFail;
        if (verify) cross_check(v, *a, *b, budget);
        return v;
    }
    if (v.report.strongly) {
        auto wp = dtilde_constructive(*a, *b);
        if (!wp) throw std::logic_error("strong suitability reported without a construction");
        v.ajo = AjoStatus::Yes;
        v.rule = AjoRule::StrongSuitability;
        attach_witness(v, std::move(*wp), swapped);
        if (verify) cross_check(v, *a, *b, budget);
        return v;
    }
    if (l % k == 0 || (l + 1) % k == 0) {
        // weak suitability already holds, so the divisibility rule answers yes;
        // the exact search only supplies the witness
        if (verify && k == 3 && l == 4 && !case34_condition(*a, *b))
            throw std::logic_error("divisibility and length-(3,4) rules disagree on " +
                                   format_tuple(*a) + " vs " + format_tuple(*b));
        OracleOutcome oc = d_exact(*a, *b, budget);
        v.nodes_explored += oc.nodes_explored;
        if (oc.status == OracleStatus::BudgetExceeded) {
            v.ajo = AjoStatus::Unknown;
            v.rule = AjoRule::Budget;
            return v;
        }
        if (oc.status == OracleStatus::NonMember)
            throw std::logic_error("divisibility equivalence contradicted by the exact search on " +
                                   format_tuple(*a) + " vs " + format_tuple(*b));
        v.ajo = AjoStatus::Yes;
        v.rule = AjoRule::KDividesEquiv;
        attach_witness(v, std::move(*oc.witness), swapped);
        return v;
    }
    if (k == 3 && l == 4) {
        if (!case34_condition(*a, *b)) {
            v.ajo = AjoStatus::No;
            v.rule = AjoRule::Case34;
            if (verify) cross_check(v, *a, *b, budget);
            return v;
        }
        OracleOutcome oc = d_exact(*a, *b, budget);
        v.nodes_explored += oc.nodes_explored;
        if (oc.status == OracleStatus::BudgetExceeded) {
            v.ajo = AjoStatus::Unknown;
            v.rule = AjoRule::Budget;
            return v;
        }
        if (oc.status == OracleStatus::NonMember)
            throw std::logic_error("length-(3,4) criterion contradicted by the exact search on " +
                                   format_tuple(*a) + " vs " + format_tuple(*b));
        v.ajo = AjoStatus::Yes;
        v.rule = AjoRule::Case34;
        attach_witness(v, std::move(*oc.witness), swapped);
        return v;
    }

    OracleOutcome oc = d_exact(*a, *b, budget);
    v.nodes_explored += oc.nodes_explored;
    switch (oc.status) {
    case OracleStatus::Member:
        v.ajo = AjoStatus::Yes;
        v.rule = AjoRule::Oracle;
        attach_witness(v, std::move(*oc.witness), swapped);
        break;
    case OracleStatus::NonMember:
        v.ajo = AjoStatus::No;
        v.rule = AjoRule::Oracle;
        break;
    case OracleStatus::BudgetExceeded:
        v.ajo = AjoStatus::Unknown;
        v.rule = AjoRule::Budget;
        break;
    }
    return v;
}

Verdict classify_paths(const IntTuple& m, const IntTuple& n, std::uint64_t budget, bool verify) {
    // for unions of paths the matrix condition characterises the join exactly
    // in both directions, so the general cascade is the whole answer
    return classify(m, n, budget, verify);
}

bool classify_complete_graphs(const IntTuple& m, const IntTuple& n) {
    return sometimes_jo(m, n);
}

const char* to_string(AjoStatus s) {
    switch (s) {
    case AjoStatus::Yes: return "yes";
    case AjoStatus::No: return "no";
    case AjoStatus::Unknown: return "unknown";
    }
    return "unknown";
}

const char* to_string(AjoRule r) {
    switch (r) {
    case AjoRule::StrongSuitability: return "strong_suitability";
    case AjoRule::WeakFail: return "weak_fail";
    case AjoRule::IotaFail: return "iota_fail";
    case AjoRule::CondIvFail: return "cond_iv_fail";
    case AjoRule::KDividesEquiv: return "k_divides_equiv";
    case AjoRule::Case34: return "case_3_4";
    case AjoRule::Oracle: return "oracle";
    case AjoRule::Budget: return "budget";
    }
    return "budget";
}

} // namespace joinortho
