#include "joinortho/suitability.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "joinortho/errors.hpp"

namespace joinortho {

int psi(int k, int l) {
    if (k < 1 || k > l) throw OrderError("psi needs 1 <= k <= l");
    return (l + k - 1) / k;
}

int iota_max(int k, int l) {
    if (k < 1 || k >= l) throw OrderError("iota_max needs 1 <= k < l");
    int ps = psi(k, l);  // >= 2 here, so the denominator is positive
    return std::max((ps - 1) * k, ps * (l - k) / (ps - 1));
}

namespace {

// sum of the first t conjugate entries, i.e. sum_i min(t, x_i)
long long conj_prefix(const IntTuple& x, int t) {
    long long s = 0;
    for (int i = 0; i < x.size(); ++i) s += std::min(t, x[i]);
    return s;
}

bool entry_floor(const IntTuple& m, int ps) {
    return m.size() > 0 && m.min_part() >= ps;
}

bool weak_interval(const IntTuple& m, const IntTuple& n, int ps) {
    long long tm = total(m), tn = total(n);
    if (tn - conjugate_at(n, 2) - conjugate_at(n, 3) > tm) return false;
    return tm <= tn + conjugate_at(m, ps + 1) + conjugate_at(m, ps + 2);
}

// distribute `need` over the capacities, largest capacity first, ties to the
// lowest index; returns the amount actually placed
int greedy_take(const std::vector<int>& caps, int need, std::vector<int>& out) {
    std::vector<int> idx(caps.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return caps[static_cast<std::size_t>(a)] > caps[static_cast<std::size_t>(b)]; });
    int placed = 0;
    for (int i : idx) {
        if (placed == need) break;
        int take = std::min(caps[static_cast<std::size_t>(i)], need - placed);
        out[static_cast<std::size_t>(i)] += take;
        placed += take;
    }
    return placed;
}

// weak closed form plus the greedy illustrating pair, inputs pre-normalised
SuitabilityReport weak_normalised(const IntTuple& m, const IntTuple& n) {
    int k = m.size(), l = n.size();
    SuitabilityReport rep;
    rep.psi = psi(k, l);
    rep.weakly = entry_floor(m, rep.psi) && weak_interval(m, n, rep.psi);
    if (!rep.weakly) return rep;

    std::vector<int> delta(static_cast<std::size_t>(k), 0), eps(static_cast<std::size_t>(l), 0);
    long long diff = static_cast<long long>(total(m)) - total(n);
    if (diff > 0) {
        std::vector<int> caps(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            caps[static_cast<std::size_t>(i)] = std::min(2, m[i] - rep.psi);
        if (greedy_take(caps, static_cast<int>(diff), delta) != diff)
            throw std::logic_error("weak interval held but the surplus did not fit");
    } else if (diff < 0) {
        std::vector<int> caps(static_cast<std::size_t>(l));
        for (int j = 0; j < l; ++j)
            caps[static_cast<std::size_t>(j)] = std::max(0, std::min(2, n[j] - 1));
        if (greedy_take(caps, static_cast<int>(-diff), eps) != -diff)
            throw std::logic_error("weak interval held but the deficit did not fit");
    }
    rep.delta = IntTuple(std::move(delta));
    rep.eps = IntTuple(std::move(eps));
    return rep;
}

void normalise(const IntTuple*& m, const IntTuple*& n, bool& swapped) {
    if (m->size() > n->size()) {
        std::swap(m, n);
        swapped = true;
    }
}

} // namespace

SuitabilityReport weakly_suitable(const IntTuple& m, const IntTuple& n) {
    const IntTuple* a = &m;
    const IntTuple* b = &n;
    bool swapped = false;
    normalise(a, b, swapped);
    SuitabilityReport rep = weak_normalised(*a, *b);
    rep.swapped = swapped;
    return rep;
}

SuitabilityReport strongly_suitable(const IntTuple& m, const IntTuple& n) {
    const IntTuple* a = &m;
    const IntTuple* b = &n;
    bool swapped = false;
    normalise(a, b, swapped);
    SuitabilityReport rep = weak_normalised(*a, *b);
    rep.swapped = swapped;
    if (!rep.weakly) return rep;

    int k = a->size(), l = b->size();
    int ps = rep.psi;
    long long shortfall = static_cast<long long>(total(*b)) - total(*a) -
                          conjugate_at(*b, ps + 1) - conjugate_at(*b, ps + 2);
    rep.strongly = conj_prefix(*b, ps) >=
                   static_cast<long long>(k) * ps + std::max(0LL, shortfall);
    if (!rep.strongly) return rep;

    long long need = static_cast<long long>(total(*b)) - total(*a);
    if (need > 0) {
        // recompute eps charging parts above psi first, so the reduced tuple
        // keeps its first psi conjugate entries summing to at least k*psi
        std::vector<int> eps(static_cast<std::size_t>(l), 0);
        std::vector<int> prio(static_cast<std::size_t>(l)), rest(static_cast<std::size_t>(l));
        for (int j = 0; j < l; ++j) {
            prio[static_cast<std::size_t>(j)] = std::max(0, std::min(2, (*b)[j] - ps));
            rest[static_cast<std::size_t>(j)] =
                std::max(0, std::min(2, (*b)[j] - 1)) - prio[static_cast<std::size_t>(j)];
        }
        int placed = greedy_take(prio, static_cast<int>(need), eps);
        if (placed < need) placed += greedy_take(rest, static_cast<int>(need) - placed, eps);
        if (placed != need)
            throw std::logic_error("strong inequality held but the deficit did not fit");
        rep.eps = IntTuple(std::move(eps));
    }
    return rep;
}

SuitabilityReport suitable_by_definition(const IntTuple& m, const IntTuple& n, bool strong) {
    const IntTuple* a = &m;
    const IntTuple* b = &n;
    bool swapped = false;
    normalise(a, b, swapped);
    int k = a->size(), l = b->size();
    SuitabilityReport rep;
    rep.swapped = swapped;
    rep.psi = psi(k, l);
    int ps = rep.psi;
    // no reduction can lift an entry, so these have no illustrating pair
    if (a->min_part() < ps || b->min_part() < 1) return rep;

    // epsilon candidates grouped by total, each group in ascending
    // lexicographic order; entries capped so n - eps stays positive
    std::vector<int> ecaps(static_cast<std::size_t>(l));
    for (int j = 0; j < l; ++j)
        ecaps[static_cast<std::size_t>(j)] = std::max(0, std::min(2, (*b)[j] - 1));
    int emax = std::accumulate(ecaps.begin(), ecaps.end(), 0);
    std::vector<std::vector<std::vector<int>>> egroups(static_cast<std::size_t>(emax) + 1);
    std::vector<std::vector<long long>> estrong(static_cast<std::size_t>(emax) + 1);
    {
        std::vector<int> cur(static_cast<std::size_t>(l), 0);
        auto rec = [&](auto&& self, int pos, int sum) -> void {
            if (pos == l) {
                long long s = 0;
                for (int j = 0; j < l; ++j)
                    s += std::min(ps, (*b)[j] - cur[static_cast<std::size_t>(j)]);
                egroups[static_cast<std::size_t>(sum)].push_back(cur);
                estrong[static_cast<std::size_t>(sum)].push_back(s);
                return;
            }
            for (int v = 0; v <= ecaps[static_cast<std::size_t>(pos)]; ++v) {
                cur[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1, sum + v);
            }
            cur[static_cast<std::size_t>(pos)] = 0;
        };
        rec(rec, 0, 0);
    }

    long long target = static_cast<long long>(k) * ps;
    int shift = total(*b) - total(*a);
    std::vector<int> dcaps(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        dcaps[static_cast<std::size_t>(i)] = std::max(0, std::min(2, (*a)[i] - ps));

    // scan delta in ascending lexicographic order; the matching eps group is
    // forced by the totals, so the first hit is the lexicographically least
    // valid (delta, eps)
    auto scan = [&](bool want_strong) -> bool {
        std::vector<int> d(static_cast<std::size_t>(k), 0);
        for (;;) {
            int dt = std::accumulate(d.begin(), d.end(), 0);
            int et = dt + shift;
            if (et >= 0 && et <= emax) {
                const auto& group = egroups[static_cast<std::size_t>(et)];
                const auto& sums = estrong[static_cast<std::size_t>(et)];
                for (std::size_t t = 0; t < group.size(); ++t) {
                    if (want_strong && sums[t] < target) continue;
                    rep.delta = IntTuple(d);
                    rep.eps = IntTuple(group[t]);
                    return true;
                }
            }
            int pos = k - 1;
            while (pos >= 0 && d[static_cast<std::size_t>(pos)] == dcaps[static_cast<std::size_t>(pos)]) {
                d[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) return false;
            ++d[static_cast<std::size_t>(pos)];
        }
    };

    if (strong && scan(true)) {
        rep.weakly = true;
        rep.strongly = true;
        return rep;
    }
    rep.weakly = scan(false);
    return rep;
}

bool majorization_form(const IntTuple& m, const IntTuple& n) {
    int k = m.size(), l = n.size();
    if (k < 1 || k > l) throw OrderError("majorization_form needs 1 <= k <= l");
    int ps = psi(k, l);
    long long tm = total(m), tn = total(n);
    if (tn < tm - conjugate_at(m, ps + 1) - conjugate_at(m, ps + 2)) return false;
    // n weakly majorized by (3 + |m| - l, 3^(l-1)), via prefix sums
    long long prefix = 0, bound = 3 + tm - l;
    for (int t = 0; t < l; ++t) {
        prefix += n.sorted()[static_cast<std::size_t>(t)];
        if (prefix > bound) return false;
        bound += 3;
    }
    return true;
}

bool sometimes_jo(const IntTuple& m, const IntTuple& n) {
    const IntTuple* a = &m;
    const IntTuple* b = &n;
    bool swapped = false;
    normalise(a, b, swapped);
    long long k = a->size(), l = b->size();
    long long ta = total(*a), tb = total(*b);
    int ia = iota(*a), ib = iota(*b);
    if (ia != 0) return k + l <= ta + ia;
    if (ib == 0) return l <= ta;
    return k + l <= ta || (2 * k <= l && l <= ta) || (l <= 2 * k && 2 * k <= tb);
}

bool strong_suitability_closed_form(const IntTuple& m, const IntTuple& n) {
    int k = m.size(), l = n.size();
    if (k < 1 || k > l) throw OrderError("closed form needs 1 <= k <= l");
    int ps = psi(k, l);
    if (!entry_floor(m, ps) || !weak_interval(m, n, ps)) return false;
    long long shortfall = static_cast<long long>(total(n)) - total(m) -
                          conjugate_at(n, ps + 1) - conjugate_at(n, ps + 2);
    return conj_prefix(n, ps) >= static_cast<long long>(k) * ps + std::max(0LL, shortfall);
}

bool ajo_necessary_condition(const IntTuple& m, const IntTuple& n) {
    int k = m.size(), l = n.size();
    if (k < 1 || k > l) throw OrderError("necessary condition needs 1 <= k <= l");
    int ps = psi(k, l);
    if (!entry_floor(m, ps) || !weak_interval(m, n, ps)) return false;
    return k == l || iota(n) <= iota_max(k, l);
}

bool case34_condition(const IntTuple& m, const IntTuple& n) {
    if (m.size() != 3 || n.size() != 4)
        throw DimensionError("the sharp criterion applies to lengths 3 and 4");
    long long tm = total(m), tn = total(n);
    if (m.min_part() < 2) return false;
    if (tn - conjugate_at(n, 2) - conjugate_at(n, 3) > tm) return false;
    if (tm > tn + conjugate_at(m, 3) + conjugate_at(m, 4)) return false;
    return iota(n) <= 3;
}

} // namespace joinortho
