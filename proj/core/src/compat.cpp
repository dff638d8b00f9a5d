#include "joinortho/compat.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "joinortho/suitability.hpp"

namespace joinortho {

BinaryMatrix trim(const BinaryMatrix& X) {
    if (X.rows() < 3) throw TooFewRowsError("trim needs at least three rows");
    BinaryMatrix T(X.rows() - 2, X.cols());
    for (int i = 1; i + 1 < X.rows(); ++i)
        for (int j = 0; j < X.cols(); ++j)
            if (X.get(i, j)) T.set(i - 1, j, true);
    return T;
}

bool is_compatible(const BinaryMatrix& V, const BinaryMatrix& W) {
    if (V.rows() != W.rows()) throw DimensionError("row counts differ");
    BinaryMatrix Vt = trim(V);
    BinaryMatrix Wt = trim(W);
    if (Vt.row_sums() != Wt.row_sums()) return false;
    return product_positive(Vt, Wt);
}

namespace {

void check_increment(const IntTuple& d, int cols, const char* side) {
    if (d.size() != cols) throw DimensionError(std::string(side) + " increment has the wrong length");
    for (int i = 0; i < d.size(); ++i)
        if (d[i] < 0 || d[i] > 2)
            throw BadIncrementError(std::string(side) + " increment entries must lie in {0,1,2}");
}

} // namespace

WitnessPair extend_pair(const BinaryMatrix& Vt, const BinaryMatrix& Wt,
                        const IntTuple& delta, const IntTuple& eps) {
    if (Vt.rows() != Wt.rows()) throw DimensionError("row counts differ");
    check_increment(delta, Vt.cols(), "first");
    check_increment(eps, Wt.cols(), "second");

    auto build = [](const BinaryMatrix& core, const IntTuple& inc) {
        BinaryMatrix M(core.rows() + 2, core.cols());
        for (int j = 0; j < core.cols(); ++j) {
            if (inc[j] >= 1) M.set(0, j, true);                // min(inc, 1)
            if (inc[j] == 2) M.set(core.rows() + 1, j, true);  // the remainder
        }
        for (int i = 0; i < core.rows(); ++i)
            for (int j = 0; j < core.cols(); ++j)
                if (core.get(i, j)) M.set(i + 1, j, true);
        return M;
    };

    WitnessPair wp;
    wp.V = build(Vt, delta);
    wp.W = build(Wt, eps);
    wp.shared_r = IntTuple(Vt.row_sums());
    wp.mode = WitnessMode::D;
    std::vector<int> m(Vt.col_sums()), n(Wt.col_sums());
    for (int j = 0; j < Vt.cols(); ++j) m[static_cast<std::size_t>(j)] += delta[j];
    for (int j = 0; j < Wt.cols(); ++j) n[static_cast<std::size_t>(j)] += eps[j];
    wp.m = IntTuple(std::move(m));
    wp.n = IntTuple(std::move(n));
    return wp;
}

WitnessPair lemma_extend_rows(const WitnessPair& wp, const IntTuple& p, const IntTuple& q) {
    if (wp.mode != WitnessMode::DTilde)
        throw Error("row extension applies to shared-row-sum witnesses");
    if (p.size() != wp.V.cols() || q.size() != wp.W.cols())
        throw DimensionError("extension vectors have the wrong length");
    if (total(p) != total(q)) throw UnequalTotalsError("extension totals differ");

    auto units = [](const IntTuple& x) {
        std::vector<int> cols;
        for (int j = 0; j < x.size(); ++j)
            for (int t = 0; t < x[j]; ++t) cols.push_back(j);
        return cols;
    };
    std::vector<int> pu = units(p), qu = units(q);

    int s = wp.V.rows();
    int extra = static_cast<int>(pu.size());
    BinaryMatrix V(s + extra, wp.V.cols());
    BinaryMatrix W(s + extra, wp.W.cols());
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < wp.V.cols(); ++j)
            if (wp.V.get(i, j)) V.set(i, j, true);
        for (int j = 0; j < wp.W.cols(); ++j)
            if (wp.W.get(i, j)) W.set(i, j, true);
    }
    std::vector<int> r(wp.shared_r.parts());
    for (int t = 0; t < extra; ++t) {
        V.set(s + t, pu[static_cast<std::size_t>(t)], true);
        W.set(s + t, qu[static_cast<std::size_t>(t)], true);
        r.push_back(1);
    }

    WitnessPair out;
    out.V = std::move(V);
    out.W = std::move(W);
    out.shared_r = IntTuple(std::move(r));
    out.mode = WitnessMode::DTilde;
    std::vector<int> m(wp.m.parts()), n(wp.n.parts());
    for (int j = 0; j < p.size(); ++j) m[static_cast<std::size_t>(j)] += p[j];
    for (int j = 0; j < q.size(); ++j) n[static_cast<std::size_t>(j)] += q[j];
    out.m = IntTuple(std::move(m));
    out.n = IntTuple(std::move(n));
    return out;
}

std::optional<WitnessPair> dtilde_constructive(const IntTuple& m, const IntTuple& n) {
    int k = m.size(), l = n.size();
    if (k < 1 || l < 1) throw Error("size tuples must be non-empty");
    if (k > l) throw OrderError("the first tuple must not be longer than the second");

    SuitabilityReport rep = strongly_suitable(m, n);
    if (!rep.strongly) return std::nullopt;
    const IntTuple& delta = *rep.delta;
    const IntTuple& eps = *rep.eps;
    int ps = rep.psi;

    std::vector<int> mp(static_cast<std::size_t>(k)), np(static_cast<std::size_t>(l));
    for (int i = 0; i < k; ++i) mp[static_cast<std::size_t>(i)] = m[i] - delta[i];
    for (int j = 0; j < l; ++j) np[static_cast<std::size_t>(j)] = n[j] - eps[j];

    // column demands of the psi-row core: cap at psi, then shave the excess
    // off the largest entries until exactly k*psi remains (never below 1)
    std::vector<int> c(static_cast<std::size_t>(l));
    for (int j = 0; j < l; ++j) c[static_cast<std::size_t>(j)] = std::min(ps, np[static_cast<std::size_t>(j)]);
    int surplus = std::accumulate(c.begin(), c.end(), 0) - k * ps;
    if (surplus < 0) throw std::logic_error("core demand below k*psi for a strongly suitable pair");
    while (surplus > 0) {
        int best = -1;
        for (int j = 0; j < l; ++j)
            if (c[static_cast<std::size_t>(j)] > 1 &&
                (best < 0 || c[static_cast<std::size_t>(j)] > c[static_cast<std::size_t>(best)]))
                best = j;
        if (best < 0) throw std::logic_error("cannot shave core demand down to k*psi");
        --c[static_cast<std::size_t>(best)];
        --surplus;
    }

    BinaryMatrix W0 = gale_ryser_construct(IntTuple::repeated(k, ps), IntTuple(c));
    BinaryMatrix V0(ps, k);
    for (int i = 0; i < ps; ++i)
        for (int j = 0; j < k; ++j) V0.set(i, j, true);

    WitnessPair core;
    core.V = std::move(V0);
    core.W = std::move(W0);
    core.shared_r = IntTuple::repeated(k, ps);
    core.mode = WitnessMode::DTilde;
    core.m = IntTuple::repeated(ps, k);
    core.n = IntTuple(c);

    std::vector<int> p(static_cast<std::size_t>(k)), q(static_cast<std::size_t>(l));
    for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = mp[static_cast<std::size_t>(i)] - ps;
    for (int j = 0; j < l; ++j)
        q[static_cast<std::size_t>(j)] = np[static_cast<std::size_t>(j)] - c[static_cast<std::size_t>(j)];
    WitnessPair grown = lemma_extend_rows(core, IntTuple(std::move(p)), IntTuple(std::move(q)));

    WitnessPair out = extend_pair(grown.V, grown.W, delta, eps);
    std::string why;
    if (!validate_witness(out, &why))
        throw std::logic_error("constructive witness failed validation: " + why);
    return out;
}

namespace {

/* Exact search for a shared-row-sum pair.  Columns are handled internally in
 * non-increasing demand order and masks are most-significant-bit-first, so
 * numeric comparison of (v << l | w) matches lexicographic comparison of the
 * concatenated row pair. */
class DtildeSearch {
public:
    DtildeSearch(std::vector<int> mres, std::vector<int> nres, std::uint64_t budget)
        : k_(static_cast<int>(mres.size())), l_(static_cast<int>(nres.size())),
          mres_(std::move(mres)), nres_(std::move(nres)), budget_(budget) {
        full_n_ = l_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << l_) - 1);
        remaining_ = std::accumulate(mres_.begin(), mres_.end(), 0);
        uncovered_.assign(static_cast<std::size_t>(k_), full_n_);
        for (int i = 0; i < k_; ++i)
            if (mres_[static_cast<std::size_t>(i)] > 0) active_m_ |= vbit(i);
        for (int j = 0; j < l_; ++j)
            if (nres_[static_cast<std::size_t>(j)] > 0) active_n_ |= wbit(j);
    }

    OracleStatus run() {
        if (dfs(~std::uint64_t{0})) return OracleStatus::Member;
        return budget_hit_ ? OracleStatus::BudgetExceeded : OracleStatus::NonMember;
    }

    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& rows() const { return rows_; }
    std::uint64_t nodes() const { return nodes_; }
    int col_of_vbit(int bitpos) const { return k_ - 1 - bitpos; }
    int col_of_wbit(int bitpos) const { return l_ - 1 - bitpos; }

private:
    std::uint64_t vbit(int i) const { return std::uint64_t{1} << (k_ - 1 - i); }
    std::uint64_t wbit(int j) const { return std::uint64_t{1} << (l_ - 1 - j); }
    static std::uint64_t low_bit(std::uint64_t x) { return x & (~x + 1); }
    static std::uint64_t high_bit(std::uint64_t x) {
        return std::uint64_t{1} << (63 - std::countl_zero(x));
    }

    bool dfs(std::uint64_t last_key) {
        if (nodes_ >= budget_) { budget_hit_ = true; return false; }
        ++nodes_;

        if (remaining_ == 0) {
            for (int i = 0; i < k_; ++i)
                if (uncovered_[static_cast<std::size_t>(i)]) return false;
            return true;
        }

        // every still-uncovered pair and every open demand must admit a
        // future row below the lexicographic bound
        std::uint64_t zero_n = ~active_n_ & full_n_;
        int active_n_count = std::popcount(active_n_);
        std::uint64_t binding_pair_key = 0;
        for (int i = 0; i < k_; ++i) {
            std::uint64_t u = uncovered_[static_cast<std::size_t>(i)];
            if (!u) continue;
            if (mres_[static_cast<std::size_t>(i)] == 0) return false;
            if (u & zero_n) return false;
            if (std::popcount(u) > mres_[static_cast<std::size_t>(i)] * active_n_count) return false;
            if (!binding_pair_key) binding_pair_key = (vbit(i) << l_) | high_bit(u);
        }
        if (binding_pair_key > last_key) return false;
        if (active_m_ && ((high_bit(active_m_) << l_) | low_bit(active_n_)) > last_key) return false;
        if (active_n_ && ((low_bit(active_m_) << l_) | high_bit(active_n_)) > last_key) return false;

        std::uint64_t last_v = last_key >> l_;
        std::uint64_t last_w = last_key & full_n_;
        for (std::uint64_t v = active_m_; v; v = (v - 1) & active_m_) {
            if (v > last_v) continue;
            int r = std::popcount(v);
            if (r > active_n_count) continue;
            std::uint64_t w_bound = v == last_v ? last_w : full_n_;
            for (std::uint64_t w = active_n_; w; w = (w - 1) & active_n_) {
                if (w > w_bound || std::popcount(w) != r) continue;
                if (try_row(v, w)) return true;
                if (budget_hit_) return false;
            }
        }
        return false;
    }

    bool try_row(std::uint64_t v, std::uint64_t w) {
        std::array<std::uint64_t, 64> saved{};
        for (std::uint64_t t = v; t; t &= t - 1) {
            int i = col_of_vbit(std::countr_zero(t));
            saved[static_cast<std::size_t>(i)] = uncovered_[static_cast<std::size_t>(i)];
            uncovered_[static_cast<std::size_t>(i)] &= ~w;
            if (--mres_[static_cast<std::size_t>(i)] == 0) active_m_ &= ~vbit(i);
        }
        for (std::uint64_t t = w; t; t &= t - 1) {
            int j = col_of_wbit(std::countr_zero(t));
            if (--nres_[static_cast<std::size_t>(j)] == 0) active_n_ &= ~wbit(j);
        }
        remaining_ -= std::popcount(v);
        rows_.push_back({v, w});

        if (dfs((v << l_) | w)) return true;

        rows_.pop_back();
        remaining_ += std::popcount(v);
        for (std::uint64_t t = w; t; t &= t - 1) {
            int j = col_of_wbit(std::countr_zero(t));
            if (nres_[static_cast<std::size_t>(j)]++ == 0) active_n_ |= wbit(j);
        }
        for (std::uint64_t t = v; t; t &= t - 1) {
            int i = col_of_vbit(std::countr_zero(t));
            if (mres_[static_cast<std::size_t>(i)]++ == 0) active_m_ |= vbit(i);
            uncovered_[static_cast<std::size_t>(i)] = saved[static_cast<std::size_t>(i)];
        }
        return false;
    }

    int k_, l_;
    std::vector<int> mres_, nres_;
    std::uint64_t budget_;
    std::uint64_t full_n_ = 0;
    std::uint64_t active_m_ = 0, active_n_ = 0;
    int remaining_ = 0;
    std::vector<std::uint64_t> uncovered_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows_;
    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
};

std::vector<int> descending_order(const IntTuple& x) {
    std::vector<int> idx(static_cast<std::size_t>(x.size()));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return x[a] > x[b]; });
    return idx;
}

} // namespace

OracleOutcome dtilde_exact(const IntTuple& m, const IntTuple& n, std::uint64_t budget) {
    OracleOutcome out;
    if (total(m) != total(n)) return out;  // column totals of a shared pair agree
    int k = m.size(), l = n.size();
    if (k == 0 && l == 0) {
        out.status = OracleStatus::Member;
        out.witness = WitnessPair{BinaryMatrix(0, 0), BinaryMatrix(0, 0), IntTuple{},
                                  WitnessMode::DTilde, m, n};
        return out;
    }
    if (k + l > 62) throw Error("pair too large for the exact search");

    std::vector<int> perm_m = descending_order(m), perm_n = descending_order(n);
    std::vector<int> ms, ns;
    for (int i : perm_m) ms.push_back(m[i]);
    for (int j : perm_n) ns.push_back(n[j]);

    DtildeSearch search(std::move(ms), std::move(ns), budget);
    OracleStatus status = search.run();
    out.status = status;
    out.nodes_explored = search.nodes();
    if (status != OracleStatus::Member) return out;

    int s = static_cast<int>(search.rows().size());
    BinaryMatrix V(s, k), W(s, l);
    std::vector<int> r;
    for (int t = 0; t < s; ++t) {
        auto [v, w] = search.rows()[static_cast<std::size_t>(t)];
        r.push_back(std::popcount(v));
        for (std::uint64_t b = v; b; b &= b - 1)
            V.set(t, perm_m[static_cast<std::size_t>(search.col_of_vbit(std::countr_zero(b)))], true);
        for (std::uint64_t b = w; b; b &= b - 1)
            W.set(t, perm_n[static_cast<std::size_t>(search.col_of_wbit(std::countr_zero(b)))], true);
    }
    out.witness = WitnessPair{std::move(V), std::move(W), IntTuple(std::move(r)),
                              WitnessMode::DTilde, m, n};
    return out;
}

namespace {

// all vectors with entries 0..cap_i, grouped by total, lexicographic within
// a group
std::vector<std::vector<std::vector<int>>> increments_by_total(const std::vector<int>& caps) {
    int max_total = std::accumulate(caps.begin(), caps.end(), 0);
    std::vector<std::vector<std::vector<int>>> groups(static_cast<std::size_t>(max_total) + 1);
    std::vector<int> cur(caps.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos, int sum) -> void {
        if (pos == caps.size()) {
            groups[static_cast<std::size_t>(sum)].push_back(cur);
            return;
        }
        for (int v = 0; v <= caps[pos]; ++v) {
            cur[pos] = v;
            self(self, pos + 1, sum + v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, 0);
    return groups;
}

} // namespace

OracleOutcome d_exact(const IntTuple& m, const IntTuple& n, std::uint64_t budget) {
    int k = m.size(), l = n.size();
    std::vector<int> dcaps(static_cast<std::size_t>(k)), ecaps(static_cast<std::size_t>(l));
    for (int i = 0; i < k; ++i) dcaps[static_cast<std::size_t>(i)] = std::min(2, m[i] - 1);
    for (int j = 0; j < l; ++j) ecaps[static_cast<std::size_t>(j)] = std::min(2, n[j] - 1);
    auto dgroups = increments_by_total(dcaps);
    auto egroups = increments_by_total(ecaps);

    OracleOutcome out;
    bool budget_hit = false;
    int shift = total(n) - total(m);
    for (std::size_t dt = 0; dt < dgroups.size(); ++dt) {
        long long et = static_cast<long long>(dt) + shift;
        if (et < 0 || et >= static_cast<long long>(egroups.size())) continue;
        for (const auto& delta : dgroups[dt]) {
            for (const auto& eps : egroups[static_cast<std::size_t>(et)]) {
                std::vector<int> mr(static_cast<std::size_t>(k)), nr(static_cast<std::size_t>(l));
                for (int i = 0; i < k; ++i) mr[static_cast<std::size_t>(i)] = m[i] - delta[static_cast<std::size_t>(i)];
                for (int j = 0; j < l; ++j) nr[static_cast<std::size_t>(j)] = n[j] - eps[static_cast<std::size_t>(j)];
                OracleOutcome inner = dtilde_exact(IntTuple(mr), IntTuple(nr), budget);
                out.nodes_explored += inner.nodes_explored;
                if (inner.status == OracleStatus::Member) {
                    out.status = OracleStatus::Member;
                    out.witness = extend_pair(inner.witness->V, inner.witness->W,
                                              IntTuple(delta), IntTuple(eps));
                    return out;
                }
                if (inner.status == OracleStatus::BudgetExceeded) budget_hit = true;
            }
        }
    }
    out.status = budget_hit ? OracleStatus::BudgetExceeded : OracleStatus::NonMember;
    return out;
}

bool validate_witness(const WitnessPair& wp, std::string* why) {
    auto fail = [&](const char* reason) {
        if (why) *why = reason;
        return false;
    };
    if (wp.V.rows() != wp.W.rows()) return fail("row counts differ");
    if (IntTuple(wp.V.col_sums()) != wp.m) return fail("column sums of V do not match m");
    if (IntTuple(wp.W.col_sums()) != wp.n) return fail("column sums of W do not match n");
    if (wp.mode == WitnessMode::DTilde) {
        if (IntTuple(wp.V.row_sums()) != wp.shared_r) return fail("row sums of V do not match r");
        if (IntTuple(wp.W.row_sums()) != wp.shared_r) return fail("row sums of W do not match r");
        if (!product_positive(wp.V, wp.W)) return fail("some product entry is zero");
        return true;
    }
    if (wp.V.rows() < 3) return fail("a trimmed witness needs at least three rows");
    BinaryMatrix Vt = trim(wp.V), Wt = trim(wp.W);
    if (IntTuple(Vt.row_sums()) != wp.shared_r) return fail("trimmed row sums of V do not match r");
    if (IntTuple(Wt.row_sums()) != wp.shared_r) return fail("trimmed row sums of W do not match r");
    if (!product_positive(Vt, Wt)) return fail("some trimmed product entry is zero");
    return true;
}

} // namespace joinortho
