#include "joinortho/enumeration.hpp"

#include <algorithm>

#include "joinortho/errors.hpp"

namespace joinortho {

namespace {

void partitions_rec(int remaining, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<IntTuple>& out) {
    if (!cur.empty()) out.push_back(IntTuple(cur));
    if (static_cast<int>(cur.size()) == max_len) return;
    int cap = std::min(remaining, max_part);
    for (int p = cap; p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, max_len, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<IntTuple> partitions_bounded(int max_total, int max_len) {
    if (max_total < 1 || max_len < 1) throw Error("bounds must be positive");
    std::vector<IntTuple> out;
    std::vector<int> cur;
    partitions_rec(max_total, max_total, max_len, cur, out);
    std::sort(out.begin(), out.end(), [](const IntTuple& x, const IntTuple& y) {
        if (total(x) != total(y)) return total(x) < total(y);
        return x.parts() < y.parts();
    });
    return out;
}

std::vector<IntTuple> tuples_with_max_entry(int max_entry, int max_len) {
    if (max_entry < 1 || max_len < 1) throw Error("bounds must be positive");
    std::vector<IntTuple> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int max_part) -> void {
        if (!cur.empty()) out.push_back(IntTuple(cur));
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int p = max_part; p >= 1; --p) {
            cur.push_back(p);
            self(self, p);
            cur.pop_back();
        }
    };
    rec(rec, max_entry);
    std::sort(out.begin(), out.end(), [](const IntTuple& x, const IntTuple& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.parts() < y.parts();
    });
    return out;
}

std::vector<std::pair<IntTuple, IntTuple>> sorted_pairs(const PairBounds& bounds) {
    int longest = bounds.max_l > 0 ? std::min(bounds.max_l, bounds.max_total) : bounds.max_total;
    std::vector<IntTuple> all = partitions_bounded(bounds.max_total, longest);

    auto len_ok = [&](const IntTuple& t, bool first) {
        int len = t.size();
        if (first) {
            if (bounds.max_k > 0 && len > bounds.max_k) return false;
            if (bounds.pin_k && len != *bounds.pin_k) return false;
        } else {
            if (bounds.max_l > 0 && len > bounds.max_l) return false;
            if (bounds.pin_l && len != *bounds.pin_l) return false;
        }
        return true;
    };

    std::vector<std::pair<IntTuple, IntTuple>> out;
    for (const IntTuple& m : all) {
        if (!len_ok(m, true)) continue;
        for (const IntTuple& n : all) {
            if (m.size() > n.size() || !len_ok(n, false)) continue;
            out.push_back({m, n});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        int a = total(x.first), b = total(y.first);
        if (a != b) return a < b;
        a = total(x.second);
        b = total(y.second);
        if (a != b) return a < b;
        if (x.first.parts() != y.first.parts()) return x.first.parts() < y.first.parts();
        return x.second.parts() < y.second.parts();
    });
    return out;
}

} // namespace joinortho
