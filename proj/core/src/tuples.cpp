#include "joinortho/tuples.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace joinortho {

namespace {

std::vector<int> sorted_desc(const std::vector<int>& v) {
    std::vector<int> s(v);
    std::sort(s.begin(), s.end(), std::greater<int>());
    return s;
}

} // namespace

IntTuple::IntTuple(std::initializer_list<int> parts) : IntTuple(std::vector<int>(parts)) {}

IntTuple::IntTuple(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw Error("tuple entries must be non-negative");
    sorted_ = sorted_desc(parts_);
}

IntTuple IntTuple::repeated(int value, int count) {
    if (count < 0) throw Error("repeat count must be non-negative");
    return IntTuple(std::vector<int>(static_cast<std::size_t>(count), value));
}

int IntTuple::min_part() const {
    return parts_.empty() ? 0 : sorted_.back();
}

int total(const IntTuple& x) {
    return std::accumulate(x.parts().begin(), x.parts().end(), 0);
}

int iota(const IntTuple& x) {
    return static_cast<int>(std::count(x.parts().begin(), x.parts().end(), 1));
}

IntTuple conjugate(const IntTuple& x) {
    const auto& s = x.sorted();
    int max_part = s.empty() ? 0 : s.front();
    std::vector<int> conj;
    conj.reserve(static_cast<std::size_t>(max_part));
    for (int j = 1; j <= max_part; ++j) {
        auto it = std::lower_bound(s.begin(), s.end(), j, std::greater_equal<int>());
        conj.push_back(static_cast<int>(it - s.begin()));
    }
    return IntTuple(std::move(conj));
}

int conjugate_at(const IntTuple& x, int j) {
    if (j < 1) throw Error("conjugate index must be at least 1");
    int count = 0;
    for (int p : x.parts())
        if (p >= j) ++count;
    return count;
}

namespace {

bool prefix_dominated(const IntTuple& x, const IntTuple& y, bool need_equal_totals) {
    const auto& xs = x.sorted();
    const auto& ys = y.sorted();
    std::size_t len = std::max(xs.size(), ys.size());
    long long px = 0, py = 0;
    for (std::size_t i = 0; i < len; ++i) {
        px += i < xs.size() ? xs[i] : 0;
        py += i < ys.size() ? ys[i] : 0;
        if (px > py) return false;
    }
    return !need_equal_totals || px == py;
}

} // namespace

bool weakly_majorized(const IntTuple& x, const IntTuple& y) {
    return prefix_dominated(x, y, false);
}

bool majorized(const IntTuple& x, const IntTuple& y) {
    return prefix_dominated(x, y, true);
}

namespace {

constexpr std::size_t kMaxParsedLength = 1u << 20;

int parse_positive_int(std::string_view s, std::string_view what) {
    if (s.empty()) throw ParseError(std::string("empty ") + std::string(what));
    long long value = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("invalid character in tuple: '" + std::string(1, ch) + "'");
        value = value * 10 + (ch - '0');
        if (value > 1'000'000'000) throw ParseError("tuple entry out of range");
    }
    if (value < 1) throw ParseError(std::string(what) + " must be positive");
    return static_cast<int>(value);
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

IntTuple parse_tuple(std::string_view text) {
    std::vector<int> parts;
    std::string_view rest = strip(text);
    if (rest.empty()) throw ParseError("empty tuple");
    while (true) {
        std::size_t comma = rest.find(',');
        std::string_view term = strip(comma == std::string_view::npos ? rest : rest.substr(0, comma));
        std::size_t caret = term.find('^');
        int value, count = 1;
        if (caret == std::string_view::npos) {
            value = parse_positive_int(term, "tuple entry");
        } else {
            value = parse_positive_int(strip(term.substr(0, caret)), "tuple entry");
            count = parse_positive_int(strip(term.substr(caret + 1)), "exponent");
        }
        if (parts.size() + static_cast<std::size_t>(count) > kMaxParsedLength)
            throw ParseError("tuple too long");
        parts.insert(parts.end(), static_cast<std::size_t>(count), value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return IntTuple(std::move(parts));
}

std::string format_tuple(const IntTuple& x) {
    std::string out;
    for (std::size_t i = 0; i < x.parts().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(x.parts()[i]);
    }
    return out;
}

} // namespace joinortho
