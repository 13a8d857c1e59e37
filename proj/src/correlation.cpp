#include "dnastore/correlation.hpp"

#include <algorithm>
#include <bitset>
#include <string_view>

#include "dnastore/error.hpp"
#include "dnastore/kernels.hpp"

namespace dnastore {

std::string CorrelationVector::str() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

bool CorrelationVector::all_zero() const noexcept {
    return std::none_of(bits.begin(), bits.end(), [](auto b) { return b != 0; });
}

bool CorrelationVector::is_unit() const noexcept {
    if (bits.empty() || bits.front() != 1) return false;
    return std::none_of(bits.begin() + 1, bits.end(), [](auto b) { return b != 0; });
}

CorrelationVector correlate(const DnaSeq& x, const DnaSeq& y) {
    if (x.empty() || y.empty()) throw InvalidArgument("correlate needs nonempty sequences");
    CorrelationVector v;
    v.bits.resize(x.size());
    std::string_view xs = x.view();
    std::string_view ys = y.view();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::size_t len = std::min(xs.size() - i, ys.size());
        v.bits[i] = xs.substr(i, len) == ys.substr(0, len) ? 1 : 0;
    }
    return v;
}

bool overlaps(const DnaSeq& x, const DnaSeq& y, std::size_t min_overlap, std::size_t max_overlap) {
    std::string_view xs = x.view();
    std::string_view ys = y.view();
    max_overlap = std::min({max_overlap, xs.size(), ys.size()});
    for (std::size_t len = std::max<std::size_t>(min_overlap, 1); len <= max_overlap; ++len) {
        if (xs.substr(xs.size() - len) == ys.substr(0, len)) return true;
    }
    return false;
}

bool is_self_uncorrelated(const DnaSeq& x) { return is_self_uncorrelated(x, 1); }

bool is_self_uncorrelated(const DnaSeq& x, std::size_t min_overlap) {
    if (x.size() < 2) return false;
    return !overlaps(x, x, min_overlap, x.size() - 1);
}

bool is_mutually_uncorrelated(std::span<const DnaSeq> set, std::size_t min_overlap) {
    for (const auto& s : set) {
        if (s.size() != set.front().size()) throw LengthMismatch(set.front().size(), s.size());
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (!is_self_uncorrelated(set[i], min_overlap)) return false;
        for (std::size_t j = 0; j < set.size(); ++j) {
            // Full-length overlap included: equal members are correlated.
            if (i != j && overlaps(set[i], set[j], min_overlap, set[i].size())) return false;
        }
    }
    return true;
}

UncorrelatedSet::UncorrelatedSet(std::vector<DnaSeq> members) : members_(std::move(members)) {
    if (!is_mutually_uncorrelated(members_)) {
        throw InvalidArgument("sequences are not mutually uncorrelated");
    }
}

UncorrelatedSet double_construction(const UncorrelatedSet& set) {
    const auto& m = set.members();
    if (m.size() < 2 || m.size() % 2 != 0) {
        throw InvalidArgument("double construction needs an even number (>= 2) of members");
    }
    const std::size_t half = m.size() / 2;
    std::vector<DnaSeq> out;
    out.reserve(half * half);
    for (std::size_t a = 0; a < half; ++a) {
        for (std::size_t b = half; b < m.size(); ++b) out.push_back(m[a] + m[b]);
    }
    return UncorrelatedSet(std::move(out));
}

UncorrelatedBounds bounds_u(std::size_t n) {
    if (n < 2) throw InvalidArgument("bounds_u needs n >= 2");
    UncorrelatedBounds b;
    b.lower = 4;
    for (std::size_t i = 0; i < n / 4; ++i) b.lower *= 3;
    b.upper = 9;
    for (std::size_t i = 0; i + 2 < n; ++i) b.upper *= 4;
    return b;
}

MaxUncorrelated max_uncorrelated_bruteforce(std::size_t n) {
    if (n < 2 || n > 3) throw InvalidArgument("exhaustive search supports n in {2, 3}");

    std::vector<DnaSeq> vertices;
    for (const auto& w : kernels::all_words(n)) {
        if (is_self_uncorrelated(w)) vertices.push_back(w);
    }
    const auto compatible = kernels::compatibility_matrix(vertices, kernels::Execution::parallel);
    const std::size_t v = vertices.size();

    // Branch and bound over vertices in index order; candidates kept as a
    // bitmask (v <= 64).
    using Mask = std::uint64_t;
    std::vector<Mask> neighbours(v, 0);
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            if (i != j && compatible[i * v + j]) neighbours[i] |= Mask{1} << j;
        }
    }
    Mask best = 0;
    int best_size = 0;
    auto search = [&](auto&& self, Mask chosen, int chosen_size, Mask cands) -> void {
        if (chosen_size + std::popcount(cands) <= best_size) return;
        if (cands == 0) {
            best = chosen;
            best_size = chosen_size;
            return;
        }
        const int i = std::countr_zero(cands);
        const Mask bit = Mask{1} << i;
        self(self, chosen | bit, chosen_size + 1, cands & neighbours[i] & ~bit);
        self(self, chosen, chosen_size, cands & ~bit);
    };
    const Mask all = v == 64 ? ~Mask{0} : (Mask{1} << v) - 1;
    search(search, 0, 0, all);

    MaxUncorrelated result;
    for (std::size_t i = 0; i < v; ++i) {
        if (best & (Mask{1} << i)) result.witness.push_back(vertices[i]);
    }
    result.size = result.witness.size();
    return result;
}

AvoidanceCount count_avoiding(std::span<const DnaSeq> patterns, std::size_t max_length) {
    if (patterns.empty()) throw InvalidArgument("count_avoiding needs at least one pattern");
    if (!is_mutually_uncorrelated(patterns)) {
        throw InvalidArgument("count_avoiding requires a mutually uncorrelated pattern set");
    }
    const std::size_t n = patterns.front().size();
    const std::size_t m = patterns.size();
    AvoidanceCount out;
    out.patterns.assign(patterns.begin(), patterns.end());
    out.counts.reserve(max_length + 1);
    for (std::size_t len = 0; len <= max_length; ++len) {
        if (len < n) {
            out.counts.push_back(len == 0 ? BigInt(1) : BigInt(out.counts.back() * 4));
        } else {
            out.counts.push_back(4 * out.counts[len - 1] - m * out.counts[len - n]);
        }
    }
    return out;
}

}  // namespace dnastore
