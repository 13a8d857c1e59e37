#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dnastore/bigint.hpp"
#include "dnastore/seqcore.hpp"

namespace dnastore {

/// X∘Y: bit i (0-based here) is set iff the suffix of X starting at i equals
/// the prefix of Y of the same length. Only the overlapping part is compared,
/// so Y may be shorter than the suffix.
struct CorrelationVector {
    std::vector<std::uint8_t> bits;

    std::string str() const;
    bool all_zero() const noexcept;
    /// 10...0, the autocorrelation of a self-uncorrelated word.
    bool is_unit() const noexcept;
};

CorrelationVector correlate(const DnaSeq& x, const DnaSeq& y);

/// True iff some suffix of `x` of length in [min_overlap, max_overlap] equals the
/// prefix of `y` of that length.
bool overlaps(const DnaSeq& x, const DnaSeq& y, std::size_t min_overlap, std::size_t max_overlap);

bool is_self_uncorrelated(const DnaSeq& x);

/// Relaxed form: only overlaps of length >= min_overlap are forbidden.
/// min_overlap == 1 is the strict definition.
bool is_self_uncorrelated(const DnaSeq& x, std::size_t min_overlap);

/// True iff every member is self-uncorrelated and every ordered pair of
/// distinct positions has an all-zero cross-correlation (restricted to
/// overlaps >= min_overlap). Throws LengthMismatch for mixed lengths.
bool is_mutually_uncorrelated(std::span<const DnaSeq> set, std::size_t min_overlap = 1);

/// Equal-length words that are pairwise (and self) uncorrelated. The
/// invariant is checked on construction.
class UncorrelatedSet {
public:
    UncorrelatedSet() = default;
    explicit UncorrelatedSet(std::vector<DnaSeq> members);

    const std::vector<DnaSeq>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    std::size_t word_length() const noexcept { return members_.empty() ? 0 : members_.front().size(); }

private:
    std::vector<DnaSeq> members_;
};

/// Splits the set into first and second halves A, B and returns every XY,
/// X in A and Y in B, ordered by X then Y.
UncorrelatedSet double_construction(const UncorrelatedSet& set);

struct UncorrelatedBounds {
    BigInt lower;  // 4 * 3^floor(n/4)
    BigInt upper;  // 9 * 4^(n-2)
};

UncorrelatedBounds bounds_u(std::size_t n);

struct MaxUncorrelated {
    std::size_t size = 0;
    std::vector<DnaSeq> witness;
};

/// Exact largest mutually uncorrelated set for n in {2, 3} by exhaustive
/// independent-set search over all 4^n words.
MaxUncorrelated max_uncorrelated_bruteforce(std::size_t n);

struct AvoidanceCount {
    std::vector<DnaSeq> patterns;
    std::vector<BigInt> counts;  // counts[N] = strings of length N avoiding every pattern
};

/// Counts strings avoiding a mutually uncorrelated pattern set through the
/// recurrence f(N) = 4 f(N-1) - m f(N-n), f(N) = 4^N below n.
AvoidanceCount count_avoiding(std::span<const DnaSeq> patterns, std::size_t max_length);

}  // namespace dnastore
