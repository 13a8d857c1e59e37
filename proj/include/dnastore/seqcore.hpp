#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dnastore/bigint.hpp"
#include "dnastore/error.hpp"

namespace dnastore {

inline constexpr std::string_view kBases = "ACGT";

constexpr bool is_base(char c) noexcept {
    return c == 'A' || c == 'C' || c == 'G' || c == 'T';
}

constexpr char complement(char base) noexcept {
    switch (base) {
        case 'A': return 'T';
        case 'T': return 'A';
        case 'C': return 'G';
        case 'G': return 'C';
        default: return base;
    }
}

/// 2-bit code in canonical A, C, G, T order.
constexpr std::uint8_t base_code(char base) noexcept {
    switch (base) {
        case 'A': return 0;
        case 'C': return 1;
        case 'G': return 2;
        default: return 3;
    }
}

/// A finite string over {A, C, G, T}. Always stored in uppercase.
class DnaSeq {
public:
    DnaSeq() = default;

    /// Parses text case-insensitively; throws InvalidArgument on any other symbol.
    explicit DnaSeq(std::string_view text);

    static DnaSeq repeat(char base, std::size_t count);

    const std::string& str() const noexcept { return symbols_; }
    std::string_view view() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    char operator[](std::size_t i) const noexcept { return symbols_[i]; }

    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    DnaSeq substr(std::size_t pos, std::size_t count = std::string::npos) const;
    bool contains(const DnaSeq& pattern) const noexcept;
    std::size_t find(const DnaSeq& pattern, std::size_t from = 0) const noexcept;

    /// Copy with position `pos` replaced by `base`.
    DnaSeq with_base(std::size_t pos, char base) const;

    DnaSeq& operator+=(const DnaSeq& rhs);
    friend DnaSeq operator+(DnaSeq lhs, const DnaSeq& rhs) { return lhs += rhs; }

    friend bool operator==(const DnaSeq&, const DnaSeq&) = default;
    friend auto operator<=>(const DnaSeq&, const DnaSeq&) = default;

private:
    struct Unchecked {};
    DnaSeq(std::string symbols, Unchecked) : symbols_(std::move(symbols)) {}

    std::string symbols_;
};

std::ostream& operator<<(std::ostream& os, const DnaSeq& s);

DnaSeq reverse_complement(const DnaSeq& s);

/// Number of disagreeing positions; throws LengthMismatch for unequal lengths.
std::size_t hamming(const DnaSeq& a, const DnaSeq& b);

std::size_t gc_count(const DnaSeq& s);

/// Running digital sum with A/T mapped to +1 and G/C to -1.
struct RdsProfile {
    std::vector<int> values;  // size() == sequence length + 1, values[0] == 0
    int max_abs = 0;
};

RdsProfile rds_profile(const DnaSeq& s);

/// True iff every running digital sum of `s` stays within [-bound, bound].
bool brds_check(const DnaSeq& s, int bound);

/// Parameters (n, C, d; D) of a bounded-running-digital-sum code.
struct BrdsParams {
    std::size_t length = 0;
    BigInt codewords;
    std::size_t min_distance = 0;
    int rds_bound = 0;
};

// Known code families. Only the parameter records are provided; codewords for
// addresses come from seeded search plus validation.
BrdsParams brds_family_d1(std::size_t n);   // (n, 2^{n/2}, 2; 1)
BrdsParams brds_family_d2(std::size_t n);   // (n, 3^{n/2}, 1; 2)
BrdsParams brds_family_d2_distance2(std::size_t n);  // (n, 2*3^{n/2-1}, 2; 2)

/// Checks a candidate codebook against a parameter record: every word has
/// the right length and RDS bound, pairwise distance is at least d.
bool satisfies_brds_params(const std::vector<DnaSeq>& words, const BrdsParams& params);

}  // namespace dnastore

template <>
struct std::hash<dnastore::DnaSeq> {
    std::size_t operator()(const dnastore::DnaSeq& s) const noexcept {
        return std::hash<std::string>{}(s.str());
    }
};
