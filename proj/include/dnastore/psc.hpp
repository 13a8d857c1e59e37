#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dnastore/bigint.hpp"
#include "dnastore/error.hpp"
#include "dnastore/seqcore.hpp"

namespace dnastore {

/// Raised when a body cannot be parsed as a prefix-synchronized codeword.
class MalformedCodeword : public Error {
public:
    MalformedCodeword(std::size_t offset, const std::string& why)
        : Error("malformed codeword at offset " + std::to_string(offset) + ": " + why),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

struct Repair {
    std::size_t offset = 0;
    char original = 'A';
    char replacement = 'A';

    friend bool operator==(const Repair&, const Repair&) = default;
};

/// Raised when a damaged codeword admits zero or several single-symbol repairs.
class UnrecoverableCodeword : public Error {
public:
    UnrecoverableCodeword(std::size_t fail_offset, std::vector<Repair> candidates);

    std::size_t fail_offset() const noexcept { return fail_offset_; }
    const std::vector<Repair>& candidates() const noexcept { return candidates_; }

private:
    std::size_t fail_offset_;
    std::vector<Repair> candidates_;
};

struct RepairResult {
    BigInt value;
    std::vector<Repair> repairs;  // empty when the input parsed cleanly
};

/// Prefix-synchronized code for one self-uncorrelated address P of length n.
///
/// A body of length l < n is the base-3 expansion of x over the three symbols
/// other than p_n. For l >= n the body is a chain of tokens P^{t-1} q, where q
/// is drawn from the replacement set of position t (the working symbols minus
/// p_t), followed by such a base-3 tail. Because p_n never appears in a
/// replacement symbol or in the tail and P has no border, P cannot occur in a
/// body. The number of bodies of length l is capacity(l).
class PrefixCodec {
public:
    /// Throws InvalidArgument if the address is shorter than 2 or self-correlated.
    PrefixCodec(DnaSeq address, std::size_t max_length);

    const DnaSeq& address() const noexcept { return address_; }
    std::size_t address_length() const noexcept { return address_.size(); }
    std::size_t max_length() const noexcept { return capacity_.size() - 1; }

    /// The last address symbol, which never appears outside prefix runs.
    char excluded() const noexcept { return address_[address_.size() - 1]; }

    /// Symbols of the base-3 tail, in digit order (digit 0 first).
    std::string_view digit_alphabet() const noexcept { return digits_; }

    /// Ordered replacement symbols for 1-based position t in [1, n-1].
    std::string_view replacement_set(std::size_t t) const;

    const BigInt& capacity(std::size_t length) const;

    /// Body of `length` symbols for 0 <= x < capacity(length).
    DnaSeq code(std::size_t length, const BigInt& x) const;

    /// address() followed by code(length, x).
    DnaSeq encode(std::size_t length, const BigInt& x) const;

    /// Inverse of code(); throws MalformedCodeword with the failing offset.
    BigInt decode(const DnaSeq& body) const;

    /// Decodes, or repairs one substituted symbol. Candidates are every single
    /// substitution at or before the first failing offset that makes the whole
    /// body parse; exactly one must exist.
    RepairResult decode_with_repair(const DnaSeq& body) const;

private:
    struct Parse {
        bool ok = false;
        std::size_t fail_offset = 0;
        std::string why;
        BigInt value;
    };
    Parse parse(std::string_view body) const;
    BigInt theta_inverse(std::string_view tail, std::size_t offset, Parse& p) const;

    DnaSeq address_;
    std::string digits_;
    std::vector<std::string> replacement_;  // index t-1
    std::vector<BigInt> capacity_;          // capacity_[l] = G_{n,l}, capacity_[0] = 1
};

PrefixCodec build_codec(const DnaSeq& address, std::size_t max_length);

/// Controls the rewriting of long address prefixes inside encoded bodies.
///
/// A maximal run equal to an address prefix of length L > threshold keeps
/// its first and last edge_len(L) symbols, and its middle is rotated left by
/// half its length.
struct PerturbConfig {
    std::size_t threshold = 10;
    std::size_t edge_divisor = 4;
    std::size_t edge_offset = 1;

    std::size_t edge_len(std::size_t length) const noexcept {
        return length / edge_divisor + edge_offset;
    }
    /// Throws InvalidArgument when threshold < 4 or the edge rule is degenerate.
    void validate() const;
};

/// The perturbed form of the address prefix of `length` symbols.
DnaSeq perturbed_prefix(const DnaSeq& address, std::size_t length, const PerturbConfig& cfg);

/// Rewrites every maximal address-prefix run longer than the threshold
/// (and shorter than the whole address). Length is unchanged.
DnaSeq perturb(const DnaSeq& s, const DnaSeq& address, const PerturbConfig& cfg);

/// Replaces perturbed prefixes by the original prefixes, longest match first.
DnaSeq unperturb(const DnaSeq& s, const DnaSeq& address, const PerturbConfig& cfg);

/// Sufficient conditions for perturb() to be undone by unperturb() on
/// encoded bodies: each perturbed prefix differs from the original, holds no
/// long address prefix, does not embed another perturbed prefix, and can
/// never occur inside an unperturbed body (checked with an automaton for the
/// body language).
bool check_perturbation_unique(const DnaSeq& address, const PerturbConfig& cfg);
bool check_perturbation_unique(const PrefixCodec& codec, const PerturbConfig& cfg);

}  // namespace dnastore
