#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dnastore/error.hpp"
#include "dnastore/kernels.hpp"
#include "dnastore/psc.hpp"
#include "dnastore/seqcore.hpp"

namespace dnastore {

/// Address constraints: balanced prefixes (C1), pairwise distance (C2),
/// mutual uncorrelation (C3) and no folding stems (C4).
struct ConstraintConfig {
    std::size_t length = 20;
    int rds_bound = 4;
    std::size_t min_distance = 10;
    std::size_t prefix_window = 4;           // shorter prefixes skip the GC window
    std::size_t uncorrelation_threshold = 1; // shortest overlap that counts as correlation
    std::size_t stem_len = 6;
    double gc_low = 0.4;
    double gc_high = 0.6;

    /// Defaults for a given address length, with min_distance = n/2.
    static ConstraintConfig for_length(std::size_t n);

    /// Throws InvalidArgument if d > n, w > n, h < 3 or the GC window is empty.
    void validate() const;
};

/// Stand-in for a secondary-structure predictor: true means "no fold".
using FoldingCheck = std::function<bool(const DnaSeq&)>;

/// Hairpin-stem heuristic: false iff some length-h window has its reverse
/// complement elsewhere in the sequence without overlapping it.
bool stem_free(const DnaSeq& s, std::size_t stem_len);

bool validate_c1(const DnaSeq& s, const ConstraintConfig& cfg);
bool validate_c2(std::span<const DnaSeq> set, const ConstraintConfig& cfg);
bool validate_c3(std::span<const DnaSeq> set, const ConstraintConfig& cfg);
bool validate_c4(const DnaSeq& s, const ConstraintConfig& cfg);
bool validate_c4(const DnaSeq& s, const FoldingCheck& folding);

enum class CandidateMode {
    interleaved,  // each position pair holds one of {G,C} and one of {A,T}, order random
    uniform,
};

/// Deterministic candidate stream; draws raw 64-bit words from mt19937_64 so
/// the stream is identical on every standard library.
class CandidateStream {
public:
    CandidateStream(std::size_t length, std::uint64_t seed, CandidateMode mode);
    DnaSeq next();

private:
    bool bit();

    std::size_t length_;
    CandidateMode mode_;
    std::mt19937_64 engine_;
    std::uint64_t word_ = 0;
    int bits_left_ = 0;
};

struct SearchOptions {
    std::uint64_t candidate_budget = 10'000'000;
    CandidateMode mode = CandidateMode::interleaved;
    bool require_unique_perturbation = true;
    PerturbConfig perturbation{};
    kernels::Execution execution = kernels::Execution::parallel;
    std::size_t batch_size = 4096;
    FoldingCheck folding{};  // empty: stem heuristic with cfg.stem_len
};

/// Candidates examined and the first constraint each rejected one failed.
struct SearchStats {
    std::uint64_t candidates = 0;
    std::uint64_t rejected_c1 = 0;
    std::uint64_t rejected_c4 = 0;
    std::uint64_t rejected_self_correlation = 0;
    std::uint64_t rejected_perturbation = 0;
    std::uint64_t rejected_c2 = 0;
    std::uint64_t rejected_c3 = 0;
    std::uint64_t accepted = 0;

    friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct AddressSet {
    std::vector<DnaSeq> members;
    ConstraintConfig config;
    std::uint64_t seed = 0;
    SearchStats stats;
};

/// Raised when the candidate budget yields no address at all.
class SearchExhausted : public Error {
public:
    explicit SearchExhausted(const SearchStats& stats) : Error(describe(stats)), stats_(stats) {}
    const SearchStats& stats() const noexcept { return stats_; }

private:
    static std::string describe(const SearchStats& stats);
    SearchStats stats_;
};

/// Greedy expurgation: each candidate is kept iff it passes C1 and C4 (and
/// the optional perturbation check) and C2, C3 against everything kept so
/// far. Output depends only on (count, cfg, seed, options) and not on the
/// execution mode. Stops at `count` members or when the budget runs out.
AddressSet greedy_search(std::size_t count, const ConstraintConfig& cfg, std::uint64_t seed,
                         const SearchOptions& options = {});

struct AddressPair {
    DnaSeq left;   // used for prefix-synchronized coding of the block
    DnaSeq right;

    friend bool operator==(const AddressPair&, const AddressPair&) = default;
};

/// Pairs members (2i, 2i+1) for block i. Throws if fewer than 2*blocks members.
std::vector<AddressPair> pair_addresses(const AddressSet& set, std::size_t blocks);
std::vector<AddressPair> pair_addresses(std::span<const DnaSeq> members, std::size_t blocks);

void write_addresses(std::ostream& os, std::span<const DnaSeq> addresses);
std::vector<DnaSeq> read_addresses(std::istream& is);
void write_pairs(std::ostream& os, std::span<const AddressPair> pairs);
std::vector<AddressPair> read_pairs(std::istream& is);

}  // namespace dnastore
