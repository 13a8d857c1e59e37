#pragma once

// Data-parallel inner loops. Every kernel has a plain serial reference
// implementation; the parallel path uses OpenMP and must return identical
// results, which the tests and the benchmark compare directly.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dnastore/bigint.hpp"
#include "dnastore/seqcore.hpp"

namespace dnastore::kernels {

enum class Execution { serial, parallel };

/// Number of OpenMP threads the parallel path will use.
int thread_count();

/// All 4^n words of length n in lexicographic ACGT order.
std::vector<DnaSeq> all_words(std::size_t n);

/// Row-major v*v matrix; entry (i, j) is 1 iff i != j and the two words have
/// all-zero cross-correlation in both directions.
std::vector<std::uint8_t> compatibility_matrix(std::span<const DnaSeq> words, Execution exec);

/// Exhaustive count of length-N strings containing none of the patterns.
/// Serial: string search over every word. Parallel: rolling 2-bit codes.
std::uint64_t count_avoiding_exhaustive(std::span<const DnaSeq> patterns, std::size_t length,
                                        Execution exec);

/// Words of length <= 32 packed 2 bits per base, first base most significant.
struct PackedWord {
    std::uint64_t bits = 0;
    std::uint32_t length = 0;
};

PackedWord pack(const DnaSeq& s);
std::size_t packed_hamming(PackedWord a, PackedWord b);
/// True iff a suffix of x with length in [min_overlap, max_overlap] equals the prefix of y.
bool packed_overlap(PackedWord x, PackedWord y, std::size_t min_overlap, std::size_t max_overlap);

/// Outcome of screening one address candidate against an accepted set.
struct PairScreen {
    bool distance_ok = true;       // Hamming distance >= min_distance to all
    bool uncorrelated_ok = true;   // no forbidden overlap in either direction
};

/// Screens each candidate against every accepted word. Serial reference uses
/// DnaSeq routines; the parallel path uses packed words.
std::vector<PairScreen> screen_against(std::span<const DnaSeq> candidates,
                                       std::span<const DnaSeq> accepted, std::size_t min_distance,
                                       std::size_t min_overlap, Execution exec);

/// Indices of targets whose prefix is within `tolerance` of `forward` and whose
/// reverse-complemented suffix is within `tolerance` of `reverse`.
std::vector<std::size_t> match_primers(std::span<const DnaSeq> targets, const DnaSeq& forward,
                                       const DnaSeq& reverse, std::size_t tolerance, Execution exec);

}  // namespace dnastore::kernels
