#include <doctest.h>

#include <random>

#include "dnastore/correlation.hpp"
#include "dnastore/kernels.hpp"

using namespace dnastore;
using kernels::Execution;

namespace {

DnaSeq random_seq(std::mt19937_64& rng, std::size_t n) {
    std::string s(n, 'A');
    for (auto& c : s) c = kBases[rng() % 4];
    return DnaSeq(s);
}

}  // namespace

TEST_CASE("all words") {
    auto w = kernels::all_words(2);
    REQUIRE(w.size() == 16);
    CHECK(w.front().str() == "AA");
    CHECK(w[1].str() == "AC");
    CHECK(w.back().str() == "TT");
    CHECK(kernels::all_words(0).size() == 1);
}

TEST_CASE("compatibility matrix: serial and parallel agree") {
    for (std::size_t n : {2u, 3u}) {
        auto words = kernels::all_words(n);
        auto s = kernels::compatibility_matrix(words, Execution::serial);
        auto p = kernels::compatibility_matrix(words, Execution::parallel);
        CHECK(s == p);
        const auto v = words.size();
        for (std::size_t i = 0; i < v; ++i) {
            CHECK(s[i * v + i] == 0);
            for (std::size_t j = 0; j < v; ++j) {
                CHECK(s[i * v + j] == s[j * v + i]);
                if (i != j) {
                    bool ok = correlate(words[i], words[j]).all_zero() && correlate(words[j], words[i]).all_zero();
                    CHECK(s[i * v + j] == ok);
                }
            }
        }
    }
}

TEST_CASE("exhaustive avoidance count: serial and parallel agree") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<DnaSeq> patterns;
        for (int k = 0; k < 1 + trial % 3; ++k) patterns.push_back(random_seq(rng, 1 + rng() % 4));
        for (std::size_t len = 0; len <= 7; ++len)
            CHECK(kernels::count_avoiding_exhaustive(patterns, len, Execution::serial) ==
                  kernels::count_avoiding_exhaustive(patterns, len, Execution::parallel));
    }
    std::vector<DnaSeq> ag{DnaSeq("AG")};
    CHECK(kernels::count_avoiding_exhaustive(ag, 3, Execution::serial) == 56);
}

TEST_CASE("packed words") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i) {
        auto n = 1 + rng() % 32;
        auto a = random_seq(rng, n), b = random_seq(rng, n);
        CHECK(kernels::packed_hamming(kernels::pack(a), kernels::pack(b)) == hamming(a, b));
        for (std::size_t lo : {1u, 3u}) {
            CHECK(kernels::packed_overlap(kernels::pack(a), kernels::pack(b), lo, n) == overlaps(a, b, lo, n));
            CHECK(kernels::packed_overlap(kernels::pack(a), kernels::pack(b), lo, n - 1 + (n == 1)) ==
                  overlaps(a, b, lo, n - 1 + (n == 1)));
        }
    }
    CHECK_THROWS(kernels::pack(DnaSeq(std::string(33, 'A'))));
}

TEST_CASE("candidate screening: serial and parallel agree") {
    std::mt19937_64 rng(13);
    std::vector<DnaSeq> accepted, candidates;
    for (int i = 0; i < 60; ++i) accepted.push_back(random_seq(rng, 12));
    for (int i = 0; i < 400; ++i) candidates.push_back(random_seq(rng, 12));
    // Planted near-duplicates and overlaps.
    candidates.push_back(accepted[3].with_base(0, accepted[3][0] == 'A' ? 'C' : 'A'));
    candidates.push_back(DnaSeq(accepted[5].substr(6).str() + "ACGTAC"));
    for (std::size_t d : {1u, 4u, 6u}) {
        for (std::size_t k : {1u, 3u}) {
            auto s = kernels::screen_against(candidates, accepted, d, k, Execution::serial);
            auto p = kernels::screen_against(candidates, accepted, d, k, Execution::parallel);
            REQUIRE(s.size() == p.size());
            for (std::size_t i = 0; i < s.size(); ++i) {
                CHECK(s[i].distance_ok == p[i].distance_ok);
                CHECK(s[i].uncorrelated_ok == p[i].uncorrelated_ok);
            }
        }
    }
    auto s = kernels::screen_against(candidates, accepted, 4, 3, Execution::serial);
    CHECK_FALSE(s[400].distance_ok);
    CHECK_FALSE(s[401].uncorrelated_ok);
}

TEST_CASE("primer matching: serial and parallel agree") {
    std::mt19937_64 rng(14);
    std::vector<DnaSeq> targets;
    for (int i = 0; i < 200; ++i) targets.push_back(random_seq(rng, 60));
    auto fwd = targets[7].substr(0, 20);
    auto rev = reverse_complement(targets[7].substr(40));
    for (std::size_t tol = 0; tol <= 3; ++tol) {
        auto s = kernels::match_primers(targets, fwd, rev, tol, Execution::serial);
        auto p = kernels::match_primers(targets, fwd, rev, tol, Execution::parallel);
        CHECK(s == p);
        CHECK(s == std::vector<std::size_t>{7});
    }
    auto mutated = fwd.with_base(3, fwd[3] == 'G' ? 'T' : 'G');
    CHECK(kernels::match_primers(targets, mutated, rev, 0, Execution::serial).empty());
    CHECK(kernels::match_primers(targets, mutated, rev, 1, Execution::parallel) == std::vector<std::size_t>{7});
}

TEST_CASE("thread count is positive") { CHECK(kernels::thread_count() >= 1); }
