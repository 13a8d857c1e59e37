#include <doctest.h>

#include <random>

#include "dnastore/seqcore.hpp"
#include "fixtures.hpp"

using namespace dnastore;

namespace {

DnaSeq random_seq(std::mt19937_64& rng, std::size_t n) {
    std::string s(n, 'A');
    for (auto& c : s) c = kBases[rng() % 4];
    return DnaSeq(s);
}

}  // namespace

TEST_CASE("parsing is case-insensitive and rejects other symbols") {
    CHECK(DnaSeq("acgT").str() == "ACGT");
    CHECK(DnaSeq("").empty());
    CHECK_THROWS_AS(DnaSeq("ACGN"), InvalidArgument);
    CHECK_THROWS_AS(DnaSeq("AC GT"), InvalidArgument);
    CHECK_THROWS_AS(DnaSeq("ACGU"), InvalidArgument);
}

TEST_CASE("reverse complement") {
    CHECK(reverse_complement(DnaSeq("ACTG")).str() == "CAGT");
    CHECK(reverse_complement(DnaSeq("")).empty());
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        auto x = random_seq(rng, rng() % 40);
        CHECK(reverse_complement(reverse_complement(x)) == x);
        CHECK(reverse_complement(x).size() == x.size());
    }
}

TEST_CASE("hamming distance") {
    DnaSeq x("ACGTTGCA");
    CHECK(hamming(x, x) == 0);
    CHECK(hamming(DnaSeq("ACGT"), DnaSeq("TGCA")) == 4);
    CHECK_THROWS_AS(hamming(DnaSeq("ACG"), DnaSeq("ACGT")), LengthMismatch);

    std::mt19937_64 rng(2);
    for (int i = 0; i < 300; ++i) {
        auto n = rng() % 30;
        auto a = random_seq(rng, n), b = random_seq(rng, n), c = random_seq(rng, n);
        std::size_t brute = 0;
        for (std::size_t j = 0; j < n; ++j) brute += a[j] != b[j];
        CHECK(hamming(a, b) == brute);
        CHECK(hamming(a, b) == hamming(b, a));
        CHECK(hamming(a, c) <= hamming(a, b) + hamming(b, c));
        CHECK((hamming(a, b) == 0) == (a == b));
    }
}

TEST_CASE("gc count") {
    CHECK(gc_count(DnaSeq("ACTAACTGTGCGACTGATGC")) == 10);
    CHECK(gc_count(DnaSeq("AAAA")) == 0);
    CHECK(gc_count(DnaSeq("GCGC")) == 4);
}

TEST_CASE("running digital sum") {
    auto p = rds_profile(DnaSeq("ATAT"));
    CHECK(p.values == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(p.max_abs == 4);
    p = rds_profile(DnaSeq("AGAG"));
    CHECK(p.values == std::vector<int>{0, 1, 0, 1, 0});
    CHECK(p.max_abs == 1);
    CHECK(rds_profile(DnaSeq("")).values == std::vector<int>{0});

    CHECK(brds_check(DnaSeq("AGAG"), 1));
    CHECK_FALSE(brds_check(DnaSeq("AAAG"), 1));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        auto s = random_seq(rng, rng() % 50);
        auto prof = rds_profile(s);
        REQUIRE(prof.values.size() == s.size() + 1);
        int m = 0;
        for (std::size_t j = 1; j < prof.values.size(); ++j) {
            CHECK(std::abs(prof.values[j] - prof.values[j - 1]) == 1);
            m = std::max(m, std::abs(prof.values[j]));
        }
        CHECK(prof.max_abs == m);
        const int last = prof.values.back();
        CHECK(static_cast<int>(gc_count(s)) * 2 == static_cast<int>(s.size()) - last);
        for (int d = 1; d < 6; ++d)
            if (brds_check(s, d)) CHECK(brds_check(s, d + 1));
    }
}

TEST_CASE("small-scale addresses: recorded RDS and GC") {
    const int expected_rds[] = {3, 3, 1, 3, 1};
    for (std::size_t i = 0; i < fixtures::kSmallScaleAddresses.size(); ++i) {
        DnaSeq a(fixtures::kSmallScaleAddresses[i]);
        CHECK(rds_profile(a).max_abs == expected_rds[i]);
        CHECK(gc_count(a) == 10);
        CHECK(rds_profile(a).values.back() == 0);
    }
}

TEST_CASE("BRDS parameter records") {
    auto a = brds_family_d1(8);
    CHECK(a.length == 8);
    CHECK(a.codewords == 16);
    CHECK(a.min_distance == 2);
    CHECK(a.rds_bound == 1);
    auto b = brds_family_d2(8);
    CHECK(b.codewords == 81);
    CHECK(b.min_distance == 1);
    CHECK(b.rds_bound == 2);
    auto c = brds_family_d2_distance2(8);
    CHECK(c.codewords == 54);
    CHECK(c.min_distance == 2);

    // All 16 words over {AG, GA}-style pairs with D = 1.
    std::vector<DnaSeq> words;
    for (int m = 0; m < 16; ++m) {
        std::string s;
        for (int j = 0; j < 4; ++j) s += (m >> j) & 1 ? "AG" : "GA";
        words.emplace_back(s);
    }
    CHECK(satisfies_brds_params(words, a));
    words.push_back(DnaSeq("AAGGAGAG"));
    CHECK_FALSE(satisfies_brds_params(words, a));
}
