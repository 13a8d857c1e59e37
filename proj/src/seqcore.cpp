#include "dnastore/seqcore.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "dnastore/error.hpp"

namespace dnastore {

DnaSeq::DnaSeq(std::string_view text) {
    symbols_.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
        if (!is_base(c)) {
            throw InvalidArgument("invalid base '" + std::string(1, text[i]) + "' at offset " +
                                  std::to_string(i));
        }
        symbols_.push_back(c);
    }
}

DnaSeq DnaSeq::repeat(char base, std::size_t count) {
    return DnaSeq(std::string(count, base));
}

DnaSeq DnaSeq::substr(std::size_t pos, std::size_t count) const {
    if (pos > symbols_.size()) throw InvalidArgument("substr offset past end of sequence");
    return DnaSeq(symbols_.substr(pos, count), Unchecked{});
}

bool DnaSeq::contains(const DnaSeq& pattern) const noexcept {
    return symbols_.find(pattern.symbols_) != std::string::npos;
}

std::size_t DnaSeq::find(const DnaSeq& pattern, std::size_t from) const noexcept {
    return symbols_.find(pattern.symbols_, from);
}

DnaSeq DnaSeq::with_base(std::size_t pos, char base) const {
    if (pos >= symbols_.size() || !is_base(base)) throw InvalidArgument("bad substitution");
    std::string copy = symbols_;
    copy[pos] = base;
    return DnaSeq(std::move(copy), Unchecked{});
}

DnaSeq& DnaSeq::operator+=(const DnaSeq& rhs) {
    symbols_ += rhs.symbols_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const DnaSeq& s) { return os << s.str(); }

DnaSeq reverse_complement(const DnaSeq& s) {
    std::string out(s.size(), 'A');
    std::transform(s.str().rbegin(), s.str().rend(), out.begin(), complement);
    return DnaSeq(out);
}

std::size_t hamming(const DnaSeq& a, const DnaSeq& b) {
    if (a.size() != b.size()) throw LengthMismatch(a.size(), b.size());
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

std::size_t gc_count(const DnaSeq& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return c == 'G' || c == 'C'; }));
}

RdsProfile rds_profile(const DnaSeq& s) {
    RdsProfile p;
    p.values.reserve(s.size() + 1);
    p.values.push_back(0);
    int v = 0;
    for (char c : s) {
        v += (c == 'A' || c == 'T') ? 1 : -1;
        p.values.push_back(v);
        p.max_abs = std::max(p.max_abs, std::abs(v));
    }
    return p;
}

bool brds_check(const DnaSeq& s, int bound) { return rds_profile(s).max_abs <= bound; }

namespace {

BigInt power(unsigned base, std::size_t exp) {
    BigInt r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

void require_even(std::size_t n) {
    if (n < 2 || n % 2 != 0) throw InvalidArgument("BRDS code families need an even length >= 2");
}

}  // namespace

BrdsParams brds_family_d1(std::size_t n) {
    require_even(n);
    return {n, power(2, n / 2), 2, 1};
}

BrdsParams brds_family_d2(std::size_t n) {
    require_even(n);
    return {n, power(3, n / 2), 1, 2};
}

BrdsParams brds_family_d2_distance2(std::size_t n) {
    require_even(n);
    return {n, 2 * power(3, n / 2 - 1), 2, 2};
}

bool satisfies_brds_params(const std::vector<DnaSeq>& words, const BrdsParams& params) {
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].size() != params.length || !brds_check(words[i], params.rds_bound)) return false;
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            if (hamming(words[i], words[j]) < params.min_distance) return false;
        }
    }
    return true;
}

}  // namespace dnastore
