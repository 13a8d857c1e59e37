#include "dnastore/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <string_view>

#include "dnastore/correlation.hpp"
#include "dnastore/error.hpp"

namespace dnastore::kernels {

namespace {

constexpr std::uint64_t low_mask(std::size_t symbols) {
    return symbols >= 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * symbols)) - 1;
}

std::string decode_word(std::uint64_t code, std::size_t n) {
    std::string s(n, 'A');
    for (std::size_t i = n; i-- > 0;) {
        s[i] = kBases[code & 3];
        code >>= 2;
    }
    return s;
}

std::size_t substring_distance(std::string_view a, std::string_view b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

}  // namespace

int thread_count() { return omp_get_max_threads(); }

std::vector<DnaSeq> all_words(std::size_t n) {
    if (n > 12) throw InvalidArgument("all_words limited to n <= 12");
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    std::vector<DnaSeq> out;
    out.reserve(total);
    for (std::uint64_t c = 0; c < total; ++c) out.emplace_back(decode_word(c, n));
    return out;
}

PackedWord pack(const DnaSeq& s) {
    if (s.size() > 32) throw InvalidArgument("packed words hold at most 32 bases");
    PackedWord w;
    w.length = static_cast<std::uint32_t>(s.size());
    for (char c : s) w.bits = (w.bits << 2) | base_code(c);
    return w;
}

std::size_t packed_hamming(PackedWord a, PackedWord b) {
    std::uint64_t x = a.bits ^ b.bits;
    x = (x | (x >> 1)) & 0x5555555555555555ULL;
    return static_cast<std::size_t>(std::popcount(x));
}

bool packed_overlap(PackedWord x, PackedWord y, std::size_t min_overlap, std::size_t max_overlap) {
    max_overlap = std::min<std::size_t>({max_overlap, x.length, y.length});
    for (std::size_t len = std::max<std::size_t>(min_overlap, 1); len <= max_overlap; ++len) {
        if ((x.bits & low_mask(len)) == (y.bits >> (2 * (y.length - len)))) return true;
    }
    return false;
}

std::vector<std::uint8_t> compatibility_matrix(std::span<const DnaSeq> words, Execution exec) {
    const std::size_t v = words.size();
    std::vector<std::uint8_t> m(v * v, 0);
    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < v; ++i) {
            for (std::size_t j = 0; j < v; ++j) {
                if (i == j) continue;
                m[i * v + j] = correlate(words[i], words[j]).all_zero() &&
                               correlate(words[j], words[i]).all_zero();
            }
        }
        return m;
    }
    std::vector<PackedWord> packed(v);
    for (std::size_t i = 0; i < v; ++i) packed[i] = pack(words[i]);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(v); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t j = 0; j < v; ++j) {
            if (i == j) continue;
            m[i * v + j] = !packed_overlap(packed[i], packed[j], 1, 32) &&
                           !packed_overlap(packed[j], packed[i], 1, 32);
        }
    }
    return m;
}

std::uint64_t count_avoiding_exhaustive(std::span<const DnaSeq> patterns, std::size_t length,
                                        Execution exec) {
    if (length > 15) throw InvalidArgument("exhaustive counting limited to length <= 15");
    const std::uint64_t total = std::uint64_t{1} << (2 * length);
    if (exec == Execution::serial) {
        std::uint64_t count = 0;
        for (std::uint64_t c = 0; c < total; ++c) {
            const std::string w = decode_word(c, length);
            bool hit = false;
            for (const auto& p : patterns) {
                if (w.find(p.str()) != std::string::npos) {
                    hit = true;
                    break;
                }
            }
            count += !hit;
        }
        return count;
    }
    std::vector<PackedWord> packed;
    for (const auto& p : patterns) {
        if (p.empty()) return 0;
        if (p.size() <= length) packed.push_back(pack(p));
    }
    std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(total); ++ci) {
        const auto c = static_cast<std::uint64_t>(ci);
        bool hit = false;
        for (const auto& p : packed) {
            const std::uint64_t mask = low_mask(p.length);
            for (std::size_t shift = 0; shift + p.length <= length; ++shift) {
                if (((c >> (2 * shift)) & mask) == p.bits) {
                    hit = true;
                    break;
                }
            }
            if (hit) break;
        }
        count += !hit;
    }
    return count;
}

std::vector<PairScreen> screen_against(std::span<const DnaSeq> candidates,
                                       std::span<const DnaSeq> accepted, std::size_t min_distance,
                                       std::size_t min_overlap, Execution exec) {
    std::vector<PairScreen> out(candidates.size());
    if (exec == Execution::serial) {
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            for (const auto& a : accepted) {
                if (hamming(candidates[c], a) < min_distance) out[c].distance_ok = false;
                if (overlaps(candidates[c], a, min_overlap, a.size()) ||
                    overlaps(a, candidates[c], min_overlap, a.size())) {
                    out[c].uncorrelated_ok = false;
                }
                if (!out[c].distance_ok && !out[c].uncorrelated_ok) break;
            }
        }
        return out;
    }
    std::vector<PackedWord> acc(accepted.size());
    for (std::size_t i = 0; i < accepted.size(); ++i) acc[i] = pack(accepted[i]);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t ci = 0; ci < static_cast<std::ptrdiff_t>(candidates.size()); ++ci) {
        const auto c = static_cast<std::size_t>(ci);
        const PackedWord w = pack(candidates[c]);
        PairScreen s;
        for (const auto& a : acc) {
            if (s.distance_ok && packed_hamming(w, a) < min_distance) s.distance_ok = false;
            if (s.uncorrelated_ok &&
                (packed_overlap(w, a, min_overlap, 32) || packed_overlap(a, w, min_overlap, 32))) {
                s.uncorrelated_ok = false;
            }
            if (!s.distance_ok && !s.uncorrelated_ok) break;
        }
        out[c] = s;
    }
    return out;
}

std::vector<std::size_t> match_primers(std::span<const DnaSeq> targets, const DnaSeq& forward,
                                       const DnaSeq& reverse, std::size_t tolerance, Execution exec) {
    const DnaSeq reverse_site = reverse_complement(reverse);
    auto matches = [&](const DnaSeq& t) {
        if (t.size() < forward.size() || t.size() < reverse_site.size()) return false;
        const std::string_view v = t.view();
        return substring_distance(forward.view(), v.substr(0, forward.size())) <= tolerance &&
               substring_distance(reverse_site.view(), v.substr(v.size() - reverse_site.size())) <=
                   tolerance;
    };
    std::vector<std::size_t> hits;
    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < targets.size(); ++i) {
            if (matches(targets[i])) hits.push_back(i);
        }
        return hits;
    }
    std::vector<std::uint8_t> flag(targets.size(), 0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(targets.size()); ++i) {
        flag[static_cast<std::size_t>(i)] = matches(targets[static_cast<std::size_t>(i)]);
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (flag[i]) hits.push_back(i);
    }
    return hits;
}

}  // namespace dnastore::kernels
