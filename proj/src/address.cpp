#include "dnastore/address.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "dnastore/correlation.hpp"
#include "dnastore/error.hpp"

namespace dnastore {

ConstraintConfig ConstraintConfig::for_length(std::size_t n) {
    ConstraintConfig cfg;
    cfg.length = n;
    cfg.min_distance = n / 2;
    cfg.prefix_window = std::min<std::size_t>(cfg.prefix_window, n);
    return cfg;
}

void ConstraintConfig::validate() const {
    if (length == 0) throw InvalidArgument("address length must be positive");
    if (rds_bound <= 0) throw InvalidArgument("RDS bound must be positive");
    if (min_distance == 0 || min_distance > length) throw InvalidArgument("need 0 < d <= n");
    if (prefix_window == 0 || prefix_window > length) throw InvalidArgument("need 0 < w <= n");
    if (uncorrelation_threshold == 0) throw InvalidArgument("uncorrelation threshold must be positive");
    if (stem_len < 3) throw InvalidArgument("stem length must be >= 3");
    if (!(gc_low >= 0.0 && gc_low <= gc_high && gc_high <= 1.0)) {
        throw InvalidArgument("GC window must satisfy 0 <= low <= high <= 1");
    }
}

bool stem_free(const DnaSeq& s, std::size_t stem_len) {
    if (s.size() < 2 * stem_len) return true;
    const std::string_view v = s.view();
    for (std::size_t i = 0; i + stem_len <= v.size(); ++i) {
        const DnaSeq rc = reverse_complement(s.substr(i, stem_len));
        for (std::size_t j = 0; j + stem_len <= v.size(); ++j) {
            const std::size_t gap = i > j ? i - j : j - i;
            if (gap >= stem_len && v.substr(j, stem_len) == rc.view()) return false;
        }
    }
    return true;
}

bool validate_c1(const DnaSeq& s, const ConstraintConfig& cfg) {
    if (s.size() != cfg.length) throw LengthMismatch(s.size(), cfg.length);
    if (!brds_check(s, cfg.rds_bound)) return false;
    constexpr double eps = 1e-9;
    std::size_t gc = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        gc += s[i] == 'G' || s[i] == 'C';
        const std::size_t len = i + 1;
        if (len < cfg.prefix_window) continue;
        const double g = static_cast<double>(gc);
        if (g < cfg.gc_low * static_cast<double>(len) - eps ||
            g > cfg.gc_high * static_cast<double>(len) + eps) {
            return false;
        }
    }
    return true;
}

bool validate_c2(std::span<const DnaSeq> set, const ConstraintConfig& cfg) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i].size() != set.front().size()) throw LengthMismatch(set.front().size(), set[i].size());
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (hamming(set[i], set[j]) < cfg.min_distance) return false;
        }
    }
    return true;
}

bool validate_c3(std::span<const DnaSeq> set, const ConstraintConfig& cfg) {
    return is_mutually_uncorrelated(set, cfg.uncorrelation_threshold);
}

bool validate_c4(const DnaSeq& s, const ConstraintConfig& cfg) { return stem_free(s, cfg.stem_len); }

bool validate_c4(const DnaSeq& s, const FoldingCheck& folding) { return folding(s); }

CandidateStream::CandidateStream(std::size_t length, std::uint64_t seed, CandidateMode mode)
    : length_(length), mode_(mode), engine_(seed) {}

bool CandidateStream::bit() {
    if (bits_left_ == 0) {
        word_ = engine_();
        bits_left_ = 64;
    }
    const bool b = word_ & 1;
    word_ >>= 1;
    --bits_left_;
    return b;
}

DnaSeq CandidateStream::next() {
    std::string s;
    s.reserve(length_);
    if (mode_ == CandidateMode::uniform) {
        for (std::size_t i = 0; i < length_; ++i) {
            const int code = (bit() ? 2 : 0) | (bit() ? 1 : 0);
            s.push_back(kBases[static_cast<std::size_t>(code)]);
        }
        return DnaSeq(s);
    }
    while (s.size() < length_) {
        const bool swap = bit();
        const char gc = bit() ? 'C' : 'G';
        const char at = bit() ? 'T' : 'A';
        s.push_back(swap ? at : gc);
        if (s.size() < length_) s.push_back(swap ? gc : at);
    }
    return DnaSeq(s);
}

namespace {

enum class Verdict { ok, c1, c4, self, perturbation };

Verdict screen_individual(const DnaSeq& c, const ConstraintConfig& cfg, const SearchOptions& opt) {
    if (!validate_c1(c, cfg)) return Verdict::c1;
    if (!(opt.folding ? opt.folding(c) : stem_free(c, cfg.stem_len))) return Verdict::c4;
    if (!is_self_uncorrelated(c, cfg.uncorrelation_threshold)) return Verdict::self;
    if (opt.require_unique_perturbation) {
        if (!is_self_uncorrelated(c)) return Verdict::perturbation;
        if (!check_perturbation_unique(c, opt.perturbation)) return Verdict::perturbation;
    }
    return Verdict::ok;
}

void tally(SearchStats& stats, Verdict v) {
    switch (v) {
        case Verdict::c1: ++stats.rejected_c1; break;
        case Verdict::c4: ++stats.rejected_c4; break;
        case Verdict::self: ++stats.rejected_self_correlation; break;
        case Verdict::perturbation: ++stats.rejected_perturbation; break;
        case Verdict::ok: break;
    }
}

// Commits one screened candidate; `screen` covers members accepted before
// the current batch, `fresh` the ones accepted inside it.
void commit(AddressSet& out, const DnaSeq& c, kernels::PairScreen screen, std::size_t fresh_from,
            const ConstraintConfig& cfg) {
    std::span<const DnaSeq> fresh(out.members.data() + fresh_from, out.members.size() - fresh_from);
    if (!fresh.empty()) {
        const auto extra = kernels::screen_against(std::span(&c, 1), fresh, cfg.min_distance,
                                                   cfg.uncorrelation_threshold,
                                                   kernels::Execution::serial)[0];
        screen.distance_ok = screen.distance_ok && extra.distance_ok;
        screen.uncorrelated_ok = screen.uncorrelated_ok && extra.uncorrelated_ok;
    }
    if (!screen.distance_ok) {
        ++out.stats.rejected_c2;
    } else if (!screen.uncorrelated_ok) {
        ++out.stats.rejected_c3;
    } else {
        out.members.push_back(c);
        ++out.stats.accepted;
    }
}

}  // namespace

namespace {

AddressSet search(std::size_t count, const ConstraintConfig& cfg, std::uint64_t seed,
                  const SearchOptions& options) {
    AddressSet out;
    out.config = cfg;
    out.seed = seed;
    CandidateStream stream(cfg.length, seed, options.mode);

    if (options.execution == kernels::Execution::serial) {
        while (out.members.size() < count && out.stats.candidates < options.candidate_budget) {
            const DnaSeq c = stream.next();
            ++out.stats.candidates;
            const Verdict v = screen_individual(c, cfg, options);
            if (v != Verdict::ok) {
                tally(out.stats, v);
                continue;
            }
            commit(out, c, {}, 0, cfg);
        }
        return out;
    }

    const std::size_t batch = std::max<std::size_t>(options.batch_size, 1);
    std::vector<DnaSeq> candidates;
    std::vector<Verdict> verdicts;
    while (out.members.size() < count && out.stats.candidates < options.candidate_budget) {
        const auto remaining = options.candidate_budget - out.stats.candidates;
        const std::size_t b = static_cast<std::size_t>(std::min<std::uint64_t>(batch, remaining));
        candidates.clear();
        for (std::size_t i = 0; i < b; ++i) candidates.push_back(stream.next());

        verdicts.assign(b, Verdict::ok);
#pragma omp parallel for schedule(dynamic, 64)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(b); ++i) {
            const auto k = static_cast<std::size_t>(i);
            verdicts[k] = screen_individual(candidates[k], cfg, options);
        }

        std::vector<DnaSeq> survivors;
        std::vector<std::size_t> survivor_index(b, 0);
        for (std::size_t i = 0; i < b; ++i) {
            if (verdicts[i] == Verdict::ok) {
                survivor_index[i] = survivors.size();
                survivors.push_back(candidates[i]);
            }
        }
        const auto screens = kernels::screen_against(survivors, out.members, cfg.min_distance,
                                                     cfg.uncorrelation_threshold,
                                                     kernels::Execution::parallel);

        const std::size_t fresh_from = out.members.size();
        for (std::size_t i = 0; i < b && out.members.size() < count; ++i) {
            ++out.stats.candidates;
            if (verdicts[i] != Verdict::ok) {
                tally(out.stats, verdicts[i]);
                continue;
            }
            commit(out, candidates[i], screens[survivor_index[i]], fresh_from, cfg);
        }
    }
    return out;
}

}  // namespace

std::string SearchExhausted::describe(const SearchStats& s) {
    return "no address found in " + std::to_string(s.candidates) + " candidates (c1 " +
           std::to_string(s.rejected_c1) + ", c4 " + std::to_string(s.rejected_c4) + ", self " +
           std::to_string(s.rejected_self_correlation) + ", perturbation " +
           std::to_string(s.rejected_perturbation) + ", c2 " + std::to_string(s.rejected_c2) + ", c3 " +
           std::to_string(s.rejected_c3) + ")";
}

AddressSet greedy_search(std::size_t count, const ConstraintConfig& cfg, std::uint64_t seed,
                         const SearchOptions& options) {
    cfg.validate();
    if (count == 0) throw InvalidArgument("address count must be >= 1");
    auto out = search(count, cfg, seed, options);
    if (out.members.empty()) throw SearchExhausted(out.stats);
    return out;
}

std::vector<AddressPair> pair_addresses(std::span<const DnaSeq> members, std::size_t blocks) {
    if (blocks == 0) throw InvalidArgument("need at least one block");
    if (members.size() < 2 * blocks) {
        throw InvalidArgument("need " + std::to_string(2 * blocks) + " addresses for " +
                              std::to_string(blocks) + " blocks, have " +
                              std::to_string(members.size()));
    }
    std::vector<AddressPair> pairs;
    pairs.reserve(blocks);
    for (std::size_t i = 0; i < blocks; ++i) pairs.push_back({members[2 * i], members[2 * i + 1]});
    return pairs;
}

std::vector<AddressPair> pair_addresses(const AddressSet& set, std::size_t blocks) {
    return pair_addresses(set.members, blocks);
}

void write_addresses(std::ostream& os, std::span<const DnaSeq> addresses) {
    for (const auto& a : addresses) os << a.str() << '\n';
}

std::vector<DnaSeq> read_addresses(std::istream& is) {
    std::vector<DnaSeq> out;
    std::string line;
    std::size_t no = 0;
    while (std::getline(is, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        try {
            out.emplace_back(line);
        } catch (const InvalidArgument& e) {
            throw FormatError(e.what(), no);
        }
    }
    return out;
}

void write_pairs(std::ostream& os, std::span<const AddressPair> pairs) {
    for (const auto& p : pairs) os << p.left.str() << '\t' << p.right.str() << '\n';
}

std::vector<AddressPair> read_pairs(std::istream& is) {
    std::vector<AddressPair> out;
    std::string line;
    std::size_t no = 0;
    while (std::getline(is, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
            throw FormatError("expected two addresses separated by one tab", no);
        }
        try {
            out.push_back({DnaSeq(line.substr(0, tab)), DnaSeq(line.substr(tab + 1))});
        } catch (const InvalidArgument& e) {
            throw FormatError(e.what(), no);
        }
    }
    return out;
}

}  // namespace dnastore
