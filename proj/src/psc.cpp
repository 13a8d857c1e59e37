#include "dnastore/psc.hpp"

#include <algorithm>
#include <bitset>

#include "dnastore/correlation.hpp"

namespace dnastore {

namespace {

// The worked example fixes the tail digits as A=0, T=1, C=2 when the address
// ends in G, while replacement symbols are taken in A < C < T order.
constexpr std::string_view kDigitOrder = "ATCG";
constexpr std::string_view kReplacementOrder = "ACGT";

std::string without(std::string_view order, char a, char b) {
    std::string out;
    for (char c : order) {
        if (c != a && c != b) out.push_back(c);
    }
    return out;
}

std::string describe(const std::vector<Repair>& candidates) {
    if (candidates.empty()) return "no single-symbol repair parses";
    std::string s = std::to_string(candidates.size()) + " candidate repairs:";
    for (const auto& r : candidates) {
        s += " " + std::to_string(r.offset) + ":" + r.original + ">" + r.replacement;
    }
    return s;
}

}  // namespace

UnrecoverableCodeword::UnrecoverableCodeword(std::size_t fail_offset, std::vector<Repair> candidates)
    : Error("unrecoverable codeword (parse failed at offset " + std::to_string(fail_offset) +
            "): " + describe(candidates)),
      fail_offset_(fail_offset),
      candidates_(std::move(candidates)) {}

PrefixCodec::PrefixCodec(DnaSeq address, std::size_t max_length) : address_(std::move(address)) {
    const std::size_t n = address_.size();
    if (n < 2) throw InvalidArgument("address must have length >= 2");
    if (!is_self_uncorrelated(address_)) {
        throw InvalidArgument("address " + address_.str() + " is not self-uncorrelated");
    }
    const char last = excluded();
    digits_ = without(kDigitOrder, last, last);
    replacement_.reserve(n - 1);
    for (std::size_t t = 1; t < n; ++t) {
        replacement_.push_back(without(kReplacementOrder, last, address_[t - 1]));
    }

    capacity_.resize(max_length + 1);
    capacity_[0] = 1;
    for (std::size_t l = 1; l <= max_length; ++l) {
        if (l < n) {
            capacity_[l] = capacity_[l - 1] * 3;
        } else {
            BigInt g = 0;
            for (std::size_t i = 1; i < n; ++i) g += replacement_[i - 1].size() * capacity_[l - i];
            capacity_[l] = std::move(g);
        }
    }
}

std::string_view PrefixCodec::replacement_set(std::size_t t) const {
    if (t == 0 || t >= address_.size()) throw InvalidArgument("replacement position out of range");
    return replacement_[t - 1];
}

const BigInt& PrefixCodec::capacity(std::size_t length) const {
    if (length > max_length()) {
        throw InvalidArgument("length " + std::to_string(length) + " outside codec range [0, " +
                              std::to_string(max_length()) + "]");
    }
    return capacity_[length];
}

DnaSeq PrefixCodec::code(std::size_t length, const BigInt& x) const {
    if (x < 0 || x >= capacity(length)) {
        throw InvalidArgument("value out of range for body length " + std::to_string(length));
    }
    const std::size_t n = address_.size();
    std::string out;
    out.reserve(length);
    BigInt y = x;
    std::size_t rem = length;
    while (rem >= n) {
        std::size_t t = 1;
        for (;;) {
            BigInt block = replacement_[t - 1].size() * capacity_[rem - t];
            if (y < block) break;
            y -= block;
            ++t;
        }
        const BigInt& unit = capacity_[rem - t];
        const auto a = static_cast<std::size_t>(y / unit);
        y %= unit;
        out.append(address_.view().substr(0, t - 1));
        out.push_back(replacement_[t - 1][a]);
        rem -= t;
    }
    std::string tail(rem, digits_[0]);
    for (std::size_t i = rem; i-- > 0;) {
        tail[i] = digits_[static_cast<std::size_t>(y % 3)];
        y /= 3;
    }
    out += tail;
    return DnaSeq(out);
}

DnaSeq PrefixCodec::encode(std::size_t length, const BigInt& x) const {
    return address_ + code(length, x);
}

BigInt PrefixCodec::theta_inverse(std::string_view tail, std::size_t offset, Parse& p) const {
    BigInt y = 0;
    for (std::size_t i = 0; i < tail.size(); ++i) {
        auto d = digits_.find(tail[i]);
        if (d == std::string::npos) {
            p.ok = false;
            p.fail_offset = offset + i;
            p.why = std::string("symbol ") + tail[i] + " not allowed in tail";
            return 0;
        }
        y = y * 3 + d;
    }
    return y;
}

PrefixCodec::Parse PrefixCodec::parse(std::string_view body) const {
    const std::size_t n = address_.size();
    const std::string_view prefix = address_.view();
    Parse p;
    p.ok = true;
    if (body.size() > max_length()) {
        p.ok = false;
        p.fail_offset = max_length();
        p.why = "body longer than codec range";
        return p;
    }
    BigInt x = 0;
    std::size_t pos = 0;
    std::size_t rem = body.size();
    while (rem >= n) {
        std::size_t j = 0;
        while (j < n - 1 && body[pos + j] == prefix[j]) ++j;
        if (j == n - 1) {
            p.ok = false;
            p.fail_offset = pos + j;
            p.why = "address prefix of length n-1 has no terminating symbol";
            return p;
        }
        const std::size_t t = j + 1;
        const auto s = replacement_[t - 1].find(body[pos + j]);
        if (s == std::string::npos) {
            p.ok = false;
            p.fail_offset = pos + j;
            p.why = std::string("symbol ") + body[pos + j] + " cannot end a prefix run";
            return p;
        }
        for (std::size_t i = 1; i < t; ++i) x += replacement_[i - 1].size() * capacity_[rem - i];
        x += s * capacity_[rem - t];
        pos += t;
        rem -= t;
    }
    x += theta_inverse(body.substr(pos), pos, p);
    if (p.ok) p.value = std::move(x);
    return p;
}

BigInt PrefixCodec::decode(const DnaSeq& body) const {
    Parse p = parse(body.view());
    if (!p.ok) throw MalformedCodeword(p.fail_offset, p.why);
    return std::move(p.value);
}

RepairResult PrefixCodec::decode_with_repair(const DnaSeq& body) const {
    Parse first = parse(body.view());
    if (first.ok) return {std::move(first.value), {}};

    std::vector<Repair> viable;
    BigInt value;
    std::string work = body.str();
    const std::size_t last = std::min(first.fail_offset, work.size() - 1);
    for (std::size_t pos = 0; pos <= last; ++pos) {
        const char orig = work[pos];
        for (char b : kBases) {
            if (b == orig) continue;
            work[pos] = b;
            Parse p = parse(work);
            if (p.ok) {
                viable.push_back({pos, orig, b});
                value = std::move(p.value);
            }
        }
        work[pos] = orig;
    }
    if (viable.size() != 1) throw UnrecoverableCodeword(first.fail_offset, std::move(viable));
    return {std::move(value), std::move(viable)};
}

PrefixCodec build_codec(const DnaSeq& address, std::size_t max_length) {
    return PrefixCodec(address, max_length);
}

void PerturbConfig::validate() const {
    if (threshold < 4) throw InvalidArgument("perturbation threshold must be >= 4");
    if (edge_divisor == 0) throw InvalidArgument("edge divisor must be positive");
}

namespace {

bool perturbable(std::size_t length, const PerturbConfig& cfg) {
    return length > cfg.threshold && 2 * cfg.edge_len(length) < length;
}

std::size_t prefix_match(std::string_view s, std::size_t pos, std::string_view address) {
    std::size_t m = 0;
    while (pos + m < s.size() && m < address.size() && s[pos + m] == address[m]) ++m;
    return m;
}

// Nondeterministic automaton for the set of unperturbed bodies (any length).
// States 0..n-2 track how much of the current token's prefix run has been
// read; state n-1 is the base-3 tail. Returns true if `w` can be read
// starting from some state, i.e. `w` may occur inside a body.
bool is_body_factor(std::string_view w, const PrefixCodec& codec) {
    const std::string_view a = codec.address().view();
    const std::size_t n = a.size();
    const std::size_t tail = n - 1;
    std::vector<char> cur(n, 1), next(n, 0);
    for (char c : w) {
        std::fill(next.begin(), next.end(), 0);
        bool any = false;
        for (std::size_t s = 0; s < n; ++s) {
            if (!cur[s]) continue;
            if (s == tail) {
                if (codec.digit_alphabet().find(c) != std::string_view::npos) next[tail] = any = 1;
                continue;
            }
            if (s + 1 <= n - 2 && c == a[s]) next[s + 1] = any = 1;
            if (codec.replacement_set(s + 1).find(c) != std::string_view::npos) next[0] = any = 1;
            if (s == 0 && codec.digit_alphabet().find(c) != std::string_view::npos) next[tail] = any = 1;
        }
        if (!any) return false;
        std::swap(cur, next);
    }
    return true;
}

}  // namespace

DnaSeq perturbed_prefix(const DnaSeq& address, std::size_t length, const PerturbConfig& cfg) {
    cfg.validate();
    if (length > address.size()) throw InvalidArgument("prefix longer than address");
    std::string p = address.str().substr(0, length);
    if (!perturbable(length, cfg)) return DnaSeq(p);
    const std::size_t edge = cfg.edge_len(length);
    const std::size_t middle = length - 2 * edge;
    std::rotate(p.begin() + static_cast<std::ptrdiff_t>(edge),
                p.begin() + static_cast<std::ptrdiff_t>(edge + middle / 2),
                p.begin() + static_cast<std::ptrdiff_t>(edge + middle));
    return DnaSeq(p);
}

DnaSeq perturb(const DnaSeq& s, const DnaSeq& address, const PerturbConfig& cfg) {
    cfg.validate();
    const std::string_view a = address.view();
    std::string out = s.str();
    std::size_t i = 0;
    while (i < out.size()) {
        const std::size_t m = prefix_match(s.view(), i, a);
        if (m < a.size() && perturbable(m, cfg)) {
            const auto q = perturbed_prefix(address, m, cfg);
            out.replace(i, m, q.str());
            i += m;
        } else if (m == a.size()) {
            i += m;
        } else {
            ++i;
        }
    }
    return DnaSeq(out);
}

DnaSeq unperturb(const DnaSeq& s, const DnaSeq& address, const PerturbConfig& cfg) {
    cfg.validate();
    std::vector<std::pair<std::size_t, std::string>> patterns;
    for (std::size_t len = address.size() - 1; len > cfg.threshold; --len) {
        if (perturbable(len, cfg)) patterns.emplace_back(len, perturbed_prefix(address, len, cfg).str());
    }
    std::string out = s.str();
    std::string_view in = s.view();
    std::size_t i = 0;
    while (i < in.size()) {
        bool hit = false;
        for (const auto& [len, q] : patterns) {
            if (in.substr(i, len) == q) {
                out.replace(i, len, address.view().substr(0, len));
                i += len;
                hit = true;
                break;
            }
        }
        if (!hit) ++i;
    }
    return DnaSeq(out);
}

bool check_perturbation_unique(const PrefixCodec& codec, const PerturbConfig& cfg) {
    cfg.validate();
    const DnaSeq& address = codec.address();
    const std::size_t n = address.size();
    std::vector<std::string> perturbed;
    for (std::size_t len = cfg.threshold + 1; len < n; ++len) {
        if (!perturbable(len, cfg)) return false;
        const auto q = perturbed_prefix(address, len, cfg);
        if (q.view() == address.view().substr(0, len)) return false;
        for (std::size_t pos = 0; pos < q.size(); ++pos) {
            if (perturbable(prefix_match(q.view(), pos, address.view()), cfg)) return false;
        }
        if (is_body_factor(q.view(), codec)) return false;
        perturbed.push_back(q.str());
    }
    for (std::size_t i = 0; i < perturbed.size(); ++i) {
        for (std::size_t j = 0; j < perturbed.size(); ++j) {
            if (i != j && perturbed[j].size() < perturbed[i].size() &&
                perturbed[i].find(perturbed[j]) != std::string::npos) {
                return false;
            }
        }
    }
    return true;
}

bool check_perturbation_unique(const DnaSeq& address, const PerturbConfig& cfg) {
    return check_perturbation_unique(PrefixCodec(address, 1), cfg);
}

}  // namespace dnastore
