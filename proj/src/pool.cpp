#include "dnastore/pool.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_map>

namespace dnastore {

namespace {

std::vector<std::size_t> occurrences(std::string_view text, std::string_view pattern) {
    std::vector<std::size_t> out;
    for (auto pos = text.find(pattern); pos != std::string_view::npos; pos = text.find(pattern, pos + 1))
        out.push_back(pos);
    return out;
}

void check_record(const PoolRecord& r) {
    if (r.id.empty() || r.id.find_first_of(" \t\r\n") != std::string::npos)
        throw InvalidArgument("record id must be non-empty and free of whitespace");
    if (r.left.empty() || r.right.empty()) throw InvalidArgument("record " + r.id + " has an empty address");
    if (r.sequence.size() < r.left.size() + r.right.size())
        throw InvalidArgument("record " + r.id + " is shorter than its addresses");
    if (r.sequence.substr(0, r.left.size()) != r.left)
        throw InvalidArgument("record " + r.id + " does not begin with its left address");
    if (r.sequence.substr(r.sequence.size() - r.right.size()) != r.right)
        throw InvalidArgument("record " + r.id + " does not end with its right address");
    if (r.copies == 0) throw InvalidArgument("record " + r.id + " has zero copies");
}

}  // namespace

Pool::Pool(std::vector<PoolRecord> records) : records_(std::move(records)) {
    std::set<std::string_view> ids;
    for (const auto& r : records_) {
        check_record(r);
        if (!ids.insert(r.id).second) throw InvalidArgument("duplicate record id " + r.id);
    }
}

Pool Pool::from_encoding(const Encoding& encoding) {
    std::vector<PoolRecord> records;
    for (const auto& b : encoding.blocks) records.push_back({block_id(b.index), b.sequence(), b.left, b.right, 1});
    return Pool(std::move(records));
}

std::optional<std::size_t> Pool::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < records_.size(); ++i)
        if (records_[i].id == id) return i;
    return std::nullopt;
}

const PoolRecord& Pool::at(std::string_view id) const {
    if (auto i = index_of(id)) return records_[*i];
    throw InvalidArgument("no block with id " + std::string(id));
}

std::vector<DnaSeq> Pool::sequences() const {
    std::vector<DnaSeq> out;
    out.reserve(records_.size());
    for (const auto& r : records_) out.push_back(r.sequence);
    return out;
}

Pool Pool::with_sequence(std::string_view id, DnaSeq sequence) const {
    auto i = index_of(id);
    if (!i) throw InvalidArgument("no block with id " + std::string(id));
    auto records = records_;
    records[*i].sequence = std::move(sequence);
    try {
        check_record(records[*i]);
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(std::string("edit damages an address: ") + e.what());
    }
    Pool out;
    out.records_ = std::move(records);
    return out;
}

Pool Pool::subset(std::span<const std::string> ids) const {
    std::vector<PoolRecord> records;
    for (const auto& id : ids) records.push_back(at(id));
    return Pool(std::move(records));
}

// Primers and selection

Primer Primer::forward(DnaSeq sequence) {
    if (sequence.size() < kMinLength) throw InvalidArgument("primers need at least 10 symbols");
    return {std::move(sequence), PrimerDirection::forward};
}

Primer Primer::reverse(DnaSeq sequence) {
    if (sequence.size() < kMinLength) throw InvalidArgument("primers need at least 10 symbols");
    return {std::move(sequence), PrimerDirection::reverse};
}

std::vector<std::string> select(const Pool& pool, const Primer& fwd, const Primer& rev, std::size_t tolerance,
                                kernels::Execution exec) {
    if (fwd.direction != PrimerDirection::forward || rev.direction != PrimerDirection::reverse)
        throw InvalidArgument("select needs a forward and a reverse primer");
    if (tolerance > 3) throw InvalidArgument("tolerance must be at most 3");
    auto seqs = pool.sequences();
    std::vector<std::string> ids;
    for (auto i : kernels::match_primers(seqs, fwd.sequence, rev.sequence, tolerance, exec))
        ids.push_back(pool.records()[i].id);
    return ids;
}

Pool amplify(const Pool& pool, const Primer& fwd, const Primer& rev, std::size_t tolerance, std::uint64_t factor) {
    if (factor == 0) throw InvalidArgument("amplification factor must be positive");
    auto ids = select(pool, fwd, rev, tolerance);
    std::vector<PoolRecord> records;
    for (const auto& id : ids) {
        auto r = pool.at(id);
        r.copies *= factor;
        records.push_back(std::move(r));
    }
    return Pool(std::move(records));
}

DnaSeq pcr_amplify(const DnaSeq& templ, const Primer& fwd, const Primer& rev, std::size_t min_anneal) {
    if (fwd.direction != PrimerDirection::forward || rev.direction != PrimerDirection::reverse)
        throw InvalidArgument("PCR needs a forward and a reverse primer");
    if (min_anneal == 0) throw InvalidArgument("min_anneal must be positive");
    const auto text = templ.view();

    // Forward primer: longest 3' end found on the top strand.
    std::optional<std::size_t> fwd_end;
    for (auto len = fwd.sequence.size(); len >= min_anneal && !fwd_end; --len) {
        auto tail = fwd.sequence.view().substr(fwd.sequence.size() - len);
        auto hits = occurrences(text, tail);
        if (hits.size() > 1) throw AmbiguityError("forward primer anneals at several sites");
        if (hits.size() == 1) fwd_end = hits[0] + len;
    }
    if (!fwd_end) throw InvalidArgument("forward primer does not anneal to the template");

    // Reverse primer: its 3' end is the 5' end of its reverse complement.
    const auto rc = reverse_complement(rev.sequence);
    std::optional<std::size_t> rev_start;
    for (auto len = rc.size(); len >= min_anneal && !rev_start; --len) {
        auto head = rc.view().substr(0, len);
        auto hits = occurrences(text, head);
        if (hits.size() > 1) throw AmbiguityError("reverse primer anneals at several sites");
        if (hits.size() == 1) rev_start = hits[0];
    }
    if (!rev_start) throw InvalidArgument("reverse primer does not anneal to the template");
    if (*fwd_end > *rev_start) throw InvalidArgument("primer sites overlap on the template");

    return fwd.sequence + templ.substr(*fwd_end, *rev_start - *fwd_end) + rc;
}

// Rewriting

Pool gblock_rewrite(const Pool& pool, std::string_view id, const Fragment& replacement, std::size_t min_homology) {
    const auto& frag = replacement.sequence;
    if (frag.empty()) throw InvalidArgument("fragment is empty");
    if (min_homology == 0 || frag.size() < min_homology)
        throw InvalidArgument("fragment shorter than the homology length");
    const auto& block = pool.at(id).sequence;

    auto head = occurrences(block.view(), frag.view().substr(0, min_homology));
    auto tail = occurrences(block.view(), frag.view().substr(frag.size() - min_homology));
    if (head.empty()) throw InvalidArgument("upstream homology anchor not found in " + std::string(id));
    if (tail.empty()) throw InvalidArgument("downstream homology anchor not found in " + std::string(id));
    if (head.size() > 1) throw AmbiguityError("upstream homology anchor occurs more than once");
    if (tail.size() > 1) throw AmbiguityError("downstream homology anchor occurs more than once");
    const auto begin = head[0];
    const auto end = tail[0] + min_homology;
    if (end < begin + min_homology) throw InvalidArgument("homology anchors are out of order");

    auto edited = block.substr(0, begin) + frag + block.substr(end);
    return pool.with_sequence(id, std::move(edited));
}

DnaSeq oe_pcr_assemble(std::span<const DnaSeq> fragments, std::size_t min_overlap) {
    if (fragments.size() < 2) throw InvalidArgument("assembly needs at least two fragments");
    if (min_overlap == 0) throw InvalidArgument("min_overlap must be positive");
    DnaSeq acc = fragments[0];
    for (std::size_t j = 1; j < fragments.size(); ++j) {
        const auto& next = fragments[j];
        if (next.empty()) throw InvalidArgument("fragment " + std::to_string(j) + " is empty");
        std::vector<std::size_t> overlaps;
        const auto a = acc.view();
        const auto b = next.view();
        for (auto k = min_overlap; k <= std::min(a.size(), b.size()); ++k)
            if (a.substr(a.size() - k) == b.substr(0, k)) overlaps.push_back(k);
        const auto junction = "junction " + std::to_string(j - 1) + "/" + std::to_string(j);
        if (overlaps.empty()) throw InvalidArgument("no overlap of at least " + std::to_string(min_overlap) +
                                                    " symbols at " + junction);
        if (overlaps.size() > 1) throw AmbiguityError("several overlaps qualify at " + junction);
        acc += next.substr(overlaps[0]);
    }
    return acc;
}

DnaSeq oe_pcr_assemble(std::span<const Fragment> fragments, std::size_t min_overlap) {
    std::vector<DnaSeq> seqs;
    for (const auto& f : fragments) seqs.push_back(f.sequence);
    return oe_pcr_assemble(seqs, min_overlap);
}

EditResult edit_words(const Pool& pool, std::string_view id, std::size_t group_index,
                      std::span<const std::string> new_words, const Dictionary& dictionary,
                      const BlockLayout& layout, const CodecBook& codecs, const PerturbConfig& perturbation) {
    layout.validate();
    if (group_index >= layout.sub_blocks)
        throw InvalidArgument("group index " + std::to_string(group_index) + " out of range");
    if (new_words.size() != layout.words_per_group)
        throw InvalidArgument("a group holds exactly " + std::to_string(layout.words_per_group) + " words");
    const auto& record = pool.at(id);
    const auto& block = record.sequence;
    if (block.size() != layout.block_len()) throw InvalidArgument("block " + std::string(id) + " has the wrong length");
    const auto& codec = codecs.at(record.left);
    layout.check_capacity(codec);

    for (std::size_t g = 0; g < layout.sub_blocks; ++g) {
        try {
            decode_group(block.substr(layout.addr_len + g * layout.sub_len, layout.sub_len), codec, layout, dictionary,
                         perturbation, false);
        } catch (const Error& e) {
            throw InvalidArgument("block " + std::string(id) + " does not decode cleanly at group " +
                                  std::to_string(g) + ": " + e.what());
        }
    }

    EditResult out{pool, dictionary};
    std::vector<std::uint32_t> indices;
    for (const auto& w : new_words) indices.push_back(out.dictionary.intern(w));

    auto raw = encode_group(indices, codec, layout, perturbation);
    auto check = decode_group(raw, codec, layout, out.dictionary, perturbation, false);
    if (check.indices != indices) throw InvalidArgument("re-encoded group does not invert under perturbation");

    const auto offset = layout.addr_len + group_index * layout.sub_len;
    auto edited = block.substr(0, offset) + raw + block.substr(offset + layout.sub_len);
    if (edited.find(record.left, 1) != std::string::npos)
        throw InvalidArgument("edit creates a second left-address occurrence");
    if (edited.find(record.right) != edited.size() - record.right.size())
        throw InvalidArgument("edit creates a second right-address occurrence");
    out.pool = pool.with_sequence(id, std::move(edited));
    return out;
}

// Persistence

void pool_save(const Pool& pool, std::ostream& os) {
    os << ";DNASTORE-POOL v1\n";
    for (const auto& r : pool.records()) {
        os << '>' << r.id << " left=" << r.left << " right=" << r.right;
        if (r.copies != 1) os << " copies=" << r.copies;
        os << '\n' << r.sequence << '\n';
    }
}

Pool pool_load(std::istream& is) {
    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(is, line)) throw FormatError("empty pool file", 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != ";DNASTORE-POOL v1") throw FormatError("missing ;DNASTORE-POOL v1 header", 1);

    std::vector<PoolRecord> records;
    std::set<std::string> ids;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == ';') continue;
        if (line[0] != '>') throw FormatError("expected a '>' record header", lineno);

        PoolRecord r;
        std::vector<std::string> fields;
        std::size_t start = 1;
        while (start <= line.size()) {
            auto sp = line.find(' ', start);
            if (sp == std::string::npos) sp = line.size();
            if (sp > start) fields.push_back(line.substr(start, sp - start));
            start = sp + 1;
        }
        if (fields.empty()) throw FormatError("record header without id", lineno);
        r.id = fields[0];
        bool have_left = false, have_right = false;
        try {
            for (std::size_t i = 1; i < fields.size(); ++i) {
                const auto& f = fields[i];
                if (f.rfind("left=", 0) == 0) {
                    r.left = DnaSeq(f.substr(5));
                    have_left = true;
                } else if (f.rfind("right=", 0) == 0) {
                    r.right = DnaSeq(f.substr(6));
                    have_right = true;
                } else if (f.rfind("copies=", 0) == 0) {
                    auto v = f.substr(7);
                    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
                        throw FormatError("bad copy count '" + v + "'", lineno);
                    r.copies = std::stoull(v);
                } else {
                    throw FormatError("unknown header field '" + f + "'", lineno);
                }
            }
        } catch (const FormatError&) {
            throw;
        } catch (const std::exception& e) {
            throw FormatError(e.what(), lineno);
        }
        if (!have_left || !have_right) throw FormatError("record header needs left= and right=", lineno);
        if (!ids.insert(r.id).second) throw FormatError("duplicate id " + r.id, lineno);

        const auto header_line = lineno;
        if (!std::getline(is, line)) throw FormatError("record " + r.id + " has no sequence line", header_line);
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        try {
            r.sequence = DnaSeq(line);
            check_record(r);
        } catch (const InvalidArgument& e) {
            throw FormatError(e.what(), lineno);
        }
        records.push_back(std::move(r));
    }
    return Pool(std::move(records));
}

}  // namespace dnastore
