#include "dnastore/codec.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <exception>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace dnastore {

namespace {

constexpr double kDaltonsPerNucleotide = 650.0;
constexpr double kGramsPerDalton = 1.67e-24;

bool parallel(kernels::Execution exec) { return exec == kernels::Execution::parallel; }

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::size_t parse_size(const std::string& value, std::size_t line) {
    if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw FormatError("expected a non-negative integer, got '" + value + "'", line);
    try {
        return static_cast<std::size_t>(std::stoull(value));
    } catch (const std::exception&) {
        throw FormatError("integer out of range: " + value, line);
    }
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto tab = line.find('\t', start);
        out.push_back(line.substr(start, tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
    }
    return out;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

BlockError::BlockError(std::size_t block, std::optional<std::size_t> sub_block, const std::string& what)
    : Error("block " + std::to_string(block) +
            (sub_block ? ", sub-block " + std::to_string(*sub_block) : std::string()) + ": " + what),
      block_(block),
      sub_block_(sub_block) {}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string w;
    while (in >> w) out.push_back(std::move(w));
    return out;
}

std::string normalize_whitespace(std::string_view text) {
    std::string out;
    for (const auto& w : tokenize(text)) {
        if (!out.empty()) out += ' ';
        out += w;
    }
    return out;
}

// Dictionary

Dictionary::Dictionary(unsigned width) : width_(width) {
    if (width < 2 || width > 30) throw InvalidArgument("word width must be in [2, 30]");
}

Dictionary Dictionary::build(std::span<const std::string> words, unsigned width) {
    if (words.empty()) throw InvalidArgument("cannot build a dictionary from an empty text");
    Dictionary d(width);
    for (const auto& w : words) d.intern(w);
    return d;
}

Dictionary Dictionary::build(std::string_view text, unsigned width) {
    auto words = tokenize(text);
    return build(words, width);
}

std::optional<std::uint32_t> Dictionary::index_of(std::string_view word) const {
    auto it = lookup_.find(std::string(word));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

bool Dictionary::is_word_index(std::uint32_t index) const noexcept {
    return index >= index_offset() && index - index_offset() < words_.size();
}

const std::string& Dictionary::word_at(std::uint32_t index) const {
    if (!is_word_index(index)) throw InvalidArgument("no word has index " + std::to_string(index));
    return words_[index - index_offset()];
}

std::uint32_t Dictionary::intern(const std::string& word) {
    if (auto i = index_of(word)) return *i;
    if (word.empty() || std::any_of(word.begin(), word.end(), [](unsigned char c) { return std::isspace(c); }))
        throw InvalidArgument("dictionary words must be non-empty and free of whitespace");
    if (words_.size() >= max_words())
        throw CapacityError("dictionary full: " + std::to_string(max_words()) + " distinct words fit in " +
                            std::to_string(width_) + " bits");
    auto index = index_offset() + static_cast<std::uint32_t>(words_.size());
    words_.push_back(word);
    lookup_.emplace(word, index);
    return index;
}

void Dictionary::save(std::ostream& os) const {
    os << "DNASTORE-DICT v1\n";
    for (std::size_t i = 0; i < words_.size(); ++i) os << index_offset() + i << '\t' << words_[i] << '\n';
}

Dictionary Dictionary::load(std::istream& is, unsigned width) {
    Dictionary d(width);
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(is, line)) throw FormatError("empty dictionary file", 1);
    ++lineno;
    strip_cr(line);
    if (trim(line) != "DNASTORE-DICT v1") throw FormatError("missing DNASTORE-DICT v1 header", lineno);
    while (std::getline(is, line)) {
        ++lineno;
        strip_cr(line);
        if (trim(line).empty()) continue;
        auto fields = split_tabs(line);
        if (fields.size() != 2) throw FormatError("expected index<TAB>word", lineno);
        auto index = parse_size(fields[0], lineno);
        auto expected = d.index_offset() + d.size();
        if (index != expected)
            throw FormatError("index " + fields[0] + " out of sequence, expected " + std::to_string(expected), lineno);
        if (d.index_of(fields[1])) throw FormatError("duplicate word '" + fields[1] + "'", lineno);
        try {
            d.intern(fields[1]);
        } catch (const Error& e) {
            throw FormatError(e.what(), lineno);
        }
    }
    return d;
}

// Layout and group packing

void BlockLayout::validate() const {
    if (addr_len < 2) throw InvalidArgument("address length must be at least 2");
    if (sub_blocks == 0 || sub_len == 0 || words_per_group == 0)
        throw InvalidArgument("block layout sizes must be positive");
    if (word_width < 2 || word_width > 30) throw InvalidArgument("word width must be in [2, 30]");
    if (marker.empty() || marker.find_first_not_of("01") != std::string::npos)
        throw InvalidArgument("marker must be a non-empty bit string");
}

void BlockLayout::check_capacity(const PrefixCodec& codec) const {
    if (codec.max_length() < sub_len)
        throw CapacityError("codec built for bodies up to " + std::to_string(codec.max_length()) + ", need " +
                            std::to_string(sub_len));
    BigInt needed = BigInt(1) << group_bits();
    if (needed > codec.capacity(sub_len))
        throw CapacityError("a " + std::to_string(group_bits()) + "-bit group does not fit " +
                            std::to_string(sub_len) + " symbols under address " + codec.address().str());
}

BigInt group_to_integer(std::span<const std::uint32_t> indices, const BlockLayout& layout) {
    if (indices.size() != layout.words_per_group)
        throw InvalidArgument("group holds " + std::to_string(indices.size()) + " indices, expected " +
                              std::to_string(layout.words_per_group));
    BigInt x = 0;
    for (char bit : layout.marker) x = (x << 1) | (bit == '1' ? 1 : 0);
    const std::uint32_t limit = std::uint32_t{1} << layout.word_width;
    for (auto i : indices) {
        if (i >= limit) throw InvalidArgument("index " + std::to_string(i) + " exceeds word width");
        x = (x << layout.word_width) | i;
    }
    return x;
}

std::vector<std::uint32_t> integer_to_group(const BigInt& x, const BlockLayout& layout) {
    if (x < 0 || x >= (BigInt(1) << layout.group_bits())) throw InvalidArgument("group value too wide");
    std::vector<std::uint32_t> out(layout.words_per_group);
    BigInt v = x;
    const BigInt mask = (BigInt(1) << layout.word_width) - 1;
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<std::uint32_t>(v & mask);
        v >>= layout.word_width;
    }
    BigInt expected = 0;
    for (char bit : layout.marker) expected = (expected << 1) | (bit == '1' ? 1 : 0);
    if (v != expected) throw InvalidArgument("group marker mismatch");
    return out;
}

// Codec book

CodecBook::CodecBook(std::span<const AddressPair> pairs, const BlockLayout& layout) {
    layout.validate();
    for (const auto& p : pairs) {
        if (p.left.size() != layout.addr_len || p.right.size() != layout.addr_len)
            throw InvalidArgument("address " + p.left.str() + " does not match the layout address length");
        if (!codecs_.count(p.left)) codecs_.emplace(p.left, PrefixCodec(p.left, layout.sub_len));
    }
}

const PrefixCodec* CodecBook::find(const DnaSeq& left) const {
    auto it = codecs_.find(left);
    return it == codecs_.end() ? nullptr : &it->second;
}

const PrefixCodec& CodecBook::at(const DnaSeq& left) const {
    if (auto* c = find(left)) return *c;
    throw InvalidArgument("no codec for address " + left.str());
}

// Encoding

DnaSeq encode_group(std::span<const std::uint32_t> indices, const PrefixCodec& codec, const BlockLayout& layout,
                    const PerturbConfig& perturbation) {
    auto body = codec.code(layout.sub_len, group_to_integer(indices, layout));
    return perturb(body, codec.address(), perturbation);
}

namespace {

bool group_verifies(const DnaSeq& raw, const PrefixCodec& codec, const BlockLayout& layout,
                    const PerturbConfig& perturbation, std::span<const std::uint32_t> indices) {
    try {
        auto body = unperturb(raw, codec.address(), perturbation);
        if (perturb(body, codec.address(), perturbation) != raw) return false;
        auto back = integer_to_group(codec.decode(body), layout);
        return std::equal(back.begin(), back.end(), indices.begin(), indices.end());
    } catch (const Error&) {
        return false;
    }
}

std::optional<EncodedBlock> try_encode_block(std::size_t index, std::span<const std::uint32_t> indices,
                                             const AddressPair& pair, const PrefixCodec& codec,
                                             const BlockLayout& layout, const PerturbConfig& perturbation) {
    EncodedBlock block{index, pair.left, pair.right, {}};
    for (std::size_t g = 0; g < layout.sub_blocks; ++g) {
        auto group = indices.subspan(g * layout.words_per_group, layout.words_per_group);
        auto raw = encode_group(group, codec, layout, perturbation);
        if (!group_verifies(raw, codec, layout, perturbation, group)) return std::nullopt;
        block.payload += raw;
    }
    auto seq = block.sequence();
    if (seq.find(pair.left, 1) != std::string::npos) return std::nullopt;
    if (seq.find(pair.right) != layout.block_len() - layout.addr_len) return std::nullopt;
    return block;
}

}  // namespace

Encoding encode_text(std::string_view text, const BlockLayout& layout, std::span<const AddressPair> pairs,
                     const CodecBook& codecs, const CodingOptions& options) {
    layout.validate();
    options.perturbation.validate();
    auto words = tokenize(text);
    if (words.empty()) throw InvalidArgument("cannot encode an empty text");

    Encoding enc{{}, Dictionary::build(words, layout.word_width), words.size(), {}};
    std::vector<std::uint32_t> indices;
    indices.reserve(words.size());
    for (const auto& w : words) indices.push_back(*enc.dictionary.index_of(w));
    const auto per_block = layout.words_per_block();
    const auto needed = (indices.size() + per_block - 1) / per_block;
    indices.resize(needed * per_block, enc.dictionary.pad_index());

    if (pairs.size() < needed)
        throw InvalidArgument("text needs " + std::to_string(needed) + " blocks but only " +
                              std::to_string(pairs.size()) + " address pairs were given");
    for (std::size_t b = 0; b < needed; ++b) layout.check_capacity(codecs.at(pairs[b].left));

    std::vector<std::optional<EncodedBlock>> blocks(needed);
    const auto n = static_cast<long long>(needed);
    std::span<const std::uint32_t> all(indices);
#pragma omp parallel for schedule(dynamic) if (parallel(options.execution))
    for (long long b = 0; b < n; ++b) {
        auto i = static_cast<std::size_t>(b);
        blocks[i] = try_encode_block(i, all.subspan(i * per_block, per_block), pairs[i], codecs.at(pairs[i].left),
                                     layout, options.perturbation);
    }

    std::size_t spare = needed;
    for (std::size_t b = 0; b < needed; ++b) {
        if (blocks[b]) continue;
        enc.skipped_pairs.push_back(b);
        while (!blocks[b]) {
            if (spare >= pairs.size())
                throw BlockError(b, std::nullopt, "no remaining address pair passes verification");
            const auto& codec = codecs.at(pairs[spare].left);
            layout.check_capacity(codec);
            blocks[b] = try_encode_block(b, all.subspan(b * per_block, per_block), pairs[spare], codec, layout,
                                         options.perturbation);
            if (!blocks[b]) enc.skipped_pairs.push_back(spare);
            ++spare;
        }
    }
    for (auto& b : blocks) enc.blocks.push_back(std::move(*b));
    return enc;
}

Encoding encode_text(std::string_view text, const BlockLayout& layout, std::span<const AddressPair> pairs,
                     const CodingOptions& options) {
    CodecBook book(pairs, layout);
    return encode_text(text, layout, pairs, book, options);
}

// Decoding

GroupDecode decode_group(const DnaSeq& raw, const PrefixCodec& codec, const BlockLayout& layout,
                         const Dictionary& dictionary, const PerturbConfig& perturbation, bool repair) {
    if (raw.size() != layout.sub_len)
        throw InvalidArgument("sub-block has " + std::to_string(raw.size()) + " symbols, expected " +
                              std::to_string(layout.sub_len));

    std::size_t fail_offset = 0;
    auto accept = [&](const DnaSeq& candidate, bool record) -> std::optional<std::vector<std::uint32_t>> {
        try {
            auto body = unperturb(candidate, codec.address(), perturbation);
            auto x = codec.decode(body);
            if (perturb(body, codec.address(), perturbation) != candidate) return std::nullopt;
            auto indices = integer_to_group(x, layout);
            for (auto i : indices)
                if (i != dictionary.pad_index() && !dictionary.is_word_index(i)) return std::nullopt;
            return indices;
        } catch (const MalformedCodeword& e) {
            if (record) fail_offset = e.offset();
            return std::nullopt;
        } catch (const InvalidArgument&) {
            return std::nullopt;
        }
    };

    if (auto clean = accept(raw, true)) return {std::move(*clean), std::nullopt};
    if (!repair) throw MalformedCodeword(fail_offset, "sub-block does not decode");

    std::vector<Repair> candidates;
    std::vector<std::uint32_t> found;
    for (std::size_t pos = 0; pos < raw.size(); ++pos) {
        for (char b : kBases) {
            if (b == raw[pos]) continue;
            if (auto indices = accept(raw.with_base(pos, b), false)) {
                candidates.push_back({pos, raw[pos], b});
                found = std::move(*indices);
            }
        }
    }
    if (candidates.size() != 1) throw UnrecoverableCodeword(fail_offset, std::move(candidates));
    return {std::move(found), candidates.front()};
}

Decoding decode_blocks(std::span<const DnaSeq> blocks, const Dictionary& dictionary, const BlockLayout& layout,
                       const CodecBook& codecs, const DecodeOptions& options) {
    layout.validate();
    options.perturbation.validate();
    if (dictionary.width() != layout.word_width)
        throw InvalidArgument("dictionary width does not match the layout");

    const auto count = blocks.size();
    std::vector<std::vector<std::uint32_t>> indices(count);
    std::vector<std::vector<SubBlockRepair>> repairs(count);
    std::vector<std::exception_ptr> errors(count);

    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic) if (parallel(options.execution))
    for (long long bi = 0; bi < n; ++bi) {
        auto b = static_cast<std::size_t>(bi);
        std::size_t g = 0;
        try {
            const auto& seq = blocks[b];
            if (seq.size() != layout.block_len())
                throw BlockError(b, std::nullopt,
                                 "length " + std::to_string(seq.size()) + ", expected " +
                                     std::to_string(layout.block_len()));
            const auto* codec = codecs.find(seq.substr(0, layout.addr_len));
            if (!codec) throw BlockError(b, std::nullopt, "unknown left address " + seq.substr(0, layout.addr_len).str());
            for (; g < layout.sub_blocks; ++g) {
                auto raw = seq.substr(layout.addr_len + g * layout.sub_len, layout.sub_len);
                auto r = decode_group(raw, *codec, layout, dictionary, options.perturbation, options.repair);
                if (r.repair) {
                    auto rep = *r.repair;
                    rep.offset += layout.addr_len + g * layout.sub_len;
                    repairs[b].push_back({b, g, rep});
                }
                indices[b].insert(indices[b].end(), r.indices.begin(), r.indices.end());
            }
        } catch (const BlockError&) {
            errors[b] = std::current_exception();
        } catch (const std::exception& e) {
            errors[b] = std::make_exception_ptr(BlockError(b, g, e.what()));
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    Decoding out;
    for (std::size_t b = 0; b < count; ++b) {
        for (auto i : indices[b]) {
            if (i == dictionary.pad_index()) continue;
            if (!out.text.empty()) out.text += ' ';
            out.text += dictionary.word_at(i);
        }
        out.repairs.insert(out.repairs.end(), repairs[b].begin(), repairs[b].end());
    }
    out.block_indices = std::move(indices);
    return out;
}

// Reporting

double density(double bytes, double nucleotides) {
    if (!(nucleotides > 0)) throw InvalidArgument("nucleotide count must be positive");
    if (bytes < 0) throw InvalidArgument("byte count must be non-negative");
    return bytes / (nucleotides * kDaltonsPerNucleotide * kGramsPerDalton);
}

PlanReport plan(std::string_view text, const BlockLayout& layout) {
    layout.validate();
    PlanReport r;
    auto words = tokenize(text);
    auto normalized = normalize_whitespace(text);
    r.words = words.size();
    r.distinct_words = std::set<std::string>(words.begin(), words.end()).size();
    r.characters = normalized.size();
    r.distinct_characters = std::set<char>(normalized.begin(), normalized.end()).size();
    r.word_bits = r.words * layout.word_width;
    if (r.distinct_characters > 1)
        r.character_bits = r.characters * std::bit_width(r.distinct_characters - 1);
    else
        r.character_bits = r.characters;
    r.blocks = (r.words + layout.words_per_block() - 1) / layout.words_per_block();
    r.nucleotides = r.blocks * layout.block_len();
    r.density = r.nucleotides ? density(static_cast<double>(r.characters), static_cast<double>(r.nucleotides)) : 0.0;
    r.ascii_bits = 7 * r.characters;
    const auto bits_per_block = 2 * layout.payload_len();
    r.ascii_blocks = (r.ascii_bits + bits_per_block - 1) / bits_per_block;
    return r;
}

// Manifest

std::string block_id(std::size_t index) {
    std::string digits = std::to_string(index);
    if (digits.size() < 4) digits.insert(0, 4 - digits.size(), '0');
    return "blk" + digits;
}

std::vector<AddressPair> Manifest::pairs() const {
    std::vector<AddressPair> out;
    for (const auto& e : blocks) out.push_back(e.pair);
    return out;
}

void Manifest::save(std::ostream& os) const {
    os << "DNASTORE-MANIFEST v1\n"
       << "addr_len=" << layout.addr_len << '\n'
       << "sub_blocks=" << layout.sub_blocks << '\n'
       << "sub_len=" << layout.sub_len << '\n'
       << "words_per_group=" << layout.words_per_group << '\n'
       << "word_width=" << layout.word_width << '\n'
       << "marker=" << layout.marker << '\n'
       << "perturb_threshold=" << perturbation.threshold << '\n'
       << "perturb_edge_divisor=" << perturbation.edge_divisor << '\n'
       << "perturb_edge_offset=" << perturbation.edge_offset << '\n'
       << "words=" << word_count << '\n';
    for (const auto& e : blocks) os << "block\t" << e.id << '\t' << e.pair.left << '\t' << e.pair.right << '\n';
}

Manifest Manifest::load(std::istream& is) {
    Manifest m;
    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(is, line)) throw FormatError("empty manifest", 1);
    strip_cr(line);
    if (trim(line) != "DNASTORE-MANIFEST v1") throw FormatError("missing DNASTORE-MANIFEST v1 header", 1);
    std::set<std::string> ids;
    while (std::getline(is, line)) {
        ++lineno;
        strip_cr(line);
        if (trim(line).empty() || line[0] == '#') continue;
        if (line.rfind("block\t", 0) == 0) {
            auto f = split_tabs(line);
            if (f.size() != 4) throw FormatError("expected block<TAB>id<TAB>left<TAB>right", lineno);
            if (!ids.insert(f[1]).second) throw FormatError("duplicate block id " + f[1], lineno);
            try {
                m.blocks.push_back({f[1], {DnaSeq(f[2]), DnaSeq(f[3])}});
            } catch (const InvalidArgument& e) {
                throw FormatError(e.what(), lineno);
            }
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw FormatError("expected key=value", lineno);
        auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));
        if (key == "addr_len") m.layout.addr_len = parse_size(value, lineno);
        else if (key == "sub_blocks") m.layout.sub_blocks = parse_size(value, lineno);
        else if (key == "sub_len") m.layout.sub_len = parse_size(value, lineno);
        else if (key == "words_per_group") m.layout.words_per_group = parse_size(value, lineno);
        else if (key == "word_width") m.layout.word_width = static_cast<unsigned>(parse_size(value, lineno));
        else if (key == "marker") m.layout.marker = value;
        else if (key == "perturb_threshold") m.perturbation.threshold = parse_size(value, lineno);
        else if (key == "perturb_edge_divisor") m.perturbation.edge_divisor = parse_size(value, lineno);
        else if (key == "perturb_edge_offset") m.perturbation.edge_offset = parse_size(value, lineno);
        else if (key == "words") m.word_count = parse_size(value, lineno);
        else throw FormatError("unknown key '" + key + "'", lineno);
    }
    try {
        m.layout.validate();
        m.perturbation.validate();
    } catch (const InvalidArgument& e) {
        throw FormatError(e.what(), lineno);
    }
    return m;
}

}  // namespace dnastore
