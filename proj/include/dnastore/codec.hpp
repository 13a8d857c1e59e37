#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dnastore/address.hpp"
#include "dnastore/bigint.hpp"
#include "dnastore/error.hpp"
#include "dnastore/kernels.hpp"
#include "dnastore/psc.hpp"
#include "dnastore/seqcore.hpp"

namespace dnastore {

/// Error tied to a block (and optionally a sub-block) of an encoding.
class BlockError : public Error {
public:
    BlockError(std::size_t block, std::optional<std::size_t> sub_block, const std::string& what);

    std::size_t block() const noexcept { return block_; }
    std::optional<std::size_t> sub_block() const noexcept { return sub_block_; }

private:
    std::size_t block_;
    std::optional<std::size_t> sub_block_;
};

class CapacityError : public Error {
public:
    using Error::Error;
};

/// Splits on runs of whitespace.
std::vector<std::string> tokenize(std::string_view text);

/// Words joined by single spaces.
std::string normalize_whitespace(std::string_view text);

/// Bijection between distinct words and fixed-width indices. Word indices
/// start at 2^(width-1) so the top bit of every index is set; the all-ones
/// index is reserved for padding.
class Dictionary {
public:
    explicit Dictionary(unsigned width = 12);

    /// Distinct words in first-occurrence order. Throws CapacityError when they
    /// do not fit the width, and InvalidArgument for an empty word list.
    static Dictionary build(std::span<const std::string> words, unsigned width);
    static Dictionary build(std::string_view text, unsigned width);

    unsigned width() const noexcept { return width_; }
    std::uint32_t index_offset() const noexcept { return std::uint32_t{1} << (width_ - 1); }
    std::uint32_t pad_index() const noexcept { return (std::uint32_t{1} << width_) - 1; }
    std::size_t size() const noexcept { return words_.size(); }
    std::size_t max_words() const noexcept { return pad_index() - index_offset(); }
    const std::vector<std::string>& words() const noexcept { return words_; }

    std::optional<std::uint32_t> index_of(std::string_view word) const;
    bool is_word_index(std::uint32_t index) const noexcept;
    const std::string& word_at(std::uint32_t index) const;

    /// Index of `word`, adding it if absent; throws CapacityError when full.
    std::uint32_t intern(const std::string& word);

    /// "DNASTORE-DICT v1" header, then "index<TAB>word" lines in index order.
    void save(std::ostream& os) const;
    static Dictionary load(std::istream& is, unsigned width);

    friend bool operator==(const Dictionary& a, const Dictionary& b) {
        return a.width_ == b.width_ && a.words_ == b.words_;
    }

private:
    unsigned width_;
    std::vector<std::string> words_;
    std::unordered_map<std::string, std::uint32_t> lookup_;
};

/// Geometry of a storage block: left address, sub_blocks bodies of sub_len
/// symbols (each holding one group of words), right address.
struct BlockLayout {
    std::size_t addr_len = 20;
    std::size_t sub_blocks = 12;
    std::size_t sub_len = 80;
    std::size_t words_per_group = 6;
    unsigned word_width = 12;
    std::string marker = "11";

    std::size_t payload_len() const noexcept { return sub_blocks * sub_len; }
    std::size_t block_len() const noexcept { return 2 * addr_len + payload_len(); }
    std::size_t words_per_block() const noexcept { return sub_blocks * words_per_group; }
    std::size_t group_bits() const noexcept { return marker.size() + words_per_group * word_width; }

    void validate() const;
    /// Throws CapacityError unless 2^group_bits <= capacity(sub_len).
    void check_capacity(const PrefixCodec& codec) const;

    friend bool operator==(const BlockLayout&, const BlockLayout&) = default;
};

/// Marker bits followed by every index, most significant bit first.
BigInt group_to_integer(std::span<const std::uint32_t> indices, const BlockLayout& layout);

/// Inverse of group_to_integer; throws InvalidArgument if the marker is wrong
/// or the value is too wide.
std::vector<std::uint32_t> integer_to_group(const BigInt& x, const BlockLayout& layout);

/// Prefix codecs for a fixed set of left addresses, built once and then
/// shared read-only.
class CodecBook {
public:
    CodecBook() = default;
    CodecBook(std::span<const AddressPair> pairs, const BlockLayout& layout);

    const PrefixCodec& at(const DnaSeq& left) const;
    const PrefixCodec* find(const DnaSeq& left) const;
    std::size_t size() const noexcept { return codecs_.size(); }

private:
    std::map<DnaSeq, PrefixCodec> codecs_;
};

struct EncodedBlock {
    std::size_t index = 0;
    DnaSeq left;
    DnaSeq right;
    DnaSeq payload;

    DnaSeq sequence() const { return left + payload + right; }
};

struct CodingOptions {
    PerturbConfig perturbation{};
    kernels::Execution execution = kernels::Execution::parallel;
};

struct Encoding {
    std::vector<EncodedBlock> blocks;
    Dictionary dictionary;
    std::size_t word_count = 0;
    std::vector<std::size_t> skipped_pairs;  // pair indices rejected by verification
};

/// One perturbed sub-block body for a group of word indices.
DnaSeq encode_group(std::span<const std::uint32_t> indices, const PrefixCodec& codec,
                    const BlockLayout& layout, const PerturbConfig& perturbation);

/// Encodes text into blocks. Block b uses pairs[b]; a block that fails
/// verification (an address occurrence across sub-block seams or a
/// perturbation that does not invert) takes the next unused pair after the
/// first blocks-needed ones.
Encoding encode_text(std::string_view text, const BlockLayout& layout,
                     std::span<const AddressPair> pairs, const CodecBook& codecs,
                     const CodingOptions& options = {});
Encoding encode_text(std::string_view text, const BlockLayout& layout,
                     std::span<const AddressPair> pairs, const CodingOptions& options = {});

struct SubBlockRepair {
    std::size_t block = 0;
    std::size_t sub_block = 0;
    Repair repair;
};

struct GroupDecode {
    std::vector<std::uint32_t> indices;
    std::optional<Repair> repair;
};

/// Decodes one sub-block. A body is accepted iff it unperturbs and parses to a
/// value whose re-encoding reproduces it and whose marker and indices are
/// valid. With `repair`, a damaged body is fixed when exactly one single-symbol
/// substitution is accepted; otherwise InvalidArgument/MalformedCodeword.
GroupDecode decode_group(const DnaSeq& body, const PrefixCodec& codec, const BlockLayout& layout,
                         const Dictionary& dictionary, const PerturbConfig& perturbation,
                         bool repair);

struct DecodeOptions {
    bool repair = true;
    PerturbConfig perturbation{};
    kernels::Execution execution = kernels::Execution::parallel;
};

struct Decoding {
    std::string text;
    std::vector<std::vector<std::uint32_t>> block_indices;
    std::vector<SubBlockRepair> repairs;
};

Decoding decode_blocks(std::span<const DnaSeq> blocks, const Dictionary& dictionary,
                       const BlockLayout& layout, const CodecBook& codecs,
                       const DecodeOptions& options = {});

/// Bytes per gram at 650 Da per nucleotide.
double density(double bytes, double nucleotides);

struct PlanReport {
    std::size_t words = 0;
    std::size_t distinct_words = 0;
    std::size_t characters = 0;
    std::size_t distinct_characters = 0;
    std::size_t word_bits = 0;
    std::size_t character_bits = 0;
    std::size_t blocks = 0;
    std::size_t nucleotides = 0;
    double density = 0.0;
    std::size_t ascii_bits = 0;
    std::size_t ascii_blocks = 0;
};

PlanReport plan(std::string_view text, const BlockLayout& layout);

/// Layout, perturbation rule and address pairs needed to decode a pool.
struct Manifest {
    struct Entry {
        std::string id;
        AddressPair pair;
    };
    BlockLayout layout;
    PerturbConfig perturbation;
    std::size_t word_count = 0;
    std::vector<Entry> blocks;

    std::vector<AddressPair> pairs() const;
    void save(std::ostream& os) const;
    static Manifest load(std::istream& is);
};

/// Conventional record id for the block with ordinal `index`.
std::string block_id(std::size_t index);

}  // namespace dnastore
