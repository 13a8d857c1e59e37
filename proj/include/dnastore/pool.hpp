#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnastore/codec.hpp"
#include "dnastore/error.hpp"
#include "dnastore/kernels.hpp"
#include "dnastore/seqcore.hpp"

namespace dnastore {

/// Raised when an anchor, primer site or overlap matches more than once.
class AmbiguityError : public Error {
public:
    using Error::Error;
};

struct PoolRecord {
    std::string id;
    DnaSeq sequence;
    DnaSeq left;
    DnaSeq right;
    std::uint64_t copies = 1;

    friend bool operator==(const PoolRecord&, const PoolRecord&) = default;
};

/// Immutable ordered collection of blocks; every edit returns a new pool.
class Pool {
public:
    Pool() = default;
    /// Throws InvalidArgument on duplicate ids or records whose sequence does
    /// not start with left and end with right.
    explicit Pool(std::vector<PoolRecord> records);

    static Pool from_encoding(const Encoding& encoding);

    const std::vector<PoolRecord>& records() const noexcept { return records_; }
    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }

    std::optional<std::size_t> index_of(std::string_view id) const;
    const PoolRecord& at(std::string_view id) const;
    std::vector<DnaSeq> sequences() const;

    Pool with_sequence(std::string_view id, DnaSeq sequence) const;
    Pool subset(std::span<const std::string> ids) const;

    friend bool operator==(const Pool&, const Pool&) = default;

private:
    std::vector<PoolRecord> records_;
};

enum class PrimerDirection { forward, reverse };

/// A primer as synthesized, 5' to 3'. A reverse primer anneals to the top
/// strand, so it is the reverse complement of the block suffix it targets.
struct Primer {
    DnaSeq sequence;
    PrimerDirection direction = PrimerDirection::forward;

    static constexpr std::size_t kMinLength = 10;

    static Primer forward(DnaSeq sequence);
    static Primer reverse(DnaSeq sequence);
    /// Primers for a block's own addresses.
    static Primer for_left(const DnaSeq& left) { return forward(left); }
    static Primer for_right(const DnaSeq& right) { return reverse(reverse_complement(right)); }
};

enum class FragmentRole { upstream, middle, downstream };

struct Fragment {
    DnaSeq sequence;
    FragmentRole role = FragmentRole::middle;
};

/// Ids of blocks whose prefix is within `tolerance` of the forward primer and
/// whose reverse-complemented suffix is within `tolerance` of the reverse
/// primer. Tolerance must be at most 3.
std::vector<std::string> select(const Pool& pool, const Primer& fwd, const Primer& rev, std::size_t tolerance,
                                kernels::Execution exec = kernels::Execution::parallel);

/// The selected blocks with their copy counts multiplied by `factor`.
Pool amplify(const Pool& pool, const Primer& fwd, const Primer& rev, std::size_t tolerance,
             std::uint64_t factor = 1);

/// PCR product of one template. Each primer anneals with its longest 3'
/// portion (at least min_anneal symbols) that occurs exactly once; any 5'
/// overhang is carried into the product.
DnaSeq pcr_amplify(const DnaSeq& templ, const Primer& fwd, const Primer& rev, std::size_t min_anneal = 15);

/// Replaces the span of block `id` between the fragment's homology anchors
/// (both included) by the fragment.
Pool gblock_rewrite(const Pool& pool, std::string_view id, const Fragment& replacement,
                    std::size_t min_homology = 30);

/// Joins consecutive fragments on their exact suffix/prefix overlaps.
DnaSeq oe_pcr_assemble(std::span<const DnaSeq> fragments, std::size_t min_overlap = 30);
DnaSeq oe_pcr_assemble(std::span<const Fragment> fragments, std::size_t min_overlap = 30);

struct EditResult {
    Pool pool;
    Dictionary dictionary;
};

/// Re-encodes one group of block `id` with `new_words`, interning unknown
/// words. Only that sub-block changes.
EditResult edit_words(const Pool& pool, std::string_view id, std::size_t group_index,
                      std::span<const std::string> new_words, const Dictionary& dictionary,
                      const BlockLayout& layout, const CodecBook& codecs, const PerturbConfig& perturbation = {});

/// ";DNASTORE-POOL v1", then ">id left=<addr> right=<addr>" and the sequence
/// on the next line. Records with more than one copy add " copies=<n>".
void pool_save(const Pool& pool, std::ostream& os);
Pool pool_load(std::istream& is);

}  // namespace dnastore
