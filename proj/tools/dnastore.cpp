// dnastore: address design, encoding, selection and rewriting from the shell.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dnastore/address.hpp"
#include "dnastore/codec.hpp"
#include "dnastore/correlation.hpp"
#include "dnastore/pool.hpp"

namespace ds = dnastore;

namespace {

enum ExitCode { kOk = 0, kError = 1, kUnderCount = 2, kEmptySelection = 3 };

/// Ordered key/value report printed as aligned columns or key=value lines.
class Report {
public:
    template <class T>
    void add(const std::string& key, const T& value) {
        std::ostringstream os;
        os << value;
        rows_.emplace_back(key, os.str());
    }
    void add_double(const std::string& key, double value) {
        std::ostringstream os;
        os << std::setprecision(6) << value;
        rows_.emplace_back(key, os.str());
    }

    void print(std::ostream& os, bool kv) const {
        std::size_t width = 0;
        for (const auto& [k, v] : rows_) width = std::max(width, k.size());
        for (const auto& [k, v] : rows_) {
            if (kv)
                os << k << '=' << v << '\n';
            else
                os << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ds::Error("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ds::Error("cannot write " + path);
    return out;
}

std::string read_text(const std::string& path) {
    auto in = open_in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ds::kernels::Execution execution(bool serial) {
    return serial ? ds::kernels::Execution::serial : ds::kernels::Execution::parallel;
}

struct Common {
    bool kv = false;
    bool serial = false;
};

struct LayoutFlags {
    std::size_t sub_blocks = 12;
    std::size_t sub_len = 80;
    std::size_t words_per_group = 6;
    unsigned word_width = 12;
    std::string marker = "11";
    std::size_t perturb_threshold = 10;

    void attach(CLI::App* app) {
        app->add_option("--sub-blocks", sub_blocks, "Sub-blocks per block")->capture_default_str();
        app->add_option("--sub-len", sub_len, "Symbols per sub-block")->capture_default_str();
        app->add_option("--words-per-group", words_per_group, "Words per sub-block")->capture_default_str();
        app->add_option("--word-width", word_width, "Bits per word index")->capture_default_str();
        app->add_option("--marker", marker, "Leading marker bits of each group")->capture_default_str();
        app->add_option("--perturb-threshold", perturb_threshold, "Longest address prefix left unperturbed")
            ->capture_default_str();
    }
    ds::BlockLayout layout(std::size_t addr_len) const {
        ds::BlockLayout l{addr_len, sub_blocks, sub_len, words_per_group, word_width, marker};
        l.validate();
        return l;
    }
    ds::PerturbConfig perturbation() const {
        ds::PerturbConfig p;
        p.threshold = perturb_threshold;
        p.validate();
        return p;
    }
};

// addrgen

struct AddrgenArgs {
    std::size_t n = 20;
    std::size_t count = 0;
    std::uint64_t seed = 7;
    std::uint64_t budget = 10'000'000;
    int rds = 4;
    std::size_t distance = 10;
    std::size_t window = 4;
    std::size_t k = 1;
    std::size_t stem = 6;
    double gc_low = 0.4;
    double gc_high = 0.6;
    std::string mode = "interleaved";
    bool no_perturb_filter = false;
    std::string out = "addresses.txt";
    std::string pairs = "pairs.tsv";
};

int cmd_addrgen(const AddrgenArgs& a, const Common& c) {
    auto cfg = ds::ConstraintConfig::for_length(a.n);
    cfg.rds_bound = a.rds;
    cfg.min_distance = a.distance;
    cfg.prefix_window = a.window;
    cfg.uncorrelation_threshold = a.k;
    cfg.stem_len = a.stem;
    cfg.gc_low = a.gc_low;
    cfg.gc_high = a.gc_high;
    cfg.validate();

    ds::SearchOptions opt;
    opt.candidate_budget = a.budget;
    opt.mode = a.mode == "uniform" ? ds::CandidateMode::uniform : ds::CandidateMode::interleaved;
    opt.require_unique_perturbation = !a.no_perturb_filter;
    opt.execution = execution(c.serial);

    auto set = ds::greedy_search(a.count, cfg, a.seed, opt);
    {
        auto out = open_out(a.out);
        ds::write_addresses(out, set.members);
    }
    const auto blocks = set.members.size() / 2;
    {
        auto out = open_out(a.pairs);
        if (blocks > 0) ds::write_pairs(out, ds::pair_addresses(set, blocks));
    }

    Report r;
    r.add("requested", a.count);
    r.add("found", set.members.size());
    r.add("pairs", blocks);
    r.add("seed", a.seed);
    r.add("candidates", set.stats.candidates);
    r.add("rejected_c1", set.stats.rejected_c1);
    r.add("rejected_c4", set.stats.rejected_c4);
    r.add("rejected_self_correlation", set.stats.rejected_self_correlation);
    r.add("rejected_perturbation", set.stats.rejected_perturbation);
    r.add("rejected_c2", set.stats.rejected_c2);
    r.add("rejected_c3", set.stats.rejected_c3);
    r.print(std::cout, c.kv);
    if (set.members.size() < a.count) {
        std::cerr << "dnastore: found " << set.members.size() << " of " << a.count
                  << " addresses within the candidate budget\n";
        return kUnderCount;
    }
    return kOk;
}

// encode / decode

struct EncodeArgs {
    std::string text;
    std::string pairs;
    std::string out;
    std::string dict;
    std::string manifest;
    LayoutFlags layout;
};

int cmd_encode(const EncodeArgs& a, const Common& c) {
    auto text = read_text(a.text);
    std::vector<ds::AddressPair> pairs;
    {
        auto in = open_in(a.pairs);
        pairs = ds::read_pairs(in);
    }
    if (pairs.empty()) throw ds::InvalidArgument("pair file holds no address pairs");
    auto layout = a.layout.layout(pairs.front().left.size());
    ds::CodingOptions opt{a.layout.perturbation(), execution(c.serial)};
    auto enc = ds::encode_text(text, layout, pairs, opt);

    auto pool = ds::Pool::from_encoding(enc);
    ds::Manifest m{layout, opt.perturbation, enc.word_count, {}};
    for (const auto& b : enc.blocks) m.blocks.push_back({ds::block_id(b.index), {b.left, b.right}});

    const auto dict_path = a.dict.empty() ? a.out + ".dict" : a.dict;
    const auto manifest_path = a.manifest.empty() ? a.out + ".manifest" : a.manifest;
    {
        auto out = open_out(a.out);
        ds::pool_save(pool, out);
    }
    {
        auto out = open_out(dict_path);
        enc.dictionary.save(out);
    }
    {
        auto out = open_out(manifest_path);
        m.save(out);
    }

    Report r;
    r.add("words", enc.word_count);
    r.add("distinct_words", enc.dictionary.size());
    r.add("blocks", enc.blocks.size());
    r.add("block_length", layout.block_len());
    r.add("skipped_pairs", enc.skipped_pairs.size());
    r.add("pool", a.out);
    r.add("dictionary", dict_path);
    r.add("manifest", manifest_path);
    r.print(std::cout, c.kv);
    return kOk;
}

struct Bundle {
    ds::Pool pool;
    ds::Manifest manifest;
    ds::Dictionary dictionary;
};

Bundle load_bundle(const std::string& pool_path, const std::string& dict_path, const std::string& manifest_path) {
    auto pin = open_in(pool_path);
    auto pool = ds::pool_load(pin);
    auto min = open_in(manifest_path.empty() ? pool_path + ".manifest" : manifest_path);
    auto manifest = ds::Manifest::load(min);
    auto din = open_in(dict_path.empty() ? pool_path + ".dict" : dict_path);
    auto dict = ds::Dictionary::load(din, manifest.layout.word_width);
    return {std::move(pool), std::move(manifest), std::move(dict)};
}

struct DecodeArgs {
    std::string pool;
    std::string dict;
    std::string manifest;
    std::string out;
    bool repair = false;
};

int cmd_decode(const DecodeArgs& a, const Common& c) {
    auto b = load_bundle(a.pool, a.dict, a.manifest);
    std::vector<ds::DnaSeq> blocks;
    for (const auto& e : b.manifest.blocks) {
        if (!b.pool.index_of(e.id)) throw ds::InvalidArgument("pool lacks block " + e.id);
        blocks.push_back(b.pool.at(e.id).sequence);
    }
    auto pairs = b.manifest.pairs();
    ds::CodecBook book(pairs, b.manifest.layout);
    ds::DecodeOptions opt{a.repair, b.manifest.perturbation, execution(c.serial)};
    ds::Decoding dec;
    try {
        dec = ds::decode_blocks(blocks, b.dictionary, b.manifest.layout, book, opt);
    } catch (const ds::BlockError& e) {
        const auto& id = b.manifest.blocks.at(e.block()).id;
        std::string where = "block " + id;
        if (e.sub_block()) where += " sub-block " + std::to_string(*e.sub_block());
        throw ds::Error(where + ": " + e.what());
    }
    for (const auto& r : dec.repairs)
        std::cerr << "repair block=" << b.manifest.blocks[r.block].id << " sub_block=" << r.sub_block
                  << " offset=" << r.repair.offset << " " << r.repair.original << "->" << r.repair.replacement
                  << '\n';
    if (a.out.empty()) {
        std::cout << dec.text << '\n';
    } else {
        auto out = open_out(a.out);
        out << dec.text << '\n';
    }
    return kOk;
}

// select

struct SelectArgs {
    std::string pool;
    std::string fwd;
    std::string rev;
    std::string right;
    std::size_t tolerance = 0;
    std::string out;
};

int cmd_select(const SelectArgs& a, const Common& c) {
    auto in = open_in(a.pool);
    auto pool = ds::pool_load(in);
    if (a.rev.empty() == a.right.empty()) throw ds::InvalidArgument("give exactly one of --rev and --right");
    auto fwd = ds::Primer::forward(ds::DnaSeq(a.fwd));
    auto rev = a.rev.empty() ? ds::Primer::for_right(ds::DnaSeq(a.right)) : ds::Primer::reverse(ds::DnaSeq(a.rev));
    auto ids = ds::select(pool, fwd, rev, a.tolerance, execution(c.serial));
    auto picked = pool.subset(ids);
    if (a.out.empty()) {
        ds::pool_save(picked, std::cout);
    } else {
        auto out = open_out(a.out);
        ds::pool_save(picked, out);
    }
    std::cerr << "dnastore: " << ids.size() << " matching block(s)\n";
    return ids.empty() ? kEmptySelection : kOk;
}

// rewrite

struct RewriteArgs {
    std::string pool;
    std::string block;
    std::string out;
    std::size_t group = 0;
    std::vector<std::string> words;
    std::string dict;
    std::string manifest;
    std::string dict_out;
    std::string fragment;
    std::size_t homology = 30;
};

int cmd_rewrite(const RewriteArgs& a, const Common& c) {
    ds::Pool result;
    Report r;
    if (!a.fragment.empty()) {
        if (!a.words.empty()) throw ds::InvalidArgument("give either --words or --fragment");
        auto in = open_in(a.pool);
        auto pool = ds::pool_load(in);
        result = ds::gblock_rewrite(pool, a.block, {ds::DnaSeq(a.fragment), ds::FragmentRole::middle}, a.homology);
        r.add("mode", "fragment");
    } else {
        if (a.words.empty()) throw ds::InvalidArgument("give --words or --fragment");
        auto b = load_bundle(a.pool, a.dict, a.manifest);
        auto pairs = b.manifest.pairs();
        ds::CodecBook book(pairs, b.manifest.layout);
        auto edit = ds::edit_words(b.pool, a.block, a.group, a.words, b.dictionary, b.manifest.layout, book,
                                   b.manifest.perturbation);
        result = std::move(edit.pool);
        const auto dict_out = a.dict_out.empty() ? a.out + ".dict" : a.dict_out;
        auto out = open_out(dict_out);
        edit.dictionary.save(out);
        r.add("mode", "words");
        r.add("group", a.group);
        r.add("dictionary", dict_out);
        r.add("distinct_words", edit.dictionary.size());
    }
    {
        auto out = open_out(a.out);
        ds::pool_save(result, out);
    }
    r.add("block", a.block);
    r.add("block_length", result.at(a.block).sequence.size());
    r.add("pool", a.out);
    r.print(std::cout, c.kv);
    return kOk;
}

// count

struct CountArgs {
    std::vector<std::string> patterns;
    std::size_t max_n = 10;
    std::size_t maxset_n = 0;
};

int cmd_count(const CountArgs& a, const Common& c) {
    if (a.maxset_n != 0) {
        if (!a.patterns.empty()) throw ds::InvalidArgument("give either --pattern or --maxset-n");
        auto exact = ds::max_uncorrelated_bruteforce(a.maxset_n);
        auto bounds = ds::bounds_u(a.maxset_n);
        Report r;
        r.add("n", a.maxset_n);
        r.add("u", exact.size);
        r.add("lower_bound", bounds.lower);
        r.add("upper_bound", bounds.upper);
        std::string witness;
        for (const auto& w : exact.witness) witness += (witness.empty() ? "" : ",") + w.str();
        r.add("witness", witness);
        r.print(std::cout, c.kv);
        return kOk;
    }
    if (a.patterns.empty()) throw ds::InvalidArgument("give --pattern or --maxset-n");
    std::vector<ds::DnaSeq> patterns;
    for (const auto& p : a.patterns) patterns.emplace_back(p);
    auto table = ds::count_avoiding(patterns, a.max_n);
    if (c.kv) {
        for (std::size_t n = 0; n < table.counts.size(); ++n) std::cout << "f" << n << '=' << table.counts[n] << '\n';
    } else {
        const auto width = table.counts.back().str().size();
        std::cout << std::setw(4) << "N" << "  " << std::setw(static_cast<int>(width)) << "f(N)" << '\n';
        for (std::size_t n = 0; n < table.counts.size(); ++n)
            std::cout << std::setw(4) << n << "  " << std::setw(static_cast<int>(width)) << table.counts[n] << '\n';
    }
    return kOk;
}

// stats

struct StatsArgs {
    std::string text;
    std::string pool;
    std::string dict;
    std::string manifest;
    std::size_t addr_len = 20;
    LayoutFlags layout;
};

int cmd_stats(const StatsArgs& a, const Common& c) {
    Report r;
    if (!a.text.empty() == !a.pool.empty()) throw ds::InvalidArgument("give exactly one of --text and --pool");
    if (!a.text.empty()) {
        auto p = ds::plan(read_text(a.text), a.layout.layout(a.addr_len));
        r.add("words", p.words);
        r.add("distinct_words", p.distinct_words);
        r.add("characters", p.characters);
        r.add("distinct_characters", p.distinct_characters);
        r.add("word_bits", p.word_bits);
        r.add("character_bits", p.character_bits);
        r.add("blocks", p.blocks);
        r.add("nucleotides", p.nucleotides);
        r.add_double("density_bytes_per_gram", p.density);
        r.add("ascii_bits", p.ascii_bits);
        r.add("ascii_blocks", p.ascii_blocks);
    } else {
        auto in = open_in(a.pool);
        auto pool = ds::pool_load(in);
        std::size_t nts = 0, gc = 0;
        for (const auto& rec : pool.records()) {
            nts += rec.sequence.size();
            gc += ds::gc_count(rec.sequence);
        }
        r.add("blocks", pool.size());
        r.add("nucleotides", nts);
        r.add_double("gc_fraction", nts ? static_cast<double>(gc) / static_cast<double>(nts) : 0.0);
        if (!a.dict.empty() || !a.manifest.empty()) {
            auto b = load_bundle(a.pool, a.dict, a.manifest);
            std::vector<ds::DnaSeq> blocks;
            for (const auto& e : b.manifest.blocks) blocks.push_back(b.pool.at(e.id).sequence);
            auto pairs = b.manifest.pairs();
            ds::CodecBook book(pairs, b.manifest.layout);
            auto dec = ds::decode_blocks(blocks, b.dictionary, b.manifest.layout, book,
                                         {true, b.manifest.perturbation, execution(c.serial)});
            r.add("characters", dec.text.size());
            r.add_double("density_bytes_per_gram",
                         nts ? ds::density(static_cast<double>(dec.text.size()), static_cast<double>(nts)) : 0.0);
        }
    }
    r.print(std::cout, c.kv);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DNA storage with prefix-synchronized addressing"};
    app.require_subcommand(1);
    Common common;
    app.add_flag("--kv", common.kv, "Print reports as key=value lines");
    app.add_flag("--serial", common.serial, "Use the serial reference kernels");

    AddrgenArgs ag;
    auto* addrgen = app.add_subcommand("addrgen", "Generate constrained address sequences");
    addrgen->add_option("--n", ag.n, "Address length")->capture_default_str();
    addrgen->add_option("--count", ag.count, "Number of addresses")->required()->check(CLI::PositiveNumber);
    addrgen->add_option("--seed", ag.seed, "Candidate stream seed")->capture_default_str();
    addrgen->add_option("--budget", ag.budget, "Maximum candidates examined")->capture_default_str();
    addrgen->add_option("--rds", ag.rds, "Running digital sum bound")->capture_default_str();
    addrgen->add_option("--distance", ag.distance, "Minimum pairwise Hamming distance")->capture_default_str();
    addrgen->add_option("--window", ag.window, "Shortest prefix held to the GC window")->capture_default_str();
    addrgen->add_option("--k", ag.k, "Shortest overlap that counts as correlation")->capture_default_str();
    addrgen->add_option("--stem", ag.stem, "Stem length of the folding heuristic")->capture_default_str();
    addrgen->add_option("--gc-low", ag.gc_low, "Lowest GC fraction")->capture_default_str();
    addrgen->add_option("--gc-high", ag.gc_high, "Highest GC fraction")->capture_default_str();
    addrgen->add_option("--mode", ag.mode, "Candidate stream")
        ->check(CLI::IsMember({"interleaved", "uniform"}))
        ->capture_default_str();
    addrgen->add_flag("--no-perturb-filter", ag.no_perturb_filter, "Keep addresses whose perturbation may collide");
    addrgen->add_option("--out", ag.out, "Address file")->capture_default_str();
    addrgen->add_option("--pairs", ag.pairs, "Pair file")->capture_default_str();

    EncodeArgs en;
    auto* encode = app.add_subcommand("encode", "Encode a text into a pool");
    encode->add_option("--text", en.text, "Input text")->required();
    encode->add_option("--pairs", en.pairs, "Address pair file")->required();
    encode->add_option("--out", en.out, "Output pool file")->required();
    encode->add_option("--dict", en.dict, "Dictionary file (default <out>.dict)");
    encode->add_option("--manifest", en.manifest, "Manifest file (default <out>.manifest)");
    en.layout.attach(encode);

    DecodeArgs de;
    auto* decode = app.add_subcommand("decode", "Decode a pool back to text");
    decode->add_option("--pool", de.pool, "Pool file")->required();
    decode->add_option("--dict", de.dict, "Dictionary file (default <pool>.dict)");
    decode->add_option("--manifest", de.manifest, "Manifest file (default <pool>.manifest)");
    decode->add_option("--out", de.out, "Output text file (default standard output)");
    decode->add_flag("--repair", de.repair, "Repair single substitutions and log them to standard error");

    SelectArgs se;
    auto* sel = app.add_subcommand("select", "Select blocks by primer pair");
    sel->add_option("--pool", se.pool, "Pool file")->required();
    sel->add_option("--fwd", se.fwd, "Forward primer, 5' to 3'")->required();
    sel->add_option("--rev", se.rev, "Reverse primer, 5' to 3'");
    sel->add_option("--right", se.right, "Right address (the reverse primer is its reverse complement)");
    sel->add_option("--tolerance", se.tolerance, "Mismatches allowed per primer")
        ->check(CLI::Range(0, 3))
        ->capture_default_str();
    sel->add_option("--out", se.out, "Output pool file (default standard output)");

    RewriteArgs rw;
    auto* rewrite = app.add_subcommand("rewrite", "Rewrite one block");
    rewrite->add_option("--pool", rw.pool, "Pool file")->required();
    rewrite->add_option("--block", rw.block, "Block id")->required();
    rewrite->add_option("--out", rw.out, "Output pool file")->required();
    rewrite->add_option("--group", rw.group, "Sub-block index")->capture_default_str();
    rewrite->add_option("--words", rw.words, "Replacement words for the group");
    rewrite->add_option("--dict", rw.dict, "Dictionary file (default <pool>.dict)");
    rewrite->add_option("--manifest", rw.manifest, "Manifest file (default <pool>.manifest)");
    rewrite->add_option("--dict-out", rw.dict_out, "Updated dictionary (default <out>.dict)");
    rewrite->add_option("--fragment", rw.fragment, "gBlock fragment with homology ends");
    rewrite->add_option("--homology", rw.homology, "Homology anchor length")->capture_default_str();

    CountArgs co;
    auto* count = app.add_subcommand("count", "Count pattern-avoiding strings or exact u(n)");
    count->add_option("--pattern", co.patterns, "Pattern to avoid (repeatable)");
    count->add_option("--N", co.max_n, "Largest string length")->capture_default_str();
    count->add_option("--maxset-n", co.maxset_n, "Exact largest uncorrelated set for n in {2,3}");

    StatsArgs st;
    auto* stats = app.add_subcommand("stats", "Plan report for a text or summary of a pool");
    stats->add_option("--text", st.text, "Input text");
    stats->add_option("--pool", st.pool, "Pool file");
    stats->add_option("--dict", st.dict, "Dictionary, to decode the pool");
    stats->add_option("--manifest", st.manifest, "Manifest, to decode the pool");
    stats->add_option("--addr-len", st.addr_len, "Address length for the plan")->capture_default_str();
    st.layout.attach(stats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    try {
        if (*addrgen) return cmd_addrgen(ag, common);
        if (*encode) return cmd_encode(en, common);
        if (*decode) return cmd_decode(de, common);
        if (*sel) return cmd_select(se, common);
        if (*rewrite) return cmd_rewrite(rw, common);
        if (*count) return cmd_count(co, common);
        if (*stats) return cmd_stats(st, common);
    } catch (const std::exception& e) {
        std::cerr << "dnastore: error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
