#pragma once

// Sequences from the published rewrite experiments, used verbatim as fixtures.

#include <array>
#include <string_view>

namespace fixtures {
inline constexpr std::string_view kB1Original =
    "AATTACTAAGCGACCTTCTCGGATAGAACGCTTAGTTGGTGCGTTGACAT"
    "GCTCGAACTGATCATCGGTCACTTGCATTCATTATTGATTGTTGAGTTGA"
    "GAAGCGCATTGGTGTCACTCGTTGCTGGGTCATTTTCGGCGAGAGAAACA"
    "GTTCACTGTGGCGTGATGTTTTGAAATGAGGGAGAGTTCTCTTAACTGCA"
    "GTTGGAGTTCAGTATACTCGGGATAGTGTAACAGAGGGAGGCGGATGTGT"
    "GTATTGATGTGAAGTCTTTCACGTGCGGGCTAGGTCGTAATGACGGGTCG"
    "GGAACTATTCATTGGCGCAATAGTGATTTTGATGAATGATGGATAGAACG"
    "CTTAAAGGGAAACTATATAGTTCAAAGCTCGTCGGCGGTGTCGAGGATGT"
    "ATAGGGGTTAATGAATGGTGGAACTTACTTATACTATAGATTGGACTGGT"
    "GGTATGAGAACTTCACTAATTATTGACGTCACAGTTAGTTGTTATGAAGT"
    "GATAATATGAATCGAGCGCAACAGGACTAGTCATTTACTTTTAAGGGAGA"
    "GGAATAGCTAATCTCAAATTTTTTTTATGTGAGTGCACGATCATCACATA"
    "ACATAGGAGGCGATGAGACAGCGACTCAATCTGACTAATTCATTATAGGA"
    "GTTATATGAAGAGTTCGGAACGAAGCTAGCGCTTTCGCACAATGCGAGGG"
    "ATAAGAGCGGGTGCAGAGCGAAGGGTGTGAAATTGATGGTGGATAAGAAC"
    "TTCGCACAGTACTAGCTAGTGGGGAGAGACTTCTATGAATTCGGAGGGAT"
    "ACTTGATATTGATATGGGGGGATGGCGCTATTAAGCGCAGAGCGTAAGTG"
    "CGCTTCAAATCGAACATTGTGTAGCTAAGCAATAGAGAAATGTGGGGATT"
    "GAGCAGTTCGTATCGGTTCGCATGACATACTTGGGAAAATGGCAGCTTGT"
    "TTAAGCTAAACTGGATGAAAGGGAGGAAAAACTTATTGCGACTTCTAAGG";

inline constexpr std::string_view kB1Edited =
    "AATTACTAAGCGACCTTCTCGGATAGAACGCTTAGTTGGTGCGTTGACAT"
    "GCTCGAACTGATCATCGGTCACTTGCATTCATTATTGATTGTTGAGTTGA"
    "GAAGCGCATTGGTGTCACTCGTTGCTGGGTCATTTTCGGCGAGAGAAACA"
    "GTTCACTGTGGCGTGATGTTTTGAAATGAGGGAGAGTTCTCTTAACTGCA"
    "GTTGGAGTTCAGTATACTCGGGATAGTGTAACAGAGGGAGGCGGATGTGT"
    "GTATTGATGTGAAGTCTTTCACGTGCGGGCTAGGTCGTAATGACGGGTCG"
    "GGAACTATTCATTGGCGCAATAGTGATTTTGATGAATGATGGATAGAACG"
    "CTTAAAGGGAAACTATATAGTTCAAAGCTCGTCGGCGGTGTCGAGGATGT"
    "ATAGGGGTTAATGAATGGTGGAACTTACTTATACTATAGATTGGACTGGT"
    "GGTATGAGAACTTCACTAATTATTGACGTCACAGTTAGTTGTTATGAAGT"
    "GATAATATGAATCGAGCGCAACAGGACTAGTCATTTACTTTTAAGGGAGA"
    "GGAATAGCTAGCTCTTGAAATATGGGTTATGAGTGCACGATCATCACATA"
    "ACATAGGAGGCGATGAGACAGCGACTCAATCTGACTAATTCATTATAGGA"
    "GTTATATGAAGAGTTCGGAACGAAGCTAGCGCTTTCGCACAATGCGAGGG"
    "ATAAGAGCGGGTGCAGAGCGAAGGGTGTGAAATTGATGGTGGATAAGAAC"
    "TTCGCACAGTACTAGCTAGTGGGGAGAGACTTCTATGAATTCGGAGGGAT"
    "ACTTGATATTGATATGGGGGGATGGCGCTATTAAGCGCAGAGCGTAAGTG"
    "CGCTTCAAATCGAACATTGTGTAGCTAAGCAATAGAGAAATGTGGGGATT"
    "GAGCAGTTCGTATCGGTTCGCATGACATACTTGGGAAAATGGCAGCTTGT"
    "TTAAGCTAAACTGGATGAAAGGGAGGAAAAACTTATTGCGACTTCTAAGG";

inline constexpr std::string_view kB2Original =
    "AACCTAACCATCTTCCTCTCGATTTGGAGCAGATTGGTATTATTCTAGTC"
    "GTCGAGACTAGTCAACTGCGCTAGTTTGTGTTCATAAAATAAGAGTATGA"
    "GATACAAGCTGATATGGGAACTTAATTACGAAGCACAGTGTTGCTGCGTG"
    "GACTTGTGAAGTAGGGTGTGAGATAAGAATGATAGCGAACGCAGCGTATG"
    "GCTGAAGTGCTGGGCATATTGTGGTGTGGACATCTCAAAGTCTATGAAGA"
    "TTGGTAATAGGATGGTCTCTCGGGTCTCAAACTTCGTCAGGCAGCATTGT"
    "GCATGCGAGTGATTGAAAGGGAGGGTAAGGGTTATTAATAGAAAAGACTT"
    "ACAGGCGTTGGTATGATTCAAGATCGCAAGAATCGTGTGAGCTTGAGGAC"
    "TAAATAGTTTAAAGAAATAGGAATAGTTGTAATTTAAGGAGCGTGGCACG"
    "GATGGATCAGCGTGTCAACGGAACGCGCATTTGGGAGTTTTATGTTAAGT"
    "GAGCAGACTAAGGTGAAATTCAATAGTCTCTATCGTTCGAGGGTTATTGC"
    "TAGGGGAGACTTTGAGTGAGTGGTAATTTTGAAGCAGTATACGTAACTTT"
    "TTCGATTCTTAGTGGCAGTTACTCTGAATTTTAGTGTGAGCAGAGTGTGA"
    "TAAATAGAGAGATACGAGGTCGACACGGCTGTTGGGGGCACTTAACAGTA"
    "GGGGGTTGATGCTGGCGGACACTAAAGGATTTTTGAAGGGGATTGTTGGC"
    "GACTCACATCTAAGTGGTATTGCGGGCTCTATGAGAATCTGCTCGAGTCA"
    "TCTAGGTTGAGGAAGAGGGGGAGATTCTCGTTAAAGACAGTACATATTTC"
    "GCATACTTCTTAACGTGGAGTATGAATGTCAATGGTGGGAGATATGGGTG"
    "GAGGGATTTCATTCACTGCATATGTACGCTCAGGAGCGCGAACGAATCAT"
    "AAAACTATTGTAATATATTGATAGATAAAGAAACGATCCCCTGACAGAGC";

inline constexpr std::string_view kB2Edited =
    "AACCTAACCATCTTCCTCTCGATTTGGAGCAGATTGGTATTATTCTAGTC"
    "GTCGAGACTAGTCAACTGCGCTGACGGTTATGGAATTAGGGTTGAGATGG"
    "GATACAAGCTGATATGGGAACTTAATTACGAAGCACAGTGTTGCTGCGTG"
    "GACTTGTGAAGTAGGGTGTGAGATAAGAATGATAGCGAACGCAGCGTATG"
    "GCTGAAGTGCTGGGCATATTGTGGTGTGGACATCTCAAAGTCTATGAAGA"
    "TTGGTAATAGGATGGTCTCTCGGGTCTCAAACTTCGTCAGGCAGCATTGT"
    "GCATGCGAGTGATTGAAAGGGAGGGTAAGGGTTATTAATAGAAAAGACTT"
    "ACAGGCGTTGGTATGATTCAAGATCGCAAGAATCGTGTGAGCTTGAGGAC"
    "TAAATAGTTTAAAGAAATAGGAATAGTTGTAATTTAAGGAGCGTGGCACG"
    "GATGGATCAGCGTGTCAACGGAACGCGCATTTGGGAGTTTTATGTTAAGT"
    "GAGCAGACTAAGGTGAAATTCAATAGTCTCTATCGTTCGAGGGTTATTGC"
    "TAGGGGAGACTTTGAGTGAGTGGTAATTTTGAAGCAGTATACGTAACTTT"
    "TTCGATTCTTAGTGGCAGTTACTCTGAATTTTAGTGTGAGCAGAGTGTGA"
    "TAAATAGAGAGATACGAGGTCGACACGGCTGTTGGGGGCACTTAACAGTA"
    "GGGGGTTGATGCTGGCGGACACTAAAGGATTTTTGAAGGGGATTGTTGGC"
    "GACTCACATCTAAGTGGTATTGCGGGCTCTATGAGAATCTGCTCGAGTCA"
    "TCTAGGTTGAGGAAGAGGGGGAGATTCTCGTTAAAGACAGTACATATTTC"
    "GCATACTTCTTAACGTGGAGTATGAATGTCAATGGTGGGAGATATGGGTG"
    "GAGGGATTTCATTCACTGCATATGTACGCTCAGGAGCGCGAACGAATCAT"
    "AAAACTATTGTAATATATTGATAGATAAAGAAACGATCCCCTGACAGAGC";

inline constexpr std::string_view kB3Original =
    "ATAATAGGCCTGATGATCTCGATGGATGCGCGTCACTCGAGTGCGGTAGG"
    "CACGTCTCAGGTGATAAGTGATTGTGATTGTAGGTGAAGGGGGTAGAAAT"
    "GATTGAGGAAACTTGTGTACTCGTTACACGTGATAGGGTTTGATCGGCGG"
    "TGGAAAAATTAGGGATGGGGATAAGATTATGGGATCGTTCTCAATAATTG"
    "TTACGATATCGTTGTTACACAGTTGTTACGCTACGACGTCATCGATAAAG"
    "GTGGGTATGTGGGGGTACTATACTCTTGGGGGCGTACAAGAGCGATGGTT"
    "GGTCGGATTGAAATTAAAAGCATTAAGAGGTTAATTTATAGATGCGAGGC"
    "GAAAGATGTGAGCGCAAGTAAAGGAAACGCGAGCAAGTGATTGTTACTAA"
    "TTATATTAGGAGGTGATGAGGAGCGTGGTTATCTTATTGGGCGAGCTGCA"
    "GCGAATTCTAGATTTCTTCGAGTTACAGTCGTAGTGATGTATATAGAGTG"
    "GATGCGCACATTATTACATATATCGTCGAATTGGATTAGACGCAAAGAAA"
    "ATGCGGCATTGTAATGGGTTGTGTAAAATTGAGCGTGGTTATCTTGTCAT"
    "GACATAGTAAAAGTTGCTCAATTGATTGAAGCTCGATTAGGAGAAGTAAT"
    "TTGAAAAAAGGATAGACTAGGACTCAACGAGGAACGGGTATTTGCAACAT"
    "AGTATATGCGGTCTTAATCGGAGGGTAATGTTATTTGTGTGGAAGTCGCT"
    "GCTGGTACTCTGGGCGTTTAGGATGAATCTTCGAAACTAGGCTTTGTCAG"
    "AGATAGTTTGTTGGTAAGAAGAATCAGGAAACGGTAACAGAGAATAAATG"
    "AATTAACGTAGCAAGATTTCGTCTTTCTGGAGATGAGAAGGTGTAGTTGA"
    "GGAGTCGACGTTCTTTACGGAGGTGGGAGATTGGTTTTGGCAGTACTTCG"
    "TTAAATACACTAAAAAATTTGATAATGTAGAAGAAGAACCAGTAAGCAGC";

inline constexpr std::string_view kB3Edited =
    "ATAATAGGCCTGATGATCTCGATGGATGCGCGTCACTCGAGTGCGGTAGG"
    "CACGTCTCAGGTGATAAGTGATTGTGATTGTAGGTGAAGGGGGTAGAAAT"
    "GATTGAGGAAACTTGTGTACTCGTTACACGTGATAGGGTTTGATCGGCGG"
    "TGGAAAAATTAGGGATGGGGATAAGATTATGGGATCGTTCTCAATAATTG"
    "TTACGATATCGTTGTTACACAGTTGTTACGCTACGACGTCATCGATAAAG"
    "GTGGGTATGTGGGGGTACTATACTCTTGGGGGCGTACAAGAGCGATGGTG"
    "TGTACACAGTTCAAGCTTAGATTGAGAGTGAGTAGATGTTGATGCGAGGC"
    "GAAAGATGTGAGCGCAAGTAAAGGAAACGCGAGCAAGTGATTGTTACTAA"
    "TTATATTAGGAGGTGATGAGGAGCGTGGTTATCTTATTGGGCGAGCTGCA"
    "GCGAATTCTAGATTTCTTCGAGTTACAGTCGTAGTGATGTATATAGAGTG"
    "GATGCGCACATTATTACATATATCGTCGAATTGGATTAGACGCAAAGAAA"
    "ATGCGGCATTGTAATGGGTTGTGTAAAATTGAGCGTGGTTATCTTGTCAT"
    "GACATAGTAAAAGTTGCTCAATTGATTGAAGCTCGATTAGGAGAAGTAAT"
    "TTGAAAAAAGGATAGACTAGGACTCAACGAGGAACGGGTATTTGCAACAT"
    "AGTATATGCGGCTTGATCTAGCATTAATGGATTATAGGGGGGAAGTCGCT"
    "GCTGGTACTCTGGGCGTTTAGGATGAATCTTCGAAACTAGGCTTTGTCAG"
    "AGATAGTTTGTTGGTAAGAAGAATCAGGAAACGGTAACAGAGAATAAATG"
    "AATTAACGTAGCAAGATTTCGTCTTTCTGGAGATGAGAAGGTGTAGTTGA"
    "GGAGTCGACGTTCTTTACGGAGGTGGGAGATTGGTTTTGGCAGTACTTCG"
    "TTAAATACACTAAAAAATTTGATAATGTAGAAGAAGAACCAGTAAGCAGC";

struct AddressPairText {
    std::string_view left;
    std::string_view right;
};

inline constexpr std::array<AddressPairText, 27> kExperimentPairs{{
    {"CTCTTCCAGCGAATCATTAA", "ACTTATTGCGACTTCTAAGG"},
    {"CTCTCCTTCTACCAATCCAA", "AAACGATCCCCTGACAGAGC"},
    {"CTCTAGTAGTCCGGATAATA", "AAGAAGAACCAGTAAGCAGC"},
    {"CTCTTTCGCTGTGCACAAAA", "AAATCGGAAATTCGTGTCGC"},
    {"CTCTGCTGGAAATGTGTGAA", "AATTCACGGTCCGAAACACC"},
    {"CTCTGTTCCTCCTTTCTCGT", "TGTAGACGATTTGATTGGCG"},
    {"CTCTAGCAACTTCCGCAAAT", "ACGAGATTCATACCGGACCC"},
    {"CTCTAGCTTCCCTATCCATA", "TGCAGAAGAGGAGTGTCAGC"},
    {"CTCTATAGGCTCTGGTATGT", "TTTAACCCGCCCGTACAGCC"},
    {"CTCTCGCTCATCTCATGTTT", "ACAGTACTTGCCCAATTCGC"},
    {"CTCTGTACTCCGCTGAATCA", "TAAACATTACAAGCCCCTCG"},
    {"CTCTTCTTCCCTGACGATGT", "AATACAACTTCTAACCACCC"},
    {"CTCTTGATCCTACTGAGAAA", "TTAATAGTTCCCGGCAGCCC"},
    {"CTCTAGTGACGTGACAGGTA", "TTAGAACGAACCAGTATAGC"},
    {"CTCTACCTAAGGCCTTTGAA", "TTGACCCATGAGCCAGCACC"},
    {"CTCTACAGTAGTAAACTCGT", "TGCTGAACTCTAATCTGTCC"},
    {"CTCTGGGCGGCTGTACACAA", "ATACACTCATAACACCTCGG"},
    {"CTCTGCGATCACAAAAAGTT", "ACAACTATACGTGTCGGACC"},
    {"CTCTTTAGCACGAGTCCTAT", "TGAACCCGTCGTGCTAATCG"},
    {"CTCTAATACGCACGCCCATT", "ATACGGGATACAATTAGGGC"},
    {"CTCTGAGGCGTGGATATTTT", "AATACATCCCTAAAAGCCGG"},
    {"CTCTGCGTGTTCATTCCATT", "TGAGGATAGGATTAGTAAGG"},
    {"CTCTAAGAATCTGACTGCAT", "ATGTTAACACTGAGTAAGGG"},
    {"CTCTGATCGAACCCATGTCA", "ACATGACCTACATAACGTCC"},
    {"CTCTCTGGTGGCCTAAAAAT", "AACAGAGATCAGAGCAGTGG"},
    {"CTCTAGAGAAACGTTGAAGT", "AACCCGTACTCACTATGCCG"},
    {"CTCTGACGTCTACACAACAT", "TTTGTAGATCCCAAGCATCG"},
}};

inline constexpr std::array<std::string_view, 5> kSmallScaleAddresses{
    "ACTAACTGTGCGACTGATGC",
    "ACACTATCGAGCTGACACGT",
    "AGTCAGCAGTAGTCAGTCAG",
    "ACTGAGCTGAGCGTATATCG",
    "ACTCAGCTACGACTCACATG",
};

inline constexpr std::array<std::string_view, 12> kBaseSet{
    "ATGC", "ATAC", "GTAC", "GTGC", "ATTC", "GTTC",
    "AGGC", "AAAC", "GAAC", "GGGC", "ATTT", "GTTT",
};

// Primers as printed, 5' to 3'.
inline constexpr std::string_view kB1Forward = "AATTACTAAGCGACCTTCTC";
inline constexpr std::string_view kB1Reverse = "ACTTATTGCGACTTCTAAGG";
inline constexpr std::string_view kB1Su1Reverse = "CGTGCACTCATAACCCATATTTCAAGAGCTAGCTATTCCTCTCCCTTAAAAGTAAATGAC";
inline constexpr std::string_view kB1Sd1Forward = "GGGAGAGGAATAGCTAGCTCTTGAAATATGGGTTATGAGTGCACGATCATCACATAAC";
inline constexpr std::string_view kB2Forward = "AACCTAACCATCTTCCTCTC";
inline constexpr std::string_view kB2Reverse = "AAACGATCCCCTGACAGAGC";
inline constexpr std::string_view kB2Su1Reverse = "CAGCTTGTATCCCATCTCAACCCTAATTCCATAACCGTCAGCGCAGTTGACTAGTCTC";
inline constexpr std::string_view kB2Sd1Forward = "CTGCGCTGACGGTTATGGAATTAGGGTTGAGATGGGATACAAGCTGATATGGGAAC";
inline constexpr std::string_view kB3Forward = "ATAATAGGCCTGATGATCTC";
inline constexpr std::string_view kB3Reverse = "AAGAAGAACCAGTAAGCAGC";
inline constexpr std::string_view kB3Su1Reverse = "AACATCTACTCACTCTCAATCTAAGCTTGAACTGTGTACACACCATCGCTCTTGTACGCC";
inline constexpr std::string_view kB3Su2Forward = "GTGTACACAGTTCAAGCTTAGATTGAGAGTGAGTAGATGTTGATGCGAGGCGAAAGATGT";
inline constexpr std::string_view kB3Sd2Reverse = "GACTTCCCCCCTATAATCCATTAATGCTAGATCAAGCCGCATATACTATGTTGCAAATAC";
inline constexpr std::string_view kB3Sd2Forward = "GCGGCTTGATCTAGCATTAATGGATTATAGGGGGGAAGTCGCTGCTGGTACTCTG";

}  // namespace fixtures
