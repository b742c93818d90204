#include "gcwe/genetic_code.hpp"

namespace gcwe {

namespace {

// Irrep-copy groups, by the printed superscripts:
//   0 (3/2,3/2)   1 (1/2,3/2)^1   2 (1/2,3/2)^2   3 (3/2,1/2)^1
//   4 (3/2,1/2)^2   5 (1/2,1/2)^1   6 (1/2,1/2)^2   7 (1/2,1/2)^3
//   8 (1/2,1/2)^4
constexpr ReferenceRow kRows[64] = {
    {"CCC", "Pro", "Pro", 3, 3, 3, 3, 0},
    {"UCC", "Ser", "Ser", 3, 3, 1, 3, 0},
    {"CCU", "Pro", "Pro", 1, 3, 1, 3, 1},
    {"UCU", "Ser", "Ser", 1, 3, -1, 3, 1},
    {"CCG", "Pro", "Pro", 3, 1, 3, 1, 3},
    {"UCG", "Ser", "Ser", 3, 1, 1, 1, 3},
    {"CCA", "Pro", "Pro", 1, 1, 1, 1, 5},
    {"UCA", "Ser", "Ser", 1, 1, -1, 1, 5},

    {"CUC", "Leu", "Leu", 1, 3, 1, 3, 2},
    {"UUC", "Phe", "Phe", 3, 3, -1, 3, 0},
    {"CUU", "Leu", "Leu", 1, 3, -1, 3, 2},
    {"UUU", "Phe", "Phe", 3, 3, -3, 3, 0},
    {"CUG", "Leu", "Leu", 1, 1, 1, 1, 7},
    {"UUG", "Leu", "Leu", 3, 1, -1, 1, 3},
    {"CUA", "Leu", "Leu", 1, 1, -1, 1, 7},
    {"UUA", "Leu", "Leu", 3, 1, -3, 1, 3},

    {"CGC", "Arg", "Arg", 3, 1, 3, 1, 4},
    {"UGC", "Cys", "Cys", 3, 1, 1, 1, 4},
    {"CGU", "Arg", "Arg", 1, 1, 1, 1, 6},
    {"UGU", "Cys", "Cys", 1, 1, -1, 1, 6},
    {"CGG", "Arg", "Arg", 3, 1, 3, -1, 4},
    {"UGG", "Trp", "Trp", 3, 1, 1, -1, 4},
    {"CGA", "Arg", "Arg", 1, 1, 1, -1, 6},
    {"UGA", "Trp", "Ter", 1, 1, -1, -1, 6},

    {"CAC", "His", "His", 1, 1, 1, 1, 8},
    {"UAC", "Tyr", "Tyr", 3, 1, -1, 1, 4},
    {"CAU", "His", "His", 1, 1, -1, 1, 8},
    {"UAU", "Tyr", "Tyr", 3, 1, -3, 1, 4},
    {"CAG", "Gln", "Gln", 1, 1, 1, -1, 8},
    {"UAG", "Ter", "Ter", 3, 1, -1, -1, 4},
    {"CAA", "Gln", "Gln", 1, 1, -1, -1, 8},
    {"UAA", "Ter", "Ter", 3, 1, -3, -1, 4},

    {"GCC", "Ala", "Ala", 3, 3, 3, 1, 0},
    {"ACC", "Thr", "Thr", 3, 3, 1, 1, 0},
    {"GCU", "Ala", "Ala", 1, 3, 1, 1, 1},
    {"ACU", "Thr", "Thr", 1, 3, -1, 1, 1},
    {"GCG", "Ala", "Ala", 3, 1, 3, -1, 3},
    {"ACG", "Thr", "Thr", 3, 1, 1, -1, 3},
    {"GCA", "Ala", "Ala", 1, 1, 1, -1, 5},
    {"ACA", "Thr", "Thr", 1, 1, -1, -1, 5},

    {"GUC", "Val", "Val", 1, 3, 1, 1, 2},
    {"AUC", "Ile", "Ile", 3, 3, -1, 1, 0},
    {"GUU", "Val", "Val", 1, 3, -1, 1, 2},
    {"AUU", "Ile", "Ile", 3, 3, -3, 1, 0},
    {"GUG", "Val", "Val", 1, 1, 1, -1, 7},
    {"AUG", "Met", "Met", 3, 1, -1, -1, 3},
    {"GUA", "Val", "Val", 1, 1, -1, -1, 7},
    {"AUA", "Met", "Ile", 3, 1, -3, -1, 3},

    {"GGC", "Gly", "Gly", 3, 3, 3, -1, 0},
    {"AGC", "Ser", "Ser", 3, 3, 1, -1, 0},
    {"GGU", "Gly", "Gly", 1, 3, 1, -1, 1},
    {"AGU", "Ser", "Ser", 1, 3, -1, -1, 1},
    {"GGG", "Gly", "Gly", 3, 3, 3, -3, 0},
    {"AGG", "Ter", "Arg", 3, 3, 1, -3, 0},
    {"GGA", "Gly", "Gly", 1, 3, 1, -3, 1},
    {"AGA", "Ter", "Arg", 1, 3, -1, -3, 1},

    {"GAC", "Asp", "Asp", 1, 3, 1, -1, 2},
    {"AAC", "Asn", "Asn", 3, 3, -1, -1, 0},
    {"GAU", "Asp", "Asp", 1, 3, -1, -1, 2},
    {"AAU", "Asn", "Asn", 3, 3, -3, -1, 0},
    {"GAG", "Glu", "Glu", 1, 3, 1, -3, 2},
    {"AAG", "Lys", "Lys", 3, 3, -1, -3, 0},
    {"GAA", "Glu", "Glu", 1, 3, -1, -3, 2},
    {"AAA", "Lys", "Lys", 3, 3, -3, -3, 0},
};

constexpr FrequencyEntry kFrequencies[20] = {
    {"Leu", 91, 6}, {"Ala", 77, 4}, {"Gly", 74, 4}, {"Ser", 69, 6},
    {"Val", 66, 4}, {"Glu", 62, 2}, {"Thr", 59, 4}, {"Lys", 59, 2},
    {"Ile", 53, 3}, {"Asp", 52, 2}, {"Arg", 51, 6}, {"Pro", 51, 4},
    {"Asn", 43, 2}, {"Gln", 41, 2}, {"Phe", 40, 2}, {"Tyr", 32, 4},
    {"Met", 24, 1}, {"His", 23, 2}, {"Cys", 20, 2}, {"Trp", 14, 1},
};

}  // namespace

std::span<const ReferenceRow> reference_rows() { return kRows; }

std::span<const FrequencyEntry> frequency_table() { return kFrequencies; }

}  // namespace gcwe
