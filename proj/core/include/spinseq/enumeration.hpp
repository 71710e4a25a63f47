// enumeration.hpp
// Brute-force oracle: materializes actual symbol sequences over the Klein
// four-group alphabet, applies maps, and counts ontic states directly. Used
// to validate every combinatorial formula at small n; hard-capped at n <= 10.

#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "spinseq/statespace.hpp"

namespace spinseq {

/// The four symbols, elements of Z2 x Z2 with A = 0x0, B = 1x1, C = 1x0,
/// D = 0x1.
enum class Symbol : std::uint8_t { A, B, C, D };

/// Bit pair of a symbol, packed as (first << 1) | second.
constexpr std::uint8_t symbol_bits(Symbol s) {
    constexpr std::uint8_t bits[4] = {0b00, 0b11, 0b10, 0b01};
    return bits[static_cast<std::uint8_t>(s)];
}

constexpr Symbol symbol_from_bits(std::uint8_t bits) {
    constexpr Symbol table[4] = {Symbol::A, Symbol::D, Symbol::C, Symbol::B};
    return table[bits & 0b11];
}

/// Componentwise addition modulo 2 of the bit pairs (Klein four-group).
constexpr Symbol klein_add(Symbol x, Symbol y) {
    return symbol_from_bits(symbol_bits(x) ^ symbol_bits(y));
}

char symbol_name(Symbol s);

struct SymbolSequence {
    std::vector<Symbol> symbols;
    Side role = Side::a1;

    int length() const { return static_cast<int>(symbols.size()); }
    Base4Counts base4_counts() const;
    bool operator==(const SymbolSequence&) const = default;
};

/// An ordered pair of events, one symbol pair per position. Pairs are always
/// drawn from the 8 admissible symbols {AA,AB,BA,BB,CC,CD,DC,DD}.
struct ExperimentSequence {
    std::vector<std::pair<Symbol, Symbol>> pairs;

    Base8Counts base8_counts() const;
};

ExperimentSequence pair_events(const SymbolSequence& a1, const SymbolSequence& b2);

/// Elementwise klein_add of an event with an A/B-only map. Throws on length
/// mismatch or a map containing C or D.
SymbolSequence apply_map(const SymbolSequence& event, const SymbolSequence& map);

/// Every distinct ordering with the base-4 counts implied by
/// (n, two_j, two_m, two_l); empty when those counts are infeasible.
std::vector<SymbolSequence> enumerate_event_sequences(int n, int two_j, int two_m, int two_l,
                                                      Side role = Side::a1);

/// All A/B maps of length n containing exactly b_map B symbols.
std::vector<SymbolSequence> enumerate_maps(int n, int b_map);

/// Pair a fixed event against every partner generated by every map with
/// b_map B's, bin the resulting experiment sequences by their eight quantum
/// numbers, and return per-cell counts. This is the epsilon-cardinality
/// oracle.
std::map<QuantumConfig, long> brute_force_cells(int n, Side fixed_side,
                                                     const SymbolSequence& fixed_sequence,
                                                     int b_map);

/// Enumeration is for validation only; sequence spaces grow as 8^n.
inline constexpr int kMaxEnumerationLength = 10;

}  // namespace spinseq
