#include "spinseq/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinseq {

namespace {

void check_length(int n) {
    if (n < 0 || n > kMaxEnumerationLength)
        throw std::invalid_argument("enumeration: n outside [0, 10]");
}

}  // namespace

char symbol_name(Symbol s) {
    constexpr char names[4] = {'A', 'B', 'C', 'D'};
    return names[static_cast<std::uint8_t>(s)];
}

Base4Counts SymbolSequence::base4_counts() const {
    Base4Counts c{0, 0, 0, 0, role};
    for (Symbol s : symbols) {
        switch (s) {
            case Symbol::A: ++c.a; break;
            case Symbol::B: ++c.b; break;
            case Symbol::C: ++c.c; break;
            case Symbol::D: ++c.d; break;
        }
    }
    return c;
}

Base8Counts ExperimentSequence::base8_counts() const {
    Base8Counts c;
    for (auto [x, y] : pairs) {
        const std::uint8_t code =
            static_cast<std::uint8_t>((symbol_bits(x) << 2) | symbol_bits(y));
        switch (code) {
            case 0b0000: ++c.aa; break;
            case 0b0011: ++c.ab; break;
            case 0b1100: ++c.ba; break;
            case 0b1111: ++c.bb; break;
            case 0b1010: ++c.cc; break;
            case 0b1001: ++c.cd; break;
            case 0b0110: ++c.dc; break;
            case 0b0101: ++c.dd; break;
            default:
                throw std::invalid_argument("experiment sequence: inadmissible symbol pair");
        }
    }
    return c;
}

ExperimentSequence pair_events(const SymbolSequence& a1, const SymbolSequence& b2) {
    if (a1.symbols.size() != b2.symbols.size())
        throw std::invalid_argument("pair_events: length mismatch");
    ExperimentSequence exp;
    exp.pairs.reserve(a1.symbols.size());
    for (std::size_t i = 0; i < a1.symbols.size(); ++i)
        exp.pairs.emplace_back(a1.symbols[i], b2.symbols[i]);
    return exp;
}

SymbolSequence apply_map(const SymbolSequence& event, const SymbolSequence& map) {
    if (event.symbols.size() != map.symbols.size())
        throw std::invalid_argument("apply_map: length mismatch");
    SymbolSequence out;
    out.role = (event.role == Side::a1) ? Side::b2 : Side::a1;
    out.symbols.reserve(event.symbols.size());
    for (std::size_t i = 0; i < event.symbols.size(); ++i) {
        const Symbol m = map.symbols[i];
        if (m != Symbol::A && m != Symbol::B)
            throw std::invalid_argument("apply_map: map contains a symbol other than A/B");
        out.symbols.push_back(klein_add(event.symbols[i], m));
    }
    return out;
}

std::vector<SymbolSequence> enumerate_event_sequences(int n, int two_j, int two_m, int two_l,
                                                      Side role) {
    check_length(n);
    // Base-4 counts as functions of the quantum numbers.
    const int two_a = n - two_j + two_l;
    const int two_b = n - two_j - two_l;
    const int two_c = two_j + two_m;
    const int two_d = two_j - two_m;
    std::vector<SymbolSequence> out;
    if (two_a < 0 || two_b < 0 || two_c < 0 || two_d < 0) return out;
    if (two_a % 2 || two_b % 2 || two_c % 2 || two_d % 2) return out;

    SymbolSequence seq;
    seq.role = role;
    seq.symbols.insert(seq.symbols.end(), two_a / 2, Symbol::A);
    seq.symbols.insert(seq.symbols.end(), two_b / 2, Symbol::B);
    seq.symbols.insert(seq.symbols.end(), two_c / 2, Symbol::C);
    seq.symbols.insert(seq.symbols.end(), two_d / 2, Symbol::D);
    do {
        out.push_back(seq);
    } while (std::next_permutation(seq.symbols.begin(), seq.symbols.end()));
    return out;
}

std::vector<SymbolSequence> enumerate_maps(int n, int b_map) {
    check_length(n);
    std::vector<SymbolSequence> out;
    if (b_map < 0 || b_map > n) return out;
    SymbolSequence map;
    map.role = Side::map;
    map.symbols.assign(static_cast<std::size_t>(n - b_map), Symbol::A);
    map.symbols.insert(map.symbols.end(), static_cast<std::size_t>(b_map), Symbol::B);
    do {
        out.push_back(map);
    } while (std::next_permutation(map.symbols.begin(), map.symbols.end()));
    return out;
}

std::map<QuantumConfig, long> brute_force_cells(int n, Side fixed_side,
                                                     const SymbolSequence& fixed_sequence,
                                                     int b_map) {
    check_length(n);
    if (fixed_sequence.length() != n)
        throw std::invalid_argument("brute_force_cells: sequence length != n");
    if (fixed_side == Side::map)
        throw std::invalid_argument("brute_force_cells: fixed side must be a1 or b2");

    std::map<QuantumConfig, long> cells;
    for (const SymbolSequence& map : enumerate_maps(n, b_map)) {
        const SymbolSequence partner = apply_map(fixed_sequence, map);
        const ExperimentSequence exp = (fixed_side == Side::a1)
                                           ? pair_events(fixed_sequence, partner)
                                           : pair_events(partner, fixed_sequence);
        ++cells[quantum_from_base8(exp.base8_counts())];
    }
    return cells;
}

}  // namespace spinseq
