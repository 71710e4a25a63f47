#include "spinseq/model.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>

namespace spinseq {

namespace {

using exact::binomial;
using exact::ExactWeight;
using exact::Natural;

// Feasible two_mu values of a cell form an arithmetic progression of step 4:
// the AA and CC integrality congruences each pin two_mu mod 4, and the eight
// non-negativity constraints cut one interval.
struct MuScan {
    int first = 0;
    int count = 0;
};

int mod4(int x) { return ((x % 4) + 4) % 4; }

MuScan scan_mu(int n, int two_j, int two_m_a1, int two_m_b2, int two_l_a1, int two_l_b2,
               int b_map) {
    const int lo = n - b_map;
    const int hi = n + b_map;

    const int residue_aa = mod4(-(lo - two_j + two_l_a1 + two_l_b2));
    const int residue_cc = mod4(lo + two_j + two_m_a1 + two_m_b2);
    if (residue_aa != residue_cc) return {};

    int lower = -(lo - two_j + two_l_a1 + two_l_b2);             // AA >= 0
    lower = std::max(lower, -(lo - two_j - two_l_a1 - two_l_b2));  // BB >= 0
    lower = std::max(lower, lo - two_j - two_m_a1 + two_m_b2);     // CD >= 0
    lower = std::max(lower, lo - two_j + two_m_a1 - two_m_b2);     // DC >= 0

    int upper = hi - two_j + two_l_a1 - two_l_b2;                  // AB >= 0
    upper = std::min(upper, hi - two_j - two_l_a1 + two_l_b2);     // BA >= 0
    upper = std::min(upper, lo + two_j + two_m_a1 + two_m_b2);     // CC >= 0
    upper = std::min(upper, lo + two_j - two_m_a1 - two_m_b2);     // DD >= 0

    int first = lower + mod4(residue_aa - lower);
    if (first > upper) return {};
    return MuScan{first, (upper - first) / 4 + 1};
}

Natural eps_a_of(const Base8Counts& c) {
    Natural v = binomial(c.aa + c.ab, c.aa);
    v *= binomial(c.ba + c.bb, c.ba);
    v *= binomial(c.cc + c.cd, c.cc);
    v *= binomial(c.dc + c.dd, c.dc);
    return v;
}

Natural eps_b_of(const Base8Counts& c) {
    Natural v = binomial(c.aa + c.ba, c.aa);
    v *= binomial(c.ab + c.bb, c.ab);
    v *= binomial(c.cc + c.dc, c.cc);
    v *= binomial(c.cd + c.dd, c.cd);
    return v;
}

// Advance both cardinalities from two_mu to two_mu + 4. The ratio is the
// same small-integer fraction for both sides.
void step_mu(Base8Counts& c, Natural& eps_a, Natural& eps_b) {
    const unsigned long num = static_cast<unsigned long>(c.ab) * c.ba * c.cc * c.dd;
    const unsigned long den = static_cast<unsigned long>(c.aa + 1) * (c.bb + 1) * (c.cd + 1) *
                              (c.dc + 1);
    assert(num > 0);
    mpz_mul_ui(eps_a.get_mpz_t(), eps_a.get_mpz_t(), num);
    mpz_divexact_ui(eps_a.get_mpz_t(), eps_a.get_mpz_t(), den);
    mpz_mul_ui(eps_b.get_mpz_t(), eps_b.get_mpz_t(), num);
    mpz_divexact_ui(eps_b.get_mpz_t(), eps_b.get_mpz_t(), den);
    ++c.aa; ++c.bb; ++c.cd; ++c.dc;
    --c.ab; --c.ba; --c.cc; --c.dd;
}

ExactWeight upsilon_cell(const QuantumConfig& base, const MuScan& scan, Mode mode) {
    QuantumConfig q = base;
    q.two_mu = scan.first;
    const Base8Result first = base8_from_quantum(q);
    const auto* counts = std::get_if<Base8Counts>(&first);
    if (counts == nullptr) throw std::logic_error("upsilon: mu scan produced infeasible counts");

    Base8Counts c = *counts;
    Natural eps_a = eps_a_of(c);
    Natural eps_b = eps_b_of(c);

    if (mode == Mode::plain) {
        ExactWeight acc = eps_a * eps_b;
        for (int k = 1; k < scan.count; ++k) {
            step_mu(c, eps_a, eps_b);
            mpz_addmul(acc.get_mpz_t(), eps_a.get_mpz_t(), eps_b.get_mpz_t());
        }
        return acc;
    }

    // Successive feasible mu differ by 2, so the pair sign
    // (-1)^(|mu_a - mu_b|/2) factorizes into per-mu signs that alternate
    // along the progression; the double sum is the product of the two
    // signed single sums.
    ExactWeight sum_a = eps_a;
    ExactWeight sum_b = eps_b;
    for (int k = 1; k < scan.count; ++k) {
        step_mu(c, eps_a, eps_b);
        if (k & 1) {
            mpz_sub(sum_a.get_mpz_t(), sum_a.get_mpz_t(), eps_a.get_mpz_t());
            mpz_sub(sum_b.get_mpz_t(), sum_b.get_mpz_t(), eps_b.get_mpz_t());
        } else {
            mpz_add(sum_a.get_mpz_t(), sum_a.get_mpz_t(), eps_a.get_mpz_t());
            mpz_add(sum_b.get_mpz_t(), sum_b.get_mpz_t(), eps_b.get_mpz_t());
        }
    }
    return sum_a * sum_b;
}

}  // namespace

int paper_tuned_two_l(int n, int two_j) {
    const int span = n - two_j;
    if (span <= 0) return 0;
    const double target = span / 2.0;
    int best = span & 1;  // smallest non-negative value with the right parity
    for (int v = best; v <= span; v += 2) {
        if (std::abs(v - target) < std::abs(best - target)) best = v;
    }
    return best;
}

void validate_query(const ModelQuery& query) {
    if (query.n < 1) throw std::invalid_argument("query: n must be positive");
    if (query.two_j < 0 || query.two_j > query.n)
        throw std::invalid_argument("query: two_j outside [0, n]");
    if (std::abs(query.two_m_a1) > query.two_j)
        throw std::invalid_argument("query: |two_m_a1| exceeds two_j");
    if ((query.two_m_a1 & 1) != (query.two_j & 1))
        throw std::invalid_argument("query: two_m_a1 parity mismatch");
    if (query.b_map < 0 || query.b_map > query.n)
        throw std::invalid_argument("query: b_map outside [0, n]");
    if (query.fixed_two_l_a1) {
        const int span = query.n - query.two_j;
        const int v = *query.fixed_two_l_a1;
        if (std::abs(v) > span)
            throw std::invalid_argument("query: |two_l_a1| exceeds n - two_j");
        if (((v % 2) + 2) % 2 != (span & 1))
            throw std::invalid_argument("query: two_l_a1 parity mismatch");
    }
}

Natural epsilon_cardinality(const Base8Counts& counts, Side side) {
    const Marginals m = marginals(counts);
    const Base4Counts& marginal = (side == Side::a1) ? m.a1 : m.b2;
    const int num[4] = {marginal.a, marginal.b, marginal.c, marginal.d};
    const int den[8] = {counts.aa, counts.ab, counts.ba, counts.bb,
                        counts.cc, counts.cd, counts.dc, counts.dd};
    return exact::perm_ratio(num, den);
}

ExactWeight upsilon(int n, int two_j, int two_m_a1, int two_m_b2, int two_l_a1, int two_l_b2,
                    int b_map, Mode mode) {
    const MuScan scan = scan_mu(n, two_j, two_m_a1, two_m_b2, two_l_a1, two_l_b2, b_map);
    if (scan.count == 0) return ExactWeight{0};
    QuantumConfig base{n, two_j, two_m_a1, two_m_b2, two_l_a1, two_l_b2, b_map, 0};
    return upsilon_cell(base, scan, mode);
}

ExactWeight big_upsilon(const ModelQuery& query, int two_m_b2) {
    validate_query(query);
    if (std::abs(two_m_b2) > query.two_j || (two_m_b2 & 1) != (query.two_j & 1))
        throw std::invalid_argument("big_upsilon: invalid two_m_b2");

    exact::prewarm(query.n);
    const Mode mode = query.resolved_mode();
    const int span = query.n - query.two_j;
    const int la_lo = query.fixed_two_l_a1 ? *query.fixed_two_l_a1 : -span;
    const int la_hi = query.fixed_two_l_a1 ? *query.fixed_two_l_a1 : span;

    ExactWeight total{0};
    for (int two_l_a1 = la_lo; two_l_a1 <= la_hi; two_l_a1 += 2) {
        for (int two_l_b2 = -span; two_l_b2 <= span; two_l_b2 += 2) {
            total += upsilon(query.n, query.two_j, query.two_m_a1, two_m_b2, two_l_a1,
                             two_l_b2, query.b_map, mode);
        }
    }
    return total;
}

const Outcome* ProbabilityTable::find(int two_m_b2) const {
    for (const Outcome& o : outcomes)
        if (o.two_m_b2 == two_m_b2) return &o;
    return nullptr;
}

ProbabilityTable probability(const ModelQuery& query) {
    validate_query(query);
    ProbabilityTable table;
    table.total_weight = 0;
    for (int two_m_b2 = -query.two_j; two_m_b2 <= query.two_j; two_m_b2 += 2) {
        Outcome o;
        o.two_m_b2 = two_m_b2;
        o.weight = big_upsilon(query, two_m_b2);
        if (o.weight < 0) table.negative_outcomes.push_back(two_m_b2);
        table.total_weight += o.weight;
        table.outcomes.push_back(std::move(o));
    }
    if (table.total_weight == 0)
        throw DegenerateNormalization("probability: all outcome weights sum to zero");
    for (Outcome& o : table.outcomes) {
        o.p = exact::make_ratio(o.weight, table.total_weight);
        o.p_float = o.p.get_d();
    }
    return table;
}

}  // namespace spinseq
