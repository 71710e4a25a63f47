#include "spinseq/statespace.hpp"

namespace spinseq {

namespace {

// Four times each base-8 count, as a linear form in the doubled quantum
// numbers. Order matches Table-2 row order (aa..dd).
struct Numerators {
    int v[8];
};

Numerators four_times_counts(const QuantumConfig& q) {
    const int lo = q.n - q.b_map;  // n(1 - theta/pi)
    const int hi = q.n + q.b_map;  // n(1 + theta/pi)
    return Numerators{{
        lo - q.two_j + q.two_l_a1 + q.two_l_b2 + q.two_mu,   // aa
        hi - q.two_j + q.two_l_a1 - q.two_l_b2 - q.two_mu,   // ab
        hi - q.two_j - q.two_l_a1 + q.two_l_b2 - q.two_mu,   // ba
        lo - q.two_j - q.two_l_a1 - q.two_l_b2 + q.two_mu,   // bb
        lo + q.two_j + q.two_m_a1 + q.two_m_b2 - q.two_mu,   // cc
        -lo + q.two_j + q.two_m_a1 - q.two_m_b2 + q.two_mu,  // cd
        -lo + q.two_j - q.two_m_a1 + q.two_m_b2 + q.two_mu,  // dc
        lo + q.two_j - q.two_m_a1 - q.two_m_b2 - q.two_mu,   // dd
    }};
}

constexpr const char* kCountNames[8] = {"AA", "AB", "BA", "BB", "CC", "CD", "DC", "DD"};

}  // namespace

Base8Result base8_from_quantum(const QuantumConfig& config) {
    const Numerators num = four_times_counts(config);
    for (int i = 0; i < 8; ++i) {
        if (num.v[i] < 0 || num.v[i] % 4 != 0) return Infeasible{kCountNames[i]};
    }
    return Base8Counts{num.v[0] / 4, num.v[1] / 4, num.v[2] / 4, num.v[3] / 4,
                       num.v[4] / 4, num.v[5] / 4, num.v[6] / 4, num.v[7] / 4};
}

bool is_feasible(const QuantumConfig& config) {
    return std::holds_alternative<Base8Counts>(base8_from_quantum(config));
}

QuantumConfig quantum_from_base8(const Base8Counts& c) {
    QuantumConfig q;
    q.n = c.sum();
    q.two_j = c.cc + c.cd + c.dc + c.dd;
    q.two_m_a1 = c.cc + c.cd - c.dc - c.dd;
    q.two_m_b2 = c.cc + c.dc - c.cd - c.dd;
    q.two_l_a1 = c.aa + c.ab - c.ba - c.bb;
    q.two_l_b2 = c.aa + c.ba - c.ab - c.bb;
    q.b_map = c.ab + c.ba + c.cd + c.dc;
    q.two_mu = c.cd + c.dc + c.aa + c.bb;
    return q;
}

Marginals marginals(const Base8Counts& c) {
    Marginals m;
    m.a1 = Base4Counts{c.aa + c.ab, c.ba + c.bb, c.cc + c.cd, c.dc + c.dd, Side::a1};
    m.b2 = Base4Counts{c.aa + c.ba, c.ab + c.bb, c.cc + c.dc, c.cd + c.dd, Side::b2};
    m.map = Base4Counts{c.aa + c.bb + c.cc + c.dd, c.ab + c.ba + c.cd + c.dc, 0, 0, Side::map};
    return m;
}

void for_each_feasible(const PartialConfig& partial,
                       const std::function<void(const QuantumConfig&, const Base8Counts&)>& fn) {
    const int l_span = partial.n - partial.two_j;

    auto scan_l = [&](std::optional<int> fixed, auto&& body) {
        if (fixed) {
            body(*fixed);
        } else {
            for (int two_l = -l_span; two_l <= l_span; two_l += 2) body(two_l);
        }
    };

    QuantumConfig q;
    q.n = partial.n;
    q.two_j = partial.two_j;
    q.two_m_a1 = partial.two_m_a1;
    q.two_m_b2 = partial.two_m_b2;
    q.b_map = partial.b_map;

    scan_l(partial.two_l_a1, [&](int two_l_a1) {
        q.two_l_a1 = two_l_a1;
        scan_l(partial.two_l_b2, [&](int two_l_b2) {
            q.two_l_b2 = two_l_b2;
            const int mu_lo = partial.two_mu.value_or(-2 * partial.n);
            const int mu_hi = partial.two_mu.value_or(2 * partial.n);
            for (int two_mu = mu_lo; two_mu <= mu_hi; ++two_mu) {
                q.two_mu = two_mu;
                Base8Result r = base8_from_quantum(q);
                if (auto* counts = std::get_if<Base8Counts>(&r)) fn(q, *counts);
            }
        });
    });
}

std::vector<QuantumConfig> feasible_values(const PartialConfig& partial) {
    std::vector<QuantumConfig> out;
    for_each_feasible(partial, [&](const QuantumConfig& q, const Base8Counts&) { out.push_back(q); });
    return out;
}

}  // namespace spinseq
