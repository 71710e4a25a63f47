#include "spinseq/beamsplitter.hpp"

#include <cmath>
#include <string>

#include "spinseq/wigner.hpp"

namespace spinseq {

namespace {

ModelQuery to_model_query(const PhotonQuery& q) {
    if (q.n < 1) throw std::invalid_argument("photon query: n must be positive");
    if (q.c_a1 < 0 || q.d_a1 < 0)
        throw std::invalid_argument("photon query: negative photon number");
    if (q.c_a1 + q.d_a1 > q.n)
        throw std::invalid_argument("photon query: c_a1 + d_a1 exceeds n");
    ModelQuery m;
    m.n = q.n;
    m.two_j = q.c_a1 + q.d_a1;
    m.two_m_a1 = q.c_a1 - q.d_a1;
    m.b_map = q.b_map;
    m.mode = q.mode;
    m.fixed_two_l_a1 = q.fixed_two_l_a1;
    return m;
}

}  // namespace

double tau_from_bmap(int n, int b_map) {
    if (n < 1 || b_map < 0 || b_map > n)
        throw std::invalid_argument("tau_from_bmap: b_map outside [0, n]");
    const double c = cospi(b_map / (2.0 * n));
    return c * c;
}

int bmap_from_tau(int n, double tau, double tolerance) {
    if (n < 1 || tau < 0.0 || tau > 1.0)
        throw std::invalid_argument("bmap_from_tau: tau outside [0, 1]");
    int best = 0;
    double best_err = std::abs(tau_from_bmap(n, 0) - tau);
    for (int b = 1; b <= n; ++b) {
        const double err = std::abs(tau_from_bmap(n, b) - tau);
        if (err < best_err) {
            best = b;
            best_err = err;
        }
    }
    if (best_err > tolerance)
        throw NoGridPoint("bmap_from_tau: no grid point within " + std::to_string(tolerance) +
                          " of tau = " + std::to_string(tau));
    return best;
}

const PhotonOutcome* PhotonTable::find(int c_b2, int d_b2) const {
    for (const PhotonOutcome& o : outcomes)
        if (o.c_b2 == c_b2 && o.d_b2 == d_b2) return &o;
    return nullptr;
}

PhotonTable probability_bs(const PhotonQuery& query) {
    const ModelQuery model_query = to_model_query(query);
    const ProbabilityTable spin = probability(model_query);

    const int total_photons = query.c_a1 + query.d_a1;
    PhotonTable table;
    table.total_weight = spin.total_weight;
    for (const Outcome& o : spin.outcomes) {
        PhotonOutcome out;
        out.c_b2 = (total_photons + o.two_m_b2) / 2;
        out.d_b2 = total_photons - out.c_b2;
        out.weight = o.weight;
        out.p = o.p;
        out.p_float = o.p_float;
        if (out.weight < 0) table.negative_outcomes.emplace_back(out.c_b2, out.d_b2);
        table.outcomes.push_back(std::move(out));
    }
    return table;
}

double qm_reference_bs(int c_a1, int d_a1, int c_b2, double tau) {
    const int total = c_a1 + d_a1;
    if (c_a1 < 0 || d_a1 < 0 || c_b2 < 0 || c_b2 > total)
        throw std::invalid_argument("qm_reference_bs: photon conservation violated");
    if (tau < 0.0 || tau > 1.0)
        throw std::invalid_argument("qm_reference_bs: tau outside [0, 1]");
    // cos(theta/2) = sqrt(tau); exact at tau = 0 and 1.
    const double cos_half = std::sqrt(tau);
    const double sin_half = std::sqrt(1.0 - tau);
    const int two_mp = c_b2 - (total - c_b2);
    return wigner_d_squared_half_angle(total, c_a1 - d_a1, two_mp, cos_half, sin_half);
}

}  // namespace spinseq
