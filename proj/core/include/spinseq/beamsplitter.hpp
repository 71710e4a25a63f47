// beamsplitter.hpp
// Photon number states through a beam splitter of transmittance tau: the
// same counting model under a change of variables (input ports -> a1-side
// C/D counts, output ports -> b2-side), plus the matching QM reference.
// All internal computation uses (n, b_map); tau is a display quantity.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "spinseq/model.hpp"

namespace spinseq {

struct PhotonQuery {
    int n = 0;
    int c_a1 = 0;  // photons entering port c
    int d_a1 = 0;  // photons entering port d
    int b_map = 0;
    std::optional<Mode> mode;           // default: default_mode(c_a1 + d_a1)
    std::optional<int> fixed_two_l_a1;  // nullopt: sum over all l_a1
};

/// Thrown when no grid point lies within tolerance of a requested tau.
class NoGridPoint : public std::runtime_error {
public:
    explicit NoGridPoint(const std::string& what) : std::runtime_error(what) {}
};

/// tau = cos^2(b_map * pi / (2n)); exact 1 and 0 at the grid ends.
double tau_from_bmap(int n, int b_map);

/// Nearest b_map in [0, n] with |tau_from_bmap - tau| <= tolerance.
int bmap_from_tau(int n, double tau, double tolerance);

struct PhotonOutcome {
    int c_b2 = 0;
    int d_b2 = 0;
    exact::ExactWeight weight;
    exact::ExactRatio p;
    double p_float = 0.0;
};

struct PhotonTable {
    std::vector<PhotonOutcome> outcomes;  // ascending c_b2
    exact::ExactWeight total_weight;
    std::vector<std::pair<int, int>> negative_outcomes;

    bool has_negative_weight() const { return !negative_outcomes.empty(); }
    const PhotonOutcome* find(int c_b2, int d_b2) const;
};

/// Model probabilities over output photon-number pairs; every outcome
/// conserves c_b2 + d_b2 = c_a1 + d_a1.
PhotonTable probability_bs(const PhotonQuery& query);

/// QM reference: the squared Wigner element with j = (c+d)/2, m = (c-d)/2,
/// m' = (c'-d')/2 and cos^2(theta/2) = tau.
double qm_reference_bs(int c_a1, int d_a1, int c_b2, double tau);

}  // namespace spinseq
