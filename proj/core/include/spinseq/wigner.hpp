// wigner.hpp
// Squared Wigner d-matrix element, the quantum-mechanical reference for all
// model comparisons. Combinatorial factors are exact integers; only the trig
// powers are floating point.

#pragma once

namespace spinseq {

struct WignerQuery {
    int two_j = 0;   // 2j
    int two_m = 0;   // 2m   (initial projection)
    int two_mp = 0;  // 2m'  (observed projection)
    double theta = 0.0;  // rotation angle, radians

    bool valid() const;
};

/// |d^j_{m',m}(theta)|^2 as a probability in [0, 1]. Throws
/// std::invalid_argument for malformed queries.
double wigner_d_squared(const WignerQuery& query);

/// Same element evaluated from the half-angle cosine/sine directly. Lets
/// callers with rational theta/pi land exactly on the theta = 0, pi grid
/// endpoints.
double wigner_d_squared_half_angle(int two_j, int two_m, int two_mp,
                                   double cos_half, double sin_half);

/// cos(pi x) and sin(pi x), exact at half-integer x.
double cospi(double x);
double sinpi(double x);

}  // namespace spinseq
