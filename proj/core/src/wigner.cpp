#include "spinseq/wigner.hpp"

#include <cmath>
#include <stdexcept>

#include "spinseq/exact.hpp"

namespace spinseq {

namespace {

struct KahanSum {
    double total = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = total + y;
        carry = (t - total) - y;
        total = t;
    }
};

// One factor of the product form: the q-sum whose numerator is
// (j+ma)!(j-ma)!. The two factors differ only in which projection feeds the
// numerator; the denominator factorials and trig powers depend on q alone.
double q_sum(int two_j, int two_m, int two_mp, int two_num, double cos_half, double sin_half) {
    const int dm = (two_mp - two_m) / 2;  // m' - m
    const int q_lo = std::max(0, -dm);
    const int q_hi = std::min((two_j + two_m) / 2, (two_j - two_mp) / 2);

    const exact::Natural numerator =
        exact::factorial((two_j + two_num) / 2) * exact::factorial((two_j - two_num) / 2);

    KahanSum sum;
    for (int q = q_lo; q <= q_hi; ++q) {
        exact::Natural denom = exact::factorial((two_j + two_m) / 2 - q);
        denom *= exact::factorial(q);
        denom *= exact::factorial(dm + q);
        denom *= exact::factorial((two_j - two_mp) / 2 - q);
        const double coeff = exact::make_ratio(numerator, denom).get_d();
        const int cos_pow = two_j - dm - 2 * q;  // 2j + m - m' - 2q
        const int sin_pow = dm + 2 * q;          // m' - m + 2q
        double term = coeff * std::pow(cos_half, cos_pow) * std::pow(sin_half, sin_pow);
        if ((dm + q) & 1) term = -term;
        sum.add(term);
    }
    return sum.total;
}

}  // namespace

bool WignerQuery::valid() const {
    if (two_j < 0) return false;
    if (std::abs(two_m) > two_j || std::abs(two_mp) > two_j) return false;
    if ((two_m & 1) != (two_j & 1) || (two_mp & 1) != (two_j & 1)) return false;
    return std::isfinite(theta);
}

double wigner_d_squared_half_angle(int two_j, int two_m, int two_mp,
                                   double cos_half, double sin_half) {
    const WignerQuery check{two_j, two_m, two_mp, 0.0};
    if (!check.valid()) throw std::invalid_argument("wigner_d_squared: malformed query");
    const double sum_a = q_sum(two_j, two_m, two_mp, two_m, cos_half, sin_half);
    const double sum_b = q_sum(two_j, two_m, two_mp, two_mp, cos_half, sin_half);
    return sum_a * sum_b;
}

double wigner_d_squared(const WignerQuery& query) {
    if (!query.valid()) throw std::invalid_argument("wigner_d_squared: malformed query");
    return wigner_d_squared_half_angle(query.two_j, query.two_m, query.two_mp,
                                       std::cos(query.theta / 2), std::sin(query.theta / 2));
}

double cospi(double x) {
    const double two_x = 2.0 * x;
    if (two_x == std::floor(two_x)) {
        const long long k = static_cast<long long>(two_x);
        if (k % 2 != 0) return 0.0;           // odd multiples of pi/2
        return (k % 4 == 0) ? 1.0 : -1.0;     // even multiples
    }
    return std::cos(M_PI * x);
}

double sinpi(double x) {
    const double two_x = 2.0 * x;
    if (two_x == std::floor(two_x)) {
        const long long k = static_cast<long long>(two_x);
        if (k % 2 == 0) return 0.0;
        return (((k - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    }
    return std::sin(M_PI * x);
}

}  // namespace spinseq
