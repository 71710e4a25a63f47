// exact.hpp
// Arbitrary-precision integer/rational primitives for factorial-based counting.
// Backed by GMP; every quantity that enters a counting sum stays exact.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>

namespace spinseq::exact {

/// Non-negative arbitrary-precision integer (cardinalities, factorials).
using Natural = mpz_class;

/// Signed arbitrary-precision integer (signed counting sums may go negative).
using ExactWeight = mpz_class;

/// Rational number, always kept in lowest terms with positive denominator.
using ExactRatio = mpq_class;

/// Thrown when a factorial-product ratio that must be integral leaves a
/// remainder (signals a malformed count configuration).
class NonIntegralRatio : public std::runtime_error {
public:
    explicit NonIntegralRatio(const std::string& what) : std::runtime_error(what) {}
};

/// Largest k for which factorial(k) is available. Default 512.
std::size_t factorial_limit();

/// Raise the factorial/binomial table cap. May only grow; safe to call before
/// parallel sections.
void set_factorial_limit(std::size_t n_max);

/// k!, exact. The whole table [0, factorial_limit] is memoized eagerly on
/// first use. k < 0 or k > factorial_limit is a range violation.
const Natural& factorial(int k);

/// C(n, k), exact, Pascal-table backed. Returns 0 for k < 0 or k > n.
/// n > factorial_limit is a range violation.
const Natural& binomial(int n, int k);

/// Build the factorial and binomial tables up to n before concurrent use.
void prewarm(int n);

/// (sum parts)! / prod parts!, exact.
Natural multinomial(std::span<const int> parts);

/// prod numerator_counts! / prod denominator_counts!, exact integer.
/// Requires equal count sums; throws NonIntegralRatio if the division
/// leaves a remainder.
Natural perm_ratio(std::span<const int> numerator_counts,
                   std::span<const int> denominator_counts);

/// num/den reduced to lowest terms with positive denominator. den must be
/// nonzero.
ExactRatio make_ratio(const ExactWeight& num, const ExactWeight& den);

}  // namespace spinseq::exact
