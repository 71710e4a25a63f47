#include "spinseq/exact.hpp"

#include <atomic>
#include <deque>
#include <mutex>
#include <numeric>
#include <vector>

namespace spinseq::exact {

namespace {

// Growth is serialized by a mutex; readers only touch entries below the
// atomic ready mark, and std::deque never relocates existing elements.
struct FactorialTable {
    std::mutex grow;
    std::deque<Natural> values;
    std::atomic<std::size_t> ready{0};  // number of valid entries
    std::atomic<std::size_t> limit{512};

    void ensure(std::size_t upto) {
        if (ready.load(std::memory_order_acquire) > upto) return;
        std::lock_guard lock(grow);
        std::size_t have = ready.load(std::memory_order_relaxed);
        if (have > upto) return;
        if (have == 0) {
            values.emplace_back(1);
            have = 1;
        }
        while (have <= upto) {
            values.push_back(values[have - 1] * static_cast<unsigned long>(have));
            ++have;
        }
        ready.store(have, std::memory_order_release);
    }
};

struct PascalTable {
    std::mutex grow;
    std::deque<std::vector<Natural>> rows;
    std::atomic<std::size_t> ready{0};  // number of valid rows

    void ensure(std::size_t upto_n) {
        if (ready.load(std::memory_order_acquire) > upto_n) return;
        std::lock_guard lock(grow);
        std::size_t have = ready.load(std::memory_order_relaxed);
        while (have <= upto_n) {
            std::vector<Natural> row(have + 1);
            row.front() = 1;
            row.back() = 1;
            for (std::size_t k = 1; k < have; ++k)
                row[k] = rows[have - 1][k - 1] + rows[have - 1][k];
            rows.push_back(std::move(row));
            ++have;
        }
        ready.store(have, std::memory_order_release);
    }
};

FactorialTable& fact_table() {
    static FactorialTable table;
    return table;
}

PascalTable& pascal_table() {
    static PascalTable table;
    return table;
}

const Natural& zero() {
    static const Natural z{0};
    return z;
}

}  // namespace

std::size_t factorial_limit() { return fact_table().limit.load(); }

void set_factorial_limit(std::size_t n_max) {
    auto& t = fact_table();
    std::size_t cur = t.limit.load();
    while (cur < n_max && !t.limit.compare_exchange_weak(cur, n_max)) {
    }
}

const Natural& factorial(int k) {
    auto& t = fact_table();
    const std::size_t cap = t.limit.load();
    if (k < 0 || static_cast<std::size_t>(k) > cap)
        throw std::out_of_range("factorial: argument outside [0, " + std::to_string(cap) + "]");
    t.ensure(cap);  // eager memoization of the whole table on first use
    return t.values[static_cast<std::size_t>(k)];
}

const Natural& binomial(int n, int k) {
    if (k < 0 || k > n) return zero();
    const std::size_t cap = fact_table().limit.load();
    if (static_cast<std::size_t>(n) > cap)
        throw std::out_of_range("binomial: n outside [0, " + std::to_string(cap) + "]");
    auto& t = pascal_table();
    t.ensure(static_cast<std::size_t>(n));
    return t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

void prewarm(int n) {
    if (n < 0) return;
    set_factorial_limit(static_cast<std::size_t>(n));
    factorial(0);
    binomial(n, 0);
}

Natural multinomial(std::span<const int> parts) {
    long long total = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        total += p;
    }
    // prod_i C(prefix_sum_i, part_i); integral by construction.
    Natural result{1};
    int prefix = 0;
    for (int p : parts) {
        prefix += p;
        if (p != 0 && p != prefix) result *= binomial(prefix, p);
    }
    (void)total;
    return result;
}

Natural perm_ratio(std::span<const int> numerator_counts,
                   std::span<const int> denominator_counts) {
    long long num_sum = 0;
    long long den_sum = 0;
    Natural num{1};
    Natural den{1};
    for (int c : numerator_counts) {
        if (c < 0) throw std::invalid_argument("perm_ratio: negative count");
        num_sum += c;
        if (c > 1) num *= factorial(c);
    }
    for (int c : denominator_counts) {
        if (c < 0) throw std::invalid_argument("perm_ratio: negative count");
        den_sum += c;
        if (c > 1) den *= factorial(c);
    }
    if (num_sum != den_sum)
        throw std::invalid_argument("perm_ratio: count sums differ");
    Natural q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw NonIntegralRatio("perm_ratio: ratio is not an integer");
    return q;
}

ExactRatio make_ratio(const ExactWeight& num, const ExactWeight& den) {
    if (den == 0) throw std::domain_error("make_ratio: zero denominator");
    ExactRatio q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace spinseq::exact
