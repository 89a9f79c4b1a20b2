// Independent brute-force oracles used to pin expected values in the tests.
// Everything here deliberately avoids the LaurentSeries machinery: plain
// int64/big-int vectors, naive products, and direct enumeration.
#pragma once

#include <qlab/series.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

using Poly = std::vector<long long>;  // coefficient of q^i at index i

inline Poly poly_mul(const Poly& a, const Poly& b, std::size_t prec) {
    Poly out(prec, 0);
    for (std::size_t i = 0; i < a.size() && i < prec; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < prec; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// 1/f for f with f[0] == +-1, by long division.
inline Poly poly_inv(const Poly& f, std::size_t prec) {
    Poly g(prec, 0);
    long long lead = f[0];
    g[0] = lead;  // lead is its own inverse
    for (std::size_t k = 1; k < prec; ++k) {
        long long acc = 0;
        for (std::size_t i = 1; i <= k && i < f.size(); ++i) acc += f[i] * g[k - i];
        g[k] = -lead * acc;
    }
    return g;
}

// (±q^a; q^b)_inf as a naive factor-by-factor product.
inline Poly naive_pochhammer_inf(long long a, long long b, bool negated, std::size_t prec) {
    Poly f(prec, 0);
    f[0] = 1;
    for (long long e = a; e < static_cast<long long>(prec); e += b) {
        Poly factor(prec, 0);
        factor[0] = 1;
        factor[static_cast<std::size_t>(e)] = negated ? 1 : -1;
        f = poly_mul(f, factor, prec);
    }
    return f;
}

// Number of partitions of n, counted one partition at a time.
inline long long count_partitions(long long n, long long max_part) {
    if (n == 0) return 1;
    long long total = 0;
    for (long long p = std::min(n, max_part); p >= 1; --p) total += count_partitions(n - p, p);
    return total;
}

inline long long count_partitions(long long n) { return count_partitions(n, n); }

// Partitions of n with no part divisible by d.
inline long long count_partitions_avoiding(long long n, long long max_part, long long d) {
    if (n == 0) return 1;
    long long total = 0;
    for (long long p = std::min(n, max_part); p >= 1; --p) {
        if (p % d == 0) continue;
        total += count_partitions_avoiding(n - p, p, d);
    }
    return total;
}

// Cubic theta lattice sums by direct enumeration over a generous square.
inline Poly lattice_borwein_a(std::size_t prec) {
    long long B = static_cast<long long>(2 * std::sqrt(static_cast<double>(prec))) + 4;
    Poly out(prec, 0);
    for (long long m = -B; m <= B; ++m)
        for (long long n = -B; n <= B; ++n) {
            long long e = m * m + m * n + n * n;
            if (e >= 0 && e < static_cast<long long>(prec)) ++out[static_cast<std::size_t>(e)];
        }
    return out;
}

inline Poly lattice_borwein_c(std::size_t prec) {
    long long B = static_cast<long long>(2 * std::sqrt(static_cast<double>(prec))) + 4;
    Poly out(prec, 0);
    for (long long m = -B; m <= B; ++m)
        for (long long n = -B; n <= B; ++n) {
            long long e = m * m + m * n + n * n + m + n;
            if (e >= 0 && e < static_cast<long long>(prec)) ++out[static_cast<std::size_t>(e)];
        }
    return out;
}

// sum of d^k over divisors d of n, by trial division.
inline qlab::Int sigma_direct(long long n, unsigned k) {
    qlab::Int total = 0;
    for (long long d = 1; d <= n; ++d)
        if (n % d == 0) total += boost::multiprecision::pow(qlab::Int(d), k);
    return total;
}

inline std::vector<long long> triangular_numbers_upto(long long X) {
    std::vector<long long> t;
    for (long long k = 0; k * (k + 1) / 2 <= X; ++k) t.push_back(k * (k + 1) / 2);
    return t;
}

// Exact check of a qlab series against an oracle polynomial: every oracle
// entry below min(prec, oracle size) must match (series order may be > 0).
inline bool matches_poly(const qlab::LaurentSeries& s, const Poly& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        qlab::index_t n = static_cast<qlab::index_t>(i);
        if (n >= s.prec()) break;
        if (s.coeff(n) != p[i]) return false;
    }
    return true;
}

}  // namespace oracle
