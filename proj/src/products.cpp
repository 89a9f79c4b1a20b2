#include "qlab/products.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qlab {

namespace {

void require_prec(index_t prec) {
    if (prec < 1) throw DomainError("precision must be >= 1, got " + std::to_string(prec));
}

// sum_{d | n} d^k for n = 1..prec-1 by sieving over divisors.
std::vector<Int> divisor_power_sums(index_t prec, unsigned k) {
    std::vector<Int> sums(static_cast<std::size_t>(std::max<index_t>(prec, 1)));
    for (index_t d = 1; d < prec; ++d) {
        Int dk = boost::multiprecision::pow(Int(d), k);
        for (index_t n = d; n < prec; n += d) sums[static_cast<std::size_t>(n)] += dk;
    }
    return sums;
}

LaurentSeries eisenstein(index_t prec, unsigned power, const Int& constant, const Int& scale_factor,
                         const Modulus& mod) {
    require_prec(prec);
    auto sums = divisor_power_sums(prec, power);
    std::vector<Int> coeffs(static_cast<std::size_t>(prec));
    coeffs[0] = constant;
    for (index_t n = 1; n < prec; ++n)
        coeffs[static_cast<std::size_t>(n)] = scale_factor * sums[static_cast<std::size_t>(n)];
    return reduce_mod(LaurentSeries::from_coefficients(0, std::move(coeffs)), mod);
}

// Enumeration half-width for the cubic theta sums: on |m| = B or |n| = B the
// exponent m^2+mn+n^2 (+m+n) must already be >= prec. Chosen from
// m^2+mn+n^2 >= (3/4) max(m,n)^2 and validated by assert_boundary below.
index_t lattice_bound(index_t prec) {
    return static_cast<index_t>(std::ceil(2.0 * std::sqrt(static_cast<double>(prec) / 3.0))) + 2;
}

template <typename Exponent>
LaurentSeries lattice_sum(index_t prec, const Modulus& mod, Exponent exponent) {
    require_prec(prec);
    const index_t B = lattice_bound(prec);
    for (index_t m = -B; m <= B; ++m) {
        for (index_t n : {-B, B}) {
            if (exponent(m, n) < prec || exponent(n, m) < prec)
                throw Error("lattice enumeration bound too small for precision " +
                            std::to_string(prec));
        }
    }
    std::vector<Int> coeffs(static_cast<std::size_t>(prec));
    for (index_t m = -B; m <= B; ++m)
        for (index_t n = -B; n <= B; ++n) {
            index_t e = exponent(m, n);
            if (e < prec) ++coeffs[static_cast<std::size_t>(e)];
        }
    return reduce_mod(LaurentSeries::from_coefficients(0, std::move(coeffs)), mod);
}

const std::map<index_t, EtaQuotientSpec>& eta_table() {
    static const std::map<index_t, EtaQuotientSpec> table = {
        {2, {{{1, 24}, {2, -24}}}},
        {3, {{{1, 12}, {3, -12}}}},
        {4, {{{1, 8}, {4, -8}}}},
        {5, {{{1, 6}, {5, -6}}}},
        {6, {{{2, 3}, {3, 9}, {1, -3}, {6, -9}}}},
        {7, {{{1, 4}, {7, -4}}}},
        {8, {{{1, 4}, {4, 2}, {2, -2}, {8, -4}}}},
        {9, {{{1, 3}, {9, -3}}}},
        {10, {{{2, 1}, {5, 5}, {1, -1}, {10, -5}}}},
        {12, {{{4, 4}, {6, 2}, {2, -2}, {12, -4}}}},
        {13, {{{1, 2}, {13, -2}}}},
        {16, {{{1, 2}, {8, 1}, {2, -1}, {16, -2}}}},
        {18, {{{6, 1}, {9, 3}, {3, -1}, {18, -3}}}},
        {25, {{{1, 1}, {25, -1}}}},
    };
    return table;
}

}  // namespace

index_t EtaQuotientSpec::eta_exponent_sum() const {
    index_t sum = 0;
    for (auto [k, r] : factors) sum += k * r;
    return sum;
}

index_t EtaQuotientSpec::prefactor_exponent() const {
    index_t sum = eta_exponent_sum();
    if (sum % 24 != 0)
        throw DomainError("eta quotient exponent sum " + std::to_string(sum) +
                          " is not divisible by 24");
    return sum / 24;
}

LaurentSeries pochhammer_inf(index_t a, index_t b, bool negated, index_t prec, const Modulus& mod) {
    if (a < 1 || b < 1) throw DomainError("pochhammer_inf requires a >= 1 and b >= 1");
    require_prec(prec);
    LaurentSeries f = LaurentSeries::one(prec);
    const Int c = negated ? 1 : -1;
    for (index_t e = a; e < prec; e += b) f = mul_binomial(std::move(f), c, e, mod);
    return f;
}

LaurentSeries pochhammer_fin(index_t a, index_t b, index_t n, bool negated, index_t prec,
                             const Modulus& mod) {
    if (a < 1 || b < 1) throw DomainError("pochhammer_fin requires a >= 1 and b >= 1");
    if (n < 0) throw DomainError("pochhammer_fin requires n >= 0");
    require_prec(prec);
    LaurentSeries f = LaurentSeries::one(prec);
    for (index_t k = 0; k < n; ++k) {
        index_t e = a + k * b;
        if (e >= prec) break;  // the remaining factors are 1 + O(q^prec)
        f = mul_binomial(std::move(f), negated ? 1 : -1, e, mod);
    }
    return f;
}

LaurentSeries euler_inf(index_t k, index_t prec, const Modulus& mod) {
    if (k < 1) throw DomainError("euler_inf requires k >= 1");
    require_prec(prec);
    std::vector<Int> coeffs(static_cast<std::size_t>(prec));
    // generalized pentagonal exponents j(3j-1)/2, j in Z, sign (-1)^j
    for (index_t j = 0;; ++j) {
        index_t lo = k * (j * (3 * j - 1) / 2);
        index_t hi = k * (j * (3 * j + 1) / 2);
        if (lo >= prec && hi >= prec) break;
        Int sign = (j % 2 == 0) ? 1 : -1;
        if (lo < prec) coeffs[static_cast<std::size_t>(lo)] += sign;
        if (j > 0 && hi < prec) coeffs[static_cast<std::size_t>(hi)] += sign;
    }
    return reduce_mod(LaurentSeries::from_coefficients(0, std::move(coeffs)), mod);
}

LaurentSeries eta_quotient(const EtaQuotientSpec& spec, index_t prec, const Modulus& mod) {
    index_t t = spec.prefactor_exponent();
    index_t len = prec - t;  // relative precision of the Pochhammer part
    if (len <= 0) return LaurentSeries::zero(prec);
    LaurentSeries acc = LaurentSeries::one(len);
    for (auto [k, r] : spec.factors) {
        if (r == 0) continue;
        acc = mul(acc, pow(euler_inf(k, len, mod), r, mod));
        acc = reduce_mod(acc, mod);
    }
    return shift(acc, t);
}

LaurentSeries eisenstein_E4(index_t prec, const Modulus& mod) {
    return eisenstein(prec, 3, 1, 240, mod);
}

LaurentSeries eisenstein_E12hat(index_t prec, const Modulus& mod) {
    return eisenstein(prec, 11, 691, 65520, mod);
}

LaurentSeries delta(index_t prec, const Modulus& mod) {
    if (prec < 2) throw DomainError("delta requires precision >= 2");
    return shift(pow(euler_inf(1, prec - 1, mod), 24, mod), 1);
}

const std::vector<index_t>& hauptmodul_levels() {
    static const std::vector<index_t> levels = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25};
    return levels;
}

const EtaQuotientSpec& hauptmodul_eta_spec(index_t level) {
    auto it = eta_table().find(level);
    if (it == eta_table().end())
        throw DomainError("no eta quotient for level " + std::to_string(level));
    return it->second;
}

LaurentSeries hauptmodul(index_t level, index_t prec, const Modulus& mod) {
    require_prec(prec);
    if (level == 1) {
        LaurentSeries num = pow(eisenstein_E4(prec + 1, mod), 3, mod);
        LaurentSeries j = mul(num, inv(delta(prec + 2, mod), mod));
        return reduce_mod(j, mod);
    }
    auto it = eta_table().find(level);
    if (it == eta_table().end())
        throw DomainError("unsupported hauptmodul level " + std::to_string(level));
    return eta_quotient(it->second, prec, mod);
}

LaurentSeries borwein_a(index_t prec, const Modulus& mod) {
    return lattice_sum(prec, mod, [](index_t m, index_t n) { return m * m + m * n + n * n; });
}

LaurentSeries borwein_c(index_t prec, const Modulus& mod) {
    return lattice_sum(prec, mod,
                       [](index_t m, index_t n) { return m * m + m * n + n * n + m + n; });
}

LaurentSeries theta_psi(index_t prec, const Modulus& mod) {
    require_prec(prec);
    std::vector<Int> coeffs(static_cast<std::size_t>(prec));
    for (index_t n = 0; n * (n + 1) / 2 < prec; ++n) coeffs[static_cast<std::size_t>(n * (n + 1) / 2)] = 1;
    return reduce_mod(LaurentSeries::from_coefficients(0, std::move(coeffs)), mod);
}

LaurentSeries rr_fraction_F(index_t prec, const Modulus& mod) {
    require_prec(prec);
    LaurentSeries num = mul(pochhammer_inf(1, 5, false, prec, mod),
                            pochhammer_inf(4, 5, false, prec, mod));
    LaurentSeries den = mul(pochhammer_inf(2, 5, false, prec, mod),
                            pochhammer_inf(3, 5, false, prec, mod));
    return reduce_mod(mul(num, inv(den, mod)), mod);
}

LaurentSeries partition_gf(index_t prec, const Modulus& mod) {
    require_prec(prec);
    return inv(euler_inf(1, prec, mod), mod);
}

LaurentSeries p10_gf(index_t prec, const Modulus& mod) {
    require_prec(prec);
    return reduce_mod(mul(euler_inf(10, prec, mod), inv(euler_inf(1, prec, mod), mod)), mod);
}

}  // namespace qlab
