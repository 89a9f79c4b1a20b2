#pragma once

#include "qlab/series.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlab {

/// Finite eta-quotient specification: factors (k, r) meaning prod_k eta(q^k)^r
/// with eta(q) = q^{1/24} (q)_inf. The sum of k*r over all factors must be
/// divisible by 24 so the q-prefactor is an integer power.
struct EtaQuotientSpec {
    std::vector<std::pair<index_t, index_t>> factors;

    index_t eta_exponent_sum() const;
    /// sum k*r / 24; DomainError if not integral.
    index_t prefactor_exponent() const;
};

/// (q^a; q^b)_inf, or (-q^a; q^b)_inf when negated. a, b >= 1.
LaurentSeries pochhammer_inf(index_t a, index_t b, bool negated, index_t prec,
                             const Modulus& mod = Modulus::exact());

/// (q^a; q^b)_n (negated: (-q^a; q^b)_n); n = 0 is the empty product 1.
LaurentSeries pochhammer_fin(index_t a, index_t b, index_t n, bool negated, index_t prec,
                             const Modulus& mod = Modulus::exact());

/// (q^k)_inf by the pentagonal number theorem (sparse); equals
/// pochhammer_inf(k, k, plain, prec).
LaurentSeries euler_inf(index_t k, index_t prec, const Modulus& mod = Modulus::exact());

LaurentSeries eta_quotient(const EtaQuotientSpec& spec, index_t prec,
                           const Modulus& mod = Modulus::exact());

/// E4 = 1 + 240 sum sigma_3(n) q^n.
LaurentSeries eisenstein_E4(index_t prec, const Modulus& mod = Modulus::exact());

/// 691*E12 = 691 + 65520 sum sigma_11(n) q^n (integral normalization).
LaurentSeries eisenstein_E12hat(index_t prec, const Modulus& mod = Modulus::exact());

/// Discriminant cusp form Delta = q (q)_inf^24.
LaurentSeries delta(index_t prec, const Modulus& mod = Modulus::exact());

/// Genus-zero hauptmodul j_N, normalized with leading term q^-1.
/// N = 1 is E4^3/Delta; the other levels are Conway-Norton eta quotients.
LaurentSeries hauptmodul(index_t level, index_t prec, const Modulus& mod = Modulus::exact());
const std::vector<index_t>& hauptmodul_levels();
const EtaQuotientSpec& hauptmodul_eta_spec(index_t level);  // levels other than 1

/// Borwein cubic theta lattice sums a(q) = sum q^{m^2+mn+n^2} and
/// c(q) = sum q^{m^2+mn+n^2+m+n} over all integer pairs (m, n).
LaurentSeries borwein_a(index_t prec, const Modulus& mod = Modulus::exact());
LaurentSeries borwein_c(index_t prec, const Modulus& mod = Modulus::exact());

/// psi(q) = sum_{n>=0} q^{n(n+1)/2}.
LaurentSeries theta_psi(index_t prec, const Modulus& mod = Modulus::exact());

/// Rogers-Ramanujan product F = (q,q^5)(q^4,q^5) / ((q^2,q^5)(q^3,q^5)).
LaurentSeries rr_fraction_F(index_t prec, const Modulus& mod = Modulus::exact());

/// 1/(q)_inf and (q^10)_inf/(q)_inf (partitions avoiding multiples of 10).
LaurentSeries partition_gf(index_t prec, const Modulus& mod = Modulus::exact());
LaurentSeries p10_gf(index_t prec, const Modulus& mod = Modulus::exact());

/// Name registry. These strings are the stable identifiers used by the CLI
/// and by claim manifests. "cN" is accepted as an alias for hauptmodul "jN".
struct CatalogEntry {
    std::string name;
    std::string summary;
    std::function<LaurentSeries(index_t prec, const Modulus& mod)> build;
};

const std::vector<CatalogEntry>& series_catalog();
const CatalogEntry* find_series(std::string_view name);
LaurentSeries build_series(std::string_view name, index_t prec,
                           const Modulus& mod = Modulus::exact());
bool is_hauptmodul_name(std::string_view name);

}  // namespace qlab
