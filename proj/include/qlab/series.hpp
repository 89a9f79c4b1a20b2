#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlab {

using Int = boost::multiprecision::cpp_int;
using index_t = std::int64_t;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A coefficient at or beyond the truncation exponent was requested, or a
/// construction cannot reach the requested precision.
struct PrecisionError : Error {
    using Error::Error;
};

/// An argument lies outside an operation's domain.
struct DomainError : Error {
    using Error::Error;
};

/// Leading coefficient is not a unit in the coefficient ring.
struct NotInvertibleError : Error {
    using Error::Error;
};

/// Coefficient ring selector: exact integer arithmetic, or least nonnegative
/// residues modulo m >= 2.
class Modulus {
public:
    static Modulus exact() { return Modulus(0); }
    static Modulus mod(index_t m);

    bool is_exact() const { return m_ == 0; }
    index_t modulus() const;

    /// Least nonnegative residue of v; identity when exact.
    Int reduce(Int v) const;

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    explicit Modulus(index_t m) : m_(m) {}
    index_t m_;
};

/// Truncated Laurent series  sum_{order <= n < prec} c(n) q^n + O(q^prec)
/// with exact integer coefficients. Coefficients below `order` are exactly
/// zero, coefficients at `prec` and above are unknown.
///
/// Canonical form: the coefficient at `order` is nonzero unless the series is
/// zero to its precision, in which case order == prec and the coefficient
/// vector is empty. Leading (low-exponent) zeros are always absorbed into
/// `order`; trailing zeros are kept, they carry precision information.
class LaurentSeries {
public:
    static LaurentSeries zero(index_t prec);
    static LaurentSeries one(index_t prec);
    static LaurentSeries monomial(Int c, index_t n, index_t prec);

    /// Series with coefficients coeffs[i] attached to q^(order+i).
    /// Precision defaults to order + coeffs.size(); the three-argument form
    /// pads trailing zeros up to `prec` (prec >= order + coeffs.size()).
    static LaurentSeries from_coefficients(index_t order, std::vector<Int> coeffs);
    static LaurentSeries from_coefficients(index_t order, std::vector<Int> coeffs, index_t prec);

    index_t order() const { return order_; }
    index_t prec() const { return prec_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Exact coefficient of q^n: zero below `order`, stored value in
    /// [order, prec), PrecisionError at n >= prec (never silently zero).
    const Int& coeff(index_t n) const;

    /// Stored coefficients for exponents [order, prec).
    std::span<const Int> coefficients() const { return coeffs_; }

    std::string str() const;

private:
    LaurentSeries(index_t order, std::vector<Int> coeffs, index_t prec);
    void canonicalize();

    friend LaurentSeries mul_binomial(LaurentSeries f, const Int& c, index_t e, const Modulus& mod);
    friend LaurentSeries div_binomial(LaurentSeries f, const Int& c, index_t e, const Modulus& mod);

    index_t order_;
    index_t prec_;
    std::vector<Int> coeffs_;  // coefficient of q^(order_+i); size == prec_ - order_
};

LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries sub(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries negate(const LaurentSeries& f);
LaurentSeries scale(const LaurentSeries& f, const Int& c);

/// Cauchy product. Result order is f.order + g.order and the precision obeys
/// min(f.prec + g.order, g.prec + f.order), so pole-bearing products track
/// how far they are actually known.
LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g);

/// Multiply by the exact monomial q^t (shifts order and precision).
LaurentSeries shift(const LaurentSeries& f, index_t t);

/// Drop knowledge above `prec` (no-op if prec >= f.prec).
LaurentSeries truncate(const LaurentSeries& f, index_t prec);

/// f * (1 + c q^e) and f / (1 + c q^e), the binomial being an exact
/// polynomial (precision preserved). e >= 1. These are the work horses
/// behind Pochhammer products and Eulerian summands.
LaurentSeries mul_binomial(LaurentSeries f, const Int& c, index_t e, const Modulus& mod = Modulus::exact());
LaurentSeries div_binomial(LaurentSeries f, const Int& c, index_t e, const Modulus& mod = Modulus::exact());

/// Multiplicative inverse; requires the leading coefficient to be +-1 over
/// the integers, or invertible mod m. Result has order -f.order.
LaurentSeries inv(const LaurentSeries& f, const Modulus& mod = Modulus::exact());

/// Binary powering; k < 0 goes through inv, k = 0 gives 1.
LaurentSeries pow(const LaurentSeries& f, index_t k, const Modulus& mod = Modulus::exact());

/// g(q) = f(q^k), k >= 1; intermediate non-multiples of k are exact zeros.
LaurentSeries substitute_power(const LaurentSeries& f, index_t k);

/// g with coeff(g, n) = coeff(f, m n + r), 0 <= r < m.
LaurentSeries extract_progression(const LaurentSeries& f, index_t r, index_t m);

/// Replace every coefficient by its least nonnegative residue.
LaurentSeries reduce_mod(const LaurentSeries& f, const Modulus& mod);

/// Coefficientwise comparison over the common knowledge range
/// [min order, min prec); equality of series is only defined up to the
/// smaller precision and the compared range is reported.
struct SeriesComparison {
    bool equal;
    index_t lo;
    index_t hi;
    std::optional<index_t> first_difference;
};
SeriesComparison compare(const LaurentSeries& f, const LaurentSeries& g);
bool agree(const LaurentSeries& f, const LaurentSeries& g);

inline LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) { return add(f, g); }
inline LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return sub(f, g); }
inline LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) { return mul(f, g); }
inline LaurentSeries operator-(const LaurentSeries& f) { return negate(f); }

std::ostream& operator<<(std::ostream& os, const LaurentSeries& f);

}  // namespace qlab
