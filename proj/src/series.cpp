#include "qlab/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace qlab {

namespace {

// ceil(a / b) for b > 0, exact for negative a as well.
index_t ceil_div(index_t a, index_t b) {
    index_t q = a / b;
    if (a % b > 0) ++q;
    return q;
}

std::vector<std::size_t> nonzero_positions(std::span<const Int> v) {
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) nz.push_back(i);
    return nz;
}

// Inverse of u modulo m (m >= 2); throws if gcd(u, m) != 1.
index_t invert_residue(index_t u, index_t m) {
    index_t r0 = m, r1 = ((u % m) + m) % m;
    index_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        index_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1)
        throw NotInvertibleError("leading coefficient " + std::to_string(u) +
                                 " is not invertible mod " + std::to_string(m));
    return ((s0 % m) + m) % m;
}

}  // namespace

Modulus Modulus::mod(index_t m) {
    if (m < 2) throw DomainError("modulus must be >= 2, got " + std::to_string(m));
    return Modulus(m);
}

index_t Modulus::modulus() const {
    if (is_exact()) throw DomainError("exact ring has no modulus");
    return m_;
}

Int Modulus::reduce(Int v) const {
    if (is_exact()) return v;
    v %= m_;
    if (v.sign() < 0) v += m_;
    return v;
}

LaurentSeries::LaurentSeries(index_t order, std::vector<Int> coeffs, index_t prec)
    : order_(order), prec_(prec), coeffs_(std::move(coeffs)) {
    canonicalize();
}

void LaurentSeries::canonicalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        order_ = prec_;
    } else if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        order_ += static_cast<index_t>(lead);
    }
}

LaurentSeries LaurentSeries::zero(index_t prec) {
    return LaurentSeries(prec, {}, prec);
}

LaurentSeries LaurentSeries::one(index_t prec) {
    return monomial(1, 0, prec);
}

LaurentSeries LaurentSeries::monomial(Int c, index_t n, index_t prec) {
    if (n >= prec)
        throw PrecisionError("monomial exponent " + std::to_string(n) +
                             " is not below precision " + std::to_string(prec));
    std::vector<Int> coeffs(static_cast<std::size_t>(prec - n));
    coeffs[0] = std::move(c);
    return LaurentSeries(n, std::move(coeffs), prec);
}

LaurentSeries LaurentSeries::from_coefficients(index_t order, std::vector<Int> coeffs) {
    index_t prec = order + static_cast<index_t>(coeffs.size());
    return LaurentSeries(order, std::move(coeffs), prec);
}

LaurentSeries LaurentSeries::from_coefficients(index_t order, std::vector<Int> coeffs, index_t prec) {
    index_t end = order + static_cast<index_t>(coeffs.size());
    if (prec < end)
        throw DomainError("precision below the last supplied coefficient");
    coeffs.resize(static_cast<std::size_t>(prec - order));
    return LaurentSeries(order, std::move(coeffs), prec);
}

const Int& LaurentSeries::coeff(index_t n) const {
    static const Int kZero{};
    if (n >= prec_)
        throw PrecisionError("coefficient of q^" + std::to_string(n) +
                             " requested, series known only below q^" + std::to_string(prec_));
    if (n < order_) return kZero;
    return coeffs_[static_cast<std::size_t>(n - order_)];
}

std::string LaurentSeries::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g) {
    index_t prec = std::min(f.prec(), g.prec());
    index_t order = std::min(f.order(), g.order());
    if (order >= prec) return LaurentSeries::zero(prec);
    std::vector<Int> out(static_cast<std::size_t>(prec - order));
    auto accumulate = [&](const LaurentSeries& s) {
        auto cs = s.coefficients();
        index_t hi = std::min(s.prec(), prec);
        for (index_t n = s.order(); n < hi; ++n)
            out[static_cast<std::size_t>(n - order)] += cs[static_cast<std::size_t>(n - s.order())];
    };
    accumulate(f);
    accumulate(g);
    return LaurentSeries::from_coefficients(order, std::move(out), prec);
}

LaurentSeries negate(const LaurentSeries& f) {
    return scale(f, -1);
}

LaurentSeries sub(const LaurentSeries& f, const LaurentSeries& g) {
    return add(f, negate(g));
}

LaurentSeries scale(const LaurentSeries& f, const Int& c) {
    if (c.is_zero() || f.is_zero()) return LaurentSeries::zero(f.prec());
    std::vector<Int> out(f.coefficients().begin(), f.coefficients().end());
    for (Int& v : out) v *= c;
    return LaurentSeries::from_coefficients(f.order(), std::move(out), f.prec());
}

LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g) {
    index_t prec = std::min(f.prec() + g.order(), g.prec() + f.order());
    index_t order = f.order() + g.order();
    index_t len = prec - order;  // == min of the relative lengths
    if (f.is_zero() || g.is_zero() || len <= 0)
        return LaurentSeries::zero(prec);

    auto F = f.coefficients();
    auto G = g.coefficients();
    auto nzF = nonzero_positions(F);
    auto nzG = nonzero_positions(G);
    std::vector<Int> out(static_cast<std::size_t>(len));
    for (std::size_t i : nzF) {
        if (static_cast<index_t>(i) >= len) break;
        const Int& fi = F[i];
        for (std::size_t j : nzG) {
            index_t k = static_cast<index_t>(i + j);
            if (k >= len) break;
            out[static_cast<std::size_t>(k)] += fi * G[j];
        }
    }
    return LaurentSeries::from_coefficients(order, std::move(out), prec);
}

LaurentSeries shift(const LaurentSeries& f, index_t t) {
    std::vector<Int> out(f.coefficients().begin(), f.coefficients().end());
    return LaurentSeries::from_coefficients(f.order() + t, std::move(out), f.prec() + t);
}

LaurentSeries truncate(const LaurentSeries& f, index_t prec) {
    if (prec >= f.prec()) return f;
    if (prec <= f.order()) return LaurentSeries::zero(prec);
    std::vector<Int> out(f.coefficients().begin(),
                         f.coefficients().begin() + static_cast<std::ptrdiff_t>(prec - f.order()));
    return LaurentSeries::from_coefficients(f.order(), std::move(out), prec);
}

LaurentSeries mul_binomial(LaurentSeries f, const Int& c, index_t e, const Modulus& mod) {
    if (e < 1) throw DomainError("binomial exponent must be >= 1");
    if (f.is_zero() || c.is_zero())
        return mod.is_exact() ? f : reduce_mod(f, mod);
    auto& v = f.coeffs_;
    index_t len = static_cast<index_t>(v.size());
    for (index_t i = len - 1; i >= e; --i)
        v[static_cast<std::size_t>(i)] += c * v[static_cast<std::size_t>(i - e)];
    if (!mod.is_exact())
        for (Int& x : v) x = mod.reduce(std::move(x));
    f.canonicalize();
    return f;
}

LaurentSeries div_binomial(LaurentSeries f, const Int& c, index_t e, const Modulus& mod) {
    if (e < 1) throw DomainError("binomial exponent must be >= 1");
    if (f.is_zero() || c.is_zero())
        return mod.is_exact() ? f : reduce_mod(f, mod);
    auto& v = f.coeffs_;
    index_t len = static_cast<index_t>(v.size());
    if (mod.is_exact()) {
        for (index_t i = e; i < len; ++i)
            v[static_cast<std::size_t>(i)] -= c * v[static_cast<std::size_t>(i - e)];
    } else {
        for (index_t i = 0; i < len; ++i) {
            if (i >= e) v[static_cast<std::size_t>(i)] -= c * v[static_cast<std::size_t>(i - e)];
            v[static_cast<std::size_t>(i)] = mod.reduce(std::move(v[static_cast<std::size_t>(i)]));
        }
    }
    f.canonicalize();
    return f;
}

LaurentSeries inv(const LaurentSeries& f, const Modulus& mod) {
    LaurentSeries ff = mod.is_exact() ? f : reduce_mod(f, mod);
    if (ff.is_zero())
        throw NotInvertibleError("cannot invert a series that is zero to its precision");

    const Int& lead = ff.coefficients()[0];
    Int lead_inv;
    if (mod.is_exact()) {
        if (lead == 1)
            lead_inv = 1;
        else if (lead == -1)
            lead_inv = -1;
        else
            throw NotInvertibleError("leading coefficient " + lead.str() + " is not a unit");
    } else {
        lead_inv = invert_residue(static_cast<index_t>(lead), mod.modulus());
    }

    auto F = ff.coefficients();
    auto nzF = nonzero_positions(F);  // nzF[0] == 0
    index_t len = static_cast<index_t>(F.size());
    std::vector<Int> G(static_cast<std::size_t>(len));
    G[0] = mod.reduce(lead_inv);
    Int acc;
    for (index_t k = 1; k < len; ++k) {
        acc = 0;
        for (std::size_t pos = 1; pos < nzF.size(); ++pos) {
            index_t i = static_cast<index_t>(nzF[pos]);
            if (i > k) break;
            acc += F[nzF[pos]] * G[static_cast<std::size_t>(k - i)];
        }
        acc *= -lead_inv;
        G[static_cast<std::size_t>(k)] = mod.reduce(std::move(acc));
    }
    return LaurentSeries::from_coefficients(-ff.order(), std::move(G));
}

LaurentSeries pow(const LaurentSeries& f, index_t k, const Modulus& mod) {
    // f^-k as inv(f^k): same value and min-rule precision, but powers the
    // (often sparse) base instead of its dense inverse
    if (k < 0) return inv(pow(f, -k, mod), mod);
    if (k == 0) {
        if (f.prec() > 0) return LaurentSeries::one(f.prec());
        return LaurentSeries::zero(f.prec());  // the constant 1 lies beyond this precision
    }
    auto reduced_mul = [&](const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries p = mul(a, b);
        return mod.is_exact() ? p : reduce_mod(p, mod);
    };
    LaurentSeries base = mod.is_exact() ? f : reduce_mod(f, mod);
    std::optional<LaurentSeries> acc;
    while (k > 0) {
        if (k & 1) acc = acc ? reduced_mul(*acc, base) : base;
        k >>= 1;
        if (k > 0) base = reduced_mul(base, base);
    }
    return *acc;
}

LaurentSeries substitute_power(const LaurentSeries& f, index_t k) {
    if (k < 1) throw DomainError("substitution power must be >= 1");
    if (k == 1) return f;
    if (f.is_zero()) return LaurentSeries::zero(k * f.prec());
    auto F = f.coefficients();
    std::vector<Int> out(static_cast<std::size_t>(k) * F.size());
    for (std::size_t i = 0; i < F.size(); ++i)
        out[static_cast<std::size_t>(k) * i] = F[i];
    return LaurentSeries::from_coefficients(k * f.order(), std::move(out), k * f.prec());
}

LaurentSeries extract_progression(const LaurentSeries& f, index_t r, index_t m) {
    if (m < 1) throw DomainError("progression modulus must be >= 1");
    if (r < 0 || r >= m)
        throw DomainError("progression residue " + std::to_string(r) +
                          " out of range [0, " + std::to_string(m) + ")");
    index_t lo = ceil_div(f.order() - r, m);   // first n with m n + r >= f.order
    index_t prec = ceil_div(f.prec() - r, m);  // first n with m n + r >= f.prec
    if (lo >= prec) return LaurentSeries::zero(prec);
    std::vector<Int> out(static_cast<std::size_t>(prec - lo));
    for (index_t n = lo; n < prec; ++n)
        out[static_cast<std::size_t>(n - lo)] = f.coeff(m * n + r);
    return LaurentSeries::from_coefficients(lo, std::move(out), prec);
}

LaurentSeries reduce_mod(const LaurentSeries& f, const Modulus& mod) {
    if (mod.is_exact()) return f;
    std::vector<Int> out;
    out.reserve(f.coefficients().size());
    for (const Int& v : f.coefficients()) out.push_back(mod.reduce(v));
    return LaurentSeries::from_coefficients(f.order(), std::move(out), f.prec());
}

SeriesComparison compare(const LaurentSeries& f, const LaurentSeries& g) {
    SeriesComparison cmp;
    cmp.lo = std::min(f.order(), g.order());
    cmp.hi = std::min(f.prec(), g.prec());
    cmp.equal = true;
    for (index_t n = cmp.lo; n < cmp.hi; ++n) {
        if (f.coeff(n) != g.coeff(n)) {
            cmp.equal = false;
            cmp.first_difference = n;
            break;
        }
    }
    return cmp;
}

bool agree(const LaurentSeries& f, const LaurentSeries& g) {
    return compare(f, g).equal;
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& f) {
    constexpr int kMaxTerms = 10;
    int printed = 0;
    bool first = true;
    for (index_t n = f.order(); n < f.prec() && printed < kMaxTerms; ++n) {
        const Int& c = f.coeff(n);
        if (c.is_zero()) continue;
        Int a = boost::multiprecision::abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (n == 0 || !unit) os << a.str();
        if (n != 0) {
            if (!unit) os << "*";
            os << "q";
            if (n != 1) os << "^" << n;
        }
        ++printed;
    }
    if (printed == kMaxTerms) os << " + ...";
    if (first) {
        os << "O(q^" << f.prec() << ")";
    } else {
        os << " + O(q^" << f.prec() << ")";
    }
    return os;
}

}  // namespace qlab
