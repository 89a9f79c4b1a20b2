#include "qlab/mock_theta.hpp"

#include "qlab/products.hpp"

#include <utility>

namespace qlab {

namespace {

// State machine for one Eulerian sum: `first` builds summand 0, `advance`
// turns summand n-1 into summand n by the q-hypergeometric term ratio, and
// `emit` maps the state to the summand actually added (identity except for
// two_mu6, whose state omits the (1+q^n) factor to keep the ratio integral).
struct Incremental {
    std::function<LaurentSeries(index_t prec, const Modulus&)> first;
    std::function<LaurentSeries(LaurentSeries state, index_t n, const Modulus&)> advance;
    std::function<LaurentSeries(const LaurentSeries& state, index_t n, const Modulus&)> emit;
    std::function<index_t(index_t n)> minexp;
    bool leading_one = false;
};

LaurentSeries shift_cap(LaurentSeries f, index_t e, index_t prec) {
    return truncate(shift(std::move(f), e), prec);
}

LaurentSeries negate_mod(LaurentSeries f, const Modulus& mod) {
    return reduce_mod(negate(f), mod);
}

Incremental incremental_definition(MockTheta which) {
    auto one = [](index_t prec, const Modulus&) { return LaurentSeries::one(prec); };
    auto q_over_1pq = [](index_t prec, const Modulus& mod) {
        return div_binomial(LaurentSeries::monomial(1, 1, prec), 1, 1, mod);
    };
    auto identity_emit = [](const LaurentSeries& t, index_t, const Modulus&) { return t; };
    Incremental inc;
    inc.emit = identity_emit;
    inc.leading_one = false;

    switch (which) {
        case MockTheta::mu2:
            // sum (-1)^n q^{n^2} (q;q^2)_n / (-q^2;q^2)_n^2
            inc.first = one;
            inc.advance = [](LaurentSeries t, index_t n, const Modulus& mod) {
                index_t prec = t.prec();
                t = negate_mod(shift_cap(std::move(t), 2 * n - 1, prec), mod);
                t = mul_binomial(std::move(t), -1, 2 * n - 1, mod);
                t = div_binomial(std::move(t), 1, 2 * n, mod);
                return div_binomial(std::move(t), 1, 2 * n, mod);
            };
            inc.minexp = [](index_t n) { return n * n; };
            break;
        case MockTheta::f3:
            // sum q^{n^2} / (-q;q)_n^2
            inc.first = one;
            inc.advance = [](LaurentSeries t, index_t n, const Modulus& mod) {
                index_t prec = t.prec();
                t = shift_cap(std::move(t), 2 * n - 1, prec);
                t = div_binomial(std::move(t), 1, n, mod);
                return div_binomial(std::move(t), 1, n, mod);
            };
            inc.minexp = [](index_t n) { return n * n; };
            break;
        case MockTheta::phi3:
            // sum q^{n^2} / (-q^2;q^2)_n
            inc.first = one;
            inc.advance = [](LaurentSeries t, index_t n, const Modulus& mod) {
                index_t prec = t.prec();
                t = shift_cap(std::move(t), 2 * n - 1, prec);
                return div_binomial(std::move(t), 1, 2 * n, mod);
            };
            inc.minexp = [](index_t n) { return n * n; };
            break;
        case MockTheta::chi3:
            // sum q^{n^2} (-q;q)_n / (-q^3;q^3)_n
            inc.first = one;
            inc.advance = [](LaurentSeries t, index_t n, const Modulus& mod) {
                index_t prec = t.prec();
                t = shift_cap(std::move(t), 2 * n - 1, prec);
                t = mul_binomial(std::move(t), 1, n, mod);
                return div_binomial(std::move(t), 1, 3 * n, mod);
            };
            inc.minexp = [](index_t n) { return n * n; };
            break;
        case MockTheta::phi6:
            // sum (-1)^n (q;q^2)_n q^{n^2} / (-q;q)_{2n}
            inc.first = one;
            inc.advance = [](LaurentSeries t, index_t n, const Modulus& mod) {
                index_t prec = t.prec();
                t = negate_mod(shift_cap(std::move(t), 2 * n - 1, prec), mod);
                t = mul_binomial(std::move(t), -1, 2 * n - 1, mod);
                t = div_binomial(std::move(t), 1, 2 * n - 1, mod);
                return div_binomial(std::move(t), 1, 2 * n, mod);
            };
            inc.minexp = [](index_t n) { return n * n; };
            break;
        case MockTheta::psi6:
            // sum (-1)^n q^{(n+1)^2} (q;q^2)_n / (-q;q)_{2n+1}
            inc.first = q_over_1pq;
            inc.advance = [](LaurentSeries t, index_t n, const Modulus& mod) {
                index_t prec = t.prec();
                t = negate_mod(shift_cap(std::move(t), 2 * n + 1, prec), mod);
                t = mul_binomial(std::move(t), -1, 2 * n - 1, mod);
                t = div_binomial(std::move(t), 1, 2 * n, mod);
                return div_binomial(std::move(t), 1, 2 * n + 1, mod);
            };
            inc.minexp = [](index_t n) { return (n + 1) * (n + 1); };
            break;
        case MockTheta::lambda6:
            // sum (-1)^n q^n (q;q^2)_n / (-q;q)_n
            inc.first = one;
            inc.advance = [](LaurentSeries t, index_t n, const Modulus& mod) {
                index_t prec = t.prec();
                t = negate_mod(shift_cap(std::move(t), 1, prec), mod);
                t = mul_binomial(std::move(t), -1, 2 * n - 1, mod);
                return div_binomial(std::move(t), 1, n, mod);
            };
            inc.minexp = [](index_t n) { return n; };
            break;
        case MockTheta::two_mu6:
            // 1 + sum (-1)^n q^{n+1} (1+q^n) (q;q^2)_n / (-q;q)_{n+1};
            // state s_n leaves out the (1+q^n) factor.
            inc.first = q_over_1pq;
            inc.advance = [](LaurentSeries s, index_t n, const Modulus& mod) {
                index_t prec = s.prec();
                s = negate_mod(shift_cap(std::move(s), 1, prec), mod);
                s = mul_binomial(std::move(s), -1, 2 * n - 1, mod);
                return div_binomial(std::move(s), 1, n + 1, mod);
            };
            inc.emit = [](const LaurentSeries& s, index_t n, const Modulus& mod) {
                if (n == 0) return reduce_mod(scale(s, 2), mod);  // 1 + q^0 = 2
                return mul_binomial(s, 1, n, mod);
            };
            inc.minexp = [](index_t n) { return n + 1; };
            inc.leading_one = true;
            break;
        case MockTheta::U0:
            // sum q^{n^2} (-q;q^2)_n / (-q^4;q^4)_n
            inc.first = one;
            inc.advance = [](LaurentSeries t, index_t n, const Modulus& mod) {
                index_t prec = t.prec();
                t = shift_cap(std::move(t), 2 * n - 1, prec);
                t = mul_binomial(std::move(t), 1, 2 * n - 1, mod);
                return div_binomial(std::move(t), 1, 4 * n, mod);
            };
            inc.minexp = [](index_t n) { return n * n; };
            break;
        case MockTheta::S0:
            // sum q^{n^2} (-q;q^2)_n / (-q^2;q^2)_n
            inc.first = one;
            inc.advance = [](LaurentSeries t, index_t n, const Modulus& mod) {
                index_t prec = t.prec();
                t = shift_cap(std::move(t), 2 * n - 1, prec);
                t = mul_binomial(std::move(t), 1, 2 * n - 1, mod);
                return div_binomial(std::move(t), 1, 2 * n, mod);
            };
            inc.minexp = [](index_t n) { return n * n; };
            break;
        case MockTheta::S1:
            // sum q^{n(n+2)} (-q;q^2)_n / (-q^2;q^2)_n
            inc.first = one;
            inc.advance = [](LaurentSeries t, index_t n, const Modulus& mod) {
                index_t prec = t.prec();
                t = shift_cap(std::move(t), 2 * n + 1, prec);
                t = mul_binomial(std::move(t), 1, 2 * n - 1, mod);
                return div_binomial(std::move(t), 1, 2 * n, mod);
            };
            inc.minexp = [](index_t n) { return n * (n + 2); };
            break;
        case MockTheta::X10:
            // sum (-1)^n q^{n^2} / (-q;q)_{2n}
            inc.first = one;
            inc.advance = [](LaurentSeries t, index_t n, const Modulus& mod) {
                index_t prec = t.prec();
                t = negate_mod(shift_cap(std::move(t), 2 * n - 1, prec), mod);
                t = div_binomial(std::move(t), 1, 2 * n - 1, mod);
                return div_binomial(std::move(t), 1, 2 * n, mod);
            };
            inc.minexp = [](index_t n) { return n * n; };
            break;
        case MockTheta::chi10:
            // sum (-1)^n q^{(n+1)^2} / (-q;q)_{2n+1}
            inc.first = q_over_1pq;
            inc.advance = [](LaurentSeries t, index_t n, const Modulus& mod) {
                index_t prec = t.prec();
                t = negate_mod(shift_cap(std::move(t), 2 * n + 1, prec), mod);
                t = div_binomial(std::move(t), 1, 2 * n, mod);
                return div_binomial(std::move(t), 1, 2 * n + 1, mod);
            };
            inc.minexp = [](index_t n) { return (n + 1) * (n + 1); };
            break;
    }
    return inc;
}

}  // namespace

const std::vector<std::pair<std::string, MockTheta>>& mock_theta_table() {
    static const std::vector<std::pair<std::string, MockTheta>> table = {
        {"mu2", MockTheta::mu2},         {"f3", MockTheta::f3},
        {"phi3", MockTheta::phi3},       {"chi3", MockTheta::chi3},
        {"phi6", MockTheta::phi6},       {"psi6", MockTheta::psi6},
        {"lambda6", MockTheta::lambda6}, {"two_mu6", MockTheta::two_mu6},
        {"U0", MockTheta::U0},           {"S0", MockTheta::S0},
        {"S1", MockTheta::S1},           {"X10", MockTheta::X10},
        {"chi10", MockTheta::chi10},
    };
    return table;
}

std::optional<MockTheta> mock_theta_by_name(std::string_view name) {
    for (const auto& [n, id] : mock_theta_table())
        if (n == name) return id;
    return std::nullopt;
}

std::string_view mock_theta_name(MockTheta which) {
    for (const auto& [n, id] : mock_theta_table())
        if (id == which) return n;
    throw DomainError("unknown mock theta id");
}

LaurentSeries mock_theta_series(MockTheta which, index_t prec, const Modulus& mod) {
    if (prec < 1) throw DomainError("mock theta precision must be >= 1");
    Incremental inc = incremental_definition(which);
    LaurentSeries acc = inc.leading_one ? LaurentSeries::one(prec) : LaurentSeries::zero(prec);
    std::optional<LaurentSeries> state;
    index_t prev_minexp = inc.minexp(0);
    for (index_t n = 0; inc.minexp(n) < prec; ++n) {
        if (inc.minexp(n) < prev_minexp)
            throw Error("Eulerian summand exponents are not monotone");
        prev_minexp = inc.minexp(n);
        state = state ? inc.advance(std::move(*state), n, mod) : inc.first(prec, mod);
        acc = add(acc, inc.emit(*state, n, mod));
    }
    return reduce_mod(acc, mod);
}

LaurentSeries mock_theta_series(std::string_view name, index_t prec, const Modulus& mod) {
    auto id = mock_theta_by_name(name);
    if (!id) throw DomainError("unknown mock theta function: " + std::string(name));
    return mock_theta_series(*id, prec, mod);
}

LaurentSeries mu2_appell_lerch(index_t prec, const Modulus& mod) {
    if (prec < 1) throw DomainError("mu2_appell_lerch precision must be >= 1");
    // bracket = 1 + 2 sum_{n != 0} (-q)^{n(n+1)/2} / (1 + q^{2n}); the n = 0
    // term 1/2 already absorbed the outer factor 2.
    LaurentSeries bracket = LaurentSeries::one(prec);
    for (index_t n = 1; n * (n + 1) / 2 < prec; ++n) {
        index_t tri = n * (n + 1) / 2;
        Int sign = (tri % 2 == 0) ? 2 : -2;
        LaurentSeries term = LaurentSeries::monomial(sign, tri, prec);
        term = div_binomial(std::move(term), 1, 2 * n, mod);
        bracket = add(bracket, term);
    }
    // n = -m, m >= 1: (-q)^{m(m-1)/2} q^{2m} / (1 + q^{2m})
    for (index_t m = 1; m * (m - 1) / 2 + 2 * m < prec; ++m) {
        index_t tri = m * (m - 1) / 2;
        Int sign = (tri % 2 == 0) ? 2 : -2;
        LaurentSeries term = LaurentSeries::monomial(sign, tri + 2 * m, prec);
        term = div_binomial(std::move(term), 1, 2 * m, mod);
        bracket = add(bracket, term);
    }
    bracket = reduce_mod(bracket, mod);
    LaurentSeries theta = mul(pochhammer_inf(1, 2, true, prec, mod),
                              inv(euler_inf(2, prec, mod), mod));
    return reduce_mod(mul(theta, bracket), mod);
}

EulerianSum eulerian_definition(MockTheta which) {
    EulerianSum def;
    Incremental inc = incremental_definition(which);
    def.minexp = inc.minexp;
    def.leading_one = inc.leading_one;

    auto fin = [](index_t a, index_t b, index_t n, bool neg, index_t prec) {
        return pochhammer_fin(a, b, n, neg, prec);
    };
    auto sign_of = [](index_t n) { return Int((n % 2 == 0) ? 1 : -1); };

    switch (which) {
        case MockTheta::mu2:
            def.term = [=](index_t n, index_t prec) {
                LaurentSeries t = LaurentSeries::monomial(sign_of(n), n * n, prec);
                t = mul(t, fin(1, 2, n, false, prec));
                return mul(t, inv(pow(fin(2, 2, n, true, prec), 2)));
            };
            break;
        case MockTheta::f3:
            def.term = [=](index_t n, index_t prec) {
                LaurentSeries t = LaurentSeries::monomial(1, n * n, prec);
                return mul(t, inv(pow(fin(1, 1, n, true, prec), 2)));
            };
            break;
        case MockTheta::phi3:
            def.term = [=](index_t n, index_t prec) {
                LaurentSeries t = LaurentSeries::monomial(1, n * n, prec);
                return mul(t, inv(fin(2, 2, n, true, prec)));
            };
            break;
        case MockTheta::chi3:
            def.term = [=](index_t n, index_t prec) {
                LaurentSeries t = LaurentSeries::monomial(1, n * n, prec);
                t = mul(t, fin(1, 1, n, true, prec));
                return mul(t, inv(fin(3, 3, n, true, prec)));
            };
            break;
        case MockTheta::phi6:
            def.term = [=](index_t n, index_t prec) {
                LaurentSeries t = LaurentSeries::monomial(sign_of(n), n * n, prec);
                t = mul(t, fin(1, 2, n, false, prec));
                return mul(t, inv(fin(1, 1, 2 * n, true, prec)));
            };
            break;
        case MockTheta::psi6:
            def.term = [=](index_t n, index_t prec) {
                LaurentSeries t = LaurentSeries::monomial(sign_of(n), (n + 1) * (n + 1), prec);
                t = mul(t, fin(1, 2, n, false, prec));
                return mul(t, inv(fin(1, 1, 2 * n + 1, true, prec)));
            };
            break;
        case MockTheta::lambda6:
            def.term = [=](index_t n, index_t prec) {
                LaurentSeries t = LaurentSeries::monomial(sign_of(n), n, prec);
                t = mul(t, fin(1, 2, n, false, prec));
                return mul(t, inv(fin(1, 1, n, true, prec)));
            };
            break;
        case MockTheta::two_mu6:
            def.term = [=](index_t n, index_t prec) {
                LaurentSeries t = LaurentSeries::monomial(sign_of(n), n + 1, prec);
                LaurentSeries one_plus = (n == 0)
                    ? LaurentSeries::monomial(2, 0, prec)
                    : add(LaurentSeries::one(prec), LaurentSeries::monomial(1, n, prec));
                t = mul(t, one_plus);
                t = mul(t, fin(1, 2, n, false, prec));
                return mul(t, inv(fin(1, 1, n + 1, true, prec)));
            };
            break;
        case MockTheta::U0:
            def.term = [=](index_t n, index_t prec) {
                LaurentSeries t = LaurentSeries::monomial(1, n * n, prec);
                t = mul(t, fin(1, 2, n, true, prec));
                return mul(t, inv(fin(4, 4, n, true, prec)));
            };
            break;
        case MockTheta::S0:
            def.term = [=](index_t n, index_t prec) {
                LaurentSeries t = LaurentSeries::monomial(1, n * n, prec);
                t = mul(t, fin(1, 2, n, true, prec));
                return mul(t, inv(fin(2, 2, n, true, prec)));
            };
            break;
        case MockTheta::S1:
            def.term = [=](index_t n, index_t prec) {
                LaurentSeries t = LaurentSeries::monomial(1, n * (n + 2), prec);
                t = mul(t, fin(1, 2, n, true, prec));
                return mul(t, inv(fin(2, 2, n, true, prec)));
            };
            break;
        case MockTheta::X10:
            def.term = [=](index_t n, index_t prec) {
                LaurentSeries t = LaurentSeries::monomial(sign_of(n), n * n, prec);
                return mul(t, inv(fin(1, 1, 2 * n, true, prec)));
            };
            break;
        case MockTheta::chi10:
            def.term = [=](index_t n, index_t prec) {
                LaurentSeries t = LaurentSeries::monomial(sign_of(n), (n + 1) * (n + 1), prec);
                return mul(t, inv(fin(1, 1, 2 * n + 1, true, prec)));
            };
            break;
    }
    return def;
}

}  // namespace qlab
