#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qlab/mock_theta.hpp>
#include <qlab/products.hpp>

using namespace qlab;

namespace {

const Modulus kMod2 = Modulus::mod(2);
const Modulus kMod3 = Modulus::mod(3);

bool prefix_is(const LaurentSeries& s, const std::vector<long long>& expected) {
    for (std::size_t n = 0; n < expected.size(); ++n)
        if (s.coeff(static_cast<index_t>(n)) != expected[n]) return false;
    return true;
}

}  // namespace

TEST_CASE("printed expansions of all thirteen functions") {
    // Frozen from the classical displayed q-expansions.
    CHECK(prefix_is(mock_theta_series(MockTheta::mu2, 12),
                    {1, -1, 1, 2, -1, -4, 1, 5, -2, -5, 4, 7}));
    CHECK(prefix_is(mock_theta_series(MockTheta::f3, 10), {1, 1, -2, 3, -3, 3, -5, 7, -6, 6}));
    CHECK(prefix_is(mock_theta_series(MockTheta::phi3, 10), {1, 1, 0, -1, 1, 1, -1, -1, 0, 2}));
    CHECK(prefix_is(mock_theta_series(MockTheta::chi3, 11), {1, 1, 1, 0, 0, 0, 1, 1, 0, 0, -1}));
    CHECK(prefix_is(mock_theta_series(MockTheta::phi6, 12),
                    {1, -1, 2, -1, 1, -3, 3, -3, 4, -4, 6, -6}));
    CHECK(prefix_is(mock_theta_series(MockTheta::psi6, 10), {0, 1, -1, 1, -2, 3, -2, 2, -4, 5}));
    CHECK(prefix_is(mock_theta_series(MockTheta::lambda6, 9), {1, -1, 3, -5, 6, -7, 11, -16, 18}));
    CHECK(prefix_is(mock_theta_series(MockTheta::two_mu6, 7), {1, 2, -3, 4, -4, 6, -11}));
    CHECK(prefix_is(mock_theta_series(MockTheta::U0, 10), {1, 1, 1, 0, 1, 0, -1, 1, 0, 1}));
    CHECK(prefix_is(mock_theta_series(MockTheta::S0, 10), {1, 1, 1, -1, 0, 2, 0, -1, 0, 1}));
    CHECK(prefix_is(mock_theta_series(MockTheta::S1, 9), {1, 0, 0, 1, 1, -1, -1, 1, 2}));
    CHECK(prefix_is(mock_theta_series(MockTheta::X10, 10), {1, -1, 1, 0, 1, -2, 1, -1, 1, -2}));
    CHECK(prefix_is(mock_theta_series(MockTheta::chi10, 10), {0, 1, -1, 1, -2, 2, -1, 2, -3, 3}));
}

TEST_CASE("incremental evaluation equals the literal Eulerian definition") {
    const index_t P = 150;
    for (const auto& [name, id] : mock_theta_table()) {
        EulerianSum def = eulerian_definition(id);
        LaurentSeries sum =
            def.leading_one ? LaurentSeries::one(P) : LaurentSeries::zero(P);
        index_t prev = def.minexp(0);
        index_t n = 0;
        for (; def.minexp(n) < P; ++n) {
            CHECK(def.minexp(n) >= prev);  // nondecreasing over the summed range
            prev = def.minexp(n);
            LaurentSeries t = def.term(n, P);
            if (!t.is_zero()) CHECK(t.order() >= def.minexp(n));
            sum = add(sum, t);
        }
        CHECK(def.minexp(n) >= P);  // first omitted term lies beyond the precision
        INFO(name);
        CHECK(agree(sum, mock_theta_series(id, P)));
    }
}

TEST_CASE("name lookup and argument validation") {
    CHECK(mock_theta_by_name("mu2").has_value());
    CHECK(mock_theta_by_name("two_mu6") == MockTheta::two_mu6);
    CHECK_FALSE(mock_theta_by_name("mu7").has_value());
    CHECK(mock_theta_name(MockTheta::X10) == "X10");
    CHECK_THROWS_AS(mock_theta_series("mu7", 10), DomainError);
    CHECK_THROWS_AS(mock_theta_series(MockTheta::mu2, 0), DomainError);
    CHECK_THROWS_AS(mu2_appell_lerch(0), DomainError);
}

TEST_CASE("two_mu6 carries its leading 1") {
    LaurentSeries s = mock_theta_series(MockTheta::two_mu6, 5);
    CHECK(s.order() == 0);
    CHECK(s.coeff(0) == 1);
}

TEST_CASE("Gordon-McIntosh relation U0(q) = S0(q^2) + q S1(q^2)") {
    const index_t P = 400;
    LaurentSeries u0 = mock_theta_series(MockTheta::U0, P);
    LaurentSeries rhs = add(substitute_power(mock_theta_series(MockTheta::S0, P / 2 + 1), 2),
                            shift(substitute_power(mock_theta_series(MockTheta::S1, P / 2 + 1), 2), 1));
    CHECK(compare(u0, rhs).equal);
    CHECK(compare(u0, rhs).hi >= P);
}

TEST_CASE("Appell-Lerch representation of mu2") {
    CHECK(agree(mock_theta_series(MockTheta::mu2, 200), mu2_appell_lerch(200)));
    CHECK(mu2_appell_lerch(3).coeff(0) == 1);

    // mod 2 the bilateral tail drops out: mu2 = (-q;q^2)_inf/(q^2)_inf
    const index_t P = 300;
    LaurentSeries lhs = mu2_appell_lerch(P, kMod2);
    LaurentSeries rhs = reduce_mod(
        mul(pochhammer_inf(1, 2, true, P, kMod2), inv(euler_inf(2, P, kMod2), kMod2)), kMod2);
    CHECK(agree(lhs, rhs));
}

TEST_CASE("parity congruences against eta quotients") {
    const index_t P = 400;
    LaurentSeries inv_e1 = inv(euler_inf(1, P, kMod2), kMod2);           // 1/(q)
    LaurentSeries inv_e1_cubed = pow(inv_e1, 3, kMod2);                  // 1/(q)^3

    CHECK(agree(mock_theta_series(MockTheta::mu2, P, kMod2), inv_e1_cubed));
    CHECK(agree(mock_theta_series(MockTheta::U0, P, kMod2), inv_e1_cubed));
    CHECK(agree(mock_theta_series(MockTheta::f3, P, kMod2), inv_e1));
    CHECK(agree(mock_theta_series(MockTheta::phi3, P, kMod2), inv_e1));
    CHECK(agree(mock_theta_series(MockTheta::phi6, P, kMod2), inv_e1));

    // psi6 = q (q^3)^6 / (q)^3 mod 2
    LaurentSeries rhs = reduce_mod(
        shift(mul(pow(euler_inf(3, P - 1, kMod2), 6, kMod2),
                  pow(euler_inf(1, P - 1, kMod2), -3, kMod2)),
              1),
        kMod2);
    CHECK(agree(mock_theta_series(MockTheta::psi6, P, kMod2), rhs));
}

TEST_CASE("f3 = chi3 mod 3") {
    const index_t P = 400;
    CHECK(agree(mock_theta_series(MockTheta::f3, P, kMod3),
                mock_theta_series(MockTheta::chi3, P, kMod3)));
}

TEST_CASE("2mu6 even-index coefficients have partition parity") {
    const index_t P = 301;
    LaurentSeries tm = mock_theta_series(MockTheta::two_mu6, 2 * P, kMod2);
    LaurentSeries p = partition_gf(P, kMod2);
    for (index_t n = 0; n < P; ++n) CHECK(tm.coeff(2 * n) == p.coeff(n));
}
