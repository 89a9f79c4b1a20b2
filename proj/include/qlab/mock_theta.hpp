#pragma once

#include "qlab/series.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlab {

/// The thirteen classical mock theta functions handled here, in their usual
/// order notation: 2nd (mu2), 3rd (f3, phi3, chi3), 6th (phi6, psi6, lambda6,
/// two_mu6), 8th (U0, S0, S1) and 10th (X10, chi10). The series named two_mu6
/// is the normalized expansion 1 + 2q - 3q^2 + ... including its leading 1.
enum class MockTheta {
    mu2,
    f3,
    phi3,
    chi3,
    phi6,
    psi6,
    lambda6,
    two_mu6,
    U0,
    S0,
    S1,
    X10,
    chi10,
};

const std::vector<std::pair<std::string, MockTheta>>& mock_theta_table();
std::optional<MockTheta> mock_theta_by_name(std::string_view name);
std::string_view mock_theta_name(MockTheta which);

/// Eulerian-sum expansion truncated at `prec`: summation stops at the first
/// index n whose summand has minimal exponent >= prec.
LaurentSeries mock_theta_series(MockTheta which, index_t prec,
                                const Modulus& mod = Modulus::exact());
LaurentSeries mock_theta_series(std::string_view name, index_t prec,
                                const Modulus& mod = Modulus::exact());

/// mu2 through its Appell-Lerch representation (McIntosh, eq. (2)):
///   mu2(q) = 2 ((-q;q^2)_inf/(q^2)_inf) sum_{n in Z} (-q)^{n(n+1)/2}/(1+q^{2n}),
/// an independent route used to cross-check the Eulerian expansion. The n = 0
/// term pairs with the prefactor 2 so all arithmetic stays integral.
LaurentSeries mu2_appell_lerch(index_t prec, const Modulus& mod = Modulus::exact());

/// The defining Eulerian sum of a mock theta function: term(n) is the n-th
/// summand built literally from finite Pochhammer quotients, minexp(n) its
/// minimal exponent (nondecreasing, tending to infinity). This is the
/// reference semantics; mock_theta_series evaluates the same summands
/// incrementally and the two are held equal by tests.
struct EulerianSum {
    std::function<LaurentSeries(index_t n, index_t prec)> term;
    std::function<index_t(index_t n)> minexp;
    bool leading_one = false;  // two_mu6 carries a constant 1 before the sum
};

EulerianSum eulerian_definition(MockTheta which);

}  // namespace qlab
