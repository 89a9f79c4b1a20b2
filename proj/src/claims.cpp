#include "qlab/claims.hpp"

#include "qlab/mock_theta.hpp"
#include "qlab/products.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace qlab {

namespace {

index_t ceil_div(index_t a, index_t b) {
    index_t q = a / b;
    if (a % b > 0) ++q;
    return q;
}

std::string affine_text(index_t stride, index_t offset) {
    std::string s = "(";
    if (stride != 1) s += std::to_string(stride);
    s += "n";
    if (offset > 0) s += "+" + std::to_string(offset);
    if (offset < 0) s += std::to_string(offset);
    s += ")";
    return s;
}

// ---- identity expression builders -------------------------------------

LaurentSeries e(index_t k, index_t prec) { return euler_inf(k, prec); }

// prod (q^{k_i})^{e_i} for positive e_i over inv of the negative ones
LaurentSeries euler_product(const std::vector<std::pair<index_t, index_t>>& factors, index_t prec) {
    LaurentSeries acc = LaurentSeries::one(prec);
    for (auto [k, r] : factors) acc = mul(acc, pow(e(k, prec), r));
    return acc;
}

IdentitySide side(std::string text, SeriesBuilder build) {
    return IdentitySide{std::move(text), std::move(build)};
}

Claim identity_claim(std::string id, IdentitySide lhs, IdentitySide rhs, std::string source) {
    Claim c;
    c.id = std::move(id);
    c.kind = ClaimKind::ExactIdentity;
    c.lhs_expr = std::move(lhs);
    c.rhs_expr = std::move(rhs);
    c.source = std::move(source);
    return c;
}

Claim stream_claim(std::string id, ClaimKind kind, index_t modulus,
                   std::vector<CoefficientStream> streams, std::string source) {
    Claim c;
    c.id = std::move(id);
    c.kind = kind;
    c.modulus = Modulus::mod(modulus);
    c.streams = std::move(streams);
    c.source = std::move(source);
    return c;
}

std::vector<Claim> make_registry() {
    std::vector<Claim> reg;

    // -- level 2^k parity family ----------------------------------------
    reg.push_back(stream_claim(
        "T1-chain", ClaimKind::CongruentStreams, 2,
        {{"j1", 1, 0, 1}, {"j2", 1, 0, 1}, {"j4", 1, 0, 1}, {"j8", 1, 0, 1}, {"j16", 1, 0, 1}},
        "hauptmodul parity chain, levels 1,2,4,8,16"));
    reg.push_back(stream_claim(
        "T1-1", ClaimKind::VanishingStream, 2,
        {{"j1", 8, 0, 1}, {"j1", 8, 1, 0}, {"j1", 8, 2, 0}, {"j1", 8, 3, 0},
         {"j1", 8, 4, 0}, {"j1", 8, 5, 0}, {"j1", 8, 6, 0}},
        "c1(n) is even unless n = 8k+7"));
    reg.push_back(stream_claim(
        "T1-2", ClaimKind::CongruentStreams, 2,
        {{"j1", 8, -1, 1}, {"mu2", 1, 0, 1}, {"U0", 1, 0, 1}},
        "c1(8n-1) vs 2nd order mu2 (McIntosh) and 8th order U0"));
    reg.push_back(stream_claim(
        "T1-3", ClaimKind::CongruentStreams, 2, {{"j1", 16, -1, 1}, {"S0", 1, 0, 1}},
        "c1(16n-1) vs 8th order S0 (Gordon-McIntosh)"));
    reg.push_back(stream_claim(
        "T1-4", ClaimKind::CongruentStreams, 2, {{"j1", 16, 7, 0}, {"S1", 1, 0, 0}},
        "c1(16n+7) vs 8th order S1 (Gordon-McIntosh)"));

    // -- level 3*2^k parity family --------------------------------------
    reg.push_back(stream_claim(
        "T2-chain", ClaimKind::CongruentStreams, 2,
        {{"j3", 1, 0, 1}, {"j6", 1, 0, 1}, {"j12", 1, 0, 1}},
        "hauptmodul parity chain, levels 3,6,12"));
    reg.push_back(stream_claim(
        "T2-1", ClaimKind::VanishingStream, 2,
        {{"j3", 2, 0, 1}, {"j3", 4, 1, 0}, {"j3", 12, 7, 0}, {"j3", 24, 11, 0}},
        "even progressions of c3 (extends Ray's level-6 result)"));
    reg.push_back(stream_claim(
        "T2-2", ClaimKind::CongruentStreams, 2,
        {{"j3", 24, -1, 1}, {"f3", 1, 0, 1}, {"phi3", 1, 0, 1}, {"phi6", 1, 0, 1},
         {"two_mu6", 2, 0, 1}, {"partition_gf", 1, 0, 1}},
        "c3(24n-1) vs f3, phi3, phi6, 2mu6(2n) and the partition numbers"));
    reg.push_back(stream_claim(
        "T2-3", ClaimKind::CongruentStreams, 2, {{"j3", 24, -9, 1}, {"psi6", 1, 0, 1}},
        "c3(24n-9) vs 6th order psi6"));
    reg.push_back(stream_claim(
        "T2-4", ClaimKind::TriangularCharacterization, 2, {{"j3", 24, 3, 0}},
        "c3(24n+3) is odd exactly at triangular n (refines Ray, Thm 3.2)"));
    reg.push_back(stream_claim(
        "T2-5", ClaimKind::CongruentStreams, 2, {{"j3", 12, 3, 0}, {"lambda6", 1, 0, 0}},
        "c3(12n+3) vs 6th order lambda6"));

    // -- level 5*2^k parity family --------------------------------------
    reg.push_back(stream_claim(
        "T3-chain", ClaimKind::CongruentStreams, 2, {{"j5", 1, 0, 1}, {"j10", 1, 0, 1}},
        "hauptmodul parity chain, levels 5,10"));
    reg.push_back(stream_claim(
        "T3-1", ClaimKind::VanishingStream, 2,
        {{"j5", 2, 0, 1}, {"j5", 8, 3, 0}, {"j5", 40, 13, 0}, {"j5", 40, 21, 0},
         {"j5", 40, 29, 0}, {"j5", 40, 37, 0}, {"j5", 40, 7, 0}, {"j5", 40, 23, 0}},
        "even progressions of c5"));
    reg.push_back(stream_claim(
        "T3-2", ClaimKind::CongruentStreams, 2, {{"j5", 40, -1, 1}, {"X10", 1, 0, 1}},
        "c5(40n-1) vs 10th order X10"));
    reg.push_back(stream_claim(
        "T3-3", ClaimKind::CongruentStreams, 2, {{"j5", 40, -9, 1}, {"chi10", 1, 0, 1}},
        "c5(40n-9) vs 10th order chi10"));
    reg.push_back(stream_claim(
        "T3-4a", ClaimKind::CongruentStreams, 2, {{"j5", 8, 1, 0}, {"j5", 40, 5, 0}},
        "c5(8n+1) vs c5(40n+5)"));
    reg.push_back(stream_claim(
        "T3-4b", ClaimKind::TriangularCharacterization, 2, {{"j5", 8, 1, 0}},
        "c5(8n+1) is odd exactly at triangular n"));
    reg.push_back(stream_claim(
        "T3-5", ClaimKind::CongruentStreams, 2, {{"j5", 40, 15, 0}, {"p10_gf", 1, 0, 0}},
        "c5(40n+15) vs partitions with no part divisible by 10"));

    // -- congruences modulo 3, 5, 7, 13 ----------------------------------
    reg.push_back(stream_claim("P-1", ClaimKind::CongruentStreams, 3,
                               {{"j1", 1, 0, 1}, {"j3", 1, 0, 1}, {"j9", 1, 0, 1}},
                               "c1 = c3 = c9 mod 3"));
    reg.push_back(stream_claim("P-2", ClaimKind::CongruentStreams, 3,
                               {{"j2", 1, 0, 1}, {"j6", 1, 0, 1}, {"j18", 1, 0, 1}},
                               "c2 = c6 = c18 mod 3"));
    reg.push_back(stream_claim("P-3", ClaimKind::CongruentStreams, 3,
                               {{"j4", 1, 0, 1}, {"j12", 1, 0, 1}}, "c4 = c12 mod 3"));
    reg.push_back(stream_claim("P-4", ClaimKind::CongruentStreams, 5,
                               {{"j1", 1, 0, 1}, {"j5", 1, 0, 1}, {"j25", 1, 0, 1}},
                               "c1 = c5 = c25 mod 5"));
    reg.push_back(stream_claim("P-5", ClaimKind::CongruentStreams, 5,
                               {{"j2", 1, 0, 1}, {"j10", 1, 0, 1}}, "c2 = c10 mod 5"));
    reg.push_back(stream_claim("P-6", ClaimKind::CongruentStreams, 7,
                               {{"j1", 1, 0, 1}, {"j7", 1, 0, 1}}, "c1 = c7 mod 7"));
    reg.push_back(stream_claim("P-7", ClaimKind::CongruentStreams, 13,
                               {{"j1", 1, 0, 1}, {"j13", 1, 0, 1}}, "c1 = c13 mod 13"));
    reg.push_back(stream_claim("M3-f3chi3", ClaimKind::CongruentStreams, 3,
                               {{"f3", 1, 0, 0}, {"chi3", 1, 0, 0}},
                               "3rd order f3 vs chi3, mod 3"));

    // -- exact identity suite --------------------------------------------
    reg.push_back(identity_claim(
        "I-2dis3",
        side("(q)/(q^3)^3",
             [](index_t P) { return euler_product({{1, 1}, {3, -3}}, P); }),
        side("(q^2)(q^4)^2(q^12)^2/(q^6)^7 - q (q^2)^3(q^12)^6/((q^4)^2(q^6)^9)",
             [](index_t P) {
                 LaurentSeries t1 = euler_product({{2, 1}, {4, 2}, {12, 2}, {6, -7}}, P);
                 LaurentSeries t2 = euler_product({{2, 3}, {12, 6}, {4, -2}, {6, -9}}, P);
                 return sub(t1, shift(t2, 1));
             }),
        "2-dissection of (q)/(q^3)^3 (Hirschhorn-Roselin, Lemma 2.1)"));
    reg.push_back(identity_claim(
        "I-3dis",
        side("(q)^3/(q^3)",
             [](index_t P) { return euler_product({{1, 3}, {3, -1}}, P); }),
        side("a(q^3) - q c(q^3)",
             [](index_t P) {
                 index_t inner = ceil_div(P, 3) + 1;
                 LaurentSeries a3 = substitute_power(borwein_a(inner), 3);
                 LaurentSeries c3 = substitute_power(borwein_c(inner), 3);
                 return sub(a3, shift(c3, 1));
             }),
        "3-dissection of (q)^3/(q^3) (Hirschhorn-Garvan-Borwein, (1.4)/(1.6))"));
    reg.push_back(identity_claim(
        "I-c2dis",
        side("c(q)", [](index_t P) { return borwein_c(P); }),
        side("3 (-q^2;q^2)^3 (q^2)(q^6)/(-q^6;q^6) + q c(q^4)",
             [](index_t P) {
                 LaurentSeries t1 = mul(pow(pochhammer_inf(2, 2, true, P), 3),
                                        mul(e(2, P), e(6, P)));
                 t1 = mul(t1, inv(pochhammer_inf(6, 6, true, P)));
                 LaurentSeries c4 = substitute_power(borwein_c(ceil_div(P, 4) + 1), 4);
                 return add(scale(t1, 3), shift(c4, 1));
             }),
        "2-dissection of c(q) (Hirschhorn-Garvan-Borwein, (1.36))"));
    reg.push_back(identity_claim(
        "I-cid",
        side("c(q)", [](index_t P) { return borwein_c(P); }),
        side("3 (q^3)^3/(q)",
             [](index_t P) { return scale(euler_product({{3, 3}, {1, -1}}, P), 3); }),
        "c(q) = 3 (q^3)^3/(q) (Hirschhorn-Garvan-Borwein, (1.7))"));
    reg.push_back(identity_claim(
        "I-JTP",
        side("psi(q)", [](index_t P) { return theta_psi(P); }),
        side("(-q;q)^2 (q)",
             [](index_t P) { return mul(pow(pochhammer_inf(1, 1, true, P), 2), e(1, P)); }),
        "psi(q) = (-q;q)^2 (q) (Jacobi triple product)"));
    reg.push_back(identity_claim(
        "I-10dis",
        side("(q)/(q^5)",
             [](index_t P) { return euler_product({{1, 1}, {5, -1}}, P); }),
        side("(q^2)(q^8)(q^20)^3/((q^4)(q^10)^3(q^40)) - q (q^4)^2(q^40)/((q^8)(q^10)^2)",
             [](index_t P) {
                 LaurentSeries t1 =
                     euler_product({{2, 1}, {8, 1}, {20, 3}, {4, -1}, {10, -3}, {40, -1}}, P);
                 LaurentSeries t2 = euler_product({{4, 2}, {40, 1}, {8, -1}, {10, -2}}, P);
                 return sub(t1, shift(t2, 1));
             }),
        "2-dissection of (q)/(q^5) (Ray, (4.3))"));
    reg.push_back(identity_claim(
        "I-5dis",
        side("(q^2)/(q^5)",
             [](index_t P) { return euler_product({{2, 1}, {5, -1}}, P); }),
        side("((q^50)/(q^5)) (1/F(q^10) - q^2 - q^4 F(q^10))",
             [](index_t P) {
                 LaurentSeries F10 = substitute_power(rr_fraction_F(ceil_div(P, 10) + 1), 10);
                 LaurentSeries inner = sub(inv(F10), LaurentSeries::monomial(1, 2, P));
                 inner = sub(inner, shift(F10, 4));
                 return mul(euler_product({{50, 1}, {5, -1}}, P), inner);
             }),
        "5-dissection of (q^2)/(q^5) via the Rogers-Ramanujan product (Berndt, Thm 7.4.1)"));
    reg.push_back(identity_claim(
        "I-TX",
        side("(q)(q^5)", [](index_t P) { return mul(e(1, P), e(5, P)); }),
        side("(q^4)^2(q^10)^5/((q^2)(q^5)^2(q^20)^2) - q (q^2)^5(q^20)^2/((q)^2(q^4)^2(q^10))",
             [](index_t P) {
                 LaurentSeries t1 =
                     euler_product({{4, 2}, {10, 5}, {2, -1}, {5, -2}, {20, -2}}, P);
                 LaurentSeries t2 =
                     euler_product({{2, 5}, {20, 2}, {1, -2}, {4, -2}, {10, -1}}, P);
                 return sub(t1, shift(t2, 1));
             }),
        "2-dissection of (q)(q^5) (Tang-Xia, Lemma 3.2)"));
    reg.push_back(identity_claim(
        "I-H34",
        side("(q^3)^3(q^4)(q^12)/((q)(q^6)^2)",
             [](index_t P) {
                 return euler_product({{3, 3}, {4, 1}, {12, 1}, {1, -1}, {6, -2}}, P);
             }),
        side("(q^4)^4/(q^2)^2 + q (q^12)^4/(q^6)^2",
             [](index_t P) {
                 LaurentSeries t1 = euler_product({{4, 4}, {2, -2}}, P);
                 LaurentSeries t2 = euler_product({{12, 4}, {6, -2}}, P);
                 return add(t1, shift(t2, 1));
             }),
        "2-dissection identity (Hirschhorn, (34.1.18))"));
    reg.push_back(identity_claim(
        "I-GM",
        side("U0(q)", [](index_t P) { return mock_theta_series(MockTheta::U0, P); }),
        side("S0(q^2) + q S1(q^2)",
             [](index_t P) {
                 index_t inner = ceil_div(P, 2) + 1;
                 LaurentSeries s0 = substitute_power(mock_theta_series(MockTheta::S0, inner), 2);
                 LaurentSeries s1 = substitute_power(mock_theta_series(MockTheta::S1, inner), 2);
                 return add(s0, shift(s1, 1));
             }),
        "U0(q) = S0(q^2) + q S1(q^2) (Gordon-McIntosh, (1.7))"));
    auto e12_combination = [](index_t P, index_t mult) {
        LaurentSeries num = sub(pow(eisenstein_E4(P + 1), 3),
                                scale(eisenstein_E12hat(P + 1), mult));
        return mul(num, inv(delta(P + 2)));
    };
    reg.push_back(identity_claim(
        "I-E12a",
        side("(E4^3 - 3*691E12)/Delta",
             [e12_combination](index_t P) { return e12_combination(P, 3); }),
        side("-2072 j1 + 1296000",
             [](index_t P) {
                 return add(scale(hauptmodul(1, P), -2072),
                            LaurentSeries::monomial(1296000, 0, P));
             }),
        "weight 0 form identity fixed by its first two coefficients"));
    reg.push_back(identity_claim(
        "I-E12b",
        side("(E4^3 - 7*691E12)/Delta",
             [e12_combination](index_t P) { return e12_combination(P, 7); }),
        side("-4836 j1 + 3024000",
             [](index_t P) {
                 return add(scale(hauptmodul(1, P), -4836),
                            LaurentSeries::monomial(3024000, 0, P));
             }),
        "weight 0 form identity fixed by its first two coefficients"));
    reg.push_back(identity_claim(
        "I-AL",
        side("mu2 (Eulerian sum)",
             [](index_t P) { return mock_theta_series(MockTheta::mu2, P); }),
        side("mu2 (Appell-Lerch form)", [](index_t P) { return mu2_appell_lerch(P); }),
        "mu2 Eulerian definition vs Appell-Lerch representation (McIntosh, (2))"));

    // -- counting formula -------------------------------------------------
    reg.push_back(stream_claim(
        "C-Ray", ClaimKind::CountFormula, 2, {{"j3", 24, 3, 0}},
        "#{n <= X : c3(24n+3) odd} = floor((1+sqrt(1+8X))/2), exact form of Ray's density"));

    return reg;
}

// ---- verification engine ------------------------------------------------

struct BuiltStream {
    const CoefficientStream* spec;
    LaurentSeries series;

    Int value(index_t n) const { return series.coeff(spec->stride * n + spec->offset); }
};

std::vector<BuiltStream> build_streams(const Claim& claim, index_t terms) {
    std::vector<BuiltStream> built;
    built.reserve(claim.streams.size());
    for (const CoefficientStream& s : claim.streams) {
        if (s.stride < 1) throw DomainError("stream stride must be >= 1");
        index_t prec = s.stride * terms + s.offset + 1;
        built.push_back({&s, build_series(s.series, prec, claim.modulus)});
    }
    return built;
}

}  // namespace

std::string CoefficientStream::describe() const {
    std::string name = series;
    if (is_hauptmodul_name(name) && name[0] == 'j') name[0] = 'c';
    return name + affine_text(stride, offset);
}

std::string_view claim_kind_name(ClaimKind kind) {
    switch (kind) {
        case ClaimKind::CongruentStreams: return "congruent_streams";
        case ClaimKind::VanishingStream: return "vanishing_stream";
        case ClaimKind::TriangularCharacterization: return "triangular_characterization";
        case ClaimKind::ExactIdentity: return "exact_identity";
        case ClaimKind::CountFormula: return "count_formula";
    }
    throw DomainError("unknown claim kind");
}

std::optional<ClaimKind> claim_kind_by_name(std::string_view name) {
    for (ClaimKind k : {ClaimKind::CongruentStreams, ClaimKind::VanishingStream,
                        ClaimKind::TriangularCharacterization, ClaimKind::ExactIdentity,
                        ClaimKind::CountFormula})
        if (claim_kind_name(k) == name) return k;
    return std::nullopt;
}

bool is_triangular(index_t n) {
    if (n < 0) throw DomainError("is_triangular requires n >= 0");
    Int s = boost::multiprecision::sqrt(Int(8 * n + 1));
    return s * s == 8 * n + 1;
}

index_t triangular_count(index_t X) {
    if (X < 0) throw DomainError("triangular_count requires X >= 0");
    Int s = boost::multiprecision::sqrt(Int(8 * X + 1));
    return static_cast<index_t>((1 + s) / 2);
}

VerificationReport verify_claim(const Claim& claim, index_t terms, const VerifyOptions& options) {
    if (terms < 1) throw DomainError("terms must be >= 1");
    auto t0 = std::chrono::steady_clock::now();

    VerificationReport report;
    report.claim_id = claim.id;
    report.verified = true;

    auto record = [&](Failure failure) {
        if (!report.first_failure) report.first_failure = failure;
        report.verified = false;
        if (options.collect_all_failures) report.failures.push_back(std::move(failure));
    };
    // scan loop helper: stop early unless collecting everything
    auto keep_going = [&]() { return report.verified || options.collect_all_failures; };

    switch (claim.kind) {
        case ClaimKind::CongruentStreams: {
            if (claim.streams.size() < 2)
                throw DomainError("congruent_streams claim needs at least two streams");
            auto built = build_streams(claim, terms);
            index_t start = 0;
            for (const auto& b : built) start = std::max(start, b.spec->start);
            report.range_lo = start;
            report.range_hi = terms;
            for (index_t n = start; n <= terms && keep_going(); ++n) {
                Int lhs = built[0].value(n);
                for (std::size_t i = 1; i < built.size(); ++i) {
                    Int rhs = built[i].value(n);
                    if (lhs != rhs) {
                        record({n, lhs.str(), rhs.str(),
                                built[0].spec->describe() + " vs " + built[i].spec->describe()});
                        if (!options.collect_all_failures) break;
                    }
                }
            }
            break;
        }
        case ClaimKind::VanishingStream: {
            if (claim.streams.empty())
                throw DomainError("vanishing_stream claim needs at least one stream");
            auto built = build_streams(claim, terms);
            report.range_lo = built[0].spec->start;
            report.range_hi = terms;
            for (const auto& b : built) {
                report.range_lo = std::min(report.range_lo, b.spec->start);
                for (index_t n = b.spec->start; n <= terms && keep_going(); ++n) {
                    Int v = b.value(n);
                    if (!v.is_zero()) record({n, v.str(), "0", b.spec->describe()});
                }
            }
            break;
        }
        case ClaimKind::TriangularCharacterization: {
            if (claim.streams.size() != 1)
                throw DomainError("triangular_characterization claim needs exactly one stream");
            auto built = build_streams(claim, terms);
            report.range_lo = built[0].spec->start;
            report.range_hi = terms;
            for (index_t n = report.range_lo; n <= terms && keep_going(); ++n) {
                bool nonzero = !built[0].value(n).is_zero();
                bool tri = is_triangular(n);
                if (nonzero != tri)
                    record({n, built[0].value(n).str(), tri ? "odd (n triangular)" : "even",
                            built[0].spec->describe()});
            }
            break;
        }
        case ClaimKind::ExactIdentity: {
            if (!claim.lhs_expr || !claim.rhs_expr)
                throw DomainError("exact_identity claim needs both expressions");
            LaurentSeries lhs = claim.lhs_expr->build(terms);
            LaurentSeries rhs = claim.rhs_expr->build(terms);
            if (lhs.prec() < terms || rhs.prec() < terms)
                throw PrecisionError("identity expression fell short of the requested precision");
            report.range_lo = std::min(lhs.order(), rhs.order());
            report.range_hi = std::min(lhs.prec(), rhs.prec()) - 1;
            for (index_t n = report.range_lo; n <= report.range_hi && keep_going(); ++n) {
                const Int& a = lhs.coeff(n);
                const Int& b = rhs.coeff(n);
                if (a != b)
                    record({n, a.str(), b.str(),
                            claim.lhs_expr->text + " vs " + claim.rhs_expr->text});
            }
            break;
        }
        case ClaimKind::CountFormula: {
            if (claim.streams.size() != 1)
                throw DomainError("count_formula claim needs exactly one stream");
            auto built = build_streams(claim, terms);
            report.range_lo = 0;
            report.range_hi = terms;
            index_t count = 0;
            for (index_t X = 0; X <= terms && keep_going(); ++X) {
                if (built[0].value(X) % 2 != 0) ++count;
                index_t expected = triangular_count(X);
                if (count != expected)
                    record({X, std::to_string(count), std::to_string(expected),
                            "odd count of " + built[0].spec->describe() + " up to X"});
            }
            break;
        }
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

const std::vector<Claim>& builtin_claims() {
    static const std::vector<Claim> registry = make_registry();
    return registry;
}

const Claim* find_builtin_claim(std::string_view id) {
    for (const Claim& c : builtin_claims())
        if (c.id == id) return &c;
    return nullptr;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"thm1", "thm2", "thm3",  "prop",
                                                   "identities", "counts", "all"};
    return names;
}

bool suite_contains(std::string_view suite, std::string_view id) {
    if (suite == "all") return true;
    if (suite == "thm1") return id.starts_with("T1-");
    if (suite == "thm2") return id.starts_with("T2-");
    if (suite == "thm3") return id.starts_with("T3-");
    if (suite == "prop")
        return id.starts_with("P-") || id == "M3-f3chi3" || id == "I-E12a" || id == "I-E12b";
    if (suite == "identities") return id.starts_with("I-");
    if (suite == "counts") return id.starts_with("C-");
    return false;
}

std::optional<std::vector<Claim>> claims_for_suite(std::string_view suite) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        return std::nullopt;
    std::vector<Claim> out;
    for (const Claim& c : builtin_claims())
        if (suite_contains(suite, c.id)) out.push_back(c);
    return out;
}

std::vector<index_t> odd_index_list(const CoefficientStream& stream, index_t limit) {
    if (limit < 1) throw DomainError("odd list limit must be >= 1");
    index_t prec = stream.stride * limit + stream.offset + 1;
    LaurentSeries series = build_series(stream.series, prec, Modulus::mod(2));
    std::vector<index_t> odd;
    for (index_t n = stream.start; n <= limit; ++n)
        if (!series.coeff(stream.stride * n + stream.offset).is_zero()) odd.push_back(n);
    return odd;
}

index_t default_stream_start(const CoefficientStream& stream) {
    index_t floor_exponent = is_hauptmodul_name(stream.series) ? 1 : 0;
    index_t n = ceil_div(floor_exponent - stream.offset, stream.stride);
    return std::max<index_t>(n, 0);
}

bool progressions_cover_residues(const std::vector<std::pair<index_t, index_t>>& progressions,
                                 index_t m) {
    if (m < 1) throw DomainError("residue modulus must be >= 1");
    std::vector<bool> covered(static_cast<std::size_t>(m), false);
    for (auto [stride, offset] : progressions) {
        index_t g = std::gcd(stride, m);
        // stride*n + offset mod m hits offset + k*gcd(stride, m)
        for (index_t k = 0; k < m / g; ++k) {
            index_t r = ((offset + k * g) % m + m) % m;
            covered[static_cast<std::size_t>(r)] = true;
        }
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

}  // namespace qlab
