#pragma once

#include "qlab/series.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlab {

/// The coefficient stream c(series, stride*n + offset) for n >= start;
/// reading past the constructed precision is a hard error, never zero.
struct CoefficientStream {
    std::string series;
    index_t stride = 1;
    index_t offset = 0;
    index_t start = 0;

    std::string describe() const;  // e.g. "c1(8n-1)" or "mu2(n)"
};

enum class ClaimKind {
    CongruentStreams,           // all streams agree mod m at every index
    VanishingStream,            // every stream vanishes mod m
    TriangularCharacterization, // stream(n) != 0 mod m iff n is triangular
    ExactIdentity,              // two series expressions agree coefficientwise
    CountFormula,               // #{n <= X : stream(n) odd} = floor((1+sqrt(1+8X))/2)
};

std::string_view claim_kind_name(ClaimKind kind);
std::optional<ClaimKind> claim_kind_by_name(std::string_view name);

using SeriesBuilder = std::function<LaurentSeries(index_t prec)>;

/// One side of an exact identity: a builder plus its rendered form.
struct IdentitySide {
    std::string text;
    SeriesBuilder build;
};

struct Claim {
    std::string id;
    ClaimKind kind = ClaimKind::CongruentStreams;
    Modulus modulus = Modulus::exact();
    std::vector<CoefficientStream> streams;
    std::optional<IdentitySide> lhs_expr;  // ExactIdentity only
    std::optional<IdentitySide> rhs_expr;
    std::string source;
};

struct Failure {
    index_t index = 0;
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct VerificationReport {
    std::string claim_id;
    index_t range_lo = 0;
    index_t range_hi = 0;  // inclusive
    bool verified = false;
    std::optional<Failure> first_failure;  // present iff not verified
    std::vector<Failure> failures;         // filled when collecting all failures
    double elapsed_seconds = 0.0;
};

struct VerifyOptions {
    bool collect_all_failures = false;
};

/// Deterministic finite-range verification. Required series precision is
/// derived from each stream's stride/offset and the requested index range,
/// and congruence claims are constructed directly in the residue ring.
VerificationReport verify_claim(const Claim& claim, index_t terms,
                                const VerifyOptions& options = {});

/// The built-in registry covering the parity/congruence theorems, the
/// exact-identity suite, the counting formula and the concluding-remark
/// congruences. Ids are stable.
const std::vector<Claim>& builtin_claims();
const Claim* find_builtin_claim(std::string_view id);

/// Suites: thm1, thm2, thm3, prop, identities, counts, all.
const std::vector<std::string>& suite_names();
bool suite_contains(std::string_view suite, std::string_view claim_id);
std::optional<std::vector<Claim>> claims_for_suite(std::string_view suite);

/// n = k(k+1)/2 for some k >= 0, decided by whether 8n+1 is a perfect
/// square (integer arithmetic only).
bool is_triangular(index_t n);

/// #{k >= 0 : k(k+1)/2 <= X} = floor((1 + isqrt(1+8X)) / 2).
index_t triangular_count(index_t X);

/// Ascending n in [stream.start, limit] with stream(n) odd.
std::vector<index_t> odd_index_list(const CoefficientStream& stream, index_t limit);

/// Smallest admissible start index for a stream: hauptmodul coefficient
/// streams begin where stride*n + offset >= 1 (the pole and constant term are
/// not part of c_N), all other series where stride*n + offset >= 0.
index_t default_stream_start(const CoefficientStream& stream);

/// Do the arithmetic progressions (stride, offset) jointly cover every
/// residue class mod m?
bool progressions_cover_residues(const std::vector<std::pair<index_t, index_t>>& progressions,
                                 index_t m);

}  // namespace qlab
