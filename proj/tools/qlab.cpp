// qlab - expand q-series from the catalog and verify congruence claims.
//
// Exit codes: 0 success, 1 at least one claim failed, 2 usage error.

#include "qlab/claims.hpp"
#include "qlab/manifest.hpp"
#include "qlab/mock_theta.hpp"
#include "qlab/products.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace qlab;
using nlohmann::json;

enum class Format { text, csv, json_fmt };

struct FormatOption {
    std::string value = "text";

    Format parse() const {
        if (value == "text") return Format::text;
        if (value == "csv") return Format::csv;
        if (value == "json") return Format::json_fmt;
        throw DomainError("unknown format: " + value + " (expected text|csv|json)");
    }
};

void emit(const std::string& rendered, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << rendered;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DomainError("cannot open output file: " + out_path);
    out << rendered;
}

std::string render_range(const VerificationReport& r) {
    return std::to_string(r.range_lo) + ".." + std::to_string(r.range_hi);
}

std::string render_failure(const Failure& f) {
    std::string s = "n=" + std::to_string(f.index) + " lhs=" + f.lhs + " rhs=" + f.rhs;
    if (!f.note.empty()) s += " (" + f.note + ")";
    return s;
}

// ---- expand -------------------------------------------------------------

int cmd_expand(const std::string& name, index_t terms, index_t mod_value,
               const FormatOption& format, const std::string& out_path) {
    Format fmt = format.parse();
    if (terms < 1) throw DomainError("--terms must be >= 1");
    Modulus mod = mod_value == 0 ? Modulus::exact() : Modulus::mod(mod_value);
    LaurentSeries series = build_series(name, terms, mod);

    std::ostringstream os;
    switch (fmt) {
        case Format::text:
            for (index_t n = series.order(); n < series.prec(); ++n)
                os << n << "\t" << series.coeff(n).str() << "\n";
            break;
        case Format::csv:
            os << "n,coefficient\n";
            for (index_t n = series.order(); n < series.prec(); ++n)
                os << n << "," << series.coeff(n).str() << "\n";
            break;
        case Format::json_fmt: {
            json doc;
            doc["series"] = name;
            doc["modulus"] = mod.is_exact() ? json(nullptr) : json(mod.modulus());
            doc["terms"] = terms;
            json rows = json::array();
            for (index_t n = series.order(); n < series.prec(); ++n)
                rows.push_back(json{{"n", n}, {"c", series.coeff(n).str()}});
            doc["coefficients"] = rows;
            os << doc.dump(2) << "\n";
            break;
        }
    }
    emit(os.str(), out_path);
    return 0;
}

// ---- verify -------------------------------------------------------------

std::vector<Claim> select_claims(const std::string& selection, const std::string& manifest_path) {
    std::vector<Claim> pool;
    if (!manifest_path.empty())
        pool = load_manifest_file(manifest_path);
    else
        pool = builtin_claims();

    const auto& suites = suite_names();
    if (std::find(suites.begin(), suites.end(), selection) != suites.end()) {
        std::vector<Claim> out;
        for (const Claim& c : pool)
            if (suite_contains(selection, c.id)) out.push_back(c);
        if (out.empty()) throw DomainError("suite '" + selection + "' selects no claims");
        return out;
    }
    std::vector<Claim> out;
    for (const Claim& c : pool)
        if (c.id == selection) out.push_back(c);
    if (out.empty()) throw DomainError("unknown suite or claim id: " + selection);
    return out;
}

int cmd_verify(const std::string& selection, index_t terms, const std::string& manifest_path,
               bool all_failures, const FormatOption& format, const std::string& out_path) {
    Format fmt = format.parse();
    if (terms < 1) throw DomainError("--terms must be >= 1");
    std::vector<Claim> claims = select_claims(selection, manifest_path);
    std::sort(claims.begin(), claims.end(),
              [](const Claim& a, const Claim& b) { return a.id < b.id; });

    VerifyOptions options;
    options.collect_all_failures = all_failures;

    std::vector<VerificationReport> reports;
    reports.reserve(claims.size());
    bool all_ok = true;
    for (const Claim& c : claims) {
        VerificationReport r = verify_claim(c, terms, options);
        std::fprintf(stderr, "# %-10s %8.3fs\n", r.claim_id.c_str(), r.elapsed_seconds);
        all_ok = all_ok && r.verified;
        reports.push_back(std::move(r));
    }

    std::ostringstream os;
    switch (fmt) {
        case Format::text: {
            for (std::size_t i = 0; i < claims.size(); ++i) {
                const auto& r = reports[i];
                os << r.claim_id << "\t" << (r.verified ? "verified" : "FAILED") << "\tn="
                   << render_range(r) << "\t" << claims[i].source << "\n";
                if (r.first_failure)
                    os << "\tfirst failure: " << render_failure(*r.first_failure) << "\n";
                if (all_failures)
                    for (const Failure& f : r.failures) os << "\t  " << render_failure(f) << "\n";
            }
            std::size_t ok = 0;
            for (const auto& r : reports) ok += r.verified ? 1 : 0;
            os << (all_ok ? "all claims verified" : "CLAIMS FAILED") << " (" << ok << "/"
               << reports.size() << ")\n";
            break;
        }
        case Format::csv: {
            os << "id,status,range,first_failure\n";
            for (const auto& r : reports) {
                os << r.claim_id << "," << (r.verified ? "verified" : "failed") << ","
                   << render_range(r) << ",";
                if (r.first_failure) os << render_failure(*r.first_failure);
                os << "\n";
            }
            break;
        }
        case Format::json_fmt: {
            json doc;
            doc["terms"] = terms;
            doc["all_verified"] = all_ok;
            json arr = json::array();
            for (std::size_t i = 0; i < claims.size(); ++i)
                arr.push_back(report_to_json(claims[i], reports[i]));
            doc["claims"] = arr;
            os << doc.dump(2) << "\n";
            break;
        }
    }
    emit(os.str(), out_path);
    return all_ok ? 0 : 1;
}

// ---- oddlist ------------------------------------------------------------

int cmd_oddlist(const std::string& series, index_t stride, index_t offset, index_t limit,
                index_t start, bool start_given, const FormatOption& format,
                const std::string& out_path) {
    Format fmt = format.parse();
    if (limit < 1) throw DomainError("--limit must be >= 1");
    if (!find_series(series)) throw DomainError("unknown series name: " + series);
    CoefficientStream stream{series, stride, offset, 0};
    stream.start = start_given ? start : default_stream_start(stream);

    std::vector<index_t> odd = odd_index_list(stream, limit);
    index_t window = limit - stream.start + 1;
    double density =
        window > 0 ? static_cast<double>(odd.size()) / static_cast<double>(window) : 0.0;
    char density_buf[32];
    std::snprintf(density_buf, sizeof density_buf, "%.6f", density);

    std::ostringstream os;
    switch (fmt) {
        case Format::text: {
            os << stream.describe() << " odd at n =";
            for (index_t n : odd) os << " " << n;
            os << "\n";
            os << "count " << odd.size() << " of " << window << " indices in [" << stream.start
               << ".." << limit << "], odd density " << density_buf << "\n";
            break;
        }
        case Format::csv: {
            os << "n\n";
            for (index_t n : odd) os << n << "\n";
            break;
        }
        case Format::json_fmt: {
            json doc;
            doc["series"] = series;
            doc["stride"] = stride;
            doc["offset"] = offset;
            doc["start"] = stream.start;
            doc["limit"] = limit;
            doc["odd_indices"] = odd;
            doc["count"] = odd.size();
            doc["density"] = density;
            os << doc.dump(2) << "\n";
            break;
        }
    }
    emit(os.str(), out_path);
    return 0;
}

// ---- export-claims ------------------------------------------------------

int cmd_export_claims(const FormatOption& format, const std::string& out_path) {
    Format fmt = format.parse();
    std::ostringstream os;
    switch (fmt) {
        case Format::text:
            for (const Claim& c : builtin_claims())
                os << c.id << "\t" << claim_kind_name(c.kind) << "\t" << c.source << "\n";
            break;
        case Format::csv:
            os << "id,kind,modulus,source\n";
            for (const Claim& c : builtin_claims()) {
                os << c.id << "," << claim_kind_name(c.kind) << ",";
                if (c.modulus.is_exact())
                    os << "exact";
                else
                    os << c.modulus.modulus();
                os << ",\"" << c.source << "\"\n";
            }
            break;
        case Format::json_fmt:
            os << claims_to_manifest(builtin_claims()).dump(2) << "\n";
            break;
    }
    emit(os.str(), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series expansion and congruence verification"};
    app.require_subcommand(1);

    FormatOption format;
    std::string out_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format.value, "output format: text|csv|json")
            ->default_str("text");
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    std::string expand_name;
    index_t expand_terms = 200;
    index_t expand_mod = 0;
    auto* expand = app.add_subcommand("expand", "expand a catalog series");
    expand->add_option("name", expand_name, "series name (e.g. j1, mu2, Delta)")->required();
    expand->add_option("--terms", expand_terms, "truncation exponent")->default_str("200");
    expand->add_option("--mod", expand_mod, "reduce coefficients modulo m >= 2");
    add_common(expand);

    std::string verify_selection = "all";
    index_t verify_terms = 200;
    std::string manifest_path;
    bool all_failures = false;
    auto* verify = app.add_subcommand("verify", "verify a claim suite or a single claim");
    verify->add_option("suite", verify_selection,
                       "suite (thm1|thm2|thm3|prop|identities|counts|all) or claim id");
    verify->add_option("--terms", verify_terms, "number of stream indices to check")
        ->default_str("200");
    verify->add_option("--manifest", manifest_path, "verify claims from a manifest file");
    verify->add_flag("--all-failures", all_failures,
                     "list every failing index, not just the first");
    add_common(verify);

    std::string odd_series;
    index_t odd_stride = 1, odd_offset = 0, odd_limit = 30, odd_start = 0;
    auto* oddlist = app.add_subcommand("oddlist", "indices with odd stream coefficients");
    oddlist->add_option("series", odd_series, "series name")->required();
    oddlist->add_option("stride", odd_stride, "stream stride A in c(A n + B)")->required();
    oddlist->add_option("offset", odd_offset, "stream offset B in c(A n + B)")->required();
    oddlist->add_option("--limit", odd_limit, "largest index n to report")->default_str("30");
    auto* start_opt =
        oddlist->add_option("--start", odd_start, "first index n (defaults per series)");
    add_common(oddlist);

    auto* export_claims = app.add_subcommand("export-claims", "write the built-in claim registry");
    add_common(export_claims);

    try {
        app.parse(argc, argv);
        if (expand->parsed())
            return cmd_expand(expand_name, expand_terms, expand_mod, format, out_path);
        if (verify->parsed())
            return cmd_verify(verify_selection, verify_terms, manifest_path, all_failures, format,
                              out_path);
        if (oddlist->parsed())
            return cmd_oddlist(odd_series, odd_stride, odd_offset, odd_limit, odd_start,
                               start_opt->count() > 0, format, out_path);
        if (export_claims->parsed()) return cmd_export_claims(format, out_path);
        return 2;
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    } catch (const qlab::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
}
