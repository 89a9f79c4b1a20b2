#include "qlab/manifest.hpp"

#include "qlab/products.hpp"

#include <fstream>

namespace qlab {

using nlohmann::json;

namespace {

json stream_to_json(const CoefficientStream& s) {
    return json{{"series", s.series}, {"stride", s.stride}, {"offset", s.offset},
                {"start", s.start}};
}

CoefficientStream stream_from_json(const json& doc) {
    CoefficientStream s;
    s.series = doc.at("series").get<std::string>();
    s.stride = doc.value("stride", index_t{1});
    s.offset = doc.value("offset", index_t{0});
    s.start = doc.value("start", index_t{0});
    if (s.stride < 1) throw DomainError("stream stride must be >= 1");
    if (!find_series(s.series)) throw DomainError("unknown series name: " + s.series);
    return s;
}

}  // namespace

json claim_to_json(const Claim& claim) {
    json doc;
    doc["id"] = claim.id;
    doc["kind"] = std::string(claim_kind_name(claim.kind));
    doc["modulus"] = claim.modulus.is_exact() ? json("exact") : json(claim.modulus.modulus());
    doc["source"] = claim.source;
    if (claim.kind == ClaimKind::ExactIdentity) {
        doc["lhs_expr"] = claim.lhs_expr ? claim.lhs_expr->text : "";
        doc["rhs_expr"] = claim.rhs_expr ? claim.rhs_expr->text : "";
    } else if (claim.streams.size() == 1) {
        doc["lhs"] = stream_to_json(claim.streams[0]);
    } else if (claim.streams.size() == 2) {
        doc["lhs"] = stream_to_json(claim.streams[0]);
        doc["rhs"] = stream_to_json(claim.streams[1]);
    } else {
        json arr = json::array();
        for (const auto& s : claim.streams) arr.push_back(stream_to_json(s));
        doc["streams"] = arr;
    }
    return doc;
}

Claim claim_from_json(const json& doc) {
    Claim claim;
    claim.id = doc.at("id").get<std::string>();
    auto kind = claim_kind_by_name(doc.at("kind").get<std::string>());
    if (!kind) throw DomainError("unknown claim kind: " + doc.at("kind").get<std::string>());
    claim.kind = *kind;
    if (doc.contains("modulus") && !doc["modulus"].is_null() && doc["modulus"] != "exact")
        claim.modulus = Modulus::mod(doc["modulus"].get<index_t>());
    claim.source = doc.value("source", std::string{});

    if (claim.kind == ClaimKind::ExactIdentity) {
        // identity expressions only exist as built-in builders
        const Claim* builtin = find_builtin_claim(claim.id);
        if (!builtin || builtin->kind != ClaimKind::ExactIdentity)
            throw DomainError("exact_identity claim '" + claim.id +
                              "' does not name a built-in identity");
        claim.lhs_expr = builtin->lhs_expr;
        claim.rhs_expr = builtin->rhs_expr;
        if (claim.source.empty()) claim.source = builtin->source;
        return claim;
    }

    if (doc.contains("streams")) {
        for (const auto& s : doc["streams"]) claim.streams.push_back(stream_from_json(s));
    } else {
        if (doc.contains("lhs")) claim.streams.push_back(stream_from_json(doc["lhs"]));
        if (doc.contains("rhs")) claim.streams.push_back(stream_from_json(doc["rhs"]));
    }
    if (claim.streams.empty()) throw DomainError("claim '" + claim.id + "' has no streams");
    return claim;
}

json claims_to_manifest(const std::vector<Claim>& claims) {
    json arr = json::array();
    for (const Claim& c : claims) arr.push_back(claim_to_json(c));
    return json{{"claims", arr}};
}

std::vector<Claim> claims_from_manifest(const json& manifest) {
    if (!manifest.contains("claims") || !manifest["claims"].is_array())
        throw DomainError("manifest must contain a \"claims\" array");
    std::vector<Claim> out;
    for (const auto& doc : manifest["claims"]) out.push_back(claim_from_json(doc));
    return out;
}

std::vector<Claim> load_manifest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open manifest file: " + path);
    json manifest;
    try {
        in >> manifest;
    } catch (const json::parse_error& err) {
        throw DomainError("manifest parse error in " + path + ": " + err.what());
    }
    return claims_from_manifest(manifest);
}

json report_to_json(const Claim& claim, const VerificationReport& report) {
    json doc = claim_to_json(claim);
    doc["status"] = report.verified ? "verified" : "failed";
    doc["range"] = json::array({report.range_lo, report.range_hi});
    if (report.first_failure) {
        const Failure& f = *report.first_failure;
        doc["first_failure"] =
            json{{"index", f.index}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"note", f.note}};
    } else {
        doc["first_failure"] = nullptr;
    }
    if (!report.failures.empty()) {
        json arr = json::array();
        for (const Failure& f : report.failures)
            arr.push_back(json{{"index", f.index}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"note", f.note}});
        doc["failures"] = arr;
    }
    return doc;
}

}  // namespace qlab
