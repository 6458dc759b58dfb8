#include "lpolya/report.hpp"

#include <sstream>

#include <json.hpp>

namespace lpolya {

const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::skip: return "SKIP";
        case Status::discrepancy: return "DISCREPANCY";
    }
    return "?";
}

const char* to_string(ClaimKind k) {
    switch (k) {
        case ClaimKind::theorem: return "theorem";
        case ClaimKind::identity: return "identity";
        case ClaimKind::conjecture: return "conjecture";
        case ClaimKind::cited: return "cited";
        case ClaimKind::reference: return "reference";
    }
    return "?";
}

long Claim::count(Status s) const {
    long c = 0;
    for (const Record& r : records)
        if (r.status == s) ++c;
    return c;
}

Claim& VerificationReport::add(std::string id, ClaimKind kind) {
    claims.push_back(Claim{std::move(id), kind, {}});
    return claims.back();
}

void VerificationReport::merge(VerificationReport other) {
    for (Claim& c : other.claims) claims.push_back(std::move(c));
}

bool VerificationReport::any_fail() const {
    for (const Claim& c : claims)
        for (const Record& r : c.records)
            if (r.status == Status::fail) return true;
    return false;
}

long VerificationReport::count(Status s) const {
    long total = 0;
    for (const Claim& c : claims) total += c.count(s);
    return total;
}

namespace {

nlohmann::ordered_json kv_json(const KV& kv) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [key, value] : kv) j[key] = value;
    return j;
}

std::string kv_flat(const KV& kv) {
    std::string out;
    for (const auto& [key, value] : kv) {
        if (!out.empty()) out += ';';
        out += key;
        out += '=';
        out += value;
    }
    return out;
}

}  // namespace

std::string to_json(const VerificationReport& report) {
    nlohmann::ordered_json root;
    root["claims"] = nlohmann::ordered_json::array();
    for (const Claim& c : report.claims) {
        nlohmann::ordered_json jc;
        jc["claim_id"] = c.id;
        jc["kind"] = to_string(c.kind);
        nlohmann::ordered_json counts;
        counts["pass"] = c.count(Status::pass);
        counts["fail"] = c.count(Status::fail);
        counts["skip"] = c.count(Status::skip);
        counts["discrepancy"] = c.count(Status::discrepancy);
        jc["counts"] = counts;
        nlohmann::ordered_json recs = nlohmann::ordered_json::array();
        for (const Record& r : c.records) {
            nlohmann::ordered_json jr;
            jr["params"] = kv_json(r.params);
            jr["status"] = to_string(r.status);
            if (!r.witness.empty()) jr["witness"] = kv_json(r.witness);
            recs.push_back(std::move(jr));
        }
        jc["records"] = std::move(recs);
        root["claims"].push_back(std::move(jc));
    }
    return root.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report) {
    std::string out = "claim_id,kind,params,status,witness\n";
    for (const Claim& c : report.claims)
        for (const Record& r : c.records) {
            out += c.id;
            out += ',';
            out += to_string(c.kind);
            out += ',';
            out += kv_flat(r.params);
            out += ',';
            out += to_string(r.status);
            out += ',';
            out += kv_flat(r.witness);
            out += '\n';
        }
    return out;
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream os;
    for (const Claim& c : report.claims) {
        os << "claim " << c.id << " [" << to_string(c.kind) << "]: "
           << c.records.size() << " records, " << c.count(Status::pass) << " pass, "
           << c.count(Status::fail) << " fail, " << c.count(Status::skip) << " skip, "
           << c.count(Status::discrepancy) << " discrepancy\n";
        for (const Record& r : c.records) {
            if (r.status == Status::pass) continue;
            os << "  " << to_string(r.status) << " " << kv_flat(r.params);
            if (!r.witness.empty()) os << "  " << kv_flat(r.witness);
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace lpolya
