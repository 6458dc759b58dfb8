#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lpolya {

// DISCREPANCY is reserved for mismatches between a published/printed value
// and the computed one; it never fails a run, but stays visible in every
// serialized report.
enum class Status { pass, fail, skip, discrepancy };

enum class ClaimKind { theorem, identity, conjecture, cited, reference };

const char* to_string(Status s);
const char* to_string(ClaimKind k);

// Ordered key/value list; the ordering is part of the serialized form.
using KV = std::vector<std::pair<std::string, std::string>>;

struct Record {
    KV params;
    Status status = Status::pass;
    KV witness;  // mandatory for FAIL and DISCREPANCY, optional otherwise
};

struct Claim {
    std::string id;  // stable identifier, e.g. "thm-lower"
    ClaimKind kind = ClaimKind::theorem;
    std::vector<Record> records;

    long count(Status s) const;
};

struct VerificationReport {
    std::vector<Claim> claims;

    Claim& add(std::string id, ClaimKind kind);
    void merge(VerificationReport other);
    bool any_fail() const;
    long count(Status s) const;
};

// Machine formats are deterministic: stable key order, LF line endings, '.'
// decimal point, exact values serialized as "num/den" strings (never floats).
std::string to_json(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace lpolya
