/*
 *  Copyright 2026 the saaz authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "saaz/common.hpp"

namespace saaz::policy {

enum class Effect { Permit, Deny };

std::string to_string(Effect e);

/// The four policy types an authorisation infrastructure evaluates.
enum class PolicyKind {
    AccessControl,
    CredentialValidation,
    DelegationIssuing,
    AttributeRelease,
};

std::string to_string(PolicyKind k);
PolicyKind policy_kind_from_string(const std::string& s);

/// A signed-ish statement by an identity service about one subject
/// attribute. The `is_signed` flag is carried but never cryptographically
/// verified.
struct AttributeAssertion {
    std::string subject_id;
    std::string name;
    Value value;
    std::string issuer_id;
    SimTime valid_from = 0;
    SimTime valid_until = 0;
    bool is_signed = false;
    /// Issuer of the delegation chain's root, when this assertion was issued
    /// on behalf of another party (single-step delegation only).
    std::optional<std::string> delegated_by;

    bool operator==(const AttributeAssertion&) const = default;
};

enum class PredicateOp {
    Equals,     // one value
    In,         // any of the listed values
    Less,       // numeric
    LessEq,
    Greater,
    GreaterEq,
};

enum class Category { Subject, Resource, Action, Environment };

std::string to_string(Category c);

/// One conjunct of a rule target: constrains a single attribute of one
/// request category.
///
/// Well-known attribute names per category:
///   subject:     "id", "party", plus any asserted attribute name
///   resource:    "id"; for credential-validation targets also "issuer",
///                "name" (the assertion under validation); for
///                attribute-release targets "name" (the attribute released)
///   action:      "id"
///   environment: "zone", "geo", "requester"
struct Predicate {
    Category category = Category::Subject;
    std::string attribute;
    PredicateOp op = PredicateOp::Equals;
    std::vector<Value> values;

    bool operator==(const Predicate&) const = default;
};

/// Optional extra conditions on a rule. Quota references are resolved
/// through the PIP: the rule stays declarative, the counter lives with the
/// access log.
struct Condition {
    /// Seconds-of-day half-open interval [from, to).
    std::optional<std::pair<std::int64_t, std::int64_t>> time_window;
    std::optional<NetworkZone> origin_zone;
    std::optional<std::string> quota_ref;

    bool operator==(const Condition&) const = default;
    bool empty() const {
        return !time_window && !origin_zone && !quota_ref;
    }
};

struct Rule {
    std::string id;
    Effect effect = Effect::Deny;
    int priority = 0;  // lower value = earlier in the tie order
    std::vector<Predicate> target;  // conjunction; empty matches everything
    Condition condition;

    bool operator==(const Rule&) const = default;
};

struct Policy {
    std::string policy_id;
    PolicyKind kind = PolicyKind::AccessControl;
    std::uint64_t version = 1;
    std::string combining = "deny-overrides";  // fixed
    std::vector<Rule> rules;

    bool operator==(const Policy&) const = default;
};

/// A per-(party, resource, action) cap on permitted requests inside a
/// trailing window. max_count == 0 denies every matching request.
struct QuotaGrant {
    std::string id;
    std::string party_id;
    std::string resource_id;
    std::string action;
    std::uint64_t max_count = 0;
    Duration window = kSecondsPerDay;

    bool operator==(const QuotaGrant&) const = default;
};

struct Decision {
    Effect outcome = Effect::Deny;
    std::optional<std::string> matched_rule;  // absent = default deny
    std::uint64_t policy_version = 0;
    std::vector<std::string> obligations;
};

/// Marker obligation placed on a Deny that was caused purely by an exhausted
/// quota; the enforcement point uses it to drive the empty-readings
/// contingency.
inline constexpr const char* kObligationQuotaExhausted = "quota-exhausted";

struct AccessRequest {
    std::string request_id;
    std::string subject_id;
    std::string party_id;
    std::optional<std::string> session_id;
    std::vector<AttributeAssertion> attributes;  // validated + activated
    std::string resource_id;
    std::string action;
    Origin origin;
    SimTime clock = 0;
    /// Extra environment attributes beyond zone/geo ("requester", "issuer",
    /// "name" in credential-validation and release contexts).
    std::map<std::string, std::string> environment;
};

/// Declared attribute vocabulary; predicates over anything else are
/// authoring bugs, not denials.
struct AttributeVocabulary {
    std::map<Category, std::set<std::string>> names;

    bool declared(Category c, const std::string& attr) const;
    static AttributeVocabulary defaults();
};

/// The policy state one decision point evaluates against.
struct PolicySet {
    Policy access;
    AttributeVocabulary vocabulary = AttributeVocabulary::defaults();
    std::set<std::string> resources;  // known resource ids
};

/// Read-only view the PDP uses to resolve environment state: the quota
/// grants in force and the permitted-request counters derived from the
/// access log.
class AttributeView {
public:
    virtual ~AttributeView() = default;
    virtual std::optional<QuotaGrant> quota(const std::string& ref) const = 0;
    /// Permits for (party, resource, action) in the trailing window ending
    /// at `now` (exclusive of the request being decided).
    virtual std::uint64_t permitted_count(const std::string& party_id,
                                          const std::string& resource_id,
                                          const std::string& action,
                                          Duration window,
                                          SimTime now) const = 0;
};

/// A PIP with no quota grants; evaluation under it never consults counters.
class NullAttributeView final : public AttributeView {
public:
    std::optional<QuotaGrant> quota(const std::string&) const override { return std::nullopt; }
    std::uint64_t permitted_count(const std::string&, const std::string&,
                                  const std::string&, Duration, SimTime) const override {
        return 0;
    }
};

/// Deny-overrides evaluation with priority as the tie order. Deterministic;
/// no matching rule means Deny with no matched-rule.
Decision evaluate(const AccessRequest& request, const PolicySet& policies,
                  const AttributeView& pip);

/// True when the rule's target and condition hold for the request. Exposed
/// for the brute-force oracle used in tests.
bool rule_matches(const Rule& rule, const AccessRequest& request,
                  const AttributeVocabulary& vocabulary, const AttributeView& pip,
                  bool* quota_exhausted = nullptr);

/// Keeps only assertions whose issuer the credential-validation policy
/// trusts and whose validity interval contains `clock`. Untrusted or expired
/// assertions are silently dropped; the caller logs the filtering.
std::vector<AttributeAssertion> validate_credentials(
    const std::vector<AttributeAssertion>& assertions, const Policy& cvp,
    SimTime clock);

/// Applies an attribute-release policy: which of `attributes` the identity
/// service will hand to `requester`. Result is always a subset of the input.
std::vector<AttributeAssertion> filter_release(
    const std::vector<AttributeAssertion>& attributes, const Policy& arp,
    const std::string& requester);

/// Checks a delegated assertion chain (depth one) against a
/// delegation-issuing policy: the delegating issuer must be permitted to
/// delegate the asserted attribute.
bool delegation_permitted(const AttributeAssertion& assertion, const Policy& dip);

struct PolicyDelta {
    std::uint64_t base_version = 0;
    std::vector<std::string> removes;   // rule ids
    std::vector<Rule> replaces;         // matched by rule id
    std::vector<Rule> adds;
};

/// Pure: returns a new policy with the delta applied, version + 1. Throws
/// StaleDelta when the delta was built against another version and
/// ConflictingDelta on duplicate or unknown rule ids.
Policy apply_delta(const Policy& policy, const PolicyDelta& delta);

/// Inverse of `delta` against `base` (the policy the delta applies to), for
/// compensation during rollback.
PolicyDelta invert_delta(const Policy& base, const PolicyDelta& delta);

enum class DiagnosticSeverity { Warning, Error };

struct Diagnostic {
    DiagnosticSeverity severity = DiagnosticSeverity::Warning;
    std::string rule_id;
    std::string message;
};

/// Static checks: shadowed rules (unreachable under deny-overrides plus
/// priority), duplicate targets, predicates over undeclared attributes
/// (errors), duplicate priorities (errors).
std::vector<Diagnostic> lint(const Policy& policy,
                             const AttributeVocabulary& vocabulary);

/// True when `policy` has no lint errors (warnings are allowed).
bool lint_clean(const Policy& policy, const AttributeVocabulary& vocabulary);

/// SHA-256 over the canonical serialization of (kind, version, combining,
/// rules); stable across processes and hosts.
std::string digest(const Policy& policy);

// JSON (de)serialization for the on-disk policy format.
nlohmann::json to_json(const Policy& policy);
nlohmann::json to_json(const Rule& rule);
nlohmann::json to_json(const QuotaGrant& quota);
nlohmann::json to_json(const PolicyDelta& delta);
nlohmann::json to_json(const AttributeAssertion& assertion);
Policy policy_from_json(const nlohmann::json& j);
Rule rule_from_json(const nlohmann::json& j);
QuotaGrant quota_from_json(const nlohmann::json& j);
PolicyDelta delta_from_json(const nlohmann::json& j);
AttributeAssertion assertion_from_json(const nlohmann::json& j);

}  // namespace saaz::policy
