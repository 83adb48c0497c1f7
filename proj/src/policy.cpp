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

#include "saaz/policy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "saaz/util.hpp"

namespace saaz::policy {

namespace {

using nlohmann::json;

bool values_equal(const Value& a, const Value& b) {
    if (a.index() == b.index()) return a == b;
    // int64 and double compare numerically; strings never equal numbers
    const auto* as = std::get_if<std::string>(&a);
    const auto* bs = std::get_if<std::string>(&b);
    if (as || bs) return false;
    auto num = [](const Value& v) {
        if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
        return std::get<double>(v);
    };
    return num(a) == num(b);
}

std::optional<double> numeric(const Value& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    if (const auto* d = std::get_if<double>(&v)) return *d;
    return std::nullopt;
}

/// Looks up the value(s) of one request attribute. Multi-valued because a
/// subject can hold several assertions of the same name.
std::vector<Value> attribute_values(const Predicate& p, const AccessRequest& r) {
    std::vector<Value> out;
    switch (p.category) {
        case Category::Subject:
            if (p.attribute == "id") {
                out.emplace_back(r.subject_id);
            } else if (p.attribute == "party") {
                out.emplace_back(r.party_id);
            } else {
                for (const auto& a : r.attributes)
                    if (a.name == p.attribute) out.push_back(a.value);
            }
            break;
        case Category::Resource:
            if (p.attribute == "id") {
                out.emplace_back(r.resource_id);
            } else if (auto it = r.environment.find(p.attribute); it != r.environment.end()) {
                out.emplace_back(it->second);
            }
            break;
        case Category::Action:
            if (p.attribute == "id") out.emplace_back(r.action);
            break;
        case Category::Environment:
            if (p.attribute == "zone") {
                out.emplace_back(to_string(r.origin.zone));
            } else if (p.attribute == "geo") {
                if (!r.origin.geo.empty()) out.emplace_back(r.origin.geo);
            } else if (auto it = r.environment.find(p.attribute); it != r.environment.end()) {
                out.emplace_back(it->second);
            }
            break;
    }
    return out;
}

bool predicate_holds(const Predicate& p, const AccessRequest& r) {
    if (p.values.empty())
        throw Error(Errc::MalformedPredicate,
                    "predicate on '" + p.attribute + "' has no comparison values");
    const std::vector<Value> actual = attribute_values(p, r);
    if (actual.empty()) return false;

    switch (p.op) {
        case PredicateOp::Equals:
            return std::any_of(actual.begin(), actual.end(), [&](const Value& v) {
                return values_equal(v, p.values.front());
            });
        case PredicateOp::In:
            return std::any_of(actual.begin(), actual.end(), [&](const Value& v) {
                return std::any_of(p.values.begin(), p.values.end(),
                                   [&](const Value& w) { return values_equal(v, w); });
            });
        case PredicateOp::Less:
        case PredicateOp::LessEq:
        case PredicateOp::Greater:
        case PredicateOp::GreaterEq: {
            const auto bound = numeric(p.values.front());
            if (!bound)
                throw Error(Errc::MalformedPredicate,
                            "numeric comparison on '" + p.attribute + "' with non-numeric bound");
            return std::any_of(actual.begin(), actual.end(), [&](const Value& v) {
                const auto x = numeric(v);
                if (!x) return false;
                switch (p.op) {
                    case PredicateOp::Less: return *x < *bound;
                    case PredicateOp::LessEq: return *x <= *bound;
                    case PredicateOp::Greater: return *x > *bound;
                    default: return *x >= *bound;
                }
            });
        }
    }
    return false;
}

void check_declared(const Rule& rule, const AttributeVocabulary& vocabulary) {
    for (const auto& p : rule.target) {
        if (!vocabulary.declared(p.category, p.attribute))
            throw Error(Errc::MalformedPredicate,
                        "rule '" + rule.id + "' references undeclared " +
                            to_string(p.category) + " attribute '" + p.attribute + "'");
    }
}

/// Deny-overrides over an arbitrary rule list with an already-built request;
/// shared by evaluate / validate_credentials / filter_release.
struct MatchOutcome {
    const Rule* deny = nullptr;
    const Rule* permit = nullptr;
    std::optional<std::string> exhausted_quota;  // a Permit was suppressed by quota
};

MatchOutcome match_rules(const std::vector<Rule>& rules, const AccessRequest& request,
                         const AttributeVocabulary& vocabulary, const AttributeView& pip) {
    MatchOutcome out;
    for (const auto& rule : rules) {
        bool quota_exhausted = false;
        check_declared(rule, vocabulary);
        if (!rule_matches(rule, request, vocabulary, pip, &quota_exhausted)) {
            if (quota_exhausted && rule.effect == Effect::Permit && rule.condition.quota_ref)
                out.exhausted_quota = *rule.condition.quota_ref;
            continue;
        }
        if (rule.effect == Effect::Deny) {
            if (out.deny == nullptr || rule.priority < out.deny->priority) out.deny = &rule;
        } else {
            if (out.permit == nullptr || rule.priority < out.permit->priority) out.permit = &rule;
        }
    }
    return out;
}

}  // namespace

std::string to_string(Effect e) { return e == Effect::Permit ? "permit" : "deny"; }

std::string to_string(PolicyKind k) {
    switch (k) {
        case PolicyKind::AccessControl: return "access-control";
        case PolicyKind::CredentialValidation: return "credential-validation";
        case PolicyKind::DelegationIssuing: return "delegation-issuing";
        case PolicyKind::AttributeRelease: return "attribute-release";
    }
    return "?";
}

PolicyKind policy_kind_from_string(const std::string& s) {
    if (s == "access-control") return PolicyKind::AccessControl;
    if (s == "credential-validation") return PolicyKind::CredentialValidation;
    if (s == "delegation-issuing") return PolicyKind::DelegationIssuing;
    if (s == "attribute-release") return PolicyKind::AttributeRelease;
    throw Error(Errc::ParseError, "unknown policy kind '" + s + "'");
}

std::string to_string(Category c) {
    switch (c) {
        case Category::Subject: return "subject";
        case Category::Resource: return "resource";
        case Category::Action: return "action";
        case Category::Environment: return "environment";
    }
    return "?";
}

bool AttributeVocabulary::declared(Category c, const std::string& attr) const {
    auto it = names.find(c);
    return it != names.end() && it->second.count(attr) > 0;
}

AttributeVocabulary AttributeVocabulary::defaults() {
    AttributeVocabulary v;
    v.names[Category::Subject] = {"id", "party", "role", "service", "location"};
    v.names[Category::Resource] = {"id", "issuer", "name"};
    v.names[Category::Action] = {"id"};
    v.names[Category::Environment] = {"zone", "geo", "requester"};
    return v;
}

bool rule_matches(const Rule& rule, const AccessRequest& request,
                  const AttributeVocabulary& vocabulary, const AttributeView& pip,
                  bool* quota_exhausted) {
    (void)vocabulary;
    if (quota_exhausted) *quota_exhausted = false;
    for (const auto& p : rule.target)
        if (!predicate_holds(p, request)) return false;

    const Condition& c = rule.condition;
    if (c.time_window) {
        const std::int64_t tod = time_of_day(request.clock);
        if (tod < c.time_window->first || tod >= c.time_window->second) return false;
    }
    if (c.origin_zone && request.origin.zone != *c.origin_zone) return false;
    if (c.quota_ref) {
        const auto grant = pip.quota(*c.quota_ref);
        if (grant) {
            const std::uint64_t used = pip.permitted_count(
                request.party_id, request.resource_id, request.action, grant->window,
                request.clock);
            if (used >= grant->max_count) {
                if (quota_exhausted) *quota_exhausted = true;
                return false;
            }
        }
        // No grant registered under the ref: the condition does not constrain.
    }
    return true;
}

Decision evaluate(const AccessRequest& request, const PolicySet& policies,
                  const AttributeView& pip) {
    if (!policies.resources.empty() && policies.resources.count(request.resource_id) == 0)
        throw Error(Errc::UnknownResource, "resource '" + request.resource_id + "'");

    const MatchOutcome m =
        match_rules(policies.access.rules, request, policies.vocabulary, pip);

    Decision d;
    d.policy_version = policies.access.version;
    if (m.deny != nullptr) {
        d.outcome = Effect::Deny;
        d.matched_rule = m.deny->id;
    } else if (m.permit != nullptr) {
        d.outcome = Effect::Permit;
        d.matched_rule = m.permit->id;
    } else {
        d.outcome = Effect::Deny;  // default deny
        if (m.exhausted_quota)
            d.obligations.push_back(std::string(kObligationQuotaExhausted) + ":" +
                                    *m.exhausted_quota);
    }
    return d;
}

std::vector<AttributeAssertion> validate_credentials(
    const std::vector<AttributeAssertion>& assertions, const Policy& cvp,
    SimTime clock) {
    if (cvp.kind != PolicyKind::CredentialValidation)
        throw Error(Errc::PreconditionViolated,
                    "validate_credentials needs a credential-validation policy");
    AttributeVocabulary vocab = AttributeVocabulary::defaults();
    NullAttributeView pip;

    std::vector<AttributeAssertion> kept;
    for (const auto& a : assertions) {
        if (clock < a.valid_from || clock > a.valid_until) continue;
        AccessRequest synthetic;
        synthetic.subject_id = a.subject_id;
        synthetic.action = "validate";
        synthetic.clock = clock;
        synthetic.environment["issuer"] = a.issuer_id;
        synthetic.environment["name"] = a.name;
        const MatchOutcome m = match_rules(cvp.rules, synthetic, vocab, pip);
        if (m.deny == nullptr && m.permit != nullptr) kept.push_back(a);
    }
    return kept;
}

std::vector<AttributeAssertion> filter_release(
    const std::vector<AttributeAssertion>& attributes, const Policy& arp,
    const std::string& requester) {
    if (arp.kind != PolicyKind::AttributeRelease)
        throw Error(Errc::PreconditionViolated,
                    "filter_release needs an attribute-release policy");
    AttributeVocabulary vocab = AttributeVocabulary::defaults();
    NullAttributeView pip;

    std::vector<AttributeAssertion> kept;
    for (const auto& a : attributes) {
        AccessRequest synthetic;
        synthetic.subject_id = a.subject_id;
        synthetic.action = "release";
        synthetic.environment["requester"] = requester;
        synthetic.environment["name"] = a.name;
        synthetic.environment["issuer"] = a.issuer_id;
        const MatchOutcome m = match_rules(arp.rules, synthetic, vocab, pip);
        if (m.deny == nullptr && m.permit != nullptr) kept.push_back(a);
    }
    return kept;
}

bool delegation_permitted(const AttributeAssertion& assertion, const Policy& dip) {
    if (dip.kind != PolicyKind::DelegationIssuing)
        throw Error(Errc::PreconditionViolated,
                    "delegation_permitted needs a delegation-issuing policy");
    if (!assertion.delegated_by) return true;  // not a delegated assertion
    AttributeVocabulary vocab = AttributeVocabulary::defaults();
    NullAttributeView pip;
    AccessRequest synthetic;
    synthetic.subject_id = assertion.subject_id;
    synthetic.action = "delegate";
    synthetic.environment["issuer"] = *assertion.delegated_by;
    synthetic.environment["name"] = assertion.name;
    const MatchOutcome m = match_rules(dip.rules, synthetic, vocab, pip);
    return m.deny == nullptr && m.permit != nullptr;
}

Policy apply_delta(const Policy& policy, const PolicyDelta& delta) {
    if (delta.base_version != policy.version)
        throw Error(Errc::StaleDelta,
                    "delta base v" + std::to_string(delta.base_version) +
                        " against policy v" + std::to_string(policy.version));

    std::set<std::string> existing;
    for (const auto& r : policy.rules) existing.insert(r.id);
    std::set<std::string> touched;
    auto touch = [&](const std::string& id) {
        if (!touched.insert(id).second)
            throw Error(Errc::ConflictingDelta, "rule '" + id + "' touched twice");
    };

    Policy next = policy;
    for (const auto& id : delta.removes) {
        touch(id);
        if (existing.count(id) == 0)
            throw Error(Errc::ConflictingDelta, "remove of unknown rule '" + id + "'");
        std::erase_if(next.rules, [&](const Rule& r) { return r.id == id; });
    }
    for (const auto& r : delta.replaces) {
        touch(r.id);
        auto it = std::find_if(next.rules.begin(), next.rules.end(),
                               [&](const Rule& x) { return x.id == r.id; });
        if (it == next.rules.end())
            throw Error(Errc::ConflictingDelta, "replace of unknown rule '" + r.id + "'");
        *it = r;
    }
    for (const auto& r : delta.adds) {
        touch(r.id);
        if (existing.count(r.id) > 0)
            throw Error(Errc::ConflictingDelta, "add of existing rule '" + r.id + "'");
        next.rules.push_back(r);
    }
    next.version = policy.version + 1;
    return next;
}

PolicyDelta invert_delta(const Policy& base, const PolicyDelta& delta) {
    PolicyDelta inv;
    inv.base_version = base.version + 1;
    for (const auto& r : delta.adds) inv.removes.push_back(r.id);
    auto original = [&](const std::string& id) -> const Rule& {
        auto it = std::find_if(base.rules.begin(), base.rules.end(),
                               [&](const Rule& x) { return x.id == id; });
        if (it == base.rules.end())
            throw Error(Errc::ConflictingDelta, "invert: rule '" + id + "' not in base");
        return *it;
    };
    for (const auto& r : delta.replaces) inv.replaces.push_back(original(r.id));
    for (const auto& id : delta.removes) inv.adds.push_back(original(id));
    return inv;
}

namespace {

struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_open = false;
    bool hi_open = false;
};

std::optional<Interval> as_interval(const Predicate& p) {
    const auto b = numeric(p.values.empty() ? Value(std::string()) : p.values.front());
    Interval iv;
    switch (p.op) {
        case PredicateOp::Equals:
            if (!b) return std::nullopt;
            iv.lo = iv.hi = *b;
            return iv;
        case PredicateOp::Less:
            if (!b) return std::nullopt;
            iv.hi = *b;
            iv.hi_open = true;
            return iv;
        case PredicateOp::LessEq:
            if (!b) return std::nullopt;
            iv.hi = *b;
            return iv;
        case PredicateOp::Greater:
            if (!b) return std::nullopt;
            iv.lo = *b;
            iv.lo_open = true;
            return iv;
        case PredicateOp::GreaterEq:
            if (!b) return std::nullopt;
            iv.lo = *b;
            return iv;
        default:
            return std::nullopt;
    }
}

bool interval_contains(const Interval& outer, const Interval& inner) {
    const bool lo_ok = outer.lo < inner.lo ||
                       (outer.lo == inner.lo && (!outer.lo_open || inner.lo_open));
    const bool hi_ok = outer.hi > inner.hi ||
                       (outer.hi == inner.hi && (!outer.hi_open || inner.hi_open));
    return lo_ok && hi_ok;
}

/// True when `tight` matching implies `loose` matching (conservative: false
/// when unsure).
bool predicate_implies(const Predicate& tight, const Predicate& loose) {
    if (tight.category != loose.category || tight.attribute != loose.attribute)
        return false;
    auto value_set = [](const Predicate& p) -> std::optional<std::vector<Value>> {
        if (p.op == PredicateOp::Equals || p.op == PredicateOp::In) return p.values;
        return std::nullopt;
    };
    const auto tight_set = value_set(tight);
    const auto loose_set = value_set(loose);
    if (loose_set) {
        if (tight_set) {
            return std::all_of(tight_set->begin(), tight_set->end(), [&](const Value& v) {
                return std::any_of(loose_set->begin(), loose_set->end(),
                                   [&](const Value& w) { return values_equal(v, w); });
            });
        }
        return false;
    }
    const auto loose_iv = as_interval(loose);
    if (!loose_iv) return false;
    if (tight_set) {
        return std::all_of(tight_set->begin(), tight_set->end(), [&](const Value& v) {
            const auto x = numeric(v);
            if (!x) return false;
            Interval point;
            point.lo = point.hi = *x;
            return interval_contains(*loose_iv, point);
        });
    }
    const auto tight_iv = as_interval(tight);
    return tight_iv && interval_contains(*loose_iv, *tight_iv);
}

/// A's target matches a superset of B's target.
bool target_subsumes(const Rule& a, const Rule& b) {
    for (const auto& pa : a.target) {
        const bool implied = std::any_of(b.target.begin(), b.target.end(),
                                         [&](const Predicate& pb) {
                                             return predicate_implies(pb, pa);
                                         });
        if (!implied) return false;
    }
    return true;
}

bool condition_subsumes(const Condition& a, const Condition& b) {
    if (a.time_window) {
        if (!b.time_window) return false;
        if (b.time_window->first < a.time_window->first ||
            b.time_window->second > a.time_window->second)
            return false;
    }
    if (a.origin_zone && (!b.origin_zone || *b.origin_zone != *a.origin_zone))
        return false;
    if (a.quota_ref && (!b.quota_ref || *b.quota_ref != *a.quota_ref)) return false;
    return true;
}

}  // namespace

std::vector<Diagnostic> lint(const Policy& policy,
                             const AttributeVocabulary& vocabulary) {
    std::vector<Diagnostic> out;

    std::map<int, std::string> priorities;
    for (const auto& r : policy.rules) {
        for (const auto& p : r.target) {
            if (!vocabulary.declared(p.category, p.attribute))
                out.push_back({DiagnosticSeverity::Error, r.id,
                               "predicate over undeclared " + to_string(p.category) +
                                   " attribute '" + p.attribute + "'"});
            if (p.values.empty())
                out.push_back({DiagnosticSeverity::Error, r.id,
                               "predicate on '" + p.attribute + "' has no values"});
        }
        auto [it, fresh] = priorities.emplace(r.priority, r.id);
        if (!fresh)
            out.push_back({DiagnosticSeverity::Error, r.id,
                           "duplicate priority " + std::to_string(r.priority) +
                               " (also rule '" + it->second + "')"});
    }

    for (size_t i = 0; i < policy.rules.size(); ++i) {
        for (size_t j = 0; j < policy.rules.size(); ++j) {
            if (i == j) continue;
            const Rule& a = policy.rules[i];
            const Rule& b = policy.rules[j];
            if (i < j && a.target == b.target && a.condition == b.condition)
                out.push_back({DiagnosticSeverity::Warning, b.id,
                               "duplicate target of rule '" + a.id + "'"});
            const bool covers = target_subsumes(a, b) && condition_subsumes(a.condition, b.condition);
            if (!covers) continue;
            const bool deny_over_permit =
                a.effect == Effect::Deny && b.effect == Effect::Permit;
            const bool same_effect_earlier =
                a.effect == b.effect && a.priority < b.priority;
            if (deny_over_permit || same_effect_earlier)
                out.push_back({DiagnosticSeverity::Warning, b.id,
                               "shadowed rule: never decides under deny-overrides; covered by '" +
                                   a.id + "'"});
        }
    }
    return out;
}

bool lint_clean(const Policy& policy, const AttributeVocabulary& vocabulary) {
    const auto diags = lint(policy, vocabulary);
    return std::none_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
        return d.severity == DiagnosticSeverity::Error;
    });
}

namespace {

json value_to_json(const Value& v) {
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
    if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
    return std::get<double>(v);
}

Value value_from_json(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_number_float()) return j.get<double>();
    throw Error(Errc::ParseError, "attribute value must be scalar or string");
}

const char* op_name(PredicateOp op) {
    switch (op) {
        case PredicateOp::Equals: return "==";
        case PredicateOp::In: return "in";
        case PredicateOp::Less: return "<";
        case PredicateOp::LessEq: return "<=";
        case PredicateOp::Greater: return ">";
        case PredicateOp::GreaterEq: return ">=";
    }
    return "==";
}

PredicateOp op_from_name(const std::string& s) {
    if (s == "==") return PredicateOp::Equals;
    if (s == "in") return PredicateOp::In;
    if (s == "<") return PredicateOp::Less;
    if (s == "<=") return PredicateOp::LessEq;
    if (s == ">") return PredicateOp::Greater;
    if (s == ">=") return PredicateOp::GreaterEq;
    throw Error(Errc::ParseError, "unknown predicate op '" + s + "'");
}

json matcher_to_json(const Predicate& p) {
    if (p.op == PredicateOp::Equals) return value_to_json(p.values.front());
    if (p.op == PredicateOp::In) {
        json arr = json::array();
        for (const auto& v : p.values) arr.push_back(value_to_json(v));
        return arr;
    }
    return json{{"op", op_name(p.op)}, {"value", value_to_json(p.values.front())}};
}

Predicate matcher_from_json(Category cat, const std::string& attr, const json& j) {
    Predicate p;
    p.category = cat;
    p.attribute = attr;
    if (j.is_array()) {
        p.op = PredicateOp::In;
        for (const auto& v : j) p.values.push_back(value_from_json(v));
    } else if (j.is_object()) {
        p.op = op_from_name(j.at("op").get<std::string>());
        p.values.push_back(value_from_json(j.at("value")));
    } else {
        p.op = PredicateOp::Equals;
        p.values.push_back(value_from_json(j));
    }
    return p;
}

Category category_from_string(const std::string& s) {
    if (s == "subject") return Category::Subject;
    if (s == "resource") return Category::Resource;
    if (s == "action") return Category::Action;
    if (s == "environment") return Category::Environment;
    throw Error(Errc::ParseError, "unknown target category '" + s + "'");
}

}  // namespace

json to_json(const Rule& rule) {
    json target = {{"subject", json::object()},
                   {"resource", json::object()},
                   {"action", json::object()},
                   {"environment", json::object()}};
    for (const auto& p : rule.target)
        target[to_string(p.category)][p.attribute] = matcher_to_json(p);

    json condition = json::object();
    if (rule.condition.time_window)
        condition["time_window"] = {rule.condition.time_window->first,
                                    rule.condition.time_window->second};
    if (rule.condition.origin_zone)
        condition["origin"] = to_string(*rule.condition.origin_zone);
    if (rule.condition.quota_ref) condition["quota_ref"] = *rule.condition.quota_ref;

    return json{{"id", rule.id},
                {"effect", to_string(rule.effect)},
                {"priority", rule.priority},
                {"target", target},
                {"condition", condition}};
}

Rule rule_from_json(const json& j) {
    Rule r;
    r.id = j.at("id").get<std::string>();
    const std::string eff = j.at("effect").get<std::string>();
    if (eff == "permit") {
        r.effect = Effect::Permit;
    } else if (eff == "deny") {
        r.effect = Effect::Deny;
    } else {
        throw Error(Errc::ParseError, "unknown effect '" + eff + "'");
    }
    r.priority = j.at("priority").get<int>();
    if (j.contains("target")) {
        for (const auto& [cat_name, attrs] : j.at("target").items()) {
            const Category cat = category_from_string(cat_name);
            for (const auto& [attr, matcher] : attrs.items())
                r.target.push_back(matcher_from_json(cat, attr, matcher));
        }
    }
    if (j.contains("condition")) {
        const json& c = j.at("condition");
        if (c.contains("time_window"))
            r.condition.time_window = {c.at("time_window").at(0).get<std::int64_t>(),
                                       c.at("time_window").at(1).get<std::int64_t>()};
        if (c.contains("origin"))
            r.condition.origin_zone = zone_from_string(c.at("origin").get<std::string>());
        if (c.contains("quota_ref"))
            r.condition.quota_ref = c.at("quota_ref").get<std::string>();
    }
    // JSON objects come back key-sorted; restore a deterministic in-policy
    // order by (category, attribute), which to_json round-trips.
    std::sort(r.target.begin(), r.target.end(), [](const Predicate& a, const Predicate& b) {
        if (a.category != b.category) return a.category < b.category;
        return a.attribute < b.attribute;
    });
    return r;
}

json to_json(const Policy& policy) {
    json rules = json::array();
    for (const auto& r : policy.rules) rules.push_back(to_json(r));
    return json{{"policy_id", policy.policy_id},
                {"kind", to_string(policy.kind)},
                {"version", policy.version},
                {"combining", policy.combining},
                {"rules", rules}};
}

Policy policy_from_json(const json& j) {
    Policy p;
    p.policy_id = j.at("policy_id").get<std::string>();
    p.kind = policy_kind_from_string(j.at("kind").get<std::string>());
    p.version = j.at("version").get<std::uint64_t>();
    p.combining = j.value("combining", std::string("deny-overrides"));
    if (p.combining != "deny-overrides")
        throw Error(Errc::ParseError, "unsupported combining algorithm '" + p.combining + "'");
    for (const auto& rj : j.at("rules")) p.rules.push_back(rule_from_json(rj));
    return p;
}

json to_json(const QuotaGrant& q) {
    return json{{"id", q.id},         {"party", q.party_id}, {"resource", q.resource_id},
                {"action", q.action}, {"max", q.max_count},  {"window", q.window}};
}

QuotaGrant quota_from_json(const json& j) {
    QuotaGrant q;
    q.id = j.at("id").get<std::string>();
    q.party_id = j.at("party").get<std::string>();
    q.resource_id = j.at("resource").get<std::string>();
    q.action = j.at("action").get<std::string>();
    q.max_count = j.at("max").get<std::uint64_t>();
    q.window = j.at("window").get<Duration>();
    return q;
}

json to_json(const PolicyDelta& d) {
    json replaces = json::array();
    for (const auto& r : d.replaces) replaces.push_back(to_json(r));
    json adds = json::array();
    for (const auto& r : d.adds) adds.push_back(to_json(r));
    return json{{"base_version", d.base_version},
                {"removes", d.removes},
                {"replaces", replaces},
                {"adds", adds}};
}

PolicyDelta delta_from_json(const json& j) {
    PolicyDelta d;
    d.base_version = j.at("base_version").get<std::uint64_t>();
    if (j.contains("removes"))
        d.removes = j.at("removes").get<std::vector<std::string>>();
    if (j.contains("replaces"))
        for (const auto& rj : j.at("replaces")) d.replaces.push_back(rule_from_json(rj));
    if (j.contains("adds"))
        for (const auto& rj : j.at("adds")) d.adds.push_back(rule_from_json(rj));
    return d;
}

json to_json(const AttributeAssertion& a) {
    json j{{"subject", a.subject_id},     {"name", a.name},
           {"value", value_to_json(a.value)}, {"issuer", a.issuer_id},
           {"valid_from", a.valid_from},  {"valid_until", a.valid_until},
           {"signed", a.is_signed}};
    if (a.delegated_by) j["delegated_by"] = *a.delegated_by;
    return j;
}

AttributeAssertion assertion_from_json(const json& j) {
    AttributeAssertion a;
    a.subject_id = j.at("subject").get<std::string>();
    a.name = j.at("name").get<std::string>();
    a.value = value_from_json(j.at("value"));
    a.issuer_id = j.at("issuer").get<std::string>();
    a.valid_from = j.value("valid_from", SimTime{0});
    a.valid_until = j.value("valid_until", std::numeric_limits<SimTime>::max());
    a.is_signed = j.value("signed", false);
    if (j.contains("delegated_by")) a.delegated_by = j.at("delegated_by").get<std::string>();
    return a;
}

std::string digest(const Policy& policy) {
    json body = to_json(policy);
    body.erase("policy_id");
    return util::digest_of(body);
}

}  // namespace saaz::policy
