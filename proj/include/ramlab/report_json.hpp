#pragma once

// JSON renderings of reports. Big integers and rationals are emitted as strings.

#include <json.hpp>

#include "ramlab/claims.hpp"

namespace ramlab::report {

using nlohmann::json;

inline json big(const BigInt& v) { return v.get_str(); }
inline json rat(const BigRat& v) { return to_string(v); }

inline json group_header(const PermGroup& G) {
  return {{"name", G.name()}, {"degree", G.degree()}, {"order", big(G.order())}};
}

inline json class_json(std::size_t index, const ConjClass& c) {
  return {{"index", index},
          {"element_order", c.elt_order},
          {"size", big(c.size)},
          {"centralizer_order", big(c.centralizer_order)},
          {"rational", c.rational},
          {"cycle_type", c.cycle_type},
          {"representative", c.rep.to_cycle_string()}};
}

inline json classes_json(const PermGroup& G) {
  json arr = json::array();
  const auto& cls = conjugacy_classes(G);
  for (std::size_t i = 0; i < cls.size(); ++i) arr.push_back(class_json(i, cls[i]));
  return {{"group", group_header(G)}, {"classes", arr}};
}

inline json gexp_json(const PermGroup& G, const GexpReport& r, std::uint64_t exp) {
  json cert = json::array();
  for (const auto& x : r.certificate) cert.push_back(x.to_cycle_string());
  return {{"group", group_header(G)},
          {"gexp", r.value},
          {"exponent", exp},
          {"witness_orders", r.witness_orders},
          {"certificate", cert}};
}

inline json rigidity_json(const RigidityReport& r) {
  return {{"classes", r.classes},
          {"count", big(r.count)},
          {"expected", big(r.expected)},
          {"rigid", r.rigid},
          {"rational", r.rational},
          {"rationally_rigid", r.rationally_rigid()}};
}

inline json criterion_json(const std::vector<std::size_t>& tuple, const CriterionReport& r) {
  json details = json::array();
  for (const auto& f : r.details)
    details.push_back({{"index", f.index},
                       {"element_order", f.order},
                       {"size", big(f.size)},
                       {"centralizer_order", big(f.centralizer_order)},
                       {"rational", f.rational},
                       {"large", f.large},
                       {"self_centralizing", f.self_centralizing}});
  return {{"classes", tuple},
          {"passes", r.passes},
          {"gexp", r.gexp_value},
          {"offending", to_string(r.offending)},
          {"details", details}};
}

inline std::string kind_name(BranchPoint::Kind k) {
  switch (k) {
    case BranchPoint::Kind::rational: return "rational";
    case BranchPoint::Kind::algebraic: return "algebraic";
    case BranchPoint::Kind::infinity: return "infinity";
  }
  return "?";
}

inline json branch_point_json(const BranchPoint& b) {
  json j{{"kind", kind_name(b.kind)}, {"label", b.label()}, {"certified", b.certified}};
  if (b.kind == BranchPoint::Kind::rational) j["value"] = rat(b.value);
  if (b.kind != BranchPoint::Kind::infinity) {
    json c = json::array();
    for (const auto& v : b.minpoly.coeffs()) c.push_back(rat(v));
    j["minpoly"] = c;
  }
  return j;
}

inline json branch_points_json(const std::vector<BranchPoint>& bps) {
  json arr = json::array();
  for (const auto& b : bps) arr.push_back(branch_point_json(b));
  return {{"branch_points", arr}};
}

inline json ramtype_json(const RamificationType& rt) {
  json arr = json::array();
  for (const auto& en : rt.entries)
    arr.push_back({{"point", branch_point_json(en.point)}, {"indices", en.indices}, {"e", en.e}});
  return {{"degree", rt.degree},
          {"entries", arr},
          {"geometric_branch_points", rt.geometric_branch_point_count()},
          {"riemann_hurwitz_sum", rt.riemann_hurwitz_sum()}};
}

inline json type_json(const std::vector<TypeEntry>& t) {
  json arr = json::array();
  for (const auto& en : t) {
    json j{{"e", en.e}};
    if (!en.label.empty()) j["point"] = en.label;
    arr.push_back(j);
  }
  return {{"type", arr}, {"text", format_type(t)}};
}

inline json prime_set_json(const PrimeSet& s) {
  json arr = json::array();
  for (const auto& p : s.primes) arr.push_back(big(p));
  return {{"primes", arr}, {"complete", s.complete}};
}

inline json specialization_json(const SpecializationReport& r) {
  json per = json::array();
  for (const auto& [p, pp] : r.per_prime) {
    json j{{"prime", big(p)}, {"nu", pp.nu}, {"branch", branch_point_json(pp.branch)}, {"e", pp.e}, {"bad", pp.bad}};
    j["predicted_order"] = pp.predicted_order ? json(*pp.predicted_order) : json(nullptr);
    if (auto it = r.evidence.find(p); it != r.evidence.end()) {
      j["squarefree_mod_p"] = it->second.squarefree_mod_p;
      j["local_verdict"] = to_string(it->second.verdict);
    }
    per.push_back(j);
  }
  json conflicts = json::array();
  for (const auto& p : r.conflicts) conflicts.push_back(big(p));
  json ram = json::array();
  for (const auto& p : r.predicted_ramified()) ram.push_back(big(p));
  return {{"a", rat(r.a)},
          {"bad_primes", prime_set_json(r.bad)},
          {"per_prime", per},
          {"predicted_ramified", ram},
          {"conflicts", conflicts},
          {"factorization_complete", r.factorization_complete}};
}

inline json udisc_json(const std::vector<BigRat>& as, const UdiscReport& r) {
  json a = json::array();
  for (const auto& v : as) a.push_back(rat(v));
  json cleared = json::object();
  for (const auto& [p, v] : r.cleared_by) cleared[p.get_str()] = rat(v);
  return {{"as", a},
          {"discriminant_gcd", big(r.discriminant_gcd)},
          {"remaining", prime_set_json(r.remaining)},
          {"cleared_by", cleared}};
}

inline json search_json(const SearchResult& r) {
  json vals = json::array();
  for (const auto& v : r.values) vals.push_back(rat(v));
  json locks = json::array();
  for (const auto& [p, l] : r.locks) locks.push_back({{"prime", big(p)}, {"residue", big(l.first)}, {"modulus", big(l.second)}});
  return {{"values", vals}, {"locks", locks}, {"exhausted", r.exhausted}};
}

inline std::string status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped: return "skipped";
  }
  return "?";
}

inline json claim_json(const ClaimRecord& r) {
  return {{"claim_id", r.claim_id},
          {"anchor", r.anchor},
          {"pass", r.status == ClaimStatus::skipped ? json(nullptr) : json(r.pass())},
          {"status", status_name(r.status)},
          {"tier", to_string(r.tier)},
          {"detail", r.detail},
          {"seconds", r.seconds}};
}

/// Top-level document: {"command", "ok", "result"} or {"command", "ok": false, "error"}.
inline json envelope(const std::string& command, bool ok, json result) {
  return {{"command", command}, {"ok", ok}, {"result", std::move(result)}};
}

inline json error_envelope(const std::string& command, int exit_code, const std::string& message) {
  return {{"command", command}, {"ok", false}, {"error", {{"exit_code", exit_code}, {"message", message}}}};
}

}  // namespace ramlab::report
