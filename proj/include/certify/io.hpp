#pragma once

// JSON surfaces: the Coxeter matrix file format {"rank": k, "m": [[...]]}
// with 0 meaning the infinite label, claims files, classification output,
// harness statistics, and the report format {id, status, witness,
// convention, millis}.

#include "certify/claims.hpp"
#include "certify/coxeter.hpp"
#include "certify/helly.hpp"
#include "certify/tree.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace certify::io {

using nlohmann::json;

inline cox::CoxeterMatrix coxeter_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("m"))
    throw std::invalid_argument("coxeter json needs {rank, m}");
  int rank = j.at("rank").get<int>();
  auto rows = j.at("m").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(rows.size()) != rank)
    throw std::invalid_argument("row count does not match rank");
  return cox::CoxeterMatrix::from_entries(rows);
}

inline json coxeter_to_json(const cox::CoxeterMatrix& m) {
  std::vector<std::vector<int>> rows(m.rank(), std::vector<int>(m.rank()));
  for (int i = 0; i < m.rank(); ++i)
    for (int j = 0; j < m.rank(); ++j) rows[i][j] = m.at(i, j);
  return json{{"rank", m.rank()}, {"m", rows}};
}

inline json classification_to_json(const cox::CoxeterMatrix& m) {
  json out;
  cox::ClassificationResult res = cox::classify(m);
  json comps = json::array();
  for (const auto& c : res.components) {
    json vertices = json::array();
    for (int v : c.vertices) vertices.push_back(v + 1);
    comps.push_back(json{{"vertices", vertices}, {"label", c.label}, {"finite", c.finite}});
  }
  out["components"] = comps;
  out["finite"] = res.finite;
  out["summary"] = res.summary();

  cox::OracleResult oracle = cox::numeric_finiteness_oracle(m);
  out["minor_oracle"] =
      oracle.verdict == cox::Definiteness::PositiveDefinite
          ? "positive-definite"
          : (oracle.verdict == cox::Definiteness::NotPositiveDefinite ? "not-positive-definite"
                                                                      : "indeterminate");
  out["minor_oracle_exact"] = oracle.used_exact;

  if (m.rank() <= cox::kSphericityRankCap) {
    cox::Sphericity sp = cox::sphericity(m);
    out["sphericity"] = sp.level;
    out["full_rank_finite"] = sp.full_rank;
  }
  if (!m.warnings().empty()) out["warnings"] = m.warnings();
  return out;
}

inline json report_to_json(const run::Report& report) {
  json arr = json::array();
  for (const run::ReportEntry& e : report.entries)
    arr.push_back(json{{"id", e.id},
                       {"status", e.status},
                       {"witness", e.witness},
                       {"convention", e.convention},
                       {"millis", e.millis}});
  return arr;
}

inline json helly_stats_to_json(const geo::HellyStats& s) {
  json out{{"dim", s.dim},
           {"trials", s.trials},
           {"seed", s.seed},
           {"subfamily_size", s.subfamily_size},
           {"families", s.families},
           {"hypothesis_met", s.hypothesis_met},
           {"violations", s.violations}};
  if (!s.first_violation.empty()) out["first_violation"] = s.first_violation;
  return out;
}

inline json tree_stats_to_json(const tree::TreeSweepStats& s) {
  return json{{"trees", s.trees},
              {"subgroups", s.subgroups},
              {"failures", s.failures},
              {"lattice_complete_trees", s.lattice_complete_trees}};
}

// ---------------------------------------------------------------------------
// Claims files: a JSON array of {id, kind, engine, payload, cap}.

namespace detail {

inline run::ClaimOutcome check_equal_outcome(bool equal, const std::string& lhs_desc,
                                             const std::string& rhs_desc) {
  if (equal) return {run::Status::Verified, "both sides agree", ""};
  return {run::Status::Refuted, "lhs = " + lhs_desc + "; rhs = " + rhs_desc, ""};
}

inline run::ClaimOutcome run_relation(const std::string& engine, const json& payload,
                                      const run::ClaimContext& ctx) {
  using namespace run;
  std::string lhs = payload.at("lhs").get<std::string>();
  std::string rhs = payload.contains("rhs") ? payload.at("rhs").get<std::string>() : "";
  if (engine == "free-group") {
    int rank = payload.at("rank").get<int>();
    fg::FreeAut l = eval_product(expr::parse_free_factors(lhs, rank), ctx.conv);
    fg::FreeAut r = rhs.empty() ? fg::FreeAut::identity(rank)
                                : eval_product(expr::parse_free_factors(rhs, rank), ctx.conv);
    return detail::check_equal_outcome(l == r, l.str(), r.str());
  }
  if (engine == "matrix-ring") {
    ncring::MatrixElement l = eval_product(expr::parse_matrix_factors(lhs), ctx.conv);
    ncring::MatrixElement r =
        rhs.empty() ? ncring::MatrixElement::identity(l.value.size())
                    : eval_product(expr::parse_matrix_factors(rhs), ctx.conv);
    return detail::check_equal_outcome(l == r, l.value.str(), r.value.str());
  }
  if (engine == "affine") {
    int dim = payload.at("dim").get<int>();
    aff::AffineIsometry l = eval_product(expr::parse_affine_factors(lhs, dim), ctx.conv);
    aff::AffineIsometry r = rhs.empty()
                                ? aff::AffineIsometry::identity(dim)
                                : eval_product(expr::parse_affine_factors(rhs, dim), ctx.conv);
    return detail::check_equal_outcome(l == r, l.str(), r.str());
  }
  throw std::invalid_argument("unknown engine: " + engine);
}

inline run::ClaimOutcome run_order(const std::string& engine, const json& payload,
                                   const run::ClaimContext& ctx) {
  using namespace run;
  if (engine != "free-group")
    throw std::invalid_argument("order claims run in the free-group engine");
  int rank = payload.at("rank").get<int>();
  long expect = payload.at("order").get<long>();
  fg::FreeAut el =
      eval_product(expr::parse_free_factors(payload.at("element").get<std::string>(), rank),
                   ctx.conv);
  fg::OrderResult ord = fg::order_bounded(el, static_cast<long>(ctx.cap));
  if (ord.exceeded) return {Status::ExceededCap, "no power returned to the identity", ""};
  if (ord.order != expect)
    return {Status::Refuted, "order is " + std::to_string(ord.order), ""};
  return {Status::Verified, "order " + std::to_string(ord.order), ""};
}

template <class E>
run::ClaimOutcome closure_outcome(const std::vector<E>& elems, const json& payload,
                                  const run::ClaimContext& ctx) {
  using namespace run;
  std::string expect =
      payload.contains("expect") ? payload.at("expect").get<std::string>() : "finite";
  ClosureOutcome c = subgroup_closure(elems, ctx.cap);
  if (expect == "exceeds_cap") {
    if (c.exceeded) return {Status::Verified, "closure exceeds the cap", ""};
    return {Status::Refuted, "closure has order " + std::to_string(c.order), ""};
  }
  if (c.exceeded) return {Status::ExceededCap, "closure exceeded the cap", ""};
  if (payload.contains("order") &&
      payload.at("order").get<std::uint64_t>() != c.order)
    return {Status::Refuted, "closure has order " + std::to_string(c.order), ""};
  return {Status::Verified, "closure has order " + std::to_string(c.order), ""};
}

inline run::ClaimOutcome run_finiteness(const std::string& engine, const json& payload,
                                        const run::ClaimContext& ctx) {
  using namespace run;
  auto texts = payload.at("elements").get<std::vector<std::string>>();
  if (texts.empty()) throw std::invalid_argument("finiteness claim needs elements");
  if (engine == "free-group") {
    int rank = payload.at("rank").get<int>();
    std::vector<fg::FreeAut> elems;
    for (const std::string& t : texts)
      elems.push_back(eval_product(expr::parse_free_factors(t, rank), ctx.conv));
    return closure_outcome(elems, payload, ctx);
  }
  if (engine == "affine") {
    int dim = payload.at("dim").get<int>();
    std::vector<aff::AffineIsometry> elems;
    for (const std::string& t : texts)
      elems.push_back(eval_product(expr::parse_affine_factors(t, dim), ctx.conv));
    return closure_outcome(elems, payload, ctx);
  }
  if (engine == "matrix-ring") {
    std::vector<ncring::MatrixElement> elems;
    for (const std::string& t : texts)
      elems.push_back(eval_product(expr::parse_matrix_factors(t), ctx.conv));
    return closure_outcome(elems, payload, ctx);
  }
  throw std::invalid_argument("unknown engine: " + engine);
}

inline run::ClaimOutcome run_classification(const json& payload, const run::ClaimContext&) {
  using namespace run;
  cox::CoxeterMatrix m = coxeter_from_json(payload.at("matrix"));
  cox::ClassificationResult res = cox::classify(m);
  if (payload.contains("finite") && payload.at("finite").get<bool>() != res.finite)
    return {Status::Refuted, "classified " + res.summary(), ""};
  if (payload.contains("sphericity")) {
    cox::Sphericity sp = cox::sphericity(m);
    if (sp.level != payload.at("sphericity").get<int>())
      return {Status::Refuted, "sphericity is " + std::to_string(sp.level), ""};
  }
  return {Status::Verified, res.summary(), ""};
}

}  // namespace detail

inline std::vector<run::Claim> claims_from_json(const json& doc) {
  if (!doc.is_array()) throw std::invalid_argument("claims file must be a JSON array");
  std::vector<run::Claim> claims;
  for (const json& item : doc) {
    run::Claim c;
    c.id = item.at("id").get<std::string>();
    c.kind = item.at("kind").get<std::string>();
    c.engine = item.value("engine", std::string("free-group"));
    c.anchor = item.value("anchor", std::string());
    c.cap = item.value("cap", run::kDefaultClosureCap);
    json payload = item.value("payload", json::object());
    std::string kind = c.kind, engine = c.engine;
    c.run = [kind, engine, payload](const run::ClaimContext& ctx) -> run::ClaimOutcome {
      if (kind == "relation" || kind == "identity")
        return detail::run_relation(engine, payload, ctx);
      if (kind == "order") return detail::run_order(engine, payload, ctx);
      if (kind == "finiteness") return detail::run_finiteness(engine, payload, ctx);
      if (kind == "classification") return detail::run_classification(payload, ctx);
      throw std::invalid_argument("unknown claim kind: " + kind);
    };
    claims.push_back(std::move(c));
  }
  // Claim ids key the report; duplicates would make it ambiguous.
  for (std::size_t i = 0; i < claims.size(); ++i)
    for (std::size_t j = i + 1; j < claims.size(); ++j)
      if (claims[i].id == claims[j].id)
        throw std::invalid_argument("duplicate claim id: " + claims[i].id);
  return claims;
}

}  // namespace certify::io
