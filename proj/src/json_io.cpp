#include "tcd/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "tcd/errors.hpp"

namespace tcd {

namespace {

Rat rat_field(const Json& j, const char* key) { return rat_parse(j.at(key).get<std::string>()); }

std::string int_str(const Int& x) { return x.get_str(); }

Json envelope_to_json(const EnvelopeStats& e) {
  Json j;
  j["applicable"] = e.applicable;
  if (e.applicable) {
    j["lo"] = rat_str(e.lo);
    j["hi"] = rat_str(e.hi);
    j["checked"] = e.checked;
    j["inside"] = e.inside;
    j["all_inside"] = e.all_inside();
  }
  return j;
}

Json hypothesis_to_json(const HypothesisFlag& f) {
  Json j;
  j["applicable"] = f.applicable;
  j["satisfied"] = f.satisfied;
  j["detail"] = f.detail;
  return j;
}

}  // namespace

std::string edge_key(const std::vector<int>& e) {
  std::ostringstream os;
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  return os.str();
}

std::vector<int> parse_edge_key(const std::string& s) {
  std::vector<int> out;
  std::istringstream is(s);
  std::string part;
  while (std::getline(is, part, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size()) throw InputError("bad vertex '" + part + "' in key");
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad vertex '" + part + "' in key '" + s + "'");
    }
  }
  if (out.empty()) throw InputError("empty edge key");
  std::sort(out.begin(), out.end());
  return out;
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON");
  return j;
}

Json instance_to_json(const Hypergraph& h) {
  Json j;
  j["n"] = h.n();
  j["k"] = h.k();
  j["edges"] = Json::array();
  for (const Edge& e : h.edges()) j["edges"].push_back(e);
  return j;
}

Hypergraph instance_from_json(const Json& j) {
  try {
    int n = j.at("n").get<int>();
    int k = j.at("k").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back(e.get<Edge>());
    return Hypergraph(n, k, std::move(edges));
  } catch (const Json::exception& ex) {
    throw InputError(std::string("bad instance JSON: ") + ex.what());
  }
}

Json labeled_to_json(const LabeledExample& le) {
  Json j = instance_to_json(le.base);
  j["A"] = le.side_a;
  Json cls = Json::object();
  for (const auto& [i, ids] : le.classes) cls[std::to_string(i)] = ids;
  j["classes"] = cls;
  j["h02"] = le.h02;
  return j;
}

LabeledExample labeled_from_json(const Json& j) {
  Hypergraph base = instance_from_json(j);
  try {
    LabeledExample le{std::move(base), {}, {}, {}};
    le.side_a = j.at("A").get<std::vector<int>>();
    for (const auto& [key, ids] : j.at("classes").items())
      le.classes[std::stoi(key)] = ids.get<std::vector<std::size_t>>();
    le.h02 = j.at("h02").get<std::vector<std::size_t>>();
    for (std::size_t id : le.h02)
      if (id >= le.base.edge_count()) throw InputError("h02 id out of range");
    for (const auto& [i, ids] : le.classes)
      for (std::size_t id : ids)
        if (id >= le.base.edge_count()) throw InputError("class id out of range");
    return le;
  } catch (const Json::exception& ex) {
    throw InputError(std::string("bad labeled-example JSON: ") + ex.what());
  }
}

Json system_to_json(const TransitionSystem& ts) {
  Json j;
  j["full"] = ts.is_full();
  if (ts.regularity())
    j["r"] = *ts.regularity();
  else
    j["r"] = nullptr;
  if (!ts.is_full()) {
    Json graphs = Json::object();
    for (const auto& [x, g] : ts.graphs()) {
      Json gj;
      gj["members"] = g.members;
      Json adj = Json::array();
      for (const auto& [lo, hi] : g.adj) adj.push_back(Json::array({lo, hi}));
      gj["adj"] = adj;
      graphs[edge_key(x)] = gj;
    }
    j["graphs"] = graphs;
  }
  return j;
}

TransitionSystem system_from_json(const Hypergraph& h, const Json& j) {
  try {
    if (j.at("full").get<bool>()) return TransitionSystem::full(h);
    std::optional<int> r;
    if (!j.at("r").is_null()) r = j.at("r").get<int>();
    std::map<std::vector<int>, LocalGraph> graphs;
    for (const auto& [key, gj] : j.at("graphs").items()) {
      LocalGraph g;
      g.members = gj.at("members").get<std::vector<std::size_t>>();
      for (const auto& pr : gj.at("adj")) {
        std::size_t a = pr.at(0).get<std::size_t>(), b = pr.at(1).get<std::size_t>();
        if (a == b) throw InputError("loop in transition graph");
        g.adj.insert({std::min(a, b), std::max(a, b)});
      }
      graphs[parse_edge_key(key)] = std::move(g);
    }
    return TransitionSystem::explicit_system(h, std::move(graphs), r);
  } catch (const Json::exception& ex) {
    throw InputError(std::string("bad transition-system JSON: ") + ex.what());
  }
}

Json certify_to_json(const CertifyReport& rep) {
  Json j;
  j["accepted"] = rep.accepted;
  j["attempts"] = rep.attempts;
  j["seed"] = rep.seed;
  j["accepted_attempt"] = rep.accepted_attempt;
  Json lens = Json::array();
  for (const auto& s : rep.lengths) {
    Json lj;
    lj["ell"] = s.ell;
    lj["min_count"] = int_str(s.min_count);
    lj["max_count"] = int_str(s.max_count);
    lj["alpha_compat"] = rat_str(s.alpha_compat);
    lj["zeta"] = rat_str(s.zeta);
    lens.push_back(lj);
  }
  j["lengths"] = lens;
  return j;
}

Json report_to_json(const Hypergraph& h, const DecompositionReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["ell"] = rep.ell;
  j["r"] = rep.r;
  j["mu"] = rat_str(rep.mu);
  j["is_exact_cover"] = rep.is_exact_cover;
  j["nonnegative"] = rep.nonnegative;
  j["support_valid"] = rep.support_valid;
  j["invalid_support"] = rep.invalid_support;
  j["support_size"] = rep.support_size;
  j["min_weight"] = rat_str(rep.min_weight);
  j["max_weight"] = rat_str(rep.max_weight);
  j["total_weight"] = rat_str(rep.total_weight);
  Json sums = Json::object();
  for (std::size_t e = 0; e < rep.edge_sums.size() && e < h.edge_count(); ++e)
    sums[edge_key(h.edge(e))] = rat_str(rep.edge_sums[e]);
  j["edge_sums"] = sums;
  Json off = Json::array();
  for (std::size_t e : rep.offending_edges)
    if (e < h.edge_count()) off.push_back(edge_key(h.edge(e)));
  j["offending_edges"] = off;
  j["envelope_domain"] = rep.envelope_domain;
  j["r_envelope"] = envelope_to_json(rep.r_envelope);
  j["theorem_envelope"] = envelope_to_json(rep.theorem_envelope);
  j["mixing_hypothesis"] = hypothesis_to_json(rep.mixing_hypothesis);
  j["alpha_used"] = rat_str(rep.alpha_used);
  j["ell0_used"] = rep.ell0_used;
  j["adjust_hypothesis"] = hypothesis_to_json(rep.adjust_hypothesis);
  j["zeta_used"] = rat_str(rep.zeta_used);
  j["arcs_routed"] = rep.arcs_routed;
  j["pairs_routed"] = rep.pairs_routed;
  j["pairs_skipped"] = rep.pairs_skipped;
  j["transporters_applied"] = rep.transporters_applied;
  j["transporter_min_found"] = rep.transporter_min_found;
  j["max_arc_flow"] = rat_str(rep.max_arc_flow);
  j["flow_beta"] = rat_str(rep.flow_beta);
  j["flow_cap"] = rat_str(rep.flow_cap);
  j["flow_within_cap"] = rep.flow_within_cap;
  j["paper_bounds_applicable"] = rep.paper_bounds_applicable;
  if (rep.paper_bounds_applicable) {
    j["paper_m_lower"] = rat_str(rep.paper_m_lower);
    j["paper_m_upper"] = rat_str(rep.paper_m_upper);
  }
  j["runs_averaged"] = rep.runs_averaged;
  return j;
}

Json run_summary_to_json(const RunSummary& s) {
  Json j;
  j["run"] = s.run;
  j["adjust_seed"] = s.adjust_seed;
  j["certify_attempts"] = s.certify_attempts;
  j["zeta"] = rat_str(s.zeta);
  j["alpha_compat"] = rat_str(s.alpha_compat);
  j["min_weight"] = rat_str(s.min_weight);
  j["max_weight"] = rat_str(s.max_weight);
  j["exact_cover"] = s.exact_cover;
  j["nonnegative"] = s.nonnegative;
  j["adjust_hypothesis"] = s.adjust_hypothesis;
  j["mixing_hypothesis"] = s.mixing_hypothesis;
  return j;
}

Json decomposition_to_json(const Hypergraph& h, const Decomposition& d) {
  Json j;
  j["instance"] = instance_to_json(h);
  j["ell"] = d.weights.ell();
  Json cycles = Json::array();
  for (const auto& [c, wt] : d.weights.entries()) {
    Json cj;
    cj["vertices"] = c.vertices;
    cj["weight"] = rat_str(wt);
    cycles.push_back(cj);
  }
  j["cycles"] = cycles;
  j["report"] = report_to_json(h, d.report);
  Json runs = Json::array();
  for (const RunSummary& s : d.runs) runs.push_back(run_summary_to_json(s));
  j["runs"] = runs;
  return j;
}

std::pair<Hypergraph, WeightFunction> decomposition_from_json(const Json& j) {
  try {
    Hypergraph h = instance_from_json(j.at("instance"));
    std::size_t ell = j.at("ell").get<std::size_t>();
    WeightFunction w(h.k(), ell);
    for (const auto& cj : j.at("cycles")) {
      TightCycle c = TightCycle::canonical(cj.at("vertices").get<std::vector<int>>());
      if (c.length() != ell) throw InputError("cycle of wrong length in decomposition");
      w.add(c, rat_field(cj, "weight"));
    }
    return {std::move(h), std::move(w)};
  } catch (const Json::exception& ex) {
    throw InputError(std::string("bad decomposition JSON: ") + ex.what());
  }
}

Json oracle_to_json(const Hypergraph& h, const OracleResult& res) {
  Json j;
  j["status"] = res.status == OracleStatus::feasible
                    ? "feasible"
                    : (res.status == OracleStatus::infeasible ? "infeasible" : "inconclusive");
  j["cycle_count"] = res.cycle_count;
  j["pivots"] = res.pivots;
  j["note"] = res.note;
  if (res.status == OracleStatus::feasible) {
    Json cycles = Json::array();
    for (const auto& [c, wt] : res.weights.entries()) {
      Json cj;
      cj["vertices"] = c.vertices;
      cj["weight"] = rat_str(wt);
      cycles.push_back(cj);
    }
    j["cycles"] = cycles;
  }
  if (res.status == OracleStatus::infeasible) {
    Json dual = Json::object();
    for (std::size_t e = 0; e < res.dual.size(); ++e)
      dual[edge_key(h.edge(e))] = rat_str(res.dual[e]);
    j["dual"] = dual;
    j["certificate_verified"] = res.certificate_verified;
  }
  return j;
}

Json example_report_to_json(const ExampleReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["ell"] = rep.ell;
  j["spacing_holds"] = rep.spacing_holds;
  j["spacing_pairs_checked"] = rep.spacing_pairs_checked;
  j["cycles_total"] = rep.cycles_total;
  j["cycles_meeting_e1"] = rep.cycles_meeting_e1;
  j["cycles_meeting_both"] = rep.cycles_meeting_both;
  j["every_e1_cycle_meets_h02"] = rep.every_e1_cycle_meets_h02;
  j["budget_lhs"] = int_str(rep.budget_lhs);
  j["budget_rhs"] = int_str(rep.budget_rhs);
  j["witnesses_nondecomposability"] = rep.witnesses_nondecomposability;
  return j;
}

Json mixing_to_json(const MixingReport& rep) {
  Json j;
  j["applicable"] = rep.applicable;
  if (rep.applicable) {
    j["alpha"] = rat_str(rep.alpha);
    j["beta"] = rat_str(rep.beta);
    j["t_min"] = rep.t_min;
    j["t"] = rep.t;
    j["worst_ratio"] = rat_str(rep.worst_ratio);
    Json by_t = Json::array();
    for (const Rat& x : rep.worst_ratio_by_t) by_t.push_back(rat_str(x));
    j["worst_ratio_by_t"] = by_t;
    j["pass"] = rep.pass;
  }
  return j;
}

std::string run_summaries_csv(const std::vector<RunSummary>& runs) {
  std::ostringstream os;
  os << "run,adjust_seed,certify_attempts,zeta,alpha_compat,min_weight,max_weight,"
        "exact_cover,nonnegative,adjust_hypothesis,mixing_hypothesis\n";
  for (const RunSummary& s : runs) {
    os << s.run << ',' << s.adjust_seed << ',' << s.certify_attempts << ',' << rat_str(s.zeta)
       << ',' << rat_str(s.alpha_compat) << ',' << rat_str(s.min_weight) << ','
       << rat_str(s.max_weight) << ',' << (s.exact_cover ? 1 : 0) << ','
       << (s.nonnegative ? 1 : 0) << ',' << (s.adjust_hypothesis ? 1 : 0) << ','
       << (s.mixing_hypothesis ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace tcd
