#pragma once

#include <string>

#include "json.hpp"
#include "tcd/decomposer.hpp"
#include "tcd/hypergraph.hpp"
#include "tcd/markov.hpp"
#include "tcd/transitions.hpp"
#include "tcd/weights.hpp"

namespace tcd {

using Json = nlohmann::ordered_json;

// "1,2,3" for a sorted vertex set; the inverse parses and re-sorts.
std::string edge_key(const std::vector<int>& e);
std::vector<int> parse_edge_key(const std::string& s);

Json instance_to_json(const Hypergraph& h);
Hypergraph instance_from_json(const Json& j);

Json labeled_to_json(const LabeledExample& le);
LabeledExample labeled_from_json(const Json& j);

Json system_to_json(const TransitionSystem& ts);
TransitionSystem system_from_json(const Hypergraph& h, const Json& j);

Json certify_to_json(const CertifyReport& rep);

Json report_to_json(const Hypergraph& h, const DecompositionReport& rep);
Json run_summary_to_json(const RunSummary& s);

// Self-contained decomposition file: embeds the instance, the cycle weights,
// the report, and per-run summaries.
Json decomposition_to_json(const Hypergraph& h, const Decomposition& d);
// Reads instance + weights back; the stored report is ignored (reports are
// always recomputed, never trusted).
std::pair<Hypergraph, WeightFunction> decomposition_from_json(const Json& j);

Json oracle_to_json(const Hypergraph& h, const OracleResult& res);
Json example_report_to_json(const ExampleReport& rep);
Json mixing_to_json(const MixingReport& rep);

// One CSV row per run: seed, zeta, alpha_compat, weight range, exactness and
// hypothesis flags. Includes the header line.
std::string run_summaries_csv(const std::vector<RunSummary>& runs);

// Strict parse wrapper: throws InputError on malformed JSON.
Json parse_json(const std::string& text);

}  // namespace tcd
