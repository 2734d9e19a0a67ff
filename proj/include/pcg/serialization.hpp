#pragma once

#include "pcg/constructions.hpp"
#include "pcg/graph.hpp"
#include "pcg/oracle.hpp"
#include "pcg/weighted_tree.hpp"

#include <json.hpp>

#include <string>

namespace pcg {

// Witness JSON:
// {"class": "LPG"|"mLPG"|"PCG", "newick": "...", "d_min": "p/q",
//  "d_max": "p/q" | "inf"}
nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

// Verdict JSON:
// {"class": ..., "outcome": "MEMBER"|"NON_MEMBER", "witness": ... | null,
//  "topologies_examined": k, "lp_count": k, "elapsed_ms": t,
//  "exploratory": bool}
nlohmann::json verdict_to_json(const Verdict& v);

// MatrogenicSpec JSON: [{"kind": "matching", "size": 2}, ...]
nlohmann::json spec_to_json(const MatrogenicSpec& spec);
MatrogenicSpec spec_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const ConstructionTrace& trace);

std::string class_label(GraphClass cls);  // "LPG" / "mLPG" / "PCG"

}  // namespace pcg
