#pragma once

#include <optional>
#include <string>

#include "cutjoin/beta_ensemble.hpp"
#include "cutjoin/hilbert.hpp"
#include "cutjoin/noperator.hpp"

#include "json.hpp"

namespace cutjoin {

using Json = nlohmann::json;

// Grammar: terms like "3/2*p[2,1] + p[4] - v[1,1]", whitespace-insensitive.
// p[...] is a power-sum monomial, v[...] the normalized p[...]/z one.
// Returns nullopt with a message on malformed input.
std::optional<SymFun> parse_symfun(const std::string& text, std::string* error = nullptr);

// "4*p[3,1] + 2*p[2,2]"; v_coords prints in the v basis instead.
std::string format_symfun(const SymFun& f, bool v_coords = false);

Json symfun_to_json(const SymFun& f);
Json partition_to_json(const Partition& p);
Json terms_to_json(const std::vector<NOTerm>& terms);
Json matrix_to_json(const OpMatrix& m);
std::string matrix_to_csv(const OpMatrix& m, const Json& meta);
Json graph_to_json(const RimhookGraph& g);
std::string graph_to_dot(const RimhookGraph& g, const Json& meta);
Json moment_table_to_json(const MomentTable& t);

// Per-partition equivariant data (tangent and tautological weights, Euler
// class) for all lambda of size n.
Json weight_table_to_json(int n, const EquivParams& p);

// Reproducibility header attached to every emitted document.
Json make_meta(const std::string& command, const Json& params);
std::string dump_with_meta(Json doc, const Json& meta);

}  // namespace cutjoin
