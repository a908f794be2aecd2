#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "homcount/decomposition.hpp"
#include "homcount/instance.hpp"
#include "homcount/polynomial.hpp"

namespace homcount {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Graph file: first line "n m", then m lines "u v" with 0 <= u < v < n.
SimpleGraph parse_graph(std::istream& in);
SimpleGraph parse_graph_file(const std::string& path);

/// Target file: first line "k", then k colour names one per line, then edge
/// lines "a b" by name; "a a" denotes a loop.
TargetGraph parse_target(std::istream& in);
TargetGraph parse_target_file(const std::string& path);

/// Lists file: lines "v: c1 c2 ...". Vertices without a line allow every
/// colour; "v:" with no names is the empty list.
ListAssignment parse_lists(std::istream& in, const TargetGraph& target, int n);
ListAssignment parse_lists_file(const std::string& path, const TargetGraph& target, int n);

/// Weights file: lines "v c p/q" with a rational weight; absent pairs weigh 1.
WeightTable parse_weights(std::istream& in, const TargetGraph& target, int n);
WeightTable parse_weights_file(const std::string& path, const TargetGraph& target, int n);

/// Canonical text form: terms in descending lexicographic exponent order,
/// "coeff * tok1^e1 tok2 ..." joined by " + "; bare coefficient for the
/// constant term; "0" for the zero polynomial.
std::string polynomial_to_text(const Polynomial& p, const std::vector<std::string>& var_tokens);

/// Variable tokens "x_<name>" for the target's colours.
std::vector<std::string> colour_tokens(const TargetGraph& target);

/// JSON list of {"coeff": "...", "exps": {name: e, ...}} in canonical order.
nlohmann::json polynomial_to_json(const Polynomial& p, const std::vector<std::string>& var_names);
Polynomial polynomial_from_json(const nlohmann::json& j, const std::vector<std::string>& var_names);

nlohmann::json decomposition_to_json(const PathDecomposition& pd);
nlohmann::json forest_to_json(const RootedForest& f);

}  // namespace homcount
