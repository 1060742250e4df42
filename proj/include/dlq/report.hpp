#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dlq/cohom.hpp"
#include "dlq/decomp.hpp"

namespace dlq::report {

using json = nlohmann::ordered_json;

// Words and simple indices are 1-based on the wire, matching t_1..t_n.
json word_json(const std::vector<int>& word0);
std::vector<int> word_from_json(const json& j, int rank);
json subset_json(SimpleSubset s);
SimpleSubset subset_from_json(const json& j, int rank);

json piece_json(const RootSystem& rs, const PieceClassification& pc, bool nonempty);

// pieces mode: one object per minimal double-coset representative.
json run_pieces(const RootSystem& rs, SimpleSubset I, const WeylElt& w, SimpleSubset J);
// classify mode: a single piece.
json run_classify(const RootSystem& rs, SimpleSubset I, const WeylElt& w, SimpleSubset J,
                  const WeylElt& x);
json run_coxeter(const RootSystem& rs, const WeylElt& w, SimpleSubset J);
json run_deodhar(const RootSystem& rs, const std::vector<int>& wWord, const WeylElt& x,
                 const std::optional<WeylElt>& wPrime);
json run_chain(const RootSystem& rs, const ChainSpec& spec, SimpleSubset J);
json run_cohom_bn(int n, BnCoefficient coeff);

json graded_module_json(const GradedModule& m);

}  // namespace dlq::report
