#pragma once

#include <json.hpp>

#include "agm/agm_core.hpp"
#include "agm/genus2.hpp"
#include "agm/hyperelliptic.hpp"
#include "agm/theta.hpp"

namespace agm::io {

using json = nlohmann::json;

// {"genus": g, "values": {"00": x, ...}}, keys are bit strings with i_1 first.
json to_json(const MeanVector& a);
MeanVector mean_vector_from_json(const json& j);

// {"limit", "iterations", "spreads", "iterates": [MeanVector...]}
json to_json(const AgmTrace& trace, bool with_iterates);

// {"tau": [[re, im], ...]} with g*g pairs in row-major order.
json to_json(const Tau& tau);
Tau tau_from_json(const json& j);

json to_json(const ThetaVector& theta);

// {"points": [p_1, ..., p_{2g+1}]}
json to_json(const BranchPoints& p);
BranchPoints branch_points_from_json(const json& j);

json to_json(const PeriodPair& pp);

// Accepts {"a00", "a01", "a10", "a11"} or the genus-2 mean vector form.
Genus2Quadruple quadruple_from_json(const json& j);
json to_json(const Genus2Quadruple& a);
json to_json(const Genus2Moduli& m);

json matrix_to_json(const Eigen::MatrixXd& m);

}  // namespace agm::io
