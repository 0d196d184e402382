#pragma once

#include <string>

#include "json.hpp"

#include "hadwiger/affine.hpp"
#include "hadwiger/coloring.hpp"
#include "hadwiger/construction.hpp"
#include "hadwiger/minor.hpp"
#include "hadwiger/product.hpp"

namespace hadwiger {

using json = nlohmann::ordered_json;

json graph_to_json(const Graph& g);

json model_to_json(const MinorModel& m);
MinorModel model_from_json(const json& j);

json report_to_json(const VerificationReport& r);
json factorization_to_json(const FactorizationResult& f);
json coloring_to_json(const Coloring& c);
json plane_to_json(const AffinePlane& p);
json bound_report_to_json(const ProductBoundReport& r);

std::string violation_kind_name(ViolationKind k);

} // namespace hadwiger
