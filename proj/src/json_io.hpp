#pragma once

#include "gaugekit/classify.hpp"
#include "gaugekit/decompose.hpp"
#include "gaugekit/matlin.hpp"

#include "json_util.hpp"

#include <string>

namespace gaugekit::detail {

json factor_json(const Factor& f);
json expr_json(const HomotopyTypeExpr& e);
// Pretty text is always rendered from the AST, never from the C++ objects.
std::string render_factors(const json& factors);

json space_json(const SpaceId& s);
json spec_json(const ConnectedSumSpec& s);
json element_json(const GroupElement& x);
json yf_json(const YFDescriptor& yf);
json matrix_json(const IntMatrix& m);
json mixed_matrix_json(const MixedMatrix& m);
json classification_json(const BundleClassification& b);
json case_json(const ClassificationCase& c);
json verdict_json(const EquivalenceVerdict& v);
json pi_result_json(const PiResult& p);
json table_entry_json(const TableEntry& e);

}  // namespace gaugekit::detail
