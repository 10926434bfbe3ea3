#pragma once

#include <json.hpp>

#include "fueterlab/fock_spaces.hpp"
#include "fueterlab/report.hpp"
#include "fueterlab/slicepoly.hpp"

namespace fueterlab {

using Json = nlohmann::ordered_json;

Json to_json(const ExactScalar& s);
ExactScalar exact_from_json(const Json& j);

Json to_json(const QuatE& q);
QuatE quate_from_json(const Json& j);

Json to_json(const QuatD& q);

Json to_json(const NCPoly& p);
NCPoly ncpoly_from_json(const Json& j);

Json to_json(const SliceCoeffMatrix& f);
SliceCoeffMatrix matrix_from_json(const Json& j);

Json to_json(const ASpaceElement& e);
Json to_json(const ATildeElement& e);

Json to_json(const VerificationReport& r);

}  // namespace fueterlab
