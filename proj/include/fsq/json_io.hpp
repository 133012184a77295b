#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "fsq/adhm.hpp"
#include "fsq/complex.hpp"
#include "fsq/quiver.hpp"
#include "fsq/surface.hpp"

namespace fsq::io {

using json = nlohmann::json;

// Scalars serialize as "p/q" strings ("p" when the denominator is 1).
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

// {rows, cols, entries:[scalar, ...]} row-major
json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);

// {surface, class:{rank, c1:[...], chi}}
json class_to_json(const NumericalClass& v);
NumericalClass class_from_json(const json& j);

// {vertices, arrows:[{id,src,dst}], relations:[[{coeff,path:[ids]}]]}
json quiver_to_json(const Quiver& q, const RelationSet& rels);
std::pair<Quiver, RelationSet> quiver_from_json(const json& j);

// {dims:[...], mats:{"arrowId": matrix}}
json rep_to_json(const Representation& rep);
Representation rep_from_json(const json& j);

// list of {coeff, exponents:[...]}
json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j, std::size_t nvars);

// {space, positions:[p0,p1], terms:[[twist,...],...], maps:[{rows,cols,entries:[poly]}]}
// twists accepted as a plain integer (Picard rank 1) or an integer list
json complex_to_json(const LineBundleComplex& c);
LineBundleComplex complex_from_json(const json& j);

// {k, r, B1, B2, i, j}
json adhm_to_json(const AdhmDatum& d);
AdhmDatum adhm_from_json(const json& j);

// Reads/parses a UTF-8 JSON file; parse or open failures throw
// std::invalid_argument so callers can map them to input errors.
json load_json_file(const std::string& path);

}  // namespace fsq::io
