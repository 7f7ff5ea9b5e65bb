#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "weylcurves/classify.hpp"
#include "weylcurves/cones.hpp"
#include "weylcurves/dimension.hpp"

namespace weylcurves {

using json = nlohmann::ordered_json;

// plain number when it fits in 53 bits, decimal string otherwise
json encode_integer(const Integer& x);
Integer decode_integer(const json& j);

json to_json(const CurveClass& c);
json to_json(const DivisorClass& D);

using AnyClass = std::variant<CurveClass, DivisorClass>;
AnyClass class_from_json(const json& j);
AnyClass parse_class(const std::string& text);
CurveClass parse_curve(const std::string& text);
DivisorClass parse_divisor(const std::string& text);

json to_json(const IndexSet& I);
json to_json(const ReductionTrace& t);
json to_json(const ScreenViolation& v);
json to_json(const WeylVerdict& v);
json to_json(const OneClassResult& r);
json to_json(const ClassificationReport& r);
json to_json(const FacetReport& f);
json to_json(const Ray& ray);
json to_json(const CorrectionLedger& l);

template <Kind K>
json to_json(const OrbitResult<K>& orbit, bool labelled);

} // namespace weylcurves
