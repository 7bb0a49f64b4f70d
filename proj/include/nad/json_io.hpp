#ifndef NAD_JSON_IO_HPP
#define NAD_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "nad/measure.hpp"
#include "nad/rational.hpp"
#include "nad/shift_space.hpp"
#include "nad/step_function.hpp"
#include "nad/transform.hpp"

namespace nad {

using Json = nlohmann::json;

Json norm_to_json(const UltraNorm& n);
UltraNorm norm_from_json(const Json& j);

Json clopen_to_json(const ClopenSet& s);
ClopenSet clopen_from_json(const Json& j);

Json measure_to_json(const MeasureContext& m);
MeasureContext measure_from_json(const Json& j);
MeasureContext load_measure(const std::string& path);

Json step_to_json(const StepFunction& f);
StepFunction step_from_json(const Json& j, const Alphabet& a);

Json transform_to_json(const Transformation& t);
Transformation transform_from_json(const Json& j, const Alphabet& a);
/// Inline syntax: "shift" | "odometer" | "perm:1,0" | path to a JSON file.
Transformation parse_transform(const std::string& text, const Alphabet& a);

Json iso_to_json(const MeasureAlgebraIso& iso);
MeasureAlgebraIso iso_from_json(const Json& j);

LinearOnSteps linear_from_json(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace nad

#endif
