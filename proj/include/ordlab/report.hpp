#ifndef ORDLAB_REPORT_HPP_
#define ORDLAB_REPORT_HPP_

#include <string>

#include "json.hpp"
#include "ordlab/conesearch.hpp"
#include "ordlab/detection.hpp"
#include "ordlab/gluing.hpp"

namespace ordlab {

using Json = nlohmann::json;  // object keys sort, so dumps are reproducible

Json json_of(const Slope& s);
Json json_of(const SlopeInterval& i);
Json json_of(const SlopeEstimate& e);
Json json_of(const DetectionVerdict& v);
Json json_of(const CofinalityReport& r, const std::vector<std::string>& gen_names);
Json json_of(const BoundaryCofinalityReport& r, const std::vector<std::string>& gen_names);
Json json_of(const BludovGlassReport& r);
Json json_of(const CoherenceReport& r);

// Wraps a result object into the standard report envelope.
Json report_envelope(const std::string& command, Json inputs, Json params, Json results,
                     bool with_timestamp);

}  // namespace ordlab

#endif  // ORDLAB_REPORT_HPP_
