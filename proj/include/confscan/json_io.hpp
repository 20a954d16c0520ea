#pragma once

#include <nlohmann/json_fwd.hpp>

#include "confscan/configs.hpp"
#include "confscan/injection.hpp"
#include "confscan/scanning.hpp"

// JSON interchange. Scalars are encoded as exact numerator/denominator
// strings, never as floating point, so configurations survive round trips
// bit-exactly; configurations are emitted in canonical order, which makes
// JSON equality meaningful. Decoders validate and normalize. Malformed
// documents raise input_error; documents that parse but violate a
// configuration invariant raise config_error.
namespace confscan::io {

using json = nlohmann::json;

json encode(const Scalar& s);
json encode(const BasePoint& p);
json encode(const XLabel& x);
json encode(const Label& l);
json encode(const PointConfig& c);
json encode(const SegmentConfig& w);
json encode(const BoxConfig& w);
json encode(const PathPoint& p);
json encode(const Injection& nu);

Scalar decode_scalar(const json& j);
BasePoint decode_base_point(const json& j);
XLabel decode_xlabel(const json& j);
Label decode_label(const json& j);
PointConfig decode_point_config(const json& j);
SegmentConfig decode_segment_config(const json& j);
// Raw entries, no normalization; for building deliberately non-normal input.
std::vector<SegmentEntry> decode_segment_entries(const json& j);
BoxConfig decode_box_config(const json& j);
PathPoint decode_path_point(const json& j);
Injection decode_injection(const json& j);

}  // namespace confscan::io
