#pragma once

#include <string>
#include <vector>

#include "confscan/configs.hpp"
#include "confscan/scanning.hpp"

// Static SVG figures. Layout rule: every distinct base point gets one
// horizontal track, ordered by the canonical point order from the bottom
// up; segments draw as rectangles spanning [a,b] on their track, points as
// circles at their time coordinate (the product head for points over
// R x Y, the first suspension parameter for scanned configurations).
// Output is deterministic: same input bytes, same SVG bytes.
namespace confscan::svg {

std::string render_point_config(const PointConfig& c);
std::string render_segment_config(const SegmentConfig& w);

// One frame per time sample of the scan alpha(w)(t).
std::string render_loop_frames(const SegmentConfig& w, const std::vector<Scalar>& times);

// Frames of the center-fattening deformation at the given times.
std::string render_retraction_frames(const SegmentConfig& w, const BaseSpace& base,
                                     const std::vector<Scalar>& times);

// Frames of the fiber deformation H_t applied to a path point.
std::string render_path_homotopy_frames(const PathPoint& p, const LabelSpace& labels,
                                        const std::vector<Scalar>& times);

}  // namespace confscan::svg
