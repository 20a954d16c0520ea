#include "confscan/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace confscan::svg {

namespace {

constexpr double kFrameWidth = 480.0;
constexpr double kFrameHeight = 160.0;
constexpr double kMarginX = 40.0;
constexpr double kMarginY = 24.0;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::vector<BasePoint> track_order(std::vector<BasePoint> ys) {
  std::ranges::sort(ys, [](const BasePoint& a, const BasePoint& b) { return a < b; });
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  return ys;
}

std::size_t track_of(const std::vector<BasePoint>& tracks, const BasePoint& y) {
  return static_cast<std::size_t>(
      std::ranges::find(tracks, y) - tracks.begin());
}

struct Frame {
  std::string caption;
  // rectangles: (x0, x1, track); circles: (x, track)
  std::vector<std::tuple<double, double, std::size_t>> rects;
  std::vector<std::pair<double, std::size_t>> dots;
};

// time coordinate of a configuration point for drawing purposes
double point_coordinate(const PointEntry& e) {
  if (!e.y.coords.empty()) return e.y.coords.front().approx();
  if (!e.label.is_basepoint() && e.label.degree() >= 1)
    return e.label.params()[0].approx();
  return 0.5;
}

std::string emit(const std::vector<Frame>& frames, std::size_t track_count,
                 double x_lo, double x_hi) {
  if (x_hi <= x_lo) {  // single point or empty: widen around the value
    x_lo -= 0.5;
    x_hi += 0.5;
  }
  const double pad = 0.05 * (x_hi - x_lo);
  x_lo -= pad;
  x_hi += pad;
  const double usable_w = kFrameWidth - 2 * kMarginX;
  const double usable_h = kFrameHeight - 2 * kMarginY;
  const double total_h = kFrameHeight * static_cast<double>(frames.size());
  const auto sx = [&](double v) {
    return kMarginX + usable_w * (v - x_lo) / (x_hi - x_lo);
  };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kFrameWidth)
      << "\" height=\"" << fmt(total_h) << "\" viewBox=\"0 0 " << fmt(kFrameWidth)
      << " " << fmt(total_h) << "\">\n";
  for (std::size_t f = 0; f < frames.size(); ++f) {
    const double oy = kFrameHeight * static_cast<double>(f);
    const auto sy = [&](std::size_t track) {
      if (track_count <= 1) return oy + kMarginY + usable_h / 2;
      return oy + kMarginY + usable_h -
             usable_h * static_cast<double>(track) / static_cast<double>(track_count - 1);
    };
    out << "  <g>\n";
    // axes
    out << "    <line x1=\"" << fmt(kMarginX) << "\" y1=\"" << fmt(oy + kFrameHeight - kMarginY)
        << "\" x2=\"" << fmt(kFrameWidth - kMarginX) << "\" y2=\""
        << fmt(oy + kFrameHeight - kMarginY) << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
    out << "    <line x1=\"" << fmt(kMarginX) << "\" y1=\"" << fmt(oy + kMarginY)
        << "\" x2=\"" << fmt(kMarginX) << "\" y2=\"" << fmt(oy + kFrameHeight - kMarginY)
        << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
    if (!frames[f].caption.empty())
      out << "    <text x=\"" << fmt(kMarginX) << "\" y=\"" << fmt(oy + kMarginY - 8)
          << "\" font-size=\"11\" font-family=\"monospace\">" << frames[f].caption
          << "</text>\n";
    for (const auto& [x0, x1, track] : frames[f].rects) {
      const double y = sy(track);
      out << "    <rect x=\"" << fmt(sx(x0)) << "\" y=\"" << fmt(y - 5) << "\" width=\""
          << fmt(sx(x1) - sx(x0)) << "\" height=\"10\" fill=\"#4878a8\" fill-opacity=\"0.7\""
          << " stroke=\"#1c3c5c\" stroke-width=\"1\"/>\n";
    }
    for (const auto& [x, track] : frames[f].dots) {
      out << "    <circle cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(track))
          << "\" r=\"4\" fill=\"#a84848\" stroke=\"#5c1c1c\" stroke-width=\"1\"/>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

Frame frame_of_segments(const SegmentConfig& w, const std::vector<BasePoint>& tracks,
                        std::string caption) {
  Frame fr;
  fr.caption = std::move(caption);
  for (const SegmentEntry& e : w.entries())
    fr.rects.emplace_back(e.a.approx(), e.b.approx(), track_of(tracks, e.y));
  return fr;
}

Frame frame_of_points(const PointConfig& c, const std::vector<BasePoint>& tracks,
                      std::string caption) {
  Frame fr;
  fr.caption = std::move(caption);
  for (const PointEntry& e : c.entries()) {
    BasePoint track_key = e.y;
    if (!e.y.coords.empty()) track_key = split_head(e.y).second;
    fr.dots.emplace_back(point_coordinate(e), track_of(tracks, track_key));
  }
  return fr;
}

}  // namespace

std::string render_point_config(const PointConfig& c) {
  std::vector<BasePoint> ys;
  double lo = 0.0, hi = 1.0;
  bool first = true;
  for (const PointEntry& e : c.entries()) {
    ys.push_back(e.y.coords.empty() ? e.y : split_head(e.y).second);
    const double x = point_coordinate(e);
    if (first || x < lo) lo = first ? x : std::min(lo, x);
    if (first || x > hi) hi = first ? x : std::max(hi, x);
    first = false;
  }
  const std::vector<BasePoint> tracks = track_order(std::move(ys));
  return emit({frame_of_points(c, tracks, "")}, std::max<std::size_t>(tracks.size(), 1),
              lo, hi);
}

std::string render_segment_config(const SegmentConfig& w) {
  std::vector<BasePoint> ys;
  double lo = 0.0, hi = 1.0;
  bool first = true;
  for (const SegmentEntry& e : w.entries()) {
    ys.push_back(e.y);
    if (first) {
      lo = e.a.approx();
      hi = e.b.approx();
      first = false;
    } else {
      lo = std::min(lo, e.a.approx());
      hi = std::max(hi, e.b.approx());
    }
  }
  const std::vector<BasePoint> tracks = track_order(std::move(ys));
  return emit({frame_of_segments(w, tracks, "")}, std::max<std::size_t>(tracks.size(), 1),
              lo, hi);
}

std::string render_loop_frames(const SegmentConfig& w, const std::vector<Scalar>& times) {
  std::vector<BasePoint> ys;
  for (const SegmentEntry& e : w.entries()) ys.push_back(e.y);
  const std::vector<BasePoint> tracks = track_order(std::move(ys));
  std::vector<Frame> frames;
  for (const Scalar& t : times)
    frames.push_back(frame_of_points(alpha_eval(w, t), tracks, "t = " + t.str()));
  return emit(frames, std::max<std::size_t>(tracks.size(), 1), 0.0, 1.0);
}

std::string render_retraction_frames(const SegmentConfig& w, const BaseSpace& base,
                                     const std::vector<Scalar>& times) {
  std::vector<BasePoint> ys;
  double lo = 0.0, hi = 1.0;
  bool first = true;
  for (const SegmentEntry& e : w.entries()) {
    ys.push_back(e.y);
    if (first) {
      lo = e.a.approx();
      hi = e.b.approx();
      first = false;
    } else {
      lo = std::min(lo, e.a.approx());
      hi = std::max(hi, e.b.approx());
    }
  }
  const std::vector<BasePoint> tracks = track_order(std::move(ys));
  std::vector<Frame> frames;
  for (const Scalar& t : times)
    frames.push_back(frame_of_segments(retraction_homotopy(t, w, base), tracks,
                                       "t = " + t.str()));
  return emit(frames, std::max<std::size_t>(tracks.size(), 1), lo - 1.0, hi + 1.0);
}

std::string render_path_homotopy_frames(const PathPoint& p, const LabelSpace& labels,
                                        const std::vector<Scalar>& times) {
  std::vector<BasePoint> ys;
  for (const SegmentEntry& e : p.w().entries()) ys.push_back(e.y);
  const std::vector<BasePoint> tracks = track_order(std::move(ys));
  std::vector<Frame> frames;
  for (const Scalar& t : times) {
    const PathPoint pt = H_map(t, p, labels);
    frames.push_back(frame_of_segments(pt.w(), tracks,
                                       "t = " + t.str() + ", s = " + pt.s().str()));
  }
  return emit(frames, std::max<std::size_t>(tracks.size(), 1), 0.0, 1.0);
}

}  // namespace confscan::svg
