#include "confscan/json_io.hpp"

#include <nlohmann/json.hpp>

#include "confscan/errors.hpp"

namespace confscan::io {

namespace {

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw input_error(std::string("json: missing field '") + key + "'");
  return *it;
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw input_error(std::string("json: field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

json encode(const Scalar& s) {
  return json{{"num", s.num_string()}, {"den", s.den_string()}};
}

Scalar decode_scalar(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
  if (!j.is_object()) throw input_error("json: scalar must be an object, string or integer");
  return Scalar::from_strings(string_field(j, "num"), string_field(j, "den"));
}

json encode(const BasePoint& p) {
  json atom;
  if (p.core.index() == 0)
    atom = json{{"model", "line"}, {"value", encode(std::get<0>(p.core))}};
  else
    atom = json{{"model", "discrete"}, {"id", std::get<1>(p.core)}};
  if (p.coords.empty()) return atom;
  json coords = json::array();
  for (const Scalar& c : p.coords) coords.push_back(encode(c));
  return json{{"model", "product"}, {"coords", std::move(coords)}, {"point", std::move(atom)}};
}

BasePoint decode_base_point(const json& j) {
  if (!j.is_object()) throw input_error("json: base point must be an object");
  const std::string model = string_field(j, "model");
  if (model == "line") return BasePoint::line(decode_scalar(field(j, "value")));
  if (model == "discrete") {
    const json& id = field(j, "id");
    if (!id.is_number_integer()) throw input_error("json: discrete id must be an integer");
    return BasePoint::discrete(id.get<std::int64_t>());
  }
  if (model == "product") {
    BasePoint inner = decode_base_point(field(j, "point"));
    const json& coords = field(j, "coords");
    if (!coords.is_array() || coords.empty())
      throw input_error("json: product coords must be a nonempty array");
    BasePoint p;
    for (const json& c : coords) p.coords.push_back(decode_scalar(c));
    p.coords.insert(p.coords.end(), inner.coords.begin(), inner.coords.end());
    p.core = inner.core;
    return p;
  }
  throw input_error("json: unknown base point model '" + model + "'");
}

json encode(const XLabel& x) {
  if (x.model == XLabel::Model::interval)
    return json{{"model", "interval"}, {"value", encode(x.value)}};
  return json{{"model", "wedge"}, {"arm", x.arm}, {"pos", encode(x.value)}};
}

XLabel decode_xlabel(const json& j) {
  if (!j.is_object()) throw input_error("json: label must be an object");
  const std::string model = string_field(j, "model");
  if (model == "interval") return XLabel::interval(decode_scalar(field(j, "value")));
  if (model == "wedge") {
    const json& arm = field(j, "arm");
    if (!arm.is_number_integer()) throw input_error("json: wedge arm must be an integer");
    return XLabel::wedge(arm.get<std::int64_t>(), decode_scalar(field(j, "pos")));
  }
  throw input_error("json: unknown label model '" + model + "'");
}

json encode(const Label& l) {
  if (l.is_basepoint()) return json{{"model", "basepoint"}};
  if (l.degree() == 0) return json{{"model", "plain"}, {"x", encode(l.x())}};
  json params = json::array();
  for (const Scalar& s : l.params()) params.push_back(encode(s));
  return json{{"model", "suspension"}, {"x", encode(l.x())}, {"s", std::move(params)}};
}

Label decode_label(const json& j) {
  if (!j.is_object()) throw input_error("json: config label must be an object");
  const std::string model = string_field(j, "model");
  if (model == "basepoint") return Label::base();
  if (model == "plain") return Label::plain(decode_xlabel(field(j, "x")));
  if (model == "suspension") {
    const json& params = field(j, "s");
    if (!params.is_array()) throw input_error("json: suspension parameters must be an array");
    std::vector<Scalar> s;
    for (const json& p : params) s.push_back(decode_scalar(p));
    return Label::suspended(decode_xlabel(field(j, "x")), std::move(s));
  }
  throw input_error("json: unknown config label model '" + model + "'");
}

json encode(const PointConfig& c) {
  json out = json::array();
  for (const PointEntry& e : c.entries())
    out.push_back(json{{"y", encode(e.y)}, {"label", encode(e.label)}});
  return out;
}

PointConfig decode_point_config(const json& j) {
  if (!j.is_array()) throw input_error("json: point config must be an array");
  std::vector<PointEntry> raw;
  for (const json& e : j)
    raw.push_back({decode_base_point(field(e, "y")), decode_label(field(e, "label"))});
  return PointConfig::normalized(std::move(raw));
}

json encode(const SegmentConfig& w) {
  json out = json::array();
  for (const SegmentEntry& e : w.entries())
    out.push_back(json{{"a", encode(e.a)},
                       {"b", encode(e.b)},
                       {"y", encode(e.y)},
                       {"x", encode(e.x)}});
  return out;
}

std::vector<SegmentEntry> decode_segment_entries(const json& j) {
  if (!j.is_array()) throw input_error("json: segment config must be an array");
  std::vector<SegmentEntry> raw;
  for (const json& e : j) {
    if (!e.is_object()) throw input_error("json: segment entry must be an object");
    raw.push_back({decode_scalar(field(e, "a")), decode_scalar(field(e, "b")),
                   decode_base_point(field(e, "y")), decode_xlabel(field(e, "x"))});
  }
  return raw;
}

SegmentConfig decode_segment_config(const json& j) {
  return SegmentConfig::normalized(decode_segment_entries(j));
}

json encode(const BoxConfig& w) {
  json entries = json::array();
  for (const BoxEntry& e : w.entries()) {
    json box = json::array();
    for (std::size_t m = 0; m < w.dim(); ++m)
      box.push_back(json::array({encode(e.lo[m]), encode(e.hi[m])}));
    entries.push_back(json{{"box", std::move(box)}, {"y", encode(e.y)}, {"x", encode(e.x)}});
  }
  return json{{"dim", w.dim()}, {"entries", std::move(entries)}};
}

BoxConfig decode_box_config(const json& j) {
  if (!j.is_object()) throw input_error("json: box config must be an object");
  const json& dim = field(j, "dim");
  if (!dim.is_number_unsigned()) throw input_error("json: box dim must be a positive integer");
  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw input_error("json: box entries must be an array");
  std::vector<BoxEntry> raw;
  for (const json& e : entries) {
    const json& box = field(e, "box");
    if (!box.is_array()) throw input_error("json: box must be an array of [lo,hi] pairs");
    BoxEntry entry;
    for (const json& side : box) {
      if (!side.is_array() || side.size() != 2)
        throw input_error("json: box side must be a [lo,hi] pair");
      entry.lo.push_back(decode_scalar(side[0]));
      entry.hi.push_back(decode_scalar(side[1]));
    }
    entry.y = decode_base_point(field(e, "y"));
    entry.x = decode_xlabel(field(e, "x"));
    raw.push_back(std::move(entry));
  }
  return BoxConfig::normalized(dim.get<std::size_t>(), std::move(raw));
}

json encode(const PathPoint& p) {
  return json{{"w", encode(p.w())}, {"s", encode(p.s())}};
}

PathPoint decode_path_point(const json& j) {
  if (!j.is_object()) throw input_error("json: path point must be an object");
  return PathPoint::normalized(decode_segment_config(field(j, "w")),
                               decode_scalar(field(j, "s")));
}

json encode(const Injection& nu) {
  return json{{"image", nu.image()}};
}

Injection decode_injection(const json& j) {
  if (!j.is_object()) throw input_error("json: injection must be an object");
  const json& image = field(j, "image");
  if (!image.is_array()) throw input_error("json: injection image must be an array");
  std::vector<std::size_t> values;
  for (const json& v : image) {
    if (!v.is_number_unsigned()) throw input_error("json: injection image entries must be nonnegative integers");
    values.push_back(v.get<std::size_t>());
  }
  return Injection(std::move(values));
}

}  // namespace confscan::io
