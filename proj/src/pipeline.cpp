#include "confscan/pipeline.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <variant>

#include "confscan/errors.hpp"
#include "confscan/json_io.hpp"
#include "confscan/scanning.hpp"

namespace confscan::pipeline {

namespace {

using Payload = std::variant<std::monostate, PointConfig, SegmentConfig, BoxConfig,
                             PathPoint, Label, Scalar, bool, std::uint64_t,
                             std::vector<BasePoint>, std::vector<Label>>;

Kind kind_of(const Payload& v) { return static_cast<Kind>(v.index()); }

// Base space implied by the points of a configuration; Y is the part under
// the leading product coordinate for configurations over R x Y.
BaseSpacePtr space_for_tails(const PointConfig& c) {
  if (c.empty()) return rational_line();
  return infer_base_space(split_head(c.entries().front().y).second);
}

BaseSpacePtr space_for_segments(const SegmentConfig& w) {
  if (w.empty()) return rational_line();
  return infer_base_space(w.entries().front().y);
}

LabelSpacePtr labels_for(const XLabel& x) { return infer_label_space(x); }

LabelSpacePtr labels_for_segments(const SegmentConfig& w) {
  if (w.empty()) return interval_label_space();
  return labels_for(w.entries().front().x);
}

LabelSpacePtr labels_for_points(const PointConfig& c) {
  if (c.empty()) return interval_label_space();
  return labels_for(c.entries().front().label.x());
}

}  // namespace

struct Pipeline::Stage {
  std::string name;
  Kind in = Kind::none;
  Kind out = Kind::none;
  std::function<Payload(const Payload&)> apply;
};

namespace {

using StageBuilder =
    std::function<Pipeline::Stage(const std::vector<std::string>&, const DocumentLoader&)>;

void need_args(const std::vector<std::string>& args, std::size_t n, const char* name) {
  if (args.size() != n)
    throw input_error(std::string("stage '") + name + "': expected " +
                      std::to_string(n) + " argument(s), got " + std::to_string(args.size()));
}

Scalar arg_scalar(const std::vector<std::string>& args, std::size_t i) {
  return Scalar::parse(args.at(i));
}

const std::map<std::string, StageBuilder>& builders() {
  using Args = std::vector<std::string>;
  using Stage = Pipeline::Stage;
  static const std::map<std::string, StageBuilder> table = {
      {"normalize_point",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 0, "normalize_point");
         return Stage{"normalize_point", Kind::point, Kind::point,
                      [](const Payload& v) { return std::get<PointConfig>(v); }};
       }},
      {"normalize_segment",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 0, "normalize_segment");
         return Stage{"normalize_segment", Kind::segment, Kind::segment,
                      [](const Payload& v) { return std::get<SegmentConfig>(v); }};
       }},
      {"normalize_box",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 0, "normalize_box");
         return Stage{"normalize_box", Kind::box, Kind::box,
                      [](const Payload& v) { return std::get<BoxConfig>(v); }};
       }},
      {"filtration_level",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 0, "filtration_level");
         return Stage{"filtration_level", Kind::point, Kind::integer,
                      [](const Payload& v) -> Payload {
                        return static_cast<std::uint64_t>(
                            filtration_level(std::get<PointConfig>(v)));
                      }};
       }},
      {"union",
       [](const Args& a, const DocumentLoader& load) {
         need_args(a, 1, "union");
         SegmentConfig other = io::decode_segment_config(load(a[0]));
         return Stage{"union", Kind::segment, Kind::segment,
                      [other](const Payload& v) -> Payload {
                        return union_configs(std::get<SegmentConfig>(v), other);
                      }};
       }},
      {"shrink",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 2, "shrink");
         Scalar s = arg_scalar(a, 0), t = arg_scalar(a, 1);
         return Stage{"shrink", Kind::segment, Kind::segment,
                      [s, t](const Payload& v) -> Payload {
                        return shrink(s, t, std::get<SegmentConfig>(v));
                      }};
       }},
      {"mu",
       [](const Args& a, const DocumentLoader& load) {
         need_args(a, 1, "mu");
         SegmentConfig other = io::decode_segment_config(load(a[0]));
         return Stage{"mu", Kind::segment, Kind::segment,
                      [other](const Payload& v) -> Payload {
                        return mu(std::get<SegmentConfig>(v), other);
                      }};
       }},
      {"below",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 1, "below");
         Scalar s = arg_scalar(a, 0);
         return Stage{"below", Kind::segment, Kind::segment,
                      [s](const Payload& v) -> Payload {
                        return below(s, std::get<SegmentConfig>(v));
                      }};
       }},
      {"phi",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 0, "phi");
         return Stage{"phi", Kind::segment, Kind::point,
                      [](const Payload& v) -> Payload {
                        return phi(std::get<SegmentConfig>(v));
                      }};
       }},
      {"phi_n",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 0, "phi_n");
         return Stage{"phi_n", Kind::box, Kind::point,
                      [](const Payload& v) -> Payload {
                        return phi_n(std::get<BoxConfig>(v));
                      }};
       }},
      {"separation",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 0, "separation");
         return Stage{"separation", Kind::point, Kind::scalar,
                      [](const Payload& v) -> Payload {
                        const PointConfig& kappa = std::get<PointConfig>(v);
                        return separation(kappa, *space_for_tails(kappa));
                      }};
       }},
      {"phi_bar",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 0, "phi_bar");
         return Stage{"phi_bar", Kind::point, Kind::segment,
                      [](const Payload& v) -> Payload {
                        const PointConfig& kappa = std::get<PointConfig>(v);
                        return phi_bar(kappa, *space_for_tails(kappa));
                      }};
       }},
      {"retraction_homotopy",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 1, "retraction_homotopy");
         Scalar t = arg_scalar(a, 0);
         return Stage{"retraction_homotopy", Kind::segment, Kind::segment,
                      [t](const Payload& v) -> Payload {
                        const SegmentConfig& w = std::get<SegmentConfig>(v);
                        return retraction_homotopy(t, w, *space_for_segments(w));
                      }};
       }},
      {"rescale_to_unit",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 0, "rescale_to_unit");
         return Stage{"rescale_to_unit", Kind::segment, Kind::segment,
                      [](const Payload& v) -> Payload {
                        return rescale_to_unit(std::get<SegmentConfig>(v));
                      }};
       }},
      {"rescale_from_unit",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 0, "rescale_from_unit");
         return Stage{"rescale_from_unit", Kind::segment, Kind::segment,
                      [](const Payload& v) -> Payload {
                        return rescale_from_unit(std::get<SegmentConfig>(v));
                      }};
       }},
      {"alpha_eval",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 1, "alpha_eval");
         Scalar t = arg_scalar(a, 0);
         return Stage{"alpha_eval", Kind::segment, Kind::point,
                      [t](const Payload& v) -> Payload {
                        return alpha_eval(std::get<SegmentConfig>(v), t);
                      }};
       }},
      {"alpha_n_eval",
       [](const Args& a, const DocumentLoader&) {
         if (a.empty())
           throw input_error("stage 'alpha_n_eval': expected n time arguments");
         std::vector<Scalar> ts;
         for (std::size_t i = 0; i < a.size(); ++i) ts.push_back(arg_scalar(a, i));
         return Stage{"alpha_n_eval", Kind::box, Kind::point,
                      [ts](const Payload& v) -> Payload {
                        return alpha_n_eval(std::get<BoxConfig>(v), ts);
                      }};
       }},
      {"lambda_section",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 0, "lambda_section");
         return Stage{"lambda_section", Kind::point, Kind::segment,
                      [](const Payload& v) -> Payload {
                        return lambda_section(std::get<PointConfig>(v));
                      }};
       }},
      {"alpha_bar_eval",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 1, "alpha_bar_eval");
         Scalar t = arg_scalar(a, 0);
         return Stage{"alpha_bar_eval", Kind::path, Kind::point,
                      [t](const Payload& v) -> Payload {
                        return alpha_bar_eval(std::get<PathPoint>(v), t);
                      }};
       }},
      {"q_eval",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 0, "q_eval");
         return Stage{"q_eval", Kind::path, Kind::point,
                      [](const Payload& v) -> Payload {
                        return q_eval(std::get<PathPoint>(v));
                      }};
       }},
      {"psi",
       [](const Args& a, const DocumentLoader& load) {
         need_args(a, 1, "psi");
         PointConfig z = io::decode_point_config(load(a[0]));
         return Stage{"psi", Kind::segment, Kind::path,
                      [z](const Payload& v) -> Payload {
                        return psi(std::get<SegmentConfig>(v), z);
                      }};
       }},
      {"psi_bar",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 0, "psi_bar");
         return Stage{"psi_bar", Kind::path, Kind::segment,
                      [](const Payload& v) -> Payload {
                        return psi_bar(std::get<PathPoint>(v));
                      }};
       }},
      {"fiber_retraction_homotopy",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 1, "fiber_retraction_homotopy");
         Scalar t = arg_scalar(a, 0);
         return Stage{"fiber_retraction_homotopy", Kind::path, Kind::path,
                      [t](const Payload& v) -> Payload {
                        const PathPoint& p = std::get<PathPoint>(v);
                        return fiber_retraction_homotopy(t, p, q_eval(p));
                      }};
       }},
      {"L_map",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 2, "L_map");
         Scalar t = arg_scalar(a, 0), u = arg_scalar(a, 1);
         return Stage{"L_map", Kind::none, Kind::scalar,
                      [t, u](const Payload&) -> Payload { return L_map(t, u); }};
       }},
      {"J_map",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 1, "J_map");
         Scalar t = arg_scalar(a, 0);
         return Stage{"J_map", Kind::label, Kind::label,
                      [t](const Payload& v) -> Payload {
                        const Label& l = std::get<Label>(v);
                        const LabelSpacePtr space = l.is_basepoint()
                                                        ? interval_label_space()
                                                        : labels_for(l.x());
                        return J_map(t, l, *space);
                      }};
       }},
      {"in_U",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 0, "in_U");
         return Stage{"in_U", Kind::point, Kind::boolean,
                      [](const Payload& v) -> Payload {
                        const PointConfig& z = std::get<PointConfig>(v);
                        return in_U(z, *labels_for_points(z));
                      }};
       }},
      {"h_map",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 1, "h_map");
         Scalar t = arg_scalar(a, 0);
         return Stage{"h_map", Kind::point, Kind::point,
                      [t](const Payload& v) -> Payload {
                        const PointConfig& z = std::get<PointConfig>(v);
                        return h_map(t, z, *labels_for_points(z));
                      }};
       }},
      {"H_map",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 1, "H_map");
         Scalar t = arg_scalar(a, 0);
         return Stage{"H_map", Kind::path, Kind::path,
                      [t](const Payload& v) -> Payload {
                        const PathPoint& p = std::get<PathPoint>(v);
                        return H_map(t, p, *labels_for_segments(p.w()));
                      }};
       }},
      {"xi_element",
       [](const Args& a, const DocumentLoader&) {
         need_args(a, 1, "xi_element");
         Scalar s = arg_scalar(a, 0);
         return Stage{"xi_element", Kind::segment, Kind::segment,
                      [s](const Payload& v) -> Payload {
                        const SegmentConfig& w = std::get<SegmentConfig>(v);
                        return xi_element(w, s, *labels_for_segments(w));
                      }};
       }},
      {"xi",
       [](const Args& a, const DocumentLoader& load) {
         need_args(a, 1, "xi");
         SegmentConfig element = io::decode_segment_config(load(a[0]));
         return Stage{"xi", Kind::segment, Kind::segment,
                      [element](const Payload& v) -> Payload {
                        return xi(std::get<SegmentConfig>(v), element);
                      }};
       }},
      {"pullback",
       [](const Args& a, const DocumentLoader& load) {
         need_args(a, 1, "pullback");
         Injection nu = io::decode_injection(load(a[0]));
         return Stage{"pullback", Kind::points_tuple, Kind::points_tuple,
                      [nu](const Payload& v) -> Payload {
                        return pullback(nu, std::get<std::vector<BasePoint>>(v));
                      }};
       }},
      {"pushforward",
       [](const Args& a, const DocumentLoader& load) {
         need_args(a, 2, "pushforward");
         Injection nu = io::decode_injection(load(a[0]));
         std::size_t j = 0;
         try {
           std::size_t consumed = 0;
           j = std::stoul(a[1], &consumed);
           if (consumed != a[1].size()) throw std::invalid_argument(a[1]);
         } catch (const std::exception&) {
           throw input_error("stage 'pushforward': bad codomain size '" + a[1] + "'");
         }
         return Stage{"pushforward", Kind::labels_tuple, Kind::labels_tuple,
                      [nu, j](const Payload& v) -> Payload {
                        return pushforward(nu, std::get<std::vector<Label>>(v), j,
                                           Label::base());
                      }};
       }},
  };
  return table;
}

Payload decode_input(Kind kind, const json& input) {
  switch (kind) {
    case Kind::none: return std::monostate{};
    case Kind::point: return io::decode_point_config(input);
    case Kind::segment: return io::decode_segment_config(input);
    case Kind::box: return io::decode_box_config(input);
    case Kind::path: return io::decode_path_point(input);
    case Kind::label: return io::decode_label(input);
    case Kind::scalar: return io::decode_scalar(input);
    case Kind::points_tuple: {
      if (!input.is_array()) throw input_error("pipeline: expected an array of base points");
      std::vector<BasePoint> ys;
      for (const json& y : input) ys.push_back(io::decode_base_point(y));
      return ys;
    }
    case Kind::labels_tuple: {
      if (!input.is_array()) throw input_error("pipeline: expected an array of labels");
      std::vector<Label> ls;
      for (const json& l : input) ls.push_back(io::decode_label(l));
      return ls;
    }
    default: throw input_error("pipeline: kind cannot be decoded");
  }
}

json encode_output(const Payload& value) {
  switch (kind_of(value)) {
    case Kind::none: return nullptr;
    case Kind::point: return io::encode(std::get<PointConfig>(value));
    case Kind::segment: return io::encode(std::get<SegmentConfig>(value));
    case Kind::box: return io::encode(std::get<BoxConfig>(value));
    case Kind::path: return io::encode(std::get<PathPoint>(value));
    case Kind::label: return io::encode(std::get<Label>(value));
    case Kind::scalar: return io::encode(std::get<Scalar>(value));
    case Kind::boolean: return std::get<bool>(value);
    case Kind::integer: return std::get<std::uint64_t>(value);
    case Kind::points_tuple: {
      json out = json::array();
      for (const BasePoint& y : std::get<std::vector<BasePoint>>(value))
        out.push_back(io::encode(y));
      return out;
    }
    case Kind::labels_tuple: {
      json out = json::array();
      for (const Label& l : std::get<std::vector<Label>>(value)) out.push_back(io::encode(l));
      return out;
    }
  }
  return nullptr;
}

}  // namespace

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::none: return "none";
    case Kind::point: return "point-config";
    case Kind::segment: return "segment-config";
    case Kind::box: return "box-config";
    case Kind::path: return "path-point";
    case Kind::label: return "label";
    case Kind::scalar: return "scalar";
    case Kind::boolean: return "bool";
    case Kind::integer: return "integer";
    case Kind::points_tuple: return "base-point-tuple";
    case Kind::labels_tuple: return "label-tuple";
  }
  return "?";
}

DocumentLoader file_loader() {
  return [](const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open auxiliary document '" + path + "'");
    json doc;
    try {
      in >> doc;
    } catch (const json::parse_error& e) {
      throw input_error("cannot parse '" + path + "': " + e.what());
    }
    return doc;
  };
}

Pipeline Pipeline::parse(const std::string& text, const DocumentLoader& loader) {
  Pipeline p;
  std::stringstream chain(text);
  std::string stage_text;
  while (std::getline(chain, stage_text, '|')) {
    std::istringstream words(stage_text);
    std::vector<std::string> tokens;
    std::string word;
    while (words >> word) tokens.push_back(word);
    if (tokens.empty()) continue;
    const auto it = builders().find(tokens.front());
    if (it == builders().end())
      throw input_error("unknown pipeline stage '" + tokens.front() + "'");
    std::vector<std::string> args(tokens.begin() + 1, tokens.end());
    auto stage = std::make_shared<Stage>(it->second(args, loader));
    if (p.stages_.empty()) {
      p.input_kind_ = stage->in;
    } else if (p.stages_.back()->out != stage->in) {
      throw input_error("stage '" + stage->name + "' expects " + kind_name(stage->in) +
                        " but the previous stage yields " +
                        kind_name(p.stages_.back()->out));
    }
    p.output_kind_ = stage->out;
    p.stages_.push_back(std::move(stage));
  }
  if (p.stages_.empty()) throw input_error("empty pipeline");
  return p;
}

json Pipeline::run(const json& input) const {
  Payload value = decode_input(input_kind_, input);
  for (const auto& stage : stages_) {
    try {
      value = stage->apply(value);
    } catch (const config_error& e) {
      throw config_error("stage '" + stage->name + "': " + e.what());
    } catch (const input_error& e) {
      throw input_error("stage '" + stage->name + "': " + e.what());
    }
  }
  return encode_output(value);
}

json Pipeline::run() const { return run(json()); }

std::vector<std::string> Pipeline::stage_names() {
  std::vector<std::string> names;
  for (const auto& [name, builder] : builders()) names.push_back(name);
  return names;
}

}  // namespace confscan::pipeline
