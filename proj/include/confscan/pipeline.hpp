#pragma once

#include <nlohmann/json.hpp>

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace confscan::pipeline {

using json = nlohmann::json;

// Configuration kinds flowing between pipeline stages.
enum class Kind {
  none,          // stage needs no input (e.g. L_map)
  point,         // PointConfig
  segment,       // SegmentConfig
  box,           // BoxConfig
  path,          // PathPoint
  label,         // single config label
  scalar,        // Scalar
  boolean,       // bool
  integer,       // unsigned integer
  points_tuple,  // ordered tuple of base points
  labels_tuple,  // ordered tuple of labels
};

std::string kind_name(Kind k);

// Loads an auxiliary JSON document named by a stage argument (the second
// operand of union, mu, xi, psi, ...). The default implementation reads the
// named file from disk.
using DocumentLoader = std::function<json(const std::string&)>;
DocumentLoader file_loader();

// A parsed chain of named operations, e.g.
//   "shrink 0 1/2 | union other.json | alpha_eval 1/2".
// Stage names and signatures mirror the library functions. Adjacent stages
// are type-checked at parse time; mismatches raise input_error with the
// offending stage named. Running a pipeline decodes the input document,
// threads it through every stage, and encodes the result; domain failures
// surface as config_error tagged with the stage name.
class Pipeline {
 public:
  static Pipeline parse(const std::string& text, const DocumentLoader& loader = file_loader());

  Kind input_kind() const { return input_kind_; }
  Kind output_kind() const { return output_kind_; }
  json run(const json& input) const;
  // For Kind::none pipelines (no input document).
  json run() const;

  static std::vector<std::string> stage_names();

  struct Stage;

 private:
  Pipeline() = default;
  std::vector<std::shared_ptr<const Stage>> stages_;
  Kind input_kind_ = Kind::none;
  Kind output_kind_ = Kind::none;
};

}  // namespace confscan::pipeline
