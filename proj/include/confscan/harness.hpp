#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "confscan/configs.hpp"
#include "confscan/scanning.hpp"

// Property harness: seeded random verification of every identity,
// containment and deformation the library promises, with replayable JSON
// counterexamples. Homotopy-equivalence claims are audited only through
// their exactly checkable consequences; every report says so in its header.
namespace confscan::harness {

using json = nlohmann::json;

// Deterministic across platforms: mt19937_64 is fully specified and all
// derived draws use rejection sampling, never distribution objects.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n);                  // uniform in [0, n)
  std::int64_t range(std::int64_t lo, std::int64_t hi);  // uniform in [lo, hi]
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

// Deliberately broken map variants; each documented fixture makes its
// targeted suite fail, proving the suite can detect a wrong implementation.
//   phi_off_center   centers read at the 1/3 point     -> equivalence
//   l1_breakpoint    circle collapse threshold 1/3     -> dold-thom (2b)
//   lambda_offset    section anchored at 1/3           -> loop
enum class Fault { none, phi_off_center, l1_breakpoint, lambda_offset };

Fault fault_from_name(const std::string& name);  // input_error on unknown
std::string fault_name(Fault fault);

struct TrialPlan {
  std::uint64_t seed = 1;
  int trials = 200;
  int max_entries = 5;                  // configuration size bound j
  std::int64_t max_denominator = 64;    // coordinate denominator bound
  int extra_times = 4;                  // random time samples per trial
  std::string base_model = "line";      // line | discrete | product
  std::string label_model = "interval"; // interval | wedge
  Fault fault = Fault::none;

  // The fixed sample grid {0, 1/4, 1/2, 3/4, 1}; properties extend it with
  // random and breakpoint-derived times per trial.
  static const std::vector<Scalar>& mandatory_times();

  BaseSpacePtr base_space() const;    // the model for Y
  LabelSpacePtr label_space() const;  // the model for X
  json to_json() const;
};

// Seeded structure generators. All outputs satisfy their type invariants by
// construction; unsatisfiable bounds (e.g. more distinct points than a
// discrete base space carries) raise generation_error.
class Generator {
 public:
  Generator(const TrialPlan& plan, std::uint64_t salt);

  Rng& rng() { return rng_; }
  const TrialPlan& plan() const { return plan_; }

  Scalar rational_between(std::int64_t lo, std::int64_t hi);  // in [lo, hi]
  Scalar unit_open();    // in (0,1)
  Scalar unit_closed();  // in [0,1]
  std::vector<Scalar> distinct_sorted(int count, bool unit);

  BasePoint base_point();
  std::vector<BasePoint> distinct_base_points(int count);
  XLabel xlabel();  // never the basepoint
  Label suspension_label();

  PointConfig point_config();           // degree-0 labels over Y
  PointConfig point_config_over_rxy();  // degree-0 labels over R x Y
  PointConfig suspension_config();      // degree-1 labels over Y
  PointConfig suspension_config_near_basepoint();  // biased toward U
  SegmentConfig segment_config(bool unit_interval);
  BoxConfig box_config(std::size_t dim);
  PathPoint path_point();

  // <= max_count segments starting at or after s, over base points fresh to
  // w; the combined raw list is still a valid configuration.
  std::vector<SegmentEntry> junk_segments(const SegmentConfig& w, const Scalar& s,
                                          int max_count);

 private:
  TrialPlan plan_;
  Rng rng_;
};

struct PropertyReport {
  std::string name;
  int trials = 0;
  int applicable = 0;  // trials whose hypothesis held
  int failures = 0;
  std::optional<json> counterexample;  // inputs of the first failure

  bool passed() const { return failures == 0; }
};

struct AuditReport {
  std::string suite;
  TrialPlan plan;
  std::vector<PropertyReport> properties;

  bool passed() const;
  json to_json() const;
  std::string to_text() const;
};

AuditReport run_equivalence_suite(const TrialPlan& plan);
AuditReport run_quasifibration_audit(const TrialPlan& plan);
AuditReport run_loop_suite(const TrialPlan& plan);
std::vector<AuditReport> run_all_suites(const TrialPlan& plan);

// Re-run one property on recorded inputs. Returns true when the property
// holds on them; a genuine witness therefore returns false. Unknown
// suite/property names raise input_error.
bool replay_witness(const std::string& suite, const std::string& property,
                    const json& inputs, const TrialPlan& plan);

std::vector<std::string> property_names(const std::string& suite);

}  // namespace confscan::harness
