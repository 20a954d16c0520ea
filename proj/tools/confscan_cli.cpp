// Command-line front end. Thin by construction: every subcommand is a
// direct call into the library (generators, pipeline, harness suites, SVG
// renderer). Exit codes: 0 success, 1 property failure, 2 usage or parse
// error, 3 domain error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "confscan/errors.hpp"
#include "confscan/harness.hpp"
#include "confscan/json_io.hpp"
#include "confscan/pipeline.hpp"
#include "confscan/svg.hpp"

namespace {

using confscan::Scalar;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct Options {
  std::uint64_t seed = 1;
  int trials = 200;
  int max_entries = 5;
  std::int64_t max_denominator = 64;
  std::string base_model = "line";
  std::string label_model = "interval";
  std::string format = "text";
  std::string out_path;
  std::string fault;
};

confscan::harness::TrialPlan plan_from(const Options& opt) {
  confscan::harness::TrialPlan plan;
  plan.seed = opt.seed;
  plan.trials = opt.trials;
  plan.max_entries = opt.max_entries;
  plan.max_denominator = opt.max_denominator;
  plan.base_model = opt.base_model;
  plan.label_model = opt.label_model;
  plan.fault = confscan::harness::fault_from_name(opt.fault);
  return plan;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw confscan::input_error("cannot write to '" + out_path + "'");
  out << text;
}

json read_input(const std::string& in_path) {
  json doc;
  try {
    if (in_path.empty() || in_path == "-") {
      std::cin >> doc;
    } else {
      std::ifstream in(in_path);
      if (!in) throw confscan::input_error("cannot open '" + in_path + "'");
      in >> doc;
    }
  } catch (const json::parse_error& e) {
    throw confscan::input_error(std::string("cannot parse input: ") + e.what());
  }
  return doc;
}

std::vector<Scalar> parse_times(const std::string& csv) {
  std::vector<Scalar> ts;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) ts.push_back(Scalar::parse(item));
  }
  if (ts.empty()) throw confscan::input_error("no times given");
  return ts;
}

int cmd_generate(const Options& opt, const std::string& kind, std::size_t dim) {
  confscan::harness::Generator gen(plan_from(opt), 0);
  json doc;
  if (kind == "point") {
    doc = confscan::io::encode(gen.point_config_over_rxy());
  } else if (kind == "suspension") {
    doc = confscan::io::encode(gen.suspension_config());
  } else if (kind == "segment") {
    doc = confscan::io::encode(gen.segment_config(true));
  } else if (kind == "box") {
    doc = confscan::io::encode(gen.box_config(dim));
  } else if (kind == "path") {
    doc = confscan::io::encode(gen.path_point());
  } else {
    throw confscan::input_error("unknown kind '" + kind +
                                "' (point|suspension|segment|box|path)");
  }
  write_output(opt.out_path, doc.dump(2) + "\n");
  return kExitOk;
}

int cmd_apply(const Options& opt, const std::string& pipeline_text,
              const std::string& in_path) {
  const auto pipeline = confscan::pipeline::Pipeline::parse(pipeline_text);
  json result;
  if (pipeline.input_kind() == confscan::pipeline::Kind::none)
    result = pipeline.run();
  else
    result = pipeline.run(read_input(in_path));
  write_output(opt.out_path, result.dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(const Options& opt, const std::string& suite) {
  const auto plan = plan_from(opt);
  std::vector<confscan::harness::AuditReport> reports;
  if (suite == "all") {
    reports = confscan::harness::run_all_suites(plan);
  } else if (suite == "equivalence") {
    reports.push_back(confscan::harness::run_equivalence_suite(plan));
  } else if (suite == "dold-thom") {
    reports.push_back(confscan::harness::run_quasifibration_audit(plan));
  } else if (suite == "loop") {
    reports.push_back(confscan::harness::run_loop_suite(plan));
  } else {
    throw confscan::input_error("unknown suite '" + suite +
                                "' (equivalence|dold-thom|loop|all)");
  }
  std::string text;
  if (opt.format == "json") {
    json doc = json::array();
    for (const auto& report : reports) doc.push_back(report.to_json());
    text = doc.dump(2) + "\n";
  } else {
    for (const auto& report : reports) text += report.to_text();
  }
  write_output(opt.out_path, text);
  const bool ok = std::ranges::all_of(
      reports, [](const confscan::harness::AuditReport& r) { return r.passed(); });
  return ok ? kExitOk : kExitPropertyFailure;
}

int cmd_render(const Options& opt, const std::string& mode, const std::string& in_path,
               const std::string& times_csv, const std::string& homotopy) {
  const json doc = read_input(in_path);
  std::string svg_text;
  if (mode == "config") {
    // accept either a segment configuration or a point configuration
    if (doc.is_array() && !doc.empty() && doc.front().contains("a"))
      svg_text = confscan::svg::render_segment_config(confscan::io::decode_segment_config(doc));
    else if (doc.is_array())
      svg_text = confscan::svg::render_point_config(confscan::io::decode_point_config(doc));
    else
      throw confscan::input_error("render config: expected a configuration array");
  } else if (mode == "loop") {
    svg_text = confscan::svg::render_loop_frames(confscan::io::decode_segment_config(doc),
                                                 parse_times(times_csv));
  } else if (mode == "homotopy") {
    if (homotopy == "retraction") {
      const auto w = confscan::io::decode_segment_config(doc);
      const auto space = w.empty() ? confscan::rational_line()
                                   : confscan::infer_base_space(w.entries().front().y);
      svg_text = confscan::svg::render_retraction_frames(w, *space, parse_times(times_csv));
    } else if (homotopy == "H") {
      const auto p = confscan::io::decode_path_point(doc);
      const auto labels = p.w().empty()
                              ? confscan::interval_label_space()
                              : confscan::infer_label_space(p.w().entries().front().x);
      svg_text =
          confscan::svg::render_path_homotopy_frames(p, *labels, parse_times(times_csv));
    } else {
      throw confscan::input_error("render homotopy: --kind must be retraction or H");
    }
  } else {
    throw confscan::input_error("unknown render mode '" + mode +
                                "' (config|loop|homotopy)");
  }
  write_output(opt.out_path, svg_text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact labeled configuration spaces, scanning maps and their audits"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand too

  Options opt;
  app.add_option("--seed", opt.seed, "generator seed");
  app.add_option("--trials", opt.trials, "trials per property");
  app.add_option("--max-j", opt.max_entries, "maximum configuration size");
  app.add_option("--max-den", opt.max_denominator, "maximum coordinate denominator");
  app.add_option("--base", opt.base_model, "base space model: line|discrete|product");
  app.add_option("--labels", opt.label_model, "label space model: interval|wedge");
  app.add_option("--format", opt.format, "report format: text|json");
  app.add_option("--out", opt.out_path, "output path (default stdout)");

  auto* generate = app.add_subcommand("generate", "emit a seeded random configuration");
  std::string gen_kind;
  std::size_t gen_dim = 2;
  generate->add_option("kind", gen_kind, "point|suspension|segment|box|path")->required();
  generate->add_option("--dim", gen_dim, "box dimension");

  auto* apply = app.add_subcommand("apply", "run a pipeline of named maps over JSON");
  std::string pipeline_text, in_path;
  apply->add_option("pipeline", pipeline_text, "e.g. 'shrink 0 1/2 | alpha_eval 1/2'")
      ->required();
  apply->add_option("--in", in_path, "input JSON path (default stdin)");

  auto* verify = app.add_subcommand("verify", "run a property suite");
  std::string suite;
  verify->add_option("suite", suite, "equivalence|dold-thom|loop|all")->required();
  verify->add_option("--inject-fault", opt.fault,
                     "fault fixture: phi-off-center|L1-breakpoint|lambda-offset");

  auto* render = app.add_subcommand("render", "emit a static SVG figure");
  std::string render_mode = "config", times_csv = "0,1/4,1/2,3/4,1", homotopy = "retraction";
  render->add_option("--mode", render_mode, "config|loop|homotopy");
  render->add_option("--in", in_path, "input JSON path (default stdin)");
  render->add_option("--times", times_csv, "comma-separated rational times");
  render->add_option("--kind", homotopy, "homotopy to draw: retraction|H");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(opt, gen_kind, gen_dim);
    if (apply->parsed()) return cmd_apply(opt, pipeline_text, in_path);
    if (verify->parsed()) return cmd_verify(opt, suite);
    if (render->parsed()) return cmd_render(opt, render_mode, in_path, times_csv, homotopy);
  } catch (const confscan::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const confscan::generation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const confscan::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
