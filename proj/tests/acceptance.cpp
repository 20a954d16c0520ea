// Acceptance suite: every release criterion as an executable check, one
// PASS/FAIL line each. All comparisons are exact; a criterion passes only
// with zero failures over its full trial budget (desk scale: configurations
// of at most 8 entries, coordinate denominators up to 2^16).

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "confscan/harness.hpp"
#include "confscan/json_io.hpp"
#include "confscan/scanning.hpp"

using namespace confscan;
namespace hn = confscan::harness;

namespace {

int g_failed_criteria = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s  %2d %s (%s)\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
  if (!ok) ++g_failed_criteria;
}

hn::TrialPlan desk_plan(std::uint64_t seed, const std::string& base = "line",
                        const std::string& labels = "interval") {
  hn::TrialPlan plan;
  plan.seed = seed;
  plan.trials = 500;
  plan.max_entries = 8;
  plan.max_denominator = 65536;
  plan.base_model = base;
  plan.label_model = labels;
  return plan;
}

std::vector<Scalar> breakpoint_grid(const PathPoint& p, hn::Generator& gen, int extra) {
  std::vector<Scalar> ts = hn::TrialPlan::mandatory_times();
  ts.push_back(Scalar(1, 8));
  for (int i = 0; i < extra; ++i) ts.push_back(gen.unit_closed());
  for (const SegmentEntry& e : p.w().entries()) {
    if (!(e.a <= p.s() && p.s() <= e.b)) continue;
    const Scalar sigma = (p.s() - e.a) / (e.b - e.a);
    for (const Scalar& t : {Scalar(4) * sigma, Scalar(4) * (Scalar(1) - sigma)})
      if (t >= Scalar(0) && t <= Scalar(1)) ts.push_back(t);
  }
  return ts;
}

// 1. phi o phi_bar is the identity, per base-space model.
void criterion_retraction() {
  int failures = 0, total = 0;
  for (const char* base : {"line", "discrete", "product"}) {
    const hn::TrialPlan plan = desk_plan(101, base);
    hn::Generator gen(plan, 1);
    const auto space = plan.base_space();
    for (int i = 0; i < plan.trials; ++i, ++total) {
      const PointConfig kappa = gen.point_config_over_rxy();
      if (!(phi(phi_bar(kappa, *space)) == kappa)) ++failures;
    }
  }
  report(1, "exact retraction phi o phi_bar = id", failures == 0,
         std::to_string(total) + " configs over 3 base models, " +
             std::to_string(failures) + " failures");
}

// 2. The center-scaling deformation stays inside the configuration space.
void criterion_deformation_validity() {
  const hn::TrialPlan plan = desk_plan(102);
  hn::Generator gen(plan, 2);
  const auto space = plan.base_space();
  int failures = 0;
  for (int i = 0; i < plan.trials; ++i) {
    const SegmentConfig w = gen.segment_config(false);
    std::vector<Scalar> ts = {Scalar(0), Scalar(1, 8), Scalar(1, 4),
                              Scalar(1, 2), Scalar(3, 4), Scalar(1)};
    for (int k = 0; k < 10; ++k) ts.push_back(gen.unit_closed());
    bool ok = true;
    try {
      for (const Scalar& t : ts) {
        const SegmentConfig wt = retraction_homotopy(t, w, *space);
        if (t.is_zero() && !(wt == w)) ok = false;
        if (t == Scalar(1) && !(wt == phi_bar(phi(w), *space))) ok = false;
      }
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) ++failures;
  }
  report(2, "deformation validity at 16 times per config", failures == 0,
         "500 trials, " + std::to_string(failures) + " failures");
}

// 3. Scans start and end at the basepoint.
void criterion_loop_endpoints() {
  const hn::TrialPlan plan = desk_plan(103);
  hn::Generator gen(plan, 3);
  int failures = 0;
  for (int i = 0; i < plan.trials; ++i) {
    const SegmentConfig w = gen.segment_config(true);
    if (!(alpha_eval(w, Scalar(0)).empty() && alpha_eval(w, Scalar(1)).empty()))
      ++failures;
  }
  report(3, "loop endpoints are the basepoint", failures == 0,
         "500 trials, " + std::to_string(failures) + " failures");
}

// 4. The lambda section evaluates back to its configuration at 1/2.
void criterion_lambda_section() {
  const hn::TrialPlan plan = desk_plan(104);
  hn::Generator gen(plan, 4);
  int failures = 0;
  for (int i = 0; i < plan.trials; ++i) {
    const PointConfig z = gen.suspension_config();
    if (!(alpha_eval(lambda_section(z), Scalar(1, 2)) == z)) ++failures;
  }
  report(4, "lambda section: alpha(lambda(z))(1/2) = z", failures == 0,
         "500 trials, " + std::to_string(failures) + " failures");
}

// 5. q H_t = h_t q on a breakpoint-aware grid.
void criterion_commutation() {
  const hn::TrialPlan plan = desk_plan(105);
  hn::Generator gen(plan, 5);
  const auto labels = plan.label_space();
  int failures = 0;
  for (int i = 0; i < plan.trials; ++i) {
    const PathPoint p = gen.path_point();
    const PointConfig z = q_eval(p);
    bool ok = true;
    for (const Scalar& t : breakpoint_grid(p, gen, 4))
      if (!(q_eval(H_map(t, p, *labels)) == h_map(t, z, *labels))) ok = false;
    if (!ok) ++failures;
  }
  report(5, "Dold-Thom (2b): q o H_t = h_t o q", failures == 0,
         "500 path points, " + std::to_string(failures) + " failures");
}

// 6. h_1 strictly drops the filtration level on U and never raises it.
void criterion_filtration_collapse() {
  const hn::TrialPlan plan = desk_plan(106);
  hn::Generator gen(plan, 6);
  const auto labels = plan.label_space();
  int applicable = 0, failures = 0, attempts = 0;
  while (applicable < plan.trials && attempts < plan.trials * 50) {
    ++attempts;
    const PointConfig z = gen.suspension_config_near_basepoint();
    bool ok = true;
    for (const Scalar& t : hn::TrialPlan::mandatory_times())
      if (filtration_level(h_map(t, z, *labels)) > filtration_level(z)) ok = false;
    if (!ok) {
      ++failures;
      continue;
    }
    if (!in_U(z, *labels)) continue;
    ++applicable;
    if (!(filtration_level(h_map(Scalar(1), z, *labels)) < filtration_level(z)))
      ++failures;
  }
  report(6, "Dold-Thom (2a): h_1 collapses U a filtration level", failures == 0 && applicable >= plan.trials,
         std::to_string(applicable) + " configs in U, " + std::to_string(failures) +
             " failures");
}

// 7. psi and (psi_bar, q) are exact inverses over each stratum.
void criterion_fiber_triviality() {
  const hn::TrialPlan plan = desk_plan(107);
  hn::Generator gen(plan, 7);
  int failures = 0;
  for (int i = 0; i < plan.trials; ++i) {
    const SegmentConfig w = gen.segment_config(true);
    const PointConfig z = gen.suspension_config();
    bool ok = q_eval(psi(w, z)) == z &&
              psi_bar(psi(w, z)) == shrink(Scalar(0), Scalar(1, 2), w);
    const PathPoint p = gen.path_point();
    const PointConfig zp = q_eval(p);
    if (!(fiber_retraction_homotopy(Scalar(1), p, zp) == p)) ok = false;
    if (!(fiber_retraction_homotopy(Scalar(0), p, zp) == psi(psi_bar(p), zp))) ok = false;
    std::vector<Scalar> ts = hn::TrialPlan::mandatory_times();
    for (int k = 0; k < 4; ++k) ts.push_back(gen.unit_closed());
    for (const Scalar& t : ts)
      if (!(q_eval(fiber_retraction_homotopy(t, p, zp)) == zp)) ok = false;
    if (!ok) ++failures;
  }
  report(7, "fiber triviality over strata (psi, psi_bar, homotopy over V)", failures == 0,
         "500 trials, " + std::to_string(failures) + " failures");
}

// 8. q never sees segments starting at or after the stop time.
void criterion_quotient_soundness() {
  const hn::TrialPlan plan = desk_plan(108);
  hn::Generator gen(plan, 8);
  int failures = 0;
  for (int i = 0; i < plan.trials; ++i) {
    const SegmentConfig w = gen.segment_config(true);
    const Scalar s = gen.rng().chance(1, 4) ? Scalar(1) : gen.unit_closed();
    std::vector<SegmentEntry> combined = w.entries();
    for (SegmentEntry& e : gen.junk_segments(w, s, 3)) combined.push_back(std::move(e));
    const SegmentConfig padded = SegmentConfig::normalized(std::move(combined));
    const bool ok =
        q_eval(PathPoint::normalized(padded, s)) == q_eval(PathPoint::normalized(w, s)) &&
        alpha_eval(padded, s) == alpha_eval(w, s);
    if (!ok) ++failures;
  }
  report(8, "quotient soundness of q under junk insertion", failures == 0,
         "500 trials, " + std::to_string(failures) + " failures");
}

// 9. The fiber diagram of H_1 commutes at the label-multiset level.
void criterion_fiber_diagram() {
  const hn::TrialPlan plan = desk_plan(109);
  hn::Generator gen(plan, 9);
  const auto labels = plan.label_space();
  const BaseMap id_base = [](const BasePoint& y) { return y; };
  auto multiset = [](const SegmentConfig& c) {
    std::vector<std::pair<BasePoint, XLabel>> out;
    for (const SegmentEntry& e : c.entries()) out.emplace_back(e.y, e.x);
    std::ranges::sort(out, [](const auto& a, const auto& b) {
      if (auto cc = compare(a.first, b.first); cc != 0)
        return cc == std::strong_ordering::less;
      return a.second < b.second;
    });
    return out;
  };
  int failures = 0;
  for (int i = 0; i < plan.trials; ++i) {
    const PathPoint p = gen.path_point();
    const SegmentConfig lhs = psi_bar(H_map(Scalar(1), p, *labels));
    const SegmentConfig contracted = map_segment_config(
        id_base, [&](const XLabel& x) { return labels->contract(Scalar(1), x); },
        psi_bar(p));
    const SegmentConfig rhs = xi(contracted, xi_element(p.w(), p.s(), *labels));
    if (!(multiset(lhs) == multiset(rhs))) ++failures;
  }
  report(9, "Dold-Thom (2c) shadow: fiber diagram label multisets", failures == 0,
         "500 trials, " + std::to_string(failures) + " failures");
}

// 10. Coefficient-system laws, exhaustively small then randomly larger.
void criterion_coefficient_laws() {
  // all injections {0..i-1} -> {0..j-1}
  const auto enumerate = [](std::size_t i, std::size_t j) {
    std::vector<Injection> out;
    std::vector<std::size_t> image;
    std::vector<bool> used(j, false);
    const std::function<void()> rec = [&] {
      if (image.size() == i) {
        out.push_back(Injection(image));
        return;
      }
      for (std::size_t v = 0; v < j; ++v) {
        if (used[v]) continue;
        used[v] = true;
        image.push_back(v);
        rec();
        image.pop_back();
        used[v] = false;
      }
    };
    rec();
    return out;
  };

  int failures = 0;
  long cases = 0;
  for (std::size_t k = 0; k <= 4; ++k) {
    std::vector<BasePoint> ys;
    for (std::size_t m = 0; m < k; ++m) ys.push_back(BasePoint::line(Scalar((int)m)));
    for (std::size_t j = 0; j <= k; ++j) {
      for (const Injection& nu : enumerate(j, k)) {
        for (std::size_t i = 0; i <= j; ++i) {
          for (const Injection& mu_inj : enumerate(i, j)) {
            std::vector<Label> xs;
            for (std::size_t l = 0; l < i; ++l)
              xs.push_back((cases + l) % 3 == 0
                               ? Label::base()
                               : Label::plain(XLabel::interval(Scalar(1, 2 + (int)l))));
            ++cases;
            const Injection numu = compose(nu, mu_inj);
            const bool ok =
                pullback(numu, ys) == pullback(mu_inj, pullback(nu, ys)) &&
                pushforward(numu, xs, k, Label::base()) ==
                    pushforward(nu, pushforward(mu_inj, xs, j, Label::base()), k,
                                Label::base());
            if (!ok) ++failures;
          }
        }
      }
    }
  }
  const long exhaustive_cases = cases;

  hn::TrialPlan plan = desk_plan(110);
  plan.max_entries = 8;
  hn::Generator gen(plan, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + gen.rng().below(8);
    const std::size_t j = 1 + gen.rng().below(k);
    const std::size_t i = gen.rng().below(j + 1);
    std::vector<std::size_t> slots(k);
    for (std::size_t m = 0; m < k; ++m) slots[m] = m;
    for (std::size_t m = k; m > 1; --m) std::swap(slots[m - 1], slots[gen.rng().below(m)]);
    std::vector<std::size_t> nu_img(slots.begin(), slots.begin() + j);
    const Injection nu{nu_img};
    std::vector<std::size_t> slots2(j);
    for (std::size_t m = 0; m < j; ++m) slots2[m] = m;
    for (std::size_t m = j; m > 1; --m)
      std::swap(slots2[m - 1], slots2[gen.rng().below(m)]);
    std::vector<std::size_t> mu_img(slots2.begin(), slots2.begin() + i);
    const Injection mu_inj{mu_img};
    std::vector<BasePoint> ys = gen.distinct_base_points(static_cast<int>(k));
    std::vector<Label> xs;
    for (std::size_t l = 0; l < i; ++l)
      xs.push_back(gen.rng().chance(1, 4) ? Label::base() : Label::plain(gen.xlabel()));
    ++cases;
    const Injection numu = compose(nu, mu_inj);
    const bool ok = pullback(numu, ys) == pullback(mu_inj, pullback(nu, ys)) &&
                    pushforward(numu, xs, k, Label::base()) ==
                        pushforward(nu, pushforward(mu_inj, xs, j, Label::base()), k,
                                    Label::base());
    if (!ok) ++failures;
  }
  report(10, "coefficient-system composition laws", failures == 0,
         std::to_string(exhaustive_cases) + " exhaustive + 200 random cases, " +
             std::to_string(failures) + " failures");
}

// 11. Boxes at n = 1 reproduce segments; n = 2 collapses on the boundary.
void criterion_box_coherence() {
  const hn::TrialPlan plan = desk_plan(111);
  hn::Generator gen(plan, 11);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const SegmentConfig w = gen.segment_config(true);
    const BoxConfig box = segment_to_box(w);
    bool ok = phi_n(box) == phi(w);
    std::vector<Scalar> ts = hn::TrialPlan::mandatory_times();
    for (int k = 0; k < 3; ++k) ts.push_back(gen.unit_closed());
    for (const Scalar& t : ts)
      if (!(alpha_n_eval(box, {t}) == alpha_eval(w, t))) ok = false;
    if (!ok) ++failures;
  }
  for (int i = 0; i < 200; ++i) {
    const BoxConfig box = gen.box_config(2);
    const Scalar t = gen.unit_closed();
    for (const Scalar& edge : {Scalar(0), Scalar(1)}) {
      if (!alpha_n_eval(box, {edge, t}).empty()) ++failures;
      if (!alpha_n_eval(box, {t, edge}).empty()) ++failures;
    }
  }
  report(11, "n=1 coherence and n=2 boundary collapse", failures == 0,
         "200 + 200 trials, " + std::to_string(failures) + " failures");
}

// 12. Every documented fault fixture trips its targeted suite.
void criterion_fault_sensitivity() {
  struct Case {
    hn::Fault fault;
    const char* suite;
    const char* property;
    hn::AuditReport (*run)(const hn::TrialPlan&);
  };
  const Case cases[] = {
      {hn::Fault::phi_off_center, "equivalence", "retraction_identity",
       hn::run_equivalence_suite},
      {hn::Fault::l1_breakpoint, "dold-thom", "commute_qh", hn::run_quasifibration_audit},
      {hn::Fault::lambda_offset, "loop", "lambda_section_identity", hn::run_loop_suite},
  };
  int failures = 0;
  std::string detail;
  for (const Case& c : cases) {
    hn::TrialPlan plan = desk_plan(112);
    plan.trials = 120;
    plan.fault = c.fault;
    const hn::AuditReport rep = c.run(plan);
    bool tripped = false;
    for (const hn::PropertyReport& p : rep.properties) {
      if (p.name != c.property || p.failures == 0 || !p.counterexample) continue;
      // replay: fails under the fault, passes without it
      hn::TrialPlan healthy = plan;
      healthy.fault = hn::Fault::none;
      tripped = !hn::replay_witness(c.suite, c.property, *p.counterexample, plan) &&
                hn::replay_witness(c.suite, c.property, *p.counterexample, healthy);
    }
    if (!tripped || rep.passed()) ++failures;
    if (!detail.empty()) detail += ", ";
    detail += hn::fault_name(c.fault);
    detail += tripped ? " tripped" : " MISSED";
  }
  report(12, "fault-injection sensitivity with replayable witnesses", failures == 0,
         detail);
}

}  // namespace

int main() {
  std::printf("acceptance: exact-arithmetic checks, zero tolerance, deterministic seeds\n");
  criterion_retraction();
  criterion_deformation_validity();
  criterion_loop_endpoints();
  criterion_lambda_section();
  criterion_commutation();
  criterion_filtration_collapse();
  criterion_fiber_triviality();
  criterion_quotient_soundness();
  criterion_fiber_diagram();
  criterion_coefficient_laws();
  criterion_box_coherence();
  criterion_fault_sensitivity();
  if (g_failed_criteria == 0) {
    std::printf("acceptance: all 12 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion/criteria FAILED\n", g_failed_criteria);
  return 1;
}
