#include "confscan/harness.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string_view>
#include <utility>

#include "confscan/errors.hpp"
#include "confscan/json_io.hpp"

namespace confscan::harness {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw input_error("Rng::below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v = engine_();
  while (v >= limit) v = engine_();
  return v % n;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw input_error("Rng::range: empty range");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Fault fault_from_name(const std::string& name) {
  if (name.empty() || name == "none") return Fault::none;
  if (name == "phi-off-center") return Fault::phi_off_center;
  if (name == "L1-breakpoint") return Fault::l1_breakpoint;
  if (name == "lambda-offset") return Fault::lambda_offset;
  throw input_error("unknown fault fixture '" + name + "'");
}

std::string fault_name(Fault fault) {
  switch (fault) {
    case Fault::none: return "none";
    case Fault::phi_off_center: return "phi-off-center";
    case Fault::l1_breakpoint: return "L1-breakpoint";
    case Fault::lambda_offset: return "lambda-offset";
  }
  return "none";
}

const std::vector<Scalar>& TrialPlan::mandatory_times() {
  static const std::vector<Scalar> grid = {Scalar(0), Scalar(1, 4), Scalar(1, 2),
                                           Scalar(3, 4), Scalar(1)};
  return grid;
}

BaseSpacePtr TrialPlan::base_space() const {
  if (base_model == "line") return rational_line();
  if (base_model == "discrete") return discrete_space(2 * max_entries + 4);
  if (base_model == "product") return product_base_space(2, rational_line());
  throw input_error("unknown base model '" + base_model + "'");
}

LabelSpacePtr TrialPlan::label_space() const {
  if (label_model == "interval") return interval_label_space();
  if (label_model == "wedge") return wedge_label_space(3);
  throw input_error("unknown label model '" + label_model + "'");
}

json TrialPlan::to_json() const {
  return json{{"seed", seed},
              {"trials", trials},
              {"max_entries", max_entries},
              {"max_denominator", max_denominator},
              {"extra_times", extra_times},
              {"base_model", base_model},
              {"label_model", label_model},
              {"fault", fault_name(fault)}};
}

// --------------------------------------------------------------------------
// Generator
// --------------------------------------------------------------------------

Generator::Generator(const TrialPlan& plan, std::uint64_t salt)
    : plan_(plan), rng_(splitmix64(plan.seed ^ splitmix64(salt))) {
  if (plan_.max_entries < 0 || plan_.max_entries > 64)
    throw generation_error("TrialPlan: max_entries out of range");
  if (plan_.max_denominator < 2)
    throw generation_error("TrialPlan: max_denominator must be >= 2");
  if (plan_.trials < 1) throw generation_error("TrialPlan: trials must be >= 1");
}

Scalar Generator::rational_between(std::int64_t lo, std::int64_t hi) {
  const std::int64_t den = rng_.range(1, plan_.max_denominator);
  const std::int64_t num = rng_.range(lo * den, hi * den);
  return Scalar(num, den);
}

Scalar Generator::unit_open() {
  const std::int64_t den = rng_.range(2, plan_.max_denominator);
  const std::int64_t num = rng_.range(1, den - 1);
  return Scalar(num, den);
}

Scalar Generator::unit_closed() { return rational_between(0, 1); }

std::vector<Scalar> Generator::distinct_sorted(int count, bool unit) {
  std::vector<Scalar> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 200 * count + 50)
      throw generation_error("distinct_sorted: bounds too tight");
    Scalar v = unit ? unit_open() : rational_between(-3, 3);
    if (std::ranges::find(out, v) == out.end()) out.push_back(std::move(v));
  }
  std::ranges::sort(out);
  return out;
}

BasePoint Generator::base_point() {
  if (plan_.base_model == "line") return BasePoint::line(rational_between(-3, 3));
  if (plan_.base_model == "discrete")
    return BasePoint::discrete(rng_.range(0, 2 * plan_.max_entries + 3));
  if (plan_.base_model == "product") {
    BasePoint p = BasePoint::line(rational_between(-2, 2));
    p = with_head(rational_between(-2, 2), p);
    return with_head(rational_between(-2, 2), p);
  }
  throw input_error("unknown base model '" + plan_.base_model + "'");
}

std::vector<BasePoint> Generator::distinct_base_points(int count) {
  std::vector<BasePoint> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 200 * count + 50)
      throw generation_error("distinct_base_points: bounds too tight");
    BasePoint p = base_point();
    if (std::ranges::find(out, p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

XLabel Generator::xlabel() {
  const Scalar pos = rng_.chance(1, 8) ? Scalar(1) : unit_open();
  if (plan_.label_model == "interval") return XLabel::interval(pos);
  if (plan_.label_model == "wedge") return XLabel::wedge(rng_.range(0, 2), pos);
  throw input_error("unknown label model '" + plan_.label_model + "'");
}

Label Generator::suspension_label() { return Label::suspended(xlabel(), {unit_open()}); }

PointConfig Generator::point_config() {
  const int j = static_cast<int>(rng_.below(plan_.max_entries + 1));
  std::vector<PointEntry> raw;
  for (BasePoint& y : distinct_base_points(j))
    raw.push_back({std::move(y), Label::plain(xlabel())});
  return PointConfig::normalized(std::move(raw));
}

PointConfig Generator::point_config_over_rxy() {
  const int j = static_cast<int>(rng_.below(plan_.max_entries + 1));
  const int pool_size = j == 0 ? 1 : 1 + static_cast<int>(rng_.below(j));
  std::vector<BasePoint> pool = distinct_base_points(pool_size);
  std::vector<PointEntry> raw;
  std::vector<std::pair<Scalar, std::size_t>> used;
  for (int i = 0; i < j; ++i) {
    int attempts = 0;
    for (;;) {
      if (++attempts > 300)
        throw generation_error("point_config_over_rxy: bounds too tight");
      const std::size_t yi = rng_.below(pool.size());
      Scalar a = rational_between(-3, 3);
      if (std::ranges::find(used, std::pair{a, yi}) == used.end()) {
        used.emplace_back(a, yi);
        raw.push_back({with_head(a, pool[yi]), Label::plain(xlabel())});
        break;
      }
    }
  }
  return PointConfig::normalized(std::move(raw));
}

PointConfig Generator::suspension_config() {
  const int j = static_cast<int>(rng_.below(plan_.max_entries + 1));
  std::vector<PointEntry> raw;
  for (BasePoint& y : distinct_base_points(j))
    raw.push_back({std::move(y), suspension_label()});
  return PointConfig::normalized(std::move(raw));
}

PointConfig Generator::suspension_config_near_basepoint() {
  PointConfig z = suspension_config();
  if (z.empty() || rng_.chance(1, 3)) return z;
  std::vector<PointEntry> raw = z.entries();
  PointEntry& e = raw[rng_.below(raw.size())];
  switch (rng_.below(3)) {
    case 0:  // circle parameter in the lower collapse zone
      e.label = Label::suspended(e.label.x(), {Scalar(1, 8)});
      break;
    case 1:  // circle parameter in the upper collapse zone
      e.label = Label::suspended(e.label.x(), {Scalar(7, 8)});
      break;
    default: {  // underlying label inside W
      XLabel x = plan_.label_model == "wedge" ? XLabel::wedge(rng_.range(0, 2), Scalar(1, 8))
                                              : XLabel::interval(Scalar(1, 8));
      e.label = Label::suspended(std::move(x), {e.label.params()[0]});
    }
  }
  return PointConfig::normalized(std::move(raw));
}

SegmentConfig Generator::segment_config(bool unit_interval) {
  const int j = static_cast<int>(rng_.below(plan_.max_entries + 1));
  const int pool_size = j == 0 ? 1 : 1 + static_cast<int>(rng_.below(j));
  std::vector<BasePoint> pool = distinct_base_points(pool_size);
  std::vector<int> counts(pool.size(), 0);
  for (int i = 0; i < j; ++i) ++counts[rng_.below(pool.size())];
  std::vector<SegmentEntry> raw;
  for (std::size_t yi = 0; yi < pool.size(); ++yi) {
    if (counts[yi] == 0) continue;
    std::vector<Scalar> cuts = distinct_sorted(2 * counts[yi], unit_interval);
    for (int k = 0; k < counts[yi]; ++k)
      raw.push_back({cuts[2 * k], cuts[2 * k + 1], pool[yi], xlabel()});
  }
  return SegmentConfig::normalized(std::move(raw));
}

BoxConfig Generator::box_config(std::size_t dim) {
  const int j = static_cast<int>(rng_.below(plan_.max_entries + 1));
  const int pool_size = j == 0 ? 1 : 1 + static_cast<int>(rng_.below(j));
  std::vector<BasePoint> pool = distinct_base_points(pool_size);
  std::vector<int> counts(pool.size(), 0);
  for (int i = 0; i < j; ++i) ++counts[rng_.below(pool.size())];
  std::vector<BoxEntry> raw;
  for (std::size_t yi = 0; yi < pool.size(); ++yi) {
    if (counts[yi] == 0) continue;
    // boxes over one base point separated along the first coordinate
    std::vector<Scalar> cuts = distinct_sorted(2 * counts[yi], true);
    for (int k = 0; k < counts[yi]; ++k) {
      BoxEntry e;
      e.lo.push_back(cuts[2 * k]);
      e.hi.push_back(cuts[2 * k + 1]);
      for (std::size_t m = 1; m < dim; ++m) {
        std::vector<Scalar> side = distinct_sorted(2, true);
        e.lo.push_back(side[0]);
        e.hi.push_back(side[1]);
      }
      e.y = pool[yi];
      e.x = xlabel();
      raw.push_back(std::move(e));
    }
  }
  return BoxConfig::normalized(dim, std::move(raw));
}

PathPoint Generator::path_point() {
  SegmentConfig w = segment_config(true);
  Scalar s;
  const std::uint64_t mode = rng_.below(8);
  if (mode == 0) {
    s = Scalar(1);
  } else if (mode == 1) {
    const std::vector<Scalar> grid = {Scalar(1, 4), Scalar(1, 2), Scalar(3, 4)};
    s = grid[rng_.below(grid.size())];
  } else if (mode <= 4 && !w.empty()) {
    const SegmentEntry& e = w.entries()[rng_.below(w.size())];
    s = e.a + (e.b - e.a) * unit_open();  // strictly inside one segment
  } else {
    s = unit_open();
  }
  return PathPoint::normalized(std::move(w), std::move(s));
}

std::vector<SegmentEntry> Generator::junk_segments(const SegmentConfig& w,
                                                   const Scalar& s, int max_count) {
  std::vector<SegmentEntry> junk;
  if (s >= Scalar(1)) return junk;
  const int count = static_cast<int>(rng_.below(max_count + 1));
  std::vector<BasePoint> taken;
  for (const SegmentEntry& e : w.entries()) taken.push_back(e.y);
  for (int i = 0; i < count; ++i) {
    BasePoint y;
    int attempts = 0;
    do {
      if (++attempts > 400) throw generation_error("junk_segments: bounds too tight");
      y = base_point();
    } while (std::ranges::find(taken, y) != taken.end());
    taken.push_back(y);
    // a == s exactly is a legal (and interesting) case, except at s = 0
    // where the configuration must stay inside the open interval
    Scalar a = rng_.chance(1, 4) && s > Scalar(0) ? s
                                                  : s + (Scalar(1) - s) * unit_open();
    Scalar b = a + (Scalar(1) - a) * unit_open();
    junk.push_back({std::move(a), std::move(b), std::move(y), xlabel()});
  }
  return junk;
}

// --------------------------------------------------------------------------
// Fault-aware map variants. With Fault::none these are exactly the library
// maps; a fixture swaps in one deliberately wrong formula.
// --------------------------------------------------------------------------

namespace {

PointConfig phi_impl(const SegmentConfig& w, Fault fault) {
  if (fault != Fault::phi_off_center) return phi(w);
  std::vector<PointEntry> raw;
  for (const SegmentEntry& e : w.entries())
    raw.push_back({with_head(e.a + (e.b - e.a) / Scalar(3), e.y), Label::plain(e.x)});
  return PointConfig::normalized(std::move(raw));
}

Scalar L_impl(const Scalar& t, const Scalar& u, Fault fault) {
  if (fault != Fault::l1_breakpoint) return L_map(t, u);
  const Scalar lo = t / Scalar(3);
  const Scalar hi = Scalar(1) - t / Scalar(3);
  if (u <= lo) return Scalar(0);
  if (u >= hi) return Scalar(1);
  return (u - lo) / (hi - lo);
}

Label J_impl(const Scalar& t, const Label& l, const LabelSpace& labels, Fault fault) {
  if (fault != Fault::l1_breakpoint) return J_map(t, l, labels);
  if (l.is_basepoint()) return Label::base();
  return Label::suspended(labels.contract(t, l.x()), {L_impl(t, l.params()[0], fault)});
}

PointConfig h_impl(const Scalar& t, const PointConfig& z, const LabelSpace& labels,
                   Fault fault) {
  if (fault != Fault::l1_breakpoint) return h_map(t, z, labels);
  return map_point_config([](const BasePoint& y) { return y; },
                          [&](const Label& l) { return J_impl(t, l, labels, fault); }, z);
}

SegmentConfig lambda_impl(const PointConfig& z, Fault fault) {
  if (fault != Fault::lambda_offset) return lambda_section(z);
  std::vector<SegmentEntry> raw;
  for (const PointEntry& e : z.entries()) {
    const Scalar& s = e.label.params()[0];
    raw.push_back({Scalar(1, 3) - s / Scalar(3), Scalar(1) - s / Scalar(3), e.y,
                   e.label.x()});
  }
  return SegmentConfig::normalized(std::move(raw));
}

PathPoint psi_impl(const SegmentConfig& w, const PointConfig& z, Fault fault) {
  if (fault != Fault::lambda_offset) return psi(w, z);
  SegmentConfig packed = union_configs(shrink(Scalar(0), Scalar(1, 2), w),
                                       shrink(Scalar(1, 2), Scalar(1), lambda_impl(z, fault)));
  return PathPoint::normalized(std::move(packed), Scalar(3, 4));
}

// --------------------------------------------------------------------------
// Property plumbing
// --------------------------------------------------------------------------

struct Outcome {
  bool applicable = true;
  bool ok = true;
};

struct Property {
  std::string name;
  std::function<json(Generator&)> gen;
  std::function<Outcome(const json&, const TrialPlan&)> check;
};

json encode_times(const std::vector<Scalar>& ts) {
  json out = json::array();
  for (const Scalar& t : ts) out.push_back(io::encode(t));
  return out;
}

std::vector<Scalar> decode_times(const json& j) {
  std::vector<Scalar> out;
  for (const json& t : j) out.push_back(io::decode_scalar(t));
  return out;
}

std::vector<Scalar> sample_times(Generator& g) {
  std::vector<Scalar> ts = TrialPlan::mandatory_times();
  for (int i = 0; i < g.plan().extra_times; ++i) ts.push_back(g.unit_closed());
  return ts;
}

std::vector<std::pair<BasePoint, XLabel>> label_multiset(const SegmentConfig& w) {
  std::vector<std::pair<BasePoint, XLabel>> out;
  for (const SegmentEntry& e : w.entries()) out.emplace_back(e.y, e.x);
  std::ranges::sort(out, [](const auto& p, const auto& q) {
    if (auto c = compare(p.first, q.first); c != 0) return c == std::strong_ordering::less;
    return p.second < q.second;
  });
  return out;
}

const BaseMap kIdBase = [](const BasePoint& y) { return y; };

// ---- equivalence suite ---------------------------------------------------

Property weak_metric_axioms() {
  return {
      "weak_metric_axioms",
      [](Generator& g) {
        BasePoint y1 = g.base_point();
        BasePoint y2 = g.rng().chance(1, 4) ? y1 : g.base_point();
        return json{{"y1", io::encode(y1)}, {"y2", io::encode(y2)}};
      },
      [](const json& in, const TrialPlan& plan) {
        const auto space = plan.base_space();
        const BasePoint y1 = io::decode_base_point(in.at("y1"));
        const BasePoint y2 = io::decode_base_point(in.at("y2"));
        const Scalar d12 = space->distance(y1, y2);
        const Scalar d21 = space->distance(y2, y1);
        Outcome out;
        out.ok = d12 >= Scalar(0) && d12 == d21 && (d12.is_zero() == (y1 == y2));
        return out;
      }};
}

Property g_metric_properties() {
  return {
      "g_metric_properties",
      [](Generator& g) {
        BasePoint y1 = g.base_point();
        BasePoint y2 = g.rng().chance(1, 2) ? y1 : g.base_point();
        Scalar a1 = g.rational_between(-3, 3);
        Scalar a2 = g.rng().chance(1, 8) ? a1 : g.rational_between(-3, 3);
        return json{{"a1", io::encode(a1)}, {"y1", io::encode(y1)},
                    {"a2", io::encode(a2)}, {"y2", io::encode(y2)}};
      },
      [](const json& in, const TrialPlan& plan) {
        const auto space = plan.base_space();
        const Scalar a1 = io::decode_scalar(in.at("a1"));
        const Scalar a2 = io::decode_scalar(in.at("a2"));
        const BasePoint y1 = io::decode_base_point(in.at("y1"));
        const BasePoint y2 = io::decode_base_point(in.at("y2"));
        const Scalar g12 = g_metric(a1, y1, a2, y2, *space);
        Outcome out;
        out.ok = g12 >= Scalar(0) && (g12.is_zero() == (a1 == a2 && y1 == y2));
        if (y1 == y2) out.ok = out.ok && Scalar(2) * g12 <= abs(a1 - a2);
        return out;
      }};
}

Property label_contraction_axioms() {
  return {
      "label_contraction_axioms",
      [](Generator& g) {
        return json{{"x", io::encode(g.xlabel())}, {"t", io::encode(g.unit_closed())}};
      },
      [](const json& in, const TrialPlan& plan) {
        const auto labels = plan.label_space();
        const XLabel x = io::decode_xlabel(in.at("x"));
        const Scalar t = io::decode_scalar(in.at("t"));
        const XLabel base = labels->basepoint();
        Outcome out;
        out.ok = labels->contract(Scalar(0), x) == x &&
                 labels->contract(t, base) == base &&
                 labels->contains(labels->contract(t, x));
        if (labels->in_W(x))
          out.ok = out.ok && labels->contract(Scalar(1), x) == base;
        return out;
      }};
}

Property retraction_identity() {
  return {
      "retraction_identity",
      [](Generator& g) { return json{{"kappa", io::encode(g.point_config_over_rxy())}}; },
      [](const json& in, const TrialPlan& plan) {
        const auto space = plan.base_space();
        const PointConfig kappa = io::decode_point_config(in.at("kappa"));
        Outcome out;
        out.ok = phi_impl(phi_bar(kappa, *space), plan.fault) == kappa;
        return out;
      }};
}

Property deformation_validity() {
  return {
      "deformation_validity",
      [](Generator& g) {
        return json{{"w", io::encode(g.segment_config(false))},
                    {"times", encode_times(sample_times(g))}};
      },
      [](const json& in, const TrialPlan& plan) {
        const auto space = plan.base_space();
        const SegmentConfig w = io::decode_segment_config(in.at("w"));
        Outcome out;
        for (const Scalar& t : decode_times(in.at("times"))) {
          const SegmentConfig wt = retraction_homotopy(t, w, *space);  // validates
          if (t.is_zero() && !(wt == w)) out.ok = false;
          if (t == Scalar(1) && !(wt == phi_bar(phi(w), *space))) out.ok = false;
        }
        return out;
      }};
}

Property equivariance_normal_form() {
  return {
      "equivariance_normal_form",
      [](Generator& g) {
        const PointConfig kappa = g.point_config_over_rxy();
        std::vector<std::size_t> perm(kappa.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        for (std::size_t i = perm.size(); i > 1; --i)
          std::swap(perm[i - 1], perm[g.rng().below(i)]);
        return json{{"kappa", io::encode(kappa)}, {"perm", perm}};
      },
      [](const json& in, const TrialPlan& plan) {
        const auto space = plan.base_space();
        const PointConfig kappa = io::decode_point_config(in.at("kappa"));
        std::vector<PointEntry> permuted;
        for (const auto& idx : in.at("perm"))
          permuted.push_back(kappa.entries()[idx.get<std::size_t>()]);
        const PointConfig again = PointConfig::normalized(std::move(permuted));
        Outcome out;
        out.ok = again == kappa && phi_bar(again, *space) == phi_bar(kappa, *space);
        return out;
      }};
}

json encode_labels(const std::vector<Label>& ls) {
  json out = json::array();
  for (const Label& l : ls) out.push_back(io::encode(l));
  return out;
}

std::vector<Label> decode_labels(const json& j) {
  std::vector<Label> out;
  for (const json& l : j) out.push_back(io::decode_label(l));
  return out;
}

Injection random_injection(Generator& g, std::size_t arity, std::size_t codomain) {
  std::vector<std::size_t> slots(codomain);
  for (std::size_t i = 0; i < codomain; ++i) slots[i] = i;
  for (std::size_t i = codomain; i > 1; --i)
    std::swap(slots[i - 1], slots[g.rng().below(i)]);
  slots.resize(arity);
  return Injection(std::move(slots));
}

Property coefficient_composition() {
  return {
      "coefficient_composition",
      [](Generator& g) {
        const std::size_t k = 1 + g.rng().below(std::max(4, g.plan().max_entries));
        const std::size_t j = 1 + g.rng().below(k);
        const std::size_t i = g.rng().below(j + 1);
        const Injection nu = random_injection(g, j, k);
        const Injection mu_inj = random_injection(g, i, j);
        json ys = json::array();
        for (const BasePoint& y : g.distinct_base_points(static_cast<int>(k)))
          ys.push_back(io::encode(y));
        std::vector<Label> xs;
        for (std::size_t l = 0; l < i; ++l)
          xs.push_back(g.rng().chance(1, 5) ? Label::base() : Label::plain(g.xlabel()));
        return json{{"k", k},
                    {"nu", io::encode(nu)},
                    {"mu", io::encode(mu_inj)},
                    {"ys", std::move(ys)},
                    {"xs", encode_labels(xs)}};
      },
      [](const json& in, const TrialPlan&) {
        const std::size_t k = in.at("k").get<std::size_t>();
        const Injection nu = io::decode_injection(in.at("nu"));
        const Injection mu_inj = io::decode_injection(in.at("mu"));
        std::vector<BasePoint> ys;
        for (const json& y : in.at("ys")) ys.push_back(io::decode_base_point(y));
        const std::vector<Label> xs = decode_labels(in.at("xs"));
        const Injection numu = compose(nu, mu_inj);
        Outcome out;
        out.ok = pullback(numu, ys) == pullback(mu_inj, pullback(nu, ys)) &&
                 pushforward(numu, xs, k, Label::base()) ==
                     pushforward(nu, pushforward(mu_inj, xs, nu.arity(), Label::base()),
                                 k, Label::base());
        return out;
      }};
}

Property relation_soundness() {
  return {
      "relation_soundness",
      [](Generator& g) {
        const std::size_t j = 1 + g.rng().below(std::max(1, g.plan().max_entries));
        const std::size_t i = g.rng().below(j + 1);
        const Injection nu = random_injection(g, i, j);
        json ys = json::array();
        for (const BasePoint& y : g.distinct_base_points(static_cast<int>(j)))
          ys.push_back(io::encode(y));
        std::vector<Label> xs;
        for (std::size_t l = 0; l < i; ++l)
          xs.push_back(g.rng().chance(1, 5) ? Label::base() : Label::plain(g.xlabel()));
        return json{{"nu", io::encode(nu)}, {"ys", std::move(ys)}, {"xs", encode_labels(xs)}};
      },
      [](const json& in, const TrialPlan&) {
        const Injection nu = io::decode_injection(in.at("nu"));
        std::vector<BasePoint> ys;
        for (const json& y : in.at("ys")) ys.push_back(io::decode_base_point(y));
        const std::vector<Label> xs = decode_labels(in.at("xs"));
        const std::vector<BasePoint> pulled = pullback(nu, ys);
        std::vector<PointEntry> lhs;
        for (std::size_t l = 0; l < xs.size(); ++l) lhs.push_back({pulled[l], xs[l]});
        const std::vector<Label> pushed = pushforward(nu, xs, ys.size(), Label::base());
        std::vector<PointEntry> rhs;
        for (std::size_t m = 0; m < ys.size(); ++m) rhs.push_back({ys[m], pushed[m]});
        Outcome out;
        out.ok = PointConfig::normalized(std::move(lhs)) ==
                 PointConfig::normalized(std::move(rhs));
        return out;
      }};
}

Property mu_below_shrink() {
  return {
      "mu_below_shrink",
      [](Generator& g) {
        return json{{"w1", io::encode(g.segment_config(true))},
                    {"w2", io::encode(g.segment_config(true))},
                    {"w3", io::encode(g.segment_config(true))},
                    {"s", io::encode(g.unit_closed())}};
      },
      [](const json& in, const TrialPlan&) {
        const SegmentConfig w1 = io::decode_segment_config(in.at("w1"));
        const SegmentConfig w2 = io::decode_segment_config(in.at("w2"));
        const SegmentConfig w3 = io::decode_segment_config(in.at("w3"));
        const Scalar s = io::decode_scalar(in.at("s"));
        Outcome out;
        out.ok = mu(w1, SegmentConfig()) == shrink(Scalar(0), Scalar(1, 2), w1) &&
                 mu(SegmentConfig(), SegmentConfig()) == SegmentConfig();
        // associativity holds at the level of label multisets
        out.ok = out.ok && label_multiset(mu(mu(w1, w2), w3)) ==
                               label_multiset(mu(w1, mu(w2, w3)));
        const SegmentConfig lo = below(s, w1);  // validates by construction
        for (const SegmentEntry& e : lo.entries())
          if (!(e.b <= s)) out.ok = false;
        return out;
      }};
}

Property functoriality() {
  return {
      "functoriality",
      [](Generator& g) {
        return json{{"c", io::encode(g.point_config())},
                    {"t1", io::encode(g.unit_closed())},
                    {"t2", io::encode(g.unit_closed())},
                    {"c1", io::encode(g.rational_between(-2, 2))},
                    {"c2", io::encode(g.rational_between(-2, 2))}};
      },
      [](const json& in, const TrialPlan& plan) {
        const auto labels = plan.label_space();
        const PointConfig c = io::decode_point_config(in.at("c"));
        const Scalar t1 = io::decode_scalar(in.at("t1"));
        const Scalar t2 = io::decode_scalar(in.at("t2"));
        const Scalar c1 = io::decode_scalar(in.at("c1"));
        const Scalar c2 = io::decode_scalar(in.at("c2"));
        const auto contract_label = [&](const Scalar& t) {
          return [&labels, t](const Label& l) {
            return l.is_basepoint() ? Label::base()
                                    : Label::plain(labels->contract(t, l.x()));
          };
        };
        const BaseMap f1 = [&c1](const BasePoint& y) { return with_head(c1, y); };
        const BaseMap f2 = [&c2](const BasePoint& y) { return with_head(c2, y); };
        const BaseMap f21 = [&](const BasePoint& y) { return f2(f1(y)); };
        const LabelMap g1 = contract_label(t1);
        const LabelMap g2 = contract_label(t2);
        const LabelMap g21 = [&](const Label& l) { return g2(g1(l)); };
        const LabelMap id_label = [](const Label& l) { return l; };
        Outcome out;
        out.ok = map_point_config(kIdBase, id_label, c) == c &&
                 map_point_config(f21, g21, c) ==
                     map_point_config(f2, g2, map_point_config(f1, g1, c));
        return out;
      }};
}

// ---- quasifibration audit ------------------------------------------------

Property fiber_section() {
  return {
      "fiber_section",
      [](Generator& g) {
        return json{{"w", io::encode(g.segment_config(true))},
                    {"z", io::encode(g.suspension_config())}};
      },
      [](const json& in, const TrialPlan& plan) {
        const SegmentConfig w = io::decode_segment_config(in.at("w"));
        const PointConfig z = io::decode_point_config(in.at("z"));
        Outcome out;
        out.ok = q_eval(psi_impl(w, z, plan.fault)) == z;
        return out;
      }};
}

Property fiber_inverse() {
  return {
      "fiber_inverse",
      [](Generator& g) {
        return json{{"w", io::encode(g.segment_config(true))},
                    {"z", io::encode(g.suspension_config())}};
      },
      [](const json& in, const TrialPlan& plan) {
        const SegmentConfig w = io::decode_segment_config(in.at("w"));
        const PointConfig z = io::decode_point_config(in.at("z"));
        Outcome out;
        out.ok = psi_bar(psi_impl(w, z, plan.fault)) == shrink(Scalar(0), Scalar(1, 2), w);
        return out;
      }};
}

Property fiber_homotopy_over_v() {
  return {
      "fiber_homotopy_over_v",
      [](Generator& g) {
        return json{{"p", io::encode(g.path_point())},
                    {"times", encode_times(sample_times(g))}};
      },
      [](const json& in, const TrialPlan& plan) {
        const PathPoint p = io::decode_path_point(in.at("p"));
        const PointConfig z = q_eval(p);
        Outcome out;
        out.ok = fiber_retraction_homotopy(Scalar(1), p, z) == p &&
                 fiber_retraction_homotopy(Scalar(0), p, z) ==
                     psi_impl(psi_bar(p), z, plan.fault);
        for (const Scalar& t : decode_times(in.at("times")))
          if (!(q_eval(fiber_retraction_homotopy(t, p, z)) == z)) out.ok = false;
        return out;
      }};
}

Property collapse_on_u() {
  return {
      "collapse_on_u",
      [](Generator& g) {
        return json{{"z", io::encode(g.suspension_config_near_basepoint())}};
      },
      [](const json& in, const TrialPlan& plan) {
        const auto labels = plan.label_space();
        const PointConfig z = io::decode_point_config(in.at("z"));
        Outcome out;
        out.applicable = in_U(z, *labels);
        if (out.applicable)
          out.ok = filtration_level(h_impl(Scalar(1), z, *labels, plan.fault)) <
                   filtration_level(z);
        return out;
      }};
}

Property level_monotone() {
  return {
      "level_monotone",
      [](Generator& g) {
        return json{{"z", io::encode(g.suspension_config_near_basepoint())},
                    {"times", encode_times(sample_times(g))}};
      },
      [](const json& in, const TrialPlan& plan) {
        const auto labels = plan.label_space();
        const PointConfig z = io::decode_point_config(in.at("z"));
        Outcome out;
        out.ok = h_impl(Scalar(0), z, *labels, plan.fault) == z;
        for (const Scalar& t : decode_times(in.at("times")))
          if (filtration_level(h_impl(t, z, *labels, plan.fault)) > filtration_level(z))
            out.ok = false;
        return out;
      }};
}

// Times where a contracting segment's window can gain or lose the stop
// time: sigma = t/4 and sigma = 1 - t/4.
std::vector<Scalar> commutation_breakpoints(const PathPoint& p) {
  std::vector<Scalar> ts;
  for (const SegmentEntry& e : p.w().entries()) {
    if (!(e.a <= p.s() && p.s() <= e.b)) continue;
    const Scalar sigma = (p.s() - e.a) / (e.b - e.a);
    for (const Scalar& t : {Scalar(4) * sigma, Scalar(4) * (Scalar(1) - sigma)})
      if (t >= Scalar(0) && t <= Scalar(1)) ts.push_back(t);
  }
  return ts;
}

Property commute_qh() {
  return {
      "commute_qh",
      [](Generator& g) {
        const PathPoint p = g.path_point();
        std::vector<Scalar> ts = sample_times(g);
        for (Scalar& t : commutation_breakpoints(p)) ts.push_back(std::move(t));
        return json{{"p", io::encode(p)}, {"times", encode_times(ts)}};
      },
      [](const json& in, const TrialPlan& plan) {
        const auto labels = plan.label_space();
        const PathPoint p = io::decode_path_point(in.at("p"));
        const PointConfig z = q_eval(p);
        Outcome out;
        for (const Scalar& t : decode_times(in.at("times")))
          if (!(q_eval(H_map(t, p, *labels)) == h_impl(t, z, *labels, plan.fault)))
            out.ok = false;
        return out;
      }};
}

Property fiber_diagram_multiset() {
  return {
      "fiber_diagram_multiset",
      [](Generator& g) { return json{{"p", io::encode(g.path_point())}}; },
      [](const json& in, const TrialPlan& plan) {
        const auto labels = plan.label_space();
        const PathPoint p = io::decode_path_point(in.at("p"));
        const SegmentConfig lhs = psi_bar(H_map(Scalar(1), p, *labels));
        const SegmentConfig contracted = map_segment_config(
            kIdBase, [&](const XLabel& x) { return labels->contract(Scalar(1), x); },
            psi_bar(p));
        const SegmentConfig rhs =
            xi(contracted, xi_element(p.w(), p.s(), *labels));
        Outcome out;
        out.ok = label_multiset(lhs) == label_multiset(rhs);
        return out;
      }};
}

// ---- loop suite ------------------------------------------------------------

Property loop_endpoints() {
  return {
      "loop_endpoints",
      [](Generator& g) { return json{{"w", io::encode(g.segment_config(true))}}; },
      [](const json& in, const TrialPlan&) {
        const Loop loop(io::decode_segment_config(in.at("w")));
        Outcome out;
        out.ok = loop.at(Scalar(0)).empty() && loop.at(Scalar(1)).empty();
        return out;
      }};
}

Property scan_validity() {
  return {
      "scan_validity",
      [](Generator& g) {
        return json{{"w", io::encode(g.segment_config(true))},
                    {"times", encode_times(sample_times(g))}};
      },
      [](const json& in, const TrialPlan&) {
        const SegmentConfig w = io::decode_segment_config(in.at("w"));
        Outcome out;
        for (const Scalar& t : decode_times(in.at("times"))) {
          const PointConfig zt = alpha_eval(w, t);  // throws on invalid output
          for (const PointEntry& e : zt.entries()) {
            if (e.label.degree() != 1) out.ok = false;
            const Scalar& s = e.label.params()[0];
            if (!(s > Scalar(0) && s < Scalar(1))) out.ok = false;
          }
          if (zt.size() > w.size()) out.ok = false;
        }
        return out;
      }};
}

Property lambda_section_identity() {
  return {
      "lambda_section_identity",
      [](Generator& g) { return json{{"z", io::encode(g.suspension_config())}}; },
      [](const json& in, const TrialPlan& plan) {
        const PointConfig z = io::decode_point_config(in.at("z"));
        Outcome out;
        out.ok = alpha_eval(lambda_impl(z, plan.fault), Scalar(1, 2)) == z;
        return out;
      }};
}

Property q_quotient_soundness() {
  return {
      "q_quotient_soundness",
      [](Generator& g) {
        const SegmentConfig w = g.segment_config(true);
        const Scalar s = g.rng().chance(1, 4) ? Scalar(1) : g.unit_closed();
        json junk = json::array();
        for (const SegmentEntry& e : g.junk_segments(w, s, 3))
          junk.push_back(json{{"a", io::encode(e.a)},
                              {"b", io::encode(e.b)},
                              {"y", io::encode(e.y)},
                              {"x", io::encode(e.x)}});
        return json{{"w", io::encode(w)}, {"s", io::encode(s)}, {"junk", std::move(junk)}};
      },
      [](const json& in, const TrialPlan&) {
        const SegmentConfig w = io::decode_segment_config(in.at("w"));
        const Scalar s = io::decode_scalar(in.at("s"));
        std::vector<SegmentEntry> combined = w.entries();
        for (SegmentEntry& e : io::decode_segment_entries(in.at("junk")))
          combined.push_back(std::move(e));
        const SegmentConfig padded = SegmentConfig::normalized(std::move(combined));
        Outcome out;
        out.ok = q_eval(PathPoint::normalized(padded, s)) ==
                     q_eval(PathPoint::normalized(w, s)) &&
                 alpha_eval(padded, s) == alpha_eval(w, s);
        return out;
      }};
}

Property alpha_bar_freeze() {
  return {
      "alpha_bar_freeze",
      [](Generator& g) {
        return json{{"p", io::encode(g.path_point())},
                    {"times", encode_times(sample_times(g))}};
      },
      [](const json& in, const TrialPlan&) {
        const PathPoint p = io::decode_path_point(in.at("p"));
        Outcome out;
        out.ok = alpha_bar_eval(p, Scalar(0)).empty() &&
                 alpha_bar_eval(p, Scalar(1)) == q_eval(p);
        for (const Scalar& t : decode_times(in.at("times"))) {
          const PointConfig value = alpha_bar_eval(p, t);
          if (!(value == alpha_eval(p.w(), min(t, p.s())))) out.ok = false;
          if (t >= p.s() && !(value == q_eval(p))) out.ok = false;
        }
        return out;
      }};
}

Property box_dim1_coherence() {
  return {
      "box_dim1_coherence",
      [](Generator& g) {
        return json{{"w", io::encode(g.segment_config(true))},
                    {"times", encode_times(sample_times(g))}};
      },
      [](const json& in, const TrialPlan&) {
        const SegmentConfig w = io::decode_segment_config(in.at("w"));
        const BoxConfig box = segment_to_box(w);
        Outcome out;
        out.ok = phi_n(box) == phi(w) && box_to_segment(box) == w;
        for (const Scalar& t : decode_times(in.at("times")))
          if (!(alpha_n_eval(box, {t}) == alpha_eval(w, t))) out.ok = false;
        return out;
      }};
}

Property box_boundary_collapse() {
  return {
      "box_boundary_collapse",
      [](Generator& g) {
        return json{{"box", io::encode(g.box_config(2))},
                    {"t", io::encode(g.unit_closed())}};
      },
      [](const json& in, const TrialPlan&) {
        const BoxConfig box = io::decode_box_config(in.at("box"));
        const Scalar t = io::decode_scalar(in.at("t"));
        Outcome out;
        for (const Scalar& edge : {Scalar(0), Scalar(1)}) {
          if (!alpha_n_eval(box, {edge, t}).empty()) out.ok = false;
          if (!alpha_n_eval(box, {t, edge}).empty()) out.ok = false;
          if (!alpha_n_eval(box, {edge, edge}).empty()) out.ok = false;
        }
        return out;
      }};
}

// ---- suite registry --------------------------------------------------------

const std::vector<Property>& suite_properties(const std::string& suite) {
  static const std::vector<Property> equivalence = {
      weak_metric_axioms(),     g_metric_properties(), label_contraction_axioms(),
      retraction_identity(),    deformation_validity(), equivariance_normal_form(),
      coefficient_composition(), relation_soundness(),  mu_below_shrink(),
      functoriality()};
  static const std::vector<Property> dold_thom = {
      fiber_section(),   fiber_inverse(), fiber_homotopy_over_v(), collapse_on_u(),
      level_monotone(),  commute_qh(),    fiber_diagram_multiset()};
  static const std::vector<Property> loop = {
      loop_endpoints(),      scan_validity(),     lambda_section_identity(),
      q_quotient_soundness(), alpha_bar_freeze(), box_dim1_coherence(),
      box_boundary_collapse()};
  if (suite == "equivalence") return equivalence;
  if (suite == "dold-thom") return dold_thom;
  if (suite == "loop") return loop;
  throw input_error("unknown suite '" + suite + "'");
}

AuditReport run_suite(const std::string& name, const TrialPlan& plan) {
  AuditReport report;
  report.suite = name;
  report.plan = plan;
  for (const Property& prop : suite_properties(name)) {
    Generator gen(plan, fnv1a(prop.name));
    PropertyReport pr;
    pr.name = prop.name;
    for (int trial = 0; trial < plan.trials; ++trial) {
      json inputs = prop.gen(gen);
      Outcome out;
      try {
        out = prop.check(inputs, plan);
      } catch (const std::exception& e) {
        out.applicable = true;
        out.ok = false;
        inputs["exception"] = e.what();
      }
      ++pr.trials;
      if (!out.applicable) continue;
      ++pr.applicable;
      if (!out.ok) {
        if (pr.failures == 0) pr.counterexample = inputs;
        ++pr.failures;
      }
    }
    report.properties.push_back(std::move(pr));
  }
  return report;
}

}  // namespace

bool AuditReport::passed() const {
  return std::ranges::all_of(properties,
                             [](const PropertyReport& p) { return p.passed(); });
}

json AuditReport::to_json() const {
  json props = json::array();
  for (const PropertyReport& p : properties) {
    json entry{{"name", p.name},
               {"trials", p.trials},
               {"applicable", p.applicable},
               {"failures", p.failures}};
    if (p.counterexample) entry["counterexample"] = *p.counterexample;
    props.push_back(std::move(entry));
  }
  return json{{"suite", suite},
              {"plan", plan.to_json()},
              {"note",
               "homotopy-level claims are audited through exactly checkable "
               "consequences (identities, containments, multiset equalities) "
               "on sampled inputs only"},
              {"passed", passed()},
              {"properties", std::move(props)}};
}

std::string AuditReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << "  seed=" << plan.seed << " trials=" << plan.trials
      << " base=" << plan.base_model << " labels=" << plan.label_model
      << " fault=" << fault_name(plan.fault) << "\n";
  out << "note: homotopy-level claims are audited through exactly checkable "
         "consequences (identities, containments, multiset equalities) on "
         "sampled inputs only\n";
  for (const PropertyReport& p : properties) {
    out << (p.passed() ? "  PASS " : "  FAIL ") << p.name << "  trials=" << p.trials
        << " applicable=" << p.applicable;
    if (!p.passed()) out << " failures=" << p.failures;
    out << "\n";
    if (p.counterexample)
      out << "       counterexample: " << p.counterexample->dump() << "\n";
  }
  out << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

AuditReport run_equivalence_suite(const TrialPlan& plan) {
  return run_suite("equivalence", plan);
}

AuditReport run_quasifibration_audit(const TrialPlan& plan) {
  return run_suite("dold-thom", plan);
}

AuditReport run_loop_suite(const TrialPlan& plan) {
  return run_suite("loop", plan);
}

std::vector<AuditReport> run_all_suites(const TrialPlan& plan) {
  return {run_equivalence_suite(plan), run_quasifibration_audit(plan),
          run_loop_suite(plan)};
}

bool replay_witness(const std::string& suite, const std::string& property,
                    const json& inputs, const TrialPlan& plan) {
  for (const Property& prop : suite_properties(suite)) {
    if (prop.name != property) continue;
    try {
      const Outcome out = prop.check(inputs, plan);
      return !out.applicable || out.ok;
    } catch (const std::exception&) {
      return false;
    }
  }
  throw input_error("unknown property '" + property + "' in suite '" + suite + "'");
}

std::vector<std::string> property_names(const std::string& suite) {
  std::vector<std::string> names;
  for (const Property& prop : suite_properties(suite)) names.push_back(prop.name);
  return names;
}

}  // namespace confscan::harness
