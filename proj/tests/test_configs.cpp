#include <doctest.h>

#include "confscan/configs.hpp"
#include "confscan/errors.hpp"
#include "confscan/injection.hpp"
#include "test_support.hpp"

using namespace confscan;
using namespace confscan::testing;

TEST_CASE("injection validation and composition") {
  CHECK_THROWS_AS(Injection({0, 0}), input_error);
  const Injection id2({0, 1});
  const Injection swap2({1, 0});
  const Injection into_second({1});
  CHECK(compose(swap2, swap2) == id2);
  CHECK(compose(swap2, into_second) == Injection({0}));
  CHECK_THROWS_AS(compose(Injection({1}), Injection({1})), input_error);
}

TEST_CASE("pullback examples") {
  const std::vector<BasePoint> pair = {ly(10), ly(20)};
  CHECK(pullback(Injection({0, 1}), pair) == pair);
  CHECK(pullback(Injection({1}), pair) == std::vector<BasePoint>{ly(20)});
  CHECK(pullback(Injection({1, 0}), pair) == std::vector<BasePoint>{ly(20), ly(10)});
  CHECK_THROWS_AS(pullback(Injection({2}), pair), input_error);
  const std::vector<BasePoint> dup = {ly(1), ly(1)};
  CHECK_THROWS_AS(pullback(Injection({0}), dup), input_error);
}

TEST_CASE("pushforward examples") {
  const Label star = Label::base();
  const Label x1 = Label::plain(xi(1, 2));
  CHECK(pushforward(Injection({0}), {x1}, 1, star) == std::vector<Label>{x1});
  CHECK(pushforward(Injection({1}), {x1}, 2, star) == std::vector<Label>{star, x1});
  CHECK(pushforward(Injection(std::vector<std::size_t>{}), {}, 2, star) ==
        std::vector<Label>{star, star});
  CHECK_THROWS_AS(pushforward(Injection({3}), {x1}, 2, star), input_error);
  CHECK_THROWS_AS(pushforward(Injection({0, 1}), {x1}, 2, star), input_error);
}

TEST_CASE("labels collapse on construction") {
  CHECK(Label::plain(xi(0)).is_basepoint());
  CHECK(Label::suspended(xi(1, 2), {Q(0)}).is_basepoint());
  CHECK(Label::suspended(xi(1, 2), {Q(1)}).is_basepoint());
  CHECK(Label::suspended(xi(0), {Q(1, 2)}).is_basepoint());
  CHECK(Label::suspended(xi(1, 2), {Q(1, 2), Q(1)}).is_basepoint());
  const Label l = Label::suspended(xi(1, 2), {Q(1, 3), Q(2, 3)});
  CHECK(l.degree() == 2);
  CHECK(l.params()[1] == Q(2, 3));
  CHECK_THROWS_AS(Label::suspended(xi(1, 2), {Q(3, 2)}), input_error);
  CHECK_THROWS_AS(Label::base().x(), input_error);
}

TEST_CASE("point config normalization") {
  // basepoint-labeled entries drop out
  CHECK(points({{ly(1), Label::base()}, {ly(2), Label::plain(xi(1, 2))}}) ==
        points({{ly(2), Label::plain(xi(1, 2))}}));
  CHECK(points({}).empty());
  CHECK(filtration_level(points({})) == 0);
  // canonical sort regardless of input order
  const PointConfig sorted = points({{ly(2), Label::plain(xi(1, 2))},
                                     {ly(1), Label::plain(xi(1, 3))}});
  CHECK(sorted.entries()[0].y == ly(1));
  CHECK(sorted.entries()[1].y == ly(2));
  CHECK(filtration_level(sorted) == 2);
  CHECK(filtration_level(points({{ly(0), Label::plain(xi(1))}})) == 1);
  CHECK_THROWS_AS(points({{ly(1), Label::plain(xi(1, 2))}, {ly(1), Label::plain(xi(1, 3))}}),
                  config_error);
  // duplicates are rejected even when one label is the basepoint
  CHECK_THROWS_AS(points({{ly(1), Label::base()}, {ly(1), Label::plain(xi(1, 3))}}),
                  config_error);
}

TEST_CASE("relation generator is invisible in normal form") {
  const std::vector<BasePoint> ys = {ly(1), ly(2), ly(3)};
  const std::vector<Label> xs = {Label::plain(xi(1, 2)), Label::base()};
  const Injection nu({2, 0});
  const std::vector<BasePoint> pulled = pullback(nu, ys);
  std::vector<PointEntry> lhs;
  for (std::size_t i = 0; i < xs.size(); ++i) lhs.push_back({pulled[i], xs[i]});
  const std::vector<Label> pushed = pushforward(nu, xs, ys.size(), Label::base());
  std::vector<PointEntry> rhs;
  for (std::size_t i = 0; i < ys.size(); ++i) rhs.push_back({ys[i], pushed[i]});
  CHECK(PointConfig::normalized(lhs) == PointConfig::normalized(rhs));
}

TEST_CASE("map_point_config functoriality and errors") {
  const PointConfig c = points({{ly(1), Label::plain(xi(1, 2))},
                                {ly(2), Label::plain(xi(1, 8))}});
  const LabelMap id_label = [](const Label& l) { return l; };
  const BaseMap id_base = [](const BasePoint& y) { return y; };
  CHECK(map_point_config(id_base, id_label, c) == c);
  // a constant label map empties the configuration
  CHECK(map_point_config(id_base, [](const Label&) { return Label::base(); }, c).empty());
  // contracting a label inside W through K_1 deletes its point
  auto X = interval_label_space();
  const LabelMap k1 = [&X](const Label& l) {
    return l.is_basepoint() ? Label::base() : Label::plain(X->contract(Q(1), l.x()));
  };
  CHECK(map_point_config(id_base, k1, points({{ly(1), Label::plain(xi(1, 8))}})).empty());
  const BaseMap collapse_base = [](const BasePoint&) { return ly(0); };
  CHECK_THROWS_AS(map_point_config(collapse_base, id_label, c), input_error);
}

TEST_CASE("segment config normalization") {
  // basepoint label drops out
  CHECK(segs({{Q(0), Q(1), ly(0), xi(0)}}).empty());
  // distinct base points may overlap in time
  const SegmentConfig two = segs({{Q(0), Q(1), ly(0), xi(1, 2)},
                                  {Q(0), Q(1), ly(1), xi(1, 3)}});
  CHECK(two.size() == 2);
  CHECK(two.entries()[0].y == ly(0));
  CHECK_THROWS_AS(segs({{Q(0), Q(2, 3), ly(0), xi(1, 2)},
                        {Q(1, 3), Q(1), ly(0), xi(1, 3)}}),
                  config_error);
  CHECK_THROWS_AS(segs({{Q(1), Q(1), ly(0), xi(1, 2)}}), config_error);
  CHECK_THROWS_AS(segs({{Q(2), Q(1), ly(0), xi(1, 2)}}), config_error);
  // touching endpoints over one base point are fine
  CHECK(segs({{Q(0), Q(1, 2), ly(0), xi(1, 2)}, {Q(1, 2), Q(1), ly(0), xi(1, 3)}}).size() == 2);
  CHECK(segs({{Q(1, 8), Q(3, 8), ly(0), xi(1, 2)}}).in_unit_interval());
  CHECK_FALSE(segs({{Q(-1), Q(1, 2), ly(0), xi(1, 2)}}).in_unit_interval());
}

TEST_CASE("union is partial and checked") {
  const SegmentConfig w = segs({{Q(0), Q(1, 3), ly(0), xi(1, 2)}});
  CHECK(union_configs(w, SegmentConfig()) == w);
  const SegmentConfig joined = union_configs(w, segs({{Q(2, 3), Q(1), ly(0), xi(1, 3)}}));
  CHECK(joined.size() == 2);
  CHECK(joined.entries()[0].b == Q(1, 3));
  CHECK_THROWS_AS(union_configs(segs({{Q(0), Q(2, 3), ly(0), xi(1, 2)}}),
                                segs({{Q(1, 3), Q(1), ly(0), xi(1, 3)}})),
                  config_error);
  // the same open segment twice is an overlap, whatever the labels
  CHECK_THROWS_AS(union_configs(w, w), config_error);
}

TEST_CASE("shrink compresses into a slice") {
  const SegmentConfig w = segs({{Q(1, 4), Q(3, 4), ly(0), xi(1, 2)}});
  CHECK(shrink(Q(0), Q(1), w) == w);
  CHECK(shrink(Q(0), Q(1, 2), w) == segs({{Q(1, 8), Q(3, 8), ly(0), xi(1, 2)}}));
  CHECK(shrink(Q(1, 2), Q(1), w) == segs({{Q(5, 8), Q(7, 8), ly(0), xi(1, 2)}}));
  CHECK_THROWS_AS(shrink(Q(1, 2), Q(1, 4), w), input_error);
  CHECK_THROWS_AS(shrink(Q(1, 2), Q(1, 2), w), input_error);
}

TEST_CASE("mu packs halves") {
  const SegmentConfig w = segs({{Q(1, 4), Q(3, 4), ly(0), xi(1, 2)}});
  const SegmentConfig w2 = segs({{Q(1, 4), Q(3, 4), ly(0), xi(1, 3)}});
  CHECK(mu(SegmentConfig(), SegmentConfig()) == SegmentConfig());
  CHECK(mu(w, SegmentConfig()) == shrink(Q(0), Q(1, 2), w));
  CHECK(mu(w, w2) == segs({{Q(1, 8), Q(3, 8), ly(0), xi(1, 2)},
                           {Q(5, 8), Q(7, 8), ly(0), xi(1, 3)}}));
  CHECK_THROWS_AS(mu(segs({{Q(-1), Q(1, 2), ly(0), xi(1, 2)}}), w), input_error);
}

TEST_CASE("below keeps the early segments") {
  const SegmentConfig w = segs({{Q(1, 8), Q(3, 8), ly(0), xi(1, 2)},
                                {Q(5, 8), Q(7, 8), ly(0), xi(1, 3)}});
  CHECK(below(Q(1), w) == w);
  CHECK(below(Q(0), w).empty());
  CHECK(below(Q(1, 2), w) == segs({{Q(1, 8), Q(3, 8), ly(0), xi(1, 2)}}));
  CHECK(below(Q(3, 8), w) == segs({{Q(1, 8), Q(3, 8), ly(0), xi(1, 2)}}));
}

TEST_CASE("box configs extend segments") {
  std::vector<BoxEntry> raw;
  raw.push_back({{Q(1, 4), Q(1, 4)}, {Q(3, 4), Q(3, 4)}, ly(0), xi(1, 2)});
  const BoxConfig square = BoxConfig::normalized(2, std::move(raw));
  CHECK(square.dim() == 2);
  CHECK(square.in_unit_cube());

  // same base point: disjoint in the second coordinate is enough
  std::vector<BoxEntry> stacked;
  stacked.push_back({{Q(1, 4), Q(1, 8)}, {Q(3, 4), Q(3, 8)}, ly(0), xi(1, 2)});
  stacked.push_back({{Q(1, 4), Q(1, 2)}, {Q(3, 4), Q(7, 8)}, ly(0), xi(1, 3)});
  CHECK(BoxConfig::normalized(2, stacked).size() == 2);

  std::vector<BoxEntry> overlapping;
  overlapping.push_back({{Q(1, 4), Q(1, 4)}, {Q(3, 4), Q(3, 4)}, ly(0), xi(1, 2)});
  overlapping.push_back({{Q(1, 2), Q(1, 2)}, {Q(7, 8), Q(7, 8)}, ly(0), xi(1, 3)});
  CHECK_THROWS_AS(BoxConfig::normalized(2, overlapping), config_error);

  std::vector<BoxEntry> degenerate;
  degenerate.push_back({{Q(1, 4), Q(1, 2)}, {Q(1, 4), Q(3, 4)}, ly(0), xi(1, 2)});
  CHECK_THROWS_AS(BoxConfig::normalized(2, degenerate), config_error);

  std::vector<BoxEntry> mismatched;
  mismatched.push_back({{Q(1, 4)}, {Q(3, 4)}, ly(0), xi(1, 2)});
  CHECK_THROWS_AS(BoxConfig::normalized(2, mismatched), input_error);

  const SegmentConfig w = segs({{Q(1, 8), Q(3, 8), ly(0), xi(1, 2)}});
  CHECK(box_to_segment(segment_to_box(w)) == w);
  CHECK_THROWS_AS(box_to_segment(square), input_error);

  // basepoint-labeled boxes drop out
  std::vector<BoxEntry> starred;
  starred.push_back({{Q(1, 4)}, {Q(3, 4)}, ly(0), xi(0)});
  CHECK(BoxConfig::normalized(1, starred).empty());
}

TEST_CASE("map_segment_config renormalizes") {
  auto X = interval_label_space();
  const SegmentConfig w = segs({{Q(1, 8), Q(3, 8), ly(0), xi(1, 8)},
                                {Q(5, 8), Q(7, 8), ly(1), xi(1, 2)}});
  const BaseMap id_base = [](const BasePoint& y) { return y; };
  const SegmentConfig contracted = map_segment_config(
      id_base, [&X](const XLabel& x) { return X->contract(Q(1), x); }, w);
  // the label inside W collapses, its segment disappears
  CHECK(contracted == segs({{Q(5, 8), Q(7, 8), ly(1), xi(1, 3)}}));
  CHECK_THROWS_AS(map_segment_config([](const BasePoint&) { return ly(9); },
                                     [](const XLabel& x) { return x; }, w),
                  input_error);
  // non-injective collapse is fine when the base points were equal already
  const SegmentConfig same_y = segs({{Q(1, 8), Q(3, 8), ly(0), xi(1, 2)},
                                     {Q(5, 8), Q(7, 8), ly(0), xi(1, 3)}});
  CHECK(map_segment_config([](const BasePoint&) { return ly(9); },
                           [](const XLabel& x) { return x; }, same_y)
            .size() == 2);
}
