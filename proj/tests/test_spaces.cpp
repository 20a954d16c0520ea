#include <doctest.h>

#include "confscan/base_space.hpp"
#include "confscan/errors.hpp"
#include "confscan/label_space.hpp"
#include "test_support.hpp"

using namespace confscan;
using namespace confscan::testing;

TEST_CASE("scalar arithmetic is exact") {
  CHECK(Q(1, 3) + Q(1, 6) == Q(1, 2));
  CHECK(Q(2, 4) == Q(1, 2));
  CHECK(Q(-6, 8) == Q(-3, 4));
  CHECK(Q(1, 3) * Q(3, 5) == Q(1, 5));
  CHECK(Q(1, 2) / Q(1, 4) == Q(2));
  CHECK(abs(Q(-7, 3)) == Q(7, 3));
  CHECK(min(Q(1, 3), Q(1, 4)) == Q(1, 4));
  CHECK(max(Q(1, 3), Q(1, 4)) == Q(1, 3));
  CHECK(Q(1, 3) < Q(1, 2));
  CHECK_THROWS_AS(Q(1, 2) / Q(0), input_error);
  CHECK_THROWS_AS(Scalar(1, 0), input_error);
  CHECK(Scalar::parse("3/4") == Q(3, 4));
  CHECK(Scalar::parse("-5") == Q(-5));
  CHECK_THROWS_AS(Scalar::parse("0.5"), input_error);
  CHECK_THROWS_AS(Scalar::parse("1/0"), input_error);
  CHECK_THROWS_AS(Scalar::parse("3-4"), input_error);
  CHECK_THROWS_AS(Scalar::parse("1//2"), input_error);
  CHECK_THROWS_AS(Scalar::parse("/2"), input_error);
  CHECK_THROWS_AS(Scalar::parse(""), input_error);
  CHECK(Q(65535, 65536).str() == "65535/65536");
}

TEST_CASE("rational line is a weak metric space") {
  auto line = rational_line();
  CHECK(line->distance(ly(0), ly(0)) == Q(0));
  CHECK(line->distance(ly(0), ly(3)) == Q(3));
  CHECK(line->distance(ly(3), ly(0)) == Q(3));
  CHECK(line->distance(ly(Q(1, 3)), ly(Q(1, 2))) == Q(1, 6));
  CHECK(line->contains(ly(7)));
  CHECK_FALSE(line->contains(BasePoint::discrete(0)));
}

TEST_CASE("discrete space distances") {
  auto d = discrete_space(4);
  CHECK(d->distance(BasePoint::discrete(1), BasePoint::discrete(1)) == Q(0));
  CHECK(d->distance(BasePoint::discrete(1), BasePoint::discrete(2)) == Q(1));
  CHECK(d->contains(BasePoint::discrete(3)));
  CHECK_FALSE(d->contains(BasePoint::discrete(4)));
  CHECK_THROWS_AS(discrete_space(0), input_error);
}

TEST_CASE("product base space takes the max of coordinate gaps") {
  auto line = rational_line();
  auto prod1 = product_base_space(1, line);
  // diagonal
  CHECK(prod1->distance(with_head(Q(0), ly(5)), with_head(Q(0), ly(5))) == Q(0));
  // one-dimensional L-infinity
  CHECK(prod1->distance(with_head(Q(0), ly(5)), with_head(Q(3), ly(5))) == Q(3));
  // base distance dominates: d_Y(0, 2) = 2 > |1 - 1|
  CHECK(prod1->distance(with_head(Q(1), ly(0)), with_head(Q(1), ly(2))) == Q(2));
  CHECK_THROWS_AS(product_base_space(0, line), input_error);

  auto prod2 = product_base_space(2, line);
  BasePoint p = with_head(Q(1), with_head(Q(2), ly(0)));
  BasePoint q = with_head(Q(5, 2), with_head(Q(2), ly(1)));
  CHECK(prod2->distance(p, q) == Q(3, 2));  // max(3/2, 0, 1)
  CHECK(prod2->contains(p));
  CHECK_FALSE(prod2->contains(ly(0)));
}

TEST_CASE("base point order is lexicographic") {
  CHECK(compare(ly(0), ly(1)) == std::strong_ordering::less);
  CHECK(compare(with_head(Q(0), ly(9)), with_head(Q(1), ly(0))) ==
        std::strong_ordering::less);
  CHECK(compare(with_head(Q(1), ly(2)), with_head(Q(1), ly(2))) ==
        std::strong_ordering::equal);
  auto [head, rest] = split_head(with_head(Q(7), ly(3)));
  CHECK(head == Q(7));
  CHECK(rest == ly(3));
  CHECK_THROWS_AS(split_head(ly(0)), input_error);
}

TEST_CASE("g metric hand values") {
  auto line = rational_line();
  CHECK(g_metric(Q(0), ly(0), Q(0), ly(0), *line) == Q(0));
  CHECK(g_metric(Q(0), ly(0), Q(1), ly(0), *line) == Q(1, 4));
  // |a-a'| = 2, d = 1: (4+1) / (2 (2+1+1)) = 5/8
  CHECK(g_metric(Q(0), ly(0), Q(2), ly(1), *line) == Q(5, 8));
  // bound g <= |a-a'|/2 on the diagonal in Y
  for (std::int64_t n = -4; n <= 4; ++n) {
    const Scalar g = g_metric(Q(0), ly(2), Q(n, 3), ly(2), *line);
    CHECK(Q(2) * g <= abs(Q(n, 3)));
    CHECK((g.is_zero() == (n == 0)));
  }
}

TEST_CASE("interval label space contraction") {
  auto X = interval_label_space();
  CHECK(X->basepoint() == xi(0));
  CHECK(X->basepoint().is_basepoint());
  for (std::int64_t n = 0; n <= 4; ++n) {
    CHECK(X->contract(Q(n, 4), xi(0)) == xi(0));  // K(t, *) = *
  }
  CHECK(X->contract(Q(0), xi(7, 9)) == xi(7, 9));  // K(0, .) = id
  CHECK(X->contract(Q(1), xi(1, 4)) == xi(0));
  CHECK(X->contract(Q(1), xi(1)) == xi(1));
  CHECK(X->contract(Q(1), xi(1, 2)) == xi(1, 3));      // (4/2 - 1)/3
  CHECK(X->contract(Q(1, 2), xi(1, 2)) == xi(5, 12));  // mid-deformation
  CHECK(X->in_W(xi(1, 8)));
  CHECK(X->in_W(xi(0)));
  CHECK_FALSE(X->in_W(xi(1, 4)));
  CHECK(X->contract(Q(1), xi(1, 8)) == xi(0));  // K_1(W) = {*}
  CHECK_THROWS_AS(X->contract(Q(2), xi(1, 2)), input_error);
  CHECK_FALSE(X->contains(xi(3, 2)));
}

TEST_CASE("wedge label space keeps arms apart") {
  auto X = wedge_label_space(3);
  const XLabel star = X->basepoint();
  CHECK(star.is_basepoint());
  CHECK(XLabel::wedge(2, Q(0)) == star);  // basepoint is arm-free
  const XLabel tip = XLabel::wedge(1, Q(1));
  const XLabel low = XLabel::wedge(2, Q(1, 8));
  CHECK(X->contains(tip));
  CHECK(X->contains(low));
  CHECK_FALSE(X->contains(XLabel::wedge(3, Q(1, 2))));
  CHECK(X->in_W(low));
  CHECK_FALSE(X->in_W(tip));
  CHECK(X->contract(Q(0), tip) == tip);
  CHECK(X->contract(Q(1), low) == star);
  CHECK(X->contract(Q(1), tip) == tip);
  CHECK(X->contract(Q(1), XLabel::wedge(1, Q(1, 2))) == XLabel::wedge(1, Q(1, 3)));
  CHECK(X->contract(Q(1, 2), star) == star);
  CHECK_THROWS_AS(wedge_label_space(1), input_error);
  // labels on different arms never merge away from the basepoint
  CHECK(XLabel::wedge(1, Q(1, 2)) != XLabel::wedge(2, Q(1, 2)));
}

TEST_CASE("space inference from points") {
  CHECK(infer_base_space(ly(2))->name() == "line");
  CHECK(infer_base_space(BasePoint::discrete(5))->contains(BasePoint::discrete(5)));
  auto prod = infer_base_space(with_head(Q(1), ly(0)));
  CHECK(prod->contains(with_head(Q(9), ly(4))));
  CHECK(infer_label_space(xi(1, 2))->name() == "interval");
  CHECK(infer_label_space(XLabel::wedge(2, Q(1, 2)))->contains(XLabel::wedge(2, Q(1))));
}
