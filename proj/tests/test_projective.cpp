#include <map>
#include <set>

#include "catch_amalgamated.hpp"
#include "scheme_forge/projective.hpp"

using namespace scheme_forge;

TEST_CASE("PG(2,q) has q^2+q+1 points and lines, each line q+1 points") {
  for (int q : {5, 7, 9}) {
    auto f = GaloisField::create(q);
    const auto points = all_points(*f);
    const auto lines = all_lines(*f);
    CHECK(points.size() == static_cast<std::size_t>(q * q + q + 1));
    CHECK(lines.size() == points.size());
    for (const auto& l : lines) {
      int on = 0;
      for (const auto& p : points) on += incident(p, l);
      CHECK(on == q + 1);
    }
  }
}

TEST_CASE("the conic is an oval and lines split by how they meet it") {
  for (int q : {5, 7, 9, 11, 13}) {
    auto f = GaloisField::create(q);
    const auto conic = conic_points(*f);
    REQUIRE(conic.size() == static_cast<std::size_t>(q + 1));
    for (const auto& p : conic) CHECK(quadratic_form(p.coords()).is_zero());
    std::map<LineClass, int> counts;
    for (const auto& l : all_lines(*f)) {
      const int k = conic_intersection_size(l, conic);
      CHECK(k <= 2);
      const LineClass c = classify_line(l, conic);
      ++counts[c];
      CHECK(c == (k == 2 ? LineClass::Hyperbolic : k == 1 ? LineClass::Tangent : LineClass::Elliptic));
      // a line is hyperbolic/tangent/elliptic exactly when its pole is
      CHECK(classify_point(polarity_line_to_point(l)) == c);
    }
    CHECK(counts[LineClass::Hyperbolic] == q * (q + 1) / 2);
    CHECK(counts[LineClass::Tangent] == q + 1);
    CHECK(counts[LineClass::Elliptic] == q * (q - 1) / 2);
    for (const auto& p : conic) {
      int tangents = 0;
      for (const auto& l : all_lines(*f)) tangents += incident(p, l) && classify_line(l, conic) == LineClass::Tangent;
      CHECK(tangents == 1);
    }
  }
}

TEST_CASE("polarity is an involution between points and lines") {
  auto f = GaloisField::create(7);
  for (const auto& p : all_points(*f)) CHECK(polarity_line_to_point(polarity_point_to_line(p)) == p);
  for (const auto& l : all_lines(*f)) CHECK(polarity_point_to_line(polarity_line_to_point(l)) == l);
}

TEST_CASE("hyperbolic_line joins the two conic points") {
  for (int q : {5, 9}) {
    auto f = GaloisField::create(q);
    const auto pts = projective_line(*f);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const ProjLine l = hyperbolic_line(*f, pts[i], pts[j]);
        CHECK(incident(conic_param(*f, pts[i]), l));
        CHECK(incident(conic_param(*f, pts[j]), l));
      }
    }
  }
}

TEST_CASE("conic_param is a bijection onto the conic") {
  auto f = GaloisField::create(11);
  std::set<std::uint32_t> keys;
  for (const auto& x : projective_line(*f)) keys.insert(conic_param(*f, x).key());
  CHECK(keys.size() == 12);
}

TEST_CASE("cross ratio matches the affine formula and the limit at infinity") {
  for (int q : {5, 7, 9}) {
    auto f = GaloisField::create(q);
    const auto els = f->elements();
    const ProjPoint1 inf = ProjPoint1::infinity();
    for (const auto& x : els) {
      for (const auto& y : els) {
        for (const auto& z : els) {
          for (const auto& w : els) {
            if (x == y || x == z || x == w || y == z || y == w || z == w) continue;
            const auto expected = ((x - z) * (y - w)) / ((x - w) * (y - z));
            CHECK(cross_ratio(*f, ProjPoint1(x), ProjPoint1(y), ProjPoint1(z), ProjPoint1(w)) == ProjPoint1(expected));
          }
          if (x == y || x == z || y == z || x.is_zero()) continue;
          // y -> inf: (x-z)/(x-w) with w in place of y
          const auto lim = (x - y) / (x - z);
          CHECK(cross_ratio(*f, ProjPoint1(x), inf, ProjPoint1(y), ProjPoint1(z)) == ProjPoint1(lim));
        }
      }
    }
  }
}

TEST_CASE("cross ratio degenerate cases") {
  auto f = GaloisField::create(7);
  const ProjPoint1 a(f->from_int(1)), b(f->from_int(2)), c(f->from_int(3));
  CHECK(cross_ratio(*f, a, b, a, c) == ProjPoint1(f->zero()));
  CHECK(cross_ratio(*f, a, b, c, a).is_infinite());
  CHECK_THROWS_AS(cross_ratio(*f, a, a, a, b), IndeterminateCrossRatio);
}
