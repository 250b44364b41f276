#include <set>

#include "catch_amalgamated.hpp"
#include "scheme_forge/finite_field.hpp"

using namespace scheme_forge;

namespace {

int power_mod(long long b, long long e, int p) {
  long long r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

// Schoolbook product of coefficient vectors reduced by a monic modulus.
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& mod, int p) {
  const int m = static_cast<int>(mod.size()) - 1;
  std::vector<int> prod(2 * m - 1, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (int d = 2 * m - 2; d >= m; --d) {
    const int c = prod[d];
    if (c == 0) continue;
    for (int i = 0; i <= m; ++i) prod[d - m + i] = ((prod[d - m + i] - c * mod[i]) % p + p) % p;
  }
  prod.resize(m);
  return prod;
}

}  // namespace

TEST_CASE("prime fields agree with integer arithmetic mod p") {
  for (int p : {5, 7, 11, 13}) {
    auto f = GaloisField::create(p);
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        const auto x = f->from_int(a), y = f->from_int(b);
        CHECK((x + y) == f->from_int((a + b) % p));
        CHECK((x * y) == f->from_int(a * b % p));
        CHECK((x - y) == f->from_int(((a - b) % p + p) % p));
        if (b != 0) CHECK((x / y) == f->from_int(a * power_mod(b, p - 2, p) % p));
      }
    }
  }
}

TEST_CASE("the primitive element of GF(7) is 3") {
  auto f = GaloisField::create(7);
  int smallest = 0;
  for (int g = 2; g < 7 && !smallest; ++g) {
    std::set<int> powers;
    for (int e = 0; e < 6; ++e) powers.insert(power_mod(g, e, 7));
    if (powers.size() == 6) smallest = g;
  }
  REQUIRE(smallest == 3);
  CHECK(f->primitive_element() == f->from_int(3));
}

TEST_CASE("built-in extension moduli are primitive") {
  for (const auto& [q, poly] : conway_polynomials()) {
    auto f = GaloisField::create(q);
    const auto x = f->from_coeffs(std::vector<int>{0, 1});
    CHECK(f->order(x.id()) == q - 1);
  }
}

TEST_CASE("extension field multiplication matches schoolbook polynomial products") {
  for (int q : {9, 25, 27, 49}) {
    auto f = GaloisField::create(q);
    for (const auto& x : f->elements()) {
      for (const auto& y : f->elements()) {
        const auto expected = poly_mulmod(x.coeffs(), y.coeffs(), f->modulus(), f->p());
        CHECK((x * y).coeffs() == expected);
      }
    }
  }
}

TEST_CASE("field axioms hold by brute force") {
  for (int q : {9, 25, 27}) {
    auto f = GaloisField::create(q);
    const auto els = f->elements();
    for (const auto& a : els) {
      CHECK((a + f->zero()) == a);
      CHECK((a * f->one()) == a);
      CHECK((a + (-a)).is_zero());
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
      for (const auto& b : els) {
        CHECK((a + b) == (b + a));
        CHECK((a * b) == (b * a));
        for (const auto& c : els) {
          if ((a.id() + b.id() + c.id()) % 3 != 0) continue;
          CHECK(((a + b) + c) == (a + (b + c)));
          CHECK(((a * b) * c) == (a * (b * c)));
          CHECK((a * (b + c)) == (a * b + a * c));
        }
      }
    }
  }
}

TEST_CASE("element ids order coefficient vectors with the constant term first") {
  auto f = GaloisField::create(9);
  const auto els = f->elements();
  for (std::size_t i = 1; i < els.size(); ++i) CHECK(els[i - 1].coeffs() < els[i].coeffs());
}

TEST_CASE("Frobenius is an automorphism and sigma an involution") {
  for (int q : {9, 25, 27, 81}) {
    auto f = GaloisField::create(q);
    std::size_t fixed = 0;
    for (const auto& a : f->elements()) {
      CHECK(a.frobenius(1) == a.pow(f->p()));
      CHECK(a.frobenius(f->m() - 1).frobenius(1) == a);
      for (const auto& b : {f->primitive_element(), f->from_int(2)}) {
        CHECK((a * b).frobenius(1) == a.frobenius(1) * b.frobenius(1));
        CHECK((a + b).frobenius(1) == a.frobenius(1) + b.frobenius(1));
      }
      if (f->has_involution()) {
        CHECK(a.sigma().sigma() == a);
        fixed += a.sigma() == a;
      }
    }
    if (f->has_involution()) {
      int root = 1;
      while (root * root < q) ++root;
      CHECK(fixed == static_cast<std::size_t>(root));
    }
  }
}

TEST_CASE("square classes follow Euler's criterion") {
  for (int q : {5, 7, 9, 11, 13, 25, 27, 49}) {
    auto f = GaloisField::create(q);
    int squares = 0;
    for (const auto& a : f->elements()) {
      if (a.is_zero()) continue;
      squares += a.is_square();
      CHECK(a.is_square() == a.pow((q - 1) / 2).is_one());
    }
    CHECK(squares == (q - 1) / 2);
    CHECK(f->from_int(2).is_square() == two_is_square_by_legendre(f->p(), f->m()));
    CHECK_FALSE(f->fixed_nonsquare().is_square());
  }
}

TEST_CASE("invalid orders and moduli are rejected") {
  for (int q : {2, 3, 4, 6, 15, 45, 100, 4096}) CHECK_THROWS_AS(GaloisField::create(q), InvalidField);
  CHECK_THROWS_WITH(GaloisField::create(343), Catch::Matchers::ContainsSubstring("--modulus"));
  CHECK_THROWS_AS(GaloisField::create(9, std::vector<int>{2, 0, 1}), InvalidField);  // x^2 - 1
  CHECK_THROWS_AS(GaloisField::create(9, std::vector<int>{1, 0, 2}), InvalidField);  // not monic
  CHECK_THROWS_AS(GaloisField::create(9, std::vector<int>{1, 1, 0, 1}), InvalidField);
  auto f = GaloisField::create(9, std::vector<int>{1, 0, 1});
  const auto i = f->from_coeffs(std::vector<int>{0, 1});
  CHECK((i * i) == f->from_int(-1));
  CHECK_THROWS_AS(f->zero().inv(), DivisionByZero);
  CHECK_THROWS_AS(f->zero().is_square(), DomainError);
}

TEST_CASE("elements from different fields do not mix") {
  auto f = GaloisField::create(7), g = GaloisField::create(7);
  CHECK_THROWS(f->one() + g->one());
}
