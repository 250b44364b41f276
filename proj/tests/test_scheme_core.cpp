#include <numeric>

#include "catch_amalgamated.hpp"
#include "scheme_forge/orbital.hpp"
#include "scheme_forge/scheme.hpp"

using namespace scheme_forge;

namespace {

// p^k_ij counted over every pair (x, y) in class k; 0 when they disagree.
IntersectionNumbers brute_force(const Scheme& s, bool& constant) {
  const int c = s.num_classes();
  IntersectionNumbers p(c);
  std::vector<bool> seen(c, false);
  constant = true;
  std::vector<std::uint32_t> counts(c * c);
  for (std::uint32_t x = 0; x < s.n(); ++x) {
    for (std::uint32_t y = 0; y < s.n(); ++y) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::uint32_t z = 0; z < s.n(); ++z) ++counts[s.relation(x, z) * c + s.relation(z, y)];
      const int k = s.relation(x, y);
      for (int i = 0; i < c; ++i) {
        for (int j = 0; j < c; ++j) {
          if (!seen[k]) p.at(i, j, k) = counts[i * c + j];
          else if (p(i, j, k) != counts[i * c + j]) constant = false;
        }
      }
      seen[k] = true;
    }
  }
  return p;
}

Scheme psl_on_pairs(int q, bool stabilizer = true) {
  EnumeratedDomain pairs(GaloisField::create(q), DomainKind::Pairs);
  return stabilizer ? orbital_scheme_via_stabilizer(pairs, GroupId::PSL) : orbital_scheme(pairs, GroupId::PSL);
}

}  // namespace

TEST_CASE("T(10) has two classes of valency 16 and 28") {
  const Scheme t = triangular_scheme(10);
  CHECK(t.n() == 45);
  CHECK(t.d() == 2);
  CHECK(t.valencies() == std::vector<std::size_t>{1, 16, 28});
  CHECK(t.is_symmetric());
  bool constant = false;
  const auto p = brute_force(t, constant);
  CHECK(constant);
  CHECK(p(1, 1, 1) == 8);
  CHECK(intersection_numbers(t, Verification::Exhaustive) == p);
}

TEST_CASE("intersection numbers agree with brute force, sampled and exhaustive") {
  for (int q : {5, 7}) {
    const Scheme s = psl_on_pairs(q);
    bool constant = false;
    const auto oracle = brute_force(s, constant);
    CHECK(constant);
    CHECK(intersection_numbers(s, Verification::Sampled) == oracle);
    CHECK(intersection_numbers(s, Verification::Exhaustive) == oracle);
    CHECK(verify_axioms(s, Verification::Exhaustive).ok);
  }
}

TEST_CASE("class numbering is canonical") {
  const Scheme s = psl_on_pairs(7);
  CHECK(s.relation(0, 0) == 0);
  for (int k = 1; k < s.num_classes(); ++k) {
    const auto [x, y] = s.representative(k);
    CHECK(s.relation(x, y) == k);
    const auto [px, py] = s.representative(k - 1);
    CHECK(px * s.n() + py < x * s.n() + y);
  }
  // relabelling the input leaves the canonical matrix unchanged
  std::vector<std::uint32_t> raw(s.relation_matrix().begin(), s.relation_matrix().end());
  for (auto& v : raw) v = 1000 - 7 * v;
  CHECK(Scheme::from_relation_matrix(s.n(), raw) == s);
}

TEST_CASE("transpose map and symmetry") {
  const Scheme s = psl_on_pairs(7);
  CHECK_FALSE(s.is_symmetric());
  for (int k = 0; k < s.num_classes(); ++k) {
    const auto [x, y] = s.representative(k);
    CHECK(s.transpose(k) == s.relation(y, x));
    CHECK(s.transpose(s.transpose(k)) == k);
  }
}

TEST_CASE("non-schemes are rejected") {
  // the path 0-1-2 with classes by distance: valency is not constant
  const std::vector<std::uint32_t> path = {0, 1, 2, 1, 0, 1, 2, 1, 0};
  CHECK_THROWS_AS(Scheme::from_relation_matrix(3, path), NotAScheme);
  // off-diagonal pair in the diagonal class
  const std::vector<std::uint32_t> bad_diag = {0, 0, 1, 0};
  CHECK_THROWS_AS(Scheme::from_relation_matrix(2, bad_diag), NotAScheme);
  // two disjoint edges; then a path on 4 vertices coloured by capped distance
  const std::vector<std::uint32_t> c4 = {0, 1, 2, 2, 1, 0, 2, 2, 2, 2, 0, 1, 2, 2, 1, 0};
  CHECK(verify_axioms(Scheme::from_relation_matrix(4, c4), Verification::Exhaustive).ok);
  const std::vector<std::uint32_t> odd = {0, 1, 2, 2, 1, 0, 1, 2, 2, 1, 0, 1, 2, 2, 1, 0};
  CHECK_THROWS_AS(Scheme::from_relation_matrix(4, odd), NotAScheme);
}

TEST_CASE("orbital_scheme needs a transitive group of permutations") {
  const std::vector<Permutation> trivial = {identity_permutation(5)};
  CHECK_THROWS_AS(orbital_scheme(trivial, 5), NotTransitive);
  const std::vector<Permutation> broken = {{0, 0, 1}};
  CHECK_THROWS_AS(orbital_scheme(broken, 3), DomainError);
  const std::vector<Permutation> cycle = {{1, 2, 3, 4, 0}};
  const Scheme c5 = orbital_scheme(cycle, 5);
  CHECK(c5.d() == 4);
  CHECK(is_commutative(c5));
  CHECK_FALSE(c5.is_symmetric());
}

TEST_CASE("generic BFS and stabilizer paths agree") {
  for (int q : {5, 7, 9}) {
    auto f = GaloisField::create(q);
    for (DomainKind k : {DomainKind::Pairs, DomainKind::HyperbolicLines, DomainKind::HyperbolicPoints}) {
      EnumeratedDomain d(f, k);
      for (GroupId g : {GroupId::PGL, GroupId::PSL, GroupId::M, GroupId::PGammaL}) {
        if (!group_defined(g, *f)) continue;
        CHECK(orbital_scheme_via_stabilizer(d, g) == orbital_scheme(d, g));
      }
    }
  }
  EnumeratedDomain tangents(GaloisField::create(7), DomainKind::TangentLines);
  CHECK_THROWS_AS(orbital_scheme_via_stabilizer(tangents, GroupId::PGL), UnsupportedDomain);
}

TEST_CASE("fusion checks") {
  const Scheme psl = psl_on_pairs(9);
  const auto identity = fusion_partition(psl, psl);
  REQUIRE(identity);
  CHECK(is_fusion(psl, psl, *identity));
  std::vector<Scheme::ClassId> expected(psl.num_classes());
  std::iota(expected.begin(), expected.end(), 0);
  CHECK(*identity == expected);
  std::vector<std::uint32_t> raw(psl.n() * psl.n());
  for (std::uint32_t x = 0; x < psl.n(); ++x) {
    for (std::uint32_t y = 0; y < psl.n(); ++y) raw[x * psl.n() + y] = x != y;
  }
  const Scheme trivial = Scheme::from_relation_matrix(psl.n(), raw);
  const auto part = fusion_partition(trivial, psl);
  REQUIRE(part);
  CHECK(is_fusion(trivial, psl, *part));
  CHECK_FALSE(fusion_partition(psl, trivial));
}

TEST_CASE("PGL(2,q) is generously transitive on elliptic lines") {
  for (int q : {5, 7, 9, 11}) {
    EnumeratedDomain d(GaloisField::create(q), DomainKind::EllipticLines);
    const Scheme s = orbital_scheme(d, GroupId::PGL);
    CHECK(s.n() == static_cast<std::size_t>(q * (q - 1) / 2));
    CHECK(s.is_symmetric());
    CHECK(verify_axioms(s, Verification::Exhaustive).ok);
  }
}

TEST_CASE("triangular schemes are P-polynomial with the known array") {
  const Scheme t = triangular_scheme(5);
  const auto orders = p_polynomial_orderings(t);
  REQUIRE(orders.size() == 2);  // T(5) and its complement, the Petersen graph
  for (const auto& o : orders) {
    if (o.generator == 1) {
      CHECK(o.b == std::vector<std::size_t>{6, 2});
      CHECK(o.c == std::vector<std::size_t>{1, 4});
    } else {
      CHECK(o.b == std::vector<std::size_t>{3, 2});
      CHECK(o.c == std::vector<std::size_t>{1, 1});
    }
  }
}

TEST_CASE("relation labels render") {
  auto f = GaloisField::create(25);
  const auto s = f->from_coeffs(std::vector<int>{1, 1});
  CHECK(RelationLabel::share_one(Sign::Plus).to_string() == "R_1^+");
  CHECK(RelationLabel::harmonic(Sign::None).to_string() == "R_{-1}");
  CHECK(RelationLabel::cross_ratio({s, s.inv()}, Sign::Minus).render("Δ") == "Δ_{x+1}^-");
}
