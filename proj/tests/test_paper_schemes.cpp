#include <set>

#include "catch_amalgamated.hpp"
#include "scheme_forge/paper_schemes.hpp"
#include "scheme_forge/theorems.hpp"

using namespace scheme_forge;

namespace {

// Rank of G on 2-subsets by Burnside: (1/|G|) sum_g fix(g)^2, with G listed
// as permutations of PG(1,q).
long long burnside_rank(const GaloisField& f, GroupId g) {
  std::vector<Permutation> gens;
  for (const auto& x : generators(f, g)) gens.push_back(x.permutation());
  const auto group = permutation_closure(gens, f.q() + 1);
  long long total = 0;
  for (const auto& p : group) {
    long long fixed = 0;
    for (std::uint32_t a = 0; a < p.size(); ++a) {
      for (std::uint32_t b = a + 1; b < p.size(); ++b) {
        fixed += (p[a] == a && p[b] == b) || (p[a] == b && p[b] == a);
      }
    }
    total += fixed * fixed;
  }
  return total / static_cast<long long>(group.size());
}

}  // namespace

TEST_CASE("class counts agree with Burnside's lemma") {
  for (int q : {5, 7, 9, 11, 13}) {
    auto f = GaloisField::create(q);
    EnumeratedDomain pairs(f, DomainKind::Pairs);
    for (GroupId g : {GroupId::PGL, GroupId::PSL, GroupId::M, GroupId::PGammaL}) {
      if (!group_defined(g, *f)) continue;
      CAPTURE(q, to_string(g));
      CHECK(build_group_scheme(pairs, g).num_classes() == burnside_rank(*f, g));
    }
    CHECK(build_FT(pairs).num_classes() == burnside_rank(*f, GroupId::PGL));
  }
}

TEST_CASE("PSL class count follows the mod-4 formula") {
  for (int q : {5, 7, 9, 11, 13, 19, 25}) {
    CAPTURE(q);
    CHECK(psl_class_count(q) == psl_class_formula(q));
  }
}

TEST_CASE("PΓL class count: direct orbit count equals the built scheme") {
  for (int q : {5, 9, 25, 27}) {
    CAPTURE(q);
    const BuiltScheme b = build_PGammaL_scheme(q);
    CHECK(b.scheme.d() == count_pgammal_classes(q));
    CHECK(b.scheme.is_symmetric());
  }
}

TEST_CASE("closed-form labels match the computed orbits") {
  for (int q : {5, 7, 9, 11, 13, 25, 27}) {
    auto f = GaloisField::create(q);
    EnumeratedDomain pairs(f, DomainKind::Pairs);
    for (GroupId g : {GroupId::PSL, GroupId::M, GroupId::PGammaL}) {
      if (!group_defined(g, *f)) continue;
      const Scheme s = build_group_scheme(pairs, g);
      const auto check = check_label_partition(s, pairs, g);
      CAPTURE(q, to_string(g), check.note);
      CHECK(check.consistent);
      std::set<std::string> names;
      for (int k = 0; k < s.num_classes(); ++k) names.insert(s.label(k)->render(orbit_symbol(g)));
      CHECK(names.size() == static_cast<std::size_t>(s.num_classes()));
    }
  }
}

TEST_CASE("FT(q+1) from cross ratios equals the PGL orbital scheme") {
  for (int q : {5, 7, 9, 11, 13}) {
    CAPTURE(q);
    CHECK(ft_equals_orbital(q));
    const BuiltScheme ft = build_FT(q);
    CHECK(ft.scheme.d() == (q + 1) / 2);
    CHECK(ft.scheme.is_symmetric());
  }
}

TEST_CASE("M(q) needs an even power and M(9) = PΓL(2,9)") {
  CHECK_THROWS_AS(build_M_scheme(7), InvalidGroup);
  CHECK_THROWS_AS(build_M_scheme(27), InvalidGroup);
  const BuiltScheme m = build_M_scheme(9);
  CHECK(m.scheme.d() == 4);
  CHECK(m.scheme == build_PGammaL_scheme(9).scheme);
}

TEST_CASE("the PSL transpose rules hold") {
  for (int q : {5, 7, 9, 11, 13}) {
    const TheoremReport r = psl_transpose_rules(q);
    CAPTURE(q, r.predicted.dump(), r.computed.dump());
    CHECK(r.pass);
  }
}

TEST_CASE("every theorem report passes for small q") {
  for (int q : {5, 7, 9, 11, 13}) {
    for (const auto& r : verify_paper(q)) {
      CAPTURE(q, r.id, r.predicted.dump(), r.computed.dump(), r.note);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("report JSON omits timing") {
  const auto reports = verify_paper(5);
  for (const auto& r : reports) CHECK_FALSE(to_json(r).contains("elapsed_ms"));
}
