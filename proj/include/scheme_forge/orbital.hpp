#pragma once

// Orbital schemes X(G, X) for the four groups acting on an enumerated domain,
// by generic pair BFS or by the base-pair stabilizer and transporters.

#include <cstdint>
#include <vector>

#include "scheme_forge/domain.hpp"
#include "scheme_forge/errors.hpp"
#include "scheme_forge/groups.hpp"
#include "scheme_forge/permutation.hpp"
#include "scheme_forge/scheme.hpp"

namespace scheme_forge {

/// Permutations of the domain induced by generators(G).
inline std::vector<Permutation> generator_permutations(const EnumeratedDomain& domain, GroupId group) {
  std::vector<Permutation> out;
  for (const auto& g : generators(domain.field(), group)) out.push_back(domain.permutation(g));
  return out;
}

inline Scheme orbital_scheme(const EnumeratedDomain& domain, std::span<const Permutation> perms) {
  return orbital_scheme(perms, domain.size());
}

inline Scheme orbital_scheme(const EnumeratedDomain& domain, GroupId group) {
  const auto perms = generator_permutations(domain, group);
  return orbital_scheme(perms, domain.size());
}

/// Orbit ids of the stabilizer of {0, inf} on the domain.
inline std::vector<std::uint32_t> base_stabilizer_orbits(const EnumeratedDomain& domain, GroupId group) {
  std::vector<Permutation> perms;
  for (const auto& g : base_pair_stabilizer(domain.field(), group)) perms.push_back(domain.permutation(g));
  return point_orbits(perms, domain.size());
}

/// Row x is the base row pulled back along the transporter of x:
/// R(x, y) = orbit of h_x(y) under G_{0,inf}, where h_x maps x to {0, inf}.
inline Scheme orbital_scheme_via_stabilizer(const EnumeratedDomain& domain, GroupId group) {
  if (!domain.pair_indexed()) {
    throw UnsupportedDomain(std::string("stabilizer path needs a domain indexed by 2-subsets, got ") +
                            to_string(domain.kind()));
  }
  const GaloisField& f = domain.field();
  const auto orbit = base_stabilizer_orbits(domain, group);
  const std::size_t n = domain.size();
  std::vector<std::uint32_t> raw(n * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    const MoebiusElement h = transporter_to_base(f, domain.pair(x), group);
    const Permutation ph = domain.permutation(h);
    for (std::uint32_t y = 0; y < n; ++y) raw[x * n + y] = orbit[ph[y]];
  }
  return Scheme::from_relation_matrix(n, raw);
}

}  // namespace scheme_forge
