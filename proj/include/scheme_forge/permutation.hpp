#pragma once

#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <span>
#include <vector>

namespace scheme_forge {

/// A permutation of {0, ..., n-1} as an image table.
using Permutation = std::vector<std::uint32_t>;

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0U);
  return p;
}

/// (a * b)(x) = a(b(x)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

inline bool is_permutation(std::span<const std::uint32_t> p) {
  std::vector<char> seen(p.size(), 0);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

/// Every element of the group generated by `gens`, by breadth-first closure.
/// Only meant for small groups.
inline std::set<Permutation> permutation_closure(std::span<const Permutation> gens, std::size_t n) {
  std::set<Permutation> group;
  std::deque<Permutation> frontier;
  auto id = identity_permutation(n);
  group.insert(id);
  frontier.push_back(std::move(id));
  while (!frontier.empty()) {
    Permutation g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : gens) {
      Permutation h = compose(s, g);
      if (group.insert(h).second) frontier.push_back(std::move(h));
    }
  }
  return group;
}

/// Orbits of the group generated by `gens` on points; returns an orbit id per
/// point, ids numbered by least member.
inline std::vector<std::uint32_t> point_orbits(std::span<const Permutation> gens, std::size_t n) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> orbit(n, kUnset);
  std::uint32_t next = 0;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (orbit[x] != kUnset) continue;
    orbit[x] = next;
    stack.push_back(x);
    while (!stack.empty()) {
      const auto y = stack.back();
      stack.pop_back();
      for (const auto& g : gens) {
        const auto z = g[y];
        if (orbit[z] == kUnset) {
          orbit[z] = next;
          stack.push_back(z);
        }
      }
    }
    ++next;
  }
  return orbit;
}

}  // namespace scheme_forge
