#pragma once

// Association schemes on an enumerated domain: a dense relation matrix with
// canonical class numbering (0 = diagonal, others by least row-major
// representative), valencies, transpose pairing, intersection numbers,
// symmetry and commutativity, fusion checks and P-polynomial detection.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "scheme_forge/errors.hpp"
#include "scheme_forge/finite_field.hpp"
#include "scheme_forge/permutation.hpp"

namespace scheme_forge {

enum class Sign { None, Plus, Minus };

inline Sign flip(Sign s) {
  if (s == Sign::Plus) return Sign::Minus;
  if (s == Sign::Minus) return Sign::Plus;
  return Sign::None;
}

/// Symbolic name of a relation class, in the R_r^± notation.
struct RelationLabel {
  enum class Kind { Diagonal, R1, Rminus1, CrossRatio, FrobeniusOrbit, Fused };

  Kind kind = Kind::Diagonal;
  /// CrossRatio: {r, r^-1} (canonical first); FrobeniusOrbit: the whole orbit,
  /// canonical first.
  std::vector<FieldElement> values;
  /// Set for split classes (R_1^±, R_{-1}^±, R_r^±).
  Sign sign = Sign::None;
  /// Fused: the merged components.
  std::vector<RelationLabel> parts;

  static RelationLabel diagonal() { return {}; }
  static RelationLabel share_one(Sign s = Sign::None) { return {Kind::R1, {}, s, {}}; }
  static RelationLabel harmonic(Sign s = Sign::None) { return {Kind::Rminus1, {}, s, {}}; }
  static RelationLabel cross_ratio(std::vector<FieldElement> pair, Sign s = Sign::None) {
    return {Kind::CrossRatio, std::move(pair), s, {}};
  }
  static RelationLabel frobenius_orbit(std::vector<FieldElement> orbit) {
    return {Kind::FrobeniusOrbit, std::move(orbit), Sign::None, {}};
  }
  static RelationLabel fused(std::vector<RelationLabel> parts) { return {Kind::Fused, {}, Sign::None, std::move(parts)}; }

  /// Rendering with a chosen relation symbol (R, Γ, Δ, Λ).
  std::string render(const std::string& symbol = "R") const {
    auto sub = [](const std::string& s) { return s.size() == 1 ? "_" + s : "_{" + s + "}"; };
    std::string out;
    switch (kind) {
      case Kind::Diagonal: out = symbol + "_0"; break;
      case Kind::R1: out = symbol + "_1"; break;
      case Kind::Rminus1: out = symbol + "_{-1}"; break;
      case Kind::CrossRatio:
      case Kind::FrobeniusOrbit: out = symbol + sub(values.front().to_string()); break;
      case Kind::Fused: {
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (i) out += " ∪ ";
          out += parts[i].render(symbol);
        }
        return out;
      }
    }
    if (sign == Sign::Plus) out += "^+";
    if (sign == Sign::Minus) out += "^-";
    return out;
  }
  std::string to_string() const { return render("R"); }

  friend bool operator==(const RelationLabel&, const RelationLabel&) = default;
};

class Scheme {
 public:
  using ClassId = std::uint16_t;

  /// Builds a scheme from any labelling of ordered pairs (row-major, n x n),
  /// renumbering classes canonically. Verifies axioms (i) and (ii) and that
  /// every class has constant row count; throws NotAScheme otherwise.
  static Scheme from_relation_matrix(std::size_t n, std::span<const std::uint32_t> raw) {
    if (n == 0 || raw.size() != n * n) throw NotAScheme("relation matrix has the wrong size");
    const std::uint32_t max_raw = *std::max_element(raw.begin(), raw.end());
    std::vector<std::int32_t> renumber(static_cast<std::size_t>(max_raw) + 1, -1);
    Scheme s;
    s.n_ = n;
    s.rel_.resize(n * n);
    for (std::size_t idx = 0; idx < n * n; ++idx) {
      auto& slot = renumber[raw[idx]];
      if (slot < 0) {
        if (s.reps_.size() > std::numeric_limits<ClassId>::max()) throw NotAScheme("too many classes");
        slot = static_cast<std::int32_t>(s.reps_.size());
        s.reps_.emplace_back(static_cast<std::uint32_t>(idx / n), static_cast<std::uint32_t>(idx % n));
      }
      s.rel_[idx] = static_cast<ClassId>(slot);
    }
    s.verify_structure();
    return s;
  }

  std::size_t n() const { return n_; }
  /// Number of nontrivial classes.
  int d() const { return static_cast<int>(reps_.size()) - 1; }
  int num_classes() const { return static_cast<int>(reps_.size()); }

  ClassId relation(std::size_t x, std::size_t y) const { return rel_[x * n_ + y]; }
  const std::vector<ClassId>& relation_matrix() const { return rel_; }
  std::span<const ClassId> row(std::size_t x) const { return {rel_.data() + x * n_, n_}; }

  const std::vector<std::size_t>& valencies() const { return valencies_; }
  std::size_t valency(int k) const { return valencies_.at(k); }
  const std::vector<ClassId>& transpose_map() const { return transpose_; }
  ClassId transpose(int k) const { return transpose_.at(k); }
  /// Least row-major pair in class k.
  std::pair<std::uint32_t, std::uint32_t> representative(int k) const { return reps_.at(k); }

  bool is_symmetric() const {
    for (int k = 0; k < num_classes(); ++k) {
      if (transpose_[k] != k) return false;
    }
    return true;
  }

  const std::vector<std::optional<RelationLabel>>& labels() const { return labels_; }
  const std::optional<RelationLabel>& label(int k) const { return labels_.at(k); }
  void set_label(int k, RelationLabel l) { labels_.at(k) = std::move(l); }

  friend bool operator==(const Scheme& a, const Scheme& b) { return a.n_ == b.n_ && a.rel_ == b.rel_; }

 private:
  Scheme() = default;

  void verify_structure() {
    const int classes = num_classes();
    // (i): diagonal relation is class 0 (it contains (0,0)) and nothing else.
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        if ((rel_[x * n_ + y] == 0) != (x == y)) throw NotAScheme("axiom (i) fails: diagonal is not a class");
      }
    }
    // (ii): transpose of a class is a class.
    transpose_.assign(classes, 0);
    for (int k = 0; k < classes; ++k) {
      const auto [x, y] = reps_[k];
      transpose_[k] = rel_[y * n_ + x];
    }
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        if (rel_[y * n_ + x] != transpose_[rel_[x * n_ + y]]) {
          throw NotAScheme("axiom (ii) fails: transpose of a class is not a class");
        }
      }
    }
    valencies_.assign(classes, 0);
    for (std::size_t y = 0; y < n_; ++y) ++valencies_[rel_[y]];
    std::vector<std::size_t> counts(classes);
    for (std::size_t x = 1; x < n_; ++x) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t y = 0; y < n_; ++y) ++counts[rel_[x * n_ + y]];
      if (counts != valencies_) throw NotAScheme("valency is not constant across rows");
    }
    labels_.assign(classes, std::nullopt);
    labels_[0] = RelationLabel::diagonal();
  }

  std::size_t n_ = 0;
  std::vector<ClassId> rel_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> reps_;
  std::vector<std::size_t> valencies_;
  std::vector<ClassId> transpose_;
  std::vector<std::optional<RelationLabel>> labels_;
};

/// p^k_ij for 0 <= i, j, k <= d.
class IntersectionNumbers {
 public:
  explicit IntersectionNumbers(int classes)
      : classes_(classes), data_(static_cast<std::size_t>(classes) * classes * classes, 0) {}

  int num_classes() const { return classes_; }
  /// p^k_ij
  std::uint32_t operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }
  std::uint32_t& at(int i, int j, int k) { return data_[index(i, j, k)]; }

  /// B_i = (p^k_ij)_{k,j}
  std::vector<std::vector<std::uint32_t>> intersection_matrix(int i) const {
    std::vector<std::vector<std::uint32_t>> b(classes_, std::vector<std::uint32_t>(classes_));
    for (int k = 0; k < classes_; ++k) {
      for (int j = 0; j < classes_; ++j) b[k][j] = (*this)(i, j, k);
    }
    return b;
  }

  friend bool operator==(const IntersectionNumbers&, const IntersectionNumbers&) = default;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * classes_ + i) * classes_ + j;
  }
  int classes_;
  std::vector<std::uint32_t> data_;
};

enum class Verification { Sampled, Exhaustive };

namespace detail {

/// counts[i*D+j] = |{z : R(x,z) = i, R(z,y) = j}|.
inline void count_paths(const Scheme& s, std::uint32_t x, std::uint32_t y, std::vector<std::uint32_t>& counts) {
  const int classes = s.num_classes();
  std::fill(counts.begin(), counts.end(), 0);
  const auto rx = s.row(x);
  const auto ry = s.row(y);
  const auto& t = s.transpose_map();
  for (std::size_t z = 0; z < s.n(); ++z) ++counts[rx[z] * classes + t[ry[z]]];
}

/// Rows used for sampled verification: deterministic, seeded shuffle.
inline std::vector<std::uint32_t> sample_rows(std::size_t n, std::size_t count) {
  std::vector<std::uint32_t> rows(n);
  std::iota(rows.begin(), rows.end(), 0U);
  std::mt19937 rng(0x5eed);
  std::shuffle(rows.begin(), rows.end(), rng);
  rows.resize(std::min(count, n));
  return rows;
}

template <class Fn>
void parallel_for(int count, Fn&& fn) {
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const int workers = static_cast<int>(std::min<unsigned>(hw, static_cast<unsigned>(std::max(count, 1))));
  if (workers <= 1) {
    for (int k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int k = next++; k < count; k = next++) {
        try {
          fn(k);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// The full tensor, counted from the least representative of each class and
/// checked for constancy on `samples` further pairs per class (Sampled) or on
/// every pair (Exhaustive). Throws NotAScheme when a count is not constant.
/// Classes are filled in parallel; the result does not depend on scheduling.
inline IntersectionNumbers intersection_numbers(const Scheme& s, Verification mode = Verification::Sampled,
                                                std::size_t samples = 10) {
  const int classes = s.num_classes();
  const auto D = static_cast<std::size_t>(classes);
  IntersectionNumbers p(classes);
  std::vector<std::vector<std::uint32_t>> slices(D);
  detail::parallel_for(classes, [&](int k) {
    std::vector<std::uint32_t> counts(D * D);
    const auto [x, y] = s.representative(k);
    detail::count_paths(s, x, y, counts);
    slices[k] = counts;
  });
  for (int k = 0; k < classes; ++k) {
    for (int i = 0; i < classes; ++i) {
      for (int j = 0; j < classes; ++j) p.at(i, j, k) = slices[k][i * D + j];
    }
  }

  auto mismatch = [](std::uint32_t x, std::uint32_t y) {
    return NotAScheme("axiom (iii) fails: intersection numbers differ at pair (" + std::to_string(x) + "," +
                      std::to_string(y) + ")");
  };
  if (mode == Verification::Exhaustive) {
    detail::parallel_for(static_cast<int>(s.n()), [&](int xi) {
      const auto x = static_cast<std::uint32_t>(xi);
      std::vector<std::uint32_t> counts(D * D);
      for (std::uint32_t y = 0; y < s.n(); ++y) {
        detail::count_paths(s, x, y, counts);
        if (counts != slices[s.relation(x, y)]) throw mismatch(x, y);
      }
    });
  } else {
    const auto rows = detail::sample_rows(s.n(), samples);
    detail::parallel_for(classes, [&](int k) {
      std::vector<std::uint32_t> counts(D * D);
      for (const auto x : rows) {
        const auto r = s.row(x);
        const auto it = std::find(r.begin(), r.end(), static_cast<Scheme::ClassId>(k));
        const auto y = static_cast<std::uint32_t>(it - r.begin());
        detail::count_paths(s, x, y, counts);
        if (counts != slices[k]) throw mismatch(x, y);
      }
    });
  }
  return p;
}

inline bool is_symmetric(const Scheme& s) { return s.is_symmetric(); }

inline bool is_commutative(const IntersectionNumbers& p) {
  const int c = p.num_classes();
  for (int k = 0; k < c; ++k) {
    for (int i = 0; i < c; ++i) {
      for (int j = i + 1; j < c; ++j) {
        if (p(i, j, k) != p(j, i, k)) return false;
      }
    }
  }
  return true;
}

inline bool is_commutative(const Scheme& s) { return is_commutative(intersection_numbers(s)); }

/// Result of the standard identity checks on a scheme and its tensor.
struct AxiomReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string what) {
    ok = false;
    failures.push_back(std::move(what));
  }
};

/// Axioms (i)-(iii) plus: sum k_i = n-1, k_i' = k_i, p^0_{ii'} = k_i,
/// sum_j p^k_ij = k_i, and k_k p^k_ij = k_i p^i_{kj'}.
inline AxiomReport verify_axioms(const Scheme& s, Verification mode = Verification::Sampled) {
  AxiomReport report;
  std::optional<IntersectionNumbers> maybe;
  try {
    maybe = intersection_numbers(s, mode);
  } catch (const NotAScheme& e) {
    report.fail(e.what());
    return report;
  }
  const auto& p = *maybe;
  const int c = s.num_classes();
  const auto& k = s.valencies();
  std::size_t total = 0;
  for (int i = 1; i < c; ++i) total += k[i];
  if (total != s.n() - 1) report.fail("sum of valencies is not n-1");
  for (int i = 0; i < c; ++i) {
    const int it = s.transpose(i);
    if (k[it] != k[i]) report.fail("k_i' != k_i for class " + std::to_string(i));
    if (p(i, it, 0) != k[i]) report.fail("p^0_{ii'} != k_i for class " + std::to_string(i));
    for (int kk = 0; kk < c; ++kk) {
      std::size_t row_sum = 0;
      for (int j = 0; j < c; ++j) row_sum += p(i, j, kk);
      if (row_sum != k[i]) report.fail("sum_j p^k_ij != k_i");
      for (int j = 0; j < c; ++j) {
        const std::size_t lhs = static_cast<std::size_t>(k[kk]) * p(i, j, kk);
        const std::size_t rhs = static_cast<std::size_t>(k[i]) * p(kk, s.transpose(j), i);
        if (lhs != rhs) report.fail("k_k p^k_ij != k_i p^i_{kj'}");
      }
    }
  }
  return report;
}

/// X(G, X) from permutation generators of G on the domain {0..n-1}.
/// Orbitals are found by breadth-first search over ordered pairs.
inline Scheme orbital_scheme(std::span<const Permutation> generators, std::size_t n) {
  for (const auto& g : generators) {
    if (g.size() != n || !is_permutation(g)) throw DomainError("generator is not a permutation of the domain");
  }
  const auto orbits = point_orbits(generators, n);
  if (std::any_of(orbits.begin(), orbits.end(), [](std::uint32_t o) { return o != 0; })) throw NotTransitive();

  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(n * n, kUnset);
  std::vector<std::uint64_t> stack;
  std::uint32_t next = 0;
  for (std::uint64_t start = 0; start < n * n; ++start) {
    if (label[start] != kUnset) continue;
    label[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::uint64_t cur = stack.back();
      stack.pop_back();
      const auto x = cur / n, y = cur % n;
      for (const auto& g : generators) {
        const std::uint64_t img = static_cast<std::uint64_t>(g[x]) * n + g[y];
        if (label[img] == kUnset) {
          label[img] = next;
          stack.push_back(img);
        }
      }
    }
    ++next;
  }
  return Scheme::from_relation_matrix(n, label);
}

/// Class bijection phi with b(x,y) = phi(a(x,y)) for all pairs, if one exists.
inline std::optional<std::vector<Scheme::ClassId>> relation_bijection(const Scheme& a, const Scheme& b) {
  if (a.n() != b.n() || a.num_classes() != b.num_classes()) return std::nullopt;
  std::vector<Scheme::ClassId> phi(a.num_classes());
  for (int k = 0; k < a.num_classes(); ++k) {
    const auto [x, y] = a.representative(k);
    phi[k] = b.relation(x, y);
  }
  std::vector<Scheme::ClassId> sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  const auto& ra = a.relation_matrix();
  const auto& rb = b.relation_matrix();
  for (std::size_t i = 0; i < ra.size(); ++i) {
    if (rb[i] != phi[ra[i]]) return std::nullopt;
  }
  return phi;
}

/// If every class of `fine` lies inside one class of `coarse`, the induced
/// map fine-class -> coarse-class.
inline std::optional<std::vector<Scheme::ClassId>> fusion_partition(const Scheme& coarse, const Scheme& fine) {
  if (coarse.n() != fine.n()) return std::nullopt;
  std::vector<Scheme::ClassId> part(fine.num_classes());
  for (int k = 0; k < fine.num_classes(); ++k) {
    const auto [x, y] = fine.representative(k);
    part[k] = coarse.relation(x, y);
  }
  const auto& rf = fine.relation_matrix();
  const auto& rc = coarse.relation_matrix();
  for (std::size_t i = 0; i < rf.size(); ++i) {
    if (rc[i] != part[rf[i]]) return std::nullopt;
  }
  return part;
}

/// True iff `partition` (fine class -> coarse class) is admissible and the
/// unions of fine relations reproduce `coarse` exactly, with the fused
/// intersection numbers recomputed from scratch.
inline bool is_fusion(const Scheme& coarse, const Scheme& fine, std::span<const Scheme::ClassId> partition) {
  if (coarse.n() != fine.n() || partition.size() != static_cast<std::size_t>(fine.num_classes())) return false;
  // Lambda_0 = {0}
  if (partition[0] != 0) return false;
  const int cc = coarse.num_classes();
  std::vector<std::set<int>> blocks(cc);
  for (int k = 0; k < fine.num_classes(); ++k) {
    if (partition[k] >= cc) return false;
    if (k != 0 && partition[k] == 0) return false;
    blocks[partition[k]].insert(k);
  }
  for (const auto& b : blocks) {
    if (b.empty()) return false;
  }
  // Lambda_i' = Lambda_j for some j
  for (const auto& b : blocks) {
    std::set<int> tb;
    for (int k : b) tb.insert(fine.transpose(k));
    if (std::find(blocks.begin(), blocks.end(), tb) == blocks.end()) return false;
  }
  std::vector<std::uint32_t> fused(fine.n() * fine.n());
  const auto& rf = fine.relation_matrix();
  const auto& rc = coarse.relation_matrix();
  for (std::size_t i = 0; i < rf.size(); ++i) {
    fused[i] = partition[rf[i]];
    if (fused[i] != rc[i]) return false;
  }
  try {
    const Scheme rebuilt = Scheme::from_relation_matrix(fine.n(), fused);
    (void)intersection_numbers(rebuilt, Verification::Sampled);
  } catch (const NotAScheme&) {
    return false;
  }
  return true;
}

/// A distance-regular ordering: classes in order of graph distance in the
/// graph of `generator`, with the intersection array {b_0..b_{D-1}; c_1..c_D}.
struct PPolynomialOrdering {
  Scheme::ClassId generator = 0;
  std::vector<Scheme::ClassId> order;
  std::vector<std::size_t> b;
  std::vector<std::size_t> c;
};

/// Every symmetric class whose graph's distance partition is the scheme
/// partition. Distances are taken from the sampled rows used for tensor
/// verification (a scheme's distance function is class-determined, so any
/// source is representative; the samples guard against implementation bugs).
inline std::vector<PPolynomialOrdering> p_polynomial_orderings(const Scheme& s, std::size_t samples = 10) {
  std::vector<PPolynomialOrdering> out;
  const std::size_t n = s.n();
  const int classes = s.num_classes();
  auto sources = detail::sample_rows(n, samples);
  if (std::find(sources.begin(), sources.end(), 0U) == sources.end()) sources.insert(sources.begin(), 0U);

  for (int c = 1; c < classes; ++c) {
    if (s.transpose(c) != c) continue;
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      const auto r = s.row(x);
      for (std::uint32_t y = 0; y < n; ++y) {
        if (r[y] == c) adj[x].push_back(y);
      }
    }
    std::vector<int> dist_of_class(classes, -1);
    bool ok = true;
    std::vector<int> dist(n);
    std::vector<std::uint32_t> queue;
    std::vector<int> first_dist;
    for (const auto src : sources) {
      std::fill(dist.begin(), dist.end(), -1);
      queue.assign(1, src);
      dist[src] = 0;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        const auto u = queue[h];
        for (const auto v : adj[u]) {
          if (dist[v] < 0) {
            dist[v] = dist[u] + 1;
            queue.push_back(v);
          }
        }
      }
      const auto r = s.row(src);
      for (std::uint32_t y = 0; y < n && ok; ++y) {
        if (dist[y] < 0) ok = false;  // disconnected
        else if (dist_of_class[r[y]] < 0) dist_of_class[r[y]] = dist[y];
        else if (dist_of_class[r[y]] != dist[y]) ok = false;
      }
      if (!ok) break;
      if (src == 0) first_dist = dist;
    }
    if (!ok) continue;
    std::vector<int> sorted = dist_of_class;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;

    PPolynomialOrdering ord;
    ord.generator = static_cast<Scheme::ClassId>(c);
    ord.order.resize(classes);
    for (int k = 0; k < classes; ++k) ord.order[dist_of_class[k]] = static_cast<Scheme::ClassId>(k);
    const int diameter = classes - 1;
    std::vector<std::optional<std::size_t>> bi(diameter + 1), ci(diameter + 1);
    for (std::uint32_t y = 0; y < n && ok; ++y) {
      const int dy = first_dist[y];
      std::size_t up = 0, down = 0;
      for (const auto z : adj[y]) {
        if (first_dist[z] == dy + 1) ++up;
        if (first_dist[z] == dy - 1) ++down;
      }
      if (!bi[dy]) bi[dy] = up;
      if (!ci[dy]) ci[dy] = down;
      if (*bi[dy] != up || *ci[dy] != down) ok = false;
    }
    if (!ok) continue;
    for (int i = 0; i < diameter; ++i) ord.b.push_back(*bi[i]);
    for (int i = 1; i <= diameter; ++i) ord.c.push_back(*ci[i]);
    out.push_back(std::move(ord));
  }
  return out;
}

/// The triangular scheme T(m) on 2-subsets of {0..m-1} (lexicographic order):
/// class 1 = meet in one point, class 2 = disjoint.
inline Scheme triangular_scheme(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  }
  const std::size_t n = pairs.size();
  std::vector<std::uint32_t> raw(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto [a, b] = pairs[x];
      const auto [c, d] = pairs[y];
      const int common = (a == c) + (a == d) + (b == c) + (b == d);
      raw[x * n + y] = static_cast<std::uint32_t>(2 - common);
    }
  }
  return Scheme::from_relation_matrix(n, raw);
}

}  // namespace scheme_forge
