#pragma once

// Enumerated domains on which PΓL(2,q) acts: the 2-subsets Ω of PG(1,q), the
// hyperbolic lines L+, their poles L+^perp, the tangent lines L0 and the
// elliptic lines L-. Ω, L+ and L+^perp share one index order (canonical pair
// order, infinity last), so index i of each corresponds to the same 2-subset.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scheme_forge/errors.hpp"
#include "scheme_forge/finite_field.hpp"
#include "scheme_forge/groups.hpp"
#include "scheme_forge/permutation.hpp"
#include "scheme_forge/projective.hpp"

namespace scheme_forge {

enum class DomainKind { Pairs, HyperbolicLines, HyperbolicPoints, TangentLines, EllipticLines };

inline const char* to_string(DomainKind k) {
  switch (k) {
    case DomainKind::Pairs: return "pairs";
    case DomainKind::HyperbolicLines: return "hyp-lines";
    case DomainKind::HyperbolicPoints: return "hyp-points";
    case DomainKind::TangentLines: return "tangent-lines";
    case DomainKind::EllipticLines: return "elliptic-lines";
  }
  return "?";
}

inline DomainKind parse_domain(std::string_view s) {
  if (s == "pairs") return DomainKind::Pairs;
  if (s == "hyp-lines") return DomainKind::HyperbolicLines;
  if (s == "hyp-points") return DomainKind::HyperbolicPoints;
  if (s == "tangent-lines") return DomainKind::TangentLines;
  if (s == "elliptic-lines") return DomainKind::EllipticLines;
  throw UnsupportedDomain("unknown domain '" + std::string(s) +
                          "' (expected pairs|hyp-lines|hyp-points|tangent-lines|elliptic-lines)");
}

/// Domains indexed by 2-subsets of PG(1,q); the stabilizer path needs these.
inline bool is_pair_indexed(DomainKind k) {
  return k == DomainKind::Pairs || k == DomainKind::HyperbolicLines || k == DomainKind::HyperbolicPoints;
}

class EnumeratedDomain {
 public:
  static constexpr std::int32_t kAbsent = -1;

  EnumeratedDomain(FieldPtr field, DomainKind kind) : field_(std::move(field)), kind_(kind) {
    const GaloisField& f = *field_;
    const auto q = static_cast<std::uint32_t>(f.q());
    if (is_pair_indexed(kind_)) {
      pair_index_.assign(static_cast<std::size_t>(q + 1) * (q + 1), kAbsent);
      for (std::uint32_t i = 0; i <= q; ++i) {
        for (std::uint32_t j = i + 1; j <= q; ++j) {
          const auto idx = static_cast<std::int32_t>(pairs_.size());
          pair_index_[i * (q + 1) + j] = idx;
          pair_index_[j * (q + 1) + i] = idx;
          pairs_.push_back(PointPair::make(point_from_index(f, i), point_from_index(f, j)));
        }
      }
    }
    switch (kind_) {
      case DomainKind::Pairs: break;
      case DomainKind::HyperbolicLines:
        for (const auto& pr : pairs_) lines_.push_back(hyperbolic_line(f, pr));
        break;
      case DomainKind::HyperbolicPoints:
        for (const auto& pr : pairs_) points_.push_back(polarity_line_to_point(hyperbolic_line(f, pr)));
        break;
      case DomainKind::TangentLines:
        for (const auto& p : conic_points(f)) lines_.push_back(polarity_point_to_line(p));
        break;
      case DomainKind::EllipticLines: {
        const auto conic = conic_points(f);
        for (const auto& l : all_lines(f)) {
          if (classify_line(l, conic) == LineClass::Elliptic) lines_.push_back(l);
        }
        break;
      }
    }
    if (!lines_.empty() || !points_.empty()) {
      key_index_.assign(static_cast<std::size_t>(q) * q * q, kAbsent);
      for (std::size_t i = 0; i < lines_.size(); ++i) key_index_[lines_[i].key()] = static_cast<std::int32_t>(i);
      for (std::size_t i = 0; i < points_.size(); ++i) key_index_[points_[i].key()] = static_cast<std::int32_t>(i);
    }
  }

  DomainKind kind() const { return kind_; }
  const GaloisField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t size() const {
    if (kind_ == DomainKind::Pairs) return pairs_.size();
    return kind_ == DomainKind::HyperbolicPoints ? points_.size() : lines_.size();
  }

  bool pair_indexed() const { return is_pair_indexed(kind_); }
  const PointPair& pair(std::size_t i) const {
    if (!pair_indexed()) throw UnsupportedDomain("domain is not indexed by 2-subsets");
    return pairs_.at(i);
  }
  const ProjLine& line(std::size_t i) const { return lines_.at(i); }
  const ProjPoint2& point(std::size_t i) const { return points_.at(i); }

  std::optional<std::uint32_t> index_of(const PointPair& pr) const {
    if (!pair_indexed()) return std::nullopt;
    return lookup_pair(pr.first.index(field_->q()), pr.second.index(field_->q()));
  }
  std::optional<std::uint32_t> index_of(const ProjLine& l) const { return lookup_key(l.key()); }
  std::optional<std::uint32_t> index_of(const ProjPoint2& p) const { return lookup_key(p.key()); }

  /// The element corresponding to {0, inf}.
  std::uint32_t base_index() const {
    const GaloisField& f = *field_;
    return *index_of(PointPair::make(ProjPoint1(f.zero()), ProjPoint1::infinity()));
  }

  /// Image of element i under g, in the domain's own geometric action.
  std::uint32_t image(const MoebiusElement& g, std::uint32_t i) const {
    if (kind_ == DomainKind::Pairs) {
      const auto q = field_->q();
      return lookup_pair(g.apply_index(pairs_[i].first.index(q)), g.apply_index(pairs_[i].second.index(q)));
    }
    const Semilinear3 r = embed_rho(g);
    return image(r, i);
  }

  std::uint32_t image(const Semilinear3& r, std::uint32_t i) const {
    if (kind_ == DomainKind::HyperbolicPoints) return require(index_of(r.apply(points_[i])));
    return require(index_of(r.apply(lines_[i])));
  }

  /// The permutation induced by g on the domain.
  Permutation permutation(const MoebiusElement& g) const {
    Permutation p(size());
    if (kind_ == DomainKind::Pairs) {
      for (std::uint32_t i = 0; i < p.size(); ++i) p[i] = image(g, i);
      return p;
    }
    const Semilinear3 r = embed_rho(g);
    for (std::uint32_t i = 0; i < p.size(); ++i) p[i] = image(r, i);
    return p;
  }

  std::string element_string(std::size_t i) const {
    switch (kind_) {
      case DomainKind::Pairs: return pairs_[i].to_string();
      case DomainKind::HyperbolicPoints: return points_[i].to_string();
      default: return lines_[i].to_string();
    }
  }

 private:
  std::uint32_t lookup_pair(std::uint32_t a, std::uint32_t b) const {
    const auto q1 = static_cast<std::uint32_t>(field_->q()) + 1;
    return require(pair_index_[a * q1 + b] == kAbsent ? std::nullopt
                                                      : std::optional<std::uint32_t>(pair_index_[a * q1 + b]));
  }
  std::optional<std::uint32_t> lookup_key(std::uint32_t key) const {
    if (key >= key_index_.size() || key_index_[key] == kAbsent) return std::nullopt;
    return static_cast<std::uint32_t>(key_index_[key]);
  }
  static std::uint32_t require(std::optional<std::uint32_t> v) {
    if (!v) throw DomainError("group element does not preserve the domain");
    return *v;
  }

  FieldPtr field_;
  DomainKind kind_;
  std::vector<PointPair> pairs_;
  std::vector<ProjLine> lines_;
  std::vector<ProjPoint2> points_;
  std::vector<std::int32_t> pair_index_;
  std::vector<std::int32_t> key_index_;
};

}  // namespace scheme_forge
