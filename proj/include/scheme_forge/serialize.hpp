#pragma once

// JSON, CSV and text renderings of fields, group elements and schemes.
// Field elements are written as coefficient vectors (c_0, ..., c_{m-1}).

#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "scheme_forge/domain.hpp"
#include "scheme_forge/finite_field.hpp"
#include "scheme_forge/groups.hpp"
#include "scheme_forge/paper_schemes.hpp"
#include "scheme_forge/scheme.hpp"
#include "scheme_forge/theorems.hpp"

namespace scheme_forge {

inline constexpr int kSchemaVersion = 1;

inline json to_json(const FieldElement& x) { return x.coeffs(); }

inline json to_json(const ProjPoint1& x) { return x.is_infinite() ? json("inf") : to_json(x.value()); }

inline json to_json(const MoebiusElement& g) {
  return {{"matrix", {to_json(g.a()), to_json(g.b()), to_json(g.c()), to_json(g.d())}}, {"frob", g.frob()}};
}

template <class Tag>
inline json to_json(const Homogeneous3<Tag>& x) {
  return {to_json(x[0]), to_json(x[1]), to_json(x[2])};
}

inline json field_json(const GaloisField& f) {
  return {{"q", f.q()}, {"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

inline const char* sign_string(Sign s) {
  switch (s) {
    case Sign::Plus: return "+";
    case Sign::Minus: return "-";
    case Sign::None: break;
  }
  return "";
}

inline const char* kind_string(RelationLabel::Kind k) {
  switch (k) {
    case RelationLabel::Kind::Diagonal: return "diagonal";
    case RelationLabel::Kind::R1: return "r1";
    case RelationLabel::Kind::Rminus1: return "r-1";
    case RelationLabel::Kind::CrossRatio: return "cross-ratio";
    case RelationLabel::Kind::FrobeniusOrbit: return "frobenius-orbit";
    case RelationLabel::Kind::Fused: return "fused";
  }
  return "?";
}

inline json to_json(const RelationLabel& l) {
  json j = {{"kind", kind_string(l.kind)}};
  if (!l.values.empty()) {
    json v = json::array();
    for (const auto& x : l.values) v.push_back(to_json(x));
    j["values"] = v;
  }
  if (l.sign != Sign::None) j["sign"] = sign_string(l.sign);
  if (!l.parts.empty()) {
    json parts = json::array();
    for (const auto& p : l.parts) parts.push_back(to_json(p));
    j["parts"] = parts;
  }
  return j;
}

inline json tensor_json(const IntersectionNumbers& p) {
  // p_tensor[k][i][j] = p^k_ij
  json out = json::array();
  for (int k = 0; k < p.num_classes(); ++k) {
    json slice = json::array();
    for (int i = 0; i < p.num_classes(); ++i) {
      json row = json::array();
      for (int j = 0; j < p.num_classes(); ++j) row.push_back(p(i, j, k));
      slice.push_back(row);
    }
    out.push_back(slice);
  }
  return out;
}

/// The scheme export: q, group, domain, n, d, valencies, transpose map,
/// per-class labels and, optionally, the p-tensor.
inline json scheme_json(const BuiltScheme& b, const EnumeratedDomain& domain, const IntersectionNumbers* tensor) {
  const Scheme& s = b.scheme;
  json classes = json::array();
  for (int k = 0; k < s.num_classes(); ++k) {
    const auto [x, y] = s.representative(k);
    json c = {{"class", k},
              {"valency", s.valency(k)},
              {"transpose", s.transpose(k)},
              {"representative", {domain.element_string(x), domain.element_string(y)}}};
    if (s.label(k)) {
      c["label"] = s.label(k)->render("R");
      c["orbit"] = s.label(k)->render(b.symbol);
      c["structure"] = to_json(*s.label(k));
    }
    classes.push_back(c);
  }
  json j = {{"schema", kSchemaVersion},
            {"q", b.field->q()},
            {"field", field_json(*b.field)},
            {"group", b.construction},
            {"domain", to_string(b.domain)},
            {"n", s.n()},
            {"d", s.d()},
            {"valencies", s.valencies()},
            {"transpose_map", s.transpose_map()},
            {"symmetric", s.is_symmetric()},
            {"labels", classes}};
  if (tensor) {
    j["commutative"] = is_commutative(*tensor);
    j["p_tensor"] = tensor_json(*tensor);
  }
  return j;
}

/// B_i = (p^k_ij)_{k,j} as CSV rows "i,k,p^k_i0,...,p^k_id".
inline std::string tensor_csv(const IntersectionNumbers& p) {
  std::ostringstream os;
  const int c = p.num_classes();
  os << "i,k";
  for (int j = 0; j < c; ++j) os << ",j" << j;
  os << "\n";
  for (int i = 0; i < c; ++i) {
    for (int k = 0; k < c; ++k) {
      os << i << "," << k;
      for (int j = 0; j < c; ++j) os << "," << p(i, j, k);
      os << "\n";
    }
  }
  return os.str();
}

inline std::string scheme_summary(const BuiltScheme& b, std::optional<bool> commutative) {
  const Scheme& s = b.scheme;
  std::ostringstream os;
  os << "scheme " << b.construction << " on " << to_string(b.domain) << ", q = " << b.field->q() << "\n";
  os << "n = " << s.n() << ", d = " << s.d() << "\n";
  os << "valencies:";
  for (auto k : s.valencies()) os << " " << k;
  os << "\n";
  os << "symmetric: " << (s.is_symmetric() ? "yes" : "no") << "\n";
  if (commutative) os << "commutative: " << (*commutative ? "yes" : "no") << "\n";
  return os.str();
}

inline std::string labels_table(const BuiltScheme& b, const EnumeratedDomain& domain) {
  const Scheme& s = b.scheme;
  std::ostringstream os;
  os << "class  relation               orbit                  valency  transpose  representative\n";
  for (int k = 0; k < s.num_classes(); ++k) {
    const auto [x, y] = s.representative(k);
    const std::string rel = s.label(k) ? s.label(k)->render("R") : "-";
    const std::string orb = s.label(k) ? s.label(k)->render(b.symbol) : "-";
    auto pad = [](const std::string& str, std::size_t w) {
      // width in code points
      std::size_t len = 0;
      for (unsigned char ch : str) len += (ch & 0xC0) != 0x80;
      return str + std::string(len < w ? w - len : 1, ' ');
    };
    os << pad(std::to_string(k), 7) << pad(rel, 23) << pad(orb, 23) << pad(std::to_string(s.valency(k)), 9)
       << pad(std::to_string(s.transpose(k)), 11) << "(" << domain.element_string(x) << ", "
       << domain.element_string(y) << ")\n";
  }
  return os.str();
}

inline json reports_json(const std::vector<TheoremReport>& reports, bool timings) {
  json list = json::array();
  json failures = json::array();
  json times = json::object();
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    if (!r.pass) failures.push_back(r.id + "@" + std::to_string(r.q));
    times[r.id + "@" + std::to_string(r.q)] = r.elapsed_ms;
  }
  json j = {{"schema", kSchemaVersion}, {"reports", list}, {"failures", failures}};
  if (timings) j["timings_ms"] = times;
  return j;
}

inline std::string reports_text(const std::vector<TheoremReport>& reports, bool timings) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    os << (r.pass ? "PASS" : "FAIL") << "  q=" << r.q << "  " << r.id;
    if (timings) os << "  (" << static_cast<long long>(r.elapsed_ms) << " ms)";
    os << "\n";
    if (!r.pass) {
      ++failed;
      os << "      predicted: " << r.predicted.dump() << "\n";
      os << "      computed:  " << r.computed.dump() << "\n";
    }
    if (!r.note.empty()) os << "      note: " << r.note << "\n";
  }
  os << reports.size() - failed << "/" << reports.size() << " reports pass\n";
  return os.str();
}

}  // namespace scheme_forge
