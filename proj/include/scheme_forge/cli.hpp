#pragma once

// The scheme-forge command line. run() parses argv, writes to the given
// streams and returns the exit code: 0 success, 1 verification failure,
// 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "scheme_forge/domain.hpp"
#include "scheme_forge/errors.hpp"
#include "scheme_forge/finite_field.hpp"
#include "scheme_forge/groups.hpp"
#include "scheme_forge/orbital.hpp"
#include "scheme_forge/paper_schemes.hpp"
#include "scheme_forge/scheme.hpp"
#include "scheme_forge/serialize.hpp"
#include "scheme_forge/theorems.hpp"

namespace scheme_forge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Largest q built without --allow-large.
inline constexpr int kLargeQ = 127;
/// Largest q verified without --deep.
inline constexpr int kDeepQ = 49;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  int q = 0;
  std::string group = "pgl";
  std::string domain = "pairs";
  std::string modulus;
  std::string out;
  std::string format = "text";
  std::string path = "auto";
  bool exhaustive = false;
  bool deep = false;
  bool p_tensor = false;
  bool allow_large = false;
  bool all_q = false;
  bool timings = false;
};

inline std::vector<int> parse_modulus(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("--modulus expects comma-separated integer coefficients c0,c1,...,1; got '" + s + "'");
    }
  }
  return out;
}

inline FieldPtr make_field(const RunConfig& cfg) {
  if (cfg.q > kLargeQ && !cfg.allow_large) {
    throw ResourceGuard("q = " + std::to_string(cfg.q) + " exceeds " + std::to_string(kLargeQ) +
                        "; the dense relation matrix grows as q^4. Pass --allow-large to build it anyway");
  }
  std::optional<std::vector<int>> modulus;
  if (!cfg.modulus.empty()) modulus = parse_modulus(cfg.modulus);
  return GaloisField::create(cfg.q, modulus);
}

/// Generator permutations on the domain, read from and written to
/// $SCHEME_FORGE_CACHE_DIR when it is set.
inline std::vector<Permutation> cached_generator_permutations(const EnumeratedDomain& domain, GroupId group,
                                                              std::ostream& err) {
  const char* dir = std::getenv("SCHEME_FORGE_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return generator_permutations(domain, group);
  const GaloisField& f = domain.field();
  std::string name = "perms-q" + std::to_string(f.q()) + "-" + to_string(group) + "-" + to_string(domain.kind()) + "-f";
  for (int c : f.modulus()) name += std::to_string(c);
  const std::filesystem::path path = std::filesystem::path(dir) / (name + ".json");
  if (std::ifstream in(path); in) {
    try {
      const json j = json::parse(in);
      if (j.at("schema") == kSchemaVersion && j.at("n") == domain.size()) {
        auto perms = j.at("generators").get<std::vector<Permutation>>();
        bool ok = !perms.empty();
        for (const auto& p : perms) ok = ok && p.size() == domain.size() && is_permutation(p);
        if (ok) return perms;
      }
    } catch (const json::exception&) {
    }
    err << "warning: ignoring unreadable cache file " << path.string() << "\n";
  }
  auto perms = generator_permutations(domain, group);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream outf(path);
  if (outf) {
    outf << json{{"schema", kSchemaVersion},
                 {"q", f.q()},
                 {"group", to_string(group)},
                 {"domain", to_string(domain.kind())},
                 {"modulus", f.modulus()},
                 {"n", domain.size()},
                 {"generators", perms}}
                .dump()
         << "\n";
  }
  return perms;
}

/// Builds the scheme named by the config. Non-pair domains fall back to the
/// generic orbital build with a warning.
inline BuiltScheme build_from_config(const RunConfig& cfg, const FieldPtr& f, const EnumeratedDomain& domain,
                                     std::ostream& err) {
  const GroupId group = parse_group(cfg.group);
  require_group(group, *f);
  if (cfg.path != "auto" && cfg.path != "stabilizer" && cfg.path != "generic") {
    throw UsageError("--path must be auto, stabilizer or generic");
  }
  bool generic = cfg.path == "generic";
  if (!domain.pair_indexed()) {
    err << "warning: domain " << to_string(domain.kind())
        << " is not supported in theorem mode (no base pair, no labels); building the generic orbital scheme\n";
    generic = true;
  }
  Scheme s = [&] {
    if (!generic) return orbital_scheme_via_stabilizer(domain, group);
    const auto perms = cached_generator_permutations(domain, group, err);
    return orbital_scheme(domain, perms);
  }();
  attach_labels(s, domain, group);
  return {f, domain.kind(), to_string(group), std::move(s), orbit_symbol(group)};
}

inline void write_output(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw UsageError("cannot write " + cfg.out);
  file << payload;
}

inline int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FieldPtr f = make_field(cfg);
  const EnumeratedDomain domain(f, parse_domain(cfg.domain));
  const BuiltScheme b = build_from_config(cfg, f, domain, err);
  const IntersectionNumbers p =
      intersection_numbers(b.scheme, cfg.exhaustive ? Verification::Exhaustive : Verification::Sampled);
  const bool commutative = is_commutative(p);
  std::string payload;
  if (cfg.format == "json") payload = scheme_json(b, domain, cfg.p_tensor ? &p : nullptr).dump(2) + "\n";
  else if (cfg.format == "csv") payload = tensor_csv(p);
  else payload = scheme_summary(b, commutative) + labels_table(b, domain);
  if (!cfg.out.empty()) out << scheme_summary(b, commutative);
  write_output(cfg, payload, out);
  return kExitOk;
}

inline std::vector<int> verify_q_list(const RunConfig& cfg) {
  std::vector<int> qs;
  if (cfg.all_q) {
    qs = {5, 7, 9, 11, 13, 25, 49};
    if (cfg.deep) qs.push_back(81);
  } else {
    if (cfg.q == 0) throw UsageError("verify paper needs --q <q> or --all-q");
    qs = {cfg.q};
  }
  if (cfg.all_q && !cfg.modulus.empty()) throw UsageError("--modulus applies to a single --q, not --all-q");
  for (int q : qs) {
    (void)GaloisField::create(q);
    if (q > kDeepQ && !cfg.deep) {
      throw UsageError("q = " + std::to_string(q) + " is a deep verification; pass --deep");
    }
    if (q > kLargeQ && !cfg.allow_large) {
      throw ResourceGuard("q = " + std::to_string(q) + " exceeds " + std::to_string(kLargeQ) + "; pass --allow-large");
    }
  }
  return qs;
}

/// One job per q, run concurrently; output in q order.
inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto qs = verify_q_list(cfg);
  VerifyOptions opts;
  opts.exhaustive = cfg.exhaustive;
  std::vector<std::future<std::vector<TheoremReport>>> jobs;
  for (int q : qs) {
    RunConfig one = cfg;
    one.q = q;
    one.allow_large = true;
    FieldPtr f = make_field(one);
    jobs.push_back(std::async(std::launch::async, [f, opts] {
      PaperContext ctx(f);
      return verify_paper(ctx, opts);
    }));
  }
  std::vector<TheoremReport> reports;
  for (auto& j : jobs) {
    for (auto& r : j.get()) reports.push_back(std::move(r));
  }
  if (cfg.format == "json") out << reports_json(reports, cfg.timings).dump(2) << "\n";
  else out << reports_text(reports, cfg.timings);
  for (const auto& r : reports) {
    if (!r.pass) return kExitFailure;
  }
  return kExitOk;
}

inline int cmd_geometry(const RunConfig& cfg, const std::string& what, std::ostream& out) {
  const FieldPtr f = make_field(cfg);
  const auto conic = conic_points(*f);
  json items = json::array();
  std::ostringstream text;
  if (what == "conic") {
    for (const auto& x : projective_line(*f)) {
      const ProjPoint2 p = conic_param(*f, x);
      items.push_back({{"param", to_json(x)}, {"point", to_json(p)}});
      text << "P_" << x.to_string() << " = " << p.to_string() << "\n";
    }
  } else if (what == "lines") {
    for (const auto& l : all_lines(*f)) {
      const char* type = to_string(classify_line(l, conic));
      items.push_back({{"line", to_json(l)}, {"type", type}});
      text << l.to_string() << " " << type << "\n";
    }
  } else if (what == "points") {
    for (const auto& p : all_points(*f)) {
      const char* type = to_string(classify_point(p));
      items.push_back({{"point", to_json(p)}, {"type", type}, {"Q", to_json(quadratic_form(p.coords()))}});
      text << p.to_string() << " " << type << "\n";
    }
  } else {
    throw UsageError("--what must be conic, lines or points");
  }
  if (cfg.format == "json") {
    write_output(cfg, json{{"schema", kSchemaVersion}, {"field", field_json(*f)}, {"what", what}, {"items", items}}.dump(2) + "\n",
                 out);
  } else {
    write_output(cfg, text.str(), out);
  }
  return kExitOk;
}

inline int cmd_group_info(const RunConfig& cfg, std::ostream& out) {
  const FieldPtr f = make_field(cfg);
  const GroupId g = parse_group(cfg.group);
  require_group(g, *f);
  const auto gens = generators(*f, g);
  const auto stab = base_pair_stabilizer(*f, g);
  if (cfg.format == "json") {
    json jg = json::array();
    for (const auto& x : gens) jg.push_back(to_json(x));
    out << json{{"schema", kSchemaVersion},
                {"group", to_string(g)},
                {"name", group_name(g, f->q())},
                {"field", field_json(*f)},
                {"order", group_order(g, *f)},
                {"generators", jg},
                {"base_pair_stabilizer_order", stab.size()}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << group_name(g, f->q()) << "\n";
  out << "order: " << group_order(g, *f) << "\n";
  out << "generators:\n";
  for (const auto& x : gens) out << "  " << x.to_string() << "\n";
  out << "stabilizer of {0, inf}: " << stab.size() << " elements\n";
  return kExitOk;
}

inline int cmd_labels(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FieldPtr f = make_field(cfg);
  const EnumeratedDomain domain(f, parse_domain(cfg.domain));
  const BuiltScheme b = build_from_config(cfg, f, domain, err);
  if (cfg.format == "json") {
    out << scheme_json(b, domain, nullptr).dump(2) << "\n";
  } else {
    out << group_name(parse_group(cfg.group), f->q()) << " on " << to_string(domain.kind()) << ": " << b.scheme.d()
        << " classes\n";
    out << labels_table(b, domain);
  }
  return kExitOk;
}

/// Named schemes on Ω for `fusion check`: t, ft, or a group.
inline Scheme named_scheme(const std::string& name, const EnumeratedDomain& pairs) {
  if (name == "t") return build_triangular(pairs);
  if (name == "ft") return build_FT(pairs);
  return build_group_scheme(pairs, parse_group(name));
}

inline int cmd_fusion(const RunConfig& cfg, const std::string& coarse_name, const std::string& fine_name,
                      std::ostream& out) {
  const FieldPtr f = make_field(cfg);
  const EnumeratedDomain pairs(f, DomainKind::Pairs);
  const Scheme coarse = named_scheme(coarse_name, pairs);
  const Scheme fine = named_scheme(fine_name, pairs);
  const auto part = fusion_partition(coarse, fine);
  const bool ok = part && is_fusion(coarse, fine, *part);
  if (cfg.format == "json") {
    json j = {{"schema", kSchemaVersion}, {"q", f->q()}, {"coarse", coarse_name}, {"fine", fine_name}, {"is_fusion", ok}};
    if (part) j["partition"] = *part;
    out << j.dump(2) << "\n";
  } else {
    out << fine_name << " -> " << coarse_name << " at q = " << f->q() << ": " << (ok ? "fusion" : "not a fusion") << "\n";
    if (part) {
      for (int k = 0; k < fine.num_classes(); ++k) {
        out << "  " << (fine.label(k) ? fine.label(k)->to_string() : std::to_string(k)) << " -> "
            << (coarse.label((*part)[k]) ? coarse.label((*part)[k])->to_string() : std::to_string((*part)[k])) << "\n";
      }
    }
  }
  return ok ? kExitOk : kExitFailure;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Association schemes from the actions of PGL(2,q) subgroups on 2-subsets of PG(1,q)", "scheme-forge"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string what = "conic", coarse = "ft", fine = "psl";

  auto add_field = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--q", cfg.q, "field order, an odd prime power >= 5");
    if (required) opt->required();
    c->add_option("--modulus", cfg.modulus, "defining polynomial coefficients c0,c1,...,1 (low degree first)");
    c->add_flag("--allow-large", cfg.allow_large, "permit q > 127");
  };
  auto add_format = [&](CLI::App* c, std::vector<std::string> formats) {
    c->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  };
  auto add_build = [&](CLI::App* c) {
    add_field(c, true);
    c->add_option("--group", cfg.group, "pgl | psl | m | pgammal")->required();
    c->add_option("--domain", cfg.domain, "pairs | hyp-lines | hyp-points | tangent-lines | elliptic-lines");
    c->add_option("--out", cfg.out, "write the serialized scheme to this file");
    add_format(c, {"text", "json", "csv"});
    c->add_option("--path", cfg.path, "auto | stabilizer | generic");
    c->add_flag("--p-tensor", cfg.p_tensor, "include the intersection numbers in JSON output");
    c->add_flag("--exhaustive", cfg.exhaustive, "check intersection-number constancy on every pair");
  };

  auto* build = app.add_subcommand("build", "build an orbital scheme and print a summary");
  add_build(build);

  auto* scheme = app.add_subcommand("scheme", "scheme commands");
  scheme->require_subcommand(1);
  auto* scheme_build = scheme->add_subcommand("build", "same as the top-level build");
  add_build(scheme_build);
  auto* labels = scheme->add_subcommand("labels", "print the Γ/Δ/Λ label of every class");
  add_field(labels, true);
  labels->add_option("--group", cfg.group, "pgl | psl | m | pgammal")->required();
  labels->add_option("--domain", cfg.domain, "pairs | hyp-lines | hyp-points");
  add_format(labels, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "verification commands");
  verify->require_subcommand(1);
  auto* paper = verify->add_subcommand("paper", "run the theorem reports");
  add_field(paper, false);
  paper->add_flag("--all-q", cfg.all_q, "q in {5, 7, 9, 11, 13, 25, 49} (and 81 with --deep)");
  paper->add_flag("--deep", cfg.deep, "allow the slow cases, q > 49");
  paper->add_flag("--exhaustive", cfg.exhaustive, "check intersection-number constancy on every pair");
  paper->add_flag("--timings", cfg.timings, "include elapsed times");
  add_format(paper, {"text", "json"});

  auto* geometry = app.add_subcommand("geometry", "geometry commands");
  geometry->require_subcommand(1);
  auto* dump = geometry->add_subcommand("dump", "list conic points, lines or points of PG(2,q)");
  add_field(dump, true);
  dump->add_option("--what", what, "conic | lines | points")->check(CLI::IsMember({"conic", "lines", "points"}));
  dump->add_option("--out", cfg.out, "write to this file");
  add_format(dump, {"text", "json"});

  auto* group = app.add_subcommand("group", "group commands");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "order, generators and base-pair stabilizer");
  add_field(info, true);
  info->add_option("--group", cfg.group, "pgl | psl | m | pgammal")->required();
  add_format(info, {"text", "json"});

  auto* fusion = app.add_subcommand("fusion", "fusion commands");
  fusion->require_subcommand(1);
  auto* check = fusion->add_subcommand("check", "is the coarse scheme a fusion of the fine one on 2-subsets");
  add_field(check, true);
  check->add_option("--coarse", coarse, "t | ft | pgl | psl | m | pgammal");
  check->add_option("--fine", fine, "t | ft | pgl | psl | m | pgammal");
  add_format(check, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed() || scheme_build->parsed()) return cmd_build(cfg, out, err);
    if (labels->parsed()) return cmd_labels(cfg, out, err);
    if (paper->parsed()) return cmd_verify(cfg, out);
    if (dump->parsed()) return cmd_geometry(cfg, what, out);
    if (info->parsed()) return cmd_group_info(cfg, out);
    if (check->parsed()) return cmd_fusion(cfg, coarse, fine, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceGuard& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidField& e) {
    err << "error: " << e.what() << " (q must be an odd prime power >= 5)\n";
    return kExitUsage;
  } catch (const InvalidGroup& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedDomain& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace scheme_forge::cli
