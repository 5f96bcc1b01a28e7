#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and returns the process exit code, so tests can drive it in-process.

#include "cdcheck/catalog.hpp"
#include "cdcheck/cyclotomic.hpp"
#include "cdcheck/verifier.hpp"
#include "cdcheck/zsigmondy.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

namespace cdcheck::cli {

enum ExitCode : int {
  exit_pass = 0,
  exit_fail = 1,
  exit_usage = 2,
  exit_vacuous = 3,
};

inline constexpr const char *q_max_env = "CDCHECK_Q_MAX";

/// Default q_max, from CDCHECK_Q_MAX when set.
inline std::uint64_t default_q_max() {
  const char *v = std::getenv(q_max_env);
  if (!v || !*v)
    return 64;
  try {
    std::size_t used = 0;
    unsigned long long q = std::stoull(v, &used);
    if (used != std::string_view(v).size() || q < 2)
      throw std::invalid_argument(v);
    return q;
  } catch (const std::exception &) {
    throw InvalidArgument(std::string(q_max_env) + " must be an integer >= 2");
  }
}

inline BigInt parse_bigint(const std::string &s, const char *what) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw InvalidArgument(std::string(what) + " must be a decimal integer");
  return v;
}

inline Family parse_family_arg(const std::string &s) {
  if (auto f = parse_family(s))
    return *f;
  throw InvalidArgument("unknown family " + s +
                        " (expected F4, 2E6, E6, E7 or E8)");
}

inline int cmd_phi(const std::string &n_text, const std::string &q_text,
                   std::ostream &out) {
  BigInt n = parse_bigint(n_text, "n"), q = parse_bigint(q_text, "q");
  if (n < 1 || !fits_u64(n) || n > 100000)
    throw InvalidArgument("n must lie in 1..100000");
  if (q < 2)
    throw InvalidArgument("q must be >= 2");
  const IntPoly &phi = cyclotomic(static_cast<unsigned>(to_u64(n)));
  out << phi.to_string() << " = " << phi(q) << "\n";
  return exit_pass;
}

inline int cmd_ppd(const std::string &n_text, const std::string &q_text,
                   std::ostream &out) {
  BigInt n = parse_bigint(n_text, "n"), q = parse_bigint(q_text, "q");
  if (n < 1 || !fits_u64(n) || n > 100000)
    throw InvalidArgument("n must lie in 1..100000");
  out << ppd(static_cast<unsigned>(to_u64(n)), q).to_string() << "\n";
  return exit_pass;
}

inline std::map<Family, FamilyCatalog>
load_overrides(const std::vector<std::string> &paths) {
  std::map<Family, FamilyCatalog> out;
  for (const auto &path : paths)
    for (auto &c : load_catalog_file(path)) {
      Family f = c.family;
      out.insert_or_assign(f, std::move(c));
    }
  return out;
}

inline void write_catalog_text(std::ostream &out, const FamilyCatalog &c) {
  out << c.name() << "  order " << c.order.to_string() << "\n";
  out << "q >= " << c.q_floor << ", a=" << c.a_H << ", b=" << c.b_H
      << ", c=" << c.c_H << "\n";
  for (const auto &e : c.entries) {
    out << "  " << e.label;
    if (e.label != e.degree.to_string())
      out << "  " << e.degree.to_string();
    if (e.version != Version::simple)
      out << "  [" << to_string(e.version) << "]";
    for (const auto &k : e.constraints)
      out << "  {" << k.to_string() << "}";
    out << "\n";
  }
}

inline int cmd_catalog(const std::string &family, const std::string &output,
                       const std::vector<std::string> &paths,
                       std::ostream &out) {
  Family f = parse_family_arg(family);
  auto overrides = load_overrides(paths);
  auto it = overrides.find(f);
  const FamilyCatalog &c = it != overrides.end() ? it->second : load_catalog(f);
  if (output == "json")
    out << to_json(c).dump(2) << "\n";
  else
    write_catalog_text(out, c);
  return exit_pass;
}

struct VerifyOptions {
  std::vector<std::string> families;
  std::vector<std::string> clauses;
  std::optional<std::uint64_t> q_max;
  std::string output = "text";
  unsigned jobs = 1;
  std::vector<std::string> catalogs;
  bool strict = false;
  std::uint64_t x_max = 100000;
  unsigned m_max = 30;
};

inline RunConfig make_config(const VerifyOptions &o) {
  RunConfig cfg;
  cfg.q_max_default = default_q_max();
  cfg.q_max_override = o.q_max;
  for (const auto &f : o.families)
    cfg.families.insert(parse_family_arg(f));
  cfg.clause_filter = o.clauses;
  cfg.jobs = o.jobs;
  cfg.catalogs = load_overrides(o.catalogs);
  cfg.limits.nagell_x_max = o.x_max;
  cfg.limits.nagell_m_max = o.m_max;
  return cfg;
}

inline int exit_code_for(const VerificationRun &run, bool strict) {
  if (run.count(Verdict::fail))
    return exit_fail;
  if (strict && run.count(Verdict::vacuous))
    return exit_vacuous;
  return exit_pass;
}

inline int cmd_verify(const VerifyOptions &o, std::ostream &out,
                      std::ostream &err) {
  RunConfig cfg = make_config(o);
  VerificationRun run = run_verification(cfg);
  if (run.reports.empty()) {
    err << "error: no clause matches the selection\n";
    return exit_usage;
  }
  if (o.output == "json")
    out << to_json(run).dump(2) << "\n";
  else
    write_text(out, run);
  return exit_code_for(run, o.strict);
}

inline int cmd_table2(const std::string &path, const std::string &output,
                      std::ostream &out) {
  auto pairs = path.empty() ? sporadic_pairs() : load_sporadic_file(path);
  VerificationReport r = verify_table2(pairs);
  if (output == "json") {
    out << to_json(r).dump(2) << "\n";
  } else {
    for (const auto &sp : pairs) {
      BigInt a = sp.chars[0].value(), b = sp.chars[1].value();
      out << sp.group << "  " << sp.chars[0].label << "(1) = "
          << sp.chars[0].to_string() << ", " << sp.chars[1].label
          << "(1) = " << sp.chars[1].to_string() << "  gcd " << gcd(a, b)
          << "\n";
    }
    for (const auto &w : r.samples.front().witnesses)
      out << "  " << w << "\n";
    out << (r.verdict() == Verdict::pass ? "PASS" : "FAIL") << "  "
        << pairs.size() << " groups\n";
  }
  return r.verdict() == Verdict::fail ? exit_fail : exit_pass;
}

inline int cmd_nagell(std::uint64_t x_max, unsigned m_max, bool all,
                      std::ostream &out) {
  auto sols = nagell_search(x_max, m_max, !all);
  for (const auto &s : sols)
    out << s.x << "^2 + " << s.x << " + 1 = " << s.y << "^" << s.m << "\n";
  out << sols.size() << (sols.size() == 1 ? " solution" : " solutions")
      << " with x <= " << x_max << ", m <= " << m_max
      << (all ? "" : ", x a prime power") << "\n";
  return exit_pass;
}

inline int run(const std::vector<std::string> &args, std::ostream &out,
               std::ostream &err) {
  CLI::App app{"Character-degree arithmetic checker for exceptional groups "
               "of Lie type"};
  app.name("cdcheck");
  app.require_subcommand(1);

  std::string n_text, q_text;
  auto *phi = app.add_subcommand("phi", "print Phi_n and its value at q");
  phi->add_option("n", n_text, "index")->required();
  phi->add_option("q", q_text, "evaluation point")->required();

  std::string pn_text, pq_text;
  auto *ppdc = app.add_subcommand(
      "ppd", "smallest primitive prime divisor of q^n - 1");
  ppdc->add_option("n", pn_text, "exponent")->required();
  ppdc->add_option("q", pq_text, "base")->required();

  const std::vector<std::string> outputs{"text", "json"};

  std::string cat_family, cat_output = "json";
  std::vector<std::string> cat_paths;
  auto *catc = app.add_subcommand("catalog", "dump one family's catalog");
  catc->add_option("--family,-f", cat_family, "F4, 2E6, E6, E7 or E8")
      ->required();
  catc->add_option("--output,-o", cat_output)
      ->check(CLI::IsMember(outputs));
  catc->add_option("--catalog", cat_paths, "external catalog file");

  VerifyOptions vo;
  std::uint64_t q_max = 0;
  auto *ver = app.add_subcommand("verify", "run the clause registry");
  ver->add_option("--family,-f", vo.families, "restrict to families")
      ->delimiter(',');
  auto *q_opt = ver->add_option("--q-max", q_max,
                                "largest q sampled (default 64, or " +
                                    std::string(q_max_env) + ")");
  ver->add_option("--clause,-c", vo.clauses,
                  "clause ids; a trailing * matches a prefix")
      ->delimiter(',');
  ver->add_option("--output,-o", vo.output)->check(CLI::IsMember(outputs));
  ver->add_option("--jobs,-j", vo.jobs)->check(CLI::Range(1u, 256u));
  ver->add_option("--catalog", vo.catalogs, "external catalog file");
  ver->add_flag("--strict", vo.strict, "vacuous clauses exit with 3");
  ver->add_option("--x-max", vo.x_max)->check(CLI::Range(
      std::uint64_t{2}, std::uint64_t{100000000}));
  ver->add_option("--m-max", vo.m_max)->check(CLI::Range(2u, 4096u));

  std::string t2_path, t2_output = "text";
  auto *t2 = app.add_subcommand("table2", "coprime degree pairs of the "
                                          "sporadic groups");
  t2->add_option("--sporadic", t2_path, "external sporadic table");
  t2->add_option("--output,-o", t2_output)->check(CLI::IsMember(outputs));

  std::uint64_t n_x_max = 100000;
  unsigned n_m_max = 30;
  bool n_all = false;
  auto *nag = app.add_subcommand("nagell", "solve x^2 + x + 1 = y^m");
  nag->add_option("--x-max", n_x_max)->check(CLI::Range(
      std::uint64_t{2}, std::uint64_t{100000000}));
  nag->add_option("--m-max", n_m_max)->check(CLI::Range(2u, 4096u));
  nag->add_flag("--all", n_all, "do not require x to be a prime power");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_pass;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*phi)
      return cmd_phi(n_text, q_text, out);
    if (*ppdc)
      return cmd_ppd(pn_text, pq_text, out);
    if (*catc)
      return cmd_catalog(cat_family, cat_output, cat_paths, out);
    if (*ver) {
      if (*q_opt)
        vo.q_max = q_max;
      return cmd_verify(vo, out, err);
    }
    if (*t2)
      return cmd_table2(t2_path, t2_output, out);
    if (*nag)
      return cmd_nagell(n_x_max, n_m_max, n_all, out);
  } catch (const LoadError &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ConstraintError &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const InvalidArgument &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

inline int run(int argc, char **argv, std::ostream &out, std::ostream &err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

} // namespace cdcheck::cli
