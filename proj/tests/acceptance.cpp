// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "cdcheck/cli.hpp"
#include "cdcheck/verifier.hpp"
#include "oracle.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace cdcheck;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string &name, double limit_s,
               const std::function<Outcome()> &body) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s)
    o.require(false, "took " + std::to_string(secs) + " s, limit " +
                         std::to_string(limit_s) + " s");
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (o.ok ? "PASS" : "FAIL") << " " << id << " " << name << " ("
       << secs << " s)";
  if (!o.ok)
    line << ": " << o.detail;
  std::cout << line.str() << std::endl;
  failures += !o.ok;
}

json verify_json(std::vector<std::string> args, int &code) {
  std::ostringstream out, err;
  args.insert(args.begin(), "verify");
  args.insert(args.end(), {"--output", "json"});
  code = cli::run(args, out, err);
  return json::parse(out.str());
}

const json *find_report(const json &doc, const std::string &id) {
  for (const auto &r : doc["reports"])
    if (r["clause"] == id)
      return &r;
  return nullptr;
}

Outcome cyclotomic_sweep() {
  Outcome o;
  for (unsigned n = 1; n <= 64; ++n) {
    IntPoly prod = IntPoly::constant(1);
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0)
        prod = prod * cyclotomic(d);
    o.require(prod == IntPoly::monomial(n) - IntPoly::constant(1),
              "product identity fails at n=" + std::to_string(n));
  }
  return o;
}

Outcome zsigmondy_sweep() {
  Outcome o;
  for (unsigned long q = 2; q <= 64; ++q)
    for (unsigned n = 3; n <= 36; ++n) {
      std::string at = " at q=" + std::to_string(q) + ", n=" + std::to_string(n);
      PpdResult r = ppd(n, q);
      if (q == 2 && n == 6) {
        o.require(!r.has_prime() && r.exception() == PpdException::pair_2_6,
                  "(2,6) is not reported as the exception");
        continue;
      }
      if (!r.has_prime()) {
        o.require(false, "no ppd" + at);
        continue;
      }
      const BigInt &ell = r.prime();
      o.require(ell % n == 1, "ell != 1 mod n" + at);
      o.require(oracle::is_prime(ell), "not prime" + at);
      o.require(divides(ell, pow(q, n) - 1), "ell does not divide q^n-1" + at);
      for (unsigned k = 1; k < n; ++k)
        if (divides(ell, pow(q, k) - 1))
          o.require(false, "ell divides q^k-1 with k<n" + at);
    }
  for (unsigned long q = 2; q <= 16; ++q)
    for (unsigned n = 3; n <= 20; ++n) {
      PpdResult r = ppd(n, q);
      BigInt want = oracle::smallest_ppd(n, q);
      o.require(r.has_prime() ? r.prime() == want : want == 0,
                "oracle disagreement at q=" + std::to_string(q) +
                    ", n=" + std::to_string(n));
    }
  return o;
}

Outcome lemma_suites() {
  Outcome o;
  const std::map<Family, std::string> caps{
      {Family::F4, "q^16"},     {Family::TwoE6, "q^25"}, {Family::E6, "q^25"},
      {Family::E7, "q^46"},     {Family::E8, "q^91"}};
  const std::map<Family, std::string> pairs{
      {Family::F4,
       "coprime pair: Phi3 Phi6 Phi12 | 1/3 q^4 Phi1^4 Phi2^4 Phi4^2 Phi8"},
      {Family::TwoE6, "coprime pair: ²E6[θ^i] | Phi3 Phi6^2 Phi12 Phi18"},
      {Family::E6, "coprime pair: E6[θ^i] | Phi3^2 Phi6 Phi9 Phi12"}};
  for (Family f : all_families) {
    std::string name = family_name(f);
    int code = -1;
    json doc = verify_json({"--family", name, "--q-max", "64"}, code);
    o.require(code == 0, name + ": exit code " + std::to_string(code));
    for (const auto &r : doc["reports"])
      o.require(r["verdict"] != "fail", name + ": " + r["clause"].get<std::string>() +
                                            " failed");
    for (const char *part : {"v", "vi", "vii", "viii", "ix"}) {
      const json *r = find_report(doc, name + "." + part);
      o.require(r && (*r)["verdict"] == "pass", name + "." + part + " not pass");
    }

    // coprime pairs: exactly the stated pair at p = 3, none elsewhere
    const json *viii = find_report(doc, name + ".viii");
    for (const auto &s : (*viii)["samples"]) {
      bool p3 = s["q"]["p"] == 3;
      std::vector<std::string> got;
      if (s.contains("notes"))
        got = s["notes"].get<std::vector<std::string>>();
      std::vector<std::string> want;
      if (p3 && pairs.count(f))
        want = {pairs.at(f)};
      o.require(got == want, name + ".viii: wrong coprime pairs at p^f=" +
                                 s["q"]["p"].dump() + "^" + s["q"]["f"].dump());
    }

    const auto &cat = load_catalog(f);
    o.require(cat.ppart_cap.odd.to_string() == caps.at(f),
              name + ": odd p-part cap " + cat.ppart_cap.odd.to_string());
    std::string even = f == Family::F4 ? "1/2 q^13" : caps.at(f);
    o.require(cat.ppart_cap.even.to_string() == even,
              name + ": even p-part cap " + cat.ppart_cap.even.to_string());
  }
  return o;
}

Outcome nagell() {
  Outcome o;
  o.require(nagell_search(100000, 30, true).empty(),
            "prime-power solution found");
  auto all = nagell_search(100000, 30, false);
  o.require(std::find(all.begin(), all.end(), NagellSolution{18, 7, 3}) !=
                all.end(),
            "(18, 7, 3) not found with the filter off");
  return o;
}

Outcome table2() {
  Outcome o;
  o.require(sporadic_pairs().size() == 27, "not 27 groups");
  for (const auto &sp : sporadic_pairs())
    o.require(gcd(sp.chars[0].value(), sp.chars[1].value()) == 1,
              sp.group + " pair not coprime");
  o.require(verify_table2().verdict() == Verdict::pass, "table2 clause failed");
  return o;
}

Outcome torus() {
  Outcome o;
  for (Family f : all_families) {
    const auto &cat = load_catalog(f);
    auto qs = cat.sample_range(64);
    for (std::size_t i = 0; i < 3; ++i) {
      const PrimePower &q = qs[i];
      BigInt pprime = p_prime_part(cat.order_at(q), from_u64(q.p));
      for (const auto &t : cat.torus_orders) {
        BigInt tv = evaluate(t.order, q);
        o.require(divides(tv, pprime) &&
                      pprime / tv == evaluate(cat.entry(t.entry).degree, q),
                  cat.name() + " torus " + t.entry + " at q=" + q.to_string());
      }
      o.require(verify_torus_quotients(f, q).verdict() == Verdict::pass,
                cat.name() + " torus clause");
    }
  }
  const auto &f4 = load_catalog(Family::F4);
  PrimePower q3 = PrimePower::make(3, 1);
  o.require(p_prime_part(f4.order_at(q3), 3) / cyclotomic_value(12, 3) ==
                evaluate(make_degree(1, 0,
                                     {{1, 4}, {2, 4}, {3, 2}, {4, 2}, {6, 2}, {8, 1}}),
                         q3),
            "F4 Phi12 quotient");
  return o;
}

Outcome structural() {
  Outcome o;
  const std::array<unsigned, 5> dims{52, 78, 78, 133, 248};
  for (std::size_t i = 0; i < all_families.size(); ++i) {
    const auto &cat = load_catalog(all_families[i]);
    o.require(cat.order.q_degree() == dims[i], cat.name() + " dimension");
    o.require(cat.order_source == "external-standard", cat.name() + " source");
    for (const auto &q : cat.sample_range(64)) {
      BigInt order = cat.order_at(q);
      BigInt biggest = 0;
      for (auto &[label, v] : cat.degrees_at(q, VersionFilter::simple)) {
        o.require(divides(v, order), cat.name() + " " + label +
                                         " does not divide the order at q=" +
                                         q.to_string());
        biggest = std::max(biggest, v);
      }
      o.require(biggest * biggest <= order,
                cat.name() + " max-square at q=" + q.to_string());
    }
  }
  return o;
}

Outcome arith_claims() {
  Outcome o;
  RunConfig cfg;
  cfg.clause_filter = {"arith.*"};
  auto run = run_verification(cfg);
  for (const auto &r : run.reports)
    o.require(r.verdict() == Verdict::pass, r.clause + " " + to_string(r.verdict()));
  for (const auto &r : run.reports)
    if (r.clause == "arith.F4.41-divisibility") {
      std::vector<std::string> qs;
      for (const auto &s : r.samples)
        qs.push_back(s.q->to_string());
      o.require(qs == std::vector<std::string>{"3", "9", "27"},
                "41-divisibility samples");
    }
  for (std::uint64_t q : {3, 9, 27})
    o.require(divides(32 * 3 * 5 * 41,
                      evaluate(make_degree(3, 4, {{1, 4}, {2, 4}, {4, 2}, {8, 1}}),
                               PrimePower::from_value(q))),
              "2^5*3*5*41 divisibility at q=" + std::to_string(q));
  o.require(alternating_prime_power_n(1000) == std::vector<unsigned>{9},
            "alternating helper");
  std::vector<unsigned> k0;
  for (Family f : all_families) {
    auto [a, b, c] = family_exponents(f);
    k0.push_back(exponent_k0(a, b));
  }
  o.require(k0 == std::vector<unsigned>{3, 3, 3, 3, 4}, "k0 values");
  return o;
}

Outcome determinism() {
  Outcome o;
  int c1 = -1, c2 = -1;
  std::ostringstream a, b, e;
  c1 = cli::run({"verify", "--output", "json"}, a, e);
  c2 = cli::run({"verify", "--output", "json"}, b, e);
  o.require(c1 == 0 && c2 == 0, "verify exit codes " + std::to_string(c1) +
                                    ", " + std::to_string(c2));
  o.require(!a.str().empty() && a.str() == b.str(), "JSON differs between runs");
  return o;
}

} // namespace

int main() {
  criterion(1, "cyclotomic identity sweep", 1.0, cyclotomic_sweep);
  criterion(2, "Zsigmondy sweep", 30.0, zsigmondy_sweep);
  criterion(3, "lemma suites", 300.0, lemma_suites);
  criterion(4, "Nagell-Ljunggren search", 10.0, nagell);
  criterion(5, "sporadic coprime pairs", 0, table2);
  criterion(6, "torus-quotient identities", 0, torus);
  criterion(7, "structural cross-checks", 0, structural);
  criterion(8, "arithmetic-claims registry", 0, arith_claims);
  criterion(9, "determinism", 0, determinism);
  return failures ? 1 : 0;
}
