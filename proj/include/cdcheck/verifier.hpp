#pragma once

// Clause registry and report generation. Each clause is an executable
// reformulation of one checkable claim about the catalog degrees, or of one
// arithmetic fact used alongside them, evaluated at concrete prime powers.

#include "cdcheck/catalog.hpp"
#include "cdcheck/cyclotomic.hpp"
#include "cdcheck/degree.hpp"
#include "cdcheck/zsigmondy.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace cdcheck {

enum class Category {
  conditional_equality,
  coprime_classification,
  ppart_bound,
  minimum_degree,
  isolation,
  no_consecutive,
  divisibility_claim,
  inequality_claim,
  torus_quotient,
  diophantine,
  alternating_prime_power,
  sc_ad_extra,
  structural,
  sporadic_coprime,
};

inline std::string to_string(Category c) {
  switch (c) {
  case Category::conditional_equality:
    return "conditional-equality";
  case Category::coprime_classification:
    return "coprime-classification";
  case Category::ppart_bound:
    return "ppart-bound";
  case Category::minimum_degree:
    return "minimum-degree";
  case Category::isolation:
    return "isolation";
  case Category::no_consecutive:
    return "no-consecutive";
  case Category::divisibility_claim:
    return "divisibility-claim";
  case Category::inequality_claim:
    return "inequality-claim";
  case Category::torus_quotient:
    return "torus-quotient";
  case Category::diophantine:
    return "diophantine";
  case Category::alternating_prime_power:
    return "alternating-prime-power";
  case Category::sc_ad_extra:
    return "sc-ad-extra";
  case Category::structural:
    return "structural";
  case Category::sporadic_coprime:
    return "sporadic-coprime";
  }
  return "?";
}

enum class Verdict { pass, fail, vacuous };

inline std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::pass:
    return "pass";
  case Verdict::fail:
    return "fail";
  case Verdict::vacuous:
    return "vacuous";
  }
  return "?";
}

struct Sample {
  std::optional<PrimePower> q; ///< empty for q-independent claims
  Verdict verdict = Verdict::pass;
  std::vector<std::string> witnesses; ///< why it failed
  std::vector<std::string> notes;     ///< what was observed
};

struct VerificationReport {
  std::string clause;
  std::string source;
  std::optional<Family> family;
  Category category = Category::structural;
  std::vector<Sample> samples;
  std::string scope_note;

  /// fail beats pass beats vacuous; no samples at all is vacuous.
  Verdict verdict() const {
    bool any_pass = false;
    for (const auto &s : samples) {
      if (s.verdict == Verdict::fail)
        return Verdict::fail;
      any_pass = any_pass || s.verdict == Verdict::pass;
    }
    return any_pass ? Verdict::pass : Verdict::vacuous;
  }
};

/// Parameters of the q-independent searches.
struct SearchLimits {
  std::uint64_t nagell_x_max = 100000;
  unsigned nagell_m_max = 30;
  unsigned alternating_n_max = 1000;
};

struct Clause {
  std::string id;
  std::optional<Family> family;
  Category category = Category::structural;
  std::string source;
  std::string scope_note;
  bool q_dependent = true;
  /// Which admissible q the clause speaks about; empty means all.
  std::function<bool(const PrimePower &)> applies;
  /// Family clauses get the catalog; q is null for q-independent clauses.
  std::function<Sample(const FamilyCatalog *, const PrimePower *,
                       const SearchLimits &)>
      check;
};

/// A part of a clause that is recorded but deliberately not checked.
struct OutOfScope {
  std::string id;
  Family family;
  std::string source;
  std::string reason;
};

// Number-theoretic searches ---------------------------------------------------

struct NagellSolution {
  std::uint64_t x;
  BigInt y;
  unsigned m;
  friend bool operator==(const NagellSolution &, const NagellSolution &) =
      default;
};

/// All solutions of x^2 + x + 1 = y^m with 2 <= x <= x_max, 2 <= m <= m_max,
/// y >= 2, ordered by (x, m).
inline std::vector<NagellSolution>
nagell_search(std::uint64_t x_max, unsigned m_max, bool prime_power_only) {
  if (x_max < 2 || m_max < 2)
    throw InvalidArgument("nagell_search: x_max and m_max must be >= 2");
  std::vector<NagellSolution> out;
  for (std::uint64_t x = 2; x <= x_max; ++x) {
    if (prime_power_only && !arith::is_prime_power(x))
      continue;
    BigInt bx = from_u64(x);
    BigInt v = bx * bx + bx + 1;
    if (!mpz_perfect_power_p(v.get_mpz_t()))
      continue;
    for (unsigned m = 2; m <= m_max; ++m)
      if (auto y = exact_root(v, m); y && *y >= 2)
        out.push_back({x, *y, m});
  }
  return out;
}

/// n with 7 <= n <= n_max for which n(n-3)/2 is a prime power.
inline std::vector<unsigned> alternating_prime_power_n(unsigned n_max) {
  std::vector<unsigned> out;
  for (unsigned n = 7; n <= n_max; ++n) {
    std::uint64_t v = std::uint64_t(n) * (n - 3) / 2;
    if (arith::is_prime_power(v))
      out.push_back(n);
  }
  return out;
}

/// Largest k >= 1 with a (k - 1) <= k b, for a > b.
inline unsigned exponent_k0(unsigned a, unsigned b) {
  if (a <= b)
    throw InvalidArgument("exponent_k0: needs a > b");
  return a / (a - b);
}

namespace detail {

inline const std::string catalog_scope =
    "quantifies over the catalog degrees only, a subset of cd(H); a pass "
    "means consistent with the source on its own data";
inline const std::string exact_scope = "exact integer arithmetic";

/// Degrees and primitive prime divisors of one family at one q.
struct QContext {
  const FamilyCatalog &cat;
  const PrimePower &q;
  BigInt p;
  BigInt steinberg;
  std::vector<std::pair<const DegreeEntry *, BigInt>> values;
  std::vector<BigInt> ell;               ///< smallest ppd of Phi_{top_phi[i]}
  std::vector<std::vector<BigInt>> ells; ///< all ppds of Phi_{top_phi[i]}

  QContext(const FamilyCatalog &c, const PrimePower &qq)
      : cat(c), q(qq), p(from_u64(qq.p)), steinberg(c.steinberg_degree(qq)) {
    for (const auto *e : c.entries_at(q, VersionFilter::any))
      values.emplace_back(e, evaluate(e->degree, q));
    for (unsigned n : c.top_phi) {
      PpdResult r = ppd(n, q.value);
      if (!r.has_prime())
        throw std::logic_error(c.name() + ": Phi_" + std::to_string(n) +
                               " has no primitive prime divisor at q=" +
                               q.to_string());
      ell.push_back(r.prime());
      ells.push_back(primitive_prime_divisors(n, q.value));
    }
  }

  std::vector<std::pair<const DegreeEntry *, BigInt>>
  universe(VersionFilter f) const {
    std::vector<std::pair<const DegreeEntry *, BigInt>> out;
    for (const auto &v : values)
      if (version_visible(v.first->version, f))
        out.push_back(v);
    return out;
  }

  bool trivial_or_steinberg(const BigInt &v) const {
    return v == 1 || v == steinberg;
  }

  std::optional<BigInt> value_of(const std::string &label) const {
    for (const auto &[e, v] : values)
      if (e->label == label)
        return v;
    return std::nullopt;
  }

  std::string ell_text(int token) const {
    if (token == 0)
      return "p=" + p.get_str();
    auto i = static_cast<std::size_t>(token - 1);
    return "l" + std::to_string(token) + "=" + ell[i].get_str();
  }
};

/// Token 0 is p; token i >= 1 is l_i, a ppd of Phi_{top_phi[i-1]}.
using Tokens = std::vector<int>;

struct CoprimeRule {
  std::function<bool(const PrimePower &)> applies; ///< null means always
  Tokens coprime_to;
  std::vector<std::string> allowed; ///< labels x may equal
  Tokens or_divisible_by;           ///< alternative conclusion: all divide x
};

/// (x, token set) = 1 for the smallest ppds, or for some choice of ppds.
inline bool coprime_smallest(const QContext &c, const BigInt &x,
                             const Tokens &ts) {
  for (int t : ts) {
    const BigInt &d = t == 0 ? c.p : c.ell[static_cast<std::size_t>(t - 1)];
    if (divides(d, x))
      return false;
  }
  return true;
}

inline bool coprime_some_choice(const QContext &c, const BigInt &x,
                                const Tokens &ts) {
  for (int t : ts) {
    if (t == 0) {
      if (divides(c.p, x))
        return false;
      continue;
    }
    bool some = false;
    for (const auto &l : c.ells[static_cast<std::size_t>(t - 1)])
      some = some || !divides(l, x);
    if (!some)
      return false;
  }
  return true;
}

inline bool divisible_smallest(const QContext &c, const BigInt &x,
                               const Tokens &ts) {
  for (int t : ts) {
    const BigInt &d = t == 0 ? c.p : c.ell[static_cast<std::size_t>(t - 1)];
    if (!divides(d, x))
      return false;
  }
  return true;
}

inline bool divisible_every_choice(const QContext &c, const BigInt &x,
                                   const Tokens &ts) {
  for (int t : ts) {
    if (t == 0) {
      if (!divides(c.p, x))
        return false;
      continue;
    }
    for (const auto &l : c.ells[static_cast<std::size_t>(t - 1)])
      if (!divides(l, x))
        return false;
  }
  return true;
}

inline std::string tokens_text(const QContext &c, const Tokens &ts) {
  std::string out;
  for (int t : ts)
    out += (out.empty() ? "" : ", ") + c.ell_text(t);
  return "{" + out + "}";
}

inline Sample check_conditional(const QContext &c, VersionFilter universe,
                                const std::vector<CoprimeRule> &rules) {
  Sample s;
  s.q = c.q;
  bool any_rule = false, selected = false, any_assertion = false;
  for (const auto &rule : rules) {
    if (rule.applies && !rule.applies(c.q))
      continue;
    any_rule = true;
    bool assertion = rule.allowed.empty() && rule.or_divisible_by.empty();
    any_assertion = any_assertion || assertion;
    std::vector<BigInt> allowed_values;
    for (const auto &label : rule.allowed) {
      if (auto v = c.value_of(label))
        allowed_values.push_back(*v);
      else if (!c.cat.find(label))
        s.witnesses.push_back("named entry " + label + " is not in the catalog");
    }
    for (const auto &[e, x] : c.universe(universe)) {
      if (c.trivial_or_steinberg(x))
        continue;
      // smallest ppds, then every other choice of ppds
      for (int mode = 0; mode < 2; ++mode) {
        bool hyp = mode == 0 ? coprime_smallest(c, x, rule.coprime_to)
                             : coprime_some_choice(c, x, rule.coprime_to);
        if (!hyp)
          continue;
        if (!assertion)
          selected = true;
        bool ok = std::find(allowed_values.begin(), allowed_values.end(), x) !=
                  allowed_values.end();
        if (!ok && !rule.or_divisible_by.empty())
          ok = mode == 0 ? divisible_smallest(c, x, rule.or_divisible_by)
                         : divisible_every_choice(c, x, rule.or_divisible_by);
        if (!ok) {
          s.witnesses.push_back(
              e->label + " is coprime to " + tokens_text(c, rule.coprime_to) +
              (mode == 1 ? " for some choice of primitive prime divisors" : "") +
              (assertion ? "" : " but matches no permitted conclusion"));
          break;
        }
      }
    }
  }
  if (!s.witnesses.empty())
    s.verdict = Verdict::fail;
  else if (!any_rule || (!any_assertion && !selected))
    s.verdict = Verdict::vacuous;
  return s;
}

inline Sample check_classification(
    const QContext &c, VersionFilter universe,
    std::optional<std::pair<std::string, std::string>> p3_pair) {
  Sample s;
  s.q = c.q;
  std::vector<std::pair<const DegreeEntry *, BigInt>> xs;
  for (const auto &v : c.universe(universe))
    if (!c.trivial_or_steinberg(v.second))
      xs.push_back(v);
  bool exceptional = p3_pair && c.q.p == 3;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (gcd(xs[i].second, xs[j].second) != 1)
        continue;
      const auto &a = xs[i].first->label, &b = xs[j].first->label;
      std::string pair = a + " | " + b;
      bool expected = exceptional && ((a == p3_pair->first && b == p3_pair->second) ||
                                      (a == p3_pair->second && b == p3_pair->first));
      if (expected)
        s.notes.push_back("coprime pair: " + pair);
      else
        s.witnesses.push_back("unexpected coprime pair: " + pair);
    }
  if (!s.witnesses.empty())
    s.verdict = Verdict::fail;
  return s;
}

inline Sample check_ppart(const QContext &c, VersionFilter universe) {
  Sample s;
  s.q = c.q;
  BigInt cap = evaluate(c.cat.ppart_cap.at(c.q), c.q);
  BigInt best = 0;
  std::string best_label;
  for (const auto &[e, x] : c.universe(universe)) {
    if (x == c.steinberg)
      continue;
    BigInt pp = p_part(x, c.p);
    if (pp > best) {
      best = pp;
      best_label = e->label;
    }
    if (pp > cap)
      s.witnesses.push_back(e->label + " has p-part " + pp.get_str() +
                            " > cap " + cap.get_str());
  }
  if (!best_label.empty())
    s.notes.push_back("largest p-part " + best.get_str() + " at " +
                      best_label);
  if (!s.witnesses.empty())
    s.verdict = Verdict::fail;
  return s;
}

inline Sample check_minimum(const QContext &c, const std::string &odd_label,
                            const std::string &even_label) {
  Sample s;
  s.q = c.q;
  const std::string &label = c.q.odd() ? odd_label : even_label;
  auto target = c.value_of(label);
  if (!target) {
    s.verdict = Verdict::fail;
    s.witnesses.push_back("named entry " + label + " is not admissible here");
    return s;
  }
  for (const auto &[e, x] : c.universe(VersionFilter::simple))
    if (x != 1 && x < *target)
      s.witnesses.push_back(e->label + " is smaller than " + label);
  if (!s.witnesses.empty())
    s.verdict = Verdict::fail;
  return s;
}

inline Sample check_isolation(const QContext &c, VersionFilter universe,
                              const std::vector<std::string> &labels) {
  Sample s;
  s.q = c.q;
  auto xs = c.universe(universe);
  for (const auto &label : labels) {
    auto v = c.value_of(label);
    if (!v) {
      s.witnesses.push_back("named entry " + label + " is not admissible here");
      continue;
    }
    for (const auto &[e, x] : xs)
      if (x != *v && divides(*v, x))
        s.witnesses.push_back(e->label + " is a proper multiple of " + label);
  }
  if (!s.witnesses.empty())
    s.verdict = Verdict::fail;
  return s;
}

inline Sample check_no_consecutive(const QContext &c, VersionFilter universe) {
  Sample s;
  s.q = c.q;
  auto xs = c.universe(universe);
  std::sort(xs.begin(), xs.end(),
            [](const auto &a, const auto &b) { return a.second < b.second; });
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i].second - xs[i - 1].second == 1)
      s.witnesses.push_back(xs[i - 1].first->label + " and " +
                            xs[i].first->label + " differ by 1");
  if (!s.witnesses.empty())
    s.verdict = Verdict::fail;
  return s;
}

/// sc extras divide no degree of H; ad extras are not degrees of H.
inline Sample check_extra(const QContext &c) {
  Sample s;
  s.q = c.q;
  auto simple = c.universe(VersionFilter::simple);
  bool any = false;
  for (const auto &[e, v] : c.values) {
    if (e->version == Version::simple)
      continue;
    any = true;
    for (const auto &[h, x] : simple) {
      bool bad = e->version == Version::sc ? divides(v, x) : v == x;
      if (bad)
        s.witnesses.push_back(e->label + (e->version == Version::sc
                                              ? " divides "
                                              : " equals ") +
                              h->label);
    }
  }
  if (!s.witnesses.empty())
    s.verdict = Verdict::fail;
  else if (!any)
    s.verdict = Verdict::vacuous;
  return s;
}

inline Sample check_torus(const FamilyCatalog &cat, const PrimePower &q) {
  Sample s;
  s.q = q;
  BigInt pprime = p_prime_part(cat.order_at(q), from_u64(q.p));
  for (const auto &t : cat.torus_orders) {
    BigInt tv = evaluate(t.order, q);
    const auto *e = cat.find(t.entry);
    if (!e || !e->admits(q)) {
      s.witnesses.push_back("entry " + t.entry + " is not admissible here");
      continue;
    }
    if (!divides(tv, pprime)) {
      s.witnesses.push_back("torus " + t.order.to_string() +
                            " does not divide |H|_p'");
      continue;
    }
    if (pprime / tv != evaluate(e->degree, q))
      s.witnesses.push_back("|H|_p' / (" + t.order.to_string() +
                            ") differs from " + t.entry);
  }
  if (cat.torus_orders.empty())
    s.verdict = Verdict::vacuous;
  else if (!s.witnesses.empty())
    s.verdict = Verdict::fail;
  return s;
}

inline Sample verdict_of(const PrimePower *q, bool ok, std::string witness,
                         std::string note = {}) {
  Sample s;
  if (q)
    s.q = *q;
  if (!ok) {
    s.verdict = Verdict::fail;
    s.witnesses.push_back(std::move(witness));
  } else if (!note.empty()) {
    s.notes.push_back(std::move(note));
  }
  return s;
}

inline FactoredDegree deg(unsigned t, unsigned a,
                          std::map<unsigned, unsigned> exps = {}) {
  return FactoredDegree{t, a, std::move(exps)};
}

/// Polynomial expansion of prod Phi_k^{e_k} (denominator and q-power
/// ignored).
inline IntPoly expand(const FactoredDegree &d) {
  IntPoly out = IntPoly::monomial(d.q_exp);
  for (auto [k, e] : d.cyclo_exps)
    for (unsigned i = 0; i < e; ++i)
      out = out * cyclotomic(k);
  return out;
}

inline bool expands_to(const FactoredDegree &d,
                       std::vector<std::pair<unsigned, long>> terms) {
  IntPoly want;
  for (auto [k, c] : terms)
    want = want + IntPoly::monomial(k, c);
  return expand(d) == want;
}

/// num/t < bound, decided on integers as num < t * bound.
inline bool below(const FactoredDegree &d, const BigInt &bound,
                  const PrimePower &q) {
  return d.numerator_at(q.value) < bound * d.denom;
}

// Registry construction ------------------------------------------------------

class RegistryBuilder {
public:
  std::vector<Clause> clauses;
  std::vector<OutOfScope> out_of_scope;

  void add(Clause c) { clauses.push_back(std::move(c)); }

  Clause family_clause(Family f, std::string id, Category cat,
                       std::string source) {
    Clause c;
    c.id = family_name(f) + "." + id;
    c.family = f;
    c.category = cat;
    c.source = std::move(source);
    c.scope_note = catalog_scope;
    return c;
  }

  void conditional(Family f, std::string id, std::string source,
                   VersionFilter universe, std::vector<CoprimeRule> rules) {
    Clause c = family_clause(f, std::move(id), Category::conditional_equality,
                             std::move(source));
    c.check = [universe, rules](const FamilyCatalog *cat, const PrimePower *q,
                                const SearchLimits &) {
      return check_conditional(QContext(*cat, *q), universe, rules);
    };
    add(std::move(c));
  }

  void classification(Family f, std::string source, VersionFilter universe,
                      std::optional<std::pair<std::string, std::string>> pair) {
    Clause c = family_clause(f, "viii", Category::coprime_classification,
                             std::move(source));
    c.check = [universe, pair](const FamilyCatalog *cat, const PrimePower *q,
                               const SearchLimits &) {
      return check_classification(QContext(*cat, *q), universe, pair);
    };
    add(std::move(c));
  }

  void isolation(Family f, std::string source, VersionFilter universe,
                 std::vector<std::string> labels) {
    Clause c = family_clause(f, "v", Category::isolation, std::move(source));
    c.check = [universe, labels](const FamilyCatalog *cat, const PrimePower *q,
                                 const SearchLimits &) {
      return check_isolation(QContext(*cat, *q), universe, labels);
    };
    add(std::move(c));
  }

  void ppart(Family f, std::string source, VersionFilter universe) {
    Clause c = family_clause(f, "vi", Category::ppart_bound, std::move(source));
    c.check = [universe](const FamilyCatalog *cat, const PrimePower *q,
                         const SearchLimits &) {
      return check_ppart(QContext(*cat, *q), universe);
    };
    add(std::move(c));
  }

  void minimum(Family f, std::string source, std::string odd_label,
               std::string even_label) {
    Clause c =
        family_clause(f, "vii", Category::minimum_degree, std::move(source));
    c.check = [odd_label, even_label](const FamilyCatalog *cat,
                                      const PrimePower *q,
                                      const SearchLimits &) {
      return check_minimum(QContext(*cat, *q), odd_label, even_label);
    };
    add(std::move(c));
  }

  void no_consecutive(Family f, std::string source, VersionFilter universe) {
    Clause c =
        family_clause(f, "ix", Category::no_consecutive, std::move(source));
    c.check = [universe](const FamilyCatalog *cat, const PrimePower *q,
                         const SearchLimits &) {
      return check_no_consecutive(QContext(*cat, *q), universe);
    };
    add(std::move(c));
  }

  void extra(Family f, std::string source,
             std::function<bool(const PrimePower &)> applies,
             std::string multiplicity_source) {
    Clause c = family_clause(f, "x", Category::sc_ad_extra, std::move(source));
    c.applies = std::move(applies);
    c.check = [](const FamilyCatalog *cat, const PrimePower *q,
                 const SearchLimits &) {
      return check_extra(QContext(*cat, *q));
    };
    add(std::move(c));
    out_of_scope.push_back({family_name(f) + ".x.multiplicity", f,
                            std::move(multiplicity_source),
                            "character-theoretic, not degree-arithmetic"});
  }

  /// A claim about one q computed from scratch.
  void arith(Family f, std::string id, Category cat, std::string source,
             std::function<Sample(const PrimePower &)> body,
             std::function<bool(const PrimePower &)> applies = {}) {
    Clause c;
    c.id = "arith." + family_name(f) + "." + id;
    c.family = f;
    c.category = cat;
    c.source = std::move(source);
    c.scope_note = exact_scope;
    c.applies = std::move(applies);
    c.check = [body](const FamilyCatalog *, const PrimePower *q,
                     const SearchLimits &) { return body(*q); };
    add(std::move(c));
  }

  /// A family claim with no q.
  void fixed(Family f, std::string id, Category cat, std::string source,
             std::function<Sample(const FamilyCatalog &)> body) {
    Clause c;
    c.id = id;
    c.family = f;
    c.category = cat;
    c.source = std::move(source);
    c.scope_note = exact_scope;
    c.q_dependent = false;
    c.check = [body](const FamilyCatalog *cat, const PrimePower *,
                     const SearchLimits &) { return body(*cat); };
    add(std::move(c));
  }

  void structural(Family f) {
    std::string n = family_name(f);
    fixed(f, "struct." + n + ".dimension", Category::structural,
          "group order: total q-degree equals the group dimension",
          [f](const FamilyCatalog &cat) {
            unsigned d = cat.order.q_degree();
            return verdict_of(nullptr, d == family_dimension(f),
                              "order has q-degree " + std::to_string(d),
                              "q-degree " + std::to_string(d));
          });

    Clause div;
    div.id = "struct." + n + ".divides-order";
    div.family = f;
    div.category = Category::structural;
    div.source = "every catalog degree divides the group order";
    div.scope_note = exact_scope;
    div.check = [](const FamilyCatalog *cat, const PrimePower *q,
                   const SearchLimits &) {
      Sample s;
      s.q = *q;
      BigInt order = cat->order_at(*q);
      for (const auto *e : cat->entries_at(*q, VersionFilter::any)) {
        if (!is_integral_at(e->degree, *q)) {
          s.witnesses.push_back(e->label + " is not integral");
          continue;
        }
        if (!divides(evaluate(e->degree, *q), order))
          s.witnesses.push_back(e->label + " does not divide the order");
      }
      if (!s.witnesses.empty())
        s.verdict = Verdict::fail;
      return s;
    };
    add(std::move(div));

    Clause sq;
    sq.id = "struct." + n + ".max-square";
    sq.family = f;
    sq.category = Category::structural;
    sq.source = "b(G)^2 <= |G| for the largest catalog degree";
    sq.scope_note = exact_scope;
    sq.check = [](const FamilyCatalog *cat, const PrimePower *q,
                  const SearchLimits &) {
      BigInt best = 0;
      std::string label;
      for (auto &[l, v] : cat->degrees_at(*q, VersionFilter::simple))
        if (v > best) {
          best = v;
          label = l;
        }
      return verdict_of(q, best * best <= cat->order_at(*q),
                        label + " squared exceeds the order",
                        "largest degree: " + label);
    };
    add(std::move(sq));
  }

  void torus(Family f) {
    Clause c;
    c.id = "torus." + family_name(f);
    c.family = f;
    c.category = Category::torus_quotient;
    c.source = "semisimple degrees equal |H|_p' divided by a maximal torus order";
    c.scope_note = exact_scope;
    c.check = [](const FamilyCatalog *cat, const PrimePower *q,
                 const SearchLimits &) { return check_torus(*cat, *q); };
    add(std::move(c));
  }

  /// Exponent bookkeeping shared by every family.
  void exponent_claims(Family f) {
    std::string n = family_name(f);
    fixed(f, "arith." + n + ".k0", Category::inequality_claim,
          "a(H)(k-1) <= k b(H) forces k <= k0; k0 = 3 except E8 where k0 = 4",
          [f](const FamilyCatalog &cat) {
            unsigned expect = f == Family::E8 ? 4 : 3;
            unsigned k0 = exponent_k0(cat.a_H, cat.b_H);
            bool tight = cat.a_H * (k0 - 1) <= k0 * cat.b_H &&
                         cat.a_H * k0 > (k0 + 1) * cat.b_H;
            return verdict_of(nullptr, k0 == expect && tight,
                              "k0 = " + std::to_string(k0),
                              "k0 = " + std::to_string(k0));
          });
    fixed(f, "arith." + n + ".c-exponent", Category::divisibility_claim,
          "the degree coprime to l1 l2 is (1/t) q^c(H) alpha with 1 <= t <= 6 "
          "and alpha prime to p",
          [](const FamilyCatalog &cat) {
            const DegreeEntry *hit = nullptr;
            for (const auto &e : cat.entries)
              if (e.version == Version::simple && e.degree.q_exp == cat.c_H &&
                  !e.degree.cyclo_exps.count(cat.top_phi[0]) &&
                  !e.degree.cyclo_exps.count(cat.top_phi[1]) &&
                  !e.degree.cyclo_exps.empty())
                hit = &e;
            return verdict_of(nullptr, hit != nullptr,
                              "no entry free of Phi_" +
                                  std::to_string(cat.top_phi[0]) + " Phi_" +
                                  std::to_string(cat.top_phi[1]) +
                                  " has q-exponent c(H)",
                              hit ? "c(H) carried by " + hit->label : "");
          });
    arith(f, "wedge", Category::inequality_claim,
          "chi(1) is divisible by q^floor(a(H)/2) > q^c(H)",
          [f](const PrimePower &q) {
            auto [a, b, c] = family_exponents(f);
            return verdict_of(&q, pow(q.value, a / 2) > pow(q.value, c),
                              "q^floor(a/2) <= q^c");
          });
  }
};

inline bool is_q(const PrimePower &q, unsigned v) { return q.value == v; }

inline void register_f4(RegistryBuilder &r) {
  const Family F = Family::F4;
  const auto H = VersionFilter::simple;
  const std::string q4 = "1/4 q^4 Phi1^4 Phi2^4 Phi3^2 Phi6^2";
  const std::string t12 = "semisimple:Φ_12-torus", t8 = "semisimple:Φ_8-torus";
  const std::string odd_min = "Phi3 Phi6 Phi12";
  const std::string third = "1/3 q^4 Phi1^4 Phi2^4 Phi4^2 Phi8";

  r.conditional(F, "i", "F4(q), q >= 3, l1..l4 ppds of Phi12, Phi8, Phi6, Phi3: "
                        "if (l1 l2, x) = 1 then x = 1/4 q^4 Phi1^4 Phi2^4 Phi3^2 Phi6^2",
                H, {{{}, {1, 2}, {q4}, {}}});
  r.conditional(F, "ii", "if (l1, x) = 1 then p | x or x = Phi1^4 Phi2^4 Phi3^2 "
                         "Phi4^2 Phi6^2 Phi8",
                H, {{{}, {1}, {t12}, {0}}});
  r.conditional(F, "iii", "if (l2, x) = 1 then p | x or x is Phi3 Phi6 Phi12 "
                          "(q odd) or Phi1^4 Phi2^4 Phi3^2 Phi4^2 Phi6^2 Phi12",
                H, {{{}, {2}, {odd_min, t8}, {0}}});
  r.conditional(F, "iv", "if (l3 l4, x) = 1 then x is 1/2 q Phi4 Phi8 Phi12, "
                         "q^3 Phi4^2 Phi8 Phi12, 1/3 q^4 Phi1^4 Phi2^4 Phi4^2 Phi8, "
                         "q^9 Phi4^2 Phi8 Phi12 or 1/2 q^13 Phi4 Phi8 Phi12",
                H,
                {{{}, {3, 4},
                  {"φ_{2,4}'", "q^3 Phi4^2 Phi8 Phi12", third,
                   "q^9 Phi4^2 Phi8 Phi12", "φ_{2,16}'"},
                  {}}});
  r.isolation(F, "degrees Phi1^4 Phi2^4 Phi3^2 Phi4^2 Phi6^2 Phi8 and "
                 "Phi1^4 Phi2^4 Phi3^2 Phi4^2 Phi6^2 Phi12 have no proper "
                 "multiple in cd(H)",
              H, {t12, t8});
  r.ppart(F, "the p-part of x is at most q^16 (q odd), 1/2 q^13 (q even)", H);
  r.minimum(F, "smallest nontrivial degree: Phi3 Phi6 Phi12 (q odd), "
               "1/2 q Phi1^2 Phi3^2 Phi8 (q even)",
            odd_min, "1/2 q Phi1^2 Phi3^2 Phi8");
  r.classification(F, "if p != 3 then (x, y) > 1; if p = 3 and (x, y) = 1 then "
                      "{x, y} = {Phi3 Phi6 Phi12, 1/3 q^4 Phi1^4 Phi2^4 Phi4^2 Phi8}",
                   H, std::pair{odd_min, third});
  r.no_consecutive(F, "H has no consecutive degrees", H);

  r.arith(F, "half-phi-bound", Category::inequality_claim,
          "1/2 Phi4 Phi8 Phi12 = 1/2 (q^4+1)(q^6+1) < q^10, so the squared "
          "p'-part of 1/2 q Phi4 Phi8 Phi12 is below q^20 < q^24",
          [](const PrimePower &q) {
            auto d = deg(2, 0, {{4, 1}, {8, 1}, {12, 1}});
            bool ok = below(d, pow(q.value, 10), q);
            BigInt sq = d.numerator_at(q.value);
            ok = ok && sq * sq < pow(q.value, 20) * 4 &&
                 pow(q.value, 20) < pow(q.value, 24);
            return verdict_of(&q, ok, "1/2 Phi4 Phi8 Phi12 >= q^10");
          });
  r.arith(F, "min-below-third", Category::inequality_claim,
          "Phi3 Phi6 Phi12 = q^8+q^4+1 < 1/3 q^4 Phi1^4 Phi2^4 Phi4^2 Phi8 "
          "= 1/3 q^4 (q^2-1)^2 (q^4-1)(q^8-1)",
          [](const PrimePower &q) {
            auto small = deg(1, 0, {{3, 1}, {6, 1}, {12, 1}});
            auto big = deg(3, 4, {{1, 4}, {2, 4}, {4, 2}, {8, 1}});
            IntPoly alt = IntPoly::monomial(4) *
                          (IntPoly::monomial(2) - IntPoly::constant(1)) *
                          (IntPoly::monomial(2) - IntPoly::constant(1)) *
                          (IntPoly::monomial(4) - IntPoly::constant(1)) *
                          (IntPoly::monomial(8) - IntPoly::constant(1));
            bool ok = expands_to(small, {{8, 1}, {4, 1}, {0, 1}}) &&
                      expand(big) == alt &&
                      small.numerator_at(q.value) * 3 < big.numerator_at(q.value);
            return verdict_of(&q, ok, "inequality or expansion fails");
          });
  r.arith(F, "pair-gap", Category::inequality_claim,
          "1/3 q^4 Phi1^4 Phi2^4 Phi4^2 Phi8 > q^14 > q^9 > Phi3 Phi6 Phi12 for q >= 3",
          [](const PrimePower &q) {
            auto big = deg(3, 4, {{1, 4}, {2, 4}, {4, 2}, {8, 1}});
            BigInt small = evaluate(deg(1, 0, {{3, 1}, {6, 1}, {12, 1}}), q);
            bool ok = evaluate(big, q) > pow(q.value, 14) &&
                      pow(q.value, 9) > small;
            return verdict_of(&q, ok, "gap chain fails");
          });
  r.arith(F, "three-divides", Category::divisibility_claim,
          "for p != 3, 3 divides both Phi3 Phi6 Phi12 = (q^8-1)+(q^4-1)+3 and "
          "1/3 q^4 Phi1^4 Phi2^4 Phi4^2 Phi8",
          [](const PrimePower &q) {
            BigInt a = evaluate(deg(1, 0, {{3, 1}, {6, 1}, {12, 1}}), q);
            BigInt b = evaluate(deg(3, 4, {{1, 4}, {2, 4}, {4, 2}, {8, 1}}), q);
            BigInt q2 = q.value * q.value;
            bool ok = divides(BigInt(3), a) && divides(BigInt(3), b) &&
                      divides(BigInt(81), pow(q2 - 1, 4)) &&
                      a == (q2 * q2 * q2 * q2 - 1) + (q2 * q2 - 1) + 3;
            return verdict_of(&q, ok, "3 does not divide both degrees");
          },
          [](const PrimePower &q) { return q.p != 3; });
  r.arith(F, "41-divisibility", Category::divisibility_claim,
          "for q = 3^f, 1/3 q^4 Phi1^4 Phi2^4 Phi4^2 Phi8 is divisible by "
          "q^8-1, hence by 3^8-1 = 2^5*5*41, hence by 2^5*3*5*41",
          [](const PrimePower &q) {
            BigInt v = evaluate(deg(3, 4, {{1, 4}, {2, 4}, {4, 2}, {8, 1}}), q);
            BigInt q8 = pow(q.value, 8) - 1;
            bool ok = pow(3ul, 8) - 1 == 32 * 5 * 41 && divides(q8, v) &&
                      divides(BigInt(6560), q8) &&
                      divides(BigInt(32 * 3 * 5 * 41), v);
            return verdict_of(&q, ok, "2^5*3*5*41 does not divide the degree",
                              "value is divisible by 19680");
          },
          [](const PrimePower &q) { return q.p == 3; });
}

inline void register_2e6(RegistryBuilder &r) {
  const Family F = Family::TwoE6;
  const auto L = VersionFilter::sc, H = VersionFilter::simple;
  const std::string theta = "²E6[θ^i]";
  const std::string small = "Phi3 Phi6^2 Phi12 Phi18";

  r.conditional(F, "i", "2E6(q), l1..l4 ppds of Phi18, Phi12, Phi8, Phi10, x in "
                        "cd(L) - {1, q^36}: if (l1 l2, x) = 1 then x is the "
                        "degree 1/3 q^7 Phi1^4 Phi2^6 Phi4^2 Phi8 Phi10 of 2E6[theta^i]",
                L, {{{}, {1, 2}, {theta}, {}}});
  r.conditional(F, "ii", "if (l2 l3, x) = 1 then x is 1/2 q^3 Phi2^4 Phi6^2 Phi10 "
                         "Phi18 or 1/2 q^15 Phi2^4 Phi6^2 Phi10 Phi18 "
                         "(phi_{8,3}', phi_{8,9}'')",
                L, {{{}, {2, 3}, {"φ_{8,3}'", "φ_{8,9}''"}, {}}});
  r.conditional(F, "iii", "(l1 l3, x) > 1 and (p l1 l4, x) > 1", L,
                {{{}, {1, 3}, {}, {}}, {{}, {0, 1, 4}, {}, {}}});
  r.conditional(F, "iv", "if q = 2 then (p l3 l4, x) > 1; if q > 2 and "
                         "(p l3 l4, x) = 1 then x = Phi3 Phi6^2 Phi12 Phi18",
                L,
                {{[](const PrimePower &q) { return is_q(q, 2); }, {0, 3, 4}, {}, {}},
                 {[](const PrimePower &q) { return !is_q(q, 2); }, {0, 3, 4},
                  {small}, {}}});
  r.isolation(F, "semisimple characters for tori Phi18 and Phi12 Phi6 have "
                 "degrees with no proper multiple in cd(H)",
              H, {"semisimple:Φ_18-torus", "semisimple:Φ_6Φ_12-torus"});
  r.ppart(F, "the p-part of x is at most q^25", L);
  r.minimum(F, "phi_{2,4}' of degree q Phi8 Phi18 is the smallest nontrivial "
               "degree of H",
            "φ_{2,4}'", "φ_{2,4}'");
  r.classification(F, "x, y in cd(L) - {1, q^36}: if p != 3 then (x, y) > 1; if "
                      "p = 3 and (x, y) = 1 then {x, y} = {1/3 q^7 Phi1^4 "
                      "Phi2^6 Phi4^2 Phi8 Phi10, Phi3 Phi6^2 Phi12 Phi18}",
                   L, std::pair{theta, small});
  r.no_consecutive(F, "L has no consecutive degrees", L);
  r.extra(F, "if 3 | q+1: the sc degree 1/3 q^9 Phi1^3 Phi2^4 Phi3 Phi4^2 Phi6 "
             "Phi8 Phi10 Phi12 divides no degree of H; the ad degree q^9 Phi1 "
             "Phi3^2 Phi4^2 Phi8 Phi10 Phi12 Phi18 is not a degree of H",
          [](const PrimePower &q) { return q.value % 3 == 2; },
          "the sc character has multiplicity 6 and the ad character "
          "multiplicity 1");

  r.arith(F, "phi-bound", Category::inequality_claim,
          "Phi8 Phi18 = q^10-q^7+q^6+q^4-q^3+1 < q^15, and its square is below "
          "q^30 < q^36",
          [](const PrimePower &q) {
            auto d = deg(1, 0, {{8, 1}, {18, 1}});
            BigInt v = evaluate(d, q);
            bool ok = expands_to(d, {{10, 1}, {7, -1}, {6, 1}, {4, 1}, {3, -1}, {0, 1}}) &&
                      v < pow(q.value, 15) && v * v < pow(q.value, 36);
            return verdict_of(&q, ok, "Phi8 Phi18 bound or expansion fails");
          });
  r.arith(F, "three-divides", Category::divisibility_claim,
          "for p != 3, 3 divides 1/3 q^7 Phi1^4 Phi2^6 Phi4^2 Phi8 Phi10 and "
          "Phi3 Phi6 = (q^2-1)(q^2+2)+3",
          [](const PrimePower &q) {
            BigInt a = evaluate(deg(3, 7, {{1, 4}, {2, 6}, {4, 2}, {8, 1}, {10, 1}}), q);
            BigInt b = evaluate(deg(1, 0, {{3, 1}, {6, 1}}), q);
            BigInt q2 = q.value * q.value;
            bool ok = divides(BigInt(3), a) && divides(BigInt(3), b) &&
                      b == (q2 - 1) * (q2 + 2) + 3;
            return verdict_of(&q, ok, "3 does not divide both values");
          },
          [](const PrimePower &q) { return q.p != 3; });
  r.arith(F, "pair-gap", Category::inequality_claim,
          "1/3 q^7 Phi1^4 Phi2^6 Phi4^2 Phi8 Phi10 > q^25 > q^17 > Phi3 Phi6^2 "
          "Phi12 Phi18 for q >= 3",
          [](const PrimePower &q) {
            BigInt a = evaluate(deg(3, 7, {{1, 4}, {2, 6}, {4, 2}, {8, 1}, {10, 1}}), q);
            BigInt b = evaluate(deg(1, 0, {{3, 1}, {6, 2}, {12, 1}, {18, 1}}), q);
            bool ok = a > pow(q.value, 25) && pow(q.value, 17) > b;
            return verdict_of(&q, ok, "gap chain fails");
          },
          [](const PrimePower &q) { return q.value >= 3; });
}

inline void register_e6(RegistryBuilder &r) {
  const Family F = Family::E6;
  const auto L = VersionFilter::sc, H = VersionFilter::simple;
  const std::string theta = "E6[θ^i]";
  const std::string small = "Phi3^2 Phi6 Phi9 Phi12";

  r.conditional(F, "i", "E6(q), l1..l4 ppds of Phi12, Phi9, Phi8, Phi5, x in "
                        "cd(L) - {1, q^36}: if (l1 l2, x) = 1 then x is the "
                        "degree 1/3 q^7 Phi1^6 Phi2^4 Phi4^2 Phi5 Phi8 of E6[theta^i]",
                L, {{{}, {1, 2}, {theta}, {}}});
  r.conditional(F, "ii", "(x, l2 l3) > 1", L, {{{}, {2, 3}, {}, {}}});
  r.conditional(F, "iii", "if (x, l1 l3) = 1 then x is 1/2 q^3 Phi1^4 Phi3^2 "
                          "Phi5 Phi9 or 1/2 q^15 Phi1^4 Phi3^2 Phi5 Phi9 "
                          "((D4,1), (D4,eps))",
                L, {{{}, {1, 3}, {"(D4,1)", "(D4,ε)"}, {}}});
  r.conditional(F, "iv", "(x, p l2 l4) > 1, and if (x, p l3 l4) = 1 then "
                         "x = Phi3^2 Phi6 Phi9 Phi12",
                L, {{{}, {0, 2, 4}, {}, {}}, {{}, {0, 3, 4}, {small}, {}}});
  r.isolation(F, "degrees Phi1^6 Phi2^4 Phi3^2 Phi4^2 Phi6^2 Phi5 Phi8 Phi9 and "
                 "Phi1^6 Phi2^4 Phi3^3 Phi4^2 Phi6^2 Phi5 Phi8 Phi12 have no "
                 "proper multiple in cd(H)",
              H, {"semisimple:Φ_3Φ_12-torus", "semisimple:Φ_9-torus"});
  r.ppart(F, "the p-part of x is at most q^25", L);
  r.minimum(F, "phi_{6,1} of degree q Phi8 Phi9 is the smallest nontrivial "
               "degree of H",
            "φ_{6,1}", "φ_{6,1}");
  r.classification(F, "x, y in cd(L) - {1, q^36}: if p != 3 then (x, y) > 1; if "
                      "p = 3 and (x, y) = 1 then {x, y} = {1/3 q^7 Phi1^6 "
                      "Phi2^4 Phi4^2 Phi5 Phi8, Phi3^2 Phi6 Phi9 Phi12}",
                   L, std::pair{theta, small});
  r.no_consecutive(F, "L has no consecutive degrees", L);
  r.extra(F, "if 3 | q-1: the sc degree 1/3 q^9 Phi1^4 Phi2^3 Phi3 Phi4^2 Phi5 "
             "Phi6 Phi8 Phi12 divides no degree of H; the ad degree q^9 Phi2 "
             "Phi4^2 Phi5 Phi6^2 Phi8 Phi9 Phi12 is not a degree of H",
          [](const PrimePower &q) { return q.value % 3 == 1; },
          "the sc character has multiplicity 6 and the ad character "
          "multiplicity 1");

  r.arith(F, "phi-bound", Category::inequality_claim,
          "Phi8 Phi9 = q^10+q^7+q^6+q^4+q^3+1 < q^15, and its square is below "
          "q^30 < q^36",
          [](const PrimePower &q) {
            auto d = deg(1, 0, {{8, 1}, {9, 1}});
            BigInt v = evaluate(d, q);
            bool ok = expands_to(d, {{10, 1}, {7, 1}, {6, 1}, {4, 1}, {3, 1}, {0, 1}}) &&
                      v < pow(q.value, 15) && v * v < pow(q.value, 36);
            return verdict_of(&q, ok, "Phi8 Phi9 bound or expansion fails");
          });
  r.arith(F, "three-divides", Category::divisibility_claim,
          "for p != 3, 3 divides 1/3 q^7 Phi1^6 Phi2^4 Phi4^2 Phi5 Phi8 and "
          "Phi3 Phi6 = (q^2-1)(q^2+2)+3",
          [](const PrimePower &q) {
            BigInt a = evaluate(deg(3, 7, {{1, 6}, {2, 4}, {4, 2}, {5, 1}, {8, 1}}), q);
            BigInt b = evaluate(deg(1, 0, {{3, 1}, {6, 1}}), q);
            bool ok = divides(BigInt(3), a) && divides(BigInt(3), b);
            return verdict_of(&q, ok, "3 does not divide both values");
          },
          [](const PrimePower &q) { return q.p != 3; });
  r.arith(F, "pair-gap", Category::inequality_claim,
          "1/3 q^7 Phi1^6 Phi2^4 Phi4^2 Phi5 Phi8 > q^25 > q^18 > Phi3^2 Phi6 "
          "Phi9 Phi12 for q >= 3",
          [](const PrimePower &q) {
            BigInt a = evaluate(deg(3, 7, {{1, 6}, {2, 4}, {4, 2}, {5, 1}, {8, 1}}), q);
            BigInt b = evaluate(deg(1, 0, {{3, 2}, {6, 1}, {9, 1}, {12, 1}}), q);
            bool ok = a > pow(q.value, 25) && pow(q.value, 18) > b;
            return verdict_of(&q, ok, "gap chain fails");
          },
          [](const PrimePower &q) { return q.value >= 3; });
}

inline void register_e7(RegistryBuilder &r) {
  const Family F = Family::E7;
  const auto L = VersionFilter::sc;

  r.conditional(F, "i", "E7(q), l1..l5 ppds of Phi18, Phi14, Phi12, Phi9, Phi7, "
                        "x in cd(L) - {1, q^63}: if (l1 l2, x) = 1 then x = 1/2 "
                        "q^11 Phi1^7 Phi3^3 Phi4^2 Phi5 Phi7 Phi8 Phi9 Phi12 (E7[+-xi])",
                L, {{{}, {1, 2}, {"E7[±ξ]"}, {}}});
  r.conditional(F, "ii", "if (l2 l3, x) = 1 then x is 1/2 q^4 or 1/2 q^25 times "
                         "Phi1^4 Phi3^2 Phi5 Phi7 Phi9 Phi10 Phi18 ((D4,eps1), (D4,eps2))",
                L, {{{}, {2, 3}, {"(D4,ε1)", "(D4,ε2)"}, {}}});
  r.conditional(F, "iii", "if (l1 l3, x) = 1 then l4 l5 | x or x is 1/3 q^7 or "
                          "1/3 q^16 times Phi1^6 Phi2^6 Phi4^2 Phi5 Phi7 Phi8 "
                          "Phi10 Phi14 ((E6[theta^i],1), (E6[theta^i],eps))",
                L, {{{}, {1, 3}, {"(E6[θ^i],1)", "(E6[θ^i],ε)"}, {4, 5}}});
  r.conditional(F, "iv", "(p l2 l5, x) > 1, and if (l4 l5, x) = 1 then x = 1/2 "
                         "q^11 Phi2^7 Phi4^2 Phi6^3 Phi8 Phi10 Phi12 Phi14 Phi18 "
                         "(phi_{512,11}, phi_{512,12})",
                L, {{{}, {0, 2, 5}, {}, {}}, {{}, {4, 5}, {"φ_{512,11}"}, {}}});
  r.isolation(F, "semisimple characters for tori Phi18 Phi2 and Phi14 Phi2 have "
                 "degrees with no proper multiple in cd(L)",
              L, {"semisimple:Φ_2Φ_18-torus", "semisimple:Φ_2Φ_14-torus"});
  r.ppart(F, "the p-part of x is at most q^46", L);
  r.minimum(F, "phi_{7,1} of degree q Phi7 Phi12 Phi14 is the smallest "
               "nontrivial degree of H",
            "φ_{7,1}", "φ_{7,1}");
  r.classification(F, "x, y in cd(L) - {1, q^63}: (x, y) > 1", L, std::nullopt);
  r.no_consecutive(F, "L has no consecutive degrees", L);
  r.extra(F, "q odd, q = eps mod 4 with eps in {1, -1}: the sc degree q^14 "
             "Phi1^3 Phi2^2 Phi3^2 Phi5 Phi6^2 Phi7 Phi9 Phi10 Phi12 Phi14 Phi18 "
             "divides no degree of H; the ad degree q^28 (...) for the matching "
             "eps is not a degree of H",
          [](const PrimePower &q) { return q.odd(); },
          "the sc character has multiplicity (q - eps)/4");

  r.arith(F, "phi-bound", Category::inequality_claim,
          "Phi7 Phi12 Phi14 = q^16+q^12+q^10+q^8+q^6+q^4+1 < q^30, and its "
          "square is below q^60 < q^63",
          [](const PrimePower &q) {
            auto d = deg(1, 0, {{7, 1}, {12, 1}, {14, 1}});
            BigInt v = evaluate(d, q);
            bool ok = expands_to(d, {{16, 1}, {12, 1}, {10, 1}, {8, 1}, {6, 1}, {4, 1}, {0, 1}}) &&
                      v < pow(q.value, 30) && v * v < pow(q.value, 63);
            return verdict_of(&q, ok, "Phi7 Phi12 Phi14 bound or expansion fails");
          });
}

inline void register_e8(RegistryBuilder &r) {
  const Family F = Family::E8;
  const auto H = VersionFilter::simple;

  r.conditional(F, "i", "E8(q), l1..l5 ppds of Phi30, Phi24, Phi20, Phi15, "
                        "Phi14: if (l1 l2, x) = 1 then x = 1/6 q^16 Phi1^8 "
                        "Phi2^6 Phi3^2 Phi4^4 Phi5^2 Phi7 Phi8^2 Phi9 Phi10^2 "
                        "Phi12 Phi14 Phi15 Phi20 (E8[-theta], E8[-theta^2])",
                H, {{{}, {1, 2}, {"E8[-θ]"}, {}}});
  r.conditional(F, "ii", "if (l2 l3, x) = 1 then x = 1/4 q^16 Phi1^8 Phi2^8 "
                         "Phi3^4 Phi5^2 Phi6^4 Phi7 Phi9 Phi10^2 Phi14 Phi15 "
                         "Phi18 Phi30 (E8[i], E8[-i])",
                H, {{{}, {2, 3}, {"E8[±i]"}, {}}});
  r.conditional(F, "iii", "if (l1 l3, x) = 1 then x is the E8[zeta^k] degree "
                          "1/5 q^16 (...) or 1/2 q^3, 1/2 q^63 times Phi1^4 "
                          "Phi3^2 Phi5^2 Phi7 Phi8 Phi9 Phi14 Phi15 Phi24",
                H, {{{}, {1, 3}, {"E8[ζ^k]", "(D4,φ_{1,0})", "(D4,φ_{1,24})"}, {}}});
  r.conditional(F, "iv", "(p l4 l5, x) > 1 and (p l2 l5, x) > 1", H,
                {{{}, {0, 4, 5}, {}, {}}, {{}, {0, 2, 5}, {}, {}}});
  r.isolation(F, "degrees |H|/Phi_m for m = 30, 24, 20 have no proper multiple "
                 "in cd(H)",
              H, {"semisimple:Φ_30-torus", "semisimple:Φ_24-torus",
                  "semisimple:Φ_20-torus"});
  r.ppart(F, "the p-part of x is at most q^91", H);
  r.minimum(F, "phi_{8,1} of degree q Phi4^2 Phi8 Phi12 Phi20 Phi24 is the "
               "smallest nontrivial degree of H",
            "φ_{8,1}", "φ_{8,1}");
  r.classification(F, "x, y in cd(H) - {1, q^120}: (x, y) > 1", H, std::nullopt);
  r.no_consecutive(F, "H has no consecutive degrees", H);

  r.arith(F, "phi-bound", Category::inequality_claim,
          "Phi4^2 Phi8 Phi12 Phi20 Phi24 = (q^2+1)^2 (q^4+1)(q^4-q^2+1)"
          "(q^8-q^6+q^4-q^2+1)(q^8-q^4+1) < q^30, and its square is below "
          "q^60 < q^120",
          [](const PrimePower &q) {
            auto d = deg(1, 0, {{4, 2}, {8, 1}, {12, 1}, {20, 1}, {24, 1}});
            auto x = [](std::vector<std::pair<unsigned, long>> ts) {
              IntPoly p;
              for (auto [k, c] : ts)
                p = p + IntPoly::monomial(k, c);
              return p;
            };
            IntPoly alt = x({{2, 1}, {0, 1}}) * x({{2, 1}, {0, 1}}) *
                          x({{4, 1}, {0, 1}}) * x({{4, 1}, {2, -1}, {0, 1}}) *
                          x({{8, 1}, {6, -1}, {4, 1}, {2, -1}, {0, 1}}) *
                          x({{8, 1}, {4, -1}, {0, 1}});
            BigInt v = evaluate(d, q);
            bool ok = expand(d) == alt && v < pow(q.value, 30) &&
                      v * v < pow(q.value, 120);
            return verdict_of(&q, ok, "bound or expansion fails");
          });
}

inline Sample check_sporadic(const std::vector<SporadicPair> &pairs) {
  Sample s;
  if (pairs.size() != 27)
    s.witnesses.push_back("expected 27 groups, found " +
                          std::to_string(pairs.size()));
  for (const auto &sp : pairs) {
    BigInt a = sp.chars[0].value(), b = sp.chars[1].value();
    if (gcd(a, b) != 1)
      s.witnesses.push_back(sp.group + ": gcd(" + a.get_str() + ", " +
                            b.get_str() + ") != 1");
  }
  if (!s.witnesses.empty())
    s.verdict = Verdict::fail;
  return s;
}

inline void register_global(RegistryBuilder &r) {
  Clause n;
  n.id = "dioph.nagell";
  n.category = Category::diophantine;
  n.source = "x^2 + x + 1 = y^m has no solution with x a prime power and "
             "m >= 2; without that restriction the only solution is (18, 7, 3)";
  n.scope_note = "exhaustive over the configured x and m range";
  n.q_dependent = false;
  n.check = [](const FamilyCatalog *, const PrimePower *,
               const SearchLimits &lim) {
    Sample s;
    for (const auto &sol :
         nagell_search(lim.nagell_x_max, lim.nagell_m_max, true))
      s.witnesses.push_back("prime-power solution x=" + std::to_string(sol.x) +
                            ", y=" + sol.y.get_str() + ", m=" +
                            std::to_string(sol.m));
    for (const auto &sol :
         nagell_search(lim.nagell_x_max, lim.nagell_m_max, false)) {
      std::string t = "(" + std::to_string(sol.x) + ", " + sol.y.get_str() +
                      ", " + std::to_string(sol.m) + ")";
      if (sol == NagellSolution{18, 7, 3})
        s.notes.push_back("unrestricted solution " + t);
      else
        s.witnesses.push_back("unexpected unrestricted solution " + t);
    }
    if (!s.witnesses.empty())
      s.verdict = Verdict::fail;
    return s;
  };
  r.add(std::move(n));

  Clause a;
  a.id = "arith.alternating";
  a.category = Category::alternating_prime_power;
  a.source = "for n >= 7, n(n-3)/2 is a prime power if and only if n = 9";
  a.scope_note = "exhaustive over 7 <= n <= n_max";
  a.q_dependent = false;
  a.check = [](const FamilyCatalog *, const PrimePower *,
               const SearchLimits &lim) {
    auto hits = alternating_prime_power_n(lim.alternating_n_max);
    std::string list;
    for (unsigned n : hits)
      list += (list.empty() ? "" : ", ") + std::to_string(n);
    return verdict_of(nullptr, hits == std::vector<unsigned>{9},
                      "prime-power n: {" + list + "}",
                      "n_max = " + std::to_string(lim.alternating_n_max));
  };
  r.add(std::move(a));

  Clause t;
  t.id = "table2.coprime";
  t.category = Category::sporadic_coprime;
  t.source = "each sporadic group and the Tits group has two nontrivial "
             "irreducible characters of coprime degree (27 groups)";
  t.scope_note = exact_scope;
  t.q_dependent = false;
  t.check = [](const FamilyCatalog *, const PrimePower *,
               const SearchLimits &) {
    return check_sporadic(sporadic_pairs());
  };
  r.add(std::move(t));
}

} // namespace detail

struct Registry {
  std::vector<Clause> clauses;
  std::vector<OutOfScope> out_of_scope;
};

/// Every registered clause, family by family, then the global claims.
inline const Registry &clause_registry() {
  static const Registry reg = [] {
    detail::RegistryBuilder b;
    detail::register_f4(b);
    detail::register_2e6(b);
    detail::register_e6(b);
    detail::register_e7(b);
    detail::register_e8(b);
    for (Family f : all_families) {
      b.torus(f);
      b.structural(f);
      b.exponent_claims(f);
    }
    detail::register_global(b);
    // keep each family's clauses together
    std::stable_sort(b.clauses.begin(), b.clauses.end(),
                     [](const Clause &x, const Clause &y) {
                       auto rank = [](const Clause &c) {
                         if (!c.family)
                           return 99;
                         for (std::size_t i = 0; i < all_families.size(); ++i)
                           if (all_families[i] == *c.family)
                             return static_cast<int>(i);
                         return 98;
                       };
                       return rank(x) < rank(y);
                     });
    return Registry{std::move(b.clauses), std::move(b.out_of_scope)};
  }();
  return reg;
}

inline const Clause &find_clause(std::string_view id) {
  for (const auto &c : clause_registry().clauses)
    if (c.id == id)
      return c;
  throw InvalidArgument("no registered clause " + std::string(id));
}

// Running --------------------------------------------------------------------

struct RunConfig {
  std::optional<std::uint64_t> q_max_override; ///< applies to every family
  std::uint64_t q_max_default = 64;
  std::map<Family, std::uint64_t> q_max; ///< per-family values win
  std::set<Family> families;             ///< empty means all
  std::vector<std::string> clause_filter; ///< ids, or prefixes ending in '*'
  unsigned jobs = 1;
  std::map<Family, FamilyCatalog> catalogs; ///< overrides of embedded data
  SearchLimits limits;

  std::uint64_t q_max_for(Family f) const {
    if (auto it = q_max.find(f); it != q_max.end())
      return it->second;
    return q_max_override.value_or(q_max_default);
  }

  const FamilyCatalog &catalog(Family f) const {
    if (auto it = catalogs.find(f); it != catalogs.end())
      return it->second;
    return load_catalog(f);
  }

  bool clause_selected(const Clause &c) const {
    if (!families.empty() && c.family && !families.count(*c.family))
      return false;
    if (clause_filter.empty())
      return families.empty() || c.family.has_value();
    for (const auto &pat : clause_filter) {
      if (!pat.empty() && pat.back() == '*') {
        if (c.id.compare(0, pat.size() - 1, pat, 0, pat.size() - 1) == 0)
          return true;
      } else if (c.id == pat) {
        return true;
      }
    }
    return false;
  }
};

struct VerificationRun {
  std::vector<VerificationReport> reports;
  std::vector<OutOfScope> out_of_scope;

  std::size_t count(Verdict v) const {
    std::size_t n = 0;
    for (const auto &r : reports)
      n += r.verdict() == v;
    return n;
  }
};

/// Runs every selected clause at every admissible q <= q_max. Work items run
/// on `jobs` threads; the output order is fixed by the registry and by q.
/// Throws ConstraintError when a selected family's q_max is below its floor.
inline VerificationRun run_verification(const RunConfig &cfg) {
  const auto &reg = clause_registry();
  struct Item {
    std::size_t report;
    const Clause *clause;
    std::optional<PrimePower> q;
  };
  VerificationRun run;
  std::vector<Item> items;

  for (const auto &c : reg.clauses) {
    if (!cfg.clause_selected(c) || !c.q_dependent)
      continue;
    const auto &cat = cfg.catalog(*c.family);
    if (cfg.q_max_for(*c.family) < cat.q_floor)
      throw ConstraintError(family_name(*c.family) + ": q_max " +
                            std::to_string(cfg.q_max_for(*c.family)) +
                            " is below the admissible floor " +
                            std::to_string(cat.q_floor));
  }

  for (const auto &c : reg.clauses) {
    if (!cfg.clause_selected(c))
      continue;
    std::size_t idx = run.reports.size();
    run.reports.push_back(
        {c.id, c.source, c.family, c.category, {}, c.scope_note});
    if (!c.q_dependent) {
      items.push_back({idx, &c, std::nullopt});
      continue;
    }
    const auto &cat = cfg.catalog(*c.family);
    for (const auto &q : cat.sample_range(cfg.q_max_for(*c.family)))
      if (!c.applies || c.applies(q))
        items.push_back({idx, &c, q});
  }
  for (const auto &o : reg.out_of_scope)
    for (const auto &r : run.reports)
      if (o.id.rfind(r.clause + ".", 0) == 0) {
        run.out_of_scope.push_back(o);
        break;
      }

  std::vector<Sample> results(items.size());
  auto work = [&](std::size_t i) {
    const Item &it = items[i];
    const FamilyCatalog *cat =
        it.clause->family ? &cfg.catalog(*it.clause->family) : nullptr;
    try {
      results[i] = it.clause->check(cat, it.q ? &*it.q : nullptr, cfg.limits);
    } catch (const std::exception &e) {
      results[i].verdict = Verdict::fail;
      results[i].witnesses.push_back(std::string("error: ") + e.what());
    }
    results[i].q = it.q;
  };
  unsigned jobs = std::max(1u, cfg.jobs);
  if (jobs == 1 || items.size() < 2) {
    for (std::size_t i = 0; i < items.size(); ++i)
      work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, items.size()); ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();)
          work(i);
      });
    for (auto &th : pool)
      th.join();
  }
  for (std::size_t i = 0; i < items.size(); ++i)
    run.reports[items[i].report].samples.push_back(std::move(results[i]));
  return run;
}

/// Reports for one family, all registered clauses, q up to q_max.
inline std::vector<VerificationReport>
verify_family(Family f, std::uint64_t q_max,
              std::vector<std::string> clause_filter = {}, unsigned jobs = 1) {
  RunConfig cfg;
  cfg.families = {f};
  cfg.q_max[f] = q_max;
  cfg.clause_filter = std::move(clause_filter);
  cfg.jobs = jobs;
  return run_verification(cfg).reports;
}

/// One clause at one q.
inline VerificationReport verify_clause(const Clause &c, const PrimePower &q,
                                        const FamilyCatalog *cat = nullptr) {
  VerificationReport r{c.id, c.source, c.family, c.category, {}, c.scope_note};
  if (!c.family || !c.q_dependent)
    throw InvalidArgument(c.id + " does not depend on q");
  const FamilyCatalog &fc = cat ? *cat : load_catalog(*c.family);
  fc.require(q);
  if (c.applies && !c.applies(q)) {
    r.samples.push_back({q, Verdict::vacuous, {}, {"clause hypothesis excludes this q"}});
    return r;
  }
  Sample s = c.check(&fc, &q, SearchLimits{});
  s.q = q;
  r.samples.push_back(std::move(s));
  return r;
}

/// The arithmetic claims registered for a family, at one q.
inline std::vector<VerificationReport> verify_arith_claims(Family f,
                                                           const PrimePower &q) {
  std::vector<VerificationReport> out;
  for (const auto &c : clause_registry().clauses) {
    if (c.family != f || c.id.rfind("arith.", 0) != 0)
      continue;
    if (!c.q_dependent) {
      VerificationReport r{c.id, c.source, c.family, c.category, {}, c.scope_note};
      r.samples.push_back(c.check(&load_catalog(f), nullptr, SearchLimits{}));
      out.push_back(std::move(r));
    } else if (!c.applies || c.applies(q)) {
      out.push_back(verify_clause(c, q));
    }
  }
  return out;
}

inline VerificationReport verify_torus_quotients(Family f, const PrimePower &q) {
  return verify_clause(find_clause("torus." + family_name(f)), q);
}

inline VerificationReport
verify_table2(const std::vector<SporadicPair> &pairs = sporadic_pairs()) {
  const Clause &c = find_clause("table2.coprime");
  VerificationReport r{c.id, c.source, c.family, c.category, {}, c.scope_note};
  r.samples.push_back(detail::check_sporadic(pairs));
  return r;
}

// Output ---------------------------------------------------------------------

inline json to_json(const Sample &s) {
  json q = nullptr;
  if (s.q)
    q = json{{"p", s.q->p}, {"f", s.q->f}};
  json j{{"q", q}, {"verdict", to_string(s.verdict)}, {"witnesses", s.witnesses}};
  if (!s.notes.empty())
    j["notes"] = s.notes;
  return j;
}

inline json to_json(const VerificationReport &r) {
  json samples = json::array();
  for (const auto &s : r.samples)
    samples.push_back(to_json(s));
  return json{{"clause", r.clause},
              {"source", r.source},
              {"family", r.family ? json(family_name(*r.family)) : json(nullptr)},
              {"category", to_string(r.category)},
              {"verdict", to_string(r.verdict())},
              {"samples", samples},
              {"scope_note", r.scope_note}};
}

inline json to_json(const VerificationRun &run) {
  json reports = json::array();
  for (const auto &r : run.reports)
    reports.push_back(to_json(r));
  json oos = json::array();
  for (const auto &o : run.out_of_scope)
    oos.push_back({{"clause", o.id},
                   {"family", family_name(o.family)},
                   {"source", o.source},
                   {"reason", o.reason}});
  return json{{"reports", reports},
              {"out_of_scope", oos},
              {"summary",
               {{"pass", run.count(Verdict::pass)},
                {"fail", run.count(Verdict::fail)},
                {"vacuous", run.count(Verdict::vacuous)}}}};
}

inline std::string q_span(const VerificationReport &r) {
  std::vector<std::string> qs;
  for (const auto &s : r.samples)
    if (s.q)
      qs.push_back(s.q->to_string());
  if (qs.empty())
    return "no q";
  if (qs.size() == 1)
    return "q=" + qs.front();
  return "q=" + qs.front() + ".." + qs.back() + ", " +
         std::to_string(qs.size()) + " samples";
}

inline void write_text(std::ostream &out, const VerificationRun &run) {
  for (const auto &r : run.reports) {
    std::string v = to_string(r.verdict());
    for (auto &ch : v)
      ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out << v << "  " << r.clause;
    if (r.samples.size() != 1 || r.samples.front().q)
      out << "  [" << q_span(r) << "]";
    out << "\n";
    for (const auto &s : r.samples)
      for (const auto &w : s.witnesses)
        out << "    " << (s.q ? "q=" + s.q->to_string() + ": " : "") << w
            << "\n";
  }
  for (const auto &o : run.out_of_scope)
    out << "SKIP  " << o.id << "  (" << o.reason << ")\n";
  out << run.count(Verdict::pass) << " pass, " << run.count(Verdict::fail)
      << " fail, " << run.count(Verdict::vacuous) << " vacuous\n";
}

} // namespace cdcheck
