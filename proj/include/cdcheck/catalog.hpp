#pragma once

// Degree catalogs for F4, 2E6, E6, E7, E8; the sporadic coprime pairs; and
// the p-part exponent table for unipotent characters of classical and
// exceptional groups.
//
// The embedded data is exactly the set of degrees the source text displays.
// It is a subset of the full character degree set, so every quantified check
// run over it is a check on this subset only. Richer tables in the same JSON
// schema can be loaded with load_catalog_file().

#include "cdcheck/catalog_data.hpp"
#include "cdcheck/degree.hpp"

#include "json.hpp"

#include <array>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdcheck {

using json = nlohmann::json;

/// Malformed or inconsistent catalog data. what() starts with the JSON path
/// or entry label at fault.
class LoadError : public std::runtime_error {
public:
  LoadError(std::string path, const std::string &message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string &path() const { return path_; }

private:
  std::string path_;
};

/// A prime power outside a family's or entry's admissible range.
class ConstraintError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

enum class Family { F4, TwoE6, E6, E7, E8 };

inline constexpr std::array<Family, 5> all_families = {
    Family::F4, Family::TwoE6, Family::E6, Family::E7, Family::E8};

inline std::string family_name(Family f) {
  switch (f) {
  case Family::F4:
    return "F4";
  case Family::TwoE6:
    return "2E6";
  case Family::E6:
    return "E6";
  case Family::E7:
    return "E7";
  case Family::E8:
    return "E8";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  for (Family f : all_families)
    if (s == family_name(f))
      return f;
  if (s == "²E6")
    return Family::TwoE6;
  return std::nullopt;
}

/// Lie rank dimension: total q-degree of the group order.
inline unsigned family_dimension(Family f) {
  switch (f) {
  case Family::F4:
    return 52;
  case Family::TwoE6:
  case Family::E6:
    return 78;
  case Family::E7:
    return 133;
  case Family::E8:
    return 248;
  }
  return 0;
}

/// {a(H), b(H), c(H)}: Steinberg exponent, p-part cap of the other degrees,
/// and the p-exponent of the degree coprime to l1 l2.
inline std::array<unsigned, 3> family_exponents(Family f) {
  switch (f) {
  case Family::F4:
    return {24, 16, 4};
  case Family::TwoE6:
  case Family::E6:
    return {36, 25, 7};
  case Family::E7:
    return {63, 46, 11};
  case Family::E8:
    return {120, 91, 16};
  }
  return {0, 0, 0};
}

enum class EntryKind { unipotent, semisimple, other };
enum class Version { simple, sc, ad };

inline std::string to_string(EntryKind k) {
  switch (k) {
  case EntryKind::unipotent:
    return "unipotent";
  case EntryKind::semisimple:
    return "semisimple";
  case EntryKind::other:
    return "other";
  }
  return "?";
}

inline std::string to_string(Version v) {
  switch (v) {
  case Version::simple:
    return "simple";
  case Version::sc:
    return "sc";
  case Version::ad:
    return "ad";
  }
  return "?";
}

/// Which versions a degree query sees. `sc` means cd(H_sc), which contains
/// cd(H); likewise `ad`.
enum class VersionFilter { simple, sc, ad, any };

inline bool version_visible(Version v, VersionFilter f) {
  switch (f) {
  case VersionFilter::simple:
    return v == Version::simple;
  case VersionFilter::sc:
    return v != Version::ad;
  case VersionFilter::ad:
    return v != Version::sc;
  case VersionFilter::any:
    return true;
  }
  return false;
}

inline std::optional<VersionFilter> parse_version_filter(std::string_view s) {
  if (s == "simple")
    return VersionFilter::simple;
  if (s == "sc")
    return VersionFilter::sc;
  if (s == "ad")
    return VersionFilter::ad;
  if (s == "any")
    return VersionFilter::any;
  return std::nullopt;
}

/// A condition on q = p^f.
struct Constraint {
  enum class Type { q_odd, q_even, q_ge, q_gt, p_eq, p_ne, cong };
  Type type = Type::q_odd;
  std::uint64_t k = 0; ///< bound for q_ge/q_gt, prime for p_eq/p_ne
  std::uint64_t c = 0; ///< residue for cong
  std::uint64_t m = 0; ///< modulus for cong

  bool admits(const PrimePower &q) const {
    switch (type) {
    case Type::q_odd:
      return q.odd();
    case Type::q_even:
      return !q.odd();
    case Type::q_ge:
      return q.value >= from_u64(k);
    case Type::q_gt:
      return q.value > from_u64(k);
    case Type::p_eq:
      return q.p == k;
    case Type::p_ne:
      return q.p != k;
    case Type::cong: {
      BigInt r = q.value % from_u64(m);
      return r == from_u64(c);
    }
    }
    return false;
  }

  std::string to_string() const {
    switch (type) {
    case Type::q_odd:
      return "q odd";
    case Type::q_even:
      return "q even";
    case Type::q_ge:
      return "q >= " + std::to_string(k);
    case Type::q_gt:
      return "q > " + std::to_string(k);
    case Type::p_eq:
      return "p = " + std::to_string(k);
    case Type::p_ne:
      return "p != " + std::to_string(k);
    case Type::cong:
      return "q = " + std::to_string(c) + " mod " + std::to_string(m);
    }
    return "?";
  }

  friend bool operator==(const Constraint &, const Constraint &) = default;
};

inline bool admits_all(const std::vector<Constraint> &cs, const PrimePower &q) {
  for (const auto &c : cs)
    if (!c.admits(q))
      return false;
  return true;
}

struct DegreeEntry {
  std::string label;
  EntryKind kind = EntryKind::other;
  Version version = Version::simple;
  std::vector<Constraint> constraints;
  FactoredDegree degree;
  std::optional<unsigned> multiplicity;
  std::string source;

  bool admits(const PrimePower &q) const { return admits_all(constraints, q); }
};

/// A maximal torus order and the semisimple entry whose degree is
/// |H|_{p'} divided by it.
struct TorusOrder {
  std::vector<unsigned> m;
  FactoredDegree order;
  std::string entry;
};

/// Cap on the p-part of non-Steinberg degrees, by parity of q.
struct PpartCap {
  FactoredDegree odd;
  FactoredDegree even;

  const FactoredDegree &at(const PrimePower &q) const {
    return q.odd() ? odd : even;
  }
};

struct FamilyCatalog {
  Family family = Family::F4;
  unsigned q_floor = 2;
  FactoredDegree order;
  std::string order_source;
  unsigned a_H = 0;
  unsigned b_H = 0;
  unsigned c_H = 0;
  PpartCap ppart_cap;
  std::vector<unsigned> top_phi;
  std::vector<DegreeEntry> entries;
  std::vector<TorusOrder> torus_orders;

  std::string name() const { return family_name(family); }

  bool admits(const PrimePower &q) const { return q.value >= q_floor; }

  void require(const PrimePower &q) const {
    if (!admits(q))
      throw ConstraintError(name() + ": q=" + q.to_string() +
                            " is below the admissible floor " +
                            std::to_string(q_floor));
  }

  const DegreeEntry *find(std::string_view label) const {
    for (const auto &e : entries)
      if (e.label == label)
        return &e;
    return nullptr;
  }

  const DegreeEntry &entry(std::string_view label) const {
    if (auto *e = find(label))
      return *e;
    throw InvalidArgument(name() + ": no catalog entry labeled " +
                          std::string(label));
  }

  /// Entries whose constraints admit q, in catalog order.
  std::vector<const DegreeEntry *>
  entries_at(const PrimePower &q, VersionFilter filter) const {
    require(q);
    std::vector<const DegreeEntry *> out;
    for (const auto &e : entries)
      if (version_visible(e.version, filter) && e.admits(q))
        out.push_back(&e);
    return out;
  }

  std::vector<std::pair<std::string, BigInt>>
  degrees_at(const PrimePower &q,
             VersionFilter filter = VersionFilter::simple) const {
    std::vector<std::pair<std::string, BigInt>> out;
    for (const auto *e : entries_at(q, filter))
      out.emplace_back(e->label, evaluate(e->degree, q));
    return out;
  }

  BigInt order_at(const PrimePower &q) const {
    require(q);
    return evaluate(order, q);
  }

  BigInt steinberg_degree(const PrimePower &q) const {
    require(q);
    return pow(q.value, a_H);
  }

  /// Admissible prime powers in [q_floor, q_max].
  std::vector<PrimePower> sample_range(std::uint64_t q_max) const {
    return prime_powers_between(q_floor, q_max);
  }
};

namespace detail {

inline std::string key_path(const std::string &path, std::string_view key) {
  return path + "." + std::string(key);
}

inline std::string index_path(const std::string &path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

inline const json &require_field(const json &obj, std::string_view key,
                                 const std::string &path) {
  if (!obj.is_object())
    throw LoadError(path, "expected an object");
  auto it = obj.find(std::string(key));
  if (it == obj.end())
    throw LoadError(key_path(path, key), "missing required field");
  return *it;
}

inline std::uint64_t read_uint(const json &v, const std::string &path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw LoadError(path, "expected a nonnegative integer");
  return v.get<std::uint64_t>();
}

inline std::string read_string(const json &v, const std::string &path) {
  if (!v.is_string())
    throw LoadError(path, "expected a string");
  return v.get<std::string>();
}

inline const json &read_array(const json &v, const std::string &path) {
  if (!v.is_array())
    throw LoadError(path, "expected an array");
  return v;
}

inline void reject_unknown(const json &obj, const std::string &path,
                           std::initializer_list<std::string_view> known) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (auto k : known)
      ok = ok || it.key() == k;
    if (!ok)
      throw LoadError(key_path(path, it.key()), "unknown field");
  }
}

inline FactoredDegree read_degree(const json &v, const std::string &path) {
  if (!v.is_object())
    throw LoadError(path, "expected a degree object {t, a, exps}");
  reject_unknown(v, path, {"t", "a", "exps"});
  FactoredDegree d;
  auto t = read_uint(require_field(v, "t", path), key_path(path, "t"));
  if (t < 1 || t > FactoredDegree::max_denom)
    throw LoadError(key_path(path, "t"), "denominator must lie in 1..6");
  d.denom = static_cast<unsigned>(t);
  d.q_exp = static_cast<unsigned>(
      read_uint(require_field(v, "a", path), key_path(path, "a")));
  if (auto it = v.find("exps"); it != v.end()) {
    std::string ep = key_path(path, "exps");
    if (!it->is_object())
      throw LoadError(ep, "expected an object keyed by \"1\"..\"30\"");
    for (auto e = it->begin(); e != it->end(); ++e) {
      std::string kp = key_path(ep, e.key());
      unsigned k = 0;
      try {
        std::size_t used = 0;
        unsigned long parsed = std::stoul(e.key(), &used);
        if (used != e.key().size())
          throw std::invalid_argument("trailing characters");
        k = static_cast<unsigned>(parsed);
      } catch (const std::exception &) {
        throw LoadError(kp, "cyclotomic index must be a decimal integer");
      }
      if (k < 1 || k > FactoredDegree::max_index)
        throw LoadError(kp, "cyclotomic index must lie in 1..30");
      auto ex = read_uint(e.value(), kp);
      if (ex == 0)
        throw LoadError(kp, "exponent must be positive");
      d.cyclo_exps[k] = static_cast<unsigned>(ex);
    }
  }
  return d;
}

inline json degree_to_json(const FactoredDegree &d) {
  json exps = json::object();
  for (auto [k, e] : d.cyclo_exps)
    exps[std::to_string(k)] = e;
  return json{{"t", d.denom}, {"a", d.q_exp}, {"exps", exps}};
}

inline Constraint read_constraint(const json &v, const std::string &path) {
  if (!v.is_object())
    throw LoadError(path, "expected a constraint object");
  std::string type =
      read_string(require_field(v, "type", path), key_path(path, "type"));
  Constraint c;
  auto num = [&](const char *key) {
    return read_uint(require_field(v, key, path), key_path(path, key));
  };
  if (type == "q_odd" || type == "q_even") {
    reject_unknown(v, path, {"type"});
    c.type = type == "q_odd" ? Constraint::Type::q_odd
                             : Constraint::Type::q_even;
  } else if (type == "q_ge" || type == "q_gt") {
    reject_unknown(v, path, {"type", "k"});
    c.type = type == "q_ge" ? Constraint::Type::q_ge : Constraint::Type::q_gt;
    c.k = num("k");
  } else if (type == "p_eq" || type == "p_ne") {
    reject_unknown(v, path, {"type", "r"});
    c.type = type == "p_eq" ? Constraint::Type::p_eq : Constraint::Type::p_ne;
    c.k = num("r");
    if (!arith::is_prime_small(c.k))
      throw LoadError(key_path(path, "r"), "must be prime");
  } else if (type == "cong") {
    reject_unknown(v, path, {"type", "c", "m"});
    c.type = Constraint::Type::cong;
    c.c = num("c");
    c.m = num("m");
    if (c.m < 2 || c.c >= c.m)
      throw LoadError(path, "cong needs m >= 2 and 0 <= c < m");
  } else {
    throw LoadError(key_path(path, "type"), "unknown constraint type '" +
                                                type + "'");
  }
  return c;
}

inline json constraint_to_json(const Constraint &c) {
  using T = Constraint::Type;
  switch (c.type) {
  case T::q_odd:
    return json{{"type", "q_odd"}};
  case T::q_even:
    return json{{"type", "q_even"}};
  case T::q_ge:
    return json{{"type", "q_ge"}, {"k", c.k}};
  case T::q_gt:
    return json{{"type", "q_gt"}, {"k", c.k}};
  case T::p_eq:
    return json{{"type", "p_eq"}, {"r", c.k}};
  case T::p_ne:
    return json{{"type", "p_ne"}, {"r", c.k}};
  case T::cong:
    return json{{"type", "cong"}, {"c", c.c}, {"m", c.m}};
  }
  return json{};
}

template <class Enum, std::size_t N>
Enum read_enum(const json &v, const std::string &path,
               const std::array<std::pair<std::string_view, Enum>, N> &names) {
  std::string s = read_string(v, path);
  for (auto &[n, e] : names)
    if (s == n)
      return e;
  throw LoadError(path, "unrecognized value '" + s + "'");
}

inline DegreeEntry read_entry(const json &v, const std::string &path) {
  if (!v.is_object())
    throw LoadError(path, "expected an entry object");
  reject_unknown(v, path,
                 {"label", "kind", "version", "constraints", "degree",
                  "multiplicity", "source"});
  DegreeEntry e;
  e.label = read_string(require_field(v, "label", path), key_path(path, "label"));
  if (e.label.empty())
    throw LoadError(key_path(path, "label"), "label must be nonempty");
  e.kind = read_enum(require_field(v, "kind", path), key_path(path, "kind"),
                     std::array<std::pair<std::string_view, EntryKind>, 3>{
                         {{"unipotent", EntryKind::unipotent},
                          {"semisimple", EntryKind::semisimple},
                          {"other", EntryKind::other}}});
  e.version =
      read_enum(require_field(v, "version", path), key_path(path, "version"),
                std::array<std::pair<std::string_view, Version>, 3>{
                    {{"simple", Version::simple},
                     {"sc", Version::sc},
                     {"ad", Version::ad}}});
  if (auto it = v.find("constraints"); it != v.end()) {
    std::string cp = key_path(path, "constraints");
    read_array(*it, cp);
    for (std::size_t i = 0; i < it->size(); ++i)
      e.constraints.push_back(read_constraint((*it)[i], index_path(cp, i)));
  }
  e.degree = read_degree(require_field(v, "degree", path),
                         key_path(path, "degree"));
  if (auto it = v.find("multiplicity"); it != v.end()) {
    auto m = read_uint(*it, key_path(path, "multiplicity"));
    if (m == 0)
      throw LoadError(key_path(path, "multiplicity"), "must be positive");
    e.multiplicity = static_cast<unsigned>(m);
  }
  e.source = read_string(require_field(v, "source", path),
                         key_path(path, "source"));
  return e;
}

/// Catalog invariants, checked at every admissible prime power up to 16.
inline void check_invariants(const FamilyCatalog &c, const std::string &path) {
  auto [a, b, cc] = family_exponents(c.family);
  if (c.a_H != a || c.b_H != b || c.c_H != cc)
    throw LoadError(path, c.name() + " exponents must be a_H=" +
                              std::to_string(a) + ", b_H=" +
                              std::to_string(b) + ", c_H=" +
                              std::to_string(cc));
  if (c.order.denom != 1)
    throw LoadError(key_path(path, "order"), "group order must be integral");
  if (c.order.q_degree() != family_dimension(c.family))
    throw LoadError(key_path(path, "order"),
                    "total q-degree " + std::to_string(c.order.q_degree()) +
                        " differs from the group dimension " +
                        std::to_string(family_dimension(c.family)));
  if (c.order.q_exp != c.a_H)
    throw LoadError(key_path(path, "order"),
                    "p-part of the order must be q^a_H");
  if (c.q_floor < 2)
    throw LoadError(key_path(path, "q_floor"), "must be at least 2");
  for (std::size_t i = 0; i < c.top_phi.size(); ++i)
    if (c.top_phi[i] < 3 || c.top_phi[i] > FactoredDegree::max_index ||
        !c.order.cyclo_exps.count(c.top_phi[i]))
      throw LoadError(index_path(key_path(path, "top_phi"), i),
                      "index must lie in 3..30 and divide the group order");

  std::set<std::pair<std::string, Version>> seen;
  for (const auto &e : c.entries)
    if (!seen.emplace(e.label, e.version).second)
      throw LoadError(path + "[" + e.label + "]", "duplicate label");
  for (std::size_t i = 0; i < c.torus_orders.size(); ++i)
    if (!c.find(c.torus_orders[i].entry))
      throw LoadError(index_path(key_path(path, "torus_orders"), i),
                      "unknown entry '" + c.torus_orders[i].entry + "'");

  for (const auto &q : c.sample_range(16)) {
    BigInt order = evaluate(c.order, q);
    for (const auto &e : c.entries) {
      if (!e.admits(q))
        continue;
      std::string where = path + "[" + e.label + "]";
      if (!is_integral_at(e.degree, q))
        throw LoadError(where, "degree " + e.degree.to_string() +
                                   " is not integral at q=" + q.to_string());
      BigInt v = evaluate(e.degree, q);
      if (v < 1)
        throw LoadError(where, "degree is not positive at q=" + q.to_string());
      if (!divides(v, order))
        throw LoadError(where, "degree does not divide the group order at q=" +
                                   q.to_string());
    }
  }
}

} // namespace detail

/// Parses and validates one family object. `path` prefixes error locations.
inline FamilyCatalog parse_family_catalog(const json &v,
                                          const std::string &path = "$") {
  if (!v.is_object())
    throw LoadError(path, "expected a family object");
  using namespace detail;
  reject_unknown(v, path,
                 {"family", "q_floor", "order", "order_source", "a_H", "b_H",
                  "c_H", "ppart_cap", "top_phi", "entries", "torus_orders"});
  FamilyCatalog c;
  std::string fam =
      read_string(require_field(v, "family", path), key_path(path, "family"));
  auto f = parse_family(fam);
  if (!f)
    throw LoadError(key_path(path, "family"), "unknown family '" + fam + "'");
  c.family = *f;
  c.q_floor = static_cast<unsigned>(
      read_uint(require_field(v, "q_floor", path), key_path(path, "q_floor")));
  c.order = read_degree(require_field(v, "order", path), key_path(path, "order"));
  if (auto it = v.find("order_source"); it != v.end())
    c.order_source = read_string(*it, key_path(path, "order_source"));
  c.a_H = static_cast<unsigned>(
      read_uint(require_field(v, "a_H", path), key_path(path, "a_H")));
  c.b_H = static_cast<unsigned>(
      read_uint(require_field(v, "b_H", path), key_path(path, "b_H")));
  c.c_H = static_cast<unsigned>(
      read_uint(require_field(v, "c_H", path), key_path(path, "c_H")));

  std::string cp = key_path(path, "ppart_cap");
  const json &cap = require_field(v, "ppart_cap", path);
  if (!cap.is_object())
    throw LoadError(cp, "expected {odd, even}");
  reject_unknown(cap, cp, {"odd", "even"});
  c.ppart_cap.odd =
      read_degree(require_field(cap, "odd", cp), key_path(cp, "odd"));
  c.ppart_cap.even =
      read_degree(require_field(cap, "even", cp), key_path(cp, "even"));

  std::string tp = key_path(path, "top_phi");
  const json &top = read_array(require_field(v, "top_phi", path), tp);
  for (std::size_t i = 0; i < top.size(); ++i)
    c.top_phi.push_back(
        static_cast<unsigned>(read_uint(top[i], index_path(tp, i))));

  std::string ep = key_path(path, "entries");
  const json &ents = read_array(require_field(v, "entries", path), ep);
  for (std::size_t i = 0; i < ents.size(); ++i)
    c.entries.push_back(read_entry(ents[i], index_path(ep, i)));

  if (auto it = v.find("torus_orders"); it != v.end()) {
    std::string op = key_path(path, "torus_orders");
    read_array(*it, op);
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json &t = (*it)[i];
      std::string ip = index_path(op, i);
      if (!t.is_object())
        throw LoadError(ip, "expected {m, order, entry}");
      reject_unknown(t, ip, {"m", "order", "entry"});
      TorusOrder tor;
      std::string mp = key_path(ip, "m");
      const json &ms = read_array(require_field(t, "m", ip), mp);
      for (std::size_t j = 0; j < ms.size(); ++j)
        tor.m.push_back(
            static_cast<unsigned>(read_uint(ms[j], index_path(mp, j))));
      tor.order = read_degree(require_field(t, "order", ip), key_path(ip, "order"));
      tor.entry =
          read_string(require_field(t, "entry", ip), key_path(ip, "entry"));
      c.torus_orders.push_back(std::move(tor));
    }
  }
  check_invariants(c, path);
  return c;
}

/// Accepts a single family object or an array of them.
inline std::vector<FamilyCatalog> parse_catalog_document(const json &doc) {
  std::vector<FamilyCatalog> out;
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i)
      out.push_back(parse_family_catalog(doc[i], detail::index_path("$", i)));
  } else {
    out.push_back(parse_family_catalog(doc, "$"));
  }
  return out;
}

inline json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw LoadError(path, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw LoadError(path, std::string("invalid JSON: ") + e.what());
  }
}

inline std::vector<FamilyCatalog> load_catalog_file(const std::string &path) {
  return parse_catalog_document(read_json_file(path));
}

/// The embedded catalog for one family; parsed and validated once.
inline const FamilyCatalog &load_catalog(Family f) {
  static std::once_flag once;
  static std::vector<FamilyCatalog> all;
  std::call_once(once, [] {
    all = parse_catalog_document(json::parse(data::families_json));
  });
  for (const auto &c : all)
    if (c.family == f)
      return c;
  throw LoadError("$", "embedded catalog lacks family " + family_name(f));
}

inline json to_json(const FamilyCatalog &c) {
  using namespace detail;
  json entries = json::array();
  for (const auto &e : c.entries) {
    json cs = json::array();
    for (const auto &k : e.constraints)
      cs.push_back(constraint_to_json(k));
    json j{{"label", e.label},
           {"kind", to_string(e.kind)},
           {"version", to_string(e.version)},
           {"constraints", cs},
           {"degree", degree_to_json(e.degree)},
           {"source", e.source}};
    if (e.multiplicity)
      j["multiplicity"] = *e.multiplicity;
    entries.push_back(std::move(j));
  }
  json tori = json::array();
  for (const auto &t : c.torus_orders)
    tori.push_back(
        {{"m", t.m}, {"order", degree_to_json(t.order)}, {"entry", t.entry}});
  return json{{"family", c.name()},
              {"q_floor", c.q_floor},
              {"order", degree_to_json(c.order)},
              {"order_source", c.order_source},
              {"a_H", c.a_H},
              {"b_H", c.b_H},
              {"c_H", c.c_H},
              {"ppart_cap",
               {{"odd", degree_to_json(c.ppart_cap.odd)},
                {"even", degree_to_json(c.ppart_cap.even)}}},
              {"top_phi", c.top_phi},
              {"entries", entries},
              {"torus_orders", tori}};
}

// Sporadic groups and the Tits group: two degrees of coprime order each.

struct SporadicDegree {
  std::string label;
  std::map<std::uint64_t, unsigned> factors;

  BigInt value() const {
    BigInt v = 1;
    for (auto [p, e] : factors)
      v *= pow(p, e);
    return v;
  }

  std::string to_string() const {
    std::string out;
    for (auto [p, e] : factors) {
      if (!out.empty())
        out += "*";
      out += std::to_string(p);
      if (e != 1)
        out += "^" + std::to_string(e);
    }
    return out;
  }
};

struct SporadicPair {
  std::string group;
  std::array<SporadicDegree, 2> chars;
};

inline std::vector<SporadicPair> parse_sporadic(const json &doc,
                                                const std::string &path = "$") {
  using namespace detail;
  read_array(doc, path);
  std::vector<SporadicPair> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    std::string gp = index_path(path, i);
    const json &g = doc[i];
    if (!g.is_object())
      throw LoadError(gp, "expected {group, pairs}");
    reject_unknown(g, gp, {"group", "pairs"});
    SporadicPair sp;
    sp.group = read_string(require_field(g, "group", gp), key_path(gp, "group"));
    std::string pp = key_path(gp, "pairs");
    const json &pairs = read_array(require_field(g, "pairs", gp), pp);
    if (pairs.size() != 2)
      throw LoadError(pp, "expected exactly two characters");
    for (std::size_t j = 0; j < 2; ++j) {
      std::string cp = index_path(pp, j);
      const json &ch = pairs[j];
      if (!ch.is_object())
        throw LoadError(cp, "expected {label, factors}");
      reject_unknown(ch, cp, {"label", "factors"});
      auto &d = sp.chars[j];
      d.label = read_string(require_field(ch, "label", cp), key_path(cp, "label"));
      std::string fp = key_path(cp, "factors");
      const json &fs = require_field(ch, "factors", cp);
      if (!fs.is_object() || fs.empty())
        throw LoadError(fp, "expected a nonempty {prime: exponent} object");
      for (auto it = fs.begin(); it != fs.end(); ++it) {
        std::string kp = key_path(fp, it.key());
        std::uint64_t p = 0;
        try {
          p = std::stoull(it.key());
        } catch (const std::exception &) {
          throw LoadError(kp, "prime key must be a decimal integer");
        }
        if (!arith::is_prime_small(p))
          throw LoadError(kp, "key is not prime");
        auto e = read_uint(it.value(), kp);
        if (e == 0)
          throw LoadError(kp, "exponent must be positive");
        d.factors[p] = static_cast<unsigned>(e);
      }
    }
    out.push_back(std::move(sp));
  }
  return out;
}

inline std::vector<SporadicPair> load_sporadic_file(const std::string &path) {
  return parse_sporadic(read_json_file(path));
}

/// The 27 rows of the embedded sporadic table.
inline const std::vector<SporadicPair> &sporadic_pairs() {
  static const std::vector<SporadicPair> pairs =
      parse_sporadic(json::parse(data::sporadic_json));
  return pairs;
}

// p-part exponents of selected unipotent degrees of simple groups S(p^b).
// exponent = b * (c2 n^2 + c1 n + c0) / d + offset

struct Table1Entry {
  std::string group_pattern;
  std::string symbol;
  std::string ppart_text;
  bool uses_n = false;
  unsigned n_min = 0;
  long c2 = 0, c1 = 0, c0 = 0;
  long d = 1;
  long offset = 0;
  bool representable = true;
};

inline const std::vector<Table1Entry> &table1() {
  static const std::vector<Table1Entry> rows = {
      {"L_n^e(p^b)", "(1^{n-2},2)", "p^{b(n-1)(n-2)/2}", true, 3, 1, -3, 2, 2, 0},
      {"S_2n(p^b), p=2", "(0 1 2 ... n-2 n-1 n / 1 2 ... n-2)", "2^{b(n-1)^2-1}",
       true, 3, 1, -2, 1, 1, -1},
      {"S_2n(p^b), p>2", "", "p^{b(n-1)^2}", true, 3, 1, -2, 1, 1, 0},
      {"O_2n+1(p^b), p>2", "(0 1 2 ... n-2 n-1 n / 1 2 ... n-2)", "p^{b(n-1)^2}",
       true, 3, 1, -2, 1, 1, 0},
      {"O_2n^+(p^b)", "(0 1 2 ... n-3 n-1 / 1 2 3 ... n-2 n-1)",
       "p^{b(n^2-3n+3)}", true, 4, 1, -3, 3, 1, 0},
      {"O_2n^-(p^b)", "(0 1 2 ... n-2 n / 1 2 ... n-2)", "p^{b(n^2-3n+2)}", true,
       4, 1, -3, 2, 1, 0},
      {"3D4(p^b)", "phi_{1,3}''", "p^{7b}", false, 0, 0, 0, 7, 1, 0},
      {"F4(p^b)", "phi_{9,10}", "p^{10b}", false, 0, 0, 0, 10, 1, 0},
      {"2F4(q^2)", "2B2[a],e", "(1/sqrt 2) q^13", false, 0, 0, 0, 0, 1, 0,
       false},
      {"E6(p^b)", "phi_{6,25}", "p^{25b}", false, 0, 0, 0, 25, 1, 0},
      {"2E6(p^b)", "phi_{2,16}''", "p^{25b}", false, 0, 0, 0, 25, 1, 0},
      {"E7(p^b)", "phi_{7,46}", "p^{46b}", false, 0, 0, 0, 46, 1, 0},
      {"E8(p^b)", "phi_{8,91}", "p^{91b}", false, 0, 0, 0, 91, 1, 0},
  };
  return rows;
}

inline const Table1Entry &table1_row(std::string_view pattern) {
  for (const auto &r : table1())
    if (r.group_pattern == pattern)
      return r;
  throw InvalidArgument("table 1 has no row " + std::string(pattern));
}

/// Exponent of p in the listed degree of S(p^b). n is ignored by rows
/// without a rank parameter.
inline std::uint64_t table1_ppart(const Table1Entry &row, unsigned b,
                                  unsigned n = 0) {
  if (!row.representable)
    throw InvalidArgument(row.group_pattern + ": p-part " + row.ppart_text +
                          " is not an integer power of p");
  if (b < 1)
    throw InvalidArgument(row.group_pattern + ": b must be >= 1");
  if (row.uses_n && n < row.n_min)
    throw InvalidArgument(row.group_pattern + ": n must be >= " +
                          std::to_string(row.n_min));
  long nn = row.uses_n ? static_cast<long>(n) : 0;
  long inner = row.c2 * nn * nn + row.c1 * nn + row.c0;
  long scaled = static_cast<long>(b) * inner;
  if (scaled % row.d != 0)
    throw std::logic_error(row.group_pattern + ": non-integral exponent");
  long e = scaled / row.d + row.offset;
  if (e < 1)
    throw std::logic_error(row.group_pattern + ": nonpositive exponent");
  return static_cast<std::uint64_t>(e);
}

} // namespace cdcheck
