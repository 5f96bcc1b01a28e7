#include "cdcheck/catalog.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

using namespace cdcheck;

namespace {

PrimePower Q(std::uint64_t q) { return PrimePower::from_value(q); }

const DegreeEntry &entry(Family f, const std::string &label) {
  return load_catalog(f).entry(label);
}

json f4_json() { return to_json(load_catalog(Family::F4)); }

std::string load_error_path(const json &doc) {
  try {
    parse_catalog_document(doc);
  } catch (const LoadError &e) {
    return e.path();
  }
  return "<no error>";
}

} // namespace

TEST(Catalog, FamilyNames) {
  EXPECT_EQ(family_name(Family::TwoE6), "2E6");
  EXPECT_EQ(parse_family("²E6"), Family::TwoE6);
  EXPECT_EQ(parse_family("E8"), Family::E8);
  EXPECT_FALSE(parse_family("G2").has_value());
}

TEST(Catalog, NamedEntries) {
  EXPECT_EQ(entry(Family::F4, "φ_{2,4}'").degree,
            make_degree(2, 1, {{4, 1}, {8, 1}, {12, 1}}));
  EXPECT_EQ(entry(Family::TwoE6, "φ_{2,4}'").degree,
            make_degree(1, 1, {{8, 1}, {18, 1}}));
  EXPECT_EQ(load_catalog(Family::E8).top_phi,
            (std::vector<unsigned>{30, 24, 20, 15, 14}));
  EXPECT_EQ(load_catalog(Family::F4).top_phi,
            (std::vector<unsigned>{12, 8, 6, 3}));
  EXPECT_THROW(load_catalog(Family::F4).entry("nope"), InvalidArgument);
}

TEST(Catalog, ExponentConstants) {
  const std::array<std::array<unsigned, 3>, 5> want{
      {{24, 16, 4}, {36, 25, 7}, {36, 25, 7}, {63, 46, 11}, {120, 91, 16}}};
  for (std::size_t i = 0; i < all_families.size(); ++i) {
    const auto &c = load_catalog(all_families[i]);
    EXPECT_EQ((std::array<unsigned, 3>{c.a_H, c.b_H, c.c_H}), want[i]);
  }
}

TEST(Catalog, OrderDimensions) {
  const std::array<unsigned, 5> dims{52, 78, 78, 133, 248};
  for (std::size_t i = 0; i < all_families.size(); ++i) {
    const auto &c = load_catalog(all_families[i]);
    EXPECT_EQ(c.order.q_degree(), dims[i]) << c.name();
    EXPECT_EQ(c.order_source, "external-standard");
  }
}

TEST(Catalog, DegreesAt) {
  const auto &f4 = load_catalog(Family::F4);
  auto ds = f4.degrees_at(Q(3));
  auto has = [&](const BigInt &v) {
    return std::any_of(ds.begin(), ds.end(),
                       [&](const auto &p) { return p.second == v; });
  };
  EXPECT_TRUE(has(6643));
  EXPECT_TRUE(has(pow(3ul, 24)));
  EXPECT_TRUE(has(1));
  EXPECT_THROW(f4.degrees_at(Q(2)), ConstraintError);
}

TEST(Catalog, VersionExtrasFollowCongruence) {
  const auto &e = load_catalog(Family::TwoE6);
  auto count_sc = [&](std::uint64_t q) {
    std::size_t n = 0;
    for (const auto *x : e.entries_at(Q(q), VersionFilter::sc))
      n += x->version == Version::sc;
    return n;
  };
  EXPECT_EQ(count_sc(2), 1u);
  EXPECT_EQ(count_sc(3), 0u);
  for (const auto *x : e.entries_at(Q(2), VersionFilter::simple))
    EXPECT_EQ(x->version, Version::simple);
}

TEST(Catalog, OrderAndSteinberg) {
  EXPECT_EQ(load_catalog(Family::E7).steinberg_degree(Q(2)), pow(2ul, 63));
  const auto &f4 = load_catalog(Family::F4);
  EXPECT_TRUE(divides(cyclotomic_value(12, 3), f4.order_at(Q(3))));
  EXPECT_THROW(f4.order_at(Q(2)), ConstraintError);
}

TEST(Catalog, SimpleDegreesDivideOrder) {
  for (Family f : all_families) {
    const auto &c = load_catalog(f);
    for (const auto &q : c.sample_range(64)) {
      BigInt order = c.order_at(q);
      BigInt biggest = 0;
      for (auto &[label, v] : c.degrees_at(q)) {
        EXPECT_TRUE(divides(v, order)) << c.name() << " " << label;
        biggest = std::max(biggest, v);
      }
      EXPECT_LE(biggest * biggest, order);
    }
  }
}

TEST(Catalog, MultiplicityAndSources) {
  EXPECT_EQ(entry(Family::F4, "φ_{2,16}'").multiplicity, 2u);
  for (Family f : all_families)
    for (const auto &e : load_catalog(f).entries)
      EXPECT_FALSE(e.source.empty()) << e.label;
}

TEST(Catalog, Constraints) {
  Constraint odd{Constraint::Type::q_odd};
  EXPECT_TRUE(odd.admits(Q(3)));
  EXPECT_FALSE(odd.admits(Q(4)));
  Constraint c{Constraint::Type::cong, 0, 1, 3};
  EXPECT_TRUE(c.admits(Q(4)));
  EXPECT_TRUE(c.admits(Q(7)));
  EXPECT_FALSE(c.admits(Q(5)));
  Constraint gt{Constraint::Type::q_gt, 2};
  EXPECT_FALSE(gt.admits(Q(2)));
  EXPECT_TRUE(gt.admits(Q(3)));
  Constraint peq{Constraint::Type::p_eq, 3};
  EXPECT_TRUE(peq.admits(Q(27)));
  EXPECT_FALSE(peq.admits(Q(8)));
}

TEST(Catalog, JsonRoundTrip) {
  for (Family f : all_families) {
    json j = to_json(load_catalog(f));
    FamilyCatalog back = parse_family_catalog(j);
    EXPECT_EQ(to_json(back), j);
  }
}

TEST(Catalog, FileIngestion) {
  std::string path = ::testing::TempDir() + "cdcheck_catalog.json";
  {
    std::ofstream out(path);
    out << json::array({f4_json(), to_json(load_catalog(Family::E8))}).dump();
  }
  auto cats = load_catalog_file(path);
  ASSERT_EQ(cats.size(), 2u);
  EXPECT_EQ(cats[0].family, Family::F4);
  EXPECT_EQ(cats[1].family, Family::E8);
  std::remove(path.c_str());
  EXPECT_THROW(load_catalog_file(path), LoadError);
}

TEST(Catalog, SchemaViolationsCarryPath) {
  json j = f4_json();
  j.erase("a_H");
  EXPECT_EQ(load_error_path(j), "$.a_H");

  j = f4_json();
  j["bogus"] = 1;
  EXPECT_EQ(load_error_path(j), "$.bogus");

  j = f4_json();
  j["entries"][2]["degree"]["exps"]["31"] = 1;
  EXPECT_EQ(load_error_path(j), "$.entries[2].degree.exps.31");

  j = f4_json();
  j["entries"][2]["degree"]["t"] = 7;
  EXPECT_EQ(load_error_path(j), "$.entries[2].degree.t");

  j = f4_json();
  j["entries"][0]["constraints"] = json::array({{{"type", "q_prime"}}});
  EXPECT_EQ(load_error_path(j), "$.entries[0].constraints[0].type");

  j = f4_json();
  j["entries"][0]["version"] = "universal";
  EXPECT_EQ(load_error_path(j), "$.entries[0].version");
}

TEST(Catalog, InvariantViolations) {
  // order of the wrong dimension
  json j = f4_json();
  j["order"]["exps"]["12"] = 2;
  EXPECT_EQ(load_error_path(j), "$.order");

  // a degree that does not divide the order
  j = f4_json();
  j["entries"][2]["degree"]["exps"]["5"] = 1;
  EXPECT_NE(load_error_path(j).find("1/4 q^4"), std::string::npos);

  // a degree that is not integral: 1/5 q^4 Phi3 at q = 3
  j = f4_json();
  j["entries"][2]["degree"] = {{"t", 5}, {"a", 4}, {"exps", {{"3", 1}}}};
  EXPECT_THROW(parse_family_catalog(j), LoadError);

  // duplicate label
  j = f4_json();
  j["entries"].push_back(j["entries"][3]);
  EXPECT_THROW(parse_family_catalog(j), LoadError);

  // torus pointing at a missing entry
  j = f4_json();
  j["torus_orders"][0]["entry"] = "missing";
  EXPECT_EQ(load_error_path(j), "$.torus_orders[0]");

  // wrong exponent constants
  j = f4_json();
  j["b_H"] = 17;
  EXPECT_THROW(parse_family_catalog(j), LoadError);
}

TEST(Sporadic, Table) {
  const auto &pairs = sporadic_pairs();
  ASSERT_EQ(pairs.size(), 27u);
  const SporadicPair *j1 = nullptr;
  for (const auto &sp : pairs)
    if (sp.group == "J1")
      j1 = &sp;
  ASSERT_NE(j1, nullptr);
  EXPECT_EQ(j1->chars[0].value(), 76);
  EXPECT_EQ(j1->chars[1].value(), 77);
  for (const auto &sp : pairs) {
    for (auto [p, e] : sp.chars[0].factors)
      EXPECT_EQ(sp.chars[1].factors.count(p), 0u) << sp.group;
    EXPECT_EQ(gcd(sp.chars[0].value(), sp.chars[1].value()), 1) << sp.group;
  }
}

TEST(Sporadic, ParseErrors) {
  json bad = json::array({{{"group", "X"}, {"pairs", json::array()}}});
  EXPECT_THROW(parse_sporadic(bad, "$"), LoadError);
  bad = json::array(
      {{{"group", "X"},
        {"pairs", json::array({{{"label", "a"}, {"factors", {{"4", 1}}}},
                               {{"label", "b"}, {"factors", {{"3", 1}}}}})}}});
  EXPECT_THROW(parse_sporadic(bad, "$"), LoadError);
}

TEST(Table1, Exponents) {
  EXPECT_EQ(table1_ppart(table1_row("F4(p^b)"), 2), 20u);
  EXPECT_EQ(table1_ppart(table1_row("E8(p^b)"), 1), 91u);
  EXPECT_EQ(table1_ppart(table1_row("L_n^e(p^b)"), 1, 3), 1u);
  EXPECT_EQ(table1_ppart(table1_row("E7(p^b)"), 3), 138u);
  EXPECT_EQ(table1().size(), 13u);
  EXPECT_THROW(table1_ppart(table1_row("2F4(q^2)"), 1), InvalidArgument);
  EXPECT_THROW(table1_ppart(table1_row("L_n^e(p^b)"), 1, 2), InvalidArgument);
  EXPECT_THROW(table1_ppart(table1_row("F4(p^b)"), 0), InvalidArgument);
  EXPECT_THROW(table1_row("G2(p^b)"), InvalidArgument);
}

TEST(Table1, ExponentsArePositive) {
  for (const auto &row : table1()) {
    if (!row.representable)
      continue;
    for (unsigned b = 1; b <= 4; ++b)
      for (unsigned n = row.uses_n ? row.n_min : 0;
           n <= (row.uses_n ? row.n_min + 6 : 0); ++n)
        EXPECT_GT(table1_ppart(row, b, n), 0u) << row.group_pattern;
  }
}
