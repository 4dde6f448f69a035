#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ag/magma.hpp"
#include "helpers.hpp"

using namespace ag;
using namespace test_helpers;

namespace {

// Test-local oracles: literal re-evaluations of the defining identities on
// the raw table, independent of the library's scan order and short-circuits.
Element raw(const Magma& m, Element a, Element b) { return m.table()[a * m.order() + b]; }

bool oracle_left_invertive(const Magma& m) {
  const int n = m.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (raw(m, raw(m, a, b), c) != raw(m, raw(m, c, b), a)) return false;
  return true;
}

bool oracle_medial(const Magma& m) {
  const int n = m.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (raw(m, raw(m, a, b), raw(m, c, d)) != raw(m, raw(m, a, c), raw(m, b, d)))
            return false;
  return true;
}

bool oracle_paramedial(const Magma& m) {
  const int n = m.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (raw(m, raw(m, a, b), raw(m, c, d)) != raw(m, raw(m, d, c), raw(m, b, a)))
            return false;
  return true;
}

bool oracle_law4(const Magma& m) {
  const int n = m.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (raw(m, a, raw(m, b, c)) != raw(m, b, raw(m, a, c))) return false;
  return true;
}

}  // namespace

TEST_CASE("example table parses with labels and the documented products") {
  const Magma m = example6();
  CHECK(m.order() == 6);
  CHECK(m.labels() == std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
  // c*e = d
  CHECK(m.product(2, 4) == 3);
  // row e reproduces the header: e is a left identity
  for (Element x = 0; x < 6; ++x) CHECK(m.product(4, x) == x);
  CHECK(left_identities(m) == std::vector<Element>{4});
}

TEST_CASE("trivial one-element table") {
  const Magma m = parse_magma("1\na\na");
  CHECK(m.order() == 1);
  CHECK(m.product(0, 0) == 0);
  CHECK(serialize_magma(m) == "1\na\na\n");
}

TEST_CASE("parse errors carry locations") {
  // short row: 5 entries in a 6-wide table
  const char* short_row =
      "6\n"
      "a b c d e f\n"
      "a a a a a a\n"
      "a b b b b b\n"
      "a b f f d\n"
      "a b f f c f\n"
      "a b c d e f\n"
      "a b f f f f\n";
  CHECK_THROWS_AS(parse_magma(short_row), ParseError);
  try {
    parse_magma(short_row);
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }

  CHECK_THROWS_AS(parse_magma("2\nx y\nx q\nx y"), ParseError);   // unknown symbol
  CHECK_THROWS_AS(parse_magma("2\nx x\nx x\nx x"), ParseError);   // duplicate labels
  CHECK_THROWS_AS(parse_magma("2\n0 1\n1 0\n0 1"), ParseError);   // non-square (extra row)
  CHECK_THROWS_AS(parse_magma("0\n"), ParseError);                // empty order rejected
  CHECK_THROWS_AS(parse_magma(""), ParseError);
  CHECK_THROWS_AS(parse_magma("2\n0 1"), ParseError);             // missing rows
  CHECK_THROWS_AS(parse_magma("2\n0 2\n1 0"), ParseError);        // entry out of range
}

TEST_CASE("json parsing and errors") {
  const Magma m = parse_magma(slurp(fixture_path("example6.json")));
  CHECK(m == example6());
  CHECK_THROWS_AS(parse_magma("{\"order\":2}", TableFormat::Json), ParseError);
  CHECK_THROWS_AS(parse_magma("{\"order\":2,\"table\":[[0,1],[2,0]]}", TableFormat::Json),
                  ParseError);
  CHECK_THROWS_AS(parse_magma("{\"order\":2,\"table\":[[0,1]]}", TableFormat::Json), ParseError);
  CHECK_THROWS_AS(parse_magma("not json at all {", TableFormat::Json), ParseError);
}

TEST_CASE("serialize round-trips") {
  const Magma example = example6();
  CHECK(parse_magma(serialize_magma(example, TableFormat::Text)) == example);
  CHECK(parse_magma(serialize_magma(example, TableFormat::Json)) == example);

  // whole order-2 space, both formats
  for_all_tables(2, [](const Magma& m) {
    CHECK(parse_magma(serialize_magma(m, TableFormat::Text)) == m);
    CHECK(parse_magma(serialize_magma(m, TableFormat::Json)) == m);
  });
}

TEST_CASE("round-trip over the full order-3 enumeration") {
  std::size_t count = 0;
  for_all_tables(3, [&](const Magma& m) {
    ++count;
    const Magma t = parse_magma(serialize_magma(m, TableFormat::Text));
    REQUIRE(t == m);
  });
  CHECK(count == 19683);
}

TEST_CASE("left invertive predicate") {
  CHECK(is_left_invertive(example6()));
  CHECK(is_left_invertive(constant2()));
  CHECK_FALSE(is_left_invertive(left_zero2()));
  // least failing triple: (0,0,1) since (0*0)*1 = 0 but (1*0)*0 = 1
  auto fail = left_invertive_failure(left_zero2());
  REQUIRE(fail.has_value());
  CHECK(*fail == TripleWitness{0, 0, 1});
  CHECK_FALSE(left_invertive_failure(example6()).has_value());
}

TEST_CASE("medial predicate") {
  CHECK(is_medial(example6()));
  CHECK(is_medial(addmod2()));
  int non_medial = 0;
  for_all_tables(2, [&](const Magma& m) {
    CHECK(is_medial(m) == oracle_medial(m));
    if (!oracle_medial(m)) ++non_medial;
  });
  CHECK(non_medial > 0);  // mediality genuinely fails somewhere at order 2
}

TEST_CASE("paramedial and law4") {
  CHECK(is_paramedial(example6()));
  CHECK(satisfies_law4(example6()));
  CHECK(is_paramedial(addmod2()));
  CHECK(satisfies_law4(addmod2()));
  CHECK(is_paramedial(constant2()));
  CHECK(satisfies_law4(constant2()));
  CHECK_FALSE(satisfies_law4(left_zero2()));  // a(bc)=a vs b(ac)=b
  for_all_tables(2, [&](const Magma& m) {
    CHECK(is_paramedial(m) == oracle_paramedial(m));
    CHECK(satisfies_law4(m) == oracle_law4(m));
  });
}

TEST_CASE("ag-star and permutation identity") {
  CHECK(is_ag_star(constant2()));
  CHECK(is_ag_star(addmod2()));
  CHECK(satisfies_permutation_identity(constant2()));
  CHECK_FALSE(satisfies_permutation_identity(left_zero2()));
  // the example table's status is computed, not assumed: (ce)e=c but e(ce)=d
  const Magma example = example6();
  CHECK_FALSE(is_ag_star(example));

  // every AG* magma of order <= 3 satisfies the permutation identity
  for (int n = 1; n <= 3; ++n)
    for_all_tables(n, [&](const Magma& m) {
      if (oracle_left_invertive(m) && is_ag_star(m))
        CHECK(satisfies_permutation_identity(m));
    });
}

TEST_CASE("identity element scans") {
  CHECK(left_identities(constant2()).empty());
  CHECK(left_identities(addmod2()) == std::vector<Element>{0});
  CHECK(right_identities(addmod2()) == std::vector<Element>{0});
  CHECK(right_identities(example6()).empty());
}

TEST_CASE("probe agrees with the individual predicates") {
  auto check_probe = [](const Magma& m) {
    const StructureReport r = probe(m);
    CHECK(r.is_left_invertive == is_left_invertive(m));
    CHECK(r.is_medial == is_medial(m));
    CHECK(r.is_paramedial == is_paramedial(m));
    CHECK(r.satisfies_law4 == satisfies_law4(m));
    CHECK(r.is_ag_star == is_ag_star(m));
    CHECK(r.satisfies_permutation_identity == satisfies_permutation_identity(m));
    CHECK(r.is_commutative == is_commutative(m));
    CHECK(r.is_associative == is_associative(m));
    CHECK(r.left_identities == left_identities(m));
    CHECK(r.right_identities == right_identities(m));
    CHECK(r.square == square_set(m));
    CHECK(r.s_equals_s2 == r.square.is_full());
  };
  check_probe(example6());
  for_all_tables(2, check_probe);
}

TEST_CASE("probe on the bundled examples") {
  const StructureReport example = probe(example6());
  CHECK(example.is_left_invertive);
  CHECK(example.left_identities == std::vector<Element>{4});
  CHECK(example.s_equals_s2);
  CHECK_FALSE(example.is_associative);

  const StructureReport z2 = probe(addmod2());
  CHECK(z2.is_left_invertive);
  CHECK(z2.is_medial);
  CHECK(z2.is_paramedial);
  CHECK(z2.satisfies_law4);
  CHECK(z2.is_commutative);
  CHECK(z2.is_associative);

  const StructureReport lz = probe(left_zero2());
  CHECK_FALSE(lz.is_left_invertive);
  CHECK(lz.s_equals_s2);  // products cover {0,1}
}

TEST_CASE("structural consequences of the left invertive law at orders <= 3") {
  for (int n = 1; n <= 3; ++n)
    for_all_tables(n, [&](const Magma& m) {
      if (!oracle_left_invertive(m)) return;
      CHECK(is_medial(m));
      CHECK(left_identities(m).size() <= 1);
      if (!left_identities(m).empty()) {
        CHECK(is_paramedial(m));
        CHECK(satisfies_law4(m));
      }
      if (!right_identities(m).empty()) {
        CHECK(is_commutative(m));
        CHECK(is_associative(m));
      }
    });
}

TEST_CASE("magma construction guards") {
  CHECK_THROWS_AS(Magma(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Magma(2, {0, 1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Magma(2, {0, 1, 1, 0}, {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(Magma(2, {0, 1, 1, 0}, {"x", "x"}), std::invalid_argument);
  const Magma m = addmod2();
  CHECK_THROWS_AS(m.product(2, 0), std::out_of_range);
  CHECK_THROWS_AS(m.product(0, -1), std::out_of_range);
}

TEST_CASE("element set semantics") {
  ElementSet s(3);
  CHECK(s.count() == 0);
  CHECK_FALSE(s.is_full());
  s.insert(0);
  s.insert(2);
  CHECK(s.count() == 2);
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(1));
  CHECK(s.to_vector() == std::vector<Element>{0, 2});
  s.insert(1);
  CHECK(s.is_full());
  CHECK_THROWS_AS(s.insert(3), std::out_of_range);
}
