#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "ag/classify.hpp"
#include "ag/enumerate.hpp"
#include "helpers.hpp"

using namespace ag;
using namespace test_helpers;

namespace {

// Literal witness-space scan (the completeness oracle): true iff some tuple
// satisfies the defining equation of `kind` at `a`.
bool oracle_has_witness(const Magma& m, ClassKind kind, Element a) {
  const int n = m.order();
  auto p = [&](Element x, Element y) { return m.table()[x * n + y]; };
  switch (kind) {
    case ClassKind::Regular:
      for (Element x = 0; x < n; ++x)
        if (p(p(a, x), a) == a) return true;
      return false;
    case ClassKind::WeaklyRegular:
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          if (p(p(a, x), p(a, y)) == a) return true;
      return false;
    case ClassKind::IntraRegular:
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          if (p(p(x, p(a, a)), y) == a) return true;
      return false;
    case ClassKind::RightRegular:
      for (Element x = 0; x < n; ++x)
        if (p(p(a, a), x) == a) return true;
      return false;
    case ClassKind::LeftRegular:
      for (Element x = 0; x < n; ++x)
        if (p(x, p(a, a)) == a) return true;
      return false;
    case ClassKind::LeftQuasiRegular:
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          if (p(p(x, a), p(y, a)) == a) return true;
      return false;
    case ClassKind::CompletelyRegular:
      return oracle_has_witness(m, ClassKind::Regular, a) &&
             oracle_has_witness(m, ClassKind::LeftRegular, a) &&
             oracle_has_witness(m, ClassKind::RightRegular, a);
  }
  return false;
}

}  // namespace

TEST_CASE("example table: d is in no class, c is the least failing element") {
  const Magma m = example6();
  const Element c = 2, d = 3;
  CHECK_FALSE(regular_witness(m, d).has_value());
  CHECK_FALSE(weakly_regular_witness(m, d).has_value());
  CHECK_FALSE(intra_regular_witness(m, d).has_value());
  CHECK_FALSE(right_regular_witness(m, d).has_value());
  CHECK_FALSE(left_regular_witness(m, d).has_value());
  CHECK_FALSE(left_quasi_regular_witness(m, d).has_value());
  CHECK_FALSE(completely_regular(m, d).holds);
  CHECK_FALSE(characterization_witness(m, d).has_value());

  const ClassReport report = classify(m);
  for (ClassKind k : kAllClassKinds) {
    CAPTURE(class_kind_name(k));
    CHECK_FALSE(report[k].holds_globally);
    CHECK(report[k].first_failing == c);
    CHECK_FALSE(report[k].witnesses[d].has_value());
  }
}

TEST_CASE("example table: a is in every class with witness a") {
  const Magma m = example6();
  // row and column of a are constant a, so (a*a)*a = a
  CHECK(regular_witness(m, 0) == 0);
  CHECK(weakly_regular_witness(m, 0) == std::pair{0, 0});
  CHECK(right_regular_witness(m, 0) == 0);
  CHECK(left_regular_witness(m, 0) == 0);
  CHECK(completely_regular(m, 0).holds);
}

TEST_CASE("addition mod 2 witnesses") {
  const Magma m = addmod2();
  CHECK(regular_witness(m, 1) == 1);  // (1+1)+1 = 1
  CHECK(weakly_regular_witness(m, 0) == std::pair{0, 0});
  CHECK(weakly_regular_witness(m, 1) == std::pair{0, 1});  // (1+0)+(1+1) = 1
  CHECK(intra_regular_witness(m, 0) == std::pair{0, 0});
  CHECK(right_regular_witness(m, 1) == 1);
  CHECK(right_regular_witness(m, 0) == 0);
  CHECK(left_regular_witness(m, 1) == 1);
  CHECK(left_quasi_regular_witness(m, 0) == std::pair{0, 0});
  CHECK(left_quasi_regular_witness(m, 1) == std::pair{0, 1});  // (0+1)+(1+1) = 1
  CHECK(characterization_witness(m, 0) == std::pair{0, 0});

  const ClassReport report = classify(m);
  for (ClassKind k : kAllClassKinds) {
    CHECK(report[k].holds_globally);
    CHECK_FALSE(report[k].first_failing.has_value());
  }
}

TEST_CASE("constant magma: element 0 completely regular, element 1 not") {
  const Magma m = constant2();
  CHECK(left_regular_witness(m, 0) == 0);  // 0*(0*0) = 0
  const auto r0 = completely_regular(m, 0);
  CHECK(r0.holds);
  const auto r1 = completely_regular(m, 1);
  CHECK_FALSE(r1.holds);
  CHECK_FALSE(regular_witness(m, 1).has_value());
}

TEST_CASE("witness soundness and completeness over small spaces") {
  auto check_magma = [](const Magma& m) {
    for (ClassKind kind : kAllClassKinds)
      for (Element a = 0; a < m.order(); ++a) {
        const auto w = class_witness(m, kind, a);
        CHECK(w.has_value() == oracle_has_witness(m, kind, a));
        if (w) {
          CHECK(w->kind == kind);
          CHECK(w->element == a);
          CHECK(witness_holds(m, *w));
        }
      }
  };
  check_magma(example6());
  for_all_tables(2, check_magma);
}

TEST_CASE("classify is deterministic and matches per-element witnesses") {
  const Magma m = example6();
  const ClassReport r1 = classify(m);
  const ClassReport r2 = classify(m);
  for (ClassKind k : kAllClassKinds) {
    CHECK(r1[k].holds_globally == r2[k].holds_globally);
    CHECK(r1[k].first_failing == r2[k].first_failing);
    REQUIRE(r1[k].witnesses.size() == r2[k].witnesses.size());
    for (std::size_t a = 0; a < r1[k].witnesses.size(); ++a) {
      CHECK(r1[k].witnesses[a] == r2[k].witnesses[a]);
      CHECK(r1[k].witnesses[a] == class_witness(m, k, static_cast<Element>(a)));
    }
    CHECK(is_globally(m, k) == r1[k].holds_globally);
  }
}

TEST_CASE("witness_holds rejects forged witnesses") {
  const Magma m = example6();
  CHECK_FALSE(witness_holds(m, Witness{ClassKind::Regular, 3, {0}}));
  CHECK_FALSE(witness_holds(m, Witness{ClassKind::Regular, 0, {}}));       // arity
  CHECK_FALSE(witness_holds(m, Witness{ClassKind::WeaklyRegular, 3, {0, 0}}));
}

TEST_CASE("six non-regular classes coincide per element under a left identity, orders <= 3") {
  // also: the (x,z) characterization coincides with intra-regularity per element
  for (int order = 1; order <= 3; ++order) {
    EnumSpec spec;
    spec.order = order;
    spec.require_ag = true;
    spec.require_left_identity = true;
    enumerate_backtracking(spec, [&](const Magma& m) {
      for (Element a = 0; a < m.order(); ++a) {
        const bool intra = intra_regular_witness(m, a).has_value();
        CHECK(characterization_witness(m, a).has_value() == intra);
      }
      return true;
    });
  }
}

TEST_CASE("every class member magma keeps S = S^2, orders <= 3") {
  for (int order = 1; order <= 3; ++order) {
    EnumSpec spec;
    spec.order = order;
    spec.require_ag = true;
    enumerate_backtracking(spec, [&](const Magma& m) {
      for (ClassKind k : kAllClassKinds)
        if (is_globally(m, k)) {
          CHECK(square_set(m).is_full());
          break;
        }
      return true;
    });
  }
}

TEST_CASE("element bounds are checked") {
  const Magma m = addmod2();
  CHECK_THROWS_AS(regular_witness(m, 2), std::out_of_range);
  CHECK_THROWS_AS(characterization_witness(m, -1), std::out_of_range);
}
