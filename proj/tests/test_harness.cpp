#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ag/harness.hpp"
#include "helpers.hpp"

using namespace ag;
using namespace test_helpers;

namespace {

Universe ag_universe(int max_order) {
  Universe u;
  u.max_order = max_order;
  u.constraints.require_ag = true;
  u.description = "AG orders 1-" + std::to_string(max_order);
  return u;
}

Universe agli_universe(int max_order) {
  Universe u = ag_universe(max_order);
  u.constraints.require_left_identity = true;
  u.description = "AG+LI orders 1-" + std::to_string(max_order);
  return u;
}

Universe agstar_universe(int max_order) {
  Universe u;
  u.max_order = max_order;
  u.constraints.require_ag_star = true;
  u.description = "AG* orders 1-" + std::to_string(max_order);
  return u;
}

}  // namespace

TEST_CASE("pass suite has zero violations at orders 1-3") {
  const auto s2 = check_s_square(ag_universe(3));
  CHECK(s2.passed());
  CHECK(s2.checked == 112);  // 1 + 6 + 105 AG tables

  CHECK(check_intra_characterization(agli_universe(3)).passed());
  CHECK(check_equivalences(agli_universe(3)).passed());
  CHECK(check_weak_implies_regular(agli_universe(3)).passed());
  CHECK(check_ag_star_collapse(agstar_universe(3)).passed());
  CHECK(check_identity_consequences(ag_universe(3)).passed());
}

TEST_CASE("properties are pure: identical universes give identical results") {
  const auto a = check_equivalences(agli_universe(3));
  const auto b = check_equivalences(agli_universe(3));
  CHECK(a.checked == b.checked);
  CHECK(a.violation_count == b.violation_count);
  CHECK(a.property_id == b.property_id);
}

TEST_CASE("worker partitioning does not change any result") {
  for (int workers : {2, 4}) {
    const auto single = check_s_square(ag_universe(3), 1);
    const auto multi = check_s_square(ag_universe(3), workers);
    CHECK(single.checked == multi.checked);
    CHECK(single.violation_count == multi.violation_count);
  }
}

TEST_CASE("vacuous universe passes with zero checked") {
  // an order-1 universe assigned entirely to another partition is empty
  Universe u = ag_universe(1);
  u.constraints.worker_index = 3;
  u.constraints.worker_count = 4;
  const auto r = check_s_square(u);
  CHECK(r.passed());
  CHECK(r.checked == 0);
}

TEST_CASE("s_square converse search") {
  CHECK_THROWS_AS(check_s_square_converse(3, std::nullopt), std::invalid_argument);

  // nothing below order 3
  for (ClassKind k : kAllClassKinds) CHECK_FALSE(check_s_square_converse(2, k).has_value());

  // the least order-3 witness, frozen from the enumeration scan
  const auto w = check_s_square_converse(3, ClassKind::Regular);
  REQUIRE(w.has_value());
  CHECK(w->table() == std::vector<Element>{0, 0, 0, 0, 0, 1, 0, 1, 2});
  // re-validate: AG, S = S^2, not globally regular, own canonical form
  CHECK(is_left_invertive(*w));
  CHECK(square_set(*w).is_full());
  CHECK_FALSE(is_globally(*w, ClassKind::Regular));
  CHECK(canonical_form(*w) == w->table());

  // the bundled fixture itself qualifies as a witness for every kind
  const Magma example = example_fixture();
  CHECK(square_set(example).is_full());
  for (ClassKind k : kAllClassKinds) CHECK_FALSE(is_globally(example, k));
}

TEST_CASE("regular-but-not-weakly-regular search") {
  CHECK_FALSE(check_regular_not_weak(3).has_value());
  const auto w = check_regular_not_weak(4);
  REQUIRE(w.has_value());
  CHECK(w->table() ==
        std::vector<Element>{0, 0, 0, 0, 0, 0, 2, 2, 0, 1, 0, 1, 0, 1, 2, 3});
  CHECK(is_left_invertive(*w));
  CHECK_FALSE(left_identities(*w).empty());
  CHECK(is_globally(*w, ClassKind::Regular));
  CHECK_FALSE(is_globally(*w, ClassKind::WeaklyRegular));
}

TEST_CASE("exploratory: the characterization needs the left identity") {
  const auto r = check_intra_characterization(ag_universe(4));
  CHECK_FALSE(r.passed());
  CHECK(r.violation_count == 8);
  // every violation record re-validates against the stored magma
  for (const auto& v : r.violations) {
    const bool global_intra = is_globally(v.magma, ClassKind::IntraRegular);
    bool all_char = true;
    for (Element a = 0; a < v.magma.order(); ++a)
      if (!characterization_witness(v.magma, a)) {
        all_char = false;
        break;
      }
    CHECK(global_intra != all_char);
    REQUIRE(v.element.has_value());
    if (!global_intra) CHECK_FALSE(intra_regular_witness(v.magma, *v.element).has_value());
  }
}

TEST_CASE("example fixture verification") {
  const auto pass = verify_example_fixture();
  CHECK(pass.passed());
  CHECK(pass.checked == 1);

  const Magma fixture = example_fixture();
  CHECK(fixture.order() == 6);
  CHECK(fixture.labels().size() == 6);

  // labels stripped: identical verdict
  const Magma unlabeled(fixture.order(), fixture.table());
  CHECK(verify_fixture(unlabeled).passed());

  // one cell mutated (c*e changed d -> c): at least one assertion fails
  auto table = fixture.table();
  table[2 * 6 + 4] = 2;
  const auto fail = verify_fixture(Magma(6, table, fixture.labels()));
  CHECK_FALSE(fail.passed());
  for (const auto& v : fail.violations) CHECK_FALSE(v.detail.empty());
}

TEST_CASE("full suite") {
  HarnessOptions opts;
  opts.max_order = 2;
  const auto report = run_full_suite(opts);
  CHECK(report.all_passed());
  CHECK(report.pass_fail.size() == 7);
  CHECK(report.exploratory.empty());
  CHECK(report.searches.empty());

  opts.include_exploratory = true;
  const auto full = run_full_suite(opts);
  CHECK(full.all_passed());  // exploratory results never affect pass/fail
  CHECK(full.exploratory.size() == 2);
  CHECK(full.searches.size() == 8);

  // a corrupted fixture fails the suite through exactly the fixture property
  auto table = example_fixture().table();
  table[2 * 6 + 4] = 2;
  const auto bad = run_full_suite(opts, Magma(6, table));
  CHECK_FALSE(bad.all_passed());
  for (const auto& p : bad.pass_fail)
    if (p.property_id != "example_fixture") CHECK(p.passed());
}

TEST_CASE("universe iteration respects constraints") {
  std::size_t count = 0;
  for_each_in_universe(agli_universe(3), [&](const Magma& m) {
    ++count;
    CHECK(is_left_invertive(m));
    CHECK_FALSE(left_identities(m).empty());
  });
  CHECK(count == 35);  // 1 + 4 + 30
}
