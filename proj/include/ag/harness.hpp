#pragma once

// Executable form of the structural results: each statement becomes a
// property checked over an enumerated universe of magmas, with violations
// carried as re-checkable evidence (magma + element + detail).
//
// Statements whose hypotheses include a left identity are pass/fail only on
// left-identity universes; the same property on a wider universe is an
// exploratory run, recorded but never failing the suite.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ag/classify.hpp"
#include "ag/enumerate.hpp"
#include "ag/magma.hpp"

namespace ag {

/// The quantifier domain of one property: all magmas of the given orders
/// matching the constraint set.
struct Universe {
  int min_order = 1;
  int max_order = 1;
  EnumSpec constraints;  // order field is overridden while iterating
  std::string description;
};

struct Violation {
  Magma magma;
  std::optional<Element> element;
  std::string detail;
};

struct PropertyResult {
  std::string property_id;
  std::string universe;
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;       // total found
  std::vector<Violation> violations;       // first kMaxStoredViolations of them
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return violation_count == 0; }
};

inline constexpr std::size_t kMaxStoredViolations = 100;

/// Apply `fn` to every magma of the universe. worker_count > 1 splits each
/// order into deterministic partitions evaluated concurrently; results must
/// be merged by the caller per partition (see run_property in the .cpp).
void for_each_in_universe(const Universe& u, const std::function<void(const Magma&)>& fn);

// --- Properties -------------------------------------------------------------

/// Every magma of the universe that is globally in any of the seven classes
/// has S = S^2.
PropertyResult check_s_square(const Universe& u, int workers = 1);

/// Search for an AG-groupoid with S = S^2 that is not globally in `kind`
/// (least order first, then least canonical form; the returned magma is its
/// own canonical representative). The kind is mandatory.
std::optional<Magma> check_s_square_converse(int max_order, std::optional<ClassKind> kind);

/// Global intra-regularity coincides with every element having an (x,z)
/// with (xa)(az) = a.
PropertyResult check_intra_characterization(const Universe& u, int workers = 1);

/// The six global flags weakly / intra / right / left / left-quasi /
/// completely regular are pairwise equal.
PropertyResult check_equivalences(const Universe& u, int workers = 1);

/// Global weak regularity implies global regularity.
PropertyResult check_weak_implies_regular(const Universe& u, int workers = 1);

/// Search for an AG-groupoid with left identity that is globally regular but
/// not globally weakly regular. Reported as evidence either way.
std::optional<Magma> check_regular_not_weak(int max_order);

/// Over AG* magmas: S = S^2 implies commutative + associative, and global
/// membership in any class implies commutative + associative.
PropertyResult check_ag_star_collapse(const Universe& u, int workers = 1);

/// Over AG magmas: medial always; with a left identity also paramedial and
/// a(bc) = b(ac); at most one left identity; a right identity forces a
/// commutative semigroup.
PropertyResult check_identity_consequences(const Universe& u, int workers = 1);

// --- Fixture ----------------------------------------------------------------

/// The bundled six-element example table (labels a..f, left identity e).
Magma example_fixture();

/// Assertions on any candidate fixture table: left invertive; left identity
/// exactly {e}; S = S^2; element d in no class per element or globally.
PropertyResult verify_fixture(const Magma& m);

/// verify_fixture on the bundled table.
PropertyResult verify_example_fixture();

// --- Suite ------------------------------------------------------------------

struct HarnessOptions {
  int max_order = 4;
  int workers = 1;
  bool include_exploratory = false;
};

struct SearchResult {
  std::string property_id;
  std::optional<Magma> witness;
  std::string note;
};

struct HarnessReport {
  std::vector<PropertyResult> pass_fail;
  std::vector<PropertyResult> exploratory;
  std::vector<SearchResult> searches;

  bool all_passed() const {
    for (const auto& r : pass_fail)
      if (!r.passed()) return false;
    return true;
  }
};

/// The full suite: every pass/fail property over orders 1..max_order plus
/// the fixture check; exploratory variants and counterexample searches are
/// included on request and never affect pass/fail.
HarnessReport run_full_suite(const HarnessOptions& opts);

/// Same suite but with the fixture table replaced by `fixture` (used by the
/// CLI mutation mode and the mutation-control tests).
HarnessReport run_full_suite(const HarnessOptions& opts, const Magma& fixture);

}  // namespace ag
