#pragma once

// Exhaustive generation of Cayley tables of a given order under constraint
// sets, with optional isomorphism rejection.
//
// Two engines share one constraint vocabulary:
//   - enumerate_naive materializes every table by odometer (order <= 3) and
//     filters with the full predicates; it is the oracle.
//   - enumerate_backtracking fills cells one at a time and rejects a partial
//     table as soon as any fully determined instance of a required identity
//     fails. For any spec both engines can run, they emit the same table set.
//
// Both engines emit deterministically: row-major fill with ascending values
// yields tables in ascending row-major (odometer) order.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "ag/classify.hpp"
#include "ag/magma.hpp"

namespace ag {

struct EnumSpec {
  int order = 1;

  // Constraint set.
  bool require_ag = false;             // left invertive law
  bool require_ag_star = false;        // left invertive + (ab)c = b(ac)
  bool require_left_identity = false;  // some e with ex = x for all x
  std::optional<ClassKind> require_class;

  bool up_to_iso = false;  // keep only canonical representatives

  // Deterministic partitioning: tables whose first full row has rank r
  // (row 0 read as a base-n number) go to worker r mod worker_count.
  int worker_index = 0;
  int worker_count = 1;

  // Cell fill sequence for the backtracking engine; the column-major order
  // exists to cross-check counts independently of the default.
  enum class FillOrder { RowMajor, ColumnMajor };
  FillOrder fill_order = FillOrder::RowMajor;

  // Test knob: disable incremental identity pruning (complete tables are
  // then filtered by the full predicates instead).
  bool prune = true;
};

/// Receives each emitted magma; return false to stop the enumeration.
using MagmaSink = std::function<bool(const Magma&)>;

/// Oracle engine: odometer over all n^(n*n) tables. Throws
/// std::invalid_argument for order > 3.
void enumerate_naive(const EnumSpec& spec, const MagmaSink& sink);

/// Constraint-propagating backtracking engine, any order >= 1.
void enumerate_backtracking(const EnumSpec& spec, const MagmaSink& sink);

/// Convenience: collect the backtracking stream.
std::vector<Magma> enumerate_all(const EnumSpec& spec);

/// Convenience: count the backtracking stream without keeping tables.
std::uint64_t count_matching(const EnumSpec& spec);

// ---------------------------------------------------------------------------
// Isomorphism machinery.

/// Lexicographically least row-major flattening over all n! relabelings.
using CanonicalForm = std::vector<Element>;

/// Brute force over all relabelings; supported for order <= 7.
CanonicalForm canonical_form(const Magma& m);

/// The magma relabeled by a permutation: entry (perm[i], perm[j]) becomes
/// perm[i*j]. Labels are dropped (they are cosmetic).
Magma relabel(const Magma& m, std::span<const Element> perm);

/// Canonical-form equality; magmas of different order are simply not
/// isomorphic (no error).
bool are_isomorphic(const Magma& a, const Magma& b);

/// Golden-file line format: a canonical form as space-separated entries.
std::string canonical_form_to_line(const CanonicalForm& form);

/// Count, per class kind, the enumerated magmas whose global flag holds.
/// `constraints.order` is ignored in favor of `order`.
std::map<ClassKind, std::uint64_t> count_by_class(int order, EnumSpec constraints);

}  // namespace ag
