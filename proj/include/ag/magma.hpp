#pragma once

// Finite magmas as Cayley tables, plus the identity predicates and
// structural probes used throughout the toolkit.
//
// Elements are dense indices 0..n-1; display labels are cosmetic metadata.
// The table is row-major and entry (i, j) is the product i*j with i the
// left factor (row = left operand).

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ag {

using Element = int;

/// Error raised by the table parsers; line/column are 1-based and refer to
/// the offending token in the source text (or table coordinates for JSON).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Subset of the elements of a magma of a given order, bitset semantics.
/// Orders up to 64 are supported, far beyond anything enumerable here.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int order) : order_(order) {
    if (order < 0 || order > 64) throw std::invalid_argument("ElementSet: order out of range");
  }

  int order() const { return order_; }

  void insert(Element x) {
    check(x);
    bits_ |= std::uint64_t{1} << x;
  }

  bool contains(Element x) const {
    check(x);
    return (bits_ >> x) & 1u;
  }

  int count() const { return __builtin_popcountll(bits_); }

  /// True iff the set is all of 0..order-1.
  bool is_full() const { return count() == order_; }

  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    for (Element x = 0; x < order_; ++x)
      if (contains(x)) out.push_back(x);
    return out;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  void check(Element x) const {
    if (x < 0 || x >= order_) throw std::out_of_range("ElementSet: element out of range");
  }

  int order_ = 0;
  std::uint64_t bits_ = 0;
};

/// A finite magma: order n plus an n x n Cayley table. Immutable after
/// construction; values are safe to share across threads.
class Magma {
 public:
  /// `table` is row-major with n*n entries in 0..n-1. `labels`, when
  /// non-empty, must hold n pairwise distinct display symbols.
  Magma(int order, std::vector<Element> table, std::vector<std::string> labels = {});

  int order() const { return order_; }

  /// Unchecked table lookup for hot loops.
  Element operator()(Element a, Element b) const { return table_[a * order_ + b]; }

  /// Bounds-checked product; throws std::out_of_range on invalid elements.
  Element product(Element a, Element b) const;

  const std::vector<Element>& table() const { return table_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Display name of an element: its label when present, else its index.
  std::string label_of(Element x) const;

  /// Table + order + labels equality (labels are part of the value for
  /// round-trip purposes; structural comparisons should use canonical forms).
  friend bool operator==(const Magma&, const Magma&) = default;

 private:
  int order_;
  std::vector<Element> table_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Parsing and serialization.
//
// Text format:   line 1 = order n; optional line 2 = n whitespace-separated
//                labels; then n lines of n entries (labels or indices).
// JSON format:   object with "order", optional "elements", and "table" as
//                n arrays of n indices.
// Both formats round-trip bit-exactly through parse/serialize.

enum class TableFormat { Text, Json };

/// Parse either format, auto-detected: a leading '{' selects JSON.
Magma parse_magma(std::string_view text);
Magma parse_magma(std::string_view text, TableFormat format);
std::string serialize_magma(const Magma& m, TableFormat format = TableFormat::Text);

// ---------------------------------------------------------------------------
// Identity predicates. All are exhaustive scans (n^3 or n^4); the *_failure
// variants return the lexicographically least failing tuple, if any, for
// reproducible counterexample reporting.

struct TripleWitness {
  Element a, b, c;
  friend bool operator==(const TripleWitness&, const TripleWitness&) = default;
};

struct QuadWitness {
  Element a, b, c, d;
  friend bool operator==(const QuadWitness&, const QuadWitness&) = default;
};

/// Left invertive law: (ab)c = (cb)a.
std::optional<TripleWitness> left_invertive_failure(const Magma& m);
bool is_left_invertive(const Magma& m);

/// Medial law: (ab)(cd) = (ac)(bd).
std::optional<QuadWitness> medial_failure(const Magma& m);
bool is_medial(const Magma& m);

/// Paramedial law: (ab)(cd) = (dc)(ba).
std::optional<QuadWitness> paramedial_failure(const Magma& m);
bool is_paramedial(const Magma& m);

/// a(bc) = b(ac).
std::optional<TripleWitness> law4_failure(const Magma& m);
bool satisfies_law4(const Magma& m);

/// The identity (ab)c = b(ac) on its own.
std::optional<TripleWitness> star_identity_failure(const Magma& m);

/// AG*: left invertive together with (ab)c = b(ac).
bool is_ag_star(const Magma& m);

/// (x1 x2)(x3 x4) is invariant under all 24 permutations of the arguments.
std::optional<QuadWitness> permutation_identity_failure(const Magma& m);
bool satisfies_permutation_identity(const Magma& m);

bool is_commutative(const Magma& m);
bool is_associative(const Magma& m);

/// All e with e*x = x for every x, ascending. At most one exists in a
/// left invertive magma.
std::vector<Element> left_identities(const Magma& m);

/// All e with x*e = x for every x, ascending.
std::vector<Element> right_identities(const Magma& m);

/// The set of all products { x*y }.
ElementSet square_set(const Magma& m);

/// One-stop structural report; every flag agrees with the predicate of the
/// same name above.
struct StructureReport {
  bool is_left_invertive = false;
  bool is_medial = false;
  bool is_paramedial = false;
  bool satisfies_law4 = false;
  bool is_ag_star = false;
  bool satisfies_permutation_identity = false;
  bool is_commutative = false;
  bool is_associative = false;
  std::vector<Element> left_identities;
  std::vector<Element> right_identities;
  ElementSet square;
  bool s_equals_s2 = false;
};

StructureReport probe(const Magma& m);

}  // namespace ag
