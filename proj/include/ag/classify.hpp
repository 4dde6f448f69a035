#pragma once

// Per-element and whole-magma membership in the seven regularity classes,
// with explicit witnesses. Witness search is exhaustive and returns the
// lexicographically least parameter tuple in row-major order, so output is
// a pure function of the table. None of this assumes the magma is AG; the
// theorem harness applies AG filters where a statement needs them.

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ag/magma.hpp"

namespace ag {

enum class ClassKind {
  Regular,            // a = (ax)a
  WeaklyRegular,      // a = (ax)(ay)
  IntraRegular,       // a = (x(aa))y
  RightRegular,       // a = (aa)x
  LeftRegular,        // a = x(aa)
  LeftQuasiRegular,   // a = (xa)(ya)
  CompletelyRegular,  // regular and left and right regular
};

inline constexpr std::array<ClassKind, 7> kAllClassKinds{
    ClassKind::Regular,       ClassKind::WeaklyRegular,    ClassKind::IntraRegular,
    ClassKind::RightRegular,  ClassKind::LeftRegular,      ClassKind::LeftQuasiRegular,
    ClassKind::CompletelyRegular};

std::string_view class_kind_name(ClassKind k);
std::optional<ClassKind> class_kind_from_name(std::string_view name);

/// A class membership certificate: substituting `params` into the kind's
/// defining equation at `element` reproduces the element exactly.
/// `params` holds (x), (x,y), or, for CompletelyRegular, the three component
/// witnesses (regular x, left-regular x, right-regular x).
struct Witness {
  ClassKind kind;
  Element element;
  std::vector<Element> params;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Independent re-evaluation of a witness against its defining equation.
bool witness_holds(const Magma& m, const Witness& w);

std::optional<Element> regular_witness(const Magma& m, Element a);
std::optional<std::pair<Element, Element>> weakly_regular_witness(const Magma& m, Element a);
std::optional<std::pair<Element, Element>> intra_regular_witness(const Magma& m, Element a);
std::optional<Element> right_regular_witness(const Magma& m, Element a);
std::optional<Element> left_regular_witness(const Magma& m, Element a);
std::optional<std::pair<Element, Element>> left_quasi_regular_witness(const Magma& m, Element a);

struct CompletelyRegularResult {
  bool holds = false;
  std::optional<Element> regular_x;
  std::optional<Element> left_x;
  std::optional<Element> right_x;
};

/// Evaluated from the three component predicates, matching the compound
/// definition; holds iff all three witnesses exist.
CompletelyRegularResult completely_regular(const Magma& m, Element a);

/// Least (x,z) with (xa)(az) = a, the alternate intra-regularity form used
/// by the characterization theorem.
std::optional<std::pair<Element, Element>> characterization_witness(const Magma& m, Element a);

/// Unified witness lookup for one kind at one element.
std::optional<Witness> class_witness(const Magma& m, ClassKind kind, Element a);

/// Short-circuiting global membership test (stops at the first failing
/// element); used for enumeration-scale filtering.
bool is_globally(const Magma& m, ClassKind kind);

struct ClassStatus {
  bool holds_globally = false;
  std::vector<std::optional<Witness>> witnesses;  // one slot per element
  std::optional<Element> first_failing;           // least element with no witness
};

struct ClassReport {
  std::array<ClassStatus, 7> by_kind;

  const ClassStatus& operator[](ClassKind k) const { return by_kind[static_cast<int>(k)]; }
  ClassStatus& operator[](ClassKind k) { return by_kind[static_cast<int>(k)]; }
};

/// Full per-kind, per-element classification with least witnesses.
ClassReport classify(const Magma& m);

}  // namespace ag
