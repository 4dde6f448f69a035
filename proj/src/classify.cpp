#include "ag/classify.hpp"

#include <stdexcept>

namespace ag {

std::string_view class_kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::Regular: return "regular";
    case ClassKind::WeaklyRegular: return "weakly_regular";
    case ClassKind::IntraRegular: return "intra_regular";
    case ClassKind::RightRegular: return "right_regular";
    case ClassKind::LeftRegular: return "left_regular";
    case ClassKind::LeftQuasiRegular: return "left_quasi_regular";
    case ClassKind::CompletelyRegular: return "completely_regular";
  }
  throw std::invalid_argument("unknown ClassKind");
}

std::optional<ClassKind> class_kind_from_name(std::string_view name) {
  for (ClassKind k : kAllClassKinds)
    if (class_kind_name(k) == name) return k;
  return std::nullopt;
}

std::optional<Element> regular_witness(const Magma& m, Element a) {
  const int n = m.order();
  if (a < 0 || a >= n) throw std::out_of_range("regular_witness: element out of range");
  for (Element x = 0; x < n; ++x)
    if (m(m(a, x), a) == a) return x;
  return std::nullopt;
}

std::optional<std::pair<Element, Element>> weakly_regular_witness(const Magma& m, Element a) {
  const int n = m.order();
  if (a < 0 || a >= n) throw std::out_of_range("weakly_regular_witness: element out of range");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (m(m(a, x), m(a, y)) == a) return std::pair{x, y};
  return std::nullopt;
}

std::optional<std::pair<Element, Element>> intra_regular_witness(const Magma& m, Element a) {
  const int n = m.order();
  if (a < 0 || a >= n) throw std::out_of_range("intra_regular_witness: element out of range");
  const Element aa = m(a, a);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (m(m(x, aa), y) == a) return std::pair{x, y};
  return std::nullopt;
}

std::optional<Element> right_regular_witness(const Magma& m, Element a) {
  const int n = m.order();
  if (a < 0 || a >= n) throw std::out_of_range("right_regular_witness: element out of range");
  const Element aa = m(a, a);
  for (Element x = 0; x < n; ++x)
    if (m(aa, x) == a) return x;
  return std::nullopt;
}

std::optional<Element> left_regular_witness(const Magma& m, Element a) {
  const int n = m.order();
  if (a < 0 || a >= n) throw std::out_of_range("left_regular_witness: element out of range");
  const Element aa = m(a, a);
  for (Element x = 0; x < n; ++x)
    if (m(x, aa) == a) return x;
  return std::nullopt;
}

std::optional<std::pair<Element, Element>> left_quasi_regular_witness(const Magma& m, Element a) {
  const int n = m.order();
  if (a < 0 || a >= n)
    throw std::out_of_range("left_quasi_regular_witness: element out of range");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (m(m(x, a), m(y, a)) == a) return std::pair{x, y};
  return std::nullopt;
}

CompletelyRegularResult completely_regular(const Magma& m, Element a) {
  CompletelyRegularResult r;
  r.regular_x = regular_witness(m, a);
  r.left_x = left_regular_witness(m, a);
  r.right_x = right_regular_witness(m, a);
  r.holds = r.regular_x && r.left_x && r.right_x;
  return r;
}

std::optional<std::pair<Element, Element>> characterization_witness(const Magma& m, Element a) {
  const int n = m.order();
  if (a < 0 || a >= n)
    throw std::out_of_range("characterization_witness: element out of range");
  for (Element x = 0; x < n; ++x)
    for (Element z = 0; z < n; ++z)
      if (m(m(x, a), m(a, z)) == a) return std::pair{x, z};
  return std::nullopt;
}

std::optional<Witness> class_witness(const Magma& m, ClassKind kind, Element a) {
  auto one = [&](std::optional<Element> x) -> std::optional<Witness> {
    if (!x) return std::nullopt;
    return Witness{kind, a, {*x}};
  };
  auto two = [&](std::optional<std::pair<Element, Element>> xy) -> std::optional<Witness> {
    if (!xy) return std::nullopt;
    return Witness{kind, a, {xy->first, xy->second}};
  };
  switch (kind) {
    case ClassKind::Regular: return one(regular_witness(m, a));
    case ClassKind::WeaklyRegular: return two(weakly_regular_witness(m, a));
    case ClassKind::IntraRegular: return two(intra_regular_witness(m, a));
    case ClassKind::RightRegular: return one(right_regular_witness(m, a));
    case ClassKind::LeftRegular: return one(left_regular_witness(m, a));
    case ClassKind::LeftQuasiRegular: return two(left_quasi_regular_witness(m, a));
    case ClassKind::CompletelyRegular: {
      auto r = completely_regular(m, a);
      if (!r.holds) return std::nullopt;
      return Witness{kind, a, {*r.regular_x, *r.left_x, *r.right_x}};
    }
  }
  throw std::invalid_argument("unknown ClassKind");
}

bool witness_holds(const Magma& m, const Witness& w) {
  const Element a = w.element;
  const auto& p = w.params;
  switch (w.kind) {
    case ClassKind::Regular:
      return p.size() == 1 && m(m(a, p[0]), a) == a;
    case ClassKind::WeaklyRegular:
      return p.size() == 2 && m(m(a, p[0]), m(a, p[1])) == a;
    case ClassKind::IntraRegular:
      return p.size() == 2 && m(m(p[0], m(a, a)), p[1]) == a;
    case ClassKind::RightRegular:
      return p.size() == 1 && m(m(a, a), p[0]) == a;
    case ClassKind::LeftRegular:
      return p.size() == 1 && m(p[0], m(a, a)) == a;
    case ClassKind::LeftQuasiRegular:
      return p.size() == 2 && m(m(p[0], a), m(p[1], a)) == a;
    case ClassKind::CompletelyRegular:
      return p.size() == 3 && m(m(a, p[0]), a) == a && m(p[1], m(a, a)) == a &&
             m(m(a, a), p[2]) == a;
  }
  return false;
}

bool is_globally(const Magma& m, ClassKind kind) {
  const int n = m.order();
  for (Element a = 0; a < n; ++a)
    if (!class_witness(m, kind, a)) return false;
  return true;
}

ClassReport classify(const Magma& m) {
  const int n = m.order();
  ClassReport report;
  for (ClassKind kind : kAllClassKinds) {
    ClassStatus& status = report[kind];
    status.witnesses.resize(n);
    status.holds_globally = true;
    for (Element a = 0; a < n; ++a) {
      status.witnesses[a] = class_witness(m, kind, a);
      if (!status.witnesses[a] && status.holds_globally) {
        status.holds_globally = false;
        status.first_failing = a;
      }
    }
  }
  return report;
}

}  // namespace ag
