#include "ag/harness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ag {

namespace {

constexpr std::string_view kExampleFixtureText =
    "6\n"
    "a b c d e f\n"
    "a a a a a a\n"
    "a b b b b b\n"
    "a b f f d f\n"
    "a b f f c f\n"
    "a b c d e f\n"
    "a b f f f f\n";

void add_violation(PropertyResult& r, const Magma& m, std::optional<Element> element,
                   std::string detail) {
  ++r.violation_count;
  if (r.violations.size() < kMaxStoredViolations)
    r.violations.push_back(Violation{m, element, std::move(detail)});
}

void merge(PropertyResult& into, PropertyResult&& part) {
  into.checked += part.checked;
  into.violation_count += part.violation_count;
  for (auto& v : part.violations) {
    if (into.violations.size() >= kMaxStoredViolations) break;
    into.violations.push_back(std::move(v));
  }
}

// Evaluate `body(magma, result)` over every magma of the universe,
// distributing each order over deterministic partitions when workers > 1.
// Partition results merge in worker order, so output is stable.
PropertyResult run_property(std::string id, const Universe& u, int workers,
                            const std::function<void(const Magma&, PropertyResult&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  PropertyResult total;
  total.property_id = std::move(id);
  total.universe = u.description;
  if (workers > 1 && u.constraints.worker_count != 1)
    throw std::invalid_argument("run_property: universe is already partitioned");
  for (int order = u.min_order; order <= u.max_order; ++order) {
    EnumSpec spec = u.constraints;
    spec.order = order;
    if (workers <= 1) {
      enumerate_backtracking(spec, [&](const Magma& m) {
        ++total.checked;
        body(m, total);
        return true;
      });
    } else {
      std::vector<PropertyResult> parts(workers);
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          EnumSpec part_spec = spec;
          part_spec.worker_index = w;
          part_spec.worker_count = workers;
          enumerate_backtracking(part_spec, [&](const Magma& m) {
            ++parts[w].checked;
            body(m, parts[w]);
            return true;
          });
        });
      }
      for (auto& t : pool) t.join();
      for (auto& part : parts) merge(total, std::move(part));
    }
  }
  total.elapsed = std::chrono::steady_clock::now() - start;
  return total;
}

std::string flags_string(const std::array<bool, 7>& flags) {
  std::ostringstream out;
  bool first = true;
  for (ClassKind k : kAllClassKinds) {
    if (!first) out << ' ';
    first = false;
    out << class_kind_name(k) << '=' << (flags[static_cast<int>(k)] ? '1' : '0');
  }
  return out.str();
}

std::array<bool, 7> global_flags(const Magma& m) {
  std::array<bool, 7> flags{};
  for (ClassKind k : kAllClassKinds) flags[static_cast<int>(k)] = is_globally(m, k);
  return flags;
}

}  // namespace

void for_each_in_universe(const Universe& u, const std::function<void(const Magma&)>& fn) {
  for (int order = u.min_order; order <= u.max_order; ++order) {
    EnumSpec spec = u.constraints;
    spec.order = order;
    enumerate_backtracking(spec, [&](const Magma& m) {
      fn(m);
      return true;
    });
  }
}

PropertyResult check_s_square(const Universe& u, int workers) {
  return run_property("s_square", u, workers, [](const Magma& m, PropertyResult& r) {
    bool in_some_class = false;
    for (ClassKind k : kAllClassKinds)
      if (is_globally(m, k)) {
        in_some_class = true;
        break;
      }
    if (in_some_class && !square_set(m).is_full())
      add_violation(r, m, std::nullopt, "class member with S != S^2");
  });
}

std::optional<Magma> check_s_square_converse(int max_order, std::optional<ClassKind> kind) {
  if (!kind)
    throw std::invalid_argument("check_s_square_converse: a class kind must be named");
  for (int order = 1; order <= max_order; ++order) {
    std::optional<CanonicalForm> best;
    EnumSpec spec;
    spec.order = order;
    spec.require_ag = true;
    enumerate_backtracking(spec, [&](const Magma& m) {
      if (!square_set(m).is_full() || is_globally(m, *kind)) return true;
      CanonicalForm form = canonical_form(m);
      if (!best || form < *best) best = std::move(form);
      return true;
    });
    if (best) return Magma(order, *best);
  }
  return std::nullopt;
}

PropertyResult check_intra_characterization(const Universe& u, int workers) {
  return run_property("intra_characterization", u, workers,
                      [](const Magma& m, PropertyResult& r) {
    const bool global_intra = is_globally(m, ClassKind::IntraRegular);
    std::optional<Element> missing_char;
    for (Element a = 0; a < m.order(); ++a)
      if (!characterization_witness(m, a)) {
        missing_char = a;
        break;
      }
    if (global_intra && missing_char)
      add_violation(r, m, missing_char, "intra-regular but element has no (x,z) witness");
    if (!global_intra && !missing_char) {
      Element missing_intra = 0;
      for (Element a = 0; a < m.order(); ++a)
        if (!intra_regular_witness(m, a)) {
          missing_intra = a;
          break;
        }
      add_violation(r, m, missing_intra,
                    "every element has an (x,z) witness but magma is not intra-regular");
    }
  });
}

PropertyResult check_equivalences(const Universe& u, int workers) {
  return run_property("equivalences", u, workers, [](const Magma& m, PropertyResult& r) {
    const auto flags = global_flags(m);
    const bool weak = flags[static_cast<int>(ClassKind::WeaklyRegular)];
    for (ClassKind k : {ClassKind::IntraRegular, ClassKind::RightRegular, ClassKind::LeftRegular,
                        ClassKind::LeftQuasiRegular, ClassKind::CompletelyRegular})
      if (flags[static_cast<int>(k)] != weak) {
        add_violation(r, m, std::nullopt, "class flags disagree: " + flags_string(flags));
        return;
      }
  });
}

PropertyResult check_weak_implies_regular(const Universe& u, int workers) {
  return run_property("weak_implies_regular", u, workers, [](const Magma& m, PropertyResult& r) {
    if (is_globally(m, ClassKind::WeaklyRegular) && !is_globally(m, ClassKind::Regular))
      add_violation(r, m, std::nullopt, "weakly regular but not regular");
  });
}

std::optional<Magma> check_regular_not_weak(int max_order) {
  for (int order = 1; order <= max_order; ++order) {
    std::optional<CanonicalForm> best;
    EnumSpec spec;
    spec.order = order;
    spec.require_ag = true;
    spec.require_left_identity = true;
    enumerate_backtracking(spec, [&](const Magma& m) {
      if (!is_globally(m, ClassKind::Regular) || is_globally(m, ClassKind::WeaklyRegular))
        return true;
      CanonicalForm form = canonical_form(m);
      if (!best || form < *best) best = std::move(form);
      return true;
    });
    if (best) return Magma(order, *best);
  }
  return std::nullopt;
}

PropertyResult check_ag_star_collapse(const Universe& u, int workers) {
  return run_property("ag_star_collapse", u, workers, [](const Magma& m, PropertyResult& r) {
    const bool comm = is_commutative(m);
    const bool assoc = is_associative(m);
    if (square_set(m).is_full() && !(comm && assoc))
      add_violation(r, m, std::nullopt, "S = S^2 but not a commutative semigroup");
    for (ClassKind k : kAllClassKinds)
      if (is_globally(m, k) && !(comm && assoc)) {
        add_violation(r, m, std::nullopt,
                      std::string("globally ") + std::string(class_kind_name(k)) +
                          " but not a commutative semigroup");
        return;
      }
  });
}

PropertyResult check_identity_consequences(const Universe& u, int workers) {
  return run_property("identity_consequences", u, workers, [](const Magma& m, PropertyResult& r) {
    if (!is_medial(m)) add_violation(r, m, std::nullopt, "AG magma that is not medial");
    const auto lids = left_identities(m);
    if (lids.size() > 1)
      add_violation(r, m, std::nullopt, "more than one left identity");
    if (!lids.empty()) {
      if (!is_paramedial(m))
        add_violation(r, m, std::nullopt, "left identity but not paramedial");
      if (!satisfies_law4(m))
        add_violation(r, m, std::nullopt, "left identity but a(bc) = b(ac) fails");
    }
    if (!right_identities(m).empty() && !(is_commutative(m) && is_associative(m)))
      add_violation(r, m, std::nullopt, "right identity but not a commutative semigroup");
  });
}

Magma example_fixture() { return parse_magma(kExampleFixtureText); }

PropertyResult verify_fixture(const Magma& m) {
  const auto start = std::chrono::steady_clock::now();
  PropertyResult r;
  r.property_id = "example_fixture";
  r.universe = "bundled fixture";
  r.checked = 1;

  if (!is_left_invertive(m)) add_violation(r, m, std::nullopt, "fixture is not left invertive");
  const Element e = 4;  // the fixture's left identity position
  if (left_identities(m) != std::vector<Element>{e})
    add_violation(r, m, e, "left identities are not exactly {e}");
  if (!square_set(m).is_full()) add_violation(r, m, std::nullopt, "S != S^2");

  const Element d = 3;
  if (d < m.order()) {
    for (ClassKind k : kAllClassKinds)
      if (class_witness(m, k, d))
        add_violation(r, m, d, std::string("element d has a ") +
                                   std::string(class_kind_name(k)) + " witness");
  } else {
    add_violation(r, m, std::nullopt, "fixture too small to contain element d");
  }
  for (ClassKind k : kAllClassKinds)
    if (is_globally(m, k))
      add_violation(r, m, std::nullopt,
                    std::string("fixture is globally ") + std::string(class_kind_name(k)));

  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

PropertyResult verify_example_fixture() { return verify_fixture(example_fixture()); }

HarnessReport run_full_suite(const HarnessOptions& opts) {
  return run_full_suite(opts, example_fixture());
}

HarnessReport run_full_suite(const HarnessOptions& opts, const Magma& fixture) {
  if (opts.max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  HarnessReport report;

  Universe ag_universe;
  ag_universe.min_order = 1;
  ag_universe.max_order = opts.max_order;
  ag_universe.constraints.require_ag = true;
  ag_universe.description = "AG orders 1-" + std::to_string(opts.max_order);

  Universe agli_universe = ag_universe;
  agli_universe.constraints.require_left_identity = true;
  agli_universe.description = "AG+left-identity orders 1-" + std::to_string(opts.max_order);

  Universe agstar_universe;
  agstar_universe.min_order = 1;
  agstar_universe.max_order = opts.max_order;
  agstar_universe.constraints.require_ag_star = true;
  agstar_universe.description = "AG* orders 1-" + std::to_string(opts.max_order);

  report.pass_fail.push_back(check_s_square(ag_universe, opts.workers));
  report.pass_fail.push_back(check_intra_characterization(agli_universe, opts.workers));
  report.pass_fail.push_back(check_equivalences(agli_universe, opts.workers));
  report.pass_fail.push_back(check_weak_implies_regular(agli_universe, opts.workers));
  report.pass_fail.push_back(check_ag_star_collapse(agstar_universe, opts.workers));
  report.pass_fail.push_back(check_identity_consequences(ag_universe, opts.workers));
  report.pass_fail.push_back(verify_fixture(fixture));

  if (opts.include_exploratory) {
    auto no_li_intra = check_intra_characterization(ag_universe, opts.workers);
    no_li_intra.property_id = "intra_characterization_no_left_identity";
    report.exploratory.push_back(std::move(no_li_intra));

    auto no_li_equiv = check_equivalences(ag_universe, opts.workers);
    no_li_equiv.property_id = "equivalences_no_left_identity";
    report.exploratory.push_back(std::move(no_li_equiv));

    for (ClassKind k : kAllClassKinds) {
      SearchResult s;
      s.property_id = std::string("s_square_converse_") + std::string(class_kind_name(k));
      s.witness = check_s_square_converse(opts.max_order, k);
      s.note = s.witness ? "witness found: S = S^2 but not globally in class"
                         : "no witness up to order " + std::to_string(opts.max_order);
      report.searches.push_back(std::move(s));
    }

    SearchResult rnw;
    rnw.property_id = "regular_not_weakly_regular";
    rnw.witness = check_regular_not_weak(opts.max_order);
    rnw.note = rnw.witness
                   ? "witness found: regular but not weakly regular (with left identity)"
                   : "no witness up to order " + std::to_string(opts.max_order) +
                         "; evidence only, not asserted as ground truth";
    report.searches.push_back(std::move(rnw));
  }

  return report;
}

}  // namespace ag
