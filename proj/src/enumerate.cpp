#include "ag/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ag {

namespace {

void validate_spec(const EnumSpec& spec) {
  if (spec.order < 1) throw std::invalid_argument("EnumSpec: order must be >= 1");
  if (spec.worker_count < 1) throw std::invalid_argument("EnumSpec: worker_count must be >= 1");
  if (spec.worker_index < 0 || spec.worker_index >= spec.worker_count)
    throw std::invalid_argument("EnumSpec: worker_index out of range");
}

std::uint64_t first_row_rank(std::span<const Element> table, int n) {
  std::uint64_t r = 0;
  for (int j = 0; j < n; ++j) r = r * static_cast<std::uint64_t>(n) + table[j];
  return r;
}

bool passes_constraints(const EnumSpec& spec, const Magma& m) {
  if ((spec.require_ag || spec.require_ag_star) && !is_left_invertive(m)) return false;
  if (spec.require_ag_star && star_identity_failure(m)) return false;
  if (spec.require_left_identity && left_identities(m).empty()) return false;
  if (spec.require_class && !is_globally(m, *spec.require_class)) return false;
  return true;
}

bool is_canonical_representative(const Magma& m) { return m.table() == canonical_form(m); }

}  // namespace

void enumerate_naive(const EnumSpec& spec, const MagmaSink& sink) {
  validate_spec(spec);
  if (spec.order > 3)
    throw std::invalid_argument("enumerate_naive: order too large for the oracle engine (max 3)");
  const int n = spec.order;
  const int cells = n * n;
  std::vector<Element> table(cells, 0);
  for (;;) {
    if (spec.worker_count == 1 ||
        first_row_rank(table, n) % spec.worker_count ==
            static_cast<std::uint64_t>(spec.worker_index)) {
      Magma m(n, table);
      if (passes_constraints(spec, m) && (!spec.up_to_iso || is_canonical_representative(m)))
        if (!sink(m)) return;
    }
    // Odometer increment, last cell least significant.
    int i = cells - 1;
    while (i >= 0 && table[i] == n - 1) table[i--] = 0;
    if (i < 0) return;
    ++table[i];
  }
}

namespace {

// Backtracking search state. After each cell assignment the engine checks
// exactly those identity instances whose required products all just became
// determined; a violated instance kills the subtree.
class Backtracker {
 public:
  Backtracker(const EnumSpec& spec, const MagmaSink& sink)
      : spec_(spec), sink_(sink), n_(spec.order), table_(n_ * n_, -1), row_bad_(n_, 0) {
    alive_rows_ = n_;
    fill_sequence_.resize(n_ * n_);
    for (int k = 0; k < n_ * n_; ++k)
      fill_sequence_[k] =
          spec.fill_order == EnumSpec::FillOrder::RowMajor ? k : (k % n_) * n_ + k / n_;
    check_li_ = spec.require_ag || spec.require_ag_star;
    check_star_ = spec.require_ag_star;
  }

  void run() { fill(0, 0); }

 private:
  // Lazily evaluate the left invertive instance (a,b,c): true unless all
  // four lookups are determined and the instance fails.
  bool li_instance_ok(int a, int b, int c) const {
    const int ab = table_[a * n_ + b];
    if (ab < 0) return true;
    const int lhs = table_[ab * n_ + c];
    if (lhs < 0) return true;
    const int cb = table_[c * n_ + b];
    if (cb < 0) return true;
    const int rhs = table_[cb * n_ + a];
    if (rhs < 0) return true;
    return lhs == rhs;
  }

  // Same for the (ab)c = b(ac) instance.
  bool star_instance_ok(int a, int b, int c) const {
    const int ab = table_[a * n_ + b];
    if (ab < 0) return true;
    const int lhs = table_[ab * n_ + c];
    if (lhs < 0) return true;
    const int ac = table_[a * n_ + c];
    if (ac < 0) return true;
    const int rhs = table_[b * n_ + ac];
    if (rhs < 0) return true;
    return lhs == rhs;
  }

  // Instances that can become determined by filling cell (x,y): the cell in
  // role (a,b) or (c,b) of the outer products, or in role of either nested
  // product, located by scanning the pairs whose product equals the row.
  bool li_ok_after(int x, int y) const {
    for (int c = 0; c < n_; ++c)
      if (!li_instance_ok(x, y, c)) return false;
    for (int a = 0; a < n_; ++a)
      if (!li_instance_ok(a, y, x)) return false;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (table_[a * n_ + b] != x) continue;
        if (!li_instance_ok(a, b, y)) return false;  // (ab, c) == (x, y)
        if (!li_instance_ok(y, b, a)) return false;  // (cb, a) == (x, y)
      }
    return true;
  }

  bool star_ok_after(int x, int y) const {
    for (int c = 0; c < n_; ++c)
      if (!star_instance_ok(x, y, c)) return false;
    for (int b = 0; b < n_; ++b)
      if (!star_instance_ok(x, b, y)) return false;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (table_[a * n_ + b] == x && !star_instance_ok(a, b, y)) return false;  // (ab, c)
        if (table_[a * n_ + b] == y && !star_instance_ok(a, x, b)) return false;  // (b, ac)
      }
    return true;
  }

  void leaf() {
    Magma m(n_, table_);
    if (!spec_.prune) {
      if ((spec_.require_ag || spec_.require_ag_star) && !is_left_invertive(m)) return;
      if (spec_.require_ag_star && star_identity_failure(m)) return;
    }
    // alive_rows_ counts rows r with every filled (r,c) == c; on a complete
    // table those rows are exactly the left identities.
    if (spec_.require_left_identity && alive_rows_ == 0) return;
    if (spec_.require_class && !is_globally(m, *spec_.require_class)) return;
    if (spec_.up_to_iso && !is_canonical_representative(m)) return;
    if (!sink_(m)) stopped_ = true;
  }

  void fill(int k, int row0_filled) {
    if (stopped_) return;
    if (k == n_ * n_) {
      leaf();
      return;
    }
    const int cell = fill_sequence_[k];
    const int x = cell / n_;
    const int y = cell % n_;
    const int next_row0 = row0_filled + (x == 0 ? 1 : 0);
    for (int v = 0; v < n_ && !stopped_; ++v) {
      table_[cell] = v;
      bool ok = true;
      if (spec_.prune) {
        if (check_li_) ok = li_ok_after(x, y);
        if (ok && check_star_) ok = star_ok_after(x, y);
      }
      const int bad = (v == y) ? 0 : 1;
      row_bad_[x] += bad;
      if (bad && row_bad_[x] == 1) --alive_rows_;
      if (ok && spec_.prune && spec_.require_left_identity && alive_rows_ == 0) ok = false;
      if (ok && x == 0 && next_row0 == n_ && spec_.worker_count > 1)
        ok = first_row_rank(std::span(table_).first(n_), n_) % spec_.worker_count ==
             static_cast<std::uint64_t>(spec_.worker_index);
      if (ok) fill(k + 1, next_row0);
      row_bad_[x] -= bad;
      if (bad && row_bad_[x] == 0) ++alive_rows_;
      table_[cell] = -1;
    }
  }

  const EnumSpec& spec_;
  const MagmaSink& sink_;
  int n_;
  std::vector<int> table_;
  std::vector<int> fill_sequence_;
  std::vector<int> row_bad_;
  int alive_rows_;
  bool check_li_ = false;
  bool check_star_ = false;
  bool stopped_ = false;
};

}  // namespace

void enumerate_backtracking(const EnumSpec& spec, const MagmaSink& sink) {
  validate_spec(spec);
  Backtracker(spec, sink).run();
}

std::vector<Magma> enumerate_all(const EnumSpec& spec) {
  std::vector<Magma> out;
  enumerate_backtracking(spec, [&](const Magma& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::uint64_t count_matching(const EnumSpec& spec) {
  std::uint64_t count = 0;
  enumerate_backtracking(spec, [&](const Magma&) {
    ++count;
    return true;
  });
  return count;
}

Magma relabel(const Magma& m, std::span<const Element> perm) {
  const int n = m.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabel: permutation size does not match order");
  std::vector<bool> seen(n, false);
  for (Element p : perm) {
    if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("relabel: not a permutation");
    seen[p] = true;
  }
  std::vector<Element> out(static_cast<std::size_t>(n) * n);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) out[perm[i] * n + perm[j]] = perm[m(i, j)];
  return Magma(n, std::move(out));
}

CanonicalForm canonical_form(const Magma& m) {
  const int n = m.order();
  if (n > 7)
    throw std::invalid_argument("canonical_form: order too large for brute-force relabeling");
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best = m.table();
  std::vector<Element> candidate(static_cast<std::size_t>(n) * n);
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (Element i = 0; i < n; ++i)
      for (Element j = 0; j < n; ++j) candidate[perm[i] * n + perm[j]] = perm[m(i, j)];
    if (candidate < best) best = candidate;
  }
  return best;
}

bool are_isomorphic(const Magma& a, const Magma& b) {
  if (a.order() != b.order()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::string canonical_form_to_line(const CanonicalForm& form) {
  std::ostringstream out;
  for (std::size_t i = 0; i < form.size(); ++i) out << (i ? " " : "") << form[i];
  return out.str();
}

std::map<ClassKind, std::uint64_t> count_by_class(int order, EnumSpec constraints) {
  constraints.order = order;
  constraints.require_class.reset();
  std::map<ClassKind, std::uint64_t> counts;
  for (ClassKind k : kAllClassKinds) counts[k] = 0;
  enumerate_backtracking(constraints, [&](const Magma& m) {
    for (ClassKind k : kAllClassKinds)
      if (is_globally(m, k)) ++counts[k];
    return true;
  });
  return counts;
}

}  // namespace ag
