#include "ag/magma.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ag {

Magma::Magma(int order, std::vector<Element> table, std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  if (order_ < 1) throw std::invalid_argument("Magma: order must be >= 1");
  if (static_cast<int>(table_.size()) != order_ * order_)
    throw std::invalid_argument("Magma: table size does not match order");
  for (Element v : table_)
    if (v < 0 || v >= order_) throw std::invalid_argument("Magma: table entry out of range");
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != order_)
      throw std::invalid_argument("Magma: label count does not match order");
    std::set<std::string> distinct(labels_.begin(), labels_.end());
    if (static_cast<int>(distinct.size()) != order_)
      throw std::invalid_argument("Magma: labels must be pairwise distinct");
  }
}

Element Magma::product(Element a, Element b) const {
  if (a < 0 || a >= order_ || b < 0 || b >= order_)
    throw std::out_of_range("Magma::product: element out of range");
  return table_[a * order_ + b];
}

std::string Magma::label_of(Element x) const {
  if (x < 0 || x >= order_) throw std::out_of_range("Magma::label_of: element out of range");
  return has_labels() ? labels_[x] : std::to_string(x);
}

namespace {

bool all_index_tokens(const std::vector<std::string>& toks, int n) {
  for (const auto& t : toks) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
      return false;
    int v = std::stoi(t);
    if (v < 0 || v >= n) return false;
  }
  return true;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

Element resolve_entry(const std::string& tok, const std::vector<std::string>& labels, int n,
                      int line_no, int col_no) {
  if (!labels.empty()) {
    auto it = std::find(labels.begin(), labels.end(), tok);
    if (it != labels.end()) return static_cast<Element>(it - labels.begin());
  }
  if (!tok.empty() && std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
    int v = std::stoi(tok);
    if (v >= 0 && v < n) return v;
    throw ParseError("entry index " + tok + " out of range for order " + std::to_string(n),
                     line_no, col_no);
  }
  throw ParseError("unknown symbol '" + tok + "'", line_no, col_no);
}

Magma parse_text(std::string_view text) {
  // Lines, keeping original numbers for diagnostics; blank lines are skipped.
  std::vector<std::pair<int, std::string>> lines;
  {
    int no = 0;
    std::string cur;
    std::istringstream in{std::string(text)};
    while (std::getline(in, cur)) {
      ++no;
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      if (split_tokens(cur).empty()) continue;
      lines.emplace_back(no, cur);
    }
  }
  if (lines.empty()) throw ParseError("empty input", 1, 1);

  auto head = split_tokens(lines[0].second);
  if (head.size() != 1 || !std::all_of(head[0].begin(), head[0].end(),
                                       [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("first line must be the order", lines[0].first, 1);
  int n = std::stoi(head[0]);
  if (n < 1) throw ParseError("order must be >= 1", lines[0].first, 1);

  std::size_t next = 1;
  std::vector<std::string> labels;
  if (next < lines.size()) {
    auto toks = split_tokens(lines[next].second);
    // A line of n tokens that are not all in-range indices is the label row.
    if (static_cast<int>(toks.size()) == n && !all_index_tokens(toks, n)) {
      labels = toks;
      std::set<std::string> distinct(labels.begin(), labels.end());
      if (static_cast<int>(distinct.size()) != n)
        throw ParseError("duplicate labels", lines[next].first, 1);
      ++next;
    }
  }

  std::vector<Element> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row, ++next) {
    if (next >= lines.size())
      throw ParseError("expected " + std::to_string(n) + " table rows, got " + std::to_string(row),
                       lines.back().first + 1, 1);
    auto toks = split_tokens(lines[next].second);
    if (static_cast<int>(toks.size()) != n)
      throw ParseError("row has " + std::to_string(toks.size()) + " entries, expected " +
                           std::to_string(n),
                       lines[next].first, static_cast<int>(toks.size()) + 1);
    for (int col = 0; col < n; ++col)
      table.push_back(resolve_entry(toks[col], labels, n, lines[next].first, col + 1));
  }
  if (next < lines.size())
    throw ParseError("unexpected trailing content", lines[next].first, 1);
  return Magma(n, std::move(table), std::move(labels));
}

Magma parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw ParseError("JSON magma needs \"order\" and \"table\"", 1, 1);
  if (!j["order"].is_number_integer()) throw ParseError("\"order\" must be an integer", 1, 1);
  int n = j["order"].get<int>();
  if (n < 1) throw ParseError("order must be >= 1", 1, 1);

  std::vector<std::string> labels;
  if (j.contains("elements")) {
    if (!j["elements"].is_array())
      throw ParseError("\"elements\" must be an array of strings", 1, 1);
    for (const auto& e : j["elements"]) {
      if (!e.is_string()) throw ParseError("\"elements\" must be an array of strings", 1, 1);
      labels.push_back(e.get<std::string>());
    }
    if (static_cast<int>(labels.size()) != n)
      throw ParseError("\"elements\" count does not match order", 1, 1);
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (static_cast<int>(distinct.size()) != n) throw ParseError("duplicate labels", 1, 1);
  }

  const auto& rows = j["table"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw ParseError("\"table\" must have " + std::to_string(n) + " rows", 1, 1);
  std::vector<Element> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError("table row has wrong width", r + 1, 1);
    for (int c = 0; c < n; ++c) {
      const auto& cell = row[c];
      if (!cell.is_number_integer()) throw ParseError("table entry must be an index", r + 1, c + 1);
      int v = cell.get<int>();
      if (v < 0 || v >= n)
        throw ParseError("entry index " + std::to_string(v) + " out of range", r + 1, c + 1);
      table.push_back(v);
    }
  }
  return Magma(n, std::move(table), std::move(labels));
}

}  // namespace

Magma parse_magma(std::string_view text, TableFormat format) {
  return format == TableFormat::Json ? parse_json(text) : parse_text(text);
}

Magma parse_magma(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return parse_magma(text, c == '{' ? TableFormat::Json : TableFormat::Text);
  }
  throw ParseError("empty input", 1, 1);
}

std::string serialize_magma(const Magma& m, TableFormat format) {
  const int n = m.order();
  if (format == TableFormat::Json) {
    nlohmann::json j;
    j["order"] = n;
    if (m.has_labels()) j["elements"] = m.labels();
    auto rows = nlohmann::json::array();
    for (int r = 0; r < n; ++r) {
      auto row = nlohmann::json::array();
      for (int c = 0; c < n; ++c) row.push_back(m(r, c));
      rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    return j.dump();
  }
  std::ostringstream out;
  out << n << '\n';
  if (m.has_labels()) {
    for (int i = 0; i < n; ++i) out << (i ? " " : "") << m.labels()[i];
    out << '\n';
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out << (c ? " " : "") << m.label_of(m(r, c));
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Predicates.

std::optional<TripleWitness> left_invertive_failure(const Magma& m) {
  const int n = m.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (m(m(a, b), c) != m(m(c, b), a)) return TripleWitness{a, b, c};
  return std::nullopt;
}

bool is_left_invertive(const Magma& m) { return !left_invertive_failure(m); }

std::optional<QuadWitness> medial_failure(const Magma& m) {
  const int n = m.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        for (Element d = 0; d < n; ++d)
          if (m(m(a, b), m(c, d)) != m(m(a, c), m(b, d))) return QuadWitness{a, b, c, d};
  return std::nullopt;
}

bool is_medial(const Magma& m) { return !medial_failure(m); }

std::optional<QuadWitness> paramedial_failure(const Magma& m) {
  const int n = m.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        for (Element d = 0; d < n; ++d)
          if (m(m(a, b), m(c, d)) != m(m(d, c), m(b, a))) return QuadWitness{a, b, c, d};
  return std::nullopt;
}

bool is_paramedial(const Magma& m) { return !paramedial_failure(m); }

std::optional<TripleWitness> law4_failure(const Magma& m) {
  const int n = m.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (m(a, m(b, c)) != m(b, m(a, c))) return TripleWitness{a, b, c};
  return std::nullopt;
}

bool satisfies_law4(const Magma& m) { return !law4_failure(m); }

std::optional<TripleWitness> star_identity_failure(const Magma& m) {
  const int n = m.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (m(m(a, b), c) != m(b, m(a, c))) return TripleWitness{a, b, c};
  return std::nullopt;
}

bool is_ag_star(const Magma& m) {
  return is_left_invertive(m) && !star_identity_failure(m);
}

std::optional<QuadWitness> permutation_identity_failure(const Magma& m) {
  const int n = m.order();
  std::array<int, 4> perm{0, 1, 2, 3};
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        for (Element d = 0; d < n; ++d) {
          const std::array<Element, 4> v{a, b, c, d};
          const Element base = m(m(v[0], v[1]), m(v[2], v[3]));
          std::array<int, 4> p = perm;
          do {
            if (m(m(v[p[0]], v[p[1]]), m(v[p[2]], v[p[3]])) != base)
              return QuadWitness{a, b, c, d};
          } while (std::next_permutation(p.begin(), p.end()));
        }
  return std::nullopt;
}

bool satisfies_permutation_identity(const Magma& m) {
  return !permutation_identity_failure(m);
}

bool is_commutative(const Magma& m) {
  const int n = m.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (m(a, b) != m(b, a)) return false;
  return true;
}

bool is_associative(const Magma& m) {
  const int n = m.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (m(m(a, b), c) != m(a, m(b, c))) return false;
  return true;
}

std::vector<Element> left_identities(const Magma& m) {
  const int n = m.order();
  std::vector<Element> out;
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = m(e, x) == x;
    if (ok) out.push_back(e);
  }
  return out;
}

std::vector<Element> right_identities(const Magma& m) {
  const int n = m.order();
  std::vector<Element> out;
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = m(x, e) == x;
    if (ok) out.push_back(e);
  }
  return out;
}

ElementSet square_set(const Magma& m) {
  const int n = m.order();
  ElementSet s(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) s.insert(m(a, b));
  return s;
}

StructureReport probe(const Magma& m) {
  StructureReport r;
  r.is_left_invertive = is_left_invertive(m);
  r.is_medial = is_medial(m);
  r.is_paramedial = is_paramedial(m);
  r.satisfies_law4 = satisfies_law4(m);
  r.is_ag_star = is_ag_star(m);
  r.satisfies_permutation_identity = satisfies_permutation_identity(m);
  r.is_commutative = is_commutative(m);
  r.is_associative = is_associative(m);
  r.left_identities = left_identities(m);
  r.right_identities = right_identities(m);
  r.square = square_set(m);
  r.s_equals_s2 = r.square.is_full();
  return r;
}

}  // namespace ag
