#include "ag/term.hpp"

#include <cctype>
#include <functional>

namespace ag {

Term Term::symbol(std::string name) {
  if (name.empty()) throw std::invalid_argument("Term::symbol: empty name");
  auto node = std::make_shared<Node>();
  node->hash = std::hash<std::string>{}(name) * 2 + 1;
  node->sym = std::move(name);
  node->size = 1;
  return Term(std::move(node));
}

Term Term::app(Term left, Term right) {
  auto node = std::make_shared<Node>();
  node->hash = (left.node_->hash * 0x9e3779b97f4a7c15ull) ^ (right.node_->hash << 1);
  node->size = 1 + left.node_->size + right.node_->size;
  node->left = std::move(left.node_);
  node->right = std::move(right.node_);
  return Term(std::move(node));
}

const std::string& Term::symbol_name() const {
  if (!is_symbol()) throw std::logic_error("Term::symbol_name on an application");
  return node_->sym;
}

Term Term::left() const {
  if (!is_app()) throw std::logic_error("Term::left on a symbol");
  return Term(node_->left);
}

Term Term::right() const {
  if (!is_app()) throw std::logic_error("Term::right on a symbol");
  return Term(node_->right);
}

bool Term::equal(const std::shared_ptr<const Node>& a, const std::shared_ptr<const Node>& b) {
  if (a == b) return true;
  if (a->hash != b->hash || a->size != b->size) return false;
  if (a->left == nullptr) return b->left == nullptr && a->sym == b->sym;
  if (b->left == nullptr) return false;
  return equal(a->left, b->left) && equal(a->right, b->right);
}

std::string Term::to_string() const {
  std::string out;
  std::function<void(const Node*, bool)> emit = [&](const Node* n, bool parens) {
    if (n->left == nullptr) {
      out += n->sym;
      return;
    }
    if (parens) out += '(';
    emit(n->left.get(), true);
    out += '*';
    emit(n->right.get(), true);
    if (parens) out += ')';
  };
  emit(node_.get(), false);
  return out;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_primary_start() {
    skip_ws();
    if (pos >= text.size()) return false;
    const char c = text[pos];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Term parse_primary() {
    skip_ws();
    if (pos >= text.size()) throw TermParseError("unexpected end of term");
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      Term inner = parse_term_level();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')')
        throw TermParseError("missing closing parenthesis");
      ++pos;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      return Term::symbol(std::string(text.substr(start, pos - start)));
    }
    throw TermParseError(std::string("unexpected character '") + c + "' in term");
  }

  Term parse_term_level() {
    Term first = parse_primary();
    skip_ws();
    bool star = pos < text.size() && text[pos] == '*';
    if (star) ++pos;
    if (!star && !at_primary_start()) return first;
    Term second = parse_primary();
    skip_ws();
    if ((pos < text.size() && text[pos] == '*') || at_primary_start())
      throw TermParseError("application is binary; parenthesize nested products");
    return Term::app(std::move(first), std::move(second));
  }
};

}  // namespace

Term parse_term(std::string_view text) {
  Parser p{text};
  Term t = p.parse_term_level();
  p.skip_ws();
  if (p.pos != text.size()) throw TermParseError("trailing characters after term");
  return t;
}

bool position_valid(const Term& t, const Position& pos) {
  Term cur = t;
  for (int step : pos) {
    if (step != 0 && step != 1) return false;
    if (!cur.is_app()) return false;
    cur = step == 0 ? cur.left() : cur.right();
  }
  return true;
}

Term subterm_at(const Term& t, const Position& pos) {
  Term cur = t;
  for (int step : pos) {
    if ((step != 0 && step != 1) || !cur.is_app())
      throw std::out_of_range("subterm_at: invalid position " + position_to_string(pos));
    cur = step == 0 ? cur.left() : cur.right();
  }
  return cur;
}

Term replace_at(const Term& t, const Position& pos, const Term& replacement) {
  if (pos.empty()) return replacement;
  if (!t.is_app()) throw std::out_of_range("replace_at: invalid position");
  Position rest(pos.begin() + 1, pos.end());
  if (pos.front() == 0) return Term::app(replace_at(t.left(), rest, replacement), t.right());
  if (pos.front() == 1) return Term::app(t.left(), replace_at(t.right(), rest, replacement));
  throw std::out_of_range("replace_at: invalid position step");
}

std::vector<Position> all_positions(const Term& t) {
  std::vector<Position> out;
  std::function<void(const Term&, Position&)> walk = [&](const Term& cur, Position& path) {
    out.push_back(path);
    if (!cur.is_app()) return;
    path.push_back(0);
    walk(cur.left(), path);
    path.back() = 1;
    walk(cur.right(), path);
    path.pop_back();
  };
  Position path;
  walk(t, path);
  return out;
}

std::string position_to_string(const Position& pos) {
  if (pos.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(pos[i]);
  }
  return out;
}

Position parse_position(std::string_view text) {
  if (text == "ε" || text == "e" || text.empty()) return {};
  Position pos;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '0' || text[i] == '1') {
      pos.push_back(text[i] - '0');
      ++i;
    } else {
      throw TermParseError("position steps must be 0 or 1");
    }
    if (i < text.size()) {
      if (text[i] != '.') throw TermParseError("position steps are dot-separated");
      ++i;
      if (i == text.size()) throw TermParseError("trailing dot in position");
    }
  }
  return pos;
}

std::set<std::string> term_symbols(const Term& t) {
  std::set<std::string> out;
  std::function<void(const Term&)> walk = [&](const Term& cur) {
    if (cur.is_symbol()) {
      out.insert(cur.symbol_name());
      return;
    }
    walk(cur.left());
    walk(cur.right());
  };
  walk(t);
  return out;
}

}  // namespace ag
