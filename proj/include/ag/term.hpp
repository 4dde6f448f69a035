#pragma once

// Free-magma terms over symbol alphabets: an immutable binary tree whose
// leaves are named symbols. Subtrees are shared, equality is structural.

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ag {

class TermParseError : public std::runtime_error {
 public:
  explicit TermParseError(const std::string& msg) : std::runtime_error(msg) {}
};

class Term {
 public:
  static Term symbol(std::string name);
  static Term app(Term left, Term right);

  bool is_symbol() const { return node_->left == nullptr; }
  bool is_app() const { return node_->left != nullptr; }

  const std::string& symbol_name() const;
  Term left() const;
  Term right() const;

  std::size_t hash() const { return node_->hash; }
  std::size_t size() const { return node_->size; }  // node count

  friend bool operator==(const Term& a, const Term& b) { return equal(a.node_, b.node_); }

  /// "(a*x)*(a*y)" style: applications parenthesized except at the root.
  std::string to_string() const;

 private:
  struct Node {
    std::string sym;  // empty for applications
    std::shared_ptr<const Node> left, right;
    std::size_t hash = 0;
    std::size_t size = 1;
  };

  static bool equal(const std::shared_ptr<const Node>& a, const std::shared_ptr<const Node>& b);

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Grammar: term := primary [('*' | whitespace) primary]
///          primary := symbol | '(' term ')'
/// Application is strictly binary; a third factor at one level is an error
/// (parentheses are mandatory), so "(a*x)*(a*y)" parses and "a*b*c" does not.
Term parse_term(std::string_view text);

/// Path from the root; 0 = left child, 1 = right child, empty = root.
using Position = std::vector<int>;

bool position_valid(const Term& t, const Position& pos);
/// Subterm at the position; throws std::out_of_range when invalid.
Term subterm_at(const Term& t, const Position& pos);
/// Copy of `t` with the subterm at `pos` replaced.
Term replace_at(const Term& t, const Position& pos, const Term& replacement);
/// All positions in preorder: root, then left subtree, then right subtree.
std::vector<Position> all_positions(const Term& t);

/// "ε" for the root, else a dotted path like "0.1".
std::string position_to_string(const Position& pos);
Position parse_position(std::string_view text);

std::set<std::string> term_symbols(const Term& t);

}  // namespace ag
