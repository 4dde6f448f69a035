#pragma once

// Oriented equational rewriting over free-magma terms: the named laws,
// per-proof hypotheses and definitions, single-step justification search,
// derivation-chain replay, bounded reachability, and interpretation of
// terms in finite magmas.
//
// Laws are pattern equations: every symbol of a law's sides is a pattern
// variable. Hypotheses and definitions are concrete equations over a chain's
// own symbols and apply by exact subterm equality.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ag/magma.hpp"
#include "ag/term.hpp"

namespace ag {

struct Law {
  std::string name;
  Term lhs;
  Term rhs;
};

/// Validates the variable balance (same variables on both sides).
Law make_law(std::string name, std::string_view lhs, std::string_view rhs);

/// The built-in law registry:
///   L1    (A*B)*C = (C*B)*A        left invertive
///   L2    (A*B)*(C*D) = (A*C)*(B*D)  medial
///   L3    (A*B)*(C*D) = (D*C)*(B*A)  paramedial
///   L4    A*(B*C) = B*(A*C)
///   LSTAR (A*B)*C = B*(A*C)
const std::vector<Law>& builtin_laws();
const Law& builtin_law(std::string_view name);

struct NamedEquation {
  enum class Role { Hypothesis, Definition };
  std::string name;
  Term lhs;
  Term rhs;
  Role role = Role::Hypothesis;
};

enum class Direction { Forward, Backward };

std::string_view direction_name(Direction d);

using Substitution = std::map<std::string, Term>;

/// First-order matching: the unique substitution with sigma(pattern) ==
/// subject, treating every pattern symbol as a variable (nonlinear
/// occurrences must bind consistently).
std::optional<Substitution> match_pattern(const Term& pattern, const Term& subject);

/// sigma applied to a pattern; throws std::logic_error on an unbound variable.
Term substitute(const Term& pattern, const Substitution& sigma);

/// Declared rewrite sources for one chain. Lookup is by name; laws and
/// equations share one namespace.
struct RewriteContext {
  std::vector<Law> laws;
  std::vector<NamedEquation> equations;

  const Law* find_law(std::string_view name) const;
  const NamedEquation* find_equation(std::string_view name) const;
  bool has_source(std::string_view name) const;
};

std::optional<Term> apply_law_at(const Term& t, const Law& law, const Position& pos,
                                 Direction dir);
std::optional<Term> apply_equation_at(const Term& t, const NamedEquation& eq, const Position& pos,
                                      Direction dir);
/// Unified application by declared source name; throws std::invalid_argument
/// for an undeclared source.
std::optional<Term> apply_at(const Term& t, const RewriteContext& ctx, std::string_view source,
                             const Position& pos, Direction dir);

struct Justification {
  std::string source;
  Position position;
  Direction direction = Direction::Forward;
  Substitution substitution;  // law matches; empty for equations
};

/// Search for a single application turning s into t, scanning sources in
/// declaration order (laws first), positions in preorder, forward before
/// backward. The fixed ordering makes the result deterministic.
std::optional<Justification> justify_step(const Term& s, const Term& t,
                                          const RewriteContext& ctx);

/// Re-apply a justification and test that it produces exactly t.
bool justification_valid(const Term& s, const Term& t, const RewriteContext& ctx,
                         const Justification& j);

struct ChainStep {
  Term term;
  std::optional<Justification> claimed;  // how this term follows from the previous one
};

/// A replayable proof: the declared sources plus the ordered term list.
/// The alphabet is the set of symbols of the first step and of every
/// hypothesis/definition side; later steps may not introduce new symbols.
struct DerivationChain {
  std::string name;
  std::set<std::string> alphabet;
  RewriteContext context;
  std::vector<ChainStep> steps;
};

struct StepReport {
  std::size_t index = 0;  // step i justifies terms[i-1] -> terms[i]
  bool ok = false;
  std::optional<Justification> justification;
  std::string message;
};

struct ReplayReport {
  std::string chain;
  std::vector<StepReport> steps;
  bool passed = false;
};

/// Validate every consecutive pair. A claimed justification is checked as
/// claimed (no fallback search); an unclaimed step is searched.
ReplayReport replay_chain(const DerivationChain& chain);

inline constexpr int kDefaultEquivDepth = 6;
inline constexpr int kMaxEquivDepth = 16;

/// Breadth-first closure of s under single applications of the context's
/// sources, duplicate-suppressed by term hashing; true iff t is reached
/// within `depth` rewrites. depth > kMaxEquivDepth is rejected.
bool bounded_equiv(const Term& s, const Term& t, const RewriteContext& ctx,
                   int depth = kDefaultEquivDepth);

/// Evaluate a term in a finite magma under a symbol assignment; throws
/// std::invalid_argument on an unassigned symbol.
Element interpret_term(const Term& t, const Magma& m,
                       const std::map<std::string, Element>& assignment);

/// Finite-model soundness of a chain in one magma: over every assignment of
/// the chain's alphabet that satisfies all hypotheses and definitions, the
/// first and last terms evaluate equal.
struct EndpointSoundness {
  std::uint64_t assignments = 0;
  std::uint64_t satisfying = 0;
  bool sound = true;
  std::optional<std::map<std::string, Element>> counterexample;
};

EndpointSoundness chain_endpoints_sound(const DerivationChain& chain, const Magma& m);

// ---------------------------------------------------------------------------
// Chain fixture DSL. One chain per block:
//
//   chain <name>
//   laws L1 L2 L3 L4
//   hyp <name>: <term> = <term>
//   def <name>: <symbol> = <term>
//   step <term> [by <source> at <pos> <fwd|bwd>]
//
// Terms use '*' with mandatory parentheses; positions are dotted 0/1 paths
// with ε for the root. '#' starts a comment line.

class ChainParseError : public std::runtime_error {
 public:
  ChainParseError(const std::string& msg, int line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

std::vector<DerivationChain> parse_chains(std::string_view text);

/// The chains shipped with the toolkit (identical to fixtures/chains.txt).
std::string_view bundled_chains_text();
std::vector<DerivationChain> bundled_chains();

}  // namespace ag
