#include "ag/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace ag {

namespace {

void collect_symbols(const Term& t, std::set<std::string>& out) {
  if (t.is_symbol()) {
    out.insert(t.symbol_name());
    return;
  }
  collect_symbols(t.left(), out);
  collect_symbols(t.right(), out);
}

}  // namespace

Law make_law(std::string name, std::string_view lhs, std::string_view rhs) {
  Law law{std::move(name), parse_term(lhs), parse_term(rhs)};
  if (term_symbols(law.lhs) != term_symbols(law.rhs))
    throw std::invalid_argument("law " + law.name + ": sides must use the same variables");
  return law;
}

const std::vector<Law>& builtin_laws() {
  static const std::vector<Law> laws = {
      make_law("L1", "(A*B)*C", "(C*B)*A"),
      make_law("L2", "(A*B)*(C*D)", "(A*C)*(B*D)"),
      make_law("L3", "(A*B)*(C*D)", "(D*C)*(B*A)"),
      make_law("L4", "A*(B*C)", "B*(A*C)"),
      make_law("LSTAR", "(A*B)*C", "B*(A*C)"),
  };
  return laws;
}

const Law& builtin_law(std::string_view name) {
  for (const Law& law : builtin_laws())
    if (law.name == name) return law;
  throw std::invalid_argument("unknown law: " + std::string(name));
}

std::string_view direction_name(Direction d) {
  return d == Direction::Forward ? "fwd" : "bwd";
}

namespace {

bool match_into(const Term& pattern, const Term& subject, Substitution& sigma) {
  if (pattern.is_symbol()) {
    auto [it, inserted] = sigma.try_emplace(pattern.symbol_name(), subject);
    return inserted || it->second == subject;
  }
  if (!subject.is_app()) return false;
  return match_into(pattern.left(), subject.left(), sigma) &&
         match_into(pattern.right(), subject.right(), sigma);
}

}  // namespace

std::optional<Substitution> match_pattern(const Term& pattern, const Term& subject) {
  Substitution sigma;
  if (!match_into(pattern, subject, sigma)) return std::nullopt;
  return sigma;
}

Term substitute(const Term& pattern, const Substitution& sigma) {
  if (pattern.is_symbol()) {
    auto it = sigma.find(pattern.symbol_name());
    if (it == sigma.end())
      throw std::logic_error("substitute: unbound variable " + pattern.symbol_name());
    return it->second;
  }
  return Term::app(substitute(pattern.left(), sigma), substitute(pattern.right(), sigma));
}

const Law* RewriteContext::find_law(std::string_view name) const {
  for (const Law& law : laws)
    if (law.name == name) return &law;
  return nullptr;
}

const NamedEquation* RewriteContext::find_equation(std::string_view name) const {
  for (const NamedEquation& eq : equations)
    if (eq.name == name) return &eq;
  return nullptr;
}

bool RewriteContext::has_source(std::string_view name) const {
  return find_law(name) || find_equation(name);
}

namespace {

struct LawApplication {
  Term result;
  Substitution sigma;
};

std::optional<LawApplication> apply_law_core(const Term& t, const Law& law, const Position& pos,
                                             Direction dir) {
  if (!position_valid(t, pos)) return std::nullopt;
  const Term& from = dir == Direction::Forward ? law.lhs : law.rhs;
  const Term& to = dir == Direction::Forward ? law.rhs : law.lhs;
  Term subject = subterm_at(t, pos);
  auto sigma = match_pattern(from, subject);
  if (!sigma) return std::nullopt;
  return LawApplication{replace_at(t, pos, substitute(to, *sigma)), std::move(*sigma)};
}

}  // namespace

std::optional<Term> apply_law_at(const Term& t, const Law& law, const Position& pos,
                                 Direction dir) {
  auto app = apply_law_core(t, law, pos, dir);
  if (!app) return std::nullopt;
  return app->result;
}

std::optional<Term> apply_equation_at(const Term& t, const NamedEquation& eq, const Position& pos,
                                      Direction dir) {
  if (!position_valid(t, pos)) return std::nullopt;
  const Term& from = dir == Direction::Forward ? eq.lhs : eq.rhs;
  const Term& to = dir == Direction::Forward ? eq.rhs : eq.lhs;
  if (!(subterm_at(t, pos) == from)) return std::nullopt;
  return replace_at(t, pos, to);
}

std::optional<Term> apply_at(const Term& t, const RewriteContext& ctx, std::string_view source,
                             const Position& pos, Direction dir) {
  if (const Law* law = ctx.find_law(source)) return apply_law_at(t, *law, pos, dir);
  if (const NamedEquation* eq = ctx.find_equation(source))
    return apply_equation_at(t, *eq, pos, dir);
  throw std::invalid_argument("apply_at: undeclared source " + std::string(source));
}

namespace {

// Claimed-justification validation that also recovers the law substitution.
std::optional<Justification> complete_justification(const Term& s, const Term& t,
                                                    const RewriteContext& ctx,
                                                    const Justification& j) {
  if (const Law* law = ctx.find_law(j.source)) {
    auto app = apply_law_core(s, *law, j.position, j.direction);
    if (!app || !(app->result == t)) return std::nullopt;
    Justification out = j;
    out.substitution = std::move(app->sigma);
    return out;
  }
  if (const NamedEquation* eq = ctx.find_equation(j.source)) {
    auto result = apply_equation_at(s, *eq, j.position, j.direction);
    if (!result || !(*result == t)) return std::nullopt;
    Justification out = j;
    out.substitution.clear();
    return out;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Justification> justify_step(const Term& s, const Term& t,
                                          const RewriteContext& ctx) {
  const auto positions = all_positions(s);
  auto try_source = [&](const std::string& name) -> std::optional<Justification> {
    for (const Position& pos : positions)
      for (Direction dir : {Direction::Forward, Direction::Backward}) {
        Justification j{name, pos, dir, {}};
        if (auto done = complete_justification(s, t, ctx, j)) return done;
      }
    return std::nullopt;
  };
  for (const Law& law : ctx.laws)
    if (auto j = try_source(law.name)) return j;
  for (const NamedEquation& eq : ctx.equations)
    if (auto j = try_source(eq.name)) return j;
  return std::nullopt;
}

bool justification_valid(const Term& s, const Term& t, const RewriteContext& ctx,
                         const Justification& j) {
  return complete_justification(s, t, ctx, j).has_value();
}

ReplayReport replay_chain(const DerivationChain& chain) {
  ReplayReport report;
  report.chain = chain.name;
  report.passed = true;
  if (chain.steps.size() < 2) {
    report.passed = false;
    StepReport sr;
    sr.index = 0;
    sr.ok = false;
    sr.message = "malformed chain: fewer than two terms";
    report.steps.push_back(std::move(sr));
    return report;
  }
  for (std::size_t i = 1; i < chain.steps.size(); ++i) {
    const Term& s = chain.steps[i - 1].term;
    const Term& t = chain.steps[i].term;
    StepReport sr;
    sr.index = i;
    if (s == t) {
      sr.ok = false;
      sr.message = "consecutive terms are identical";
    } else if (chain.steps[i].claimed) {
      auto done = complete_justification(s, t, chain.context, *chain.steps[i].claimed);
      if (done) {
        sr.ok = true;
        sr.justification = std::move(done);
      } else {
        sr.ok = false;
        sr.message = "claimed justification (" + chain.steps[i].claimed->source + " at " +
                     position_to_string(chain.steps[i].claimed->position) + " " +
                     std::string(direction_name(chain.steps[i].claimed->direction)) +
                     ") does not take this step";
      }
    } else if (auto j = justify_step(s, t, chain.context)) {
      sr.ok = true;
      sr.justification = std::move(j);
    } else {
      sr.ok = false;
      sr.message = "gap: no single declared application takes this step";
    }
    report.passed = report.passed && sr.ok;
    report.steps.push_back(std::move(sr));
  }
  return report;
}

bool bounded_equiv(const Term& s, const Term& t, const RewriteContext& ctx, int depth) {
  if (depth < 0 || depth > kMaxEquivDepth)
    throw std::invalid_argument("bounded_equiv: depth out of range");
  if (s == t) return true;
  std::unordered_set<Term, TermHash> visited{s};
  std::deque<Term> frontier{s};
  auto expand = [&](const Term& cur, std::deque<Term>& next) -> bool {
    const auto positions = all_positions(cur);
    auto push = [&](std::optional<Term> result) -> bool {
      if (!result) return false;
      if (*result == t) return true;
      if (visited.insert(*result).second) next.push_back(std::move(*result));
      return false;
    };
    for (const Position& pos : positions)
      for (Direction dir : {Direction::Forward, Direction::Backward}) {
        for (const Law& law : ctx.laws)
          if (push(apply_law_at(cur, law, pos, dir))) return true;
        for (const NamedEquation& eq : ctx.equations)
          if (push(apply_equation_at(cur, eq, pos, dir))) return true;
      }
    return false;
  };
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::deque<Term> next;
    for (const Term& cur : frontier)
      if (expand(cur, next)) return true;
    frontier = std::move(next);
  }
  return false;
}

Element interpret_term(const Term& t, const Magma& m,
                       const std::map<std::string, Element>& assignment) {
  if (t.is_symbol()) {
    auto it = assignment.find(t.symbol_name());
    if (it == assignment.end())
      throw std::invalid_argument("interpret_term: unassigned symbol " + t.symbol_name());
    return it->second;
  }
  return m.product(interpret_term(t.left(), m, assignment),
                   interpret_term(t.right(), m, assignment));
}

EndpointSoundness chain_endpoints_sound(const DerivationChain& chain, const Magma& m) {
  EndpointSoundness result;
  if (chain.steps.size() < 2) throw std::invalid_argument("chain has fewer than two terms");
  std::vector<std::string> symbols(chain.alphabet.begin(), chain.alphabet.end());
  const int n = m.order();
  std::vector<Element> values(symbols.size(), 0);
  std::map<std::string, Element> assignment;
  const Term& first = chain.steps.front().term;
  const Term& last = chain.steps.back().term;
  for (;;) {
    ++result.assignments;
    assignment.clear();
    for (std::size_t i = 0; i < symbols.size(); ++i) assignment[symbols[i]] = values[i];
    bool satisfied = true;
    for (const NamedEquation& eq : chain.context.equations)
      if (interpret_term(eq.lhs, m, assignment) != interpret_term(eq.rhs, m, assignment)) {
        satisfied = false;
        break;
      }
    if (satisfied) {
      ++result.satisfying;
      if (interpret_term(first, m, assignment) != interpret_term(last, m, assignment)) {
        result.sound = false;
        if (!result.counterexample) result.counterexample = assignment;
      }
    }
    int i = static_cast<int>(values.size()) - 1;
    while (i >= 0 && values[i] == n - 1) values[i--] = 0;
    if (i < 0) break;
    ++values[i];
  }
  return result;
}

// ---------------------------------------------------------------------------
// Chain fixture DSL.

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

struct ChainBuilder {
  DerivationChain chain;
  bool open = false;
  int start_line = 0;

  void add_source_symbols(const NamedEquation& eq) {
    collect_symbols(eq.lhs, chain.alphabet);
    collect_symbols(eq.rhs, chain.alphabet);
  }

  void finish(std::vector<DerivationChain>& out) {
    if (!open) return;
    if (chain.steps.size() < 2)
      throw ChainParseError("chain " + chain.name + " needs at least two steps", start_line);
    out.push_back(std::move(chain));
    chain = DerivationChain{};
    open = false;
  }
};

}  // namespace

std::vector<DerivationChain> parse_chains(std::string_view text) {
  std::vector<DerivationChain> out;
  ChainBuilder builder;
  std::set<std::string> chain_names;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];

    if (kw == "chain") {
      builder.finish(out);
      if (toks.size() != 2) throw ChainParseError("chain needs exactly one name", line_no);
      if (!chain_names.insert(toks[1]).second)
        throw ChainParseError("duplicate chain name " + toks[1], line_no);
      builder.open = true;
      builder.start_line = line_no;
      builder.chain.name = toks[1];
      continue;
    }
    if (!builder.open) throw ChainParseError("expected 'chain <name>' first", line_no);

    if (kw == "laws") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (builder.chain.context.has_source(toks[i]))
          throw ChainParseError("duplicate source " + toks[i], line_no);
        try {
          builder.chain.context.laws.push_back(builtin_law(toks[i]));
        } catch (const std::invalid_argument& e) {
          throw ChainParseError(e.what(), line_no);
        }
      }
      continue;
    }

    if (kw == "hyp" || kw == "def") {
      // <kw> <name>: <term> = <term>
      std::string rest = raw.substr(raw.find(kw) + kw.size());
      auto colon = rest.find(':');
      if (colon == std::string::npos) throw ChainParseError("missing ':' after name", line_no);
      auto name_toks = tokenize(rest.substr(0, colon));
      if (name_toks.size() != 1) throw ChainParseError(kw + " needs exactly one name", line_no);
      std::string body = rest.substr(colon + 1);
      auto eq_pos = body.find('=');
      if (eq_pos == std::string::npos) throw ChainParseError("missing '='", line_no);
      auto parse_side = [&](std::string side) {
        try {
          return parse_term(side);
        } catch (const TermParseError& e) {
          throw ChainParseError(e.what(), line_no);
        }
      };
      NamedEquation eq{name_toks[0], parse_side(body.substr(0, eq_pos)),
                       parse_side(body.substr(eq_pos + 1)),
                       kw == "hyp" ? NamedEquation::Role::Hypothesis
                                   : NamedEquation::Role::Definition};
      if (kw == "def" && !eq.lhs.is_symbol())
        throw ChainParseError("def left side must be a single symbol", line_no);
      if (builder.chain.context.has_source(eq.name))
        throw ChainParseError("duplicate source " + eq.name, line_no);
      builder.add_source_symbols(eq);
      builder.chain.context.equations.push_back(std::move(eq));
      continue;
    }

    if (kw == "step") {
      std::string rest = raw.substr(raw.find(kw) + kw.size());
      ChainStep step{Term::symbol("_placeholder"), std::nullopt};
      auto by_pos = rest.rfind(" by ");
      std::string term_text = rest;
      if (by_pos != std::string::npos) {
        term_text = rest.substr(0, by_pos);
        auto jtoks = tokenize(rest.substr(by_pos + 4));
        // <source> at <pos> <fwd|bwd>
        if (jtoks.size() != 4 || jtoks[1] != "at")
          throw ChainParseError("justification must be 'by <source> at <pos> <fwd|bwd>'",
                                line_no);
        Justification j;
        j.source = jtoks[0];
        try {
          j.position = parse_position(jtoks[2]);
        } catch (const TermParseError& e) {
          throw ChainParseError(e.what(), line_no);
        }
        if (jtoks[3] == "fwd")
          j.direction = Direction::Forward;
        else if (jtoks[3] == "bwd")
          j.direction = Direction::Backward;
        else
          throw ChainParseError("direction must be fwd or bwd", line_no);
        if (!builder.chain.context.has_source(j.source))
          throw ChainParseError("undeclared source " + j.source, line_no);
        step.claimed = std::move(j);
      }
      try {
        step.term = parse_term(term_text);
      } catch (const TermParseError& e) {
        throw ChainParseError(e.what(), line_no);
      }
      if (builder.chain.steps.empty()) {
        if (step.claimed)
          throw ChainParseError("the first step cannot carry a justification", line_no);
        collect_symbols(step.term, builder.chain.alphabet);
      } else {
        for (const std::string& sym : term_symbols(step.term))
          if (!builder.chain.alphabet.count(sym))
            throw ChainParseError("unknown symbol " + sym +
                                      " (not introduced by the first step or any hyp/def)",
                                  line_no);
        if (step.term == builder.chain.steps.back().term)
          throw ChainParseError("consecutive terms must differ", line_no);
      }
      builder.chain.steps.push_back(std::move(step));
      continue;
    }

    throw ChainParseError("unknown keyword " + kw, line_no);
  }
  builder.finish(out);
  return out;
}

namespace {

constexpr std::string_view kBundledChains = R"(# Derivation chains for the regularity-class equivalences in AG-groupoids.
# Laws: L1 (A*B)*C=(C*B)*A, L2 (A*B)*(C*D)=(A*C)*(B*D),
#       L3 (A*B)*(C*D)=(D*C)*(B*A), L4 A*(B*C)=B*(A*C).
# L3 and L4 are declared only in chains whose ambient magma has a left
# identity. Squares are always spelled out: a^2 is (a*a).

# intra-regular a=(x*(a*a))*y  ==>  a=(x*a)*(a*z) for some x,z.
chain intra_to_characterization
laws L1 L3 L4
hyp intra: a = ((x*(a*a))*y)
hyp ydec: y = (u*v)
def t: t = (v*u)
def s: s = (y*t)
def w: w = (x*s)
def z: z = (w*a)
step (x*(a*a))*y
step (a*(x*a))*y by L4 at 0 fwd
step (y*(x*a))*a by L1 at ε fwd
step (y*(x*a))*((x*(a*a))*y) by intra at 1 fwd
step ((u*v)*(x*a))*((x*(a*a))*y) by ydec at 0.0 fwd
step ((a*x)*(v*u))*((x*(a*a))*y) by L3 at 0 fwd
step ((a*x)*t)*((x*(a*a))*y) by t at 0.1 bwd
step (((x*(a*a))*y)*t)*(a*x) by L1 at ε fwd
step ((t*y)*(x*(a*a)))*(a*x) by L1 at 0 fwd
step (((a*a)*x)*(y*t))*(a*x) by L3 at 0 fwd
step (((a*a)*x)*s)*(a*x) by s at 0.1 bwd
step ((s*x)*(a*a))*(a*x) by L1 at 0 fwd
step ((a*a)*(x*s))*(a*x) by L3 at 0 fwd
step ((a*a)*w)*(a*x) by w at 0.1 bwd
step ((w*a)*a)*(a*x) by L1 at 0 fwd
step (z*a)*(a*x) by z at 0.0 bwd
step (x*a)*(a*z) by L3 at ε fwd

# a=(x*a)*(a*z)  ==>  a=(a*t)*(a*a), the first leg of the converse.
chain characterization_to_intra_part1
laws L1 L2 L3 L4
hyp char: a = ((x*a)*(a*z))
def t: t = ((x*x)*(z*z))
step (x*a)*(a*z)
step a*((x*a)*z) by L4 at ε fwd
step ((x*a)*(a*z))*((x*a)*z) by char at 0 fwd
step (a*((x*a)*z))*((x*a)*z) by L4 at 0 fwd
step (((x*a)*z)*((x*a)*z))*a by L1 at ε fwd
step (((x*a)*(x*a))*(z*z))*a by L2 at 0 fwd
step (((a*x)*(a*x))*(z*z))*a by L3 at 0.0 fwd
step ((a*((a*x)*x))*(z*z))*a by L4 at 0.0 fwd
step (((z*z)*((a*x)*x))*a)*a by L1 at 0 fwd
step (((a*x)*((z*z)*x))*a)*a by L4 at 0.0 fwd
step (((((z*z)*x)*x)*a)*a)*a by L1 at 0.0 fwd
step ((((x*x)*(z*z))*a)*a)*a by L1 at 0.0.0 fwd
step ((a*a)*((x*x)*(z*z)))*a by L1 at 0 fwd
step (a*((x*x)*(z*z)))*(a*a) by L1 at ε fwd
step (a*t)*(a*a) by t at 0.1 bwd

# a=(a*t)*(a*a)  ==>  a=(u*(a*a))*v, which is the intra-regular shape.
chain characterization_to_intra_part2
laws L1 L3
hyp est: a = ((a*t)*(a*a))
def u: u = (t*(t*a))
def v: v = (a*a)
step (a*t)*(a*a)
step (((a*t)*(a*a))*t)*(a*a) by est at 0.0 fwd
step (((a*a)*(t*a))*t)*(a*a) by L3 at 0.0 fwd
step ((t*(t*a))*(a*a))*(a*a) by L1 at 0 fwd
step (u*(a*a))*(a*a) by u at 0.0 bwd
step (u*(a*a))*v by v at 1 bwd

# weakly regular a=(a*x)*(a*y)  ==>  intra-regular a=(y*(a*a))*t.
chain weak_to_intra
laws L1 L2 L3 L4
hyp wr: a = ((a*x)*(a*y))
hyp xdec: x = (u*v)
def t: t = (v*u)
step (a*x)*(a*y)
step (y*a)*(x*a) by L3 at ε fwd
step (y*a)*((u*v)*a) by xdec at 1.0 fwd
step (y*a)*((a*v)*u) by L1 at 1 fwd
step (a*v)*((y*a)*u) by L4 at ε fwd
step (a*(y*a))*(v*u) by L2 at ε fwd
step (a*(y*a))*t by t at 1 bwd
step (y*(a*a))*t by L4 at 0 fwd

# reconstructed route: the compressed original gives only the endpoints.
# intra-regular a=(y*(a*a))*t  ==>  weakly regular a=(a*(y*u))*(a*v).
chain intra_to_weak_reconstructed
laws L2 L4
hyp intra: a = ((y*(a*a))*t)
hyp tdec: t = (u*v)
step (y*(a*a))*t
step (y*(a*a))*(u*v) by tdec at 1 fwd
step (y*u)*((a*a)*v) by L2 at ε fwd
step (a*a)*((y*u)*v) by L4 at ε fwd
step (a*(y*u))*(a*v) by L2 at ε fwd

# weakly regular  ==>  right regular a=(a*a)*t; needs no left identity.
chain weak_to_right_regular
laws L2
hyp wr: a = ((a*x)*(a*y))
def t: t = (x*y)
step (a*x)*(a*y)
step (a*a)*(x*y) by L2 at ε fwd
step (a*a)*t by t at 1 bwd

# right regular a=(a*a)*x  ==>  weakly regular; needs no left identity.
chain right_regular_to_weak
laws L2
hyp rr: a = ((a*a)*x)
hyp xdec: x = (u*v)
step (a*a)*x
step (a*a)*(u*v) by xdec at 1 fwd
step (a*u)*(a*v) by L2 at ε fwd

# weakly regular  ==>  left regular a=t*(a*a).
chain weak_to_left_regular
laws L2 L3
hyp wr: a = ((a*x)*(a*y))
def t: t = (y*x)
step (a*x)*(a*y)
step (a*a)*(x*y) by L2 at ε fwd
step (y*x)*(a*a) by L3 at ε fwd
step t*(a*a) by t at 0 bwd

# left regular a=x*(a*a)  ==>  weakly regular.
chain left_regular_to_weak
laws L2 L3
hyp lr: a = (x*(a*a))
hyp xdec: x = (u*v)
step x*(a*a)
step (u*v)*(a*a) by xdec at 0 fwd
step (a*a)*(v*u) by L3 at ε fwd
step (a*v)*(a*u) by L2 at ε fwd

# weakly regular  ==>  regular a=(a*u)*a.
chain weak_implies_regular
laws L1 L2 L3 L4
hyp wr: a = ((a*x)*(a*y))
def t: t = (x*y)
def u: u = (t*((y*x)*a))
step (a*x)*(a*y)
step ((a*y)*x)*a by L1 at ε fwd
step ((x*y)*a)*a by L1 at 0 fwd
step (t*a)*a by t at 0.0 bwd
step (t*((a*x)*(a*y)))*a by wr at 0.1 fwd
step (t*((a*a)*(x*y)))*a by L2 at 0.1 fwd
step (t*((y*x)*(a*a)))*a by L3 at 0.1 fwd
step (t*(a*((y*x)*a)))*a by L4 at 0.1 fwd
step (a*(t*((y*x)*a)))*a by L4 at 0 fwd
step (a*u)*a by u at 0.1 bwd

# weakly regular  ==>  left quasi regular a=(y*a)*(x*a).
chain weak_to_left_quasi_regular
laws L3
hyp wr: a = ((a*x)*(a*y))
step (a*x)*(a*y)
step (y*a)*(x*a) by L3 at ε fwd

# left quasi regular a=(x*a)*(y*a)  ==>  weakly regular.
chain left_quasi_regular_to_weak
laws L3
hyp lq: a = ((x*a)*(y*a))
step (x*a)*(y*a)
step (a*y)*(a*x) by L3 at ε fwd
)";

}  // namespace

std::string_view bundled_chains_text() { return kBundledChains; }

std::vector<DerivationChain> bundled_chains() { return parse_chains(kBundledChains); }

}  // namespace ag
