// agtool: command-line surface over the AG-groupoid toolkit.
//
// Subcommands: check, classify, enum, verify-theorems, replay.
// Exit codes: 0 success / all-pass, 1 property or replay failure,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "ag/classify.hpp"
#include "ag/enumerate.hpp"
#include "ag/harness.hpp"
#include "ag/json_io.hpp"
#include "ag/magma.hpp"
#include "ag/rewrite.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string element_list(const ag::Magma& m, const std::vector<ag::Element>& xs) {
  if (xs.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += m.label_of(xs[i]);
  }
  return out;
}

void print_check_text(const ag::Magma& m, const ag::StructureReport& r, std::ostream& out) {
  out << "order: " << m.order() << '\n';
  if (m.has_labels()) {
    out << "elements:";
    for (const auto& l : m.labels()) out << ' ' << l;
    out << '\n';
  }
  out << "left invertive (AG): " << yesno(r.is_left_invertive) << '\n'
      << "medial: " << yesno(r.is_medial) << '\n'
      << "paramedial: " << yesno(r.is_paramedial) << '\n'
      << "law4 a(bc)=b(ac): " << yesno(r.satisfies_law4) << '\n'
      << "AG*: " << yesno(r.is_ag_star) << '\n'
      << "permutation identity: " << yesno(r.satisfies_permutation_identity) << '\n'
      << "commutative: " << yesno(r.is_commutative) << '\n'
      << "associative: " << yesno(r.is_associative) << '\n'
      << "left identities: " << element_list(m, r.left_identities) << '\n'
      << "right identities: " << element_list(m, r.right_identities) << '\n'
      << "S^2: " << element_list(m, r.square.to_vector()) << '\n'
      << "S = S^2: " << yesno(r.s_equals_s2) << '\n';
}

int cmd_check(const std::string& path, const std::string& format) {
  const ag::Magma m = ag::parse_magma(read_file(path));
  const ag::StructureReport r = ag::probe(m);
  if (format == "json") {
    auto j = ag::to_json(r);
    j["magma"] = ag::to_json(m);
    std::cout << j.dump(2) << '\n';
  } else {
    print_check_text(m, r, std::cout);
  }
  return kExitSuccess;
}

int cmd_classify(const std::string& path, const std::string& format) {
  const ag::Magma m = ag::parse_magma(read_file(path));
  const ag::ClassReport report = ag::classify(m);
  const bool ag_flag = ag::is_left_invertive(m);
  if (format == "json") {
    auto j = ag::to_json(report);
    j["is_ag"] = ag_flag;
    j["order"] = m.order();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "order: " << m.order() << '\n' << "is AG: " << yesno(ag_flag) << '\n';
    for (ag::ClassKind kind : ag::kAllClassKinds) {
      const ag::ClassStatus& s = report[kind];
      std::cout << ag::class_kind_name(kind) << ": " << yesno(s.holds_globally);
      if (s.first_failing) std::cout << " (first failing: " << m.label_of(*s.first_failing) << ")";
      std::cout << "  witnesses:";
      for (std::size_t a = 0; a < s.witnesses.size(); ++a) {
        if (!s.witnesses[a]) continue;
        std::cout << ' ' << m.label_of(static_cast<ag::Element>(a)) << ":(";
        const auto& p = s.witnesses[a]->params;
        for (std::size_t i = 0; i < p.size(); ++i)
          std::cout << (i ? "," : "") << m.label_of(p[i]);
        std::cout << ')';
      }
      std::cout << '\n';
    }
  }
  return kExitSuccess;
}

struct EnumOptions {
  ag::EnumSpec spec;
  bool count_only = false;
  bool golden = false;
  bool naive = false;
  int workers = 1;
  std::string format = "text";
};

int cmd_enum(const EnumOptions& opts) {
  auto run_partition = [&](int index, int count, const ag::MagmaSink& sink) {
    ag::EnumSpec spec = opts.spec;
    spec.worker_index = index;
    spec.worker_count = count;
    if (opts.naive)
      ag::enumerate_naive(spec, sink);
    else
      ag::enumerate_backtracking(spec, sink);
  };

  std::uint64_t total = 0;
  std::vector<ag::Magma> collected;
  if (opts.workers <= 1) {
    run_partition(0, 1, [&](const ag::Magma& m) {
      ++total;
      if (!opts.count_only) collected.push_back(m);
      return true;
    });
  } else {
    std::vector<std::uint64_t> counts(opts.workers, 0);
    std::vector<std::vector<ag::Magma>> buffers(opts.workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < opts.workers; ++w)
      pool.emplace_back([&, w] {
        run_partition(w, opts.workers, [&, w](const ag::Magma& m) {
          ++counts[w];
          if (!opts.count_only) buffers[w].push_back(m);
          return true;
        });
      });
    for (auto& t : pool) t.join();
    for (int w = 0; w < opts.workers; ++w) {
      total += counts[w];
      for (auto& m : buffers[w]) collected.push_back(std::move(m));
    }
  }

  if (opts.count_only) {
    if (opts.format == "json") {
      nlohmann::json j;
      j["order"] = opts.spec.order;
      j["count"] = total;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << total << '\n';
    }
    return kExitSuccess;
  }
  if (opts.golden) {
    std::vector<std::string> lines;
    lines.reserve(collected.size());
    for (const auto& m : collected) lines.push_back(ag::canonical_form_to_line(m.table()));
    std::sort(lines.begin(), lines.end());
    for (const auto& line : lines) std::cout << line << '\n';
    return kExitSuccess;
  }
  for (const auto& m : collected) {
    if (opts.format == "json")
      std::cout << ag::serialize_magma(m, ag::TableFormat::Json) << '\n';
    else
      std::cout << ag::serialize_magma(m, ag::TableFormat::Text) << '\n';
  }
  return kExitSuccess;
}

void print_property_text(const ag::PropertyResult& p, std::ostream& out) {
  out << (p.passed() ? "[PASS] " : "[FAIL] ") << p.property_id << ": checked " << p.checked
      << ", violations " << p.violation_count << " (" << p.universe << ", "
      << p.elapsed.count() << "s)\n";
  for (const auto& v : p.violations) {
    out << "    violation: " << v.detail;
    if (v.element) out << " at element " << *v.element;
    out << "\n      " << ag::serialize_magma(v.magma, ag::TableFormat::Json) << '\n';
  }
}

int cmd_verify_theorems(int max_order, bool exploratory, int workers, bool mutate_fixture,
                        const std::string& format) {
  if (max_order >= 5)
    std::cerr << "note: order >= 5 universes can take a long time\n";
  ag::HarnessOptions opts;
  opts.max_order = max_order;
  opts.workers = workers;
  opts.include_exploratory = exploratory;

  ag::Magma fixture = ag::example_fixture();
  if (mutate_fixture) {
    // Self-test mode: corrupt one cell (row c, column e: d -> c).
    auto table = fixture.table();
    table[2 * fixture.order() + 4] = 2;
    fixture = ag::Magma(fixture.order(), table, fixture.labels());
  }

  const ag::HarnessReport report = ag::run_full_suite(opts, fixture);
  if (format == "json") {
    std::cout << ag::to_json(report, /*include_elapsed=*/false).dump(2) << '\n';
  } else {
    for (const auto& p : report.pass_fail) print_property_text(p, std::cout);
    for (const auto& p : report.exploratory) {
      std::cout << "[exploratory] ";
      print_property_text(p, std::cout);
    }
    for (const auto& s : report.searches) {
      std::cout << "[search] " << s.property_id << ": " << s.note << '\n';
      if (s.witness)
        std::cout << "    " << ag::serialize_magma(*s.witness, ag::TableFormat::Json) << '\n';
    }
    std::cout << (report.all_passed() ? "all properties passed\n" : "FAILURES present\n");
  }
  return report.all_passed() ? kExitSuccess : kExitFailure;
}

int cmd_replay(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  const std::vector<ag::DerivationChain> chains = ag::parse_chains(text);
  if (chains.empty()) std::cerr << "warning: no chains found in " << path << '\n';

  bool all_passed = true;
  nlohmann::json jchains = nlohmann::json::object();
  for (const auto& chain : chains) {
    const ag::ReplayReport report = ag::replay_chain(chain);
    all_passed = all_passed && report.passed;
    if (format == "json") {
      jchains[chain.name] = ag::to_json(report);
    } else if (report.passed) {
      std::cout << "[PASS] " << chain.name << " (" << report.steps.size() << " steps)\n";
    } else {
      std::cout << "[FAIL] " << chain.name << ":\n";
      for (const auto& s : report.steps)
        if (!s.ok)
          std::cout << "    step " << s.index << ": " << s.message << '\n';
    }
  }
  if (format == "json") {
    nlohmann::json j;
    j["chains"] = std::move(jchains);
    j["all_passed"] = all_passed;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (all_passed ? "all chains passed\n" : "replay FAILED\n");
  }
  return all_passed ? kExitSuccess : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite AG-groupoid toolkit: structure checks, regularity "
               "classification, enumeration, theorem verification, proof replay"};
  app.require_subcommand(1);
  app.fallthrough();  // --format/--workers may follow the subcommand

  std::string format = "text";
  int workers = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--workers", workers, "Enumeration worker count")
      ->check(CLI::Range(1, 64));

  std::string check_path, classify_path, replay_path;
  auto* check = app.add_subcommand("check", "Structural report for a Cayley table file");
  check->add_option("path", check_path, "table file (text or JSON)")->required();

  auto* classify = app.add_subcommand("classify", "Regularity classes with witnesses");
  classify->add_option("path", classify_path, "table file (text or JSON)")->required();

  EnumOptions eopts;
  std::string class_name, fill_order = "row";
  auto* enum_cmd = app.add_subcommand("enum", "Enumerate magmas of one order");
  enum_cmd->add_option("--order", eopts.spec.order, "table order")->required()
      ->check(CLI::Range(1, 7));
  enum_cmd->add_flag("--ag", eopts.spec.require_ag, "require the left invertive law");
  enum_cmd->add_flag("--ag-star", eopts.spec.require_ag_star, "require AG*");
  enum_cmd->add_flag("--left-identity", eopts.spec.require_left_identity,
                     "require a left identity");
  enum_cmd->add_option("--class", class_name,
                       "require global membership in a class (e.g. weakly_regular)");
  enum_cmd->add_flag("--up-to-iso", eopts.spec.up_to_iso,
                     "emit only canonical representatives");
  enum_cmd->add_flag("--count-only", eopts.count_only, "print only the count");
  enum_cmd->add_flag("--golden", eopts.golden,
                     "print sorted table flattenings, one per line");
  enum_cmd->add_flag("--naive", eopts.naive, "use the odometer oracle engine (order <= 3)");
  enum_cmd->add_option("--fill-order", fill_order, "backtracking cell fill order")
      ->check(CLI::IsMember({"row", "col"}));

  int max_order = 4;
  bool exploratory = false, mutate_fixture = false;
  auto* verify = app.add_subcommand("verify-theorems", "Run the full property suite");
  verify->add_option("--max-order", max_order, "largest order to enumerate")
      ->check(CLI::Range(1, 5));
  verify->add_flag("--include-exploratory", exploratory,
                   "also run exploratory properties and counterexample searches");
  verify->add_flag("--mutate-fixture", mutate_fixture,
                   "self-test: corrupt one fixture cell and expect a failure");

  auto* replay = app.add_subcommand("replay", "Replay derivation chain fixtures");
  replay->add_option("path", replay_path, "chain fixture file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(check_path, format);
    if (classify->parsed()) return cmd_classify(classify_path, format);
    if (enum_cmd->parsed()) {
      if (!class_name.empty()) {
        auto kind = ag::class_kind_from_name(class_name);
        if (!kind) throw UsageError("unknown class kind: " + class_name);
        eopts.spec.require_class = kind;
      }
      eopts.spec.fill_order = fill_order == "col" ? ag::EnumSpec::FillOrder::ColumnMajor
                                                  : ag::EnumSpec::FillOrder::RowMajor;
      eopts.workers = workers;
      eopts.format = format;
      return cmd_enum(eopts);
    }
    if (verify->parsed())
      return cmd_verify_theorems(max_order, exploratory, workers, mutate_fixture, format);
    if (replay->parsed()) return cmd_replay(replay_path, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ag::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ag::ChainParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
