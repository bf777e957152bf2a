// Command-line surface: validation, interval enumeration, invariant
// tables, signed barcodes, and cross-system comparison.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "intrep/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
  std::string input;
  std::string fixture;
  std::string field_spec;
  std::string system_spec = "tot";
  std::string systems_spec;
  std::string interval_filter;
  int jobs = 1;
  std::size_t max_intervals = intrep::IntervalLattice::kDefaultBudget;
  bool oracle_check = false;
  bool verify = false;
  std::string format = "json";
};

void add_input_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("input", cfg.input, "module JSON file");
  cmd->add_option("--fixtures", cfg.fixture, "use a built-in example input");
  cmd->add_option("--field", cfg.field_spec, "q or fp:<prime>");
  cmd->add_option("--jobs", cfg.jobs, "worker threads for the interval sweep")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-intervals", cfg.max_intervals,
                  "interval enumeration budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

intrep::AnyModule load_input(const RunConfig& cfg) {
  std::optional<intrep::AnyField> field;
  if (!cfg.field_spec.empty()) field = intrep::parse_field_spec(cfg.field_spec);
  if (!cfg.fixture.empty())
    return intrep::load_module_json(intrep::fixture_json(cfg.fixture), field);
  if (cfg.input.empty())
    throw CLI::ValidationError("give an input file or --fixtures <name>");
  return intrep::load_module_file(cfg.input, field);
}

intrep::CompressionSystem make_system(const std::string& spec,
                                      const intrep::PosetPtr& ambient) {
  using intrep::CompressionSystem;
  if (spec == "tot") return CompressionSystem::total();
  if (spec == "ss") return CompressionSystem::source_sink();
  if (spec == "zz") return CompressionSystem::zigzag();
  if (spec.rfind("custom:", 0) == 0)
    return intrep::load_custom_system_file(spec.substr(7), ambient);
  throw CLI::ValidationError("--system must be tot|ss|zz|custom:<file>");
}

// Member labels separated by commas at parenthesis depth zero, so grid
// labels like (1,2) stay intact.
std::vector<std::string> split_members(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Lattice indices to report, honoring --interval.
std::vector<int> selected_rows(const intrep::IntervalLattice& lattice,
                               const std::string& filter) {
  std::vector<int> rows;
  if (filter.empty()) {
    rows.resize(lattice.size());
    for (std::size_t i = 0; i < lattice.size(); ++i) rows[i] = static_cast<int>(i);
    return rows;
  }
  std::vector<int> members;
  for (const auto& lbl : split_members(filter))
    members.push_back(lattice.poset().index_of(lbl));
  int idx = lattice.index_of(members);
  if (idx < 0) throw intrep::Error("--interval does not name an interval");
  rows.push_back(idx);
  return rows;
}

int cmd_validate(const RunConfig& cfg) {
  auto any = load_input(cfg);  // full commutativity validation happens here
  return std::visit(
      [&](const auto& M) {
        std::printf("module: OK (%d elements, %zu arrows, field %s)\n",
                    M.poset().size(), M.poset().hasse().size(),
                    M.field().name().c_str());
        auto lattice = intrep::IntervalLattice::enumerate(M.poset_ptr(),
                                                          cfg.max_intervals);
        auto system = make_system(cfg.system_spec, M.poset_ptr());
        auto report = intrep::validate_system(system, lattice);
        int failures = 0;
        for (const auto& e : report.entries) {
          if (e.ok()) continue;
          ++failures;
          const auto& I = lattice[e.interval_index];
          std::string names;
          for (int x : I.members) names += lattice.poset().label(x) + " ";
          std::printf("system %s: FAIL at interval { %s} [%s%s%s%s]\n",
                      system.name().c_str(), names.c_str(),
                      e.image_in_interval ? "" : " image-escapes-interval",
                      e.image_covers_extremes ? "" : " misses-source-or-sink",
                      e.compressed_connected ? "" : " disconnected",
                      e.segment_pair_covered ? "" : " segment-pair-uncovered");
        }
        if (failures == 0)
          std::printf("system %s: all %zu intervals pass\n",
                      system.name().c_str(), lattice.size());
        return failures == 0 ? kExitOk : kExitFailure;
      },
      any);
}

int cmd_intervals(const RunConfig& cfg) {
  auto any = load_input(cfg);
  return std::visit(
      [&](const auto& M) {
        auto lattice = intrep::IntervalLattice::enumerate(M.poset_ptr(),
                                                          cfg.max_intervals);
        if (cfg.format == "csv") {
          std::printf("interval,sources,sinks\n");
          for (std::size_t i = 0; i < lattice.size(); ++i) {
            const auto& I = lattice[i];
            auto join = [&](const std::vector<int>& xs) {
              std::string s;
              for (std::size_t k = 0; k < xs.size(); ++k) {
                if (k) s += '|';
                s += lattice.poset().label(xs[k]);
              }
              return s;
            };
            std::printf("%s,%s,%s\n", join(I.members).c_str(),
                        join(I.sources).c_str(), join(I.sinks).c_str());
          }
        } else {
          std::printf("[\n");
          for (std::size_t i = 0; i < lattice.size(); ++i)
            std::printf("  %s%s\n",
                        intrep::interval_to_json(lattice.poset(), lattice[i]).c_str(),
                        i + 1 < lattice.size() ? "," : "");
          std::printf("]\n");
        }
        return kExitOk;
      },
      any);
}

int cmd_rank(const RunConfig& cfg) {
  auto any = load_input(cfg);
  return std::visit(
      [&](const auto& M) {
        auto lattice = intrep::IntervalLattice::enumerate(M.poset_ptr(),
                                                          cfg.max_intervals);
        auto system = make_system(cfg.system_spec, M.poset_ptr());
        auto table = intrep::invariant_table(M, system, lattice, cfg.jobs);
        auto rows = selected_rows(lattice, cfg.interval_filter);

        int mismatches = 0;
        if (cfg.oracle_check) {
          auto tot = system.kind() == intrep::SystemKind::kTot
                         ? table
                         : intrep::invariant_table(
                               M, intrep::CompressionSystem::total(), lattice,
                               cfg.jobs);
          for (int i : rows) {
            int oracle = intrep::generalized_rank(M, lattice[i]);
            if (oracle != tot.values[i]) {
              ++mismatches;
              std::fprintf(stderr,
                           "oracle mismatch at interval %d: tot=%d lim/colim=%d\n",
                           i, tot.values[i], oracle);
            }
          }
        }

        if (rows.size() == lattice.size()) {
          if (cfg.format == "csv")
            std::fputs(intrep::table_to_csv(lattice, table, M.field().name()).c_str(),
                       stdout);
          else
            std::printf("%s\n",
                        intrep::table_to_json(lattice, table, M.field().name()).c_str());
        } else {
          for (int i : rows) {
            if (cfg.format == "csv") {
              std::string s;
              for (std::size_t k = 0; k < lattice[i].members.size(); ++k) {
                if (k) s += '|';
                s += lattice.poset().label(lattice[i].members[k]);
              }
              std::printf("%s,%d\n", s.c_str(), table.values[i]);
            } else {
              std::printf("{\"interval\":%s,\"mult\":%d}\n",
                          intrep::interval_to_json(lattice.poset(), lattice[i]).c_str(),
                          table.values[i]);
            }
          }
        }
        return mismatches == 0 ? kExitOk : kExitFailure;
      },
      any);
}

int cmd_replace(const RunConfig& cfg) {
  auto any = load_input(cfg);
  return std::visit(
      [&](const auto& M) {
        auto lattice = intrep::IntervalLattice::enumerate(M.poset_ptr(),
                                                          cfg.max_intervals);
        auto system = make_system(cfg.system_spec, M.poset_ptr());
        auto table = intrep::invariant_table(M, system, lattice, cfg.jobs);
        auto delta = intrep::signed_multiplicity(table, lattice);
        auto repl = intrep::split_signed(delta);

        int failures = 0;
        if (cfg.verify) {
          auto recovered = intrep::replacement_invariants(delta, lattice);
          for (std::size_t i = 0; i < lattice.size(); ++i)
            if (recovered.multiplicities[i] != table.values[i]) ++failures;
          for (int x = 0; x < M.poset().size(); ++x)
            if (recovered.dimension_vector[x] != M.dim(x)) ++failures;
          if (failures)
            std::fprintf(stderr, "verify: %d mismatches re-deriving invariants\n",
                         failures);
        }

        if (cfg.format == "csv")
          std::fputs(
              intrep::replacement_to_csv(lattice, delta, repl, M.field().name())
                  .c_str(),
              stdout);
        else
          std::printf("%s\n", intrep::replacement_to_json(lattice, delta, repl,
                                                          M.field().name())
                                  .c_str());
        return failures == 0 ? kExitOk : kExitFailure;
      },
      any);
}

int cmd_compare(const RunConfig& cfg) {
  auto specs = split_members(cfg.systems_spec);
  if (specs.size() < 2)
    throw CLI::ValidationError("--systems needs at least two systems");
  auto any = load_input(cfg);
  return std::visit(
      [&](const auto& M) {
        auto lattice = intrep::IntervalLattice::enumerate(M.poset_ptr(),
                                                          cfg.max_intervals);
        std::vector<intrep::InvariantTable> tables;
        for (const auto& s : specs)
          tables.push_back(intrep::invariant_table(
              M, make_system(s, M.poset_ptr()), lattice, cfg.jobs));
        auto tot = intrep::invariant_table(
            M, intrep::CompressionSystem::total(), lattice, cfg.jobs);

        int floor_violations = 0, differences = 0;
        for (std::size_t i = 0; i < lattice.size(); ++i) {
          for (const auto& t : tables)
            if (t.values[i] < tot.values[i]) ++floor_violations;
          for (std::size_t k = 1; k < tables.size(); ++k)
            if (tables[k].values[i] != tables[0].values[i]) {
              ++differences;
              break;
            }
        }

        if (cfg.format == "csv") {
          std::printf("interval");
          for (const auto& s : specs) std::printf(",%s", s.c_str());
          std::printf("\n");
          for (std::size_t i = 0; i < lattice.size(); ++i) {
            std::string s;
            for (std::size_t k = 0; k < lattice[i].members.size(); ++k) {
              if (k) s += '|';
              s += lattice.poset().label(lattice[i].members[k]);
            }
            std::printf("%s", s.c_str());
            for (const auto& t : tables) std::printf(",%d", t.values[i]);
            std::printf("\n");
          }
        } else {
          std::printf("{\n  \"systems\": [");
          for (std::size_t k = 0; k < specs.size(); ++k)
            std::printf("%s\"%s\"", k ? ", " : "", specs[k].c_str());
          std::printf("],\n  \"rows\": [\n");
          for (std::size_t i = 0; i < lattice.size(); ++i) {
            std::printf("    {\"interval\": %s, \"values\": [",
                        intrep::interval_to_json(lattice.poset(), lattice[i]).c_str());
            for (std::size_t k = 0; k < tables.size(); ++k)
              std::printf("%s%d", k ? ", " : "", tables[k].values[i]);
            std::printf("]}%s\n", i + 1 < lattice.size() ? "," : "");
          }
          std::printf("  ],\n  \"differences\": %d\n}\n", differences);
        }
        if (floor_violations) {
          std::fprintf(stderr,
                       "internal error: %d values fall below the tot floor\n",
                       floor_violations);
          return kExitFailure;
        }
        std::fprintf(stderr, "differences: %d\n", differences);
        return kExitOk;
      },
      any);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval rank invariants and signed barcodes of persistence "
               "modules over finite posets"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* validate = app.add_subcommand("validate",
                                      "check commutativity and system axioms");
  add_input_options(validate, cfg);
  validate->add_option("--system", cfg.system_spec, "tot|ss|zz|custom:<file>");

  auto* intervals = app.add_subcommand("intervals", "enumerate the interval lattice");
  add_input_options(intervals, cfg);

  auto* rank = app.add_subcommand("rank", "interval multiplicity table");
  add_input_options(rank, cfg);
  rank->add_option("--system", cfg.system_spec, "tot|ss|zz|custom:<file>");
  rank->add_option("--interval", cfg.interval_filter,
                   "restrict output to one interval (comma-separated members)");
  rank->add_flag("--oracle-check", cfg.oracle_check,
                 "cross-check tot against the lim->colim rank");

  auto* replace = app.add_subcommand("replace", "signed interval multiplicities");
  add_input_options(replace, cfg);
  replace->add_option("--system", cfg.system_spec, "tot|ss|zz|custom:<file>");
  replace->add_flag("--verify", cfg.verify,
                    "re-derive the multiplicity table from delta and compare");

  auto* compare = app.add_subcommand("compare", "side-by-side system tables");
  add_input_options(compare, cfg);
  compare->add_option("--systems", cfg.systems_spec,
                      "comma-separated list, e.g. tot,zz");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(cfg);
    if (app.got_subcommand(intervals)) return cmd_intervals(cfg);
    if (app.got_subcommand(rank)) return cmd_rank(cfg);
    if (app.got_subcommand(replace)) return cmd_replace(cfg);
    if (app.got_subcommand(compare)) return cmd_compare(cfg);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const intrep::BudgetExceeded& e) {
    std::fprintf(stderr, "budget exceeded: %s\n", e.what());
    return kExitBudget;
  } catch (const intrep::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailure;
  }
  return kExitUsage;
}
