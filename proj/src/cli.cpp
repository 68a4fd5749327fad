#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gridtop/cutgen.hpp"
#include "gridtop/error.hpp"
#include "gridtop/facet_io.hpp"
#include "gridtop/families.hpp"
#include "gridtop/homology.hpp"
#include "gridtop/morse.hpp"
#include "gridtop/shelling.hpp"
#include "gridtop/verify.hpp"

namespace gridtop {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct ComplexSource {
  std::string input;
  std::string family;
  std::string kind = "total";
  int k = 2;
};

void add_source_options(CLI::App* cmd, ComplexSource& src, bool with_input) {
  if (with_input) cmd->add_option("--input,-i", src.input, "Facet list file ('-' for stdin)");
  cmd->add_option("--family,-f", src.family, "Grid family, e.g. g2xn:4, g3xn':2, h1:3, grid:3x4");
  cmd->add_option("--kind", src.kind, "total or cut")->check(CLI::IsMember({"total", "cut"}));
  cmd->add_option("--k", src.k, "Cut size")->check(CLI::NonNegativeNumber);
}

auto parse_kind(const std::string& s) -> CutKind { return s == "cut" ? CutKind::Cut : CutKind::TotalCut; }

auto load_complex(const ComplexSource& src) -> SimplicialComplex {
  if (!src.input.empty()) {
    if (src.input == "-") return read_facets(std::cin);
    return read_facets_file(src.input);
  }
  if (src.family.empty()) throw ParseError("need --input or --family");
  return build_complex({make_family(parse_family(src.family)), src.k, parse_kind(src.kind)});
}

void emit(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write(out);
}

auto betti_json(const BettiProfile& b, long long euler) -> nlohmann::ordered_json {
  nlohmann::ordered_json betti = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < b.values.size(); ++i) betti[std::to_string(static_cast<int>(i) - 1)] = b.values[i];
  nlohmann::ordered_json wedge = nullptr;
  if (const auto w = wedge_profile(b)) {
    wedge = {{"count", w->count}, {"dim", w->dim ? nlohmann::ordered_json(*w->dim) : nlohmann::ordered_json(nullptr)}};
  }
  return {{"field", b.prime}, {"betti", betti}, {"euler", euler}, {"wedge", wedge}};
}

auto faces_json(const SimplicialComplex& k, const std::vector<Face>& faces) -> nlohmann::ordered_json {
  auto list = nlohmann::ordered_json::array();
  for (Face f : faces) list.push_back(k.face_to_string(f));
  return list;
}

}  // namespace

auto run_cli(int argc, const char* const* argv) -> int {
  CLI::App app{"Cut complexes of grid graphs: construction, homology, shellings, Morse matchings"};
  app.require_subcommand(1);
  app.fallthrough();
  EnumerationLimits limits;
  app.add_option("--max-universe", limits.max_universe, "Face enumeration cap (vertex count)")
      ->check(CLI::Range(1, kMaxVertices));

  ComplexSource build_src;
  std::string build_out;
  auto* build = app.add_subcommand("build", "Write the facets of a cut complex");
  add_source_options(build, build_src, false);
  build->add_option("--out,-o", build_out, "Output file (default stdout)");

  ComplexSource betti_src;
  int field = 2;
  bool betti_as_json = false;
  auto* betti = app.add_subcommand("betti", "Reduced Betti numbers over a prime field");
  add_source_options(betti, betti_src, true);
  betti->add_option("--field,-p", field, "Prime");
  betti->add_flag("--json", betti_as_json, "JSON output");

  auto* shell = app.add_subcommand("shell", "Shelling orders");
  shell->require_subcommand(1);
  std::string check_input;
  std::string check_order;
  auto* shell_check = shell->add_subcommand("check", "Check a facet order");
  shell_check->add_option("--input,-i", check_input, "Facet list file")->required();
  shell_check->add_option("--order", check_order, "Face sequence file")->required();
  int build_n = 3;
  int build_k = 3;
  std::string order_out;
  auto* shell_build = shell->add_subcommand("build-2xn", "Constructed shelling of the k-cut complex of the 2 x n grid");
  shell_build->add_option("--n", build_n, "Columns")->required();
  shell_build->add_option("--k", build_k, "Cut size")->required();
  shell_build->add_option("--out,-o", order_out, "Output file (default stdout)");
  ComplexSource search_src;
  std::size_t budget = kDefaultSearchBudget;
  auto* shell_search = shell->add_subcommand("search", "Exhaustive search for a shelling order");
  add_source_options(shell_search, search_src, true);
  shell_search->add_option("--budget", budget, "Maximum facet count");

  std::string morse_family;
  int morse_k = 2;
  std::string morse_report = "text";
  std::string morse_sequence;
  auto* morse = app.add_subcommand("morse", "Element matchings on a total cut complex");
  morse->add_option("--family,-f", morse_family, "Grid family")->required();
  morse->add_option("--k", morse_k, "Cut size")->check(CLI::NonNegativeNumber);
  morse->add_option("--report", morse_report, "text or json")->check(CLI::IsMember({"text", "json"}));
  morse->add_option("--sequence", morse_sequence, "Comma-separated vertex labels (default: breadth-first from a leaf)");

  std::string claim = "all";
  VerifyOptions vopt;
  bool verify_json = false;
  bool verify_csv = false;
  auto* verify = app.add_subcommand("verify", "Run claim checks");
  verify->add_option("claim", claim, "Claim group, case id, or all");
  verify->add_option("--n-max", vopt.n_max, "Override the sweep bound")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopt.seed, "Seed for the random property suites");
  verify->add_flag("--json", verify_json, "JSON report");
  verify->add_flag("--csv", verify_csv, "CSV report");

  std::string dot_family;
  auto* dot = app.add_subcommand("dot", "Print a grid family in DOT format");
  dot->add_option("--family,-f", dot_family, "Grid family")->required();

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
    if (*build) {
      const auto k = load_complex(build_src);
      emit(build_out, [&k](std::ostream& out) { write_facets(out, k); });
      return kExitPass;
    }
    if (*betti) {
      if (!is_prime(field)) throw ParseError("--field must be prime");
      const auto k = load_complex(betti_src);
      const auto b = reduced_betti(k, field, limits);
      const long long chi = k.is_void() ? 0 : euler_characteristic(k, limits);
      if (betti_as_json) {
        std::cout << betti_json(b, chi).dump() << '\n';
      } else {
        for (std::size_t i = 0; i < b.values.size(); ++i) {
          std::cout << "b_" << static_cast<int>(i) - 1 << " = " << b.values[i] << '\n';
        }
        std::cout << "euler = " << chi << '\n';
        if (const auto w = wedge_profile(b)) {
          if (w->count == 0) {
            std::cout << "profile: acyclic\n";
          } else {
            std::cout << "profile: " << w->count << " x S^" << *w->dim << '\n';
          }
        }
      }
      return kExitPass;
    }
    if (*shell_check) {
      const auto k = read_facets_file(check_input);
      const auto order = read_face_sequence_file(check_order, k.universe());
      const auto res = check_shelling_order(k, order);
      if (res.valid) {
        std::cout << "valid shelling order\n";
        return kExitPass;
      }
      std::cout << "not a shelling: fails at position " << *res.first_failure << " (" << k.face_to_string(order[*res.first_failure])
                << ")\n";
      return kExitFail;
    }
    if (*shell_build) {
      const auto order = shelling_for_cut_2xn(build_n, build_k);
      const auto g = make_grid(2, build_n);
      emit(order_out, [&](std::ostream& out) { write_face_sequence(out, g.labels(), order.facets); });
      std::cerr << order.facets.size() << " facets, certified\n";
      return kExitPass;
    }
    if (*shell_search) {
      const auto k = load_complex(search_src);
      const auto res = search_shelling_order(k, budget);
      switch (res.status) {
        case SearchStatus::Found:
          write_face_sequence(std::cout, k.universe(), res.order->facets);
          return kExitPass;
        case SearchStatus::NoneExists:
          std::cout << "no shelling order exists\n";
          return kExitFail;
        case SearchStatus::BudgetExceeded:
          std::cerr << "facet count " << k.facet_count() << " exceeds the search budget " << budget << '\n';
          return kExitCapacity;
      }
    }
    if (*morse) {
      const Graph g = make_family(parse_family(morse_family));
      const auto k = total_cut_complex(g, morse_k);
      std::vector<int> seq;
      if (!morse_sequence.empty()) {
        std::stringstream in(morse_sequence);
        std::string item;
        while (std::getline(in, item, ',')) seq.push_back(g.index_of(item));
      } else {
        int apex = -1;
        for (int v = g.size() - 1; v >= 0 && apex < 0; --v) {
          if (is_leaf(g, v)) apex = v;
        }
        if (apex >= 0) {
          seq = appendix_sequence(g, apex);
        } else {
          seq = g.vertices().elements();
        }
      }
      const auto matching = sequence_matching(k, seq, limits);
      const auto report = matching_report(k, matching, limits);
      const auto b = reduced_betti(k, 2, limits);
      const bool euler_ok = report.critical_euler() == euler_characteristic(k, limits);
      const bool weak_ok = weak_morse_inequalities_hold(report, b);
      std::optional<WedgeProfile> verdict;
      if (report.acyclic) verdict = morse_wedge_verdict(report);
      if (morse_report == "json") {
        nlohmann::ordered_json crit = nlohmann::ordered_json::object();
        for (std::size_t s = 0; s < report.critical.size(); ++s) {
          if (!report.critical[s].empty()) crit[std::to_string(s)] = faces_json(k, report.critical[s]);
        }
        nlohmann::ordered_json seq_labels = nlohmann::ordered_json::array();
        for (int v : seq) seq_labels.push_back(g.label(v));
        nlohmann::ordered_json v = nullptr;
        if (verdict) v = {{"count", verdict->count}, {"dim", verdict->dim ? nlohmann::ordered_json(*verdict->dim) : nlohmann::ordered_json(nullptr)}};
        const nlohmann::ordered_json doc{{"sequence", seq_labels},
                                         {"acyclic", report.acyclic},
                                         {"critical_by_size", crit},
                                         {"critical_count", report.critical_count()},
                                         {"empty_face_matched", report.empty_face_matched},
                                         {"verdict", v},
                                         {"morse_euler", euler_ok},
                                         {"weak_morse", weak_ok},
                                         {"homology", betti_json(b, euler_characteristic(k, limits))}};
        std::cout << doc.dump(2) << '\n';
      } else {
        std::cout << "acyclic: " << (report.acyclic ? "yes" : "no") << '\n';
        std::cout << "critical faces: " << report.critical_count() << '\n';
        for (std::size_t s = 0; s < report.critical.size(); ++s) {
          for (Face f : report.critical[s]) std::cout << "  size " << s << ": " << k.face_to_string(f) << '\n';
        }
        std::cout << "morse-euler: " << (euler_ok ? "ok" : "violated") << '\n';
        std::cout << "weak morse: " << (weak_ok ? "ok" : "violated") << '\n';
      }
      return report.acyclic && euler_ok && weak_ok ? kExitPass : kExitFail;
    }
    if (*verify) {
      vopt.limits = limits;
      const auto cases = run_claims(claim, vopt);
      if (verify_json) {
        write_cases_json(std::cout, cases);
      } else if (verify_csv) {
        write_cases_csv(std::cout, cases);
      } else {
        write_cases_table(std::cout, cases);
      }
      return all_pass(cases) ? kExitPass : kExitFail;
    }
    if (*dot) {
      std::cout << to_dot(make_family(parse_family(dot_family)));
      return kExitPass;
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gridtop
