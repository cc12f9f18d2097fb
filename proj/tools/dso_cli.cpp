// Command-line front end: index evaluation, exhaustive enumeration,
// bound verification, family construction, and inequality check suites.
//
// Exit codes: 0 success, 1 I/O error, 2 parse error, 3 constraint
// violation, 4 counterexample found.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dso/dso.hpp"
#include "dso/report_json.hpp"

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_fixed9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

dso::EnumerationLimits limits_from_env() {
  dso::EnumerationLimits limits;
  if (const char* raw = std::getenv("DSO_MAX_N")) {
    try {
      const int value = std::stoi(raw);
      limits.max_n_capped = value;
      limits.max_n_unbounded = value;
    } catch (const std::exception&) {
      throw std::invalid_argument("DSO_MAX_N must be an integer, got '" +
                                  std::string(raw) + "'");
    }
  }
  return limits;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    values.push_back(std::stoi(item, &used));
    if (used != item.size()) {
      throw std::invalid_argument("bad integer '" + item + "' in parameter list");
    }
  }
  if (values.empty()) throw std::invalid_argument("empty parameter list");
  return values;
}

int run_index(const std::string& input, const std::string& index_name) {
  const auto weight = dso::weight_by_name(index_name);
  std::ifstream in(input);
  if (!in) throw IoError("cannot open input file '" + input + "'");
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    dso::Graph g = [&] {
      try {
        return dso::from_graph6(line);
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("line " + std::to_string(line_number) +
                                    ": " + e.what());
      }
    }();
    std::cout << line << " " << format_fixed9(dso::evaluate_index(g, weight))
              << "\n";
  }
  if (in.bad()) throw IoError("read failure on '" + input + "'");
  return 0;
}

int run_enumerate(int n, int ell, std::optional<int> max_degree,
                  const std::string& output) {
  dso::InstanceParams params{n, ell, max_degree};
  const auto limits = limits_from_env();
  const auto start = std::chrono::steady_clock::now();
  const auto result = dso::enumerate(params, limits);
  const double runtime =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (output.empty()) {
    for (const auto& g6 : result.graphs_g6) std::cout << g6 << "\n";
  } else {
    std::ofstream out(output);
    if (!out) throw IoError("cannot open output file '" + output + "'");
    for (const auto& g6 : result.graphs_g6) out << g6 << "\n";
    if (!out.flush()) throw IoError("write failure on '" + output + "'");
  }
  std::cout << dso::enumeration_summary(result, runtime).dump() << "\n";
  return 0;
}

int run_verify(int n, int ell, int max_degree) {
  dso::InstanceParams params{n, ell, max_degree};
  const auto report = dso::verify_theorem1(params, limits_from_env());
  std::cout << dso::to_json(report).dump(2) << "\n";
  return 0;
}

void print_graph(const dso::Graph& g) {
  std::cout << dso::to_graph6(g) << "\n";
  const auto census = dso::edge_type_counts(g);
  std::cout << "census:";
  for (const auto& [type, count] : census.counts) {
    std::cout << " m[" << type.first << "," << type.second << "]=" << count;
  }
  std::cout << "\n";
  const auto profile = dso::degree_profile(g);
  std::cout << "degrees:";
  for (auto it = profile.degree_counts.rbegin();
       it != profile.degree_counts.rend(); ++it) {
    std::cout << " " << it->first << "^" << it->second;
  }
  std::cout << "\n";
}

int run_construct(const std::string& family, const std::string& params_text) {
  const auto values = parse_int_list(params_text);
  const auto expect = [&](std::size_t count, const char* usage) {
    if (values.size() != count) {
      throw std::domain_error("family '" + family + "' expects --params " +
                              usage);
    }
  };
  if (family == "extremal") {
    expect(2, "n,ell");
    print_graph(dso::extremal_graph(values[0], values[1]));
  } else if (family == "cstar") {
    expect(1, "ell");
    print_graph(dso::c_star(values[0]));
  } else if (family == "mobius") {
    expect(1, "k");
    print_graph(dso::mobius_ladder(values[0]));
  } else if (family == "circulant") {
    if (values.size() < 2) {
      throw std::domain_error("family 'circulant' expects --params r,a1[,a2...]");
    }
    dso::CirculantSpec spec;
    spec.r = values[0];
    spec.offsets.assign(values.begin() + 1, values.end());
    print_graph(dso::circulant(spec));
  } else {
    throw std::domain_error("unknown family '" + family +
                            "' (known: extremal, circulant, cstar, mobius)");
  }
  return 0;
}

int run_check(const std::string& suite, int limit) {
  if (suite == "table1") {
    const std::vector<std::pair<std::pair<int, int>, double>> expected = {
        {{1, 3}, 0.0274}, {{1, 4}, 0.0685}, {{2, 4}, 0.0312},
        {{3, 4}, 0.0142}, {{4, 4}, 0.0140},
    };
    int failures = 0;
    for (const auto& [pair, target] : expected) {
      const double value = dso::h_weight(pair.first, pair.second);
      const bool ok = std::abs(value - target) < 5e-5;
      std::printf("h(%d,%d) = %.4f expected %.4f %s\n", pair.first, pair.second,
                  value, target, ok ? "ok" : "MISMATCH");
      failures += !ok;
    }
    if (failures > 0) {
      std::printf("%d table entries off\n", failures);
      return 4;
    }
    std::printf("all 5 table entries reproduced to 4 decimals\n");
    return 0;
  }
  if (suite == "lemma") {
    const auto results = dso::scan_lemma_cases();
    std::vector<const dso::LemmaCaseResult*> bad;
    for (const auto& r : results) {
      if (!r.positive) bad.push_back(&r);
    }
    if (!bad.empty()) {
      for (const auto* r : bad) {
        std::printf("counterexample: case %s delta %.9f at (", r->case_id.c_str(),
                    r->delta);
        for (std::size_t i = 0; i < r->parameter_tuple.size(); ++i) {
          std::printf("%s%d", i ? "," : "", r->parameter_tuple[i]);
        }
        std::printf(")\n");
      }
      return 4;
    }
    std::printf("all %zu case tuples positive\n", results.size());
    return 0;
  }
  if (suite == "h") {
    const auto report = dso::scan_h_positivity(limit);
    std::printf("checked %lld pairs up to %d: min h = %.9f at (i,j)=(%d,%d)\n",
                report.pairs_checked, report.limit, report.min_value,
                report.min_at.first, report.min_at.second);
    if (!report.all_positive) {
      for (const auto& [i, j] : report.counterexamples) {
        std::printf("counterexample: h(%d,%d) = %.9f\n", i, j,
                    dso::h_weight(i, j));
      }
      return 4;
    }
    std::printf("all positive\n");
    return 0;
  }
  throw std::domain_error("unknown suite '" + suite +
                          "' (known: lemma, h, table1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diminished Sombor index toolkit"};
  app.require_subcommand(1);

  auto* index_cmd = app.add_subcommand("index", "evaluate an index per graph");
  std::string index_input;
  std::string index_format = "graph6";
  std::string index_name = "dso";
  index_cmd->add_option("--input", index_input, "file of graph6 lines")
      ->required();
  index_cmd->add_option("--format", index_format, "input format")
      ->check(CLI::IsMember({"graph6"}));
  index_cmd->add_option("--index", index_name, "index weight")
      ->check(CLI::IsMember({"dso", "sombor"}));

  auto* enum_cmd =
      app.add_subcommand("enumerate", "list connected graphs by (n, ell)");
  int en_n = 0;
  int en_ell = 0;
  int en_cap = 4;
  bool en_unbounded = false;
  std::string en_output;
  enum_cmd->add_option("--n", en_n, "order")->required();
  enum_cmd->add_option("--ell", en_ell, "cyclomatic number")->required();
  auto* cap_opt = enum_cmd->add_option("--max-degree", en_cap, "degree cap");
  enum_cmd->add_flag("--unbounded", en_unbounded, "no degree cap")
      ->excludes(cap_opt);
  enum_cmd->add_option("--output", en_output, "write graph6 lines here");

  auto* verify_cmd =
      app.add_subcommand("verify", "brute-force bound verification");
  int ver_n = 0;
  int ver_ell = 0;
  int ver_cap = 4;
  verify_cmd->add_option("--n", ver_n, "order")->required();
  verify_cmd->add_option("--ell", ver_ell, "cyclomatic number")->required();
  verify_cmd->add_option("--max-degree", ver_cap, "degree cap");

  auto* construct_cmd =
      app.add_subcommand("construct", "build a named graph family");
  std::string family;
  std::string family_params;
  construct_cmd->add_option("--family", family, "family name")->required();
  construct_cmd->add_option("--params", family_params, "comma-separated ints")
      ->required();

  auto* check_cmd = app.add_subcommand("check", "inequality check suites");
  std::string suite;
  int check_limit = 100;
  check_cmd->add_option("--suite", suite, "suite name")->required();
  check_cmd->add_option("--limit", check_limit, "scan limit for --suite h");

  try {
    app.parse(argc, argv);
    if (index_cmd->parsed()) return run_index(index_input, index_name);
    if (enum_cmd->parsed()) {
      return run_enumerate(
          en_n, en_ell,
          en_unbounded ? std::optional<int>{} : std::optional<int>{en_cap},
          en_output);
    }
    if (verify_cmd->parsed()) return run_verify(ver_n, ver_ell, ver_cap);
    if (construct_cmd->parsed()) return run_construct(family, family_params);
    if (check_cmd->parsed()) return run_check(suite, check_limit);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
