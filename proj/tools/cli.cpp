// SPDX-License-Identifier: Apache-2.0
//
// Command-line frontend over the C API in triad.h. Subcommands reproduce the
// two-path triality sweeps, the duality grid, the axiom certification run,
// and the coined-walk trace; output is CSV or JSON on stdout or a file.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "triad.h"

namespace {

// One value, 12 significant digits, locale-independent.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int fail(triad_status st) {
  std::cerr << "error: " << triad_last_error() << "\n";
  return st == TRIAD_ERR_VALIDATION ? 2 : 1;
}

int write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open output file " << path << "\n";
    return 2;
  }
  out << content;
  return out.good() ? 0 : 1;
}

bool slurp(const std::string& path, std::string& content) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    content = ss.str();
    return true;
  }
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  content = ss.str();
  return true;
}

std::string table_to_csv(const triad_table* t) {
  std::ostringstream csv;
  const int cols = triad_table_cols(t);
  for (int j = 0; j < cols; ++j) csv << (j ? "," : "") << triad_table_col_name(t, j);
  csv << "\n";
  for (int i = 0; i < triad_table_rows(t); ++i) {
    for (int j = 0; j < cols; ++j) {
      double v = 0.0;
      triad_table_value(t, i, j, &v);
      csv << (j ? "," : "") << fmt(v);
    }
    csv << "\n";
  }
  return csv.str();
}

int emit_table(triad_status st, triad_table* t, const std::string& out_path) {
  if (st != TRIAD_OK) return fail(st);
  const std::string csv = table_to_csv(t);
  triad_table_destroy(t);
  return write_output(out_path, csv);
}

struct StateHandle {
  triad_state* s = nullptr;
  ~StateHandle() { triad_state_destroy(s); }
};

int load_state(const std::string& path, StateHandle& h) {
  std::string text;
  if (!slurp(path, text)) {
    std::cerr << "error: cannot read input file " << path << "\n";
    return 2;
  }
  const triad_status st = triad_state_from_json(text.c_str(), &h.s);
  return st == TRIAD_OK ? 0 : fail(st);
}

const std::map<std::string, triad_measure> kMeasures = {
    {"l1", TRIAD_MEASURE_L1},
    {"relent", TRIAD_MEASURE_RELENT},
    {"l1-raw", TRIAD_MEASURE_L1_RAW},
    {"relent-raw", TRIAD_MEASURE_RELENT_RAW},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wave-particle-mixedness triality toolkit"};
  app.set_version_flag("--version", TRIAD_VERSION);
  app.require_subcommand(1);

  std::string input_path, output_path, walk_config_path;
  triad_measure measure = TRIAD_MEASURE_L1;
  double overlap1 = 1.0 / 3.0, overlap2 = 2.0 / 3.0;
  int steps1 = 201, steps2 = 201, walk_steps = 200;
  int trials = 1000, grid = 50, phase_steps = 256;
  std::uint64_t seed = 7;

  const auto measure_opt = [&](CLI::App* cmd) {
    cmd->add_option("--measure", measure, "coherence measure")
        ->transform(CLI::CheckedTransformer(kMeasures))
        ->default_str("l1");
  };
  const auto output_opt = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", output_path, "output file (default: stdout)");
  };

  CLI::App* c_triality = app.add_subcommand(
      "triality", "wave/particle/mixedness split of a state, as JSON");
  c_triality->add_option("-i,--input", input_path, "state JSON file, or - for stdin")->required();
  measure_opt(c_triality);
  output_opt(c_triality);

  CLI::App* c_ex1 = app.add_subcommand(
      "example1", "two-path l1 triality sweep over the path probability, as CSV");
  c_ex1->add_option("--overlap", overlap1, "detector overlap |<eta1|eta2>|")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  c_ex1->add_option("--steps", steps1, "grid points over p in [0,1]")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  output_opt(c_ex1);

  CLI::App* c_ex2 = app.add_subcommand(
      "example2", "two-path relative-entropy triality sweep, as CSV");
  c_ex2->add_option("--overlap", overlap2, "detector overlap <eta1|eta2> (real)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  c_ex2->add_option("--steps", steps2, "grid points over p in [0,1]")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  output_opt(c_ex2);

  CLI::App* c_axioms = app.add_subcommand(
      "axioms", "randomized coherence-axiom certification for d = 2, 3, 4, as JSON");
  measure_opt(c_axioms);
  c_axioms->add_option("--trials", trials, "random channels per dimension")
      ->check(CLI::Range(1, 10000000))
      ->capture_default_str();
  c_axioms->add_option("--seed", seed, "base seed for all sampling")->capture_default_str();
  output_opt(c_axioms);

  CLI::App* c_bagan = app.add_subcommand(
      "bagan", "duality-relation grid over prior and overlap, as CSV");
  c_bagan->add_option("--grid", grid, "points per axis")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  output_opt(c_bagan);

  CLI::App* c_walk = app.add_subcommand(
      "walk", "coined-walk triality trace, as CSV");
  c_walk->add_option("--steps", walk_steps, "walk length (Hadamard default walk)")
      ->check(CLI::Range(0, 100000))
      ->capture_default_str();
  c_walk->add_option("-i,--input", walk_config_path,
                     "walk config JSON; overrides --steps entirely");
  measure_opt(c_walk);
  output_opt(c_walk);

  CLI::App* c_vis = app.add_subcommand(
      "visibility", "fringe visibility next to the l1 coherence, as CSV");
  c_vis->add_option("-i,--input", input_path, "qubit state JSON file, or - for stdin")->required();
  c_vis->add_option("--phase-steps", phase_steps, "analyzer phases per sweep")
      ->check(CLI::Range(64, 10000000))
      ->capture_default_str();
  output_opt(c_vis);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help / --version
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (app.got_subcommand(c_triality)) {
    StateHandle h;
    if (int rc = load_state(input_path, h)) return rc;
    char* json = nullptr;
    const triad_status st = triad_state_triality_json(h.s, measure, &json);
    if (st != TRIAD_OK) return fail(st);
    std::string text = json;
    triad_string_destroy(json);
    return write_output(output_path, text + "\n");
  }

  if (app.got_subcommand(c_ex1)) {
    triad_table* t = nullptr;
    const triad_status st = triad_example1(overlap1, steps1, &t);
    return emit_table(st, t, output_path);
  }

  if (app.got_subcommand(c_ex2)) {
    triad_table* t = nullptr;
    const triad_status st = triad_example2(overlap2, steps2, &t);
    return emit_table(st, t, output_path);
  }

  if (app.got_subcommand(c_axioms)) {
    char* json = nullptr;
    const triad_status st = triad_axioms_json(measure, trials, seed, &json);
    if (st != TRIAD_OK) return fail(st);
    std::string text = json;
    triad_string_destroy(json);
    return write_output(output_path, text + "\n");
  }

  if (app.got_subcommand(c_bagan)) {
    triad_table* t = nullptr;
    const triad_status st = triad_bagan_grid(grid, &t);
    return emit_table(st, t, output_path);
  }

  if (app.got_subcommand(c_walk)) {
    std::string config;
    const char* config_ptr = nullptr;
    if (!walk_config_path.empty()) {
      if (!slurp(walk_config_path, config)) {
        std::cerr << "error: cannot read input file " << walk_config_path << "\n";
        return 2;
      }
      config_ptr = config.c_str();
    }
    triad_table* t = nullptr;
    const triad_status st = triad_walk_trace(config_ptr, walk_steps, measure, &t);
    return emit_table(st, t, output_path);
  }

  if (app.got_subcommand(c_vis)) {
    StateHandle h;
    if (int rc = load_state(input_path, h)) return rc;
    double vis = 0.0, c_l1 = 0.0;
    triad_status st = triad_state_visibility(h.s, phase_steps, &vis);
    if (st != TRIAD_OK) return fail(st);
    st = triad_state_coherence(h.s, TRIAD_MEASURE_L1, &c_l1);
    if (st != TRIAD_OK) return fail(st);
    std::ostringstream csv;
    csv << "visibility,C_l1\n" << fmt(vis) << "," << fmt(c_l1) << "\n";
    return write_output(output_path, csv.str());
  }

  return 0;  // unreachable: a subcommand is required
}
