// SPDX-License-Identifier: Apache-2.0
#include "core/json_io.hpp"

#include <sstream>

#include <json.hpp>

#include "core/errors.hpp"

namespace triad {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    std::ostringstream msg;
    msg << "malformed JSON: " << e.what();
    throw ValidationError(msg.str());
  }
}

double number_at(const json& v, const char* field, int row, int col) {
  if (!v.is_number()) {
    std::ostringstream msg;
    msg << field << "[" << row << "][" << col << "] is not a number";
    throw ValidationError(msg.str());
  }
  return v.get<double>();
}

// Reads an n x n matrix of numbers from j[field]; when absent and optional,
// returns all zeros.
std::vector<std::vector<double>> matrix_field(const json& j, const char* field, int n,
                                              bool required) {
  if (!j.contains(field)) {
    if (required) {
      std::ostringstream msg;
      msg << "missing field \"" << field << "\"";
      throw ValidationError(msg.str());
    }
    return std::vector<std::vector<double>>(std::size_t(n), std::vector<double>(std::size_t(n)));
  }
  const json& m = j.at(field);
  if (!m.is_array() || int(m.size()) != n) {
    std::ostringstream msg;
    msg << "\"" << field << "\" must be an array of " << n << " rows";
    throw ValidationError(msg.str());
  }
  std::vector<std::vector<double>> out;
  out.reserve(std::size_t(n));
  for (int i = 0; i < n; ++i) {
    const json& row = m.at(std::size_t(i));
    if (!row.is_array() || int(row.size()) != n) {
      std::ostringstream msg;
      msg << "\"" << field << "\" row " << i << " must have " << n << " entries";
      throw ValidationError(msg.str());
    }
    std::vector<double> vals(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) vals[std::size_t(k)] = number_at(row.at(std::size_t(k)), field, i, k);
    out.push_back(std::move(vals));
  }
  return out;
}

ComplexMatrix combine(const std::vector<std::vector<double>>& re,
                      const std::vector<std::vector<double>>& im) {
  const int n = int(re.size());
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(re[i][j], im[i][j]);
  return m;
}

}  // namespace

DensityMatrix parse_density_json(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("dim") || !j.at("dim").is_number_integer())
    throw ValidationError("density JSON needs an integer \"dim\" field");
  const int n = j.at("dim").get<int>();
  if (n < 1) throw ValidationError("\"dim\" must be positive");
  const auto re = matrix_field(j, "re", n, true);
  const auto im = matrix_field(j, "im", n, false);
  return DensityMatrix(combine(re, im));
}

InterferometerConfig parse_interferometer_json(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("probs") || !j.at("probs").is_array())
    throw ValidationError("interferometer JSON needs a \"probs\" array");
  std::vector<double> probs;
  for (std::size_t i = 0; i < j.at("probs").size(); ++i) {
    const json& v = j.at("probs").at(i);
    if (!v.is_number()) {
      std::ostringstream msg;
      msg << "probs[" << i << "] is not a number";
      throw ValidationError(msg.str());
    }
    probs.push_back(v.get<double>());
  }
  const int n = int(probs.size());
  const auto re = matrix_field(j, "gram_re", n, true);
  const auto im = matrix_field(j, "gram_im", n, false);
  return InterferometerConfig(std::move(probs), combine(re, im));
}

DensityMatrix parse_state_json(const std::string& text) {
  const json j = parse_or_throw(text);
  if (j.is_object() && j.contains("probs"))
    return interferometer_state(parse_interferometer_json(text));
  return parse_density_json(text);
}

WalkConfig parse_walk_config_json(const std::string& text) {
  const json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("steps") || !j.at("steps").is_number_integer())
    throw ValidationError("walk JSON needs an integer \"steps\" field");
  const WalkConfig defaults = WalkConfig::hadamard_default(j.at("steps").get<int>());

  ComplexMatrix coin = defaults.coin;
  if (j.contains("coin_re") || j.contains("coin_im"))
    coin = combine(matrix_field(j, "coin_re", 2, true), matrix_field(j, "coin_im", 2, false));

  int position = defaults.initial_position;
  if (j.contains("initial_position")) {
    if (!j.at("initial_position").is_number_integer())
      throw ValidationError("\"initial_position\" must be an integer");
    position = j.at("initial_position").get<int>();
  }

  PureState coin_state = defaults.initial_coin;
  if (j.contains("initial_coin_re") || j.contains("initial_coin_im")) {
    std::vector<cplx> amps(2);
    for (int part = 0; part < 2; ++part) {
      const char* field = part == 0 ? "initial_coin_re" : "initial_coin_im";
      if (!j.contains(field)) continue;
      const json& arr = j.at(field);
      if (!arr.is_array() || arr.size() != 2) {
        std::ostringstream msg;
        msg << "\"" << field << "\" must be an array of 2 numbers";
        throw ValidationError(msg.str());
      }
      for (int i = 0; i < 2; ++i) {
        const json& v = arr.at(std::size_t(i));
        if (!v.is_number()) {
          std::ostringstream msg;
          msg << field << "[" << i << "] is not a number";
          throw ValidationError(msg.str());
        }
        amps[std::size_t(i)] += part == 0 ? cplx(v.get<double>(), 0.0)
                                          : cplx(0.0, v.get<double>());
      }
    }
    coin_state = PureState(std::move(amps));
  }

  return WalkConfig(defaults.steps, std::move(coin), position, std::move(coin_state));
}

std::string density_to_json(const DensityMatrix& rho) {
  json re = json::array(), im = json::array();
  for (int i = 0; i < rho.dim(); ++i) {
    json re_row = json::array(), im_row = json::array();
    for (int j = 0; j < rho.dim(); ++j) {
      re_row.push_back(rho(i, j).real());
      im_row.push_back(rho(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"dim", rho.dim()}, {"re", std::move(re)}, {"im", std::move(im)}}.dump();
}

std::string triality_to_json(const TrialityReport& rep) {
  return json{{"measure", measure_name(rep.measure)},
              {"C", rep.wave_C},
              {"D", rep.particle_D},
              {"M", rep.mixed_M},
              {"sum", rep.sum}}
      .dump();
}

std::string axiom_reports_to_json(const std::vector<AxiomReport>& reps) {
  json arr = json::array();
  for (const AxiomReport& r : reps)
    arr.push_back(json{{"measure", r.measure_label},
                       {"dim", r.dim},
                       {"trials", r.trials},
                       {"worst_c1", r.worst_c1},
                       {"worst_c2a", r.worst_c2a},
                       {"worst_c2b", r.worst_c2b},
                       {"worst_c3", r.worst_c3},
                       {"seed_c1", r.seed_c1},
                       {"seed_c2a", r.seed_c2a},
                       {"seed_c2b", r.seed_c2b},
                       {"seed_c3", r.seed_c3}});
  return arr.dump();
}

}  // namespace triad
