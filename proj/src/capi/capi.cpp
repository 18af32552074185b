// SPDX-License-Identifier: Apache-2.0
#include "triad.h"

#include <cstring>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "core/channels.hpp"
#include "core/discrimination.hpp"
#include "core/errors.hpp"
#include "core/json_io.hpp"
#include "core/qwalk.hpp"
#include "core/triality.hpp"

struct triad_state {
  triad::DensityMatrix rho;
};

struct triad_table {
  std::vector<std::string> col_names;
  int rows = 0;
  std::vector<double> values;  // row-major
};

namespace {

thread_local std::string g_last_error;

// Runs f, translating exceptions into status codes + the thread-local
// diagnostic. Out-parameters are only written on the success path inside f.
template <typename F>
triad_status guarded(F&& f) {
  try {
    f();
    return TRIAD_OK;
  } catch (const triad::ValidationError& e) {
    g_last_error = e.what();
    return TRIAD_ERR_VALIDATION;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TRIAD_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown internal failure";
    return TRIAD_ERR_INTERNAL;
  }
}

triad::MeasureKind to_measure(triad_measure m) {
  switch (m) {
    case TRIAD_MEASURE_L1_RAW: return triad::MeasureKind::L1;
    case TRIAD_MEASURE_L1: return triad::MeasureKind::L1Normalized;
    case TRIAD_MEASURE_RELENT_RAW: return triad::MeasureKind::RelEntropy;
    case TRIAD_MEASURE_RELENT: return triad::MeasureKind::RelEntropyNormalized;
  }
  throw triad::ValidationError("unknown measure tag");
}

void require_nonnull(const void* p, const char* what) {
  if (p == nullptr) {
    std::string msg = what;
    msg += " must not be NULL";
    throw triad::ValidationError(msg);
  }
}

triad::ComplexMatrix matrix_from_parts(int dim, const double* re, const double* im) {
  if (dim < 1) throw triad::ValidationError("dimension must be positive");
  triad::ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const std::size_t k = std::size_t(i) * dim + j;
      m(i, j) = triad::cplx(re[k], im ? im[k] : 0.0);
    }
  return m;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

triad_table* make_table(std::vector<std::string> names) {
  auto* t = new triad_table;
  t->col_names = std::move(names);
  return t;
}

}  // namespace

extern "C" {

const char* triad_version(void) { return TRIAD_VERSION; }

const char* triad_last_error(void) { return g_last_error.c_str(); }

void triad_string_destroy(char* s) { delete[] s; }

triad_status triad_state_create(int dim, const double* re, const double* im, triad_state** out) {
  return guarded([&] {
    require_nonnull(re, "re");
    require_nonnull(out, "out");
    *out = new triad_state{triad::DensityMatrix(matrix_from_parts(dim, re, im))};
  });
}

triad_status triad_state_from_json(const char* json_text, triad_state** out) {
  return guarded([&] {
    require_nonnull(json_text, "json_text");
    require_nonnull(out, "out");
    *out = new triad_state{triad::parse_state_json(json_text)};
  });
}

triad_status triad_state_interferometer(int dim, const double* probs, const double* gram_re,
                                        const double* gram_im, triad_state** out) {
  return guarded([&] {
    require_nonnull(probs, "probs");
    require_nonnull(gram_re, "gram_re");
    require_nonnull(out, "out");
    if (dim < 1) throw triad::ValidationError("dimension must be positive");
    triad::InterferometerConfig cfg(std::vector<double>(probs, probs + dim),
                                    matrix_from_parts(dim, gram_re, gram_im));
    *out = new triad_state{triad::interferometer_state(cfg)};
  });
}

triad_status triad_state_random(int dim, int rank, uint64_t seed, triad_state** out) {
  return guarded([&] {
    require_nonnull(out, "out");
    *out = new triad_state{triad::random_density(dim, rank, seed)};
  });
}

int triad_state_dim(const triad_state* s) { return s ? s->rho.dim() : 0; }

triad_status triad_state_get(const triad_state* s, double* re, double* im) {
  return guarded([&] {
    require_nonnull(s, "state");
    require_nonnull(re, "re");
    const int d = s->rho.dim();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const std::size_t k = std::size_t(i) * d + j;
        re[k] = s->rho(i, j).real();
        if (im) im[k] = s->rho(i, j).imag();
      }
  });
}

void triad_state_destroy(triad_state* s) { delete s; }

triad_status triad_state_coherence(const triad_state* s, triad_measure m, double* out) {
  return guarded([&] {
    require_nonnull(s, "state");
    require_nonnull(out, "out");
    *out = triad::coherence(s->rho, to_measure(m));
  });
}

triad_status triad_state_triality(const triad_state* s, triad_measure m, double out[4]) {
  return guarded([&] {
    require_nonnull(s, "state");
    require_nonnull(out, "out");
    const triad::TrialityReport rep = triad::triality(s->rho, to_measure(m));
    out[0] = rep.wave_C;
    out[1] = rep.particle_D;
    out[2] = rep.mixed_M;
    out[3] = rep.sum;
  });
}

triad_status triad_state_triality_json(const triad_state* s, triad_measure m, char** out) {
  return guarded([&] {
    require_nonnull(s, "state");
    require_nonnull(out, "out");
    *out = copy_string(triad::triality_to_json(triad::triality(s->rho, to_measure(m))));
  });
}

triad_status triad_state_visibility(const triad_state* s, int phase_steps, double* out) {
  return guarded([&] {
    require_nonnull(s, "state");
    require_nonnull(out, "out");
    *out = triad::fringe_visibility(s->rho, phase_steps);
  });
}

triad_status triad_example1(double overlap, int steps, triad_table** out) {
  return guarded([&] {
    require_nonnull(out, "out");
    const auto rows = triad::example1_sweep(overlap, steps);
    triad_table* t = make_table({"p", "C", "D", "M"});
    t->rows = int(rows.size());
    t->values.reserve(rows.size() * 4);
    for (const auto& r : rows) {
      t->values.push_back(r.p);
      t->values.push_back(r.C);
      t->values.push_back(r.D);
      t->values.push_back(r.M);
    }
    *out = t;
  });
}

triad_status triad_example2(double overlap, int steps, triad_table** out) {
  return guarded([&] {
    require_nonnull(out, "out");
    const auto rows = triad::example2_sweep(overlap, steps);
    triad_table* t = make_table({"p", "C", "D", "M", "r"});
    t->rows = int(rows.size());
    t->values.reserve(rows.size() * 5);
    for (const auto& r : rows) {
      t->values.push_back(r.p);
      t->values.push_back(r.C);
      t->values.push_back(r.D);
      t->values.push_back(r.M);
      t->values.push_back(r.r);
    }
    *out = t;
  });
}

triad_status triad_bagan_grid(int n, triad_table** out) {
  return guarded([&] {
    require_nonnull(out, "out");
    const auto reports = triad::bagan_grid(n);
    triad_table* t = make_table({"p", "overlap", "P_s", "Acc", "eq16_lhs", "eq17_lhs"});
    t->rows = int(reports.size());
    t->values.reserve(reports.size() * 6);
    for (const auto& r : reports) {
      t->values.push_back(r.prior_p);
      t->values.push_back(r.overlap);
      t->values.push_back(r.p_success);
      t->values.push_back(r.acc_bits);
      t->values.push_back(r.eq16_lhs);
      t->values.push_back(r.eq17_lhs);
    }
    *out = t;
  });
}

triad_status triad_helstrom(double p, double overlap, double* out) {
  return guarded([&] {
    require_nonnull(out, "out");
    *out = triad::helstrom_success(p, overlap);
  });
}

triad_status triad_accessible_info(double p, double overlap, double* out) {
  return guarded([&] {
    require_nonnull(out, "out");
    *out = triad::accessible_info(p, overlap, 1e-10);
  });
}

triad_status triad_walk_trace(const char* config_json, int steps, triad_measure m,
                              triad_table** out) {
  return guarded([&] {
    require_nonnull(out, "out");
    const triad::WalkConfig cfg = config_json ? triad::parse_walk_config_json(config_json)
                                              : triad::WalkConfig::hadamard_default(steps);
    const auto rows = triad::walk_triality_trace(cfg, to_measure(m));
    triad_table* t =
        make_table({"t", "C_coin", "D_coin", "M_coin", "C_pos_l1", "mean_x", "var_x"});
    t->rows = int(rows.size());
    t->values.reserve(rows.size() * 7);
    for (const auto& r : rows) {
      t->values.push_back(double(r.t));
      t->values.push_back(r.C_coin);
      t->values.push_back(r.D_coin);
      t->values.push_back(r.M_coin);
      t->values.push_back(r.C_pos_l1);
      t->values.push_back(r.mean_x);
      t->values.push_back(r.var_x);
    }
    *out = t;
  });
}

triad_status triad_axioms_json(triad_measure m, int trials, uint64_t seed, char** out) {
  return guarded([&] {
    require_nonnull(out, "out");
    std::vector<triad::AxiomReport> reports;
    for (int d : {2, 3, 4})
      reports.push_back(triad::check_axioms(to_measure(m), d, trials, seed));
    *out = copy_string(triad::axiom_reports_to_json(reports));
  });
}

int triad_table_rows(const triad_table* t) { return t ? t->rows : 0; }

int triad_table_cols(const triad_table* t) { return t ? int(t->col_names.size()) : 0; }

const char* triad_table_col_name(const triad_table* t, int col) {
  if (!t || col < 0 || col >= int(t->col_names.size())) return nullptr;
  return t->col_names[std::size_t(col)].c_str();
}

triad_status triad_table_value(const triad_table* t, int row, int col, double* out) {
  return guarded([&] {
    require_nonnull(t, "table");
    require_nonnull(out, "out");
    const int cols = int(t->col_names.size());
    if (row < 0 || row >= t->rows || col < 0 || col >= cols)
      throw triad::ValidationError("table index out of range");
    *out = t->values[std::size_t(row) * cols + col];
  });
}

void triad_table_destroy(triad_table* t) { delete t; }

}  // extern "C"
