#include "wzw/wzw.h"

#include "wzw/commands.hpp"
#include "wzw/errors.hpp"
#include "wzw/fusion.hpp"

#include <string>

struct wzw_config {
  wzw::RunConfig cfg;
};

struct wzw_result {
  wzw::CommandResult res;
};

struct wzw_modular {
  wzw::ModularData md;
  std::vector<std::string> labels;
};

struct wzw_fusion {
  wzw::FusionRing ring;
};

namespace {

thread_local std::string last_error;

wzw_status status_of(wzw::ErrorKind kind) {
  switch (kind) {
    case wzw::ErrorKind::InvalidArgument: return WZW_E_INVALID_ARGUMENT;
    case wzw::ErrorKind::Parse: return WZW_E_PARSE;
    case wzw::ErrorKind::Precision: return WZW_E_PRECISION;
    case wzw::ErrorKind::Integrality: return WZW_E_INTEGRALITY;
    case wzw::ErrorKind::Unsupported: return WZW_E_UNSUPPORTED;
    case wzw::ErrorKind::Infeasible: return WZW_E_INFEASIBLE;
    case wzw::ErrorKind::Ambiguous: return WZW_E_AMBIGUOUS;
    case wzw::ErrorKind::Io: return WZW_E_IO;
  }
  return WZW_E_INTERNAL;
}

template <class F>
wzw_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return WZW_OK;
  } catch (const wzw::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    last_error = e.what();
    return WZW_E_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return WZW_E_INTERNAL;
  }
}

wzw_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return WZW_E_INVALID_ARGUMENT;
}

template <class F>
wzw_status run_command(const wzw_config* cfg, wzw_result** out, F&& f) {
  if (!cfg) return null_arg("cfg");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = new wzw_result{f(cfg->cfg)}; });
}

}  // namespace

extern "C" {

const char* wzw_last_error(void) { return last_error.c_str(); }

const char* wzw_status_name(wzw_status status) {
  switch (status) {
    case WZW_OK: return "ok";
    case WZW_E_INVALID_ARGUMENT: return "invalid-argument";
    case WZW_E_PARSE: return "parse";
    case WZW_E_PRECISION: return "precision";
    case WZW_E_INTEGRALITY: return "integrality";
    case WZW_E_UNSUPPORTED: return "unsupported";
    case WZW_E_INFEASIBLE: return "infeasible";
    case WZW_E_AMBIGUOUS: return "ambiguous";
    case WZW_E_IO: return "io";
    case WZW_E_INTERNAL: return "internal";
  }
  return "unknown";
}

wzw_status wzw_config_new(wzw_config** out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = new wzw_config{}; });
}

void wzw_config_free(wzw_config* cfg) { delete cfg; }

wzw_status wzw_config_set_precision(wzw_config* cfg, int digits) {
  if (!cfg) return null_arg("cfg");
  return guarded([&] {
    wzw::RunConfig next = cfg->cfg;
    next.precision = digits;
    next.validate();
    cfg->cfg = next;
  });
}

wzw_status wzw_config_set_tol(wzw_config* cfg, double tol) {
  if (!cfg) return null_arg("cfg");
  return guarded([&] {
    wzw::RunConfig next = cfg->cfg;
    next.tol = tol;
    next.validate();
    cfg->cfg = next;
  });
}

wzw_status wzw_config_set_truncation(wzw_config* cfg, int grade) {
  if (!cfg) return null_arg("cfg");
  return guarded([&] {
    wzw::RunConfig next = cfg->cfg;
    next.truncation = grade;
    next.validate();
    cfg->cfg = next;
  });
}

wzw_status wzw_config_set_format(wzw_config* cfg, wzw_format format) {
  if (!cfg) return null_arg("cfg");
  switch (format) {
    case WZW_FORMAT_TEXT: cfg->cfg.format = wzw::OutputFormat::Text; return WZW_OK;
    case WZW_FORMAT_STRUCTURED: cfg->cfg.format = wzw::OutputFormat::Structured; return WZW_OK;
    case WZW_FORMAT_CSV: cfg->cfg.format = wzw::OutputFormat::Csv; return WZW_OK;
  }
  last_error = "unknown output format";
  return WZW_E_INVALID_ARGUMENT;
}

wzw_status wzw_config_set_format_name(wzw_config* cfg, const char* name) {
  if (!cfg) return null_arg("cfg");
  if (!name) return null_arg("name");
  return guarded([&] { cfg->cfg.format = wzw::parse_format(name); });
}

wzw_status wzw_run_modular(const wzw_config* cfg, const char* spec, wzw_result** out) {
  if (!spec) return null_arg("spec");
  return run_command(cfg, out, [&](const wzw::RunConfig& c) { return wzw::cmd_modular(spec, c); });
}

wzw_status wzw_run_fusion(const wzw_config* cfg, const char* spec, wzw_result** out) {
  if (!spec) return null_arg("spec");
  return run_command(cfg, out, [&](const wzw::RunConfig& c) { return wzw::cmd_fusion(spec, c); });
}

wzw_status wzw_run_coset(const wzw_config* cfg, const char* spec, const char* table_path, int use_oracle,
                         wzw_result** out) {
  if (!spec) return null_arg("spec");
  return run_command(cfg, out, [&](const wzw::RunConfig& c) {
    return wzw::cmd_coset(spec, c, table_path ? table_path : "", use_oracle != 0);
  });
}

wzw_status wzw_run_inclusion(const wzw_config* cfg, const char* name, const char* table_out, wzw_result** out) {
  if (!name) return null_arg("name");
  return run_command(cfg, out, [&](const wzw::RunConfig& c) {
    return wzw::cmd_inclusion(name, c, table_out ? table_out : "");
  });
}

wzw_status wzw_run_catalog(const wzw_config* cfg, int bound, wzw_result** out) {
  return run_command(cfg, out, [&](const wzw::RunConfig& c) { return wzw::cmd_catalog(bound, c); });
}

wzw_status wzw_run_oracle(const wzw_config* cfg, int k1, int k2, wzw_result** out) {
  return run_command(cfg, out, [&](const wzw::RunConfig& c) { return wzw::cmd_oracle(k1, k2, c); });
}

wzw_status wzw_run_suite(const wzw_config* cfg, int max_rank, int max_level, wzw_result** out) {
  return run_command(cfg, out, [&](const wzw::RunConfig& c) { return wzw::cmd_suite(max_rank, max_level, c); });
}

int wzw_result_exit_code(const wzw_result* result) { return result ? result->res.exit_code : -1; }

const char* wzw_result_document(const wzw_result* result) { return result ? result->res.document.c_str() : ""; }

void wzw_result_free(wzw_result* result) { delete result; }

wzw_status wzw_modular_new(const char* spec, int digits, wzw_modular** out) {
  if (!spec) return null_arg("spec");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    if (digits < wzw::kMinDigits) wzw::fail(wzw::ErrorKind::InvalidArgument, "precision below the minimum");
    auto* h = new wzw_modular{wzw::kac_peterson(wzw::parse_group(spec), digits), {}};
    for (const auto& l : h->md.labels) h->labels.push_back(l.str());
    *out = h;
  });
}

void wzw_modular_free(wzw_modular* md) { delete md; }

size_t wzw_modular_size(const wzw_modular* md) { return md ? md->md.size() : 0; }

const char* wzw_modular_label(const wzw_modular* md, size_t i) {
  if (!md || i >= md->labels.size()) return nullptr;
  return md->labels[i].c_str();
}

wzw_status wzw_modular_s(const wzw_modular* md, size_t i, size_t j, double* re, double* im) {
  if (!md || !re || !im) return null_arg("md/re/im");
  if (i >= md->md.size() || j >= md->md.size()) {
    last_error = "index out of range";
    return WZW_E_INVALID_ARGUMENT;
  }
  *re = wzw::to_double(md->md.S(i, j).re);
  *im = wzw::to_double(md->md.S(i, j).im);
  return WZW_OK;
}

wzw_status wzw_modular_t(const wzw_modular* md, size_t i, double* re, double* im) {
  if (!md || !re || !im) return null_arg("md/re/im");
  if (i >= md->md.size()) {
    last_error = "index out of range";
    return WZW_E_INVALID_ARGUMENT;
  }
  *re = wzw::to_double(md->md.T[i].re);
  *im = wzw::to_double(md->md.T[i].im);
  return WZW_OK;
}

wzw_status wzw_modular_conformal_dimension(const wzw_modular* md, size_t i, long long* num, long long* den) {
  if (!md || !num || !den) return null_arg("md/num/den");
  if (i >= md->md.size()) {
    last_error = "index out of range";
    return WZW_E_INVALID_ARGUMENT;
  }
  *num = md->md.delta[i].numerator();
  *den = md->md.delta[i].denominator();
  return WZW_OK;
}

wzw_status wzw_modular_central_charge(const wzw_modular* md, long long* num, long long* den) {
  if (!md || !num || !den) return null_arg("md/num/den");
  *num = md->md.c.numerator();
  *den = md->md.c.denominator();
  return WZW_OK;
}

wzw_status wzw_modular_verify(const wzw_modular* md, double* max_residual, int* pass) {
  if (!md || !max_residual || !pass) return null_arg("md/max_residual/pass");
  return guarded([&] {
    const auto rep = wzw::verify_modular(md->md);
    double worst = 0.0;
    for (const auto& r : rep.residuals) worst = std::max(worst, r.value);
    *max_residual = worst;
    *pass = rep.pass ? 1 : 0;
  });
}

wzw_status wzw_fusion_new(const wzw_modular* md, wzw_fusion** out) {
  if (!md) return null_arg("md");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto ring = wzw::verlinde(md->md);
    wzw::global_index(ring, md->md);
    *out = new wzw_fusion{std::move(ring)};
  });
}

void wzw_fusion_free(wzw_fusion* ring) { delete ring; }

wzw_status wzw_fusion_coefficient(const wzw_fusion* ring, size_t l, size_t m, size_t v, int* n) {
  if (!ring || !n) return null_arg("ring/n");
  const size_t size = ring->ring.size();
  if (l >= size || m >= size || v >= size) {
    last_error = "index out of range";
    return WZW_E_INVALID_ARGUMENT;
  }
  *n = ring->ring(l, m, v);
  return WZW_OK;
}

wzw_status wzw_fusion_quantum_dimension(const wzw_fusion* ring, size_t l, double* d) {
  if (!ring || !d) return null_arg("ring/d");
  if (l >= ring->ring.size()) {
    last_error = "index out of range";
    return WZW_E_INVALID_ARGUMENT;
  }
  *d = wzw::to_double(ring->ring.d[l]);
  return WZW_OK;
}

wzw_status wzw_fusion_global_index(const wzw_fusion* ring, double* mu) {
  if (!ring || !mu) return null_arg("ring/mu");
  *mu = wzw::to_double(ring->ring.mu);
  return WZW_OK;
}

}  // extern "C"
