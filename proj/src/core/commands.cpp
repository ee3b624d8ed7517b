#include "wzw/commands.hpp"

#include "wzw/coset.hpp"
#include "wzw/errors.hpp"
#include "wzw/induction.hpp"

#include <json.hpp>

#include <functional>
#include <sstream>

namespace wzw {

namespace {

using Json = nlohmann::ordered_json;

Json num(const Real& x) { return format17(x); }
Json num(double x) { return format17(x); }
Json rat(const Rational& q) { return format_rational(q); }
Json cplx(const Cplx& z) { return Json{{"re", num(z.re)}, {"im", num(z.im)}}; }

const char* format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Structured: return "structured";
    case OutputFormat::Csv: return "csv";
  }
  return "text";
}

Json config_echo(const RunConfig& cfg) {
  return Json{{"precision", cfg.precision},
              {"tol", num(cfg.tol)},
              {"truncation", cfg.truncation},
              {"format", format_name(cfg.format)}};
}

Json labels_json(const std::vector<WeightLabel>& labels) {
  Json a = Json::array();
  for (const auto& l : labels) a.push_back(l.str());
  return a;
}

bool is_cplx(const Json& j) { return j.is_object() && j.size() == 2 && j.contains("re") && j.contains("im"); }

bool is_scalar(const Json& j) { return is_cplx(j) || (!j.is_object() && !j.is_array()); }

std::string scalar_text(const Json& j) {
  if (is_cplx(j)) {
    std::string im = j["im"].get<std::string>();
    const bool neg = !im.empty() && im[0] == '-';
    return j["re"].get<std::string>() + (neg ? " - " : " + ") + (neg ? im.substr(1) : im) + "i";
  }
  return j.is_string() ? j.get<std::string>() : j.dump();
}

void render_text(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    os << pad << it.key() << ':';
    if (is_scalar(v)) {
      os << ' ' << scalar_text(v) << '\n';
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
      if (v.size() <= 8) {
        os << " [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
        os << "]\n";
      } else {
        os << '\n';
        for (const auto& x : v) os << pad << "  " << scalar_text(x) << '\n';
      }
    } else if (v.is_array()) {
      os << '\n';
      for (const auto& x : v) {
        if (is_scalar(x)) {
          os << pad << "  " << scalar_text(x) << '\n';
        } else if (x.is_array()) {
          os << pad;
          for (const auto& y : x) os << "  " << (is_scalar(y) ? scalar_text(y) : y.dump());
          os << '\n';
        } else if (std::all_of(x.begin(), x.end(), is_scalar)) {
          os << pad << " ";
          for (auto f = x.begin(); f != x.end(); ++f) os << ' ' << f.key() << '=' << scalar_text(f.value());
          os << '\n';
        } else {
          os << pad << "  -\n";
          render_text(os, x, indent + 4);
        }
      }
    } else {
      os << '\n';
      render_text(os, v, indent + 2);
    }
  }
}

std::string quote(const std::string& s) { return '"' + s + '"'; }

struct Output {
  Json doc;
  std::string csv;
  int exit_code = kExitPass;
};

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
    case ErrorKind::Io: return kExitParse;
    case ErrorKind::Unsupported: return kExitUnsupported;
    default: return kExitCheckFailed;
  }
}

CommandResult finish(const RunConfig& cfg, const Output& out) {
  CommandResult r;
  r.exit_code = out.exit_code;
  switch (cfg.format) {
    case OutputFormat::Structured: r.document = out.doc.dump(2) + "\n"; break;
    case OutputFormat::Csv: r.document = out.csv; break;
    case OutputFormat::Text: {
      std::ostringstream os;
      render_text(os, out.doc, 0);
      r.document = os.str();
      break;
    }
  }
  return r;
}

CommandResult run(const std::string& command, const Json& inputs, const RunConfig& cfg,
                  const std::function<void(Output&)>& body) {
  Output out;
  out.doc["command"] = command;
  out.doc["config"] = config_echo(cfg);
  out.doc["inputs"] = inputs;
  try {
    cfg.validate();
    body(out);
  } catch (const Error& e) {
    out.exit_code = exit_for(e.kind());
    out.doc["error"] = Json{{"kind", to_string(e.kind())}, {"message", e.what()}};
    out.doc["verdict"] = Json{{"pass", false}, {"exit_code", out.exit_code}};
    out.csv = "error,kind,message\nerror," + std::string(to_string(e.kind())) + "," + quote(e.what()) + "\n";
    return finish(cfg, out);
  } catch (const std::exception& e) {
    out.exit_code = kExitCheckFailed;
    out.doc["error"] = Json{{"kind", "internal"}, {"message", e.what()}};
    out.doc["verdict"] = Json{{"pass", false}, {"exit_code", out.exit_code}};
    out.csv = "error,kind,message\nerror,internal," + quote(e.what()) + "\n";
    return finish(cfg, out);
  }
  out.doc["verdict"] = Json{{"pass", out.exit_code == kExitPass}, {"exit_code", out.exit_code}};
  return finish(cfg, out);
}

GroupSpec parse_factor_list(const std::string& spec) {
  if (spec.find('/') != std::string::npos)
    fail(ErrorKind::Parse, "expected a factor list such as 'su2@4' or 'su2@1 x su2@1', got '" + spec + "'");
  return parse_group(spec);
}

Json residual_json(const std::vector<Residual>& rs) {
  Json j = Json::object();
  for (const auto& r : rs) j[r.name] = num(r.value);
  return j;
}

std::string pair_csv(const LabelPair& p) { return quote(p.ambient.str()) + "," + quote(p.sub.str()); }

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "structured" || name == "json") return OutputFormat::Structured;
  if (name == "csv") return OutputFormat::Csv;
  fail(ErrorKind::Parse, "unknown output format '" + name + "' (text, structured, csv)");
}

void RunConfig::validate() const {
  if (precision < kMinDigits)
    fail(ErrorKind::InvalidArgument, "precision must be at least " + std::to_string(kMinDigits) + " digits");
  if (!(tol > 0.0 && tol < 1e-3)) fail(ErrorKind::InvalidArgument, "tolerance must lie in (0, 1e-3)");
  if (truncation < 5 || truncation > kMaxTruncation)
    fail(ErrorKind::InvalidArgument, "truncation must lie in [5, " + std::to_string(kMaxTruncation) + "]");
}

CommandResult cmd_modular(const std::string& spec, const RunConfig& cfg) {
  return run("modular", Json{{"spec", spec}}, cfg, [&](Output& out) {
    const GroupSpec g = parse_factor_list(spec);
    const ModularData md = kac_peterson(g, cfg.precision, cfg.tol);
    const ModularReport rep = verify_modular(md);
    const FusionRing ring = verlinde(md);
    const Real mu = global_index(ring, md);

    Json res;
    res["group"] = g.str();
    res["labels"] = labels_json(md.labels);
    res["central_charge"] = rat(md.c);
    Json delta = Json::array(), t = Json::array(), dims = Json::array(), conj = Json::array();
    for (std::size_t i = 0; i < md.size(); ++i) {
      delta.push_back(rat(md.delta[i]));
      t.push_back(cplx(md.T[i]));
      dims.push_back(num(ring.d[i]));
      conj.push_back(md.labels[md.conj[i]].str());
    }
    res["conformal_dimensions"] = delta;
    res["conjugates"] = conj;
    res["quantum_dimensions"] = dims;
    res["global_index"] = num(mu);
    Json s = Json::array();
    for (std::size_t i = 0; i < md.size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < md.size(); ++j) row.push_back(cplx(md.S(i, j)));
      s.push_back(row);
    }
    res["T"] = t;
    res["S"] = s;
    out.doc["results"] = res;
    out.doc["residuals"] = residual_json(rep.residuals);
    if (!rep.pass) out.exit_code = kExitCheckFailed;

    std::ostringstream os;
    write_matrix_csv(os, md.labels, md.S);
    out.csv = os.str();
  });
}

CommandResult cmd_fusion(const std::string& spec, const RunConfig& cfg) {
  return run("fusion", Json{{"spec", spec}}, cfg, [&](Output& out) {
    const GroupSpec g = parse_factor_list(spec);
    const ModularData md = kac_peterson(g, cfg.precision, cfg.tol);
    const FusionRing ring = verlinde(md);
    const Real mu = global_index(ring, md);
    const bool vac_ok = check_vacuum_identity(ring);
    const bool sym_ok = check_symmetries(ring, md.conj);
    const bool assoc_run = md.factors.empty() || ring.size() <= 36;
    const bool assoc_ok = !assoc_run || check_associativity(ring);
    const double dim_res = dimension_character_residual(ring);
    const YMatrixReport y = y_matrix(md, ring);
    const SigmaTilde st = sigma_tilde(md, ring);

    std::stringstream table;
    write_fusion_table(table, ring);
    Json rules = Json::array();
    for (std::string line; std::getline(table, line);) rules.push_back(line);
    Json dims = Json::array();
    for (const auto& d : ring.d) dims.push_back(num(d));

    Json res;
    res["group"] = g.str();
    res["labels"] = labels_json(ring.labels);
    res["fusion_rules"] = rules;
    res["quantum_dimensions"] = dims;
    res["global_index"] = num(mu);
    res["verlinde_digits"] = ring.digits_used;
    res["sigma_tilde"] = cplx(st.value);
    res["sigma_tilde_abs2"] = num(st.abs2);
    out.doc["results"] = res;

    Json r;
    r["max-rounding-residual"] = num(ring.max_residual);
    r["dimension-character"] = num(dim_res);
    r["Y-S/S_vac,mu"] = num(y.column_ratio_residual);
    r["Y-S/S_vac,vac"] = num(y.vacuum_ratio_residual);
    r["Y-symmetries"] = num(y.symmetry_residual);
    r["|sigma|^2-sum-d^2"] = num(st.residual);
    out.doc["residuals"] = r;

    const bool y_ok = y.vacuum_ratio_residual < cfg.tol && y.symmetry_residual < cfg.tol;
    Json checks;
    checks["vacuum-identity"] = vac_ok;
    checks["frobenius-symmetries"] = sym_ok;
    checks["associativity"] = assoc_run ? Json(assoc_ok) : Json("not run (factorized product)");
    checks["dimension-character"] = dim_res < cfg.tol;
    checks["Y-equals-S/S_vac,vac"] = y_ok;
    checks["Y-equals-S/S_vac,mu"] = y.column_ratio_residual < cfg.tol;
    checks["sigma-tilde"] = st.residual < cfg.tol;
    out.doc["checks"] = checks;
    out.doc["notes"] = Json::array(
        {"Y-equals-S/S_vac,mu is reported but does not enter the verdict; it holds only when every d = 1"});
    if (!(vac_ok && sym_ok && assoc_ok && dim_res < cfg.tol && y_ok && st.residual < cfg.tol))
      out.exit_code = kExitCheckFailed;

    std::ostringstream os;
    write_fusion_csv(os, ring);
    out.csv = os.str();
  });
}

CommandResult cmd_coset(const std::string& spec, const RunConfig& cfg, const std::string& table_path,
                        bool use_oracle) {
  Json inputs{{"spec", spec}};
  if (!table_path.empty()) inputs["table"] = table_path;
  inputs["oracle"] = use_oracle;
  return run("coset", inputs, cfg, [&](Output& out) {
    const auto slash = spec.find('/');
    if (slash == std::string::npos || spec.find('/', slash + 1) != std::string::npos)
      fail(ErrorKind::Parse, "expected 'suN@k1 x suN@k2 / suN@k', got '" + spec + "'");
    const GroupSpec ambient = parse_group(spec.substr(0, slash));
    const GroupSpec sub = parse_group(spec.substr(slash + 1));
    const EmbeddingSpec e = classify_coset(ambient, sub);

    CosetOptions opts;
    opts.digits = cfg.precision;
    opts.tol = cfg.tol;
    if (!table_path.empty()) opts.multiplicities = load_table(table_path);
    if (use_oracle) opts.oracle_truncation = cfg.truncation;
    const CosetReport r = analyze_coset(e, opts);

    Json res;
    res["embedding"] = e.name();
    res["central_charge"] = rat(r.c_coset);
    res["exp_source"] = r.exp.proxy ? "selection rule (proxy)" : "character oracle";
    Json exp = Json::array();
    for (const auto& p : r.exp.pairs) exp.push_back(p.str());
    res["exp"] = exp;
    res["identified_sectors"] = r.identified_sectors;
    Json b = Json::array();
    for (const auto& [p, v] : r.b) {
      Json row{{"pair", p.str()}, {"in_exp", r.exp.contains(p)}, {"b", num(v)}};
      if (const auto it = r.dims.find(p); it != r.dims.end()) row["dim"] = num(it->second);
      b.push_back(row);
    }
    res["b"] = b;
    res["b_vac"] = num(r.b_vac);
    res["dGH_sq"] = num(r.dgh_sq);
    res["mu_G"] = num(r.mu_G);
    res["mu_H"] = num(r.mu_H);
    res["mu_coset"] = num(r.mu_coset);
    res["identified_index"] = num(r.identified_index);
    res["max_imaginary_part"] = num(r.max_imag);
    out.doc["results"] = res;

    Json kw{{"pass", r.kw_pass}, {"witnesses", r.witnesses}};
    out.doc["kac_wakimoto"] = kw;
    Json checks = Json::object();
    for (const auto& c : r.checks) checks[c.name] = Json{{"value", num(c.value)}, {"pass", c.pass}};
    out.doc["checks"] = checks;
    if (!r.warnings.empty()) out.doc["warnings"] = r.warnings;
    if (!r.pass()) out.exit_code = kExitCheckFailed;

    std::ostringstream os;
    os << "ambient,sub,in_exp,b,dim\n";
    for (const auto& [p, v] : r.b) {
      const auto it = r.dims.find(p);
      os << pair_csv(p) << ',' << (r.exp.contains(p) ? 1 : 0) << ',' << format17(v) << ','
         << (it == r.dims.end() ? std::string() : format17(it->second)) << '\n';
    }
    out.csv = os.str();
  });
}

CommandResult cmd_inclusion(const std::string& name, const RunConfig& cfg, const std::string& table_out) {
  return run("inclusion", Json{{"name", name}}, cfg, [&](Output& out) {
    const EmbeddingSpec e = lookup_inclusion(name);
    const ModularData g = kac_peterson(e.ambient, cfg.precision, cfg.tol);
    const ModularData h = kac_peterson(e.sub, cfg.precision, cfg.tol);
    const SolverResult sol = solve_conformal_inclusion(e, g, h);
    check_table(sol.table);
    if (!table_out.empty()) save_table(table_out, sol.table);
    const InvariantMatrix z = z_matrix(sol.table);
    const InvariantReport inv = verify_invariant(z, h);
    const FusionRing ring_h = verlinde(h);

    Json res;
    res["embedding"] = e.name();
    res["kind"] = to_string(e.kind);
    res["central_charge"] = rat(central_charge(e.sub));
    Json table = Json::array();
    for (const auto& p : sol.table.exp()) table.push_back(Json{{"pair", p.str()}, {"multiplicity", sol.table.at(p)}});
    res["branching"] = table;
    res["solver"] = Json{{"support", sol.support_size},
                         {"nullspace_dim", sol.nullspace_dim},
                         {"candidates", sol.candidates},
                         {"conjugate_solutions", sol.conjugate_solutions}};
    res["Z_labels"] = labels_json(z.labels);
    Json zj = Json::array();
    for (std::size_t l = 0; l < z.size(); ++l) {
      Json row = Json::array();
      for (std::size_t m = 0; m < z.size(); ++m) row.push_back(z(l, m));
      zj.push_back(row);
    }
    res["Z"] = zj;
    res["sector_count_sum"] = sector_count_sum(z);
    res["dGH_sq_degenerate"] = num(dgh_sq_conformal(sol.table, ring_h.d));
    out.doc["results"] = res;
    out.doc["residuals"] = Json{{"SB-BS'", num(sol.s_residual)},
                                {"TB-BT'", num(sol.t_residual)},
                                {"ZS-SZ", num(inv.s_residual)},
                                {"ZT-TZ", num(inv.t_residual)},
                                {"min-eigenvalue", num(inv.min_eigenvalue)}};
    const bool psd = inv.min_eigenvalue >= -cfg.tol;
    out.doc["checks"] = Json{{"Z_vac,vac=1", inv.vacuum_one},
                             {"symmetric", inv.symmetric},
                             {"nonnegative", inv.nonnegative},
                             {"positive-semidefinite", psd},
                             {"modular-invariant", inv.pass()}};
    if (!(inv.pass() && inv.vacuum_one && inv.symmetric && inv.nonnegative && psd && sol.s_residual < cfg.tol &&
          sol.t_residual < cfg.tol))
      out.exit_code = kExitCheckFailed;

    std::ostringstream os;
    write_z_csv(os, z);
    out.csv = os.str();
  });
}

CommandResult cmd_catalog(int bound, const RunConfig& cfg) {
  return run("catalog", Json{{"bound", bound}}, cfg, [&](Output& out) {
    if (bound < 2) fail(ErrorKind::InvalidArgument, "catalog bound must be at least 2");
    Json list = Json::array();
    std::ostringstream os;
    os << "name,kind,central_charge\n";
    for (const auto& e : catalog(bound)) {
      list.push_back(Json{{"name", e.name()}, {"central_charge", rat(central_charge(e.sub))}});
      os << e.name() << ',' << to_string(e.kind) << ',' << format_rational(central_charge(e.sub)) << '\n';
    }
    out.doc["results"] = Json{{"inclusions", list}};
    out.csv = os.str();
  });
}

CommandResult cmd_oracle(int k1, int k2, const RunConfig& cfg) {
  return run("oracle", Json{{"k1", k1}, {"k2", k2}}, cfg, [&](Output& out) {
    const OracleResult o = su2_diagonal_branching_oracle(k1, k2, cfg.truncation);
    Json series = Json::array();
    std::ostringstream os;
    os << "ambient,sub,offset,coefficients\n";
    for (const auto& [p, s] : o.branching) {
      if (s.is_zero()) continue;
      Json c = Json::array();
      std::string joined;
      for (auto x : s.coeffs) {
        c.push_back(x);
        joined += (joined.empty() ? "" : " ") + std::to_string(x);
      }
      series.push_back(Json{{"pair", p.str()}, {"offset", rat(s.offset)}, {"coefficients", c}});
      os << pair_csv(p) << ',' << format_rational(s.offset) << ',' << joined << '\n';
    }
    Json veq = Json::array();
    for (const auto& p : o.vacuum_equal) veq.push_back(p.str());
    out.doc["results"] = Json{{"embedding", o.spec.name()},
                              {"support_size", o.support.size()},
                              {"vacuum_equal", veq},
                              {"branching_functions", series}};
    out.doc["checks"] = Json{{"support=selection-rule", o.support_matches_selection_rule},
                             {"vacuum-equal=vacuum-orbit", o.vacuum_equal_matches_orbit}};
    if (!(o.support_matches_selection_rule && o.vacuum_equal_matches_orbit)) out.exit_code = kExitCheckFailed;
    out.csv = os.str();
  });
}

CommandResult cmd_suite(int max_rank, int max_level, const RunConfig& cfg) {
  return run("suite", Json{{"max_rank", max_rank}, {"max_level", max_level}}, cfg, [&](Output& out) {
    if (max_rank < 2 || max_level < 1) fail(ErrorKind::InvalidArgument, "suite needs max rank >= 2, max level >= 1");
    Json rows = Json::array();
    std::ostringstream os;
    os << "group,labels,max_modular_residual,verlinde_residual,pass\n";
    for (int n = 2; n <= max_rank; ++n)
      for (int k = 1; k <= max_level; ++k) {
        const GroupSpec g({Factor{n, k}});
        const ModularData md = kac_peterson(g, cfg.precision, cfg.tol);
        const ModularReport rep = verify_modular(md);
        const FusionRing ring = verlinde(md);
        const bool ok = rep.pass && check_vacuum_identity(ring) && check_symmetries(ring, md.conj) &&
                        check_associativity(ring);
        double worst = 0.0;
        for (const auto& r : rep.residuals) worst = std::max(worst, r.value);
        rows.push_back(Json{{"group", g.str()},
                            {"labels", md.size()},
                            {"max_modular_residual", num(worst)},
                            {"verlinde_residual", num(ring.max_residual)},
                            {"pass", ok}});
        os << g.str() << ',' << md.size() << ',' << format17(worst) << ',' << format17(ring.max_residual) << ','
           << (ok ? 1 : 0) << '\n';
        if (!ok) out.exit_code = kExitCheckFailed;
      }
    out.doc["results"] = rows;
    out.csv = os.str();
  });
}

}  // namespace wzw
