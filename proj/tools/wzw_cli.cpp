#include "wzw/wzw.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

namespace {

struct Options {
  int precision = 50;
  double tol = 1e-9;
  int truncation = 20;
  std::string format = "text";
  std::string out;
};

int config_error(wzw_config* cfg) {
  std::cerr << "wzw: " << wzw_last_error() << '\n';
  wzw_config_free(cfg);
  return 2;
}

int emit(const Options& opts, wzw_result* result) {
  const int code = wzw_result_exit_code(result);
  const char* doc = wzw_result_document(result);
  if (opts.out.empty()) {
    std::cout << doc;
  } else {
    std::ofstream f(opts.out);
    if (!f) {
      std::cerr << "wzw: cannot write '" << opts.out << "'\n";
      wzw_result_free(result);
      return 2;
    }
    f << doc;
  }
  wzw_result_free(result);
  return code;
}

int dispatch(const Options& opts, const std::function<wzw_status(const wzw_config*, wzw_result**)>& run) {
  wzw_config* cfg = nullptr;
  if (wzw_config_new(&cfg) != WZW_OK) return config_error(cfg);
  if (wzw_config_set_precision(cfg, opts.precision) != WZW_OK || wzw_config_set_tol(cfg, opts.tol) != WZW_OK ||
      wzw_config_set_truncation(cfg, opts.truncation) != WZW_OK ||
      wzw_config_set_format_name(cfg, opts.format.c_str()) != WZW_OK)
    return config_error(cfg);
  wzw_result* result = nullptr;
  const wzw_status st = run(cfg, &result);
  wzw_config_free(cfg);
  if (st != WZW_OK) {
    std::cerr << "wzw: " << wzw_status_name(st) << ": " << wzw_last_error() << '\n';
    return 1;
  }
  return emit(opts, result);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular data, fusion rules, cosets and conformal inclusions of SU(N) WZW models"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--precision", opts.precision, "working precision in decimal digits (>= 30)");
  app.add_option("--tol", opts.tol, "check tolerance, in (0, 1e-3)");
  app.add_option("--trunc", opts.truncation, "q-series truncation grade, in [5, 40]");
  app.add_option("--format", opts.format, "text, structured or csv");
  app.add_option("--out", opts.out, "write the document to this file");

  std::string spec, table, name, table_out;
  bool oracle = false;
  int bound = 10, k1 = 1, k2 = 1, max_rank = 4, max_level = 6;
  std::function<int()> action;

  auto* modular = app.add_subcommand("modular", "S, T, conformal dimensions and modular checks");
  modular->add_option("spec", spec, "factor list, e.g. 'su2@4' or 'su2@1 x su3@1'")->required();
  modular->callback([&] {
    action = [&] { return dispatch(opts, [&](auto c, auto r) { return wzw_run_modular(c, spec.c_str(), r); }); };
  });

  auto* fusion = app.add_subcommand("fusion", "Verlinde fusion rules, dimensions, Y-matrix");
  fusion->add_option("spec", spec, "factor list")->required();
  fusion->callback([&] {
    action = [&] { return dispatch(opts, [&](auto c, auto r) { return wzw_run_fusion(c, spec.c_str(), r); }); };
  });

  auto* coset = app.add_subcommand("coset", "Kac-Wakimoto report for a diagonal coset");
  coset->add_option("spec", spec, "e.g. 'su2@1 x su2@1 / su2@2'")->required();
  coset->add_option("--table", table, "multiplicity table replacing the vacuum orbit");
  coset->add_flag("--oracle", oracle, "confirm exp with the character oracle (SU(2))");
  coset->callback([&] {
    action = [&] {
      return dispatch(opts, [&](auto c, auto r) {
        return wzw_run_coset(c, spec.c_str(), table.empty() ? nullptr : table.c_str(), oracle ? 1 : 0, r);
      });
    };
  });

  auto* inclusion = app.add_subcommand("inclusion", "branching table and Z for a conformal inclusion");
  inclusion->add_option("name", name, "catalog name 'sub:ambient', e.g. su2@4:su3@1")->required();
  inclusion->add_option("--save-table", table_out, "write the solved branching table");
  inclusion->callback([&] {
    action = [&] {
      return dispatch(opts, [&](auto c, auto r) {
        return wzw_run_inclusion(c, name.c_str(), table_out.empty() ? nullptr : table_out.c_str(), r);
      });
    };
  });

  auto* cat = app.add_subcommand("catalog", "list conformal inclusions");
  cat->add_option("--bound", bound, "largest ambient SU(M)");
  cat->callback([&] {
    action = [&] { return dispatch(opts, [&](auto c, auto r) { return wzw_run_catalog(c, bound, r); }); };
  });

  auto* orc = app.add_subcommand("oracle", "SU(2) diagonal branching functions from characters");
  orc->add_option("k1", k1)->required();
  orc->add_option("k2", k2)->required();
  orc->callback([&] {
    action = [&] { return dispatch(opts, [&](auto c, auto r) { return wzw_run_oracle(c, k1, k2, r); }); };
  });

  auto* suite = app.add_subcommand("suite", "modular and fusion checks over SU(N)_k");
  suite->add_option("--max-rank", max_rank);
  suite->add_option("--max-level", max_level);
  suite->callback([&] {
    action = [&] {
      return dispatch(opts, [&](auto c, auto r) { return wzw_run_suite(c, max_rank, max_level, r); });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return action ? action() : 2;
}
