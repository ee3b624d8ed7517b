#include <doctest.h>

#include "wzw/wzw.h"

#include <cmath>
#include <string>

TEST_CASE("configuration handle") {
  wzw_config* cfg = nullptr;
  REQUIRE(wzw_config_new(&cfg) == WZW_OK);
  CHECK(wzw_config_set_precision(cfg, 60) == WZW_OK);
  CHECK(wzw_config_set_precision(cfg, 20) == WZW_E_INVALID_ARGUMENT);
  CHECK(std::string(wzw_last_error()).find("precision") != std::string::npos);
  CHECK(wzw_config_set_tol(cfg, 0.01) == WZW_E_INVALID_ARGUMENT);
  CHECK(wzw_config_set_tol(cfg, 1e-10) == WZW_OK);
  CHECK(wzw_config_set_truncation(cfg, 3) == WZW_E_INVALID_ARGUMENT);
  CHECK(wzw_config_set_format_name(cfg, "yaml") == WZW_E_PARSE);
  CHECK(wzw_config_set_format(cfg, WZW_FORMAT_STRUCTURED) == WZW_OK);
  CHECK(wzw_config_set_precision(nullptr, 50) == WZW_E_INVALID_ARGUMENT);
  wzw_config_free(cfg);
  CHECK(std::string(wzw_status_name(WZW_E_AMBIGUOUS)) == "ambiguous");
}

TEST_CASE("commands through the C API") {
  wzw_config* cfg = nullptr;
  REQUIRE(wzw_config_new(&cfg) == WZW_OK);
  wzw_result* r = nullptr;
  REQUIRE(wzw_run_coset(cfg, "su2@1 x su2@1 / su2@2", nullptr, 0, &r) == WZW_OK);
  CHECK(wzw_result_exit_code(r) == 0);
  CHECK(std::string(wzw_result_document(r)).find("b_vac: 0.5") != std::string::npos);
  wzw_result_free(r);

  REQUIRE(wzw_run_modular(cfg, "su2@", &r) == WZW_OK);
  CHECK(wzw_result_exit_code(r) == 2);
  wzw_result_free(r);

  REQUIRE(wzw_run_coset(cfg, "su3@1 / su2@4", nullptr, 0, &r) == WZW_OK);
  CHECK(wzw_result_exit_code(r) == 3);
  wzw_result_free(r);

  REQUIRE(wzw_run_inclusion(cfg, "su2@4:su3@1", nullptr, &r) == WZW_OK);
  CHECK(wzw_result_exit_code(r) == 0);
  wzw_result_free(r);

  CHECK(wzw_run_modular(cfg, nullptr, &r) == WZW_E_INVALID_ARGUMENT);
  CHECK(wzw_run_modular(nullptr, "su2@1", &r) == WZW_E_INVALID_ARGUMENT);
  wzw_config_free(cfg);
}

TEST_CASE("modular and fusion handles") {
  wzw_modular* md = nullptr;
  REQUIRE(wzw_modular_new("su2@2", 50, &md) == WZW_OK);
  CHECK(wzw_modular_size(md) == 3);
  CHECK(std::string(wzw_modular_label(md, 2)) == "2");
  CHECK(wzw_modular_label(md, 3) == nullptr);
  double re = 0, im = 0;
  REQUIRE(wzw_modular_s(md, 0, 1, &re, &im) == WZW_OK);
  CHECK(re == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(wzw_modular_s(md, 0, 3, &re, &im) == WZW_E_INVALID_ARGUMENT);
  long long num = 0, den = 0;
  REQUIRE(wzw_modular_central_charge(md, &num, &den) == WZW_OK);
  CHECK((num == 3 && den == 2));
  REQUIRE(wzw_modular_conformal_dimension(md, 1, &num, &den) == WZW_OK);
  CHECK((num == 3 && den == 16));
  double worst = 1;
  int pass = 0;
  REQUIRE(wzw_modular_verify(md, &worst, &pass) == WZW_OK);
  CHECK(pass == 1);
  CHECK(worst < 1e-40);

  wzw_fusion* ring = nullptr;
  REQUIRE(wzw_fusion_new(md, &ring) == WZW_OK);
  int n = -1;
  REQUIRE(wzw_fusion_coefficient(ring, 1, 1, 2, &n) == WZW_OK);
  CHECK(n == 1);
  REQUIRE(wzw_fusion_coefficient(ring, 1, 1, 1, &n) == WZW_OK);
  CHECK(n == 0);
  double mu = 0;
  REQUIRE(wzw_fusion_global_index(ring, &mu) == WZW_OK);
  CHECK(mu == doctest::Approx(4));
  wzw_fusion_free(ring);
  wzw_modular_free(md);

  CHECK(wzw_modular_new("su2@x", 50, &md) == WZW_E_PARSE);
  CHECK(md == nullptr);
  CHECK(wzw_modular_new("su2@1", 10, &md) == WZW_E_INVALID_ARGUMENT);
}
