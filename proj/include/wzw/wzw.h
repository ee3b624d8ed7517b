#ifndef WZW_H
#define WZW_H

/* C interface to the WZW modular-data library. Handles are opaque; every
 * function returns a wzw_status and wzw_last_error() describes the most
 * recent failure on the calling thread. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define WZW_API __declspec(dllexport)
#else
#define WZW_API __attribute__((visibility("default")))
#endif

typedef enum wzw_status {
  WZW_OK = 0,
  WZW_E_INVALID_ARGUMENT = 1,
  WZW_E_PARSE = 2,
  WZW_E_PRECISION = 3,
  WZW_E_INTEGRALITY = 4,
  WZW_E_UNSUPPORTED = 5,
  WZW_E_INFEASIBLE = 6,
  WZW_E_AMBIGUOUS = 7,
  WZW_E_IO = 8,
  WZW_E_INTERNAL = 9
} wzw_status;

typedef enum wzw_format { WZW_FORMAT_TEXT = 0, WZW_FORMAT_STRUCTURED = 1, WZW_FORMAT_CSV = 2 } wzw_format;

typedef struct wzw_config wzw_config;
typedef struct wzw_result wzw_result;
typedef struct wzw_modular wzw_modular;
typedef struct wzw_fusion wzw_fusion;

WZW_API const char* wzw_last_error(void);
WZW_API const char* wzw_status_name(wzw_status status);

/* Run configuration: precision 50, tol 1e-9, truncation 20, text output. */
WZW_API wzw_status wzw_config_new(wzw_config** out);
WZW_API void wzw_config_free(wzw_config* cfg);
WZW_API wzw_status wzw_config_set_precision(wzw_config* cfg, int digits);
WZW_API wzw_status wzw_config_set_tol(wzw_config* cfg, double tol);
WZW_API wzw_status wzw_config_set_truncation(wzw_config* cfg, int grade);
WZW_API wzw_status wzw_config_set_format(wzw_config* cfg, wzw_format format);
/* "text", "structured" (alias "json") or "csv" */
WZW_API wzw_status wzw_config_set_format_name(wzw_config* cfg, const char* name);

/* Commands. A result is produced whenever the arguments are non-null; check
 * failures and spec errors are reported through its exit code (0 pass,
 * 1 check failed, 2 parse error or unknown name, 3 unsupported spec). */
WZW_API wzw_status wzw_run_modular(const wzw_config* cfg, const char* spec, wzw_result** out);
WZW_API wzw_status wzw_run_fusion(const wzw_config* cfg, const char* spec, wzw_result** out);
/* table_path may be NULL */
WZW_API wzw_status wzw_run_coset(const wzw_config* cfg, const char* spec, const char* table_path, int use_oracle,
                                 wzw_result** out);
/* table_out may be NULL */
WZW_API wzw_status wzw_run_inclusion(const wzw_config* cfg, const char* name, const char* table_out,
                                     wzw_result** out);
WZW_API wzw_status wzw_run_catalog(const wzw_config* cfg, int bound, wzw_result** out);
WZW_API wzw_status wzw_run_oracle(const wzw_config* cfg, int k1, int k2, wzw_result** out);
WZW_API wzw_status wzw_run_suite(const wzw_config* cfg, int max_rank, int max_level, wzw_result** out);

WZW_API int wzw_result_exit_code(const wzw_result* result);
WZW_API const char* wzw_result_document(const wzw_result* result);
WZW_API void wzw_result_free(wzw_result* result);

/* Modular data of a factor list such as "su2@4" or "su2@1 x su3@1". */
WZW_API wzw_status wzw_modular_new(const char* spec, int digits, wzw_modular** out);
WZW_API void wzw_modular_free(wzw_modular* md);
WZW_API size_t wzw_modular_size(const wzw_modular* md);
/* Label text such as "1,0" or "1;0,1"; valid until the handle is freed. */
WZW_API const char* wzw_modular_label(const wzw_modular* md, size_t i);
WZW_API wzw_status wzw_modular_s(const wzw_modular* md, size_t i, size_t j, double* re, double* im);
WZW_API wzw_status wzw_modular_t(const wzw_modular* md, size_t i, double* re, double* im);
WZW_API wzw_status wzw_modular_conformal_dimension(const wzw_modular* md, size_t i, long long* num, long long* den);
WZW_API wzw_status wzw_modular_central_charge(const wzw_modular* md, long long* num, long long* den);
/* Largest residual of the modular relations; *pass is 1 if all are below tol. */
WZW_API wzw_status wzw_modular_verify(const wzw_modular* md, double* max_residual, int* pass);

WZW_API wzw_status wzw_fusion_new(const wzw_modular* md, wzw_fusion** out);
WZW_API void wzw_fusion_free(wzw_fusion* ring);
WZW_API wzw_status wzw_fusion_coefficient(const wzw_fusion* ring, size_t l, size_t m, size_t v, int* n);
WZW_API wzw_status wzw_fusion_quantum_dimension(const wzw_fusion* ring, size_t l, double* d);
WZW_API wzw_status wzw_fusion_global_index(const wzw_fusion* ring, double* mu);

#ifdef __cplusplus
}
#endif

#endif
