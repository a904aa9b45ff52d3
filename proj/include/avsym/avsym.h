/*
 * (C) Copyright 2026 The avsym Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef AVSYM_AVSYM_H
#define AVSYM_AVSYM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define AVSYM_API __attribute__((visibility("default")))
#else
#define AVSYM_API
#endif

/* Status codes. Values are stable. */
typedef enum avsym_status {
  AVSYM_OK = 0,
  AVSYM_INVALID_ARGUMENT = 1,
  AVSYM_DIMENSION_MISMATCH = 2,
  AVSYM_PARSE_ERROR = 3,
  AVSYM_VALIDATION_ERROR = 4,
  AVSYM_INFINITE_COKERNEL = 5,
  AVSYM_DEGENERATE_PAIRING = 6,
  AVSYM_SOURCE_TARGET_MISMATCH = 7,
  AVSYM_NOT_AN_ISOGENY = 8,
  AVSYM_NOT_ISOTROPIC = 9,
  AVSYM_NOT_SYMMETRIC = 10,
  AVSYM_INFINITE_INTERSECTION = 11,
  AVSYM_SEARCH_EXHAUSTED = 12,
  AVSYM_NOT_DIVISIBLE = 13,
  AVSYM_NOT_INJECTIVE = 14,
  AVSYM_NOT_SYMPLECTIC_ISO = 15,
  AVSYM_THEOREM_VIOLATION = 16,
  AVSYM_INTERNAL = 17
} avsym_status;

typedef enum avsym_format { AVSYM_FORMAT_TEXT = 0, AVSYM_FORMAT_JSON = 1 } avsym_format;

/* A parsed and validated instance document. */
typedef struct avsym_instance avsym_instance;
/* The outcome of one command. */
typedef struct avsym_report avsym_report;

typedef struct avsym_options {
  uint64_t seed;
  int has_seed;        /* 0: default seed */
  const char* m_max;   /* decimal integer or NULL */
  long trials;         /* 0: command default */
  int timing;          /* nonzero: report wall time */
} avsym_options;

AVSYM_API const char* avsym_version(void);
AVSYM_API const char* avsym_status_name(avsym_status status);

/* Message of the last failing call on this thread ("" if none). */
AVSYM_API const char* avsym_last_error(void);

/* Parses an instance document; *out is NULL on failure. */
AVSYM_API avsym_status avsym_instance_parse(const char* text, avsym_instance** out);
/* Normalized JSON of an instance; free with avsym_string_free. */
AVSYM_API avsym_status avsym_instance_normalize(const avsym_instance* instance, char** out);
AVSYM_API void avsym_instance_free(avsym_instance* instance);

/* Runs a command. `instance` may be NULL for commands without input. A
 * report is produced for every outcome except a bad call (NULL command or
 * out pointer); mathematical and input errors are carried in the report. */
AVSYM_API avsym_status avsym_run(const char* command, const avsym_instance* instance,
                                 const avsym_options* options, avsym_report** out);
/* The same, parsing `text` first (NULL for no input). A parse failure is
 * returned as a report with exit code 2. */
AVSYM_API avsym_status avsym_run_text(const char* command, const char* text,
                                      const avsym_options* options, avsym_report** out);

AVSYM_API int avsym_report_exit_code(const avsym_report* report);
/* Status carried by the report (AVSYM_OK when the command succeeded). */
AVSYM_API avsym_status avsym_report_status(const avsym_report* report);
/* Rendered report; free with avsym_string_free. */
AVSYM_API char* avsym_report_render(const avsym_report* report, avsym_format format);
AVSYM_API void avsym_report_free(avsym_report* report);

AVSYM_API void avsym_string_free(char* s);

/* Runs the acceptance suite; returns the number of failing criteria and
 * writes the JSON report to *out when out is not NULL. */
AVSYM_API int avsym_selftest(char** out);

#ifdef __cplusplus
}
#endif

#endif /* AVSYM_AVSYM_H */
