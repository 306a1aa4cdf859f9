/*
 * Copyright 2026 The mexpart Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef MEXPART_MEXPART_H
#define MEXPART_MEXPART_H

/*
 * C interface to libmexpart.
 *
 * Every function returns a mexp_status. On anything other than MEXP_OK the
 * output arguments are left untouched and mexp_last_error() describes the
 * failure; the message is per thread and stays valid until the next failing
 * call on that thread.
 *
 * Handles (mexp_text, mexp_list, mexp_series, mexp_report) are owned by the
 * caller and released with the matching *_free function, which accepts NULL.
 * Strings returned by accessors live as long as the handle they came from.
 *
 * Objects cross the boundary in the line grammar: "8 7 3 2 1 1" for a
 * partition, "~6 ~4 ~3 3 3 ~2 ~1" for an overpartition ("~" = overlined),
 * "5_2 1_1" for a two-colored odd partition, "-" for the empty object.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#  if defined(MEXPART_BUILDING)
#    define MEXP_API __declspec(dllexport)
#  else
#    define MEXP_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) || defined(__clang__)
#  define MEXP_API __attribute__((visibility("default")))
#else
#  define MEXP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mexp_status {
  MEXP_OK = 0,
  MEXP_ERR_NULL_ARG = 1,  /* a required pointer argument was NULL */
  MEXP_ERR_PARAMETER = 2, /* bad family parameter, table id, degree, ... */
  MEXP_ERR_PARSE = 3,     /* text does not follow the object grammar */
  MEXP_ERR_DOMAIN = 4,    /* object outside the domain of the operation */
  MEXP_ERR_RANGE = 5,     /* index past the end of a handle */
  MEXP_ERR_INTERNAL = 6
} mexp_status;

typedef enum mexp_family {
  MEXP_FAMILY_P = 0,    /* all partitions */
  MEXP_FAMILY_PBAR = 1, /* all overpartitions */
  MEXP_FAMILY_PMEX = 2, /* mex sequence length >= r */
  MEXP_FAMILY_OBAR = 3, /* plain parts > r with the parity of r+1 */
  MEXP_FAMILY_PE = 4,   /* no even part < r; r odd */
  MEXP_FAMILY_PO2 = 5   /* odd parts, sizes > r may take color 2; r even */
} mexp_family;

typedef enum mexp_map {
  MEXP_MAP_T5 = 0,      /* pmex(r) -> obar(r) */
  MEXP_MAP_T5INV = 1,   /* obar(r) -> pmex(r) */
  MEXP_MAP_ODD = 2,     /* pe(r) -> obar(r), r odd */
  MEXP_MAP_ODDINV = 3,  /* obar(r) -> pe(r), r odd */
  MEXP_MAP_EVEN = 4,    /* po2(r) -> obar(r), r even */
  MEXP_MAP_EVENINV = 5  /* obar(r) -> po2(r), r even */
} mexp_map;

typedef enum mexp_format {
  MEXP_FORMAT_TEXT = 0,
  MEXP_FORMAT_JSONL = 1
} mexp_format;

typedef struct mexp_text_s* mexp_text;
typedef struct mexp_list_s* mexp_list;
typedef struct mexp_series_s* mexp_series;
typedef struct mexp_report_s* mexp_report;

/* Borrowed view of one verification check. */
typedef struct mexp_check {
  const char* name;
  const char* parameters;
  const char* expected;
  const char* actual;
  int passed;
} mexp_check;

MEXP_API const char* mexp_version(void);
MEXP_API const char* mexp_last_error(void);
MEXP_API const char* mexp_status_name(mexp_status status);

/* Names used on the command line: p pbar pmex obar pe po2 and
 * t5 t5inv odd oddinv even eveninv. */
MEXP_API mexp_status mexp_family_from_name(const char* name, mexp_family* out);
MEXP_API mexp_status mexp_map_from_name(const char* name, mexp_map* out);
MEXP_API int mexp_family_takes_r(mexp_family family);

/* Owned string. */
MEXP_API const char* mexp_text_data(mexp_text text);
MEXP_API void mexp_text_free(mexp_text text);

/* Owned list of strings. */
MEXP_API size_t mexp_list_size(mexp_list list);
MEXP_API mexp_status mexp_list_get(mexp_list list, size_t index, const char** out);
MEXP_API void mexp_list_free(mexp_list list);

/* r is ignored for p and pbar. */
MEXP_API mexp_status mexp_count(mexp_family family, unsigned n, unsigned r, uint64_t* out);
MEXP_API mexp_status mexp_enumerate(mexp_family family, unsigned n, unsigned r,
                                    mexp_format format, mexp_list* out);

/* Parses one line in the map's input grammar and writes its image. */
MEXP_API mexp_status mexp_map_apply(mexp_map map, unsigned r, const char* line,
                                    mexp_format format, mexp_text* out);

/* Mex statistics of a partition line; *infinite is set to 1 (and *length to
 * 0) when no part exceeds the mex. */
MEXP_API mexp_status mexp_mex_sequence(const char* partition, unsigned* start,
                                       unsigned* length, int* infinite);

/* Series with exact coefficients through q^degree. */
MEXP_API mexp_status mexp_default_degree(unsigned* out);
MEXP_API mexp_status mexp_gf_pmex(unsigned r, unsigned degree, mexp_series* out);
MEXP_API unsigned mexp_series_degree(mexp_series series);
/* Decimal string of coefficient k. */
MEXP_API mexp_status mexp_series_coeff(mexp_series series, unsigned k, const char** out);
MEXP_API void mexp_series_free(mexp_series series);
MEXP_API mexp_status mexp_verify_euler(unsigned degree, int* holds);

MEXP_API mexp_status mexp_verify_counts(unsigned max_n, unsigned max_r, mexp_report* out);
MEXP_API mexp_status mexp_verify_roundtrips(unsigned max_n, unsigned max_r, mexp_report* out);
MEXP_API int mexp_report_passed(mexp_report report);
MEXP_API size_t mexp_report_size(mexp_report report);
MEXP_API size_t mexp_report_failures(mexp_report report);
MEXP_API mexp_status mexp_report_check(mexp_report report, size_t index, mexp_check* out);
/* The check rendered as "PASS|FAIL name [parameters] expected=.. actual=..". */
MEXP_API mexp_status mexp_report_line(mexp_report report, size_t index, const char** out);
MEXP_API void mexp_report_free(mexp_report report);

MEXP_API mexp_status mexp_table(int id, mexp_text* out);

#ifdef __cplusplus
}
#endif

#endif /* MEXPART_MEXPART_H */
