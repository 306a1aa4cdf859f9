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

/* The public header must compile as C and the library must link from C. */

#include <stdio.h>
#include <string.h>

#include "mexpart/mexpart.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: EXPECT(%s)\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main(void) {
  uint64_t count = 0;
  mexp_text text = NULL;
  mexp_list list = NULL;
  const char* line = NULL;

  EXPECT(mexp_count(MEXP_FAMILY_PBAR, 4, 0, &count) == MEXP_OK);
  EXPECT(count == 14);

  EXPECT(mexp_map_apply(MEXP_MAP_T5, 3, "8 7 3 2 1 1", MEXP_FORMAT_TEXT, &text) == MEXP_OK);
  EXPECT(strcmp(mexp_text_data(text), "~6 ~4 4 4 ~3 ~1") == 0);
  mexp_text_free(text);

  EXPECT(mexp_enumerate(MEXP_FAMILY_PE, 8, 3, MEXP_FORMAT_TEXT, &list) == MEXP_OK);
  EXPECT(mexp_list_size(list) == 11);
  EXPECT(mexp_list_get(list, 10, &line) == MEXP_OK);
  EXPECT(strcmp(line, "1 1 1 1 1 1 1 1") == 0);
  mexp_list_free(list);

  EXPECT(mexp_map_apply(MEXP_MAP_T5INV, 2, "~3 ~3", MEXP_FORMAT_TEXT, &text) == MEXP_ERR_DOMAIN);
  EXPECT(strlen(mexp_last_error()) > 0);

  if (failures == 0) printf("C API smoke test passed\n");
  return failures == 0 ? 0 : 1;
}
