#include <stdio.h>
#include <string.h>

#include "lucas.h"

#define CHECK(cond)                                               \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__,     \
              __LINE__, #cond);                                   \
      return 1;                                                   \
    }                                                             \
  } while (0)

int main(void) {
  LucasNumber *l = NULL;
  LucasNumber *f = NULL;
  LucasOpCounts counts;
  char buf[64];
  size_t len = 0;

  CHECK(lucas_compute(LUCAS_KIND_LUCAS, 30, LUCAS_ALGO_MIDDLE, &l, &counts) == LUCAS_STATUS_OK);
  CHECK(lucas_number_to_string(l, 10, buf, sizeof buf, &len) == LUCAS_STATUS_OK);
  CHECK(strcmp(buf, "1860498") == 0 && len == 7);
  CHECK(counts.squarings == 6 && counts.general_mults == 0);

  CHECK(lucas_fib_from_lucas(30, l, &f) == LUCAS_STATUS_OK);
  CHECK(lucas_number_to_string(f, 10, buf, sizeof buf, &len) == LUCAS_STATUS_OK);
  CHECK(strcmp(buf, "832040") == 0);

  CHECK(lucas_compute(LUCAS_KIND_LUCAS, 30, 99, &l, NULL) == LUCAS_STATUS_INVALID_ARGUMENT);
  CHECK(lucas_number_to_string(l, 10, NULL, 0, &len) == LUCAS_STATUS_BUFFER_TOO_SMALL && len == 7);

  lucas_number_free(f);
  lucas_number_free(l);
  printf("ok %s\n", lucas_version());
  return 0;
}
