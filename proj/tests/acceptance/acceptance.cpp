// Acceptance runner: one PASS/FAIL/SKIP line per criterion, through the C API.
//
//   acceptance [--long] [--only 1,2,...] [--data-dir DIR] [--threads N]
//
// Without --only it runs criteria 1-10; --long adds 11. Exit status is 0 only
// when every criterion that ran passed.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "qent/qent.h"

int main(int argc, char** argv) {
  qent_verify_options o;
  qent_verify_options_default(&o);
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--long") {
      o.include_long = 1;
    } else if (a == "--quick") {
      o.quick = 1;
    } else if (a == "--only" && i + 1 < argc) {
      for (char* tok = std::strtok(argv[++i], ","); tok; tok = std::strtok(nullptr, ","))
        only.push_back(std::atoi(tok));
    } else if (a == "--data-dir" && i + 1 < argc) {
      o.data_dir = argv[++i];
    } else if (a == "--threads" && i + 1 < argc) {
      o.threads = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "unknown argument %s\n", a.c_str());
      return 2;
    }
  }
  o.only = only.empty() ? nullptr : only.data();
  o.only_count = only.size();
  o.on_line = [](const char* line, void*) {
    std::printf("%s\n", line);
    std::fflush(stdout);
  };

  qent_verify_result* r = nullptr;
  if (qent_verify(&o, &r) != QENT_OK) {
    std::fprintf(stderr, "verify: %s\n", qent_last_error());
    return 2;
  }
  int failed = 0, passed = 0;
  for (size_t i = 0; i < qent_verify_count(r); ++i) {
    int id, p, s;
    qent_verify_entry(r, i, &id, &p, &s);
    if (s) continue;
    p ? ++passed : ++failed;
  }
  qent_verify_result_free(r);
  std::printf("acceptance: %d passed, %d failed\n", passed, failed);
  return failed == 0 ? 0 : 1;
}
