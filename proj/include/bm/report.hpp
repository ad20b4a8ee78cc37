#ifndef BM_REPORT_HPP
#define BM_REPORT_HPP

#include <string>
#include <vector>

namespace bm {

struct Violation {
  long i = 0;
  std::string lhs;
  std::string rhs;
};

// Machine-readable outcome of one theorem/identity/sign sweep.
struct VerificationReport {
  std::string theorem;
  long m = 0;
  bool pass = true;
  long checked = 0;
  long skipped_vacuous = 0;
  std::string note;  // optional witness info, e.g. minimum margin seen
  std::vector<Violation> violations;

  void fail(long i, std::string lhs, std::string rhs) {
    pass = false;
    violations.push_back({i, std::move(lhs), std::move(rhs)});
  }

  // {"theorem", "m", "pass", "checked", "skipped_vacuous", "violations": [...]}
  std::string to_json() const;
};

}  // namespace bm

#endif
