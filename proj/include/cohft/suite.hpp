#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cohft {

struct SuiteOptions {
  int maxGenus = 2;
  int maxLegs = 4;
  std::string theory;  // empty = all: trivial | hodge | rspin | verlinde | hilb | arith | graphs | correlators
  int r = 5;
  int level = 2;
  int hilbM = 4;
  int jobs = 1;
  unsigned seed = 20240811;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Module invariants as executable properties, within desk-scale bounds.
// Progress notes go to `progress` (may be null); results are deterministic.
std::vector<CheckResult> runPropertySuite(const SuiteOptions& opt, std::ostream* progress);

}  // namespace cohft
