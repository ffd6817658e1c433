#include "cohft/cli.hpp"

#include <ostream>

namespace cohft {

int runCli(const std::vector<std::string>&, std::ostream&, std::ostream& err) {
  err << "{\"error\":\"not implemented\"}\n";
  return 3;
}

}  // namespace cohft
