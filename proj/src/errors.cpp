#include "dualgroth/errors.hpp"

#include <sstream>

namespace dualgroth {

void check_failed(const char* expr, const char* file, int line) {
  std::ostringstream os;
  os << "internal invariant violated: " << expr << " at " << file << ':' << line;
  throw std::logic_error(os.str());
}

}  // namespace dualgroth
