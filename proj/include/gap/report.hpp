#pragma once

#include <map>
#include <string>

namespace gap {

enum class BoundKind { lower, upper, exact };

const char* to_string(BoundKind kind);

// One spectral-gap estimate: a certified lower bound, a variational upper
// bound, or an exact value, together with applicability flags and the
// constants that produced it.
struct BoundReport {
  std::string method;
  BoundKind kind = BoundKind::lower;
  double value = 0.0;
  bool assumptions_ok = true;
  std::map<std::string, double> diagnostics;
};

}  // namespace gap
