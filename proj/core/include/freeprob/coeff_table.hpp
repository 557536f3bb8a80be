#pragma once

#include <string>
#include <vector>

#include "freeprob/scalar.hpp"

namespace freeprob {

/// A labeled sequence of exact coefficients with contiguous indices and a
/// record of how it was generated ("closed-form" or "oracle").
struct CoeffTable {
  std::string label;
  int first_index = 1;
  std::vector<Scalar> entries;
  std::string route = "closed-form";

  int last_index() const {
    return first_index + static_cast<int>(entries.size()) - 1;
  }
  const Scalar& at_index(int n) const;
  bool has_index(int n) const {
    return n >= first_index && n <= last_index();
  }
};

}  // namespace freeprob
