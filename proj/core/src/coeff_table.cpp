#include "freeprob/coeff_table.hpp"

#include "freeprob/error.hpp"

namespace freeprob {

const Scalar& CoeffTable::at_index(int n) const {
  if (!has_index(n))
    throw DomainError("coeff table '" + label + "': index " + std::to_string(n) +
                      " out of range");
  return entries[static_cast<size_t>(n - first_index)];
}


}  // namespace freeprob
