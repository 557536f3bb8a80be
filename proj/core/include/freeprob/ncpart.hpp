#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "freeprob/scalar.hpp"

namespace freeprob {

/// Noncrossing partition of {1..n} in canonical form: blocks sorted
/// internally, blocks ordered by minimum element.
struct NCPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  friend bool operator==(const NCPartition&, const NCPartition&) = default;

  /// Packed restricted-growth encoding, 4 bits per element (n <= 12).
  uint64_t encode() const;
  static NCPartition zero(int n);  // n singleton blocks
  static NCPartition one(int n);   // single block
  /// Canonicalizes an arbitrary block list (asserts it partitions {1..n}).
  static NCPartition from_blocks(int n, std::vector<std::vector<int>> blocks);
  bool is_interval_partition() const;
};

/// All noncrossing partitions of {1..n}, 1 <= n <= 12, cached per n.
/// The count is the n-th Catalan number.
const std::vector<NCPartition>& enumerate_nc(int n);

/// Reverse refinement order: pi <= rho iff every block of rho is a union of
/// blocks of pi.
bool nc_leq(const NCPartition& pi, const NCPartition& rho);

/// Least upper bound in NC(n): the set-partition join followed by repeated
/// merging of crossing block pairs (each merge strictly decreases the block
/// count, so the closure terminates).
NCPartition nc_join(const NCPartition& pi, const NCPartition& rho);

/// Moebius function of the interval [pi, rho], by memoized recursion on the
/// defining convolution identity.  Requires pi <= rho.
long nc_mobius(const NCPartition& pi, const NCPartition& rho);

/// Moebius values Mob(pi, 1_n) for every pi, aligned with enumerate_nc(n).
const std::vector<long>& nc_mobius_to_top(int n);

/// A spectral moment map m -> phi(u^m) for integer powers m (the word
/// reduction: unitarity collapses any word to its net power).  Oracles are
/// expected to satisfy phi(0) = 1 and phi(-m) = phi(m).
struct MomentOracle {
  std::function<Scalar(long)> phi;
};

/// phi(u_{c t}^m) for the free unitary Brownian motion at time scale c.
MomentOracle fubm_oracle(const Rat& time_scale = Rat(1));
/// Haar unitary: phi(u^m) = [m == 0].
MomentOracle haar_oracle();

/// Joint cumulant of the word (u^{w_1}, ..., u^{w_n}) under the oracle:
///   sum over NC(n) of Mob(pi, 1_n) prod_V phi(sum of powers in V).
/// Word length capped at 10.
Scalar mixed_cumulant(const MomentOracle& oracle, const std::vector<int>& word);

/// Moment of the full word product, phi(u^{sum of powers}).
Scalar word_moment(const MomentOracle& oracle, const std::vector<int>& word);

/// Right-hand side of the product-entry cumulant summation: for an interval
/// partition sigma (given by its block lengths) of {1..n},
///   sum over {pi in NC(n) : pi v sigma = 1_n} of prod_V kappa(word | V).
Scalar ks_rhs(const MomentOracle& oracle, const std::vector<int>& sigma_lengths,
              const std::vector<int>& word);

}  // namespace freeprob
