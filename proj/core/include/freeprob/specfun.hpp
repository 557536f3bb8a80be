#pragma once

#include <vector>

#include "freeprob/scalar.hpp"

namespace freeprob {

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.  For a = 0
/// this yields the delta convention (0)_k = [k == 0] automatically.
Rat pochhammer(const Rat& a, unsigned k);
Scalar pochhammer_s(const Scalar& a, unsigned k);

/// Coefficients (in the argument) of the Laguerre polynomial of degree n and
/// index alpha:  L_n^(alpha)(x) = (1/n!) sum_j (-n)_j / j! (alpha+j+1)_{n-j} x^j.
/// The index may be any Scalar (integers and shifted symbols included).
std::vector<Scalar> laguerre_coeffs(unsigned n, const Scalar& alpha);

/// Laguerre polynomial value at a Scalar argument.
Scalar laguerre(unsigned n, const Scalar& alpha, const Scalar& x);

/// Charlier polynomial C_n(x, a) = 2F0(-n, -x; ; -1/a), a != 0.
Rat charlier(unsigned n, const Rat& x, const Rat& a);

/// Terminating generalized hypergeometric sum
///   pFq(upper; lower; z) = sum_m prod (a_i)_m / prod (b_j)_m * z^m / m!.
/// Requires a nonpositive-integer upper parameter; the sum terminates at the
/// smallest such index.  A nonpositive-integer lower parameter is rejected
/// when its magnitude is smaller than the terminating index (the sum would
/// hit a pole); larger magnitudes are fine.
Rat hyper_pfq(const std::vector<Rat>& upper, const std::vector<Rat>& lower,
              const Rat& z);

}  // namespace freeprob
