#include "freeprob/verify.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <ostream>

#include "freeprob/brownian.hpp"
#include "freeprob/jacobi.hpp"
#include "freeprob/ncpart.hpp"
#include "freeprob/schur.hpp"
#include "freeprob/specfun.hpp"

namespace freeprob {

namespace {

CheckResult pass() { return {CheckStatus::Pass, ""}; }
CheckResult pass(std::string detail) { return {CheckStatus::Pass, std::move(detail)}; }
CheckResult fail(std::string detail) { return {CheckStatus::Fail, std::move(detail)}; }
CheckResult finding(std::string detail) { return {CheckStatus::Finding, std::move(detail)}; }

CheckResult expect(bool ok, const std::string& on_fail) {
  return ok ? pass() : fail(on_fail);
}

// Deterministic generator for the randomized property checks.
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 17;
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

Poly random_poly(Rng& rng, int max_deg, int terms) {
  std::vector<Poly::Term> ts;
  for (int i = 0; i < terms; ++i) {
    const Mono m{static_cast<int32_t>(rng.range(0, max_deg)),
                 static_cast<int32_t>(rng.range(0, max_deg))};
    const Rat c = make_rat(rng.range(-9, 9), rng.range(1, 4));
    ts.emplace_back(m, c);
  }
  return Poly::from_terms(std::move(ts));
}

Scalar random_scalar(Rng& rng, bool with_denominator = true) {
  Poly num = random_poly(rng, 3, 4);
  if (!with_denominator) return Scalar(num);
  Poly den;
  do {
    den = random_poly(rng, 2, 3);
  } while (den.is_zero());
  return Scalar::from_frac(std::move(num), std::move(den));
}

Series random_rational_series(Rng& rng, int order, bool unit_linear) {
  Series s(order);
  for (int k = 0; k <= order; ++k)
    s.at(k) = Scalar(make_rat(rng.range(-9, 9), rng.range(1, 5)));
  s.at(0) = Scalar();
  if (unit_linear) {
    Rat lin;
    do {
      lin = make_rat(rng.range(-9, 9), rng.range(1, 5));
    } while (sgn(lin) == 0);
    s.at(1) = Scalar(lin);
  }
  return s;
}

long catalan(int n) {
  Int c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * n),
               static_cast<unsigned long>(n));
  c /= n + 1;
  return c.get_si();
}

std::vector<int> alternating_word(int len) {
  std::vector<int> w(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) w[static_cast<size_t>(i)] = (i % 2 == 0) ? 1 : -1;
  return w;
}

// kappa over a sub-word memo used by the moment-cumulant inverse check.
Scalar memo_cumulant(const MomentOracle& oracle, const std::vector<int>& word,
                     std::map<std::vector<int>, Scalar>& memo) {
  if (auto it = memo.find(word); it != memo.end()) return it->second;
  const Scalar v = mixed_cumulant(oracle, word);
  memo.emplace(word, v);
  return v;
}

// ---------------------------------------------------------------------------
// Criterion 0: field / series / lattice property checks
// ---------------------------------------------------------------------------

CheckResult check_scalar_roundtrip() {
  Rng rng(101);
  for (int i = 0; i < 40; ++i) {
    const Scalar a = random_scalar(rng);
    if (!(Scalar::parse(a.str()) == a))
      return fail("round trip failed for " + a.str());
  }
  return pass();
}

CheckResult check_scalar_field_cancellation() {
  Rng rng(102);
  for (int i = 0; i < 40; ++i) {
    const Scalar a = random_scalar(rng);
    Scalar b = random_scalar(rng);
    if (b.is_zero()) b = Scalar(1L);
    if (!((a * b) / b == a)) return fail("(a*b)/b != a for a = " + a.str());
  }
  return pass();
}

CheckResult check_scalar_derivation() {
  Rng rng(103);
  for (int i = 0; i < 40; ++i) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng);
    if (!((a * b).d_dt() == a.d_dt() * b + a * b.d_dt()))
      return fail("Leibniz rule failed");
  }
  return pass();
}

CheckResult check_eval_homomorphism() {
  Rng rng(104);
  const mpfr_prec_t prec = 128;
  for (int i = 0; i < 20; ++i) {
    const Scalar a = random_scalar(rng, false), b = random_scalar(rng, false);
    const BigFloat x = (a * b).eval(Rat(1), prec);
    const BigFloat y = a.eval(Rat(1), prec) * b.eval(Rat(1), prec);
    const BigFloat diff = (x - y).abs();
    BigFloat tol = x.is_zero() ? y.ulp() : x.ulp();
    tol = tol + tol;  // 2 ulps
    if (diff.is_zero()) continue;
    if (!(diff <= tol)) return fail("eval(a*b) differs beyond 2 ulps");
  }
  return pass();
}

CheckResult check_eval_derivative_fd() {
  // |eval(d_dt a, 1) - central difference| = O(h^2), h = 1e-6, tol 1e-6.
  const Scalar Q = Scalar::q(), T = Scalar::t();
  const std::vector<Scalar> samples = {
      Scalar(1L) / (Scalar(1L) + Q * Q),
      T * Q / (Scalar(1L) - Q * Q),
      Q.pow(3) * (Scalar(1L) + T * T),
  };
  const Rat h(1, 1000000);
  for (const Scalar& a : samples) {
    const BigFloat lhs = a.d_dt().eval(Rat(1), 192);
    const BigFloat fp = a.eval(Rat(1) + h, 192);
    const BigFloat fm = a.eval(Rat(1) - h, 192);
    const BigFloat fd = (fp - fm) / BigFloat::from_rat(2 * h, 192);
    const BigFloat err = (lhs - fd).abs();
    if (!(err <= BigFloat::from_rat(Rat(1, 1000000), 192)))
      return fail("finite-difference check failed for " + a.str());
  }
  return pass();
}

CheckResult check_revert_involution() {
  Rng rng(105);
  for (int i = 0; i < 8; ++i) {
    const Series f = random_rational_series(rng, 7, true);
    if (!(revert(revert(f)) == f)) return fail("revert(revert(f)) != f");
  }
  return pass();
}

CheckResult check_compose_associative() {
  Rng rng(106);
  for (int i = 0; i < 8; ++i) {
    const Series a = random_rational_series(rng, 6, false);
    const Series b = random_rational_series(rng, 6, false);
    const Series c = random_rational_series(rng, 6, false);
    if (!(compose(compose(a, b), c) == compose(a, compose(b, c))))
      return fail("composition associativity failed");
  }
  return pass();
}

CheckResult check_revert_against_lagrange() {
  Rng rng(107);
  for (int i = 0; i < 8; ++i) {
    const Series f = random_rational_series(rng, 7, true);
    if (!(revert(f) == revert_lagrange(f)))
      return fail("iterative and coefficient-formula reversions disagree");
  }
  return pass();
}

CheckResult check_revert_catalan() {
  // revert(z - z^2): brute-force fixed point g = z + g^2.
  const int N = 6;
  Series f(N);
  f.at(1) = Scalar(1L);
  f.at(2) = Scalar(-1L);
  Series g = Series::z(N);
  for (int i = 0; i < N + 1; ++i) g = Series::z(N) + g * g;
  if (!(revert(f) == g)) return fail("Catalan reversion mismatch");
  const long expected[] = {0, 1, 1, 2, 5, 14, 42};
  for (int k = 1; k <= N; ++k)
    if (!(g[k] == Scalar(expected[k]))) return fail("Catalan coefficients wrong");
  return pass();
}

CheckResult check_revert_tree_series() {
  // revert(z e^z) has coefficients (-k)^{k-1}/k!, and rescales to the
  // closed-form free cumulants: kappa_n = (1/t) (tQ)^n W_n.
  const int N = 8;
  Series zez(N);
  Rat mfact(1);
  for (int m = 1; m <= N; ++m) {
    if (m > 1) mfact *= m - 1;
    zez.at(m) = Scalar(Rat(1) / mfact);
  }
  const Series w = revert(zez);
  for (int k = 1; k <= N; ++k) {
    const Rat expected = pow_rat(Rat(-k), k - 1) / factorial(static_cast<unsigned long>(k));
    if (!(w[k] == Scalar(expected))) return fail("tree-series coefficient wrong");
  }
  const Scalar tq = Scalar::t() * Scalar::q_pow(1);
  for (int n = 1; n <= N; ++n) {
    const Scalar kn = w[n] * tq.pow(n) / Scalar::t();
    if (!(kn == fubm_free_cumulant(static_cast<unsigned>(n))))
      return fail("free-cumulant rescaling of the tree series failed");
  }
  return pass();
}

CheckResult check_alpha_series() {
  const int N = 8;
  const Series alpha = alpha_series(N);
  if (!alpha[0].is_zero()) return fail("alpha(0) != 0");
  if (!(alpha[1] == Scalar(Rat(1, 4)))) return fail("alpha'(0) != 1/4");
  // alpha_inv(z) = 4z/(1+z)^2; both compositions give the identity.
  Series one_plus_z(N);
  one_plus_z.at(0) = Scalar(1L);
  one_plus_z.at(1) = Scalar(1L);
  const Series alpha_inv =
      (Series::z(N) / (one_plus_z * one_plus_z)).scaled(Scalar(4L));
  if (!(compose(alpha_inv, alpha) == Series::z(N)))
    return fail("alpha_inv(alpha) != id");
  if (!(compose(alpha, alpha_inv) == Series::z(N)))
    return fail("alpha(alpha_inv) != id");
  return pass();
}

CheckResult check_nc_counts() {
  for (int n = 1; n <= 10; ++n)
    if (static_cast<long>(enumerate_nc(n).size()) != catalan(n))
      return fail("NC(" + std::to_string(n) + ") count is not Catalan");
  // n = 4: all 15 set partitions minus the single crossing one.
  if (enumerate_nc(4).size() != 14) return fail("NC(4) != 14");
  return pass();
}

CheckResult check_mobius_defining_relation() {
  Rng rng(108);
  for (int n = 3; n <= 7; ++n) {
    const auto& all = enumerate_nc(n);
    for (int trial = 0; trial < 6; ++trial) {
      const NCPartition& pi = all[static_cast<size_t>(rng.range(0, static_cast<long>(all.size()) - 1))];
      const NCPartition& rho = all[static_cast<size_t>(rng.range(0, static_cast<long>(all.size()) - 1))];
      if (!nc_leq(pi, rho)) continue;
      long acc = 0;
      for (const NCPartition& tau : all)
        if (nc_leq(pi, tau) && nc_leq(tau, rho)) acc += nc_mobius(tau, rho);
      const long expected = (pi == rho) ? 1 : 0;
      if (acc != expected) return fail("Moebius convolution identity failed");
    }
  }
  // Signed Catalan special value.
  if (nc_mobius(NCPartition::zero(4), NCPartition::one(4)) != -5)
    return fail("Mob(0_4, 1_4) != -5");
  return pass();
}

CheckResult check_moment_cumulant_inverse() {
  const MomentOracle oracle = fubm_oracle(Rat(1));
  std::map<std::vector<int>, Scalar> memo;
  for (int n = 2; n <= 8; n += 2) {
    const std::vector<int> word = alternating_word(n);
    Scalar acc;
    for (const NCPartition& pi : enumerate_nc(n)) {
      Scalar prod(1L);
      for (const auto& block : pi.blocks) {
        std::vector<int> sub;
        for (int e : block) sub.push_back(word[static_cast<size_t>(e - 1)]);
        prod *= memo_cumulant(oracle, sub, memo);
        if (prod.is_zero()) break;
      }
      acc += prod;
    }
    if (!(acc == word_moment(oracle, word)))
      return fail("moment-cumulant inversion failed at n = " + std::to_string(n));
  }
  return pass();
}

CheckResult check_product_entry_summation() {
  const MomentOracle oracle = fubm_oracle(Rat(1));
  for (int n = 2; n <= 6; ++n) {
    const std::vector<int> word = alternating_word(n);
    // All interval partitions = compositions of n.
    for (long mask = 0; mask < (1L << (n - 1)); ++mask) {
      std::vector<int> lengths;
      int run = 1;
      for (int i = 0; i < n - 1; ++i) {
        if ((mask >> i) & 1) {
          lengths.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      lengths.push_back(run);
      std::vector<int> reduced;
      size_t pos = 0;
      for (int len : lengths) {
        int net = 0;
        for (int i = 0; i < len; ++i) net += word[pos++];
        reduced.push_back(net);
      }
      const Scalar lhs = mixed_cumulant(oracle, reduced);
      const Scalar rhs = ks_rhs(oracle, lengths, word);
      if (!(lhs == rhs))
        return fail("product-entry summation failed at n = " + std::to_string(n));
    }
  }
  return pass();
}

CheckResult check_ks_examples() {
  const MomentOracle oracle = fubm_oracle(Rat(1));
  const std::vector<int> word = {1, -1, 1, -1};
  // sigma = {1}{2}{3,4}: kappa_3(u, u*, 1) = 0.
  if (!(mixed_cumulant(oracle, {1, -1, 0}).is_zero()))
    return fail("kappa_3(u, u*, 1) != 0");
  if (!(ks_rhs(oracle, {1, 1, 2}, word).is_zero()))
    return fail("product-entry rhs for {1}{2}{34} != 0");
  // sigma = {1,2}{3,4}: kappa_2(1, 1) = 0.
  if (!(ks_rhs(oracle, {2, 2}, word).is_zero()))
    return fail("product-entry rhs for {12}{34} != 0");
  return pass();
}

CheckResult check_haar_star_cumulants() {
  const MomentOracle haar = haar_oracle();
  const CoeffTable g = g_table(4);
  for (int n = 1; n <= 4; ++n) {
    const Scalar brute = mixed_cumulant(haar, alternating_word(2 * n));
    const Scalar lim = g.at_index(n).subst_q(Rat(0));
    if (!(brute == lim))
      return fail("Haar limit of g_" + std::to_string(n) + " mismatch");
    Rat expected = Rat(catalan(n - 1));
    if (n % 2 == 0) expected = -expected;
    if (!(brute == Scalar(expected))) return fail("Haar star cumulant value wrong");
  }
  return pass();
}

CheckResult check_g_oracle_time_scale() {
  // The generating recursion for g matches alternating star cumulants at the
  // unscaled time (initial value kappa_2(u, u*) = 1 - Q^2).
  const MomentOracle oracle = fubm_oracle(Rat(1));
  const CoeffTable g = g_table(3);
  for (int n = 1; n <= 3; ++n)
    if (!(g.at_index(n) == mixed_cumulant(oracle, alternating_word(2 * n))))
      return fail("g_" + std::to_string(n) + " disagrees with the cumulant oracle");
  return pass();
}

CheckResult check_jacobi_cumulant_routes() {
  const CoeffTable r1 = jacobi_cumulants_r(6);
  const CoeffTable r2 = jacobi_cumulants_moebius(6);
  for (int n = 1; n <= 6; ++n)
    if (!(r1.at_index(n) == r2.at_index(n)))
      return fail("R-transform and Moebius cumulants differ at n = " + std::to_string(n));
  const CoeffTable r3 = jacobi_cumulants_star(5);
  for (int n = 1; n <= 5; ++n)
    if (!(r1.at_index(n) == r3.at_index(n)))
      return fail("star-average cumulants differ at n = " + std::to_string(n));
  if (!(r1.at_index(1) == (Scalar(1L) + Scalar::q_pow(2)) / Scalar(2L)))
    return fail("kappa_1 value wrong");
  const Series m = m_series_moments(2);
  if (!(r1.at_index(2) == m[2] - m[1] * m[1]))
    return fail("kappa_2 != m_2 - m_1^2");
  return pass();
}

// gamma_0..gamma_4 at order 6, shared by the depth-4 checks (gamma_4 is the
// single heaviest rational-function computation in the suite).
const std::vector<Scalar>& deep_verblunsky() {
  static const std::vector<Scalar> gammas = schur_algorithm(f0_closed(6), 4);
  return gammas;
}

CheckResult check_schur_rebuild() {
  const Series f0 = f0_closed(6);
  const auto& gammas = deep_verblunsky();
  const std::vector<Scalar> head(gammas.begin(), gammas.begin() + 4);
  const Series rebuilt = schur_rebuild(head, 3);
  for (int k = 0; k <= 3; ++k)
    if (!(rebuilt[k] == f0[k]))
      return fail("Schur rebuild mismatch at coefficient " + std::to_string(k));
  return pass();
}

CheckResult check_gamma_haar_limit() {
  const Series f0 = f0_closed(5);
  const auto gammas = schur_algorithm(f0, 2);
  if (!(gammas[0].subst_q(Rat(0)).is_zero())) return fail("gamma_0 limit != 0");
  if (!(gammas[1].subst_q(Rat(0)).is_zero())) return fail("gamma_1 limit != 0");
  return pass();
}

// ---------------------------------------------------------------------------
// Criterion 1: closed-form free cumulants vs Moebius inversion
// ---------------------------------------------------------------------------

CheckResult check_free_cumulants_moebius() {
  const MomentOracle oracle = fubm_oracle(Rat(1));
  for (int n = 1; n <= 8; ++n) {
    const std::vector<int> word(static_cast<size_t>(n), 1);
    if (!(mixed_cumulant(oracle, word) == fubm_free_cumulant(static_cast<unsigned>(n))))
      return fail("free cumulant mismatch at n = " + std::to_string(n));
  }
  return pass();
}

CheckResult check_moment_examples() {
  const Scalar Q = Scalar::q(), T = Scalar::t();
  if (!(fubm_moment(1) == Q)) return fail("phi(u) != Q");
  const Scalar m2 = Q * Q * (Scalar(1L) - T);
  if (!(fubm_moment(2) == m2)) return fail("phi(u^2) wrong");
  const Scalar m3 =
      Q.pow(3) * (Scalar(1L) - Scalar(3L) * T + Scalar(Rat(3, 2)) * T * T);
  if (!(fubm_moment(3) == m3)) return fail("phi(u^3) wrong");
  if (!(fubm_moment(-2) == fubm_moment(2))) return fail("conjugation symmetry broken");
  // The closed-form cumulant series satisfies the functional equation
  // w(z) = z [1 + R(w(z))], i.e. z/(1+R(z)) inverts z M(z).
  const int N = 8;
  Series m(N - 1);
  m.at(0) = Scalar(1L);
  for (int k = 1; k <= N - 1; ++k) m.at(k) = fubm_moment(k);
  const Series w = m.mul_z(1);
  Series r(N);
  for (int n = 1; n <= N; ++n) r.at(n) = fubm_free_cumulant(static_cast<unsigned>(n));
  const Series f = Series::z(N) / (Series::constant(Scalar(1L), N) + r);
  if (!(compose(w, f) == Series::z(N)))
    return fail("cumulant functional equation failed");
  return pass();
}

// ---------------------------------------------------------------------------
// Criterion 2: even star cumulants
// ---------------------------------------------------------------------------

CheckResult check_g_table() {
  const CoeffTable g = g_table(8);
  const Scalar Q = Scalar::q(), T = Scalar::t();
  if (!(g.at_index(1) == Scalar(1L) - Q * Q)) return fail("g_1 wrong");
  const Scalar g2 = Scalar(-1L) + Scalar(4L) * Q.pow(2) -
                    (Scalar(3L) + Scalar(2L) * T) * Q.pow(4);
  if (!(g.at_index(2) == g2)) return fail("g_2 wrong");
  for (int n = 1; n <= 8; ++n)
    if (sgn(g.at_index(n).eval_rat(Rat(0), Rat(1))) != 0)
      return fail("g_n(0) != 0 at n = " + std::to_string(n));
  return pass();
}

CheckResult check_eac() {
  const CoeffTable g = g_table(8);
  const CoeffTable a = a_table_closed(8);
  for (int n = 1; n <= 8; ++n)
    if (!eac_identity(n, g, a))
      return fail("coefficient identity with a_n failed at n = " + std::to_string(n));
  return pass();
}

// ---------------------------------------------------------------------------
// Criterion 3: odd star cumulants
// ---------------------------------------------------------------------------

CheckResult check_h_table() {
  const CoeffTable h = h_table(3);
  const Scalar Q = Scalar::q(), T = Scalar::t();
  if (!(h.at_index(0) == Q)) return fail("h_0 != Q");
  const Scalar h1 = Q * (Scalar(-1L) + (Scalar(1L) + T) * Q * Q);
  if (!(h.at_index(1) == h1)) return fail("h_1 wrong");
  const MomentOracle oracle = fubm_oracle(Rat(1));
  for (int n = 0; n <= 3; ++n) {
    std::vector<int> word = alternating_word(2 * n + 1);
    if (!(h.at_index(n) == mixed_cumulant(oracle, word)))
      return fail("h_" + std::to_string(n) + " disagrees with brute force");
  }
  return pass();
}

// ---------------------------------------------------------------------------
// Criterion 4: inverse-characteristic coefficients
// ---------------------------------------------------------------------------

CheckResult check_a_routes() {
  const CoeffTable closed = a_table_closed(8);
  const CoeffTable oracle = a_table_oracle(8);
  for (int n = 1; n <= 8; ++n)
    if (!(closed.at_index(n) == oracle.at_index(n)))
      return fail("a_" + std::to_string(n) + " closed form != reversion");
  if (!(closed.at_index(1) == Scalar(-2L) * Scalar::q_pow(2)))
    return fail("a_1 != -2 Q^2");
  return pass();
}

CheckResult check_p_gamma_integral() {
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      const auto rep = p_gamma_integral_identity(n, k);
      if (!rep.match)
        return fail("P Gamma-integral identity failed at (n,k) = (" +
                    std::to_string(n) + "," + std::to_string(k) + ")");
    }
  return pass();
}

CheckResult check_p_integral_representation() {
  std::string summary;
  bool all_definitive = true;
  bool any_mismatch = false;
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned k = 1; k <= n; ++k) {
      const auto rep = p_integral_representation(n, k);
      if (rep.match) continue;
      any_mismatch = true;
      if (rep.note.find("unexpected") != std::string::npos) all_definitive = false;
    }
  if (!all_definitive)
    return fail("moment-integral representation has an unexplained discrepancy");
  if (any_mismatch)
    return finding(
        "moment-integral representation for the P polynomials is off by the exact "
        "factor (t/k)^(2n); the constant 2 k t^(2n)/(2n)! should read 2 k^(2n+1)/(2n)!");
  return pass("moment-integral representation exact as stated");
}

// ---------------------------------------------------------------------------
// Criterion 5: Jacobi moment generating function
// ---------------------------------------------------------------------------

CheckResult check_m_routes() {
  const Series a = m_series_direct(12);
  const Series b = m_series_moments(12);
  if (!(a == b)) return fail("moment generating routes disagree");
  if (!(a[1] == (Scalar(1L) + Scalar::q_pow(2)) / Scalar(2L)))
    return fail("m_1 wrong");
  return pass();
}

// ---------------------------------------------------------------------------
// Criterion 6: reciprocal R-transform coefficients
// ---------------------------------------------------------------------------

CheckResult check_b_oracle() {
  const CoeffTable b = b_table_oracle(8);
  if (!(b.at_index(1) == Scalar(1L))) return fail("b_1 != 1");
  if (!(b.at_index(2) == -(Scalar(1L) + Scalar::q_pow(2)) / Scalar(2L)))
    return fail("b_2 wrong");
  // compose(F, z M) = z exactly to order 8.
  const Series w = m_series_direct(7).mul_z(1);
  Series f(8);
  for (int n = 1; n <= 8; ++n) f.at(n) = b.at_index(n);
  if (!(compose(w, f) == Series::z(8))) return fail("F does not invert z M");
  if (!(compose(f, w) == Series::z(8))) return fail("z M does not invert F");
  return pass();
}

CheckResult check_b_variants() {
  const CoeffTable oracle = b_table_oracle(8);
  const CoeffTable printed = b_table_closed(8, BVariant::AsPrinted);
  const CoeffTable corrected = b_table_closed(8, BVariant::Corrected);
  for (int n = 1; n <= 8; ++n)
    if (!(corrected.at_index(n) == oracle.at_index(n)))
      return fail("corrected closed form differs from oracle at n = " + std::to_string(n));
  if (printed.at_index(2) == oracle.at_index(2))
    return fail("expected the printed Pochhammer base to diverge at n = 2");
  if (!(printed.at_index(2) == -Scalar::q_pow(2) / Scalar(2L)))
    return fail("printed-variant b_2 has unexpected value");
  const Scalar diff = printed.at_index(2) - oracle.at_index(2);
  return finding(
      "closed-form b_n with Pochhammer base (1-n)/2 diverges from the reversion "
      "oracle (b_2 differs by " + diff.str() +
      "); base (-1-n)/2 restores exact agreement for n <= 8");
}

CheckResult check_q_integral_representation() {
  bool all_definitive = true;
  bool any_mismatch = false;
  for (unsigned n = 1; n <= 5; ++n)
    for (unsigned k = 1; k <= 5; ++k) {
      const auto rep = q_integral_representation(n, k);
      if (rep.match) continue;
      any_mismatch = true;
      if (rep.note.find("unexpected") != std::string::npos) all_definitive = false;
    }
  if (!all_definitive)
    return fail("Q-polynomial integral representation has an unexplained discrepancy");
  if (any_mismatch)
    return finding(
        "Q-polynomial integral representation is off by the exact factor "
        "(t/k)^(n+1); the constant -2 t^(n+1)/n! should read -2 k^(n+1)/n!");
  return pass("Q-polynomial integral representation exact as stated");
}

// ---------------------------------------------------------------------------
// Criterion 7: power expansion and convolution identities
// ---------------------------------------------------------------------------

CheckResult check_u_powers() {
  const Series u = u_series(10, Rat(2));
  for (unsigned m = 1; m <= 5; ++m)
    if (!(u.pow(m) == u_power_closed(m, 10, Rat(2))))
      return fail("U^" + std::to_string(m) + " closed form mismatch");
  return pass();
}

CheckResult check_convolution_identities() {
  for (unsigned j = 1; j <= 10; ++j)
    for (unsigned m = 1; m <= j; ++m)
      if (!convolution_identity(m, j))
        return fail("convolution identity failed at (m,j) = (" + std::to_string(m) +
                    "," + std::to_string(j) + ")");
  for (unsigned k = 2; k <= 10; ++k)
    if (!convolution_derivative_identity(k))
      return fail("derivative identity failed at k = " + std::to_string(k));
  return pass();
}

// ---------------------------------------------------------------------------
// Criterion 8: S-transform side
// ---------------------------------------------------------------------------

CheckResult check_h_lemma() {
  for (unsigned n = 1; n <= 3; ++n) {
    const Series direct = g_series_direct(n, 6);
    Series fromh(6);
    for (int m = 0; m <= 6; ++m)
      fromh.at(m) = h_poly(static_cast<unsigned>(m), n, HVariant::SignCorrected);
    if (!(direct == fromh))
      return fail("H-coefficient lemma (sign-corrected) failed at n = " + std::to_string(n));
  }
  // The as-printed sign diverges already at (m, n) = (1, 1).
  const Series direct = g_series_direct(1, 2);
  if (h_poly(1, 1, HVariant::AsPrinted) == direct[1])
    return fail("expected the printed H sign to diverge at m = 1");
  return finding(
      "H-coefficient formula as printed carries (2t)^k; the direct series "
      "expansion validates (-2t)^k against the k-th t-derivative");
}

CheckResult check_c_variants() {
  const CoeffTable oracle = c_table_oracle(8);
  if (!(oracle.at_index(1) == Scalar(2L) / (Scalar(1L) + Scalar::q_pow(2))))
    return fail("c_1 wrong");
  if (!(oracle.at_index(1).subst_q(Rat(0)) == Scalar(2L)))
    return fail("c_1 limit wrong");
  const CoeffTable corrected = c_table_closed(8, CVariant::Corrected);
  for (int n = 1; n <= 8; ++n)
    if (!(corrected.at_index(n) == oracle.at_index(n)))
      return fail("corrected c closed form differs from oracle at n = " + std::to_string(n));
  const CoeffTable printed = c_table_closed(2, CVariant::AsPrinted);
  const CoeffTable cauchy = c_table_closed(2, CVariant::Cauchy);
  const bool printed_diverges = !(printed.at_index(2) == oracle.at_index(2));
  const bool cauchy_diverges = !(cauchy.at_index(2) == oracle.at_index(2));
  if (!printed_diverges)
    return fail("expected the as-printed c pairing to diverge at n = 2");
  if (!cauchy_diverges)
    return fail("expected the Cauchy pairing alone to still diverge at n = 2");
  return finding(
      "c_n closed form needs three repairs validated by the oracle: Cauchy "
      "pairing d_{j-k} V_k (not d_{j-k} V_j), the alternating sign in the "
      "(1+z)^-(2n+1) coefficients d_j, and the sign-corrected H "
      "coefficients; with all three it matches the oracle exactly for n <= 8");
}

CheckResult check_s_transform() {
  const CoeffTable s = s_transform(6);
  const CoeffTable c = c_table_oracle(7);
  if (!(s.at_index(0) == c.at_index(1))) return fail("S(0) != c_1");
  // R(z S(z)) = z to order 6.
  const Series r = r_series(6);
  Series zs(6);
  for (int n = 0; n <= 5; ++n) zs.at(n + 1) = s.at_index(n);
  if (!(compose(r, zs) == Series::z(6))) return fail("R(z S(z)) != z");
  // Direct form: z S(z) = (1+z) (M-1)^{-1}(z).
  Series cinv(6);
  for (int n = 1; n <= 6; ++n) cinv.at(n) = c.at_index(n);
  Series one_plus_z(6);
  one_plus_z.at(0) = Scalar(1L);
  one_plus_z.at(1) = Scalar(1L);
  if (!(zs == one_plus_z * cinv)) return fail("z S != (1+z)(M-1)^{-1}");
  return pass();
}

// ---------------------------------------------------------------------------
// Criterion 9: Schur function and Verblunsky coefficients
// ---------------------------------------------------------------------------

CheckResult check_f0_routes() {
  if (!(f0_closed(8) == f0_from_herglotz(8))) return fail("f0 routes disagree");
  return pass();
}

CheckResult check_xi_inverse() {
  return expect(xi_inverse_identity(8), "xi(H(z)) != z at order 8");
}

CheckResult check_exp_ku() {
  const Series u = u_series(8, Rat(1));
  for (unsigned k = 0; k <= 5; ++k) {
    const Series direct =
        series_exp(u.scaled(Scalar(-static_cast<long>(k)) * Scalar::t()));
    if (!(direct == exp_ku_closed(k, 8)))
      return fail("exp(-ktU) closed form mismatch at k = " + std::to_string(k));
  }
  // k = 1 reproduces f0 / Q.
  const Series f0 = f0_closed(8);
  if (!(exp_ku_closed(1, 8) == f0.scaled(Scalar::q_pow(-1))))
    return fail("exp(-tU) != f0/Q");
  return pass();
}

CheckResult check_verblunsky() {
  const Series f0 = f0_closed(6);
  const auto gammas = schur_algorithm(f0, 2);
  const Scalar Q = Scalar::q(), T = Scalar::t(), one(1L);
  if (!(gammas[0] == Q)) return fail("gamma_0 != Q");
  if (!(gammas[1] == -(T * Q * Q) / (one - Q * Q))) return fail("gamma_1 wrong");
  const Scalar num = T * Q.pow(3) *
                     (Scalar(3L) * T - Scalar(2L) + (Scalar(2L) - T) * Q.pow(2));
  const Scalar den = Scalar(2L) * (one - Scalar(2L) * Q.pow(2) +
                                   (one - T * T) * Q.pow(4));
  if (!(gammas[2] == num / den)) return fail("gamma_2 wrong");
  return pass();
}

CheckResult check_f1_variants() {
  const Series oracle = f1_schur_step(6);
  const Series prop = f1_closed(6, F1Prefactor::PropositionForm);
  const Series proof = f1_closed(6, F1Prefactor::ProofForm);
  if (!(prop == oracle))
    return fail("first-iterate closed form with prefactor t e^{-t}(1-e^{t}) "
                "does not match the Schur step");
  if (proof == oracle)
    return fail("expected prefactor t e^{-t}(1-e^{-t}) to diverge");
  return finding(
      "first Schur iterate: prefactor adjudicated to t e^{-t}(1-e^{t}); the "
      "variant t e^{-t}(1-e^{-t}) diverges already in the constant term");
}

CheckResult check_gamma_modulus() {
  const auto& gammas = deep_verblunsky();
  const Rat probes[] = {Rat(1, 2), Rat(1), Rat(2), Rat(5)};
  for (const Rat& t0 : probes)
    for (const Scalar& g : gammas) {
      const BigFloat v = g.eval(t0, 128).abs();
      if (!(v < BigFloat::from_long(1, 128)))
        return fail("Schur parameter modulus >= 1 at t = " + rat_str(t0));
    }
  return pass();
}

// ---------------------------------------------------------------------------
// Criterion 10: special functions
// ---------------------------------------------------------------------------

CheckResult check_pochhammer_identities() {
  if (pochhammer(Rat(0), 0) != 1) return fail("(0)_0 != 1");
  if (pochhammer(Rat(0), 3) != 0) return fail("(0)_3 != 0");
  if (pochhammer(Rat(-3), 2) != 6) return fail("(-3)_2 != 6");
  for (long n = 0; n <= 10; ++n)
    for (long k = 0; k <= 10; ++k) {
      const Rat lhs = pochhammer(Rat(-n), static_cast<unsigned>(k)) /
                      factorial(static_cast<unsigned long>(k));
      Rat rhs = binomial(n, k);
      if (k % 2) rhs = -rhs;
      if (k > n) rhs = 0;
      if (lhs != rhs) return fail("(-n)_k/k! identity failed");
    }
  return pass();
}

CheckResult check_laguerre_values() {
  const Scalar x = Scalar::t();  // use t as the formal argument
  if (!(laguerre(0, Scalar(1L), x) == Scalar(1L))) return fail("L_0 != 1");
  if (!(laguerre(1, Scalar(1L), x) == Scalar(2L) - x)) return fail("L_1 wrong");
  if (!(laguerre(2, Scalar(1L), x) ==
        Scalar(3L) - Scalar(3L) * x + Scalar(Rat(1, 2)) * x * x))
    return fail("L_2 wrong");
  return pass();
}

CheckResult check_laguerre_diff_rule() {
  for (unsigned k = 0; k <= 6; ++k)
    for (unsigned m = 0; m <= k; ++m)
      for (long a = 0; a <= 2; ++a) {
        auto c = laguerre_coeffs(k, Scalar(a));
        for (unsigned d = 0; d < m; ++d) {
          for (size_t j = 0; j + 1 < c.size(); ++j)
            c[j] = c[j + 1] * Scalar(static_cast<long>(j) + 1);
          c.pop_back();
        }
        auto rhs = laguerre_coeffs(k - m, Scalar(a + static_cast<long>(m)));
        for (auto& v : rhs)
          if (m % 2) v = -v;
        if (c != rhs) return fail("differentiation rule failed");
      }
  return pass();
}

CheckResult check_charlier_laguerre() {
  for (unsigned n = 0; n <= 6; ++n)
    for (long x = -4; x <= 4; ++x)
      for (const Rat& a : {Rat(1, 2), Rat(1), Rat(3)}) {
        const Rat lhs = pow_rat(-a, static_cast<long>(n)) / factorial(n) *
                        charlier(n, Rat(x), a);
        const Scalar rhs =
            laguerre(n, Scalar(Rat(x - static_cast<long>(n))), Scalar(a));
        Rat rhs_rat;
        if (!rhs.is_rational(&rhs_rat)) return fail("Laguerre value not rational");
        if (lhs != rhs_rat) return fail("Charlier-Laguerre relation failed");
      }
  return pass();
}

CheckResult check_charlier_gf() {
  // sum_n C_n(x,a) (-au)^n / n! = e^{-au} (1+u)^x for x = 4, a = 2/3.
  const int N = 6;
  const Rat a(2, 3);
  const long x = 4;
  Series lhs(N);
  Rat nfact(1);
  for (int n = 0; n <= N; ++n) {
    if (n > 0) nfact *= n;
    lhs.at(n) = Scalar(charlier(static_cast<unsigned>(n), Rat(x), a) *
                       pow_rat(-a, n) / nfact);
  }
  Series mau(N);
  mau.at(1) = Scalar(-a);
  const Series expo = series_exp(mau);
  Series one_plus_u(N);
  one_plus_u.at(0) = Scalar(1L);
  one_plus_u.at(1) = Scalar(1L);
  const Series rhs = expo * one_plus_u.pow(static_cast<unsigned>(x));
  return expect(lhs == rhs, "Charlier generating function failed");
}

CheckResult check_hyper_remark() {
  for (unsigned n = 2; n <= 6; ++n)
    for (unsigned k = 0; k <= n - 1; ++k)
      if (!hyper_remark_identity(n, k))
        return fail("3F2 identity failed at (n,k) = (" + std::to_string(n) + "," +
                    std::to_string(k) + ")");
  for (unsigned n = 1; n <= 6; ++n)
    if (!hyper_remark_identity_2f1(n))
      return fail("2F1 specialization failed at n = " + std::to_string(n));
  const Rat one_term = hyper_pfq({Rat(-1), Rat(2)}, {Rat(3)}, Rat(1));
  if (one_term != Rat(1, 3)) return fail("2F1(-1,2;3;1) != 1/3");
  return pass();
}

CheckResult check_brown_identity() {
  Rng rng(109);
  const int N = 6;
  for (int trial = 0; trial < 6; ++trial) {
    Series r(N);
    for (int k = 0; k <= N; ++k)
      r.at(k) = Scalar(make_rat(rng.range(-9, 9), rng.range(1, 5)));
    const Series p = brown_transform(r);
    // lhs = sum p_n (w/4)^n; rhs = (1-w)^{-1/2} sum r_n alpha(w)^n.
    const Series lhs = p.scale_var(Scalar(Rat(1, 4)));
    const Series alpha = alpha_series(N);
    Series rhs(N);
    Series apow = Series::constant(Scalar(1L), N);
    for (int k = 0; k <= N; ++k) {
      if (k > 0) apow = apow * alpha;
      rhs = rhs + apow.scaled(r[k]);
    }
    Series one_minus_w(N);
    one_minus_w.at(0) = Scalar(1L);
    one_minus_w.at(1) = Scalar(-1L);
    rhs = binom_pow(one_minus_w, Rat(-1, 2)) * rhs;
    if (!(lhs == rhs)) return fail("binomial transform identity failed");
  }
  // Basis rows: r = e_0 and r = e_1.
  Series e0(3), e1(3);
  e0.at(0) = Scalar(1L);
  e1.at(1) = Scalar(1L);
  const Series p0 = brown_transform(e0), p1 = brown_transform(e1);
  for (int n = 0; n <= 3; ++n) {
    if (!(p0[n] == Scalar(binomial(2L * n, n)))) return fail("p_n for e_0 wrong");
    if (!(p1[n] == Scalar(binomial(2L * n, n - 1)))) return fail("p_n for e_1 wrong");
  }
  return pass();
}

// ---------------------------------------------------------------------------
// Criterion 11: numeric layer
// ---------------------------------------------------------------------------

CheckResult check_gamma1_numeric() {
  // gamma_1(1) = -1/(e - 1), computed independently from exp(1).
  const Scalar gamma1 =
      -(Scalar::t() * Scalar::q_pow(2)) / (Scalar(1L) - Scalar::q_pow(2));
  const BigFloat lhs = gamma1.eval(Rat(1), 128);
  const BigFloat e = exp_rat(Rat(1), 192);
  const BigFloat rhs =
      -(BigFloat::from_long(1, 192) / (e - BigFloat::from_long(1, 192)));
  const BigFloat err = (lhs - rhs).abs();
  const BigFloat tol = BigFloat::from_rat(Rat(1) / pow_rat(Rat(10), 20), 192);
  return expect(err <= tol, "gamma_1(1) numeric check failed");
}

CheckResult check_laguerre_bound() {
  // |L_j^{(1)}(x)| <= (j+1) e^{x/2} on x in {0, 1, 5, 20}, j <= 12.
  for (unsigned j = 0; j <= 12; ++j)
    for (const long x : {0L, 1L, 5L, 20L}) {
      Rat v;
      if (!laguerre(j, Scalar(1L), Scalar(Rat(x))).is_rational(&v))
        return fail("Laguerre value not rational");
      BigFloat lhs = BigFloat::from_rat(v, 128).abs();
      const BigFloat bound = BigFloat::from_long(static_cast<long>(j) + 1, 128) *
                             exp_rat(make_rat(x, 2), 128);
      const BigFloat tol = BigFloat::from_rat(Rat(1) / pow_rat(Rat(10), 20), 128);
      if (!(lhs <= bound + tol)) return fail("Laguerre bound violated");
    }
  return pass();
}

}  // namespace

std::vector<Check> verification_suite() {
  std::vector<Check> checks;
  auto add = [&](std::string id, int criterion, std::function<CheckResult()> fn) {
    checks.push_back(Check{std::move(id), criterion, std::move(fn)});
  };

  add("scalar/parse-render-roundtrip", 0, check_scalar_roundtrip);
  add("scalar/field-cancellation", 0, check_scalar_field_cancellation);
  add("scalar/derivation-leibniz", 0, check_scalar_derivation);
  add("scalar/eval-homomorphism", 0, check_eval_homomorphism);
  add("scalar/eval-derivative-fd", 0, check_eval_derivative_fd);
  add("series/revert-involution", 0, check_revert_involution);
  add("series/compose-associative", 0, check_compose_associative);
  add("series/revert-vs-lagrange", 0, check_revert_against_lagrange);
  add("series/revert-catalan", 0, check_revert_catalan);
  add("series/revert-tree-series", 0, check_revert_tree_series);
  add("series/alpha-expansion", 0, check_alpha_series);
  add("ncpart/catalan-counts", 0, check_nc_counts);
  add("ncpart/mobius-convolution", 0, check_mobius_defining_relation);
  add("ncpart/moment-cumulant-inverse", 0, check_moment_cumulant_inverse);
  add("ncpart/product-entry-summation", 0, check_product_entry_summation);
  add("ncpart/product-entry-examples", 0, check_ks_examples);
  add("ncpart/g-oracle-time-scale", 0, check_g_oracle_time_scale);
  add("jacobi/cumulant-routes", 0, check_jacobi_cumulant_routes);
  add("schur/rebuild-consistency", 0, check_schur_rebuild);
  add("schur/gamma-haar-limit", 0, check_gamma_haar_limit);

  add("moments/free-cumulants-vs-moebius", 1, check_free_cumulants_moebius);
  add("moments/laguerre-values", 1, check_moment_examples);

  add("star-even/g-table", 2, check_g_table);
  add("star-even/coefficient-identity", 2, check_eac);
  add("star-even/haar-limit", 2, check_haar_star_cumulants);

  add("star-odd/h-table-vs-brute-force", 3, check_h_table);

  add("lagrange/a-routes", 4, check_a_routes);
  add("lagrange/p-gamma-integral", 4, check_p_gamma_integral);
  add("lagrange/p-integral-representation", 4, check_p_integral_representation);

  add("jacobi/m-routes", 5, check_m_routes);

  add("jacobi-r/b-oracle", 6, check_b_oracle);
  add("jacobi-r/b-variants", 6, check_b_variants);
  add("jacobi-r/q-integral-representation", 6, check_q_integral_representation);

  add("jacobi/u-powers", 7, check_u_powers);
  add("jacobi/convolution-identities", 7, check_convolution_identities);

  add("jacobi-s/h-lemma", 8, check_h_lemma);
  add("jacobi-s/c-variants", 8, check_c_variants);
  add("jacobi-s/s-transform", 8, check_s_transform);

  add("schur/f0-routes", 9, check_f0_routes);
  add("schur/xi-inverse", 9, check_xi_inverse);
  add("schur/exp-ku", 9, check_exp_ku);
  add("schur/verblunsky-values", 9, check_verblunsky);
  add("schur/f1-variants", 9, check_f1_variants);
  add("schur/gamma-modulus", 9, check_gamma_modulus);

  add("specfun/pochhammer", 10, check_pochhammer_identities);
  add("specfun/laguerre-values", 10, check_laguerre_values);
  add("specfun/laguerre-diff-rule", 10, check_laguerre_diff_rule);
  add("specfun/charlier-laguerre", 10, check_charlier_laguerre);
  add("specfun/charlier-gf", 10, check_charlier_gf);
  add("specfun/hypergeometric-remark", 10, check_hyper_remark);
  add("series/brown-identity", 10, check_brown_identity);

  add("numeric/gamma1-highprec", 11, check_gamma1_numeric);
  add("numeric/laguerre-bound", 11, check_laguerre_bound);

  return checks;
}

SuiteOutcome run_verification(std::ostream* out) {
  SuiteOutcome outcome;
  const auto t0 = std::chrono::steady_clock::now();
  for (const Check& check : verification_suite()) {
    CheckResult r;
    try {
      r = check.run();
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    switch (r.status) {
      case CheckStatus::Pass:
        ++outcome.passed;
        break;
      case CheckStatus::Fail:
        ++outcome.failed;
        break;
      case CheckStatus::Finding:
        ++outcome.findings;
        break;
    }
    if (out) {
      const char* tag = r.status == CheckStatus::Pass     ? "PASS"
                        : r.status == CheckStatus::Finding ? "FINDING"
                                                           : "FAIL";
      (*out) << "[" << tag << "] " << check.id;
      if (!r.detail.empty()) (*out) << ": " << r.detail;
      (*out) << "\n";
    }
    outcome.results.emplace_back(check.id, std::move(r));
  }
  outcome.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return outcome;
}

}  // namespace freeprob
