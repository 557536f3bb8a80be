#include <doctest.h>

#include "freeprob/error.hpp"
#include "freeprob/ncpart.hpp"

using namespace freeprob;

TEST_SUITE("ncpart") {

TEST_CASE("enumeration") {
  CHECK(enumerate_nc(1).size() == 1);
  CHECK(enumerate_nc(1)[0] == NCPartition::one(1));
  CHECK(enumerate_nc(3).size() == 5);
  CHECK(enumerate_nc(4).size() == 14);
  CHECK_THROWS_AS(enumerate_nc(0), DomainError);
  CHECK_THROWS_AS(enumerate_nc(13), DomainError);
  // Canonical form: blocks ordered by minimum, elements sorted.
  for (const auto& p : enumerate_nc(5)) {
    int prev_min = 0;
    for (const auto& b : p.blocks) {
      CHECK(b.front() > prev_min);
      prev_min = b.front();
      CHECK(std::is_sorted(b.begin(), b.end()));
    }
  }
}

TEST_CASE("order and join") {
  const auto& nc5 = enumerate_nc(5);
  const NCPartition top5 = NCPartition::one(5);
  for (const auto& p : nc5) CHECK(nc_leq(p, top5));

  for (const auto& p : enumerate_nc(4)) CHECK(nc_join(NCPartition::zero(4), p) == p);

  // Joining {{1,3},{2},{4}} with {{1},{3},{2,4}} forces the full merge.
  const NCPartition a = NCPartition::from_blocks(4, {{1, 3}, {2}, {4}});
  const NCPartition b = NCPartition::from_blocks(4, {{1}, {3}, {2, 4}});
  CHECK(nc_join(a, b) == NCPartition::one(4));

  CHECK_THROWS_AS(nc_leq(NCPartition::one(3), NCPartition::one(4)), DomainError);
  CHECK_THROWS_AS(NCPartition::from_blocks(3, {{1, 2}}), DomainError);
  CHECK_THROWS_AS(NCPartition::from_blocks(3, {{1, 2}, {2, 3}}), DomainError);
}

TEST_CASE("join is the least upper bound") {
  const auto& all = enumerate_nc(5);
  for (size_t i = 0; i < all.size(); i += 3)
    for (size_t j = i; j < all.size(); j += 5) {
      const NCPartition join = nc_join(all[i], all[j]);
      CHECK(nc_leq(all[i], join));
      CHECK(nc_leq(all[j], join));
      for (const auto& tau : all)
        if (nc_leq(all[i], tau) && nc_leq(all[j], tau)) CHECK(nc_leq(join, tau));
    }
}

TEST_CASE("mobius") {
  const NCPartition p = NCPartition::from_blocks(4, {{1, 2}, {3}, {4}});
  CHECK(nc_mobius(p, p) == 1);
  CHECK(nc_mobius(NCPartition::zero(2), NCPartition::one(2)) == -1);
  CHECK(nc_mobius(NCPartition::zero(4), NCPartition::one(4)) == -5);
  CHECK_THROWS_AS(nc_mobius(NCPartition::one(3), NCPartition::zero(3)), DomainError);
}

TEST_CASE("mixed cumulants of the unitary process") {
  const MomentOracle oracle = fubm_oracle(Rat(1));
  const Scalar Q = Scalar::q(), T = Scalar::t(), one(1L);
  CHECK(oracle.phi(0) == one);
  CHECK(oracle.phi(-3) == oracle.phi(3));
  CHECK(mixed_cumulant(oracle, {1}) == Q);
  CHECK(mixed_cumulant(oracle, {1, -1}) == one - Q * Q);
  CHECK(mixed_cumulant(oracle, {1, -1, 1}) ==
        Q * (Scalar(-1L) + (one + T) * Q * Q));
  CHECK_THROWS_AS(mixed_cumulant(oracle, std::vector<int>(11, 1)), DomainError);
}

TEST_CASE("haar oracle") {
  const MomentOracle haar = haar_oracle();
  CHECK(mixed_cumulant(haar, {1, -1}) == Scalar(1L));
  CHECK(mixed_cumulant(haar, {1, -1, 1, -1}) == Scalar(-1L));
  CHECK(mixed_cumulant(haar, {1, 1}).is_zero());
}

TEST_CASE("product-entry right-hand side") {
  const MomentOracle oracle = fubm_oracle(Rat(1));
  // sigma = 1_n reduces to the moment of the product word.
  const std::vector<int> word = {1, -1, 1};
  CHECK(ks_rhs(oracle, {3}, word) == word_moment(oracle, word));
  CHECK_THROWS_AS(ks_rhs(oracle, {2, 2}, word), DomainError);
  CHECK_THROWS_AS(ks_rhs(oracle, {0, 3}, word), DomainError);
}

}  // TEST_SUITE
