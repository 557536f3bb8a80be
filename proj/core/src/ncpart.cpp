#include "freeprob/ncpart.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "freeprob/brownian.hpp"
#include "freeprob/error.hpp"

namespace freeprob {

namespace {

constexpr int kMaxEnum = 12;
constexpr int kMaxWord = 10;

std::mutex g_cache_mutex;

using Blocks = std::vector<std::vector<int>>;

void canonicalize(Blocks& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

// All noncrossing partition patterns of {0..len-1}, memoized by length.
// The block of 0 is chosen as an increasing subset; the gaps between chosen
// elements (and the tail) are independent smaller instances.
const std::vector<Blocks>& nc_patterns(int len) {
  static std::vector<std::vector<Blocks>> memo = {{Blocks{}}};  // len 0
  if (len < static_cast<int>(memo.size())) return memo[static_cast<size_t>(len)];
  for (int l = static_cast<int>(memo.size()); l <= len; ++l) {
    std::vector<Blocks> out;
    // chosen: current block of element 0; last: last chosen element.
    std::function<void(std::vector<int>&, int, Blocks&)> extend =
        [&](std::vector<int>& chosen, int last, Blocks& acc) {
          // Close the block here: the tail (last+1 .. l-1) is one gap.
          {
            const int tail = l - 1 - last;
            for (const Blocks& tp : memo[static_cast<size_t>(tail)]) {
              Blocks full = acc;
              full.push_back(chosen);
              for (const auto& b : tp) {
                std::vector<int> shifted(b.size());
                for (size_t i = 0; i < b.size(); ++i) shifted[i] = b[i] + last + 1;
                full.push_back(std::move(shifted));
              }
              canonicalize(full);
              out.push_back(std::move(full));
            }
          }
          // Or pick the next element of the block.
          for (int next = last + 1; next < l; ++next) {
            const int gap = next - last - 1;
            for (const Blocks& gp : memo[static_cast<size_t>(gap)]) {
              Blocks acc2 = acc;
              for (const auto& b : gp) {
                std::vector<int> shifted(b.size());
                for (size_t i = 0; i < b.size(); ++i) shifted[i] = b[i] + last + 1;
                acc2.push_back(std::move(shifted));
              }
              chosen.push_back(next);
              extend(chosen, next, acc2);
              chosen.pop_back();
            }
          }
        };
    std::vector<int> chosen = {0};
    Blocks acc;
    extend(chosen, 0, acc);
    memo.push_back(std::move(out));
  }
  return memo[static_cast<size_t>(len)];
}

std::vector<int> element_block_map(const NCPartition& p) {
  std::vector<int> owner(static_cast<size_t>(p.n) + 1, -1);
  for (size_t b = 0; b < p.blocks.size(); ++b)
    for (int e : p.blocks[b]) owner[static_cast<size_t>(e)] = static_cast<int>(b);
  return owner;
}

// Two disjoint sorted blocks cross iff their merged label sequence
// alternates at least three times (pattern ABAB).
bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
  size_t i = 0, j = 0;
  int alternations = 0, lastv = 0;  // 1 = a, 2 = b
  while (i < a.size() || j < b.size()) {
    int cur;
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      cur = 1;
      ++i;
    } else {
      cur = 2;
      ++j;
    }
    if (cur != lastv) {
      ++alternations;
      lastv = cur;
    }
  }
  return alternations >= 4;
}

}  // namespace

// ---------------------------------------------------------------------------
// NCPartition
// ---------------------------------------------------------------------------

uint64_t NCPartition::encode() const {
  // Restricted-growth string: id of the block (in canonical order) of each
  // element, 4 bits each.
  uint64_t code = 0;
  std::vector<int> owner(static_cast<size_t>(n) + 1, 0);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int e : blocks[b]) owner[static_cast<size_t>(e)] = static_cast<int>(b);
  for (int e = 1; e <= n; ++e)
    code |= static_cast<uint64_t>(owner[static_cast<size_t>(e)]) << (4 * (e - 1));
  return code;
}

NCPartition NCPartition::zero(int n) {
  NCPartition p;
  p.n = n;
  for (int i = 1; i <= n; ++i) p.blocks.push_back({i});
  return p;
}

NCPartition NCPartition::one(int n) {
  NCPartition p;
  p.n = n;
  std::vector<int> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  p.blocks.push_back(std::move(all));
  return p;
}

NCPartition NCPartition::from_blocks(int n, Blocks blocks) {
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  int count = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw DomainError("ncpart: empty block");
    for (int e : b) {
      if (e < 1 || e > n || seen[static_cast<size_t>(e)])
        throw DomainError("ncpart: blocks do not partition the ground set");
      seen[static_cast<size_t>(e)] = true;
      ++count;
    }
  }
  if (count != n) throw DomainError("ncpart: blocks do not cover the ground set");
  canonicalize(blocks);
  NCPartition p;
  p.n = n;
  p.blocks = std::move(blocks);
  return p;
}

bool NCPartition::is_interval_partition() const {
  for (const auto& b : blocks)
    if (b.back() - b.front() + 1 != static_cast<int>(b.size())) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration and lattice structure
// ---------------------------------------------------------------------------

const std::vector<NCPartition>& enumerate_nc(int n) {
  if (n < 1 || n > kMaxEnum)
    throw DomainError("ncpart: enumeration supports 1 <= n <= 12");
  static std::vector<std::vector<NCPartition>> cache(kMaxEnum + 1);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto& slot = cache[static_cast<size_t>(n)];
  if (!slot.empty()) return slot;
  const auto& patterns = nc_patterns(n);
  slot.reserve(patterns.size());
  for (const Blocks& pat : patterns) {
    NCPartition p;
    p.n = n;
    p.blocks = pat;
    for (auto& b : p.blocks)
      for (int& e : b) ++e;  // 0-based pattern -> ground set {1..n}
    slot.push_back(std::move(p));
  }
  return slot;
}

bool nc_leq(const NCPartition& pi, const NCPartition& rho) {
  if (pi.n != rho.n) throw DomainError("ncpart: order comparison across sizes");
  const std::vector<int> owner = element_block_map(rho);
  for (const auto& b : pi.blocks) {
    const int id = owner[static_cast<size_t>(b.front())];
    for (int e : b)
      if (owner[static_cast<size_t>(e)] != id) return false;
  }
  return true;
}

NCPartition nc_join(const NCPartition& pi, const NCPartition& rho) {
  if (pi.n != rho.n) throw DomainError("ncpart: join across sizes");
  const int n = pi.n;
  std::vector<int> parent(static_cast<size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
  for (const auto& b : pi.blocks)
    for (size_t i = 1; i < b.size(); ++i) unite(b[0], b[i]);
  for (const auto& b : rho.blocks)
    for (size_t i = 1; i < b.size(); ++i) unite(b[0], b[i]);

  std::map<int, std::vector<int>> groups;
  for (int e = 1; e <= n; ++e) groups[find(e)].push_back(e);
  Blocks blocks;
  for (auto& [root, elems] : groups) blocks.push_back(std::move(elems));
  canonicalize(blocks);

  // Noncrossing closure: merge crossing pairs until stable.
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t i = 0; !merged && i < blocks.size(); ++i)
      for (size_t j = i + 1; !merged && j < blocks.size(); ++j)
        if (blocks_cross(blocks[i], blocks[j])) {
          std::vector<int> unioned;
          std::merge(blocks[i].begin(), blocks[i].end(), blocks[j].begin(),
                     blocks[j].end(), std::back_inserter(unioned));
          blocks.erase(blocks.begin() + static_cast<long>(j));
          blocks[i] = std::move(unioned);
          merged = true;
        }
  }
  canonicalize(blocks);
  return NCPartition::from_blocks(n, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Moebius function
// ---------------------------------------------------------------------------

namespace {
// Memo keyed by (n, encode(pi), encode(rho)).
std::map<std::tuple<int, uint64_t, uint64_t>, long>& mobius_memo() {
  static std::map<std::tuple<int, uint64_t, uint64_t>, long> memo;
  return memo;
}

long nc_mobius_impl(const NCPartition& pi, const NCPartition& rho,
                    const std::vector<NCPartition>& all) {
  if (pi == rho) return 1;
  const auto key = std::make_tuple(pi.n, pi.encode(), rho.encode());
  auto& memo = mobius_memo();
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // Mob(pi, rho) = -sum over pi < tau <= rho of Mob(tau, rho).
  long acc = 0;
  for (const NCPartition& tau : all) {
    if (tau == pi) continue;
    if (nc_leq(pi, tau) && nc_leq(tau, rho)) acc += nc_mobius_impl(tau, rho, all);
  }
  memo[key] = -acc;
  return -acc;
}
}  // namespace

long nc_mobius(const NCPartition& pi, const NCPartition& rho) {
  if (!nc_leq(pi, rho)) throw DomainError("ncpart: mobius requires pi <= rho");
  const auto& all = enumerate_nc(pi.n);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return nc_mobius_impl(pi, rho, all);
}

const std::vector<long>& nc_mobius_to_top(int n) {
  static std::vector<std::vector<long>> cache(kMaxEnum + 1);
  const auto& all = enumerate_nc(n);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto& slot = cache[static_cast<size_t>(n)];
  if (!slot.empty()) return slot;

  // Process by increasing block count; tau > pi implies fewer blocks.
  std::vector<size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return all[a].blocks.size() < all[b].blocks.size();
  });
  slot.assign(all.size(), 0);
  for (size_t idx : order) {
    const NCPartition& pi = all[idx];
    if (pi.blocks.size() == 1) {
      slot[idx] = 1;
      continue;
    }
    long acc = 0;
    for (size_t j = 0; j < all.size(); ++j) {
      if (all[j].blocks.size() >= pi.blocks.size()) continue;
      if (nc_leq(pi, all[j])) acc += slot[j];
    }
    slot[idx] = -acc;
  }
  return slot;
}

// ---------------------------------------------------------------------------
// Moment oracles and cumulants
// ---------------------------------------------------------------------------

MomentOracle fubm_oracle(const Rat& time_scale) {
  auto memo = std::make_shared<std::map<long, Scalar>>();
  auto mtx = std::make_shared<std::mutex>();
  const Rat scale = time_scale;
  return MomentOracle{[memo, mtx, scale](long m) {
    std::lock_guard<std::mutex> lock(*mtx);
    if (auto it = memo->find(m); it != memo->end()) return it->second;
    const Scalar v = fubm_moment(m, scale);
    (*memo)[m] = v;
    return v;
  }};
}

MomentOracle haar_oracle() {
  return MomentOracle{[](long m) { return m == 0 ? Scalar(1L) : Scalar(0L); }};
}

Scalar word_moment(const MomentOracle& oracle, const std::vector<int>& word) {
  long net = 0;
  for (int w : word) net += w;
  return oracle.phi(net);
}

Scalar mixed_cumulant(const MomentOracle& oracle, const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  if (n < 1 || n > kMaxWord)
    throw DomainError("ncpart: cumulant word length capped at 10");
  const auto& all = enumerate_nc(n);
  const auto& mob = nc_mobius_to_top(n);
  Scalar acc;
  for (size_t i = 0; i < all.size(); ++i) {
    if (mob[i] == 0) continue;
    Scalar prod(static_cast<long>(mob[i]));
    for (const auto& block : all[i].blocks) {
      long net = 0;
      for (int e : block) net += word[static_cast<size_t>(e - 1)];
      prod *= oracle.phi(net);
      if (prod.is_zero()) break;
    }
    acc += prod;
  }
  return acc;
}

Scalar ks_rhs(const MomentOracle& oracle, const std::vector<int>& sigma_lengths,
              const std::vector<int>& word) {
  int n = 0;
  for (int len : sigma_lengths) {
    if (len <= 0) throw DomainError("ncpart: interval partition lengths must be positive");
    n += len;
  }
  if (n != static_cast<int>(word.size()))
    throw DomainError("ncpart: interval partition does not match word length");
  Blocks sblocks;
  int next = 1;
  for (int len : sigma_lengths) {
    std::vector<int> b(static_cast<size_t>(len));
    std::iota(b.begin(), b.end(), next);
    next += len;
    sblocks.push_back(std::move(b));
  }
  const NCPartition sigma = NCPartition::from_blocks(n, std::move(sblocks));
  const NCPartition top = NCPartition::one(n);

  Scalar acc;
  for (const NCPartition& pi : enumerate_nc(n)) {
    if (!(nc_join(pi, sigma) == top)) continue;
    Scalar prod(1L);
    for (const auto& block : pi.blocks) {
      std::vector<int> sub;
      sub.reserve(block.size());
      for (int e : block) sub.push_back(word[static_cast<size_t>(e - 1)]);
      prod *= mixed_cumulant(oracle, sub);
      if (prod.is_zero()) break;
    }
    acc += prod;
  }
  return acc;
}

}  // namespace freeprob
