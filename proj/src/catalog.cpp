#include "orbitk/catalog.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

namespace orbitk::catalog {

std::vector<Rank2Config> rank2_configs(int max_n) {
  std::vector<Rank2Config> out;
  for (int n = 2; n <= max_n; ++n)
    for (const Partition& mu : partitions_of(n))
      if (mu.length() >= 2) out.push_back(Rank2Config::from_mu(mu));
  return out;
}

Matroid octahedron_m1() {
  std::vector<uint32_t> bases;
  for (uint32_t s = 0; s < 16; ++s)
    if (std::popcount(s) == 2 && s != 0b0011u) bases.push_back(s);
  return Matroid::from_bases(4, bases);
}

Matroid octahedron_m2() {
  std::vector<uint32_t> bases;
  for (uint32_t s = 0; s < 16; ++s)
    if (std::popcount(s) == 2 && s != 0b1100u) bases.push_back(s);
  return Matroid::from_bases(4, bases);
}

Matroid octahedron_m12() {
  std::vector<uint32_t> bases;
  for (uint32_t s = 0; s < 16; ++s)
    if (std::popcount(s) == 2 && s != 0b0011u && s != 0b1100u) bases.push_back(s);
  return Matroid::from_bases(4, bases);
}

RationalMatrix rank2_realization(const Rank2Config& cfg, const std::vector<Rat>& slopes) {
  int m = cfg.num_classes();
  if (static_cast<int>(slopes.size()) != m)
    throw Error("bad_argument", "one slope per parallel class required");
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (slopes[a] == slopes[b]) throw Error("bad_argument", "slopes must be distinct");
  RationalMatrix v(2, cfg.n());
  for (int j = 0; j < cfg.n(); ++j) {
    int c = cfg.column_class()[j];
    if (c == 0) continue;
    v.at(0, j) = 1;
    v.at(1, j) = slopes[c - 1];
  }
  return v;
}

std::vector<std::pair<RationalMatrix, RationalMatrix>> inequivalent_realization_pairs() {
  std::vector<std::pair<RationalMatrix, RationalMatrix>> out;
  auto slopes = [](std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs) v.emplace_back(x);
    return v;
  };
  // uniform on 4 columns: cross-ratio determined by the fourth slope
  Rank2Config u4 = Rank2Config::from_mu(Partition{1, 1, 1, 1});
  std::vector<std::vector<Rat>> u4_variants = {
      slopes({0, 1, 2, 3}), slopes({0, 1, 2, 4}), slopes({0, 1, 2, 5}),
      slopes({0, 1, 2, -1}), slopes({0, 1, 2, -3})};
  for (size_t a = 0; a < u4_variants.size(); ++a)
    for (size_t b = a + 1; b < u4_variants.size(); ++b)
      out.emplace_back(rank2_realization(u4, u4_variants[a]),
                       rank2_realization(u4, u4_variants[b]));
  // uniform on 5 columns
  Rank2Config u5 = Rank2Config::from_mu(Partition{1, 1, 1, 1, 1});
  out.emplace_back(rank2_realization(u5, slopes({0, 1, 2, 3, 4})),
                   rank2_realization(u5, slopes({0, 1, 2, 3, 5})));
  // doubled class on 5 columns, mu = (2,1,1,1)
  Rank2Config d5 = Rank2Config::from_mu(Partition{2, 1, 1, 1});
  out.emplace_back(rank2_realization(d5, slopes({0, 1, 2, 3})),
                   rank2_realization(d5, slopes({0, 1, 2, 7})));
  return out;
}

std::vector<uint32_t> isomorphism_signature(const Matroid& m) {
  int n = m.n();
  if (n > 7) throw Error("resource_cap", "signature sweep limited to n <= 7");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<uint32_t> best;
  do {
    std::vector<uint32_t> mapped;
    for (uint32_t b : m.bases()) {
      uint32_t nb = 0;
      for (int i = 0; i < n; ++i)
        if (b & (1u << i)) nb |= (1u << perm[i]);
      mapped.push_back(nb);
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = std::move(mapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  best.push_back(static_cast<uint32_t>(n));
  return best;
}

std::vector<Matroid> matroid_catalog(uint64_t seed, int max_n) {
  std::vector<Matroid> out;
  std::vector<std::vector<uint32_t>> seen;
  auto push = [&](const Matroid& m) {
    auto sig = isomorphism_signature(m);
    if (std::find(seen.begin(), seen.end(), sig) == seen.end()) {
      seen.push_back(std::move(sig));
      out.push_back(m);
    }
  };

  // classics
  for (int n = 1; n <= max_n; ++n)
    for (int r = 0; r <= std::min(3, n); ++r) push(Matroid::uniform(r, n));
  push(octahedron_m1());
  push(octahedron_m12());
  for (const Rank2Config& cfg : rank2_configs(std::min(max_n, 6)))
    push(cfg.matroid());

  // random realizable matroids, entries in {-2..2}
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int r = 1; r <= 3; ++r)
    for (int n = r; n <= max_n; ++n)
      for (int trial = 0; trial < 60; ++trial) {
        RationalMatrix v(r, n);
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < n; ++j) v.at(i, j) = entry(rng);
        push(Matroid::from_matrix(v));
      }
  return out;
}

}  // namespace orbitk::catalog
