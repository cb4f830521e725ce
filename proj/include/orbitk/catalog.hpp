#pragma once

#include <cstdint>
#include <vector>

#include "orbitk/kclass.hpp"
#include "orbitk/matroid.hpp"
#include "orbitk/ratmat.hpp"

namespace orbitk::catalog {

/// Every rank-2 configuration with 2 <= n <= max_n columns, one per
/// parallelism partition (>= 2 parts), no zero columns.
std::vector<Rank2Config> rank2_configs(int max_n);

/// The octahedron subdivision of the U_{2,4} polytope: two pyramids over
/// the common square.
Matroid octahedron_m1();   // bases: all pairs except {1,2}
Matroid octahedron_m2();   // bases: all pairs except {3,4}
Matroid octahedron_m12();  // parallel classes {1,2}, {3,4}

/// Realization of a rank-2 configuration with prescribed class directions
/// (1, slope) -- distinct slopes give projectively inequivalent points of
/// the same matroid stratum.
RationalMatrix rank2_realization(const Rank2Config& cfg, const std::vector<Rat>& slopes);

/// Pairs of projectively inequivalent realizations of one rank-2 matroid
/// (distinct cross-ratios); at least 10 pairs.
std::vector<std::pair<RationalMatrix, RationalMatrix>> inequivalent_realization_pairs();

/// Deduplicated matroids of random rational matrices with entries in
/// {-2..2}, r <= 3, n <= max_n, plus the classics; deterministic in seed.
std::vector<Matroid> matroid_catalog(uint64_t seed, int max_n = 6);

/// Canonical isomorphism signature: lexicographically least sorted basis
/// list over all ground-set permutations (n <= 7).
std::vector<uint32_t> isomorphism_signature(const Matroid& m);

}  // namespace orbitk::catalog
