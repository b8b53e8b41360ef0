#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gammalat/arithmetic.hpp"

namespace gammalat::selftest {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// H^1 of every M_{a,b} for p = 3 (n <= 3) and p = 5 (n <= 2) against the
/// closed-form diagram: level labels and an explicit diagram isomorphism.
std::vector<Check> lemma_suite();

/// Delta(M (+) permutation lattices) after random base changes must be
/// isomorphic to Delta(M), for every library lattice at p = 3, n <= 3.
std::vector<Check> stability_suite(std::uint64_t seed, int trials);

/// Residual identity and rank accounting on the unramified, single-place
/// and many-places datum families.
std::vector<Check> corollary_suite(std::uint64_t seed);

std::vector<Check> run_suite(const std::string& name, std::uint64_t seed, int trials);

/// Sorted by name, one row per check.
void print_table(std::ostream& os, std::vector<Check> checks);

bool all_passed(const std::vector<Check>& checks);

// Datum families shared with the acceptance tests.

/// HilbertCyclic, no ramification, all S-places split, random r1, r2, s_0.
std::vector<ExtensionDatum> unramified_family(std::uint64_t seed, int n, int count);

/// One totally ramified place, S empty.
ExtensionDatum single_place_datum(int n, std::int64_t r1, std::int64_t r2);

/// k places with inertia = decomposition = p at p = 3, n = 1, S empty.
ExtensionDatum many_places_datum(int k, std::int64_t r1);

/// Rank accounting of a report against the Dirichlet-Herbrand total,
/// recomputed from the datum; empty string when it holds.
std::string rank_accounting_defect(const ExtensionDatum& datum, const DecompositionReport& report);

}  // namespace gammalat::selftest
