#pragma once

#include <random>

#include "kisin/module.hpp"
#include "kisin/smith.hpp"

// Shared generators and independent oracles for the test suites.  The
// oracles deliberately avoid the library code paths they check.
namespace kisin::testing {

using Rng = std::mt19937;

inline long long pick(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

FieldElement random_element(Rng& rng, const FieldPtr& f);
FieldElement random_nonzero(Rng& rng, const FieldPtr& f);

// Random series with ~terms nonzero coefficients in [min_exp, prec).
TruncSeries random_series(Rng& rng, const FieldPtr& f, const std::string& var, int prec,
                          int min_exp, int terms);
TruncSeries random_unit_series(Rng& rng, const FieldPtr& f, const std::string& var, int prec,
                               int terms);

// Product of random elementary matrices and unit diagonal: in GL_n(k[[var]]).
SeriesMatrix random_unimodular(Rng& rng, int n, const FieldPtr& f, const std::string& var,
                               int prec, int ops = 6);
// Same, constrained to the Iwahori (upper triangular mod u).
SeriesMatrix random_iwahori(Rng& rng, int n, const FieldPtr& f, const std::string& var,
                            int prec, int ops = 6);
// Same, constrained to L+P for the given block partition.
SeriesMatrix random_parahoric(Rng& rng, const BlockPartition& blocks, const FieldPtr& f,
                              const std::string& var, int prec, int ops = 6);
// Invertible over k((var)) but not integral: unimodular times random monomial
// diagonal with exponents in [-spread, spread].
SeriesMatrix random_invertible_laurent(Rng& rng, int n, const FieldPtr& f,
                                       const std::string& var, int prec, int spread);

AffinePermutation random_affine_perm(Rng& rng, int n, long long coord_bound);

// Independent Bruhat-closure oracle: BFS through covers_below from the
// orbit translations, with the documented reflection bound.
PermSet admissible_set_bfs_oracle(const Cochar& lambda, long long extra_bound = 0);

// Saturate-then-minimize oracle for Adm_P.
PermSet parahoric_admissible_oracle(const Cochar& lambda, const BlockPartition& blocks);

// Minors-gcd oracle: d_1 + ... + d_k = min valuation over k x k minors.
Cochar minors_gcd_divisors(const SeriesMatrix& m);

// Exhaustive minimal representative (argmin of length over W_P w W_P);
// asserts the minimum is unique.
AffinePermutation min_rep_exhaustive(const AffinePermutation& w, const BlockPartition& blocks);

// Standard field towers used across the tests: F_q with q = p^f.
FieldPtr small_field(long long p, int f);

// Valid random module: diagonal monomial seed with divisor exponents in
// [0, e_K*h], pushed around by a random eigenbasis change.
KisinModuleDD random_valid_module(Rng& rng, long long p, int f, int n, int e_K, int h,
                                  int guard = 16);

// Same module with one off-congruence monomial injected into C^{(j)}.
KisinModuleDD corrupt_module(Rng& rng, const KisinModuleDD& m);

// Module whose isotypic matrices are the given u-matrices (sorted frame):
// C^{(j)} = unsort(D_j^{-1} A_j(v^{p^f-1}) D_j).  Laurent entries allowed.
KisinModuleDD module_from_isotypic(const TameType& type, const Orientation& orient, int e_K,
                                   int h, const FieldPtr& field,
                                   const std::vector<SeriesMatrix>& a_per_j);

} // namespace kisin::testing
