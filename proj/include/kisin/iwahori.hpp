#pragma once

#include "kisin/affine.hpp"
#include "kisin/series_matrix.hpp"

namespace kisin {

// Monomial matrix of an affine Weyl element: column j carries var^{lambda_{w(j)}}
// in row w(j), for the t_lambda * w decomposition.  This is a group
// homomorphism: matrix_of(a*b) = matrix_of(a) * matrix_of(b).
SeriesMatrix monomial_matrix(const AffinePermutation& w, const FieldPtr& f,
                             const std::string& var, int prec);

// Inverse of monomial_matrix on exact monomial matrices.
AffinePermutation read_monomial(const SeriesMatrix& m);

// Membership tests on stored coefficients (up to precision).
bool in_positive_loop_group(const SeriesMatrix& m);          // entries in k[[u]], det a unit
bool in_iwahori(const SeriesMatrix& m);                      // and upper triangular mod u
bool in_parahoric(const SeriesMatrix& m, const BlockPartition& blocks); // block upper mod u

struct IwahoriReduction {
    AffinePermutation perm;
    SeriesMatrix left;  // element of the Iwahori
    SeriesMatrix right; // element of the Iwahori
    // certificate: left * monomial_matrix(perm) * right == input up to precision
};

// The unique w with M in I w I, I = {g : g mod u upper triangular}, together
// with the reconstruction certificate.  Input may be Laurent; a single global
// power of the variable is factored out and folded back into w.
IwahoriReduction iwahori_reduce(const SeriesMatrix& m);

// Minimal-length representative of W_P * iwahori_reduce(m) * W_P.
AffinePermutation parahoric_reduce(const SeriesMatrix& m, const BlockPartition& blocks);

} // namespace kisin
