#pragma once

#include "kisin/affine.hpp"
#include "kisin/series_matrix.hpp"

namespace kisin {

// left * M * right = diag(u^{d_1}, ..., u^{d_n}) with d_1 <= ... <= d_n and
// left, right invertible over the series ring.  Laurent input is handled by
// factoring out a single global power of the variable and adding it back to
// the divisors.
struct SmithResult {
    Cochar divisors;
    SeriesMatrix left;
    SeriesMatrix right;
};

SmithResult smith_normal_form(const SeriesMatrix& m);

// Divisor exponents sorted decreasingly: the dominant representative of the
// double coset GL_n(k[[u]]) M GL_n(k[[u]]).
Cochar cartan_position(const SeriesMatrix& m);

} // namespace kisin
