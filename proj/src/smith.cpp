#include "kisin/smith.hpp"

#include <algorithm>

namespace kisin {

SmithResult smith_normal_form(const SeriesMatrix& m) {
    int n = m.n();
    int shift = 0;
    SeriesMatrix work = m;
    if (m.min_valuation_bound() < 0) {
        shift = -m.min_valuation_bound();
        work = m.shift_all(shift);
    }
    if (!work.det().valuation())
        throw SingularMatrix("determinant is zero at stored precision");

    int prec = work.precision();
    SeriesMatrix left = SeriesMatrix::identity(n, m.field(), m.var(), prec);
    SeriesMatrix right = SeriesMatrix::identity(n, m.field(), m.var(), prec);

    for (int t = 0; t < n; ++t) {
        // pivot: least valuation in the trailing submatrix
        int pi = -1, pj = -1, pv = 0;
        for (int i = t; i < n; ++i)
            for (int j = t; j < n; ++j) {
                auto v = work.at(i, j).valuation();
                if (!v) continue;
                if (pi < 0 || *v < pv) {
                    pi = i;
                    pj = j;
                    pv = *v;
                }
            }
        if (pi < 0)
            throw PrecisionExhausted("no pivot with certified valuation in step " +
                                     std::to_string(t));
        row_swap(work, t, pi);
        row_swap(left, t, pi);
        col_swap(work, t, pj);
        col_swap(right, t, pj);

        const TruncSeries pivot = work.at(t, t);
        for (int i = t + 1; i < n; ++i) {
            if (work.at(i, t).is_zero_at_prec()) continue;
            TruncSeries c = -(work.at(i, t).divide(pivot));
            row_axpy(work, i, t, c);
            row_axpy(left, i, t, c);
        }
        for (int j = t + 1; j < n; ++j) {
            if (work.at(t, j).is_zero_at_prec()) continue;
            TruncSeries c = -(work.at(t, j).divide(pivot));
            col_axpy(work, j, t, c);
            col_axpy(right, j, t, c);
        }
        // normalize the pivot to an exact power of the variable
        TruncSeries unit_inv = pivot.shift(-pv).inverse();
        row_scale(work, t, unit_inv);
        row_scale(left, t, unit_inv);
    }

    Cochar divisors(n);
    for (int t = 0; t < n; ++t) {
        auto v = work.at(t, t).valuation();
        if (!v) throw PrecisionExhausted("diagonal valuation lost during reduction");
        divisors[t] = *v - shift;
    }
    if (!std::is_sorted(divisors.begin(), divisors.end()))
        throw Error("SmithInvariant", "divisors not sorted; pivot selection broke");
    return {divisors, left, right};
}

Cochar cartan_position(const SeriesMatrix& m) {
    Cochar d = smith_normal_form(m).divisors;
    std::sort(d.rbegin(), d.rend());
    return d;
}

} // namespace kisin
