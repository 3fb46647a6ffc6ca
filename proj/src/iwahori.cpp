#include "kisin/iwahori.hpp"

#include <algorithm>

namespace kisin {

SeriesMatrix monomial_matrix(const AffinePermutation& w, const FieldPtr& f,
                             const std::string& var, int prec) {
    auto [lambda, perm] = w.decompose();
    int n = w.n();
    SeriesMatrix m(n, f, var, prec);
    for (int j = 0; j < n; ++j) {
        int i = perm[j] - 1;
        m.at(i, j) = TruncSeries::monomial(f, var, prec, static_cast<int>(lambda[i]),
                                           FieldElement::one(f));
    }
    return m;
}

AffinePermutation read_monomial(const SeriesMatrix& m) {
    int n = m.n();
    Cochar lambda(n, 0);
    std::vector<int> perm(n, 0);
    for (int j = 0; j < n; ++j) {
        int found = -1;
        for (int i = 0; i < n; ++i) {
            const auto& s = m.at(i, j);
            if (s.is_zero_at_prec()) continue;
            if (found >= 0) throw Error("NotMonomial", "two nonzero entries in one column");
            if (s.coeffs().size() != 1)
                throw Error("NotMonomial", "entry is not a single monomial");
            found = i;
        }
        if (found < 0) throw Error("NotMonomial", "zero column");
        perm[j] = found + 1;
        lambda[found] = m.at(found, j).coeffs().begin()->first;
    }
    return AffinePermutation::from_parts(lambda, perm);
}

bool in_positive_loop_group(const SeriesMatrix& m) {
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            auto v = m.at(i, j).valuation();
            if (v && *v < 0) return false;
        }
    return m.is_unimodular();
}

bool in_iwahori(const SeriesMatrix& m) {
    return in_parahoric(m, BlockPartition::singletons(m.n()));
}

bool in_parahoric(const SeriesMatrix& m, const BlockPartition& blocks) {
    if (m.n() != blocks.n()) throw DimensionMismatch("partition size mismatch");
    if (!in_positive_loop_group(m)) return false;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            if (blocks.block_of(i) <= blocks.block_of(j)) continue;
            auto v = m.at(i, j).valuation();
            if (v && *v == 0) return false; // below the block diagonal mod u
        }
    return true;
}

IwahoriReduction iwahori_reduce(const SeriesMatrix& m) {
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
    SeriesMatrix i1 = SeriesMatrix::identity(n, m.field(), m.var(), prec);
    SeriesMatrix i2 = SeriesMatrix::identity(n, m.field(), m.var(), prec);
    std::vector<bool> row_done(n, false), col_done(n, false);

    for (int step = 0; step < n; ++step) {
        // Pivot: least valuation; ties broken toward the largest row, then
        // the smallest column.  Clearing rows below the pivot and columns to
        // its left needs multipliers of valuation >= 1 (they sit below the
        // diagonal of the elementary matrix); the tie-break guarantees those
        // entries have strictly larger valuation than the pivot.
        int pi = -1, pj = -1, pv = 0;
        for (int i = 0; i < n; ++i) {
            if (row_done[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (col_done[j]) continue;
                auto v = work.at(i, j).valuation();
                if (!v) continue;
                if (pi < 0 || *v < pv || (*v == pv && (i > pi || (i == pi && j < pj)))) {
                    pi = i;
                    pj = j;
                    pv = *v;
                }
            }
        }
        if (pi < 0)
            throw PrecisionExhausted("no pivot with certified valuation in step " +
                                     std::to_string(step));
        const TruncSeries pivot = work.at(pi, pj);

        // clear column pj: row_i += c * row_pi
        for (int i = 0; i < n; ++i) {
            if (i == pi || row_done[i]) continue;
            if (work.at(i, pj).is_zero_at_prec()) continue;
            TruncSeries c = -(work.at(i, pj).divide(pivot));
            // Iwahori constraint: entry (i, pi) of the elementary matrix is
            // below the diagonal iff i > pi, and then val(c) >= 1 is needed.
            auto cv = c.valuation();
            if (i > pi && cv && *cv < 1)
                throw Error("PivotInvariant", "tie-break failed to enforce Iwahori shape");
            row_axpy(work, i, pi, c);
            // i1 <- i1 * E^{-1}, E = I + c E_{i,pi}
            col_axpy(i1, pi, i, -c);
        }
        // clear row pi: col_j += c * col_pj (col pj now carries only the pivot)
        for (int j = 0; j < n; ++j) {
            if (j == pj || col_done[j]) continue;
            if (work.at(pi, j).is_zero_at_prec()) continue;
            TruncSeries c = -(work.at(pi, j).divide(pivot));
            auto cv = c.valuation();
            if (j < pj && cv && *cv < 1)
                throw Error("PivotInvariant", "tie-break failed to enforce Iwahori shape");
            col_axpy(work, j, pj, c);
            // i2 <- F^{-1} * i2, F = I + c E_{pj,j}
            row_axpy(i2, pj, j, -c);
        }
        // normalize pivot to an exact power of the variable
        TruncSeries unit = pivot.shift(-pv);
        TruncSeries unit_inv = unit.inverse();
        row_scale(work, pi, unit_inv);
        col_scale(i1, pi, unit);
        row_done[pi] = true;
        col_done[pj] = true;
    }

    AffinePermutation perm = read_monomial(work);
    if (shift > 0) {
        Cochar central(n, -shift);
        perm = AffinePermutation::translation(central) * perm;
    }
    return {perm, i1, i2};
}

AffinePermutation parahoric_reduce(const SeriesMatrix& m, const BlockPartition& blocks) {
    return min_double_coset_rep(iwahori_reduce(m).perm, blocks);
}

} // namespace kisin
