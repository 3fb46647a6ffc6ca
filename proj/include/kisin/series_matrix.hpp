#pragma once

#include <functional>
#include <vector>

#include "kisin/series.hpp"

namespace kisin {

// Square matrix over a truncated series ring.  All entries share one field,
// variable tag and (initially) one precision; operations may lower the
// precision of individual entries, which is what precision() reports.
class SeriesMatrix {
public:
    SeriesMatrix() = default;
    SeriesMatrix(int n, const FieldPtr& f, const std::string& var, int prec);

    static SeriesMatrix identity(int n, const FieldPtr& f, const std::string& var, int prec);

    int n() const { return n_; }
    const FieldPtr& field() const { return field_; }
    const std::string& var() const { return var_; }
    int precision() const; // min entry precision

    TruncSeries& at(int i, int j) { return e_[i * n_ + j]; }
    const TruncSeries& at(int i, int j) const { return e_[i * n_ + j]; }

    SeriesMatrix operator*(const SeriesMatrix& o) const;
    SeriesMatrix operator+(const SeriesMatrix& o) const;
    SeriesMatrix operator-(const SeriesMatrix& o) const;

    // Cofactor-expansion determinant (n <= 6).
    TruncSeries det() const;
    // Inverse via adjugate over the Laurent field; requires det of known
    // valuation.  Throws SingularMatrix / PrecisionExhausted.
    SeriesMatrix inverse() const;

    SeriesMatrix shift_all(int k) const;                 // multiply every entry by var^k
    SeriesMatrix substitute_pow(int d, const std::string& nv) const;
    SeriesMatrix extract_pow(int d, const std::string& nv) const;
    SeriesMatrix map(const std::function<TruncSeries(const TruncSeries&)>& fn) const;
    // Conjugate by the permutation s (0-indexed): result(i,j) = (*this)(s[i], s[j]).
    SeriesMatrix permuted(const std::vector<int>& s) const;

    bool equal_at_prec(const SeriesMatrix& o) const;
    // Least certified valuation over all entries (entries with unknown
    // valuation are skipped); 0 if every entry is zero-at-precision.
    int min_valuation_bound() const;

    // val(det) == 0 certified.
    bool is_unimodular() const;

private:
    int n_ = 0;
    FieldPtr field_;
    std::string var_;
    std::vector<TruncSeries> e_;
};

// Elementary-operation helpers used by the reduction algorithms; rows/cols
// are 0-indexed, ops act in place.
void row_axpy(SeriesMatrix& m, int dst, int src, const TruncSeries& c); // row_dst += c*row_src
void col_axpy(SeriesMatrix& m, int dst, int src, const TruncSeries& c); // col_dst += c*col_src
void row_scale(SeriesMatrix& m, int row, const TruncSeries& u);
void col_scale(SeriesMatrix& m, int col, const TruncSeries& u);
void row_swap(SeriesMatrix& m, int a, int b);
void col_swap(SeriesMatrix& m, int a, int b);

} // namespace kisin
