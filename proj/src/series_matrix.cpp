#include "kisin/series_matrix.hpp"

#include <algorithm>

namespace kisin {

SeriesMatrix::SeriesMatrix(int n, const FieldPtr& f, const std::string& var, int prec)
    : n_(n), field_(f), var_(var) {
    e_.assign(static_cast<size_t>(n) * n, TruncSeries::zero(f, var, prec));
}

SeriesMatrix SeriesMatrix::identity(int n, const FieldPtr& f, const std::string& var,
                                    int prec) {
    SeriesMatrix m(n, f, var, prec);
    for (int i = 0; i < n; ++i) m.at(i, i) = TruncSeries::one(f, var, prec);
    return m;
}

int SeriesMatrix::precision() const {
    int p = e_.empty() ? 0 : e_[0].prec();
    for (const auto& s : e_) p = std::min(p, s.prec());
    return p;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
    if (n_ != o.n_) throw DimensionMismatch("matrix product size mismatch");
    SeriesMatrix r(n_, field_, var_, precision());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            TruncSeries acc = at(i, 0) * o.at(0, j);
            for (int k = 1; k < n_; ++k) acc = acc + at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

SeriesMatrix SeriesMatrix::operator+(const SeriesMatrix& o) const {
    if (n_ != o.n_) throw DimensionMismatch("matrix sum size mismatch");
    SeriesMatrix r(n_, field_, var_, precision());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

SeriesMatrix SeriesMatrix::operator-(const SeriesMatrix& o) const {
    if (n_ != o.n_) throw DimensionMismatch("matrix difference size mismatch");
    SeriesMatrix r(n_, field_, var_, precision());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

TruncSeries SeriesMatrix::det() const {
    if (n_ > 6) throw Error("Unsupported", "determinant only implemented for n <= 6");
    if (n_ == 1) return at(0, 0);
    // Laplace expansion along the first row.
    TruncSeries acc = TruncSeries::zero(field_, var_, at(0, 0).prec());
    bool first = true;
    for (int j = 0; j < n_; ++j) {
        SeriesMatrix sub(n_ - 1, field_, var_, precision());
        for (int r = 1; r < n_; ++r) {
            int cc = 0;
            for (int c = 0; c < n_; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = at(r, c);
            }
        }
        TruncSeries term = at(0, j) * sub.det();
        if (j % 2 == 1) term = -term;
        acc = first ? term : acc + term;
        first = false;
    }
    return acc;
}

SeriesMatrix SeriesMatrix::inverse() const {
    TruncSeries d = det();
    auto dv = d.valuation();
    if (!dv) throw SingularMatrix("determinant is zero at stored precision");
    TruncSeries dinv = d.shift(-*dv).inverse().shift(-*dv);
    SeriesMatrix r(n_, field_, var_, precision());
    if (n_ == 1) {
        r.at(0, 0) = dinv;
        return r;
    }
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            SeriesMatrix sub(n_ - 1, field_, var_, precision());
            int rr = 0;
            for (int a = 0; a < n_; ++a) {
                if (a == j) continue; // adjugate: delete row j, col i
                int cc = 0;
                for (int b = 0; b < n_; ++b) {
                    if (b == i) continue;
                    sub.at(rr, cc++) = at(a, b);
                }
                ++rr;
            }
            TruncSeries cof = sub.det();
            if ((i + j) % 2 == 1) cof = -cof;
            r.at(i, j) = cof * dinv;
        }
    return r;
}

SeriesMatrix SeriesMatrix::shift_all(int k) const {
    return map([k](const TruncSeries& s) { return s.shift(k); });
}

SeriesMatrix SeriesMatrix::substitute_pow(int d, const std::string& nv) const {
    SeriesMatrix r(n_, field_, nv, precision());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j).substitute_pow(d, nv);
    return r;
}

SeriesMatrix SeriesMatrix::extract_pow(int d, const std::string& nv) const {
    SeriesMatrix r(n_, field_, nv, precision());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j).extract_pow(d, nv);
    return r;
}

SeriesMatrix SeriesMatrix::map(const std::function<TruncSeries(const TruncSeries&)>& fn) const {
    SeriesMatrix r = *this;
    for (auto& s : r.e_) s = fn(s);
    return r;
}

SeriesMatrix SeriesMatrix::permuted(const std::vector<int>& s) const {
    SeriesMatrix r = *this;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(s[i], s[j]);
    return r;
}

bool SeriesMatrix::equal_at_prec(const SeriesMatrix& o) const {
    if (n_ != o.n_) return false;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!at(i, j).equal_at_prec(o.at(i, j))) return false;
    return true;
}

int SeriesMatrix::min_valuation_bound() const {
    bool any = false;
    int v = 0;
    for (const auto& s : e_) {
        auto val = s.valuation();
        if (val) {
            v = any ? std::min(v, *val) : *val;
            any = true;
        }
    }
    return any ? v : 0;
}

bool SeriesMatrix::is_unimodular() const {
    auto dv = det().valuation();
    return dv && *dv == 0;
}

void row_axpy(SeriesMatrix& m, int dst, int src, const TruncSeries& c) {
    for (int j = 0; j < m.n(); ++j) m.at(dst, j) = m.at(dst, j) + c * m.at(src, j);
}

void col_axpy(SeriesMatrix& m, int dst, int src, const TruncSeries& c) {
    for (int i = 0; i < m.n(); ++i) m.at(i, dst) = m.at(i, dst) + c * m.at(i, src);
}

void row_scale(SeriesMatrix& m, int row, const TruncSeries& u) {
    for (int j = 0; j < m.n(); ++j) m.at(row, j) = m.at(row, j) * u;
}

void col_scale(SeriesMatrix& m, int col, const TruncSeries& u) {
    for (int i = 0; i < m.n(); ++i) m.at(i, col) = m.at(i, col) * u;
}

void row_swap(SeriesMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.n(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void col_swap(SeriesMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.n(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

} // namespace kisin
