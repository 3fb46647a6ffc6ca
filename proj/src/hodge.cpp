#include "kisin/hodge.hpp"

#include <algorithm>
#include <sstream>

namespace kisin {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(int deg, const Rational& c) {
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::linear_root(const Rational& a) { return RatPoly({-a, Rational(1)}); }

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
    std::vector<Rational> v = c_;
    for (auto& x : v) x = -x;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(v));
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::divide_linear(const Rational& a) const {
    if (is_zero()) return RatPoly();
    // synthetic division by (u - a)
    std::vector<Rational> q(c_.size() - 1, Rational(0));
    Rational carry = 0;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 1; --i) {
        q[i - 1] = c_[i] + carry;
        carry = q[i - 1] * a;
    }
    if (c_[0] + carry != 0)
        throw Error("InexactDivision", "polynomial not divisible by u - " +
                                           a.str());
    return RatPoly(std::move(q));
}

int RatPoly::valuation_at(const Rational& a) const {
    if (is_zero()) throw SingularAtPi("valuation of the zero polynomial");
    RatPoly cur = *this;
    int v = 0;
    while (cur.eval(a) == 0) {
        cur = cur.divide_linear(a);
        ++v;
    }
    return v;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (os.tellp() > 0) os << " + ";
        os << c_[i].str();
        if (i >= 1) os << "*" << var << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
}

RatPoly det(const RatPolyMatrix& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    RatPoly acc;
    for (size_t j = 0; j < n; ++j) {
        RatPolyMatrix sub(n - 1, std::vector<RatPoly>(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        RatPoly term = m[0][j] * det(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

Cochar hodge_position_matrix(const RatPolyMatrix& m, const Rational& pi) {
    int n = static_cast<int>(m.size());
    if (det(m).is_zero()) throw SingularAtPi("matrix is singular over Q(u)");
    RatPolyMatrix work = m;

    Cochar divisors;
    for (int t = 0; t < n; ++t) {
        int pi_row = -1, pi_col = -1, pv = 0;
        for (int i = t; i < n; ++i)
            for (int j = t; j < n; ++j) {
                if (work[i][j].is_zero()) continue;
                int v = work[i][j].valuation_at(pi);
                if (pi_row < 0 || v < pv) {
                    pi_row = i;
                    pi_col = j;
                    pv = v;
                }
            }
        if (pi_row < 0) throw SingularAtPi("remaining submatrix is zero");
        std::swap(work[t], work[pi_row]);
        for (int i = 0; i < n; ++i) std::swap(work[i][t], work[i][pi_col]);

        // pivot = (u-pi)^pv * phat with phat(pi) != 0; clearing scales rows
        // and columns by phat, a unit in the local ring at (u - pi).
        RatPoly phat = work[t][t];
        for (int s = 0; s < pv; ++s) phat = phat.divide_linear(pi);
        for (int i = t + 1; i < n; ++i) {
            if (work[i][t].is_zero()) continue;
            RatPoly ehat = work[i][t];
            for (int s = 0; s < pv; ++s) ehat = ehat.divide_linear(pi);
            for (int j = t; j < n; ++j)
                work[i][j] = phat * work[i][j] - ehat * work[t][j];
        }
        for (int j = t + 1; j < n; ++j) {
            if (work[t][j].is_zero()) continue;
            RatPoly ehat = work[t][j];
            for (int s = 0; s < pv; ++s) ehat = ehat.divide_linear(pi);
            for (int i = t; i < n; ++i)
                work[i][j] = phat * work[i][j] - ehat * work[i][t];
        }
        divisors.push_back(pv);
    }
    std::sort(divisors.rbegin(), divisors.rend());
    return divisors;
}

HodgeReport hodge_position(const HodgeInput& input) {
    if (input.f < 1) throw ShapeMismatch("need at least one embedding");
    if (static_cast<int>(input.matrices.size()) != input.f ||
        static_cast<int>(input.mu.size()) != input.f)
        throw ShapeMismatch("need one matrix and one mu per embedding");
    Rational pi(input.p);
    HodgeReport rep;
    rep.all_leq = true;
    for (int j = 0; j < input.f; ++j) {
        const auto& m = input.matrices[j];
        if (static_cast<int>(m.size()) != input.n)
            throw ShapeMismatch("matrix size != n");
        for (const auto& row : m)
            if (static_cast<int>(row.size()) != input.n)
                throw ShapeMismatch("matrix is not square");
        if (static_cast<int>(input.mu[j].size()) != input.n)
            throw ShapeMismatch("mu length != n");
        Cochar pos = hodge_position_matrix(m, pi);
        bool leq = dominance_leq(pos, input.mu[j]);
        rep.position.push_back(std::move(pos));
        rep.leq_mu.push_back(leq);
        rep.all_leq = rep.all_leq && leq;
    }
    return rep;
}

} // namespace kisin
