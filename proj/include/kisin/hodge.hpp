#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "kisin/affine.hpp"

namespace kisin {

using Rational = boost::multiprecision::cpp_rational;

// Univariate polynomial over Q, constant term first, no trailing zeros.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    static RatPoly constant(const Rational& c);
    static RatPoly monomial(int deg, const Rational& c);
    // u - a
    static RatPoly linear_root(const Rational& a);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator-() const;

    Rational eval(const Rational& x) const;
    // Quotient by (u - a); remainder must vanish.
    RatPoly divide_linear(const Rational& a) const;
    // Multiplicity of the root a (0 if p(a) != 0); error on the zero polynomial.
    int valuation_at(const Rational& a) const;

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    std::string str(const std::string& var = "u") const;

private:
    std::vector<Rational> c_;
};

using RatPolyMatrix = std::vector<std::vector<RatPoly>>;

RatPoly det(const RatPolyMatrix& m);

struct HodgeInput {
    long long p = 0;
    int f = 0;
    int n = 0;
    // e_K = 1: one cocharacter bound per embedding
    std::vector<Cochar> mu;
    std::vector<RatPolyMatrix> matrices; // per embedding, n x n over Q[u]
};

struct HodgeReport {
    std::vector<Cochar> position; // per embedding, sorted decreasingly
    std::vector<bool> leq_mu;
    bool all_leq = false;
};

// Elementary divisor exponents at the prime (u - p) over the local ring of
// rational polynomials, per embedding, plus the dominance-order verdict
// against mu.  e_K = 1 only (uniformizer rational over the coefficients);
// throws RamifiedNotSupported otherwise, SingularAtPi when a determinant
// vanishes identically.
HodgeReport hodge_position(const HodgeInput& input);

// Positions only, for one matrix: sorted decreasingly.
Cochar hodge_position_matrix(const RatPolyMatrix& m, const Rational& pi);

} // namespace kisin
