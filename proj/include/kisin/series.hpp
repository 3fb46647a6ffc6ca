#pragma once

#include <map>
#include <optional>
#include <string>

#include "kisin/field.hpp"

namespace kisin {

// Truncated Laurent series over a finite field.  Coefficients are stored
// sparsely and are authoritative for every exponent < prec(); exponents
// >= prec() are unknown.  Negative exponents are allowed (Laurent elements);
// all arithmetic keeps the "known below prec" contract:
//   add/sub: prec = min of the operands,
//   mul:     prec = min(pa + ord_b, pb + ord_a)  (ord = certified lower
//            bound on the valuation, i.e. the least stored exponent).
// Shifts by monomials are exact and move the precision window with them.
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(FieldPtr field, std::string var, int prec);

    static TruncSeries zero(const FieldPtr& f, const std::string& var, int prec);
    static TruncSeries one(const FieldPtr& f, const std::string& var, int prec);
    static TruncSeries monomial(const FieldPtr& f, const std::string& var, int prec,
                                int exp, const FieldElement& coeff);

    const FieldPtr& field() const { return field_; }
    const std::string& var() const { return var_; }
    int prec() const { return prec_; }
    const std::map<int, FieldElement>& coeffs() const { return c_; }

    FieldElement coeff(int exp) const; // zero if absent (exp must be < prec)
    void set_coeff(int exp, const FieldElement& value);

    // Least exponent with nonzero coefficient; nullopt means ">= prec"
    // (indistinguishable from zero at this precision).
    std::optional<int> valuation() const;
    // Lower bound usable for precision propagation: valuation() or prec().
    int ord_bound() const;
    bool is_zero_at_prec() const { return c_.empty(); }

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator-() const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries scalar_mul(const FieldElement& a) const;

    // Multiply by var^k (k may be negative): exact, precision shifts by k.
    TruncSeries shift(int k) const;
    // Reduce (never raise) the precision window.
    TruncSeries truncated(int new_prec) const;

    // Substitute var -> var^d (d >= 1), retagging to new_var.
    TruncSeries substitute_pow(int d, const std::string& new_var) const;
    // Inverse: all exponents divisible by d; throws DescentViolation otherwise.
    TruncSeries extract_pow(int d, const std::string& new_var) const;
    // Substitute var -> zeta * var (zeta a field unit): coeff_e *= zeta^e.
    TruncSeries scale_var(const FieldElement& zeta) const;

    // Multiplicative inverse; requires valuation exactly 0.
    TruncSeries inverse() const;
    // this / o; requires val(o) known and val(o) <= every stored exponent here.
    TruncSeries divide(const TruncSeries& o) const;

    // Agreement of all stored coefficients below min(prec, o.prec).
    bool equal_at_prec(const TruncSeries& o) const;

    std::string str() const;

private:
    void check_compatible(const TruncSeries& o) const;

    FieldPtr field_;
    std::string var_;
    int prec_ = 0;
    std::map<int, FieldElement> c_;
};

} // namespace kisin
