#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "kisin/errors.hpp"

namespace kisin {

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

// F_{p^m} presented as F_p[x]/(poly), poly monic irreducible of degree m.
// Irreducibility is verified at construction by exhaustive factor search,
// which is fine at the intended scale (m <= 4, small p).
class FieldSpec {
public:
    // poly: coefficient vector of length m+1, constant term first, over F_p.
    static FieldPtr make(long long p, int m, std::vector<long long> poly);

    // Prime field shortcut: poly is x - 0 ... actually x itself is not monic
    // degree 1 irreducible with the right quotient; we use x + c for a
    // non-root c?  Simpler: callers pass m=1 and poly {0,1} meaning x, and
    // arithmetic never reduces (degree-0 remainders).  make() special-cases it.
    static FieldPtr prime(long long p) { return make(p, 1, {0, 1}); }

    long long p() const { return p_; }
    int m() const { return m_; }
    long long q() const { return q_; } // p^m
    const std::vector<long long>& poly() const { return poly_; }

    bool same(const FieldSpec& other) const;

private:
    FieldSpec(long long p, int m, std::vector<long long> poly, long long q)
        : p_(p), m_(m), q_(q), poly_(std::move(poly)) {}

    long long p_;
    int m_;
    long long q_;
    std::vector<long long> poly_;
};

// Element of F_{p^m}: coefficient vector of length m over F_p.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr field, std::vector<long long> coeffs);

    static FieldElement zero(const FieldPtr& field);
    static FieldElement one(const FieldPtr& field);
    // Element with given index in [0, q): base-p digit expansion.
    static FieldElement from_index(const FieldPtr& field, long long index);
    long long index() const;

    const FieldPtr& field() const { return field_; }
    const std::vector<long long>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(long long e) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    void check_compatible(const FieldElement& o) const;

    FieldPtr field_;
    std::vector<long long> c_;
};

// A fixed element of multiplicative order exactly d.  Requires d | q-1;
// throws FieldTooSmall otherwise.  Deterministic (smallest generator index).
FieldElement primitive_root_of_unity(const FieldPtr& field, long long d);

} // namespace kisin
