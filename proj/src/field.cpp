#include "kisin/field.hpp"

#include <algorithm>

namespace kisin {

namespace {

long long mod(long long a, long long p) {
    long long r = a % p;
    return r < 0 ? r + p : r;
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Remainder of a mod b in F_p[x]; b monic.  Coefficient vectors, constant
// term first, no trailing-zero normalization required on input.
std::vector<long long> poly_rem(std::vector<long long> a,
                                const std::vector<long long>& b, long long p) {
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        long long lead = mod(a[da], p);
        if (lead != 0) {
            for (int i = 0; i <= db; ++i)
                a[da - db + i] = mod(a[da - db + i] - lead * b[i], p);
        }
        a.pop_back();
    }
    return a;
}

bool poly_is_zero(const std::vector<long long>& a, long long p) {
    for (long long x : a)
        if (mod(x, p) != 0) return false;
    return true;
}

// Exhaustive search for a monic factor of degree 1..deg/2.
bool is_irreducible(const std::vector<long long>& poly, long long p) {
    int m = static_cast<int>(poly.size()) - 1;
    if (m == 1) return true;
    for (int d = 1; 2 * d <= m; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<long long> cand(d + 1, 0);
            long long t = idx;
            for (int i = 0; i < d; ++i) {
                cand[i] = t % p;
                t /= p;
            }
            cand[d] = 1;
            if (poly_is_zero(poly_rem(poly, cand, p), p)) return false;
        }
    }
    return true;
}

std::vector<long long> prime_factors(long long x) {
    std::vector<long long> fs;
    for (long long d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            fs.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) fs.push_back(x);
    return fs;
}

} // namespace

FieldPtr FieldSpec::make(long long p, int m, std::vector<long long> poly) {
    if (!is_prime(p)) throw Error("InvalidField", "p is not prime");
    if (m < 1 || m > 8) throw Error("InvalidField", "extension degree out of range");
    if (static_cast<int>(poly.size()) != m + 1)
        throw Error("InvalidField", "defining polynomial must have length m+1");
    for (auto& c : poly) c = mod(c, p);
    if (poly[m] != 1) throw Error("InvalidField", "defining polynomial must be monic");
    if (!is_irreducible(poly, p))
        throw Error("InvalidField", "defining polynomial is reducible");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > (1LL << 40)) throw Error("InvalidField", "field too large");
    }
    return FieldPtr(new FieldSpec(p, m, std::move(poly), q));
}

bool FieldSpec::same(const FieldSpec& other) const {
    return p_ == other.p_ && m_ == other.m_ && poly_ == other.poly_;
}

FieldElement::FieldElement(FieldPtr field, std::vector<long long> coeffs)
    : field_(std::move(field)) {
    if (static_cast<int>(coeffs.size()) > field_->m())
        coeffs = poly_rem(std::move(coeffs), field_->poly(), field_->p());
    coeffs.resize(field_->m(), 0);
    for (auto& c : coeffs) c = mod(c, field_->p());
    c_ = std::move(coeffs);
}

FieldElement FieldElement::zero(const FieldPtr& field) {
    return FieldElement(field, std::vector<long long>(field->m(), 0));
}

FieldElement FieldElement::one(const FieldPtr& field) {
    std::vector<long long> c(field->m(), 0);
    c[0] = 1;
    return FieldElement(field, std::move(c));
}

FieldElement FieldElement::from_index(const FieldPtr& field, long long index) {
    std::vector<long long> c(field->m(), 0);
    for (int i = 0; i < field->m(); ++i) {
        c[i] = index % field->p();
        index /= field->p();
    }
    return FieldElement(field, std::move(c));
}

long long FieldElement::index() const {
    long long idx = 0;
    for (int i = field_->m() - 1; i >= 0; --i) idx = idx * field_->p() + c_[i];
    return idx;
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](long long x) { return x == 0; });
}

bool FieldElement::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

void FieldElement::check_compatible(const FieldElement& o) const {
    if (!field_ || !o.field_ || !field_->same(*o.field_))
        throw DimensionMismatch("field elements from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_compatible(o);
    std::vector<long long> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = mod(c_[i] + o.c_[i], field_->p());
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_compatible(o);
    std::vector<long long> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = mod(c_[i] - o.c_[i], field_->p());
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-() const {
    std::vector<long long> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = mod(-c_[i], field_->p());
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_compatible(o);
    std::vector<long long> prod(2 * c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            prod[i + j] = mod(prod[i + j] + c_[i] * o.c_[j], field_->p());
    }
    return FieldElement(field_, std::move(prod));
}

FieldElement FieldElement::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement base = *this;
    FieldElement acc = one(field_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw NotAUnit("inverse of zero field element");
    return pow(field_->q() - 2);
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_ && o.field_ && field_->same(*o.field_) && c_ == o.c_;
}

FieldElement primitive_root_of_unity(const FieldPtr& field, long long d) {
    long long q1 = field->q() - 1;
    if (d <= 0 || q1 % d != 0)
        throw FieldTooSmall("no primitive root of unity of order " + std::to_string(d) +
                            " in F_" + std::to_string(field->q()));
    if (d == 1) return FieldElement::one(field);
    auto fs = prime_factors(q1);
    for (long long idx = 2; idx < field->q(); ++idx) {
        FieldElement g = FieldElement::from_index(field, idx);
        bool generator = true;
        for (long long ell : fs) {
            if (g.pow(q1 / ell).is_one()) {
                generator = false;
                break;
            }
        }
        if (generator) return g.pow(q1 / d);
    }
    throw FieldTooSmall("no multiplicative generator found");
}

} // namespace kisin
