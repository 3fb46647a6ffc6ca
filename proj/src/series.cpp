#include "kisin/series.hpp"

#include <algorithm>
#include <sstream>

namespace kisin {

TruncSeries::TruncSeries(FieldPtr field, std::string var, int prec)
    : field_(std::move(field)), var_(std::move(var)), prec_(prec) {
    if (prec_ < 1 - (1 << 24)) throw Error("InvalidSeries", "precision underflow");
}

TruncSeries TruncSeries::zero(const FieldPtr& f, const std::string& var, int prec) {
    return TruncSeries(f, var, prec);
}

TruncSeries TruncSeries::one(const FieldPtr& f, const std::string& var, int prec) {
    TruncSeries s(f, var, prec);
    s.set_coeff(0, FieldElement::one(f));
    return s;
}

TruncSeries TruncSeries::monomial(const FieldPtr& f, const std::string& var, int prec,
                                  int exp, const FieldElement& coeff) {
    TruncSeries s(f, var, prec);
    s.set_coeff(exp, coeff);
    return s;
}

FieldElement TruncSeries::coeff(int exp) const {
    auto it = c_.find(exp);
    if (it != c_.end()) return it->second;
    return FieldElement::zero(field_);
}

void TruncSeries::set_coeff(int exp, const FieldElement& value) {
    if (exp >= prec_) return; // beyond the window: unknown, never stored
    if (value.is_zero())
        c_.erase(exp);
    else
        c_[exp] = value;
}

std::optional<int> TruncSeries::valuation() const {
    if (c_.empty()) return std::nullopt;
    return c_.begin()->first;
}

int TruncSeries::ord_bound() const {
    return c_.empty() ? prec_ : c_.begin()->first;
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
    if (!field_ || !o.field_ || !field_->same(*o.field_) || var_ != o.var_)
        throw DimensionMismatch("series over different rings (" + var_ + " vs " + o.var_ + ")");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    check_compatible(o);
    TruncSeries r(field_, var_, std::min(prec_, o.prec_));
    for (const auto& [e, v] : c_) r.set_coeff(e, v);
    for (const auto& [e, v] : o.c_) r.set_coeff(e, r.coeff(e) + v);
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    check_compatible(o);
    TruncSeries r(field_, var_, std::min(prec_, o.prec_));
    for (const auto& [e, v] : c_) r.set_coeff(e, v);
    for (const auto& [e, v] : o.c_) r.set_coeff(e, r.coeff(e) - v);
    return r;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r(field_, var_, prec_);
    for (const auto& [e, v] : c_) r.set_coeff(e, -v);
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    check_compatible(o);
    int prec = std::min(prec_ + o.ord_bound(), o.prec_ + ord_bound());
    TruncSeries r(field_, var_, prec);
    for (const auto& [ea, va] : c_) {
        for (const auto& [eb, vb] : o.c_) {
            int e = ea + eb;
            if (e >= prec) continue;
            r.set_coeff(e, r.coeff(e) + va * vb);
        }
    }
    return r;
}

TruncSeries TruncSeries::scalar_mul(const FieldElement& a) const {
    TruncSeries r(field_, var_, prec_);
    if (a.is_zero()) return r;
    for (const auto& [e, v] : c_) r.set_coeff(e, v * a);
    return r;
}

TruncSeries TruncSeries::shift(int k) const {
    TruncSeries r(field_, var_, prec_ + k);
    for (const auto& [e, v] : c_) r.set_coeff(e + k, v);
    return r;
}

TruncSeries TruncSeries::truncated(int new_prec) const {
    TruncSeries r(field_, var_, std::min(new_prec, prec_));
    for (const auto& [e, v] : c_) r.set_coeff(e, v);
    return r;
}

TruncSeries TruncSeries::substitute_pow(int d, const std::string& new_var) const {
    // exponent e known for e < prec  =>  d*e known; first unknown is d*(prec-1)+1
    TruncSeries r(field_, new_var, d * (prec_ - 1) + 1);
    for (const auto& [e, v] : c_) r.set_coeff(d * e, v);
    return r;
}

TruncSeries TruncSeries::extract_pow(int d, const std::string& new_var) const {
    // e known for e < prec  =>  e/d known for e/d < ceil(prec/d)
    int new_prec = prec_ >= 0 ? (prec_ + d - 1) / d : -((-prec_) / d);
    TruncSeries r(field_, new_var, new_prec);
    for (const auto& [e, v] : c_) {
        if (((e % d) + d) % d != 0)
            throw DescentViolation("exponent " + std::to_string(e) +
                                   " not divisible by " + std::to_string(d));
        r.set_coeff(e / d, v); // exact, sign-safe
    }
    return r;
}

TruncSeries TruncSeries::scale_var(const FieldElement& zeta) const {
    TruncSeries r(field_, var_, prec_);
    for (const auto& [e, v] : c_) r.set_coeff(e, v * zeta.pow(e));
    return r;
}

TruncSeries TruncSeries::inverse() const {
    auto val = valuation();
    if (!val || *val != 0)
        throw NotAUnit(!val ? "valuation unknown (>= precision)" :
                              "valuation " + std::to_string(*val) + " != 0");
    // long division: b_0 = a_0^{-1}, b_k = -a_0^{-1} sum_{i=1..k} a_i b_{k-i}
    FieldElement a0inv = coeff(0).inverse();
    TruncSeries r(field_, var_, prec_);
    std::map<int, FieldElement> b;
    b[0] = a0inv;
    for (int k = 1; k < prec_; ++k) {
        FieldElement acc = FieldElement::zero(field_);
        for (const auto& [i, ai] : c_) {
            if (i <= 0 || i > k) continue;
            auto it = b.find(k - i);
            if (it == b.end()) continue;
            acc = acc + ai * it->second;
        }
        FieldElement bk = -(a0inv * acc);
        if (!bk.is_zero()) b[k] = bk;
    }
    for (const auto& [e, v] : b) r.set_coeff(e, v);
    return r;
}

TruncSeries TruncSeries::divide(const TruncSeries& o) const {
    check_compatible(o);
    auto vb = o.valuation();
    if (!vb) throw PrecisionExhausted("division by series of unknown valuation");
    if (!c_.empty() && c_.begin()->first < *vb)
        throw NotAUnit("quotient would have a pole: val(num) < val(den)");
    return shift(-*vb) * o.shift(-*vb).inverse();
}

bool TruncSeries::equal_at_prec(const TruncSeries& o) const {
    check_compatible(o);
    int prec = std::min(prec_, o.prec_);
    for (const auto& [e, v] : c_) {
        if (e >= prec) continue;
        if (!(v == o.coeff(e))) return false;
    }
    for (const auto& [e, v] : o.c_) {
        if (e >= prec) continue;
        if (!(v == coeff(e))) return false;
    }
    return true;
}

std::string TruncSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : c_) {
        if (!first) os << " + ";
        first = false;
        os << "(";
        for (size_t i = 0; i < v.coeffs().size(); ++i) {
            if (i) os << ",";
            os << v.coeffs()[i];
        }
        os << ")*" << var_ << "^" << e;
    }
    if (first) os << "0";
    os << " + O(" << var_ << "^" << prec_ << ")";
    return os.str();
}

} // namespace kisin
