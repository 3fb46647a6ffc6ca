#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace kisin;
using namespace kisin::testing;

namespace {

TruncSeries from_coeffs(const FieldPtr& f, const std::string& var, int prec,
                        std::vector<long long> coeffs) {
    TruncSeries s(f, var, prec);
    for (size_t i = 0; i < coeffs.size(); ++i)
        s.set_coeff(static_cast<int>(i), FieldElement(f, {coeffs[i]}));
    return s;
}

// schoolbook long division 1 / a in F_p[[u]], the oracle for inverse()
std::vector<long long> long_division_inverse(long long p, std::vector<long long> a, int prec) {
    std::vector<long long> b(prec, 0);
    auto inv0 = [&](long long x) {
        for (long long y = 1; y < p; ++y)
            if (x * y % p == 1) return y;
        throw std::runtime_error("no inverse");
    };
    long long a0inv = inv0(a[0] % p);
    for (int k = 0; k < prec; ++k) {
        long long acc = (k == 0) ? 1 : 0;
        for (int i = 1; i <= k && i < static_cast<int>(a.size()); ++i)
            acc = ((acc - a[i] * b[k - i]) % p + p) % p;
        b[k] = acc * a0inv % p;
    }
    return b;
}

} // namespace

TEST_CASE("geometric series inverse") {
    auto f5 = FieldSpec::prime(5);
    auto s = from_coeffs(f5, "u", 4, {1, 1}); // 1 + u
    auto inv = s.inverse();
    CHECK(inv.coeff(0).index() == 1);
    CHECK(inv.coeff(1).index() == 4); // -1
    CHECK(inv.coeff(2).index() == 1);
    CHECK(inv.coeff(3).index() == 4);
    CHECK((s * inv).equal_at_prec(TruncSeries::one(f5, "u", 4)));
}

TEST_CASE("inverse of one") {
    auto f5 = FieldSpec::prime(5);
    auto one = TruncSeries::one(f5, "u", 10);
    CHECK(one.inverse().equal_at_prec(one));
    CHECK(one.inverse().prec() == 10);
}

TEST_CASE("2 + 3u over F_5 against the long-division oracle") {
    auto f5 = FieldSpec::prime(5);
    auto s = from_coeffs(f5, "u", 3, {2, 3});
    auto inv = s.inverse();
    auto expect = long_division_inverse(5, {2, 3}, 3);
    for (int k = 0; k < 3; ++k) CHECK(inv.coeff(k).index() == expect[k]);
    // the stated prefix: 3 + 4u + c2 u^2
    CHECK(expect[0] == 3);
    CHECK(expect[1] == 4);
}

TEST_CASE("random units invert exactly") {
    auto f25 = small_field(5, 2);
    Rng rng(42);
    for (int t = 0; t < 50; ++t) {
        auto s = random_unit_series(rng, f25, "u", 20, 6);
        CHECK((s * s.inverse()).equal_at_prec(TruncSeries::one(f25, "u", 20)));
    }
}

TEST_CASE("non-units are rejected") {
    auto f5 = FieldSpec::prime(5);
    CHECK_THROWS_AS(TruncSeries::monomial(f5, "u", 5, 1, FieldElement::one(f5)).inverse(),
                    NotAUnit);
    CHECK_THROWS_AS(TruncSeries::zero(f5, "u", 5).inverse(), NotAUnit);
}

TEST_CASE("valuation reporting") {
    auto f5 = FieldSpec::prime(5);
    auto s = TruncSeries::monomial(f5, "u", 8, 3, FieldElement::one(f5));
    CHECK(s.valuation() == 3);
    CHECK(!TruncSeries::zero(f5, "u", 8).valuation().has_value()); // ">= N"
    auto laurent = s.shift(-5);
    CHECK(laurent.valuation() == -2);
    CHECK(laurent.prec() == 3);
}

TEST_CASE("multiplication never raises effective precision") {
    auto f5 = FieldSpec::prime(5);
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        auto a = random_series(rng, f5, "u", 12, 0, 4);
        auto b = random_series(rng, f5, "u", 9, 0, 4);
        auto prod = a * b;
        CHECK(prod.prec() == std::min(a.prec() + b.ord_bound(), b.prec() + a.ord_bound()));
        CHECK((a + b).prec() == 9);
    }
}

TEST_CASE("division tracks valuations") {
    auto f5 = FieldSpec::prime(5);
    auto num = TruncSeries::monomial(f5, "u", 12, 4, FieldElement::from_index(f5, 3));
    auto den = TruncSeries::monomial(f5, "u", 12, 2, FieldElement::from_index(f5, 2)) +
               TruncSeries::monomial(f5, "u", 12, 3, FieldElement::one(f5));
    auto q = num.divide(den);
    CHECK((q * den).equal_at_prec(num));
    CHECK(q.valuation() == 2);
    CHECK_THROWS_AS(den.divide(num), NotAUnit); // pole
}

TEST_CASE("substitute and extract powers") {
    auto f5 = FieldSpec::prime(5);
    auto s = from_coeffs(f5, "v", 4, {1, 2, 3}); // 1 + 2v + 3v^2
    auto sub = s.substitute_pow(3, "v");
    CHECK(sub.coeff(0).index() == 1);
    CHECK(sub.coeff(3).index() == 2);
    CHECK(sub.coeff(6).index() == 3);
    auto back = sub.extract_pow(3, "u");
    CHECK(back.coeff(1).index() == 2);
    CHECK_THROWS_AS(s.extract_pow(3, "u"), DescentViolation); // support not divisible
}

TEST_CASE("scale_var multiplies coefficient e by zeta^e") {
    auto f5 = FieldSpec::prime(5);
    auto zeta = primitive_root_of_unity(f5, 4);
    auto s = from_coeffs(f5, "v", 5, {1, 1, 1, 1, 1});
    auto scaled = s.scale_var(zeta);
    for (int e = 0; e < 5; ++e) CHECK(scaled.coeff(e) == zeta.pow(e));
}
