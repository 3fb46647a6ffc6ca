#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "support.hpp"

using namespace kisin;
using namespace kisin::testing;

TEST_CASE("window validation") {
    CHECK_THROWS_AS(AffinePermutation({1, 3}), Error);  // residues collide (3 = 1 mod 2)
    CHECK_NOTHROW(AffinePermutation({3, 2}));           // t_{(1,0)}
    CHECK_NOTHROW(AffinePermutation({0, 3}));           // s_0
}

TEST_CASE("translations compose additively") {
    auto a = AffinePermutation::translation({1, 0, -1});
    auto b = AffinePermutation::translation({2, 2, 0});
    CHECK(a * b == AffinePermutation::translation({3, 2, -1}));
    CHECK(b * a == a * b);
}

TEST_CASE("inverse") {
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(pick(rng, 0, 2));
        auto w = random_affine_perm(rng, n, 4);
        CHECK((w * w.inverse()).is_identity());
        CHECK((w.inverse() * w).is_identity());
    }
}

TEST_CASE("window composition oracle for (t_{(1,0)}s)(t_{(0,1)}s)") {
    auto s = AffinePermutation::finite({2, 1});
    auto a = AffinePermutation::translation({1, 0}) * s;
    auto b = AffinePermutation::translation({0, 1}) * s;
    auto prod = a * b;
    // direct periodic-bijection composition: prod(i) = a(b(i))
    for (long long i = -4; i <= 4; ++i) CHECK(prod.eval(i) == a.eval(b.eval(i)));
    // (l1, w1)(l2, w2) = (l1 + w1.l2, w1 w2): here w1 w2 = id, w1.l2 = (1,0)
    CHECK(prod == AffinePermutation::translation({2, 0}));
}

TEST_CASE("semidirect product law on random pairs") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + static_cast<int>(pick(rng, 0, 2));
        auto a = random_affine_perm(rng, n, 3);
        auto b = random_affine_perm(rng, n, 3);
        auto [l1, w1] = a.decompose();
        auto [l2, w2] = b.decompose();
        Cochar l(n);
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = w1[w2[i] - 1];
        // (l1 + w1.l2) with (w1.l2)_{w1(i)} = (l2)_i
        for (int i = 0; i < n; ++i) l[w1[i] - 1] = l1[w1[i] - 1] + l2[i];
        CHECK(a * b == AffinePermutation::from_parts(l, w));
    }
}

TEST_CASE("length examples") {
    CHECK(AffinePermutation::identity(3).length() == 0);
    CHECK(AffinePermutation::translation({1, 0}).length() == 1);
    CHECK(AffinePermutation::rho(2, 1).length() == 0);
    CHECK((AffinePermutation::translation({1, 0}) * AffinePermutation::finite({2, 1})).length() ==
          0); // the length-zero shift
}

TEST_CASE("finite lifts have classical inversion numbers") {
    std::vector<int> perm = {1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
        long long inv = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (perm[i] > perm[j]) ++inv;
        CHECK(AffinePermutation::finite(perm).length() == inv);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("length formulas agree on random elements") {
    Rng rng(17);
    for (int t = 0; t < 2000; ++t) {
        int n = 2 + static_cast<int>(pick(rng, 0, 2));
        // length() throws if the inversion count and the closed formula differ
        CHECK_NOTHROW(random_affine_perm(rng, n, 4).length());
    }
}

TEST_CASE("length subadditive, additive on reduced words") {
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        int n = 3;
        auto a = random_affine_perm(rng, n, 2);
        auto b = random_affine_perm(rng, n, 2);
        CHECK((a * b).length() <= a.length() + b.length());
    }
    // ascending chain of simple reflections: lengths add one by one
    auto w = AffinePermutation::identity(3);
    long long len = 0;
    for (int i : {1, 2, 1, 0, 2}) {
        auto s = AffinePermutation::simple_reflection(3, i);
        if ((w * s).length() == len + 1) {
            w = w * s;
            ++len;
        }
        CHECK(w.length() == len);
    }
}

TEST_CASE("covers below") {
    CHECK(covers_below(AffinePermutation::identity(2), 3).empty());

    auto t10 = AffinePermutation::translation({1, 0});
    auto covers = covers_below(t10, 4);
    CHECK(covers.size() == 1);
    CHECK(covers.begin()->length() == 0);

    Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        auto w = random_affine_perm(rng, 3, 2);
        for (const auto& u : covers_below(w, 5)) CHECK(u.length() == w.length() - 1);
    }
}

TEST_CASE("kottwitz component") {
    CHECK(AffinePermutation::translation({1, 1}).kottwitz() == 2);
    CHECK(AffinePermutation::rho(3, 1).kottwitz() == 1);
    CHECK(AffinePermutation::finite({2, 1}).kottwitz() == 0);
}
