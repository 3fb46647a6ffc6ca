#include "kisin/tame.hpp"

#include <algorithm>
#include <numeric>

namespace kisin {

TameType::TameType(long long p, int f, std::vector<long long> exponents)
    : p_(p), f_(f), exps_(std::move(exponents)) {
    if (p < 2 || f < 1 || f > 12) throw Error("InvalidType", "bad (p, f)");
    order_ = 1;
    for (int k = 0; k < f; ++k) order_ *= p;
    order_ -= 1;
    for (auto& a : exps_) {
        a %= order_; // canonical window [0, p^f - 2]
        if (a < 0) a += order_;
    }
    digits_.resize(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) {
        long long t = exps_[i];
        digits_[i].resize(f_);
        for (int k = 0; k < f_; ++k) {
            digits_[i][k] = t % p_;
            t /= p_;
        }
        if (t != 0) throw Error("InvalidType", "exponent out of range");
        long long back = 0;
        for (int k = f_ - 1; k >= 0; --k) back = back * p_ + digits_[i][k];
        if (back != exps_[i]) throw Error("InvalidType", "digit reconstruction failed");
    }
}

std::vector<long long> TameType::twisted_exponents(int j) const {
    j = ((j % f_) + f_) % f_;
    std::vector<long long> out(exps_.size());
    for (size_t i = 0; i < exps_.size(); ++i) {
        long long v = 0;
        long long pk = 1;
        for (int k = 0; k < f_; ++k) {
            v += digits_[i][(f_ - j + k) % f_] * pk;
            pk *= p_;
        }
        out[i] = v;
        if (order_ > 0) {
            // a_i^{(j)} = p^j a_i mod p^f - 1
            long long pj = 1;
            for (int t = 0; t < j; ++t) pj = (pj * p_) % order_;
            long long expect = (exps_[i] % order_) * (pj % order_) % order_;
            if ((v - expect) % order_ != 0)
                throw Error("TwistInvariant", "digit rotation disagrees with p^j a_i");
        }
    }
    return out;
}

bool TameType::characters_distinct() const {
    auto s = exps_;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool TameType::trivial() const {
    return std::all_of(exps_.begin(), exps_.end(),
                       [&](long long a) { return a == exps_[0]; });
}

Orientation::Orientation(std::vector<std::vector<int>> perms) : s_(std::move(perms)) {
    for (const auto& perm : s_) {
        if (perm.size() != s_[0].size()) throw DimensionMismatch("ragged orientation");
        std::vector<bool> seen(perm.size(), false);
        for (int v : perm) {
            if (v < 1 || v > static_cast<int>(perm.size()) || seen[v - 1])
                throw InvalidOrientation("not a permutation");
            seen[v - 1] = true;
        }
    }
}

bool is_orientation(const TameType& type, const Orientation& o) {
    if (o.f() != type.f() || o.n() != type.n()) return false;
    for (int j = 0; j < type.f(); ++j) {
        auto tw = type.twisted_exponents(j);
        for (int i = 0; i + 1 < type.n(); ++i)
            if (tw[o.s(j, i)] > tw[o.s(j, i + 1)]) return false;
    }
    return true;
}

std::vector<Orientation> orientations(const TameType& type) {
    int n = type.n();
    std::vector<std::vector<std::vector<int>>> per_j(type.f());
    for (int j = 0; j < type.f(); ++j) {
        auto tw = type.twisted_exponents(j);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        std::sort(perm.begin(), perm.end());
        do {
            bool sorts = true;
            for (int i = 0; i + 1 < n; ++i)
                if (tw[perm[i] - 1] > tw[perm[i + 1] - 1]) {
                    sorts = false;
                    break;
                }
            if (sorts) per_j[j].push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    // cartesian product over j
    std::vector<Orientation> out;
    std::vector<size_t> idx(type.f(), 0);
    while (true) {
        std::vector<std::vector<int>> pick;
        for (int j = 0; j < type.f(); ++j) pick.push_back(per_j[j][idx[j]]);
        out.emplace_back(std::move(pick));
        int j = 0;
        while (j < type.f() && ++idx[j] == per_j[j].size()) {
            idx[j] = 0;
            ++j;
        }
        if (j == type.f()) break;
    }
    return out;
}

BlockPartition parabolic_blocks(const TameType& type, const Orientation& o, int j) {
    if (!is_orientation(type, o))
        throw InvalidOrientation("permutation does not sort the twisted exponents");
    j = ((j % type.f()) + type.f()) % type.f();
    auto tw = type.twisted_exponents(j);
    std::vector<int> sizes;
    for (int i = 0; i < type.n(); ++i) {
        if (i > 0 && tw[o.s(j, i)] == tw[o.s(j, i - 1)])
            ++sizes.back();
        else
            sizes.push_back(1);
    }
    return BlockPartition(sizes);
}

} // namespace kisin
