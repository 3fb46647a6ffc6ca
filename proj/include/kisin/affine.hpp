#pragma once

#include <set>
#include <utility>
#include <vector>

#include "kisin/errors.hpp"

namespace kisin {

using Cochar = std::vector<long long>;

// Element of the extended affine Weyl group of GL_n, realized as a periodic
// permutation of Z: sigma(i + n) = sigma(i) + n.  Stored in window notation
// (sigma(1), ..., sigma(n)).  Decomposes uniquely as t_lambda * w with
// lambda in Z^n, w in S_n, where t_lambda has window i + n*lambda_i and the
// group law reads (l1, w1)(l2, w2) = (l1 + w1.l2, w1 w2).
class AffinePermutation {
public:
    explicit AffinePermutation(std::vector<long long> window);

    static AffinePermutation identity(int n);
    static AffinePermutation translation(const Cochar& lambda);
    // Lift of a finite permutation; w[i] = image of i+1, values in 1..n.
    static AffinePermutation finite(const std::vector<int>& w);
    // t_lambda * w for a finite permutation w (same encoding as finite()).
    static AffinePermutation from_parts(const Cochar& lambda, const std::vector<int>& w);
    // Length-zero generator of Omega to the k-th power: i -> i + k.
    static AffinePermutation rho(int n, long long k);
    // Simple reflections: i in [1, n-1] classical, i = 0 affine.
    static AffinePermutation simple_reflection(int n, int i);
    // Affine reflection swapping the residue classes of i and j shifted by
    // k*n: positions i -> j + kn, j -> i - kn (1 <= i < j <= n).
    static AffinePermutation reflection(int n, int i, int j, long long k);

    int n() const { return static_cast<int>(win_.size()); }
    const std::vector<long long>& window() const { return win_; }
    long long eval(long long i) const;

    AffinePermutation operator*(const AffinePermutation& o) const;
    AffinePermutation inverse() const;

    // (lambda, w): lambda per residue, w[i] = 1-indexed image of i+1 in S_n.
    std::pair<Cochar, std::vector<int>> decompose() const;
    long long kottwitz() const; // sum(lambda) = shift/n
    bool is_identity() const;

    // Iwahori-Matsumoto length; computed by the periodic inversion count and
    // cross-checked against the closed formula on the (lambda, w) parts.
    long long length() const;

    bool operator==(const AffinePermutation& o) const { return win_ == o.win_; }
    bool operator!=(const AffinePermutation& o) const { return win_ != o.win_; }
    bool operator<(const AffinePermutation& o) const;

    std::string str() const;

private:
    std::vector<long long> win_;
};

using PermSet = std::set<AffinePermutation>;

// Bruhat order on the extended group: elements in different W_aff-cosets
// (different Kottwitz components) are incomparable (returns false).
bool bruhat_leq(const AffinePermutation& a, const AffinePermutation& b);

// All u = w*r, r an affine reflection with |k| <= reflection_bound, such
// that length(u) = length(w) - 1 (the Bruhat covers below w).
PermSet covers_below(const AffinePermutation& w, long long reflection_bound);

// Adm(lambda): downward Bruhat closure of the translations t_{lambda'},
// lambda' in the S_n-orbit of lambda.  Enumerate-and-filter implementation
// (candidate windows filtered through bruhat_leq); the cover-BFS closure
// lives in test code as the independent oracle.
PermSet admissible_set(const Cochar& lambda);

// S_n-orbit of lambda, deduplicated, sorted.
std::vector<Cochar> weyl_orbit(const Cochar& lambda);

long long translation_length(const Cochar& lambda);

// Ordered partition of {1..n} into consecutive nonempty blocks.
class BlockPartition {
public:
    explicit BlockPartition(std::vector<int> sizes);
    static BlockPartition singletons(int n);
    static BlockPartition full(int n);

    int n() const { return n_; }
    const std::vector<int>& sizes() const { return sizes_; }
    int block_of(int i) const { return block_of_[i]; } // 0-indexed position
    bool is_borel() const;
    bool is_full() const { return sizes_.size() == 1; }
    // 1-indexed positions i with i, i+1 in the same block (the block-simple
    // transpositions generating W_P).
    std::vector<int> simple_positions() const;
    // All elements of W_P as lifted finite permutations.
    std::vector<AffinePermutation> group_elements() const;

    bool operator==(const BlockPartition& o) const {
        return sizes_ == o.sizes_;
    }

private:
    int n_;
    std::vector<int> sizes_;
    std::vector<int> block_of_;
};

// Unique minimal-length element of W_P * w * W_P, computed greedily by
// one-sided descents in the block simples.
AffinePermutation min_double_coset_rep(const AffinePermutation& w, const BlockPartition& blocks);

// Full double coset W_P * w * W_P (desk scale: |W_P| <= 24).
PermSet double_coset(const AffinePermutation& w, const BlockPartition& blocks);

// Length of the unique maximal element of W_P * w * W_P (the dimension of
// the corresponding parahoric Schubert cell).
long long double_coset_max_length(const AffinePermutation& w, const BlockPartition& blocks);

// Adm_P(lambda) = W_P Adm(lambda) W_P, returned as the set of minimal-length
// double coset representatives.
PermSet parahoric_admissible_set(const Cochar& lambda, const BlockPartition& blocks);

// Dominance order: a <= b with equal coordinate sums, both sorted descending.
bool dominance_leq(Cochar a, Cochar b);

} // namespace kisin
