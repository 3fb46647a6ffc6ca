#pragma once

#include <vector>

#include "kisin/iwahori.hpp"
#include "kisin/series_matrix.hpp"
#include "kisin/smith.hpp"
#include "kisin/tame.hpp"

namespace kisin {

struct DescentViolationInfo {
    int j;        // embedding
    int i, k;     // entry (row i, col k) of C^{(j)}, 0-indexed
    int exponent; // offending v-exponent
};

struct DescentReport {
    bool fast_ok = false;   // exponent-support congruence
    bool direct_ok = false; // symbolic g-hat commutation on basis vectors
    std::vector<DescentViolationInfo> violations;
    bool ok() const { return fast_ok && direct_ok; }
};

// One row of diagram: the chain of isotypic pieces at embedding j in the
// sorted bases, as u-matrices, together with the connecting multiplication
// maps.  chain[k] is the Frobenius on the chi_{s_j(k+1)}-isotypic piece;
// connectors[k] maps chain position k-1 to k (connectors[0] is the wrap-in
// map on the top character).  Every connector is diagonal with entries 1 or
// u, every square commutes, and the connectors compose to u * Id.
struct IsotypicDiagram {
    int j = 0;
    std::vector<SeriesMatrix> chain;
    std::vector<SeriesMatrix> connectors;
    void verify() const; // throws CommutationFailure
};

struct StratumReport {
    std::vector<AffinePermutation> label;
    std::vector<Cochar> lambda;
    std::vector<bool> member;
    std::vector<bool> maximal;
    bool all_member = false;
};

// lambda_j = sum_psi mu_{j,psi}; input is the list of e_K cocharacters at
// one embedding.  Throws ShapeMismatch on ragged input.
Cochar lambda_from_mu(const std::vector<Cochar>& mu_j);

// Default precision policy: heights bound every pivot valuation by e*h, and
// 16 guard coefficients absorb the precision loss of elimination.
inline int default_precision_u(int e, int h) { return e * h + 16; }

// Kisin module with tame descent datum over a finite field, presented by its
// Frobenius matrices C^{(j)} in an eigenbasis (columns are images).  Entries
// live in k[[v]] (Laurent entries are accepted; the height window is a
// reported property, not a construction invariant).
class KisinModuleDD {
public:
    KisinModuleDD(TameType type, Orientation orientation, int e_K, int height,
                  FieldPtr field, std::vector<SeriesMatrix> frobenius);

    const TameType& type() const { return type_; }
    const Orientation& orientation() const { return orient_; }
    int e_K() const { return e_K_; }
    int e() const { return e_K_ * type_.f(); }
    int height() const { return height_; }
    int f() const { return type_.f(); }
    int n() const { return type_.n(); }
    const FieldPtr& field() const { return field_; }
    const SeriesMatrix& frobenius(int j) const { return frob_[mod_f(j)]; }
    BlockPartition blocks(int j) const;

    DescentReport validate_descent() const;

    // Matrix of the Frobenius on the chi_{s_j(k)}-isotypic piece (1-indexed
    // chain position k; k = n is the distinguished top character of Prop 4.4)
    // in the sorted eigenbasis trivializations; entries land in k[[u]],
    // u = v^{p^f - 1}.  Throws DescentViolation on unsupported exponents.
    SeriesMatrix isotypic_matrix(int j, int k) const;
    SeriesMatrix isotypic_matrix(int j) const { return isotypic_matrix(j, n()); }

    IsotypicDiagram build_diagram(int j) const;

    // Eigenbasis torsor action: g[j] in L+P_j as a u-matrix in the sorted
    // coordinates at j.  Throws NotInLoopGroup if the mod-u block condition
    // fails.  The shape of the result equals the shape of *this.
    KisinModuleDD change_eigenbasis(const std::vector<SeriesMatrix>& g) const;

    // Elementary divisor exponents of isotypic_matrix(j), increasing.
    Cochar height_divisors(int j) const;
    // Divisors within [0, e_K * height] at every embedding.
    bool height_within_bound() const;

    // Parahoric double coset of the isotypic Frobenius, per embedding.
    std::vector<AffinePermutation> shape() const;

    // The character multiset on M^{(j)}/v M^{(j)} per embedding (the declared
    // exponents, in the eigenbasis encoding), after validating the support
    // congruence at every embedding.  Throws TypeMismatch if any j disagrees.
    std::vector<std::vector<long long>> compute_type() const;

    // mu[j][psi] is a cocharacter; membership of shape_j in
    // Adm_{P_j}(lambda_j) for every j.
    StratumReport stratum_membership(const std::vector<std::vector<Cochar>>& mu) const;

private:
    int mod_f(int j) const { return ((j % f()) + f()) % f(); }
    std::vector<int> sort_perm(int j) const;     // 0-indexed s_j
    std::vector<long long> twisted(int j) const; // a^{(j)}

    TameType type_;
    Orientation orient_;
    int e_K_;
    int height_;
    FieldPtr field_;
    std::vector<SeriesMatrix> frob_;
};

} // namespace kisin
