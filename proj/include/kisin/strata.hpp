#pragma once

#include <string>
#include <vector>

#include "kisin/module.hpp"
#include "kisin/tame.hpp"

namespace kisin {

// The Kottwitz-Rapoport stratification of the special fiber: ground set
// prod_j Adm_{P_j}(lambda_j) as tuples of minimal double-coset
// representatives, ordered componentwise by the Bruhat order on
// representatives.  The dimension of a stratum is the sum over j of the
// length of the maximal element of the double coset.
class StrataPoset {
public:
    struct Node {
        std::vector<AffinePermutation> label; // one representative per embedding
        long long dimension = 0;
        bool maximal = false;
    };

    StrataPoset(std::vector<std::vector<AffinePermutation>> per_j_elements,
                std::vector<BlockPartition> blocks);

    int f() const { return static_cast<int>(blocks_.size()); }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<BlockPartition>& blocks() const { return blocks_; }
    const std::vector<std::vector<AffinePermutation>>& per_j() const { return per_j_; }

    bool leq(const Node& a, const Node& b) const;                 // componentwise Bruhat
    std::vector<std::pair<int, int>> hasse_edges() const;         // (lower, upper) indices
    std::vector<Node> maximal_elements() const;

private:
    std::vector<std::vector<AffinePermutation>> per_j_;
    std::vector<BlockPartition> blocks_;
    std::vector<Node> nodes_;
};

// Poset over prod_j Adm_{P_j}(lambda_j) with lambda_j = sum_psi mu[j][psi]
// and P_j derived from the type through the orientation.
StrataPoset strata_poset(const std::vector<std::vector<Cochar>>& mu, const TameType& type,
                         const Orientation& orientation);

// Maximal tuples; their count must match the independent orbit count
// prod_j #(S_n . lambda_j / W_{P_j}).
std::vector<StrataPoset::Node> irreducible_components(const StrataPoset& poset);

// Independent component-count oracle via orbit enumeration.
long long component_count_by_orbits(const std::vector<std::vector<Cochar>>& mu,
                                    const TameType& type, const Orientation& orientation);

enum class PosetFormat { Dot, Json };
std::string export_poset(const StrataPoset& poset, PosetFormat format);
std::string export_poset(const StrataPoset& poset, const std::string& format);

} // namespace kisin
