#include "kisin/strata.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace kisin {

StrataPoset::StrataPoset(std::vector<std::vector<AffinePermutation>> per_j_elements,
                         std::vector<BlockPartition> blocks)
    : per_j_(std::move(per_j_elements)), blocks_(std::move(blocks)) {
    if (per_j_.size() != blocks_.size()) throw DimensionMismatch("per-embedding size mismatch");
    // deterministic node order: lexicographic on the window tuples
    for (auto& v : per_j_) std::sort(v.begin(), v.end());
    std::vector<std::vector<long long>> dims(per_j_.size());
    for (size_t j = 0; j < per_j_.size(); ++j)
        for (const auto& w : per_j_[j])
            dims[j].push_back(double_coset_max_length(w, blocks_[j]));
    std::vector<size_t> idx(per_j_.size(), 0);
    while (true) {
        Node node;
        for (size_t j = 0; j < per_j_.size(); ++j) {
            node.label.push_back(per_j_[j][idx[j]]);
            node.dimension += dims[j][idx[j]];
        }
        nodes_.push_back(std::move(node));
        size_t j = per_j_.size();
        while (j > 0 && ++idx[j - 1] == per_j_[j - 1].size()) {
            idx[j - 1] = 0;
            --j;
        }
        if (j == 0) break;
    }
    for (auto& a : nodes_) {
        a.maximal = true;
        for (const auto& b : nodes_)
            if (&a != &b && leq(a, b)) {
                a.maximal = false;
                break;
            }
    }
}

bool StrataPoset::leq(const Node& a, const Node& b) const {
    for (size_t j = 0; j < a.label.size(); ++j)
        if (!bruhat_leq(a.label[j], b.label[j])) return false;
    return true;
}

std::vector<std::pair<int, int>> StrataPoset::hasse_edges() const {
    int m = static_cast<int>(nodes_.size());
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b || !leq(nodes_[a], nodes_[b])) continue;
            bool covered = false;
            for (int c = 0; c < m && !covered; ++c) {
                if (c == a || c == b) continue;
                if (leq(nodes_[a], nodes_[c]) && leq(nodes_[c], nodes_[b])) covered = true;
            }
            if (!covered) edges.emplace_back(a, b);
        }
    return edges;
}

std::vector<StrataPoset::Node> StrataPoset::maximal_elements() const {
    std::vector<Node> out;
    for (const auto& n : nodes_)
        if (n.maximal) out.push_back(n);
    return out;
}

StrataPoset strata_poset(const std::vector<std::vector<Cochar>>& mu, const TameType& type,
                         const Orientation& orientation) {
    if (static_cast<int>(mu.size()) != type.f())
        throw ShapeMismatch("mu must have one block per embedding");
    std::vector<std::vector<AffinePermutation>> per_j;
    std::vector<BlockPartition> blocks;
    for (int j = 0; j < type.f(); ++j) {
        Cochar lambda = lambda_from_mu(mu[j]);
        if (static_cast<int>(lambda.size()) != type.n())
            throw ShapeMismatch("cocharacter length != n");
        BlockPartition bl = parabolic_blocks(type, orientation, j);
        PermSet adm = parahoric_admissible_set(lambda, bl);
        per_j.emplace_back(adm.begin(), adm.end());
        blocks.push_back(bl);
    }
    return StrataPoset(std::move(per_j), std::move(blocks));
}

std::vector<StrataPoset::Node> irreducible_components(const StrataPoset& poset) {
    return poset.maximal_elements();
}

long long component_count_by_orbits(const std::vector<std::vector<Cochar>>& mu,
                                    const TameType& type, const Orientation& orientation) {
    long long total = 1;
    for (int j = 0; j < type.f(); ++j) {
        Cochar lambda = lambda_from_mu(mu[j]);
        BlockPartition bl = parabolic_blocks(type, orientation, j);
        auto wp = bl.group_elements();
        std::set<Cochar> seen;
        long long orbits = 0;
        for (const auto& l : weyl_orbit(lambda)) {
            if (seen.count(l)) continue;
            ++orbits;
            for (const auto& w : wp) {
                auto [zero, perm] = w.decompose();
                Cochar moved(l.size());
                // w . l permutes coordinates: (w.l)_{w(i)} = l_i
                for (size_t i = 0; i < l.size(); ++i) moved[perm[i] - 1] = l[i];
                seen.insert(moved);
            }
        }
        total *= orbits;
    }
    return total;
}

namespace {

std::string node_name(const StrataPoset::Node& node) {
    std::string s;
    for (size_t j = 0; j < node.label.size(); ++j) {
        if (j) s += "|";
        s += node.label[j].str();
    }
    return s;
}

} // namespace

std::string export_poset(const StrataPoset& poset, PosetFormat format) {
    const auto& nodes = poset.nodes();
    auto edges = poset.hasse_edges();
    if (format == PosetFormat::Dot) {
        std::ostringstream os;
        os << "digraph strata {\n  rankdir=BT;\n";
        for (size_t i = 0; i < nodes.size(); ++i) {
            os << "  n" << i << " [label=\"" << node_name(nodes[i]) << "\\ndim "
               << nodes[i].dimension << "\"";
            if (nodes[i].maximal) os << " shape=box";
            os << "];\n";
        }
        for (const auto& [a, b] : edges) os << "  n" << a << " -> n" << b << ";\n";
        os << "}\n";
        return os.str();
    }
    nlohmann::json out;
    out["nodes"] = nlohmann::json::array();
    for (const auto& node : nodes) {
        nlohmann::json labels = nlohmann::json::array();
        for (const auto& w : node.label) labels.push_back(w.window());
        out["nodes"].push_back({{"label", labels},
                                {"dim", node.dimension},
                                {"maximal", node.maximal}});
    }
    out["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : edges) out["edges"].push_back({a, b});
    return out.dump(2);
}

std::string export_poset(const StrataPoset& poset, const std::string& format) {
    if (format == "dot") return export_poset(poset, PosetFormat::Dot);
    if (format == "json") return export_poset(poset, PosetFormat::Json);
    throw UnknownFormat("poset format must be dot or json, got " + format);
}

} // namespace kisin
