#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace kisin::testing {

FieldElement random_element(Rng& rng, const FieldPtr& f) {
    return FieldElement::from_index(f, pick(rng, 0, f->q() - 1));
}

FieldElement random_nonzero(Rng& rng, const FieldPtr& f) {
    return FieldElement::from_index(f, pick(rng, 1, f->q() - 1));
}

TruncSeries random_series(Rng& rng, const FieldPtr& f, const std::string& var, int prec,
                          int min_exp, int terms) {
    TruncSeries s(f, var, prec);
    for (int t = 0; t < terms; ++t) {
        int e = static_cast<int>(pick(rng, min_exp, prec - 1));
        s.set_coeff(e, random_element(rng, f));
    }
    return s;
}

TruncSeries random_unit_series(Rng& rng, const FieldPtr& f, const std::string& var, int prec,
                               int terms) {
    TruncSeries s = random_series(rng, f, var, prec, 1, terms);
    s.set_coeff(0, random_nonzero(rng, f));
    return s;
}

namespace {

SeriesMatrix random_in_group(Rng& rng, int n, const FieldPtr& f, const std::string& var,
                             int prec, int ops,
                             const std::function<int(int, int)>& min_val_at) {
    SeriesMatrix m = SeriesMatrix::identity(n, f, var, prec);
    for (int i = 0; i < n; ++i) {
        TruncSeries u = random_unit_series(rng, f, var, prec, 3);
        row_scale(m, i, u);
    }
    for (int t = 0; t < ops; ++t) {
        int i = static_cast<int>(pick(rng, 0, n - 1));
        int j = static_cast<int>(pick(rng, 0, n - 1));
        if (i == j) continue;
        TruncSeries c = random_series(rng, f, var, prec, min_val_at(i, j), 3);
        // elementary I + c*E_{ij}: row_i += c * row_j
        row_axpy(m, i, j, c);
    }
    return m;
}

} // namespace

SeriesMatrix random_unimodular(Rng& rng, int n, const FieldPtr& f, const std::string& var,
                               int prec, int ops) {
    return random_in_group(rng, n, f, var, prec, ops, [](int, int) { return 0; });
}

SeriesMatrix random_iwahori(Rng& rng, int n, const FieldPtr& f, const std::string& var,
                            int prec, int ops) {
    return random_in_group(rng, n, f, var, prec, ops,
                           [](int i, int j) { return i > j ? 1 : 0; });
}

SeriesMatrix random_parahoric(Rng& rng, const BlockPartition& blocks, const FieldPtr& f,
                              const std::string& var, int prec, int ops) {
    return random_in_group(rng, blocks.n(), f, var, prec, ops, [&blocks](int i, int j) {
        return blocks.block_of(i) > blocks.block_of(j) ? 1 : 0;
    });
}

SeriesMatrix random_invertible_laurent(Rng& rng, int n, const FieldPtr& f,
                                       const std::string& var, int prec, int spread) {
    SeriesMatrix m = random_unimodular(rng, n, f, var, prec);
    for (int i = 0; i < n; ++i) {
        int e = static_cast<int>(pick(rng, -spread, spread));
        for (int j = 0; j < n; ++j) m.at(i, j) = m.at(i, j).shift(e);
    }
    return m;
}

AffinePermutation random_affine_perm(Rng& rng, int n, long long coord_bound) {
    Cochar lambda(n);
    for (auto& x : lambda) x = pick(rng, -coord_bound, coord_bound);
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    return AffinePermutation::from_parts(lambda, w);
}

PermSet admissible_set_bfs_oracle(const Cochar& lambda, long long extra_bound) {
    long long bound = extra_bound + static_cast<long long>(lambda.size());
    for (long long x : lambda) bound = std::max(bound, std::llabs(x) +
                                                           static_cast<long long>(lambda.size()) +
                                                           extra_bound);
    PermSet seen;
    std::vector<AffinePermutation> frontier;
    for (const auto& l : weyl_orbit(lambda)) {
        AffinePermutation t = AffinePermutation::translation(l);
        if (seen.insert(t).second) frontier.push_back(t);
    }
    while (!frontier.empty()) {
        std::vector<AffinePermutation> next;
        for (const auto& w : frontier)
            for (const auto& u : covers_below(w, bound))
                if (seen.insert(u).second) next.push_back(u);
        frontier = std::move(next);
    }
    return seen;
}

PermSet parahoric_admissible_oracle(const Cochar& lambda, const BlockPartition& blocks) {
    PermSet saturated;
    auto wp = blocks.group_elements();
    for (const auto& a : admissible_set_bfs_oracle(lambda))
        for (const auto& u : wp)
            for (const auto& v : wp) saturated.insert(u * a * v);
    // minimize: keep the unique length-minimal element of each double coset
    PermSet out;
    for (const auto& x : saturated) out.insert(min_rep_exhaustive(x, blocks));
    return out;
}

Cochar minors_gcd_divisors(const SeriesMatrix& m) {
    int n = m.n();
    // prefix[k] = min valuation over k x k minors
    std::vector<long long> prefix(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
        bool any = false;
        long long best = 0;
        std::vector<int> rows(k);
        std::iota(rows.begin(), rows.end(), 0);
        auto next_subset = [n](std::vector<int>& s) {
            int k = static_cast<int>(s.size());
            int i = k - 1;
            while (i >= 0 && s[i] == n - k + i) --i;
            if (i < 0) return false;
            ++s[i];
            for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        };
        do {
            std::vector<int> cols(k);
            std::iota(cols.begin(), cols.end(), 0);
            do {
                SeriesMatrix sub(k, m.field(), m.var(), m.precision());
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b) sub.at(a, b) = m.at(rows[a], cols[b]);
                auto v = sub.det().valuation();
                if (v && (!any || *v < best)) {
                    best = *v;
                    any = true;
                }
            } while (next_subset(cols));
        } while (next_subset(rows));
        if (!any) throw PrecisionExhausted("all " + std::to_string(k) + "-minors vanish");
        prefix[k] = best;
    }
    Cochar d(n);
    for (int k = 1; k <= n; ++k) d[k - 1] = prefix[k] - prefix[k - 1];
    return d;
}

AffinePermutation min_rep_exhaustive(const AffinePermutation& w, const BlockPartition& blocks) {
    bool have = false;
    AffinePermutation best = w;
    long long best_len = 0;
    int count = 0;
    for (const auto& x : double_coset(w, blocks)) {
        long long l = x.length();
        if (!have || l < best_len) {
            best = x;
            best_len = l;
            have = true;
            count = 1;
        } else if (l == best_len) {
            ++count;
        }
    }
    if (count != 1) throw Error("CosetStructure", "minimum of double coset not unique");
    return best;
}

FieldPtr small_field(long long p, int f) {
    if (f == 1) return FieldSpec::prime(p);
    if (f == 2) {
        // x^2 + x + c with c chosen non-square-discriminant per p
        if (p == 3) return FieldSpec::make(3, 2, {1, 0, 1});  // x^2 + 1
        if (p == 5) return FieldSpec::make(5, 2, {2, 0, 1});  // x^2 + 2
        if (p == 7) return FieldSpec::make(7, 2, {1, 0, 1});  // x^2 + 1
        if (p == 2) return FieldSpec::make(2, 2, {1, 1, 1});  // x^2 + x + 1
    }
    if (f == 3 && p == 2) return FieldSpec::make(2, 3, {1, 1, 0, 1});
    if (f == 3 && p == 3) return FieldSpec::make(3, 3, {1, 2, 0, 1}); // x^3 + 2x + 1
    throw Error("TestSetup", "no small field table entry for p=" + std::to_string(p) +
                                 ", f=" + std::to_string(f));
}

KisinModuleDD random_valid_module(Rng& rng, long long p, int f, int n, int e_K, int h,
                                  int guard) {
    FieldPtr field = small_field(p, f);
    long long order = 1;
    for (int k = 0; k < f; ++k) order *= p;
    order -= 1;

    std::vector<long long> exps(n);
    for (auto& a : exps) a = pick(rng, 0, std::max<long long>(0, order - 1));
    TameType type(p, f, exps);
    auto all_orients = orientations(type);
    Orientation orient = all_orients[pick(rng, 0, static_cast<long long>(all_orients.size()) - 1)];

    int prec_u = e_K * f * h + guard;
    int prec_v = static_cast<int>(order) * prec_u;

    std::vector<SeriesMatrix> frob;
    for (int j = 0; j < f; ++j) {
        auto tw = type.twisted_exponents(j);
        std::vector<int> s(n);
        for (int i = 0; i < n; ++i) s[i] = orient.s(j, i);
        SeriesMatrix c(n, field, "v", prec_v);
        for (int i = 0; i < n; ++i) {
            int mu = static_cast<int>(pick(rng, 0, static_cast<long long>(e_K) * h));
            c.at(s[i], s[i]) = TruncSeries::monomial(field, "v", prec_v,
                                                     static_cast<int>(order) * mu,
                                                     FieldElement::one(field));
        }
        frob.push_back(std::move(c));
    }
    KisinModuleDD seed(type, orient, e_K, h, field, std::move(frob));

    std::vector<SeriesMatrix> g;
    for (int j = 0; j < f; ++j)
        g.push_back(random_parahoric(rng, seed.blocks(j), field, "u", prec_u));
    return seed.change_eigenbasis(g);
}

KisinModuleDD module_from_isotypic(const TameType& type, const Orientation& orient, int e_K,
                                   int h, const FieldPtr& field,
                                   const std::vector<SeriesMatrix>& a_per_j) {
    long long order = type.order();
    int n = type.n();
    std::vector<SeriesMatrix> frob;
    for (int j = 0; j < type.f(); ++j) {
        auto tw = type.twisted_exponents(j);
        std::vector<int> s(n);
        for (int i = 0; i < n; ++i) s[i] = orient.s(j, i);
        SeriesMatrix c(n, field, "v", 1);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                c.at(s[i], s[k]) = a_per_j[j]
                                       .at(i, k)
                                       .substitute_pow(static_cast<int>(order), "v")
                                       .shift(static_cast<int>(tw[s[k]] - tw[s[i]]));
        frob.push_back(std::move(c));
    }
    return KisinModuleDD(type, orient, e_K, h, field, std::move(frob));
}

KisinModuleDD corrupt_module(Rng& rng, const KisinModuleDD& m) {
    long long order = m.type().order();
    if (order == 1)
        throw Error("TestSetup", "cannot build an off-congruence monomial when p^f - 1 = 1");
    int j = static_cast<int>(pick(rng, 0, m.f() - 1));
    int i = static_cast<int>(pick(rng, 0, m.n() - 1));
    int k = static_cast<int>(pick(rng, 0, m.n() - 1));
    auto tw = m.type().twisted_exponents(j);
    long long allowed = ((tw[k] - tw[i]) % order + order) % order;

    std::vector<SeriesMatrix> frob;
    for (int jj = 0; jj < m.f(); ++jj) frob.push_back(m.frobenius(jj));
    const TruncSeries& entry = frob[j].at(i, k);
    int prec = entry.prec();
    long long bad = (allowed + pick(rng, 1, order - 1)) % order; // off the congruence class
    int exp = static_cast<int>(bad + order * pick(rng, 0, std::max(0, (prec - 1 -
                                                                       static_cast<int>(bad))) /
                                                             static_cast<int>(order)));
    frob[j].at(i, k) = entry + TruncSeries::monomial(entry.field(), "v", prec, exp,
                                                     random_nonzero(rng, entry.field()));
    return KisinModuleDD(m.type(), m.orientation(), m.e_K(), m.height(), m.field(),
                         std::move(frob));
}

} // namespace kisin::testing
