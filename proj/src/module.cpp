#include "kisin/module.hpp"

#include <algorithm>
#include <numeric>

namespace kisin {

namespace {

long long nonneg_mod(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

} // namespace

Cochar lambda_from_mu(const std::vector<Cochar>& mu_j) {
    if (mu_j.empty()) throw ShapeMismatch("empty embedding block in mu");
    Cochar lambda(mu_j[0].size(), 0);
    for (const auto& mu : mu_j) {
        if (mu.size() != lambda.size()) throw ShapeMismatch("ragged mu input");
        for (size_t i = 0; i < mu.size(); ++i) lambda[i] += mu[i];
    }
    return lambda;
}

KisinModuleDD::KisinModuleDD(TameType type, Orientation orientation, int e_K, int height,
                             FieldPtr field, std::vector<SeriesMatrix> frobenius)
    : type_(std::move(type)), orient_(std::move(orientation)), e_K_(e_K), height_(height),
      field_(std::move(field)), frob_(std::move(frobenius)) {
    if (e_K_ < 1) throw RamifiedNotSupported("e_K must be >= 1");
    if (height_ < 0) throw Error("InvalidModule", "negative height bound");
    if (!is_orientation(type_, orient_))
        throw InvalidOrientation("orientation does not sort the twisted exponents");
    if (static_cast<int>(frob_.size()) != type_.f())
        throw DimensionMismatch("need one Frobenius matrix per embedding");
    if ((field_->q() - 1) % type_.order() != 0)
        throw FieldTooSmall("mu_{p^f-1} does not embed: (p^f - 1) must divide q - 1");
    for (const auto& c : frob_) {
        if (c.n() != type_.n()) throw DimensionMismatch("Frobenius matrix size != n");
        if (c.var() != "v") throw DimensionMismatch("Frobenius matrices must be over v");
        if (!c.field()->same(*field_)) throw DimensionMismatch("Frobenius field mismatch");
    }
}

BlockPartition KisinModuleDD::blocks(int j) const {
    return parabolic_blocks(type_, orient_, mod_f(j));
}

std::vector<int> KisinModuleDD::sort_perm(int j) const {
    std::vector<int> s(n());
    for (int i = 0; i < n(); ++i) s[i] = orient_.s(mod_f(j), i);
    return s;
}

std::vector<long long> KisinModuleDD::twisted(int j) const {
    return type_.twisted_exponents(mod_f(j));
}

DescentReport KisinModuleDD::validate_descent() const {
    DescentReport rep;
    long long order = type_.order();

    rep.fast_ok = true;
    for (int j = 0; j < f(); ++j) {
        auto tw = twisted(j);
        for (int i = 0; i < n(); ++i)
            for (int k = 0; k < n(); ++k) {
                long long allowed = nonneg_mod(tw[k] - tw[i], order);
                for (const auto& [m, c] : frob_[j].at(i, k).coeffs()) {
                    if (nonneg_mod(m - allowed, order) != 0) {
                        rep.fast_ok = false;
                        rep.violations.push_back({j, i, k, m});
                    }
                }
            }
    }

    // Direct check: apply the generator g of Delta to both sides of
    // g.phi = phi.g on the eigenbasis.  g acts on v in component j through
    // zeta^{p^{f-j}} and on the basis vector f_i through zeta^{a_i}.
    FieldElement zeta = primitive_root_of_unity(field_, order);
    rep.direct_ok = true;
    for (int j = 0; j < f(); ++j) {
        long long pw = 1;
        for (int t = 0; t < f() - j; ++t) pw = pw * type_.p() % order;
        FieldElement zeta_j = zeta.pow(pw);
        for (int i = 0; i < n(); ++i)
            for (int k = 0; k < n(); ++k) {
                const TruncSeries& c = frob_[j].at(i, k);
                TruncSeries lhs = c.scale_var(zeta_j).scalar_mul(zeta.pow(type_.exponents()[i]));
                TruncSeries rhs = c.scalar_mul(zeta.pow(type_.exponents()[k]));
                if (!lhs.equal_at_prec(rhs)) rep.direct_ok = false;
            }
    }
    return rep;
}

SeriesMatrix KisinModuleDD::isotypic_matrix(int j, int k) const {
    j = mod_f(j);
    if (k < 1 || k > n()) throw DimensionMismatch("chain position out of range");
    long long order = type_.order();
    auto tw = twisted(j);
    auto s = sort_perm(j);
    // exponent of the smallest v-power carrying f_x into the chi_{s(k)} piece
    auto shift_exp = [&](int x) { return nonneg_mod(tw[s[k - 1]] - tw[x], order); };

    SeriesMatrix a(n(), field_, "u", frob_[j].precision());
    for (int i = 0; i < n(); ++i)
        for (int l = 0; l < n(); ++l) {
            TruncSeries entry =
                frob_[j].at(s[i], s[l]).shift(static_cast<int>(shift_exp(s[l]) - shift_exp(s[i])));
            try {
                a.at(i, l) = entry.extract_pow(static_cast<int>(order), "u");
            } catch (const DescentViolation&) {
                throw DescentViolation("entry (" + std::to_string(s[i]) + "," +
                                       std::to_string(s[l]) + ") of C^(" + std::to_string(j) +
                                       ") violates the support congruence");
            }
        }
    return a;
}

void IsotypicDiagram::verify() const {
    int rows = static_cast<int>(chain.size());
    if (rows == 0) return;
    for (int k = 0; k < rows; ++k) {
        // square k: connector k carries chain position (k-1 mod n) to k
        const SeriesMatrix& prev = chain[(k + rows - 1) % rows];
        SeriesMatrix lhs = chain[k] * connectors[k];
        SeriesMatrix rhs = connectors[k] * prev;
        if (!lhs.equal_at_prec(rhs))
            throw CommutationFailure("square " + std::to_string(k) + " at embedding " +
                                     std::to_string(j));
    }
    SeriesMatrix comp = connectors[0];
    for (int k = 1; k < rows; ++k) comp = connectors[k] * comp;
    SeriesMatrix u_id = SeriesMatrix::identity(comp.n(), comp.field(), comp.var(),
                                               comp.precision())
                            .shift_all(1);
    if (!comp.equal_at_prec(u_id))
        throw CommutationFailure("row composition is not multiplication by u at embedding " +
                                 std::to_string(j));
}

IsotypicDiagram KisinModuleDD::build_diagram(int j) const {
    j = mod_f(j);
    long long order = type_.order();
    auto tw = twisted(j);
    auto s = sort_perm(j);

    IsotypicDiagram d;
    d.j = j;
    for (int k = 1; k <= n(); ++k) d.chain.push_back(isotypic_matrix(j, k));

    auto exps = [&](int k) { // shift exponents of the chain-k basis
        std::vector<long long> e(n());
        for (int i = 0; i < n(); ++i) e[i] = nonneg_mod(tw[s[k - 1]] - tw[s[i]], order);
        return e;
    };
    for (int k = 0; k < n(); ++k) {
        int from = (k == 0) ? n() : k;
        int to = k + 1;
        long long delta = (k == 0) ? order - tw[s[n() - 1]] + tw[s[0]]
                                   : tw[s[to - 1]] - tw[s[from - 1]];
        auto ef = exps(from), et = exps(to);
        SeriesMatrix conn(n(), field_, "u", frob_[j].precision());
        for (int i = 0; i < n(); ++i) {
            long long v_exp = delta + ef[i] - et[i];
            if (v_exp % order != 0 || v_exp < 0)
                throw CommutationFailure("connector exponent not a power of u");
            conn.at(i, i) = TruncSeries::monomial(field_, "u", frob_[j].precision(),
                                                  static_cast<int>(v_exp / order),
                                                  FieldElement::one(field_));
        }
        d.connectors.push_back(std::move(conn));
    }
    d.verify();
    return d;
}

KisinModuleDD KisinModuleDD::change_eigenbasis(const std::vector<SeriesMatrix>& g) const {
    if (static_cast<int>(g.size()) != f())
        throw DimensionMismatch("need one loop group element per embedding");
    long long order = type_.order();

    // v-matrices of the new eigenbases in the original index order
    std::vector<SeriesMatrix> b(f());
    for (int j = 0; j < f(); ++j) {
        if (g[j].n() != n() || g[j].var() != "u")
            throw DimensionMismatch("loop group elements must be n x n over u");
        if (!in_parahoric(g[j], blocks(j)))
            throw NotInLoopGroup("g^(" + std::to_string(j) + ") fails the mod-u block condition");
        auto tw = twisted(j);
        auto s = sort_perm(j);
        SeriesMatrix bs(n(), field_, "v", 0);
        for (int i = 0; i < n(); ++i)
            for (int k = 0; k < n(); ++k)
                bs.at(i, k) = g[j].at(i, k)
                                  .substitute_pow(static_cast<int>(order), "v")
                                  .shift(static_cast<int>(tw[s[k]] - tw[s[i]]));
        std::vector<int> sinv(n());
        for (int i = 0; i < n(); ++i) sinv[s[i]] = i;
        b[j] = bs.permuted(sinv);
    }

    std::vector<SeriesMatrix> frob;
    for (int j = 0; j < f(); ++j) {
        const SeriesMatrix& prev = b[mod_f(j - 1)];
        SeriesMatrix twisted_prev = prev.substitute_pow(static_cast<int>(type_.p()), "v");
        frob.push_back(b[j].inverse() * frob_[j] * twisted_prev);
    }
    return KisinModuleDD(type_, orient_, e_K_, height_, field_, std::move(frob));
}

Cochar KisinModuleDD::height_divisors(int j) const {
    return smith_normal_form(isotypic_matrix(mod_f(j))).divisors;
}

bool KisinModuleDD::height_within_bound() const {
    for (int j = 0; j < f(); ++j) {
        Cochar d = height_divisors(j);
        for (long long x : d)
            if (x < 0 || x > static_cast<long long>(e_K_) * height_) return false;
    }
    return true;
}

std::vector<AffinePermutation> KisinModuleDD::shape() const {
    std::vector<AffinePermutation> out;
    for (int j = 0; j < f(); ++j) out.push_back(parahoric_reduce(isotypic_matrix(j), blocks(j)));
    return out;
}

std::vector<std::vector<long long>> KisinModuleDD::compute_type() const {
    long long order = type_.order();
    std::vector<std::vector<long long>> out;
    for (int j = 0; j < f(); ++j) {
        auto tw = twisted(j);
        for (int i = 0; i < n(); ++i)
            for (int k = 0; k < n(); ++k) {
                long long allowed = nonneg_mod(tw[k] - tw[i], order);
                for (const auto& [m, c] : frob_[j].at(i, k).coeffs())
                    if (nonneg_mod(m - allowed, order) != 0)
                        throw TypeMismatch("embedding " + std::to_string(j) +
                                           " disagrees with the declared type at entry (" +
                                           std::to_string(i) + "," + std::to_string(k) + ")");
            }
        auto mult = type_.exponents();
        std::sort(mult.begin(), mult.end());
        out.push_back(std::move(mult));
    }
    return out;
}

StratumReport KisinModuleDD::stratum_membership(const std::vector<std::vector<Cochar>>& mu) const {
    if (static_cast<int>(mu.size()) != f())
        throw ShapeMismatch("mu must have one block per embedding");
    StratumReport rep;
    rep.label = shape();
    rep.all_member = true;
    for (int j = 0; j < f(); ++j) {
        if (static_cast<int>(mu[j].size()) != e_K_)
            throw ShapeMismatch("mu must list e_K cocharacters per embedding");
        Cochar lambda = lambda_from_mu(mu[j]);
        if (static_cast<int>(lambda.size()) != n())
            throw ShapeMismatch("cocharacter length != n");
        BlockPartition bl = blocks(j);
        PermSet adm = parahoric_admissible_set(lambda, bl);
        bool member = adm.count(rep.label[j]) > 0;
        bool maximal = false;
        for (const auto& l : weyl_orbit(lambda))
            if (min_double_coset_rep(AffinePermutation::translation(l), bl) == rep.label[j])
                maximal = true;
        rep.lambda.push_back(std::move(lambda));
        rep.member.push_back(member);
        rep.maximal.push_back(maximal);
        rep.all_member = rep.all_member && member;
    }
    return rep;
}

} // namespace kisin
