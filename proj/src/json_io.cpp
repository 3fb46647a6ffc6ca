#include "kisin/json_io.hpp"

#include <sstream>

namespace kisin {

namespace {

const Json& field_at(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError("missing \"" + key + "\" at " + path);
    return j[key];
}

long long as_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer())
        throw ParseError("expected integer at " + path);
    return j.get<long long>();
}

Rational as_rational(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return Rational(j.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("malformed rational at " + path);
        }
    }
    throw ParseError("expected integer or \"a/b\" string at " + path);
}

} // namespace

FieldPtr parse_field(const Json& j, const std::string& path) {
    long long p = as_int(field_at(j, "p", path), path + ".p");
    long long m = as_int(field_at(j, "m", path), path + ".m");
    const Json& poly = field_at(j, "poly", path);
    if (!poly.is_array()) throw ParseError("expected array at " + path + ".poly");
    std::vector<long long> coeffs;
    for (size_t i = 0; i < poly.size(); ++i)
        coeffs.push_back(as_int(poly[i], path + ".poly[" + std::to_string(i) + "]"));
    try {
        return FieldSpec::make(p, static_cast<int>(m), std::move(coeffs));
    } catch (const Error& e) {
        throw ParseError(std::string(e.what()) + " at " + path);
    }
}

SeriesMatrix parse_entries(const Json& entries, const FieldPtr& field, const std::string& var,
                           int prec, const std::string& path) {
    if (!entries.is_array() || entries.empty())
        throw ParseError("expected nonempty array at " + path);
    int n = static_cast<int>(entries.size());
    SeriesMatrix m(n, field, var, prec);
    for (int i = 0; i < n; ++i) {
        const Json& row = entries[i];
        std::string rpath = path + "[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("expected row of length " + std::to_string(n) + " at " + rpath);
        for (int k = 0; k < n; ++k) {
            const Json& cell = row[k];
            std::string cpath = rpath + "[" + std::to_string(k) + "]";
            if (!cell.is_array()) throw ParseError("expected term list at " + cpath);
            TruncSeries s(field, var, prec);
            for (size_t t = 0; t < cell.size(); ++t) {
                const Json& term = cell[t];
                std::string tpath = cpath + "[" + std::to_string(t) + "]";
                if (!term.is_array() || term.size() != 2 || !term[1].is_array())
                    throw ParseError("expected [exp, [coeffs]] at " + tpath);
                int exp = static_cast<int>(as_int(term[0], tpath + "[0]"));
                std::vector<long long> coeffs;
                for (size_t c = 0; c < term[1].size(); ++c)
                    coeffs.push_back(
                        as_int(term[1][c], tpath + "[1][" + std::to_string(c) + "]"));
                if (static_cast<int>(coeffs.size()) > field->m())
                    throw ParseError("coefficient vector longer than m at " + tpath);
                s.set_coeff(exp, s.coeff(exp) + FieldElement(field, std::move(coeffs)));
            }
            m.at(i, k) = std::move(s);
        }
    }
    return m;
}

SeriesMatrix parse_matrix(const Json& j, std::optional<int> precision_override) {
    FieldPtr field = parse_field(field_at(j, "field", "$"), "$.field");
    std::string var = field_at(j, "var", "$").is_string()
                          ? j["var"].get<std::string>()
                          : throw ParseError("expected string at $.var");
    if (var != "u" && var != "v" && var != "t")
        throw ParseError("variable tag must be one of u, v, t at $.var");
    int prec = precision_override
                   ? *precision_override
                   : static_cast<int>(as_int(field_at(j, "precision", "$"), "$.precision"));
    if (prec < 1) throw ParseError("precision must be >= 1 at $.precision");
    return parse_entries(field_at(j, "entries", "$"), field, var, prec, "$.entries");
}

KisinModuleDD parse_module(const Json& j, std::optional<int> precision_override) {
    long long p = as_int(field_at(j, "p", "$"), "$.p");
    int f = static_cast<int>(as_int(field_at(j, "f", "$"), "$.f"));
    int n = static_cast<int>(as_int(field_at(j, "n", "$"), "$.n"));
    int e_K = static_cast<int>(as_int(field_at(j, "e_K", "$"), "$.e_K"));
    int height = static_cast<int>(as_int(field_at(j, "height", "$"), "$.height"));
    FieldPtr field = parse_field(field_at(j, "field", "$"), "$.field");
    if (field->p() != p) throw ParseError("$.field.p disagrees with $.p");

    const Json& exps = field_at(j, "exponents", "$");
    if (!exps.is_array() || static_cast<int>(exps.size()) != n)
        throw ParseError("expected n exponents at $.exponents");
    std::vector<long long> exponents;
    for (size_t i = 0; i < exps.size(); ++i)
        exponents.push_back(as_int(exps[i], "$.exponents[" + std::to_string(i) + "]"));
    TameType type(p, f, std::move(exponents));

    const Json& orient = field_at(j, "orientation", "$");
    if (!orient.is_array() || static_cast<int>(orient.size()) != f)
        throw ParseError("expected f permutations at $.orientation");
    std::vector<std::vector<int>> perms;
    for (int jj = 0; jj < f; ++jj) {
        const Json& perm = orient[jj];
        std::string ppath = "$.orientation[" + std::to_string(jj) + "]";
        if (!perm.is_array() || static_cast<int>(perm.size()) != n)
            throw ParseError("expected permutation of length n at " + ppath);
        std::vector<int> s;
        for (size_t i = 0; i < perm.size(); ++i)
            s.push_back(static_cast<int>(as_int(perm[i], ppath + "[" + std::to_string(i) + "]")));
        perms.push_back(std::move(s));
    }

    int prec = precision_override
                   ? *precision_override
                   : static_cast<int>(as_int(field_at(j, "precision", "$"), "$.precision"));
    if (prec < 1) throw ParseError("precision must be >= 1 at $.precision");

    const Json& frob = field_at(j, "frobenius", "$");
    if (!frob.is_array() || static_cast<int>(frob.size()) != f)
        throw ParseError("expected f matrices at $.frobenius");
    std::vector<SeriesMatrix> matrices;
    for (int jj = 0; jj < f; ++jj)
        matrices.push_back(parse_entries(frob[jj], field, "v", prec,
                                         "$.frobenius[" + std::to_string(jj) + "]"));

    try {
        return KisinModuleDD(std::move(type), Orientation(std::move(perms)), e_K, height,
                             field, std::move(matrices));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string(e.what()) + " at $");
    }
}

HodgeInput parse_hodge(const Json& j) {
    HodgeInput in;
    in.p = as_int(field_at(j, "p", "$"), "$.p");
    in.f = static_cast<int>(as_int(field_at(j, "f", "$"), "$.f"));
    in.n = static_cast<int>(as_int(field_at(j, "n", "$"), "$.n"));
    if (j.contains("e_K") && as_int(j["e_K"], "$.e_K") != 1)
        throw RamifiedNotSupported("hodge positions require e_K = 1");

    const Json& mu = field_at(j, "mu", "$");
    if (!mu.is_array() || static_cast<int>(mu.size()) != in.f)
        throw ParseError("expected f cocharacters at $.mu");
    for (int jj = 0; jj < in.f; ++jj) {
        const Json& v = mu[jj];
        std::string path = "$.mu[" + std::to_string(jj) + "]";
        if (!v.is_array() || static_cast<int>(v.size()) != in.n)
            throw ParseError("expected cocharacter of length n at " + path);
        Cochar c;
        for (size_t i = 0; i < v.size(); ++i)
            c.push_back(as_int(v[i], path + "[" + std::to_string(i) + "]"));
        in.mu.push_back(std::move(c));
    }

    const Json& mats = field_at(j, "matrices", "$");
    if (!mats.is_array() || static_cast<int>(mats.size()) != in.f)
        throw ParseError("expected f matrices at $.matrices");
    for (int jj = 0; jj < in.f; ++jj) {
        const Json& m = mats[jj];
        std::string mpath = "$.matrices[" + std::to_string(jj) + "]";
        if (!m.is_array() || static_cast<int>(m.size()) != in.n)
            throw ParseError("expected n rows at " + mpath);
        RatPolyMatrix rows;
        for (int i = 0; i < in.n; ++i) {
            const Json& row = m[i];
            std::string rpath = mpath + "[" + std::to_string(i) + "]";
            if (!row.is_array() || static_cast<int>(row.size()) != in.n)
                throw ParseError("expected n polynomials at " + rpath);
            std::vector<RatPoly> prow;
            for (int k = 0; k < in.n; ++k) {
                const Json& poly = row[k];
                std::string ppath = rpath + "[" + std::to_string(k) + "]";
                if (!poly.is_array()) throw ParseError("expected coefficient array at " + ppath);
                std::vector<Rational> coeffs;
                for (size_t c = 0; c < poly.size(); ++c)
                    coeffs.push_back(as_rational(poly[c], ppath + "[" + std::to_string(c) + "]"));
                prow.emplace_back(std::move(coeffs));
            }
            rows.push_back(std::move(prow));
        }
        in.matrices.push_back(std::move(rows));
    }
    return in;
}

Json matrix_to_json(const SeriesMatrix& m) {
    Json entries = Json::array();
    for (int i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < m.n(); ++k) {
            Json terms = Json::array();
            for (const auto& [e, c] : m.at(i, k).coeffs())
                terms.push_back(Json::array({e, c.coeffs()}));
            row.push_back(terms);
        }
        entries.push_back(row);
    }
    return Json{{"field",
                 {{"p", m.field()->p()}, {"m", m.field()->m()}, {"poly", m.field()->poly()}}},
                {"var", m.var()},
                {"precision", m.precision()},
                {"entries", entries}};
}

Json window_to_json(const AffinePermutation& w) { return Json(w.window()); }

Cochar parse_int_list(const std::string& text) {
    Cochar out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("malformed integer list element \"" + item + "\"");
        }
    }
    if (out.empty()) throw ParseError("empty integer list");
    return out;
}

std::vector<std::vector<Cochar>> parse_mu_string(const std::string& text, int f, int e_K) {
    std::vector<std::vector<Cochar>> out;
    std::stringstream ss(text);
    std::string group;
    while (std::getline(ss, group, '|')) {
        std::vector<Cochar> per_psi;
        std::stringstream gs(group);
        std::string one;
        while (std::getline(gs, one, ';')) per_psi.push_back(parse_int_list(one));
        out.push_back(std::move(per_psi));
    }
    if (static_cast<int>(out.size()) != f)
        throw ParseError("--mu must have " + std::to_string(f) + " |-separated groups");
    for (const auto& g : out)
        if (static_cast<int>(g.size()) != e_K)
            throw ParseError("--mu must list " + std::to_string(e_K) +
                             " ;-separated cocharacters per embedding");
    return out;
}

std::vector<int> parse_blocks_string(const std::string& text, int n) {
    // "1,2|3" -> consecutive blocks; validated to cover 1..n in order
    std::vector<int> sizes;
    int expect = 1;
    std::stringstream ss(text);
    std::string group;
    while (std::getline(ss, group, '|')) {
        Cochar ids = parse_int_list(group);
        for (long long id : ids) {
            if (id != expect)
                throw ParseError("blocks must list 1..n consecutively, got " +
                                 std::to_string(id) + " where " + std::to_string(expect) +
                                 " was expected");
            ++expect;
        }
        sizes.push_back(static_cast<int>(ids.size()));
    }
    if (expect != n + 1) throw ParseError("blocks must cover 1..n");
    return sizes;
}

} // namespace kisin
