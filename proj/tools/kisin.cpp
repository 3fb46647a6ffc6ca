#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "kisin/json_io.hpp"
#include "kisin/strata.hpp"

using namespace kisin;

namespace {

// status=ok -> 0, violation -> 1, error -> 2
int emit(const std::string& status, Json payload,
         std::vector<std::string> diagnostics = {}) {
    Json out{{"status", status}, {"payload", std::move(payload)},
             {"diagnostics", std::move(diagnostics)}};
    std::cout << out.dump(2) << std::endl;
    if (status == "ok") return 0;
    if (status == "violation") return 1;
    return 2;
}

int emit_error(const std::string& message) {
    return emit("error", Json::object(), {message});
}

Json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return j;
}

std::optional<int> env_precision() {
    const char* s = std::getenv("KISIN_PRECISION");
    if (!s || !*s) return std::nullopt;
    return std::atoi(s);
}

Json adm_payload(const PermSet& adm, const std::vector<AffinePermutation>& maxima) {
    Json arr = Json::array();
    for (const auto& w : adm) {
        bool is_max = std::find(maxima.begin(), maxima.end(), w) != maxima.end();
        arr.push_back({{"window", w.window()}, {"length", w.length()}, {"maximal", is_max}});
    }
    return arr;
}

int run_adm(int n, const std::string& lambda_text, const std::string& blocks_text, bool dot) {
    Cochar lambda = parse_int_list(lambda_text);
    if (static_cast<int>(lambda.size()) != n)
        throw ParseError("--lambda must have n entries");
    BlockPartition blocks = blocks_text.empty()
                                ? BlockPartition::singletons(n)
                                : BlockPartition(parse_blocks_string(blocks_text, n));
    PermSet adm = parahoric_admissible_set(lambda, blocks);
    std::vector<AffinePermutation> maxima;
    for (const auto& w : adm) {
        bool is_max = true;
        for (const auto& v : adm)
            if (!(v == w) && bruhat_leq(w, v)) {
                is_max = false;
                break;
            }
        if (is_max) maxima.push_back(w);
    }
    if (dot) {
        StrataPoset poset({{adm.begin(), adm.end()}}, {blocks});
        std::cout << export_poset(poset, PosetFormat::Dot);
        return 0;
    }
    return emit("ok", adm_payload(adm, maxima));
}

int run_orient(long long p, int f, const std::string& exps_text) {
    TameType type(p, f, parse_int_list(exps_text));
    Json twisted = Json::array();
    for (int j = 0; j < f; ++j) twisted.push_back(type.twisted_exponents(j));
    Json olist = Json::array();
    for (const auto& o : orientations(type)) {
        Json blocks = Json::array();
        for (int j = 0; j < f; ++j) blocks.push_back(parabolic_blocks(type, o, j).sizes());
        olist.push_back({{"perms", o.perms()}, {"blocks", blocks}});
    }
    return emit("ok", Json{{"twisted", twisted}, {"orientations", olist}});
}

Json shape_payload(const KisinModuleDD& m) {
    Json shapes = Json::array();
    auto sh = m.shape();
    for (int j = 0; j < m.f(); ++j)
        shapes.push_back({{"window", sh[j].window()},
                          {"length", sh[j].length()},
                          {"blocks", m.blocks(j).sizes()}});
    return shapes;
}

int run_validate(const std::string& path) {
    KisinModuleDD m = parse_module(load_file(path), env_precision());
    DescentReport rep = m.validate_descent();
    Json viol = Json::array();
    for (const auto& v : rep.violations)
        viol.push_back({{"j", v.j}, {"i", v.i}, {"k", v.k}, {"exponent", v.exponent}});
    Json payload{{"descent",
                  {{"fast_ok", rep.fast_ok}, {"direct_ok", rep.direct_ok}, {"violations", viol}}}};
    std::vector<std::string> diagnostics;
    bool ok = rep.ok();
    if (ok) {
        Json divisors = Json::array();
        for (int j = 0; j < m.f(); ++j) divisors.push_back(m.height_divisors(j));
        bool height_ok = m.height_within_bound();
        payload["height"] = {{"divisors", divisors},
                             {"bound", m.e_K() * m.height()},
                             {"ok", height_ok}};
        payload["type"] = m.compute_type();
        if (!height_ok) {
            ok = false;
            diagnostics.push_back("height window exceeded");
        }
    } else {
        diagnostics.push_back("descent commutation fails");
    }
    return emit(ok ? "ok" : "violation", payload, diagnostics);
}

int run_shape(const std::string& path, const std::string& mu_text) {
    KisinModuleDD m = parse_module(load_file(path), env_precision());
    Json payload{{"shape", shape_payload(m)}};
    bool ok = true;
    std::vector<std::string> diagnostics;
    if (!mu_text.empty()) {
        auto mu = parse_mu_string(mu_text, m.f(), m.e_K());
        StratumReport rep = m.stratum_membership(mu);
        Json per_j = Json::array();
        for (int j = 0; j < m.f(); ++j)
            per_j.push_back({{"lambda", rep.lambda[j]},
                             {"member", static_cast<bool>(rep.member[j])},
                             {"maximal", static_cast<bool>(rep.maximal[j])}});
        payload["stratum"] = {{"per_embedding", per_j}, {"member", rep.all_member}};
        if (!rep.all_member) {
            ok = false;
            diagnostics.push_back("shape is not admissible for the given mu");
        }
    }
    return emit(ok ? "ok" : "violation", payload, diagnostics);
}

int run_strata(long long p, int f, int n, int e_K, const std::string& mu_text,
               const std::string& exps_text, const std::string& orient_text,
               const std::string& format, bool dot) {
    TameType type(p, f, parse_int_list(exps_text));
    if (type.n() != n) throw ParseError("--exponents must have n entries");
    auto mu = parse_mu_string(mu_text, f, e_K);

    Orientation orientation = [&] {
        if (!orient_text.empty()) {
            std::vector<std::vector<int>> perms;
            std::stringstream ss(orient_text);
            std::string group;
            while (std::getline(ss, group, '|')) {
                Cochar ids = parse_int_list(group);
                perms.emplace_back(ids.begin(), ids.end());
            }
            return Orientation(perms);
        }
        auto all = orientations(type);
        if (all.size() > 1)
            throw InvalidOrientation(
                "type has " + std::to_string(all.size()) +
                " orientations; pick one with --orientation \"s_0|s_1|...\"");
        return all.front();
    }();
    if (!is_orientation(type, orientation))
        throw InvalidOrientation("--orientation does not sort the twisted exponents");

    StrataPoset poset = strata_poset(mu, type, orientation);
    if (dot || format == "dot") {
        std::cout << export_poset(poset, PosetFormat::Dot);
        return 0;
    }
    Json payload = Json::parse(export_poset(poset, PosetFormat::Json));
    payload["components"] = static_cast<long long>(irreducible_components(poset).size());
    payload["components_oracle"] = component_count_by_orbits(mu, type, orientation);
    return emit("ok", payload);
}

int run_cartan(const std::string& path) {
    SeriesMatrix m = parse_matrix(load_file(path), env_precision());
    SmithResult snf = smith_normal_form(m);
    return emit("ok", Json{{"position", cartan_position(m)}, {"divisors", snf.divisors}});
}

int run_hodge(const std::string& path) {
    HodgeInput in = parse_hodge(load_file(path));
    HodgeReport rep = hodge_position(in);
    Json per_j = Json::array();
    for (int j = 0; j < in.f; ++j)
        per_j.push_back({{"position", rep.position[j]},
                         {"mu", in.mu[j]},
                         {"leq_mu", static_cast<bool>(rep.leq_mu[j])}});
    return emit(rep.all_leq ? "ok" : "violation",
                Json{{"per_embedding", per_j}, {"leq_mu", rep.all_leq}},
                rep.all_leq ? std::vector<std::string>{}
                            : std::vector<std::string>{"p-adic Hodge type exceeds mu"});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with Kisin modules with tame descent data:\n"
                 "admissible sets, orientations, shapes, Kottwitz-Rapoport strata,\n"
                 "Cartan positions and p-adic Hodge positions.  All subcommands\n"
                 "print one JSON document; exit code 0 = ok, 1 = violation, 2 = error."};
    app.require_subcommand(1);

    auto* adm = app.add_subcommand("adm", "Admissible set Adm(lambda) or Adm_P(lambda); JSON "
                                          "array of {window, length, maximal}");
    int adm_n = 0;
    std::string adm_lambda, adm_blocks;
    bool adm_dot = false;
    adm->add_option("--n", adm_n, "rank n")->required();
    adm->add_option("--lambda", adm_lambda, "cocharacter, e.g. 1,0")->required();
    adm->add_option("--blocks", adm_blocks, "parahoric blocks, e.g. \"1,2|3\" (default Iwahori)");
    adm->add_flag("--dot", adm_dot, "emit the Hasse diagram in DOT format");

    auto* orient = app.add_subcommand("orient", "Twisted exponents a_i^{(j)}, orientations and "
                                                "parabolic block structure of a tame type");
    long long or_p = 0;
    int or_f = 0;
    std::string or_exps;
    orient->add_option("--p", or_p, "prime p")->required();
    orient->add_option("--f", or_f, "residue degree f")->required();
    orient->add_option("--exponents", or_exps, "a_1,...,a_n")->required();

    auto* validate = app.add_subcommand("validate", "Descent commutation (dual check), height "
                                                    "window and type of a module file");
    std::string val_path;
    validate->add_option("file", val_path, "module JSON file")->required();

    auto* shape = app.add_subcommand("shape", "Shape (parahoric double coset representative per "
                                              "embedding) of a module file");
    std::string shape_path, shape_mu;
    shape->add_option("file", shape_path, "module JSON file")->required();
    shape->add_option("--mu", shape_mu, "also test stratum membership against mu, e.g. "
                                        "\"1,0|1,0\" (';' separates psi within an embedding)");

    auto* strata = app.add_subcommand("strata", "Kottwitz-Rapoport strata poset for (mu, tau)");
    long long st_p = 0;
    int st_f = 0, st_n = 0, st_ek = 1;
    std::string st_mu, st_exps, st_orient, st_format = "json";
    bool st_dot = false;
    strata->add_option("--p", st_p, "prime p")->required();
    strata->add_option("--f", st_f, "residue degree f")->required();
    strata->add_option("--n", st_n, "rank n")->required();
    strata->add_option("--e_K", st_ek, "ramification index (default 1)");
    strata->add_option("--mu", st_mu, "cocharacters mu_{j,psi}: embeddings split on '|', psi "
                                      "on ';', entries on ','")->required();
    strata->add_option("--exponents", st_exps, "type exponents a_1,...,a_n")->required();
    strata->add_option("--orientation", st_orient,
                       "orientation s_0|s_1|... (required when not unique)");
    strata->add_option("--format", st_format, "output format: json or dot");
    strata->add_flag("--dot", st_dot, "shorthand for --format dot");

    auto* cartan = app.add_subcommand("cartan", "Cartan position (elementary divisors) of a "
                                                "series matrix file");
    std::string cartan_path;
    cartan->add_option("file", cartan_path, "matrix JSON file")->required();

    auto* hodge = app.add_subcommand("hodge", "p-adic Hodge positions at u = p and the verdict "
                                              "against mu (e_K = 1)");
    std::string hodge_path;
    hodge->add_option("file", hodge_path, "hodge JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (adm->parsed()) return run_adm(adm_n, adm_lambda, adm_blocks, adm_dot);
        if (orient->parsed()) return run_orient(or_p, or_f, or_exps);
        if (validate->parsed()) return run_validate(val_path);
        if (shape->parsed()) return run_shape(shape_path, shape_mu);
        if (strata->parsed())
            return run_strata(st_p, st_f, st_n, st_ek, st_mu, st_exps, st_orient, st_format,
                              st_dot);
        if (cartan->parsed()) return run_cartan(cartan_path);
        if (hodge->parsed()) return run_hodge(hodge_path);
    } catch (const Error& e) {
        return emit_error(e.what());
    } catch (const std::exception& e) {
        return emit_error(std::string("internal: ") + e.what());
    }
    return emit_error("no subcommand selected");
}
