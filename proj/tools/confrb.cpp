// confrb: exact verification toolkit for Rota-Baxter operators on finite-type
// Lie conformal algebras. Subcommands: axioms, rb-check, derive-system,
// ccybe, search. Exit codes: 0 pass, 1 verification fail, 2 input error,
// 3 candidate cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "confrb/report.hpp"
#include "confrb/search.hpp"

using namespace confrb;

namespace {

int g_exit = 0;

struct LoadedAlgebra {
    std::optional<LieAlgebra> lie;
    std::optional<ConformalAlgebra> conf;
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::parse, "cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        raise(ErrorKind::parse, "malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

LoadedAlgebra load_algebra(const std::string& preset, const std::string& file) {
    LoadedAlgebra out;
    if (!file.empty()) {
        Json j = read_json_file(file);
        if (j.contains("basis")) out.lie = lie_from_json(j);
        else if (j.contains("generators")) out.conf = conformal_from_json(j);
        else raise(ErrorKind::parse, "algebra file needs \"basis\" or \"generators\"");
        return out;
    }
    if (preset == "sl2") out.lie = LieAlgebra::sl2();
    else if (preset == "cur-sl2") out.conf = ConformalAlgebra::cur_of(LieAlgebra::sl2());
    else if (preset == "vir") out.conf = ConformalAlgebra::vir();
    else if (preset == "rank2-example") out.conf = ConformalAlgebra::rank2_example();
    else raise(ErrorKind::parse, "unknown preset '" + preset + "'");
    return out;
}

GaussRat parse_weight(const std::string& s) { return GaussRat(parse_rational(s)); }

std::vector<GaussRat> parse_rat_list(const std::string& s) {
    std::vector<GaussRat> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string tok =
            s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!tok.empty()) out.push_back(GaussRat(parse_rational(tok)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) raise(ErrorKind::parse, "empty rational list '" + s + "'");
    return out;
}

void emit(const Report& rep, bool as_json) {
    if (as_json) std::cout << rep.to_json().dump(2) << "\n";
    else std::cout << rep.to_text();
    if (rep.status == "fail") g_exit = 1;
}

struct ResolvedOperator {
    std::optional<LinearMap> lin;
    std::optional<ConformalMap> conf;
    std::optional<GaussRat> natural_weight;
};

ResolvedOperator resolve_catalog(const LoadedAlgebra& alg, const std::string& id) {
    ResolvedOperator out;
    if (alg.conf && alg.conf->rank() == 2)
        for (auto& e : catalog_rank2())
            if (e.name == id) {
                out.conf = e.map;
                out.natural_weight = e.weight.constant_value();
                return out;
            }
    for (int w : {0, 1})
        for (auto& e : catalog_cur_sl2(w))
            if (alg.conf && e.name == id) {
                out.conf = e.map;
                out.natural_weight = e.weight.constant_value();
                return out;
            }
    for (int w : {0, 1})
        for (auto& e : catalog_sl2(w))
            if (e.name == id) {
                if (alg.conf) out.conf = extend_partial(e.map);
                else out.lin = e.map;
                out.natural_weight = e.weight.constant_value();
                return out;
            }
    raise(ErrorKind::catalog, "unknown catalog id '" + id + "'");
}

void cmd_axioms(const std::string& preset, const std::string& file, bool as_json) {
    Timer timer;
    Report rep;
    rep.command = "axioms";
    LoadedAlgebra alg = load_algebra(preset, file);
    if (alg.lie) {
        if (!check_jacobi(*alg.lie))
            rep.add_defect("jacobi", "Jacobi identity fails");
    } else {
        rep.add_axiom_defects(check_conformal_axioms(*alg.conf));
    }
    rep.ms = timer.ms();
    emit(rep, as_json);
}

void cmd_rb_check(const std::string& preset, const std::string& file,
                  const std::string& catalog, const std::string& op_file,
                  const std::string& weight_str, bool as_json) {
    Timer timer;
    Report rep;
    rep.command = "rb-check";
    LoadedAlgebra alg = load_algebra(preset, file);

    ResolvedOperator op;
    if (!catalog.empty()) {
        op = resolve_catalog(alg, catalog);
    } else if (!op_file.empty()) {
        Json j = read_json_file(op_file);
        std::set<std::string> names{var::del};
        collect_matrix_vars(j, names);
        Ring r = Ring::make({names.begin(), names.end()});
        int n = alg.lie ? alg.lie->dim() : alg.conf->rank();
        PolyMat m = matrix_from_json(j, r, n);
        if (alg.lie) {
            for (auto& row : m)
                for (auto& p : row)
                    if (p.involves(var::del) || p.involves(var::lambda))
                        raise(ErrorKind::parse,
                              "a Lie-algebra operator must be constant in d and l");
            op.lin = LinearMap{r, m};
        } else {
            op.conf = ConformalMap::make(r, m);
        }
    } else {
        raise(ErrorKind::parse, "rb-check needs --catalog or --operator");
    }

    GaussRat weight = !weight_str.empty()
                          ? parse_weight(weight_str)
                          : op.natural_weight.value_or(GaussRat(0));
    rep.extra["weight"] = weight.str();

    if (alg.lie) {
        if (!op.lin) raise(ErrorKind::parse, "operator kind does not match the algebra");
        auto wit = check_rb(*alg.lie, *op.lin,
                            GaussPoly::constant(op.lin->ring, weight));
        rep.add_residuals(wit);
    } else {
        if (!op.conf) raise(ErrorKind::parse, "operator kind does not match the algebra");
        auto wit = check_conformal_rb(*alg.conf, *op.conf,
                                      GaussPoly::constant(op.conf->ring, weight));
        rep.add_residuals(wit);
    }
    rep.ms = timer.ms();
    emit(rep, as_json);
}

void cmd_derive_system(int weight, bool compare, bool as_json) {
    Timer timer;
    Report rep;
    rep.command = "derive-system";
    EquationSystem derived = derive_rb_system(weight);
    rep.extra["system"] = equation_system_to_json(derived);
    if (compare) {
        MatchReport match = match_system(derived, reference_rb_system(weight));
        rep.extra["compare"] = match_report_to_json(match);
        for (auto& e : match.entries)
            if (!e.matched)
                rep.add_defect("(" + e.pair + ";" + e.coord + ")",
                               "derived equation does not match the reference");
    } else {
        rep.status = "info";
    }
    rep.ms = timer.ms();
    emit(rep, as_json);
}

void cmd_ccybe(const std::string& preset, const std::string& file,
               const std::string& tensor_file, const std::string& family,
               const std::string& f_coeffs, const std::string& alpha,
               const std::string& beta, const std::string& gamma,
               const std::string& scale, const std::string& checks, bool to_rb,
               bool as_json) {
    Timer timer;
    Report rep;
    rep.command = "ccybe";
    LoadedAlgebra alg = load_algebra(preset, file);
    if (!alg.conf) raise(ErrorKind::parse, "ccybe needs a conformal algebra");
    const ConformalAlgebra& L = *alg.conf;

    TensorElement r = TensorElement::zero(Ring(), 2, L.rank());
    if (!tensor_file.empty()) {
        r = tensor_from_json(read_json_file(tensor_file), L.rank());
    } else if (!family.empty()) {
        std::vector<GaussRat> fc = parse_rat_list(f_coeffs);
        Ring fr = Ring::make({"x"});
        GaussPoly f = GaussPoly::zero(fr);
        for (size_t i = 0; i < fc.size(); ++i)
            f += GaussPoly::constant(fr, fc[i]) *
                 GaussPoly::variable(fr, "x").pow((std::uint32_t)i);
        r = cursl2_solution_family(family, f, "x", parse_weight(alpha),
                                   parse_weight(beta), parse_weight(gamma),
                                   parse_weight(scale));
    } else {
        raise(ErrorKind::parse, "ccybe needs --tensor or --family");
    }

    size_t start = 0;
    while (start <= checks.size()) {
        size_t comma = checks.find(',', start);
        std::string tok = checks.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!tok.empty()) {
            bool ok;
            if (tok == "skew") ok = is_skew(r);
            else if (tok == "ccybe") ok = check_ccybe(L, r);
            else if (tok == "weak") ok = check_weak_ccybe(L, r);
            else if (tok == "invariance") ok = check_invariance(L, r);
            else raise(ErrorKind::parse, "unknown check '" + tok + "'");
            rep.extra["checks"][tok] = ok;
            if (!ok) rep.add_defect(tok, "check failed");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }

    if (to_rb) {
        ConformalForm F = ConformalForm::make(L);
        ConformalMap P = rb_from_solution(F, r);
        rep.extra["operator"] = matrix_to_json(P.m);
        auto wit = check_conformal_rb(L, P, GaussPoly::zero(P.ring));
        rep.extra["operator_rb_weight0"] = wit.ok();
        if (!wit.ok()) rep.add_residuals(wit);
    }
    rep.ms = timer.ms();
    emit(rep, as_json);
}

void cmd_search(const std::string& preset, const std::string& file,
                const std::string& weight_str, int deg, const std::string& coeffs_str,
                const std::string& pattern_str, long long max_candidates,
                bool as_json) {
    Timer timer;
    Report rep;
    rep.command = "search";
    rep.status = "info";
    LoadedAlgebra alg = load_algebra(preset, file);
    if (!alg.conf) raise(ErrorKind::parse, "search needs a conformal algebra");
    const ConformalAlgebra& L = *alg.conf;
    GaussRat weight = parse_weight(weight_str);
    std::vector<GaussRat> coeffs = parse_rat_list(coeffs_str);
    SearchPattern pat = parse_pattern(L, pattern_str);

    SearchResult res = bounded_search(L, weight, deg, coeffs, pat,
                                      Integer(max_candidates));
    std::ostringstream lattice;
    lattice << res.lattice_size;
    rep.extra["lattice"] = lattice.str();
    rep.extra["count"] = res.hits.size();
    Json hits = Json::array();
    bool all_verified = true;
    for (auto& h : res.hits) {
        if (!check_conformal_rb(L, h, GaussPoly::constant(h.ring, weight)).ok())
            all_verified = false;
        hits.push_back(matrix_to_json(h.m));
    }
    rep.extra["hits"] = hits;
    rep.extra["reverified"] = all_verified;
    if (!all_verified) rep.add_defect("reverify", "a reported hit failed re-verification");
    rep.ms = timer.ms();
    emit(rep, as_json);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Rota-Baxter verification on finite-type Lie conformal algebras"};
    app.require_subcommand(1);

    std::string preset = "cur-sl2", file, catalog, op_file, weight_str;
    std::string tensor_file, family, f_coeffs = "1";
    std::string alpha = "0", beta = "0", gamma = "0", scale = "1";
    std::string checks = "skew,ccybe,weak,invariance";
    std::string coeffs_str = "-1,0,1", pattern_str;
    int weight01 = 0, deg = 0;
    long long max_candidates = 10000000;
    bool compare = false, to_rb = false;
    bool json_axioms = false, json_rb = false, json_derive = false,
         json_ccybe = false, json_search = false;

    auto* ax = app.add_subcommand("axioms", "check Lie / Lie-conformal axioms");
    ax->add_option("--preset", preset, "sl2 | cur-sl2 | vir | rank2-example");
    ax->add_option("--algebra", file, "algebra JSON file");
    ax->add_flag("--json", json_axioms, "JSON output");
    ax->callback([&]() { cmd_axioms(preset, file, json_axioms); });

    auto* rb = app.add_subcommand("rb-check", "verify a Rota-Baxter operator");
    rb->add_option("--preset", preset, "sl2 | cur-sl2 | vir | rank2-example");
    rb->add_option("--algebra", file, "algebra JSON file");
    rb->add_option("--catalog", catalog,
                   "catalog id (R1, R2, R3, R4, Q1, P2.3a-e, P2.4a-c, zero, "
                   "neg-id, ext:<id>, rank2-i, rank2-ii)");
    rb->add_option("--operator", op_file, "operator matrix JSON file");
    rb->add_option("--weight", weight_str, "weight (rational; catalog default)");
    rb->add_flag("--json", json_rb, "JSON output");
    rb->callback([&]() {
        cmd_rb_check(preset, file, catalog, op_file, weight_str, json_rb);
    });

    auto* ds = app.add_subcommand("derive-system",
                                  "derive the generic coefficient systems on Cur(sl2)");
    ds->add_option("--weight", weight01, "0 or 1")->check(CLI::Range(0, 1));
    ds->add_flag("--compare", compare, "compare against the reference equations");
    ds->add_flag("--json", json_derive, "JSON output");
    ds->callback([&]() { cmd_derive_system(weight01, compare, json_derive); });

    auto* cc = app.add_subcommand("ccybe",
                                  "conformal classical Yang-Baxter checks and the "
                                  "solution-to-operator map");
    cc->add_option("--preset", preset, "conformal preset (default cur-sl2)");
    cc->add_option("--algebra", file, "algebra JSON file");
    cc->add_option("--tensor", tensor_file, "rank-2 tensor JSON file");
    cc->add_option("--family", family, "solution family: i | ii | iii");
    cc->add_option("--f-coeffs", f_coeffs,
                   "coefficients of f, constant term first (default \"1\")");
    cc->add_option("--alpha", alpha, "constant alpha (rational)");
    cc->add_option("--beta", beta, "constant beta (rational)");
    cc->add_option("--gamma", gamma, "constant gamma (rational)");
    cc->add_option("--scale", scale, "polynomial-part scale (rational)");
    cc->add_option("--check", checks, "comma list: skew,ccybe,weak,invariance");
    cc->add_flag("--to-rb", to_rb, "emit the induced weight-0 operator");
    cc->add_flag("--json", json_ccybe, "JSON output");
    cc->callback([&]() {
        cmd_ccybe(preset, file, tensor_file, family, f_coeffs, alpha, beta, gamma,
                  scale, checks, to_rb, json_ccybe);
    });

    auto* se = app.add_subcommand("search", "bounded lattice search for RB operators");
    se->add_option("--preset", preset, "conformal preset");
    se->add_option("--algebra", file, "algebra JSON file");
    se->add_option("--weight", weight_str, "weight (rational)")->required();
    se->add_option("--deg", deg, "max degree in d")->required();
    se->add_option("--coeffs", coeffs_str, "coefficient set, e.g. \"-1,0,1\"");
    se->add_option("--pattern", pattern_str,
                   "zero-pattern: R<gen>=0, R<gen>=diag, norm0, norm1");
    se->add_option("--max-candidates", max_candidates, "candidate cap")
        ->envname("CONFRB_MAX_CANDIDATES");
    se->add_flag("--json", json_search, "JSON output");
    se->callback([&]() {
        cmd_search(preset, file, weight_str, deg, coeffs_str, pattern_str,
                   max_candidates, json_search);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::cap ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
