/* Copyright (C) 2026 the lubin authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lubin/artin.hpp"
#include "lubin/coleman.hpp"
#include "lubin/ramification.hpp"
#include "lubin/series_json.hpp"
#include "lubin/verify.hpp"

using nlohmann::json;
using namespace lubin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 2;
constexpr int kExitUsage = 64;

struct RunConfig {
    std::string kind = "padic"; // or "power-series"
    unsigned p = 2;
    unsigned r = 1;
    unsigned n = 1;
    unsigned N = 12;
    unsigned D = 8;
    unsigned m = 2;
    std::string f_spec = "cyclotomic";
    std::uint64_t seed = 0;
    std::string output = "json";
    std::string x_literal;
    std::string g_spec = "1,1";
    std::string suite = "all";
    std::string input_path;
    long level = -1;

    void validate() const {
        require(is_prime(p), "p must be prime");
        require(p <= 13, "p <= 13");
        require(n >= 1 && n <= 3, "n in 1..3");
        require(m >= 1 && m <= 4, "m in 1..4");
        require(N >= 1 && N <= 64, "N in 1..64");
        require(D >= 1 && D <= 16, "D in 1..16");
        require(kind == "padic" || kind == "power-series", "kind: padic|power-series");
        if (kind == "padic") require(r == 1, "r = 1 for the p-adic kind");
        require(output == "json" || output == "tsv", "output: json|tsv");
    }

    BaseFieldConfig base_config() const {
        return BaseFieldConfig{
            kind == "padic" ? FieldKind::PAdic : FieldKind::PowerSeries, p, r, N};
    }
};

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open config file");
    json j = json::parse(in);
    if (j.contains("kind")) cfg.kind = j["kind"].get<std::string>();
    if (j.contains("p")) cfg.p = j["p"].get<unsigned>();
    if (j.contains("r")) cfg.r = j["r"].get<unsigned>();
    if (j.contains("n")) cfg.n = j["n"].get<unsigned>();
    if (j.contains("N")) cfg.N = j["N"].get<unsigned>();
    if (j.contains("D")) cfg.D = j["D"].get<unsigned>();
    if (j.contains("m")) cfg.m = j["m"].get<unsigned>();
    if (j.contains("f")) cfg.f_spec = j["f"].get<std::string>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("output")) cfg.output = j["output"].get<std::string>();
}

template <class B>
LTPolynomial<B> parse_f(const UnramifiedRing<B>* R, const std::string& spec) {
    if (spec == "cyclotomic") return LTPolynomial<B>::cyclotomic(R);
    if (spec == "canonical") return LTPolynomial<B>::canonical(R, R->pi());
    std::vector<long long> coeffs;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(std::stoll(tok));
    return LTPolynomial<B>::from_ints(R, coeffs);
}

json header_json(const RunConfig& cfg) {
    return json{{"kind", cfg.kind}, {"p", cfg.p},       {"n", cfg.n}, {"N", cfg.N},
                {"D", cfg.D},       {"seed", cfg.seed}, {"f", cfg.f_spec}};
}

template <class B>
int cmd_fgroup_impl(const RunConfig& cfg) {
    auto R = make_unramified<B>(cfg.base_config(), cfg.n, cfg.seed, cfg.D + 2);
    auto f = parse_f(R.get(), cfg.f_spec);
    auto fg = build_formal_group(f, cfg.D);
    json out = header_json(cfg);
    out["F"] = series_to_json(fg.F);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

template <class B>
int cmd_torsion_impl(const RunConfig& cfg) {
    unsigned q = cfg.base_config().q();
    unsigned e = (q - 1) * ipow(q, cfg.m - 1);
    auto R = make_unramified<B>(cfg.base_config(), cfg.n, cfg.seed, e * cfg.N + 2);
    auto f = parse_f(R.get(), cfg.f_spec);
    auto level = build_level(f, cfg.m);
    if (cfg.output == "json") {
        json out = header_json(cfg);
        out["m"] = cfg.m;
        json rows = json::array();
        for (std::uint64_t a = 0; a < level->point_count(); ++a) {
            auto v = level->ext().valuation(level->point(a));
            json coords = json::array();
            for (const auto& c : level->point(a).c) coords.push_back(R->to_string(c));
            rows.push_back({{"label", a},
                            {"coords", coords},
                            {"valuation", v ? json(*v) : json("inf")}});
        }
        out["points"] = rows;
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "# torsion table p=" << cfg.p << " n=" << cfg.n << " m=" << cfg.m
              << " f=" << cfg.f_spec << " seed=" << cfg.seed << "\n";
    std::cout << "# label\tcoords\tvaluation\n";
    for (std::uint64_t a = 0; a < level->point_count(); ++a) {
        auto v = level->ext().valuation(level->point(a));
        std::cout << a << "\t" << level->ext().to_string(level->point(a)) << "\t"
                  << (v ? std::to_string(*v) : "inf") << "\n";
    }
    return kExitOk;
}

template <class B>
int cmd_coleman_impl(const RunConfig& cfg) {
    auto R = make_unramified<B>(cfg.base_config(), cfg.n, cfg.seed, 8 * cfg.N);
    auto f = parse_f(R.get(), cfg.f_spec);
    std::vector<long long> gcoeffs;
    {
        std::stringstream ss(cfg.g_spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) gcoeffs.push_back(std::stoll(tok));
    }
    auto g = Poly<B>::from_ints(R.get(), gcoeffs);
    auto ctx = make_coleman_context(f, std::max<unsigned>(4, static_cast<unsigned>(g.degree())));
    auto ng = coleman_N(g, *ctx);
    auto useq = unit_norm_sequence(g, cfg.m, *ctx);
    json out = header_json(cfg);
    out["g"] = cfg.g_spec;
    for (const auto& c : ng.coeffs()) out["N_g"].push_back(R->to_string(c));
    for (const auto& u : useq) out["u_sequence"].push_back(R->to_string(u));
    // Congruence checks of the norm-operator lemmas at this fixture.
    bool cong1 = true;
    {
        auto diff = ng - g.frobenius(1);
        for (const auto& c : diff.coeffs()) cong1 = cong1 && R->is_zero(c, 1);
    }
    bool cong3 = true;
    for (unsigned i = 1; i < useq.size(); ++i) {
        auto diff = useq[i] - R->frobenius(useq[i - 1], 1);
        cong3 = cong3 && R->is_zero(diff, i);
    }
    out["congruences"] = {{"N_g_equals_g_phi_mod_pi", cong1},
                          {"u_m_over_u_m1_phi_in_1_plus_pi_m", cong3}};
    std::cout << out.dump(2) << "\n";
    return (cong1 && cong3) ? kExitOk : kExitInvariant;
}

template <class B>
json filtration_json(const GaloisPresentation<B>& pres,
                     const RamificationFiltration& filt) {
    json out;
    json itab = json::object();
    for (std::size_t i = 0; i < pres.size(); ++i)
        itab[pres.label(i)] =
            filt.i_table[i] ? json(*filt.i_table[i]) : json("inf");
    out["i_table"] = itab;
    out["jumps"] = filt.jumps;
    json breaks = json::array();
    for (const auto& [n, phi] : filt.phi_breaks())
        breaks.push_back({{"n", n},
                          {"phi_num", phi.numerator()},
                          {"phi_den", phi.denominator()}});
    out["phi_breaks"] = breaks;
    json upper = json::array();
    long mtop = rat_ceil(filt.phi(Rat(static_cast<long long>(filt.groups.size())))) + 1;
    for (long mm = 0; mm <= mtop; ++mm) {
        json labels = json::array();
        for (auto s : filt.upper(Rat(mm))) labels.push_back(pres.label(s));
        upper.push_back({{"m", mm}, {"G_upper", labels}});
    }
    out["upper"] = upper;
    try {
        auto haf = hasse_arf_check(pres, filt);
        out["hasse_arf"] = haf.pass ? "pass" : "fail";
        out["hasse_arf_pass"] = haf.pass;
    } catch (const std::exception& ex) {
        out["hasse_arf"] = std::string("skipped: ") + ex.what();
        out["hasse_arf_pass"] = false;
    }
    return out;
}

template <class B>
int cmd_ramify_impl(const RunConfig& cfg) {
    unsigned q = cfg.base_config().q();
    unsigned e = (q - 1) * ipow(q, cfg.m - 1);
    auto R = make_unramified<B>(cfg.base_config(), cfg.n, cfg.seed, e * cfg.N + cfg.m + 4);
    json out = header_json(cfg);
    if (!cfg.input_path.empty()) {
        // {ext: {g: [...]}, autos: [ [...], ... ]} with RingElement literals.
        std::ifstream in(cfg.input_path);
        require(static_cast<bool>(in), "cannot open ramify input");
        json spec = json::parse(in);
        std::vector<RingElem<B>> gcoeffs;
        for (const auto& lit : spec.at("ext").at("g"))
            gcoeffs.push_back(R->parse(lit.get<std::string>()));
        EisensteinExtension<B> ext(R.get(), Poly<B>(R.get(), std::move(gcoeffs)));
        std::vector<std::string> labels;
        std::vector<ExtElem<B>> images;
        unsigned idx = 0;
        for (const auto& image : spec.at("autos")) {
            std::vector<RingElem<B>> coords;
            for (const auto& lit : image) coords.push_back(R->parse(lit.get<std::string>()));
            images.push_back(ext.from_coords(std::move(coords)));
            labels.push_back(spec.contains("labels") ? spec["labels"][idx].get<std::string>()
                                                     : "sigma" + std::to_string(idx));
            ++idx;
        }
        GaloisPresentation<B> pres(&ext, std::move(labels), std::move(images));
        auto filt = lower_numbering(pres);
        out.update(filtration_json(pres, filt));
        std::cout << out.dump(2) << "\n";
        return out["hasse_arf_pass"].get<bool>() ? kExitOk : kExitInvariant;
    }
    auto f = parse_f(R.get(), cfg.f_spec);
    auto level = build_level(f, cfg.m);
    auto pres = GaloisPresentation<B>::from_torsion(*level);
    auto filt = lower_numbering(pres);
    out.update(filtration_json(pres, filt));
    std::cout << out.dump(2) << "\n";
    return out["hasse_arf_pass"].get<bool>() ? kExitOk : kExitInvariant;
}

template <class B>
int cmd_artin_impl(const RunConfig& cfg) {
    unsigned q = cfg.base_config().q();
    unsigned mm = cfg.level > 0 ? static_cast<unsigned>(cfg.level) : cfg.m;
    unsigned e = (q - 1) * ipow(q, mm - 1);
    auto R = make_unramified<B>(cfg.base_config(), cfg.n, cfg.seed, e * cfg.N + 4);
    auto f = parse_f(R.get(), cfg.f_spec);
    auto level = build_level(f, mm);
    require(!cfg.x_literal.empty(), "artin: --x required");
    auto x = R->parse_field(cfg.x_literal);
    auto desc = artin_apply(x, *level);
    json out = header_json(cfg);
    out["m"] = mm;
    out["x"] = cfg.x_literal;
    out["frobenius_exponent"] = desc.frobenius_exponent;
    out["twisted"] = desc.twisted;
    if (!desc.twisted) {
        json perm = json::array();
        for (const auto& [a, b] : desc.permutation)
            perm.push_back(json::array({a, b}));
        out["torsion_permutation"] = perm;
    } else {
        out["generator_image"] = level->ext().to_string(*desc.generator_image);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, bool p_given) {
    VerifyOptions opt;
    opt.seed = cfg.seed;
    if (p_given) opt.p_filter = cfg.p;
    auto results = run_suite(cfg.suite, opt);
    int fails = 0;
    double total_ms = 0;
    std::cout << "# verify suite=" << cfg.suite << " seed=" << cfg.seed;
    if (p_given) std::cout << " p=" << cfg.p;
    std::cout << "\n";
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.suite << "." << r.name << " ("
                  << static_cast<long>(r.ms) << " ms) " << r.detail << "\n";
        if (!r.pass) ++fails;
        total_ms += r.ms;
    }
    std::cout << "# " << results.size() << " checks, " << fails << " failures, "
              << static_cast<long>(total_ms) << " ms total\n";
    return fails == 0 ? kExitOk : kExitInvariant;
}

template <int (*PadicFn)(const RunConfig&), int (*LaurentFn)(const RunConfig&)>
int dispatch(const RunConfig& cfg) {
    if (cfg.kind == "padic") return PadicFn(cfg);
    return LaurentFn(cfg);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lubin-Tate formal groups, torsion towers, Coleman norms,\n"
                 "ramification filtrations and finite-level Artin maps in exact\n"
                 "finite-precision arithmetic."};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string config_path;
    // The config file provides defaults; explicitly given flags override it,
    // so it is applied before the regular parse.
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    if (!config_path.empty()) {
        try {
            apply_config_file(cfg, config_path);
        } catch (const std::exception& ex) {
            std::cerr << "usage error: " << ex.what() << "\n";
            return kExitUsage;
        }
    }
    std::string config_path_sink;
    app.add_option("--config", config_path_sink, "JSON config file (flags override)");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--kind", cfg.kind, "padic | power-series");
        sub->add_option("--p", cfg.p, "residue characteristic");
        sub->add_option("--r", cfg.r, "residue degree of the base (power-series kind)");
        sub->add_option("--n", cfg.n, "unramified degree of L over K");
        sub->add_option("--N", cfg.N, "pi-adic precision");
        sub->add_option("--D", cfg.D, "series degree cap");
        sub->add_option("--m", cfg.m, "torsion level");
        sub->add_option("--f", cfg.f_spec,
                        "LT polynomial: 'cyclotomic', 'canonical', or a full "
                        "coefficient list c0,c1,...,cq (low to high)");
        sub->add_option("--seed", cfg.seed, "seed for sampled checks");
        sub->add_option("--output", cfg.output, "json | tsv");
    };

    auto* fgroup = app.add_subcommand("fgroup", "construct and print the group law F_f");
    add_common(fgroup);
    auto* torsion = app.add_subcommand("torsion", "print the level-m torsion table (TSV)");
    add_common(torsion);
    auto* coleman = app.add_subcommand("coleman", "Coleman norm operator report");
    add_common(coleman);
    coleman->add_option("--g", cfg.g_spec, "input polynomial coefficients c0,c1,...");
    auto* ramify = app.add_subcommand("ramify", "ramification filtration report");
    add_common(ramify);
    ramify->add_option("--input", cfg.input_path,
                       "JSON presentation {ext:{g:[...]}, autos:[[...],...]}");
    auto* artin = app.add_subcommand("artin", "finite-level Artin action");
    add_common(artin);
    std::string artin_action = "act";
    artin->add_option("action", artin_action, "action (only 'act')");
    artin->add_option("--x", cfg.x_literal, "field element literal, e.g. '5' or '[5]*2^1'");
    artin->add_option("--level", cfg.level, "torsion level (alias for --m)");
    auto* verify = app.add_subcommand("verify", "run named invariant suites");
    add_common(verify);
    verify->add_option("--suite", cfg.suite, "axioms|module-law|torsion|coleman|norms|"
                                             "ramification|artin|relative|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        cfg.validate();
        if (fgroup->parsed())
            return dispatch<cmd_fgroup_impl<PadicBase>, cmd_fgroup_impl<LaurentBase>>(cfg);
        if (torsion->parsed()) {
            // the table is TSV by default (spec format); --output json opts in
            auto* oopt = torsion->get_option_no_throw("--output");
            if (oopt == nullptr || oopt->count() == 0) cfg.output = "tsv";
            return dispatch<cmd_torsion_impl<PadicBase>, cmd_torsion_impl<LaurentBase>>(cfg);
        }
        if (coleman->parsed())
            return dispatch<cmd_coleman_impl<PadicBase>, cmd_coleman_impl<LaurentBase>>(cfg);
        if (ramify->parsed())
            return dispatch<cmd_ramify_impl<PadicBase>, cmd_ramify_impl<LaurentBase>>(cfg);
        if (artin->parsed()) {
            require(artin_action == "act", "artin: unknown action");
            return dispatch<cmd_artin_impl<PadicBase>, cmd_artin_impl<LaurentBase>>(cfg);
        }
        if (verify->parsed()) {
            require(is_suite(cfg.suite), "unknown suite");
            bool p_given = verify->get_option_no_throw("--p") != nullptr &&
                           verify->get_option_no_throw("--p")->count() > 0;
            return cmd_verify(cfg, p_given);
        }
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const InvalidArgument& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const Error& ex) {
        std::cerr << "invariant failure: " << ex.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInvariant;
    }
}
