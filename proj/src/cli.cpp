#include "meshforge/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "meshforge/ade.hpp"
#include "meshforge/homology.hpp"
#include "meshforge/koszul.hpp"
#include "meshforge/verify.hpp"

namespace meshforge {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void emit(const std::string& out_dir, const std::string& filename, const std::string& content,
          std::string& out) {
    if (out_dir.empty()) {
        out += content;
        return;
    }
    std::filesystem::create_directories(out_dir);
    std::ofstream f(std::filesystem::path(out_dir) / filename);
    f << content;
}

struct Options {
    std::string family;
    int index = 0;
    int dim = 0;
    std::string in_file;
    std::string format = "json";
    int trunc = 16;
    int words = 12;
    bool trunc_set = false;
    bool words_set = false;
    std::string out_dir;
    std::string config;
    bool h0_flag = false;
};

TranslationQuiver load_quiver(const Options& o) {
    if (!o.in_file.empty()) return parse_quiver(read_file(o.in_file));
    if (o.family.empty()) throw Error("need --family/--index/--dim or --in FILE");
    if (o.family.size() != 1) throw InvalidDynkinIndex("family must be one of A, D, E");
    return ade_translation_quiver(o.family[0], o.index, o.dim);
}

std::string ext_table_json(const ExtTable& t) {
    json jp = json::object();
    for (const auto& [i, j] : t.pi) jp[i] = j;
    json jd = json::array();
    for (const auto& [key, dim] : t.dims) {
        auto [l, i, j] = key;
        jd.push_back({{"l", l}, {"i", i}, {"j", j}, {"dim", dim}});
    }
    return json{{"d", t.d}, {"pi", jp}, {"dims", jd}}.dump(2) + "\n";
}

int cmd_gen(const Options& o, std::string& out) {
    TranslationQuiver tq = load_quiver(o);
    std::string name = o.in_file.empty()
                           ? "gen_" + o.family + std::to_string(o.index) + "_d" + std::to_string(o.dim)
                           : "gen";
    emit(o.out_dir, name + "." + o.format, export_translation_quiver(tq, o.format), out);
    return 0;
}

int cmd_dg(const Options& o, std::string& out) {
    TranslationQuiver tq = load_quiver(o);
    DgPresentation dg = dg_auslander(tq, o.trunc);
    json rep;
    rep["d_squared"] = check_d_squared(dg);
    if (o.h0_flag) {
        FinDimAlgebra h = h0(dg, o.trunc);
        rep["h0"] = {{"dim", h.dim()}, {"stabilized", h.stabilized}, {"L_used", h.L_used}};
        json jb = json::object();
        for (const auto& [k, v] : h.block_dims()) jb[k.first + "->" + k.second] = v;
        rep["h0"]["block_dims"] = jb;
    }
    rep["presentation"] = json::parse(dg.to_json());
    emit(o.out_dir, "dg.json", rep.dump(2) + "\n", out);
    return rep["d_squared"].get<bool>() ? 0 : 1;
}

int cmd_ext(const Options& o, std::string& out) {
    TranslationQuiver tq = load_quiver(o);
    AuslanderPresentation ap = auslander_presentation(tq);
    ExtTable t = ext_table(ap);
    json rep = json::parse(ext_table_json(t));
    json jr = json::object();
    for (const auto& i : t.vertices) {
        Resolution r = mesh_resolution(ap, i);
        json steps = json::array();
        for (const auto& step : r.steps) {
            json terms = json::array();
            for (const auto& [p, mult] : step) terms.push_back({{"projective", p}, {"mult", mult}});
            steps.push_back(terms);
        }
        jr[i] = steps;
    }
    rep["resolutions"] = jr;
    emit(o.out_dir, "ext.json", rep.dump(2) + "\n", out);
    return 0;
}

int cmd_cy(const Options& o, std::string& out) {
    TranslationQuiver tq = load_quiver(o);
    ExtTable t = ext_table(auslander_presentation(tq));
    bool ok = cy_duality_check(t);
    json jf = json::object();
    for (const auto& v : tq.quiver.vertices) {
        if (v.projective) continue;
        auto [num, den] = cy_fraction(tq, v.id, t.d);
        jf[v.id] = std::to_string(num) + "/" + std::to_string(den);
    }
    json rep{{"duality", ok}, {"fractions", jf}};
    emit(o.out_dir, "cy.json", rep.dump(2) + "\n", out);
    return ok ? 0 : 1;
}

int cmd_koszul(const Options& o, std::string& out) {
    if (o.in_file.empty()) throw Error("koszul needs --in ALGEBRA.json");
    std::string text = read_file(o.in_file);
    AugmentedDgAlgebra a;
    try {
        a = AugmentedDgAlgebra::from_json(text);
    } catch (const Error&) {
        a = augment(FinDimAlgebra::from_json(text));
    }
    KoszulPresentation e = koszul_dual(a, o.words);
    int hi = std::min(4, o.words - 1);
    KoszulCohomology kos = koszul_cohomology(e, 0, hi);
    json jd = json::array();
    for (const auto& [key, dim] : kos.dims) {
        auto [n, i, j] = key;
        jd.push_back({{"n", n}, {"i", i}, {"j", j}, {"dim", dim}});
    }
    json jt = json::object(), js = json::object();
    for (const auto& [n, v] : kos.totals) jt[std::to_string(n)] = v;
    for (const auto& [n, v] : kos.stabilized) js[std::to_string(n)] = v;
    json rep{{"W", o.words}, {"dims", jd}, {"totals", jt}, {"stabilized", js},
             {"d_squared", koszul_d_squared(a, std::min(o.words, 6))}};
    emit(o.out_dir, "koszul.json", rep.dump(2) + "\n", out);
    return 0;
}

int cmd_verify(const Options& o, std::string& out) {
    SuiteConfig cfg;
    std::string config_path = o.config;
    if (config_path.empty())
        if (const char* env = std::getenv("MESHFORGE_CONFIG")) config_path = env;
    if (!config_path.empty()) cfg = config_from_file(config_path);
    if (o.trunc_set) cfg.L_max = o.trunc;
    if (o.words_set) cfg.W_max = o.words;
    if (!o.out_dir.empty()) cfg.out_dir = o.out_dir;

    SuiteReport rep = verify_suite(cfg);
    std::ostringstream lines;
    auto agg = rep.per_criterion();
    for (const auto& [crit, counts] : agg)
        lines << "criterion " << crit << ": " << (counts.first == counts.second ? "PASS" : "FAIL")
              << " (" << counts.first << "/" << counts.second << ")\n";
    lines << (rep.all_pass() ? "all criteria passed\n" : "FAILURES present\n");
    out += lines.str();
    emit(cfg.out_dir, "report.json", rep.to_json(), out);
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::string& out, std::string& err) {
    CLI::App app{"mesh algebra toolkit: translation quivers, dg Auslander algebras, Ext tables"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "Dynkin family: A, D or E");
        sub->add_option("--index", o.index, "Dynkin index");
        sub->add_option("--dim", o.dim, "Krull dimension (parity is what matters)");
        sub->add_option("--in", o.in_file, "input file");
        sub->add_option("--format", o.format, "json|dot|tikz")
            ->check(CLI::IsMember({"json", "dot", "tikz"}));
        sub->add_option("--trunc", o.trunc, "truncation bound L")
            ->each([&o](const std::string&) { o.trunc_set = true; });
        sub->add_option("--words", o.words, "tensor word bound W")
            ->each([&o](const std::string&) { o.words_set = true; });
        sub->add_option("--out", o.out_dir, "output directory (default: stdout)");
        sub->add_option("--config", o.config, "suite config file (key=value)");
    };
    CLI::App* gen = app.add_subcommand("gen", "generate an ADE translation quiver");
    CLI::App* dg = app.add_subcommand("dg", "build the dg Auslander presentation");
    dg->add_flag("--h0", o.h0_flag, "also compute H^0 dimensions");
    CLI::App* ext = app.add_subcommand("ext", "Ext table of a full fixture");
    CLI::App* cy = app.add_subcommand("cy", "Calabi-Yau duality check and fractions");
    CLI::App* koszul = app.add_subcommand("koszul", "Koszul dual and its cohomology");
    CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
    for (CLI::App* sub : {gen, dg, ext, cy, koszul, verify}) add_common(sub);

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        std::ostringstream s;
        if (e.get_exit_code() == 0) {
            app.exit(e, s, s);
            out += s.str();
            return 0;  // --help
        }
        app.exit(e, s, s);
        err += s.str();
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(o, out);
        if (dg->parsed()) return cmd_dg(o, out);
        if (ext->parsed()) return cmd_ext(o, out);
        if (cy->parsed()) return cmd_cy(o, out);
        if (koszul->parsed()) return cmd_koszul(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
    } catch (const InvalidDynkinIndex& e) {
        err += std::string(e.what()) + "\n";
        return 2;
    } catch (const UnsupportedFormat& e) {
        err += std::string(e.what()) + "\n";
        return 2;
    } catch (const SyntaxError& e) {
        err += std::string(e.what()) + "\n";
        return 2;
    } catch (const Error& e) {
        err += std::string(e.what()) + "\n";
        return 2;
    } catch (const std::exception& e) {
        err += std::string(e.what()) + "\n";
        return 1;
    }
    return 2;
}

int run_command(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string out, err;
    int code = run_command(args, out, err);
    std::cout << out;
    std::cerr << err;
    return code;
}

}  // namespace meshforge
