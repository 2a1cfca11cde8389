#include "meshforge/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "meshforge/ade.hpp"
#include "meshforge/complexes.hpp"
#include "meshforge/homology.hpp"
#include "meshforge/koszul.hpp"
#include "meshforge/quotient.hpp"

namespace meshforge {

using nlohmann::json;

void SuiteConfig::check() const {
    if (L_max < 2 || W_max < 2 || window < 1 || parallelism < 1)
        throw Error("suite bounds must be positive");
    if (a_max < 1 || a_max > 64 || d_max < 4 || d_max > 64)
        throw Error("index ranges outside the supported Dynkin ranges");
    for (char f : families)
        if (f != 'A' && f != 'D' && f != 'E') throw Error(std::string("unknown family '") + f + "'");
}

SuiteConfig config_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config '" + path + "'");
    SuiteConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "families") cfg.families = val;
        else if (key == "a_max") cfg.a_max = std::stoi(val);
        else if (key == "d_max") cfg.d_max = std::stoi(val);
        else if (key == "L_max") cfg.L_max = std::stoi(val);
        else if (key == "W_max") cfg.W_max = std::stoi(val);
        else if (key == "window") cfg.window = std::stoi(val);
        else if (key == "parallelism") cfg.parallelism = std::stoi(val);
        else if (key == "out_dir") cfg.out_dir = val;
        else throw Error("unknown config key '" + key + "'");
    }
    return cfg;
}

bool SuiteReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::map<int, std::pair<int, int>> SuiteReport::per_criterion() const {
    std::map<int, std::pair<int, int>> agg;
    for (const auto& c : checks) {
        int crit = std::stoi(c.check.substr(0, c.check.find('.')));
        agg[crit].second++;
        if (c.pass) agg[crit].first++;
    }
    return agg;
}

std::string SuiteReport::to_json(bool with_timings) const {
    json jc = json::array();
    for (const auto& c : checks)
        jc.push_back({{"check", c.check},
                      {"status", c.pass ? "pass" : "fail"},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"L_used", c.L_used}});
    json j{{"checks", jc}, {"all_pass", all_pass()}};
    if (with_timings) {
        json jt = json::object();
        for (const auto& [k, v] : timings_ms) jt[k] = v;
        j["timings_ms"] = jt;
    }
    return j.dump(2) + "\n";
}

namespace {

struct Ctx {
    const SuiteConfig& cfg;
    std::vector<CheckResult> out;

    void add(const std::string& check, const std::string& expected, const std::string& actual,
             int L_used = 0) {
        out.push_back({check, expected == actual, expected, actual, L_used});
    }
    void add_bool(const std::string& check, bool pass, const std::string& note = "") {
        out.push_back({check, pass, "true", pass ? "true" : ("false " + note), 0});
    }
};

std::vector<std::tuple<char, int>> family_indices(const SuiteConfig& cfg) {
    std::vector<std::tuple<char, int>> out;
    if (cfg.families.find('A') != std::string::npos)
        for (int n = 1; n <= cfg.a_max; ++n) out.push_back({'A', n});
    if (cfg.families.find('D') != std::string::npos)
        for (int n = 4; n <= cfg.d_max; ++n) out.push_back({'D', n});
    if (cfg.families.find('E') != std::string::npos)
        for (int n = 6; n <= 8; ++n) out.push_back({'E', n});
    return out;
}

std::string fmt_pair(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string fmt_block_dims(const std::map<std::pair<std::string, std::string>, int>& dims) {
    std::ostringstream s;
    for (const auto& [k, v] : dims) s << k.first << "->" << k.second << ":" << v << ";";
    return s.str();
}

std::vector<std::pair<std::string, TranslationQuiver>> full_fixtures() {
    return {{"a1_dim0", full_fixture_a1_dim0()},
            {"conifold", full_fixture_conifold()},
            {"a2_dim0", full_fixture_a_dim0(2)}};
}

// --- criterion 1: generator structure -----------------------------------

void crit1(Ctx& c) {
    for (auto [fam, n] : family_indices(c.cfg)) {
        for (int dim : {2, 1}) {
            std::string tag = std::string("1.generators/") + fam + std::to_string(n) +
                              (dim % 2 == 0 ? ".even" : ".odd");
            TranslationQuiver tq = ade_translation_quiver(fam, n, dim);
            ValidationReport rep = validate_translation_quiver(tq);
            if (!rep.ok) {
                c.add_bool(tag, false, "validation: " + rep.violations.front().rule);
                continue;
            }
            auto [ev, ea] = ade_expected_counts(fam, n, dim);
            int solid = 0;
            for (const auto& a : tq.quiver.arrows)
                if (a.degree == 0) ++solid;
            if (fmt_pair(ev, ea) != fmt_pair(static_cast<int>(tq.quiver.vertices.size()), solid)) {
                c.add(tag, fmt_pair(ev, ea),
                      fmt_pair(static_cast<int>(tq.quiver.vertices.size()), solid));
                continue;
            }
            DgPresentation dg = dg_auslander(tq, 20);
            bool dg_ok = true;
            std::string note;
            for (const auto& v : tq.quiver.vertices) {
                int count = 0;
                std::string tgt;
                for (const auto& a : dg.quiver->arrows)
                    if (a.degree == -1 && a.src == v.id) {
                        ++count;
                        tgt = a.tgt;
                    }
                if (count != 1 || tgt != *tq.tau_inv(v.id)) {
                    dg_ok = false;
                    note = "rho at " + v.id;
                }
            }
            if (dg_ok && !check_d_squared(dg)) {
                dg_ok = false;
                note = "d^2 != 0";
            }
            c.add_bool(tag, dg_ok, note);
        }
    }
}

// --- criterion 2: Knoerrer parity ----------------------------------------

void crit2(Ctx& c) {
    for (auto [fam, n] : family_indices(c.cfg)) {
        bool ok = true;
        std::string note;
        for (int d = 0; d <= 3 && ok; ++d) {
            TranslationQuiver x = canonical_form(ade_translation_quiver(fam, n, d));
            TranslationQuiver y = canonical_form(ade_translation_quiver(fam, n, d + 2));
            if (!(x == y)) {
                ok = false;
                note = "d=" + std::to_string(d);
            }
        }
        c.add_bool(std::string("2.knoerrer/") + fam + std::to_string(n), ok, note);
    }
}

// --- criterion 3: H^0 dimensions ------------------------------------------

void crit3(Ctx& c) {
    for (int n = 1; n <= 6; ++n) {
        int expect = n * (n + 1) * (n + 2) / 6;
        FinDimAlgebra h = h0(dg_auslander(ade_translation_quiver('A', n, 2), c.cfg.L_max),
                             c.cfg.L_max, c.cfg.window);
        std::string actual = h.stabilized ? std::to_string(h.dim()) : "not stabilized";
        c.add("3.h0-dims/evenA" + std::to_string(n), std::to_string(expect), actual, h.L_used);
    }
    FinDimAlgebra odd1 = h0(dg_auslander(ade_translation_quiver('A', 1, 1), c.cfg.L_max),
                            c.cfg.L_max, c.cfg.window);
    c.add("3.h0-dims/oddA1", "2", std::to_string(odd1.dim()), odd1.L_used);
}

// --- criterion 4: bridge identity -----------------------------------------

void crit4(Ctx& c) {
    std::map<std::string, int> expected_total{{"a1_dim0", 1}, {"conifold", 2}, {"a2_dim0", 4}};
    for (const auto& [name, tq] : full_fixtures()) {
        AuslanderPresentation ap = auslander_presentation(tq);
        FinDimAlgebra stab = stable_algebra(ap, c.cfg.L_max);
        FinDimAlgebra viah0 = h0(dg_auslander(tq.stable_part(), c.cfg.L_max), c.cfg.L_max, c.cfg.window);
        std::string lhs = fmt_block_dims(stab.block_dims()) + "|" + std::to_string(stab.dim());
        std::string rhs = fmt_block_dims(viah0.block_dims()) + "|" + std::to_string(viah0.dim());
        c.add("4.bridge/" + name + "/blocks", lhs, rhs, stab.L_used);
        c.add("4.bridge/" + name + "/total", std::to_string(expected_total.at(name)),
              std::to_string(stab.dim()), stab.L_used);
    }
}

// --- criterion 5: fractional CY -------------------------------------------

void crit5(Ctx& c) {
    for (auto [fam, n] : family_indices(c.cfg)) {
        for (int dim : {2, 1}) {
            std::string tag = std::string("5.cy/") + fam + std::to_string(n) +
                              (dim % 2 == 0 ? ".even" : ".odd");
            TranslationQuiver tq = ade_translation_quiver(fam, n, dim);
            AuslanderPresentation ap = auslander_presentation(tq);
            bool ok = cy_duality_check(ext_table(ap));
            if (ok && dim % 2 == 0)
                for (const auto& v : tq.quiver.vertices)
                    if (cy_fraction(tq, v.id, 1) != std::make_pair(2, 1)) ok = false;
            if (ok && fam == 'A' && n == 1 && dim % 2 == 1)
                for (const auto& v : tq.quiver.vertices)
                    if (cy_fraction(tq, v.id, 1) != std::make_pair(4, 2)) ok = false;
            c.add_bool(tag, ok);
        }
    }
    for (const auto& [name, tq] : full_fixtures())
        c.add_bool("5.cy/" + name, cy_duality_check(ext_table(auslander_presentation(tq))));
}

// --- criterion 6: dg Auslander vs Ext table --------------------------------

void crit6(Ctx& c) {
    std::vector<std::pair<std::string, TranslationQuiver>> fixtures = {
        {"a1_dim0", full_fixture_a1_dim0()},
        {"conifold", full_fixture_conifold()},
        {"a2_dim0", full_fixture_a_dim0(2)},
        {"a3_dim0", full_fixture_a_dim0(3)},
        {"a4_dim0", full_fixture_a_dim0(4)}};
    for (const auto& [name, tq] : fixtures) {
        ExtTable t = ext_table(auslander_presentation(tq));
        DgPresentation dg = dg_auslander(tq.stable_part(), 8);
        bool ok = true;
        std::string note;
        for (const auto& i : t.vertices)
            for (const auto& j : t.vertices) {
                int deg0 = 0, deg1 = 0;
                for (const auto& a : dg.quiver->arrows) {
                    if (a.src != i || a.tgt != j) continue;
                    if (a.degree == 0) ++deg0;
                    if (a.degree == -1) ++deg1;
                }
                if (deg0 != t.dim(1, i, j) || deg1 != t.dim(2, i, j)) {
                    ok = false;
                    note = i + "->" + j;
                }
            }
        c.add_bool("6.dg-ext/" + name, ok, note);
    }
}

// --- criterion 7: minimal relations ----------------------------------------

void crit7(Ctx& c) {
    for (int n = 2; n <= 5; ++n) {
        TranslationQuiver tq = ade_translation_quiver('A', n, 2);
        AuslanderPresentation ap = auslander_presentation(tq);
        bool ok = true;
        std::string note;
        for (int L : {6, 8}) {
            for (const auto& vi : tq.quiver.vertices)
                for (const auto& vj : tq.quiver.vertices) {
                    MinimalityReport r =
                        minimal_relations_defect(ap.quiver, ap.relations, vi.id, vj.id, L);
                    if (r.count != r.dim) {
                        ok = false;
                        note = "block (" + vi.id + "," + vj.id + ") L=" + std::to_string(L);
                    }
                }
        }
        c.add_bool("7.minimal/evenA" + std::to_string(n) + "/count-eq-dim", ok, note);

        // dropping any relation with a nonempty mesh strictly enlarges the quotient
        FinDimAlgebra full = quotient_algebra(ap.quiver, ap.relations, c.cfg.L_max, c.cfg.window);
        int L_fix = full.L_used + 2;
        FinDimAlgebra full_at = quotient_algebra(ap.quiver, ap.relations, L_fix, 1000);
        bool grow_ok = true;
        std::string gnote;
        for (size_t k = 0; k < ap.relations.relations.size(); ++k) {
            RelationSet dropped;
            for (size_t t = 0; t < ap.relations.relations.size(); ++t)
                if (t != k) dropped.relations.push_back(ap.relations.relations[t]);
            FinDimAlgebra part = quotient_algebra(ap.quiver, dropped, L_fix, 1000);
            if (part.dim() <= full_at.dim()) {
                grow_ok = false;
                gnote = "dropping " + ap.relations.relations[k].id;
            }
        }
        c.add_bool("7.minimal/evenA" + std::to_string(n) + "/drop-grows", grow_ok, gnote);
    }
}

// --- criterion 8: gamma independence ---------------------------------------

void run_gamma(Ctx& c, const std::string& name, const DgPresentation& dg,
               const std::vector<std::vector<GammaPerturbation>>& specs, int L_h0, int L_win) {
    FinDimAlgebra base_h0 = h0(dg, L_h0);
    auto base_win = dg_cohomology_dims(dg, -2, 0, L_win);
    for (size_t s = 0; s < specs.size(); ++s) {
        DgPresentation pert = perturb_gamma(dg, specs[s]);
        FinDimAlgebra p_h0 = h0(pert, L_h0);
        bool ok = p_h0.block_dims() == base_h0.block_dims();
        std::string note = ok ? "" : "h0 blocks";
        if (ok) {
            auto p_win = dg_cohomology_dims(pert, -2, 0, L_win);
            for (int g = -2; g <= 0; ++g)
                if (p_win[g].dim != base_win[g].dim) {
                    ok = false;
                    note = "H^" + std::to_string(g);
                }
        }
        c.add_bool("8.gamma/" + name + "/spec" + std::to_string(s), ok, note);
    }
}

void crit8(Ctx& c) {
    DgPresentation a3 = dg_auslander(ade_translation_quiver('A', 3, 2), 12);
    run_gamma(c, "evenA3", a3, gamma_specs_even_a3(a3), 12, 7);
    DgPresentation a5 = dg_auslander(ade_translation_quiver('A', 5, 1), 12);
    run_gamma(c, "oddA5", a5, gamma_specs_odd_a5(a5), 12, 7);
}

// --- criterion 9: Koszul cross-oracle --------------------------------------

std::vector<std::pair<std::string, FinDimAlgebra>> koszul_fixture_algebras(const SuiteConfig& cfg) {
    std::vector<std::pair<std::string, FinDimAlgebra>> out;
    {
        auto q = std::make_shared<GradedQuiver>();
        q->vertices = {{"1", false}, {"2", false}};
        out.push_back({"kxk", quotient_algebra(q, {}, 4)});
    }
    {
        auto q = std::make_shared<GradedQuiver>();
        q->vertices = {{"1", false}};
        q->arrows = {{"x", "x", "1", "1", 0}};
        RelationSet r;
        r.relations.push_back({"x2", parse_element(q, 6, "x x")});
        out.push_back({"dual-numbers", quotient_algebra(q, r, 6)});
    }
    out.push_back({"stable-a1_dim0", stable_algebra(auslander_presentation(full_fixture_a1_dim0()), cfg.L_max)});
    out.push_back({"stable-conifold", stable_algebra(auslander_presentation(full_fixture_conifold()), cfg.L_max)});
    out.push_back({"stable-a2_dim0", stable_algebra(auslander_presentation(full_fixture_a_dim0(2)), cfg.L_max)});
    out.push_back({"stable-a3_dim0", stable_algebra(auslander_presentation(full_fixture_a_dim0(3)), cfg.L_max)});
    return out;
}

void crit9(Ctx& c) {
    for (const auto& [name, alg] : koszul_fixture_algebras(c.cfg)) {
        KoszulPresentation e = koszul_dual(augment(alg), c.cfg.W_max);
        KoszulCohomology kos = koszul_cohomology(e, 0, 4);
        bool ok = true;
        std::string note;
        for (const auto& i : alg.vertex_ids) {
            ResolutionOverAlgebra res = min_proj_resolution(alg, i, 4);
            for (int l = 0; l <= 4 && ok; ++l)
                for (const auto& j : alg.vertex_ids)
                    if (kos.dim(l, i, j) != res.ext_dim(l, i, j)) {
                        ok = false;
                        note = "Ext^" + std::to_string(l) + "(" + i + "," + j + ")";
                    }
        }
        c.add_bool("9.koszul/" + name + "/vs-resolution", ok, note);
    }

    // degree-2 agreement with the minimal-relation blocks over the stable algebras
    for (const auto& [name, tq] :
         std::vector<std::pair<std::string, TranslationQuiver>>{{"a2", ade_translation_quiver('A', 2, 2)},
                                                                {"a3", ade_translation_quiver('A', 3, 2)}}) {
        AuslanderPresentation ap = auslander_presentation(tq);
        FinDimAlgebra alg = quotient_algebra(ap.quiver, ap.relations, c.cfg.L_max, c.cfg.window);
        KoszulCohomology kos = koszul_cohomology(koszul_dual(augment(alg), c.cfg.W_max), 0, 2);
        bool ok = true;
        std::string note;
        for (const auto& i : alg.vertex_ids)
            for (const auto& j : alg.vertex_ids) {
                // Ext^2(S_i, S_j) counts relations from i to j, the (j, i)
                // minimal-relation block.
                MinimalityReport r = minimal_relations_defect(ap.quiver, ap.relations, j, i, 8);
                if (kos.dim(2, i, j) != r.dim) {
                    ok = false;
                    note = "(" + i + "," + j + ")";
                }
            }
        c.add_bool("9.koszul/stable-" + name + "/vs-minimal-relations", ok, note);
    }
}

// --- criterion 10: truncation laws -----------------------------------------

struct RandomComplexData {
    Complex complex;
    std::map<int, int> expected_h;
};

RandomComplexData random_complex(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(-4, 3), small(0, 2);
    RandomComplexData out;
    std::map<int, int> dims;
    std::map<int, std::vector<std::pair<int, int>>> unit_diag;  // j -> (col in C^j, row in C^{j+1})
    for (int piece = 0, n = 3 + small(rng); piece < n; ++piece) {
        int j = deg(rng);
        if (small(rng) == 0) {
            dims[j] += 1;
            out.expected_h[j] += 1;
        } else {
            // exact pair k -> k in degrees (j, j+1)
            unit_diag[j].push_back({dims[j], dims[j + 1]});
            dims[j] += 1;
            dims[j + 1] += 1;
        }
    }
    for (const auto& [j, d] : dims)
        if (d > 5) return random_complex(rng);  // keep the promised size bound

    for (const auto& [j, d] : dims)
        if (d > 0) out.complex.components[j] = d;
    for (const auto& [j, d] : dims) {
        if (dims.count(j + 1) == 0) continue;
        RatMatrix m(dims[j + 1], dims[j]);
        if (unit_diag.count(j))
            for (auto [col, row] : unit_diag[j]) m.at(row, col) = 1;
        out.complex.differentials[j] = std::move(m);
    }
    // Conjugate by unitriangular base changes to hide the unit blocks;
    // (I + N)^{-1} = I - N + N^2 - ... for strictly upper N.
    std::uniform_int_distribution<int> coef(-2, 2);
    std::map<int, RatMatrix> base, base_inv;
    for (const auto& [j, d] : out.complex.components) {
        RatMatrix n(d, d);
        for (int r = 0; r < d; ++r)
            for (int cc = r + 1; cc < d; ++cc) n.at(r, cc) = coef(rng);
        RatMatrix u = RatMatrix::identity(d);
        for (int r = 0; r < d; ++r)
            for (int cc = 0; cc < d; ++cc) u.at(r, cc) += n.at(r, cc);
        RatMatrix inv = RatMatrix::identity(d), pow = RatMatrix::identity(d);
        Rat sign = -1;
        for (int k = 1; k < d; ++k) {
            pow = pow.multiply(n);
            for (int r = 0; r < d; ++r)
                for (int cc = 0; cc < d; ++cc) inv.at(r, cc) += sign * pow.at(r, cc);
            sign = -sign;
        }
        base[j] = std::move(u);
        base_inv[j] = std::move(inv);
    }
    for (auto& [j, m] : out.complex.differentials) {
        if (out.complex.dim_at(j) == 0 || out.complex.dim_at(j + 1) == 0) continue;
        m = base[j + 1].multiply(m).multiply(base_inv[j]);
    }
    return out;
}

void crit10(Ctx& c) {
    std::mt19937 rng(20240811);
    bool all_ok = true;
    std::string note;
    for (int trial = 0; trial < 100 && all_ok; ++trial) {
        RandomComplexData data = random_complex(rng);
        const Complex& m = data.complex;
        std::map<int, int> h = cohomology_dims(m);
        std::map<int, int> expected;
        for (const auto& [j, d] : data.expected_h)
            if (d != 0) expected[j] = d;
        if (h != expected) {
            all_ok = false;
            note = "construction oracle, trial " + std::to_string(trial);
            break;
        }
        for (int i = -5; i <= 5; ++i) {
            Complex leq = std_truncate(m, i, StdSide::leq);
            Complex gt = std_truncate(m, i, StdSide::gt);
            leq.check();
            gt.check();
            std::map<int, int> h_leq = cohomology_dims(leq), h_gt = cohomology_dims(gt);
            for (int j = -6; j <= 6; ++j) {
                int want_leq = (j <= i && expected.count(j)) ? expected[j] : 0;
                int want_gt = (j > i && expected.count(j)) ? expected[j] : 0;
                int got_leq = h_leq.count(j) ? h_leq[j] : 0;
                int got_gt = h_gt.count(j) ? h_gt[j] : 0;
                if (got_leq != want_leq || got_gt != want_gt) {
                    all_ok = false;
                    note = "std truncation at i=" + std::to_string(i) + " j=" + std::to_string(j);
                }
            }
            Complex bgeq = brutal_truncate(m, i, BrutalSide::geq);
            Complex bleq = brutal_truncate(m, i - 1, BrutalSide::leq);
            bgeq.check();
            bleq.check();
            for (int j = -6; j <= 6; ++j)
                if (bgeq.dim_at(j) + bleq.dim_at(j) != m.dim_at(j)) {
                    all_ok = false;
                    note = "brutal additivity at i=" + std::to_string(i);
                }
            if (!all_ok) break;
        }
    }
    c.add_bool("10.truncations/100-random", all_ok, note);
}

// --- criterion 11: K0 rank --------------------------------------------------

void crit11(Ctx& c) {
    std::map<std::string, int> expected{{"a1_dim0", 1}, {"conifold", 2}, {"a2_dim0", 2}};
    for (const auto& [name, tq] : full_fixtures()) {
        AuslanderPresentation ap = auslander_presentation(tq);
        c.add("11.k0/" + name, std::to_string(expected.at(name)), std::to_string(k0_rank(ap)));
    }
}

}  // namespace

std::vector<std::vector<GammaPerturbation>> gamma_specs_even_a3(const DgPresentation& dg) {
    QuiverPtr q = dg.quiver;
    int L = dg.bound;
    auto el = [&](const std::string& text) { return parse_element(q, L, text); };
    std::vector<std::vector<GammaPerturbation>> specs;
    specs.push_back({{"1", 2, {}}, {"2", rat(1, 3), {}}, {"3", -1, {}}});
    specs.push_back({{"2", 1, {{el("a2*"), "3", el("a2")}}}});
    specs.push_back({{"2", 1, {{el("a1"), "1", el("a1*")}}}});
    specs.push_back({{"1", -2, {{el("a1*"), "2", el("a1")}}}});
    specs.push_back({{"3", rat(5, 2), {{el("a2"), "2", el("a2*")}}},
                     {"2", 1, {{el("a1 a1*"), "2", el("e(2)")}}}});
    return specs;
}

std::vector<std::vector<GammaPerturbation>> gamma_specs_odd_a5(const DgPresentation& dg) {
    QuiverPtr q = dg.quiver;
    int L = dg.bound;
    auto el = [&](const std::string& text) { return parse_element(q, L, text); };
    std::vector<std::vector<GammaPerturbation>> specs;
    specs.push_back({{"1", 3, {}}, {"3", rat(-1, 2), {}}});
    specs.push_back({{"1", 1, {{el("a2*"), "3", el("a1")}}}});
    specs.push_back({{"2", 2, {{el("a1*"), "3", el("a2")}}}});
    specs.push_back({{"3", 1, {{el("a3*"), "4", el("a3")}}}});
    specs.push_back({{"4", 1, {{el("a3"), "3", el("a3*")}}},
                     {"1", 1, {{el("a2* a3*"), "4", el("a3 a1")}}}});
    return specs;
}

SuiteReport verify_suite(const SuiteConfig& cfg) {
    cfg.check();
    using CritFn = std::function<void(Ctx&)>;
    std::vector<std::pair<std::string, CritFn>> criteria = {
        {"1.generators", crit1}, {"2.knoerrer", crit2},  {"3.h0-dims", crit3},
        {"4.bridge", crit4},     {"5.cy", crit5},        {"6.dg-ext", crit6},
        {"7.minimal", crit7},    {"8.gamma", crit8},     {"9.koszul", crit9},
        {"10.truncations", crit10}, {"11.k0", crit11},
    };

    SuiteReport report;
    std::vector<std::vector<CheckResult>> results(criteria.size());
    std::vector<double> times(criteria.size(), 0.0);

    auto run_one = [&](size_t k) {
        Ctx ctx{cfg, {}};
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[k].second(ctx);
        } catch (const std::exception& e) {
            ctx.out.push_back({criteria[k].first + "/exception", false, "no exception", e.what(), 0});
        }
        auto t1 = std::chrono::steady_clock::now();
        times[k] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        results[k] = std::move(ctx.out);
    };

    if (cfg.parallelism <= 1) {
        for (size_t k = 0; k < criteria.size(); ++k) run_one(k);
    } else {
        size_t next = 0;
        while (next < criteria.size()) {
            size_t batch = std::min<size_t>(cfg.parallelism, criteria.size() - next);
            std::vector<std::future<void>> fs;
            for (size_t b = 0; b < batch; ++b)
                fs.push_back(std::async(std::launch::async, run_one, next + b));
            for (auto& f : fs) f.get();
            next += batch;
        }
    }
    for (size_t k = 0; k < criteria.size(); ++k) {
        report.timings_ms[criteria[k].first] = times[k];
        for (auto& r : results[k]) report.checks.push_back(std::move(r));
    }
    return report;
}

}  // namespace meshforge
