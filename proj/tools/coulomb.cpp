#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coulomb/config.hpp"
#include "coulomb/klr.hpp"
#include "coulomb/ogz.hpp"
#include "coulomb/relations.hpp"

using namespace coulomb;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::istringstream in(text);
    std::vector<int> out;
    int x = 0;
    while (in >> x) out.push_back(x);
    if (!in.eof() || out.empty()) throw std::invalid_argument("bad " + what + " '" + text + "'");
    return out;
}

// Per-vertex integer tuples joined '|', entries space separated: "1 0|0".
Coweight parse_coweight(const GaugeData& g, const std::string& text) {
    Coweight lam = Coweight::zero(g);
    std::istringstream in(text);
    std::string part;
    int i = 0;
    while (std::getline(in, part, '|')) {
        if (i >= g.nvertices()) throw std::invalid_argument("too many vertex blocks");
        std::vector<int> entries = parse_int_list(part, "coweight block");
        if (static_cast<int>(entries.size()) != g.v[i])
            throw std::invalid_argument("coweight block " + std::to_string(i + 1) +
                                        " wants " + std::to_string(g.v[i]) + " entries");
        for (int r = 0; r < g.v[i]; ++r) lam.at(i, r) = entries[r];
        ++i;
    }
    if (i != g.nvertices()) throw std::invalid_argument("missing vertex blocks");
    return lam;
}

// Library reports end lines with "... PASS"; records here lead with it.
bool emit_report(const std::string& suite, const std::vector<std::string>& lines) {
    bool pass = true;
    for (const std::string& line : lines) {
        bool ok = line.size() >= 5 && line.compare(line.size() - 5, 5, " PASS") == 0;
        bool tagged = ok || (line.size() >= 5 && line.compare(line.size() - 5, 5, " FAIL") == 0);
        std::string name = tagged ? line.substr(0, line.size() - 5) : line;
        std::cout << (ok ? "PASS " : "FAIL ") << suite << ' ' << name << '\n';
        pass = pass && ok;
    }
    return pass;
}

void coweights_below(const GaugeData& g, int bound, std::vector<Coweight>& out) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < g.nvertices(); ++i)
        for (int r = 0; r < g.v[i]; ++r) slots.push_back({i, r});
    Coweight lam = Coweight::zero(g);
    auto rec = [&](auto&& self, std::size_t k, int used) -> void {
        if (k == slots.size()) {
            out.push_back(lam);
            return;
        }
        for (int e = -(bound - used); e <= bound - used; ++e) {
            lam.at(slots[k].first, slots[k].second) = e;
            self(self, k + 1, used + std::abs(e));
        }
        lam.at(slots[k].first, slots[k].second) = 0;
    };
    rec(rec, 0, 0);
}

// Monomials prod_i (prod_r w[i,r])^{a_i} of total degree <= bound, the
// permutation-invariant monomials of the gauge variables.
std::vector<MultiPoly> invariant_monomials(const GaugeData& g, int bound) {
    std::vector<MultiPoly> out;
    std::vector<int> a(g.nvertices(), 0);
    auto rec = [&](auto&& self, int i, int deg) -> void {
        if (i == g.nvertices()) {
            MultiPoly p = MultiPoly::constant(1);
            for (int j = 0; j < g.nvertices(); ++j)
                for (int k = 0; k < a[j]; ++k)
                    for (int r = 0; r < g.v[j]; ++r)
                        p = p * MultiPoly::variable(VarId::gauge(j, r));
            out.push_back(p);
            return;
        }
        for (a[i] = 0; g.v[i] == 0 ? a[i] < 1 : deg + a[i] * g.v[i] <= bound; ++a[i])
            self(self, i + 1, deg + a[i] * g.v[i]);
        a[i] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<Slice> random_slices(std::mt19937& rng, int m, int count) {
    std::vector<Slice> out;
    for (int j = 0; j < count; ++j) {
        switch (rng() % 5) {
            case 0: out.push_back(Slice::e()); break;
            case 1:
                if (m >= 2) {
                    out.push_back(Slice::psi(static_cast<int>(rng() % (m - 1))));
                    break;
                }
                [[fallthrough]];
            case 2: out.push_back(Slice::sigma_plus()); break;
            case 3: out.push_back(Slice::sigma_minus()); break;
            default: out.push_back(Slice::dot(static_cast<int>(rng() % m))); break;
        }
    }
    return out;
}

bool run_product_formula(const GaugeData& g, int bound) {
    bool pass = true;
    std::vector<Coweight> lams;
    coweights_below(g, bound, lams);
    for (int sign : {1, -1})
        for (int i = 0; i < g.nvertices(); ++i)
            for (int r = 0; r < g.v[i]; ++r)
                for (const Coweight& lam : lams) {
                    if (sign * lam.at(i, r) < 0) continue;
                    ProductFormulaReport rep = verify_product_formula(g, sign, i, r, lam);
                    std::cout << (rep.pass ? "PASS" : "FAIL") << " product-formula sign="
                              << (sign > 0 ? '+' : '-') << " i=" << i + 1 << " r=" << r + 1
                              << " lam=" << lam.to_string();
                    if (!rep.pass) std::cout << " lhs=" << rep.lhs << " rhs=" << rep.rhs;
                    std::cout << '\n';
                    pass = pass && rep.pass;
                }
    return pass;
}

bool run_relations(const GaugeData& g, const std::string& file, HMode mode) {
    CheckReport rep = verify_relations(g);
    bool pass = emit_report("relations", rep.lines);
    if (!file.empty()) {
        RelationReport rrep = check_relations(g, read_file(file), mode);
        for (const std::string& line : rrep.lines) std::cout << line << '\n';
        pass = pass && rrep.pass;
    }
    return pass;
}

bool run_dual_bases(const GaugeData& g) {
    bool pass = true;
    for (DualBasisKind kind : {DualBasisKind::Staircase, DualBasisKind::Schubert}) {
        bool ok = verify_dual_bases(g, dual_bases(g, kind));
        std::cout << (ok ? "PASS" : "FAIL") << " dual-bases kind="
                  << (kind == DualBasisKind::Staircase ? "staircase" : "schubert") << '\n';
        pass = pass && ok;
    }
    return pass;
}

bool run_idempotent(const GaugeData& g) {
    SmashElement e = symmetrizer(g);
    bool pass = e * e == e;
    std::cout << (pass ? "PASS" : "FAIL") << " idempotent check=e*e\n";
    for (int i = 0; i < g.nvertices(); ++i)
        for (int a = 0; a + 1 < g.v[i]; ++a) {
            SmashElement s = SmashElement::reflection(g, i, a);
            bool left = s * e == e, right = e * s == e;
            std::cout << (left ? "PASS" : "FAIL") << " idempotent check=s(" << i + 1 << ','
                      << a + 1 << ")*e\n";
            std::cout << (right ? "PASS" : "FAIL") << " idempotent check=e*s(" << i + 1 << ','
                      << a + 1 << ")\n";
            pass = pass && left && right;
        }
    return pass;
}

bool run_crosscheck(const GaugeData& g, int degree) {
    bool pass = true;
    std::vector<MultiPoly> polys = invariant_monomials(g, degree);
    for (int i = 0; i < g.nvertices(); ++i) {
        if (g.v[i] == 0) continue;
        for (int sign : {1, -1})
            for (int power = 0; power <= 2; ++power) {
                MonopoleSpec spec;
                spec.lam = Coweight::unit(g, i, sign > 0 ? 0 : g.v[i] - 1, sign);
                spec.f = power == 0 ? MultiPoly::constant(1)
                                    : MultiPoly::variable(VarId::gauge(i, 0)).pow(power);
                CrosscheckReport rep = crosscheck_spherical(g, spec, polys);
                std::cout << (rep.pass ? "PASS" : "FAIL") << " crosscheck i=" << i + 1
                          << " lam=" << (sign > 0 ? '+' : '-') << " power=" << power
                          << " sign=" << rep.sign;
                for (const std::string& m : rep.mismatches) std::cout << ' ' << m;
                std::cout << '\n';
                pass = pass && rep.pass;
            }
    }
    return pass;
}

bool run_klr(const GaugeData& g, int trials, unsigned seed) {
    std::vector<int> bot = canonical_sequence(g);
    int m = static_cast<int>(bot.size());
    std::mt19937 rng(seed);
    int functorial = 0;
    for (int t = 0; t < trials; ++t) {
        CylDiagram d2 = CylDiagram::make(g, bot, random_slices(rng, m, 1 + rng() % 5));
        CylDiagram d1 = CylDiagram::make(g, d2.top(), random_slices(rng, m, 1 + rng() % 5));
        if (evaluate(stack(d1, d2)) == evaluate(d1) * evaluate(d2)) ++functorial;
    }
    bool pass = functorial == trials;
    std::cout << (pass ? "PASS" : "FAIL") << " klr-functoriality trials=" << trials
              << " ok=" << functorial << '\n';

    int pairs = 0, slid = 0;
    for (int t = 0; t < trials; ++t) {
        CylDiagram d = CylDiagram::make(g, bot, random_slices(rng, m, 2 + rng() % 5));
        for (const CylDiagram& v : slide_variants(d)) {
            ++pairs;
            if (isotopy_check(d, v).pass) ++slid;
        }
    }
    bool slides_ok = slid == pairs;
    std::cout << (slides_ok ? "PASS" : "FAIL") << " klr-slides pairs=" << pairs
              << " ok=" << slid << '\n';
    pass = pass && slides_ok;

    for (int i = 0; i < g.nvertices(); ++i) {
        if (g.v[i] == 0) continue;
        for (int sign : {1, -1}) {
            WrapReport rep = wrap_vs_iwahori(g, i, sign);
            std::cout << (rep.pass ? "PASS" : "FAIL") << " klr-wrap i=" << i + 1 << " sign="
                      << (sign > 0 ? '+' : '-') << " match=" << rep.sign;
            if (!rep.pass) std::cout << " lhs=" << rep.lhs << " rhs=" << rep.rhs;
            std::cout << '\n';
            pass = pass && rep.pass;
        }
    }
    return pass;
}

bool run_ogz(const std::vector<int>& ranks) {
    bool pass = true;
    for (bool reoriented : {false, true}) {
        OgzData d = OgzData::make(ranks, reoriented);
        OgzCompareReport rep = compare_with_yangian(d);
        const char* suite = reoriented ? "ogz-compare-reoriented" : "ogz-compare";
        for (std::size_t k = 0; k < rep.lines.size(); ++k) {
            bool ok = rep.plus_sign[k] != 0 && rep.minus_sign[k] != 0;
            std::cout << (ok ? "PASS " : "FAIL ") << suite << ' ' << rep.lines[k] << '\n';
            pass = pass && ok;
        }
    }
    OgzData d = OgzData::make(ranks);
    for (int i = 1; i <= d.n - 1; ++i)
        for (int j = i + 2; j <= d.n - 1; ++j) {
            bool ok = commutator(ogz_generators(d, i).plus, ogz_generators(d, j).plus) ==
                      SmashElement::zero(d.gauge);
            std::cout << (ok ? "PASS" : "FAIL") << " ogz-commute i=" << i << " j=" << j << '\n';
            pass = pass && ok;
        }
    return pass;
}

int run_verify(const EngineConfig& cfg, const std::string& suite, const std::string& file,
               const std::string& eta_text, const std::string& ranks_text, int trials,
               unsigned seed, int degree, int lam_bound) {
    bool pass = false;
    if (suite == "product-formula") {
        pass = run_product_formula(cfg.gauge, lam_bound);
    } else if (suite == "relations") {
        pass = run_relations(cfg.gauge, file, cfg.hmode);
    } else if (suite == "dual-bases") {
        pass = run_dual_bases(cfg.gauge);
    } else if (suite == "idempotent") {
        pass = run_idempotent(cfg.gauge);
    } else if (suite == "crosscheck") {
        pass = run_crosscheck(cfg.gauge, degree);
    } else if (suite == "klr") {
        pass = run_klr(cfg.gauge, trials, seed);
    } else if (suite == "ogz") {
        pass = run_ogz(parse_int_list(ranks_text, "ranks"));
    } else {  // shift
        std::vector<int> eta = eta_text.empty()
                                   ? std::vector<int>(cfg.gauge.nvertices(), 1)
                                   : parse_int_list(eta_text, "eta");
        pass = emit_report("shift", shift_check(cfg.gauge, eta).lines);
    }
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact difference-operator engine for quiver Coulomb branch algebras"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("-c,--config", config_path, "engine config file");

    auto* cmd_gen = app.add_subcommand("generators", "print generator images");
    int gen_power = 1;
    cmd_gen->add_option("--power", gen_power, "maximal E/F power")->check(CLI::PositiveNumber);

    std::string expr_a, expr_b;
    auto* cmd_mul = app.add_subcommand("mul", "product of two expressions");
    cmd_mul->add_option("lhs", expr_a)->required();
    cmd_mul->add_option("rhs", expr_b)->required();
    auto* cmd_comm = app.add_subcommand("commutator", "commutator of two expressions");
    cmd_comm->add_option("lhs", expr_a)->required();
    cmd_comm->add_option("rhs", expr_b)->required();
    auto* cmd_poisson = app.add_subcommand("poisson", "poisson bracket of two expressions");
    cmd_poisson->add_option("lhs", expr_a)->required();
    cmd_poisson->add_option("rhs", expr_b)->required();

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite, rel_file, eta_text, ranks_text = "1 2";
    int trials = 20, degree = 2, lam_bound = 2;
    unsigned seed = 1;
    cmd_verify->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"product-formula", "relations", "dual-bases", "idempotent",
                               "crosscheck", "klr", "ogz", "shift"}));
    cmd_verify->add_option("--file", rel_file, "relation-spec file (relations suite)");
    cmd_verify->add_option("--eta", eta_text, "shift coweight entries (shift suite)");
    cmd_verify->add_option("--ranks", ranks_text, "row ranks (ogz suite)");
    cmd_verify->add_option("--trials", trials, "randomized trials (klr suite)")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--seed", seed, "random seed (klr suite)");
    cmd_verify->add_option("--degree", degree, "test polynomial degree (crosscheck suite)")
        ->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--lam-bound", lam_bound, "coweight size (product-formula suite)")
        ->check(CLI::PositiveNumber);

    auto* cmd_decompose = app.add_subcommand("decompose-r", "unit-step decomposition of r_lam");
    std::string coweight_text;
    int bound_override = 0;
    cmd_decompose->add_option("--coweight", coweight_text, "per-vertex entries, e.g. \"1 0|0\"")
        ->required();
    cmd_decompose->add_option("--bound", bound_override, "dressing degree bound");

    auto* cmd_chambers = app.add_subcommand("chambers", "chamber generators and coverage");
    int box = 2;
    cmd_chambers->add_option("--box", box, "coverage window")->check(CLI::PositiveNumber);

    auto* cmd_klr = app.add_subcommand("klr", "cylindrical diagram operations");
    cmd_klr->require_subcommand(1);
    auto* cmd_klr_eval = cmd_klr->add_subcommand("eval", "evaluate a diagram file");
    std::string diagram_path;
    bool show_events = false;
    cmd_klr_eval->add_option("file", diagram_path)->required();
    cmd_klr_eval->add_flag("--events", show_events, "also print wall crossings");

    auto* cmd_ogz = app.add_subcommand("ogz", "orthogonal Gelfand-Zetlin operations");
    cmd_ogz->require_subcommand(1);
    auto* cmd_ogz_emit = cmd_ogz->add_subcommand("emit", "print generators, both normal forms");
    std::string emit_ranks = "1 2";
    bool reoriented = false;
    cmd_ogz_emit->add_option("--ranks", emit_ranks, "row ranks, e.g. \"1 2 2\"");
    cmd_ogz_emit->add_flag("--reoriented", reoriented, "reversed arrows, coframed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::optional<EngineConfig> cfg;
        auto need_cfg = [&]() -> EngineConfig& {
            if (!cfg) {
                if (config_path.empty())
                    throw std::invalid_argument("this command needs --config");
                cfg = load_config(config_path);
            }
            return *cfg;
        };

        if (cmd_gen->parsed()) {
            EngineConfig& c = need_cfg();
            const GaugeData& g = c.gauge;
            for (int i = 0; i < g.nvertices(); ++i) {
                for (int p = 1; p <= g.v[i]; ++p)
                    std::cout << "A(" << i + 1 << ',' << p << ") = "
                              << image(g, {GenTag::A, i, p}).to_string(c.hmode) << '\n';
                for (int p = 1; p <= gen_power; ++p) {
                    std::cout << "E(" << i + 1 << ',' << p << ") = "
                              << image(g, {GenTag::E, i, p}).to_string(c.hmode) << '\n';
                    std::cout << "F(" << i + 1 << ',' << p << ") = "
                              << image(g, {GenTag::F, i, p}).to_string(c.hmode) << '\n';
                }
            }
            return 0;
        }
        if (cmd_mul->parsed() || cmd_comm->parsed() || cmd_poisson->parsed()) {
            EngineConfig& c = need_cfg();
            SmashElement a = parse_expression(c.gauge, expr_a);
            SmashElement b = parse_expression(c.gauge, expr_b);
            SmashElement out = cmd_mul->parsed()    ? a * b
                               : cmd_comm->parsed() ? commutator(a, b)
                                                    : poisson_bracket(a, b);
            std::cout << out.to_string(c.hmode) << '\n';
            return 0;
        }
        if (cmd_verify->parsed()) {
            EngineConfig local;
            EngineConfig& c = suite == "ogz" ? local : need_cfg();
            return run_verify(c, suite, rel_file, eta_text, ranks_text, trials, seed, degree,
                              lam_bound);
        }
        if (cmd_decompose->parsed()) {
            EngineConfig& c = need_cfg();
            Coweight lam = parse_coweight(c.gauge, coweight_text);
            RTree tree = decompose_r(c.gauge, lam, bound_override > 0 ? bound_override : c.bounds);
            std::cout << "tree " << tree.to_string() << '\n';
            bool ok = h_one_eval(c.gauge, tree) == h_one(r_general(c.gauge, lam));
            std::cout << (ok ? "PASS" : "FAIL") << " decompose-r lam=" << lam.to_string()
                      << '\n';
            return ok ? 0 : 1;
        }
        if (cmd_chambers->parsed()) {
            EngineConfig& c = need_cfg();
            const GaugeData& g = c.gauge;
            bool pass = true;
            int nslots = 0;
            for (int i = 0; i < g.nvertices(); ++i) nslots += g.v[i];
            for (const auto& order : chamber_orders(g))
                for (int p = 0; p <= nslots; ++p) {
                    std::vector<Coweight> gens = chamber_generators(g, order, p);
                    bool minuscule = true;
                    for (const Coweight& lam : gens)
                        minuscule = minuscule && minuscule_data(g, lam).is_minuscule;
                    bool covered = chamber_covered(g, order, p, box);
                    std::string order_text;
                    for (const auto& [i, r] : order)
                        order_text += (order_text.empty() ? "" : " ") +
                                      std::to_string(i + 1) + "." + std::to_string(r + 1);
                    std::cout << (minuscule && covered ? "PASS" : "FAIL")
                              << " chambers order=" << order_text << " p=" << p
                              << " gens=" << gens.size() << " minuscule="
                              << (minuscule ? "yes" : "no")
                              << " covered=" << (covered ? "yes" : "no") << '\n';
                    pass = pass && minuscule && covered;
                }
            return pass ? 0 : 1;
        }
        if (cmd_klr_eval->parsed()) {
            EngineConfig& c = need_cfg();
            CylDiagram d = diagram_from_text(c.gauge, read_file(diagram_path));
            if (show_events) {
                UnrolledPath path = unroll(d);
                for (const CrossingEvent& ev : path.events)
                    std::cout << "event " << ev.to_string() << '\n';
                std::cout << "terminal perm=" << path.terminal.perm_string()
                          << " shift=" << path.terminal.shift_string() << '\n';
            }
            std::cout << "value " << evaluate(d).to_string(c.hmode) << '\n';
            return 0;
        }
        if (cmd_ogz_emit->parsed()) {
            HMode mode = config_path.empty() ? HMode::Symbolic : need_cfg().hmode;
            OgzData d = OgzData::make(parse_int_list(emit_ranks, "ranks"), reoriented);
            for (int i = 1; i <= d.n - 1; ++i) {
                OgzPair x = ogz_generators(d, i);
                std::cout << "X+(" << i << ") right = " << x.plus.to_string(mode) << '\n';
                std::cout << "X+(" << i << ") left = " << serialize_left(x.plus, mode) << '\n';
                std::cout << "X-(" << i << ") right = " << x.minus.to_string(mode) << '\n';
                std::cout << "X-(" << i << ") left = " << serialize_left(x.minus, mode) << '\n';
            }
            return 0;
        }
        throw std::invalid_argument("no command");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
