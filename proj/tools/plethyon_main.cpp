#include "plethyon/delta.hpp"
#include "plethyon/laws.hpp"
#include "plethyon/operad.hpp"
#include "plethyon/surjections.hpp"
#include "plethyon/textio.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace plethyon;
using nlohmann::json;

namespace {

std::int64_t max_size_cap() {
    if (const char* env = std::getenv("PLETHYON_MAX_SIZE")) return std::stoll(env);
    return 32;
}

void check_cap(std::int64_t value, const std::string& what) {
    if (value > max_size_cap())
        throw CLI::ValidationError(what + " exceeds PLETHYON_MAX_SIZE (" +
                                   std::to_string(max_size_cap()) + ")");
}

TSOptions ts_options_for(const Flavor& f) {
    for (Marking left : {Marking::plain, Marking::linear, Marking::monotone})
        for (Marking right : {Marking::plain, Marking::linear, Marking::monotone})
            for (int colors : {1, 2}) {
                TSOptions o{left, right, colors};
                try {
                    if (&ts_flavor(o) == &f) return o;
                } catch (const std::invalid_argument&) {
                }
            }
    throw CLI::ValidationError("flavor " + f.name + " has no registered surjection model");
}

TSOptions parse_ts_options(const std::string& decoration, int colors) {
    TSOptions o;
    o.colors = colors;
    if (!decoration.empty()) {
        std::stringstream ss(decoration);
        std::string part;
        while (std::getline(ss, part, ',')) {
            auto eq = part.find('=');
            if (eq == std::string::npos)
                throw CLI::ValidationError("--decoration expects side=marking pairs");
            std::string side = part.substr(0, eq);
            Marking m = marking_by_name(part.substr(eq + 1));
            if (side == "left")
                o.left = m;
            else if (side == "right")
                o.right = m;
            else
                throw CLI::ValidationError("--decoration side must be left or right");
        }
    }
    return o;
}

TensorElement swap_legs(const TensorElement& t) {
    TensorElement out(t.legs);
    for (const auto& [k, c] : t.terms) {
        std::vector<BasisMonomial> key(k.rbegin(), k.rend());
        out.add(std::move(key), c);
    }
    return out;
}

TensorElement restrict_right(const TensorElement& t, const Flavor& f, const Index& idx) {
    TensorElement out(t.legs);
    for (const auto& [k, c] : t.terms) {
        const BasisMonomial& right = k.back();
        if (right.factors.size() == 1 && right.factors.front().idx == idx) out.add(k, c);
    }
    (void)f;
    return out;
}

int run_verify(const std::string& suite, const std::string& flavor_name, std::int64_t bound,
               std::ostream& os) {
    bool all_ok = true;
    auto line = [&](bool ok, const std::string& what) {
        os << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
        all_ok = all_ok && ok;
    };

    std::vector<const Flavor*> flavors;
    if (flavor_name == "all")
        for (const Flavor& f : flavor_registry()) flavors.push_back(&f);
    else
        flavors.push_back(&flavor_by_name(flavor_name));

    if (suite == "laws" || suite == "all") {
        for (const Flavor* f : flavors) {
            LawReport rep = check_bialgebra_laws(*f, bound);
            std::string what = "laws " + f->name + " bound " + std::to_string(bound) + " (" +
                               std::to_string(rep.checks) + " checks)";
            if (!rep.passed) what += "; first witness: " + rep.violations.front();
            line(rep.passed, what);
        }
    }
    if (suite == "routes" || suite == "all") {
        for (const Flavor* f : flavors) {
            bool ok = true;
            std::string witness;
            for (const Generator& g : enumerate_generators(*f, bound)) {
                if (!(delta_combinatorial(*f, g) == delta_symbolic(*f, g))) {
                    ok = false;
                    witness = generator_text(*f->base, g);
                    break;
                }
            }
            line(ok, "routes " + f->name + " bound " + std::to_string(bound) +
                         (ok ? "" : "; witness " + witness));
        }
    }
    if (suite == "axioms" || suite == "all") {
        for (const char* name : {"sym", "ass", "sym2", "ass2", "giraudo:classical",
                                 "giraudo:natplus", "cat:chaotic2", "cat:arrow"}) {
            AxiomReport rep = axiom_check(*operad_by_name(name), bound);
            line(rep.passed, std::string("axioms ") + name + " bound " + std::to_string(bound) +
                                 " (" + std::to_string(rep.checked) + " checks)" +
                                 (rep.passed ? "" : "; " + rep.violations.front()));
        }
        AxiomReport bad = axiom_check(*corrupt_operad(sym_operad(1)), bound);
        line(!bad.passed, "axioms corrupted control fails with witness");
    }
    if (suite == "ts" || suite == "all") {
        for (const Flavor* f : flavors) {
            TSOptions o;
            try {
                o = ts_options_for(*f);
            } catch (const CLI::ValidationError&) {
                continue;
            }
            bool ok = true;
            std::string witness;
            for (const Generator& g : enumerate_generators(*f, bound)) {
                if (weight(*f->base, g.idx) > bound) continue;
                if (!(ts_delta(o, g) == delta_combinatorial(*f, g))) {
                    ok = false;
                    witness = generator_text(*f->base, g);
                    break;
                }
            }
            line(ok, "ts-equivalence " + f->name + " bound " + std::to_string(bound) +
                         (ok ? "" : "; witness " + witness));
        }
    }
    return all_ok ? 0 : 1;
}

ForestNode forest_from_json(const json& j) {
    ForestNode n;
    if (j.contains("color")) n.color = j.at("color").get<std::string>();
    if (j.contains("children"))
        for (const auto& c : j.at("children")) n.children.push_back(forest_from_json(c));
    return n;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plethyon: exact plethystic and substitution bialgebra engine"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    std::string config_file;
    app.add_option("--config", config_file, "JSON file with default flag values");

    // delta
    auto* delta = app.add_subcommand("delta", "Comultiplication of a generator");
    std::string d_flavor, d_sigma, d_route = "combinatorial", d_restrict;
    std::int64_t d_D = -1;
    bool d_swap = false;
    delta->add_option("--flavor", d_flavor)->required();
    delta->add_option("--sigma", d_sigma)->required();
    delta->add_option("--route", d_route)
        ->check(CLI::IsMember({"combinatorial", "symbolic", "ts", "all"}));
    delta->add_option("--restrict-right", d_restrict, "Keep terms with this outer class");
    delta->add_option("--D", d_D, "Truncation degree for the symbolic route");
    delta->add_flag("--swap-legs", d_swap, "Print outer (x) inner instead");

    // substitute
    auto* subst = app.add_subcommand("substitute", "Series substitution");
    bool s_pleth = false, s_ordinary = false;
    std::string s_g, s_base = "classical";
    std::vector<std::string> s_f;
    std::int64_t s_D = 0;
    subst->add_flag("--pleth", s_pleth, "Plethystic substitution");
    subst->add_flag("--ordinary", s_ordinary, "Ordinary multivariate substitution");
    subst->add_option("--g", s_g)->required();
    subst->add_option("--f", s_f)->required();
    subst->add_option("--D", s_D)->required();
    subst->add_option("--base", s_base);

    // decompose
    auto* dec = app.add_subcommand("decompose", "Two-step decomposition classes");
    std::string c_flavor, c_sigma, c_lambda;
    dec->add_option("--flavor", c_flavor)->required();
    dec->add_option("--sigma", c_sigma)->required();
    dec->add_option("--lambda", c_lambda, "Restrict to this outer class");

    // bar
    auto* bar = app.add_subcommand("bar", "Bar-construction listings");
    std::string b_flavor, b_forest;
    std::int64_t b_bound = 4;
    bool b_planar = false, b_ordered = false;
    bar->add_option("--flavor", b_flavor, "List connected classes with automorphism orders");
    bar->add_option("--bound", b_bound);
    bar->add_option("--forest", b_forest, "JSON forest file; prints its automorphism order");
    bar->add_flag("--planar-ops", b_planar, "Operations carry no input symmetries");
    bar->add_flag("--ordered-components", b_ordered, "Forest components are ordered");

    // ts
    auto* ts = app.add_subcommand("ts", "Surjection pyramid groupoid");
    int t_level = 1, t_colors = 1;
    std::int64_t t_bottom = 4;
    std::string t_dec, t_sigma;
    ts->add_option("--level", t_level)->check(CLI::IsMember({1, 2}));
    ts->add_option("--max-bottom", t_bottom);
    ts->add_option("--decoration", t_dec, "left=<marking>,right=<marking>");
    ts->add_option("--colors", t_colors)->check(CLI::IsMember({1, 2}));
    ts->add_option("--sigma", t_sigma, "Compute the comultiplication of this class");

    // verify
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    std::string v_suite = "all", v_flavor = "all";
    std::int64_t v_bound = 3;
    ver->add_option("--suite", v_suite)
        ->check(CLI::IsMember({"laws", "routes", "axioms", "ts", "all"}));
    ver->add_option("--flavor", v_flavor);
    ver->add_option("--bound", v_bound);

    // JSON config: values become defaults for options not given on the
    // command line.
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_file = argv[i + 1];
    if (!config_file.empty()) {
        std::ifstream in(config_file);
        if (!in) {
            std::cerr << "cannot open config file " << config_file << "\n";
            return 2;
        }
        json cfg = json::parse(in);
        auto apply = [&](CLI::App* cmd) {
            for (CLI::Option* opt : cmd->get_options()) {
                std::string name = opt->get_lnames().empty() ? "" : opt->get_lnames().front();
                if (!name.empty() && cfg.contains(name)) {
                    json v = cfg.at(name);
                    opt->default_str(v.is_string() ? v.get<std::string>() : v.dump());
                }
            }
        };
        apply(&app);
        for (CLI::App* sub : app.get_subcommands({})) apply(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::ostream& os = std::cout;
        if (*delta) {
            const Flavor& f = flavor_by_name(d_flavor);
            Generator sigma = parse_generator(*f.base, f.vars, d_sigma);
            check_cap(sigma.size(), "|sigma|");
            check_cap(weight(*f.base, sigma.idx), "weight of sigma");
            auto run_route = [&](const std::string& route) {
                if (route == "symbolic") return delta_symbolic(f, sigma, d_D);
                if (route == "ts") return ts_delta(ts_options_for(f), sigma);
                return delta_combinatorial(f, sigma);
            };
            std::vector<std::string> routes =
                d_route == "all" ? std::vector<std::string>{"combinatorial", "symbolic", "ts"}
                                 : std::vector<std::string>{d_route};
            for (const std::string& route : routes) {
                TensorElement t = run_route(route);
                if (!d_restrict.empty())
                    t = restrict_right(t, f, parse_index(*f.base, f.vars, d_restrict));
                if (d_swap) t = swap_legs(t);
                if (format == "json") {
                    json j = tensor_json(f, sigma, t);
                    j["route"] = route;
                    os << j.dump(2) << "\n";
                } else {
                    if (routes.size() > 1) os << "# route: " << route << "\n";
                    os << tensor_text(f, t);
                }
            }
            return 0;
        }
        if (*subst) {
            if (s_pleth == s_ordinary)
                throw CLI::ValidationError("choose exactly one of --pleth / --ordinary");
            check_cap(s_D, "--D");
            BasePtr base = base_by_name(s_base);
            Series g = parse_series_expr(base, IndexKind::lambda, s_D, s_g);
            Series result;
            if (s_pleth) {
                if (s_f.size() != 1)
                    throw CLI::ValidationError("--pleth takes exactly one --f series");
                result = substitute_plethystic(
                    g, parse_series_expr(base, IndexKind::lambda, s_D, s_f.front()), s_D);
            } else {
                std::vector<Series> fs;
                for (const std::string& fexpr : s_f)
                    fs.push_back(parse_series_expr(base, IndexKind::lambda, s_D, fexpr));
                result = substitute_ordinary(g, fs, s_D);
            }
            if (format == "json")
                os << series_json(result).dump(2) << "\n";
            else
                os << series_text(result) << "\n";
            return 0;
        }
        if (*dec) {
            const Flavor& f = flavor_by_name(c_flavor);
            Generator sigma = parse_generator(*f.base, f.vars, c_sigma);
            check_cap(sigma.size(), "|sigma|");
            check_cap(weight(*f.base, sigma.idx), "weight of sigma");
            std::optional<Index> outer;
            if (!c_lambda.empty()) outer = parse_index(*f.base, f.vars, c_lambda);
            auto classes = enumerate_decompositions(f, sigma, outer);
            if (format == "json") {
                os << decompositions_json(f, sigma, classes).dump(2) << "\n";
            } else {
                for (const auto& d : classes) {
                    os << generator_text(*f.base, d.outer) << "  <-  ";
                    for (std::size_t i = 0; i < d.inners.size(); ++i)
                        os << (i ? " " : "") << generator_text(*f.base, d.inners[i]);
                    os << "  placements=" << d.placements.str() << " T=" << d.t_count.str()
                       << "\n";
                }
                os << classes.size() << " classes\n";
            }
            return 0;
        }
        if (*bar) {
            if (!b_forest.empty()) {
                std::ifstream in(b_forest);
                if (!in) throw CLI::ValidationError("cannot open forest file " + b_forest);
                json j = json::parse(in);
                std::vector<ForestNode> forest;
                for (const auto& t : j) forest.push_back(forest_from_json(t));
                os << forest_aut_order(forest, !b_planar, !b_ordered).str() << "\n";
                return 0;
            }
            if (b_flavor.empty())
                throw CLI::ValidationError("bar needs --flavor or --forest");
            check_cap(b_bound, "--bound");
            const Flavor& f = flavor_by_name(b_flavor);
            json rows = json::array();
            for (const Generator& g : enumerate_generators(f, b_bound)) {
                if (format == "json")
                    rows.push_back({{"class", generator_text(*f.base, g)},
                                    {"aut", f.aut(g).str()}});
                else
                    os << generator_text(*f.base, g) << "  aut=" << f.aut(g).str() << "\n";
            }
            if (format == "json") os << rows.dump(2) << "\n";
            return 0;
        }
        if (*ts) {
            TSOptions o = parse_ts_options(t_dec, t_colors);
            check_cap(t_bottom, "--max-bottom");
            if (!t_sigma.empty()) {
                BasePtr base = ts_base(o);
                Generator sigma = parse_generator(*base, o.kind(), t_sigma);
                check_cap(weight(*base, sigma.idx), "weight of sigma");
                TensorElement t = ts_delta(o, sigma);
                if (format == "json")
                    os << tensor_json(ts_flavor(o), sigma, t).dump(2) << "\n";
                else
                    os << tensor_text(ts_flavor(o), t);
                return 0;
            }
            json rows = json::array();
            for (const IsoClass& c : enumerate_ts(t_level, t_bottom, o, max_size_cap())) {
                if (format == "json")
                    rows.push_back({{"class", c.key}, {"aut", c.aut.str()}});
                else
                    os << c.key << "  aut=" << c.aut.str() << "\n";
            }
            if (format == "json") os << rows.dump(2) << "\n";
            return 0;
        }
        if (*ver) {
            check_cap(v_bound, "--bound");
            return run_verify(v_suite, v_flavor, v_bound, os);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
