#include "bosonic/cli.hpp"

#include <CLI11.hpp>

#include "bosonic/demazure.hpp"
#include "bosonic/json_io.hpp"

namespace bosonic {

namespace {

struct CliConfig {
    int rank = 3;
    WeightVec lambda;
    std::vector<int> top_flag, right_flag;
    std::vector<int> w_line, y_line;
    std::string family = "R";
    std::string model = "colored";
    std::string method;
    std::string check;
    std::string op;
    std::string table;
    std::vector<int> monomial;
    int t_exp = 0;
    int index = 1;
    int n_max = 4;
    int m_max = 3;
    int max_abs = 2;
    int k = 0;
    int jobs = 1;
    int trials = 200;
    unsigned seed = 12345;
    bool as_text = false;
    bool dump_states = false;
};

Family parse_family(const std::string& s) {
    if (s == "P" || s == "p") return Family::P;
    if (s == "R" || s == "r") return Family::R;
    throw CLI::ValidationError("--family must be P or R");
}

Permutation parse_perm(const std::vector<int>& line, int rank) {
    if (line.empty()) return Permutation::identity(rank);
    return Permutation(line);
}

void print_poly(const LaurentPoly& f, const CliConfig& cfg, std::ostream& out) {
    if (cfg.as_text)
        out << to_string(f) << "\n";
    else
        out << poly_to_json(f).dump() << "\n";
}

int print_report(const VerificationReport& rep, const CliConfig& cfg, std::ostream& out) {
    if (cfg.as_text) {
        out << "check=" << rep.check_name << " " << rep.parameter_summary
            << " cases=" << rep.cases_checked << " failures=" << rep.failures.size()
            << " => " << (rep.pass() ? "PASS" : "FAIL") << "\n";
        size_t shown = 0;
        for (const auto& f : rep.failures) {
            if (shown++ == 10) {
                out << "  ... (" << rep.failures.size() - 10 << " more)\n";
                break;
            }
            out << "  " << f.config << "\n    lhs = " << to_string(f.lhs)
                << "\n    rhs = " << to_string(f.rhs) << "\n";
        }
    } else {
        out << report_to_json(rep).dump() << "\n";
    }
    return rep.pass() ? 0 : 1;
}

SystemSpec spec_from_config(const CliConfig& cfg) {
    Family fam = parse_family(cfg.family);
    if (cfg.model == "uncolored") return SystemSpec::uncolored(fam, cfg.lambda);
    if (cfg.model == "colored") {
        auto right = cfg.right_flag.empty() ? cfg.top_flag : cfg.right_flag;
        return SystemSpec::colored(fam, cfg.lambda, cfg.top_flag, right);
    }
    throw CLI::ValidationError("--model must be colored or uncolored");
}

int run_verify(const CliConfig& cfg, std::ostream& out) {
    Family fam = parse_family(cfg.family);
    VerificationReport rep;
    if (cfg.check == "ybe-uncolored") {
        rep = check_ybe_uncolored(fam, cfg.n_max);
    } else if (cfg.check == "ybe-colored") {
        rep = check_ybe_colored(fam, cfg.rank, cfg.m_max, cfg.jobs);
    } else if (cfg.check == "ybe-aux") {
        if (cfg.k != 0) {
            rep = check_ybe_aux(fam, cfg.rank, cfg.k, cfg.n_max);
        } else {
            rep.check_name = "ybe-aux";
            rep.parameter_summary = "all k, rank=" + std::to_string(cfg.rank);
            for (int k = 1; k <= cfg.rank; ++k)
                rep.merge(check_ybe_aux(fam, cfg.rank, k, cfg.n_max));
        }
    } else if (cfg.check == "local-lifting") {
        rep = check_local_lifting(cfg.rank, cfg.n_max);
    } else if (cfg.check == "global-lifting") {
        auto flag = cfg.top_flag;
        if (flag.empty())
            for (int i = 1; i <= static_cast<int>(cfg.lambda.size()); ++i) flag.push_back(i);
        rep = check_global_lifting(cfg.lambda, flag, fam);
    } else if (cfg.check == "monostatic") {
        rep = check_monostatic(cfg.lambda, cfg.top_flag);
    } else if (cfg.check == "demeval") {
        rep = check_demeval(cfg.lambda);
    } else if (cfg.check == "demtrain") {
        rep = check_demtrain(cfg.lambda, cfg.index,
                             parse_perm(cfg.w_line, static_cast<int>(cfg.lambda.size())));
    } else if (cfg.check == "uncolored-pf") {
        rep = check_uncolored_pf(cfg.lambda);
    } else if (cfg.check == "sigma-consistency") {
        rep = check_sigma_consistency(cfg.rank, cfg.max_abs, cfg.jobs);
    } else if (cfg.check == "k-biinvariance") {
        rep = check_k_biinvariance(cfg.lambda);
    } else if (cfg.check == "laurent-props") {
        rep = check_laurent_properties(cfg.rank, cfg.trials, cfg.seed);
    } else {
        throw CLI::ValidationError("unknown --check: " + cfg.check);
    }
    return print_report(rep, cfg, out);
}

int run_demazure_apply(const CliConfig& cfg, std::ostream& out) {
    WeightVec exps = cfg.monomial;
    if (static_cast<int>(exps.size()) != cfg.rank)
        throw CLI::ValidationError("--monomial must list rank exponents");
    LaurentPoly f =
        LaurentPoly::z_power(cfg.rank, exps) * LaurentPoly::t(cfg.rank, cfg.t_exp);
    LaurentPoly g(cfg.rank);
    bool indexed = true;
    if (cfg.op == "partial")
        g = partial_op(cfg.index, f);
    else if (cfg.op == "partial-circ")
        g = partial_circ_op(cfg.index, f);
    else if (cfg.op == "dl")
        g = dl_apply(cfg.index, f);
    else if (cfg.op == "dl-inv")
        g = dl_inv_apply(cfg.index, f);
    else if (cfg.op == "omega")
        g = omega(f), indexed = false;
    else if (cfg.op == "theta")
        g = theta_sum(f), indexed = false;
    else
        throw CLI::ValidationError("unknown --op: " + cfg.op);
    if (cfg.as_text) {
        out << to_string(g) << "\n";
    } else {
        Json j;
        j["op"] = cfg.op;
        if (indexed) j["index"] = cfg.index;
        j["input"] = poly_to_json(f);
        j["output"] = poly_to_json(g);
        out << j.dump() << "\n";
    }
    return 0;
}

int run_dump_weights(const CliConfig& cfg, std::ostream& out) {
    Family fam = parse_family(cfg.family);
    Json entries = Json::array();
    auto push = [&](Json config, const LaurentPoly& w) {
        if (w.is_zero()) return;
        Json e;
        e["config"] = std::move(config);
        e["weight"] = poly_to_json(w);
        entries.push_back(std::move(e));
    };
    const int r = cfg.rank;
    if (cfg.table == "uncolored") {
        const std::vector<HSpin> hs{HSpin::plus(), HSpin::minus()};
        for (HSpin a : hs)
            for (HSpin c : hs)
                for (int b = 0; b <= cfg.n_max; ++b)
                    for (int d = 0; d <= cfg.n_max; ++d)
                        push({{"a", a.str()}, {"b", b}, {"c", c.str()}, {"d", d}},
                             uncolored_weight(fam, a, b, c, d, 1, 1));
    } else if (cfg.table == "monochrome") {
        for (int col = 1; col <= r; ++col)
            for (HSpin a : colored_hspins(r))
                for (HSpin c : colored_hspins(r))
                    for (int b = 0; b <= cfg.n_max; ++b)
                        for (int d = 0; d <= cfg.n_max; ++d)
                            push({{"color", col},
                                  {"a", a.str()},
                                  {"b", b},
                                  {"c", c.str()},
                                  {"d", d}},
                                 monochrome_weight(fam, col, a, b, c, d, 1, r));
    } else if (cfg.table == "fused") {
        for (HSpin a : colored_hspins(r))
            for (HSpin c : colored_hspins(r))
                for (const auto& b : multisets_up_to_total(r, cfg.m_max))
                    for (const auto& d : multisets_up_to_total(r, cfg.m_max))
                        push({{"a", a.str()}, {"b", b}, {"c", c.str()}, {"d", d}},
                             fused_weight(fam, a, b, c, d, 1, r));
    } else if (cfg.table == "rmatrix-uncolored") {
        const std::vector<HSpin> hs{HSpin::plus(), HSpin::minus()};
        for (HSpin sw : hs)
            for (HSpin nw : hs)
                for (HSpin ne : hs)
                    for (HSpin se : hs)
                        push({{"sw", sw.str()}, {"nw", nw.str()}, {"ne", ne.str()},
                              {"se", se.str()}},
                             rmatrix_uncolored(sw, nw, ne, se, 1, 2, 2));
    } else if (cfg.table == "rmatrix-colored") {
        for (HSpin sw : colored_hspins(r))
            for (HSpin nw : colored_hspins(r))
                for (HSpin ne : colored_hspins(r))
                    for (HSpin se : colored_hspins(r))
                        push({{"sw", sw.str()}, {"nw", nw.str()}, {"ne", ne.str()},
                              {"se", se.str()}},
                             rmatrix_colored(sw, nw, ne, se, 1, 2, r));
    } else if (cfg.table == "rmatrix-aux") {
        for (int col = 1; col <= r; ++col)
            for (HSpin sw : colored_hspins(r))
                for (HSpin nw : colored_hspins(r))
                    for (HSpin ne : colored_hspins(r))
                        for (HSpin se : colored_hspins(r))
                            push({{"color", col}, {"sw", sw.str()}, {"nw", nw.str()},
                                  {"ne", ne.str()}, {"se", se.str()}},
                                 rmatrix_aux(col, sw, nw, ne, se, 1, 2, r));
    } else {
        throw CLI::ValidationError("unknown --table: " + cfg.table);
    }
    Json j;
    j["table"] = cfg.table;
    j["family"] = family_name(fam);
    j["entries"] = std::move(entries);
    out << j.dump() << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"exact bosonic lattice-model and Demazure operator toolkit"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--text", cfg.as_text, "human-readable output instead of JSON");
        cmd->add_option("--rank", cfg.rank, "rank r");
        return cmd;
    };
    auto add_lambda = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--lambda", cfg.lambda, "weight, e.g. 2,1,0")
                        ->delimiter(',');
        if (required) opt->required();
    };

    auto* hlp = add_common(app.add_subcommand("hl-p", "Hall-Littlewood P polynomial"));
    add_lambda(hlp);
    auto* hlr = add_common(app.add_subcommand("hl-r", "Hall-Littlewood R polynomial"));
    add_lambda(hlr);

    auto* pf = add_common(app.add_subcommand("partition-function",
                                             "partition function of a lattice system"));
    add_lambda(pf);
    pf->add_option("--model", cfg.model, "colored|uncolored");
    pf->add_option("--family", cfg.family, "P|R");
    pf->add_option("--top-flag", cfg.top_flag, "colors, e.g. 1,2,3")->delimiter(',');
    pf->add_option("--right-flag", cfg.right_flag, "colors, e.g. 2,1,3")->delimiter(',');
    pf->add_option("--method", cfg.method, "enum|transfer (uncolored only)");
    pf->add_flag("--dump-states", cfg.dump_states, "emit all states as JSON grids");
    pf->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");

    auto* tau_cmd = add_common(app.add_subcommand("tau", "tau^lambda_{w,y}"));
    add_lambda(tau_cmd);
    tau_cmd->add_option("--w", cfg.w_line, "one-line permutation, e.g. 2,1,3")
        ->delimiter(',')
        ->required();
    tau_cmd->add_option("--y", cfg.y_line, "one-line permutation")->delimiter(',');

    auto* dem = add_common(
        app.add_subcommand("demazure-apply", "apply an operator to a monomial"));
    dem->add_option("--op", cfg.op, "partial|partial-circ|dl|dl-inv|omega|theta")
        ->required();
    dem->add_option("--index", cfg.index, "simple reflection index i");
    dem->add_option("--monomial", cfg.monomial, "z exponents, e.g. 1,0,2")
        ->delimiter(',')
        ->required();
    dem->add_option("--t-exp", cfg.t_exp, "power of t on the input monomial");

    auto* sig = add_common(app.add_subcommand("sigma", "Iwahori-spherical value"));
    add_lambda(sig);
    sig->add_option("--w", cfg.w_line, "one-line permutation")->delimiter(',')->required();
    sig->add_option("--method", cfg.method, "lattice|tau")->required();
    sig->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");

    auto* ver = add_common(app.add_subcommand("verify", "run a verification sweep"));
    ver->add_option("--check", cfg.check, "which identity to verify")->required();
    add_lambda(ver, false);
    ver->add_option("--family", cfg.family, "P|R");
    ver->add_option("--top-flag", cfg.top_flag, "colors")->delimiter(',');
    ver->add_option("--w", cfg.w_line, "one-line permutation")->delimiter(',');
    ver->add_option("--index", cfg.index, "simple reflection index");
    ver->add_option("--nmax", cfg.n_max, "vertical occupancy bound");
    ver->add_option("--mmax", cfg.m_max, "total multiset bound");
    ver->add_option("--max-abs", cfg.max_abs, "bound on |lambda_i|");
    ver->add_option("--k", cfg.k, "aux YBE color (0 = all)");
    ver->add_option("--jobs", cfg.jobs, "sweep parallelism")->envname("BOSONIC_JOBS");
    ver->add_option("--trials", cfg.trials, "randomized trials");
    ver->add_option("--seed", cfg.seed, "seed for randomized sweeps");
    ver->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");

    auto* dw = add_common(app.add_subcommand("dump-weights", "dump a weight table"));
    dw->add_option("--table", cfg.table,
                   "uncolored|monochrome|fused|rmatrix-uncolored|rmatrix-colored|rmatrix-aux")
        ->required();
    dw->add_option("--family", cfg.family, "P|R");
    dw->add_option("--nmax", cfg.n_max, "occupancy bound");
    dw->add_option("--mmax", cfg.m_max, "total multiset bound");

    std::vector<const char*> argv;
    argv.push_back("bosonic");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(hlp)) {
            print_poly(p_polynomial(cfg.lambda), cfg, out);
        } else if (app.got_subcommand(hlr)) {
            print_poly(r_polynomial(cfg.lambda), cfg, out);
        } else if (app.got_subcommand(pf)) {
            SystemSpec spec = spec_from_config(cfg);
            if (cfg.dump_states) {
                Json states = Json::array();
                for_each_state(spec, [&](const State& s, const LaurentPoly& w) {
                    Json e = state_to_json(spec, s);
                    e["weight"] = poly_to_json(w);
                    states.push_back(std::move(e));
                    return true;
                });
                Json j;
                j["states"] = std::move(states);
                j["partition_function"] = poly_to_json(partition_function(spec));
                out << j.dump() << "\n";
            } else {
                LaurentPoly z = cfg.method == "transfer" ? partition_function_transfer(spec)
                                                         : partition_function(spec);
                print_poly(z, cfg, out);
            }
        } else if (app.got_subcommand(tau_cmd)) {
            int r = static_cast<int>(cfg.lambda.size());
            print_poly(
                tau(cfg.lambda, parse_perm(cfg.w_line, r), parse_perm(cfg.y_line, r)), cfg,
                out);
        } else if (app.got_subcommand(dem)) {
            return run_demazure_apply(cfg, out);
        } else if (app.got_subcommand(sig)) {
            int r = static_cast<int>(cfg.lambda.size());
            Permutation w = parse_perm(cfg.w_line, r);
            HalfPowerValue v;
            if (cfg.method == "tau")
                v = sigma_via_tau(cfg.lambda, w);
            else if (cfg.method == "lattice")
                v = sigma_via_lattice(cfg.lambda, w);
            else
                throw CLI::ValidationError("--method must be lattice or tau");
            if (cfg.as_text)
                out << "q^(" << v.half_q_exponent << "/2) * (" << to_string(v.poly)
                    << ")\n";
            else
                out << half_power_to_json(v).dump() << "\n";
        } else if (app.got_subcommand(ver)) {
            return run_verify(cfg, out);
        } else if (app.got_subcommand(dw)) {
            return run_dump_weights(cfg, out);
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace bosonic
