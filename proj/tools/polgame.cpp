// polgame — workbench CLI for polarized game logic: parse and expand
// formulas, decide provability with three engines, compute size/profile
// analytics, and normalize proof terms.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "polgame/analytics.hpp"
#include "polgame/eval_dp.hpp"
#include "polgame/eval_linear.hpp"
#include "polgame/eval_naive.hpp"
#include "polgame/expand.hpp"
#include "polgame/graph.hpp"
#include "polgame/morphism.hpp"

using namespace polgame;

namespace {

// Records carry arbitrary-precision counters, which mainstream JSON libraries
// clip to doubles; the fixed schema below is emitted directly instead.
std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(c);
    }
    return out;
}

struct Record {
    std::string command;
    std::uint64_t seed = 0;
    std::string engine = "none";
    std::string verdict_or_value; // raw JSON
    std::string stats = "{}";     // raw JSON
    bool value_field = false;

    std::string str() const {
        std::ostringstream os;
        os << "{\"command\":\"" << json_escape(command) << "\",\"seed\":" << seed
           << ",\"engine\":\"" << json_escape(engine) << "\","
           << (value_field ? "\"value\":" : "\"verdict\":") << verdict_or_value
           << ",\"stats\":" << stats << "}";
        return os.str();
    }
};

std::string read_input(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream f(arg);
    if (f.good()) {
        std::ostringstream os;
        os << f.rdbuf();
        return os.str();
    }
    return arg;
}

// Runs the command body on a watched thread; on deadline the process reports
// the timeout and exits 2 (the worker dies with the process).
int with_timeout(std::uint64_t timeout_ms, std::function<int()> work) {
    if (timeout_ms == 0) return work();
    auto prom = std::make_shared<std::promise<int>>();
    auto fut = prom->get_future();
    std::thread([prom, work = std::move(work)]() {
        try {
            prom->set_value(work());
        } catch (...) {
            try {
                prom->set_exception(std::current_exception());
            } catch (...) {
            }
        }
    }).detach();
    if (fut.wait_for(std::chrono::milliseconds(timeout_ms)) != std::future_status::ready) {
        std::cout.flush();
        std::cerr << "error: timed out after " << timeout_ms << " ms" << std::endl;
        std::_Exit(2);
    }
    return fut.get();
}

struct CommonOpts {
    std::size_t max_nodes = kDefaultNodeBudget;
    std::uint64_t timeout_ms = 10'000;
    bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--max-nodes", c.max_nodes, "Node budget for expansions (default 1000000)");
    cmd->add_option("--timeout-ms", c.timeout_ms, "Wall-clock limit, 0 disables (default 10000)");
    cmd->add_flag("--json", c.json, "Emit a machine-readable record");
}

std::string bool_json(bool b) { return b ? "true" : "false"; }

int verdict_exit(bool b) { return b ? 0 : 1; }

// ---------------------------------------------------------------------------

struct ProveArgs {
    std::string input;
    std::string engine = "linear";
    CommonOpts common;
};

int run_prove(const ProveArgs& a) {
    Sequent s = parse_sequent(read_input(a.input));
    bool verdict;
    std::string stats = "{}";
    if (a.engine == "linear") {
        verdict = provable(s);
    } else if (a.engine == "dp") {
        DpOptions opt;
        opt.node_budget = a.common.max_nodes;
        auto r = eval_dp(hom_formula(s), opt);
        verdict = r.verdict;
        std::ostringstream os;
        os << "{\"binary_ops\":" << r.counter.binary_ops << "}";
        stats = os.str();
    } else if (a.engine == "naive") {
        verdict = has_strategy(expand(hom_formula(s), a.common.max_nodes));
    } else {
        throw Error("unknown engine '" + a.engine + "'");
    }
    if (a.common.json) {
        Record rec{"prove", 0, a.engine, bool_json(verdict), stats};
        std::cout << rec.str() << "\n";
    } else {
        std::cout << (verdict ? "provable" : "not provable") << "\n";
    }
    return verdict_exit(verdict);
}

struct EvalArgs {
    std::string input;
    std::string engine = "linear";
    bool short_circuit = false;
    bool count = false;
    bool witness = false;
    bool stats = false;
    bool no_memo = false;
    bool no_global_dedup = false;
    bool expand_exponentials = false;
    CommonOpts common;
};

int run_eval(const EvalArgs& a) {
    FormulaPtr f = parse_formula(read_input(a.input));
    bool verdict = false;
    std::ostringstream stats;
    stats << "{";
    if (a.engine == "naive") {
        GamePtr tree = expand(f, a.common.max_nodes);
        auto cost = eval_cost(tree, a.short_circuit ? TraversalMode::short_circuit
                                                    : TraversalMode::full);
        verdict = cost.verdict;
        auto m = measure(tree);
        stats << "\"ops_visited\":" << cost.ops_visited << ",\"nodes\":" << m.nodes
              << ",\"leaves\":" << m.leaves << ",\"usize\":" << m.usize
              << ",\"depth\":" << m.depth;
        if (a.count) stats << ",\"strategies\":\"" << count_strategies(tree) << "\"";
        if (a.witness) {
            auto w = extract_strategy(tree);
            stats << ",\"witness\":"
                  << (w ? "\"" + json_escape(print_term(*w)) + "\"" : "null");
        }
    } else if (a.engine == "dp") {
        DpOptions opt;
        opt.expand_exponentials = a.expand_exponentials;
        opt.use_memo = !a.no_memo;
        opt.global_dedup = !a.no_global_dedup;
        opt.node_budget = a.common.max_nodes;
        auto r = eval_dp(f, opt);
        verdict = r.verdict;
        stats << "\"binary_ops\":" << r.counter.binary_ops
              << ",\"memo_hits\":" << r.counter.memo_hits
              << ",\"memo_entries\":" << r.counter.memo_entries;
        std::string bound = "null";
        try {
            std::ostringstream b;
            b << dp_cost_bound(f);
            bound = b.str();
        } catch (const UnsupportedConnectiveError&) {
        }
        stats << ",\"bound\":" << bound;
        if (a.count)
            stats << ",\"strategies\":\"" << count_strategies(expand(f, a.common.max_nodes))
                  << "\"";
    } else if (a.engine == "linear") {
        auto r = linear_value_counted(f);
        verdict = r.value;
        stats << "\"visits\":" << r.visits << ",\"ast_size\":" << ast_size(f);
        if (a.count)
            stats << ",\"strategies\":\"" << count_strategies(expand(f, a.common.max_nodes))
                  << "\"";
    } else {
        throw Error("unknown engine '" + a.engine + "'");
    }
    stats << "}";
    if (a.common.json) {
        Record rec{"eval", 0, a.engine, bool_json(verdict), stats.str()};
        std::cout << rec.str() << "\n";
    } else {
        std::cout << (verdict ? "true" : "false") << "\n";
        if (a.stats || a.count || a.witness) std::cout << stats.str() << "\n";
    }
    return verdict_exit(verdict);
}

struct FormulaCmdArgs {
    std::string input;
    bool graph = false;
    bool tree = false;
    bool formula_mode = false;
    bool measured = false;
    CommonOpts common;
};

int run_expand(const FormulaCmdArgs& a) {
    FormulaPtr f = parse_formula(read_input(a.input));
    GamePtr tree = expand(f, a.common.max_nodes);
    if (a.common.json) {
        Record rec{"expand", 0, "none",
                   "\"" + json_escape(print_formula(to_formula(tree))) + "\"",
                   to_json(measure(tree)), true};
        std::cout << rec.str() << "\n";
    } else {
        std::cout << print_formula(to_formula(tree)) << "\n";
    }
    return 0;
}

int run_size(const FormulaCmdArgs& a) {
    FormulaPtr f = parse_formula(read_input(a.input));
    std::string value = a.graph ? to_json(graph_size(f))
                                : to_json(measure(expand(f, a.common.max_nodes)));
    if (a.common.json) {
        Record rec{"size", 0, "none", value, "{}", true};
        std::cout << rec.str() << "\n";
    } else {
        std::cout << value << "\n";
    }
    return 0;
}

int run_profile(const FormulaCmdArgs& a) {
    FormulaPtr f = parse_formula(read_input(a.input));
    Profile p;
    const char* mode = "measured";
    if (a.graph) {
        p = graph_profile(f);
        mode = "graph";
    } else if (a.formula_mode) {
        p = tree_profile(f);
        mode = "formula";
    } else {
        p = profile(expand(f, a.common.max_nodes));
    }
    if (a.common.json) {
        std::string stats = std::string("{\"mode\":\"") + mode + "\"}";
        Record rec{"profile", 0, "none", to_json(p), stats, true};
        std::cout << rec.str() << "\n";
    } else {
        std::cout << to_json(p) << "\n";
    }
    return 0;
}

int run_count(const FormulaCmdArgs& a) {
    FormulaPtr f = parse_formula(read_input(a.input));
    BigInt n = count_strategies(expand(f, a.common.max_nodes));
    if (a.common.json) {
        std::ostringstream v;
        v << "\"" << n << "\"";
        Record rec{"count", 0, "naive", v.str(), "{}", true};
        std::cout << rec.str() << "\n";
    } else {
        std::cout << n << "\n";
    }
    return n >= 1 ? 0 : 1;
}

struct SimpleArgs {
    std::string input;
    CommonOpts common;
};

int run_extract(const SimpleArgs& a) {
    Sequent s = parse_sequent(read_input(a.input));
    if (!provable(s)) {
        if (a.common.json) {
            Record rec{"extract", 0, "linear", "false", "{}"};
            std::cout << rec.str() << "\n";
        } else {
            std::cout << "not provable" << "\n";
        }
        return 1;
    }
    auto hom = expand(hom_formula(s), a.common.max_nodes);
    auto w = extract_strategy(hom);
    if (!w) throw Error("provable sequent without a hom strategy (bug)");
    TermPtr proof = strategy_to_proof(*w, s, a.common.max_nodes);
    typecheck(proof, s, a.common.max_nodes);
    if (a.common.json) {
        std::ostringstream stats;
        stats << "{\"strategy\":\"" << json_escape(print_term(*w)) << "\",\"proof\":\""
              << json_escape(print_term(proof)) << "\"}";
        Record rec{"extract", 0, "linear", "true", stats.str()};
        std::cout << rec.str() << "\n";
    } else {
        std::cout << print_term(proof) << "\n";
    }
    return 0;
}

int run_normalize(const SimpleArgs& a) {
    std::string text = read_input(a.input);
    auto sep = text.find("::");
    if (sep == std::string::npos) throw Error("expected \"<term> :: <sequent>\"");
    TermPtr t = parse_term(text.substr(0, sep));
    Sequent s = parse_sequent(text.substr(sep + 2));
    TypedTerm typed = typecheck(t, s, a.common.max_nodes);
    TermPtr nf = normalize(typed);
    if (a.common.json) {
        Record rec{"normalize", 0, "none", "\"" + json_escape(print_term(nf)) + "\"", "{}",
                   true};
        std::cout << rec.str() << "\n";
    } else {
        std::cout << print_term(nf) << "\n";
    }
    return 0;
}

struct RandomArgs {
    unsigned depth = 4;
    unsigned max_branch = 3;
    std::string start = "o";
    std::uint64_t seed = 0;
    bool formula = false;
    CommonOpts common;
};

int run_random(const RandomArgs& a) {
    Polarity pol = a.start == "p" ? Polarity::player : Polarity::opponent;
    std::string text = a.formula
                           ? print_formula(random_formula(a.depth, a.max_branch, pol, a.seed))
                           : print_formula(to_formula(random_game(a.depth, a.max_branch, pol,
                                                                  a.seed)));
    if (a.common.json) {
        Record rec{"random", a.seed, "none", "\"" + json_escape(text) + "\"", "{}", true};
        std::cout << rec.str() << "\n";
    } else {
        std::cout << text << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bench harness

struct BenchArgs {
    std::string suite = "engines";
    std::uint64_t seed = 1;
    std::vector<unsigned> sizes;
    CommonOpts common;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void emit_row(bool json, const std::string& row_json, const std::string& plain) {
    std::cout << (json ? row_json : plain) << "\n";
}

int bench_engines(const BenchArgs& a) {
    std::vector<unsigned> depths = a.sizes.empty() ? std::vector<unsigned>{3, 4, 5, 6} : a.sizes;
    // (instance, seed) pairs: random formulas per depth plus the bang-nested
    // family on which expansion provably blows any fixed budget while the
    // other engines answer from the formula alone
    std::vector<std::pair<FormulaPtr, std::uint64_t>> instances;
    for (unsigned d : depths)
        for (std::uint64_t i = 0; i < 5; ++i) {
            std::uint64_t seed = a.seed * 1000 + d * 10 + i;
            instances.emplace_back(
                random_formula(d, 3, i % 2 ? Polarity::player : Polarity::opponent, seed), seed);
        }
    for (unsigned k = 4; k <= 7; ++k)
        instances.emplace_back(
            Formula::make_bang(parse_formula("(" + std::to_string(k) + ":{" +
                                             std::to_string(k) + ":()})")),
            k);
    std::stable_sort(instances.begin(), instances.end(),
                     [](const auto& x, const auto& y) {
                         auto kx = std::make_pair(ast_size(x.first), x.second);
                         auto ky = std::make_pair(ast_size(y.first), y.second);
                         return kx < ky;
                     });
    for (const auto& [f, seed] : instances) {
        std::size_t size = ast_size(f);
            struct Row {
                std::string engine, status, ops;
                double ms;
                int verdict;
            };
            std::vector<Row> rows;

            // cheap engines are measured twice and report the warm run
            auto lr = linear_value_counted(f);
            auto t0 = std::chrono::steady_clock::now();
            lr = linear_value_counted(f);
            rows.push_back({"linear", "ok", std::to_string(lr.visits), ms_since(t0), lr.value});

            t0 = std::chrono::steady_clock::now();
            try {
                DpOptions opt;
                opt.node_budget = a.common.max_nodes;
                (void)eval_dp(f, opt);
                t0 = std::chrono::steady_clock::now();
                auto dr = eval_dp(f, opt);
                std::ostringstream os;
                os << dr.counter.binary_ops;
                rows.push_back({"dp", "ok", os.str(), ms_since(t0), dr.verdict});
                if (dr.verdict != lr.value) throw Error("engine disagreement (bug)");
            } catch (const BudgetExceededError&) {
                rows.push_back({"dp", "budget-exceeded", "null", ms_since(t0), -1});
            }

            t0 = std::chrono::steady_clock::now();
            try {
                auto tree = expand(f, a.common.max_nodes);
                auto cost = eval_cost(tree, TraversalMode::full);
                rows.push_back({"naive", "ok", std::to_string(cost.ops_visited), ms_since(t0),
                                cost.verdict});
                if (cost.verdict != lr.value) throw Error("engine disagreement (bug)");
            } catch (const BudgetExceededError&) {
                rows.push_back({"naive", "budget-exceeded", "null", ms_since(t0), -1});
            }

            for (const auto& r : rows) {
                std::ostringstream js, plain;
                js << "{\"suite\":\"engines\",\"size\":" << size << ",\"seed\":" << seed
                   << ",\"engine\":\"" << r.engine << "\",\"status\":\"" << r.status
                   << "\",\"time_ms\":" << r.ms << ",\"ops\":" << r.ops
                   << ",\"verdict\":" << (r.verdict < 0 ? "null" : bool_json(r.verdict)) << "}";
                plain << "engines size=" << size << " seed=" << seed << " engine=" << r.engine
                      << " status=" << r.status << " time_ms=" << r.ms << " ops=" << r.ops;
                emit_row(a.common.json, js.str(), plain.str());
            }
    }
    return 0;
}

int bench_growth(const BenchArgs& a) {
    // L_k: the unary chain of depth k; A_k: the doubling family
    std::function<FormulaPtr(unsigned, bool)> chain = [&](unsigned k, bool player) -> FormulaPtr {
        if (k == 0) return player ? Formula::zero() : Formula::one();
        return player ? Formula::player_literal({{"_1", chain(k - 1, false)}})
                      : Formula::opponent_literal({{"_1", chain(k - 1, true)}});
    };
    std::function<FormulaPtr(unsigned)> A = [&](unsigned k) -> FormulaPtr {
        if (k == 0) return Formula::zero();
        FormulaPtr b = k >= 2 ? Formula::opponent_literal({{"_1", A(k - 2)}}) : Formula::one();
        return Formula::player_literal({{"_1", b}, {"_2", b}});
    };
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned m = 1; m <= 4; ++m) {
            auto f = Formula::make_par(chain(2 * n, true), chain(2 * m, true));
            auto msr = measure(expand(f));
            std::ostringstream js, plain;
            js << "{\"suite\":\"growth\",\"family\":\"L\",\"n\":" << n << ",\"m\":" << m
               << ",\"usize\":" << msr.usize << ",\"leaves\":" << msr.leaves
               << ",\"binomial\":" << binomial(n + m, n) << "}";
            plain << "growth L n=" << n << " m=" << m << " usize=" << msr.usize
                  << " leaves=" << msr.leaves << " C(n+m,n)=" << binomial(n + m, n);
            emit_row(a.common.json, js.str(), plain.str());
        }
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned m = 1; m <= 3; ++m) {
            auto f = Formula::make_par(A(2 * n), A(2 * m));
            auto msr = measure(expand(f));
            BigInt bound = big_pow(BigInt(2), 2 * n + 2 * m);
            std::ostringstream js, plain;
            js << "{\"suite\":\"growth\",\"family\":\"A\",\"n\":" << n << ",\"m\":" << m
               << ",\"usize\":" << msr.usize << ",\"poly_bound\":" << bound << "}";
            plain << "growth A n=" << n << " m=" << m << " usize=" << msr.usize
                  << " bound=" << bound;
            emit_row(a.common.json, js.str(), plain.str());
        }
    return 0;
}

int bench_shortcircuit(const BenchArgs& a) {
    const unsigned seeds = 1000;
    std::vector<unsigned> depths =
        a.sizes.empty() ? std::vector<unsigned>{1, 2, 3, 4, 5, 6} : a.sizes;
    for (unsigned d : depths) {
        double sum_sc = 0, sum_full = 0;
        for (unsigned i = 0; i < seeds; ++i) {
            auto g = random_game(d, 3, Polarity::opponent, a.seed * 100000 + d * 1000 + i);
            sum_sc += eval_cost(g, TraversalMode::short_circuit).ops_visited;
            sum_full += eval_cost(g, TraversalMode::full).ops_visited;
        }
        std::ostringstream js, plain;
        js << "{\"suite\":\"shortcircuit\",\"depth\":" << d << ",\"seeds\":" << seeds
           << ",\"mean_visits_shortcircuit\":" << sum_sc / seeds
           << ",\"mean_visits_full\":" << sum_full / seeds << "}";
        plain << "shortcircuit depth=" << d << " mean_sc=" << sum_sc / seeds
              << " mean_full=" << sum_full / seeds;
        emit_row(a.common.json, js.str(), plain.str());
    }
    return 0;
}

int run_bench(const BenchArgs& a) {
    if (a.suite == "engines") return bench_engines(a);
    if (a.suite == "growth") return bench_growth(a);
    if (a.suite == "shortcircuit") return bench_shortcircuit(a);
    throw Error("unknown suite '" + a.suite + "' (engines|growth|shortcircuit)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polgame — polarized game logic workbench"};
    app.require_subcommand(1);

    ProveArgs prove_args;
    auto* prove = app.add_subcommand("prove", "Decide provability of a sequent");
    prove->add_option("sequent", prove_args.input, "Sequent, file, or - for stdin")->required();
    prove->add_option("--engine", prove_args.engine, "linear|dp|naive (default linear)");
    add_common(prove, prove_args.common);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate strategy existence for a formula");
    eval->add_option("formula", eval_args.input, "Formula, file, or - for stdin")->required();
    eval->add_option("--engine", eval_args.engine, "naive|dp|linear (default linear)");
    eval->add_flag("--short-circuit", eval_args.short_circuit,
                   "Stop conjuncts on false, disjuncts on true (naive engine)");
    eval->add_flag("--count", eval_args.count, "Also count strategies");
    eval->add_flag("--witness", eval_args.witness, "Also extract a strategy term (naive)");
    eval->add_flag("--stats", eval_args.stats, "Print engine statistics");
    eval->add_flag("--no-memo", eval_args.no_memo, "Disable memoization (dp)");
    eval->add_flag("--no-global-dedup", eval_args.no_global_dedup,
                   "Disable store-wide hash-consing (dp)");
    eval->add_flag("--expand-exponentials", eval_args.expand_exponentials,
                   "Expand bang/quest literally instead of the semantic shortcut (dp)");
    add_common(eval, eval_args.common);

    FormulaCmdArgs expand_args;
    auto* expand_cmd = app.add_subcommand("expand", "Expand a formula to its game tree");
    expand_cmd->add_option("formula", expand_args.input)->required();
    add_common(expand_cmd, expand_args.common);

    FormulaCmdArgs size_args;
    auto* size_cmd = app.add_subcommand("size", "Size measures of a formula");
    size_cmd->add_option("formula", size_args.input)->required();
    auto* size_graph = size_cmd->add_flag("--graph", size_args.graph, "Graph-game size quad");
    size_cmd->add_flag("--tree", size_args.tree, "Expanded-tree size report (default)")
        ->excludes(size_graph);
    add_common(size_cmd, size_args.common);

    FormulaCmdArgs profile_args;
    auto* profile_cmd = app.add_subcommand("profile", "Per-depth node counts of a formula");
    profile_cmd->add_option("input", profile_args.input, "Formula, file, or - for stdin")
        ->required();
    auto* pm = profile_cmd->add_flag("--measured", profile_args.measured,
                                     "Measure the expansion (default)");
    auto* pf = profile_cmd->add_flag("--formula", profile_args.formula_mode,
                                     "Closed-form tree profile, no expansion");
    auto* pg = profile_cmd->add_flag("--graph", profile_args.graph, "Graph-game profile");
    pm->excludes(pf);
    pm->excludes(pg);
    pf->excludes(pg);
    add_common(profile_cmd, profile_args.common);

    FormulaCmdArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "Count strategies of a formula");
    count_cmd->add_option("formula", count_args.input)->required();
    add_common(count_cmd, count_args.common);

    SimpleArgs extract_args;
    auto* extract_cmd =
        app.add_subcommand("extract", "Decide a sequent and extract a proof witness");
    extract_cmd->add_option("sequent", extract_args.input)->required();
    add_common(extract_cmd, extract_args.common);

    SimpleArgs normalize_args;
    auto* normalize_cmd =
        app.add_subcommand("normalize", "Cut-eliminate \"<term> :: <sequent>\"");
    normalize_cmd->add_option("input", normalize_args.input)->required();
    add_common(normalize_cmd, normalize_args.common);

    RandomArgs random_args;
    auto* random_cmd = app.add_subcommand("random", "Generate a random game or formula");
    random_cmd->add_option("--depth", random_args.depth, "Depth limit (default 4)");
    random_cmd->add_option("--max-branch", random_args.max_branch, "Branch limit (default 3)");
    random_cmd->add_option("--start", random_args.start, "Root polarity o|p (default o)");
    random_cmd->add_option("--seed", random_args.seed, "PRNG seed (default 0)");
    random_cmd->add_flag("--formula", random_args.formula,
                         "Random connective formula instead of a plain tree");
    add_common(random_cmd, random_args.common);

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark suites over the three engines");
    bench_cmd->add_option("--suite", bench_args.suite, "engines|growth|shortcircuit");
    bench_cmd->add_option("--seed", bench_args.seed, "Base seed (default 1)");
    bench_cmd->add_option("--sizes", bench_args.sizes, "Instance sizes/depths")->delimiter(',');
    add_common(bench_cmd, bench_args.common);

    CLI11_PARSE(app, argc, argv);

    try {
        std::function<int()> body;
        std::uint64_t timeout = 0;
        if (prove->parsed()) {
            body = [&] { return run_prove(prove_args); };
            timeout = prove_args.common.timeout_ms;
        } else if (eval->parsed()) {
            body = [&] { return run_eval(eval_args); };
            timeout = eval_args.common.timeout_ms;
        } else if (expand_cmd->parsed()) {
            body = [&] { return run_expand(expand_args); };
            timeout = expand_args.common.timeout_ms;
        } else if (size_cmd->parsed()) {
            body = [&] { return run_size(size_args); };
            timeout = size_args.common.timeout_ms;
        } else if (profile_cmd->parsed()) {
            body = [&] { return run_profile(profile_args); };
            timeout = profile_args.common.timeout_ms;
        } else if (count_cmd->parsed()) {
            body = [&] { return run_count(count_args); };
            timeout = count_args.common.timeout_ms;
        } else if (extract_cmd->parsed()) {
            body = [&] { return run_extract(extract_args); };
            timeout = extract_args.common.timeout_ms;
        } else if (normalize_cmd->parsed()) {
            body = [&] { return run_normalize(normalize_args); };
            timeout = normalize_args.common.timeout_ms;
        } else if (random_cmd->parsed()) {
            body = [&] { return run_random(random_args); };
            timeout = random_args.common.timeout_ms;
        } else {
            body = [&] { return run_bench(bench_args); };
            timeout = bench_args.common.timeout_ms;
        }
        return with_timeout(timeout, body);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
}
