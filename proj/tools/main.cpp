#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ielkit/binomial.hpp"
#include "ielkit/charset.hpp"
#include "ielkit/eval.hpp"
#include "ielkit/expr.hpp"
#include "ielkit/iel.hpp"
#include "ielkit/report.hpp"

namespace {

// "-" as an expression or file argument means stdin.
std::string read_stdin() {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string expression_text(const std::string& arg) {
    return arg == "-" ? trim(read_stdin()) : arg;
}

// Sequence files are JSON arrays of integer arrays, e.g. [[1,2],[2,3]].
iel::SetSequence load_sequence(const std::string& path, int cap) {
    std::string text;
    if (path == "-") {
        text = read_stdin();
    } else {
        std::ifstream in(path);
        if (!in) throw iel::Error("cannot open sequence file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw iel::Error("invalid sequence JSON: " + std::string(e.what()));
    }
    if (!j.is_array())
        throw iel::Error("sequence must be a JSON array of integer arrays");
    std::vector<std::vector<int>> lists;
    for (const auto& row : j) {
        if (!row.is_array())
            throw iel::Error("sequence must be a JSON array of integer arrays");
        std::vector<int> list;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw iel::Error("sequence elements must be integers");
            list.push_back(x.get<int>());
        }
        lists.push_back(std::move(list));
    }
    return iel::make_sequence(lists, cap);
}

std::string tuple_text(const std::vector<std::int64_t>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::string elements_text(const iel::ElementSet& s) {
    if (s.empty()) return "∅";
    std::string out = "{";
    bool first = true;
    for (int x : s) {
        if (!first) out += ',';
        out += std::to_string(x);
        first = false;
    }
    return out + "}";
}

// Decorrelate per-trial seeds so any sharding of the trial loop would
// reproduce the same sequences.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::mt19937 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return std::mt19937(static_cast<std::uint32_t>(
        splitmix64(seed ^ (trial * 0x9E3779B97F4A7C15ull))));
}

struct Options {
    std::string expr;
    std::string file;
    std::string kind;
    std::string format = "text";
    int n = 0;
    int nmax = iel::kDefaultMaxArity;
    int m = 0;
    int trials = 1000;
    int universe = 10;
    std::uint64_t seed = 0;
    bool cross_check = false;
};

int cmd_analyze(const Options& opt) {
    iel::Arity arity(opt.n, opt.nmax);
    iel::IdentityReport r = iel::analyze(expression_text(opt.expr), arity);
    if (opt.format == "json")
        std::cout << iel::render_json(r) << "\n";
    else if (opt.format == "latex")
        std::cout << iel::render_latex(r) << "\n";
    else
        std::cout << iel::render_text(r) << "\n";
    return r.iel ? 0 : 1;
}

int cmd_charset(const Options& opt) {
    iel::Arity arity(opt.n, opt.nmax);
    iel::ExprPtr e = iel::parse(expression_text(opt.expr), arity);
    iel::CharSet s = iel::charset_of(*e, arity);
    std::cout << nlohmann::json(iel::charset_to_lists(s)).dump() << "\n";
    return 0;
}

int cmd_verify(const Options& opt) {
    iel::Arity arity(opt.n, opt.nmax);
    if (opt.trials < 1)
        throw iel::RangeError("trial count must be at least 1");
    std::string text = expression_text(opt.expr);
    iel::ExprPtr e = iel::parse(text, arity);
    iel::CharSet s = iel::charset_of(*e, arity);
    iel::IelDecision d = iel::decide(s);
    iel::IdentityReport r = iel::make_report(text, s, d);

    bool ok;
    int passed = 0;
    if (d.is_like) {
        for (int t = 0; t < opt.trials; ++t) {
            std::mt19937 rng =
                trial_rng(opt.seed, static_cast<std::uint64_t>(t));
            iel::SetSequence a = iel::random_sequence(arity, opt.universe, rng);
            if (iel::check_identity(s, d.coefficients, a)) ++passed;
        }
        ok = passed == opt.trials;
    } else {
        // The witness pair must realize the contradiction: equal
        // i-vectors, cardinalities 1 and 0.
        iel::SetSequence in_seq = iel::indicator_sequence(*d.witness_in, arity);
        iel::SetSequence out_seq = iel::indicator_sequence(*d.witness_out, arity);
        ok = iel::i_vector(in_seq) == iel::i_vector(out_seq) &&
             iel::eval_charset(s, in_seq).size() == 1 &&
             iel::eval_charset(s, out_seq).empty();
    }

    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["n"] = r.n;
        j["expression"] = r.expression;
        j["iel"] = r.iel;
        if (r.iel) {
            j["coefficients"] = r.coefficients;
            j["trials"] = opt.trials;
            j["passed"] = passed;
            j["universe"] = opt.universe;
            j["seed"] = opt.seed;
        } else {
            j["witness_in"] = *r.witness_in;
            j["witness_out"] = *r.witness_out;
        }
        j["verified"] = ok;
        std::cout << j.dump() << "\n";
    } else {
        if (r.iel) {
            std::cout << "identity: "
                      << (opt.format == "latex" ? iel::render_latex(r)
                                                : iel::render_text(r))
                      << "\n"
                      << "trials: " << passed << "/" << opt.trials
                      << (ok ? " pass" : " pass, FAILED") << "\n";
        } else {
            std::cout << (opt.format == "latex" ? iel::render_latex(r)
                                                : iel::render_text(r))
                      << "\n"
                      << "witness check: "
                      << (ok ? "confirmed (i-vectors equal, cardinalities 1 vs 0)"
                             : "FAILED")
                      << "\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_family(const Options& opt) {
    iel::Arity arity(opt.n, opt.nmax);
    iel::CoeffVector coeffs;
    std::vector<int> cards;
    if (opt.kind == "at-least") {
        coeffs = iel::family_at_least(opt.m, arity);
        for (int k = opt.m; k <= opt.n; ++k) cards.push_back(k);
    } else if (opt.kind == "even") {
        coeffs = iel::family_even(arity);
        for (int k = 2; k <= opt.n; k += 2) cards.push_back(k);
    } else {
        coeffs = iel::family_odd(arity);
        for (int k = 1; k <= opt.n; k += 2) cards.push_back(k);
    }

    bool checked = false;
    if (opt.cross_check) {
        iel::CoeffVector direct =
            iel::coefficients(iel::CardinalitySet::of(cards), arity);
        if (direct != coeffs) {
            std::cerr << "error: cross-check failed for family '" << opt.kind
                      << "'\n";
            return 1;
        }
        checked = true;
    }

    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["kind"] = opt.kind;
        if (opt.kind == "at-least") j["m"] = opt.m;
        j["n"] = opt.n;
        j["coefficients"] = coeffs;
        if (checked) j["cross_check"] = "ok";
        std::cout << j.dump() << "\n";
    } else {
        std::cout << tuple_text(coeffs) << "\n";
        if (checked) std::cout << "cross-check: ok\n";
    }
    return 0;
}

int cmd_eval(const Options& opt) {
    iel::SetSequence a = load_sequence(opt.file, opt.nmax);
    std::string text = expression_text(opt.expr);
    iel::ExprPtr e = iel::parse(text, a.arity);
    iel::ElementSet value = iel::eval_expr(*e, a);
    iel::StatVector iv = iel::i_vector(a);
    iel::StatVector sv = iel::sigma_vector(a);

    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["n"] = a.arity.value();
        j["expression"] = text;
        j["value"] = std::vector<int>(value.begin(), value.end());
        j["i"] = iv;
        j["sigma"] = sv;
        std::cout << j.dump() << "\n";
    } else if (opt.format == "latex") {
        std::string v = "\\varnothing";
        if (!value.empty()) {
            v = "\\{";
            bool first = true;
            for (int x : value) {
                if (!first) v += ',';
                v += std::to_string(x);
                first = false;
            }
            v += "\\}";
        }
        std::cout << "E(\\mathcal{A}) = " << v << "\n"
                  << "i(\\mathcal{A}) = " << tuple_text(iv) << "\n"
                  << "\\sigma(\\mathcal{A}) = " << tuple_text(sv) << "\n";
    } else {
        std::cout << "value: " << elements_text(value) << "\n"
                  << "i: " << tuple_text(iv) << "\n"
                  << "sigma: " << tuple_text(sv) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{
        "ielkit: decide whether set expressions are inclusion-exclusion-like\n"
        "and synthesize the exact identity |E(A)| = sum c_k*i_{n,k}(A).\n"
        "All randomness derives from --seed; trial t draws from a generator\n"
        "seeded with splitmix64(seed ^ t*0x9E3779B97F4A7C15)."};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"text", "latex", "json"}))
            ->capture_default_str();
    };
    auto add_nmax = [&](CLI::App* cmd) {
        cmd->add_option("--nmax", opt.nmax, "Arity ceiling override")
            ->capture_default_str();
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Compile an expression and decide likeness");
    analyze->add_option("expr", opt.expr, "Expression text, or - for stdin")
        ->required();
    analyze->add_option("--n", opt.n, "Number of variables")->required();
    add_format(analyze);
    add_nmax(analyze);

    CLI::App* charset = app.add_subcommand(
        "charset", "Print the characteristic set of an expression");
    charset->add_option("expr", opt.expr, "Expression text, or - for stdin")
        ->required();
    charset->add_option("--n", opt.n, "Number of variables")->required();
    add_nmax(charset);

    CLI::App* verify = app.add_subcommand(
        "verify", "Check the decided identity against random sequences");
    verify->add_option("expr", opt.expr, "Expression text, or - for stdin")
        ->required();
    verify->add_option("--n", opt.n, "Number of variables")->required();
    verify->add_option("--trials", opt.trials, "Random sequences to test")
        ->capture_default_str();
    verify->add_option("--universe", opt.universe, "Element range 1..universe")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();
    verify->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
    add_format(verify);
    add_nmax(verify);

    CLI::App* family = app.add_subcommand(
        "family", "Print a closed-form coefficient family");
    family->add_option("kind", opt.kind, "Family kind")
        ->required()
        ->check(CLI::IsMember({"at-least", "even", "odd"}));
    family->add_option("--m", opt.m, "Threshold for at-least");
    family->add_option("--n", opt.n, "Number of variables")->required();
    family->add_flag("--cross-check", opt.cross_check,
                     "Compare against coefficients from the cardinality set");
    add_format(family);
    add_nmax(family);

    CLI::App* eval = app.add_subcommand(
        "eval", "Evaluate an expression on a concrete sequence");
    eval->add_option("expr", opt.expr, "Expression text, or - for stdin")
        ->required();
    eval->add_option("sequence", opt.file,
                     "JSON file of integer arrays, or - for stdin")
        ->required();
    add_format(eval);
    add_nmax(eval);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(opt);
        if (app.got_subcommand(charset)) return cmd_charset(opt);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(family)) {
            if (opt.kind == "at-least" && family->count("--m") == 0)
                throw iel::RangeError("family 'at-least' requires --m");
            if (opt.kind != "at-least" && family->count("--m") > 0)
                throw iel::RangeError("--m is only valid for family 'at-least'");
            return cmd_family(opt);
        }
        if (app.got_subcommand(eval)) return cmd_eval(opt);
    } catch (const iel::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
