// Command-line front end. Subcommands: table (exact triangles), aseq
// (Riordan A-sequences), function (Stirling functions of complex order),
// verify (identity suites), asym (asymptotic error studies), presets
// (catalog of named parameter triples). Data goes to stdout as CSV or JSON,
// diagnostics to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stirling/asymptotics.hpp"
#include "stirling/errors.hpp"
#include "stirling/presets.hpp"
#include "stirling/rational.hpp"
#include "stirling/riordan.hpp"
#include "stirling/series.hpp"
#include "stirling/stirling_function.hpp"
#include "stirling/triangle.hpp"
#include "stirling/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using stirling::Complex;
using stirling::ParameterTriple;
using stirling::Rational;

constexpr const char* kToolVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitDisagreement = 4;
constexpr int kExitRegime = 5;
constexpr int kExitNoConvergence = 6;

// Shortest round-tripping decimal form.
std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string iso_timestamp() {
    std::time_t t = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        char* end = nullptr;
        long long v = std::strtoll(epoch, &end, 10);
        if (end && *end == '\0' && v >= 0) t = static_cast<std::time_t>(v);
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::size_t series_order() {
    const char* env = std::getenv("STIRLING_SERIES_ORDER");
    if (!env) return stirling::kDefaultSeriesOrder;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (!end || *end != '\0' || v == 0 || v > 4096)
        throw std::invalid_argument("STIRLING_SERIES_ORDER must be an integer in 1..4096");
    return static_cast<std::size_t>(v);
}

// "a", "bi", "a+bi", "a-bi"; the split sign must not follow an exponent
// marker. A bare or signed "i" means coefficient 1.
Complex parse_complex(const std::string& text) {
    auto number = [](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty numeric field");
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing junk in number: " + s);
        return v;
    };
    std::string s = text;
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            split = i;
    }
    auto imag_value = [&](std::string part) {
        if (part.empty() || part.back() != 'i')
            throw std::invalid_argument("imaginary part must end in i");
        part.pop_back();
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return number(part);
    };
    if (s.back() == 'i') {
        if (split == std::string::npos) return Complex(0.0, imag_value(s));
        return Complex(number(s.substr(0, split)), imag_value(s.substr(split)));
    }
    if (split != std::string::npos && s.find('i') != std::string::npos)
        throw std::invalid_argument("malformed complex literal: " + text);
    return Complex(number(s), 0.0);
}

// CSV field quoting; values may carry commas or quotes only in free-text
// columns such as counterexamples and descriptions.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// Triple selection shared by every subcommand: either an explicit
// --alpha/--beta/--r triple or a named preset with its parameters.
struct TripleArgs {
    std::string alpha, beta, r;
    std::string preset;
    std::vector<std::string> params;

    void attach(CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "alpha as a rational, e.g. 1, -1/2, 0.25");
        cmd->add_option("--beta", beta, "beta as a rational");
        cmd->add_option("--r", r, "r as a rational");
        cmd->add_option("--preset", preset, "named parameter triple (see `presets`)");
        cmd->add_option("--param", params,
                        "preset parameter as name=value, repeatable");
    }

    std::map<std::string, Rational> parsed_params() const {
        std::map<std::string, Rational> out;
        for (const std::string& p : params) {
            std::size_t eq = p.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("--param expects name=value, got: " + p);
            out[p.substr(0, eq)] = Rational::parse(p.substr(eq + 1));
        }
        return out;
    }

    ParameterTriple resolve() const {
        if (!preset.empty())
            return stirling::preset_lookup(preset, parsed_params()).triple;
        if (alpha.empty() || beta.empty() || r.empty())
            throw std::invalid_argument(
                "specify --alpha, --beta and --r, or a --preset");
        return ParameterTriple{Rational::parse(alpha), Rational::parse(beta),
                               Rational::parse(r)};
    }
};

json metadata_json(const ParameterTriple& t, const std::string& algorithm) {
    json m;
    m["alpha"] = t.alpha.str();
    m["beta"] = t.beta.str();
    m["r"] = t.r.str();
    if (!algorithm.empty()) m["algorithm"] = algorithm;
    m["generated_at"] = iso_timestamp();
    m["tool_version"] = kToolVersion;
    return m;
}

void emit_json(const std::string& kind, json metadata, json payload) {
    json out;
    out["schema"] = 1;
    out["kind"] = kind;
    out["metadata"] = std::move(metadata);
    out["payload"] = std::move(payload);
    std::cout << out.dump(2) << "\n";
}

// ---------------------------------------------------------------- table --

struct TableArgs {
    TripleArgs triple;
    unsigned n = 0;
    std::string algo = "recurrence";
    std::string format = "csv";
};

int run_table(const TableArgs& args) {
    ParameterTriple t = args.triple.resolve();
    static const stirling::Algorithm kAll[] = {
        stirling::Algorithm::kExplicit, stirling::Algorithm::kDividedDiff,
        stirling::Algorithm::kHorner, stirling::Algorithm::kRecurrence,
        stirling::Algorithm::kRiordan};

    stirling::StirlingTriangle tri;
    bool attested = false;
    if (args.algo == "all") {
        tri = stirling::build_triangle(stirling::Algorithm::kRecurrence, args.n, t);
        for (stirling::Algorithm a : kAll) {
            if (a == stirling::Algorithm::kRecurrence) continue;
            stirling::StirlingTriangle other = stirling::build_triangle(a, args.n, t);
            for (unsigned n = 0; n <= args.n; ++n)
                for (unsigned k = 0; k <= n; ++k)
                    if (other.at(n, k) != tri.at(n, k)) {
                        std::cerr << "algorithms disagree at S(" << n << "," << k
                                  << "): recurrence=" << tri.at(n, k).str() << " "
                                  << stirling::algorithm_name(a) << "="
                                  << other.at(n, k).str() << "\n";
                        return kExitDisagreement;
                    }
        }
        attested = true;
    } else {
        tri = stirling::build_triangle(stirling::algorithm_from_name(args.algo), args.n, t);
    }

    if (args.format == "json") {
        json meta = metadata_json(t, args.algo);
        if (attested)
            meta["agreement"] = {"explicit", "dd", "horner", "recurrence", "riordan"};
        json rows = json::array();
        for (const auto& row : tri.rows) {
            json r = json::array();
            for (const auto& v : row) r.push_back(v.str());
            rows.push_back(std::move(r));
        }
        emit_json("triangle", std::move(meta), json{{"n_max", args.n}, {"rows", rows}});
    } else {
        if (attested)
            std::cerr << "agreement: explicit, dd, horner, recurrence, riordan all match\n";
        std::cout << "n,k,value\n";
        for (unsigned n = 0; n <= args.n; ++n)
            for (unsigned k = 0; k <= n; ++k)
                std::cout << n << "," << k << "," << tri.at(n, k).str() << "\n";
    }
    return kExitOk;
}

// ----------------------------------------------------------------- aseq --

struct AseqArgs {
    TripleArgs triple;
    unsigned terms = 5;
    std::string method = "generic";
    std::string format = "csv";
};

int run_aseq(const AseqArgs& args) {
    if (args.terms == 0) throw std::invalid_argument("--terms must be at least 1");
    ParameterTriple t = args.triple.resolve();
    std::vector<Rational> a;
    if (args.method == "closed") {
        a = stirling::a_sequence_closed(t, args.terms);
    } else if (args.method == "generic") {
        stirling::RiordanPair pair = stirling::stirling_generating_pair(
            t, std::max<std::size_t>(args.terms + 1, series_order()));
        a = stirling::a_sequence_generic(pair.h, args.terms);
    } else {
        throw std::invalid_argument("unknown method: " + args.method);
    }

    if (args.format == "json") {
        json terms = json::array();
        for (const auto& v : a) terms.push_back(v.str());
        emit_json("aseq", metadata_json(t, args.method), json{{"terms", terms}});
    } else {
        std::cout << "index,value\n";
        for (std::size_t i = 0; i < a.size(); ++i)
            std::cout << i << "," << a[i].str() << "\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------- function --

struct FunctionArgs {
    TripleArgs triple;
    std::string gamma, eta;
    double eps = 0.0;
    double tol = 1e-12;
    std::string zero_order = "closed";
    std::string format = "csv";
};

int run_function(const FunctionArgs& args) {
    stirling::StirlingFunctionQuery q;
    q.gamma = parse_complex(args.gamma);
    q.eta = parse_complex(args.eta);
    q.triple = args.triple.resolve();
    q.eps = args.eps;
    q.tol = args.tol;
    if (args.zero_order == "delta")
        q.zero_order = stirling::ZeroOrderMode::kKroneckerDelta;
    else if (args.zero_order != "closed")
        throw std::invalid_argument("unknown zero-order mode: " + args.zero_order);

    stirling::StirlingFunctionResult res = stirling::stirling_function(q);
    stirling::RecurrenceCheck check = stirling::verify_fn_recurrence(q);

    if (args.format == "json") {
        json payload;
        payload["value"] = {{"re", res.value.real()}, {"im", res.value.imag()}};
        payload["terms"] = res.terms;
        payload["recurrence"] = {{"applicable", check.applicable},
                                 {"residual", check.residual},
                                 {"pass", check.pass}};
        emit_json("function-value", metadata_json(q.triple, ""), std::move(payload));
    } else {
        std::cout << "value_re,value_im,terms,residual,recurrence\n";
        std::cout << fmt_double(res.value.real()) << "," << fmt_double(res.value.imag())
                  << "," << res.terms << ",";
        if (check.applicable)
            std::cout << fmt_double(check.residual) << ","
                      << (check.pass ? "pass" : "fail");
        else
            std::cout << ",n/a";
        std::cout << "\n";
    }
    return kExitOk;
}

// --------------------------------------------------------------- verify --

struct VerifyArgs {
    TripleArgs triple;
    std::string suite = "all";
    unsigned n = 8;
    std::string format = "csv";
};

struct SuiteResult {
    std::string name;
    bool pass;
    std::string counterexample;
};

SuiteResult run_egf_suite(const ParameterTriple& t, unsigned n_max) {
    SuiteResult out{"egf", true, ""};
    stirling::StirlingTriangle tri =
        stirling::stirling_triangle_recurrence(n_max, t);
    unsigned k_max = std::min(n_max, 4u);
    for (unsigned k = 0; k <= k_max && out.pass; ++k) {
        std::vector<Complex> col =
            stirling::egf_coefficients(Complex(k, 0.0), t, 0.0, n_max);
        for (unsigned n = 0; n <= n_max; ++n) {
            double exact = tri.at(n, k).to_double();
            double got = col[n].real();
            double scale = std::max(1.0, std::abs(exact));
            double err = std::hypot(got - exact, col[n].imag()) / scale;
            if (err > 1e-10) {
                out.pass = false;
                out.counterexample = "S(" + std::to_string(n) + "," + std::to_string(k) +
                                     "): triangle=" + fmt_double(exact) +
                                     " egf=" + fmt_double(got) +
                                     " err=" + fmt_double(err);
                break;
            }
        }
    }
    return out;
}

int run_verify(const VerifyArgs& args) {
    ParameterTriple t = args.triple.resolve();
    std::string suite = args.suite == "difference-identity" ? "remark22" : args.suite;
    static const std::vector<Rational> kSamples = {
        Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-3, 2)};

    std::vector<SuiteResult> results;
    auto want = [&](const char* name) { return suite == name || suite == "all"; };
    auto add = [&](const char* name, const stirling::VerifyReport& rep) {
        results.push_back({name, rep.pass, rep.counterexample});
    };
    if (want("pair-inverse")) add("pair-inverse", stirling::verify_pair_inverse(args.n, t));
    if (want("expansion")) add("expansion", stirling::verify_expansion(args.n, t, kSamples));
    if (want("remark22")) add("remark22", stirling::verify_difference_identity(args.n, t));
    if (want("aseq-identity"))
        add("aseq-identity", stirling::verify_asequence_identity(t, series_order()));
    if (want("egf")) results.push_back(run_egf_suite(t, args.n));
    if (results.empty()) throw std::invalid_argument("unknown suite: " + args.suite);

    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.pass;

    if (args.format == "json") {
        json suites = json::array();
        for (const auto& r : results) {
            json s = {{"suite", r.name}, {"pass", r.pass}};
            if (!r.pass) s["counterexample"] = r.counterexample;
            suites.push_back(std::move(s));
        }
        emit_json("verify-report", metadata_json(t, ""),
                  json{{"n", args.n}, {"pass", all_pass}, {"suites", suites}});
    } else {
        std::cout << "suite,pass,counterexample\n";
        for (const auto& r : results)
            std::cout << r.name << "," << (r.pass ? "true" : "false") << ","
                      << csv_field(r.counterexample) << "\n";
    }
    return all_pass ? kExitOk : kExitVerifyFail;
}

// ----------------------------------------------------------------- asym --

struct AsymArgs {
    TripleArgs triple;
    unsigned n = 0;
    std::vector<unsigned long> mu;
    unsigned m = 2;
    double eps = 0.0;
    bool central = false;
    std::string format = "csv";
};

int run_asym(const AsymArgs& args) {
    ParameterTriple t = args.triple.resolve();
    stirling::AsymErrorStudy study =
        stirling::asym_error_study(args.n, args.mu, t, args.eps, args.m, args.central);

    if (args.format == "json") {
        json rows = json::array();
        for (const auto& row : study.rows)
            rows.push_back({{"mu", row.mu},
                            {"exact", row.exact_norm.str()},
                            {"estimate", row.estimate.str()},
                            {"rel_error", row.rel_error}});
        emit_json("asym-study", metadata_json(t, ""),
                  json{{"n", args.n},
                       {"m", args.m},
                       {"central", args.central},
                       {"rows", rows},
                       {"monotone_decreasing", study.monotone_decreasing}});
    } else {
        std::cout << "mu,exact,estimate,rel_error\n";
        for (const auto& row : study.rows)
            std::cout << row.mu << "," << row.exact_norm.str() << ","
                      << row.estimate.str() << "," << fmt_double(row.rel_error) << "\n";
    }
    return kExitOk;
}

// -------------------------------------------------------------- presets --

struct PresetsArgs {
    std::string name;
    std::vector<std::string> params;
    std::string format = "csv";
};

int run_presets(const PresetsArgs& args) {
    if (!args.name.empty()) {
        TripleArgs ta;
        ta.preset = args.name;
        ta.params = args.params;
        stirling::PresetTriple pt = stirling::preset_lookup(args.name, ta.parsed_params());
        if (args.format == "json") {
            json payload;
            payload["name"] = args.name;
            payload["alpha"] = pt.triple.alpha.str();
            payload["beta"] = pt.triple.beta.str();
            payload["r"] = pt.triple.r.str();
            if (pt.dual) {
                payload["dual"] = {{"alpha", pt.dual->alpha.str()},
                                   {"beta", pt.dual->beta.str()},
                                   {"r", pt.dual->r.str()}};
            }
            emit_json("preset", metadata_json(pt.triple, ""), std::move(payload));
        } else {
            std::cout << "name,alpha,beta,r,dual_alpha,dual_beta,dual_r\n";
            std::cout << args.name << "," << pt.triple.alpha.str() << ","
                      << pt.triple.beta.str() << "," << pt.triple.r.str() << ",";
            if (pt.dual)
                std::cout << pt.dual->alpha.str() << "," << pt.dual->beta.str() << ","
                          << pt.dual->r.str();
            else
                std::cout << ",,";
            std::cout << "\n";
        }
        return kExitOk;
    }

    const auto& catalog = stirling::preset_catalog();
    if (args.format == "json") {
        json list = json::array();
        for (const auto& p : catalog) {
            json e;
            e["name"] = p.name;
            e["params"] = p.params;
            e["has_dual"] = p.has_dual;
            e["description"] = p.description;
            list.push_back(std::move(e));
        }
        json meta;
        meta["generated_at"] = iso_timestamp();
        meta["tool_version"] = kToolVersion;
        emit_json("preset-catalog", std::move(meta), json{{"presets", list}});
    } else {
        std::cout << "name,params,has_dual,description\n";
        for (const auto& p : catalog) {
            std::string params;
            for (std::size_t i = 0; i < p.params.size(); ++i) {
                if (i) params += ";";
                params += p.params[i];
            }
            std::cout << p.name << "," << params << ","
                      << (p.has_dual ? "true" : "false") << ","
                      << csv_field(p.description) << "\n";
        }
    }
    return kExitOk;
}

int dispatch(const std::function<int()>& runner) {
    try {
        return runner();
    } catch (const stirling::pole_error& e) {
        std::cerr << "error: " << e.what() << " (argument " << e.argument << ")\n";
        return kExitRegime;
    } catch (const stirling::regime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRegime;
    } catch (const stirling::convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const stirling::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const stirling::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Stirling numbers, functions and asymptotics"};
    app.require_subcommand(1);

    TableArgs table;
    CLI::App* cmd_table = app.add_subcommand("table", "emit the triangle S(n,k)");
    table.triple.attach(cmd_table);
    cmd_table->add_option("--n", table.n, "largest row index")->required();
    cmd_table->add_option("--algo", table.algo,
                          "explicit|dd|horner|recurrence|riordan|all");
    cmd_table->add_option("--format", table.format, "csv|json");

    AseqArgs aseq;
    CLI::App* cmd_aseq = app.add_subcommand("aseq", "emit the Riordan A-sequence");
    aseq.triple.attach(cmd_aseq);
    cmd_aseq->add_option("--terms", aseq.terms, "number of terms (default 5)");
    cmd_aseq->add_option("--method", aseq.method, "closed|generic");
    cmd_aseq->add_option("--format", aseq.format, "csv|json");

    FunctionArgs fn;
    CLI::App* cmd_fn = app.add_subcommand("function", "evaluate S(gamma, eta; eps)");
    fn.triple.attach(cmd_fn);
    cmd_fn->add_option("--gamma", fn.gamma, "complex order, e.g. 1.5 or 1.5+0.5i")
        ->required();
    cmd_fn->add_option("--eta", fn.eta, "complex order")->required();
    cmd_fn->add_option("--eps", fn.eps, "weight exponent, >= 0");
    cmd_fn->add_option("--tol", fn.tol, "series stopping tolerance");
    cmd_fn->add_option("--zero-order", fn.zero_order,
                       "value convention at gamma=0: closed|delta");
    cmd_fn->add_option("--format", fn.format, "csv|json");

    VerifyArgs verify;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run identity suites");
    verify.triple.attach(cmd_verify);
    cmd_verify->add_option(
        "--suite", verify.suite,
        "pair-inverse|expansion|remark22|aseq-identity|egf|all");
    cmd_verify->add_option("--n", verify.n, "order bound (default 8)");
    cmd_verify->add_option("--format", verify.format, "csv|json");

    AsymArgs asym;
    CLI::App* cmd_asym = app.add_subcommand("asym", "asymptotic error study");
    asym.triple.attach(cmd_asym);
    cmd_asym->add_option("--n", asym.n, "expansion index n")->required();
    cmd_asym->add_option("--mu", asym.mu, "mu grid, comma separated")
        ->required()
        ->delimiter(',');
    cmd_asym->add_option("--m", asym.m, "retained terms (default 2)");
    cmd_asym->add_option("--eps", asym.eps, "weight exponent (study requires 0)");
    cmd_asym->add_flag("--central", asym.central, "use the central form r -> r/mu");
    cmd_asym->add_option("--format", asym.format, "csv|json");

    PresetsArgs presets;
    CLI::App* cmd_presets = app.add_subcommand("presets", "list or resolve presets");
    cmd_presets->add_option("--name", presets.name, "resolve one preset");
    cmd_presets->add_option("--param", presets.params,
                            "preset parameter as name=value, repeatable");
    cmd_presets->add_option("--format", presets.format, "csv|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    for (const auto& [cmd, fmt] :
         std::initializer_list<std::pair<CLI::App*, const std::string*>>{
             {cmd_table, &table.format},
             {cmd_aseq, &aseq.format},
             {cmd_fn, &fn.format},
             {cmd_verify, &verify.format},
             {cmd_asym, &asym.format},
             {cmd_presets, &presets.format}}) {
        if (cmd->parsed() && *fmt != "csv" && *fmt != "json") {
            std::cerr << "error: unknown format: " << *fmt << "\n";
            return kExitParse;
        }
    }

    if (cmd_table->parsed()) return dispatch([&] { return run_table(table); });
    if (cmd_aseq->parsed()) return dispatch([&] { return run_aseq(aseq); });
    if (cmd_fn->parsed()) return dispatch([&] { return run_function(fn); });
    if (cmd_verify->parsed()) return dispatch([&] { return run_verify(verify); });
    if (cmd_asym->parsed()) return dispatch([&] { return run_asym(asym); });
    if (cmd_presets->parsed()) return dispatch([&] { return run_presets(presets); });
    return kExitParse;
}
