// dcas: command-line front end. Every subcommand prints JSON on stdout.
#include "dcas/diagonal.hpp"
#include "dcas/elliptic.hpp"
#include "dcas/error.hpp"
#include "dcas/json_io.hpp"
#include "dcas/lattice.hpp"
#include "dcas/multipoly.hpp"
#include "dcas/ode.hpp"
#include "dcas/registry.hpp"
#include "dcas/series.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace dcas;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

bool g_pretty = false;

void emit(const json& j) { std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n"; }

// A file name if one exists, otherwise the literal text.
std::string text_or_file(const std::string& arg) {
    std::error_code ec;
    if (arg.size() < 4096 && std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

json read_json(const std::string& arg) {
    try {
        return json::parse(text_or_file(arg));
    } catch (const json::exception& e) {
        throw Error(Errc::Parse, std::string("invalid JSON: ") + e.what());
    }
}

std::vector<Rat> rats(const std::vector<std::string>& v) {
    std::vector<Rat> out;
    for (const auto& s : v) out.push_back(parse_rat(s));
    return out;
}

bool usage_error(Errc c) {
    switch (c) {
        case Errc::Parse:
        case Errc::UnknownIdentifier:
        case Errc::UnknownCase:
        case Errc::Registry:
        case Errc::InvalidArgument: return true;
        default: return false;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact diagonals, genus, j-invariants and ODE guessing over Q"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g_pretty, "Indented JSON output");

    // diag
    std::string expr, vars;
    int order = 10;
    bool force = false;
    auto* diag = app.add_subcommand("diag", "Diagonal series of a rational function");
    diag->add_option("--expr", expr, "Expression text or file")->required();
    diag->add_option("--vars", vars, "Comma-separated variables")->required();
    diag->add_option("--order", order, "Truncation order")->required();
    diag->add_flag("--force", force, "Lift the size guard");

    // genus
    std::string curve;
    auto* genus = app.add_subcommand("genus", "Generic genus from the Newton polygon");
    genus->add_option("--curve", curve, "Curve text or file")->required();
    genus->add_option("--vars", vars, "x,y then any coefficient symbols")->required();

    // jinv / hauptmodul
    std::string qvar, param = "p";
    auto add_curve_opts = [&](CLI::App* c) {
        c->add_option("--curve", curve, "Curve text or file")->required();
        c->add_option("--vars", vars, "The two curve variables (default x,y)");
        c->add_option("--quadratic-in", qvar, "Variable the curve is quadratic in")->required();
        c->add_option("--param", param, "Parameter name");
    };
    auto* jinv = app.add_subcommand("jinv", "j-invariant of a curve quadratic in one variable");
    add_curve_opts(jinv);
    auto* haupt = app.add_subcommand("hauptmodul", "Hauptmodul 1728/j");
    add_curve_opts(haupt);

    // pullback2f1
    std::vector<std::string> prefactor, upper, lower{"1"};
    std::string h, var = "x";
    auto* pb = app.add_subcommand("pullback2f1", "Series of A(x) * pFq(h(x))");
    pb->add_option("--prefactor", prefactor, "Factor BASE:EXP, repeatable");
    pb->add_option("--upper", upper, "Upper parameters")->delimiter(',')->required();
    pb->add_option("--lower", lower, "Lower parameters")->delimiter(',');
    pb->add_option("--pullback", h, "Pullback h, rational in the variable")->required();
    pb->add_option("--var", var, "Series variable");
    pb->add_option("--order", order, "Truncation order")->required();

    // guess-ode / apply-ode
    std::string series_arg, op_arg;
    int max_order = 2, max_degree = 4, margin = kGuessMargin;
    auto* guess = app.add_subcommand("guess-ode", "Least annihilating operator within bounds");
    guess->add_option("--series", series_arg, "Series JSON or file")->required();
    guess->add_option("--max-order", max_order)->required();
    guess->add_option("--max-degree", max_degree)->required();
    guess->add_option("--margin", margin, "Extra equations beyond the unknown count");
    auto* applyc = app.add_subcommand("apply-ode", "Apply an operator to a series");
    applyc->add_option("--op", op_arg, "Operator JSON or file")->required();
    applyc->add_option("--series", series_arg, "Series JSON or file")->required();

    // verify
    std::string case_name, tag, registry_path;
    bool all = false;
    std::uint64_t seed = kDefaultSeed;
    unsigned jobs = 1;
    auto* verify = app.add_subcommand("verify", "Run golden cases from the registry");
    auto* case_opt = verify->add_option("--case", case_name, "Case name");
    auto* all_opt = verify->add_flag("--all", all, "Every case");
    case_opt->excludes(all_opt);
    verify->add_option("--tag", tag, "Only cases with this tag");
    verify->add_option("--seed", seed, "Seed for randomised spot checks");
    verify->add_option("--jobs", jobs, "Worker threads");
    verify->add_option("--registry", registry_path, "Registry file (default $DCAS_REGISTRY)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    auto split = [](const std::string& s) {
        VarList v;
        std::stringstream ss(s);
        for (std::string t; std::getline(ss, t, ',');)
            if (!t.empty()) v.push_back(t);
        return v;
    };

    try {
        if (diag->parsed()) {
            RationalFunction r = parse_expression(text_or_file(expr), split(vars));
            emit(to_json(diagonal(r, order, force)));
        } else if (genus->parsed()) {
            VarList v = split(vars);
            if (v.size() < 2) throw Error(Errc::InvalidArgument, "--vars needs the two curve variables");
            MultiPoly m = parse_polynomial(text_or_file(curve), v);
            emit(to_json(generic_genus(m, v[0], v[1])));
        } else if (jinv->parsed() || haupt->parsed()) {
            VarList v = vars.empty() ? VarList{"x", "y"} : split(vars);
            if (v.size() != 2) throw Error(Errc::InvalidArgument, "--vars takes exactly two curve variables");
            if (qvar != v[0] && qvar != v[1]) throw Error(Errc::InvalidArgument, "--quadratic-in must be a curve variable");
            const std::string other = qvar == v[0] ? v[1] : v[0];
            MultiPoly m = parse_polynomial(text_or_file(curve), {v[0], v[1], param});
            CurvePoly c = CurvePoly::from_multipoly(m, other, qvar, param);
            if (jinv->parsed()) {
                emit({{"j", to_json(j_invariant(c, qvar))}});
            } else {
                Hauptmodul hm = hauptmodul(c, qvar);
                emit(hm.infinite ? json{{"infinite", true}} : json{{"infinite", false}, {"hauptmodul", to_json(hm.value)}});
            }
        } else if (pb->parsed()) {
            AlgebraicPrefactor a;
            for (const auto& f : prefactor) {
                auto colon = f.rfind(':');
                if (colon == std::string::npos) throw Error(Errc::InvalidArgument, "prefactor must be BASE:EXP");
                a.times(parse_unirat(f.substr(0, colon), var), parse_rat(f.substr(colon + 1)));
            }
            emit(to_json(pullbacked_solution(a, rats(upper), rats(lower), parse_unirat(h, var), order)));
        } else if (guess->parsed()) {
            auto op = guess_ode(series_from_json(read_json(series_arg)), max_order, max_degree, margin);
            emit(op ? json{{"found", true}, {"operator", to_json(*op)}} : json{{"found", false}});
        } else if (applyc->parsed()) {
            DiffOp op = diffop_from_json(read_json(op_arg));
            PowerSeries s = series_from_json(read_json(series_arg));
            PowerSeries r = apply(op, s);
            emit({{"result", to_json(r)}, {"is_zero", r.is_zero()}});
        } else if (verify->parsed()) {
            Registry reg = Registry::load_file(registry_path.empty() ? Registry::default_path() : registry_path);
            if (!case_name.empty()) {
                CaseReport rep = reg.run_case(case_name, seed);
                emit(rep.to_json());
                return rep.passed ? 0 : kExitFail;
            }
            if (!all && tag.empty()) throw Error(Errc::InvalidArgument, "verify needs --case, --all or --tag");
            Summary s = reg.run_all(tag.empty() ? std::nullopt : std::optional<std::string>(tag), seed, jobs);
            emit(s.to_json());
            return s.ok() ? 0 : kExitFail;
        }
    } catch (const Error& e) {
        std::cerr << json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump() << "\n";
        return usage_error(e.code()) ? kExitUsage : kExitFail;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return kExitFail;
    }
    return 0;
}
