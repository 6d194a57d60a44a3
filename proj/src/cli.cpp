#include "plab/cli.hpp"

#include "plab/errors.hpp"
#include "plab/verify.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace plab {

namespace {

void emit(std::ostream& out, Json body)
{
    Json doc = {{"schema", kSchemaVersion}};
    for (auto& [k, v] : body.items()) doc[k] = std::move(v);
    out << doc.dump(2) << '\n';
}

struct PreimagesArgs {
    int d = 2;
    std::string c, a = "0";
    int depth = 12;
};

int run_preimages(const PreimagesArgs& args, std::ostream& out)
{
    if (args.d < 2) throw DomainError("-d must be at least 2");
    if (args.depth < 1) throw DomainError("--max-depth must be at least 1");
    Rational c = parse_rational(args.c);
    Rational a = parse_rational(args.a);
    auto tree = iterated_preimages(args.d, c, a, args.depth);
    Json body = to_json(tree);
    body["max_depth"] = std::to_string(args.depth);
    if (args.d >= 3 && a == 0) body["predicted_count"] = std::to_string(corollary_count(args.d, c));
    emit(out, body);
    return kExitOk;
}

int run_cd_points(long d, unsigned long bound, std::ostream& out)
{
    if (bound < 1) throw DomainError("--height-bound must be at least 1");
    DValue D = d_value_from(d);
    Json points = Json::array(), pairs = Json::array();
    for (const auto& p : cd_search(D, bound)) {
        points.push_back(to_json(p));
        auto [A, B] = compute_AB(clear_denominators(p, D), D);
        DeltaPair pair = delta_pair(A, B);
        Json row = to_json(p);
        row["A"] = to_json(A);
        row["B"] = to_json(B);
        row["delta_A"] = to_json(pair.delta_A);
        row["delta_B"] = to_json(pair.delta_B);
        row["candidate"] = is_candidate_pair(pair);
        pairs.push_back(row);
    }
    emit(out, {{"D", std::to_string(d)}, {"bound", std::to_string(bound)}, {"points", points}, {"delta_pairs", pairs}});
    return kExitOk;
}

int run_curve_ideal(int N, const std::string& a_text, std::optional<std::uint64_t> factor_mod, std::ostream& out)
{
    Rational a = parse_rational(a_text);
    auto ideal = preimage_ideal(N, a);
    Json gens = Json::array();
    for (const auto& g : ideal.gens) gens.push_back(g.to_string());
    Json vars = Json::array();
    for (const auto& v : ideal.gens.front().vars()) vars.push_back(v);
    Json body = {{"N", std::to_string(N)}, {"a", to_string(a)}, {"variables", vars}, {"generators", gens}};
    if (N <= 16) {
        Json boundary = Json::array();
        for (const auto& p : boundary_points(N)) boundary.push_back(to_json(p));
        body["boundary_points"] = boundary;
    }
    if (factor_mod) {
        MPoly F = ramification_poly();
        body["ramification_poly"] = F.to_string();
        body["factor_mod"] = to_json(factor_mod_p(F, *factor_mod), "c");
    }
    emit(out, body);
    return kExitOk;
}

int run_xt_class(long n, std::ostream& out)
{
    ECPoint P = ec_mul(curve_E(), n, point_Q0());
    SquareClass cls = x_minus_T(P);
    Json body = {{"n", std::to_string(n)}, {"point", to_json(P)}, {"class", to_string(cls.canonical_tag)}};
    body["representative"] = to_json(cls.representative);
    emit(out, body);
    return kExitOk;
}

int run_dm_search(int n, long bound, std::ostream& out)
{
    if (n < 4) throw DomainError("-n must be at least 4");
    if (bound < 0) throw DomainError("--bound must be non-negative");
    emit(out, to_json(dm_search(n, bound)));
    return kExitOk;
}

int run_verify(const VerifyConfig& config, bool timing, std::ostream& out)
{
    auto report = run_verification(config);
    out << to_json(report, timing).dump(2) << '\n';
    return report.all_passed() ? kExitOk : kExitFailure;
}

} // namespace

int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rational iterated preimages of 0 under x^d + c: exact computations and checks", "preimage_lab"};
    app.require_subcommand(1);

    PreimagesArgs pre;
    auto* preimages = app.add_subcommand("preimages", "Iterated rational preimages as JSON levels");
    preimages->add_option("-d", pre.d, "Degree d >= 2")->required();
    preimages->add_option("-c", pre.c, "Parameter c, as p or p/q")->required();
    preimages->add_option("-a", pre.a, "Root value (default 0)");
    preimages->add_option("--max-depth", pre.depth, "Depth limit (default 12)");

    long d_value = 1;
    unsigned long cd_bound = 100;
    auto* cd = app.add_subcommand("cd-points", "Rational points of D^2 y^4 = x^3 - x + 1");
    cd->add_option("-D", d_value, "One of +-1, +-2, +-23, +-46")->required();
    cd->add_option("--height-bound", cd_bound, "Naive height bound for x (default 100)");

    int ideal_N = 4;
    std::string ideal_a = "0";
    std::optional<std::uint64_t> factor_mod;
    auto* ideal = app.add_subcommand("curve-ideal", "Generators of the preimage curve ideal");
    ideal->add_option("-N", ideal_N, "Number of iterates N >= 2")->required();
    ideal->add_option("-a", ideal_a, "Target value a (default 0)");
    ideal->add_option("--factor-mod", factor_mod, "Also factor F(c) modulo this prime");

    long xt_n = 0;
    auto* xt = app.add_subcommand("xt-class", "Square class of u - theta at n*Q0");
    xt->add_option("-n", xt_n, "Multiple of Q0")->required();

    int dm_n = 4;
    long dm_bound = 50;
    auto* dm = app.add_subcommand("dm-search", "Primitive solutions of x^n + y^n = z^2");
    dm->add_option("-n", dm_n, "Exponent n >= 4")->required();
    dm->add_option("--bound", dm_bound, "Bound on |x| and |y| (default 50)");

    VerifyConfig vc;
    bool no_timing = false;
    auto* verify = app.add_subcommand("verify-paper", "Run every acceptance check and print the report");
    verify->add_option("--height-bound", vc.height_bound, "Height bound for C_D searches (default 1000)");
    verify->add_option("--dm-bound", vc.dm_bound, "Bound for the x^n + y^n = z^2 scan (default 200)");
    verify->add_option("--grid-p", vc.grid_p, "Numerator bound of the c grid (default 40)");
    verify->add_option("--grid-q", vc.grid_q, "Denominator bound of the c grid (default 6)");
    verify->add_option("--depth", vc.depth, "Preimage depth limit (default 12)");
    verify->add_option("--only", vc.only, "Run only these check ids");
    verify->add_option("--inject-failure", vc.inject_failure, "Mark these checks as failed (harness testing)");
    verify->add_flag("--no-timing", no_timing, "Omit elapsed times so reports compare byte for byte");

    std::vector<std::string> storage{"preimage_lab"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kExitUsage;
    }

    try {
        if (*preimages) return run_preimages(pre, out);
        if (*cd) return run_cd_points(d_value, cd_bound, out);
        if (*ideal) return run_curve_ideal(ideal_N, ideal_a, factor_mod, out);
        if (*xt) return run_xt_class(xt_n, out);
        if (*dm) return run_dm_search(dm_n, dm_bound, out);
        if (*verify) return run_verify(vc, !no_timing, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    err << app.help();
    return kExitUsage;
}

} // namespace plab
