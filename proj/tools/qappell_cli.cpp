// Command-line surface: exact polynomial tables, point evaluation, and the
// identity-verification harness. All output is byte-deterministic: exact
// rationals only, canonical term order, sorted JSON keys.
//
// Exit codes: 0 success, 1 verification failures, 2 invalid flags or input,
// 3 family-construction errors.

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qappell/qappell.hpp"

namespace {

using namespace qappell;
using nlohmann::json;

struct FamilyOptions {
    std::string family = "bernoulli";
    long alpha = 1;
    std::string q_str = "1/2";
    std::string u_str = "1";
    std::string vars = "x";
    bool quasi = false;
};

void add_family_flags(CLI::App* cmd, FamilyOptions& opt) {
    cmd->add_option("--family", opt.family,
                    "bernoulli | euler | genocchi | path to a custom descriptor (JSON with a "
                    "\"base\" coefficient list)");
    cmd->add_option("--alpha", opt.alpha, "integer order of the family");
    cmd->add_option("--q", opt.q_str, "rational q parameter, as p/q or p");
    cmd->add_option("--u", opt.u_str, "rational deformation parameter u");
    cmd->add_option("--vars", opt.vars, "x | xy | xyz (xyz selects the trivariate quasi family)")
        ->check(CLI::IsMember({"x", "xy", "xyz"}));
    cmd->add_flag("--quasi", opt.quasi, "emit the quasi family (xy only; xyz is always quasi)");
}

AppellFamily build_family(const FamilyOptions& opt, int order, const CtxPtr& ctx) {
    if (opt.family == "bernoulli")
        return AppellFamily::named(NamedKind::bernoulli, opt.alpha, order, ctx);
    if (opt.family == "euler") return AppellFamily::named(NamedKind::euler, opt.alpha, order, ctx);
    if (opt.family == "genocchi")
        return AppellFamily::named(NamedKind::genocchi, opt.alpha, order, ctx);
    // anything else is a custom descriptor file
    std::ifstream in(opt.family);
    if (!in) throw ParseError("cannot open family file: " + opt.family);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad family file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("base") || !j["base"].is_array() || j["base"].empty())
        throw ParseError("custom family file needs a nonempty \"base\" coefficient array");
    std::vector<Rational> base;
    for (const auto& v : j["base"]) base.push_back(Rational::parse(v.get<std::string>()));
    base.resize(static_cast<std::size_t>(order) + 1, Rational(0)); // zero-extend to the order
    return AppellFamily::from_series(TruncSeries::from_scalar_coeffs(base, ctx), opt.alpha,
                                     "custom(" + std::to_string(opt.alpha) + ")");
}

json family_descriptor(const FamilyOptions& opt, const AppellFamily& F) {
    json a = json::array();
    for (const auto& r : F.numbers()) a.push_back(r.str());
    std::string kind = opt.family;
    if (kind != "bernoulli" && kind != "euler" && kind != "genocchi") kind = "custom";
    return json{{"kind", kind},       {"alpha", F.alpha()},
                {"order", F.order()}, {"q", F.context().q().str()},
                {"u", F.context().u().str()}, {"a", a}};
}

MultiPoly select_polynomial(const FamilyOptions& opt, const AppellFamily& F, int n) {
    if (opt.vars == "x") {
        if (opt.quasi) throw ParseError("no univariate quasi family; use --vars xy or xyz");
        return appell_poly(F, n);
    }
    if (opt.vars == "xy") return opt.quasi ? quasi_homog(F, n) : appell_bivar(F, n);
    return quasi_trivar(F, n);
}

int emit_table(const FamilyOptions& opt, int n, const std::string& format) {
    auto ctx = std::make_shared<QContext>(Rational::parse(opt.q_str), Rational::parse(opt.u_str));
    AppellFamily F = build_family(opt, n, ctx);
    MultiPoly p = select_polynomial(opt, F, n);
    if (format == "csv") {
        std::cout << "ex,ey,ez,ew,ea,coeff\n";
        for (const auto& [e, c] : p.terms())
            std::cout << e[0] << "," << e[1] << "," << e[2] << "," << e[3] << "," << e[4] << ","
                      << c.str() << "\n";
    } else {
        json out{{"family", family_descriptor(opt, F)},
                 {"n", n},
                 {"vars", opt.vars},
                 {"quasi", opt.quasi || opt.vars == "xyz"},
                 {"poly", poly_to_json(p)}};
        std::cout << out.dump(1) << "\n";
    }
    return 0;
}

std::map<Var, Rational> parse_assignments(const std::string& at) {
    std::map<Var, Rational> point;
    std::size_t pos = 0;
    while (pos < at.size()) {
        std::size_t comma = at.find(',', pos);
        std::string item = at.substr(pos, comma == std::string::npos ? comma : comma - pos);
        pos = comma == std::string::npos ? at.size() : comma + 1;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError("assignment must look like x=1/2: \"" + item + "\"");
        std::string name = item.substr(0, eq);
        Var v;
        if (name == "x") v = Var::x;
        else if (name == "y") v = Var::y;
        else if (name == "z") v = Var::z;
        else if (name == "w") v = Var::w;
        else if (name == "a") v = Var::a;
        else throw ParseError("unknown variable in assignment: \"" + name + "\"");
        point[v] = Rational::parse(item.substr(eq + 1));
    }
    if (point.empty()) throw ParseError("--at lists no assignments");
    return point;
}

int emit_eval(const FamilyOptions& opt, int n, const std::string& at) {
    auto ctx = std::make_shared<QContext>(Rational::parse(opt.q_str), Rational::parse(opt.u_str));
    AppellFamily F = build_family(opt, n, ctx);
    MultiPoly p = select_polynomial(opt, F, n);
    std::cout << p.eval(parse_assignments(at)).str() << "\n";
    return 0;
}

int emit_verify(const std::string& suite, int max_n, int order, const std::string& grid_arg) {
    GridSpec grid =
        grid_arg == "default" ? GridSpec::default_grid() : GridSpec::from_file(grid_arg);
    std::vector<std::string> names;
    if (suite == "all")
        names = verify_suite_names();
    else
        names.push_back(suite);
    json out;
    bool pass = true;
    out["suites"] = json::array();
    for (const auto& name : names) {
        SuiteResult r = run_suite(name, grid, max_n, order);
        pass = pass && r.pass();
        out["suites"].push_back(r.to_json());
    }
    out["pass"] = pass;
    std::cout << out.dump(1) << "\n";
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series calculator for deformed q-Appell polynomial families"};
    app.require_subcommand(1);

    FamilyOptions topt;
    int tn = 0;
    std::string tformat = "json";
    CLI::App* table = app.add_subcommand("table", "print one polynomial with exact coefficients");
    add_family_flags(table, topt);
    table->add_option("--n", tn, "polynomial index")->required();
    table->add_option("--format", tformat, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    FamilyOptions eopt;
    int en = 0;
    std::string at;
    CLI::App* ev = app.add_subcommand("eval", "evaluate one polynomial at a rational point");
    add_family_flags(ev, eopt);
    ev->add_option("--n", en, "polynomial index")->required();
    ev->add_option("--at", at, "comma-separated assignments, e.g. x=1/2,y=3")->required();

    std::string suite = "all", grid_arg = "default";
    int max_n = 8, order = 8;
    CLI::App* verify = app.add_subcommand("verify", "run identity-verification suites");
    verify->add_option("--suite", suite, "suite name or all")
        ->check(CLI::IsMember({"derivatives", "characterization", "asequence", "addition",
                               "operators", "genfun", "mehler", "rogers", "setalgebra",
                               "qkernel", "leibniz", "all"}));
    verify->add_option("--max-n", max_n, "largest polynomial index checked");
    verify->add_option("--order", order, "series truncation order");
    verify->add_option("--grid", grid_arg, "default | path to a grid JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (table->parsed()) return emit_table(topt, tn, tformat);
        if (ev->parsed()) return emit_eval(eopt, en, at);
        return emit_verify(suite, max_n, order, grid_arg);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MissingAssignment& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // family construction: vanishing constant terms, u = 0 where rejected, ...
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
