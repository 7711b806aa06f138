// gradla: command-line front end for the graded linear algebra library.
#include "gradla/berezinian.hpp"
#include "gradla/error.hpp"
#include "gradla/io.hpp"
#include "gradla/sweeps.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace gradla;
using io::Json;

namespace {

struct Options {
    std::string algebra, matrix, sigma = "auto", degrees, lambda, format = "json", suite = "all";
    std::uint64_t seed = 1;
    long instances = 200;
    bool all = false;
};

struct Inputs {
    GradedAlgebra alg;
    GradedMatrix x;
    Json digests = Json::object();
};

std::string digest_of(const Json& j)
{
    return digest(j.dump());
}

GradedAlgebra require_algebra(const Options& o, Json& digests)
{
    if (o.algebra.empty())
        fail(ErrorCode::ParseError, "--algebra is required");
    GradedAlgebra a = io::load_algebra(o.algebra);
    digests["algebra"] = digest_of(io::to_json(a));
    return a;
}

Inputs load_inputs(const Options& o)
{
    Inputs in;
    in.alg = require_algebra(o, in.digests);
    if (o.matrix.empty())
        fail(ErrorCode::ParseError, "--matrix is required");
    in.x = io::matrix_from_json(in.alg, io::read_json_file(o.matrix));
    if (!o.degrees.empty())
        in.x = io::override_degrees(in.x, io::parse_json(o.degrees, "--degrees"));
    in.digests["matrix"] = digest_of(io::to_json(in.x));
    return in;
}

Multiplier load_sigma(const Options& o, const GradedAlgebra& a, Json& digests)
{
    Multiplier s = o.sigma == "auto" ? canonical_multiplier(a) : io::multiplier_from_json(io::read_json_file(o.sigma));
    digests["sigma"] = digest_of(io::to_json(s));
    return s;
}

void emit(const Options& o, const Json& doc, const std::string& pretty)
{
    if (o.format == "pretty")
        std::cout << pretty << "\n";
    else
        std::cout << doc.dump() << "\n";
}

void emit_element(const Options& o, const AlgebraElement& e, const Json& digests)
{
    Json doc = io::result_document(e);
    doc["inputs"] = digests;
    std::string deg = doc["degree"].is_string() ? "inhomogeneous" : e.homogeneous_degree()->to_string();
    emit(o, doc, e.to_string() + "    (degree " + deg + ")");
}

int run_verify(const Options& o)
{
    SweepConfig cfg;
    cfg.seed = o.seed;
    cfg.instances = o.instances;
    Json props = Json::array();
    std::string pretty;
    bool ok = true;
    for (const auto& r : run_property_sweeps(o.suite, cfg)) {
        Json failures = Json::array();
        for (const auto& f : r.failures)
            failures.push_back({{"digest", f.digest}, {"expected", f.expected}, {"got", f.got}});
        props.push_back({{"property", r.property}, {"instances", r.instances}, {"failures", failures}});
        pretty += std::string(r.ok() ? "PASS " : "FAIL ") + r.property + " (" + std::to_string(r.instances) + ")\n";
        ok = ok && r.ok();
    }
    Json doc = {{"format", 1}, {"suite", o.suite}, {"seed", o.seed}, {"ok", ok}, {"properties", props}};
    emit(o, doc, pretty.empty() ? pretty : pretty.substr(0, pretty.size() - 1));
    return ok ? 0 : (int)ErrorKind::Verification;
}

int dispatch(const std::string& cmd, const Options& o)
{
    if (cmd == "verify")
        return run_verify(o);
    if (cmd == "solve-sigma") {
        Json digests = Json::object();
        Bicharacter lambda;
        std::optional<GradedAlgebra> alg;
        if (!o.lambda.empty())
            lambda = io::bicharacter_from_json(io::read_json_file(o.lambda));
        else
            lambda = (alg = require_algebra(o, digests))->lambda();
        require_commutation_factor(lambda);
        if (o.all) {
            // for an algebra, one multiplier per distinct restriction to its support subgroup
            Json list = Json::array();
            std::string pretty;
            for (const auto& s : alg ? ns_multipliers(*alg) : enumerate_ns_multipliers(lambda)) {
                list.push_back(io::to_json(s));
                pretty += io::to_json(s)["exponents"].dump() + "\n";
            }
            emit(o, {{"format", 1}, {"multipliers", list}}, pretty.substr(0, pretty.size() - 1));
        } else {
            Json doc = io::to_json(solve_ns_multiplier(lambda));
            doc["format"] = 1;
            emit(o, doc, doc["exponents"].dump());
        }
        return 0;
    }
    if (cmd == "twist") {
        Json digests = Json::object();
        GradedAlgebra a = require_algebra(o, digests);
        GradedAlgebra t = twist(a, load_sigma(o, a, digests));
        Json doc = io::to_json(t);
        std::string pretty;
        for (int i = 0; i < t.dim(); ++i) {
            for (int j = 0; j < t.dim(); ++j)
                pretty += (j ? "  " : "") + (t.basis(i) * t.basis(j)).to_string();
            pretty += i + 1 < t.dim() ? "\n" : "";
        }
        emit(o, doc, pretty);
        return 0;
    }

    Inputs in = load_inputs(o);
    if (cmd == "trace")
        emit_element(o, graded_trace(in.x), in.digests);
    else if (cmd == "gdet0")
        emit_element(o, gdet0(in.x), in.digests);
    else if (cmd == "gdet0-leibniz")
        emit_element(o, gdet0_leibniz(in.x), in.digests);
    else if (cmd == "gdet")
        emit_element(o, gdet_sigma(in.x, load_sigma(o, in.alg, in.digests)), in.digests);
    else if (cmd == "gber")
        emit_element(o, gber(in.x, load_sigma(o, in.alg, in.digests)), in.digests);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Linear algebra over graded-commutative algebras"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool matrix, bool sigma) {
        sub->add_option("--algebra", o.algebra, "algebra JSON file or preset:NAME[:args]");
        if (matrix) {
            sub->add_option("--matrix", o.matrix, "matrix JSON file");
            sub->add_option("--degrees", o.degrees, "inline JSON degree override");
        }
        if (sigma)
            sub->add_option("--sigma", o.sigma, "multiplier JSON file or auto");
        sub->add_option("--format", o.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
    };
    common(app.add_subcommand("trace", "graded trace"), true, false);
    common(app.add_subcommand("gdet0", "graded determinant of a degree-0 matrix"), true, false);
    common(app.add_subcommand("gdet0-leibniz", "gdet0 through the ordered Leibniz formula"), true, false);
    common(app.add_subcommand("gdet", "Gdet_sigma of an even matrix"), true, true);
    common(app.add_subcommand("gber", "graded Berezinian of a parity-sorted even matrix"), true, true);
    common(app.add_subcommand("twist", "sigma-twisted multiplication table"), false, true);
    auto* solve = app.add_subcommand("solve-sigma", "NS-multiplier for the commutation factor");
    common(solve, false, false);
    solve->add_option("--lambda", o.lambda, "commutation factor JSON file (instead of --algebra)");
    solve->add_flag("--all", o.all, "list every NS-multiplier (2-torsion groups)");
    auto* verify = app.add_subcommand("verify", "run randomized property sweeps");
    verify->add_option("--suite", o.suite, "suite name or all");
    verify->add_option("--seed", o.seed, "sweep seed");
    verify->add_option("--instances", o.instances, "random instances per property");
    verify->add_option("--format", o.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : (int)ErrorKind::Parse;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return dispatch(cmd, o);
    } catch (const Error& e) {
        Json err = {{"format", 1}, {"error", {{"code", std::string(e.name())}, {"message", e.what()}}}};
        if (o.format == "pretty")
            std::cerr << "error: " << e.what() << "\n";
        else
            std::cout << err.dump() << "\n";
        return (int)e.kind();
    }
}
