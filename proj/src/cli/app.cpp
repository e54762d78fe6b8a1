#include <ostream>

#include "commands.hpp"
#include "hbcnp/cli.hpp"
#include "hbcnp/error.hpp"

#ifndef HBCNP_VERSION
#define HBCNP_VERSION "0.0.0"
#endif

namespace hbcnp::cli {

namespace {

void add_order(CLI::App& app, std::size_t& order) {
    app.add_option("--order", order, "series truncation order")->capture_default_str()->check(CLI::Range(1, 4096));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sampled complete Nevanlinna-Pick checks for reproducing kernels", "hbcnp"};
    app.set_version_flag("--version", HBCNP_VERSION);
    app.require_subcommand(1);

    CnpArgs cnp;
    auto* c = app.add_subcommand("cnp", "certify the normalized defect kernel at one base point");
    c->add_option("--kernel", cnp.kernel, "kernel descriptor: JSON file or inline JSON")->required();
    c->add_option("--base", cnp.base, "base point (comma-separated coordinates on the ball)")->capture_default_str();
    add_sampling_flags(*c, cnp.sampling);
    c->add_option("--tol", cnp.tol, "PSD tolerance (default 1e-9 * max(1, matrix scale))");
    add_order(*c, cnp.order);
    c->add_option("--json", cnp.json_path, "also write the report to this file");
    c->add_option("--matrix-csv", cnp.matrix_csv, "write the defect Gram matrix as CSV (re,im pairs)");
    c->add_option("--matrix-json", cnp.matrix_json, "write the defect Gram matrix as JSON");

    HbcheckArgs hb;
    auto* h = app.add_subcommand("hbcheck", "check the injectivity / inverse criterion for a de Branges-Rovnyak symbol");
    h->add_option("--b", hb.b, "symbol: series literal or family object, as JSON file or inline");
    h->add_option("--family", hb.family, "named family")
        ->check(CLI::IsMember({"affine", "moebius_over", "blaschke", "scaled_identity", "power"}));
    h->add_option("-A", hb.A, "family parameter A (complex literal)");
    h->add_option("-B", hb.B, "family parameter B (complex literal)");
    h->add_option("--zeros", hb.zeros, "Blaschke zeros, e.g. \"0,0.5\"");
    h->add_option("--R", hb.R, "scaled_identity radius, b(z) = z / R")->capture_default_str();
    h->add_option("--k", hb.k, "power exponent, b(z) = z^k")->capture_default_str();
    h->add_option("--witness", hb.witness, "extension witness: auto, closed-form, none, or a series file/inline JSON")
        ->capture_default_str();
    add_sampling_flags(*h, hb.sampling);
    add_order(*h, hb.order);
    h->add_option("--json", hb.json_path, "also write the report to this file");

    GalleryArgs gal;
    auto* g = app.add_subcommand("gallery", "run a suite of symbols and compare against expected verdicts");
    g->add_option("--suite", gal.suite, "suite JSON file")->capture_default_str();
    g->add_option("--json", gal.json_path, "also write the run report to this file");

    PickArgs pk;
    auto* p = app.add_subcommand("pick", "Nevanlinna-Pick solvability and (Szego) interpolant construction");
    p->add_option("--problem", pk.problem, "{\"nodes\": [...], \"targets\": [...]} as file or inline JSON")->required();
    p->add_option("--kernel", pk.kernel, "kernel descriptor (default Szego)");
    p->add_flag("--construct", pk.construct, "build the Schur interpolant (Szego kernel only)");
    p->add_option("--tol", pk.tol, "PSD tolerance (default 1e-9 * max(1, matrix scale))");
    add_order(*p, pk.order);
    p->add_option("--json", pk.json_path, "also write the report to this file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kPositive;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        if (*c) return cmd_cnp(cnp, out, err);
        if (*h) return cmd_hbcheck(hb, out, err);
        if (*g) return cmd_gallery(gal, out, err);
        if (*p) return cmd_pick(pk, out, err);
    } catch (const Error& e) {
        err << "hbcnp: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "hbcnp: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace hbcnp::cli
