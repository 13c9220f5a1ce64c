// Command line front end: flag parsing only.  All computation and the JSON
// contract live in the core library (apolar/cli.hpp).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "apolar/cli.hpp"
#include "apolar/version.hpp"

namespace {

void add_io(CLI::App* sub, apolar::JobRequest& req) {
    sub->add_option("-o,--out", req.out_path,
                    "write the JSON payload here instead of stdout");
    sub->add_option("--format", req.format, "output format (json)")
        ->capture_default_str();
}

void add_form_input(CLI::App* sub, apolar::JobRequest& req) {
    sub->add_option("expr", req.expr,
                    "form expression, e.g. \"x^2*z^2 + 3*x*y*z*w - y^2*w^2\"");
    sub->add_option("-i,--input", req.input_path,
                    "read the expression from this file instead");
    sub->add_option("-m,--mode", req.mode,
                    "variable vocabulary: auto|binary|ternary|bigraded|pnp1")
        ->capture_default_str();
}

void add_json_input(CLI::App* sub, apolar::JobRequest& req) {
    sub->add_option("json", req.expr, "inline JSON payload");
    sub->add_option("-i,--input", req.input_path, "read the JSON from this file");
}

void add_B(CLI::App* sub, apolar::JobRequest& req) {
    sub->add_option("-B,--operator-degree", req.B_text,
                    "operator multidegree, comma separated (default: half the "
                    "declared degree of f)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "apolar: exact catalecticants, antipolar forms, real rank "
        "certificates, and 2xNxN / 2x2x2x2 hyperdeterminants"};
    app.set_version_flag("--version", APOLAR_VERSION);
    app.require_subcommand(1);

    apolar::JobRequest req;

    auto* cat = app.add_subcommand(
        "catalecticant", "Catalecticant matrix of f in operator degree B");
    add_form_input(cat, req);
    add_B(cat, req);
    add_io(cat, req);

    auto* anti = app.add_subcommand(
        "antipolar", "Antipolar form Omega(f) via the adjugate catalecticant");
    add_form_input(anti, req);
    add_B(anti, req);
    add_io(anti, req);

    auto* rsm = app.add_subcommand(
        "rs-membership",
        "Forbidden-locus membership test Omega(l) = 0 at a given point");
    add_form_input(rsm, req);
    add_B(rsm, req);
    rsm->add_option("-p,--point", req.point_text,
                    "point coordinates: blocks ';'-separated, e.g. 1,2;3,4")
        ->required();
    add_io(rsm, req);

    auto* scan = app.add_subcommand(
        "forbidden-scan",
        "Ternary quartic scan: rank-one update determinant and nullspace "
        "conditions of the middle catalecticant");
    add_form_input(scan, req);
    add_io(scan, req);

    auto* sig = app.add_subcommand(
        "signature", "Exact inertia (n+, n-, n0) of a symmetric matrix (JSON)");
    add_json_input(sig, req);
    add_io(sig, req);

    auto* cert = app.add_subcommand(
        "rank-certify",
        "Real rank certificate for a bidegree (2,2d) form on P1 x P1");
    add_form_input(cert, req);
    add_io(cert, req);

    auto* side = app.add_subcommand(
        "boundary-side",
        "Definiteness of Omega(f) restricted to real points: which side of "
        "the typical-rank boundary f lies on");
    add_form_input(side, req);
    add_B(side, req);
    add_io(side, req);

    auto* sample = app.add_subcommand(
        "sample-typical",
        "Sample random bidegree (2,2d) forms and tally rank verdicts");
    sample->add_option("-d,--d", req.d, "half-degree d in bidegree (2,2d)")
        ->capture_default_str();
    sample->add_option("-n,--samples", req.samples, "number of samples")
        ->capture_default_str();
    sample->add_option("-s,--seed", req.seed, "PRNG seed")
        ->capture_default_str();
    sample->add_option("-j,--workers", req.workers, "worker threads")
        ->capture_default_str();
    add_io(sample, req);

    auto* pform = app.add_subcommand(
        "pencil-form", "Binary form det(x T1 + y T2) of an n x n pencil (JSON)");
    add_json_input(pform, req);
    add_io(pform, req);

    auto* hyp = app.add_subcommand(
        "hyperdet",
        "2 x n x n hyperdeterminant: discriminant of the pencil form");
    add_json_input(hyp, req);
    add_io(hyp, req);

    auto* berg = app.add_subcommand(
        "bergqvist", "Real rank of a real 2 x n x n tensor given as a pencil");
    add_json_input(berg, req);
    add_io(berg, req);

    auto* h4 = app.add_subcommand(
        "hyperdet2222",
        "2x2x2x2 Schlaefli hyperdeterminant via the quartic p(w)");
    add_json_input(h4, req);
    add_io(h4, req);

    auto* brank = app.add_subcommand(
        "binary-rank",
        "Sylvester: complex Waring rank and apolar ideal generators of a "
        "binary form");
    add_form_input(brank, req);
    brank->add_option("-p,--point", req.point_text,
                      "also test the degree-d witness at this point of P^1");
    add_io(brank, req);

    CLI11_PARSE(app, argc, argv);

    for (CLI::App* sub : {cat, anti, rsm, scan, sig, cert, side, sample, pform,
                          hyp, berg, h4, brank})
        if (sub->parsed()) req.subcommand = sub->get_name();

    apolar::RunResult result = apolar::run(req);

    if (result.exit_code != 0) {
        std::cerr << result.json;
        return result.exit_code;
    }
    if (!req.out_path.empty()) {
        std::ofstream out(req.out_path);
        if (!out) {
            std::cerr << "cannot write to " << req.out_path << "\n";
            return 3;
        }
        out << result.json;
    } else {
        std::cout << result.json;
    }
    return 0;
}
