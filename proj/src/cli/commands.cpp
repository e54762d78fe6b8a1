#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <ostream>

#include "hbcnp/cli.hpp"
#include "hbcnp/error.hpp"

namespace hbcnp::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

json sampling_json(const SamplingFlags& f) {
    if (!f.points.empty()) return {{"points", f.points}};
    return {{"grid", f.grid}, {"rmax", f.rmax}, {"random", f.random}, {"seed", f.seed}};
}

BallPoint parse_base(const std::string& text, std::size_t dim) {
    const auto coords = parse_complex_list(text);
    if (coords.size() == 1 && dim == 1) return coords.front();
    if (coords.size() != dim) {
        throw Error(ErrorCode::DimensionMismatch, "base has " + std::to_string(coords.size()) +
                                                      " coordinates, kernel dimension is " + std::to_string(dim));
    }
    return BallPoint(coords);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    f << text;
}

SymbolSpec symbol_from_flags(const HbcheckArgs& a) {
    if (!a.b.empty()) {
        if (!a.family.empty()) throw Error(ErrorCode::InvalidArgument, "give either --b or --family, not both");
        return symbol_from_json(load_json_arg(a.b));
    }
    auto need = [&](const std::string& v, const char* flag) {
        if (v.empty()) throw Error(ErrorCode::InvalidArgument, "--family " + a.family + " needs " + flag);
        return parse_complex(v);
    };
    if (a.family == "affine") return SymbolSpec::affine(need(a.A, "-A"), need(a.B, "-B"));
    if (a.family == "moebius_over") return SymbolSpec::moebius_over(need(a.A, "-A"), need(a.B, "-B"));
    if (a.family == "blaschke") return SymbolSpec::blaschke(parse_complex_list(a.zeros));
    if (a.family == "scaled_identity") return SymbolSpec::scaled_identity(a.R);
    if (a.family == "power") return SymbolSpec::power(a.k);
    if (a.family.empty()) throw Error(ErrorCode::InvalidArgument, "hbcheck needs --b or --family");
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + a.family + "'");
}

}  // namespace

int exit_for(PsdStatus s) {
    switch (s) {
        case PsdStatus::Psd: return kPositive;
        case PsdStatus::NotPsd: return kNegative;
        case PsdStatus::Inconclusive: return kUndecided;
    }
    return kUndecided;
}

int exit_for(CriterionOutcome c) {
    switch (c) {
        case CriterionOutcome::PassWithExtension: return kPositive;
        case CriterionOutcome::Fail: return kNegative;
        case CriterionOutcome::PassNecessary: return kUndecided;
    }
    return kUndecided;
}

int cmd_cnp(const CnpArgs& a, std::ostream& out, std::ostream&) {
    const auto t0 = Clock::now();
    const json kj = load_json_arg(a.kernel);
    const KernelExpr k = kernel_from_json(kj, a.order);
    const BallPoint base = parse_base(a.base, k.dim());
    const SampleSet pts = build_samples(a.sampling, k.dim());
    const CertReport r = cnp_certify(k, base, pts, a.tol);

    if (!a.matrix_csv.empty() || !a.matrix_json.empty()) {
        const HermitianMatrix m = gram(cnp_defect_kernel(k, base), r.samples);
        if (!a.matrix_csv.empty()) write_file(a.matrix_csv, to_csv(m));
        if (!a.matrix_json.empty()) write_file(a.matrix_json, to_json(m).dump() + "\n");
    }

    json inputs{{"kernel", kernel_to_json(k)}, {"base", point_to_json(base)}, {"samples", sampling_json(a.sampling)},
                {"order", a.order}};
    if (a.tol) inputs["tol"] = *a.tol;
    json report = report_header("cnp", inputs);
    report["inputs"] = inputs;
    report["result"] = to_json(r);
    report["wall_time_s"] = seconds_since(t0);
    emit(report, out, a.json_path);
    return exit_for(r.verdict.status);
}

int cmd_hbcheck(const HbcheckArgs& a, std::ostream& out, std::ostream&) {
    const auto t0 = Clock::now();
    const SymbolSpec spec = symbol_from_flags(a);
    const PowerSeries b = build_symbol(spec, a.order);
    (void)dbr_kernel(b);  // rejects constant and non-Schur symbols as input errors

    std::optional<ExtensionWitness> witness;
    json witness_json = nullptr;
    if (a.witness == "closed-form" || a.witness == "auto") {
        if (auto q = closed_form_witness(spec, a.order)) {
            witness = ExtensionWitness{*q};
            witness_json = "closed-form";
        } else if (a.witness == "closed-form") {
            throw Error(ErrorCode::InvalidArgument, "no closed-form witness for " + spec.describe());
        }
    } else if (a.witness != "none") {
        witness = ExtensionWitness{series_from_json(load_json_arg(a.witness)).resized(a.order)};
        witness_json = series_to_json(witness->q);
    }

    const SampleSet pts = build_samples(a.sampling);
    const CriterionReport r = evaluate_criterion(b, witness, pts);

    const json inputs{{"b", symbol_to_json(spec)}, {"witness", witness_json}, {"samples", sampling_json(a.sampling)},
                      {"order", a.order}};
    json report = report_header("hbcheck", inputs);
    report["inputs"] = inputs;
    report["result"] = to_json(r);
    report["wall_time_s"] = seconds_since(t0);
    emit(report, out, a.json_path);
    return exit_for(r.overall);
}

int cmd_pick(const PickArgs& a, std::ostream& out, std::ostream& err) {
    const auto t0 = Clock::now();
    const json pj = load_json_arg(a.problem);
    if (!pj.is_object() || !pj.contains("nodes") || !pj.contains("targets") || !pj["nodes"].is_array() ||
        !pj["targets"].is_array()) {
        throw Error(ErrorCode::Parse, "problem must be {\"nodes\": [...], \"targets\": [...]}");
    }
    std::vector<Cplx> nodes;
    std::vector<Cplx> targets;
    for (const auto& z : pj["nodes"]) nodes.push_back(complex_from_json(z));
    for (const auto& w : pj["targets"]) targets.push_back(complex_from_json(w));
    const auto problem = InterpolationProblem::make(nodes, targets);
    const KernelExpr k = a.kernel.empty() ? KernelExpr::szego() : kernel_from_json(load_json_arg(a.kernel), a.order);
    if (a.construct && k.kind() != KernelKind::Szego) {
        throw Error(ErrorCode::InvalidArgument, "--construct is only available for the Szego kernel");
    }

    const PsdVerdict v = pick_solvable(problem, k, a.tol);
    json result{{"verdict", to_json(v)}};
    int code = exit_for(v.status);
    if (a.construct && v.status == PsdStatus::Psd) {
        try {
            const SchurInterpolant f = schur_interpolant(problem);
            json interp = to_json(f);
            json residuals = json::array();
            double worst = 0.0;
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                const double r = std::abs(f(nodes[i]) - targets[i]);
                residuals.push_back(r);
                worst = std::max(worst, r);
            }
            interp["residuals"] = residuals;
            interp["max_residual"] = worst;
            interp["sampled_sup"] = f.sampled_sup();
            result["interpolant"] = interp;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotStrictlySolvable) throw;
            result["construction_error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
            err << "pick: " << e.what() << '\n';
            code = kNegative;
        }
    }

    json inputs{{"problem", pj}, {"kernel", kernel_to_json(k)}, {"construct", a.construct}};
    if (a.tol) inputs["tol"] = *a.tol;
    json report = report_header("pick", inputs);
    report["inputs"] = inputs;
    report["result"] = result;
    report["wall_time_s"] = seconds_since(t0);
    emit(report, out, a.json_path);
    return code;
}

}  // namespace hbcnp::cli
