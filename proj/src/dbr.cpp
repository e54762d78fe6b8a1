#include "hbcnp/dbr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hbcnp/error.hpp"

namespace hbcnp {

namespace {

bool finite(Cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

constexpr double kNewtonMaxRadius = 0.999;
constexpr int kNewtonIterations = 50;

// Newton solve of b(q) = target from q0; empty if it leaves the disk or stalls.
std::optional<Cplx> newton_preimage(const PowerSeries& b, Cplx target, Cplx q0) {
    Cplx q = q0;
    for (int it = 0; it < kNewtonIterations; ++it) {
        const Cplx r = b(q) - target;
        const Cplx d = b.derivative_at(q);
        if (!finite(r) || !finite(d) || std::abs(d) < 1e-300) return std::nullopt;
        const Cplx step = r / d;
        q -= step;
        if (!finite(q) || std::abs(q) > kNewtonMaxRadius) return std::nullopt;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(q))) break;
    }
    return q;
}

}  // namespace

KernelExpr dbr_kernel(const PowerSeries& b) {
    if (b.is_constant()) throw Error(ErrorCode::InvalidArgument, "de Branges-Rovnyak symbol must be nonconstant");
    return KernelExpr::dbr(b);
}

std::string_view to_string(InjStatus s) noexcept {
    switch (s) {
        case InjStatus::NotInj: return "NOT_INJ";
        case InjStatus::InjEvidence: return "INJ_EVIDENCE";
        case InjStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

InjectivityResult injectivity_probe(const PowerSeries& b, const SampleSet& pts) {
    InjectivityResult result;
    std::vector<Cplx> p;
    std::vector<Cplx> v;
    bool any_failed = false;
    for (const auto& pt : pts.points()) {
        const Cplx z = pt.scalar();
        const Cplx bz = b(z);
        if (finite(bz)) {
            p.push_back(z);
            v.push_back(bz);
        } else {
            any_failed = true;
        }
    }
    result.valid_points = p.size();
    if (p.size() < 2 || any_failed) return result;

    const auto collides = [](Cplx bi, Cplx bj) { return std::abs(bi - bj) < kCollEps * std::max(1.0, std::abs(bi)); };

    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (std::abs(p[i] - p[j]) > kCollisionSeparation && collides(v[i], v[j])) {
                result.status = InjStatus::NotInj;
                result.collision = std::make_pair(p[i], p[j]);
                return result;
            }
        }
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (i == j || std::abs(p[i] - p[j]) <= kCollisionSeparation) continue;
            const auto q = newton_preimage(b, v[i], p[j]);
            if (q && std::abs(*q - p[i]) > kCollisionSeparation && collides(v[i], b(*q))) {
                result.status = InjStatus::NotInj;
                result.collision = std::make_pair(p[i], *q);
                return result;
            }
        }
    }
    result.status = InjStatus::InjEvidence;
    return result;
}

InverseSeries compute_h(const PowerSeries& b) {
    PowerSeries h = revert(b);
    const PowerSeries round_trip = compose(h, b);
    const PowerSeries id = PowerSeries::identity(round_trip.order(), round_trip.center());
    double residual = 0.0;
    for (std::size_t n = 0; n <= round_trip.order(); ++n) residual = std::max(residual, std::abs(round_trip[n] - id[n]));
    return {std::move(h), residual};
}

double schwarz_pick_check(const PowerSeries& b, const SampleSet& pts) {
    const Cplx a = b[0];
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& pt : pts.points()) {
        const Cplx zeta = pt.scalar();
        if (std::abs(zeta) < 1e-12) continue;
        const Cplx bz = b(zeta);
        margin = std::min(margin, std::abs(zeta) * std::abs(1.0 - std::conj(a) * bz) - std::abs(bz - a));
    }
    return margin;
}

ExtensionResult extension_check(const PowerSeries& b, const ExtensionWitness& w, const SampleSet& pts) {
    if (w.q.center() != Cplx{}) throw Error(ErrorCode::InvalidArgument, "extension witness must be centered at 0");
    const Cplx a = b[0];
    ExtensionResult out;
    for (const auto& pt : pts.points()) {
        const Cplx zeta = pt.scalar();
        const Cplx bz = b(zeta);
        out.consistency_residual = std::max(out.consistency_residual, std::abs(w.q(bz) * zeta - (bz - a)));
    }
    if (!(out.consistency_residual <= kWitnessConsistencyTol)) {
        std::ostringstream msg;
        msg << "q(b(zeta)) zeta differs from b(zeta) - b(0) by " << out.consistency_residual;
        throw Error(ErrorCode::WitnessInconsistent, msg.str());
    }
    out.margin = std::numeric_limits<double>::infinity();
    for (Cplx z : schur_probe_grid()) {
        out.margin = std::min(out.margin, std::abs(1.0 - std::conj(a) * z) - std::abs(w.q(z)));
    }
    return out;
}

PsdVerdict decomposition_check(const PowerSeries& b, const SampleSet& pts, std::optional<double> tol) {
    const KernelExpr checked = dbr_kernel(b);  // Schur-class and nonconstant preconditions
    (void)checked;
    const Cplx a = b[0];
    const PowerSeries f = PowerSeries::constant(1.0, b.order()) - b.scaled(std::conj(a));
    const KernelExpr k1 = kernel_congruence(kernel_pullback(KernelExpr::szego(), b), f);
    const KernelExpr k2 = kernel_congruence(k1, PowerSeries::identity(b.order()));
    const KernelExpr k0 = KernelExpr::constant(1.0 - std::norm(a));
    return psd_verdict(difference(gram(k2 + k0, pts), gram(k1, pts)), tol);
}

double witness_identity_check(const PowerSeries& b, const PowerSeries& f, const SampleSet& pts) {
    if (f.center() != Cplx{}) throw Error(ErrorCode::InvalidArgument, "test function must be centered at 0");
    (void)compute_h(b);
    const Cplx a = b[0];
    const double defect = 1.0 - std::norm(a);
    const Cplx fa = f(a);
    double residual = 0.0;
    for (const auto& pt : pts.points()) {
        const Cplx zeta = pt.scalar();  // h(b(zeta)) = zeta
        if (std::abs(zeta) < 1e-6) {
            std::ostringstream msg;
            msg << "sample " << zeta << " makes h(b(zeta)) vanish";
            throw Error(ErrorCode::NearZeroH, msg.str());
        }
        const Cplx z = b(zeta);
        const Cplx fz = f(z);
        const Cplx ka = 1.0 - std::conj(a) * z;
        const Cplx g = (fz - fa * defect / ka) / zeta;
        residual = std::max(residual, std::abs(ka * fz - zeta * ka * g - fa * defect));
    }
    return residual;
}

std::string_view to_string(CriterionOutcome c) noexcept {
    switch (c) {
        case CriterionOutcome::PassNecessary: return "PASS_NECESSARY";
        case CriterionOutcome::PassWithExtension: return "PASS_WITH_EXTENSION";
        case CriterionOutcome::Fail: return "FAIL";
    }
    return "FAIL";
}

CriterionReport evaluate_criterion(const PowerSeries& b, const std::optional<ExtensionWitness>& witness,
                                   const SampleSet& pts) {
    (void)dbr_kernel(b);
    CriterionReport r;
    r.a = b[0];
    r.inj = injectivity_probe(b, pts);
    if (r.inj.collision) {
        std::ostringstream msg;
        msg << "b takes the same value at " << r.inj.collision->first << " and " << r.inj.collision->second;
        r.notes.push_back(msg.str());
    }

    try {
        const auto inv = compute_h(b);
        r.reversion_residual = inv.residual;
        r.reversion_ok = inv.residual <= kReversionResidualTol;
        if (!r.reversion_ok) r.notes.emplace_back("series reversion residual above 1e-9");
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NonInvertible && e.code() != ErrorCode::InvalidArgument) throw;
        r.reversion_ok = false;
        r.reversion_residual = std::numeric_limits<double>::quiet_NaN();
        r.notes.emplace_back(e.what());
    }

    r.schwarz_pick_margin = schwarz_pick_check(b, pts);

    if (witness) {
        r.extension_supplied = true;
        try {
            const auto ext = extension_check(b, *witness, pts);
            r.witness_consistency = ext.consistency_residual;
            r.extension_margin = ext.margin;
            if (ext.margin < -kMarginTol) r.notes.emplace_back("witness violates |q(z)| <= |1 - conj(a) z| on the grid");
        } catch (const Error& e) {
            if (e.code() != ErrorCode::WitnessInconsistent) throw;
            r.notes.emplace_back(e.what());
        }
    }

    if (r.inj.status == InjStatus::NotInj || !r.reversion_ok || r.schwarz_pick_margin < -kMarginTol) {
        r.overall = CriterionOutcome::Fail;
    } else if (r.extension_margin && *r.extension_margin >= -kMarginTol) {
        r.overall = CriterionOutcome::PassWithExtension;
    } else {
        r.overall = CriterionOutcome::PassNecessary;
        r.notes.emplace_back("necessary conditions hold on the samples; extension to the disk not established");
    }
    return r;
}

}  // namespace hbcnp
