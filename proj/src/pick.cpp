#include "hbcnp/pick.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hbcnp/error.hpp"

namespace hbcnp {

namespace {

Cplx disk_automorphism(Cplx z, Cplx zero) { return (z - zero) / (1.0 - std::conj(zero) * z); }

}  // namespace

InterpolationProblem InterpolationProblem::make(std::span<const Cplx> nodes, std::span<const Cplx> targets) {
    if (nodes.size() != targets.size()) {
        throw Error(ErrorCode::LengthMismatch, std::to_string(nodes.size()) + " nodes but " +
                                                   std::to_string(targets.size()) + " targets");
    }
    std::vector<BallPoint> pts(nodes.begin(), nodes.end());
    return {SampleSet::explicit_points(std::move(pts)), std::vector<Cplx>(targets.begin(), targets.end())};
}

PsdVerdict pick_solvable(const InterpolationProblem& p, const KernelExpr& k, std::optional<double> tol) {
    return psd_verdict(pick_matrix(k, p.nodes, p.targets), tol);
}

Cplx SchurInterpolant::operator()(Cplx z) const noexcept {
    Cplx f = steps_.back().parameter;
    for (std::size_t j = steps_.size() - 1; j-- > 0;) {
        const auto& s = steps_[j];
        const Cplx pf = disk_automorphism(z, s.node) * f;
        f = (s.parameter + pf) / (1.0 + std::conj(s.parameter) * pf);
    }
    return f;
}

double SchurInterpolant::sampled_sup(double radius, std::size_t n_angles) const noexcept {
    double sup = 0.0;
    for (std::size_t i = 0; i < n_angles; ++i) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_angles);
        sup = std::max(sup, std::abs((*this)(std::polar(radius, theta))));
    }
    return sup;
}

SchurInterpolant schur_interpolant(const InterpolationProblem& p) {
    if (p.targets.empty()) throw Error(ErrorCode::InvalidArgument, "interpolation problem has no nodes");
    const PsdVerdict v = pick_solvable(p, KernelExpr::szego());
    if (!(v.min_eig > kStrictEps)) {
        std::ostringstream msg;
        msg << "Pick matrix min eigenvalue " << v.min_eig << " is not above " << kStrictEps;
        throw Error(ErrorCode::NotStrictlySolvable, msg.str());
    }

    const std::size_t n = p.targets.size();
    std::vector<Cplx> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = p.nodes[i].scalar();
    std::vector<Cplx> w = p.targets;
    std::vector<SchurInterpolant::Step> steps;
    steps.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Cplx g = w[j];
        if (!(std::abs(g) < 1.0)) {
            throw Error(ErrorCode::NotStrictlySolvable, "Schur parameter of modulus >= 1 at step " + std::to_string(j));
        }
        steps.push_back({z[j], g});
        for (std::size_t k = j + 1; k < n; ++k) {
            w[k] = disk_automorphism(w[k], g) / disk_automorphism(z[k], z[j]);
        }
    }
    return SchurInterpolant(std::move(steps));
}

PowerSeries blaschke_product(std::span<const Cplx> zeros, std::size_t order) {
    PowerSeries out = PowerSeries::constant(1.0, order);
    for (Cplx zk : zeros) {
        if (!(std::abs(zk) < 1.0)) throw Error(ErrorCode::DomainViolation, "Blaschke zero outside the open disk");
        std::vector<Cplx> lin(order + 1);
        lin[0] = -zk;
        if (order >= 1) lin[1] = 1.0;
        out = out * (PowerSeries(std::move(lin)) * PowerSeries::geometric(std::conj(zk), order));
    }
    return out;
}

}  // namespace hbcnp
