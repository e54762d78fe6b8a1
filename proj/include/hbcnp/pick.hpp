#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hbcnp/kernels.hpp"
#include "hbcnp/linalg.hpp"
#include "hbcnp/samples.hpp"
#include "hbcnp/series.hpp"

namespace hbcnp {

/// Pick matrices with min eigenvalue at or below this are rejected for construction.
inline constexpr double kStrictEps = 1e-8;

/// Find f with f(nodes[i]) = targets[i] and multiplier norm at most one.
struct InterpolationProblem {
    SampleSet nodes;
    std::vector<Cplx> targets;

    /// Error(LengthMismatch) on size mismatch; nodes must be distinct disk points.
    static InterpolationProblem make(std::span<const Cplx> nodes, std::span<const Cplx> targets);
};

/// PSD verdict of the Pick matrix; for complete Nevanlinna-Pick kernels PSD is
/// also sufficient for solvability.
PsdVerdict pick_solvable(const InterpolationProblem& p, const KernelExpr& k, std::optional<double> tol = std::nullopt);

/// Rational Schur-class interpolant from the Schur-Nevanlinna recursion for H^2.
class SchurInterpolant {
public:
    struct Step {
        Cplx node;
        Cplx parameter;  ///< |parameter| < 1
    };

    explicit SchurInterpolant(std::vector<Step> steps) : steps_(std::move(steps)) {}

    [[nodiscard]] const std::vector<Step>& steps() const noexcept { return steps_; }
    /// f_j(z) = (g_j + phi_j(z) f_{j+1}(z)) / (1 + conj(g_j) phi_j(z) f_{j+1}(z)), f_last = g_last.
    [[nodiscard]] Cplx operator()(Cplx z) const noexcept;
    /// max |f| on the circle of the given radius, sampled at `n_angles` points.
    [[nodiscard]] double sampled_sup(double radius = 0.999, std::size_t n_angles = 2048) const noexcept;

private:
    std::vector<Step> steps_;
};

/// Error(NotStrictlySolvable) when the Szego Pick matrix has min_eig <= kStrictEps.
SchurInterpolant schur_interpolant(const InterpolationProblem& p);

/// prod_k (z - z_k) / (1 - conj(z_k) z) as a series about 0; empty zeros give 1.
PowerSeries blaschke_product(std::span<const Cplx> zeros, std::size_t order = kDefaultOrder);

}  // namespace hbcnp
