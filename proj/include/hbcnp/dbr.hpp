#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hbcnp/kernels.hpp"
#include "hbcnp/linalg.hpp"
#include "hbcnp/samples.hpp"
#include "hbcnp/series.hpp"

namespace hbcnp {

/// Relative threshold for |b(p) - b(q)| to count as a collision.
inline constexpr double kCollEps = 1e-7;
/// Two points closer than this are never treated as a collision pair.
inline constexpr double kCollisionSeparation = 1e-4;
inline constexpr double kMarginTol = 1e-9;
inline constexpr double kWitnessConsistencyTol = 1e-8;
inline constexpr double kReversionResidualTol = 1e-9;

/// (1 - conj(b(w)) b(z)) / (1 - conj(w) z) for a nonconstant Schur-class b.
/// Errors: NotSchurClass, InvalidArgument (constant b).
KernelExpr dbr_kernel(const PowerSeries& b);

enum class InjStatus { NotInj, InjEvidence, Inconclusive };
std::string_view to_string(InjStatus s) noexcept;

struct InjectivityResult {
    InjStatus status = InjStatus::Inconclusive;
    /// Two distinct disk points with equal b-values, when one was found.
    std::optional<std::pair<Cplx, Cplx>> collision;
    std::size_t valid_points = 0;
};

/// Collision search for b on the sample set.
///
/// Besides comparing b on every sample pair, each sample p_j seeds a Newton
/// solve of b(q) = b(p_i); a root q inside the disk and away from p_i is a
/// collision. This finds the two-to-one behaviour around interior critical
/// points that a plain grid comparison misses.
InjectivityResult injectivity_probe(const PowerSeries& b, const SampleSet& pts);

struct InverseSeries {
    PowerSeries h;          ///< centered at a = b(0)
    double residual = 0.0;  ///< max_n |coeff_n(h o b) - coeff_n(z)|
};

/// Series reversion of b. Error(NonInvertible) when |b'(0)| <= rev_eps.
InverseSeries compute_h(const PowerSeries& b);

/// min over samples zeta != 0 of |zeta| |1 - conj(a) b(zeta)| - |b(zeta) - a|.
/// Samples with |zeta| < 1e-12 are skipped.
double schwarz_pick_check(const PowerSeries& b, const SampleSet& pts);

/// Caller-supplied candidate for (z - b(0)) / h(z) on the whole disk, centered at 0.
struct ExtensionWitness {
    PowerSeries q;
};

struct ExtensionResult {
    /// max over samples of |q(b(zeta)) zeta - (b(zeta) - a)|
    double consistency_residual = 0.0;
    /// min over the disk validation grid of |1 - conj(a) z| - |q(z)|
    double margin = 0.0;
};

/// Error(WitnessInconsistent) when the consistency residual exceeds 1e-8.
ExtensionResult extension_check(const PowerSeries& b, const ExtensionWitness& w, const SampleSet& pts);

/// PSD verdict of K2 + K0 - K1 where F = 1 - conj(a) b,
/// K1 = F(z) conj(F(w)) / (1 - conj(b(w)) b(z)), K2 = conj(w) z K1, K0 = 1 - |a|^2.
PsdVerdict decomposition_check(const PowerSeries& b, const SampleSet& pts, std::optional<double> tol = std::nullopt);

/// Max residual of (1 - a'b) f(b) - zeta (1 - a'b) g(b) - f(a)(1 - |a|^2) over samples,
/// with g(z) = (f(z) - f(a)(1 - |a|^2)/(1 - a' z)) / h(z) and h(b(zeta)) = zeta.
/// Error(NearZeroH) for a sample with |zeta| < 1e-6.
double witness_identity_check(const PowerSeries& b, const PowerSeries& f, const SampleSet& pts);

enum class CriterionOutcome { PassNecessary, PassWithExtension, Fail };
std::string_view to_string(CriterionOutcome c) noexcept;

struct CriterionReport {
    Cplx a;
    InjectivityResult inj;
    bool reversion_ok = false;
    double reversion_residual = 0.0;
    double schwarz_pick_margin = 0.0;
    bool extension_supplied = false;
    std::optional<double> extension_margin;
    std::optional<double> witness_consistency;
    CriterionOutcome overall = CriterionOutcome::Fail;
    std::vector<std::string> notes;
};

/// Runs every check above and combines them:
/// FAIL iff NOT_INJ, failed reversion, or a Schwarz-Pick margin below -kMarginTol;
/// PASS_WITH_EXTENSION iff additionally a consistent witness has margin >= -kMarginTol;
/// PASS_NECESSARY otherwise.
CriterionReport evaluate_criterion(const PowerSeries& b, const std::optional<ExtensionWitness>& witness,
                                   const SampleSet& pts);

}  // namespace hbcnp
