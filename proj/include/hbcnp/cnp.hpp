#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hbcnp/kernels.hpp"
#include "hbcnp/linalg.hpp"
#include "hbcnp/samples.hpp"

namespace hbcnp {

/// Outcome of a sampled complete Nevanlinna-Pick check at one base point.
///
/// NOT_PSD is a genuine negative certificate: the defect kernel fails to be
/// positive on an explicit finite set. PSD is evidence on the sampled set only.
struct CertReport {
    PsdVerdict verdict;
    BallPoint base = Cplx{};
    SampleSet samples;
    /// A kernel value fell below kDefectEps at some evaluated pair.
    bool vanish_flag = false;
    std::vector<std::string> notes;
};

/// Gram matrix of cnp_defect_kernel(k, base) on pts (with base removed) and its
/// PSD verdict. A vanishing kernel value yields an INCONCLUSIVE report with
/// vanish_flag set. tol defaults to 1e-9 * max(1, scale).
CertReport cnp_certify(const KernelExpr& k, const BallPoint& base, const SampleSet& pts,
                       std::optional<double> tol = std::nullopt);

/// One report per base. Disagreement between PSD and NOT_PSD across bases adds a
/// SWEEP_ANOMALY note to every report.
std::vector<CertReport> cnp_basepoint_sweep(const KernelExpr& k, std::span<const BallPoint> bases,
                                            const SampleSet& pts, std::optional<double> tol = std::nullopt);

}  // namespace hbcnp
