#include "hbcnp/cnp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hbcnp/error.hpp"

namespace hbcnp {

namespace {

constexpr const char* kEvidenceNote =
    "PSD on sampled points is evidence only; NOT_PSD is a rigorous counterexample on the listed samples";
constexpr const char* kNonVanishingNote = "kernel non-vanishing was checked at sampled pairs only";

}  // namespace

CertReport cnp_certify(const KernelExpr& k, const BallPoint& base, const SampleSet& pts, std::optional<double> tol) {
    CertReport report;
    report.base = base;
    report.samples = pts.without(base);
    if (report.samples.size() != pts.size()) report.notes.emplace_back("base point removed from the sample set");
    report.notes.emplace_back(kEvidenceNote);
    report.notes.emplace_back(kNonVanishingNote);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (report.samples.empty()) {
        report.verdict = classify(nan, tol.value_or(1e-9));
        report.notes.emplace_back("no samples left after removing the base point");
        return report;
    }
    try {
        const KernelExpr defect = cnp_defect_kernel(k, base);
        const HermitianMatrix m = gram(defect, report.samples);
        if (m.asymmetry_warning()) report.notes.emplace_back("assembly asymmetry above herm_tol");
        report.verdict = psd_verdict(m, tol);
        if (std::isnan(report.verdict.min_eig)) report.notes.emplace_back("eigensolver did not converge");
    } catch (const Error& e) {
        if (e.code() != ErrorCode::VanishingKernel) throw;
        report.vanish_flag = true;
        report.verdict = classify(nan, tol.value_or(1e-9));
        report.notes.emplace_back(e.what());
    }
    return report;
}

std::vector<CertReport> cnp_basepoint_sweep(const KernelExpr& k, std::span<const BallPoint> bases,
                                            const SampleSet& pts, std::optional<double> tol) {
    std::vector<CertReport> reports;
    reports.reserve(bases.size());
    for (const auto& base : bases) reports.push_back(cnp_certify(k, base, pts, tol));

    const auto has = [&](PsdStatus s) {
        return std::any_of(reports.begin(), reports.end(), [s](const CertReport& r) { return r.verdict.status == s; });
    };
    if (has(PsdStatus::Psd) && has(PsdStatus::NotPsd)) {
        for (auto& r : reports) {
            r.notes.emplace_back("SWEEP_ANOMALY: verdicts disagree across base points; the sample set is insufficient");
        }
    }
    return reports;
}

}  // namespace hbcnp
