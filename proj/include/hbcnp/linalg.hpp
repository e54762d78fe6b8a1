#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hbcnp/kernels.hpp"
#include "hbcnp/samples.hpp"

namespace hbcnp {

/// Asymmetry above herm_tol * scale is flagged on the assembled matrix.
inline constexpr double kHermTol = 1e-10;
inline constexpr int kMaxJacobiSweeps = 64;
/// Jacobi stops once the off-diagonal Frobenius norm is at most this times scale.
inline constexpr double kJacobiOffTol = 1e-13;

/// Dense complex matrix, row-major.
struct CMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Cplx> data;

    CMatrix() = default;
    CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    Cplx& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    Cplx operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    static CMatrix identity(std::size_t n);
};

/// Dense Hermitian matrix with the provenance of its entries.
///
/// Construction always replaces the input M by (M + M*)/2 and records
/// max |M_ij - conj(M_ji)| as the assembly asymmetry.
class HermitianMatrix {
public:
    HermitianMatrix(std::size_t n, std::vector<Cplx> entries, std::string assembly = {});

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] Cplx operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    [[nodiscard]] std::span<const Cplx> entries() const noexcept { return entries_; }
    /// Largest entry modulus.
    [[nodiscard]] double scale() const noexcept { return scale_; }
    [[nodiscard]] double asymmetry() const noexcept { return asymmetry_; }
    [[nodiscard]] bool asymmetry_warning() const noexcept { return asymmetry_ > kHermTol * scale_; }
    [[nodiscard]] const std::string& assembly() const noexcept { return assembly_; }

private:
    std::size_t n_;
    std::vector<Cplx> entries_;
    double scale_ = 0.0;
    double asymmetry_ = 0.0;
    std::string assembly_;
};

enum class PsdStatus { Psd, NotPsd, Inconclusive };

std::string_view to_string(PsdStatus s) noexcept;

/// PSD iff min_eig >= -tol; NOT_PSD iff min_eig < -10 tol; INCONCLUSIVE between
/// (and whenever min_eig is unavailable, e.g. non-convergence).
struct PsdVerdict {
    PsdStatus status = PsdStatus::Inconclusive;
    double min_eig = 0.0;
    double tol_used = 0.0;
};

PsdVerdict classify(double min_eig, double tol);

/// Entrywise K(pts_i, pts_j). Kernel errors are rethrown with the pair indices.
HermitianMatrix gram(const KernelExpr& k, const SampleSet& pts);
/// a - b with matching dimensions.
HermitianMatrix difference(const HermitianMatrix& a, const HermitianMatrix& b);

/// Smallest eigenvalue by cyclic complex Jacobi rotations on a private copy.
/// Throws Error(NoConvergence) after kMaxJacobiSweeps sweeps.
double min_eig_hermitian(const HermitianMatrix& m);
/// All eigenvalues in ascending order (same solver).
std::vector<double> eigenvalues_hermitian(const HermitianMatrix& m);

/// 1e-9 * max(1, scale)
double default_tol(const HermitianMatrix& m);
/// Non-convergence maps to INCONCLUSIVE with a NaN min_eig.
PsdVerdict psd_verdict(const HermitianMatrix& m, std::optional<double> tol = std::nullopt);

/// ((1 - conj(l_i) l_j) K(x_j, x_i)), the entrywise conjugate of ((1 - l_i conj(l_j)) K(x_i, x_j)),
/// so both have the same spectrum. Error(LengthMismatch) if the sizes differ.
HermitianMatrix pick_matrix(const KernelExpr& k, const SampleSet& nodes, std::span<const Cplx> targets);
/// n t x n t matrix with blocks (I_t - W_i^* W_j) K(x_j, x_i).
/// Error(DimensionMismatch) unless every W_i has the same shape.
HermitianMatrix block_pick_matrix(const KernelExpr& k, const SampleSet& nodes, std::span<const CMatrix> mats);

/// One row per matrix row, "re,im" pairs separated by commas.
std::string to_csv(const HermitianMatrix& m);

}  // namespace hbcnp
