#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hbcnp/series.hpp"

namespace hbcnp {

/// Singularity guard for kernel denominators.
inline constexpr double kDomEps = 1e-12;
/// Guard against vanishing kernel values in the normalized defect.
inline constexpr double kDefectEps = 1e-12;
inline constexpr std::size_t kWeightedHardyTerms = 256;

/// Point of the open unit ball in C^d; d = 1 is the unit disk.
class BallPoint {
public:
    BallPoint(Cplx z) : coords_{z} {}  // NOLINT(google-explicit-constructor)
    BallPoint(double x) : coords_{Cplx{x, 0.0}} {}  // NOLINT(google-explicit-constructor)
    explicit BallPoint(std::vector<Cplx> coords);

    [[nodiscard]] std::size_t dim() const noexcept { return coords_.size(); }
    [[nodiscard]] const std::vector<Cplx>& coords() const noexcept { return coords_; }
    [[nodiscard]] Cplx operator[](std::size_t i) const { return coords_[i]; }
    /// The single coordinate of a disk point; Error(DimensionMismatch) otherwise.
    [[nodiscard]] Cplx scalar() const;
    [[nodiscard]] double norm_sq() const noexcept;

    friend bool operator==(const BallPoint&, const BallPoint&) = default;

private:
    std::vector<Cplx> coords_;
};

/// <z, w> = sum z_i conj(w_i).
Cplx inner_product(const BallPoint& z, const BallPoint& w);
double distance(const BallPoint& a, const BallPoint& b);

enum class KernelKind {
    Szego,
    DruryArveson,
    WeightedHardy,
    Dbr,
    Constant,
    Sum,
    Pullback,
    Congruence,
    NormalizedDefect,
};

struct KernelNode;

/// Immutable kernel expression tree. Copies share structure.
class KernelExpr {
public:
    /// 1 / (1 - conj(w) z)
    static KernelExpr szego();
    /// 1 / (1 - <z, w>) on the unit ball of C^d.
    static KernelExpr drury_arveson(std::size_t dim);
    /// sum_n (conj(w) z)^n / weights[n]; weights must be strictly positive.
    static KernelExpr weighted_hardy(std::vector<double> weights);
    /// (1 - conj(b(w)) b(z)) / (1 - conj(w) z). Error(NotSchurClass) when the
    /// sampled sup of |b| on the validation grid exceeds 1 + 1e-9.
    static KernelExpr dbr(PowerSeries b);
    static KernelExpr constant(double value, std::size_t dim = 1);

    [[nodiscard]] KernelKind kind() const noexcept;
    [[nodiscard]] std::size_t dim() const noexcept;
    [[nodiscard]] const KernelNode& node() const noexcept { return *node_; }
    [[nodiscard]] bool in_domain(const BallPoint& z) const noexcept;
    /// Short human-readable identifier used in assembly metadata.
    [[nodiscard]] std::string describe() const;

    /// K(z, w). Errors: DomainViolation, NearSingular, RangeViolation, VanishingKernel.
    [[nodiscard]] Cplx operator()(const BallPoint& z, const BallPoint& w) const;

private:
    explicit KernelExpr(std::shared_ptr<const KernelNode> node) : node_(std::move(node)) {}
    friend KernelExpr make_kernel(KernelNode node);

    std::shared_ptr<const KernelNode> node_;
};

struct SzegoNode {};
struct DruryArvesonNode {
    std::size_t dim;
};
struct WeightedHardyNode {
    std::vector<double> weights;
    /// w_n^2 >= w_{n-1} w_{n+1} for every stored interior index.
    bool logconcave;
};
struct DbrNode {
    PowerSeries b;
};
struct ConstantNode {
    double value;
    std::size_t dim;
};
struct SumNode {
    KernelExpr left;
    KernelExpr right;
};
struct PullbackNode {
    KernelExpr inner;
    PowerSeries map;
};
struct CongruenceNode {
    KernelExpr inner;
    PowerSeries factor;
};
struct DefectNode {
    KernelExpr inner;
    BallPoint base;
    double base_value;  ///< K(base, base)
};

struct KernelNode {
    std::variant<SzegoNode, DruryArvesonNode, WeightedHardyNode, DbrNode, ConstantNode, SumNode, PullbackNode,
                 CongruenceNode, DefectNode>
        data;
};

KernelExpr make_kernel(KernelNode node);

/// Pointwise sum. Error(DomainMismatch) if the dimensions differ.
KernelExpr kernel_sum(const KernelExpr& a, const KernelExpr& b);
KernelExpr operator+(const KernelExpr& a, const KernelExpr& b);
/// (K o map)(z, w) = K(map(z), map(w)); range is checked at evaluation time.
KernelExpr kernel_pullback(const KernelExpr& k, PowerSeries map);
/// F(z) conj(F(w)) K(z, w).
KernelExpr kernel_congruence(const KernelExpr& k, PowerSeries factor);
/// 1 - K(z,base) K(base,w) / (K(base,base) K(z,w)).
/// Error(VanishingKernel) if K(base, base) is not real and > kDefectEps.
KernelExpr cnp_defect_kernel(const KernelExpr& k, const BallPoint& base);

/// Validation grid for the sup-norm probe: 32 radii x 64 angles up to radius 0.99.
std::vector<Cplx> schur_probe_grid();
/// max |b| over schur_probe_grid().
double schur_probe_sup(const PowerSeries& b);

}  // namespace hbcnp
