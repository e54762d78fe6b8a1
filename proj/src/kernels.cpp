#include "hbcnp/kernels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hbcnp/error.hpp"

namespace hbcnp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool finite(Cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

std::string show(const BallPoint& p) {
    std::ostringstream os;
    if (p.dim() == 1) {
        os << p[0];
    } else {
        os << '(';
        for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? ", " : "") << p[i];
        os << ')';
    }
    return os.str();
}

void require_in_domain(const KernelExpr& k, const BallPoint& z) {
    if (!k.in_domain(z)) {
        throw Error(ErrorCode::DomainViolation, "point " + show(z) + " outside the domain of " + k.describe());
    }
}

// 1 / (1 - x) with the singularity guard.
Cplx szego_core(Cplx x) {
    const Cplx den = 1.0 - x;
    if (std::abs(den) < kDomEps) throw Error(ErrorCode::NearSingular, "|1 - conj(w) z| below dom_eps");
    return 1.0 / den;
}

}  // namespace

BallPoint::BallPoint(std::vector<Cplx> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw Error(ErrorCode::InvalidArgument, "ball point needs at least one coordinate");
}

Cplx BallPoint::scalar() const {
    if (coords_.size() != 1) {
        throw Error(ErrorCode::DimensionMismatch, "expected a disk point, got dimension " + std::to_string(dim()));
    }
    return coords_[0];
}

double BallPoint::norm_sq() const noexcept {
    double s = 0.0;
    for (Cplx c : coords_) s += std::norm(c);
    return s;
}

Cplx inner_product(const BallPoint& z, const BallPoint& w) {
    if (z.dim() != w.dim()) throw Error(ErrorCode::DimensionMismatch, "inner product of points of different dimension");
    Cplx s{};
    for (std::size_t i = 0; i < z.dim(); ++i) s += z[i] * std::conj(w[i]);
    return s;
}

double distance(const BallPoint& a, const BallPoint& b) {
    if (a.dim() != b.dim()) return INFINITY;
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

KernelExpr make_kernel(KernelNode node) { return KernelExpr(std::make_shared<const KernelNode>(std::move(node))); }

KernelExpr KernelExpr::szego() { return make_kernel({SzegoNode{}}); }

KernelExpr KernelExpr::drury_arveson(std::size_t dim) {
    if (dim == 0) throw Error(ErrorCode::InvalidArgument, "Drury-Arveson dimension must be positive");
    return make_kernel({DruryArvesonNode{dim}});
}

KernelExpr KernelExpr::weighted_hardy(std::vector<double> weights) {
    if (weights.empty()) throw Error(ErrorCode::InvalidArgument, "weighted Hardy kernel needs weights");
    for (double w : weights) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw Error(ErrorCode::InvalidArgument, "weighted Hardy weights must be finite and strictly positive");
        }
    }
    bool logconcave = true;
    for (std::size_t n = 1; n + 1 < weights.size(); ++n) {
        if (weights[n] * weights[n] < weights[n - 1] * weights[n + 1]) logconcave = false;
    }
    return make_kernel({WeightedHardyNode{std::move(weights), logconcave}});
}

KernelExpr KernelExpr::dbr(PowerSeries b) {
    if (b.center() != Cplx{}) throw Error(ErrorCode::InvalidArgument, "de Branges-Rovnyak symbol must be centered at 0");
    const double sup = schur_probe_sup(b);
    if (!(sup <= 1.0 + 1e-9)) {
        std::ostringstream msg;
        msg << "sampled sup |b| = " << sup << " exceeds 1";
        throw Error(ErrorCode::NotSchurClass, msg.str());
    }
    return make_kernel({DbrNode{std::move(b)}});
}

KernelExpr KernelExpr::constant(double value, std::size_t dim) {
    if (!(value >= 0.0) || !std::isfinite(value)) throw Error(ErrorCode::InvalidArgument, "constant kernel must be >= 0");
    if (dim == 0) throw Error(ErrorCode::InvalidArgument, "constant kernel dimension must be positive");
    return make_kernel({ConstantNode{value, dim}});
}

KernelKind KernelExpr::kind() const noexcept { return static_cast<KernelKind>(node_->data.index()); }

std::size_t KernelExpr::dim() const noexcept {
    return std::visit(overloaded{
                          [](const DruryArvesonNode& n) -> std::size_t { return n.dim; },
                          [](const ConstantNode& n) -> std::size_t { return n.dim; },
                          [](const SumNode& n) -> std::size_t { return n.left.dim(); },
                          [](const DefectNode& n) -> std::size_t { return n.inner.dim(); },
                          [](const auto&) -> std::size_t { return 1; },
                      },
                      node_->data);
}

bool KernelExpr::in_domain(const BallPoint& z) const noexcept {
    if (z.dim() != dim()) return false;
    for (Cplx c : z.coords()) {
        if (!finite(c)) return false;
    }
    return z.norm_sq() < 1.0;
}

std::string KernelExpr::describe() const {
    return std::visit(overloaded{
                          [](const SzegoNode&) -> std::string { return "szego"; },
                          [](const DruryArvesonNode& n) { return "drury_arveson(" + std::to_string(n.dim) + ")"; },
                          [](const WeightedHardyNode& n) {
                              return "weighted_hardy(" + std::to_string(n.weights.size()) + " terms)";
                          },
                          [](const DbrNode& n) {
                              std::ostringstream os;
                              os << "dbr(b0=" << n.b[0] << ", b1=" << n.b[1] << ", N=" << n.b.order() << ")";
                              return os.str();
                          },
                          [](const ConstantNode& n) {
                              std::ostringstream os;
                              os << "constant(" << n.value << ")";
                              return os.str();
                          },
                          [](const SumNode& n) { return "sum(" + n.left.describe() + ", " + n.right.describe() + ")"; },
                          [](const PullbackNode& n) { return "pullback(" + n.inner.describe() + ")"; },
                          [](const CongruenceNode& n) { return "congruence(" + n.inner.describe() + ")"; },
                          [](const DefectNode& n) { return "cnp_defect(" + n.inner.describe() + ", " + show(n.base) + ")"; },
                      },
                      node_->data);
}

Cplx KernelExpr::operator()(const BallPoint& z, const BallPoint& w) const {
    require_in_domain(*this, z);
    require_in_domain(*this, w);
    return std::visit(
        overloaded{
            [&](const SzegoNode&) { return szego_core(z[0] * std::conj(w[0])); },
            [&](const DruryArvesonNode&) { return szego_core(inner_product(z, w)); },
            [&](const WeightedHardyNode& n) {
                const Cplx x = z[0] * std::conj(w[0]);
                Cplx acc = 1.0 / n.weights.back();
                for (std::size_t k = n.weights.size() - 1; k-- > 0;) acc = acc * x + 1.0 / n.weights[k];
                return acc;
            },
            [&](const DbrNode& n) {
                const Cplx den = 1.0 - z[0] * std::conj(w[0]);
                if (std::abs(den) < kDomEps) throw Error(ErrorCode::NearSingular, "|1 - conj(w) z| below dom_eps");
                return (1.0 - std::conj(n.b(w[0])) * n.b(z[0])) / den;
            },
            [&](const ConstantNode& n) { return Cplx{n.value, 0.0}; },
            [&](const SumNode& n) { return n.left(z, w) + n.right(z, w); },
            [&](const PullbackNode& n) {
                const BallPoint pz = n.map(z[0]);
                const BallPoint pw = n.map(w[0]);
                for (const BallPoint* p : {&pz, &pw}) {
                    if (!n.inner.in_domain(*p)) {
                        throw Error(ErrorCode::RangeViolation, "pull-back map sends a sample to " + show(*p) +
                                                                   ", outside the domain of " + n.inner.describe());
                    }
                }
                return n.inner(pz, pw);
            },
            [&](const CongruenceNode& n) { return n.factor(z[0]) * std::conj(n.factor(w[0])) * n.inner(z, w); },
            [&](const DefectNode& n) {
                const Cplx kzb = n.inner(z, n.base);
                const Cplx kbw = n.inner(n.base, w);
                const Cplx kzw = n.inner(z, w);
                if (std::abs(kzb) < kDefectEps || std::abs(kbw) < kDefectEps || std::abs(kzw) < kDefectEps) {
                    throw Error(ErrorCode::VanishingKernel,
                                "kernel value below defect_eps at (" + show(z) + ", " + show(w) + ")");
                }
                return 1.0 - kzb * kbw / (n.base_value * kzw);
            },
        },
        node_->data);
}

KernelExpr kernel_sum(const KernelExpr& a, const KernelExpr& b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DomainMismatch, "cannot add kernels on dimensions " + std::to_string(a.dim()) + " and " +
                                                   std::to_string(b.dim()));
    }
    return make_kernel({SumNode{a, b}});
}

KernelExpr operator+(const KernelExpr& a, const KernelExpr& b) { return kernel_sum(a, b); }

KernelExpr kernel_pullback(const KernelExpr& k, PowerSeries map) {
    if (k.dim() != 1) throw Error(ErrorCode::DomainMismatch, "pull-back by a scalar map needs a kernel on the disk");
    return make_kernel({PullbackNode{k, std::move(map)}});
}

KernelExpr kernel_congruence(const KernelExpr& k, PowerSeries factor) {
    if (k.dim() != 1) throw Error(ErrorCode::DomainMismatch, "congruence by a scalar factor needs a kernel on the disk");
    return make_kernel({CongruenceNode{k, std::move(factor)}});
}

KernelExpr cnp_defect_kernel(const KernelExpr& k, const BallPoint& base) {
    const Cplx kbb = k(base, base);
    if (!(kbb.real() > kDefectEps) || std::abs(kbb.imag()) > 1e-12 * std::max(1.0, std::abs(kbb))) {
        std::ostringstream msg;
        msg << "K(base, base) = " << kbb << " is not real and positive";
        throw Error(ErrorCode::VanishingKernel, msg.str());
    }
    return make_kernel({DefectNode{k, base, kbb.real()}});
}

std::vector<Cplx> schur_probe_grid() {
    constexpr int kRadii = 32;
    constexpr int kAngles = 64;
    constexpr double kMaxRadius = 0.99;
    std::vector<Cplx> pts;
    pts.reserve(kRadii * kAngles + 1);
    pts.emplace_back(0.0, 0.0);
    for (int i = 1; i <= kRadii; ++i) {
        const double r = kMaxRadius * i / kRadii;
        for (int j = 0; j < kAngles; ++j) pts.push_back(std::polar(r, 2.0 * std::numbers::pi * j / kAngles));
    }
    return pts;
}

double schur_probe_sup(const PowerSeries& b) {
    double sup = 0.0;
    for (Cplx z : schur_probe_grid()) {
        const double m = std::abs(b(z));
        if (!std::isfinite(m)) return INFINITY;
        sup = std::max(sup, m);
    }
    return sup;
}

}  // namespace hbcnp
