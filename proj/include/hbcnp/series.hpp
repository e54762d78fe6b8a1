#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hbcnp {

using Cplx = std::complex<double>;

/// Default truncation degree for every series the library builds.
inline constexpr std::size_t kDefaultOrder = 64;
/// |a1| at or below this makes a series non-invertible.
inline constexpr double kRevEps = 1e-10;
/// Coefficients at or below this modulus count as zero for order detection.
inline constexpr double kDivEps = 1e-12;

/// Truncated power series sum_{n=0}^{N} c_n (z - center)^n.
///
/// Instances are immutable values. The truncation degree N is inclusive, so a
/// series of order N stores N+1 coefficients; all coefficients are finite.
class PowerSeries {
public:
    /// Throws Error(InvalidArgument) if `coeffs` is empty or holds a non-finite value.
    explicit PowerSeries(std::vector<Cplx> coeffs, Cplx center = {});

    static PowerSeries constant(Cplx value, std::size_t order = kDefaultOrder, Cplx center = {});
    /// The function z itself, expanded about `center`: coefficients [center, 1, 0, ...].
    static PowerSeries identity(std::size_t order = kDefaultOrder, Cplx center = {});
    /// 1 / (1 - ratio * z) about 0.
    static PowerSeries geometric(Cplx ratio, std::size_t order = kDefaultOrder);

    [[nodiscard]] Cplx center() const noexcept { return center_; }
    [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] std::span<const Cplx> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] Cplx operator[](std::size_t n) const noexcept {
        return n < coeffs_.size() ? coeffs_[n] : Cplx{};
    }

    /// Horner evaluation. Overflow shows up as a non-finite result, never an exception.
    [[nodiscard]] Cplx operator()(Cplx z) const noexcept;
    [[nodiscard]] Cplx derivative_at(Cplx z) const noexcept;

    [[nodiscard]] PowerSeries derivative() const;
    /// Truncate or zero-pad to the given order.
    [[nodiscard]] PowerSeries resized(std::size_t order) const;
    [[nodiscard]] PowerSeries scaled(Cplx factor) const;
    /// Index of the first coefficient with modulus > eps, if any.
    [[nodiscard]] std::optional<std::size_t> valuation(double eps = kDivEps) const noexcept;
    [[nodiscard]] bool is_constant(double eps = kDivEps) const noexcept;

private:
    std::vector<Cplx> coeffs_;
    Cplx center_;
};

enum class ArithOp { Add, Sub, Mul };

/// Coefficientwise add/sub or truncated Cauchy product; result order is min(N_a, N_b).
/// Throws Error(CenterMismatch) when the centers differ.
PowerSeries arith(const PowerSeries& a, const PowerSeries& b, ArithOp op);

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

/// outer(inner(z)), centered at inner.center() and truncated to min(N_outer, N_inner).
/// inner's constant term must equal outer's center, else Error(CompositionCenter).
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

/// 1/s for a series with a nonzero constant term (Error(DivisionOrder) otherwise).
PowerSeries reciprocal(const PowerSeries& s);

/// Compositional inverse. For s = a0 + a1 (z - c) + ... returns h centered at a0
/// with h(s(z)) = z + O((z - c)^{N+1}). Newton iteration on formal series,
/// doubling the correct order each step.
/// Throws Error(NonInvertible) when |a1| <= rev_eps.
PowerSeries revert(const PowerSeries& s, double rev_eps = kRevEps);

/// num/den with the common zero at the center cancelled. The result has order
/// N - ord(den) where N = min(N_num, N_den).
/// Throws Error(DivisionOrder) when ord(den) > ord(num) or den vanishes identically.
PowerSeries div_factor(const PowerSeries& num, const PowerSeries& den, double div_eps = kDivEps);

}  // namespace hbcnp
