#include "hbcnp/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hbcnp/error.hpp"

namespace hbcnp {

namespace {

bool finite(Cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

void require_same_center(const PowerSeries& a, const PowerSeries& b) {
    if (a.center() != b.center()) {
        std::ostringstream msg;
        msg << "series centered at " << a.center() << " and " << b.center();
        throw Error(ErrorCode::CenterMismatch, msg.str());
    }
}

// Truncated Cauchy product on raw coefficient arrays, result of length n.
std::vector<Cplx> cauchy(std::span<const Cplx> a, std::span<const Cplx> b, std::size_t n) {
    std::vector<Cplx> out(n);
    for (std::size_t i = 0; i < n && i < a.size(); ++i) {
        if (a[i] == Cplx{}) continue;
        const std::size_t jmax = std::min(b.size(), n - i);
        for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Cplx> coeffs, Cplx center)
    : coeffs_(std::move(coeffs)), center_(center) {
    if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "power series needs at least one coefficient");
    if (!finite(center_)) throw Error(ErrorCode::InvalidArgument, "non-finite series center");
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (!finite(coeffs_[n])) {
            throw Error(ErrorCode::InvalidArgument, "non-finite coefficient at index " + std::to_string(n));
        }
    }
}

PowerSeries PowerSeries::constant(Cplx value, std::size_t order, Cplx center) {
    std::vector<Cplx> c(order + 1);
    c[0] = value;
    return PowerSeries(std::move(c), center);
}

PowerSeries PowerSeries::identity(std::size_t order, Cplx center) {
    std::vector<Cplx> c(order + 1);
    c[0] = center;
    if (order >= 1) c[1] = 1.0;
    return PowerSeries(std::move(c), center);
}

PowerSeries PowerSeries::geometric(Cplx ratio, std::size_t order) {
    std::vector<Cplx> c(order + 1);
    Cplx p = 1.0;
    for (auto& v : c) {
        v = p;
        p *= ratio;
    }
    return PowerSeries(std::move(c));
}

Cplx PowerSeries::operator()(Cplx z) const noexcept {
    const Cplx t = z - center_;
    Cplx acc = coeffs_.back();
    for (std::size_t n = coeffs_.size() - 1; n-- > 0;) acc = acc * t + coeffs_[n];
    return acc;
}

Cplx PowerSeries::derivative_at(Cplx z) const noexcept {
    if (coeffs_.size() < 2) return {};
    const Cplx t = z - center_;
    Cplx acc = coeffs_.back() * static_cast<double>(coeffs_.size() - 1);
    for (std::size_t n = coeffs_.size() - 1; n-- > 1;) acc = acc * t + coeffs_[n] * static_cast<double>(n);
    return acc;
}

PowerSeries PowerSeries::derivative() const {
    if (coeffs_.size() == 1) return constant(0.0, 0, center_);
    std::vector<Cplx> d(coeffs_.size() - 1);
    for (std::size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = coeffs_[n] * static_cast<double>(n);
    return PowerSeries(std::move(d), center_);
}

PowerSeries PowerSeries::resized(std::size_t order) const {
    std::vector<Cplx> c(order + 1);
    std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), c.size()), c.begin());
    return PowerSeries(std::move(c), center_);
}

PowerSeries PowerSeries::scaled(Cplx factor) const {
    std::vector<Cplx> c(coeffs_);
    for (auto& v : c) v *= factor;
    return PowerSeries(std::move(c), center_);
}

std::optional<std::size_t> PowerSeries::valuation(double eps) const noexcept {
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (std::abs(coeffs_[n]) > eps) return n;
    }
    return std::nullopt;
}

bool PowerSeries::is_constant(double eps) const noexcept {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [eps](Cplx v) { return std::abs(v) <= eps; });
}

PowerSeries arith(const PowerSeries& a, const PowerSeries& b, ArithOp op) {
    require_same_center(a, b);
    const std::size_t n = std::min(a.order(), b.order()) + 1;
    std::vector<Cplx> out;
    switch (op) {
        case ArithOp::Add:
        case ArithOp::Sub: {
            out.resize(n);
            const double sign = op == ArithOp::Add ? 1.0 : -1.0;
            for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + sign * b[i];
            break;
        }
        case ArithOp::Mul: out = cauchy(a.coeffs(), b.coeffs(), n); break;
    }
    return PowerSeries(std::move(out), a.center());
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) { return arith(a, b, ArithOp::Add); }
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return arith(a, b, ArithOp::Sub); }
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return arith(a, b, ArithOp::Mul); }

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
    const Cplx c = outer.center();
    if (std::abs(inner[0] - c) > 1e-12 * std::max(1.0, std::abs(c))) {
        std::ostringstream msg;
        msg << "inner constant term " << inner[0] << " differs from outer center " << c;
        throw Error(ErrorCode::CompositionCenter, msg.str());
    }
    const std::size_t n = std::min(outer.order(), inner.order()) + 1;
    // t = inner - c has zero constant term, so Horner in t stays exact to order n-1.
    std::vector<Cplx> t(inner.coeffs().begin(), inner.coeffs().begin() + static_cast<std::ptrdiff_t>(n));
    t[0] = 0.0;
    std::vector<Cplx> acc(n);
    acc[0] = outer[n - 1];
    for (std::size_t k = n - 1; k-- > 0;) {
        acc = cauchy(acc, t, n);
        acc[0] += outer[k];
    }
    return PowerSeries(std::move(acc), inner.center());
}

PowerSeries reciprocal(const PowerSeries& s) {
    const Cplx c0 = s[0];
    if (std::abs(c0) <= kDivEps) throw Error(ErrorCode::DivisionOrder, "reciprocal of a series vanishing at its center");
    const std::size_t n = s.order() + 1;
    std::vector<Cplx> r(n);
    r[0] = 1.0 / c0;
    for (std::size_t k = 1; k < n; ++k) {
        Cplx acc{};
        for (std::size_t j = 1; j <= k; ++j) acc += s[j] * r[k - j];
        r[k] = -acc / c0;
    }
    return PowerSeries(std::move(r), s.center());
}

PowerSeries revert(const PowerSeries& s, double rev_eps) {
    const Cplx a1 = s[1];
    if (s.order() < 1 || std::abs(a1) <= rev_eps) {
        std::ostringstream msg;
        msg << "linear coefficient " << a1 << " has modulus <= " << rev_eps;
        throw Error(ErrorCode::NonInvertible, msg.str());
    }
    const std::size_t order = s.order();

    // Work with g(t) = s(c + t) - a0 and find r with g(r(u)) = u, all about 0.
    std::vector<Cplx> gc(s.coeffs().begin(), s.coeffs().end());
    gc[0] = 0.0;
    const PowerSeries g(std::move(gc));
    const PowerSeries dg = g.derivative();

    std::vector<Cplx> r0(order + 1);
    r0[1] = 1.0 / a1;
    PowerSeries r(std::move(r0));

    // r is correct to degree 1; each Newton step doubles that.
    std::size_t correct = 2;
    bool final_pass = false;
    while (true) {
        const std::size_t m = std::min(2 * correct, order + 1);
        const PowerSeries rm = r.resized(m - 1);
        const PowerSeries residual = compose(g.resized(m - 1), rm) - PowerSeries::identity(m - 1);
        const PowerSeries slope = compose(dg.resized(m - 1), rm);
        const PowerSeries step = residual * reciprocal(slope);
        r = (rm - step).resized(order);
        if (final_pass) break;
        correct = m;
        if (m == order + 1) final_pass = true;
    }

    std::vector<Cplx> hc(r.coeffs().begin(), r.coeffs().end());
    hc[0] += s.center();
    return PowerSeries(std::move(hc), s[0]);
}

PowerSeries div_factor(const PowerSeries& num, const PowerSeries& den, double div_eps) {
    require_same_center(num, den);
    const auto kd = den.valuation(div_eps);
    if (!kd) throw Error(ErrorCode::DivisionOrder, "denominator vanishes identically");
    const auto kn = num.valuation(div_eps);
    if (kn && *kn < *kd) {
        throw Error(ErrorCode::DivisionOrder, "denominator order " + std::to_string(*kd) +
                                                  " exceeds numerator order " + std::to_string(*kn));
    }
    const std::size_t n = std::min(num.order(), den.order());
    if (*kd > n) throw Error(ErrorCode::DivisionOrder, "denominator order exceeds truncation degree");
    const std::size_t len = n - *kd + 1;
    std::vector<Cplx> ns(len), ds(len);
    for (std::size_t i = 0; i < len; ++i) {
        ns[i] = num[i + *kd];
        ds[i] = den[i + *kd];
    }
    return PowerSeries(std::move(ns), num.center()) * reciprocal(PowerSeries(std::move(ds), num.center()));
}

}  // namespace hbcnp
