#include <cmath>
#include <random>

#include "doctest.h"
#include "hbcnp/error.hpp"
#include "hbcnp/kernels.hpp"
#include "hbcnp/pick.hpp"

using namespace hbcnp;

namespace {

PowerSeries poly(std::vector<Cplx> c, std::size_t order = 16) {
    c.resize(order + 1);
    return PowerSeries(std::move(c));
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an hbcnp::Error");
    return ErrorCode::InvalidArgument;
}

bool near(Cplx a, Cplx b, double tol = 1e-14) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("kernel_eval builtins") {
    const auto s = KernelExpr::szego();
    CHECK(near(s(0.0, 0.0), 1.0));
    CHECK(near(s(0.5, 0.5), 4.0 / 3.0));

    const auto id = KernelExpr::dbr(poly({0.0, 1.0}));
    for (Cplx z : {Cplx{0.1, 0.2}, Cplx{-0.7, 0.1}, Cplx{0.0, 0.9}}) {
        CHECK(near(id(z, Cplx{0.3, -0.4}), 1.0));
    }
    CHECK(near(KernelExpr::dbr(poly({0.0, 0.5}))(0.5, 0.5), 1.25));

    const auto da = KernelExpr::drury_arveson(2);
    const BallPoint z(std::vector<Cplx>{{0.3, 0.1}, {0.2, -0.4}});
    const BallPoint w(std::vector<Cplx>{{-0.1, 0.5}, {0.4, 0.0}});
    CHECK(near(da(z, w), 1.0 / (1.0 - inner_product(z, w))));
}

TEST_CASE("kernel_eval errors") {
    const auto s = KernelExpr::szego();
    CHECK(code_of([&] { (void)s(1.0, 0.0); }) == ErrorCode::DomainViolation);
    CHECK(code_of([&] { (void)s(Cplx{0.6, 0.8}, 0.0); }) == ErrorCode::DomainViolation);
    const double edge = 1.0 - 1e-14;
    CHECK(code_of([&] { (void)s(edge, edge); }) == ErrorCode::NearSingular);
    const BallPoint outside(std::vector<Cplx>{{0.8, 0.0}, {0.7, 0.0}});
    CHECK(code_of([&] { (void)KernelExpr::drury_arveson(2)(outside, outside); }) == ErrorCode::DomainViolation);
    CHECK(code_of([&] { (void)s(BallPoint(std::vector<Cplx>{{0.1, 0.0}, {0.1, 0.0}}), 0.0); }) ==
          ErrorCode::DomainViolation);
    CHECK(code_of([] { (void)KernelExpr::dbr(poly({0.0, 1.2})); }) == ErrorCode::NotSchurClass);
    CHECK(code_of([] { (void)KernelExpr::weighted_hardy({1.0, 0.0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("kernel_sum") {
    const auto s = KernelExpr::szego();
    const auto sz0 = s + KernelExpr::constant(0.0);
    for (Cplx z : {Cplx{0.1, 0.2}, Cplx{-0.5, 0.3}}) CHECK(sz0(z, Cplx{0.2, 0.2}) == s(z, Cplx{0.2, 0.2}));
    CHECK(near((s + s)(0.0, 0.0), 2.0));

    const Cplx a{0.3, -0.2};
    const auto k0 = KernelExpr::constant(1.0 - std::norm(a));
    CHECK(near(k0(0.4, Cplx{0.0, 0.7}), 1.0 - std::norm(a)));

    CHECK(code_of([&] { (void)(s + KernelExpr::drury_arveson(2)); }) == ErrorCode::DomainMismatch);
}

TEST_CASE("kernel_pullback and kernel_congruence") {
    const auto s = KernelExpr::szego();
    const auto id = kernel_pullback(s, PowerSeries::identity(8));
    CHECK(id(Cplx{0.2, 0.3}, -0.4) == s(Cplx{0.2, 0.3}, -0.4));
    CHECK(near(kernel_pullback(s, poly({0.0, 0.5}))(0.5, 0.5), 16.0 / 15.0));

    // K1, K2 against their closed forms for an affine b
    const Cplx A{0.2, 0.1};
    const Cplx B{1.5, 0.5};
    const auto b = poly({A / B, 1.0 / B});
    const Cplx a = b[0];
    const auto f = PowerSeries::constant(1.0, 16) - b.scaled(std::conj(a));
    const auto k1 = kernel_congruence(kernel_pullback(s, b), f);
    const auto k2 = kernel_congruence(k1, PowerSeries::identity(16));
    const Cplx z{0.3, -0.2};
    const Cplx w{-0.6, 0.1};
    const Cplx fz = 1.0 - std::conj(a) * b(z);
    const Cplx fw = 1.0 - std::conj(a) * b(w);
    const Cplx denom = 1.0 - std::conj(b(w)) * b(z);
    CHECK(near(k1(z, w), std::conj(fw) * fz / denom, 1e-14));
    CHECK(near(k2(z, w), std::conj(w * fw) * z * fz / denom, 1e-14));

    CHECK(near(kernel_congruence(s, PowerSeries::constant(1.0, 4))(z, w), s(z, w)));
    CHECK(near(kernel_congruence(s, PowerSeries::constant(2.0, 4))(z, w), 4.0 * s(z, w), 1e-14));

    const auto blowup = kernel_pullback(s, poly({0.0, 2.0}));
    CHECK(code_of([&] { (void)blowup(0.6, 0.0); }) == ErrorCode::RangeViolation);
}

TEST_CASE("cnp_defect_kernel") {
    const auto s = KernelExpr::szego();
    const auto d = cnp_defect_kernel(s, 0.0);
    const Cplx z{0.3, 0.5};
    const Cplx w{-0.2, 0.6};
    CHECK(near(d(z, w), std::conj(w) * z, 1e-15));

    const std::vector<Cplx> one_zero{Cplx{0.4, -0.3}};
    const auto bl = KernelExpr::dbr(blaschke_product(one_zero));
    const auto dbl = cnp_defect_kernel(bl, Cplx{0.1, 0.2});
    CHECK(std::abs(dbl(z, w)) < 1e-13);

    const auto zsq = cnp_defect_kernel(KernelExpr::dbr(poly({0.0, 0.0, 1.0})), 0.0);
    CHECK(near(zsq(z, w), std::conj(w) * z / (1.0 + std::conj(w) * z), 1e-15));

    CHECK(code_of([&] { (void)cnp_defect_kernel(kernel_congruence(s, PowerSeries::identity(4)), 0.0); }) ==
          ErrorCode::VanishingKernel);
    const auto shifted = cnp_defect_kernel(kernel_congruence(s, poly({-0.5, 1.0})), 0.0);
    CHECK(code_of([&] { (void)shifted(0.5, 0.2); }) == ErrorCode::VanishingKernel);
}

TEST_CASE("weighted Hardy log-concavity flag") {
    auto flag = [](std::vector<double> w) {
        return std::get<WeightedHardyNode>(KernelExpr::weighted_hardy(std::move(w)).node().data).logconcave;
    };
    CHECK(flag({1.0, 2.0, 3.0, 4.0}));
    CHECK(flag({1.0, 1.0, 1.0}));
    CHECK_FALSE(flag({1.0, 1.0, 4.0}));
}

TEST_CASE("property: conjugate symmetry across kernel kinds") {
    const auto s = KernelExpr::szego();
    const auto b = poly({Cplx{0.1, 0.05}, 0.4, Cplx{0.0, 0.2}, 0.1});
    std::vector<double> dir(kWeightedHardyTerms);
    for (std::size_t n = 0; n < dir.size(); ++n) dir[n] = static_cast<double>(n + 1);
    const std::vector<KernelExpr> kernels{
        s,
        KernelExpr::weighted_hardy(dir),
        KernelExpr::dbr(b),
        KernelExpr::constant(0.7),
        s + KernelExpr::dbr(b),
        kernel_pullback(s, b),
        kernel_congruence(s, poly({1.0, Cplx{0.3, 0.3}})),
        cnp_defect_kernel(s, Cplx{0.2, -0.1}),
        cnp_defect_kernel(KernelExpr::dbr(b), Cplx{-0.3, 0.0}),
    };
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> r(0.0, 0.9);
    std::uniform_real_distribution<double> t(0.0, 6.283185307179586);
    for (const auto& k : kernels) {
        for (int i = 0; i < 50; ++i) {
            const Cplx z = std::polar(r(rng), t(rng));
            const Cplx w = std::polar(r(rng), t(rng));
            const Cplx kzw = k(z, w);
            CHECK(std::abs(kzw - std::conj(k(w, z))) <= 1e-12 * (1.0 + std::abs(kzw)));
        }
    }
    const auto da = KernelExpr::drury_arveson(3);
    for (int i = 0; i < 50; ++i) {
        std::vector<Cplx> zc(3), wc(3);
        for (auto& c : zc) c = std::polar(0.55 * r(rng), t(rng));
        for (auto& c : wc) c = std::polar(0.55 * r(rng), t(rng));
        const BallPoint z(zc), w(wc);
        const Cplx kzw = da(z, w);
        CHECK(std::abs(kzw - std::conj(da(w, z))) <= 1e-12 * (1.0 + std::abs(kzw)));
    }
}

TEST_CASE("property: weighted Hardy with unit weights matches Szego") {
    const auto wh = KernelExpr::weighted_hardy(std::vector<double>(kWeightedHardyTerms, 1.0));
    const auto s = KernelExpr::szego();
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> r(0.0, 0.8);
    std::uniform_real_distribution<double> t(0.0, 6.283185307179586);
    for (int i = 0; i < 100; ++i) {
        const Cplx z = std::polar(r(rng), t(rng));
        const Cplx w = std::polar(r(rng), t(rng));
        // tail bound: 0.64^256 / (1 - 0.64)
        CHECK(std::abs(wh(z, w) - s(z, w)) < 1e-12);
    }
}

TEST_CASE("property: Drury-Arveson in dimension one is Szego") {
    const auto da = KernelExpr::drury_arveson(1);
    const auto s = KernelExpr::szego();
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> r(0.0, 0.95);
    std::uniform_real_distribution<double> t(0.0, 6.283185307179586);
    for (int i = 0; i < 100; ++i) {
        const Cplx z = std::polar(r(rng), t(rng));
        const Cplx w = std::polar(r(rng), t(rng));
        CHECK(da(z, w) == s(z, w));
    }
}
