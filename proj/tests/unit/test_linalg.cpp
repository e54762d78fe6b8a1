#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "hbcnp/error.hpp"
#include "hbcnp/linalg.hpp"
#include "oracles.hpp"

using namespace hbcnp;

namespace {

HermitianMatrix mat(std::size_t n, std::vector<Cplx> e) { return HermitianMatrix(n, std::move(e), "test"); }

SampleSet pts(std::vector<BallPoint> p) { return SampleSet::explicit_points(std::move(p)); }

}  // namespace

TEST_CASE("gram") {
    const auto s = KernelExpr::szego();
    const auto g1 = gram(s, pts({0.0}));
    CHECK(g1.n() == 1);
    CHECK(g1(0, 0) == Cplx{1.0});

    const auto g2 = gram(s, pts({0.0, 0.5}));
    CHECK(g2(0, 1) == Cplx{1.0});
    CHECK(std::abs(g2(1, 1) - 4.0 / 3.0) < 1e-15);

    const auto gc = gram(KernelExpr::constant(0.3), SampleSet::radial_grid(2, 3, 0.5));
    for (Cplx v : gc.entries()) CHECK(v == Cplx{0.3});
    CHECK(psd_verdict(gc).status == PsdStatus::Psd);
    const auto eig = eigenvalues_hermitian(gc);
    CHECK(std::abs(eig.back() - 1.8) < 1e-12);
    CHECK(std::abs(eig.front()) < 1e-12);
}

TEST_CASE("gram reports the failing pair") {
    const auto blowup = kernel_pullback(KernelExpr::szego(), PowerSeries({0.0, 2.0}));
    try {
        (void)gram(blowup, pts({0.1, 0.7}));
        FAIL("expected RANGE_VIOLATION");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RangeViolation);
        CHECK(std::string(e.what()).find("sample pair 0, 1") != std::string::npos);
    }
}

TEST_CASE("symmetrization records asymmetry") {
    const auto m = mat(2, {1.0, Cplx{0.5, 0.1}, Cplx{0.5, 0.3}, 2.0});
    CHECK(m(0, 1) == std::conj(m(1, 0)));
    CHECK(std::abs(m(0, 1) - Cplx{0.5, -0.1}) < 1e-15);
    CHECK(std::abs(m.asymmetry() - 0.4) < 1e-15);
    CHECK(m.asymmetry_warning());
    CHECK_FALSE(mat(2, {1.0, Cplx{0.5, 0.1}, Cplx{0.5, -0.1}, 2.0}).asymmetry_warning());
}

TEST_CASE("min_eig_hermitian") {
    CHECK(std::abs(min_eig_hermitian(mat(2, {1.0, 1.0, 1.0, 1.0}))) < 1e-15);
    const auto [lo, hi] = oracle::eig2(0.2, 0.2, -1.0 / 3.0);
    CHECK(std::abs(min_eig_hermitian(mat(2, {0.2, -1.0 / 3.0, -1.0 / 3.0, 0.2})) - lo) < 1e-15);
    CHECK(std::abs(lo - (0.2 - 1.0 / 3.0)) < 1e-15);
    (void)hi;
    CHECK(min_eig_hermitian(mat(2, {3.0, 0.0, 0.0, -2.0})) == -2.0);
    const Cplx b{0.3, -0.7};
    CHECK(std::abs(min_eig_hermitian(mat(2, {0.5, b, std::conj(b), -0.1})) - oracle::eig2(0.5, -0.1, b).first) < 1e-15);
    CHECK(min_eig_hermitian(mat(1, {-4.0})) == -4.0);
    CHECK(min_eig_hermitian(mat(3, std::vector<Cplx>(9))) == 0.0);
}

TEST_CASE("psd_verdict bands") {
    const auto id = mat(3, {1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0});
    const auto v = psd_verdict(id);
    CHECK(v.status == PsdStatus::Psd);
    CHECK(std::abs(v.min_eig - 1.0) < 1e-15);
    CHECK(v.tol_used == 1e-9);

    CHECK(psd_verdict(mat(2, {0.2, -1.0 / 3.0, -1.0 / 3.0, 0.2})).status == PsdStatus::NotPsd);

    const double tol = 1e-9;
    CHECK(psd_verdict(mat(2, {1.0, 0.0, 0.0, -5 * tol}), tol).status == PsdStatus::Inconclusive);
    CHECK(psd_verdict(mat(2, {1.0, 0.0, 0.0, -0.5 * tol}), tol).status == PsdStatus::Psd);
    CHECK(psd_verdict(mat(2, {1.0, 0.0, 0.0, -11 * tol}), tol).status == PsdStatus::NotPsd);
    CHECK(classify(NAN, tol).status == PsdStatus::Inconclusive);

    // default tolerance scales with the largest entry
    CHECK(psd_verdict(mat(1, {1e4})).tol_used == doctest::Approx(1e-5));
}

TEST_CASE("pick_matrix") {
    const auto s = KernelExpr::szego();
    const std::vector<Cplx> half{0.5};
    const auto p1 = pick_matrix(s, pts({0.0}), half);
    CHECK(std::abs(p1(0, 0) - 0.75) < 1e-15);
    CHECK(psd_verdict(p1).status == PsdStatus::Psd);

    const std::vector<Cplx> ext{0.0, 0.5};
    const auto p2 = pick_matrix(s, pts({0.0, 0.5}), ext);
    for (Cplx v : p2.entries()) CHECK(std::abs(v - 1.0) < 1e-15);
    CHECK(psd_verdict(p2).status == PsdStatus::Psd);

    const std::vector<Cplx> two{2.0};
    const auto p3 = pick_matrix(s, pts({0.0}), two);
    CHECK(p3(0, 0) == Cplx{-3.0});
    CHECK(psd_verdict(p3).status == PsdStatus::NotPsd);

    CHECK_THROWS_AS((void)pick_matrix(s, pts({0.0, 0.5}), two), Error);
}

TEST_CASE("block_pick_matrix") {
    const auto s = KernelExpr::szego();
    const auto nodes = pts({0.0, Cplx{0.3, 0.2}, -0.5});
    const std::vector<Cplx> targets{Cplx{0.1, 0.2}, 0.4, Cplx{-0.3, 0.1}};
    std::vector<CMatrix> w1;
    for (Cplx t : targets) {
        CMatrix m(1, 1);
        m(0, 0) = t;
        w1.push_back(m);
    }
    const auto scalar = pick_matrix(s, nodes, targets);
    const auto block = block_pick_matrix(s, nodes, w1);
    for (std::size_t i = 0; i < 9; ++i) CHECK(block.entries()[i] == scalar.entries()[i]);

    const std::vector<CMatrix> zeros(3, CMatrix(2, 2));
    const auto kron = block_pick_matrix(s, nodes, zeros);
    const auto g = gram(s, nodes);  // blocks carry K(x_j, x_i)
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(kron(2 * i, 2 * j) == g(j, i));
            CHECK(kron(2 * i + 1, 2 * j + 1) == g(j, i));
            CHECK(kron(2 * i, 2 * j + 1) == Cplx{});
        }
    }
    CHECK(psd_verdict(kron).status == PsdStatus::Psd);

    CMatrix w(2, 2);
    w(0, 0) = 0.5;
    w(1, 1) = 2.0;
    const std::vector<CMatrix> single{w};
    const auto bad = block_pick_matrix(s, pts({0.2}), single);
    const double k = 1.0 / (1.0 - 0.04);
    CHECK(std::abs(bad(0, 0) - 0.75 * k) < 1e-15);
    CHECK(std::abs(bad(1, 1) + 3.0 * k) < 1e-14);
    CHECK(psd_verdict(bad).status == PsdStatus::NotPsd);

    std::vector<CMatrix> mixed{CMatrix(2, 2), CMatrix(2, 3)};
    try {
        (void)block_pick_matrix(s, pts({0.0, 0.5}), mixed);
        FAIL("expected DIMENSION_MISMATCH");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
}

TEST_CASE("csv export") {
    const auto m = mat(2, {1.0, Cplx{0.5, 0.25}, Cplx{0.5, -0.25}, 2.0});
    CHECK(to_csv(m) == "1,0,0.5,0.25\n0.5,-0.25,2,0\n");
}

TEST_CASE("property: Jacobi recovers planted spectra") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 17u, 32u, 64u}) {
        for (int rep = 0; rep < 3; ++rep) {
            const auto q = oracle::random_unitary(n, rng);
            std::vector<double> d(n);
            for (auto& x : d) x = u(rng);
            if (n > 3) d[1] = d[0] + 1e-9;  // near-degenerate pair
            const HermitianMatrix m(n, oracle::planted(q, d));
            const double expected = *std::min_element(d.begin(), d.end());
            CHECK(std::abs(min_eig_hermitian(m) - expected) < 1e-10 * m.scale());
            auto all = eigenvalues_hermitian(m);
            std::sort(d.begin(), d.end());
            for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(all[i] - d[i]) < 1e-10 * std::max(1.0, m.scale()));
        }
    }
}

TEST_CASE("property: Schur product of PSD Gram matrices is PSD") {
    const auto s = KernelExpr::szego();
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto p = SampleSet::random_disk(20, 0.9, seed);
        const auto g = gram(s, p);
        const auto h = gram(kernel_pullback(s, PowerSeries({0.1, 0.5, 0.2})), p);
        std::vector<Cplx> prod(g.n() * g.n());
        for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = g.entries()[i] * h.entries()[i];
        const HermitianMatrix m(g.n(), prod);
        CHECK(psd_verdict(m).status == PsdStatus::Psd);
    }
}

TEST_CASE("property: congruence Gram equals D* G D") {
    const auto s = KernelExpr::szego();
    const PowerSeries f({Cplx{0.5, 0.2}, -1.0, Cplx{0.0, 0.3}});
    const auto p = SampleSet::random_disk(15, 0.85, 77);
    const auto g = gram(s, p);
    const auto gf = gram(kernel_congruence(s, f), p);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            const Cplx expected = f(p[i].scalar()) * g(i, j) * std::conj(f(p[j].scalar()));
            CHECK(std::abs(gf(i, j) - expected) <= 1e-12 * gf.scale());
        }
    }
    CHECK(psd_verdict(gf).status == PsdStatus::Psd);
}

TEST_CASE("property: pull-back Gram equals Gram on mapped points") {
    const auto s = KernelExpr::szego();
    const PowerSeries phi({Cplx{0.1, -0.1}, 0.6, Cplx{0.1, 0.1}});
    const auto p = SampleSet::random_disk(12, 0.9, 5);
    std::vector<BallPoint> mapped;
    for (const auto& z : p.points()) mapped.emplace_back(phi(z.scalar()));
    const auto a = gram(kernel_pullback(s, phi), p);
    const auto b = gram(s, SampleSet::explicit_points(mapped));
    for (std::size_t i = 0; i < a.entries().size(); ++i) CHECK(a.entries()[i] == b.entries()[i]);
}

TEST_CASE("property: verdict invariant under sample permutation") {
    const auto k = cnp_defect_kernel(KernelExpr::dbr(PowerSeries({0.0, 0.0, 1.0})), 0.0);
    auto base = SampleSet::radial_grid(3, 5, 0.8).points();
    std::mt19937_64 rng(1);
    const auto v0 = psd_verdict(gram(k, SampleSet::explicit_points(base)));
    for (int rep = 0; rep < 5; ++rep) {
        std::shuffle(base.begin(), base.end(), rng);
        const auto v = psd_verdict(gram(k, SampleSet::explicit_points(base)));
        CHECK(v.status == v0.status);
        CHECK(std::abs(v.min_eig - v0.min_eig) < 1e-10);
    }
}
