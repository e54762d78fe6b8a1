#pragma once

// Test-only reference computations. Nothing here calls into the library's
// series or eigensolver code paths.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Cplx = std::complex<double>;

inline double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Coefficients of (-1 + sqrt(1 + 4w)) / 2, the inverse of z + z^2:
/// w^n has coefficient (-1)^{n-1} Catalan(n-1).
inline std::vector<double> quadratic_inverse_coeffs(int order) {
    std::vector<double> c(order + 1, 0.0);
    for (int n = 1; n <= order; ++n) {
        const double catalan = binomial(2 * (n - 1), n - 1) / n;
        c[n] = (n % 2 == 1 ? 1.0 : -1.0) * catalan;
    }
    return c;
}

/// Eigenvalues of [[a, b], [conj(b), d]] with a, d real.
inline std::pair<double, double> eig2(double a, double d, Cplx b) {
    const double m = 0.5 * (a + d);
    const double r = std::hypot(0.5 * (a - d), std::abs(b));
    return {m - r, m + r};
}

struct Dense {
    std::size_t n;
    std::vector<Cplx> a;
    Cplx& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    Cplx operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Haar-ish random unitary from modified Gram-Schmidt on a random complex matrix.
inline Dense random_unitary(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Dense q{n, std::vector<Cplx>(n * n)};
    for (auto& v : q.a) v = {g(rng), g(rng)};
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            Cplx dot{};
            for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
            for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < n; ++i) nrm += std::norm(q(i, j));
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < n; ++i) q(i, j) /= nrm;
    }
    return q;
}

/// U diag(d) U*
inline std::vector<Cplx> planted(const Dense& u, const std::vector<double>& d) {
    const std::size_t n = u.n;
    std::vector<Cplx> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Cplx s{};
            for (std::size_t k = 0; k < n; ++k) s += u(i, k) * d[k] * std::conj(u(j, k));
            m[i * n + j] = s;
        }
    }
    return m;
}

}  // namespace oracle
