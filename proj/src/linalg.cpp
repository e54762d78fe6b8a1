#include "hbcnp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hbcnp/error.hpp"

namespace hbcnp {

namespace {

std::string pair_context(std::size_t i, std::size_t j) {
    return " (sample pair " + std::to_string(i) + ", " + std::to_string(j) + ")";
}

template <class F>
HermitianMatrix assemble(std::size_t n, std::string assembly, F&& entry) {
    std::vector<Cplx> m(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            try {
                m[i * n + j] = entry(i, j);
            } catch (const Error& e) {
                throw Error(e.code(), std::string(e.what()) + pair_context(i, j));
            }
        }
    }
    return HermitianMatrix(n, std::move(m), std::move(assembly));
}

// Cyclic Jacobi on a private copy; returns the diagonal after convergence.
std::vector<double> jacobi_diagonal(const HermitianMatrix& m) {
    const std::size_t n = m.n();
    std::vector<Cplx> a(m.entries().begin(), m.entries().end());
    auto at = [&](std::size_t i, std::size_t j) -> Cplx& { return a[i * n + j]; };

    const double threshold = kJacobiOffTol * m.scale();
    for (int sweep = 0; sweep <= kMaxJacobiSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) off += std::norm(at(i, j));
            }
        }
        if (std::sqrt(off) <= threshold) {
            std::vector<double> d(n);
            for (std::size_t i = 0; i < n; ++i) d[i] = at(i, i).real();
            return d;
        }
        if (sweep == kMaxJacobiSweeps) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Cplx apq = at(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const Cplx phase = apq / mag;
                const double app = at(p, p).real();
                const double aqq = at(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = t * c;

                // A <- V* A V with V = [[c, s], [-s conj(phase), c conj(phase)]] on (p, q).
                for (std::size_t k = 0; k < n; ++k) {
                    const Cplx akp = at(k, p);
                    const Cplx akq = at(k, q);
                    at(k, p) = c * akp - s * std::conj(phase) * akq;
                    at(k, q) = s * akp + c * std::conj(phase) * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Cplx apk = at(p, k);
                    const Cplx aqk = at(q, k);
                    at(p, k) = c * apk - s * phase * aqk;
                    at(q, k) = s * apk + c * phase * aqk;
                }
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                at(p, p) = app - t * mag;
                at(q, q) = aqq + t * mag;
            }
        }
    }
    throw Error(ErrorCode::NoConvergence,
                "Jacobi did not converge in " + std::to_string(kMaxJacobiSweeps) + " sweeps (n = " + std::to_string(n) + ")");
}

}  // namespace

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

HermitianMatrix::HermitianMatrix(std::size_t n, std::vector<Cplx> entries, std::string assembly)
    : n_(n), entries_(std::move(entries)), assembly_(std::move(assembly)) {
    if (entries_.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "entry count does not match n*n");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Cplx a = entries_[i * n + j];
            const Cplx b = entries_[j * n + i];
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(b.real()) ||
                !std::isfinite(b.imag())) {
                throw Error(ErrorCode::InvalidArgument, "non-finite matrix entry" + pair_context(i, j));
            }
            asymmetry_ = std::max(asymmetry_, std::abs(a - std::conj(b)));
            const Cplx sym = 0.5 * (a + std::conj(b));
            entries_[i * n + j] = i == j ? Cplx{sym.real(), 0.0} : sym;
            entries_[j * n + i] = std::conj(entries_[i * n + j]);
        }
    }
    for (Cplx v : entries_) scale_ = std::max(scale_, std::abs(v));
}

std::string_view to_string(PsdStatus s) noexcept {
    switch (s) {
        case PsdStatus::Psd: return "PSD";
        case PsdStatus::NotPsd: return "NOT_PSD";
        case PsdStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

PsdVerdict classify(double min_eig, double tol) {
    PsdVerdict v{PsdStatus::Inconclusive, min_eig, tol};
    if (std::isnan(min_eig)) return v;
    if (min_eig >= -tol) {
        v.status = PsdStatus::Psd;
    } else if (min_eig < -10.0 * tol) {
        v.status = PsdStatus::NotPsd;
    }
    return v;
}

HermitianMatrix gram(const KernelExpr& k, const SampleSet& pts) {
    return assemble(pts.size(), k.describe() + " on " + pts.describe(),
                    [&](std::size_t i, std::size_t j) { return k(pts[i], pts[j]); });
}

HermitianMatrix difference(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.n() != b.n()) throw Error(ErrorCode::DimensionMismatch, "matrix difference of different sizes");
    std::vector<Cplx> d(a.entries().begin(), a.entries().end());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b.entries()[i];
    return HermitianMatrix(a.n(), std::move(d), "(" + a.assembly() + ") - (" + b.assembly() + ")");
}

std::vector<double> eigenvalues_hermitian(const HermitianMatrix& m) {
    if (m.n() == 0) throw Error(ErrorCode::InvalidArgument, "eigenvalues of an empty matrix");
    auto d = jacobi_diagonal(m);
    std::sort(d.begin(), d.end());
    return d;
}

double min_eig_hermitian(const HermitianMatrix& m) { return eigenvalues_hermitian(m).front(); }

double default_tol(const HermitianMatrix& m) { return 1e-9 * std::max(1.0, m.scale()); }

PsdVerdict psd_verdict(const HermitianMatrix& m, std::optional<double> tol) {
    const double t = tol.value_or(default_tol(m));
    if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "PSD tolerance must be positive");
    try {
        return classify(min_eig_hermitian(m), t);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NoConvergence) throw;
        return classify(std::numeric_limits<double>::quiet_NaN(), t);
    }
}

HermitianMatrix pick_matrix(const KernelExpr& k, const SampleSet& nodes, std::span<const Cplx> targets) {
    if (targets.size() != nodes.size()) {
        throw Error(ErrorCode::LengthMismatch, std::to_string(nodes.size()) + " nodes but " +
                                                   std::to_string(targets.size()) + " targets");
    }
    return assemble(nodes.size(), "pick(" + k.describe() + ") on " + nodes.describe(), [&](std::size_t i, std::size_t j) {
        // K(x_j, x_i) pairs with conj(l_i) l_j for k(z, w) antilinear in w
        return (1.0 - std::conj(targets[i]) * targets[j]) * k(nodes[j], nodes[i]);
    });
}

HermitianMatrix block_pick_matrix(const KernelExpr& k, const SampleSet& nodes, std::span<const CMatrix> mats) {
    if (mats.size() != nodes.size()) {
        throw Error(ErrorCode::LengthMismatch, std::to_string(nodes.size()) + " nodes but " +
                                                   std::to_string(mats.size()) + " matrices");
    }
    if (mats.empty()) return HermitianMatrix(0, {}, "block_pick(empty)");
    const std::size_t s = mats.front().rows;
    const std::size_t t = mats.front().cols;
    for (const auto& w : mats) {
        if (w.rows != s || w.cols != t || w.data.size() != s * t) {
            throw Error(ErrorCode::DimensionMismatch, "interpolation matrices must share one s x t shape");
        }
    }
    const std::size_t n = nodes.size();
    const std::size_t dim = n * t;
    std::vector<Cplx> m(dim * dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Cplx kij;
            try {
                kij = k(nodes[j], nodes[i]);
            } catch (const Error& e) {
                throw Error(e.code(), std::string(e.what()) + pair_context(i, j));
            }
            const CMatrix& wi = mats[i];
            const CMatrix& wj = mats[j];
            for (std::size_t r = 0; r < t; ++r) {
                for (std::size_t c = 0; c < t; ++c) {
                    Cplx prod{};  // (W_i^* W_j)_{rc}
                    for (std::size_t l = 0; l < s; ++l) prod += std::conj(wi(l, r)) * wj(l, c);
                    const Cplx ident = r == c ? 1.0 : 0.0;
                    m[(i * t + r) * dim + (j * t + c)] = (ident - prod) * kij;
                }
            }
        }
    }
    return HermitianMatrix(dim, std::move(m),
                           "block_pick(" + k.describe() + ", " + std::to_string(s) + "x" + std::to_string(t) + ") on " +
                               nodes.describe());
}

std::string to_csv(const HermitianMatrix& m) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < m.n(); ++i) {
        for (std::size_t j = 0; j < m.n(); ++j) {
            if (j) os << ',';
            // + 0.0 drops the sign of negative zeros
            os << m(i, j).real() + 0.0 << ',' << m(i, j).imag() + 0.0;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace hbcnp
