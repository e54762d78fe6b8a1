#include "hbcnp/families.hpp"

#include <sstream>

#include "hbcnp/error.hpp"
#include "hbcnp/pick.hpp"

namespace hbcnp {

SymbolSpec SymbolSpec::affine(Cplx A, Cplx B) {
    if (B == Cplx{}) throw Error(ErrorCode::InvalidArgument, "affine symbol needs B != 0");
    SymbolSpec s;
    s.family = SymbolFamily::Affine;
    s.A = A;
    s.B = B;
    return s;
}

SymbolSpec SymbolSpec::moebius_over(Cplx A, Cplx B) {
    if (B == Cplx{}) throw Error(ErrorCode::InvalidArgument, "moebius_over symbol needs B != 0");
    SymbolSpec s;
    s.family = SymbolFamily::MoebiusOver;
    s.A = A;
    s.B = B;
    return s;
}

SymbolSpec SymbolSpec::blaschke(std::vector<Cplx> zeros) {
    SymbolSpec s;
    s.family = SymbolFamily::Blaschke;
    s.zeros = std::move(zeros);
    return s;
}

SymbolSpec SymbolSpec::scaled_identity(double R) {
    if (!(R > 0.0)) throw Error(ErrorCode::InvalidArgument, "scaled_identity needs R > 0");
    SymbolSpec s;
    s.family = SymbolFamily::ScaledIdentity;
    s.R = R;
    return s;
}

SymbolSpec SymbolSpec::power(int k) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "power symbol needs k >= 1");
    SymbolSpec s;
    s.family = SymbolFamily::Power;
    s.k = k;
    return s;
}

SymbolSpec SymbolSpec::explicit_series(PowerSeries series) {
    SymbolSpec s;
    s.family = SymbolFamily::Explicit;
    s.series = std::move(series);
    return s;
}

std::string_view to_string(SymbolFamily f) noexcept {
    switch (f) {
        case SymbolFamily::Affine: return "affine";
        case SymbolFamily::MoebiusOver: return "moebius_over";
        case SymbolFamily::Blaschke: return "blaschke";
        case SymbolFamily::ScaledIdentity: return "scaled_identity";
        case SymbolFamily::Power: return "power";
        case SymbolFamily::Explicit: return "series";
    }
    return "series";
}

std::string SymbolSpec::describe() const {
    std::ostringstream os;
    switch (family) {
        case SymbolFamily::Affine: os << "(z + " << A << ") / " << B; break;
        case SymbolFamily::MoebiusOver: os << A << " z / (z + " << B << ")"; break;
        case SymbolFamily::Blaschke:
            os << "blaschke(";
            for (std::size_t i = 0; i < zeros.size(); ++i) os << (i ? ", " : "") << zeros[i];
            os << ")";
            break;
        case SymbolFamily::ScaledIdentity: os << "z / " << R; break;
        case SymbolFamily::Power: os << "z^" << k; break;
        case SymbolFamily::Explicit:
            os << "series(order " << (series ? series->order() : 0) << ")";
            break;
    }
    return os.str();
}

PowerSeries build_symbol(const SymbolSpec& spec, std::size_t order) {
    std::vector<Cplx> c(order + 1);
    switch (spec.family) {
        case SymbolFamily::Affine:
            c[0] = spec.A / spec.B;
            if (order >= 1) c[1] = 1.0 / spec.B;
            return PowerSeries(std::move(c));
        case SymbolFamily::MoebiusOver: {
            // A z / (B (1 + z/B)) = (A/B) sum_n (-1/B)^n z^{n+1}
            Cplx term = spec.A / spec.B;
            for (std::size_t n = 1; n <= order; ++n) {
                c[n] = term;
                term *= -1.0 / spec.B;
            }
            return PowerSeries(std::move(c));
        }
        case SymbolFamily::Blaschke: return blaschke_product(spec.zeros, order);
        case SymbolFamily::ScaledIdentity:
            if (order >= 1) c[1] = 1.0 / spec.R;
            return PowerSeries(std::move(c));
        case SymbolFamily::Power:
            if (static_cast<std::size_t>(spec.k) <= order) c[static_cast<std::size_t>(spec.k)] = 1.0;
            return PowerSeries(std::move(c));
        case SymbolFamily::Explicit:
            if (!spec.series) throw Error(ErrorCode::InvalidArgument, "explicit symbol without a series");
            return spec.series->resized(order);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown symbol family");
}

std::optional<PowerSeries> closed_form_witness(const SymbolSpec& spec, std::size_t order) {
    std::vector<Cplx> c(order + 1);
    switch (spec.family) {
        case SymbolFamily::Affine: c[0] = 1.0 / spec.B; break;
        case SymbolFamily::MoebiusOver:
            c[0] = spec.A / spec.B;
            if (order >= 1) c[1] = -1.0 / spec.B;
            break;
        case SymbolFamily::ScaledIdentity: c[0] = 1.0 / spec.R; break;
        case SymbolFamily::Blaschke:
            if (spec.zeros.size() != 1) return std::nullopt;
            c[0] = 1.0;
            if (order >= 1) c[1] = std::conj(spec.zeros.front());
            break;
        case SymbolFamily::Power:
            if (spec.k != 1) return std::nullopt;
            c[0] = 1.0;
            break;
        case SymbolFamily::Explicit: return std::nullopt;
    }
    return PowerSeries(std::move(c));
}

}  // namespace hbcnp
