#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hbcnp/series.hpp"

namespace hbcnp {

enum class SymbolFamily { Affine, MoebiusOver, Blaschke, ScaledIdentity, Power, Explicit };

/// Named symbol b, or an explicit series.
///   affine          (z + A) / B
///   moebius_over    A z / (z + B)
///   blaschke        prod (z - z_k) / (1 - conj(z_k) z)
///   scaled_identity z / R
///   power           z^k
struct SymbolSpec {
    SymbolFamily family = SymbolFamily::Explicit;
    Cplx A{};
    Cplx B{1.0, 0.0};
    std::vector<Cplx> zeros;
    double R = 1.0;
    int k = 1;
    std::optional<PowerSeries> series;

    static SymbolSpec affine(Cplx A, Cplx B);
    static SymbolSpec moebius_over(Cplx A, Cplx B);
    static SymbolSpec blaschke(std::vector<Cplx> zeros);
    static SymbolSpec scaled_identity(double R);
    static SymbolSpec power(int k);
    static SymbolSpec explicit_series(PowerSeries s);

    [[nodiscard]] std::string describe() const;
};

std::string_view to_string(SymbolFamily f) noexcept;

/// Taylor series of b about 0 truncated at `order` (explicit series are resized).
PowerSeries build_symbol(const SymbolSpec& spec, std::size_t order = kDefaultOrder);

/// Closed form of (z - b(0)) / h(z) on the disk where one is known:
///   affine 1/B, moebius_over (A - z)/B, scaled_identity 1/R,
///   single-zero blaschke 1 + conj(z_0) z, power k = 1 gives 1.
std::optional<PowerSeries> closed_form_witness(const SymbolSpec& spec, std::size_t order = kDefaultOrder);

}  // namespace hbcnp
