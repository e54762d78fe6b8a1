#pragma once

#include <string_view>

#include "json.hpp"

#include "hbcnp/cnp.hpp"
#include "hbcnp/dbr.hpp"
#include "hbcnp/families.hpp"
#include "hbcnp/kernels.hpp"
#include "hbcnp/linalg.hpp"
#include "hbcnp/pick.hpp"
#include "hbcnp/samples.hpp"
#include "hbcnp/series.hpp"

namespace hbcnp {

using nlohmann::json;

// All parsers throw Error(Parse) on malformed input.

/// Accepts a number, a [re, im] pair, or a string literal (see parse_complex).
Cplx complex_from_json(const json& j);
json complex_to_json(Cplx z);
/// "0.5", "-0.2i", "0.3+0.1i", "1-2i", "i"
Cplx parse_complex(std::string_view text);
/// Complex literals separated by commas, semicolons or whitespace.
std::vector<Cplx> parse_complex_list(std::string_view text);

/// A complex scalar, or an array of complex coordinates for a ball point.
BallPoint point_from_json(const json& j);
json point_to_json(const BallPoint& p);

/// {"center": c, "coeffs": [c0, c1, ...]} or a bare coefficient array (center 0).
PowerSeries series_from_json(const json& j);
json series_to_json(const PowerSeries& s);

/// {"family": "affine", "A": .., "B": ..} | moebius_over | blaschke {"zeros"} |
/// scaled_identity {"R"} | power {"k"} | an explicit series literal.
SymbolSpec symbol_from_json(const json& j);
json symbol_to_json(const SymbolSpec& s);

/// Kernel descriptor trees, tagged by "kind":
///   szego | drury_arveson {dim} | weighted_hardy {weights | weight_exponent, terms} |
///   dbr {b} | constant {value, dim} | sum {left, right} | pullback {inner, map} |
///   congruence {inner, factor} | normalized_defect {inner, base}
/// Series-valued fields accept either a series literal or a symbol spec.
KernelExpr kernel_from_json(const json& j, std::size_t order = kDefaultOrder);
json kernel_to_json(const KernelExpr& k);

json to_json(const PsdVerdict& v);
json to_json(const CertReport& r);
json to_json(const InjectivityResult& r);
json to_json(const CriterionReport& r);
json to_json(const HermitianMatrix& m);
json to_json(const SchurInterpolant& f);

}  // namespace hbcnp
