#include <cmath>

#include "doctest.h"
#include "hbcnp/error.hpp"
#include "hbcnp/json_io.hpp"

using namespace hbcnp;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an hbcnp::Error");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("complex literals") {
    CHECK(parse_complex("0.5") == Cplx{0.5, 0.0});
    CHECK(parse_complex("-0.2i") == Cplx{0.0, -0.2});
    CHECK(parse_complex("0.3+0.1i") == Cplx{0.3, 0.1});
    CHECK(parse_complex("1-2i") == Cplx{1.0, -2.0});
    CHECK(parse_complex("i") == Cplx{0.0, 1.0});
    CHECK(parse_complex("-i") == Cplx{0.0, -1.0});
    CHECK(parse_complex("1e-3-2e+1i") == Cplx{1e-3, -20.0});
    CHECK(parse_complex(" 2 + 3i ") == Cplx{2.0, 3.0});
    for (const char* bad : {"", "abc", "1+", "0.5.5", "1+2", "ii"}) {
        CHECK(code_of([&] { (void)parse_complex(bad); }) == ErrorCode::Parse);
    }
    const auto list = parse_complex_list("0.5,-0.5; 0.3i  0");
    REQUIRE(list.size() == 4);
    CHECK(list[2] == Cplx{0.0, 0.3});
}

TEST_CASE("complex and point json") {
    CHECK(complex_from_json(json(0.25)) == Cplx{0.25});
    CHECK(complex_from_json(json::array({1.0, -2.0})) == Cplx{1.0, -2.0});
    CHECK(complex_from_json(json("0.1+0.2i")) == Cplx{0.1, 0.2});
    CHECK(code_of([] { (void)complex_from_json(json::array({1.0})); }) == ErrorCode::Parse);
    CHECK(code_of([] { (void)complex_from_json(json::object()); }) == ErrorCode::Parse);
    CHECK(complex_to_json(Cplx{1.0, NAN})[1].is_null());

    const BallPoint p = point_from_json(json::array({json::array({0.1, 0.0}), "0.2i"}));
    CHECK(p.dim() == 2);
    CHECK(point_from_json(point_to_json(p)) == p);
    CHECK(point_from_json(json::array({0.1, 0.2})).dim() == 1);  // [re, im] is a scalar
}

TEST_CASE("series json") {
    const PowerSeries s(std::vector<Cplx>{1.0, Cplx{0.0, 2.0}, -3.0}, Cplx{0.1, 0.0});
    const PowerSeries back = series_from_json(series_to_json(s));
    CHECK(back.center() == s.center());
    for (std::size_t n = 0; n <= 2; ++n) CHECK(back[n] == s[n]);
    CHECK(series_from_json(json::array({0, 0.5})).order() == 1);
    CHECK(code_of([] { (void)series_from_json(json::array()); }) == ErrorCode::Parse);
    CHECK(code_of([] { (void)series_from_json(json{{"center", 0}}); }) == ErrorCode::Parse);
}

TEST_CASE("symbol json round trips") {
    for (const auto& spec : {SymbolSpec::affine(Cplx{0.3, 0.2}, 2.0), SymbolSpec::moebius_over(-1.0, -2.0),
                             SymbolSpec::blaschke({0.0, Cplx{0.5, 0.1}}), SymbolSpec::scaled_identity(1.5),
                             SymbolSpec::power(3)}) {
        const auto back = symbol_from_json(symbol_to_json(spec));
        CHECK(back.describe() == spec.describe());
        const auto a = build_symbol(spec, 16);
        const auto b = build_symbol(back, 16);
        for (std::size_t n = 0; n <= 16; ++n) CHECK(a[n] == b[n]);
    }
    CHECK(symbol_from_json(json::array({0, 0.5})).family == SymbolFamily::Explicit);
    CHECK(code_of([] { (void)symbol_from_json(json{{"family", "nope"}}); }) == ErrorCode::Parse);
    CHECK(code_of([] { (void)symbol_from_json(json{{"family", "affine"}, {"A", 0}}); }) == ErrorCode::Parse);
    CHECK(code_of([] { (void)symbol_from_json(json{{"family", "power"}, {"k", 1.5}}); }) == ErrorCode::Parse);
}

TEST_CASE("kernel json") {
    const Cplx z{0.3, -0.2};
    const Cplx w{-0.1, 0.5};
    const std::vector<json> descriptors{
        {{"kind", "szego"}},
        {{"kind", "weighted_hardy"}, {"weight_exponent", 1}, {"terms", 32}},
        {{"kind", "dbr"}, {"b", {{"family", "moebius_over"}, {"A", -1}, {"B", -2}}}},
        {{"kind", "dbr"}, {"b", json::array({0, 0.5})}},
        {{"kind", "sum"}, {"left", {{"kind", "szego"}}}, {"right", {{"kind", "constant"}, {"value", 2}}}},
        {{"kind", "pullback"}, {"inner", {{"kind", "szego"}}}, {"map", {{"family", "scaled_identity"}, {"R", 2}}}},
        {{"kind", "congruence"}, {"inner", {{"kind", "szego"}}}, {"factor", json::array({1, 0.5})}},
        {{"kind", "normalized_defect"}, {"inner", {{"kind", "szego"}}}, {"base", "0.1i"}},
    };
    for (const auto& d : descriptors) {
        const KernelExpr k = kernel_from_json(d);
        const KernelExpr back = kernel_from_json(kernel_to_json(k));
        CHECK(std::abs(k(z, w) - back(z, w)) < 1e-14);
    }
    CHECK(kernel_from_json(json{{"kind", "drury_arveson"}, {"dim", 2}}).dim() == 2);
    // the Szego kernel at these points, as a sanity anchor
    CHECK(std::abs(kernel_from_json(descriptors[0])(z, w) - 1.0 / (1.0 - std::conj(w) * z)) < 1e-15);

    CHECK(code_of([] { (void)kernel_from_json(json{{"kind", "bergman"}}); }) == ErrorCode::Parse);
    CHECK(code_of([] { (void)kernel_from_json(json::array()); }) == ErrorCode::Parse);
    CHECK(code_of([] { (void)kernel_from_json(json{{"kind", "drury_arveson"}, {"dim", -1}}); }) == ErrorCode::Parse);
    CHECK(code_of([] { (void)kernel_from_json(json{{"kind", "dbr"}, {"b", json::array({0, 1.2})}}); }) ==
          ErrorCode::NotSchurClass);
}

TEST_CASE("report json") {
    const auto r = cnp_certify(KernelExpr::szego(), 0.0, SampleSet::radial_grid(2, 4, 0.5));
    const json j = to_json(r);
    CHECK(j["verdict"] == "PSD");
    CHECK(j["n_samples"] == 8);
    CHECK(j["notes"].is_array());

    const auto m = gram(KernelExpr::szego(), SampleSet::explicit_points({0.0, 0.5}));
    const json mj = to_json(m);
    CHECK(mj["n"] == 2);
    CHECK(mj["re"][1][1].get<double>() == doctest::Approx(4.0 / 3.0));
}
