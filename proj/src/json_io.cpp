#include "hbcnp/json_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "hbcnp/error.hpp"

namespace hbcnp {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

double number(const json& j, const char* what) {
    if (!j.is_number()) parse_fail(std::string(what) + " must be a number");
    return j.get<double>();
}

std::size_t positive_count(const json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<long long>() <= 0) parse_fail(what + " must be a positive integer");
    return j.get<std::size_t>();
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

bool parse_double(std::string_view s, double& out) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

bool is_series_literal(const json& j) { return j.is_array() || (j.is_object() && j.contains("coeffs")); }

PowerSeries series_or_symbol(const json& j, std::size_t order) {
    if (is_series_literal(j)) return series_from_json(j);
    return build_symbol(symbol_from_json(j), order);
}

}  // namespace

Cplx parse_complex(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) parse_fail("empty complex literal");
    if (s.back() != 'i' && s.back() != 'j') {
        double re = 0.0;
        if (!parse_double(s, re)) parse_fail("bad complex literal \"" + std::string(text) + "\"");
        return {re, 0.0};
    }
    s.pop_back();
    // Split at the last sign that is not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    std::string re_part = split == std::string::npos ? std::string{} : s.substr(0, split);
    std::string im_part = split == std::string::npos ? s : s.substr(split);
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    double re = 0.0;
    double im = 0.0;
    if ((!re_part.empty() && !parse_double(re_part, re)) || !parse_double(im_part, im)) {
        parse_fail("bad complex literal \"" + std::string(text) + "\"");
    }
    return {re, im};
}

std::vector<Cplx> parse_complex_list(std::string_view text) {
    std::vector<Cplx> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(parse_complex(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ';' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    return out;
}

Cplx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_string()) return parse_complex(j.get<std::string>());
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    parse_fail("complex value must be a number, [re, im] or a literal string, got " + j.dump());
}

json complex_to_json(Cplx z) { return json::array({finite_or_null(z.real()), finite_or_null(z.imag())}); }

BallPoint point_from_json(const json& j) {
    if (j.is_array() && !j.empty() && (j[0].is_array() || j[0].is_string())) {
        std::vector<Cplx> c;
        for (const auto& e : j) c.push_back(complex_from_json(e));
        return BallPoint(std::move(c));
    }
    return complex_from_json(j);
}

json point_to_json(const BallPoint& p) {
    if (p.dim() == 1) return complex_to_json(p[0]);
    json a = json::array();
    for (Cplx c : p.coords()) a.push_back(complex_to_json(c));
    return a;
}

PowerSeries series_from_json(const json& j) {
    const json& coeffs = j.is_array() ? j : field(j, "coeffs");
    if (!coeffs.is_array() || coeffs.empty()) parse_fail("series coefficients must be a non-empty array");
    std::vector<Cplx> c;
    c.reserve(coeffs.size());
    for (const auto& e : coeffs) c.push_back(complex_from_json(e));
    const Cplx center = j.is_object() && j.contains("center") ? complex_from_json(j.at("center")) : Cplx{};
    return PowerSeries(std::move(c), center);
}

json series_to_json(const PowerSeries& s) {
    json coeffs = json::array();
    for (Cplx c : s.coeffs()) coeffs.push_back(complex_to_json(c));
    return {{"center", complex_to_json(s.center())}, {"coeffs", std::move(coeffs)}};
}

SymbolSpec symbol_from_json(const json& j) {
    if (is_series_literal(j)) return SymbolSpec::explicit_series(series_from_json(j));
    if (j.is_object() && j.contains("series")) return SymbolSpec::explicit_series(series_from_json(j.at("series")));
    const json& fam = field(j, "family");
    if (!fam.is_string()) parse_fail("symbol family must be a string");
    const auto name = fam.get<std::string>();
    if (name == "affine") return SymbolSpec::affine(complex_from_json(field(j, "A")), complex_from_json(field(j, "B")));
    if (name == "moebius_over") {
        return SymbolSpec::moebius_over(complex_from_json(field(j, "A")), complex_from_json(field(j, "B")));
    }
    if (name == "blaschke") {
        const json& zs = field(j, "zeros");
        if (!zs.is_array()) parse_fail("blaschke zeros must be an array");
        std::vector<Cplx> zeros;
        for (const auto& z : zs) zeros.push_back(complex_from_json(z));
        return SymbolSpec::blaschke(std::move(zeros));
    }
    if (name == "scaled_identity") return SymbolSpec::scaled_identity(number(field(j, "R"), "R"));
    if (name == "power") {
        const json& k = field(j, "k");
        if (!k.is_number_integer()) parse_fail("power exponent k must be an integer");
        return SymbolSpec::power(k.get<int>());
    }
    parse_fail("unknown symbol family \"" + name + "\"");
}

json symbol_to_json(const SymbolSpec& s) {
    json j{{"family", std::string(to_string(s.family))}};
    switch (s.family) {
        case SymbolFamily::Affine:
        case SymbolFamily::MoebiusOver:
            j["A"] = complex_to_json(s.A);
            j["B"] = complex_to_json(s.B);
            break;
        case SymbolFamily::Blaschke: {
            json zs = json::array();
            for (Cplx z : s.zeros) zs.push_back(complex_to_json(z));
            j["zeros"] = std::move(zs);
            break;
        }
        case SymbolFamily::ScaledIdentity: j["R"] = s.R; break;
        case SymbolFamily::Power: j["k"] = s.k; break;
        case SymbolFamily::Explicit:
            if (s.series) j["series"] = series_to_json(*s.series);
            break;
    }
    return j;
}

KernelExpr kernel_from_json(const json& j, std::size_t order) {
    const json& kind_j = field(j, "kind");
    if (!kind_j.is_string()) parse_fail("kernel kind must be a string");
    const auto kind = kind_j.get<std::string>();
    if (kind == "szego") return KernelExpr::szego();
    if (kind == "drury_arveson") {
        return KernelExpr::drury_arveson(positive_count(field(j, "dim"), "drury_arveson dim"));
    }
    if (kind == "weighted_hardy") {
        std::vector<double> w;
        if (j.contains("weights")) {
            if (!j.at("weights").is_array()) parse_fail("weights must be an array");
            for (const auto& e : j.at("weights")) w.push_back(number(e, "weight"));
        } else {
            const double s = number(field(j, "weight_exponent"), "weight_exponent");
            std::size_t terms = kWeightedHardyTerms;
            if (j.contains("terms")) terms = positive_count(j.at("terms"), "terms");
            for (std::size_t n = 0; n < terms; ++n) w.push_back(std::pow(static_cast<double>(n + 1), s));
        }
        return KernelExpr::weighted_hardy(std::move(w));
    }
    if (kind == "dbr") return dbr_kernel(series_or_symbol(field(j, "b"), order));
    if (kind == "constant") {
        std::size_t dim = 1;
        if (j.contains("dim")) dim = positive_count(j.at("dim"), "constant dim");
        return KernelExpr::constant(number(field(j, "value"), "constant value"), dim);
    }
    if (kind == "sum") return kernel_sum(kernel_from_json(field(j, "left"), order), kernel_from_json(field(j, "right"), order));
    if (kind == "pullback") {
        return kernel_pullback(kernel_from_json(field(j, "inner"), order), series_or_symbol(field(j, "map"), order));
    }
    if (kind == "congruence") {
        return kernel_congruence(kernel_from_json(field(j, "inner"), order),
                                 series_or_symbol(field(j, "factor"), order));
    }
    if (kind == "normalized_defect") {
        return cnp_defect_kernel(kernel_from_json(field(j, "inner"), order), point_from_json(field(j, "base")));
    }
    parse_fail("unknown kernel kind \"" + kind + "\"");
}

json kernel_to_json(const KernelExpr& k) {
    const auto& d = k.node().data;
    switch (k.kind()) {
        case KernelKind::Szego: return {{"kind", "szego"}};
        case KernelKind::DruryArveson: return {{"kind", "drury_arveson"}, {"dim", std::get<DruryArvesonNode>(d).dim}};
        case KernelKind::WeightedHardy: return {{"kind", "weighted_hardy"}, {"weights", std::get<WeightedHardyNode>(d).weights}};
        case KernelKind::Dbr: return {{"kind", "dbr"}, {"b", series_to_json(std::get<DbrNode>(d).b)}};
        case KernelKind::Constant: {
            const auto& n = std::get<ConstantNode>(d);
            return {{"kind", "constant"}, {"value", n.value}, {"dim", n.dim}};
        }
        case KernelKind::Sum: {
            const auto& n = std::get<SumNode>(d);
            return {{"kind", "sum"}, {"left", kernel_to_json(n.left)}, {"right", kernel_to_json(n.right)}};
        }
        case KernelKind::Pullback: {
            const auto& n = std::get<PullbackNode>(d);
            return {{"kind", "pullback"}, {"inner", kernel_to_json(n.inner)}, {"map", series_to_json(n.map)}};
        }
        case KernelKind::Congruence: {
            const auto& n = std::get<CongruenceNode>(d);
            return {{"kind", "congruence"}, {"inner", kernel_to_json(n.inner)}, {"factor", series_to_json(n.factor)}};
        }
        case KernelKind::NormalizedDefect: {
            const auto& n = std::get<DefectNode>(d);
            return {{"kind", "normalized_defect"}, {"inner", kernel_to_json(n.inner)}, {"base", point_to_json(n.base)}};
        }
    }
    return {};
}

json to_json(const PsdVerdict& v) {
    return {{"status", std::string(to_string(v.status))}, {"min_eig", finite_or_null(v.min_eig)}, {"tol", v.tol_used}};
}

json to_json(const CertReport& r) {
    return {
        {"verdict", std::string(to_string(r.verdict.status))},
        {"min_eig", finite_or_null(r.verdict.min_eig)},
        {"tol", r.verdict.tol_used},
        {"base", point_to_json(r.base)},
        {"n_samples", r.samples.size()},
        {"samples", r.samples.describe()},
        {"vanish_flag", r.vanish_flag},
        {"notes", r.notes},
    };
}

json to_json(const InjectivityResult& r) {
    json j{{"status", std::string(to_string(r.status))}, {"valid_points", r.valid_points}};
    if (r.collision) j["collision"] = json::array({complex_to_json(r.collision->first), complex_to_json(r.collision->second)});
    return j;
}

json to_json(const CriterionReport& r) {
    json j{
        {"a", complex_to_json(r.a)},
        {"injectivity", to_json(r.inj)},
        {"reversion_ok", r.reversion_ok},
        {"reversion_residual", finite_or_null(r.reversion_residual)},
        {"schwarz_pick_margin", finite_or_null(r.schwarz_pick_margin)},
        {"extension_supplied", r.extension_supplied},
        {"extension_margin", r.extension_margin ? finite_or_null(*r.extension_margin) : json(nullptr)},
        {"witness_consistency", r.witness_consistency ? finite_or_null(*r.witness_consistency) : json(nullptr)},
        {"overall", std::string(to_string(r.overall))},
        {"notes", r.notes},
    };
    return j;
}

json to_json(const HermitianMatrix& m) {
    json re = json::array();
    json im = json::array();
    for (std::size_t i = 0; i < m.n(); ++i) {
        json rr = json::array();
        json ri = json::array();
        for (std::size_t k = 0; k < m.n(); ++k) {
            rr.push_back(m(i, k).real());
            ri.push_back(m(i, k).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    return {{"n", m.n()},       {"scale", m.scale()},         {"asymmetry", m.asymmetry()},
            {"assembly", m.assembly()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

json to_json(const SchurInterpolant& f) {
    json steps = json::array();
    for (const auto& s : f.steps()) {
        steps.push_back({{"node", complex_to_json(s.node)}, {"parameter", complex_to_json(s.parameter)}});
    }
    return {{"schur_steps", std::move(steps)}};
}

}  // namespace hbcnp
