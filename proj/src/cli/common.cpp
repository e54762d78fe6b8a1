#include "common.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "hbcnp/error.hpp"

#ifndef HBCNP_VERSION
#define HBCNP_VERSION "0.0.0"
#endif

namespace hbcnp::cli {

json load_json_arg(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    const bool inline_json = first != std::string::npos && (arg[first] == '{' || arg[first] == '[');
    std::string text = arg;
    std::string where = "inline JSON";
    if (!inline_json) {
        std::ifstream in(arg);
        if (!in) throw Error(ErrorCode::Parse, "cannot read " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
        where = arg;
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Parse, where + ": " + e.what());
    }
}

namespace {

std::pair<std::size_t, std::size_t> parse_grid(const std::string& text) {
    const auto x = text.find('x');
    try {
        if (x == std::string::npos) throw std::invalid_argument(text);
        std::size_t used = 0;
        const auto r = std::stoul(text.substr(0, x), &used);
        if (used != x) throw std::invalid_argument(text);
        const auto rest = text.substr(x + 1);
        const auto t = std::stoul(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
        return {r, t};
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::Parse, "grid must look like 6x12, got '" + text + "'");
    }
}

SampleSet generated(const std::string& grid, double rmax, std::size_t random, std::uint64_t seed, std::size_t dim) {
    const auto [r, t] = parse_grid(grid);
    if (dim > 1) return SampleSet::random_ball(r * t + random, dim, rmax, seed);
    auto pts = SampleSet::radial_grid(r, t, rmax);
    if (random > 0) pts = pts.merged(SampleSet::random_disk(random, rmax, seed));
    return pts;
}

}  // namespace

void add_sampling_flags(CLI::App& app, SamplingFlags& f) {
    app.add_option("--grid", f.grid, "radial grid, radii x angles")->capture_default_str();
    app.add_option("--rmax", f.rmax, "outer sample radius")->capture_default_str()->check(CLI::Range(0.0, 0.999999));
    app.add_option("--random", f.random, "extra uniform random points")->capture_default_str();
    app.add_option("--seed", f.seed, "seed for the random points")->capture_default_str();
    app.add_option("--points", f.points, "explicit points, e.g. \"0.5,-0.5,0.3i\" (replaces the generated set)");
}

SampleSet build_samples(const SamplingFlags& f, std::size_t dim) {
    if (!f.points.empty()) {
        if (dim != 1) throw Error(ErrorCode::DimensionMismatch, "--points only takes scalar points");
        const auto zs = parse_complex_list(f.points);
        return SampleSet::explicit_points(std::vector<BallPoint>(zs.begin(), zs.end()));
    }
    return generated(f.grid, f.rmax, f.random, f.seed, dim);
}

SampleSet samples_from_json(const json& j) {
    if (!j.is_object()) throw Error(ErrorCode::Parse, "samples must be an object");
    if (j.contains("points")) {
        if (!j["points"].is_array()) throw Error(ErrorCode::Parse, "samples.points must be an array");
        std::vector<BallPoint> pts;
        for (const auto& p : j["points"]) pts.push_back(point_from_json(p));
        return SampleSet::explicit_points(std::move(pts));
    }
    SamplingFlags f;
    try {
        f.grid = j.value("grid", f.grid);
        f.rmax = j.value("rmax", f.rmax);
        f.random = j.value("random", f.random);
        f.seed = j.value("seed", f.seed);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("samples: ") + e.what());
    }
    return generated(f.grid, f.rmax, f.random, f.seed, 1);
}

std::string digest(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

json report_header(const std::string& command, const json& inputs) {
    return {{"tool", "hbcnp"},
            {"version", HBCNP_VERSION},
            {"command", command},
            {"inputs_digest", digest(command + '\n' + inputs.dump())}};
}

void emit(const json& report, std::ostream& out, const std::string& json_path) {
    const std::string text = report.dump(2);
    out << text << '\n';
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + json_path);
        f << text << '\n';
    }
}

}  // namespace hbcnp::cli
