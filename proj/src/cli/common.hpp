#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hbcnp/json_io.hpp"

namespace hbcnp::cli {

/// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
json load_json_arg(const std::string& arg);

struct SamplingFlags {
    std::string grid = "6x12";
    double rmax = 0.9;
    std::size_t random = 8;
    std::uint64_t seed = kDefaultSeed;
    std::string points;
};

void add_sampling_flags(CLI::App& app, SamplingFlags& f);

/// Explicit --points replace the generated set. Kernels on the d-ball (d > 1)
/// use grid-size-plus-random uniform ball samples instead of the disk grid.
SampleSet build_samples(const SamplingFlags& f, std::size_t dim = 1);

/// Gallery form: {"grid": "RxT", "rmax", "random", "seed", "points": [...]}, all optional.
SampleSet samples_from_json(const json& j);

/// FNV-1a 64 of the text, as 16 hex digits.
std::string digest(std::string_view text);

/// Common header of every report: tool, version, command, inputs_digest.
json report_header(const std::string& command, const json& inputs);

/// Writes the report to `out` and, when a path is given, to that file too.
void emit(const json& report, std::ostream& out, const std::string& json_path);

}  // namespace hbcnp::cli
