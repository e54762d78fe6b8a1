#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hbcnp/kernels.hpp"

namespace hbcnp {

inline constexpr double kMinSeparation = 1e-8;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct RadialGrid {
    std::size_t n_radii;
    std::size_t n_angles;
    double r_max;
};
struct RandomDisk {
    std::size_t count;
    double r_max;
    std::uint64_t seed;
};
struct RandomBall {
    std::size_t count;
    std::size_t dim;
    double r_max;
    std::uint64_t seed;
};
struct ExplicitPoints {};

using SampleGen = std::variant<RadialGrid, RandomDisk, RandomBall, ExplicitPoints>;

/// Finite point set inside the open unit ball, with the recipe that produced it.
///
/// Every point satisfies |p| <= r_max < 1 and points are pairwise at least
/// kMinSeparation apart. Generated sets silently drop would-be duplicates;
/// explicit sets reject them.
class SampleSet {
public:
    SampleSet() = default;

    /// Radii r_max * i / n_radii (i = 1..n_radii), angles 2 pi j / n_angles.
    static SampleSet radial_grid(std::size_t n_radii, std::size_t n_angles, double r_max);
    /// Uniform in the disk of radius r_max, reproducible from the seed.
    static SampleSet random_disk(std::size_t count, double r_max, std::uint64_t seed);
    /// Uniform in the ball of radius r_max in C^dim.
    static SampleSet random_ball(std::size_t count, std::size_t dim, double r_max, std::uint64_t seed);
    static SampleSet explicit_points(std::vector<BallPoint> points);
    /// 6 x 12 radial grid at r_max 0.9 plus 8 seeded random points.
    static SampleSet default_set(std::uint64_t seed = kDefaultSeed);

    /// Union; points of `other` closer than kMinSeparation to an existing point are dropped.
    [[nodiscard]] SampleSet merged(const SampleSet& other) const;
    /// Copy with every point within `radius` of p removed.
    [[nodiscard]] SampleSet without(const BallPoint& p, double radius = kMinSeparation) const;

    [[nodiscard]] const std::vector<BallPoint>& points() const noexcept { return points_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] bool empty() const noexcept { return points_.empty(); }
    [[nodiscard]] const BallPoint& operator[](std::size_t i) const { return points_[i]; }
    [[nodiscard]] double r_max() const noexcept { return r_max_; }
    [[nodiscard]] const std::vector<SampleGen>& generators() const noexcept { return gens_; }
    [[nodiscard]] std::string describe() const;

private:
    void push(const BallPoint& p, bool reject_duplicates);

    std::vector<BallPoint> points_;
    std::vector<SampleGen> gens_;
    double r_max_ = 0.0;
};

}  // namespace hbcnp
