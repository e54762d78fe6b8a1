#include "hbcnp/samples.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hbcnp/error.hpp"

namespace hbcnp {

namespace {

// Portable 53-bit uniform in [0, 1); std distributions differ between vendors.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void check_radius(double r_max) {
    if (!(r_max > 0.0 && r_max < 1.0)) throw Error(ErrorCode::InvalidArgument, "sample radius must lie in (0, 1)");
}

}  // namespace

void SampleSet::push(const BallPoint& p, bool reject_duplicates) {
    const double r = std::sqrt(p.norm_sq());
    if (!(r < 1.0)) {
        std::ostringstream msg;
        msg << "sample point of norm " << r << " is outside the open unit ball";
        throw Error(ErrorCode::DomainViolation, msg.str());
    }
    for (const auto& q : points_) {
        if (q.dim() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "sample points of mixed dimension");
        if (distance(p, q) < kMinSeparation) {
            if (reject_duplicates) throw Error(ErrorCode::InvalidArgument, "sample points closer than 1e-8");
            return;
        }
    }
    points_.push_back(p);
    r_max_ = std::max(r_max_, r);
}

SampleSet SampleSet::radial_grid(std::size_t n_radii, std::size_t n_angles, double r_max) {
    check_radius(r_max);
    if (n_radii == 0 || n_angles == 0) throw Error(ErrorCode::InvalidArgument, "radial grid needs at least 1x1 points");
    SampleSet s;
    for (std::size_t i = 1; i <= n_radii; ++i) {
        const double r = r_max * static_cast<double>(i) / static_cast<double>(n_radii);
        for (std::size_t j = 0; j < n_angles; ++j) {
            s.push(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_angles)), false);
        }
    }
    s.r_max_ = std::max(s.r_max_, r_max);
    s.gens_.emplace_back(RadialGrid{n_radii, n_angles, r_max});
    return s;
}

SampleSet SampleSet::random_disk(std::size_t count, double r_max, std::uint64_t seed) {
    check_radius(r_max);
    std::mt19937_64 rng(seed);
    SampleSet s;
    for (std::size_t i = 0; i < count; ++i) {
        const double r = r_max * std::sqrt(uniform01(rng));
        const double theta = 2.0 * std::numbers::pi * uniform01(rng);
        s.push(std::polar(r, theta), false);
    }
    s.r_max_ = std::max(s.r_max_, r_max);
    s.gens_.emplace_back(RandomDisk{count, r_max, seed});
    return s;
}

SampleSet SampleSet::random_ball(std::size_t count, std::size_t dim, double r_max, std::uint64_t seed) {
    check_radius(r_max);
    if (dim == 0) throw Error(ErrorCode::InvalidArgument, "ball dimension must be positive");
    std::mt19937_64 rng(seed);
    SampleSet s;
    std::vector<Cplx> c(dim);
    for (std::size_t i = 0; i < count; ++i) {
        // Rejection from the enclosing cube of R^{2 dim}.
        double n2 = 0.0;
        do {
            n2 = 0.0;
            for (auto& v : c) {
                v = {2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0};
                n2 += std::norm(v);
            }
        } while (n2 >= 1.0);
        std::vector<Cplx> p(c);
        for (auto& v : p) v *= r_max;
        s.push(BallPoint(std::move(p)), false);
    }
    s.r_max_ = std::max(s.r_max_, r_max);
    s.gens_.emplace_back(RandomBall{count, dim, r_max, seed});
    return s;
}

SampleSet SampleSet::explicit_points(std::vector<BallPoint> points) {
    SampleSet s;
    for (const auto& p : points) s.push(p, true);
    s.gens_.emplace_back(ExplicitPoints{});
    return s;
}

SampleSet SampleSet::default_set(std::uint64_t seed) {
    return radial_grid(6, 12, 0.9).merged(random_disk(8, 0.9, seed));
}

SampleSet SampleSet::merged(const SampleSet& other) const {
    SampleSet s = *this;
    for (const auto& p : other.points_) s.push(p, false);
    s.r_max_ = std::max(r_max_, other.r_max_);
    s.gens_.insert(s.gens_.end(), other.gens_.begin(), other.gens_.end());
    return s;
}

SampleSet SampleSet::without(const BallPoint& p, double radius) const {
    SampleSet s;
    s.gens_ = gens_;
    s.r_max_ = r_max_;
    for (const auto& q : points_) {
        if (distance(p, q) >= radius) s.points_.push_back(q);
    }
    return s;
}

std::string SampleSet::describe() const {
    std::ostringstream os;
    os << points_.size() << " points";
    for (const auto& g : gens_) {
        os << "; ";
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, RadialGrid>) {
                    os << "grid " << v.n_radii << "x" << v.n_angles << " r_max " << v.r_max;
                } else if constexpr (std::is_same_v<T, RandomDisk>) {
                    os << "random disk " << v.count << " r_max " << v.r_max << " seed " << v.seed;
                } else if constexpr (std::is_same_v<T, RandomBall>) {
                    os << "random ball " << v.count << " dim " << v.dim << " r_max " << v.r_max << " seed " << v.seed;
                } else {
                    os << "explicit";
                }
            },
            g);
    }
    return os.str();
}

}  // namespace hbcnp
