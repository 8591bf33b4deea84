#include "figdraw/moving_circle.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include <json.hpp>

#include "figdraw/errors.hpp"
#include "figdraw/rng.hpp"

namespace figdraw::raster {

namespace {

geo::Point candidate(Xoshiro256ss& rng, const MovingCircleParams& p) {
  if (p.sampler == Sampler::polar) {
    const double angle = rng.uniform() * 360.0;
    const double dist = rng.uniform() * p.big_radius;
    const double theta = angle * std::numbers::pi / 180;
    return {dist * std::cos(theta) + p.x, dist * std::sin(theta) + p.y};
  }
  const double x1 = rng.uniform() * 2 * p.big_radius + p.x - p.big_radius;
  const double y1 = rng.uniform() * 2 * p.big_radius + p.y - p.big_radius;
  return {x1, y1};
}

} // namespace

std::vector<MovingFrame> moving_circle_frames(const MovingCircleParams& params) {
  const geo::Circle fixed(params.big_radius, geo::Point(params.x, params.y), NamedColor::black);
  if (!(params.small_radius > 0) || !std::isfinite(params.small_radius)) {
    throw RangeError("moving circle radius must be positive and finite");
  }
  if (params.small_radius >= params.big_radius) {
    throw PlacementError("moving circle of radius " + std::to_string(params.small_radius) +
                         " can never fit inside radius " + std::to_string(params.big_radius));
  }

  std::vector<MovingFrame> out;
  out.reserve(params.frames);
  for (std::size_t i = 0; i < params.frames; ++i) {
    Xoshiro256ss rng(derive_seed(params.seed, i));
    std::uint64_t attempts = 0;
    while (true) {
      if (attempts == params.max_attempts) {
        throw PlacementError("no placement accepted for frame " + std::to_string(i) + " after " +
                             std::to_string(attempts) + " attempts");
      }
      ++attempts;
      const geo::Circle moving(params.small_radius, candidate(rng, params), NamedColor::red);
      if (!fixed.contains(moving)) continue;

      Canvas cv(params.pixel_width, params.pixel_height, {0.0, 100.0}, {0.0, 100.0});
      cv.set_pen_radius(params.pen_radius);
      draw_circle_outline(cv, fixed);
      draw_circle_outline(cv, moving);
      out.push_back({std::move(cv), fixed, moving, attempts});
      break;
    }
  }
  return out;
}

std::string frame_manifest(const std::vector<std::string>& names, std::uint64_t interval_us) {
  nlohmann::ordered_json j;
  j["frame_interval_us"] = interval_us;
  j["frame_count"] = names.size();
  j["frames"] = names;
  return j.dump(2) + "\n";
}

std::vector<std::string> write_frame_sequence(const std::vector<MovingFrame>& frames,
                                              const std::filesystem::path& dir,
                                              std::uint64_t interval_us) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> names;
  names.reserve(frames.size());
  for (std::size_t i = 0; i < frames.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%04zu.ppm", i);
    write_file((dir / name).string(), export_ppm(frames[i].canvas));
    names.emplace_back(name);
  }
  write_file((dir / "manifest.json").string(), frame_manifest(names, interval_us));
  return names;
}

} // namespace figdraw::raster
