#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "figdraw/canvas.hpp"
#include "figdraw/geometry.hpp"

namespace figdraw::raster {

/// How candidate centres for the moving circle are drawn.
///  - polar: angle U[0, 360) degrees, distance U[0, R) from the fixed centre.
///  - rectangular: x and y each U[c - R, c + R).
enum class Sampler { polar, rectangular };

struct MovingCircleParams {
  double x = 50.0;
  double y = 50.0;
  double big_radius = 40.0;
  double small_radius = 8.0;
  Sampler sampler = Sampler::rectangular;
  std::size_t frames = 1;
  std::uint64_t seed = 0;
  std::size_t pixel_width = 512;
  std::size_t pixel_height = 512;
  double pen_radius = 0.01;
  /// Rejection-sampling budget per frame before giving up.
  std::uint64_t max_attempts = 1ULL << 24;
};

struct MovingFrame {
  Canvas canvas;
  geo::Circle fixed;
  geo::Circle moving;
  std::uint64_t attempts;
};

/// Default frame interval recorded in the manifest, in microseconds.
inline constexpr std::uint64_t kFrameIntervalUs = 200;

/// Renders `frames` accepted placements of the small RED circle inside the
/// fixed BLACK one on fresh 0..100 canvases. Candidates are rejected until
/// the fixed circle contains the moving one. Frame i draws from its own
/// Xoshiro256ss stream seeded with derive_seed(seed, i).
///
/// Throws PlacementError when small_radius >= big_radius or a frame exhausts
/// max_attempts.
[[nodiscard]] std::vector<MovingFrame> moving_circle_frames(const MovingCircleParams& params);

/// Writes frame_0000.ppm, frame_0001.ppm, ... and manifest.json into `dir`
/// (created if missing). Returns the frame file names in order.
std::vector<std::string> write_frame_sequence(const std::vector<MovingFrame>& frames,
                                              const std::filesystem::path& dir,
                                              std::uint64_t interval_us = kFrameIntervalUs);

/// The manifest text: frame names plus the frame interval.
[[nodiscard]] std::string frame_manifest(const std::vector<std::string>& names,
                                         std::uint64_t interval_us);

} // namespace figdraw::raster
