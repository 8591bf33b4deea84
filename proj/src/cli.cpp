#include "figdraw/cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "figdraw/bench.hpp"
#include "figdraw/calendar.hpp"
#include "figdraw/canvas.hpp"
#include "figdraw/discrete_pic.hpp"
#include "figdraw/dragon.hpp"
#include "figdraw/errors.hpp"
#include "figdraw/moving_circle.hpp"
#include "figdraw/text_layout.hpp"

namespace figdraw::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

constexpr int kMaxPyramidHeight = 1000;

// Positional arguments plus --flags. Flags listed in `valued` consume the
// next argument; flags in `switches` stand alone; anything else starting
// with "--" is rejected.
struct ParsedArgs {
  std::vector<std::string> positional;
  std::map<std::string, std::string> values;
  std::set<std::string> switches;

  [[nodiscard]] bool has(const std::string& flag) const {
    return switches.contains(flag) || values.contains(flag);
  }
  [[nodiscard]] std::optional<std::string> value(const std::string& flag) const {
    auto it = values.find(flag);
    if (it == values.end()) return std::nullopt;
    return it->second;
  }
};

ParsedArgs parse_args(const std::vector<std::string>& args, std::size_t first,
                      const std::set<std::string>& valued, const std::set<std::string>& switches) {
  ParsedArgs p;
  for (std::size_t i = first; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a.rfind("--", 0) != 0) {
      p.positional.push_back(a);
      continue;
    }
    if (valued.contains(a)) {
      if (i + 1 >= args.size()) throw UsageError("flag " + a + " needs a value");
      if (p.values.contains(a)) throw UsageError("flag " + a + " given twice");
      p.values[a] = args[++i];
    } else if (switches.contains(a)) {
      p.switches.insert(a);
    } else {
      throw UsageError("unknown flag " + a);
    }
  }
  return p;
}

void expect_positionals(const ParsedArgs& p, std::size_t n, const char* usage) {
  if (p.positional.size() != n) throw UsageError(std::string("usage: ") + usage);
}

long long parse_int(const std::string& s, const char* what, long long lo, long long hi) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError(std::string(what) + " must be an integer, got '" + s + "'");
  }
  if (v < lo || v > hi) {
    throw UsageError(std::string(what) + " must be in " + std::to_string(lo) + ".." +
                     std::to_string(hi) + ", got " + s);
  }
  return v;
}

std::uint64_t parse_seed(const std::string& s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("seed must be a non-negative integer, got '" + s + "'");
  }
  return v;
}

double parse_real(const std::string& s, const char* what) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw UsageError(std::string(what) + " must be a finite number, got '" + s + "'");
  }
  return v;
}

std::string required(const ParsedArgs& p, const std::string& flag) {
  auto v = p.value(flag);
  if (!v) throw UsageError("missing required flag " + flag);
  return *v;
}

std::string strip_trailing_space(std::string_view text) {
  std::string out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    const bool last = nl == std::string_view::npos;
    auto line = text.substr(start, last ? std::string_view::npos : nl - start);
    const auto end = line.find_last_not_of(" \t");
    if (end != std::string_view::npos) out.append(line.substr(0, end + 1));
    if (last) break;
    out += '\n';
    start = nl + 1;
  }
  return out;
}

void save_image(const raster::Canvas& cv, const std::string& path) {
  raster::write_file(path, raster::export_image(cv, raster::format_for_path(path)));
}

// ---------------------------------------------------------------------------

int cmd_pyramid(const std::vector<std::string>& args, std::ostream& out) {
  const auto p = parse_args(args, 1, {}, {"--trim"});
  expect_positionals(p, 2, "pyramid <h> <char> [--trim]");
  const auto h = static_cast<int>(parse_int(p.positional[0], "pyramid height", 1, kMaxPyramidHeight));
  const auto& c = p.positional[1];
  if (c.size() != 1 || !pic::is_cell_char(c[0])) {
    throw UsageError("pyramid character must be a single printable ASCII character");
  }
  const auto pyr = pic::pyramid(h, c[0]);
  out << (p.has("--trim") ? pic::render_trimmed(pyr) : pic::render_text(pyr));
  return kExitOk;
}

int cmd_calendar(const std::vector<std::string>& args, std::ostream& out) {
  const auto p = parse_args(args, 1, {}, {"--bold"});
  expect_positionals(p, 2, "calendar <year> <month> [--bold]");
  pic::CalendricSpec spec;
  spec.year = static_cast<int>(parse_int(p.positional[0], "year", pic::kMinGregorianYear, 9999));
  spec.month = static_cast<int>(parse_int(p.positional[1], "month", 1, 12));
  out << pic::render_text(pic::calendric_month(spec, p.has("--bold")));
  return kExitOk;
}

int cmd_tabulate(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  const auto p = parse_args(args, 1, {"--gap"}, {"--force", "--raw"});
  expect_positionals(p, 2, "tabulate <w> <h> [--gap G] [--force] [--raw]");
  text::TabulationParams params;
  params.width = static_cast<std::size_t>(parse_int(p.positional[0], "column width", 1, 100000));
  params.height = static_cast<std::size_t>(parse_int(p.positional[1], "column height", 1, 100000));
  if (auto g = p.value("--gap")) params.gap = static_cast<std::size_t>(parse_int(*g, "gap", 0, 1000));

  const std::string input{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  const auto table = text::tabulate(text::TextBlock(input), params, p.has("--force"));
  if (p.has("--raw")) {
    // println after joinLines: one extra line break.
    out << table << '\n';
  } else {
    out << strip_trailing_space(table);
  }
  return kExitOk;
}

int cmd_dragon(const std::vector<std::string>& args, std::ostream& out) {
  const auto p = parse_args(args, 1, {"--out", "--color"}, {});
  expect_positionals(p, 1, "dragon <depth> [--out PATH] [--color NAME]");
  fractal::DragonSpec spec;
  spec.depth = static_cast<int>(parse_int(p.positional[0], "dragon depth", 0, 1000));
  if (auto c = p.value("--color")) {
    auto color = parse_color(*c);
    if (!color) throw UsageError("unknown color " + *c);
    spec.color = *color;
  }
  const auto count = fractal::dragon_segment_count(spec.depth, fractal::kMaxDepth);
  if (auto path = p.value("--out")) {
    auto cv = fractal::dragon_canvas();
    const auto format = raster::format_for_path(*path);
    cv.set_retain_primitives(format == raster::ImageFormat::svg);
    fractal::draw_dragon(cv, spec, fractal::kMaxDepth);
    raster::write_file(*path, raster::export_image(cv, format));
  }
  out << "segments: " << count << "\n";
  return kExitOk;
}

int cmd_movingcircle(const std::vector<std::string>& args, std::ostream& out) {
  const auto p = parse_args(args, 1, {"--frames", "--seed", "--out", "--sampler"}, {});
  expect_positionals(p, 4,
                     "movingcircle <x> <y> <R> <r> --frames N --seed S --out DIR "
                     "--sampler polar|rectangular");
  raster::MovingCircleParams params;
  params.x = parse_real(p.positional[0], "x");
  params.y = parse_real(p.positional[1], "y");
  params.big_radius = parse_real(p.positional[2], "R");
  params.small_radius = parse_real(p.positional[3], "r");
  if (params.big_radius <= 0 || params.small_radius <= 0) {
    throw UsageError("radii must be positive");
  }
  params.frames = static_cast<std::size_t>(parse_int(p.value("--frames").value_or("10"), "frames", 1, 100000));
  params.seed = parse_seed(p.value("--seed").value_or("0"));
  const auto sampler = p.value("--sampler").value_or("rectangular");
  if (sampler == "polar") {
    params.sampler = raster::Sampler::polar;
  } else if (sampler == "rectangular") {
    params.sampler = raster::Sampler::rectangular;
  } else {
    throw UsageError("sampler must be polar or rectangular, got " + sampler);
  }
  const auto dir = required(p, "--out");

  const auto frames = raster::moving_circle_frames(params);
  const auto names = raster::write_frame_sequence(frames, dir);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const auto& c = frames[i].moving.center();
    out << names[i] << " " << c.x() << " " << c.y() << "\n";
  }
  return kExitOk;
}

int cmd_fill(const std::vector<std::string>& args, std::ostream& out) {
  const auto p = parse_args(args, 1, {"--method", "--radius", "--rings", "--chords", "--out"}, {});
  expect_positionals(p, 0,
                     "fill --method radial|concentric --radius R [--rings K --chords C] --out PATH");
  const auto method = required(p, "--method");
  const double radius = parse_real(required(p, "--radius"), "radius");
  if (radius <= 0) throw UsageError("radius must be positive");
  const auto path = required(p, "--out");

  raster::Canvas cv;
  cv.set_pen_radius(0.01);
  const geo::Circle circle(radius, {50.0, 50.0}, NamedColor::blue);
  std::size_t lines = 0;
  if (method == "radial") {
    if (p.has("--rings") || p.has("--chords")) {
      throw UsageError("--rings and --chords only apply to the concentric method");
    }
    lines = raster::fill_circle_radial(cv, circle);
  } else if (method == "concentric") {
    const auto rings = static_cast<int>(parse_int(p.value("--rings").value_or("160"), "rings", 1, 100000));
    const auto chords = static_cast<int>(parse_int(p.value("--chords").value_or("180"), "chords", 3, 100000));
    lines = raster::fill_circle_concentric(cv, circle, rings, chords);
  } else {
    throw UsageError("method must be radial or concentric, got " + method);
  }
  save_image(cv, path);
  out << "lines: " << lines << "\n";
  return kExitOk;
}

int cmd_rings(const std::vector<std::string>& args, std::ostream& out) {
  const auto p = parse_args(args, 1, {"--out"}, {"--outline-only"});
  expect_positionals(p, 0, "rings --out PATH [--outline-only]");
  const auto path = required(p, "--out");

  struct Ring {
    double x;
    double y;
    NamedColor color;
  };
  // Alternating top/bottom rows, left to right.
  constexpr Ring kRings[] = {{30, 55, NamedColor::blue},
                             {40, 45, NamedColor::yellow},
                             {50, 55, NamedColor::black},
                             {60, 45, NamedColor::green},
                             {70, 55, NamedColor::red}};
  constexpr double kRingRadius = 9.0;

  raster::Canvas cv;
  cv.set_pen_radius(p.has("--outline-only") ? raster::kDefaultPenRadius : 0.01);
  for (const auto& r : kRings) {
    raster::draw_circle_outline(cv, geo::Circle(kRingRadius, {r.x, r.y}, r.color));
  }
  save_image(cv, path);
  out << "primitives: " << cv.primitive_count() << "\n";
  return kExitOk;
}

int cmd_bench(const std::vector<std::string>& args, std::ostream& out) {
  const auto p = parse_args(args, 1, {"--csv", "--plot", "--reps", "--seed"}, {});
  expect_positionals(p, 1, "bench fib|fill|sort [--csv PATH] [--plot PATH.ppm] [--reps K] [--seed S]");
  const auto reps = static_cast<int>(parse_int(p.value("--reps").value_or("5"), "reps", 1, 1000));
  const auto seed = parse_seed(p.value("--seed").value_or("1"));
  const auto& which = p.positional[0];

  bench::SampleTable table;
  if (which == "fib") {
    std::vector<double> ns;
    for (int n = 1; n <= 30; ++n) ns.push_back(n);
    for (auto s : {bench::FibStrategy::stack_recursive, bench::FibStrategy::tail_recursive,
                   bench::FibStrategy::iterative}) {
      table.append(bench::measure(
          bench::strategy_name(s), ns,
          [s](double n) {
            volatile auto v = bench::fibonacci(static_cast<int>(n), s).value;
            (void)v;
          },
          reps));
    }
  } else if (which == "fill") {
    const std::vector<double> radii{10, 20, 30, 40};
    const auto fill_runner = [](int rings) {
      return [rings](double radius) {
        raster::Canvas cv;
        cv.set_pen_radius(0.01);
        cv.set_retain_primitives(false);
        const geo::Circle c(radius, {50.0, 50.0}, NamedColor::blue);
        if (rings == 0) {
          (void)raster::fill_circle_radial(cv, c);
        } else {
          (void)raster::fill_circle_concentric(cv, c, rings, 180);
        }
      };
    };
    table.append(bench::measure("radial", radii, fill_runner(0), reps));
    for (int rings : {10, 40, 160}) {
      table.append(bench::measure("concentric_" + std::to_string(rings), radii,
                                  fill_runner(rings), reps));
    }
  } else if (which == "sort") {
    const std::vector<std::size_t> sizes{1000, 2000, 5000, 10000, 20000};
    const std::vector<bench::SortAlgorithm> algos{bench::SortAlgorithm::insertion,
                                                  bench::SortAlgorithm::merge};
    table = bench::bench_sorts(sizes, algos, seed, reps);
  } else {
    throw UsageError("bench target must be fib, fill or sort, got " + which);
  }

  const auto csv = bench::export_csv(table);
  if (auto path = p.value("--csv")) {
    raster::write_file(*path, csv);
  } else {
    out << csv;
  }
  if (auto path = p.value("--plot")) save_image(bench::plot_series(table), *path);
  return kExitOk;
}

} // namespace

std::string help_text() {
  return R"(figdraw - pictures, text tables, curves and complexity benchmarks

usage: figdraw <command> [arguments]

commands:
  pyramid <h> <char> [--trim]
      Character pyramid of height h (1..1000). --trim drops trailing spaces.
  calendar <year> <month> [--bold]
      Month banner and Monday-first day grid. --bold doubles banner glyph width.
  tabulate <w> <h> [--gap G] [--force] [--raw]
      Reads text from stdin and lays its words out in columns of w characters
      by h lines, G spaces apart (default 2). --force accepts words longer
      than w; --raw keeps trailing padding and the final blank line.
  dragon <depth> [--out PATH] [--color NAME]
      Dragon curve of 4^depth segments (depth 0..15) on a 512x512 canvas.
      PATH ending in .svg writes SVG, anything else PPM.
  movingcircle <x> <y> <R> <r> --frames N --seed S --out DIR --sampler polar|rectangular
      Writes N frames (frame_0000.ppm, ...) and manifest.json into DIR.
  fill --method radial|concentric --radius R [--rings K --chords C] --out PATH
      Filled circle at (50,50); concentric defaults to 160 rings of 180 chords.
  bench fib|fill|sort [--csv PATH] [--plot PATH.ppm] [--reps K] [--seed S]
      Median-of-K timings (default K=5) as CSV on stdout or in PATH.
      fib uses fib(0)=0, fib(1)=1 for n = 1..30. --seed seeds the sort inputs.
  rings --out PATH [--outline-only]
      Five interlocking rings; --outline-only uses the thin default pen.

options:
  --help, -h    Show this text.

Colors: BLACK WHITE RED GREEN BLUE YELLOW ORANGE MAGENTA CYAN GRAY
Exit status: 0 success, 1 computation error, 2 usage error.
)";
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  try {
    if (args.empty()) throw UsageError("missing command");
    const auto& cmd = args[0];
    if (cmd == "--help" || cmd == "-h" || cmd == "help") {
      out << help_text();
      return kExitOk;
    }
    for (const auto& a : args) {
      if (a == "--help" || a == "-h") {
        out << help_text();
        return kExitOk;
      }
    }
    if (cmd == "pyramid") return cmd_pyramid(args, out);
    if (cmd == "calendar") return cmd_calendar(args, out);
    if (cmd == "tabulate") return cmd_tabulate(args, in, out);
    if (cmd == "dragon") return cmd_dragon(args, out);
    if (cmd == "movingcircle") return cmd_movingcircle(args, out);
    if (cmd == "fill") return cmd_fill(args, out);
    if (cmd == "bench") return cmd_bench(args, out);
    if (cmd == "rings") return cmd_rings(args, out);
    throw UsageError("unknown command " + cmd);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun 'figdraw --help' for usage\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

} // namespace figdraw::cli
