#include "declutter/layout.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "declutter/error.h"
#include "declutter/random.h"

namespace declutter {

bool Layout::AllFinite() const {
  for (const Point& p : coords) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
  }
  return true;
}

Layout RandomLayout(int n, std::uint64_t seed) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidSize, fmt::format("layout of {} nodes", n));
  }
  Rng rng(seed);
  Layout layout;
  layout.engine = "random";
  layout.seed = seed;
  layout.coords.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double x = Uniform01(rng);
    const double y = Uniform01(rng);
    layout.coords.push_back({x, y});
  }
  return layout;
}

void WriteLayout(std::ostream& out, const Layout& layout) {
  fmt::print(out, "# {} {} {} {}\n", layout.engine, layout.variant,
             layout.seed, layout.iterations);
  fmt::print(out, "{}\n", layout.size());
  for (const Point& p : layout.coords) {
    fmt::print(out, "{:.17g} {:.17g}\n", p.x, p.y);
  }
}

Layout ReadLayout(std::istream& in) {
  Layout layout;
  std::string line;
  int line_no = 0;
  long long n = -1;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kParseError,
                fmt::format("layout line {}: {}", line_no, what));
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      // Only the first comment line is provenance.
      if (n < 0 && layout.engine == "none") {
        std::istringstream fields(line.substr(first + 1));
        std::string engine, variant;
        std::uint64_t seed = 0;
        int iterations = 0;
        if (fields >> engine >> variant >> seed >> iterations) {
          layout.engine = engine;
          layout.variant = variant;
          layout.seed = seed;
          layout.iterations = iterations;
        }
      }
      continue;
    }
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 0) fail("expected node count");
      layout.coords.reserve(n);
      continue;
    }
    Point p;
    if (!(fields >> p.x >> p.y)) fail("expected 'x y'");
    layout.coords.push_back(p);
  }
  if (n < 0) fail("missing node count");
  if (static_cast<long long>(layout.coords.size()) != n) {
    fail(fmt::format("declared {} nodes, found {}", n, layout.coords.size()));
  }
  return layout;
}

void SaveLayoutFile(const std::filesystem::path& path, const Layout& layout) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  WriteLayout(out, layout);
}

Layout LoadLayoutFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return ReadLayout(in);
}

}  // namespace declutter
