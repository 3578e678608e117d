#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "declutter/geometry.h"

namespace declutter {

// 2D drawing of a graph plus where it came from.
struct Layout {
  std::vector<Point> coords;
  std::string engine = "none";
  std::string variant = "none";
  std::uint64_t seed = 0;
  int iterations = 0;

  int size() const { return static_cast<int>(coords.size()); }
  bool AllFinite() const;
};

// i.i.d. uniform coordinates in [0,1]^2.
Layout RandomLayout(int n, std::uint64_t seed);

// Text format: `# engine variant seed iterations`, then `n`, then n lines
// `x y` written with 17 significant digits.
void WriteLayout(std::ostream& out, const Layout& layout);
Layout ReadLayout(std::istream& in);
void SaveLayoutFile(const std::filesystem::path& path, const Layout& layout);
Layout LoadLayoutFile(const std::filesystem::path& path);

}  // namespace declutter
