#pragma once

// Small hand-built complexes used as search targets.

#include <string>
#include <string_view>
#include <vector>

#include "hatsplit/complex.hpp"

namespace hatsplit {

// disk, dunce_min, rp2_6, torus_7, jester_seam. Throws UnknownPreset.
SimplicialComplex preset(std::string_view name);
const std::vector<std::string>& preset_names();
bool is_preset(std::string_view name);

// Named triangle sets of a preset. For jester_seam: the images of the two
// disks D1 and D2 that meet along the seam arc. Empty for other presets.
std::vector<std::vector<int>> preset_regions(std::string_view name);

}  // namespace hatsplit
