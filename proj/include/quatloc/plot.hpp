#pragma once

#include <complex>
#include <string>
#include <vector>

#include "quatloc/regions.hpp"

namespace quatloc {

/// 600x600 SVG with one shape element per descriptor (circle for discs, one
/// path per Cassini oval) and one marker path per point. Axes autoscaled.
std::string render_svg(const std::vector<DiscDescriptor>& discs,
                       const std::vector<std::complex<double>>& markers);

/// CSV rows: kind,re,im,re2,im2,value (re2/im2 empty for discs).
std::string render_csv(const std::vector<DiscDescriptor>& discs);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace quatloc
