#pragma once

#include <string>
#include <vector>

#include "lchkit/diagram.hpp"

namespace lchkit {

struct RenderOptions {
  std::vector<int> highlight;  // bounded face ids
  bool labels = true;
};

// Throws UnknownFace for highlight ids outside the bounded faces.
std::string render_svg(const LagrangianDiagram& d, const RenderOptions& options = {});

}  // namespace lchkit
