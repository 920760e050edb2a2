#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "lchkit/diagram.hpp"
#include "lchkit/disks.hpp"
#include "lchkit/obstruction.hpp"

namespace lchkit {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Serialized form: 2-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);

Json diagram_to_json(const LagrangianDiagram& d);
LagrangianDiagram diagram_from_json(const Json& j);

Json chords_to_json(const LagrangianDiagram& d, const ChordTable& table);
Json certificate_to_json(const LagrangianDiagram& d, const DiskRegion& disk);
Json dga_to_json(const LagrangianDiagram& d, const std::vector<DiskRegion>& disks, const ChordTable& table,
                 bool with_t_marker);
Json disks_to_json(const LagrangianDiagram& d, const std::vector<DiskRegion>& disks, bool certificates);
Json census_to_json(const LagrangianDiagram& d, const Census& census);

AffineFamily family_from_json(const Json& j);
Json zero_to_json(const AffineFamily& family, const ZeroResult& zero);

}  // namespace lchkit
