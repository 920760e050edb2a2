#include "lchkit/io.hpp"

#include "lchkit/errors.hpp"

namespace lchkit {

namespace {

const char* kind_name(LagKind k) {
  switch (k) {
    case LagKind::LeftCap: return "left_cap";
    case LagKind::RightCap: return "right_cap";
    case LagKind::Crossing: return "crossing";
  }
  return "";
}

LagKind kind_from(const std::string& s) {
  if (s == "left_cap") return LagKind::LeftCap;
  if (s == "right_cap") return LagKind::RightCap;
  if (s == "crossing") return LagKind::Crossing;
  throw Error(ErrorKind::SyntaxError, "unknown event kind '" + s + "'");
}

Json origin_json(const EventOrigin& o) {
  return {{"kind", o.kind}, {"source", o.source}, {"copy_over", o.copy_over}, {"copy_under", o.copy_under}};
}

Json corners_json(const LagrangianDiagram& d, const std::vector<CornerRecord>& corners) {
  Json out = Json::array();
  for (const auto& c : corners) {
    out.push_back({{"chord", d.chords()[c.crossing].label},
                   {"quadrant", quadrant_name(c.quadrant)},
                   {"sign", c.positive ? "+" : "-"},
                   {"boundary", c.walk}});
  }
  return out;
}

Json words_json(const std::vector<Word>& words) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(word_string(w));
  return out;
}

Json candidate_json(const LagrangianDiagram& d, const CensusCandidate& c) {
  Json j = {{"mask", c.mask.hex()},
            {"faces", c.faces},
            {"kind", c.kind},
            {"chi", c.chi},
            {"corners", corners_json(d, c.corners)},
            {"cap_touches", c.cap_touches},
            {"positives", c.positives},
            {"ind_u", c.ind_u},
            {"ind_U", c.ind_U}};
  if (c.slit_crossing >= 0) j["slit_chord"] = d.chords()[c.slit_crossing].label;
  return j;
}

// Either a constant or [constant, slope].
std::pair<double, double> affine(const Json& m, const char* key) {
  if (!m.contains(key)) return {0.0, 0.0};
  const auto& v = m.at(key);
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2) {
    throw Error(ErrorKind::SyntaxError, std::string("coefficient '") + key + "' must be a number or [constant, slope]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

void read_modes(const Json& modes, int n_max, std::vector<std::complex<double>>& base,
                std::vector<std::complex<double>>& slope) {
  base.assign(n_max + 1, 0.0);
  slope.assign(n_max + 1, 0.0);
  if (!modes.is_array()) throw Error(ErrorKind::SyntaxError, "modes must be an array");
  for (const auto& m : modes) {
    const int n = m.at("n").get<int>();
    if (n < 0 || n > n_max) throw Error(ErrorKind::InvalidArgument, "mode outside 0..n_max", n);
    const auto re = affine(m, "re");
    const auto im = affine(m, "im");
    base[n] += std::complex<double>(re.first, im.first);
    slope[n] += std::complex<double>(re.second, im.second);
  }
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json diagram_to_json(const LagrangianDiagram& d) {
  Json events = Json::array();
  for (const auto& e : d.x_order()) {
    events.push_back({{"kind", kind_name(e.kind)}, {"position", e.position}, {"origin", origin_json(e.origin)}});
  }
  Json reversed = Json::array();
  for (bool r : d.reversed()) reversed.push_back(r);
  Json crossings = Json::array();
  for (const auto& c : d.crossings()) {
    crossings.push_back({{"id", c.id},
                         {"event", c.event},
                         {"over_component", c.over_component},
                         {"under_component", c.under_component},
                         {"quadrant_faces",
                          {{"N", d.sector_face(c.node, 0)}, {"W", d.sector_face(c.node, 1)},
                           {"S", d.sector_face(c.node, 2)}, {"E", d.sector_face(c.node, 3)}}}});
  }
  Json caps = Json::array();
  for (const auto& c : d.caps()) {
    caps.push_back({{"id", c.id},
                    {"event", c.event},
                    {"side", c.side == CapSide::Left ? "left" : "right"},
                    {"arc", c.host_arc},
                    {"inner_face", c.inner_face},
                    {"outer_face", c.outer_face},
                    {"component", c.component}});
  }
  Json arcs = Json::array();
  for (const auto& a : d.arcs()) {
    arcs.push_back({{"id", a.id},
                    {"half_edges", a.half_edges},
                    {"winding", a.winding},
                    {"caps", a.caps},
                    {"face_left", a.face_left},
                    {"face_right", a.face_right},
                    {"closed", a.closed}});
  }
  Json faces = Json::array();
  for (const auto& f : d.faces()) {
    Json quads = Json::array();
    for (const auto& q : f.quadrants) quads.push_back({{"crossing", q.crossing}, {"quadrant", quadrant_name(q.quadrant)}});
    faces.push_back({{"id", f.id},
                     {"bounded", f.bounded},
                     {"boundary_count", f.walks.size()},
                     {"quadrants", quads},
                     {"caps", f.caps},
                     {"inner_caps", f.inner_caps}});
  }
  Json chords = Json::array();
  for (const auto& c : d.chords()) {
    chords.push_back({{"id", c.id},
                      {"label", c.label},
                      {"crossing", c.crossing},
                      {"over_component", c.over_component},
                      {"under_component", c.under_component}});
  }
  const auto lrs = check_left_right_simple(d);
  return {{"schema_version", kSchemaVersion},
          {"type", "lagrangian_diagram"},
          {"x_order", events},
          {"reversed", reversed},
          {"components", d.component_count()},
          {"crossings", crossings},
          {"caps", caps},
          {"arcs", arcs},
          {"faces", faces},
          {"bounded_faces", d.bounded_face_count()},
          {"unbounded_face", d.unbounded_face()},
          {"chords", chords},
          {"lrs", lrs.lrs},
          {"lrs_witnesses", lrs.witnesses}};
}

LagrangianDiagram diagram_from_json(const Json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw Error(ErrorKind::SyntaxError, "unsupported schema_version");
    }
    std::vector<LagEvent> events;
    for (const auto& e : j.at("x_order")) {
      LagEvent ev{kind_from(e.at("kind").get<std::string>()), e.at("position").get<int>(), {}};
      if (e.contains("origin")) {
        const auto& o = e.at("origin");
        ev.origin = {o.value("kind", std::string()), o.value("source", -1), o.value("copy_over", -1),
                     o.value("copy_under", -1)};
      }
      events.push_back(ev);
    }
    std::vector<bool> reversed;
    if (j.contains("reversed")) {
      for (const auto& r : j.at("reversed")) reversed.push_back(r.get<bool>());
    }
    return LagrangianDiagram(std::move(events), std::move(reversed));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("diagram JSON: ") + e.what());
  }
}

Json chords_to_json(const LagrangianDiagram& d, const ChordTable& table) {
  Json chords = Json::array();
  for (const auto& c : table.chords) {
    Json j = {{"id", c.chord},
              {"label", c.label},
              {"grading", c.grading},
              {"modulus", c.modulus},
              {"start_component", c.start_component},
              {"end_component", c.end_component},
              {"mixed", c.mixed},
              {"capping_rotation", c.capping_units},
              {"capping_path", c.capping_path},
              {"event", d.crossings()[c.chord].event}};
    chords.push_back(j);
  }
  return {{"schema_version", kSchemaVersion},
          {"type", "chords"},
          {"count", table.chords.size()},
          {"chords", chords},
          {"calibration", {{"alpha", table.alpha}, {"beta", table.beta}}}};
}

Json certificate_to_json(const LagrangianDiagram& d, const DiskRegion& disk) {
  Json subs = Json::array();
  for (const auto& s : disk.sub_arcs) {
    subs.push_back({{"from", s.from_corner}, {"to", s.to_corner}, {"rotation", s.theta}, {"cap_touches", s.cap_touches}});
  }
  return {{"mask", disk.mask.hex()},
          {"faces", disk.faces},
          {"corners", corners_json(d, disk.corners)},
          {"cap_touches", disk.cap_touches},
          {"sub_arcs", subs},
          {"positives", disk.positives},
          {"index",
           {{"maslov", disk.index.from_maslov},
            {"branch", disk.index.from_branch},
            {"crit", disk.index.from_crit},
            {"ind_u", disk.ind_u},
            {"ind_U", disk.ind_U}}},
          {"energy", lift_boundary_labels(d, disk.faces).energy}};
}

Json dga_to_json(const LagrangianDiagram& d, const std::vector<DiskRegion>& disks, const ChordTable& table,
                 bool with_t_marker) {
  const auto diff = dga_differential(d, disks, with_t_marker);
  Json generators = Json::array();
  for (const auto& c : table.chords) {
    generators.push_back({{"id", c.label},
                          {"grading", c.grading},
                          {"modulus", c.modulus},
                          {"components", {c.start_component, c.end_component}}});
  }
  Json differential = Json::object();
  for (const auto& c : d.chords()) {
    auto it = diff.raw.find(c.label);
    differential[c.label] = it == diff.raw.end() ? Json::array() : words_json(it->second);
  }
  Json reduced = Json::object();
  for (const auto& [k, v] : diff.raw) reduced[k] = words_json(reduce_mod2(v));
  Json two = Json::object();
  for (const auto& [k, v] : diff.two_positive) two[k] = words_json(v);
  const auto sq = d_squared(diff);
  Json failures = Json::object();
  for (const auto& [k, v] : sq) failures[k] = words_json(v);
  Json certs = Json::array();
  for (const auto& k : disks) certs.push_back(certificate_to_json(d, k));
  return {{"schema_version", kSchemaVersion},
          {"type", "dga"},
          {"coefficients", "Z/2"},
          {"generators", generators},
          {"differential", differential},
          {"differential_mod2", reduced},
          {"two_positive", two},
          {"d_squared", sq.empty() ? Json("ok") : Json(failures)},
          {"disk_certificates", certs},
          {"t_marker", with_t_marker}};
}

Json disks_to_json(const LagrangianDiagram& d, const std::vector<DiskRegion>& disks, bool certificates) {
  Json list = Json::array();
  for (const auto& k : disks) {
    if (certificates) {
      list.push_back(certificate_to_json(d, k));
    } else {
      list.push_back({{"mask", k.mask.hex()}, {"corners", corners_json(d, k.corners)}, {"positives", k.positives}});
    }
  }
  return {{"schema_version", kSchemaVersion},
          {"type", "rigid_disks"},
          {"bounded_faces", d.bounded_face_count()},
          {"count", disks.size()},
          {"disks", list}};
}

Json census_to_json(const LagrangianDiagram& d, const Census& census) {
  auto list = [&](const std::vector<CensusCandidate>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back(candidate_json(d, c));
    return out;
  };
  return {{"schema_version", kSchemaVersion},
          {"type", "index2_census"},
          {"disk_candidates", list(census.disk_candidates)},
          {"annulus_candidates", list(census.annulus_candidates)},
          {"violations", list(census.violations)},
          {"subsets_examined", census.subsets_examined}};
}

AffineFamily family_from_json(const Json& j) {
  try {
    AffineFamily f;
    f.C = j.at("modulus").get<double>();
    f.n_max = j.value("n_max", 64);
    if (f.n_max < 0) throw Error(ErrorKind::InvalidArgument, "negative n_max");
    const auto& br = j.at("bracket");
    if (!br.is_array() || br.size() != 2) throw Error(ErrorKind::SyntaxError, "bracket must be [T0, T1]");
    f.bracket = {br[0].get<double>(), br[1].get<double>()};
    f.tol = j.value("tol", 1e-9);
    read_modes(j.value("inner", Json::array()), f.n_max, f.inner_base, f.inner_slope);
    read_modes(j.value("outer", Json::array()), f.n_max, f.outer_base, f.outer_slope);
    return f;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("family JSON: ") + e.what());
  }
}

Json zero_to_json(const AffineFamily& family, const ZeroResult& zero) {
  return {{"schema_version", kSchemaVersion},
          {"type", "obstruction_zero"},
          {"modulus", family.C},
          {"n_max", family.n_max},
          {"bracket", {family.bracket.first, family.bracket.second}},
          {"tol", family.tol},
          {"T", zero.T},
          {"obstruction", zero.value},
          {"slope", zero.slope},
          {"iterations", zero.iterations}};
}

}  // namespace lchkit
