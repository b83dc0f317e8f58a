// Copyright 2026 The jointassoc Authors
// SPDX-License-Identifier: Apache-2.0

#include "jointassoc/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "jointassoc/error.hpp"

namespace jointassoc::io {

using Json = nlohmann::ordered_json;

namespace {
void dump(const Json& v, std::string& out, int indent);
}  // namespace

std::string format_json(const nlohmann::ordered_json& value) {
  std::string out;
  dump(value, out, 0);
  out += "\n";
  return out;
}

namespace {

// ---- writing ---------------------------------------------------------------

std::string format_number(const Json& v) {
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  double d = v.get<double>();
  if (!std::isfinite(d)) throw std::invalid_argument("cannot serialize a non-finite number");
  if (std::abs(d) < 5e-7) d = 0.0;  // no "-0.000000"
  return fmt::format("{:.6f}", d);
}

bool is_flat(const Json& v) {
  return std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_structured() || (e.is_array() && is_flat(e)); });
}

void dump(const Json& v, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(it.key()).dump() + ": ";
        dump(it.value(), out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      if (is_flat(v)) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out += ", ";
          dump(v[i], out, indent + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        dump(v[i], out, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
      out += format_number(v);
      return;
    default:
      out += v.dump();
      return;
  }
}


std::string to_text(const Json& v) { return format_json(v); }

Json bbox_json(const BBox& b) { return Json::array({b.x, b.y, b.width, b.height}); }

// ---- reading ---------------------------------------------------------------

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t at = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(at), '\n'));
    const std::size_t nl = text.rfind('\n', at == 0 ? 0 : at - 1);
    const std::size_t column = nl == std::string_view::npos ? at + 1 : at - nl;
    throw ParseError(fmt::format("JSON syntax error at line {}, column {}", line, column));
  }
}

const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(fmt::format("{}: expected an object", path));
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(fmt::format("{}: missing field '{}'", path, key));
  return *it;
}

double number(const Json& v, const std::string& path) {
  if (!v.is_number()) throw ParseError(fmt::format("{}: expected a number", path));
  return v.get<double>();
}

long integer(const Json& v, const std::string& path) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    if (v.is_number_float() && std::floor(v.get<double>()) == v.get<double>()) return static_cast<long>(v.get<double>());
    throw ParseError(fmt::format("{}: expected an integer", path));
  }
  return v.get<long>();
}

BBox parse_bbox(const Json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 4) throw ParseError(fmt::format("{}: expected [x, y, w, h]", path));
  return {number(v[0], path + "[0]"), number(v[1], path + "[1]"), number(v[2], path + "[2]"), number(v[3], path + "[3]")};
}

std::vector<const Json*> documents(const Json& root) {
  std::vector<const Json*> docs;
  if (root.is_array()) {
    for (const auto& d : root) docs.push_back(&d);
  } else if (root.is_null()) {
    // empty input
  } else {
    docs.push_back(&root);
  }
  return docs;
}

bool blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

std::string write_annotations(std::span<const SceneAnnotation> scenes) {
  Json images = Json::array();
  Json annotations = Json::array();
  for (const auto& scene : scenes) {
    images.push_back({{"id", scene.image_id}, {"width", scene.width}, {"height", scene.height}});
    for (const auto& p : scene.persons) {
      Json kps = Json::array();
      for (const auto& j : p.keypoints) {
        kps.push_back(j.location.x);
        kps.push_back(j.location.y);
        kps.push_back(static_cast<int>(j.visibility));
      }
      annotations.push_back(
          {{"image_id", scene.image_id}, {"person_id", p.person_id}, {"bbox", bbox_json(p.bbox)}, {"keypoints", kps}});
    }
  }
  return to_text({{"images", images}, {"annotations", annotations}});
}

std::vector<SceneAnnotation> parse_annotations(std::string_view text) {
  const Json root = parse_text(text);
  std::vector<SceneAnnotation> scenes;
  const Json& images = field(root, "images", "$");
  if (!images.is_array()) throw ParseError("$.images: expected an array");
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::string path = fmt::format("$.images[{}]", i);
    SceneAnnotation s;
    s.image_id = static_cast<int>(integer(field(images[i], "id", path), path + ".id"));
    s.width = static_cast<int>(integer(field(images[i], "width", path), path + ".width"));
    s.height = static_cast<int>(integer(field(images[i], "height", path), path + ".height"));
    if (std::any_of(scenes.begin(), scenes.end(), [&](const auto& o) { return o.image_id == s.image_id; })) {
      throw IntegrityError(fmt::format("{}: duplicate image id {}", path, s.image_id));
    }
    scenes.push_back(std::move(s));
  }
  const Json& anns = field(root, "annotations", "$");
  if (!anns.is_array()) throw ParseError("$.annotations: expected an array");
  for (std::size_t a = 0; a < anns.size(); ++a) {
    const std::string path = fmt::format("$.annotations[{}]", a);
    const Json& ann = anns[a];
    const int image_id = static_cast<int>(integer(field(ann, "image_id", path), path + ".image_id"));
    auto scene = std::find_if(scenes.begin(), scenes.end(), [&](const auto& s) { return s.image_id == image_id; });
    if (scene == scenes.end()) throw IntegrityError(fmt::format("{}: unknown image_id {}", path, image_id));
    GroundTruthPerson person;
    person.person_id = static_cast<int>(integer(field(ann, "person_id", path), path + ".person_id"));
    person.bbox = parse_bbox(field(ann, "bbox", path), path + ".bbox");
    const Json& kps = field(ann, "keypoints", path);
    if (!kps.is_array() || kps.size() != 3 * kJointCount) {
      throw ParseError(fmt::format("{}.keypoints: expected {} numbers", path, 3 * kJointCount));
    }
    for (std::size_t k = 0; k < kJointCount; ++k) {
      const std::string kp = fmt::format("{}.keypoints[{}]", path, 3 * k);
      const long v = integer(kps[3 * k + 2], kp);
      if (v < 0 || v > 2) throw ParseError(fmt::format("{}: visibility must be 0, 1 or 2", kp));
      person.keypoints[k] = {{number(kps[3 * k], kp), number(kps[3 * k + 1], kp)}, static_cast<Visibility>(v)};
    }
    scene->persons.push_back(person);
  }
  for (const auto& s : scenes) s.validate();
  return scenes;
}

std::string write_candidates(const CandidateSet& set) {
  Json proposals = Json::array();
  for (const auto& p : set.proposals) {
    proposals.push_back({{"proposal_id", p.proposal_id}, {"bbox", bbox_json(p.bbox)}, {"score", p.detection_score}});
  }
  Json candidates = Json::array();
  for (const auto& c : set.candidates) {
    candidates.push_back({{"proposal_id", c.source_proposal},
                          {"joint_type", c.joint_type},
                          {"x", c.location.x},
                          {"y", c.location.y},
                          {"response", c.response},
                          {"u", c.response_size}});
  }
  Json doc = {{"image_id", set.image_id}, {"proposals", proposals}, {"candidates", candidates}};
  if (set.provenance) {
    Json prov = Json::array();
    for (const auto& o : *set.provenance) {
      prov.push_back({{"person_id", o.person_id ? Json(*o.person_id) : Json(nullptr)}, {"joint_type", o.joint_type}});
    }
    doc["provenance"] = prov;
  }
  return to_text(doc);
}

std::vector<CandidateSet> parse_candidates(std::string_view text) {
  if (blank(text)) return {};
  const Json root = parse_text(text);
  std::vector<CandidateSet> out;
  const auto docs = documents(root);
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const Json& doc = *docs[d];
    const std::string base = root.is_array() ? fmt::format("$[{}]", d) : "$";
    CandidateSet set;
    set.image_id = static_cast<int>(integer(field(doc, "image_id", base), base + ".image_id"));
    const Json& props = field(doc, "proposals", base);
    if (!props.is_array()) throw ParseError(base + ".proposals: expected an array");
    for (std::size_t i = 0; i < props.size(); ++i) {
      const std::string path = fmt::format("{}.proposals[{}]", base, i);
      PersonProposal p;
      p.proposal_id = static_cast<int>(integer(field(props[i], "proposal_id", path), path + ".proposal_id"));
      p.bbox = parse_bbox(field(props[i], "bbox", path), path + ".bbox");
      p.detection_score = number(field(props[i], "score", path), path + ".score");
      set.proposals.push_back(p);
    }
    const Json& cands = field(doc, "candidates", base);
    if (!cands.is_array()) throw ParseError(base + ".candidates: expected an array");
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const std::string path = fmt::format("{}.candidates[{}]", base, i);
      const Json& c = cands[i];
      CandidateJoint cand;
      cand.source_proposal = static_cast<int>(integer(field(c, "proposal_id", path), path + ".proposal_id"));
      const long k = integer(field(c, "joint_type", path), path + ".joint_type");
      if (k < 0 || k >= static_cast<long>(kJointCount)) {
        throw ParseError(fmt::format("{}.joint_type: {} outside [0, {})", path, k, kJointCount));
      }
      cand.joint_type = static_cast<std::size_t>(k);
      cand.location = {number(field(c, "x", path), path + ".x"), number(field(c, "y", path), path + ".y")};
      cand.response = number(field(c, "response", path), path + ".response");
      cand.response_size = number(field(c, "u", path), path + ".u");
      if (!(cand.response > 0.0) || !(cand.response_size > 0.0)) {
        throw ParseError(fmt::format("{}: response and u must be positive", path));
      }
      set.candidates.push_back(cand);
    }
    if (auto it = doc.find("provenance"); it != doc.end() && !it->is_null()) {
      if (!it->is_array() || it->size() != set.candidates.size()) {
        throw ParseError(base + ".provenance: expected one entry per candidate");
      }
      std::vector<CandidateOrigin> prov;
      for (std::size_t i = 0; i < it->size(); ++i) {
        const std::string path = fmt::format("{}.provenance[{}]", base, i);
        const Json& person = field((*it)[i], "person_id", path);
        CandidateOrigin o;
        if (!person.is_null()) o.person_id = static_cast<int>(integer(person, path + ".person_id"));
        o.joint_type = static_cast<std::size_t>(integer(field((*it)[i], "joint_type", path), path + ".joint_type"));
        prov.push_back(o);
      }
      set.provenance = std::move(prov);
    }
    out.push_back(std::move(set));
  }
  return out;
}

std::string write_results(std::span<const ImagePoses> results) {
  auto one = [](const ImagePoses& r) {
    Json poses = Json::array();
    for (const auto& pose : r.poses) {
      Json kps = Json::array();
      for (const auto& kp : pose.keypoints) {
        kps.push_back(kp ? Json::array({kp->location.x, kp->location.y, kp->score}) : Json(nullptr));
      }
      poses.push_back({{"proposal_id", pose.proposal_id}, {"score", pose.score}, {"keypoints", kps}});
    }
    return Json{{"image_id", r.image_id}, {"poses", poses}};
  };
  if (results.size() == 1) return to_text(one(results.front()));
  Json all = Json::array();
  for (const auto& r : results) all.push_back(one(r));
  return to_text(all);
}

std::vector<ImagePoses> parse_results(std::string_view text) {
  if (blank(text)) return {};
  const Json root = parse_text(text);
  std::vector<ImagePoses> out;
  const auto docs = documents(root);
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const Json& doc = *docs[d];
    const std::string base = root.is_array() ? fmt::format("$[{}]", d) : "$";
    ImagePoses r;
    r.image_id = static_cast<int>(integer(field(doc, "image_id", base), base + ".image_id"));
    const Json& poses = field(doc, "poses", base);
    if (!poses.is_array()) throw ParseError(base + ".poses: expected an array");
    for (std::size_t i = 0; i < poses.size(); ++i) {
      const std::string path = fmt::format("{}.poses[{}]", base, i);
      Pose pose;
      pose.proposal_id = static_cast<int>(integer(field(poses[i], "proposal_id", path), path + ".proposal_id"));
      pose.score = number(field(poses[i], "score", path), path + ".score");
      const Json& kps = field(poses[i], "keypoints", path);
      if (!kps.is_array() || kps.size() != kJointCount) {
        throw ParseError(fmt::format("{}.keypoints: expected {} entries", path, kJointCount));
      }
      for (std::size_t k = 0; k < kJointCount; ++k) {
        const Json& kp = kps[k];
        if (kp.is_null()) continue;
        const std::string kpath = fmt::format("{}.keypoints[{}]", path, k);
        if (!kp.is_array() || kp.size() != 3) throw ParseError(kpath + ": expected [x, y, s] or null");
        pose.keypoints[k] = Keypoint{{number(kp[0], kpath), number(kp[1], kpath)}, number(kp[2], kpath)};
      }
      r.poses.push_back(std::move(pose));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string write_report(const EvalReport& report) {
  auto opt = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
  Json doc = {{"map_50_95", report.map_50_95}, {"map_50", report.map_50},       {"map_75", report.map_75},
              {"mar_50_95", report.mar_50_95}, {"mar_50", report.mar_50},       {"mar_75", report.mar_75},
              {"ap_easy", opt(report.ap_easy)}, {"ap_medium", opt(report.ap_medium)}, {"ap_hard", opt(report.ap_hard)},
              {"images", report.images},       {"ground_truths", report.ground_truths},
              {"detections", report.detections}};
  return to_text(doc);
}

std::string write_graph(const PersonJointGraph& graph) {
  Json persons = Json::array();
  for (const auto& p : graph.persons) {
    persons.push_back({{"proposal_id", p.proposal_id}, {"bbox", bbox_json(p.bbox)}, {"score", p.detection_score}});
  }
  Json nodes = Json::array();
  for (const auto& n : graph.nodes) {
    Json members = Json::array();
    for (const auto& m : n.members) {
      members.push_back({{"proposal_id", m.source_proposal}, {"x", m.location.x}, {"y", m.location.y},
                         {"response", m.response}});
    }
    nodes.push_back({{"node_id", n.node_id}, {"joint_type", n.joint_type}, {"members", members}});
  }
  Json edges = Json::array();
  for (const auto& e : graph.edges) {
    edges.push_back({{"person", e.person}, {"node", e.node}, {"joint_type", e.joint_type}, {"weight", e.weight}});
  }
  return to_text({{"persons", persons}, {"nodes", nodes}, {"edges", edges}});
}

CandidateSet to_candidate_set(const SyntheticScene& scene) {
  return {scene.annotation.image_id, scene.proposals, scene.candidates, scene.provenance};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", tmp.string()));
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error(fmt::format("write to '{}' failed", tmp.string()));
  }
  std::filesystem::rename(tmp, path);
}

std::vector<std::filesystem::path> expand_inputs(const std::filesystem::path& path, std::string_view suffix) {
  if (!std::filesystem::exists(path)) throw std::runtime_error(fmt::format("'{}' does not exist", path.string()));
  if (!std::filesystem::is_directory(path)) return {path};
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(path)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.size() >= suffix.size() &&
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace jointassoc::io
