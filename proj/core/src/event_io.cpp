#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "roispot/error.hpp"
#include "roispot/io.hpp"

namespace roispot {

namespace {

using nlohmann::json;

std::string line_tag(std::size_t line_no) { return "line " + std::to_string(line_no); }

template <typename Fn>
void for_each_json_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw FormatError(FormatErrc::malformed_line, line_tag(line_no) + ": " + e.what());
    }
    if (!obj.is_object()) throw FormatError(FormatErrc::malformed_line, line_tag(line_no) + ": not a JSON object");
    fn(obj, line_no);
  }
}

std::int64_t int_field(const json& obj, const char* key, std::size_t line_no) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) {
    throw FormatError(FormatErrc::malformed_line, line_tag(line_no) + ": missing integer \"" + key + "\"");
  }
  return it->get<std::int64_t>();
}

std::string string_field(const json& obj, const char* key, std::size_t line_no) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw FormatError(FormatErrc::malformed_line, line_tag(line_no) + ": missing string \"" + key + "\"");
  }
  return it->get<std::string>();
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

ClassList read_class_list(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw FormatError(FormatErrc::malformed_line, path.string() + ": " + e.what());
  }
  if (!doc.is_array() || doc.empty()) throw ValidationError("class list must be a non-empty JSON array of strings");
  ClassList classes;
  for (const auto& item : doc) {
    if (!item.is_string()) throw ValidationError("class list must hold strings only");
    classes.push_back(item.get<std::string>());
  }
  return classes;
}

void write_class_list(const ClassList& classes, const std::filesystem::path& path) {
  write_file(path, json(classes).dump() + "\n");
}

std::vector<EventSet> parse_events(std::istream& in, const ClassList& classes) {
  std::map<std::string, int> label_of;
  for (std::size_t i = 0; i < classes.size(); ++i) label_of.emplace(classes[i], static_cast<int>(i) + 1);

  std::vector<EventSet> sets;
  std::map<std::string, std::size_t> slot;
  for_each_json_line(in, [&](const json& obj, std::size_t line_no) {
    const std::string video = string_field(obj, "video", line_no);
    const std::string name = string_field(obj, "class", line_no);
    Event e;
    e.frame = int_field(obj, "frame", line_no);
    if (e.frame < 0) throw ValidationError(line_tag(line_no) + ": frame must be >= 0");
    auto label = label_of.find(name);
    if (label == label_of.end()) throw ValidationError(line_tag(line_no) + ": unknown class \"" + name + "\"");
    e.label = label->second;
    if (auto it = obj.find("score"); it != obj.end() && !it->is_null()) {
      if (!it->is_number()) throw FormatError(FormatErrc::malformed_line, line_tag(line_no) + ": score is not a number");
      e.score = it->get<double>();
      if (!(*e.score >= 0.0 && *e.score <= 1.0)) throw ValidationError(line_tag(line_no) + ": score outside [0,1]");
    }
    auto [it, inserted] = slot.emplace(video, sets.size());
    if (inserted) sets.push_back(EventSet{video, {}});
    sets[it->second].events.push_back(e);
  });
  return sets;
}

void format_events(std::ostream& out, std::span<const EventSet> sets, const ClassList& classes) {
  for (const EventSet& set : sets) {
    set.validate(static_cast<int>(classes.size()));
    for (const Event& e : set.events) {
      json obj = {{"video", set.video}, {"frame", e.frame}, {"class", classes[e.label - 1]}};
      if (e.score) obj["score"] = *e.score;
      out << obj.dump() << '\n';
    }
  }
}

std::vector<EventSet> read_events(const std::filesystem::path& path, const ClassList& classes) {
  auto in = open_in(path);
  return parse_events(in, classes);
}

void write_events(std::span<const EventSet> sets, const ClassList& classes, const std::filesystem::path& path) {
  std::ostringstream buf;
  format_events(buf, sets, classes);
  write_file(path, buf.str());
}

std::vector<Roi> parse_rois(std::istream& in) {
  std::vector<Roi> rois;
  for_each_json_line(in, [&](const json& obj, std::size_t line_no) {
    Roi r;
    r.frame = static_cast<int>(int_field(obj, "frame", line_no));
    r.x = static_cast<int>(int_field(obj, "x", line_no));
    r.y = static_cast<int>(int_field(obj, "y", line_no));
    r.w = static_cast<int>(int_field(obj, "w", line_no));
    r.h = static_cast<int>(int_field(obj, "h", line_no));
    if (r.frame < 0 || r.x < 0 || r.y < 0 || r.w < 1 || r.h < 1) {
      throw ValidationError(line_tag(line_no) + ": invalid rectangle");
    }
    rois.push_back(r);
  });
  return rois;
}

void format_rois(std::ostream& out, std::span<const Roi> rois) {
  for (const Roi& r : rois) {
    out << json{{"frame", r.frame}, {"x", r.x}, {"y", r.y}, {"w", r.w}, {"h", r.h}}.dump() << '\n';
  }
}

std::vector<Roi> read_rois(const std::filesystem::path& path) {
  auto in = open_in(path);
  return parse_rois(in);
}

void write_rois(std::span<const Roi> rois, const std::filesystem::path& path) {
  std::ostringstream buf;
  format_rois(buf, rois);
  write_file(path, buf.str());
}

}  // namespace roispot
