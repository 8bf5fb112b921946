#include "densitylab/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace densitylab {

namespace {

json intervals_to_json(const IntervalSet& s) {
  json arr = json::array();
  for (const auto& iv : s.intervals())
    arr.push_back(json::array({to_string(iv.left), to_string(iv.right)}));
  return arr;
}

IntervalSet intervals_from_json(const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("intervals: expected an array");
  std::vector<Interval> raw;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2)
      throw std::invalid_argument("intervals: expected [left, right] pairs");
    Rational left = parse_rational(item[0].get<std::string>());
    Rational right = parse_rational(item[1].get<std::string>());
    if (left > right) throw std::invalid_argument("intervals: left > right");
    raw.push_back({left, right});
  }
  IntervalSet set = IntervalSet::normalize(raw);
  // reject unsorted/overlapping input rather than silently fixing files
  if (set.size() != raw.size())
    throw std::invalid_argument("intervals: overlapping or empty entries");
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (raw[i].left != set.intervals()[i].left)
      throw std::invalid_argument("intervals: entries must be sorted");
  return set;
}

}  // namespace

json set_to_json(const IntervalSet& s, bool halfline) {
  json j;
  j["halfline"] = halfline;
  j["intervals"] = intervals_to_json(s);
  return j;
}

ParsedSet set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("halfline") || !j.contains("intervals"))
    throw std::invalid_argument("set file: expected {halfline, intervals}");
  ParsedSet out;
  out.halfline = j["halfline"].get<bool>();
  out.intervals = intervals_from_json(j["intervals"]);
  if (out.halfline) {
    if (out.intervals.empty() || out.intervals.intervals().front().left <= 0)
      throw std::invalid_argument("set file: a configuration needs positive endpoints");
  }
  return out;
}

json goodset_to_json(const PeriodicSet& p) {
  json j;
  j["generator"] = intervals_to_json(p.generator());
  return j;
}

PeriodicSet goodset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generator"))
    throw std::invalid_argument("good-set file: expected {generator}");
  return PeriodicSet(intervals_from_json(j["generator"]));
}

json report_to_json(const VerificationReport& r) {
  json j;
  j["subject"] = r.subject;
  j["passed"] = r.passed;
  json arr = json::array();
  for (const auto& f : r.findings) {
    json item;
    item["label"] = f.label;
    if (f.endpoint) item["endpoint"] = to_string(*f.endpoint);
    if (f.omega) item["omega"] = to_string(*f.omega);
    if (f.side) item["side"] = side_name(*f.side);
    if (f.violation) item["side"] = "violation";
    if (f.skipped) item["skipped"] = true;
    if (!f.detail.empty()) item["detail"] = f.detail;
    arr.push_back(std::move(item));
  }
  j["findings"] = std::move(arr);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace densitylab
