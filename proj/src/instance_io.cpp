#include "dikeopt/instance_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dikeopt/error.hpp"

namespace dikeopt {

namespace {

using nlohmann::json;

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(key);
  while (std::getline(in, part, ',')) parts.push_back(part);
  return parts;
}

int parse_index(const std::string& s, const char* what, const std::string& key) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::IoError, std::string("bad ") + what + " in table key '" + key + "'");
  }
}

std::vector<Rational> parse_height_list(const json& arr, const char* name) {
  if (!arr.is_array()) fail(ErrorCode::IoError, std::string(name) + " must be an array");
  std::vector<Rational> out;
  for (const auto& v : arr) {
    if (!v.is_string()) fail(ErrorCode::IoError, std::string(name) + " entries must be strings");
    out.push_back(parse_rational(v.get<std::string>()));
  }
  return out;
}

const json& require_field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) fail(ErrorCode::IoError, std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

Instance read_instance(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::IoError, std::string("instance JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::IoError, "instance document must be a JSON object");

  const json& horizonField = require_field(doc, "horizon");
  if (!horizonField.is_number_integer()) fail(ErrorCode::IoError, "horizon must be an integer");
  const int horizon = horizonField.get<int>();

  std::vector<std::string> segments;
  const json& segField = require_field(doc, "segments");
  if (!segField.is_array()) fail(ErrorCode::IoError, "segments must be an array");
  for (const auto& s : segField) {
    if (!s.is_string()) fail(ErrorCode::IoError, "segment ids must be strings");
    segments.push_back(s.get<std::string>());
  }

  Instance inst(horizon, std::move(segments),
                parse_height_list(require_field(doc, "dike_heights"), "dike_heights"),
                parse_height_list(require_field(doc, "barrier_heights"), "barrier_heights"));

  auto for_table = [&doc](const char* name, auto&& fn) {
    auto it = doc.find(name);
    if (it == doc.end()) return;  // entirely absent table: everything missing
    if (!it->is_object()) fail(ErrorCode::IoError, std::string(name) + " must be an object");
    for (const auto& [key, value] : it->items()) {
      if (!value.is_string())
        fail(ErrorCode::IoError, std::string(name) + " values must be strings, key '" + key + "'");
      try {
        fn(key, parse_rational(value.template get<std::string>()));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::IndexOutOfRange)
          fail(ErrorCode::IoError,
               std::string(name) + " key '" + key + "' is outside the instance ranges");
        throw;
      }
    }
  };

  auto segment_of = [&inst](const std::string& id, const std::string& key) {
    int d = inst.segmentIndex(id);
    if (d < 0) fail(ErrorCode::IoError, "unknown segment '" + id + "' in table key '" + key + "'");
    return d;
  };

  for_table("dike_cost", [&](const std::string& key, Rational v) {
    auto p = split_key(key);
    if (p.size() != 4) fail(ErrorCode::IoError, "dike_cost key '" + key + "' must be t,d,h1,h2");
    inst.setDikeCost(parse_index(p[0], "period", key), segment_of(p[1], key),
                     parse_index(p[2], "height", key), parse_index(p[3], "height", key),
                     std::move(v));
  });
  for_table("dike_expdam", [&](const std::string& key, Rational v) {
    auto p = split_key(key);
    if (p.size() != 4) fail(ErrorCode::IoError, "dike_expdam key '" + key + "' must be t,d,h2,hb");
    inst.setDikeExpDam(parse_index(p[0], "period", key), segment_of(p[1], key),
                       parse_index(p[2], "height", key), parse_index(p[3], "height", key),
                       std::move(v));
  });
  for_table("barrier_cost", [&](const std::string& key, Rational v) {
    auto p = split_key(key);
    if (p.size() != 3) fail(ErrorCode::IoError, "barrier_cost key '" + key + "' must be t,hb1,hb2");
    inst.setBarrierCost(parse_index(p[0], "period", key), parse_index(p[1], "height", key),
                        parse_index(p[2], "height", key), std::move(v));
  });
  for_table("barrier_expdam", [&](const std::string& key, Rational v) {
    auto p = split_key(key);
    if (p.size() != 2) fail(ErrorCode::IoError, "barrier_expdam key '" + key + "' must be t,hb");
    inst.setBarrierExpDam(parse_index(p[0], "period", key), parse_index(p[1], "height", key),
                          std::move(v));
  });

  return inst;
}

Instance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open instance file " + path.string());
  return read_instance(in);
}

std::string instance_to_json(const Instance& inst) {
  json doc;
  doc["horizon"] = inst.horizon();
  doc["segments"] = inst.segments();
  json dh = json::array(), bh = json::array();
  for (const auto& h : inst.dikeHeights()) dh.push_back(to_decimal_string(h));
  for (const auto& h : inst.barrierHeights()) bh.push_back(to_decimal_string(h));
  doc["dike_heights"] = dh;
  doc["barrier_heights"] = bh;

  json dCost = json::object(), dDam = json::object(), bCost = json::object(),
       bDam = json::object();
  for (int t = 0; t <= inst.horizon(); ++t) {
    for (int d = 0; d < inst.numSegments(); ++d) {
      const std::string& id = inst.segments()[d];
      for (int h1 = 0; h1 < inst.numDikeLevels(); ++h1)
        for (int h2 = h1; h2 < inst.numDikeLevels(); ++h2)
          if (inst.hasDikeCost(t, d, h1, h2))
            dCost[std::to_string(t) + "," + id + "," + std::to_string(h1) + "," +
                  std::to_string(h2)] = to_decimal_string(inst.dikeCost(t, d, h1, h2));
      for (int h2 = 0; h2 < inst.numDikeLevels(); ++h2)
        for (int hb = 0; hb < inst.numBarrierLevels(); ++hb)
          if (inst.hasDikeExpDam(t, d, h2, hb))
            dDam[std::to_string(t) + "," + id + "," + std::to_string(h2) + "," +
                 std::to_string(hb)] = to_decimal_string(inst.dikeExpDam(t, d, h2, hb));
    }
    for (int hb1 = 0; hb1 < inst.numBarrierLevels(); ++hb1)
      for (int hb2 = hb1; hb2 < inst.numBarrierLevels(); ++hb2)
        if (inst.hasBarrierCost(t, hb1, hb2))
          bCost[std::to_string(t) + "," + std::to_string(hb1) + "," + std::to_string(hb2)] =
              to_decimal_string(inst.barrierCost(t, hb1, hb2));
    for (int hb = 0; hb < inst.numBarrierLevels(); ++hb)
      if (inst.hasBarrierExpDam(t, hb))
        bDam[std::to_string(t) + "," + std::to_string(hb)] =
            to_decimal_string(inst.barrierExpDam(t, hb));
  }
  doc["dike_cost"] = dCost;
  doc["dike_expdam"] = dDam;
  doc["barrier_cost"] = bCost;
  doc["barrier_expdam"] = bDam;
  return doc.dump(2) + "\n";
}

void write_instance_file(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << instance_to_json(inst);
  if (!out) fail(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace dikeopt
