#include "vconf/config_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vconf/error.hpp"

namespace vconf {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(where, "expected an integer");
  return value.get<int>();
}

const json& as_array(const json& value, const std::string& where) {
  if (!value.is_array()) fail(where, "expected an array");
  return value;
}

Rational as_coordinate(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Rational(BigInt(value.get<std::uint64_t>()));
    return Rational(BigInt(value.get<std::int64_t>()));
  }
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  if (value.is_number_float()) fail(where, "floating-point numbers are not exact; write the value as a string");
  fail(where, "expected an integer or a rational string");
}

std::vector<Rational> as_coordinates(const json& value, const std::string& where) {
  std::vector<Rational> out;
  const auto& arr = as_array(value, where);
  for (std::size_t c = 0; c < arr.size(); ++c)
    out.push_back(as_coordinate(arr[c], where + " coordinate " + std::to_string(c + 1)));
  return out;
}

json coordinate_json(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(value) == 1) {
    const BigInt n = numerator(value);
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
      return json(static_cast<std::int64_t>(n));
  }
  return json(to_string(value));
}

json coordinates_json(const std::vector<Rational>& coords) {
  json arr = json::array();
  for (const auto& c : coords) arr.push_back(coordinate_json(c));
  return arr;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail("document", e.what());
  }
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

VerticalConfiguration parse_configuration(const std::string& json_text) {
  const json doc = parse_document(json_text);
  const int p = as_int(field(doc, "p", "document"), "field p");
  const int q = as_int(field(doc, "q", "document"), "field q");
  const auto& clusters_json = as_array(field(doc, "clusters", "document"), "field clusters");
  std::vector<std::vector<RationalPoint>> clusters;
  for (std::size_t i = 0; i < clusters_json.size(); ++i) {
    const std::string where = "cluster " + std::to_string(i + 1);
    const auto& pts = as_array(field(clusters_json[i], "points", where), where + " points");
    std::vector<RationalPoint> cluster;
    for (std::size_t j = 0; j < pts.size(); ++j)
      cluster.push_back(RationalPoint{as_coordinates(pts[j], where + " point " + std::to_string(j + 1))});
    clusters.push_back(std::move(cluster));
  }
  return VerticalConfiguration::make(p, q, std::move(clusters));
}

VerticalConfiguration load_configuration(const std::filesystem::path& path) {
  return parse_configuration(read_text_file(path));
}

std::string configuration_to_json(const VerticalConfiguration& config) {
  json doc;
  doc["p"] = config.p();
  doc["q"] = config.q();
  doc["clusters"] = json::array();
  for (const auto& cluster : config.clusters()) {
    json pts = json::array();
    for (const auto& z : cluster) pts.push_back(coordinates_json(z.coords));
    doc["clusters"].push_back(json{{"points", pts}});
  }
  return doc.dump(2) + "\n";
}

LabeledConfiguration parse_labeled_configuration(const std::string& json_text) {
  const json doc = parse_document(json_text);
  const int p = as_int(field(doc, "p", "document"), "field p");
  const int k = as_int(field(doc, "k", "document"), "field k");
  const auto& points_json = as_array(field(doc, "points", "document"), "field points");
  std::vector<LabeledPoint> points;
  for (std::size_t l = 0; l < points_json.size(); ++l) {
    const std::string where = "labelled point " + std::to_string(l + 1);
    const auto& entry = points_json[l];
    RationalPoint y{as_coordinates(field(entry, "y", where), where + " y")};
    BlockList blocks;
    const auto& blocks_json = as_array(field(entry, "partition", where), where + " partition");
    for (const auto& b : blocks_json) {
      std::vector<int> block;
      for (const auto& h : as_array(b, where + " partition block")) block.push_back(as_int(h, where + " partition"));
      blocks.push_back(std::move(block));
    }
    std::vector<std::vector<Rational>> xi;
    if (auto it = entry.find("xi"); it != entry.end()) {
      const auto& xi_json = as_array(*it, where + " xi");
      for (std::size_t b = 0; b < xi_json.size(); ++b)
        xi.push_back(as_coordinates(xi_json[b], where + " xi " + std::to_string(b + 2)));
    }
    points.push_back(LabeledPoint{std::move(y), IrreduciblePartition::make(k, std::move(blocks)), std::move(xi)});
  }
  return LabeledConfiguration::make(p, k, std::move(points));
}

LabeledConfiguration load_labeled_configuration(const std::filesystem::path& path) {
  return parse_labeled_configuration(read_text_file(path));
}

std::string labeled_configuration_to_json(const LabeledConfiguration& theta) {
  json doc;
  doc["p"] = theta.p();
  doc["k"] = theta.k();
  doc["points"] = json::array();
  for (const auto& pt : theta.points()) {
    json xi = json::array();
    for (const auto& x : pt.xi) xi.push_back(coordinates_json(x));
    doc["points"].push_back(json{{"y", coordinates_json(pt.y.coords)}, {"partition", pt.label.blocks()}, {"xi", xi}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace vconf
