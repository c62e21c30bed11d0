#include "palab/instance_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "palab/errors.hpp"

namespace palab {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  std::ostringstream out;
  out << "{\"d\": " << inst.dim() << ", \"p\": " << fmt17(inst.gradient())
      << ", \"points\": [";
  const int d = inst.dim();
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (i) out << ", ";
    out << '[';
    const auto pt = inst.point(i);
    for (int a = 0; a < d; ++a) {
      if (a) out << ", ";
      out << fmt17(pt[a]);
    }
    out << ']';
  }
  out << "]}\n";
  return out.str();
}

Instance instance_from_json(std::string_view text, std::string_view context) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(context) + ": " + e.what());
  }
  const std::string where(context);
  if (!doc.is_object() || !doc.contains("d") || !doc.contains("p") ||
      !doc.contains("points"))
    throw ParseError(where + ": expected an object with fields d, p, points");
  if (!doc["d"].is_number_integer())
    throw ParseError(where + ": field d must be an integer");
  if (!doc["p"].is_number())
    throw ParseError(where + ": field p must be a number");
  if (!doc["points"].is_array() || doc["points"].empty())
    throw ParseError(where + ": field points must be a non-empty array");

  const int d = doc["d"].get<int>();
  const double p = doc["p"].get<double>();
  if (d < 1) throw InputError(where + ": d must be >= 1");
  if (!(p > 0.0)) throw InputError(where + ": p must be > 0");

  std::vector<double> flat;
  flat.reserve(doc["points"].size() * d);
  std::size_t index = 0;
  for (const auto& row : doc["points"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw InputError(where + ": point " + std::to_string(index) + " has " +
                       std::to_string(row.size()) + " coordinates, expected d=" +
                       std::to_string(d));
    for (const auto& c : row) {
      if (!c.is_number())
        throw ParseError(where + ": point " + std::to_string(index) +
                         " has a non-numeric coordinate");
      const double value = c.get<double>();
      if (value < 0.0 || value > 1.0)
        throw InputError(where + ": point " + std::to_string(index) +
                         " has coordinate " + std::to_string(value) +
                         " outside [0,1]");
      flat.push_back(value);
    }
    ++index;
  }
  return Instance(Params(d, p), std::move(flat));
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  out << instance_to_json(inst);
  if (!out.flush()) throw InputError("failed writing " + path.string());
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str(), path.filename().string());
}

}  // namespace palab
