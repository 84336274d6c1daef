// JSON reading and writing for curves, cameras, data, Bezier control polygons
// and ED reports. Rationals travel as strings ("3", "-7/2").

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "edcurve/eddeg.hpp"
#include "edcurve/grassmann.hpp"
#include "edcurve/scene.hpp"

namespace edcurve {

using Json = nlohmann::json;

/// Malformed or inconsistent input; the message names the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

inline int int_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) throw InputError(where + "." + key + ": expected an integer");
  return v.get<int>();
}

inline Rat rat_value(const Json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a rational string such as \"-3/4\"");
}

inline std::vector<Rat> rat_array(const Json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array");
  std::vector<Rat> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(rat_value(v[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

inline std::vector<std::vector<Rat>> rat_matrix(const Json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array of arrays");
  std::vector<std::vector<Rat>> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(rat_array(v[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

inline Json rat_json(const Rat& r) { return to_string(r); }

inline Json rat_array_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_json(x));
  return a;
}

}  // namespace detail

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Curves: {"N", "degree", "coords"}, coefficient k of a coordinate is the
// coefficient of s^(e-k) t^k.

inline RationalCurve curve_from_json(const Json& j, const std::string& where = "curve") {
  const int N = detail::int_field(j, "N", where);
  const int e = detail::int_field(j, "degree", where);
  const auto rows = detail::rat_matrix(detail::field(j, "coords", where), where + ".coords");
  if (static_cast<int>(rows.size()) != N + 1) {
    throw InputError(where + ".coords: expected N+1 = " + std::to_string(N + 1) + " coordinates, got " +
                     std::to_string(rows.size()));
  }
  std::vector<HomPoly2> coords;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (static_cast<int>(rows[k].size()) != e + 1) {
      throw InputError(where + ".coords[" + std::to_string(k) + "]: expected degree+1 = " + std::to_string(e + 1) +
                       " coefficients");
    }
    coords.emplace_back(rows[k]);
  }
  try {
    return RationalCurve(std::move(coords));
  } catch (const std::invalid_argument& ex) {
    throw InputError(where + ": " + ex.what());
  }
}

inline Json curve_to_json(const RationalCurve& f) {
  Json coords = Json::array();
  for (const auto& c : f.coords()) coords.push_back(detail::rat_array_json(c.coeffs()));
  return {{"N", f.N()}, {"degree", f.degree()}, {"coords", coords}};
}

// ---------------------------------------------------------------------------
// Cameras: {"h", "N", "rows"}; arrangement {"cameras": [...]}.

inline Camera camera_from_json(const Json& j, const std::string& where = "camera") {
  const int h = detail::int_field(j, "h", where);
  const int N = detail::int_field(j, "N", where);
  const auto rows = detail::rat_matrix(detail::field(j, "rows", where), where + ".rows");
  if (static_cast<int>(rows.size()) != h + 1) throw InputError(where + ".rows: expected h+1 rows");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (static_cast<int>(rows[k].size()) != N + 1) {
      throw InputError(where + ".rows[" + std::to_string(k) + "]: expected N+1 entries");
    }
  }
  try {
    return Camera(rows);
  } catch (const std::invalid_argument& ex) {
    throw InputError(where + ": " + ex.what());
  }
}

inline Json camera_to_json(const Camera& c) {
  Json rows = Json::array();
  for (int i = 0; i <= c.h(); ++i) rows.push_back(detail::rat_array_json(c.row(i)));
  return {{"h", c.h()}, {"N", c.N()}, {"rows", rows}};
}

inline Arrangement arrangement_from_json(const Json& j) {
  const Json& cams = detail::field(j, "cameras", "arrangement");
  if (!cams.is_array() || cams.empty()) throw InputError("arrangement.cameras: expected a nonempty array");
  std::vector<Camera> out;
  for (std::size_t k = 0; k < cams.size(); ++k) {
    out.push_back(camera_from_json(cams[k], "arrangement.cameras[" + std::to_string(k) + "]"));
  }
  try {
    return Arrangement(std::move(out));
  } catch (const std::invalid_argument& ex) {
    throw InputError(std::string("arrangement: ") + ex.what());
  }
}

inline Json arrangement_to_json(const Arrangement& a) {
  Json cams = Json::array();
  for (const auto& c : a.cameras()) cams.push_back(camera_to_json(c));
  return {{"cameras", cams}};
}

// ---------------------------------------------------------------------------
// Data points: {"u": [[u_11, ..., u_1h], ...], "beta0"?}

inline DataPoint data_from_json(const Json& j) {
  DataPoint d;
  d.u = detail::rat_matrix(detail::field(j, "u", "data"), "data.u");
  if (j.contains("beta0")) d.beta0 = detail::rat_value(j["beta0"], "data.beta0");
  return d;
}

inline Json data_to_json(const DataPoint& d) {
  Json u = Json::array();
  for (const auto& block : d.u) u.push_back(detail::rat_array_json(block));
  return {{"u", u}, {"beta0", detail::rat_json(d.beta0)}};
}

// ---------------------------------------------------------------------------
// Bezier control polygons: {"control": [[x, y, z], ...]}

inline BezierCurve bezier_from_json(const Json& j, const std::string& where = "bezier") {
  const auto rows = detail::rat_matrix(detail::field(j, "control", where), where + ".control");
  std::vector<Point3Affine> pts;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].size() != 3) throw InputError(where + ".control[" + std::to_string(k) + "]: expected 3 coordinates");
    pts.push_back({rows[k][0], rows[k][1], rows[k][2]});
  }
  try {
    return BezierCurve(std::move(pts));
  } catch (const std::invalid_argument& ex) {
    throw InputError(where + ": " + ex.what());
  }
}

inline Json bezier_to_json(const BezierCurve& b) {
  Json c = Json::array();
  for (const auto& p : b.control) c.push_back(detail::rat_array_json({p[0], p[1], p[2]}));
  return {{"control", c}};
}

// ---------------------------------------------------------------------------
// Reports

inline Json certificate_to_json(const GenericityCertificate& c) {
  Json disc = Json::array();
  for (const auto& d : c.discriminants) disc.push_back(d ? Json(to_string(*d)) : Json(nullptr));
  Json pairs = Json::array();
  for (const auto& p : c.pair_resultants) {
    pairs.push_back({{"i", p.i + 1}, {"j", p.j + 1}, {"resultant", to_string(p.value)}});
  }
  Json reasons = Json::array();
  for (const auto& r : c.reasons) reasons.push_back(r);
  return {{"passes", c.passes()},
          {"discriminants", disc},
          {"pair_resultants", pairs},
          {"infinity_gcd_trivial", c.infinity_gcd_trivial},
          {"base_point_free", c.base_point_free},
          {"immersion", c.immersion},
          {"reasons", reasons}};
}

inline Json report_to_json(const EDReport& r) {
  Json j = {{"e", r.e},
            {"n", r.n},
            {"h", r.h},
            {"N", r.N},
            {"ed_degree", r.ed_degree},
            {"critical_poly_degree", r.critical_poly_degree},
            {"removed_pole_factors", r.removed_pole_factors},
            {"removed_immersion_factors", r.removed_immersion_factors},
            {"formula_value", r.formula_value},
            {"formula_applies", r.formula_applies},
            {"matches_formula", r.matches_formula},
            {"certificate", certificate_to_json(r.certificate)},
            {"seeds", r.seeds}};
  j["cross_check"] = r.cross_check ? Json(*r.cross_check) : Json(nullptr);
  j["cross_check_agrees"] = r.cross_check_agrees ? Json(*r.cross_check_agrees) : Json(nullptr);
  return j;
}

inline Json triangulation_to_json(const TriangulationResult& r) {
  Json crit = Json::array();
  for (const auto& c : r.critical) {
    crit.push_back({{"lo", to_string(c.interval.lo)},
                    {"hi", to_string(c.interval.hi)},
                    {"t", to_string(c.t)},
                    {"distance", to_string(c.distance)},
                    {"distance_error_bound", c.distance_error_bound ? Json(to_string(*c.distance_error_bound))
                                                                    : Json(nullptr)}});
  }
  Json j = {{"critical", crit},
            {"reduced_degree", r.reduced_degree},
            {"width_bound", to_string(r.width_bound)},
            {"has_finite_minimizer", r.has_finite_minimizer()}};
  if (r.argmin) {
    j["argmin"] = *r.argmin;
    j["world_point"] = detail::rat_array_json(r.world_point);
    Json blocks = Json::array();
    for (const auto& b : r.image_blocks) blocks.push_back(detail::rat_array_json(b));
    j["image_blocks"] = blocks;
  } else {
    j["argmin"] = nullptr;
    j["world_point"] = nullptr;
    j["image_blocks"] = nullptr;
  }
  return j;
}

}  // namespace edcurve
