#include "gap/jsonio.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

namespace gap {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("descriptor: " + what);
}

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& where) {
  if (!j.is_object()) fail(where + " must be a JSON object");
  for (const auto& item : j.items())
    if (!allowed.count(item.key()))
      fail(where + ": unknown key '" + item.key() + "'");
}

double need_number(const json& j, const std::string& key,
                   const std::string& where) {
  if (!j.contains(key)) fail(where + ": missing '" + key + "'");
  if (!j[key].is_number()) fail(where + ": '" + key + "' must be a number");
  return j[key].get<double>();
}

int need_int(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) fail(where + ": missing '" + key + "'");
  if (!j[key].is_number_integer())
    fail(where + ": '" + key + "' must be an integer");
  return j[key].get<int>();
}

std::string need_string(const json& j, const std::string& key,
                        const std::string& where) {
  if (!j.contains(key)) fail(where + ": missing '" + key + "'");
  if (!j[key].is_string()) fail(where + ": '" + key + "' must be a string");
  return j[key].get<std::string>();
}

CoordFn coord_from_json(const json& j, const std::string& where) {
  const std::string form = need_string(j, "form", where);
  if (form == "power") {
    check_keys(j, {"form", "p", "scale"}, where);
    const double p = need_number(j, "p", where);
    const double scale = j.contains("scale") ? need_number(j, "scale", where)
                                             : 1.0;
    return power_coord(p, scale);
  }
  if (form == "asym_power") {
    check_keys(j, {"form", "p_plus", "p_minus", "scale"}, where);
    const double pp = need_number(j, "p_plus", where);
    const double pm = need_number(j, "p_minus", where);
    const double scale = j.contains("scale") ? need_number(j, "scale", where)
                                             : 1.0;
    return asym_power_coord(pp, pm, scale);
  }
  if (form == "gaussian") {
    check_keys(j, {"form", "sigma"}, where);
    const double sigma = need_number(j, "sigma", where);
    if (!(sigma > 0.0)) fail(where + ": need sigma > 0");
    CoordFn f;
    f.form = "gaussian";
    const double s2 = sigma * sigma;
    f.value = [s2](double t) { return t * t / (2.0 * s2); };
    f.deriv = [s2](double t) { return t / s2; };
    f.deriv2 = [s2](double) { return 1.0 / s2; };
    f.deriv_inverse = [s2](double g) { return g * s2; };
    return f;
  }
  fail(where + ": unknown form '" + form + "'");
}

}  // namespace

Body body_from_json(const json& j) {
  const std::string kind = need_string(j, "kind", "body");
  if (kind == "ball" || kind == "ball_complement") {
    check_keys(j, {"kind", "radius", "dim"}, "body");
    const double r = need_number(j, "radius", "body");
    const int d = need_int(j, "dim", "body");
    if (!(r > 0.0) || d < 2) fail("body: need radius > 0 and dim >= 2");
    if (kind == "ball") return Ball{r, d};
    return BallComplement{r, d};
  }
  if (kind == "box") {
    check_keys(j, {"kind", "half_width", "dim"}, "body");
    const double r = need_number(j, "half_width", "body");
    const int d = need_int(j, "dim", "body");
    if (!(r > 0.0) || d < 1) fail("body: need half_width > 0 and dim >= 1");
    return Box{r, d};
  }
  if (kind == "lp_ball") {
    check_keys(j, {"kind", "p", "radius", "dim"}, "body");
    const double p = need_number(j, "p", "body");
    const double r = need_number(j, "radius", "body");
    const int d = need_int(j, "dim", "body");
    if (!(p >= 1.0) || !(r > 0.0) || d < 2)
      fail("body: need p >= 1, radius > 0, dim >= 2");
    return LpBall{p, r, d};
  }
  if (kind == "orlicz") {
    check_keys(j, {"kind", "coords", "box_bound"}, "body");
    if (!j.contains("coords") || !j["coords"].is_array() ||
        j["coords"].empty())
      fail("body: orlicz needs a non-empty 'coords' array");
    Orlicz o;
    o.box_bound = need_number(j, "box_bound", "body");
    if (!(o.box_bound > 0.0)) fail("body: need box_bound > 0");
    for (const auto& c : j["coords"])
      o.coords.push_back(coord_from_json(c, "body.coords"));
    return o;
  }
  fail("body: unknown kind '" + kind + "'");
}

Potential potential_from_json(const json& j) {
  const std::string kind = need_string(j, "kind", "potential");
  if (kind == "uniform") {
    check_keys(j, {"kind"}, "potential");
    return Uniform{};
  }
  if (kind == "radial_power") {
    check_keys(j, {"kind", "alpha"}, "potential");
    const double a = need_number(j, "alpha", "potential");
    if (!(a > 1.0)) fail("potential: need alpha > 1");
    return RadialPower{a};
  }
  if (kind == "product") {
    check_keys(j, {"kind", "marginals"}, "potential");
    if (!j.contains("marginals") || !j["marginals"].is_array() ||
        j["marginals"].empty())
      fail("potential: product needs a non-empty 'marginals' array");
    ProductPotential p;
    for (const auto& m : j["marginals"])
      p.marginals.push_back(coord_from_json(m, "potential.marginals"));
    return p;
  }
  fail("potential: unknown kind '" + kind + "'");
}

WeightSpec weight_from_json(const json& j) {
  const std::string kind = need_string(j, "kind", "weight");
  if (kind == "identity") {
    check_keys(j, {"kind"}, "weight");
    return IdentityWeight{};
  }
  if (kind == "radial_poly") {
    check_keys(j, {"kind", "c"}, "weight");
    return radial_poly_weight(need_number(j, "c", "weight"));
  }
  if (kind == "radial_exp_power") {
    check_keys(j, {"kind", "eps", "alpha"}, "weight");
    return radial_exp_power_weight(need_number(j, "eps", "weight"),
                                   need_number(j, "alpha", "weight"));
  }
  if (kind == "radial_inverse_square") {
    check_keys(j, {"kind", "c"}, "weight");
    return radial_inverse_square_weight(need_number(j, "c", "weight"));
  }
  if (kind == "per_coordinate_cos") {
    check_keys(j, {"kind", "beta"}, "weight");
    return per_coordinate_cos_weight(need_number(j, "beta", "weight"));
  }
  fail("weight: unknown kind '" + kind + "'");
}

json report_to_json(const BoundReport& rep) {
  json j;
  j["method"] = rep.method;
  j["kind"] = to_string(rep.kind);
  j["value"] = rep.value;
  j["assumptions_ok"] = rep.assumptions_ok;
  json diag = json::object();
  for (const auto& [k, v] : rep.diagnostics) diag[k] = v;
  j["diagnostics"] = diag;
  return j;
}

namespace {

void dump_value(const json& j, std::string& out, int indent) {
  const std::string pad(indent, ' ');
  const std::string pad_in(indent + 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& item : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + "\"" + item.key() + "\": ";
        dump_value(item.value(), out, indent + 2);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        dump_value(v, out, indent + 2);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::string:
      out += json(j.get<std::string>()).dump();
      return;
    case json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case json::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      return;
    case json::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      return;
    case json::value_t::number_float: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      return;
    }
    default:
      out += "null";
      return;
  }
}

}  // namespace

std::string dump_json(const json& j) {
  std::string out;
  dump_value(j, out, 0);
  out += "\n";
  return out;
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace gap
