#include "mcfsol/surface_spec.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "mcfsol/expr.hpp"

namespace mcfsol {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

SpaceCurve space_curve_from(const std::string& text, const std::string& key) {
  const auto parts = split_commas(text);
  if (parts.size() != 3)
    throw SurfaceSpecError(key + " needs three comma-separated expressions");
  std::array<ScalarCurve, 3> comps;
  for (int i = 0; i < 3; ++i) comps[i] = Expr::parse(parts[i]).as_curve();
  auto eval = [comps](double s) {
    return Vec3(comps[0].value(s), comps[1].value(s), comps[2].value(s));
  };
  auto eval1 = [comps](double s) {
    return Vec3(comps[0].d1(s), comps[1].d1(s), comps[2].d1(s));
  };
  auto eval2 = [comps](double s) {
    return Vec3(comps[0].d2(s), comps[1].d2(s), comps[2].d2(s));
  };
  return SpaceCurve(eval, eval1, eval2);
}

}  // namespace

SurfaceSpec parse_surface_spec_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string rest;
    std::getline(ls, rest);
    const size_t b = rest.find_first_not_of(" \t");
    kv[key] = b == std::string::npos ? "" : rest.substr(b);
  }

  SurfaceSpec spec;
  if (const auto it = kv.find("name"); it != kv.end()) spec.name = it->second;

  const auto fam = kv.find("family");
  if (fam == kv.end()) throw SurfaceSpecError("missing 'family'");
  if (fam->second == "revolution")
    spec.family = Family::Revolution;
  else if (fam->second == "ruled")
    spec.family = Family::Ruled;
  else if (fam->second == "cylindrical")
    spec.family = Family::Cylindrical;
  else if (fam->second == "conical")
    spec.family = Family::Conical;
  else
    throw SurfaceSpecError("unknown family '" + fam->second + "'");

  if (const auto it = kv.find("gens"); it != kv.end()) {
    std::istringstream gs(it->second);
    std::string axis;
    if (!(gs >> spec.gens.a >> spec.gens.b >> spec.gens.c >> axis))
      throw SurfaceSpecError("gens needs 'a b c Z|X'");
    if (axis == "Z" || axis == "z")
      spec.gens.axis = Axis::Z;
    else if (axis == "X" || axis == "x")
      spec.gens.axis = Axis::X;
    else
      throw SurfaceSpecError("gens axis must be Z or X");
  } else {
    spec.gens.axis = spec.family == Family::Revolution ? Axis::Z : Axis::X;
  }
  if (const auto it = kv.find("allow_unnormalized_w"); it != kv.end())
    spec.allow_unnormalized_w = it->second == "1" || it->second == "true";

  switch (spec.family) {
    case Family::Revolution: {
      if (!kv.count("phi") || !kv.count("psi"))
        throw SurfaceSpecError("revolution surface needs 'phi' and 'psi'");
      spec.revolution = RevolutionSurface(Expr::parse(kv["phi"]).as_curve(),
                                          Expr::parse(kv["psi"]).as_curve());
      break;
    }
    case Family::Ruled: {
      if (!kv.count("beta") || !kv.count("w"))
        throw SurfaceSpecError("ruled surface needs 'beta' and 'w'");
      spec.ruled = RuledSurface::noncylindrical(space_curve_from(kv["beta"], "beta"),
                                                space_curve_from(kv["w"], "w"));
      break;
    }
    case Family::Conical: {
      if (!kv.count("beta") || !kv.count("w"))
        throw SurfaceSpecError("conical surface needs 'beta' (apex) and 'w'");
      const SpaceCurve apex = space_curve_from(kv["beta"], "beta");
      spec.ruled = RuledSurface::conical(apex.value(0.0), space_curve_from(kv["w"], "w"));
      break;
    }
    case Family::Cylindrical: {
      if (!kv.count("beta") || !kv.count("w"))
        throw SurfaceSpecError("cylindrical surface needs 'beta' and 'w'");
      const auto parts = split_commas(kv["beta"]);
      if (parts.size() != 3)
        throw SurfaceSpecError("beta needs three comma-separated expressions");
      // transverse convention: beta = (0, h, q)
      spec.profile = PlaneCurve{Expr::parse(parts[1]).as_curve(),
                                Expr::parse(parts[2]).as_curve()};
      const SpaceCurve wget = space_curve_from(kv["w"], "w");
      spec.w_const = wget.value(0.0);
      spec.ruled =
          RuledSurface::cylindrical(space_curve_from(kv["beta"], "beta"), spec.w_const);
      break;
    }
  }
  return spec;
}

SurfaceSpec load_surface_spec(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SurfaceSpecError("cannot open surface spec '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_surface_spec_text(ss.str());
}

}  // namespace mcfsol
