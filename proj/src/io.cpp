#include "mcfsol/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace mcfsol {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string curve_to_csv(const SampledCurve& curve) {
  std::ostringstream os;
  os << "s,phi,psi,dphi,dpsi,kappa,residual\n";
  for (const auto& p : curve.pts) {
    os << format_double(p.s) << ',' << format_double(p.y) << ',' << format_double(p.z)
       << ',' << format_double(p.dy) << ',' << format_double(p.dz) << ','
       << format_double(p.kappa) << ',' << format_double(p.residual) << '\n';
  }
  return os.str();
}

std::string report_to_csv(const ResidualReport& report) {
  std::ostringstream os;
  os << "s,u,residual\n";
  for (const auto& smp : report.samples)
    os << format_double(smp.s) << ',' << format_double(smp.u) << ','
       << format_double(smp.value) << '\n';
  return os.str();
}

Json report_to_json(const ResidualReport& report, bool include_samples) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["grid"] = {{"s_min", report.grid.s_min}, {"s_max", report.grid.s_max},
               {"n_s", report.grid.n_s},     {"u_min", report.grid.u_min},
               {"u_max", report.grid.u_max}, {"n_u", report.grid.n_u}};
  j["max_abs"] = report.max_abs;
  j["l2"] = report.l2;
  j["max_abs_normalized"] = report.max_abs_normalized;
  if (include_samples) {
    Json arr = Json::array();
    for (const auto& smp : report.samples)
      arr.push_back({{"s", smp.s}, {"u", smp.u}, {"residual", smp.value}});
    j["samples"] = std::move(arr);
  }
  return j;
}

Json verify_outcome_to_json(const VerifyOutcome& outcome) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = outcome.name;
  j["pass"] = outcome.pass;
  j["disputed"] = outcome.disputed;
  j["detail"] = outcome.detail;
  j["report"] = report_to_json(outcome.report);
  return j;
}

Json sol1_report_to_json(const Sol1Report& report) {
  auto variant = [](const Sol1Variant& v) {
    return Json{{"name", v.name},
                {"exponent_rate", v.exponent_rate},
                {"s_lo", v.s_lo},
                {"s_hi", v.s_hi},
                {"ode_sup_residual", v.ode_sup_residual},
                {"sup_deviation_from_reference", v.sup_deviation_from_reference},
                {"solves_ode", v.solves_ode}};
  };
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["variants"] = Json::array({variant(report.variant_full_exponent),
                               variant(report.variant_half_exponent)});
  j["reference_self_residual"] = report.reference_self_residual;
  j["verdict"] = report.verdict;
  return j;
}

Json self_similarity_to_json(const SelfSimilarityReport& report) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["label"] = report.label;
  j["tolerance"] = report.tolerance;
  j["pass"] = report.pass;
  j["stop"] = stop_reason_name(report.stop);
  Json arr = Json::array();
  for (const auto& s : report.series)
    arr.push_back({{"t", s.t},
                   {"sigma", s.sigma},
                   {"xi", s.xi},
                   {"zeta", s.zeta},
                   {"rms", s.rms}});
  j["series"] = std::move(arr);
  return j;
}

namespace {

struct Box {
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();
  double zmin = std::numeric_limits<double>::infinity();
  double zmax = -std::numeric_limits<double>::infinity();

  void include(const SampledCurve& c) {
    for (const auto& p : c.pts) {
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
      zmin = std::min(zmin, p.z);
      zmax = std::max(zmax, p.z);
    }
  }
  void pad() {
    const double dy = std::max(1e-9, ymax - ymin) * 0.08;
    const double dz = std::max(1e-9, zmax - zmin) * 0.08;
    ymin -= dy;
    ymax += dy;
    zmin -= dz;
    zmax += dz;
  }
};

std::string svg_document(const std::vector<SampledCurve>& curves, int width,
                         int height) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b"};
  Box box;
  for (const auto& c : curves) box.include(c);
  box.pad();

  // psi (z) horizontal, phi (y) vertical, y axis pointing up
  auto px = [&](double z) {
    return (z - box.zmin) / (box.zmax - box.zmin) * (width - 40) + 20;
  };
  auto py = [&](double y) {
    return height - 20 - (y - box.ymin) / (box.ymax - box.ymin) * (height - 40);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
     << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes (psi horizontal, phi vertical), drawn where zero is in range
  if (box.ymin < 0 && box.ymax > 0)
    os << "<line x1=\"20\" y1=\"" << format_double(py(0)) << "\" x2=\""
       << width - 20 << "\" y2=\"" << format_double(py(0))
       << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  if (box.zmin < 0 && box.zmax > 0)
    os << "<line x1=\"" << format_double(px(0)) << "\" y1=\"20\" x2=\""
       << format_double(px(0)) << "\" y2=\"" << height - 20
       << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

  size_t color = 0;
  for (const auto& c : curves) {
    os << "<polyline fill=\"none\" stroke=\"" << palette[color % 6]
       << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& p : c.pts)
      os << format_double(px(p.z)) << ',' << format_double(py(p.y)) << ' ';
    os << "\"/>\n";
    ++color;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string curve_to_svg(const SampledCurve& curve, int width, int height) {
  return svg_document({curve}, width, height);
}

std::string curves_to_svg(const std::vector<SampledCurve>& curves, int width,
                          int height) {
  return svg_document(curves, width, height);
}

void write_text_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

}  // namespace mcfsol
