#pragma once

// Command-line front end. Exit codes: 0 success, 1 domain or verification
// failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quatspin/quatspin.hpp"
#include "quatspin/verify.hpp"

namespace quatspin::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// A row of named fields, emitted as CSV (header + row) or a JSON object.
class Record {
public:
  void add(const std::string &key, double value) { fields_.push_back({key, number(value), true}); }
  void add(const std::string &key, const std::string &value) { fields_.push_back({key, value, false}); }

  std::string csv() const {
    std::string head, row;
    for (std::size_t k = 0; k < fields_.size(); ++k) {
      head += (k ? "," : "") + fields_[k].key;
      row += (k ? "," : "") + fields_[k].value;
    }
    return head + "\n" + row + "\n";
  }

  std::string json() const {
    nlohmann::ordered_json j;
    for (const Field &f : fields_) {
      if (f.numeric)
        j[f.key] = std::stod(f.value);
      else
        j[f.key] = f.value;
    }
    return j.dump(2) + "\n";
  }

  std::string render(const std::string &format) const { return format == "json" ? json() : csv(); }

  static std::string number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x == 0.0 ? 0.0 : x);
    return buf;
  }

private:
  struct Field {
    std::string key;
    std::string value;
    bool numeric;
  };
  std::vector<Field> fields_;
};

/// Parses "a,b,c" into doubles; throws CLI::ValidationError on junk.
inline std::vector<double> parse_list(const std::string &text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception &) {
      throw CLI::ValidationError("not a number: '" + item + "'");
    }
    if (used != item.size() || !std::isfinite(v))
      throw CLI::ValidationError("not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

inline PlanePoint parse_point(const std::string &text, std::size_t min_arity = 3) {
  const std::vector<double> v = parse_list(text);
  if (v.size() < min_arity || v.size() > 3)
    throw CLI::ValidationError("expected " + std::to_string(min_arity) + " to 3 coordinates, got " +
                               std::to_string(v.size()));
  PlanePoint p;
  for (std::size_t k = 0; k < v.size(); ++k)
    p.x[k] = v[k];
  return p;
}

/// Signature with ASCII generator labels: e0..e3 for (4,0), e1..e3 for (3,0),
/// g0.. for (1,3) and (1,2), e1..en otherwise.
inline Signature labelled_signature(int p, int q) {
  if (p == 4 && q == 0)
    return euclidean4();
  if (p == 1 && (q == 3 || q == 2))
    return Signature(p, q, 'g', 0);
  return Signature(p, q, 'e', 1);
}

// verify ---------------------------------------------------------------------

inline int cmd_verify(std::uint64_t seed, int cases, double tol, std::ostream &out) {
  const RunReport report = run_verify(seed, cases, tol);
  out << format_report(report);
  return report.passed() ? exit_ok : exit_failure;
}

// table ----------------------------------------------------------------------

inline std::string signed_blade(const Signature &sig, BladeIndex a, BladeIndex b) {
  const int sign = blade_product_sign(sig, a, b);
  return (sign > 0 ? "+" : "-") + sig.blade_name(BladeIndex{a.mask ^ b.mask});
}

inline int cmd_table(const Signature &sig, const std::string &format, std::ostream &out) {
  const std::uint32_t n = static_cast<std::uint32_t>(sig.blade_count());
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < n; ++i)
    names.push_back(sig.blade_name(BladeIndex{i}));
  if (format == "json") {
    nlohmann::ordered_json j;
    j["signature"] = sig.to_string();
    j["blades"] = names;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::uint32_t a = 0; a < n; ++a) {
      std::vector<std::string> row;
      for (std::uint32_t b = 0; b < n; ++b)
        row.push_back(signed_blade(sig, BladeIndex{a}, BladeIndex{b}));
      rows.push_back(row);
    }
    j["table"] = rows;
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "blade";
  for (const auto &s : names)
    out << "," << s;
  out << "\n";
  for (std::uint32_t a = 0; a < n; ++a) {
    out << names[a];
    for (std::uint32_t b = 0; b < n; ++b)
      out << "," << signed_blade(sig, BladeIndex{a}, BladeIndex{b});
    out << "\n";
  }
  return exit_ok;
}

// project --------------------------------------------------------------------

inline int cmd_project(const std::string &geometry, const PlanePoint &x, const std::string &format,
                       std::ostream &out, std::ostream &err) {
  const bool sphere = geometry == "sphere";
  const Multivector a = sphere ? lift_sphere(x).a_hat : lift_hyper(x).a_hat;
  const Rotor R = sphere ? sphere_rotor(x) : hyper_boost(x);
  const PlanePoint back = sphere ? project_sphere(SpherePoint{a}) : project_hyper(HyperPoint{a});
  const double s = x.norm2();
  const double metric = sphere ? 4.0 / ((1.0 + s) * (1.0 + s)) : -4.0 / ((1.0 - s) * (1.0 - s));

  const double unit = std::abs(dot(a, a) - 1.0);
  const double roundtrip = max_abs_diff(back, x);
  if (unit > 1e-10 || roundtrip > 1e-10) {
    err << "validation failed: |a^2 - 1| = " << unit << ", roundtrip = " << roundtrip << "\n";
    return exit_failure;
  }

  Record r;
  r.add("geometry", geometry);
  for (int k = 0; k < 3; ++k)
    r.add("x" + std::to_string(k + 1), x.x[k]);
  const std::string p = sphere ? "a_e" : "a_g";
  for (int k = 0; k < 4; ++k)
    r.add(p + std::to_string(k), a.coeff(BladeIndex{1u << k}));
  r.add(sphere ? "theta" : "phi", R.angle);
  r.add(sphere ? "cos_theta" : "cosh_phi", R.cos_angle);
  r.add(sphere ? "sin_theta" : "sinh_phi", R.sin_angle);
  r.add("rotor", format_multivector(R.rotor, 15, 1e-300));
  r.add("metric_factor", metric);
  out << r.render(format);
  return exit_ok;
}

// prob -----------------------------------------------------------------------

inline int cmd_prob(const std::string &geometry, const PlanePoint &xa, const PlanePoint &xb,
                    bool quaternion, const std::string &format, std::ostream &out,
                    std::ostream &err) {
  const bool sphere = geometry == "sphere";
  Record r;
  r.add("geometry", geometry);
  r.add("spinor", quaternion ? "quaternion" : "geometric");
  double chain = 0.0;
  double residual = 0.0;
  if (quaternion) {
    const FidelityRoutesQ f =
        fidelity_q_routes(qspinor_from_plane(xa), qspinor_from_plane(xb));
    chain = f.chain;
    residual = f.residual();
    r.add("braket", f.chain);
    r.add("closed_form", f.closed);
  } else {
    const AlgebraTag tag = sphere ? AlgebraTag::pauli3 : AlgebraTag::minkowski12;
    const FidelityRoutes f =
        fidelity_routes(gspinor_from_plane(tag, xa), gspinor_from_plane(tag, xb));
    chain = f.chain;
    residual = f.max_residual();
    r.add("braket", f.chain);
    r.add("dot_form", f.dot);
    r.add("distance_form", f.distance);
  }
  r.add("residual", residual);
  r.add("quantity", sphere ? "probability" : "Bloch hyperboloid quantity (>=1)");
  if (residual > 1e-10 * std::max(1.0, std::abs(chain))) {
    err << "validation failed: route residual " << residual << "\n";
    return exit_failure;
  }
  out << r.render(format);
  return exit_ok;
}

// figure ---------------------------------------------------------------------

inline std::string figure_csv(const std::string &name, int samples) {
  std::vector<CurveSample> curve;
  std::string header;
  int dims = 0;
  if (name == "stereo-sphere") {
    curve = sphere_cross_section(samples);
    header = "t,x1,x2,x3,a_e0,a_e1,a_e2,a_e3";
    dims = 4;
  } else if (name == "stereo-hyper") {
    curve = hyper_cross_section(samples);
    header = "t,x1,x2,x3,a_g0,a_g1,a_g2,a_g3";
    dims = 4;
  } else {
    curve = poincare_geodesic(samples);
    header = "t,x1,x2,a_g0,a_g1,a_g2";
    dims = 3;
  }
  std::string out = header + "\n";
  for (const CurveSample &c : curve) {
    out += Record::number(c.t);
    for (int k = 0; k < dims - 1; ++k)
      out += "," + Record::number(c.x.x[k]);
    for (int k = 0; k < dims; ++k) {
      out += ",";
      if (c.a_hat) {
        if (std::abs(dot(*c.a_hat, *c.a_hat) - 1.0) > 1e-10)
          throw Error(Errc::domain_violation, "row failed the a^2 = 1 check");
        out += Record::number(c.a_hat->coeff(BladeIndex{1u << k}));
      }
    }
    out += "\n";
  }
  return out;
}

inline int cmd_figure(const std::string &name, int samples, const std::string &path,
                      std::ostream &out, std::ostream &err) {
  const std::string csv = figure_csv(name, samples);
  if (path.empty() || path == "-") {
    out << csv;
    return exit_ok;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "cannot open " << path << " for writing\n";
    return exit_failure;
  }
  file << csv;
  file.close();
  if (!file) {
    err << "write to " << path << " failed\n";
    return exit_failure;
  }
  return exit_ok;
}

// dirac ----------------------------------------------------------------------

inline int cmd_dirac(const std::array<double, 8> &reals, const std::string &format,
                     std::ostream &out, std::ostream &err) {
  const DiracSpinor4 d = DiracSpinor4::from_reals(reals);
  const ComplexMultivector m = dirac_to_geometric(d);
  const QSpinor q = geometric_to_qspinor(m);
  const double residual = max_abs_diff(qspinor_to_dirac(q), d);
  if (residual > 1e-12 * std::max(1.0, std::sqrt(d.norm2()))) {
    err << "validation failed: round-trip residual " << residual << "\n";
    return exit_failure;
  }
  Record r;
  r.add("x0", q.q0.s);
  for (int k = 0; k < 3; ++k)
    r.add("x" + std::to_string(k + 1), q.q0.v[k]);
  r.add("y0", q.q1.s);
  for (int k = 0; k < 3; ++k)
    r.add("y" + std::to_string(k + 1), q.q1.v[k]);
  r.add("expansion", format_multivector(dirac_real_factor(d), 15, 1e-300));
  r.add("residual", residual);
  out << r.render(format);
  return exit_ok;
}

// dispatch -------------------------------------------------------------------

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Quaternion spinor and geometric algebra toolkit", "quatspin"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"csv", "json"};

  std::uint64_t seed = 0;
  int cases = 200;
  double tol = default_tolerance;
  auto *verify = app.add_subcommand("verify", "Run the seeded property suites");
  verify->add_option("--seed", seed, "64-bit seed")->capture_default_str();
  verify->add_option("--cases", cases, "Random cases per suite")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  verify->add_option("--tol", tol, "Tolerance scale (declared tolerances x tol/1e-12)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string signature;
  std::string format = "csv";
  auto *table = app.add_subcommand("table", "Print the blade multiplication table");
  table->add_option("--signature", signature, "p,q")->required();
  table->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

  std::string geometry;
  std::string point;
  auto *project = app.add_subcommand("project", "Lift a flat point to the sphere or hyperboloid");
  project->add_option("geometry", geometry)->required()->check(CLI::IsMember({"sphere", "hyper"}));
  project->add_option("--point", point, "x1,x2,x3")->required();
  project->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

  std::string point_a;
  std::string point_b;
  bool quaternion = false;
  auto *prob = app.add_subcommand("prob", "Transition quantity between two spinor states");
  prob->add_option("geometry", geometry)->required()->check(CLI::IsMember({"sphere", "hyper"}));
  prob->add_option("--a", point_a, "plane point of the first state")->required();
  prob->add_option("--b", point_b, "plane point of the second state")->required();
  prob->add_flag("--quaternion", quaternion, "Use quaternion spinors (hyper only)");
  prob->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

  std::string figure_name;
  int samples = 101;
  std::string path;
  auto *figure = app.add_subcommand("figure", "Write curve samples as CSV");
  figure->add_option("name", figure_name)
      ->required()
      ->check(CLI::IsMember({"stereo-sphere", "stereo-hyper", "poincare-geodesic"}));
  figure->add_option("--samples", samples)->check(CLI::Range(2, 10000000))->capture_default_str();
  figure->add_option("--out", path, "Output path (stdout if omitted)");

  std::vector<double> components;
  auto *dirac = app.add_subcommand("dirac", "Map a Dirac column to quaternion spinor form");
  dirac->add_option("components", components, "Re phi1 Im phi1 ... Re phi4 Im phi4")
      ->required()
      ->expected(1, 8);
  dirac->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();

  try {
    app.parse(argc, argv);
    if (*table) {
      const std::vector<double> pq = parse_list(signature);
      if (pq.size() != 2 || pq[0] != std::floor(pq[0]) || pq[1] != std::floor(pq[1]))
        throw CLI::ValidationError("--signature expects p,q");
      const int p = static_cast<int>(pq[0]);
      const int q = static_cast<int>(pq[1]);
      if (p < 0 || q < 0 || p + q < 1 || p + q > max_dimension)
        throw CLI::ValidationError("--signature needs 1 <= p+q <= 6");
      return cmd_table(labelled_signature(p, q), format, out);
    }
    if (*dirac) {
      if (components.size() != 8)
        throw CLI::ValidationError("dirac expects 8 reals, got " + std::to_string(components.size()));
      std::array<double, 8> r{};
      std::copy(components.begin(), components.end(), r.begin());
      return cmd_dirac(r, format, out, err);
    }
    if (*prob && quaternion && geometry != "hyper")
      throw CLI::ValidationError("--quaternion needs geometry hyper");
    // Points are parsed before dispatch so malformed input is a usage error.
    if (*project) {
      const PlanePoint x = parse_point(point);
      return cmd_project(geometry, x, format, out, err);
    }
    if (*prob) {
      const PlanePoint a = parse_point(point_a, 2);
      const PlanePoint b = parse_point(point_b, 2);
      return cmd_prob(geometry, a, b, quaternion, format, out, err);
    }
    if (*figure)
      return cmd_figure(figure_name, samples, path, out, err);
    return cmd_verify(seed, cases, tol, out);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return exit_usage;
  } catch (const Error &e) {
    err << e.what() << "\n";
    return exit_failure;
  }
}

} // namespace quatspin::cli
