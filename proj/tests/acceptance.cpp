// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails. Usage: quatspin_acceptance <path-to-quatspin-cli>

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "quatspin/quatspin.hpp"

using namespace quatspin;

namespace {

/// Worst observed value of one measured quantity against its bound.
struct Measure {
  std::string what;
  double value = 0.0;
  double bound = 0.0;
  bool upper = true; ///< value <= bound, otherwise value >= bound

  bool ok() const { return upper ? value <= bound : value >= bound; }
  void worst(double v) { value = upper ? std::max(value, v) : std::min(value, v); }
};

Measure upper(std::string what, double bound) { return {std::move(what), 0.0, bound, true}; }
Measure lower(std::string what, double bound) {
  return {std::move(what), std::numeric_limits<double>::infinity(), bound, false};
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

struct Criterion {
  int id;
  std::string title;
  std::function<std::vector<Measure>()> run;
};

std::vector<Measure> representation() {
  Sampler rng(1001);
  auto hom_e = upper("rep_e(ab) - rep_e(a)rep_e(b)", 1e-12);
  auto hom_i = upper("rep_I(ab) - rep_I(a)rep_I(b)", 1e-12);
  for (int n = 0; n < 1000; ++n) {
    const auto a = rng.multivector(euclidean4());
    const auto b = rng.multivector(euclidean4());
    hom_e.worst(max_abs_diff(rep_e(a * b), rep_e(a) * rep_e(b)));
    hom_i.worst(max_abs_diff(rep_I(a * b), rep_I(a) * rep_I(b)));
  }
  auto blades = upper("unrep(rep(blade)) - blade, 16 blades", 0.0);
  for (std::uint32_t m = 0; m < 16; ++m) {
    const auto g = Multivector::blade(euclidean4(), BladeIndex{m});
    blades.worst(max_abs_diff(unrep_e(rep_e(g)), g));
    blades.worst(max_abs_diff(unrep_I(rep_I(g)), g));
  }
  return {hom_e, hom_i, blades};
}

std::vector<Measure> change_of_basis() {
  Sampler rng(1002);
  auto change = upper("A rep_I(g) A^-1 - rep_e(g)", 1e-12);
  for (int n = 0; n < 1000; ++n) {
    const auto g = rng.multivector(euclidean4());
    change.worst(max_abs_diff(change_basis(rep_I(g)), rep_e(g)));
  }
  auto unitary = upper("A A* - 1", 1e-15);
  unitary.worst(max_abs_diff(change_matrix() * change_matrix().conj_transpose(), QuatMatrix2::identity()));
  const auto ids = idempotent_identities();
  auto spectral = upper("spectral basis change through B", 1e-12);
  spectral.worst(ids.spectral_change);
  spectral.worst(ids.spectral_outer);
  auto singular = lower("max |B B* - 1|", 0.5);
  singular.worst(ids.singular_deviation);
  return {change, unitary, spectral, singular};
}

std::vector<Measure> isomorphism() {
  Sampler rng(1003);
  auto fwd = upper("g4_to_sta product", 1e-12);
  auto back = upper("sta_to_g4 product", 1e-12);
  auto inv = upper("mutual inverse", 1e-12);
  for (int n = 0; n < 1000; ++n) {
    const auto a = rng.multivector(euclidean4());
    const auto b = rng.multivector(euclidean4());
    fwd.worst(max_abs_diff(g4_to_sta(a * b), g4_to_sta(a) * g4_to_sta(b)));
    const auto c = rng.multivector(spacetime13());
    const auto d = rng.multivector(spacetime13());
    back.worst(max_abs_diff(sta_to_g4(c * d), sta_to_g4(c) * sta_to_g4(d)));
    inv.worst(max_abs_diff(sta_to_g4(g4_to_sta(a)), a));
    inv.worst(max_abs_diff(g4_to_sta(sta_to_g4(c)), c));
  }
  return {fwd, back, inv};
}

std::vector<Measure> projection() {
  Sampler rng(1004);
  auto sphere_rt = upper("sphere project(lift(x)) - x", 1e-10);
  auto hyper_rt = upper("hyper project(lift(x)) - x", 1e-10);
  auto sphere_rot = upper("R e0 R~ - lift", 1e-10);
  auto hyper_rot = upper("R g0 R~ - lift", 1e-10);
  auto trig = upper("|cos^2 + sin^2 - 1|", 1e-12);
  auto hyp = upper("|cosh^2 - sinh^2 - 1|", 1e-12);
  const auto e0 = Multivector::generator(euclidean4(), 0);
  const auto g0 = Multivector::generator(spacetime13(), 0);
  for (int n = 0; n < 500; ++n) {
    const PlanePoint p = rng.ball_point(5.0);
    const auto a = lift_sphere(p).a_hat;
    sphere_rt.worst(max_abs_diff(project_sphere(make_sphere_point(a)), p));
    const Rotor r = sphere_rotor(p);
    sphere_rot.worst(max_abs_diff(r.rotor * e0 * reverse(r.rotor), a));
    trig.worst(std::abs(r.cos_angle * r.cos_angle + r.sin_angle * r.sin_angle - 1.0));

    const PlanePoint q = rng.ball_point(0.9);
    const auto h = lift_hyper(q).a_hat;
    hyper_rt.worst(max_abs_diff(project_hyper(make_hyper_point(h, 1e-10)), q));
    const Rotor b = hyper_boost(q);
    hyper_rot.worst(max_abs_diff(b.rotor * g0 * reverse(b.rotor), h));
    hyp.worst(std::abs(b.cos_angle * b.cos_angle - b.sin_angle * b.sin_angle - 1.0));
  }
  auto half = upper("|x| = 1/2: |cosh - 5/3|, |sinh - 4/3|", 1e-12);
  const Rotor b = hyper_boost(PlanePoint{{0.5, 0.0, 0.0}});
  half.worst(std::abs(b.cos_angle - 5.0 / 3.0));
  half.worst(std::abs(b.sin_angle - 4.0 / 3.0));
  half.worst(std::abs(std::cosh(b.angle) - 5.0 / 3.0));
  half.worst(std::abs(std::sinh(b.angle) - 4.0 / 3.0));
  return {sphere_rt, hyper_rt, sphere_rot, hyper_rot, trig, hyp, half};
}

std::vector<Measure> metric() {
  Sampler rng(1005);
  const double h = 1e-5;
  auto sphere = upper("sphere (da)^2 vs central difference, relative", 1e-6);
  auto hyper = upper("hyper (da)^2 vs central difference, relative", 1e-6);
  auto sign = lower("hyper closed form * (1-x^2)^2 / (-4 dx^2)", 1.0 - 1e-12);
  for (int n = 0; n < 200; ++n) {
    const PlanePoint p = rng.ball_point(3.0);
    const Vec3 dx = rng.vec3();
    const auto fd = [&](auto lift, const PlanePoint &x) {
      return (lift(PlanePoint{add3(x.x, scale3(h, dx))}) - lift(PlanePoint{sub3(x.x, scale3(h, dx))})) /
             (2.0 * h);
    };
    const auto ds = fd([](const PlanePoint &x) { return lift_sphere(x).a_hat; }, p);
    const double s2 = sphere_metric(p, dx).ds2;
    sphere.worst(std::abs(s2 - dot(ds, ds)) / std::abs(s2));

    const PlanePoint q = rng.ball_point(0.9);
    const auto dh = fd([](const PlanePoint &x) { return lift_hyper(x).a_hat; }, q);
    const double h2 = hyper_metric(q, dx).ds2;
    hyper.worst(std::abs(h2 - dot(dh, dh)) / std::abs(h2));
    // The finite difference itself is positive; the closed form carries the minus sign.
    const double w = (1.0 - q.norm2()) * (1.0 - q.norm2());
    sign.worst(-h2 * w / (4.0 * dot3(dx, dx)));
  }
  return {sphere, hyper, sign};
}

std::vector<Measure> fidelity_triple() {
  Sampler rng(1006);
  auto pauli = upper("G3 routes pairwise", 1e-10);
  auto mink = upper("G1,2 routes pairwise", 1e-10);
  auto lo = lower("G3 minimum", 0.0);
  auto hi = upper("G3 maximum", 1.0);
  auto hyp = lower("G1,2 minimum", 1.0);
  for (int n = 0; n < 500; ++n) {
    const auto rp = fidelity_routes(rng.gspinor(AlgebraTag::pauli3), rng.gspinor(AlgebraTag::pauli3));
    pauli.worst(rp.max_residual());
    lo.worst(rp.chain);
    hi.worst(rp.chain);
    const auto rm =
        fidelity_routes(rng.gspinor(AlgebraTag::minkowski12), rng.gspinor(AlgebraTag::minkowski12));
    mink.worst(rm.max_residual());
    hyp.worst(rm.chain);
  }
  auto anti = upper("antipode fidelity", 1e-12);
  for (int n = 0; n < 500; ++n) {
    const PlanePoint xa = rng.ball_point(3.0, 2);
    if (xa.norm2() < 1e-6)
      continue;
    anti.worst(fidelity(gspinor_from_plane(AlgebraTag::pauli3, xa),
                        gspinor_from_plane(AlgebraTag::pauli3, antipodal_state(xa))));
  }
  // Round-off may put the bounds a hair outside; allow it at the route tolerance.
  lo.bound = -1e-12;
  hi.bound = 1.0 + 1e-12;
  hyp.bound = 1.0 - 1e-12;
  return {pauli, mink, lo, hi, hyp, anti};
}

std::vector<Measure> quaternion_spinors() {
  Sampler rng(1007);
  auto rec = upper("rho e^{theta i x} M^ v+ - image", 1e-12);
  auto msq = upper("M^2 - (1 - |q1|^2/|q0|^2)", 1e-12);
  auto orth = upper("orthogonal M = (1 + x_m) e0", 1e-12);
  auto proj = upper("projector closed form", 1e-12);
  auto dual = upper("fidelity dual route", 1e-10);
  for (int n = 0; n < 500; ++n) {
    const QSpinor psi = rng.qspinor();
    const CanonicalQ c = canonical_q(psi);
    rec.worst(max_abs_diff(reconstruct(c, psi.tag), image(psi)));
    const double target = 1.0 - psi.q1.norm2() / psi.q0.norm2();
    msq.worst(max_abs_diff(c.M * c.M, Multivector::scalar(spacetime13(), target)));
    const QSpinor o = rng.orthogonal_qspinor();
    const OrthogonalQ oc = canonical_orthogonal(o);
    orth.worst(max_abs_diff(orthogonal_m(oc.x_m, o.tag), oc.canon.M));
    proj.worst(max_abs_diff(projector(o), projector_closed_form(o)));
    dual.worst(fidelity_q_routes(psi, rng.qspinor()).residual());
  }
  return {rec, msq, orth, proj, dual};
}

std::vector<Measure> dirac_bridge() {
  Sampler rng(1008);
  auto rt = upper("column -> ideal -> quaternions -> column", 1e-12);
  for (int n = 0; n < 1000; ++n) {
    const DiracSpinor4 d = rng.dirac();
    rt.worst(max_abs_diff(qspinor_to_dirac(geometric_to_qspinor(dirac_to_geometric(d))), d));
  }
  const Multivector g21 = Multivector::product_of(spacetime13(), {2, 1});
  auto j = upper("j phi vs right g21 on basis spinors", 0.0);
  for (int k = 0; k < 4; ++k)
    for (std::complex<double> z : {std::complex<double>(1, 0), std::complex<double>(0, 1)}) {
      DiracSpinor4 d, jd;
      d.phi[k] = z;
      jd.phi[k] = std::complex<double>(0, 1) * z;
      j.worst(max_abs_diff(dirac_to_geometric(jd), dirac_to_geometric(d) * g21));
    }
  auto spec = upper("sum u = 1 and u_a u_b = delta u_a", 0.0);
  const auto u = dirac_idempotents();
  ComplexMultivector sum = ComplexMultivector::real(Multivector(spacetime13()));
  for (int a = 0; a < 4; ++a) {
    sum = sum + u[a].element();
    for (int b = 0; b < 4; ++b) {
      const auto p = u[a].element() * u[b].element();
      spec.worst(a == b ? max_abs_diff(p, u[a].element()) : max_abs(p));
    }
  }
  spec.worst(max_abs_diff(sum, ComplexMultivector::real(Multivector::scalar(spacetime13(), 1.0))));
  return {rt, j, spec};
}

struct Process {
  int status = -1;
  std::string out;
};

Process capture(const std::string &command) {
  Process p;
  FILE *pipe = popen(command.c_str(), "r");
  if (!pipe)
    return p;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    p.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return p;
}

std::vector<Measure> cli_determinism(const std::string &cli) {
  auto exit0 = upper("verify exit status", 0.0);
  auto same = upper("byte differences between runs", 0.0);
  auto rows = upper("figure rows off a^2 = 1 or failing", 1e-10);
  if (cli.empty()) {
    exit0.worst(1.0);
    exit0.what += " (no CLI path given)";
    return {exit0};
  }
  const std::string verify = "'" + cli + "' verify --seed 7 --cases 500";
  const Process a = capture(verify);
  const Process b = capture(verify);
  exit0.worst(std::max(std::abs(a.status), std::abs(b.status)));
  same.worst(a.out == b.out && !a.out.empty() ? 0.0 : 1.0);
  for (const char *name : {"stereo-sphere", "stereo-hyper", "poincare-geodesic"}) {
    const Process f = capture("'" + cli + "' figure " + name + " --samples 201");
    if (f.status != 0) {
      rows.worst(1.0);
      continue;
    }
    std::istringstream lines(f.out);
    std::string line;
    std::getline(lines, line);
    const bool euclid = std::string(name) == "stereo-sphere";
    const std::size_t first = std::string(name) == "poincare-geodesic" ? 3 : 4;
    while (std::getline(lines, line)) {
      std::vector<std::string> cells;
      std::istringstream ss(line);
      std::string c;
      while (std::getline(ss, c, ','))
        cells.push_back(c);
      if (cells.size() <= first || cells[first].empty())
        continue;
      double sq = 0.0, scale = 1.0;
      for (std::size_t k = first; k < cells.size(); ++k) {
        const double v = std::stod(cells[k]);
        sq += (k == first || euclid) ? v * v : -v * v;
        scale = std::max(scale, v * v);
      }
      rows.worst(std::abs(sq - 1.0) / scale);
    }
  }
  return {exit0, same, rows};
}

} // namespace

int main(int argc, char **argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria{
      {1, "representation homomorphism", representation},
      {2, "change of basis", change_of_basis},
      {3, "isomorphism Cl(4,0) <-> Cl(1,3)", isomorphism},
      {4, "projection round trips and rotors", projection},
      {5, "metric formulas vs finite differences", metric},
      {6, "g-spinor fidelity triple equality", fidelity_triple},
      {7, "quaternion spinor canonical form", quaternion_spinors},
      {8, "Dirac bridge", dirac_bridge},
      {9, "CLI determinism and figure rows", [&] { return cli_determinism(cli); }},
  };
  int failed = 0;
  for (const Criterion &c : criteria) {
    std::vector<Measure> ms;
    std::string error;
    try {
      ms = c.run();
    } catch (const std::exception &e) {
      error = e.what();
    }
    bool ok = error.empty();
    std::string detail;
    for (const Measure &m : ms) {
      ok = ok && m.ok();
      detail += (detail.empty() ? "" : "; ") + m.what + " " + fmt(m.value) + (m.upper ? " <= " : " >= ") +
                fmt(m.bound) + (m.ok() ? "" : " !");
    }
    if (!error.empty())
      detail = "exception: " + error;
    std::cout << (ok ? "PASS " : "FAIL ") << c.id << " " << c.title << " [" << detail << "]\n";
    failed += ok ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
