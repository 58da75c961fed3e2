#pragma once

// Seeded property suites over every module, run as independent tasks and
// reported in name order.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "quatspin/quatspin.hpp"

namespace quatspin {

struct PropertyResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed() const { return residual <= tolerance; }
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  int cases = 0;
  std::vector<PropertyResult> properties;
  std::string error; ///< set when the suite threw

  bool passed() const {
    return error.empty() && std::all_of(properties.begin(), properties.end(),
                                        [](const PropertyResult &p) { return p.passed(); });
  }
};

struct RunReport {
  std::uint64_t seed = 0;
  int cases = 0;
  double tol = default_tolerance;
  std::vector<SuiteReport> suites;

  bool passed() const {
    return std::all_of(suites.begin(), suites.end(),
                       [](const SuiteReport &s) { return s.passed(); });
  }
};

/// Keeps the worst residual per property, in first-seen order.
class Recorder {
public:
  explicit Recorder(double scale) : scale_(scale) {}

  void record(const std::string &name, double residual, double declared_tolerance) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      index_.emplace(name, results_.size());
      results_.push_back({name, residual, declared_tolerance * scale_});
      return;
    }
    PropertyResult &r = results_[it->second];
    if (!(residual <= r.residual))
      r.residual = residual;
  }

  /// Residual 0 if `ok`, 1 otherwise, against tolerance 0.
  void require(const std::string &name, bool ok) { record(name, ok ? 0.0 : 1.0, 0.0); }

  /// Distance of `value` outside [lo, hi].
  void bound(const std::string &name, double value, double lo, double hi, double declared) {
    record(name, std::max({0.0, lo - value, value - hi}), declared);
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

private:
  double scale_;
  std::map<std::string, std::size_t> index_;
  std::vector<PropertyResult> results_;
};

namespace detail {

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline double rel_err(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

/// Random bivector with scalar square: the wedge of two random vectors.
inline Multivector random_simple_bivector(Sampler &rng, const Signature &sig) {
  std::vector<double> a(sig.dimension()), b(sig.dimension());
  for (int k = 0; k < sig.dimension(); ++k) {
    a[k] = rng.uniform(-1.0, 1.0);
    b[k] = rng.uniform(-1.0, 1.0);
  }
  const Multivector va = Multivector::vector(sig, a);
  const Multivector vb = Multivector::vector(sig, b);
  return 0.5 * (va * vb - vb * va);
}

inline Multivector series_exp(const Multivector &b) {
  Multivector term = Multivector::scalar(b.signature(), 1.0);
  Multivector sum = term;
  for (int k = 1; k < 40; ++k) {
    term = term * b / static_cast<double>(k);
    sum = sum + term;
  }
  return sum;
}

} // namespace detail

using SuiteFn = std::function<void(Sampler &, int, Recorder &)>;

struct Suite {
  std::string name;
  SuiteFn run;
};

inline std::vector<Suite> verify_suites() {
  std::vector<Suite> s;

  s.push_back({"ga-core.algebra", [](Sampler &rng, int cases, Recorder &r) {
    for (const Signature &sig : {euclidean4(), spacetime13(), pauli3(), minkowski12()}) {
      for (int i = 0; i < sig.dimension(); ++i)
        for (int j = 0; j < sig.dimension(); ++j) {
          const Multivector gi = Multivector::generator(sig, i);
          const Multivector gj = Multivector::generator(sig, j);
          if (i == j)
            r.require("generator_square", gi * gi == Multivector::scalar(sig, sig.square_of(i)));
          else
            r.require("anticommutation", gi * gj == -(gj * gi));
        }
      for (int c = 0; c < cases; ++c) {
        const Multivector a = rng.multivector(sig);
        const Multivector b = rng.multivector(sig);
        const Multivector d = rng.multivector(sig);
        r.record("associativity", max_abs_diff((a * b) * d, a * (b * d)), 1e-12);
        r.record("reverse_antiautomorphism", max_abs_diff(reverse(a * b), reverse(b) * reverse(a)),
                 1e-12);
      }
    }
  }});

  s.push_back({"ga-core.exp", [](Sampler &rng, int cases, Recorder &r) {
    for (const Signature &sig : {euclidean4(), spacetime13()})
      for (int c = 0; c < cases; ++c) {
        const Multivector b = detail::random_simple_bivector(rng, sig);
        r.record("exp_inverse", max_abs_diff(exp_blade(b) * exp_blade(-b),
                                             Multivector::scalar(sig, 1.0)), 1e-12);
        r.record("exp_series", max_abs_diff(exp_blade(b), detail::series_exp(b)), 1e-12);
      }
  }});

  s.push_back({"quat-rep.homomorphism", [](Sampler &rng, int cases, Recorder &r) {
    const Signature g4 = euclidean4();
    for (int c = 0; c < cases; ++c) {
      const Multivector a = rng.multivector(g4);
      const Multivector b = rng.multivector(g4);
      r.record("rep_e_product", max_abs_diff(rep_e(a * b), rep_e(a) * rep_e(b)), 1e-12);
      r.record("rep_I_product", max_abs_diff(rep_I(a * b), rep_I(a) * rep_I(b)), 1e-12);
      r.record("unrep_e_roundtrip", max_abs_diff(unrep_e(rep_e(a)), a), 1e-12);
      r.record("unrep_I_roundtrip", max_abs_diff(unrep_I(rep_I(a)), a), 1e-12);
    }
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
      const Multivector blade = Multivector::blade(g4, BladeIndex{mask});
      r.require("blade_faithful_e", unrep_e(rep_e(blade)) == blade);
      r.require("blade_faithful_I", unrep_I(rep_I(blade)) == blade);
    }
  }});

  s.push_back({"quat-rep.change-basis", [](Sampler &rng, int cases, Recorder &r) {
    const Signature g4 = euclidean4();
    for (int c = 0; c < cases; ++c) {
      const Multivector g = rng.multivector(g4);
      r.record("change_basis", max_abs_diff(change_basis(rep_I(g)), rep_e(g)), 1e-12);
    }
    r.record("A_unitary",
             max_abs_diff(change_matrix() * change_matrix_inverse(), QuatMatrix2::identity()),
             1e-15);
    const IdempotentResiduals id = idempotent_identities();
    r.record("idempotent_I_plus", id.big_i_plus, 1e-12);
    r.record("idempotent_e_plus", id.e_plus, 1e-12);
    r.record("spectral_outer", id.spectral_outer, 1e-12);
    r.record("spectral_change", id.spectral_change, 1e-12);
    r.bound("B_not_unitary", id.singular_deviation, 0.5, 1e300, 0.0);
  }});

  s.push_back({"iso-map.homomorphism", [](Sampler &rng, int cases, Recorder &r) {
    for (int c = 0; c < cases; ++c) {
      const Multivector a = rng.multivector(euclidean4());
      const Multivector b = rng.multivector(euclidean4());
      r.record("g4_to_sta_product", max_abs_diff(g4_to_sta(a * b), g4_to_sta(a) * g4_to_sta(b)),
               1e-12);
      r.record("g4_roundtrip", max_abs_diff(sta_to_g4(g4_to_sta(a)), a), 1e-12);
      const Multivector x = rng.multivector(spacetime13());
      const Multivector y = rng.multivector(spacetime13());
      r.record("sta_to_g4_product", max_abs_diff(sta_to_g4(x * y), sta_to_g4(x) * sta_to_g4(y)),
               1e-12);
      r.record("sta_roundtrip", max_abs_diff(g4_to_sta(sta_to_g4(x)), x), 1e-12);
    }
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
      const Multivector e = Multivector::blade(euclidean4(), BladeIndex{mask});
      const Multivector g = Multivector::blade(spacetime13(), BladeIndex{mask});
      r.require("blade_inverse", sta_to_g4(g4_to_sta(e)) == e && g4_to_sta(sta_to_g4(g)) == g);
    }
  }});

  s.push_back({"stereo.sphere", [](Sampler &rng, int cases, Recorder &r) {
    const Signature sig = euclidean4();
    const Multivector e0 = Multivector::generator(sig, 0);
    for (int c = 0; c < cases; ++c) {
      const PlanePoint x = rng.ball_point(3.0);
      const SpherePoint a = lift_sphere(x);
      r.record("unit_square", std::abs(dot(a.a_hat, a.a_hat) - 1.0), 1e-12);
      r.record("project_lift", max_abs_diff(project_sphere(a), x), 1e-10);
      const Rotor R = sphere_rotor(x);
      r.record("rotor_sandwich", max_abs_diff(R.rotor * e0 * reverse(R.rotor), a.a_hat), 1e-10);
      r.record("rotor_unit", max_abs_diff(R.rotor * reverse(R.rotor), Multivector::scalar(sig, 1.0)),
               1e-12);
      r.record("trig_identity", std::abs(R.cos_angle * R.cos_angle + R.sin_angle * R.sin_angle - 1.0),
               1e-12);
      r.record("reflection_form", max_abs_diff(sphere_reflection_form(x), a.a_hat), 1e-12);
      r.record("one_sided_form", max_abs_diff(sphere_one_sided_form(x), a.a_hat), 1e-12);
      r.bound("angle_branch", R.angle, 0.0, std::numbers::pi, 0.0);
    }
  }});

  s.push_back({"stereo.hyper", [](Sampler &rng, int cases, Recorder &r) {
    const Signature sig = spacetime13();
    const Multivector g0 = Multivector::generator(sig, 0);
    for (int c = 0; c < cases; ++c) {
      const PlanePoint x = rng.ball_point(0.95);
      const HyperPoint a = lift_hyper(x);
      r.record("unit_square", std::abs(dot(a.a_hat, a.a_hat) - 1.0), 1e-12);
      r.bound("future_sheet", a.a_hat.coeff(BladeIndex{1}), 1.0, 1e300, 0.0);
      r.record("project_lift", max_abs_diff(project_hyper(a), x), 1e-10);
      const Rotor R = hyper_boost(x);
      r.record("boost_sandwich", max_abs_diff(R.rotor * g0 * reverse(R.rotor), a.a_hat), 1e-10);
      r.record("hyperbolic_identity",
               detail::rel_err(R.cos_angle * R.cos_angle - R.sin_angle * R.sin_angle, 1.0), 1e-12);
      r.record("reflection_form", max_abs_diff(hyper_reflection_form(x), a.a_hat), 1e-10);
    }
    const Rotor half = hyper_boost(PlanePoint{{0.5, 0.0, 0.0}});
    r.record("half_radius_cosh", std::abs(half.cos_angle - 5.0 / 3.0), 1e-12);
    r.record("half_radius_sinh", std::abs(half.sin_angle - 4.0 / 3.0), 1e-12);
  }});

  s.push_back({"stereo.metric", [](Sampler &rng, int cases, Recorder &r) {
    const double h = 1e-5;
    for (int c = 0; c < cases; ++c) {
      const PlanePoint x = rng.ball_point(3.0);
      const Vec3 dx = rng.vec3();
      const ArcElement m = sphere_metric(x, dx);
      const Multivector fd =
          (lift_sphere(PlanePoint{add3(x.x, scale3(h, dx))}).a_hat -
           lift_sphere(PlanePoint{sub3(x.x, scale3(h, dx))}).a_hat) / (2.0 * h);
      r.record("sphere_fd_ds2", std::abs(dot(fd, fd) - m.ds2) / std::abs(m.ds2), 1e-6);
      r.record("sphere_closed_ds2", std::abs(dot(m.da_hat, m.da_hat) - m.ds2) / std::abs(m.ds2), 1e-12);
      r.record("sphere_tangent", std::abs(dot(m.da_hat, lift_sphere(x).a_hat)), 1e-12);

      const PlanePoint y = rng.ball_point(0.9);
      const ArcElement n = hyper_metric(y, dx);
      const Multivector fdh =
          (lift_hyper(PlanePoint{add3(y.x, scale3(h, dx))}).a_hat -
           lift_hyper(PlanePoint{sub3(y.x, scale3(h, dx))}).a_hat) / (2.0 * h);
      r.record("hyper_fd_ds2", std::abs(dot(fdh, fdh) - n.ds2) / std::abs(n.ds2), 1e-6);
      r.record("hyper_closed_ds2", std::abs(dot(n.da_hat, n.da_hat) - n.ds2) / std::abs(n.ds2), 1e-12);
      r.bound("hyper_negative", n.ds2, -1e300, 0.0, 0.0);
      r.record("hyper_tangent", std::abs(dot(n.da_hat, lift_hyper(y).a_hat)) /
                                    std::max(1.0, max_abs(n.da_hat)), 1e-12);
    }
  }});

  s.push_back({"gspinor.ideal", [](Sampler &rng, int cases, Recorder &r) {
    for (AlgebraTag tag : {AlgebraTag::pauli3, AlgebraTag::minkowski12}) {
      const Multivector idem = spinor_idempotent(tag);
      for (int c = 0; c < cases; ++c) {
        const GSpinor psi = rng.gspinor(tag);
        const Multivector m = to_multivector(psi);
        r.record("ideal_closure", max_abs_diff(m * idem, m), 1e-12);
        r.record("matrix_route", max_abs_diff(to_multivector_by_matrix(psi), m), 1e-12);
        const GSpinor back = gspinor_from_multivector(m, tag);
        r.record("roundtrip", std::max({std::abs(back.a0.s - psi.a0.s), std::abs(back.a0.p - psi.a0.p),
                                        std::abs(back.a1.s - psi.a1.s), std::abs(back.a1.p - psi.a1.p)}),
                 1e-12);
        const CenterScalar n = inner(psi, psi);
        r.record("norm_squared", std::abs(n.s - norm2(psi)) + std::abs(n.p), 1e-12);
      }
    }
  }});

  s.push_back({"gspinor.canonical", [](Sampler &rng, int cases, Recorder &r) {
    for (AlgebraTag tag : {AlgebraTag::pauli3, AlgebraTag::minkowski12})
      for (int c = 0; c < cases; ++c) {
        const GSpinor psi = rng.gspinor(tag);
        const GCanonical cf = canonical_form(psi);
        r.record("reconstruction", max_abs_diff(reconstruct(cf, tag), to_multivector(psi)), 1e-12);
        r.record("m_hat_unit", std::abs((cf.m_hat * cf.m_hat).scalar_part() - 1.0), 1e-12);
        const BraKet bk = braket(normalized(psi));
        const Multivector a_plus = cf.m_hat * spinor_idempotent(tag) * cf.m_hat;
        r.record("braket_projector", max_abs_diff(bk.ket * bk.bra, 2.0 * a_plus), 1e-12);
      }
  }});

  s.push_back({"gspinor.fidelity", [](Sampler &rng, int cases, Recorder &r) {
    for (AlgebraTag tag : {AlgebraTag::pauli3, AlgebraTag::minkowski12}) {
      const std::string p = tag == AlgebraTag::pauli3 ? "pauli_" : "hyper_";
      for (int c = 0; c < cases; ++c) {
        const FidelityRoutes f = fidelity_routes(rng.gspinor(tag), rng.gspinor(tag));
        r.record(p + "triple_equality", f.max_residual() / std::max(1.0, std::abs(f.chain)), 1e-10);
        if (tag == AlgebraTag::pauli3)
          r.bound(p + "bounds", f.chain, 0.0, 1.0, 1e-12);
        else
          r.bound(p + "bounds", f.chain, 1.0, 1e300, 1e-12);
      }
    }
  }});

  s.push_back({"gspinor.antipode", [](Sampler &rng, int cases, Recorder &r) {
    for (int c = 0; c < cases; ++c) {
      const PlanePoint xa = rng.ball_point(3.0, 2);
      if (xa.norm2() < 1e-4)
        continue;
      const PlanePoint xb = antipodal_state(xa);
      const GSpinor a = gspinor_from_plane(AlgebraTag::pauli3, xa);
      const GSpinor b = gspinor_from_plane(AlgebraTag::pauli3, xb);
      r.record("fidelity_zero", std::abs(fidelity(a, b)), 1e-12);
      const GCanonical ca = canonical_form(a);
      const GCanonical cb = canonical_form(b);
      r.record("m_orthogonal", std::abs(dot(ca.m, cb.m)), 1e-12);
      r.record("opposite_points", max_abs_diff(bloch_point(a), -bloch_point(b)), 1e-12);
    }
  }});

  s.push_back({"qspinor.products", [](Sampler &rng, int cases, Recorder &r) {
    for (int c = 0; c < cases; ++c) {
      const Quaternion a = rng.quaternion();
      const Quaternion b = rng.quaternion();
      r.record("circ_plus_otimes", max_abs_diff(circ(a, b) + otimes(a, b), a * b), 1e-15);
      r.record("circ_symmetric", max_abs_diff(circ(a, b), circ(b, a)), 0.0);
      r.record("otimes_antisymmetric", max_abs_diff(otimes(a, b), -otimes(b, a)), 0.0);
      const GradeParts g = grade_parts(a, b);
      r.record("grade_parts_sum", max_abs_diff(Quaternion::real(g.g0) + g.g1, b * a.conj()), 1e-15);
      r.record("grade_parts_scalar", std::abs(g.g0 - (a.s * b.s + dot3(a.v, b.v))), 1e-15);
    }
  }});

  s.push_back({"qspinor.canonical", [](Sampler &rng, int cases, Recorder &r) {
    for (AlgebraTag tag : {AlgebraTag::spacetime13, AlgebraTag::euclidean4})
      for (int c = 0; c < cases; ++c) {
        const QSpinor psi = rng.qspinor(tag);
        const Multivector img = image(psi);
        r.record("ideal_closure", max_abs_diff(img * idempotent_q(tag), img), 1e-12);
        const QSpinor back = qspinor_from_image(img);
        r.record("image_roundtrip", std::max(max_abs_diff(back.q0, psi.q0), max_abs_diff(back.q1, psi.q1)),
                 1e-12);
        const CanonicalQ cq = canonical_q(psi);
        r.record("reconstruction", max_abs_diff(reconstruct(cq, tag), img), 1e-12);
        const double m2 = 1.0 - psi.q1.norm2() / psi.q0.norm2();
        r.record("M_squared", max_abs_diff(cq.M * cq.M, Multivector::scalar(cq.M.signature(), m2)), 1e-12);
        if (tag == AlgebraTag::spacetime13)
          r.record("M_spacetime_form", max_abs_diff(m_spacetime_form(psi), cq.M), 1e-10);
        r.record("norm_form", max_abs_diff(norm_form(psi),
                                           2.0 * cq.rho * cq.rho * idempotent_q(tag)), 1e-12);
      }
  }});

  s.push_back({"qspinor.orthogonal", [](Sampler &rng, int cases, Recorder &r) {
    for (int c = 0; c < cases; ++c) {
      const QSpinor psi = rng.orthogonal_qspinor();
      const OrthogonalQ o = canonical_orthogonal(psi);
      r.record("orthogonal_M", max_abs_diff(orthogonal_m(o.x_m, psi.tag), o.canon.M), 1e-12);
      const double xm2 = dot3(o.x_m, o.x_m);
      r.record("orthogonal_norm", std::abs(std::sqrt(1.0 - xm2) -
                                           std::sqrt(1.0 - psi.q1.norm2() / psi.q0.norm2())),
               1e-12);
      r.record("projector_closed_form",
               max_abs_diff(projector(psi), projector_closed_form(psi)) /
                   std::max(1.0, max_abs(projector(psi))),
               1e-12);
    }
  }});

  s.push_back({"qspinor.fidelity", [](Sampler &rng, int cases, Recorder &r) {
    for (int c = 0; c < cases; ++c) {
      const FidelityRoutesQ f = fidelity_q_routes(rng.qspinor(), rng.qspinor());
      r.record("dual_route", f.residual() / std::max(1.0, std::abs(f.chain)), 1e-10);
      r.bound("hyperbolic_bound", f.chain, 1.0, 1e300, 1e-10);
      const GSpinor a = rng.gspinor(AlgebraTag::minkowski12);
      const GSpinor b = rng.gspinor(AlgebraTag::minkowski12);
      const double fg = fidelity(a, b);
      r.record("gspinor_reduction", std::abs(fidelity_q(from_gspinor(a), from_gspinor(b)) - fg) /
                                        std::max(1.0, fg), 1e-10);
    }
  }});

  s.push_back({"dirac.spectral", [](Sampler &, int, Recorder &r) {
    const auto us = dirac_idempotents();
    ComplexMultivector sum = ComplexMultivector::real(Multivector(spacetime13()));
    for (const DiracIdempotent &a : us) {
      sum = sum + a.element();
      for (const DiracIdempotent &b : us) {
        const ComplexMultivector prod = a.element() * b.element();
        const ComplexMultivector expect =
            a == b ? a.element() : ComplexMultivector::real(Multivector(spacetime13()));
        r.require("orthogonal_idempotents", prod == expect);
      }
    }
    r.require("completeness", sum == ComplexMultivector::real(Multivector::scalar(spacetime13(), 1.0)));
    const Multivector g21 = Multivector::product_of(spacetime13(), {2, 1});
    for (int k = 0; k < 4; ++k) {
      DiracSpinor4 one;
      one.phi[k] = {1.0, 0.0};
      DiracSpinor4 jone;
      jone.phi[k] = {0.0, 1.0};
      r.require("j_action", dirac_to_geometric(jone) == dirac_to_geometric(one) * g21);
    }
    r.record("J_section5", e_plus_residual(JConvention::minus_j_i), 0.0);
  }});

  s.push_back({"dirac.roundtrip", [](Sampler &rng, int cases, Recorder &r) {
    for (int c = 0; c < cases; ++c) {
      const DiracSpinor4 d = rng.dirac();
      const ComplexMultivector m = dirac_to_geometric(d);
      r.record("expansion", max_abs_diff(m, dirac_real_factor(d) * u_plus_plus()), 1e-12);
      const QSpinor q = geometric_to_qspinor(m);
      r.record("roundtrip", max_abs_diff(qspinor_to_dirac(q), d), 1e-12);
      r.record("component_inverse", max_abs_diff(qspinor_to_dirac(dirac_to_qspinor_components(d)), d),
               0.0);
      r.record("norm_transport", detail::rel_err(dirac_ideal_norm(m), d.norm2()), 1e-12);
      r.record("qspinor_image", max_abs_diff(image(q), dirac_real_factor(d) *
                                                           idempotent_q(AlgebraTag::spacetime13)),
               1e-12);
    }
  }});

  return s;
}

/// Runs every suite; `tol` rescales each declared tolerance by tol / 1e-12.
inline RunReport run_verify(std::uint64_t seed, int cases, double tol = default_tolerance) {
  if (cases < 1)
    throw Error(Errc::domain_violation, "cases must be >= 1");
  RunReport report{seed, cases, tol, {}};
  const double scale = tol / default_tolerance;
  std::vector<std::future<SuiteReport>> jobs;
  for (const Suite &suite : verify_suites()) {
    jobs.push_back(std::async(std::launch::async, [suite, seed, cases, scale] {
      SuiteReport out;
      out.name = suite.name;
      out.seed = detail::splitmix(seed ^ detail::fnv1a(suite.name));
      out.cases = cases;
      Sampler rng(out.seed);
      Recorder rec(scale);
      try {
        suite.run(rng, cases, rec);
      } catch (const std::exception &e) {
        out.error = e.what();
      }
      out.properties = rec.take();
      return out;
    }));
  }
  for (auto &j : jobs)
    report.suites.push_back(j.get());
  std::sort(report.suites.begin(), report.suites.end(),
            [](const SuiteReport &a, const SuiteReport &b) { return a.name < b.name; });
  return report;
}

inline std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

/// key=value lines, one block per suite separated by blank lines.
inline std::string format_report(const RunReport &report) {
  std::string out;
  const auto kv = [&](const std::string &k, const std::string &v) { out += k + "=" + v + "\n"; };
  kv("report", "verify");
  kv("seed", std::to_string(report.seed));
  kv("cases", std::to_string(report.cases));
  kv("tol", format_number(report.tol));
  kv("suites", std::to_string(report.suites.size()));
  out += "\n";
  int failed = 0;
  for (const SuiteReport &s : report.suites) {
    kv("suite", s.name);
    kv("suite.seed", std::to_string(s.seed));
    kv("suite.cases", std::to_string(s.cases));
    for (const PropertyResult &p : s.properties) {
      const std::string k = "property." + p.name;
      kv(k + ".residual", format_number(p.residual));
      kv(k + ".tolerance", format_number(p.tolerance));
      kv(k + ".status", p.passed() ? "pass" : "fail");
    }
    if (!s.error.empty())
      kv("suite.error", s.error);
    kv("suite.status", s.passed() ? "pass" : "fail");
    out += "\n";
    failed += s.passed() ? 0 : 1;
  }
  kv("summary.failed", std::to_string(failed));
  kv("status", report.passed() ? "pass" : "fail");
  return out;
}

} // namespace quatspin
