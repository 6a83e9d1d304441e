#include "akltgap/bounds.hpp"

#include <cmath>

namespace akltgap {

std::optional<double> closed_form_norm_el(int z, int n) {
  const double p = std::pow(3.0, -2.0 * n);
  if (z == 3) return 1.0 + p / 3.0;
  if (z == 4) return 5.0 / 8.0 * (1.0 + p);
  return std::nullopt;
}

std::optional<double> closed_form_q_l(int z, int n) {
  const double p = std::pow(3.0, -2.0 * n);
  if (z == 3) return 1.0 - p;
  if (z == 4) return 5.0 / 8.0 * (1.0 - p);
  return std::nullopt;
}

ChannelScalars channel_scalars(const LatticeFamily& family) {
  family.validate();
  const int n = family.n;
  ChannelScalars s;
  s.a = a_n(n);
  s.norm_el = channel_norm(side_channel(family.z_left, n, Side::Left));
  s.norm_er = channel_norm(side_channel(family.z_right, n, Side::Right));
  s.q_l = q_min(family.z_left, n, Side::Left);
  s.q_r = q_min(family.z_right, n, Side::Right);

  auto check = [](double got, std::optional<double> want, const char* what) {
    if (!want) return false;
    if (std::abs(got - *want) > 1e-12 * std::max(1.0, std::abs(*want)))
      throw std::logic_error(std::string("closed form disagrees with matrix value for ") + what);
    return true;
  };
  bool all = true;
  all &= check(s.norm_el, closed_form_norm_el(family.z_left, n), "||E_L||");
  all &= check(s.norm_er, closed_form_norm_el(family.z_right, n), "||E_R||");
  all &= check(s.q_l, closed_form_q_l(family.z_left, n), "q_L");
  if (auto ql_r = closed_form_q_l(family.z_right, n))
    all &= check(s.q_r, *ql_r / 2.0, "q_R");
  else
    all = false;
  const double an_closed = std::pow(3.0, -n);
  if (std::abs(s.a - an_closed) > 1e-14)
    throw std::logic_error("a(n) disagrees with 3^{-n}");
  s.closed_form_checked = all;
  return s;
}

BoundReport bound_report(const LatticeFamily& family) {
  const ChannelScalars s = channel_scalars(family);
  BoundReport r;
  r.family = family;
  r.a = s.a;
  r.b_l = 8.0 * s.a * s.norm_el / s.q_l;
  r.b_r = 4.0 * s.a * s.norm_er / s.q_r;
  r.b_lr = r.b_l + r.b_r - r.b_l * r.b_r;
  r.b_g = 4.0 * s.a * s.norm_el * s.norm_er / (s.q_l * s.q_r);
  r.injective_l = 1.0 - r.b_l > 0.0;
  r.injective_r = 1.0 - r.b_r > 0.0;
  r.injective_g = 1.0 - r.b_g > 0.0;
  r.threshold = 1.0 / family.z_max();
  r.method = s.closed_form_checked ? "closed-form+matrix" : "matrix";

  // The epsilon bound is a theorem only in the injective regime; b_LR < 1
  // can also hold vacuously with both b_L, b_R > 1, which must not be
  // reported as a valid bound.
  if (r.b_lr >= 1.0) {
    r.d_undefined_reason = "b_LR>=1";
  } else if (!r.injective_l || !r.injective_r) {
    r.d_undefined_reason = "non-injective";
    if (!r.injective_l) r.d_undefined_reason += "(b_L>=1)";
    if (!r.injective_r) r.d_undefined_reason += "(b_R>=1)";
  } else {
    const double t = 4.0 * r.a / std::sqrt(1.0 - r.b_lr);
    r.d = t + t * t * (1.0 + r.b_g);
  }
  r.certified_by_d = r.d.has_value() && *r.d < r.threshold;
  return r;
}

std::array<double, 3> injectivity_indicators(const LatticeFamily& family) {
  const BoundReport r = bound_report(family);
  return {1.0 - r.b_l, 1.0 - r.b_r, 1.0 - r.b_g};
}

std::optional<double> d_bound(const LatticeFamily& family) {
  return bound_report(family).d;
}

GapCertificate gap_certificate(const LatticeFamily& family, double epsilon,
                               double delta_y, std::optional<double> gamma_y,
                               const std::string& epsilon_method) {
  family.validate();
  if (epsilon < 0.0 || epsilon > 1.0)
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  if (delta_y <= 0.0) throw std::invalid_argument("Delta_Y must be positive");
  GapCertificate c;
  c.family = family;
  c.epsilon = epsilon;
  c.delta_y = delta_y;
  const double z = family.z_max();
  c.gamma = delta_y * (1.0 - z * epsilon);
  c.certified = c.gamma > 0.0;
  c.gamma_y = gamma_y;
  if (gamma_y) c.legacy_gamma = 0.5 * *gamma_y * (1.0 - z * epsilon);
  c.epsilon_method = epsilon_method;
  return c;
}

std::vector<std::pair<int, double>> figure_series(int figure, int n_min,
                                                  int n_max) {
  if (n_min < 1 || n_max < n_min)
    throw std::invalid_argument("invalid n range for figure series");
  std::vector<std::pair<int, double>> out;
  for (int n = n_min; n <= n_max; ++n) {
    switch (figure) {
      case 4:
        out.emplace_back(n, 1.0 - bound_report(LatticeFamily::uniform(4, n)).b_l);
        break;
      case 5:
        out.emplace_back(n, 1.0 - bound_report(LatticeFamily::uniform(4, n)).b_g);
        break;
      case 6: {
        const auto d = d_bound(LatticeFamily::mixed(3, 4, n));
        if (d) out.emplace_back(n, *d - 0.25);
        break;
      }
      case 7: {
        const auto d = d_bound(LatticeFamily::uniform(4, n));
        if (d) out.emplace_back(n, *d - 0.25);
        break;
      }
      default:
        throw std::invalid_argument("figure must be 4, 5, 6, or 7");
    }
  }
  return out;
}

}  // namespace akltgap
