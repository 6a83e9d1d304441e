#pragma once

#include <optional>

#include "akltgap/channel.hpp"

namespace akltgap {

/// Channel norms and minimum eigenvalues entering the b-coefficients.
/// Evaluated from the superoperator matrices; for degrees 3 and 4 the
/// closed forms are evaluated as well and any disagreement beyond 1e-12
/// is an internal error.
struct ChannelScalars {
  double a = 0.0;        // 3^{-n}
  double norm_el = 0.0;  // ||E_L|| for z_left
  double norm_er = 0.0;  // ||E_R|| for z_right (= ||E_L|| of that degree)
  double q_l = 0.0;
  double q_r = 0.0;
  bool closed_form_checked = false;
};

ChannelScalars channel_scalars(const LatticeFamily& family);

/// Closed forms where the analysis provides them (degrees 3 and 4).
std::optional<double> closed_form_norm_el(int z, int n);
std::optional<double> closed_form_q_l(int z, int n);

struct BoundReport {
  LatticeFamily family;
  double a = 0.0;
  double b_l = 0.0;
  double b_r = 0.0;
  double b_lr = 0.0;
  double b_g = 0.0;
  std::optional<double> d;        // upper bound on epsilon_n when applicable
  std::string d_undefined_reason; // set when !d
  bool injective_l = false;
  bool injective_r = false;
  bool injective_g = false;
  double threshold = 0.0;         // 1/z_max
  bool certified_by_d = false;
  std::string method;             // "closed-form+matrix" or "matrix"
};

BoundReport bound_report(const LatticeFamily& family);

/// (1-b_L, 1-b_R, 1-b_G); positive entries certify injectivity of the
/// corresponding boundary-to-bulk maps.
std::array<double, 3> injectivity_indicators(const LatticeFamily& family);

std::optional<double> d_bound(const LatticeFamily& family);

struct GapCertificate {
  LatticeFamily family;
  double epsilon = 0.0;
  double delta_y = 0.0;
  double gamma = 0.0;   // delta_y * (1 - z_max * epsilon)
  bool certified = false;
  std::optional<double> gamma_y;       // smallest nonzero eigenvalue of h_v
  std::optional<double> legacy_gamma;  // (gamma_y/2) * (1 - z_max * epsilon)
  std::string epsilon_method;
};

/// Combines a numerically computed epsilon with the local gap Delta_Y.
/// epsilon must lie in [0, 1].
GapCertificate gap_certificate(const LatticeFamily& family, double epsilon,
                               double delta_y,
                               std::optional<double> gamma_y = std::nullopt,
                               const std::string& epsilon_method = "");

/// Data series behind the published figures:
/// 4: 1-b_L (degree 4), 5: 1-b_G (degree 4),
/// 6: d_mix - 1/4 (degrees 3&4), 7: d - 1/4 (degree 4).
/// Entries without a defined value are omitted.
std::vector<std::pair<int, double>> figure_series(int figure, int n_min,
                                                  int n_max);

}  // namespace akltgap
