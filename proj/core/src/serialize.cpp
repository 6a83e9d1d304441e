#include "akltgap/serialize.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace akltgap {

namespace {

using json = nlohmann::ordered_json;

json family_json(const LatticeFamily& f) {
  return json{{"z_left", f.z_left}, {"z_right", f.z_right}, {"n", f.n}};
}

std::string spin_label(const SpinValue& s) {
  if (s.twice % 2 == 0) return std::to_string(s.twice / 2);
  return std::to_string(s.twice) + "/2";
}

std::string role_name(SiteRole role) {
  switch (role) {
    case SiteRole::LeftVertex: return "left-vertex";
    case SiteRole::RightVertex: return "right-vertex";
    case SiteRole::SharedChain: return "chain";
    case SiteRole::Branch: return "branch";
  }
  return "?";
}

std::string csv_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string to_json(const Patch& patch) {
  json j;
  j["schema"] = 1;
  j["type"] = "patch";
  j["family"] = family_json(patch.family);
  j["region"] = region_name(patch.region);
  j["dimension"] = patch.dimension();
  j["sites"] = json::array();
  for (const auto& s : patch.sites)
    j["sites"].push_back(json{{"id", s.id},
                              {"spin", spin_label(s.spin)},
                              {"twice_spin", s.spin.twice},
                              {"role", role_name(s.role)},
                              {"chain", s.chain},
                              {"position", s.position}});
  j["edges"] = json::array();
  for (const auto& e : patch.edges)
    j["edges"].push_back(
        json{{"a", e.a}, {"b", e.b}, {"z_e", e.z_e}, {"weight", e.weight}});
  j["virtual_legs"] = json::array();
  for (const auto& l : patch.virtual_legs)
    j["virtual_legs"].push_back(json{{"site", l.site}, {"label", l.label}});
  return j.dump(2) + "\n";
}

std::string to_json(const BoundReport& r) {
  json j;
  j["schema"] = 1;
  j["type"] = "bounds";
  j["family"] = family_json(r.family);
  j["n"] = r.family.n;
  j["a"] = r.a;
  j["b_L"] = r.b_l;
  j["b_R"] = r.b_r;
  j["b_LR"] = r.b_lr;
  j["b_G"] = r.b_g;
  j["one_minus_b_L"] = 1.0 - r.b_l;
  j["one_minus_b_R"] = 1.0 - r.b_r;
  j["one_minus_b_G"] = 1.0 - r.b_g;
  if (r.d)
    j["d"] = *r.d;
  else {
    j["d"] = nullptr;
    j["d_undefined_reason"] = r.d_undefined_reason;
  }
  j["threshold"] = r.threshold;
  j["certified_by_d"] = r.certified_by_d;
  j["injective_L"] = r.injective_l;
  j["injective_R"] = r.injective_r;
  j["injective_G"] = r.injective_g;
  j["method"] = r.method;
  return j.dump(2) + "\n";
}

std::string to_json(const EpsilonResult& r) {
  json j;
  j["schema"] = 1;
  j["type"] = "epsilon";
  j["family"] = family_json(r.family);
  j["n"] = r.family.n;
  j["epsilon"] = r.epsilon;
  j["lambda_min_nonzero"] = r.lambda_min_nonzero;
  j["kernel_dim"] = r.kernel_dim;
  j["reduced_dim"] = r.reduced_dim;
  j["spectral_margin"] = r.spectral_margin;
  j["spectrum_max"] = r.spectrum_max;
  j["margin_ambiguous"] = r.margin_ambiguous;
  j["method"] = r.method;
  j["kernel_tol"] = r.kernel_tol;
  return j.dump(2) + "\n";
}

std::string to_json(const SpectralSummary& s, const LatticeFamily& family,
                    WeightScheme scheme) {
  json j;
  j["schema"] = 1;
  j["type"] = "localgap";
  j["family"] = family_json(family);
  j["n"] = family.n;
  j["scheme"] = scheme_name(scheme);
  j["dim"] = s.dim;
  j["kernel_dim"] = s.kernel_dim;
  j["delta"] = s.lambda_min_nonzero;
  j["norm"] = s.lambda_max;
  j["method"] = s.method;
  j["kernel_tol"] = s.kernel_tol;
  j["max_residual"] = s.max_residual;
  j["ambiguous_kernel_edge"] = s.ambiguous_kernel_edge;
  j["sectors"] = json::array();
  for (const auto& sec : s.sectors) {
    json js{{"twice_sz", sec.twice_sz},
            {"dim", sec.dim},
            {"kernel_dim", sec.kernel_dim},
            {"max_eig", sec.max_eig},
            {"method", sec.method},
            {"residual", sec.residual}};
    if (sec.has_min_nonzero)
      js["min_nonzero"] = sec.min_nonzero;
    else
      js["min_nonzero"] = nullptr;
    j["sectors"].push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

std::string to_json(const GapCertificate& c) {
  json j;
  j["schema"] = 1;
  j["type"] = "certificate";
  j["family"] = family_json(c.family);
  j["n"] = c.family.n;
  j["epsilon"] = c.epsilon;
  j["delta_Y"] = c.delta_y;
  j["gamma"] = c.gamma;
  j["certified"] = c.certified;
  j["epsilon_threshold"] = 1.0 / c.family.z_max();
  if (c.gamma_y) j["gamma_Y"] = *c.gamma_y;
  if (c.legacy_gamma) j["legacy_gamma"] = *c.legacy_gamma;
  j["epsilon_method"] = c.epsilon_method;
  return j.dump(2) + "\n";
}

std::string bounds_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  os << "n,a,b_L,b_R,b_LR,b_G,one_minus_bL,one_minus_bG,d,d_minus_threshold,"
        "certified\n";
  for (const auto& r : reports) {
    os << r.family.n << ',' << csv_double(r.a) << ',' << csv_double(r.b_l) << ','
       << csv_double(r.b_r) << ',' << csv_double(r.b_lr) << ','
       << csv_double(r.b_g) << ',' << csv_double(1.0 - r.b_l) << ','
       << csv_double(1.0 - r.b_g) << ',';
    if (r.d)
      os << csv_double(*r.d) << ',' << csv_double(*r.d - r.threshold);
    else
      os << "undefined(" << r.d_undefined_reason << "),undefined("
         << r.d_undefined_reason << ")";
    os << ',' << (r.certified_by_d ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string series_csv(const std::vector<std::pair<int, double>>& series) {
  std::ostringstream os;
  os << "n,value\n";
  for (const auto& [n, v] : series) os << n << ',' << csv_double(v) << '\n';
  return os.str();
}

}  // namespace akltgap
