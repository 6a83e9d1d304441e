// Command-line front end: tabulate analytic bounds, compute epsilon_n and
// local gaps, and emit gap certificates and figure-data series.
//
// Exit codes: 0 success, 2 configuration error, 3 resource cap exceeded,
// 4 computed but numerically ambiguous (margin too small).

#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>

#include "akltgap/serialize.hpp"

namespace {

using namespace akltgap;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitCap = 3;
constexpr int kExitQuality = 4;

struct FamilyArgs {
  int z = 0;
  int z_left = 0;
  int z_right = 0;

  LatticeFamily family(int n) const {
    LatticeFamily f;
    if (z != 0) {
      if (z_left != 0 || z_right != 0)
        throw CLI::ValidationError("--z cannot be combined with --z-left/--z-right");
      f = LatticeFamily::uniform(z, n);
    } else {
      if (z_left == 0 || z_right == 0)
        throw CLI::ValidationError("specify either --z or both --z-left and --z-right");
      f = LatticeFamily::mixed(z_left, z_right, n);
    }
    f.validate();
    return f;
  }
};

void add_family_options(CLI::App* cmd, FamilyArgs& fam) {
  cmd->add_option("--z", fam.z, "uniform vertex degree (3, 4, or 6)");
  cmd->add_option("--z-left", fam.z_left, "left vertex degree");
  cmd->add_option("--z-right", fam.z_right, "right vertex degree");
}

std::pair<int, int> parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = std::stoi(text);
    return {n, n};
  }
  const int lo = std::stoi(text.substr(0, dots));
  const int hi = std::stoi(text.substr(dots + 2));
  if (lo < 1 || hi < lo) throw CLI::ValidationError("invalid --n range");
  return {lo, hi};
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw CLI::ValidationError("cannot open output file " + out_path);
  os << payload;
}

void maybe_dump_patch(const LatticeFamily& family, const std::string& path) {
  if (path.empty()) return;
  emit(to_json(build_patch(family, Region::Yv)), path);
}

template <typename F>
std::vector<std::invoke_result_t<F, int>> sweep(int n_lo, int n_hi, int jobs, F f) {
  using R = std::invoke_result_t<F, int>;
  std::vector<R> out(n_hi - n_lo + 1);
  if (jobs <= 1) {
    for (int n = n_lo; n <= n_hi; ++n) out[n - n_lo] = f(n);
    return out;
  }
  std::atomic<int> next{n_lo};
  auto worker = [&]() {
    for (;;) {
      const int n = next.fetch_add(1);
      if (n > n_hi) return;
      out[n - n_lo] = f(n);
    }
  };
  std::vector<std::future<void>> pool;
  for (int j = 0; j < jobs; ++j)
    pool.push_back(std::async(std::launch::async, worker));
  for (auto& fut : pool) fut.get();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral-gap certification for AKLT models on decorated lattices"};
  app.require_subcommand(1);

  FamilyArgs fam_bounds, fam_eps, fam_cert, fam_gap;
  std::string n_text = "1";
  int n_single = 1;
  std::string out_path;
  std::string format = "csv";
  std::string dump_patch_path;
  std::string scheme_text = "hprime";
  int jobs = 1;
  bool oracle = false;
  bool legacy = false;
  int figure = 7;
  int fig_n_min = 1, fig_n_max = 8;
  double kernel_tol = 1e-8;
  double svd_tol = 1e-10;
  std::int64_t dense_cap = 4000;
  std::int64_t phys_cap = 100'000'000;

  auto* bounds_cmd =
      app.add_subcommand("bounds", "analytic b/d coefficients over an n range");
  add_family_options(bounds_cmd, fam_bounds);
  bounds_cmd->add_option("--n", n_text, "n or range lo..hi")->required();
  bounds_cmd->add_option("--format", format, "csv or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  bounds_cmd->add_option("--out", out_path, "output path (default stdout)");
  bounds_cmd->add_option("--jobs", jobs, "parallel sweep width")->capture_default_str();

  auto* eps_cmd = app.add_subcommand("epsilon", "exact epsilon_n");
  add_family_options(eps_cmd, fam_eps);
  eps_cmd->add_option("--n", n_single, "decoration count")->required();
  eps_cmd->add_flag("--oracle", oracle, "full-union-space computation");
  eps_cmd->add_option("--kernel-tol", kernel_tol, "kernel classification tolerance")->capture_default_str();
  eps_cmd->add_option("--svd-tol", svd_tol, "relative SVD rank tolerance")->capture_default_str();
  eps_cmd->add_option("--dense-cap", dense_cap, "dense diagonalization limit")->capture_default_str();
  eps_cmd->add_option("--phys-cap", phys_cap, "physical dimension cap")->capture_default_str();
  eps_cmd->add_option("--out", out_path, "output path (default stdout)");
  eps_cmd->add_option("--dump-patch", dump_patch_path, "write the Yv patch JSON here");

  auto* cert_cmd =
      app.add_subcommand("certify", "gap certificate gamma = Delta_Y (1 - z eps)");
  add_family_options(cert_cmd, fam_cert);
  cert_cmd->add_option("--n", n_single, "decoration count")->required();
  bool analytic = false;
  cert_cmd->add_flag("--legacy", legacy,
                     "also compute gamma_Y of h_v and the (gamma_Y/2)(1-z eps) bound");
  cert_cmd->add_flag("--analytic", analytic,
                     "use the analytic bound d(n) in place of the numeric epsilon");
  cert_cmd->add_option("--kernel-tol", kernel_tol, "kernel classification tolerance")->capture_default_str();
  cert_cmd->add_option("--dense-cap", dense_cap, "dense diagonalization limit")->capture_default_str();
  cert_cmd->add_option("--phys-cap", phys_cap, "physical dimension cap")->capture_default_str();
  cert_cmd->add_option("--jobs", jobs, "parallel sector solves")->capture_default_str();
  cert_cmd->add_option("--out", out_path, "output path (default stdout)");
  cert_cmd->add_option("--dump-patch", dump_patch_path, "write the Yv patch JSON here");

  auto* gap_cmd = app.add_subcommand("localgap", "local gap of h_v or h'_{Y;v}");
  add_family_options(gap_cmd, fam_gap);
  gap_cmd->add_option("--n", n_single, "decoration count")->required();
  gap_cmd->add_option("--scheme", scheme_text, "hv or hprime")
      ->capture_default_str()
      ->check(CLI::IsMember({"hv", "hprime"}));
  gap_cmd->add_option("--kernel-tol", kernel_tol, "kernel classification tolerance")->capture_default_str();
  gap_cmd->add_option("--dense-cap", dense_cap, "dense diagonalization limit")->capture_default_str();
  gap_cmd->add_option("--jobs", jobs, "parallel sector solves")->capture_default_str();
  gap_cmd->add_option("--out", out_path, "output path (default stdout)");
  gap_cmd->add_option("--dump-patch", dump_patch_path, "write the patch JSON here");

  auto* fig_cmd = app.add_subcommand("figdata", "figure data series as CSV");
  fig_cmd->add_option("--figure", figure, "4, 5, 6, or 7")->required();
  fig_cmd->add_option("--n-min", fig_n_min, "first n")->capture_default_str();
  fig_cmd->add_option("--n-max", fig_n_max, "last n")->capture_default_str();
  fig_cmd->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);

    if (bounds_cmd->parsed()) {
      const auto [lo, hi] = parse_n_range(n_text);
      const auto reports = sweep(lo, hi, jobs, [&](int n) {
        return bound_report(fam_bounds.family(n));
      });
      if (format == "csv") {
        emit(bounds_csv(reports), out_path);
      } else {
        std::string payload;
        for (const auto& r : reports) payload += to_json(r);
        emit(payload, out_path);
      }
      return kExitOk;
    }

    if (eps_cmd->parsed()) {
      const LatticeFamily family = fam_eps.family(n_single);
      maybe_dump_patch(family, dump_patch_path);
      EpsilonOptions opts;
      opts.kernel_tol = kernel_tol;
      opts.svd_rel_tol = svd_tol;
      opts.dense_cap = dense_cap;
      opts.phys_dim_cap = phys_cap;
      const EpsilonResult r =
          oracle ? epsilon_n_fullspace(family, opts) : epsilon_n(family, opts);
      emit(to_json(r), out_path);
      return r.margin_ambiguous ? kExitQuality : kExitOk;
    }

    if (cert_cmd->parsed()) {
      const LatticeFamily family = fam_cert.family(n_single);
      maybe_dump_patch(family, dump_patch_path);
      double epsilon_value = 0.0;
      std::string epsilon_method;
      bool shaky = false;
      if (analytic) {
        const auto d = d_bound(family);
        if (!d) {
          std::cerr << "analytic bound undefined: "
                    << bound_report(family).d_undefined_reason << "\n";
          return kExitConfig;
        }
        epsilon_value = std::min(*d, 1.0);  // epsilon <= d and epsilon < 1
        epsilon_method = "analytic-d";
      } else {
        EpsilonOptions eopts;
        eopts.kernel_tol = kernel_tol;
        eopts.dense_cap = dense_cap;
        eopts.phys_dim_cap = phys_cap;
        const EpsilonResult eps = epsilon_n(family, eopts);
        epsilon_value = eps.epsilon;
        epsilon_method = eps.method;
        shaky = eps.margin_ambiguous;
      }

      SpectraOptions sopts;
      sopts.kernel_tol = kernel_tol;
      sopts.dense_cap = dense_cap;
      sopts.dim_cap = phys_cap;
      sopts.jobs = jobs;
      sopts.target = SpectralTarget::MinNonzero;
      // a mixed lattice has two vertex types; the certificate needs the
      // smaller of their local gaps
      std::vector<Patch> patches = {build_patch(family, Region::Yv)};
      if (!family.symmetric()) patches.push_back(build_patch(family, Region::Yw));
      double delta_min = 0.0;
      bool delta_shaky = false;
      std::optional<double> gamma_y;
      for (const Patch& patch : patches) {
        const auto summary = spectral_summary(
            assemble_hamiltonian(patch, WeightScheme::HPrime), sopts);
        if (delta_min == 0.0 || summary.lambda_min_nonzero < delta_min)
          delta_min = summary.lambda_min_nonzero;
        delta_shaky |= summary.ambiguous_kernel_edge;
        if (legacy) {
          const auto hv = spectral_summary(
              assemble_hamiltonian(patch, WeightScheme::HV), sopts);
          if (!gamma_y || hv.lambda_min_nonzero < *gamma_y)
            gamma_y = hv.lambda_min_nonzero;
        }
      }
      const GapCertificate cert = gap_certificate(family, epsilon_value,
                                                  delta_min, gamma_y,
                                                  epsilon_method);
      emit(to_json(cert), out_path);
      return (shaky || delta_shaky) ? kExitQuality : kExitOk;
    }

    if (gap_cmd->parsed()) {
      const LatticeFamily family = fam_gap.family(n_single);
      const Patch patch = build_patch(family, Region::Yv);
      if (!dump_patch_path.empty()) emit(to_json(patch), dump_patch_path);
      const WeightScheme scheme =
          scheme_text == "hv" ? WeightScheme::HV : WeightScheme::HPrime;
      SpectraOptions sopts;
      sopts.kernel_tol = kernel_tol;
      sopts.dense_cap = dense_cap;
      sopts.jobs = jobs;
      const auto h = assemble_hamiltonian(patch, scheme);
      const SpectralSummary summary = spectral_summary(h, sopts);
      emit(to_json(summary, family, scheme), out_path);
      return summary.ambiguous_kernel_edge ? kExitQuality : kExitOk;
    }

    if (fig_cmd->parsed()) {
      emit(series_csv(figure_series(figure, fig_n_min, fig_n_max)), out_path);
      return kExitOk;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  } catch (const CapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitConfig;
}
