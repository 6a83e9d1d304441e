#include "akltgap/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <memory>
#include <random>
#include <unordered_map>

namespace akltgap {

double SparseHamiltonian::weight_sum() const {
  double s = 0.0;
  for (const auto& t : terms) s += t.edge.weight;
  return s;
}

SparseHamiltonian assemble_hamiltonian(const Patch& patch, WeightScheme scheme) {
  SparseHamiltonian h;
  h.patch = patch;
  h.scheme = scheme;
  h.dim = patch.dimension();
  for (const Edge& e : weighted_edge_set(patch, scheme)) {
    const SpinValue sa = patch.sites[e.a].spin;
    const SpinValue sb = patch.sites[e.b].spin;
    h.terms.push_back({e, coupled_spin_projector(sa, sb, e.z_e)});
  }
  return h;
}

Matrix apply_hamiltonian(const SparseHamiltonian& h, const Matrix& x) {
  const auto strides = h.patch.strides();
  Matrix y = Matrix::Zero(x.rows(), x.cols());
  for (const auto& term : h.terms) {
    const int a = term.edge.a;
    const int b = term.edge.b;
    const Index da = h.patch.sites[a].spin.dimension();
    const Index db = h.patch.sites[b].spin.dimension();
    const std::int64_t sa = strides[a];
    const std::int64_t sb = strides[b];
    const double w = term.edge.weight;
    const Matrix& p = term.projector;
    for (std::int64_t i = 0; i < h.dim; ++i) {
      const Index ia = (i / sa) % da;
      const Index ib = (i / sb) % db;
      const Index row_local = ia * db + ib;
      for (Index ja = 0; ja < da; ++ja) {
        const Index jb = ia + ib - ja;  // total Sz of the pair is conserved
        if (jb < 0 || jb >= db) continue;
        const double v = p(row_local, ja * db + jb);
        if (v == 0.0) continue;
        const std::int64_t j = i + (ja - ia) * sa + (jb - ib) * sb;
        y.row(i) += (w * v) * x.row(j);
      }
    }
  }
  return y;
}

Matrix dense_hamiltonian(const SparseHamiltonian& h, std::int64_t cap) {
  if (h.dim > cap)
    throw CapExceeded("dense Hamiltonian of dimension " + std::to_string(h.dim) +
                      " exceeds cap " + std::to_string(cap));
  return apply_hamiltonian(h, Matrix::Identity(h.dim, h.dim));
}

std::vector<int> sector_labels(const Patch& patch) {
  int total = 0;
  for (const auto& s : patch.sites) total += s.spin.twice;
  std::vector<int> labels;
  for (int m = -total; m <= total; m += 2) labels.push_back(m);
  return labels;
}

std::vector<std::int64_t> sector_basis(const Patch& patch, int twice_sz) {
  const auto strides = patch.strides();
  const std::int64_t dim = patch.dimension();
  std::vector<std::int64_t> basis;
  for (std::int64_t i = 0; i < dim; ++i) {
    int m = 0;
    for (size_t s = 0; s < patch.sites.size(); ++s) {
      const int digit = int((i / strides[s]) % patch.sites[s].spin.dimension());
      m += patch.sites[s].spin.twice - 2 * digit;
    }
    if (m == twice_sz) basis.push_back(i);
  }
  return basis;
}

Eigen::SparseMatrix<double, Eigen::RowMajor> sector_matrix(
    const SparseHamiltonian& h, const std::vector<std::int64_t>& basis) {
  const auto strides = h.patch.strides();
  std::unordered_map<std::int64_t, Index> pos;
  pos.reserve(basis.size() * 2);
  for (Index k = 0; k < Index(basis.size()); ++k) pos[basis[k]] = k;

  std::vector<Eigen::Triplet<double>> trip;
  for (const auto& term : h.terms) {
    const int a = term.edge.a;
    const int b = term.edge.b;
    const Index da = h.patch.sites[a].spin.dimension();
    const Index db = h.patch.sites[b].spin.dimension();
    const std::int64_t sa = strides[a];
    const std::int64_t sb = strides[b];
    const double w = term.edge.weight;
    const Matrix& p = term.projector;
    for (Index k = 0; k < Index(basis.size()); ++k) {
      const std::int64_t i = basis[k];
      const Index ia = (i / sa) % da;
      const Index ib = (i / sb) % db;
      for (Index ja = 0; ja < da; ++ja) {
        const Index jb = ia + ib - ja;
        if (jb < 0 || jb >= db) continue;
        const double v = p(ia * db + ib, ja * db + jb);
        if (v == 0.0) continue;
        const std::int64_t j = i + (ja - ia) * sa + (jb - ib) * sb;
        trip.emplace_back(k, pos.at(j), w * v);
      }
    }
  }
  Eigen::SparseMatrix<double, Eigen::RowMajor> m(basis.size(), basis.size());
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

namespace {

// columns of `m` projected off span(against) and orthonormalized; near-null
// directions are dropped
Matrix orthonormalize_against(const Matrix& m, const Matrix& against) {
  Matrix x = m;
  for (int pass = 0; pass < 2; ++pass)
    if (against.cols() > 0) x -= against * (against.transpose() * x);
  if (x.cols() == 0) return x;
  return orthonormal_column_basis(x, 1e-8).q;
}

struct LobpcgResult {
  double value = 0.0;
  double residual = 0.0;
  Vector vector;
};

LobpcgResult lobpcg_smallest_impl(
    const Eigen::SparseMatrix<double, Eigen::RowMajor>& a, const Matrix& deflate,
    double tol, int max_iterations, unsigned seed, double norm_scale) {
  const Index n = a.rows();
  const Index block = std::min<Index>(4, n - deflate.cols());
  if (block < 1) throw std::invalid_argument("deflation space exhausts the sector");

  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix x(n, block);
  for (Index j = 0; j < block; ++j)
    for (Index i = 0; i < n; ++i) x(i, j) = gauss(rng);
  x = orthonormalize_against(x, deflate);

  Matrix p(n, 0);
  LobpcgResult best;
  best.residual = std::numeric_limits<double>::infinity();

  for (int it = 0; it < max_iterations; ++it) {
    const Matrix ax = a * x;
    const SymmetricEig rr = symmetric_eigendecomposition(x.transpose() * ax);
    const Matrix xr = x * rr.vectors;
    const Matrix axr = ax * rr.vectors;

    Matrix r = axr - xr * rr.values.asDiagonal();
    best.value = rr.values(0);
    best.residual = r.col(0).norm();
    best.vector = xr.col(0);
    if (best.residual < tol * norm_scale) return best;

    Matrix basis(n, 0);
    auto append = [&](const Matrix& cols) {
      if (cols.cols() == 0) return;
      Matrix joined(n, basis.cols() + cols.cols());
      joined << basis, cols;
      basis = std::move(joined);
    };
    append(xr);
    append(orthonormalize_against(r, deflate));
    append(p);
    basis = orthonormalize_against(basis, deflate);

    const Matrix ab = a * basis;
    const SymmetricEig big = symmetric_eigendecomposition(basis.transpose() * ab);
    const Index keep = std::min<Index>(block, big.values.size());
    const Matrix x_new = basis * big.vectors.leftCols(keep);
    Matrix pc = x_new - xr * (xr.transpose() * x_new);
    p = orthonormalize_against(pc, deflate);
    if (p.cols() > block) p = p.leftCols(block);
    x = x_new;
  }
  return best;
}

}  // namespace

std::pair<double, double> lobpcg_smallest(
    const Eigen::SparseMatrix<double, Eigen::RowMajor>& a, const Matrix& deflate,
    double tol, int max_iterations, unsigned seed) {
  const auto r = lobpcg_smallest_impl(a, deflate, tol, max_iterations, seed, 1.0);
  return {r.value, r.residual};
}

namespace {

struct SectorTask {
  int twice_sz = 0;
  std::vector<std::int64_t> basis;
};

SectorReport solve_sector(const SparseHamiltonian& h, const SectorTask& task,
                          const Matrix* psi, const SpectraOptions& opts) {
  SectorReport rep;
  rep.twice_sz = task.twice_sz;
  rep.dim = Index(task.basis.size());
  if (rep.dim == 0) return rep;

  if (rep.dim <= opts.dense_cap) {
    rep.method = "dense";
    const Vector ev = symmetric_eigenvalues(Matrix(sector_matrix(h, task.basis)));
    const SpectrumSplit split = split_spectrum(ev, opts.kernel_tol);
    rep.kernel_dim = split.kernel_count;
    rep.has_min_nonzero = split.has_above;
    rep.min_nonzero = split.min_above;
    rep.max_eig = split.max;
    return rep;
  }

  rep.method = "iterative";
  const auto m = sector_matrix(h, task.basis);
  const double scale = std::max(1.0, h.weight_sum());

  // kernel basis: restrict the ground-state tensor to this sector when
  // available (frustration-freeness supplies the kernel for free); any kernel
  // vector the restriction missed is discovered below and deflated
  Matrix kernel(rep.dim, 0);
  if (psi) {
    Matrix restricted(rep.dim, psi->cols());
    for (Index k = 0; k < rep.dim; ++k)
      restricted.row(k) = psi->row(task.basis[k]);
    kernel = orthonormal_column_basis(restricted, 1e-8).q;
    if (kernel.cols() > 0)
      rep.residual = std::max(rep.residual, (m * kernel).norm());
  }

  const unsigned seed = opts.seed + unsigned(task.twice_sz + 4096);
  if (opts.target != SpectralTarget::Max) {
    for (int round = 0; round < 64; ++round) {
      const auto r = lobpcg_smallest_impl(m, kernel, opts.iter_tol,
                                          opts.max_iterations, seed + round, scale);
      rep.residual = std::max(rep.residual, r.residual);
      if (r.value >= opts.kernel_tol) {
        rep.has_min_nonzero = true;
        rep.min_nonzero = r.value;
        break;
      }
      Matrix grown(rep.dim, kernel.cols() + 1);
      grown << kernel, r.vector;
      kernel = orthonormalize_against(grown, Matrix(rep.dim, 0));
    }
  }
  rep.kernel_dim = kernel.cols();

  if (opts.target != SpectralTarget::MinNonzero) {
    // ||h|| <= sum of weights since every term is a weighted projector, so
    // shift - H is PSD and its smallest eigenvalue yields the largest of H
    const double shift = h.weight_sum();
    Eigen::SparseMatrix<double, Eigen::RowMajor> neg = -m;
    for (Index i = 0; i < rep.dim; ++i) neg.coeffRef(i, i) += shift;
    const auto r = lobpcg_smallest_impl(neg, Matrix(rep.dim, 0), opts.iter_tol,
                                        opts.max_iterations, seed + 17, scale);
    rep.max_eig = shift - r.value;
    rep.residual = std::max(rep.residual, r.residual);
  }
  return rep;
}

}  // namespace

SpectralSummary spectral_summary(const SparseHamiltonian& h,
                                 const SpectraOptions& opts) {
  if (h.dim > opts.dim_cap)
    throw CapExceeded("patch dimension " + std::to_string(h.dim) +
                      " exceeds spectra cap; raise the cap or reduce n");

  std::vector<SectorTask> tasks;
  bool need_iterative = false;
  for (const int m : sector_labels(h.patch)) {
    SectorTask t{m, sector_basis(h.patch, m)};
    if (Index(t.basis.size()) > opts.dense_cap) need_iterative = true;
    if (!t.basis.empty()) tasks.push_back(std::move(t));
  }

  // ground-state tensor for kernel deflation (vertex-centered patches only)
  std::unique_ptr<PatchStateTensor> psi;
  if (need_iterative && h.patch.central_vertex() >= 0) {
    AssemblyOptions aopts;
    aopts.phys_dim_cap = opts.dim_cap;
    psi = std::make_unique<PatchStateTensor>(patch_state_tensor(h.patch, aopts));
  }

  std::vector<SectorReport> reports(tasks.size());
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < tasks.size(); ++i)
      reports[i] = solve_sector(h, tasks[i], psi ? &psi->psi : nullptr, opts);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        reports[i] = solve_sector(h, tasks[i], psi ? &psi->psi : nullptr, opts);
      }
    };
    std::vector<std::future<void>> pool;
    for (int j = 0; j < jobs; ++j)
      pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
  }

  SpectralSummary out;
  out.dim = h.dim;
  out.kernel_tol = opts.kernel_tol;
  bool any_dense = false, any_iter = false;
  bool have_min = false;
  for (const auto& r : reports) {
    out.kernel_dim += r.kernel_dim;
    if (r.has_min_nonzero && (!have_min || r.min_nonzero < out.lambda_min_nonzero)) {
      out.lambda_min_nonzero = r.min_nonzero;
      have_min = true;
    }
    out.lambda_max = std::max(out.lambda_max, r.max_eig);
    out.max_residual = std::max(out.max_residual, r.residual);
    if (r.method.rfind("dense", 0) == 0)
      any_dense = true;
    else if (!r.method.empty())
      any_iter = true;
    if (r.has_min_nonzero && r.min_nonzero < 10.0 * opts.kernel_tol)
      out.ambiguous_kernel_edge = true;
  }
  out.method = any_dense && any_iter ? "dense+iterative"
                                     : (any_iter ? "iterative" : "dense");
  out.sectors = std::move(reports);
  return out;
}

}  // namespace akltgap
