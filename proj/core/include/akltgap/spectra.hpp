#pragma once

#include <Eigen/SparseCore>

#include "akltgap/tensor_network.hpp"

namespace akltgap {

struct HamiltonianTerm {
  Edge edge;         // weight included
  Matrix projector;  // coupled-spin projector on the two edge sites
};

/// Weighted sum of edge projectors on a patch, kept in term form; matrices
/// are materialized per total-Sz sector (the full operator commutes with
/// total Sz by construction).
struct SparseHamiltonian {
  Patch patch;
  WeightScheme scheme = WeightScheme::HV;
  std::vector<HamiltonianTerm> terms;
  std::int64_t dim = 0;

  double weight_sum() const;
};

SparseHamiltonian assemble_hamiltonian(const Patch& patch, WeightScheme scheme);

/// y = H x for block vectors, without materializing H.
Matrix apply_hamiltonian(const SparseHamiltonian& h, const Matrix& x);

/// Dense materialization (guarded; intended for tests and small patches).
Matrix dense_hamiltonian(const SparseHamiltonian& h, std::int64_t cap = 20000);

/// Basis indices of one total-Sz sector, ascending.
std::vector<std::int64_t> sector_basis(const Patch& patch, int twice_sz);
std::vector<int> sector_labels(const Patch& patch);  // distinct 2*Sz values, ascending

Eigen::SparseMatrix<double, Eigen::RowMajor> sector_matrix(
    const SparseHamiltonian& h, const std::vector<std::int64_t>& basis);

enum class SpectralTarget { MinNonzero, Max, Both };

struct SpectraOptions {
  double kernel_tol = 1e-8;
  std::int64_t dense_cap = 4000;   // per-sector dense diagonalization limit
  std::int64_t dim_cap = 100'000'000;
  SpectralTarget target = SpectralTarget::Both;
  int jobs = 1;
  double iter_tol = 1e-9;   // residual tolerance of the iterative solver
  int max_iterations = 5000;
  unsigned seed = 0x5eed;
};

struct SectorReport {
  int twice_sz = 0;
  std::int64_t dim = 0;
  std::int64_t kernel_dim = 0;
  bool has_min_nonzero = false;
  double min_nonzero = 0.0;
  double max_eig = 0.0;
  std::string method;   // "dense" or "iterative"
  double residual = 0.0;
};

struct SpectralSummary {
  std::int64_t dim = 0;
  std::int64_t kernel_dim = 0;
  double lambda_min_nonzero = 0.0;  // gamma_Y resp. Delta_Y
  double lambda_max = 0.0;          // ||h||
  std::string method;               // "dense", "iterative", or "dense+iterative"
  double kernel_tol = 0.0;
  double max_residual = 0.0;
  bool ambiguous_kernel_edge = false;  // an eigenvalue within 10x of kernel_tol
  std::vector<SectorReport> sectors;
};

SpectralSummary spectral_summary(const SparseHamiltonian& h,
                                 const SpectraOptions& opts = {});

/// Smallest eigenvalues of a sparse symmetric PSD operator restricted to the
/// orthogonal complement of span(deflate); returns (eigenvalue, residual).
/// Deterministic for a fixed seed. Exposed mainly for direct testing.
std::pair<double, double> lobpcg_smallest(
    const Eigen::SparseMatrix<double, Eigen::RowMajor>& a,
    const Matrix& deflate, double tol, int max_iterations, unsigned seed);

}  // namespace akltgap
