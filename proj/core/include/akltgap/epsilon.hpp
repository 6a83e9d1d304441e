#pragma once

#include "akltgap/spectra.hpp"

namespace akltgap {

/// Thin-SVD factor of a patch state: W has orthonormal columns and WW^T is
/// the projector onto ker h of the patch (the frustration-free ground space).
struct IsometryFactor {
  Matrix w;
  Vector singular_values;
  Region region = Region::Yv;
};

IsometryFactor ground_isometry(const PatchStateTensor& state,
                               double svd_rel_tol = 1e-10);

struct EpsilonOptions {
  double kernel_tol = 1e-8;
  std::int64_t dense_cap = 4000;        // dense diagonalization limit
  std::int64_t phys_dim_cap = 100'000'000;
  double svd_rel_tol = 1e-10;
};

/// Ground projectors of Y_v and Y_w compressed onto the reduced space
/// H'' = (A-support) (x) chain (x) (B-support):
///   E'' = (g_e g_e^T) (x) 1,   F'' = 1 (x) (g_f g_f^T).
/// g_e spans the A-compressed Y_v ground space on (rank_a * 3^n), g_f the
/// B-compressed Y_w ground space on (3^n * rank_b); both have orthonormal
/// columns, which is exactly the idempotence of E'' and F''.
struct ReducedProjectors {
  LatticeFamily family;
  Matrix g_e;
  Matrix g_f;
  Index rank_a = 0;
  Index rank_b = 0;
  Index chain_dim = 0;
  std::int64_t reduced_dim() const { return rank_a * chain_dim * rank_b; }
};

ReducedProjectors reduced_projectors(const LatticeFamily& family,
                                     const EpsilonOptions& opts = {});

struct EpsilonResult {
  LatticeFamily family;
  double epsilon = 0.0;
  double lambda_min_nonzero = 0.0;  // 1 - epsilon
  std::int64_t kernel_dim = 0;      // of E''+F'' (resp. E+F)
  std::int64_t reduced_dim = 0;     // dimension of the diagonalized space
  double spectral_margin = 0.0;     // min retained - largest discarded
  double spectrum_max = 0.0;        // largest eigenvalue, must be <= 2 + tol
  bool margin_ambiguous = false;    // eigenvalues close to kernel_tol
  std::string method;  // dense-eig | gram-eig | fullspace-dense | fullspace-gram
  double kernel_tol = 0.0;
};

/// epsilon_n = 1 - (least nontrivial eigenvalue of E''+F''), computed
/// densely for reduced dimensions within dense_cap and through the Gram
/// spectrum of M = [G_E G_F] above it.
EpsilonResult epsilon_n(const LatticeFamily& family,
                        const EpsilonOptions& opts = {});

/// Oracle: the same least nontrivial eigenvalue from E+F on the full
/// two-vertex union, with no support compression. Dense within dense_cap,
/// otherwise through the exact Gram spectrum of [W_E (x) 1 | 1 (x) W_F].
EpsilonResult epsilon_n_fullspace(const LatticeFamily& family,
                                  const EpsilonOptions& opts = {});

}  // namespace akltgap
