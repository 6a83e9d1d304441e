#include "akltgap/epsilon.hpp"

#include <cmath>

namespace akltgap {

namespace {

Index expected_boundary_rank(const Patch& patch) {
  return Index(1) << patch.virtual_legs.size();
}

EpsilonResult extract_from_spectrum(const Vector& eigenvalues,  // ascending
                                    const LatticeFamily& family,
                                    std::int64_t space_dim,
                                    const std::string& method,
                                    const EpsilonOptions& opts) {
  // A Gram spectrum carries zero eigenvalues that are not eigenvalues of
  // E+F, so the kernel dimension is always inferred from the count of
  // eigenvalues retained above the tolerance.
  const SpectrumSplit split = split_spectrum(eigenvalues, opts.kernel_tol);
  if (!split.has_above)
    throw std::runtime_error("E+F spectrum is entirely below the kernel tolerance");
  if (split.max > 2.0 + 1e-10)
    throw std::runtime_error("E+F spectrum exceeds 2: projector construction broken");
  if (eigenvalues(0) < -1e-10)
    throw std::runtime_error("E+F spectrum is negative: projector construction broken");

  EpsilonResult r;
  r.family = family;
  r.lambda_min_nonzero = split.min_above;
  r.epsilon = 1.0 - split.min_above;
  const std::int64_t nonzero = eigenvalues.size() - split.kernel_count;
  r.kernel_dim = space_dim - nonzero;
  r.reduced_dim = space_dim;
  r.spectral_margin = split.min_above - split.largest_below;
  r.spectrum_max = split.max;
  r.margin_ambiguous = split.min_above < 10.0 * opts.kernel_tol ||
                       split.largest_below > 0.1 * opts.kernel_tol;
  r.method = method;
  r.kernel_tol = opts.kernel_tol;
  return r;
}

/// {1 +- sigma_i} U {1 x padding}: the spectrum of [[I, X], [X^T, I]].
Vector gram_block_spectrum(const Matrix& x) {
  const Index m1 = x.rows();
  const Index m2 = x.cols();
  const Index nsig = std::min(m1, m2);
  const Matrix gram = (m1 <= m2) ? Matrix(x * x.transpose())
                                 : Matrix(x.transpose() * x);
  Vector sig2 = symmetric_eigenvalues(gram);  // ascending
  Vector out(m1 + m2);
  Index k = 0;
  for (Index i = 0; i < nsig; ++i) {
    const double s = std::sqrt(std::max(sig2(i), 0.0));
    out(k++) = 1.0 - s;
    out(k++) = 1.0 + s;
  }
  for (Index i = nsig; i < m1 + m2 - nsig; ++i) out(k++) = 1.0;
  std::sort(out.data(), out.data() + out.size());
  return out;
}

}  // namespace

IsometryFactor ground_isometry(const PatchStateTensor& state, double svd_rel_tol) {
  const auto basis = orthonormal_column_basis(state.psi, svd_rel_tol);
  if (state.patch.region != Region::Middle &&
      basis.rank != expected_boundary_rank(state.patch))
    throw std::runtime_error(
        "ground space rank " + std::to_string(basis.rank) + " != 2^{legs} on " +
        region_name(state.patch.region) + ": tensor assembly is inconsistent");
  return {basis.q, basis.singular_values, state.patch.region};
}

ReducedProjectors reduced_projectors(const LatticeFamily& family,
                                     const EpsilonOptions& opts) {
  family.validate();
  AssemblyOptions aopts;
  aopts.phys_dim_cap = opts.phys_dim_cap;
  const Matrix bond = singlet_map() / std::sqrt(2.0);

  const auto left = patch_state_tensor(
      build_patch(family, Region::YvMinusYw), aopts);
  const auto right = patch_state_tensor(
      build_patch(family, Region::YwMinusYv), aopts);
  const auto middle = patch_state_tensor(build_patch(family, Region::Middle), aopts);

  // support isometries of the two side regions
  const IsometryFactor ua = ground_isometry(left, opts.svd_rel_tol);
  const IsometryFactor ub = ground_isometry(right, opts.svd_rel_tol);
  const Matrix left_c = ua.w.transpose() * left.psi;    // rank_a x 2^{z_l}
  const Matrix right_c = ub.w.transpose() * right.psi;  // rank_b x 2^{z_r}

  ReducedProjectors red;
  red.family = family;
  red.rank_a = left_c.rows();
  red.rank_b = right_c.rows();
  red.chain_dim = middle.psi.rows();

  const int zl = family.z_left;
  const int zr = family.z_right;
  const Index ends_l = Index(1) << (zl - 1);
  const Index ends_r = Index(1) << (zr - 1);

  // compressed Y_v state on (rank_a (x) chain): legs of left_c are
  // [cut(major), branch ends]; bond v-c1 connects cut with the chain's left leg
  Matrix yv = Matrix::Zero(red.rank_a * red.chain_dim, ends_l * 2);
  for (Index l = 0; l < 2; ++l)
    for (Index lp = 0; lp < 2; ++lp) {
      const double b = bond(l, lp);
      if (b == 0.0) continue;
      Matrix chain_cols(red.chain_dim, 2);
      chain_cols.col(0) = middle.psi.col(lp * 2 + 0);
      chain_cols.col(1) = middle.psi.col(lp * 2 + 1);
      yv.noalias() += b * kron(left_c.middleCols(l * ends_l, ends_l), chain_cols);
    }

  // compressed Y_w state on (chain (x) rank_b): legs of right_c are
  // [branch ends(major), cut]; bond c_n-w connects the chain's right leg with cut
  Matrix yw = Matrix::Zero(red.chain_dim * red.rank_b, 2 * ends_r);
  for (Index r = 0; r < 2; ++r)
    for (Index rp = 0; rp < 2; ++rp) {
      const double b = bond(r, rp);
      if (b == 0.0) continue;
      Matrix chain_cols(red.chain_dim, 2);
      chain_cols.col(0) = middle.psi.col(0 * 2 + r);
      chain_cols.col(1) = middle.psi.col(1 * 2 + r);
      Matrix right_cols(red.rank_b, ends_r);
      for (Index e = 0; e < ends_r; ++e)
        right_cols.col(e) = right_c.col(e * 2 + rp);
      yw.noalias() += b * kron(chain_cols, right_cols);
    }

  const auto ge = orthonormal_column_basis(yv, opts.svd_rel_tol);
  const auto gf = orthonormal_column_basis(yw, opts.svd_rel_tol);
  red.g_e = ge.q;
  red.g_f = gf.q;

  const Index exp_e = Index(1) << zl;
  const Index exp_f = Index(1) << zr;
  const double ortho_e = (red.g_e.transpose() * red.g_e -
                          Matrix::Identity(ge.rank, ge.rank)).cwiseAbs().maxCoeff();
  const double ortho_f = (red.g_f.transpose() * red.g_f -
                          Matrix::Identity(gf.rank, gf.rank)).cwiseAbs().maxCoeff();
  if (ge.rank != exp_e || gf.rank != exp_f || ortho_e > 1e-10 || ortho_f > 1e-10)
    throw std::runtime_error(
        "reduced projectors lost idempotence: support isometry is inconsistent");
  return red;
}

EpsilonResult epsilon_n(const LatticeFamily& family, const EpsilonOptions& opts) {
  const ReducedProjectors red = reduced_projectors(family, opts);
  const std::int64_t dim = red.reduced_dim();
  const Index rank_e = red.g_e.cols();
  const Index rank_f = red.g_f.cols();

  if (dim <= opts.dense_cap) {
    const Matrix epp = kron(red.g_e * red.g_e.transpose(),
                            Matrix::Identity(red.rank_b, red.rank_b));
    const Matrix fpp = kron(Matrix::Identity(red.rank_a, red.rank_a),
                            red.g_f * red.g_f.transpose());
    const Vector ev = symmetric_eigenvalues(epp + fpp);
    return extract_from_spectrum(ev, family, dim, "dense-eig", opts);
  }

  // Gram route: the nonzero spectrum of E''+F'' equals the nonzero spectrum
  // of M^T M for M = [G_E (x) 1 | 1 (x) G_F], and M^T M = I + offdiag(X).
  Matrix x = Matrix::Zero(rank_e * red.rank_b, red.rank_a * rank_f);
  for (Index c = 0; c < red.chain_dim; ++c) {
    Matrix ge_c(red.rank_a, rank_e);
    for (Index a = 0; a < red.rank_a; ++a)
      ge_c.row(a) = red.g_e.row(a * red.chain_dim + c);
    x.noalias() += kron(Matrix(ge_c.transpose()),
                        Matrix(red.g_f.middleRows(c * red.rank_b, red.rank_b)));
  }
  const Vector ev = gram_block_spectrum(x);
  return extract_from_spectrum(ev, family, dim, "gram-eig", opts);
}

EpsilonResult epsilon_n_fullspace(const LatticeFamily& family,
                                  const EpsilonOptions& opts) {
  family.validate();
  AssemblyOptions aopts;
  aopts.phys_dim_cap = opts.phys_dim_cap;

  const Patch union_patch = build_patch(family, Region::Union);
  const std::int64_t union_dim = union_patch.dimension();

  const auto yv = patch_state_tensor(build_patch(family, Region::Yv), aopts);
  const auto yw = patch_state_tensor(build_patch(family, Region::Yw), aopts);
  const IsometryFactor we = ground_isometry(yv, opts.svd_rel_tol);
  const IsometryFactor wf = ground_isometry(yw, opts.svd_rel_tol);

  Index chain_dim = 1;
  for (int i = 0; i < family.n; ++i) chain_dim *= 3;
  const Index dim_left = yv.psi.rows() / chain_dim;   // phys dim of Yv \ Yw
  const Index dim_right = yw.psi.rows() / chain_dim;  // phys dim of Yw \ Yv

  if (union_dim <= opts.dense_cap) {
    const Matrix e = kron(we.w * we.w.transpose(),
                          Matrix::Identity(dim_right, dim_right));
    const Matrix f = kron(Matrix::Identity(dim_left, dim_left),
                          wf.w * wf.w.transpose());
    const Vector ev = symmetric_eigenvalues(e + f);
    return extract_from_spectrum(ev, family, union_dim, "fullspace-dense", opts);
  }

  // exact Gram spectrum on the union, still with the uncompressed E and F
  const Index rank_e = we.w.cols();
  const Index rank_f = wf.w.cols();
  const std::int64_t m1 = rank_e * dim_right;
  const std::int64_t m2 = dim_left * rank_f;
  if (m1 + m2 > 4 * opts.dense_cap)
    throw CapExceeded("fullspace oracle Gram dimension " + std::to_string(m1 + m2) +
                      " exceeds 4x dense cap");

  Matrix x = Matrix::Zero(m1, m2);
  for (Index c = 0; c < chain_dim; ++c) {
    Matrix we_c(dim_left, rank_e);
    for (Index l = 0; l < dim_left; ++l)
      we_c.row(l) = we.w.row(l * chain_dim + c);
    x.noalias() += kron(Matrix(we_c.transpose()),
                        Matrix(wf.w.middleRows(c * dim_right, dim_right)));
  }
  Matrix mtm(m1 + m2, m1 + m2);
  mtm << Matrix::Identity(m1, m1), x, x.transpose(), Matrix::Identity(m2, m2);
  const Vector ev = symmetric_eigenvalues(mtm);
  return extract_from_spectrum(ev, family, union_dim, "fullspace-gram", opts);
}

}  // namespace akltgap
