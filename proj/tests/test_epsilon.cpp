#include <doctest.h>

#include <random>

#include "akltgap/bounds.hpp"
#include "akltgap/epsilon.hpp"

using namespace akltgap;

namespace {

Matrix random_orthonormal(Index dim, Index cols, std::mt19937& rng) {
  std::normal_distribution<double> g;
  Matrix m(dim, cols);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = g(rng);
  return orthonormal_column_basis(m).q;
}

struct ProjectorPair {
  Matrix e, f, meet;  // meet = projector onto range(E) ^ range(F)
};

// E and F share a subspace of dimension `shared` by construction; all other
// directions are independent random, so generically the intersection is
// exactly the shared block.
ProjectorPair random_projector_pair(Index dim, Index shared, Index extra_e,
                                    Index extra_f, std::mt19937& rng) {
  const Matrix basis = random_orthonormal(dim, shared + extra_e + extra_f, rng);
  const Matrix qs = basis.leftCols(shared);
  Matrix qe(dim, shared + extra_e);
  qe << qs, basis.middleCols(shared, extra_e);
  Matrix qf_raw(dim, shared + extra_f);
  // rotate F's extra directions so they are not orthogonal to E's
  std::normal_distribution<double> g;
  Matrix mix(dim, extra_f);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < extra_f; ++j)
      mix(i, j) = basis(i, shared + extra_e + j) + 0.3 * g(rng);
  qf_raw << qs, mix;
  const Matrix qf = orthonormal_column_basis(qf_raw).q;
  return {qe * qe.transpose(), qf * qf.transpose(), qs * qs.transpose()};
}

// || EF - (E ^ F) || via SVD: the independent route of the eigenvalue rule
double direct_epsilon(const ProjectorPair& p) {
  Eigen::JacobiSVD<Matrix> svd(p.e * p.f - p.meet);
  return svd.singularValues()(0);
}

double eigenvalue_epsilon(const ProjectorPair& p, double tol = 1e-8) {
  const Vector ev = symmetric_eigenvalues(p.e + p.f);
  for (Index i = 0; i < ev.size(); ++i)
    if (ev(i) >= tol) return 1.0 - ev(i);
  return 1.0;
}

}  // namespace

TEST_CASE("ground isometry of small patches") {
  const auto state = patch_state_tensor(
      build_patch(LatticeFamily::uniform(3, 1), Region::Yv));
  const auto iso = ground_isometry(state);
  CHECK(iso.w.rows() == 108);
  CHECK(iso.w.cols() == 8);
  CHECK((iso.w.transpose() * iso.w - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() <
        1e-13);
  // the columns span ker h_v
  const auto h = assemble_hamiltonian(state.patch, WeightScheme::HV);
  CHECK(apply_hamiltonian(h, iso.w).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(iso.singular_values.size() == 8);
}

TEST_CASE("least nontrivial eigenvalue of E+F equals ||EF - E^F||") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<Index> dim_dist(8, 40);
  int done = 0;
  while (done < 40) {
    const Index dim = dim_dist(rng);
    std::uniform_int_distribution<Index> shared_dist(0, 2);
    const Index shared = shared_dist(rng);
    std::uniform_int_distribution<Index> extra_dist(1, dim / 3);
    const auto pair = random_projector_pair(dim, shared, extra_dist(rng),
                                            extra_dist(rng), rng);
    const double direct = direct_epsilon(pair);
    if (direct > 1.0 - 1e-6) continue;  // near-degenerate draw, resample
    CHECK(std::abs(direct - eigenvalue_epsilon(pair)) < 1e-10);
    ++done;
  }
}

TEST_CASE("E+F spectrum classifies intersections at the endpoints") {
  std::mt19937 rng(7);
  const auto pair = random_projector_pair(30, 2, 5, 6, rng);
  const Vector ev = symmetric_eigenvalues(pair.e + pair.f);
  int twos = 0;
  for (Index i = 0; i < ev.size(); ++i) {
    CHECK(ev(i) > -1e-12);
    CHECK(ev(i) < 2 + 1e-12);
    if (ev(i) > 2 - 1e-8) ++twos;
  }
  CHECK(twos == 2);  // the built-in shared subspace
}

TEST_CASE("reduced projectors for (4,2)") {
  const auto red = reduced_projectors(LatticeFamily::uniform(4, 2));
  CHECK(red.rank_a == 16);
  CHECK(red.rank_b == 16);
  CHECK(red.chain_dim == 9);
  CHECK(red.reduced_dim() == 2304);
  CHECK(red.g_e.rows() == 144);
  CHECK(red.g_e.cols() == 16);
  CHECK(red.g_f.cols() == 16);

  // E'' = (g_e g_e^T) (x) 1 is idempotent to near machine precision
  const Matrix epp = red.g_e * red.g_e.transpose();
  CHECK((epp * epp - epp).cwiseAbs().maxCoeff() < 1e-11);
  const Matrix fpp = red.g_f * red.g_f.transpose();
  CHECK((fpp * fpp - fpp).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("epsilon against the published values (fast points)") {
  EpsilonOptions opts;
  CHECK(epsilon_n(LatticeFamily::uniform(3, 1), opts).epsilon ==
        doctest::Approx(0.4778328889).epsilon(1e-8));
  CHECK(epsilon_n(LatticeFamily::uniform(3, 2), opts).epsilon ==
        doctest::Approx(0.1183378500).epsilon(1e-8));
  CHECK(epsilon_n(LatticeFamily::uniform(4, 1), opts).epsilon ==
        doctest::Approx(0.5234369088).epsilon(1e-8));
  CHECK(epsilon_n(LatticeFamily::mixed(3, 4, 1), opts).epsilon ==
        doctest::Approx(0.5001917602).epsilon(1e-8));
}

TEST_CASE("epsilon is invariant under swapping the vertex degrees") {
  const double a = epsilon_n(LatticeFamily::mixed(3, 4, 1)).epsilon;
  const double b = epsilon_n(LatticeFamily::mixed(4, 3, 1)).epsilon;
  CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("gram route agrees with the dense route") {
  const LatticeFamily f = LatticeFamily::uniform(4, 2);
  EpsilonOptions dense_opts;  // reduced_dim 2304 <= 4000: dense
  const auto dense = epsilon_n(f, dense_opts);
  CHECK(dense.method == "dense-eig");

  EpsilonOptions gram_opts;
  gram_opts.dense_cap = 100;
  const auto gram = epsilon_n(f, gram_opts);
  CHECK(gram.method == "gram-eig");

  CHECK(dense.epsilon == doctest::Approx(gram.epsilon).epsilon(1e-11));
  CHECK(dense.kernel_dim == gram.kernel_dim);
  CHECK(dense.spectrum_max == doctest::Approx(gram.spectrum_max).epsilon(1e-10));
}

TEST_CASE("fullspace oracle equals the reduced computation") {
  // the union Gram form keeps E and F uncompressed, so this exercises the
  // support-isometry reduction end to end without the n^3 dense cost
  EpsilonOptions opts;
  opts.dense_cap = 300;  // keep the oracle on the gram path
  const auto reduced = epsilon_n(LatticeFamily::uniform(3, 1));
  const auto oracle = epsilon_n_fullspace(LatticeFamily::uniform(3, 1), opts);
  CHECK(oracle.method == "fullspace-gram");
  CHECK(std::abs(reduced.epsilon - oracle.epsilon) < 1e-10);
  CHECK(oracle.reduced_dim == 3888);
}

TEST_CASE("reduction preserves the eigenvalues inside (0,2) away from 1") {
  EpsilonOptions opts;
  opts.dense_cap = 300;
  const LatticeFamily f = LatticeFamily::uniform(3, 1);

  // reduced spectrum, dense
  const auto red = reduced_projectors(f, opts);
  const Matrix epp = kron(red.g_e * red.g_e.transpose(),
                          Matrix::Identity(red.rank_b, red.rank_b));
  const Matrix fpp = kron(Matrix::Identity(red.rank_a, red.rank_a),
                          red.g_f * red.g_f.transpose());
  const Vector ev_red = symmetric_eigenvalues(epp + fpp);

  // full-space nonzero spectrum through the union Gram matrix
  const auto yv = patch_state_tensor(build_patch(f, Region::Yv));
  const auto yw = patch_state_tensor(build_patch(f, Region::Yw));
  const Matrix we = ground_isometry(yv).w;
  const Matrix wf = ground_isometry(yw).w;
  const Index chain = 3, dl = 36, dr = 36;
  Matrix x = Matrix::Zero(we.cols() * dr, dl * wf.cols());
  for (Index c = 0; c < chain; ++c) {
    Matrix we_c(dl, we.cols());
    for (Index l = 0; l < dl; ++l) we_c.row(l) = we.row(l * chain + c);
    x += kron(Matrix(we_c.transpose()), Matrix(wf.middleRows(c * dr, dr)));
  }
  Matrix mtm(x.rows() + x.cols(), x.rows() + x.cols());
  mtm << Matrix::Identity(x.rows(), x.rows()), x, x.transpose(),
      Matrix::Identity(x.cols(), x.cols());
  const Vector ev_full = symmetric_eigenvalues(mtm);

  auto interior = [](const Vector& ev) {
    std::vector<double> out;
    for (Index i = 0; i < ev.size(); ++i)
      if (ev(i) > 1e-8 && ev(i) < 2 - 1e-8 && std::abs(ev(i) - 1) > 1e-8)
        out.push_back(ev(i));
    return out;
  };
  const auto a = interior(ev_red);
  const auto b = interior(ev_full);
  REQUIRE(a.size() == b.size());  // multiplicities match away from {0,1,2}
  for (size_t i = 0; i < a.size(); ++i)
    CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-9));
}

TEST_CASE("epsilon result invariants") {
  const auto r = epsilon_n(LatticeFamily::uniform(3, 2));
  CHECK(r.epsilon >= 0.0);
  CHECK(r.epsilon < 1.0);
  CHECK(r.lambda_min_nonzero == doctest::Approx(1 - r.epsilon).epsilon(1e-15));
  CHECK(r.spectrum_max <= 2 + 1e-10);
  CHECK(r.reduced_dim == 576);
  CHECK_FALSE(r.margin_ambiguous);
  CHECK(r.kernel_tol == 1e-8);

  EpsilonOptions loose;
  loose.kernel_tol = 0.2;  // the smallest retained eigenvalue is ~0.88 < 10*tol
  CHECK(epsilon_n(LatticeFamily::uniform(3, 2), loose).margin_ambiguous);
}

TEST_CASE("epsilon stays below the analytic d where both exist") {
  for (int n : {2, 3}) {
    const LatticeFamily f = LatticeFamily::uniform(3, n);
    const auto d = d_bound(f);
    REQUIRE(d.has_value());
    CHECK(epsilon_n(f).epsilon <= *d);
  }
}

TEST_CASE("caps are enforced") {
  EpsilonOptions opts;
  opts.phys_dim_cap = 20;
  CHECK_THROWS_AS(epsilon_n(LatticeFamily::uniform(3, 1), opts), CapExceeded);
  EpsilonOptions oracle_opts;
  oracle_opts.dense_cap = 50;  // gram fallback then exceeds 4x cap
  CHECK_THROWS_AS(epsilon_n_fullspace(LatticeFamily::uniform(3, 1), oracle_opts),
                  CapExceeded);
}
