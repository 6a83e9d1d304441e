#include <doctest.h>

#include <complex>
#include <random>

#include "akltgap/spin.hpp"

using namespace akltgap;

namespace {

double comm_defect(const Matrix& a, const Matrix& b, const Matrix& want) {
  return (a * b - b * a - want).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("spin value validation") {
  CHECK_THROWS_AS(SpinValue::from_twice(-1), std::invalid_argument);
  CHECK_THROWS_AS(SpinValue::from_double(-0.5), std::invalid_argument);
  CHECK_THROWS_AS(SpinValue::from_double(0.3), std::invalid_argument);
  CHECK(SpinValue::from_double(1.5).twice == 3);
  CHECK(SpinValue::from_double(1.5).dimension() == 4);
}

TEST_CASE("spin-1/2 matrices are the Pauli matrices over two") {
  const auto t = spin_matrices(SpinValue::from_twice(1));
  Matrix sx(2, 2), ay(2, 2), sz(2, 2);
  sx << 0, 0.5, 0.5, 0;
  ay << 0, -0.5, 0.5, 0;
  sz << 0.5, 0, 0, -0.5;
  CHECK((t.sx - sx).cwiseAbs().maxCoeff() == 0.0);
  CHECK((t.sy_imag - ay).cwiseAbs().maxCoeff() == 0.0);
  CHECK((t.sz - sz).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("su(2) algebra and Casimir for s up to 3") {
  for (int twice = 1; twice <= 6; ++twice) {
    const auto t = spin_matrices(SpinValue::from_twice(twice));
    // with Sy = i A: [Sx,A]=Sz, [A,Sz]=Sx, [Sz,Sx]=-A
    CHECK(comm_defect(t.sx, t.sy_imag, t.sz) < 1e-13);
    CHECK(comm_defect(t.sy_imag, t.sz, t.sx) < 1e-13);
    CHECK(comm_defect(t.sz, t.sx, -t.sy_imag) < 1e-13);
    const double s = 0.5 * twice;
    const Matrix casimir =
        t.sx * t.sx - t.sy_imag * t.sy_imag + t.sz * t.sz;
    CHECK((casimir - s * (s + 1) * Matrix::Identity(twice + 1, twice + 1))
              .cwiseAbs()
              .maxCoeff() < 1e-13);
  }
  const auto t1 = spin_matrices(SpinValue::from_twice(2));
  CHECK((t1.sx * t1.sx - t1.sy_imag * t1.sy_imag + t1.sz * t1.sz -
         2.0 * Matrix::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() < 1e-13);
}

TEST_CASE("complex cross-check of the real-storage convention") {
  using CMatrix = Eigen::MatrixXcd;
  const std::complex<double> iu(0, 1);
  for (int twice : {1, 2, 3}) {
    const auto t = spin_matrices(SpinValue::from_twice(twice));
    const CMatrix sy = iu * t.sy_imag;
    const CMatrix comm = t.sx * sy - sy * t.sx - iu * t.sz;
    CHECK(comm.cwiseAbs().maxCoeff() < 1e-13);
    CHECK((sy - sy.adjoint()).cwiseAbs().maxCoeff() < 1e-13);  // Hermitian
  }
  // Heisenberg coupling assembled with complex Sy equals the real version
  const auto a = spin_matrices(SpinValue::from_twice(3));
  const auto b = spin_matrices(SpinValue::from_twice(2));
  const CMatrix sya = iu * a.sy_imag;
  const CMatrix syb = iu * b.sy_imag;
  CMatrix coupling = CMatrix::Zero(12, 12);
  coupling += kron(a.sx, b.sx).cast<std::complex<double>>();
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 3; ++j)
      for (Index k = 0; k < 4; ++k)
        for (Index l = 0; l < 3; ++l)
          coupling(i * 3 + j, k * 3 + l) += sya(i, k) * syb(j, l);
  coupling += kron(a.sz, b.sz).cast<std::complex<double>>();
  CHECK((coupling - heisenberg_coupling(a.s, b.s).cast<std::complex<double>>())
            .cwiseAbs()
            .maxCoeff() < 1e-13);
}

TEST_CASE("coupled spin projectors") {
  const SpinValue half = SpinValue::from_twice(1);
  const SpinValue one = SpinValue::from_twice(2);

  SUBCASE("singlet of two qubits") {
    const Matrix p = coupled_spin_projector(half, half, 0);
    Vector singlet(4);
    singlet << 0, 1, -1, 0;
    singlet /= std::sqrt(2.0);
    CHECK((p - singlet * singlet.transpose()).cwiseAbs().maxCoeff() < 1e-14);
  }

  SUBCASE("completeness and orthogonality") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> spin_dist(1, 4);
    for (int trial = 0; trial < 8; ++trial) {
      const SpinValue a = SpinValue::from_twice(spin_dist(rng));
      const SpinValue b = SpinValue::from_twice(spin_dist(rng));
      const int dim = a.dimension() * b.dimension();
      Matrix sum = Matrix::Zero(dim, dim);
      std::vector<Matrix> ps;
      for (int tj = std::abs(a.twice - b.twice); tj <= a.twice + b.twice; tj += 2)
        ps.push_back(coupled_spin_projector(a, b, tj));
      for (const auto& p : ps) {
        sum += p;
        CHECK((p - p.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-12);
      }
      CHECK((sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-12);
      for (size_t i = 0; i + 1 < ps.size(); ++i)
        CHECK((ps[i] * ps[i + 1]).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  SUBCASE("decoration edge term has rank five") {
    const Matrix p = coupled_spin_projector(one, one, 4);
    CHECK(std::llround(p.trace()) == 5);
    CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-13);
  }

  SUBCASE("ladder violations are rejected") {
    CHECK_THROWS_AS(coupled_spin_projector(half, half, 1), std::invalid_argument);
    CHECK_THROWS_AS(coupled_spin_projector(half, half, 4), std::invalid_argument);
    CHECK_THROWS_AS(coupled_spin_projector(one, half, 0), std::invalid_argument);
  }
}

TEST_CASE("qubit symmetrizer") {
  CHECK_THROWS_AS(symmetrizer(0), std::invalid_argument);
  CHECK((symmetrizer(1) - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);

  for (int k : {2, 3, 4, 6}) {
    const Matrix p = symmetrizer(k);
    CHECK(std::llround(p.trace()) == k + 1);
    CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((p - p.transpose()).cwiseAbs().maxCoeff() < 1e-14);

    // commutes with the collective spin operators
    const auto q = spin_matrices(SpinValue::from_twice(1));
    const Index dim = Index(1) << k;
    Matrix cx = Matrix::Zero(dim, dim), cy = Matrix::Zero(dim, dim),
           cz = Matrix::Zero(dim, dim);
    for (int site = 0; site < k; ++site) {
      Matrix lx = Matrix::Identity(1, 1);
      Matrix ly = lx, lz = lx;
      for (int j = 0; j < k; ++j) {
        lx = kron(lx, j == site ? q.sx : Matrix::Identity(2, 2));
        ly = kron(ly, j == site ? q.sy_imag : Matrix::Identity(2, 2));
        lz = kron(lz, j == site ? q.sz : Matrix::Identity(2, 2));
      }
      cx += lx;
      cy += ly;
      cz += lz;
    }
    for (const Matrix* c : {&cx, &cy, &cz})
      CHECK((p * *c - *c * p).cwiseAbs().maxCoeff() < 1e-12);
  }

  SUBCASE("rank-5 symmetrizer fixes the expected states") {
    const Matrix p = symmetrizer(4);
    Vector all_up = Vector::Zero(16);
    all_up(0) = 1.0;
    CHECK((p * all_up - all_up).cwiseAbs().maxCoeff() < 1e-14);
    // the six-term Sz=0 symmetric combination
    Vector mid = Vector::Zero(16);
    for (int idx : {3, 5, 6, 9, 10, 12}) mid(idx) = 1.0 / std::sqrt(6.0);
    CHECK((p * mid - mid).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("singlet map") {
  const Matrix k = singlet_map();
  CHECK((k.transpose() * k - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-15);

  SUBCASE("maps phi+ to the singlet") {
    Vector phi = Vector::Zero(4);
    phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
    const Vector mapped = kron(k, Matrix::Identity(2, 2)) * phi;
    Vector singlet(4);
    singlet << 0, 1, -1, 0;
    singlet /= std::sqrt(2.0);
    CHECK((mapped - singlet / std::sqrt(2.0)).cwiseAbs().maxCoeff() < 1e-15);
  }

  SUBCASE("sqrt2 K P_2 reproduces the highest-weight left tensor") {
    const Matrix iso = symmetric_subspace_isometry(4);
    Matrix p2(2, 8);  // split the first qubit off row k=0
    for (int a = 0; a < 2; ++a)
      for (int r = 0; r < 8; ++r) p2(a, r) = iso(0, a * 8 + r);
    const Matrix w2 = std::sqrt(2.0) * k * p2;
    Matrix expected = Matrix::Zero(2, 8);
    expected(1, 0) = -1.0;  // -|down><up up up|
    CHECK((w2 - expected).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("w states") {
  CHECK(w_state().norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(w_tilde_state().norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(w_state().dot(w_tilde_state()) == doctest::Approx(0.0).epsilon(1e-15));
  const Matrix p = symmetrizer(3);
  CHECK((p * w_state() - w_state()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((p * w_tilde_state() - w_tilde_state()).cwiseAbs().maxCoeff() < 1e-14);
}
