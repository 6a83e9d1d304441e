#include "akltgap/channel.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace akltgap {

namespace {

int int_log2(Index n) {
  int q = 0;
  while ((Index(1) << q) < n) ++q;
  if ((Index(1) << q) != n) throw std::invalid_argument("dimension not a power of two");
  return q;
}

int pauli_digit(int alpha, int qubits, int q) {
  return (alpha >> (2 * (qubits - 1 - q))) & 3;
}

int y_count(int alpha, int qubits) {
  int c = 0;
  for (int q = 0; q < qubits; ++q)
    if (pauli_digit(alpha, qubits, q) == 2) ++c;
  return c;
}

// real part-matrix of the basis element: sigma_hat = i^{y_count} * R
Matrix basis_real_part(int alpha, int qubits) {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix f0(2, 2), fx(2, 2), fy(2, 2), fz(2, 2);
  f0 << r, 0, 0, r;
  fx << 0, r, r, 0;
  fy << 0, -r, r, 0;  // sqrt2 s^y = i * fy
  fz << r, 0, 0, -r;
  const Matrix* f[4] = {&f0, &fx, &fy, &fz};
  Matrix out = Matrix::Identity(1, 1);
  for (int q = 0; q < qubits; ++q) out = kron(out, *f[pauli_digit(alpha, qubits, q)]);
  return out;
}

double parity_sign(int ya, int yb) {
  const int s = ya + yb;
  if (s % 2 != 0) return 0.0;
  return (s / 2) % 2 == 0 ? 1.0 : -1.0;
}

std::complex<double> imag_pow(int y) {
  switch (((y % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

Superoperator compose(const Superoperator& after, const Superoperator& before) {
  if (after.picture != before.picture)
    throw std::invalid_argument("cannot compose superoperators across pictures");
  if (after.qubits_in != before.qubits_out)
    throw std::invalid_argument("superoperator dimensions do not match");
  return {after.m * before.m, before.qubits_in, after.qubits_out, after.picture};
}

Superoperator tensor(const Superoperator& a, const Superoperator& b) {
  if (a.picture != b.picture)
    throw std::invalid_argument("cannot tensor superoperators across pictures");
  return {kron(a.m, b.m), a.qubits_in + b.qubits_in, a.qubits_out + b.qubits_out,
          a.picture};
}

Superoperator kraus_to_superop(const std::vector<Matrix>& kraus, Picture picture) {
  if (kraus.empty()) throw std::invalid_argument("empty Kraus set");
  const Index rows = kraus.front().rows();
  const Index cols = kraus.front().cols();
  for (const auto& k : kraus)
    if (k.rows() != rows || k.cols() != cols)
      throw std::invalid_argument("inconsistent Kraus dimensions");

  const int q_row = int_log2(rows);  // B lives here in the Heisenberg picture
  const int q_col = int_log2(cols);

  // Heisenberg matrix: S[alpha, beta] = Tr(sigma_alpha sum_k K^T R_beta K)
  // with the y-parity sign; the Schroedinger matrix is its transpose.
  const int nb_in = 1 << (2 * q_row);
  const int nb_out = 1 << (2 * q_col);
  Matrix s(nb_out, nb_in);
  std::vector<Matrix> r_out(nb_out);
  std::vector<int> y_out(nb_out);
  for (int a = 0; a < nb_out; ++a) {
    r_out[a] = basis_real_part(a, q_col);
    y_out[a] = y_count(a, q_col);
  }
  for (int b = 0; b < nb_in; ++b) {
    const Matrix rb = basis_real_part(b, q_row);
    const int yb = y_count(b, q_row);
    Matrix acc = Matrix::Zero(cols, cols);
    for (const auto& k : kraus) acc.noalias() += k.transpose() * rb * k;
    const Matrix acc_t = acc.transpose();
    for (int a = 0; a < nb_out; ++a) {
      const double sign = parity_sign(y_out[a], yb);
      s(a, b) = sign == 0.0 ? 0.0 : sign * (r_out[a].array() * acc_t.array()).sum();
    }
  }
  Superoperator heis{std::move(s), q_row, q_col, Picture::Heisenberg};
  if (picture == Picture::Heisenberg) return heis;
  return heis.transpose();
}

Vector coords_product(const std::vector<Factor>& factors) {
  const int qubits = int(factors.size());
  int index = 0;
  double coeff = 1.0;
  const double r = 1.0 / std::sqrt(2.0);
  for (int q = 0; q < qubits; ++q) {
    int digit = 0;
    switch (factors[q]) {
      case Factor::One: digit = 0; coeff *= std::sqrt(2.0); break;
      case Factor::Rho1: digit = 0; coeff *= r; break;
      case Factor::Sx: digit = 1; coeff *= r; break;
      case Factor::Sy: digit = 2; coeff *= r; break;
      case Factor::Sz: digit = 3; coeff *= r; break;
    }
    index |= digit << (2 * (qubits - 1 - q));
  }
  Vector v = Vector::Zero(Index(1) << (2 * qubits));
  v(index) = coeff;
  return v;
}

Vector coords_identity(int qubits) {
  return coords_product(std::vector<Factor>(qubits, Factor::One));
}

Vector coords_rho1(int qubits) {
  return coords_product(std::vector<Factor>(qubits, Factor::Rho1));
}

namespace {
Factor spin_factor(int u) {
  switch (u) {
    case 0: return Factor::Sx;
    case 1: return Factor::Sy;
    case 2: return Factor::Sz;
  }
  throw std::invalid_argument("spin direction must be 0, 1, or 2");
}
}  // namespace

Vector coords_lambda(int u) {
  const Factor s = spin_factor(u);
  return coords_product({Factor::One, s, s}) + coords_product({s, Factor::One, s}) +
         coords_product({s, s, Factor::One});
}

Vector coords_omega(int u) {
  const Factor s = spin_factor(u);
  return coords_product({s, Factor::One, Factor::One}) +
         coords_product({Factor::One, s, Factor::One}) +
         coords_product({Factor::One, Factor::One, s});
}

Vector coords_theta(int u) {
  const Factor s = spin_factor(u);
  Vector out = Vector::Zero(64);
  for (int v = 0; v < 3; ++v) {
    if (v == u) continue;
    const Factor t = spin_factor(v);
    out += coords_product({t, t, s}) + coords_product({t, s, t}) +
           coords_product({s, t, t});
  }
  return out;
}

Matrix operator_from_coords(const Vector& coords, int qubits) {
  const int nb = 1 << (2 * qubits);
  if (coords.size() != nb) throw std::invalid_argument("coordinate size mismatch");
  const Index dim = Index(1) << qubits;
  Matrix out = Matrix::Zero(dim, dim);
  for (int a = 0; a < nb; ++a) {
    if (coords(a) == 0.0) continue;
    const int y = y_count(a, qubits);
    if (y % 2 != 0) {
      if (std::abs(coords(a)) > 1e-10)
        throw std::invalid_argument("coordinates describe a non-real operator");
      continue;
    }
    const double sign = (y / 2) % 2 == 0 ? 1.0 : -1.0;
    out += coords(a) * sign * basis_real_part(a, qubits);
  }
  return out;
}

Superoperator pitchfork_channel(int z) {
  return kraus_to_superop(vertex_tensors(z, Side::Left).w, Picture::Heisenberg);
}

Superoperator chain_channel(int n) {
  if (n < 0) throw std::invalid_argument("chain length must be >= 0");
  Matrix m = Matrix::Identity(4, 4);
  if (n > 0) {
    const double c = (n % 2 == 0 ? 1.0 : -1.0) * std::pow(3.0, -n);
    m(1, 1) = m(2, 2) = m(3, 3) = c;
  }
  return {std::move(m), 1, 1, Picture::Heisenberg};
}

Superoperator side_channel(int z, int n, Side side) {
  if (n < 1) throw std::invalid_argument("decoration count must be >= 1");
  const Superoperator pitchfork = pitchfork_channel(z);
  Superoperator chains = chain_channel(n);
  for (int i = 1; i < z - 1; ++i) chains = tensor(chains, chain_channel(n));
  const Superoperator left = compose(chains, pitchfork);
  return side == Side::Left ? left : left.transpose();
}

Matrix q_operator(int z, int n, Side side) {
  const Superoperator el = side_channel(z, n, Side::Left);
  const Vector in = side == Side::Left ? coords_identity(1) : coords_rho1(1);
  return operator_from_coords(el.apply(in), z - 1);
}

double q_min(int z, int n, Side side) {
  const Vector ev = symmetric_eigenvalues(q_operator(z, n, side));
  return ev(0);
}

Eigen::MatrixXcd choi_matrix(const Superoperator& e) {
  // Schroedinger action reconstructed basis element by basis element:
  // Choi = sum_beta E_S(sigma_beta) (x) sigma_beta^T
  const Superoperator heis = e.picture == Picture::Heisenberg ? e : e.transpose();
  const int qi = heis.qubits_in;   // input of the Schroedinger map
  const int qo = heis.qubits_out;
  const Index di = Index(1) << qi;
  const Index dout = Index(1) << qo;
  using CMatrix = Eigen::MatrixXcd;
  const std::complex<double> iunit(0, 1);

  CMatrix choi = CMatrix::Zero(di * dout, di * dout);
  const int nb_out = 1 << (2 * qo);
  const int nb_in = 1 << (2 * qi);
  for (int b = 0; b < nb_out; ++b) {
    CMatrix image = CMatrix::Zero(di, di);
    for (int a = 0; a < nb_in; ++a) {
      const double c = heis.m(b, a);  // E_S matrix element = transpose of heis
      if (c == 0.0) continue;
      image += c * imag_pow(y_count(a, qi)) * basis_real_part(a, qi);
    }
    const CMatrix sb =
        imag_pow(y_count(b, qo)) * basis_real_part(b, qo).transpose();
    for (Index i = 0; i < di; ++i)
      for (Index j = 0; j < di; ++j)
        choi.block(i * dout, j * dout, dout, dout) += image(i, j) * sb;
  }
  return choi;
}

bool is_completely_positive(const Superoperator& e, double tol) {
  const Eigen::MatrixXcd choi = choi_matrix(e);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(choi, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0) > -tol * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
}

double channel_norm(const Superoperator& e, double cp_tol) {
  if (!is_completely_positive(e, cp_tol))
    throw std::invalid_argument("channel_norm requires a completely positive map");
  const Superoperator heis = e.picture == Picture::Heisenberg ? e : e.transpose();
  const Matrix q =
      operator_from_coords(heis.apply(coords_identity(heis.qubits_in)),
                           heis.qubits_out);
  const Vector ev = symmetric_eigenvalues(q);
  return ev(ev.size() - 1);
}

double a_n(int n) {
  if (n < 1) throw std::invalid_argument("a(n) needs n >= 1");
  Matrix d = chain_channel(n).m;
  d(0, 0) -= 1.0;  // |1>><<rho1| is the (0,0) unit matrix in this basis
  Eigen::JacobiSVD<Matrix> svd(d);
  return svd.singularValues()(0);
}

}  // namespace akltgap
