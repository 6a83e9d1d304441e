#include "akltgap/spin.hpp"

#include <cmath>

namespace akltgap {

namespace {

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

SpinValue SpinValue::from_twice(int twice_s) {
  if (twice_s < 0) throw std::invalid_argument("spin must be nonnegative");
  return SpinValue{twice_s};
}

SpinValue SpinValue::from_double(double s) {
  const double twice = 2.0 * s;
  const double rounded = std::round(twice);
  if (s < 0.0 || std::abs(twice - rounded) > 1e-9)
    throw std::invalid_argument("spin must be a nonnegative half-integer");
  return SpinValue{static_cast<int>(rounded)};
}

SpinOperatorTriple spin_matrices(SpinValue sv) {
  if (sv.twice < 0) throw std::invalid_argument("spin must be nonnegative");
  const int d = sv.dimension();
  const double s = sv.value();
  Matrix sp = Matrix::Zero(d, d);
  Matrix sz = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double m = s - k;
    sz(k, k) = m;
    if (k >= 1) sp(k - 1, k) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  const Matrix sm = sp.transpose();
  SpinOperatorTriple t;
  t.s = sv;
  t.sx = 0.5 * (sp + sm);
  t.sy_imag = 0.5 * (sm - sp);
  t.sz = sz;
  return t;
}

Matrix heisenberg_coupling(SpinValue a, SpinValue b) {
  const auto ta = spin_matrices(a);
  const auto tb = spin_matrices(b);
  // Sy (x) Sy = (i A)(x)(i A) = -A (x) A
  return kron(ta.sx, tb.sx) - kron(ta.sy_imag, tb.sy_imag) + kron(ta.sz, tb.sz);
}

Matrix coupled_spin_projector(SpinValue a, SpinValue b, int twice_total) {
  const int lo = std::abs(a.twice - b.twice);
  const int hi = a.twice + b.twice;
  if (twice_total < lo || twice_total > hi || (twice_total - lo) % 2 != 0)
    throw std::invalid_argument("total spin outside the Clebsch ladder");

  const int dim = a.dimension() * b.dimension();
  const double casimir_a = a.value() * (a.value() + 1);
  const double casimir_b = b.value() * (b.value() + 1);
  const Matrix s2 = (casimir_a + casimir_b) * Matrix::Identity(dim, dim) +
                    2.0 * heisenberg_coupling(a, b);

  const double target = 0.5 * twice_total * (0.5 * twice_total + 1);
  Matrix p = Matrix::Identity(dim, dim);
  for (int tj = lo; tj <= hi; tj += 2) {
    if (tj == twice_total) continue;
    const double c = 0.5 * tj * (0.5 * tj + 1);
    p = p * (s2 - c * Matrix::Identity(dim, dim)) / (target - c);
  }
  return p;
}

Matrix symmetric_subspace_isometry(int qubits) {
  if (qubits < 1) throw std::invalid_argument("need at least one qubit");
  const int dim = 1 << qubits;
  Matrix iso = Matrix::Zero(qubits + 1, dim);
  for (int idx = 0; idx < dim; ++idx) {
    int downs = 0;
    for (int q = 0; q < qubits; ++q)
      if (idx & (1 << (qubits - 1 - q))) ++downs;
    iso(downs, idx) = 1.0 / std::sqrt(double(binomial(qubits, downs)));
  }
  return iso;
}

Matrix symmetrizer(int qubits) {
  const Matrix iso = symmetric_subspace_isometry(qubits);
  return iso.transpose() * iso;
}

Matrix singlet_map() {
  Matrix k(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  k << 0.0, r, -r, 0.0;
  return k;
}

Vector w_state() {
  Vector w = Vector::Zero(8);
  const double r = 1.0 / std::sqrt(3.0);
  w(1) = r;  // |uud>
  w(2) = r;  // |udu>
  w(4) = r;  // |duu>
  return w;
}

Vector w_tilde_state() {
  Vector w = Vector::Zero(8);
  const double r = 1.0 / std::sqrt(3.0);
  w(3) = r;  // |udd>
  w(5) = r;  // |dud>
  w(6) = r;  // |ddu>
  return w;
}

}  // namespace akltgap
