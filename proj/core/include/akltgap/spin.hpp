#pragma once

#include <array>

#include "akltgap/linalg.hpp"

namespace akltgap {

/// A spin quantum number stored as 2s so that half-integers stay exact.
struct SpinValue {
  int twice = 0;

  static SpinValue from_twice(int twice_s);
  static SpinValue from_double(double s);

  int dimension() const { return twice + 1; }
  double value() const { return 0.5 * twice; }

  friend bool operator==(const SpinValue&, const SpinValue&) = default;
};

/// Spin operators in the Sz-descending product basis. All matrices are real:
/// Sy itself is purely imaginary, so we store sy_imag with Sy = i * sy_imag.
struct SpinOperatorTriple {
  SpinValue s;
  Matrix sx;       // real symmetric
  Matrix sy_imag;  // real antisymmetric, Sy = i * sy_imag
  Matrix sz;       // real diagonal, entries s, s-1, ..., -s
};

SpinOperatorTriple spin_matrices(SpinValue s);

/// S_a . S_b on the product space (dim_a * dim_b), real symmetric.
Matrix heisenberg_coupling(SpinValue a, SpinValue b);

/// Projector onto total spin J of s_a (x) s_b, built by the Casimir product
/// formula  prod_{j != J} ((S_a+S_b)^2 - j(j+1)) / (J(J+1) - j(j+1)).
/// twice_total must lie on the Clebsch ladder |2a-2b|, |2a-2b|+2, ..., 2a+2b.
Matrix coupled_spin_projector(SpinValue a, SpinValue b, int twice_total);

/// Projector onto the total-spin-k/2 (fully symmetric) subspace of k qubits.
Matrix symmetrizer(int qubits);

/// Isometry rows mapping k qubits onto the spin-k/2 multiplet: (k+1) x 2^k,
/// rows are the Dicke states ordered Sz-descending. symmetrizer(k) equals
/// the row space projector of this map.
Matrix symmetric_subspace_isometry(int qubits);

/// K = (|up><down| - |down><up|)/sqrt(2); maps |phi+> to the singlet.
Matrix singlet_map();

Vector w_state();        // (|uud>+|udu>+|duu>)/sqrt(3)
Vector w_tilde_state();  // (|udd>+|dud>+|ddu>)/sqrt(3)

}  // namespace akltgap
