#pragma once

#include <complex>

#include "akltgap/tensor_network.hpp"

namespace akltgap {

/// Superoperators are stored as real matrices over the orthonormal Hermitian
/// Pauli product basis (factors 1/sqrt2, sqrt2 s^x, sqrt2 s^y, sqrt2 s^z;
/// qubit 0 major, digit order 1,x,y,z). The pairing is Hilbert-Schmidt,
/// <<sigma|rho>> = Tr(sigma^dag rho), so the dual (Schroedinger) map is the
/// exact matrix transpose.
enum class Picture { Heisenberg, Schroedinger };

struct Superoperator {
  Matrix m;  // 4^{qubits_out} x 4^{qubits_in}
  int qubits_in = 0;
  int qubits_out = 0;
  Picture picture = Picture::Heisenberg;

  Superoperator transpose() const {
    return {m.transpose(), qubits_out, qubits_in,
            picture == Picture::Heisenberg ? Picture::Schroedinger
                                           : Picture::Heisenberg};
  }
  Vector apply(const Vector& coords) const { return m * coords; }
};

Superoperator compose(const Superoperator& after, const Superoperator& before);
Superoperator tensor(const Superoperator& a, const Superoperator& b);

/// Heisenberg: B -> sum_k K^dag B K;  Schroedinger: rho -> sum_k K rho K^dag.
/// Kraus operators are real dim_out x dim_in maps with power-of-two dims.
Superoperator kraus_to_superop(const std::vector<Matrix>& kraus, Picture picture);

// --- Pauli-basis coordinates ------------------------------------------------

enum class Factor { One, Sx, Sy, Sz, Rho1 };

Vector coords_product(const std::vector<Factor>& factors);
Vector coords_identity(int qubits);
Vector coords_rho1(int qubits);  // rho1^{(x) qubits}, rho1 = 1/2

/// lambda^u = 1 s^u s^u + s^u 1 s^u + s^u s^u 1  (u: 0=x,1=y,2=z), 3 qubits.
Vector coords_lambda(int u);
Vector coords_omega(int u);   // s^u 1 1 + 1 s^u 1 + 1 1 s^u
Vector coords_theta(int u);   // sum_{v!=u} s^v s^v s^u + s^v s^u s^v + s^u s^v s^v

/// Reconstructs a real symmetric operator from coordinates; throws if the
/// coordinates have weight on odd-y (imaginary) basis elements.
Matrix operator_from_coords(const Vector& coords, int qubits);

// --- channels of the gap analysis -------------------------------------------

/// E-pitchfork for degree z: B -> sum_k (W_k^L)^dag B W_k^L,
/// op(1 qubit) -> op(z-1 qubits).
Superoperator pitchfork_channel(int z);

/// Closed-form decoration chain channel E^n (4x4); n = 0 gives the identity.
Superoperator chain_channel(int n);

/// E_L = (E^n (x) ... (x) E^n) E-pitchfork; E_R is its transpose.
Superoperator side_channel(int z, int n, Side side);

/// Q_L = E_L(1) resp. Q_R = E_R^t(rho1) as an operator on z-1 qubits.
Matrix q_operator(int z, int n, Side side);

/// Minimum eigenvalue of the Q operator of the given side.
double q_min(int z, int n, Side side);

/// ||E|| = ||E(1)|| evaluated on the Heisenberg form: the largest eigenvalue
/// of E(1). Throws if the map is not completely positive within cp_tol.
double channel_norm(const Superoperator& e, double cp_tol = 1e-12);

bool is_completely_positive(const Superoperator& e, double tol = 1e-12);
Eigen::MatrixXcd choi_matrix(const Superoperator& e);

/// a(n) = || E^n - |1>><<rho1| ||, computed as a spectral norm; equals 3^{-n}.
double a_n(int n);

}  // namespace akltgap
