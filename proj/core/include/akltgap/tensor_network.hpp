#pragma once

#include <array>
#include <iosfwd>

#include "akltgap/lattice.hpp"

namespace akltgap {

enum class Side { Left, Right };

/// Vertex tensors W_k, k = z/2 .. -z/2 (index 0 = highest weight).
/// Left tensors map the z-1 outer virtual qubits to the single inner one
/// (2 x 2^{z-1}); right tensors are the 2^{z-1} x 2 counterparts.
struct VertexTensorSet {
  int z = 0;
  Side side = Side::Left;
  std::vector<Matrix> w;
};

VertexTensorSet vertex_tensors(int z, Side side);

/// Spin-1 decoration MPS tensors V_{+1}, V_0, V_{-1}, normalized so that
/// sum_i V_i^T V_i = 1 and the induced transfer channel has spectrum
/// {1, -1/3, -1/3, -1/3}.
std::array<Matrix, 3> decoration_tensor();

struct AssemblyOptions {
  std::int64_t phys_dim_cap = 100'000'000;
  /// Moves every bond operator K to the opposite end of its bond. Only
  /// flips the overall sign of the state; exposed for convention tests.
  bool flip_bond_side = false;
};

/// The (unnormalized) AKLT state on a patch as a matrix
/// physical-dim x 2^{#virtual legs}. Rows follow the patch site order
/// (site 0 major); column bits follow patch.virtual_legs (leg 0 major).
struct PatchStateTensor {
  Patch patch;
  Matrix psi;
};

PatchStateTensor patch_state_tensor(const Patch& patch,
                                    const AssemblyOptions& opts = {});

/// Debug dump: "AKLTPSI1" magic, int64 rows/cols, row-major float64.
/// Not a stability-guaranteed format.
void write_state_dump(const PatchStateTensor& state, std::ostream& os);

}  // namespace akltgap
