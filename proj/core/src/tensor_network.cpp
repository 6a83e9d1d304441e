#include "akltgap/tensor_network.hpp"

#include <cmath>
#include <deque>
#include <ostream>

namespace akltgap {

namespace {

// Physical row k of the symmetric isometry split off its first qubit:
// P_k maps z-1 qubits to one qubit, P_k(a, rest) = iso(k, a:rest).
Matrix physical_component(const Matrix& iso, int z, int k) {
  const int rest = 1 << (z - 1);
  Matrix p = Matrix::Zero(2, rest);
  for (int a = 0; a < 2; ++a)
    for (int r = 0; r < rest; ++r) p(a, r) = iso(k, a * rest + r);
  return p;
}

Matrix kron_pow(const Matrix& m, int count) {
  Matrix out = Matrix::Identity(1, 1);
  for (int i = 0; i < count; ++i) out = kron(out, m);
  return out;
}

}  // namespace

VertexTensorSet vertex_tensors(int z, Side side) {
  if (z != 3 && z != 4 && z != 6)
    throw std::invalid_argument("vertex degree must be 3, 4, or 6");
  const Matrix iso = symmetric_subspace_isometry(z);
  const Matrix k_map = singlet_map();
  const double s2 = std::sqrt(2.0);

  VertexTensorSet set;
  set.z = z;
  set.side = side;
  set.w.reserve(z + 1);
  if (side == Side::Left) {
    for (int k = 0; k <= z; ++k)
      set.w.push_back(s2 * k_map * physical_component(iso, z, k));
  } else {
    const Matrix kk = std::pow(s2, z - 1) * kron_pow(k_map, z - 1);
    for (int k = 0; k <= z; ++k)
      set.w.push_back(kk * physical_component(iso, z, k).transpose());
  }
  return set;
}

std::array<Matrix, 3> decoration_tensor() {
  const double a = std::sqrt(2.0 / 3.0);
  const double b = std::sqrt(1.0 / 3.0);
  Matrix vp(2, 2), v0(2, 2), vm(2, 2);
  vp << 0, a, 0, 0;        //  sqrt(2/3) sigma+
  v0 << -b, 0, 0, b;       // -sqrt(1/3) sigma_z
  vm << 0, 0, -a, 0;       // -sqrt(2/3) sigma-
  return {vp, v0, vm};
}

// ---------------------------------------------------------------------------
// Patch state assembly.
//
// The state is contracted site by site in a BFS order rooted at the patch's
// vertex, so the open-leg frontier never exceeds 2^z entries. The partial
// state is a (placed physical dim) x 2^{#frontier legs} matrix whose column
// bits are the frontier legs, entry 0 most significant.
// ---------------------------------------------------------------------------

namespace {

struct Slot {
  bool is_edge = false;
  int index = -1;  // edge or leg index within the patch
};

// local tensor for one site: phys x 2^{#slots}, slot 0 = major column bit
Matrix local_tensor(const Site& site, int n_slots) {
  const int ts = site.spin.twice;
  // a spin-s site is built from 2s virtual qubits
  if (ts != n_slots)
    throw std::logic_error("site qubit count does not match its slots");
  return symmetric_subspace_isometry(ts);
}

// in-place: columns of t are re-gathered so bits move from `from` positions
// (major-to-minor order list) to the front, others keep relative order
Matrix permute_column_bits(const Matrix& m, int nbits,
                           const std::vector<int>& new_order) {
  Matrix out(m.rows(), m.cols());
  for (int c = 0; c < (1 << nbits); ++c) {
    int src = 0;
    for (int j = 0; j < nbits; ++j) {
      const int bit = (c >> (nbits - 1 - j)) & 1;
      src |= bit << (nbits - 1 - new_order[j]);
    }
    out.col(c) = m.col(src);
  }
  return out;
}

// apply a 2x2 matrix on one column bit: new[..alpha..] = sum_beta M(alpha,beta) old[..beta..]
void apply_on_column_bit(Matrix& m, int nbits, int bit_pos, const Matrix& op) {
  const int stride = 1 << (nbits - 1 - bit_pos);
  for (int base = 0; base < m.cols(); base += 2 * stride) {
    for (int off = 0; off < stride; ++off) {
      const int c0 = base + off;
      const int c1 = c0 + stride;
      const Vector a = m.col(c0);
      const Vector b = m.col(c1);
      m.col(c0) = op(0, 0) * a + op(0, 1) * b;
      m.col(c1) = op(1, 0) * a + op(1, 1) * b;
    }
  }
}

}  // namespace

PatchStateTensor patch_state_tensor(const Patch& patch,
                                    const AssemblyOptions& opts) {
  const std::int64_t dim = patch.dimension();
  if (dim > opts.phys_dim_cap)
    throw CapExceeded("patch physical dimension " + std::to_string(dim) +
                      " exceeds cap " + std::to_string(opts.phys_dim_cap));

  const int ns = int(patch.sites.size());
  // slots per site: edges first (declaration order), then dangling legs
  std::vector<std::vector<Slot>> slots(ns);
  for (int e = 0; e < int(patch.edges.size()); ++e) {
    slots[patch.edges[e].a].push_back({true, e});
    slots[patch.edges[e].b].push_back({true, e});
  }
  for (int l = 0; l < int(patch.virtual_legs.size()); ++l)
    slots[patch.virtual_legs[l].site].push_back({false, l});

  // BFS order rooted at a vertex (left preferred) keeps the frontier at 2^z
  int root = 0;
  for (const auto& s : patch.sites)
    if (s.role == SiteRole::RightVertex) root = s.id;
  for (const auto& s : patch.sites)
    if (s.role == SiteRole::LeftVertex) root = s.id;

  std::vector<std::vector<std::pair<int, int>>> adj(ns);  // (neighbor, edge)
  for (int e = 0; e < int(patch.edges.size()); ++e) {
    adj[patch.edges[e].a].push_back({patch.edges[e].b, e});
    adj[patch.edges[e].b].push_back({patch.edges[e].a, e});
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<int> order;
  std::vector<char> seen(ns, 0);
  std::deque<int> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    order.push_back(cur);
    for (const auto& [nb, e] : adj[cur])
      if (!seen[nb]) {
        seen[nb] = 1;
        queue.push_back(nb);
      }
  }
  if (int(order.size()) != ns)
    throw std::logic_error("patch adjacency is not connected");

  const Matrix bond = singlet_map() / std::sqrt(2.0);
  std::vector<char> placed(ns, 0);

  Matrix part = Matrix::Ones(1, 1);
  std::vector<Slot> frontier;

  for (const int s : order) {
    Matrix t = local_tensor(patch.sites[s], int(slots[s].size()));
    const int k = int(slots[s].size());

    // classify slots
    std::vector<int> bound_slots, open_slots;
    for (int j = 0; j < k; ++j) {
      const Slot& sl = slots[s][j];
      bool is_bound = false;
      if (sl.is_edge) {
        const Edge& e = patch.edges[sl.index];
        const int other = (e.a == s) ? e.b : e.a;
        is_bound = placed[other];
      }
      (is_bound ? bound_slots : open_slots).push_back(j);
    }

    // fold the bond operator into the bound slots of t; K sits on the
    // site-order-earlier end of each bond (flip_bond_side moves it, which
    // changes the state by a sign per bond only)
    for (const int j : bound_slots) {
      const Edge& e = patch.edges[slots[s][j].index];
      const bool s_is_later = (e.b == s);
      Matrix op = (s_is_later != opts.flip_bond_side)
                      ? bond
                      : Matrix(bond.transpose());
      apply_on_column_bit(t, k, j, op);
    }

    // t columns -> bound slots first (major), then open slots
    {
      std::vector<int> new_order;
      new_order.insert(new_order.end(), bound_slots.begin(), bound_slots.end());
      new_order.insert(new_order.end(), open_slots.begin(), open_slots.end());
      t = permute_column_bits(t, k, new_order);
    }

    // partial columns -> kept legs first, bound legs last in t's order
    const int f = int(frontier.size());
    std::vector<int> bound_frontier_pos;
    for (const int j : bound_slots) {
      const int e = slots[s][j].index;
      int pos = -1;
      for (int q = 0; q < f; ++q)
        if (frontier[q].is_edge && frontier[q].index == e) pos = q;
      if (pos < 0) throw std::logic_error("bound edge missing from frontier");
      bound_frontier_pos.push_back(pos);
    }
    std::vector<int> keep_pos;
    for (int q = 0; q < f; ++q)
      if (std::find(bound_frontier_pos.begin(), bound_frontier_pos.end(), q) ==
          bound_frontier_pos.end())
        keep_pos.push_back(q);
    {
      std::vector<int> new_order = keep_pos;
      new_order.insert(new_order.end(), bound_frontier_pos.begin(),
                       bound_frontier_pos.end());
      part = permute_column_bits(part, f, new_order);
    }

    const int nb = int(bound_slots.size());
    const Index bd = Index(1) << nb;
    const Index od = Index(1) << int(open_slots.size());
    const Index keep_dim = Index(1) << int(keep_pos.size());
    const Index ph_old = part.rows();
    const Index ph_s = t.rows();

    // M_T(b, p*od + o) = t(p, b*od + o)
    Matrix mt(bd, ph_s * od);
    for (Index p = 0; p < ph_s; ++p)
      for (Index b = 0; b < bd; ++b)
        for (Index o = 0; o < od; ++o) mt(b, p * od + o) = t(p, b * od + o);

    Matrix next(ph_old * ph_s, keep_dim * od);
    Matrix block(ph_old, ph_s * od);
    for (Index kk = 0; kk < keep_dim; ++kk) {
      block.noalias() = part.middleCols(kk * bd, bd) * mt;
      for (Index p = 0; p < ph_s; ++p)
        next.block(p * ph_old, kk * od, ph_old, od) =
            block.middleCols(p * od, od);
    }
    // rows of `next` are currently (p_site major, placed minor); swap to
    // (placed major, p_site minor) by viewing blocks
    Matrix swapped(ph_old * ph_s, keep_dim * od);
    for (Index p = 0; p < ph_s; ++p)
      for (Index r = 0; r < ph_old; ++r)
        swapped.row(r * ph_s + p) = next.row(p * ph_old + r);
    part = std::move(swapped);

    std::vector<Slot> new_frontier;
    for (const int q : keep_pos) new_frontier.push_back(frontier[q]);
    for (const int j : open_slots) new_frontier.push_back(slots[s][j]);
    frontier = std::move(new_frontier);
    placed[s] = 1;
  }

  // rows: placement order -> site order
  bool already_sorted = true;
  for (int i = 0; i < ns; ++i)
    if (order[i] != i) already_sorted = false;
  if (!already_sorted) {
    const auto site_strides = patch.strides();
    std::vector<std::int64_t> placed_strides(ns, 1);
    for (int i = ns - 2; i >= 0; --i)
      placed_strides[i] =
          placed_strides[i + 1] * patch.sites[order[i + 1]].spin.dimension();
    Matrix sorted(part.rows(), part.cols());
    for (Index r = 0; r < part.rows(); ++r) {
      std::int64_t rem = r;
      std::int64_t target = 0;
      for (int i = 0; i < ns; ++i) {
        const std::int64_t digit = rem / placed_strides[i];
        rem %= placed_strides[i];
        target += digit * site_strides[order[i]];
      }
      sorted.row(target) = part.row(r);
    }
    part = std::move(sorted);
  }

  // columns: evolved frontier -> declared leg order
  const int nl = int(patch.virtual_legs.size());
  if (int(frontier.size()) != nl)
    throw std::logic_error("frontier does not match declared virtual legs");
  {
    std::vector<int> pos_of_leg(nl, -1);
    for (int q = 0; q < nl; ++q) pos_of_leg[frontier[q].index] = q;
    std::vector<int> new_order(nl);
    for (int l = 0; l < nl; ++l) new_order[l] = pos_of_leg[l];
    part = permute_column_bits(part, nl, new_order);
  }

  return PatchStateTensor{patch, std::move(part)};
}

void write_state_dump(const PatchStateTensor& state, std::ostream& os) {
  os.write("AKLTPSI1", 8);
  const std::int64_t rows = state.psi.rows();
  const std::int64_t cols = state.psi.cols();
  os.write(reinterpret_cast<const char*>(&rows), 8);
  os.write(reinterpret_cast<const char*>(&cols), 8);
  std::vector<double> row(cols);
  for (std::int64_t r = 0; r < rows; ++r) {
    for (std::int64_t c = 0; c < cols; ++c) row[c] = state.psi(r, c);
    os.write(reinterpret_cast<const char*>(row.data()), 8 * cols);
  }
}

}  // namespace akltgap
