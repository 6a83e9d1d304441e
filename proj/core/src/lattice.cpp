#include "akltgap/lattice.hpp"

#include <algorithm>

namespace akltgap {

void LatticeFamily::validate() const {
  const auto z_ok = [](int z) { return z == 3 || z == 4 || z == 6; };
  if (!z_ok(z_left) || !z_ok(z_right))
    throw std::invalid_argument("vertex degree must be 3, 4, or 6");
  if (n < 1) throw std::invalid_argument("decoration count n must be >= 1");
}

std::int64_t Patch::dimension() const {
  std::int64_t d = 1;
  for (const auto& s : sites) {
    d *= s.spin.dimension();
    if (d < 0 || d > (std::int64_t(1) << 62) / 8)
      throw CapExceeded("patch Hilbert dimension overflows");
  }
  return d;
}

std::vector<std::int64_t> Patch::strides() const {
  std::vector<std::int64_t> st(sites.size(), 1);
  for (int i = int(sites.size()) - 2; i >= 0; --i)
    st[i] = st[i + 1] * sites[i + 1].spin.dimension();
  return st;
}

int Patch::central_vertex() const {
  if (region == Region::Union || region == Region::Middle) return -1;
  for (const auto& s : sites)
    if (s.role == SiteRole::LeftVertex || s.role == SiteRole::RightVertex)
      return s.id;
  return -1;
}

Patch build_patch(const LatticeFamily& family, Region region) {
  family.validate();
  const int zl = family.z_left;
  const int zr = family.z_right;
  const int n = family.n;

  const bool has_v = region == Region::Yv || region == Region::Union ||
                     region == Region::YvMinusYw;
  const bool has_w = region == Region::Yw || region == Region::Union ||
                     region == Region::YwMinusYv;
  const bool has_chain = region == Region::Yv || region == Region::Yw ||
                         region == Region::Union || region == Region::Middle;
  const int n_left_branches = has_v ? zl - 1 : 0;
  const int n_right_branches = has_w ? zr - 1 : 0;

  Patch p;
  p.family = family;
  p.region = region;

  auto add_site = [&p](SpinValue spin, SiteRole role, int chain, int pos) {
    const int id = int(p.sites.size());
    p.sites.push_back(Site{id, spin, role, chain, pos});
    return id;
  };
  auto add_edge = [&](int a, int b, int deg_a, int deg_b) {
    if (a > b) std::swap(a, b);
    p.edges.push_back(Edge{a, b, deg_a + deg_b, 1.0});
  };
  const SpinValue spin1 = SpinValue::from_twice(2);

  int v = -1, w = -1;
  if (has_v) v = add_site(SpinValue::from_twice(zl), SiteRole::LeftVertex, -1, -1);
  if (region == Region::YvMinusYw)
    p.virtual_legs.push_back({v, "cut"});

  for (int b = 0; b < n_left_branches; ++b) {
    int prev = v;
    for (int k = 0; k < n; ++k) {
      const int s = add_site(spin1, SiteRole::Branch, b, k);
      add_edge(prev, s, k == 0 ? zl : 2, 2);
      prev = s;
    }
    p.virtual_legs.push_back({prev, "L" + std::to_string(b) + "end"});
  }

  std::vector<int> chain;
  if (has_chain) {
    for (int k = 0; k < n; ++k)
      chain.push_back(add_site(spin1, SiteRole::SharedChain, -1, k));
    if (has_v)
      add_edge(v, chain[0], zl, 2);
    else
      p.virtual_legs.push_back({chain[0], "chainL"});
    for (int k = 0; k + 1 < n; ++k) add_edge(chain[k], chain[k + 1], 2, 2);
  }

  std::vector<int> right_first;  // first (w-adjacent) site of each right branch
  for (int b = 0; b < n_right_branches; ++b) {
    int first = -1;
    int prev = -1;
    for (int k = 0; k < n; ++k) {
      const int s = add_site(spin1, SiteRole::Branch, b, k);
      if (k == 0)
        first = s;
      else
        add_edge(prev, s, 2, 2);
      prev = s;
    }
    right_first.push_back(first);
    p.virtual_legs.push_back({prev, "R" + std::to_string(b) + "end"});
  }

  if (has_w) {
    w = add_site(SpinValue::from_twice(zr), SiteRole::RightVertex, -1, -1);
    if (has_chain) add_edge(chain.back(), w, 2, zr);
    for (int b = 0; b < n_right_branches; ++b) add_edge(w, right_first[b], zr, 2);
    if (region == Region::YwMinusYv)
      p.virtual_legs.push_back({w, "cut"});
  }
  if (region == Region::Yv || region == Region::Middle)
    p.virtual_legs.push_back({chain.back(), "chainR"});

  return p;
}

std::vector<Edge> weighted_edge_set(const Patch& patch, WeightScheme scheme) {
  std::vector<Edge> edges = patch.edges;
  if (scheme == WeightScheme::HV) return edges;
  const int v = patch.central_vertex();
  if (v < 0)
    throw std::invalid_argument(
        "h' weighting needs a vertex-centered patch (Yv or Yw)");
  for (auto& e : edges)
    e.weight = (e.a == v || e.b == v) ? 1.0 : 0.5;
  return edges;
}

std::string region_name(Region region) {
  switch (region) {
    case Region::Yv: return "Yv";
    case Region::Yw: return "Yw";
    case Region::Union: return "Union";
    case Region::YvMinusYw: return "YvMinusYw";
    case Region::YwMinusYv: return "YwMinusYv";
    case Region::Middle: return "Middle";
  }
  return "?";
}

std::string scheme_name(WeightScheme scheme) {
  return scheme == WeightScheme::HV ? "h_v" : "h_prime";
}

}  // namespace akltgap
