#pragma once

#include <string>
#include <vector>

#include "akltgap/spin.hpp"

namespace akltgap {

/// A decorated two-vertex lattice family: vertex degrees and the number n of
/// spin-1 decoration sites per original edge.
struct LatticeFamily {
  int z_left = 0;
  int z_right = 0;
  int n = 0;

  static LatticeFamily uniform(int z, int n) { return {z, z, n}; }
  static LatticeFamily mixed(int z_left, int z_right, int n) {
    return {z_left, z_right, n};
  }

  void validate() const;
  bool symmetric() const { return z_left == z_right; }
  int z_max() const { return z_left > z_right ? z_left : z_right; }
  LatticeFamily swapped() const { return {z_right, z_left, n}; }

  friend bool operator==(const LatticeFamily&, const LatticeFamily&) = default;
};

enum class Region { Yv, Yw, Union, YvMinusYw, YwMinusYv, Middle };

enum class SiteRole { LeftVertex, RightVertex, SharedChain, Branch };

struct Site {
  int id = -1;
  SpinValue spin;
  SiteRole role = SiteRole::Branch;
  int chain = -1;     // branch index within its side; -1 for vertices and the shared chain
  int position = -1;  // 0-based distance from the owning vertex along the chain
};

struct Edge {
  int a = -1;      // a < b in site order
  int b = -1;
  int z_e = 0;     // sum of decorated-lattice degrees of the endpoints
  double weight = 1.0;
};

struct VirtualLeg {
  int site = -1;
  std::string label;
};

/// Explicit site/edge description of one of the regions the gap analysis
/// works on. Site order: left vertex, left branches chain-by-chain outward,
/// shared chain left-to-right, right branches, right vertex (restricted to
/// the region). Virtual legs are ordered by their attachment site, with a
/// vertex cut leg listed first.
struct Patch {
  LatticeFamily family;
  Region region = Region::Yv;
  std::vector<Site> sites;
  std::vector<Edge> edges;
  std::vector<VirtualLeg> virtual_legs;

  std::int64_t dimension() const;
  std::vector<std::int64_t> strides() const;  // site 0 is the major index
  /// The vertex whose h_v / h'_{Y;v} this patch represents; -1 for
  /// Union/Middle regions.
  int central_vertex() const;
};

Patch build_patch(const LatticeFamily& family, Region region);

enum class WeightScheme { HV, HPrime };

/// Edge list with the scheme's weights: HV leaves every weight at 1;
/// HPrime keeps weight 1 on edges incident to the central vertex and
/// halves every other edge. Rejects patches without a central vertex.
std::vector<Edge> weighted_edge_set(const Patch& patch, WeightScheme scheme);

std::string region_name(Region region);
std::string scheme_name(WeightScheme scheme);

}  // namespace akltgap
