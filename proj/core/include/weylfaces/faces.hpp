#pragma once

#include <vector>

#include "weylfaces/extpoly.hpp"
#include "weylfaces/weyl.hpp"

namespace weylfaces {

/// Symbolic value of the highest weight at a simple torus element: generic,
/// equal to +-1, or an explicit integer power of q. The face theorems only
/// ever consume the predicate "= +-1", so this lattice stays exact.
struct TorusValue {
  enum class Kind { generic, pm_one, q_power };
  Kind kind = Kind::generic;
  long exponent = 0;  // meaningful iff kind == q_power

  static TorusValue generic() { return {Kind::generic, 0}; }
  static TorusValue pm_one() { return {Kind::pm_one, 0}; }
  static TorusValue q_power(long n) { return {Kind::q_power, n}; }
  /// "= +-1": pm_one, or q^0.
  bool is_unit() const { return kind == Kind::pm_one || (kind == Kind::q_power && exponent == 0); }
  friend bool operator==(const TorusValue& a, const TorusValue& b) {
    return a.kind == b.kind && (a.kind != Kind::q_power || a.exponent == b.exponent);
  }
};

/// A highest weight module up to face combinatorics: highest weight,
/// integrability, and classical/quantum flavor.
struct ModuleDescriptor {
  CartanData cartan;
  Weight hw;  // zero offset
  NodeSet integrability;
  bool quantum = false;
  std::vector<TorusValue> torus;  // size |I| iff quantum
};

/// Validates the integrability invariant: classical modules need integral
/// nonnegative pairings on I_V; quantum ones need torus values in
/// {pm_one, q_power(n >= 0)} on I_V. Throws DescriptorError.
ModuleDescriptor make_module(const CartanData& c, RatVec hw_pairings, NodeSet integrability);
ModuleDescriptor make_quantum_module(const CartanData& c, std::vector<TorusValue> torus,
                                     NodeSet integrability,
                                     RatVec hw_pairings = {});

/// Nodes j in J with lambda - alpha_j still a weight: j outside the
/// integrability, or with positive pairing (quantum: torus value != +-1).
NodeSet active_nodes(const ModuleDescriptor& v, NodeSet j);

/// Union of the connected components of J containing an active node.
NodeSet j_min(const ModuleDescriptor& v, NodeSet j);

/// j_min plus the dormant nodes: inactive nodes of I_V (drawn from all of
/// I_V, not only J) with no edge into j_min.
NodeSet j_max(const ModuleDescriptor& v, NodeSet j);

/// wt_J V  subset of  wt_J' V, decided as j_min(J) subset of J'.
bool face_subset(const ModuleDescriptor& v, NodeSet j, NodeSet j_prime);
/// wt_J V == wt_J' V, decided as j_min(J) subset of J' subset of j_max(J).
bool face_equal(const ModuleDescriptor& v, NodeSet j, NodeSet j_prime);

/// The fiber of the face map through J: the interval [j_min, j_max] in 2^I.
struct FaceInterval {
  NodeSet lo;
  NodeSet hi;
};
FaceInterval face_map_fiber(const ModuleDescriptor& v, NodeSet j);

/// Stabilizer of the standard face wt_J V inside the integrable Weyl group,
/// as parabolic generators: I_V ∩ j_max.
NodeSet face_stabilizer(const ModuleDescriptor& v, NodeSet j);

/// A face of conv V in canonical form: the fiber interval plus a coset
/// marker naming the W_{I_V}-translate.
struct FaceDescriptor {
  NodeSet jmin;
  NodeSet jmax;
  Weight coset_marker;
};
/// Marker with pairing 0 exactly on I_V ∩ j_max(J) inside I_V, 1 on the rest
/// of I_V, 0 outside.
Weight canonical_marker(const ModuleDescriptor& v, NodeSet j);
FaceDescriptor make_face_descriptor(const ModuleDescriptor& v, const std::vector<int>& word,
                                    NodeSet j);
bool face_descriptor_eq(const FaceDescriptor& a, const FaceDescriptor& b);

/// wt_J' V  subset of  w(wt_J V): the untwisted inclusion plus a coset
/// condition, tested by conjugating the canonical marker of J'.
/// Pre: word uses only nodes of I_V.
Membership coset_face_subset(const ModuleDescriptor& v, const std::vector<int>& word, NodeSet j,
                             NodeSet j_prime, std::uint64_t cap = kDefaultDominanceCap);

/// All standard parabolic faces, one per fiber interval, with dim = |j_min|.
struct StandardFace {
  NodeSet jmin;
  NodeSet jmax;
  int dim = 0;
};
std::vector<StandardFace> enumerate_standard_faces(const ModuleDescriptor& v, int max_rank = 16);

/// f-polynomial of conv V: each standard face contributes
/// [W_{I_V} : W_{I_V ∩ j_max}] q^{|j_min|}. Coefficients may be infinite.
ExtPolynomial f_polynomial(const ModuleDescriptor& v, std::uint64_t cap = kDefaultOrbitCap,
                           int max_rank = 16);

/// Closed form for a regular dominant integral highest weight on the
/// sub-diagram S: sum over J subset of S of [W_S : W_J] q^|J|.
ExtPolynomial f_polynomial_regular(const CartanData& c, NodeSet s,
                                   std::uint64_t cap = kDefaultOrbitCap);

/// f_{V_top} * (1+q)^(|I| - |I_V|) for lambda regular on I_V.
/// Throws RegularityRequired.
ExtPolynomial f_polynomial_int_regular(const ModuleDescriptor& v,
                                       std::uint64_t cap = kDefaultOrbitCap);

/// Tangent cone at the highest weight: the parabolic Verma descriptor
/// (lambda, I_V ∩ lambda^perp).
ModuleDescriptor tangent_cone(const ModuleDescriptor& v);

/// Localization of conv V along the standard face of J:
/// (lambda, I_V ∩ J). Pre: lambda regular on I_V (throws RegularityRequired).
ModuleDescriptor localize_face(const ModuleDescriptor& v, NodeSet j);

/// Branching: restriction to the Levi on J is simple / remains highest
/// weight iff j_min(V, I) is contained in J.
bool is_restriction_simple(const ModuleDescriptor& v, NodeSet j);
bool is_restriction_hw(const ModuleDescriptor& v, NodeSet j);

}  // namespace weylfaces
