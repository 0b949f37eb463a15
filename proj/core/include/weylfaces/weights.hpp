#pragma once

#include <vector>

#include "weylfaces/faces.hpp"
#include "weylfaces/weyl.hpp"

namespace weylfaces {

/// The real-parameter hull P(lambda, J): a J-dominant highest weight and an
/// integrability set. Validated on construction.
struct WeylPolyhedron {
  CartanData cartan;
  Weight hw;
  NodeSet j;
};
WeylPolyhedron make_weyl_polyhedron(const CartanData& c, Weight hw, NodeSet j);

/// The J-nondegenerate dominance order: nu <=_J lambda iff
/// (1) lambda - nu is a nonnegative (lattice: integer) combination of simple
///     roots, and
/// (2) every connected component C of the J-part of the support admits c in C
///     with (coroot_c, lambda - beta_{I\J}) > 0.
/// Pre: shared base.
bool leq_j(const CartanData& c, NodeSet j, const Weight& nu, const Weight& lambda, bool lattice);

/// mu in P(lambda, J): conjugate into the J-dominant chamber, then <=_J.
Membership in_weyl_polyhedron(const WeylPolyhedron& p, const Weight& mu,
                              std::uint64_t cap = kDefaultDominanceCap);

/// mu in wt M(lambda, J) for the parabolic Verma descriptor (lambda, J):
/// integral dominance conjugation then the lattice order <='_J.
/// mu with lambda - mu outside the root lattice is reported as a non-member.
Membership in_wt_parabolic_verma(const ModuleDescriptor& v, const Weight& mu,
                                 std::uint64_t cap = kDefaultDominanceCap);

/// mu in wt L(lambda), via J := {i : (coroot_i, lambda) in Z>=0}.
Membership in_wt_simple(const CartanData& c, const Weight& lambda, const Weight& mu,
                        std::uint64_t cap = kDefaultDominanceCap);

/// Non-degeneracy of mu <= lambda: lambda is not perpendicular to any
/// connected component of supp(lambda - mu). Pre: lambda dominant, mu <= lambda
/// integrally.
bool nondegenerate(const CartanData& c, const Weight& lambda, const Weight& mu);

/// P(mu, J) subset of P(nu, J) iff mu <=_J nu, for J-dominant mu, nu.
bool polyhedron_contains(const CartanData& c, NodeSet j, const Weight& mu, const Weight& nu);

/// Generators of conv V: the W_{I_V}-orbit of lambda as vertices, and for
/// each group element w and non-integrable i the ray from w(lambda) in
/// direction -w(alpha_i) (stored as the root coordinates of w(alpha_i),
/// i.e. the offset increment along the ray).
struct RayGenerators {
  struct Ray {
    Weight vertex;
    RatVec direction;  // root coordinates of w(alpha_i)
  };
  std::vector<Weight> vertices;
  std::vector<Ray> rays;
  bool truncated = false;
};
RayGenerators ray_generators(const ModuleDescriptor& v, std::uint64_t orbit_cap = kDefaultOrbitCap);

/// Half-space {mu in lambda - R pi : (w lambda - mu, w omega-check_i) >= 0},
/// stored as a functional on root offsets: mu (with offset c) lies inside iff
/// dot(normal, c) >= offset.
struct HalfSpace {
  RatVec normal;
  Rat offset;
  bool satisfied(const RatVec& offset_coords) const;
};
struct HalfSpaceList {
  std::vector<HalfSpace> list;
  bool truncated = false;  // infinite integrable Weyl group beyond cap
};
/// All H_{i,w} over group elements w of W_{I_V} and i in I, deduplicated
/// exactly. Pre: conv V closed (throws UnclosedError).
HalfSpaceList half_spaces(const ModuleDescriptor& v, std::uint64_t orbit_cap = kDefaultOrbitCap);

/// Shape predicates, decided componentwise on the Dynkin diagram:
/// polytope iff every component is bounded (finite type fully integrable, or
/// trivial); polyhedron iff every infinite-type component is trivial or has
/// finite-type integrability; closed iff the stabilizer of lambda in the
/// integrable Weyl group is finite.
bool is_polytope(const ModuleDescriptor& v);
bool is_polyhedron(const ModuleDescriptor& v);
bool is_closed(const ModuleDescriptor& v);

}  // namespace weylfaces
