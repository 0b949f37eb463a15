#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "weylfaces/extpoly.hpp"
#include "weylfaces/weights.hpp"

namespace weylfaces {

// Brute-force convex-hull ground truth for finite-type cross-checks.
// Everything here is exact and deterministic; nothing is shared with the
// classification path it verifies.

/// Exact face enumeration of the convex hull of rational points.
struct HullComplex {
  std::vector<RatVec> points;  // deduplicated input
  struct Facet {
    RatVec normal;  // inside: dot(normal, p) <= offset
    Rat offset;
    std::vector<std::size_t> incident;
  };
  std::vector<Facet> facets;
  std::map<long, long> face_counts;  // dim -> number of faces
  int dim = 0;                       // affine dimension
  bool full_dimensional = false;     // dim == ambient dimension
};

struct HullOptions {
  std::size_t max_points = 2000;
  int max_dim = 4;  // affine dimension bound for exhaustive facet search
};

/// Facets by exhaustive supporting-hyperplane search over affinely
/// independent subsets, then the face lattice by intersecting facet point
/// sets. Lower-dimensional inputs are handled in their affine hull.
/// Throws TooLarge past the exhaustive-search budget.
HullComplex hull_complex(const std::vector<RatVec>& points, const HullOptions& opts = {});

/// f-polynomial of the hull: faces of every dimension >= 0, excluding the
/// empty face and including the polytope itself as the top face (so a single
/// point counts as 1). Intrinsic to the polytope, independent of how it sits
/// in its ambient space.
ExtPolynomial hull_f_polynomial(const std::vector<RatVec>& points, const HullOptions& opts = {});

/// Weights of the integrable module with dominant integral highest weight
/// lambda, as (lambda - Z>=0 pi) ∩ conv(W lambda), by membership BFS.
/// Returned as root offsets from lambda. Throws CapExceededError.
std::set<RatVec> enumerate_integrable_weights(const CartanData& c, const Weight& lambda,
                                              std::uint64_t cap = kDefaultOrbitCap);

/// Depth-truncated weights of the parabolic Verma descriptor (lambda, J):
/// the disjoint union over mu in Z>=0(pi \ pi_J) of the Levi-integrable
/// slices, keeping offsets of total depth <= depth. Pre: J of finite type.
std::set<RatVec> enumerate_module_weights(const ModuleDescriptor& v, int depth,
                                          std::uint64_t cap = kDefaultOrbitCap);

/// Same, for the Levi-generated submodule U(l_J) V_lambda of a module with
/// integrability I_V: only roots inside `ambient` are used.
std::set<RatVec> enumerate_module_weights_within(const CartanData& c, const Weight& lambda,
                                                 NodeSet ambient, NodeSet integrability, int depth,
                                                 std::uint64_t cap = kDefaultOrbitCap);

/// Deterministic exact sampler: a fixed-denominator grid plus seeded jitter.
class RatSampler {
public:
  explicit RatSampler(std::uint64_t seed);
  /// Uniform-ish value in [0, 1) with denominator 1024.
  Rat unit();
  Rat in_range(const Rat& lo, const Rat& hi);
  long int_in(long lo, long hi);

private:
  std::uint64_t state_;
  std::uint64_t next();
};

/// Samples rational points from the (margin-widened) bounding box of the
/// truncated ray generators and compares half-space membership against the
/// dominance-order membership test. Pre: conv V closed.
struct CrosscheckReport {
  long samples = 0;
  long members = 0;
  long disagreements = 0;
  long cap_exceeded = 0;
};
CrosscheckReport sample_membership_crosscheck(const ModuleDescriptor& v, long n_samples,
                                              std::uint64_t seed,
                                              std::uint64_t cap = kDefaultOrbitCap);

}  // namespace weylfaces
