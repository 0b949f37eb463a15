#pragma once

#include <optional>
#include <vector>

#include "weylfaces/faces.hpp"

namespace weylfaces {

/// Leading-exponent convention for the universal f-polynomial.
/// `extended` measures the base chamber inside the enlarged real locus where
/// coroot pairings are real (exponent |I| + 2 corank); `classical` uses a
/// genuine real form (exponent |I| + corank = realization_dim). They agree
/// whenever the Cartan matrix is nonsingular.
enum class DimConvention { extended, classical };

/// Stratum of the J dominant chamber: the face where exactly the nodes of K
/// pair to zero.
struct Stratum {
  NodeSet j;
  NodeSet k;  // k subset of j
};

long base_dim(const CartanData& c, DimConvention conv = DimConvention::extended);
long stratum_dim(const CartanData& c, NodeSet k, DimConvention conv = DimConvention::extended);

/// A face of the universal Weyl polyhedron: a stratum of the base chamber
/// plus a face of the fiber at the stratum representative.
/// dim = stratum dim + |face.jmin|.
struct UniversalFaceDescriptor {
  Stratum stratum;
  FaceDescriptor face;
};
UniversalFaceDescriptor make_universal_face(const CartanData& c, NodeSet j, NodeSet k,
                                            NodeSet j_prime, const std::vector<int>& word = {});
long universal_face_dim(const CartanData& c, const UniversalFaceDescriptor& f,
                        DimConvention conv = DimConvention::extended);

/// All strata K subset of J, ordered by reverse inclusion (larger K first).
std::vector<NodeSet> strata(const CartanData& c, NodeSet j);

/// K = {j in J : (coroot_j, lambda) = 0}. Throws NotDominant.
NodeSet stratum_of(const CartanData& c, NodeSet j, const Weight& lambda);

/// An interior point of the stratum K: pairing 0 on K, 1 everywhere else.
Weight representative_weight(const CartanData& c, NodeSet j, NodeSet k);

/// The module descriptor (lambda_K, integrability J) at the stratum
/// representative.
ModuleDescriptor stratum_module(const CartanData& c, NodeSet j, NodeSet k);

/// Faces of the universal Weyl polyhedron are named by (stratum K, fiber J').
/// Equality: same stratum and the fiber intervals coincide there.
/// Inclusion: K'' subset of K' (face containment of the base chamber is
/// reverse inclusion of perps) and j_min at the K' representative inside J''.
bool universal_face_equal(const CartanData& c, NodeSet j, NodeSet k1, NodeSet j1, NodeSet k2,
                          NodeSet j2);
bool universal_face_subset(const CartanData& c, NodeSet j, NodeSet k1, NodeSet j1, NodeSet k2,
                           NodeSet j2);

/// w-twisted inclusion w wt_{J1,K1} subset of wt_{J2,K2}, delegated to the
/// coset test at the K1 representative. Pre: word uses nodes of J.
Membership universal_coset_face_subset(const CartanData& c, NodeSet j, const std::vector<int>& word,
                                       NodeSet k1, NodeSet j1, NodeSet k2, NodeSet j2,
                                       std::uint64_t cap = kDefaultDominanceCap);

/// f-polynomial of the universal Weyl polyhedron over D_J:
/// q^{base_dim} sum over K of q^{-|K|} f(conv of the stratum module).
/// The result never has negative exponents.
ExtPolynomial universal_f_polynomial(const CartanData& c, NodeSet j,
                                     std::uint64_t cap = kDefaultOrbitCap,
                                     DimConvention conv = DimConvention::extended,
                                     int max_rank = 16);

/// Polyhedrality of the universal Weyl polyhedron: finite type J.
bool universal_is_polyhedron(const CartanData& c, NodeSet j);

/// Minkowski generators of the universal cone, in (base pairing-vector,
/// fiber offset) coordinates: rays (0, w alpha_i) for i outside J, rays
/// (omega_j, w omega_j) for j in J, and the lines (e_k, 0) for k outside J.
struct MinkowskiGenerators {
  struct Generator {
    RatVec base;
    RatVec offset;
  };
  std::vector<Generator> rays;
  std::vector<Generator> lines;
  bool truncated = false;
};
MinkowskiGenerators minkowski_generators(const CartanData& c, NodeSet j,
                                         std::uint64_t cap = kDefaultOrbitCap);

/// Strong combinatorial isomorphism of P(lambda, J) and P(lambda', J): when
/// both stabilizers are of finite type this is exactly "same stratum";
/// otherwise the question is open and NotApplicable (nullopt) is returned.
std::optional<bool> same_stratum_strong_iso(const CartanData& c, NodeSet j, const Weight& lambda,
                                            const Weight& lambda_prime);

/// One equivalence class of universal faces per (stratum, fiber interval),
/// with its dimension and W_J-orbit size.
struct UniversalFaceClass {
  NodeSet k;
  NodeSet jmin;
  NodeSet jmax;
  long dim = 0;
  ExtInt index;
};
std::vector<UniversalFaceClass> universal_face_census(const CartanData& c, NodeSet j,
                                                      std::uint64_t cap = kDefaultOrbitCap,
                                                      DimConvention conv = DimConvention::extended,
                                                      int max_rank = 16);

}  // namespace weylfaces
