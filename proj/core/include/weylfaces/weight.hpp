#pragma once

#include <vector>

#include "weylfaces/cartan.hpp"
#include "weylfaces/rational.hpp"

namespace weylfaces {

/// A point of the weight space, encoded as a base point (given by its exact
/// pairings with the simple coroots) minus a rational combination of simple
/// roots:  point = base_point - sum_j offset[j] * alpha_j.
///
/// The root offset keeps the Weyl action faithful even when the Cartan
/// matrix is singular (pairings alone would collapse e.g. the affine delta).
/// Weights are comparable only when they share a base.
struct Weight {
  RatVec base;    // base[i] = (coroot_i, base point)
  RatVec offset;  // coefficients of the subtracted simple roots
};

/// The weight with the given pairings and zero offset.
Weight weight_from_pairings(const CartanData& c, RatVec pairings);

/// (coroot_i, w) = base[i] - sum_j a(i,j) * offset[j].
Rat pairing(const CartanData& c, const Weight& w, int i);
RatVec pairings(const CartanData& c, const Weight& w);

bool same_base(const Weight& a, const Weight& b);
/// Equality of points on a shared base; throws DescriptorError on base mismatch.
bool weight_eq(const Weight& a, const Weight& b);

/// Simple reflection s_i: subtracts (coroot_i, w) * alpha_i.
Weight reflected(const CartanData& c, int i, Weight w);

/// Applies word[0] first, then word[1], ... (each entry a node index).
Weight apply_word(const CartanData& c, Weight w, const std::vector<int>& word);

/// Reflection action on a vector in root coordinates: s_i v = v - (coroot_i, v) alpha_i.
void reflect_root_coords(const CartanData& c, int i, RatVec& coords);
RatVec apply_word_to_root(const CartanData& c, RatVec coords, const std::vector<int>& word);

/// Reflection action on a functional phi given by its values on the simple
/// roots: (s_i phi)(alpha_j) = phi(alpha_j) - a(i,j) phi(alpha_i).
void reflect_coweight_coords(const CartanData& c, int i, RatVec& phi);
RatVec apply_word_to_coweight(const CartanData& c, RatVec phi, const std::vector<int>& word);

/// The distinguished weight with all pairings 1 and zero offset.
Weight rho(const CartanData& c);

/// True iff (coroot_j, w) >= 0 for all j in J.
bool is_dominant(const CartanData& c, const Weight& w, NodeSet j);

}  // namespace weylfaces
