#include "weylfaces/weight.hpp"

#include "weylfaces/errors.hpp"

namespace weylfaces {

Weight weight_from_pairings(const CartanData& c, RatVec pairings) {
  if (static_cast<int>(pairings.size()) != c.size())
    throw DescriptorError("pairing vector length does not match Cartan size");
  return Weight{std::move(pairings), zero_vec(c.size())};
}

Rat pairing(const CartanData& c, const Weight& w, int i) {
  Rat p = w.base[i];
  for (int j = 0; j < c.size(); ++j)
    if (w.offset[j] != 0) p -= c.a(i, j) * w.offset[j];
  return p;
}

RatVec pairings(const CartanData& c, const Weight& w) {
  RatVec p(c.size());
  for (int i = 0; i < c.size(); ++i) p[i] = pairing(c, w, i);
  return p;
}

bool same_base(const Weight& a, const Weight& b) { return a.base == b.base; }

bool weight_eq(const Weight& a, const Weight& b) {
  if (!same_base(a, b)) throw DescriptorError("weights on different bases are not comparable");
  return a.offset == b.offset;
}

Weight reflected(const CartanData& c, int i, Weight w) {
  w.offset[i] += pairing(c, w, i);
  return w;
}

Weight apply_word(const CartanData& c, Weight w, const std::vector<int>& word) {
  for (int i : word) w = reflected(c, i, std::move(w));
  return w;
}

void reflect_root_coords(const CartanData& c, int i, RatVec& coords) {
  Rat p = 0;
  for (int j = 0; j < c.size(); ++j)
    if (coords[j] != 0) p += c.a(i, j) * coords[j];
  coords[i] -= p;
}

RatVec apply_word_to_root(const CartanData& c, RatVec coords, const std::vector<int>& word) {
  for (int i : word) reflect_root_coords(c, i, coords);
  return coords;
}

void reflect_coweight_coords(const CartanData& c, int i, RatVec& phi) {
  if (phi[i] == 0) return;
  const Rat p = phi[i];
  for (int j = 0; j < c.size(); ++j) phi[j] -= c.a(i, j) * p;
}

RatVec apply_word_to_coweight(const CartanData& c, RatVec phi, const std::vector<int>& word) {
  for (int i : word) reflect_coweight_coords(c, i, phi);
  return phi;
}

Weight rho(const CartanData& c) { return weight_from_pairings(c, RatVec(c.size(), Rat(1))); }

bool is_dominant(const CartanData& c, const Weight& w, NodeSet j) {
  for (int i : j)
    if (pairing(c, w, i) < 0) return false;
  return true;
}

}  // namespace weylfaces
