#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "weylfaces/extpoly.hpp"
#include "weylfaces/weight.hpp"

namespace weylfaces {

// Default budgets; the CLI overrides them from WEYLFACES_ORBIT_CAP and
// WEYLFACES_DOMINANCE_CAP. Library callers pass caps explicitly.
inline constexpr std::uint64_t kDefaultOrbitCap = 1'000'000;
inline constexpr std::uint64_t kDefaultDominanceCap = 100'000;

/// Three-valued answer for semi-decidable membership questions. A cap
/// overflow is a distinguished value, never silently converted to a boolean.
enum class Membership { no, yes, cap_exceeded };

inline Membership as_membership(bool b) { return b ? Membership::yes : Membership::no; }

struct Conjugation {
  Weight dominant;
  std::vector<int> word;  // apply_word(input, word) == dominant
};

/// Reflection descent to the J-dominant chamber, lowest negative node first.
/// nullopt means the budget ran out: the weight may be outside the J Tits
/// cone, or the cap was too small; the caller must not conclude either way.
std::optional<Conjugation> to_dominant(const CartanData& c, NodeSet j, Weight w,
                                       std::uint64_t cap = kDefaultDominanceCap);

/// Orbit of a weight under the parabolic W_J, keyed by root offsets, with a
/// shortest word reaching each point. Deterministic.
struct OrbitReport {
  RatVec base;                                  // shared by every point
  std::map<RatVec, std::vector<int>> points;    // offset -> word
  bool truncated = false;

  std::size_t size() const { return points.size(); }
};

OrbitReport orbit(const CartanData& c, NodeSet j, const Weight& w,
                  std::uint64_t cap = kDefaultOrbitCap);

/// Finiteness certificate for the W_J-orbit of w: finite iff every
/// infinite-type component of J pairs to zero with the J-dominant
/// representative of w.
Membership orbit_is_finite(const CartanData& c, NodeSet j, const Weight& w,
                           std::uint64_t cap = kDefaultDominanceCap);

/// Orbit of a root-coordinate vector under W_J. Deterministic.
struct RootOrbit {
  std::vector<RatVec> points;
  bool truncated = false;
};
RootOrbit root_orbit(const CartanData& c, NodeSet j, const RatVec& coords,
                     std::uint64_t cap = kDefaultOrbitCap);

/// Nodes of J pairing to zero with w; the isotropy group of w in W_J is the
/// parabolic on these nodes. Pre: w is J-dominant (throws NotDominant).
NodeSet stabilizer_nodes(const CartanData& c, NodeSet j, const Weight& w);

/// Whether w lies in the interior of the J Tits cone: conjugate to dominant,
/// then test finiteness of the isotropy group.
Membership in_tits_cone_interior(const CartanData& c, NodeSet j, const Weight& w,
                                 std::uint64_t cap = kDefaultDominanceCap);

/// Index [W_J : W_K] for K subset of J, in Z>=0 ∪ {inf}. Infinite exactly
/// when some infinite-type component of J is not contained in K; otherwise
/// counted as the orbit of a marker weight whose stabilizer is W_K.
/// Throws CapExceededError if finite but the orbit exceeds cap.
ExtInt parabolic_index(const CartanData& c, NodeSet j, NodeSet k,
                       std::uint64_t cap = kDefaultOrbitCap);

/// |W_J| = parabolic_index(J, {}).
ExtInt weyl_order(const CartanData& c, NodeSet j, std::uint64_t cap = kDefaultOrbitCap);

/// Marker weight with pairing 1 on `ones` and 0 elsewhere.
Weight marker_weight(const CartanData& c, NodeSet ones);

/// Enumerates the elements of W_J (as words) via the orbit of a J-regular
/// marker, whose stabilizer is trivial. Truncated when |W_J| exceeds cap.
struct GroupEnumeration {
  std::vector<std::vector<int>> words;
  bool truncated = false;
};
GroupEnumeration enumerate_group(const CartanData& c, NodeSet j,
                                 std::uint64_t cap = kDefaultOrbitCap);

}  // namespace weylfaces
