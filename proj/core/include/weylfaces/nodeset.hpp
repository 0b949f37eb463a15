#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace weylfaces {

/// A subset of the Dynkin nodes {0, ..., n-1}, n <= 30, as a bitmask.
class NodeSet {
public:
  constexpr NodeSet() = default;
  explicit constexpr NodeSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr NodeSet single(int i) { return NodeSet(std::uint32_t{1} << i); }
  static constexpr NodeSet full(int n) {
    return NodeSet(n == 0 ? 0u : ((std::uint32_t{1} << n) - 1u));
  }
  static NodeSet of(std::initializer_list<int> nodes) {
    NodeSet s;
    for (int i : nodes) s.bits_ |= (std::uint32_t{1} << i);
    return s;
  }
  static NodeSet of(const std::vector<int>& nodes) {
    NodeSet s;
    for (int i : nodes) s.bits_ |= (std::uint32_t{1} << i);
    return s;
  }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }

  constexpr NodeSet with(int i) const { return NodeSet(bits_ | (std::uint32_t{1} << i)); }
  constexpr NodeSet without(int i) const { return NodeSet(bits_ & ~(std::uint32_t{1} << i)); }

  constexpr bool subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }

  friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & b.bits_); }
  friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return NodeSet(a.bits_ | b.bits_); }
  friend constexpr NodeSet operator-(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(NodeSet a, NodeSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator<(NodeSet a, NodeSet b) { return a.bits_ < b.bits_; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1)
      out.push_back(std::countr_zero(rest));
    return out;
  }

  class iterator {
  public:
    explicit constexpr iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    friend constexpr bool operator!=(iterator a, iterator b) { return a.rest_ != b.rest_; }

  private:
    std::uint32_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

private:
  std::uint32_t bits_ = 0;
};

/// All 2^|s| subsets of s, in increasing bitmask order (deterministic).
std::vector<NodeSet> all_subsets(NodeSet s);

std::string to_string(NodeSet s);

}  // namespace weylfaces
