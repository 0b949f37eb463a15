#include "weylfaces/nodeset.hpp"

#include <sstream>

namespace weylfaces {

std::vector<NodeSet> all_subsets(NodeSet s) {
  std::vector<NodeSet> out;
  out.reserve(std::size_t{1} << s.count());
  const std::uint32_t mask = s.bits();
  std::uint32_t sub = 0;
  while (true) {
    out.push_back(NodeSet(sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;  // next submask in increasing order
  }
  return out;
}

std::string to_string(NodeSet s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : s) {
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace weylfaces
