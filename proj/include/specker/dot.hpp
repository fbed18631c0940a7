#pragma once

#include <sstream>
#include <string>

#include "specker/mspace.hpp"

namespace specker {

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

/// Domain and codomain as two clusters with nodes "label:mult"; one edge
/// per domain point, labeled with zeta. Node ids are d<i> and c<j>.
inline std::string export_dot(const BmsMorphism& m) {
  std::ostringstream o;
  o << "digraph morphism {\n  rankdir=LR;\n";
  auto cluster = [&](const char* name, const char* prefix, const MultiSpace& s) {
    o << "  subgraph cluster_" << name << " {\n    label=" << detail::dot_quote(name) << ";\n";
    for (std::size_t i = 0; i < s.size(); ++i)
      o << "    " << prefix << i << " [label=" << detail::dot_quote(s.label(i) + ":" + std::to_string(s.mult(i))) << "];\n";
    o << "  }\n";
  };
  cluster("dom", "d", m.dom());
  cluster("cod", "c", m.cod());
  for (std::size_t i = 0; i < m.dom().size(); ++i)
    o << "  d" << i << " -> c" << m.image(i) << " [label=" << detail::dot_quote(std::to_string(m.zeta(i))) << "];\n";
  o << "}\n";
  return o.str();
}

}  // namespace specker
