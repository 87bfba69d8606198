#include "ebi/dot.hpp"

#include <string>

#include "ebi/bipartite.hpp"

namespace ebi {

std::string export_dot(const Labeling& labeling) {
  const Shape& s = labeling.shape();
  const Evaluation ev = evaluate(labeling);

  std::string out = "graph ebi {\n  rankdir=TB;\n  { rank=same;";
  for (int r = 0; r < s.p; ++r) out += " a" + std::to_string(r) + ";";
  out += " }\n  { rank=same;";
  for (int c = 0; c < s.q; ++c) out += " b" + std::to_string(c) + ";";
  out += " }\n";

  // Vertices on the one side keep the default style; the zero side is
  // filled and undecided vertices are dashed.
  const auto style_line = [&out](const std::string& node, VertexClass cls) {
    if (cls == VertexClass::zero) {
      out += "  " + node + " [style=filled];\n";
    } else if (cls == VertexClass::unlabeled) {
      out += "  " + node + " [style=dashed];\n";
    }
  };
  for (int r = 0; r < s.p; ++r) style_line("a" + std::to_string(r), ev.class_a[r]);
  for (int c = 0; c < s.q; ++c) style_line("b" + std::to_string(c), ev.class_b[c]);

  for (int r = 0; r < s.p; ++r) {
    for (int c = 0; c < s.q; ++c) {
      out += "  a" + std::to_string(r) + " -- b" + std::to_string(c);
      if (labeling.label(r, c)) out += " [style=bold]";
      out += ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace ebi
