#include "hdal/dot.hpp"

#include <sstream>

namespace hdal {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string word(const LoSet& u) {
  std::string out;
  for (const auto& l : u.letters()) out += l;
  return out;
}

}  // namespace

std::string toDot(const Hda& x, const std::string& name) {
  const auto& c = x.carrier;
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle, width=0.3, fixedsize=true, fontsize=10];\n";
  std::size_t starts = 0;
  for (CellIndex v : c.sortedCells()) {
    const std::string id = quote(c.id(v));
    switch (c.dimension(v)) {
      case 0:
        os << "  " << id << " [label=" << id << (x.isAccept(v) ? ", shape=doublecircle" : "") << "];\n";
        break;
      case 1:
        os << "  " << quote(c.id(c.face(v, 0, 0))) << " -> " << quote(c.id(c.face(v, 0, 1)))
           << " [label=" << quote(c.shape(v)[0]) << (x.isAccept(v) ? ", penwidth=2" : "") << "];\n";
        break;
      case 2: {
        os << "  " << id << " [label=" << quote(word(c.shape(v)))
           << ", shape=box, style=filled, fillcolor=lightblue, width=0.25, height=0.25"
           << (x.isAccept(v) ? ", peripheries=2" : "") << "];\n";
        const CellIndex low = applyFace(c, v, 0b11, 0), high = applyFace(c, v, 0, 0b11);
        os << "  " << quote(c.id(low)) << " -> " << id << " [style=dotted, arrowhead=none];\n";
        os << "  " << id << " -> " << quote(c.id(high)) << " [style=dotted, arrowhead=none];\n";
        break;
      }
      default:
        os << "  // " << c.id(v) << " : " << toString(c.shape(v)) << "\n";
    }
    if (x.isStart(v)) {
      const std::string point = quote("__start" + std::to_string(starts++));
      os << "  " << point << " [shape=point, style=invis];\n";
      os << "  " << point << " -> " << (c.dimension(v) == 1 ? quote(c.id(c.face(v, 0, 0))) : id) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace hdal
