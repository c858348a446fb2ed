#include "looplink/render.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace looplink {

namespace {

std::string gate_name(const Diagram& d, const Gate& g) {
  std::string s;
  if (d.is_pair()) s += g.tag == WordTag::First ? "v:" : "w:";
  s += g.label.str();
  s += "#" + std::to_string(g.occ);
  return s;
}

std::string edge_name(const Diagram& d, const Partition& p) {
  std::string s;
  if (d.is_pair()) s += p.tag == WordTag::First ? "v:" : "w:";
  s += "phi_" + std::to_string(p.index);
  return s;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

template <class Fn>
void for_each_partition(const Diagram& d, Fn&& fn) {
  fn(WordTag::First, d.word(WordTag::First).size());
  if (d.is_pair()) fn(WordTag::Second, d.word(WordTag::Second).size());
}

}  // namespace

std::string to_dot(const Diagram& d) {
  std::string out = "digraph arc_diagram {\n";
  out += "  rankdir=LR;\n  node [shape=circle];\n";
  const auto& gates = d.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    out += "  g" + std::to_string(i) + " [label=\"" + gate_name(d, gates[i]) +
           "\", pos=" + std::to_string(i) + "];\n";
  }
  // Keep the boundary order visible as an invisible chain.
  for (std::size_t i = 0; i + 1 < gates.size(); ++i)
    out += "  g" + std::to_string(i) + " -> g" + std::to_string(i + 1) +
           " [style=invis];\n";
  for_each_partition(d, [&](WordTag tag, std::size_t p) {
    for (std::size_t i = 1; i <= p; ++i) {
      const Partition part{tag, static_cast<long long>(i)};
      out += "  g" + std::to_string(d.position(d.tail_gate(part))) + " -> g" +
             std::to_string(d.position(d.head_gate(part))) + " [label=\"" +
             edge_name(d, part) + "\", constraint=false];\n";
    }
  });
  out += "}\n";
  return out;
}

std::string to_svg(const Diagram& d) {
  const double size = 420.0, cx = size / 2, cy = size / 2, r = 170.0;
  const std::size_t n = d.gates().size();
  // Gates spread along the boundary arc, leaving a closed arc at the bottom
  // for the base-point.
  std::vector<double> gx(n), gy(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double deg = -60.0 - 240.0 * (static_cast<double>(i) + 0.5) /
                                   static_cast<double>(n == 0 ? 1 : n);
    const double rad = deg * M_PI / 180.0;
    gx[i] = cx + r * std::cos(rad);
    gy[i] = cy - r * std::sin(rad);
  }

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(size) +
         "\" height=\"" + fixed(size) + "\" viewBox=\"0 0 " + fixed(size) + " " +
         fixed(size) + "\">\n";
  out += "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
         "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
         "<path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
  out += "  <circle cx=\"" + fixed(cx) + "\" cy=\"" + fixed(cy) + "\" r=\"" +
         fixed(r) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for_each_partition(d, [&](WordTag tag, std::size_t p) {
    const char* color =
        d.is_pair() ? (tag == WordTag::First ? "crimson" : "steelblue") : "black";
    for (std::size_t i = 1; i <= p; ++i) {
      const Partition part{tag, static_cast<long long>(i)};
      const std::size_t a = static_cast<std::size_t>(d.position(d.tail_gate(part)));
      const std::size_t b = static_cast<std::size_t>(d.position(d.head_gate(part)));
      out += "  <line x1=\"" + fixed(gx[a]) + "\" y1=\"" + fixed(gy[a]) +
             "\" x2=\"" + fixed(gx[b]) + "\" y2=\"" + fixed(gy[b]) +
             "\" stroke=\"" + color + "\" marker-end=\"url(#arrow)\"><title>" +
             edge_name(d, part) + "</title></line>\n";
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = cx + (gx[i] - cx) * 1.12, ly = cy + (gy[i] - cy) * 1.12;
    out += "  <circle cx=\"" + fixed(gx[i]) + "\" cy=\"" + fixed(gy[i]) +
           "\" r=\"2.5\"/>\n";
    out += "  <text x=\"" + fixed(lx) + "\" y=\"" + fixed(ly) +
           "\" font-size=\"11\" text-anchor=\"middle\">" +
           gate_name(d, d.gates()[i]) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace looplink
