#pragma once

#include <string>
#include <vector>

#include "brauer/golden.hpp"

namespace brauer {

// A Coxeter diagram restricted to the shapes this toolkit supports:
// bond labels 3 (simple) and 5.  The Gram matrix has diagonal 2 and
// off-diagonal -1 for a simple bond, -phi for a 5-bond, 0 otherwise.
struct DiagramSpec {
  struct Edge {
    int i, j;  // 1-based node labels
    int m;     // bond label, 3 or 5
  };

  std::string name;
  int rank = 0;
  std::vector<Edge> edges;

  // Gram matrix over Z[phi]; throws on malformed data.
  std::vector<std::vector<Golden>> gram() const;

  int bond(int i, int j) const;  // 2 if no edge, else the label

  static const DiagramSpec& h3();
  static const DiagramSpec& h4();
  static const DiagramSpec& d6();
  static const DiagramSpec& e8();
  static const DiagramSpec& i2_5();  // the {1,2} subdiagram of H3

  static const DiagramSpec* by_name(const std::string& name);
};

}  // namespace brauer
