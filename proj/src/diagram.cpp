#include "brauer/diagram.hpp"

#include <stdexcept>

namespace brauer {

std::vector<std::vector<Golden>> DiagramSpec::gram() const {
  if (rank <= 0) throw std::invalid_argument("diagram: empty");
  std::vector<std::vector<Golden>> g(rank, std::vector<Golden>(rank, Golden(0)));
  for (int i = 0; i < rank; ++i) g[i][i] = Golden(2);
  for (const Edge& e : edges) {
    if (e.i < 1 || e.i > rank || e.j < 1 || e.j > rank || e.i == e.j)
      throw std::invalid_argument("diagram: bad edge");
    Golden off = e.m == 3 ? Golden(-1) : e.m == 5 ? -Golden::phi()
                                                  : throw std::invalid_argument("diagram: bond must be 3 or 5");
    g[e.i - 1][e.j - 1] = off;
    g[e.j - 1][e.i - 1] = off;
  }
  return g;
}

int DiagramSpec::bond(int i, int j) const {
  for (const Edge& e : edges)
    if ((e.i == i && e.j == j) || (e.i == j && e.j == i)) return e.m;
  return 2;
}

const DiagramSpec& DiagramSpec::h3() {
  static const DiagramSpec d{"H3", 3, {{1, 2, 5}, {2, 3, 3}}};
  return d;
}

const DiagramSpec& DiagramSpec::h4() {
  static const DiagramSpec d{"H4", 4, {{1, 2, 5}, {2, 3, 3}, {3, 4, 3}}};
  return d;
}

// Fork tips 1 and 2 joined to node 3, then the chain 3-4-5-6.
const DiagramSpec& DiagramSpec::d6() {
  static const DiagramSpec d{
      "D6", 6, {{1, 3, 3}, {2, 3, 3}, {3, 4, 3}, {4, 5, 3}, {5, 6, 3}}};
  return d;
}

// Node 2 hangs off node 4 of the chain 1-3-4-5-6-7-8.
const DiagramSpec& DiagramSpec::e8() {
  static const DiagramSpec d{"E8",
                             8,
                             {{1, 3, 3},
                              {3, 4, 3},
                              {2, 4, 3},
                              {4, 5, 3},
                              {5, 6, 3},
                              {6, 7, 3},
                              {7, 8, 3}}};
  return d;
}

const DiagramSpec& DiagramSpec::i2_5() {
  static const DiagramSpec d{"I2(5)", 2, {{1, 2, 5}}};
  return d;
}

const DiagramSpec* DiagramSpec::by_name(const std::string& name) {
  for (const DiagramSpec* d : {&h3(), &h4(), &d6(), &e8(), &i2_5()})
    if (d->name == name) return d;
  return nullptr;
}

}  // namespace brauer
