#include "brauer/i25.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace brauer {

namespace {

// Letters: a = r1, b = r2, E = e1, F = e2.  A state is a word plus the
// delta exponent relative to the search origin; applying a relation in
// either direction preserves the represented monomial.
struct Rule {
  const char* lhs;
  const char* rhs;
  int delta;  // replacing lhs by rhs adds this to the exponent
};

constexpr Rule kRules[] = {
    {"aa", "", 0},      {"bb", "", 0},                     // r_i^2 = 1
    {"aE", "E", 0},     {"Ea", "E", 0},                    // r1 e1 = e1 r1 = e1
    {"bF", "F", 0},     {"Fb", "F", 0},                    // r2 e2 = e2 r2 = e2
    {"EE", "E", 2},     {"FF", "F", 2},                    // e_i^2 = delta^2 e_i
    {"ababa", "babab", 0},                                 // 5-bond braid
    {"abEba", "baFab", 0},                                 // twisted braid
    {"EFE", "E", 0},                                       // e1 e2 e1 = e1
    {"EbE", "E", 0},                                       // e1 r2 e1 = e1
    {"EbabE", "E", 0},                                     // e1 r2 r1 r2 e1 = e1
};

using Frontier = std::unordered_map<std::string, int>;

void expand(const Frontier& cur, Frontier& visited, Frontier& next, size_t max_len) {
  for (const auto& [word, d] : cur) {
    for (const Rule& r : kRules) {
      for (int dir = 0; dir < 2; ++dir) {
        const std::string pat = dir == 0 ? r.lhs : r.rhs;
        const std::string rep = dir == 0 ? r.rhs : r.lhs;
        const int dd = dir == 0 ? r.delta : -r.delta;
        if (pat.size() > word.size() || word.size() - pat.size() + rep.size() > max_len)
          continue;
        // An empty pattern matches at every position, which makes the
        // length-changing rules double as pair insertions.
        for (size_t pos = 0; pos + pat.size() <= word.size(); ++pos) {
          if (word.compare(pos, pat.size(), pat) != 0) continue;
          std::string img = word.substr(0, pos) + rep + word.substr(pos + pat.size());
          if (visited.count(img)) continue;
          visited.emplace(img, d + dd);
          next.emplace(img, d + dd);
        }
      }
    }
  }
}

// Certify start == delta^expected * target by meeting in the middle.
size_t certify(const std::string& start, const std::string& target, int expected,
               size_t max_len, size_t state_cap) {
  Frontier fvis{{start, 0}}, bvis{{target, 0}};
  Frontier fcur = fvis, bcur = bvis;
  auto meet = [&]() -> bool {
    const Frontier& small = fvis.size() < bvis.size() ? fvis : bvis;
    const Frontier& big = fvis.size() < bvis.size() ? bvis : fvis;
    for (const auto& [word, d] : small) {
      auto it = big.find(word);
      if (it == big.end()) continue;
      int df = &small == &fvis ? d : it->second;
      int db = &small == &fvis ? it->second : d;
      // start = delta^df w, target = delta^db w  =>  start = delta^(df-db) target
      if (df - db != expected)
        throw std::runtime_error("i25 closure: unexpected delta offset for " + start);
      return true;
    }
    return false;
  };
  while (!fcur.empty() || !bcur.empty()) {
    if (meet()) return fvis.size() + bvis.size();
    if (fvis.size() + bvis.size() > state_cap)
      throw std::runtime_error("i25 closure: state cap hit for " + start);
    bool forward = !fcur.empty() && (bcur.empty() || fcur.size() <= bcur.size());
    Frontier next;
    if (forward) {
      expand(fcur, fvis, next, max_len);
      fcur.swap(next);
    } else {
      expand(bcur, bvis, next, max_len);
      bcur.swap(next);
    }
  }
  throw std::runtime_error("i25 closure: search exhausted for " + start);
}

}  // namespace

I25Table i25_brute_force() {
  // e_g for the five positive roots, as words: e_{b1} = E, e_{b2} = F,
  // e_{b1+p b2} = bEb, e_{p b1+b2} = aFa, e_{p b1+p b2} = abEba.
  struct Case {
    const char* gamma;
    const char* start;   // e_g e_1
    const char* target;  // group word + E
    std::vector<uint8_t> word;
    int delta;
  };
  const Case cases[] = {
      {"b1", "EE", "E", {}, 2},
      {"b2", "FE", "ababE", {0, 1, 0, 1}, 0},
      {"b1+pb2", "bEbE", "bE", {1}, 0},
      {"pb1+b2", "aFaE", "babE", {1, 0, 1}, 0},
      {"pb1+pb2", "abEbaE", "abE", {0, 1}, 0},
  };

  I25Table out;
  for (const Case& c : cases) {
    size_t states = certify(c.start, c.target, c.delta, 14, 4000000);
    out.states_explored += states;
    out.entries.push_back({c.gamma, c.word, c.delta});
  }
  return out;
}

}  // namespace brauer
