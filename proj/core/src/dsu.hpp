#pragma once

#include <numeric>
#include <vector>

namespace faceq::detail {

// Union-find with path halving; small enough to keep private to the library.
struct Dsu {
  std::vector<int> parent;

  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Returns true if the two elements were in distinct classes.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);  // keep the smaller id as representative
    parent[b] = a;
    return true;
  }
};

}  // namespace faceq::detail
