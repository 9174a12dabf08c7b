#ifndef TIEDMON_SRC_UNION_FIND_HPP_
#define TIEDMON_SRC_UNION_FIND_HPP_

#include <numeric>
#include <utility>
#include <vector>

namespace tiedmon::detail {

  class UnionFind {
   public:
    explicit UnionFind(int size) : parent_(size) {
      std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
      while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x          = parent_[x];
      }
      return x;
    }

    void unite(int a, int b) {
      a = find(a);
      b = find(b);
      if (a == b) {
        return;
      }
      if (a > b) {
        std::swap(a, b);
      }
      parent_[b] = a;
    }

    int size() const noexcept {
      return static_cast<int>(parent_.size());
    }

   private:
    std::vector<int> parent_;
  };

}  // namespace tiedmon::detail

#endif  // TIEDMON_SRC_UNION_FIND_HPP_
