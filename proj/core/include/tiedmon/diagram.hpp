#ifndef TIEDMON_DIAGRAM_HPP_
#define TIEDMON_DIAGRAM_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tiedmon/permutation.hpp"
#include "tiedmon/set_partition.hpp"

namespace tiedmon {

  // An element of the partition monoid C_n: a set partition of the 2n
  // points 1..n (top row) and 1'..n' (bottom row). Internally top point k
  // is index k-1 and bottom point k' is index n+k-1.
  class Diagram {
   public:
    Diagram(int n, SetPartition partition);

    static Diagram identity(int n);

    // "1,5|2,3|4,3'|6,2'|1',5'|4',6'"; n defaults to the largest label.
    static Diagram parse(std::string_view text, std::optional<int> n = std::nullopt);

    // Blocks given with k for top point k and -k for bottom point k'.
    static Diagram from_signed_blocks(int n, std::vector<std::vector<int>> const& blocks);

    int degree() const noexcept {
      return n_;
    }
    SetPartition const& partition() const noexcept {
      return partition_;
    }

    static constexpr int top(int n, int k) {
      (void) n;
      return k - 1;
    }
    static constexpr int bottom(int n, int k) {
      return n + k - 1;
    }

    // Blocks with signed 1-based labels (k top, -k bottom), ordered by
    // canonical point order.
    std::vector<std::vector<int>> signed_blocks() const;

    // The restriction of the partition to the top (resp. bottom) row, as a
    // partition of {1..n}.
    SetPartition top_trace() const;
    SetPartition bottom_trace() const;

    std::string to_string() const;

    friend bool operator==(Diagram const&, Diagram const&) = default;
    friend auto operator<=>(Diagram const& a, Diagram const& b) {
      if (a.n_ != b.n_) {
        return a.n_ <=> b.n_;
      }
      return a.partition_ <=> b.partition_;
    }

    std::size_t hash() const noexcept {
      return partition_.hash();
    }

   private:
    int          n_;
    SetPartition partition_;
  };

  // Concatenation product: stack d above e, identify the bottom row of d
  // with the top row of e, keep connectivity, drop components that live
  // only in the middle row.
  Diagram concat(Diagram const& d, Diagram const& e);

  inline Diagram operator*(Diagram const& d, Diagram const& e) {
    return concat(d, e);
  }

  enum class GeneratorKind { L, H, E };

  // L_i: strands i and i+1 cross. H_i: brackets {i,i+1} and {i',(i+1)'}.
  // E_{i,j}: block {i,j,i',j'}, other strands straight; E_{i,i} = 1.
  Diagram generator(int n, GeneratorKind kind, int i, std::optional<int> j = std::nullopt);
  Diagram make_L(int n, int i);
  Diagram make_H(int n, int i);
  Diagram make_E(int n, int i, int j);
  inline Diagram make_E(int n, int i) {
    return make_E(n, i, i + 1);
  }

  struct DiagramClass {
    bool is_brauer      = false;  // every block has two points
    bool is_planar      = false;  // Brauer and noncrossing
    bool is_permutation = false;  // every block is a line
    int  up_brackets    = 0;      // two-point blocks inside the top row
    int  down_brackets  = 0;      // two-point blocks inside the bottom row
  };

  DiagramClass classify(Diagram const& d);

  // The permutation n_I of a partition I of {1..n} whose blocks have at
  // most two elements: the two-element blocks {a_i < b_i}, sorted by a_i,
  // go to {2i-1, 2i}; the singletons, ascending, go to 2k+1..n.
  Permutation arrangement_permutation(SetPartition const& i);

  struct BrauerNormalForm {
    Permutation top;     // s
    int         k = 0;   // number of top brackets
    Permutation bottom;  // s'
  };

  // g = s * H_1 * H_3 * ... * H_{2k-1} * s' with s = n_I for I the top
  // trace and s' = t_g then n_J^{-1} for J the bottom trace.
  BrauerNormalForm brauer_normal_form(Diagram const& d);
  Diagram          evaluate(BrauerNormalForm const& nf);

  // H_1 * H_3 * ... * H_{2k-1} in C_n.
  Diagram bracket_core(int n, int k);

}  // namespace tiedmon

template <>
struct std::hash<tiedmon::Diagram> {
  std::size_t operator()(tiedmon::Diagram const& d) const noexcept {
    return d.hash();
  }
};

#endif  // TIEDMON_DIAGRAM_HPP_
