#ifndef TIEDMON_TIED_JONES_HPP_
#define TIEDMON_TIED_JONES_HPP_

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tiedmon/counting.hpp"
#include "tiedmon/diagram.hpp"
#include "tiedmon/word.hpp"

namespace tiedmon {

  // f_{j_1,k_1} ... f_{j_t,k_t} with f_{j,k} = f_k f_{k-1} ... f_j.
  class FWord {
   public:
    using Run = std::pair<int, int>;  // (j, k)

    // Throws DomainError unless j's and k's strictly increase, j <= k and
    // every index lies in [1, n-1].
    FWord(int n, std::vector<Run> runs);
    explicit FWord(int n) : n_(n) {}

    // "f{1,2} f{4,5}"; "1" for the empty word.
    static FWord parse(std::string_view text, int n);

    int                     n() const noexcept {
      return n_;
    }
    std::vector<Run> const& runs() const noexcept {
      return runs_;
    }
    bool empty() const noexcept {
      return runs_.empty();
    }

    // Distinct f indices N(f).
    int              degree() const;
    std::vector<int> gaps() const;
    bool             contains(int index) const;
    Word             to_word() const;
    std::string      to_string() const;

    friend bool operator==(FWord const&, FWord const&) = default;
    friend auto operator<=>(FWord const&, FWord const&) = default;

   private:
    int              n_ = 0;
    std::vector<Run> runs_;
  };

  struct TJNormal {
    FWord            f;
    std::vector<int> e;  // ascending tie indices, none of them in f

    Word        to_word() const;
    // "f{1,2} f{4,5} | e3 e6"
    std::string to_string() const;
    static TJNormal parse(std::string_view text, int n);

    friend bool operator==(TJNormal const&, TJNormal const&) = default;
  };

  // The f.e normal form of a word in e_i, f_i. Throws DomainError on other
  // letters or extended ties.
  TJNormal tj_normalize(Word const& w, int n);

  // Every FWord on n strands with N(f) = k, ordered lexicographically by
  // (j_1, k_1, j_2, k_2, ...).
  std::vector<FWord> enumerate_fwords(int n, int k);
  void for_each_fword(int n, int k, std::function<void(FWord const&)> const& fn);

  // G_n^{k-1} -> G_n^k \ G_{n-1}^k and back.
  FWord h_map(FWord const& b);
  FWord h_inverse(FWord const& b);

  // T(0,0) = 1, T(n,0) = 1, T(n,n) = 0 for n > 0, T(n,k) = T(n,k-1) + T(n-1,k).
  BigInt catalan_triangle(int n, int k);

  // sum_{k=j}^{n} C(k-1, j-1) T(n, n-k).
  BigInt boxed_count(int n, int j);

  // Number of inseparable components of a planar Brauer diagram.
  int separability_degree(Diagram const& i);

  // "n,j,B" lines for 1 <= j <= n <= max_n, with a header line.
  std::string boxed_count_csv(int max_n);

}  // namespace tiedmon

#endif  // TIEDMON_TIED_JONES_HPP_
