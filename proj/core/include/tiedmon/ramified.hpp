#ifndef TIEDMON_RAMIFIED_HPP_
#define TIEDMON_RAMIFIED_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiedmon/closure.hpp"
#include "tiedmon/counting.hpp"
#include "tiedmon/diagram.hpp"
#include "tiedmon/word.hpp"

namespace tiedmon {

  // A ramified partition (I, R) of [n] u [n'] with I finer than R.
  class Ramified {
   public:
    // Throws DomainError unless I is finer than R.
    Ramified(Diagram i, Diagram r);

    static Ramified identity(int n);
    // (D, D).
    static Ramified embed(Diagram const& d);
    // "I ; R", each side in the diagram text format.
    static Ramified parse(std::string_view text, std::optional<int> n = std::nullopt);

    int degree() const noexcept {
      return i_.degree();
    }
    Diagram const& I() const noexcept {
      return i_;
    }
    Diagram const& R() const noexcept {
      return r_;
    }

    std::string to_string() const;

    friend bool operator==(Ramified const&, Ramified const&) = default;
    friend auto operator<=>(Ramified const& a, Ramified const& b) {
      if (auto c = a.i_ <=> b.i_; c != 0) {
        return c;
      }
      return a.r_ <=> b.r_;
    }

    std::size_t hash() const noexcept {
      return i_.hash() * 0x100000001b3ULL ^ r_.hash();
    }

   private:
    Diagram i_;
    Diagram r_;
  };

  // Componentwise concatenation.
  Ramified rproduct(Ramified const& a, Ramified const& b);

  inline Ramified operator*(Ramified const& a, Ramified const& b) {
    return rproduct(a, b);
  }

  enum class RGeneratorKind { Ltilde, Htilde, Etilde, Ftilde };

  Ramified make_Ltilde(int n, int i);        // (L_i, L_i)
  Ramified make_Htilde(int n, int i);        // (H_i, H_i)
  Ramified make_Etilde(int n, int i, int j); // (1, E_{i,j})
  inline Ramified make_Etilde(int n, int i) {
    return make_Etilde(n, i, i + 1);
  }
  Ramified make_Ftilde(int n, int i);        // (H_i, E_i)
  Ramified rgenerator(int n, RGeneratorKind kind, int i, std::optional<int> j = std::nullopt);

  // Image of a Q_n word under s -> L~, t -> H~, e -> E~, f -> F~.
  Ramified phi(Token const& tok, int n);
  Ramified phi(Word const& w, int n);

  // Up and down brackets of I inside each block of R, indexed by the
  // R-block number (blocks ordered by minimum point).
  struct BalanceReport {
    std::vector<int> up;
    std::vector<int> down;
  };

  struct RamifiedFlags {
    bool          balanced = false;
    bool          boxed    = false;
    BalanceReport report;
  };

  RamifiedFlags flags(Ramified const& a);
  bool          is_boxed(Diagram const& r);

  enum class Family { RS, RBr, bBr, bJ, tJimage };

  std::string             family_name(Family f);
  std::optional<Family>   parse_family(std::string_view name);

  // Generators in closure order: L~_i, H~_i, E~_i, F~_i restricted to those
  // the family uses. bJ uses the tJimage generators.
  std::vector<Labelled<Ramified>> family_generators(Family f, int n);

  // RS, RBr, bBr, tJimage by closure. bJ is the boxed, planar-I filter of
  // bBr (in bBr discovery order) with edges for the E~, F~ generators.
  MonoidTable<Ramified> build_family(Family f, int n, std::size_t limit = kNoLimit);

  // (I, R) as r T_1 T_3 ... T_{2k-1} r' with r, r' words in s and e
  // letters (extended ties allowed) and T_{2i-1} in {t_{2i-1}, f_{2i-1}}.
  // Requires I Brauer.
  Word factor_ramified_brauer(Ramified const& a);

  struct BalancedFactorization {
    Word s;
    Word E;
    Word F;
    Word s_prime;

    Word joined() const {
      return s + E + F + s_prime;
    }
  };

  // (I, R) = s E F s' for balanced R and Brauer I.
  BalancedFactorization factor_balanced(Ramified const& a);

  // U(n, k): set partitions of n elements, k positive and k negative, in
  // which every block has as many positive as negative elements.
  BigInt two_balanced_count(int n, int k);             // memoized recurrence
  BigInt two_balanced_count_brute(int n, int k);       // enumeration, n <= 15

  enum class SizeFamily { S, J, Br, P, LP, DP, RS, RBr, RJ, bBr, tJ, bJ };

  std::string               size_family_name(SizeFamily f);
  std::optional<SizeFamily> parse_size_family(std::string_view name);
  std::vector<SizeFamily>   all_size_families();

  // Closed formulas: n!, Catalan, (2n-1)!!, b_n, 2^{n-1}, sum S(n,k) b_k,
  // |M| b_n for the ramified families, the U(n,k) sum for bBr and
  // C(2n-1, n) for tJ and bJ.
  BigInt size_formula(SizeFamily f, int n);

  // The bBr sum evaluated with U(n, k) from `u`.
  BigInt bbr_size_from(int n, std::function<BigInt(int, int)> const& u);

  // Sum over I in M of b_{#blocks(I)} against |M| b_n.
  struct RamifiedCountReport {
    BigInt by_blocks;
    BigInt by_formula;
    bool   agree = false;
  };

  RamifiedCountReport ramified_count_report(MonoidTable<Diagram> const& m);

}  // namespace tiedmon

template <>
struct std::hash<tiedmon::Ramified> {
  std::size_t operator()(tiedmon::Ramified const& a) const noexcept {
    return a.hash();
  }
};

#endif  // TIEDMON_RAMIFIED_HPP_
