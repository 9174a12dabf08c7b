#ifndef TIEDMON_PERMUTATION_HPP_
#define TIEDMON_PERMUTATION_HPP_

#include <string>
#include <vector>

namespace tiedmon {

  class Diagram;

  // A permutation of {1..n}, stored 0-based: image()[x] is the image of x.
  //
  // The diagram of a permutation p joins top point k to bottom point p(k)'.
  // With this convention the diagram of p followed by the diagram of q
  // (concatenation p * q) is the diagram of "apply p, then q".
  class Permutation {
   public:
    explicit Permutation(std::vector<int> image);  // 0-based, validated
    static Permutation identity(int n);
    static Permutation from_one_based(std::vector<int> const& image);
    // The permutation of a diagram all of whose blocks are lines.
    static Permutation from_diagram(Diagram const& d);

    int degree() const noexcept {
      return static_cast<int>(image_.size());
    }
    // 1-based application.
    int operator()(int k) const {
      return image_[k - 1] + 1;
    }
    std::vector<int> const& image() const noexcept {
      return image_;
    }
    std::vector<int> one_based() const;

    Permutation inverse() const;
    // x -> other(this(x)).
    Permutation then(Permutation const& other) const;
    bool        is_identity() const noexcept;

    Diagram to_diagram() const;

    // Indices i (1-based) of a word s_{i_1} ... s_{i_r} over the adjacent
    // transpositions whose diagram product L_{i_1} * ... * L_{i_r} equals
    // to_diagram(). Length is the inversion number.
    std::vector<int> reduced_word() const;

    std::string to_string() const;  // one-line notation "[1 3 4 5 2 6]"

    friend bool operator==(Permutation const&, Permutation const&) = default;

   private:
    std::vector<int> image_;
  };

}  // namespace tiedmon

#endif  // TIEDMON_PERMUTATION_HPP_
