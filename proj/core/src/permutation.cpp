#include "tiedmon/permutation.hpp"

#include <sstream>
#include <utility>

#include "tiedmon/diagram.hpp"
#include "tiedmon/error.hpp"

namespace tiedmon {

  Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> hit(image_.size(), false);
    for (int x : image_) {
      if (x < 0 || x >= static_cast<int>(image_.size()) || hit[x]) {
        throw DomainError("image array is not a permutation");
      }
      hit[x] = true;
    }
  }

  Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) {
      img[i] = i;
    }
    return Permutation(std::move(img));
  }

  Permutation Permutation::from_one_based(std::vector<int> const& image) {
    std::vector<int> img(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) {
      img[i] = image[i] - 1;
    }
    return Permutation(std::move(img));
  }

  Permutation Permutation::from_diagram(Diagram const& d) {
    int const        n = d.degree();
    std::vector<int> img(n, -1);
    for (auto const& block : d.signed_blocks()) {
      if (block.size() != 2 || block[0] < 0 || block[1] > 0) {
        throw DomainError("diagram " + d.to_string() + " is not a permutation");
      }
      img[block[0] - 1] = -block[1] - 1;
    }
    return Permutation(std::move(img));
  }

  std::vector<int> Permutation::one_based() const {
    std::vector<int> out(image_);
    for (int& x : out) {
      ++x;
    }
    return out;
  }

  Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t x = 0; x < image_.size(); ++x) {
      inv[image_[x]] = static_cast<int>(x);
    }
    return Permutation(std::move(inv));
  }

  Permutation Permutation::then(Permutation const& other) const {
    if (other.degree() != degree()) {
      throw SizeMismatch("composing permutations of different degrees");
    }
    std::vector<int> out(image_.size());
    for (std::size_t x = 0; x < image_.size(); ++x) {
      out[x] = other.image_[image_[x]];
    }
    return Permutation(std::move(out));
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t x = 0; x < image_.size(); ++x) {
      if (image_[x] != static_cast<int>(x)) {
        return false;
      }
    }
    return true;
  }

  Diagram Permutation::to_diagram() const {
    int const        n = degree();
    std::vector<int> labels(2 * n);
    for (int k = 0; k < n; ++k) {
      labels[k]             = k;
      labels[n + image_[k]] = k;
    }
    return Diagram(n, SetPartition::from_labels(labels));
  }

  std::vector<int> Permutation::reduced_word() const {
    // Peel off a left factor s_i at a descent: p = s_i then p', where p'
    // is p with positions i, i+1 swapped in one-line notation.
    std::vector<int> img(image_);
    std::vector<int> word;
    bool             changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < img.size(); ++i) {
        if (img[i] > img[i + 1]) {
          std::swap(img[i], img[i + 1]);
          word.push_back(static_cast<int>(i) + 1);
          changed = true;
          break;
        }
      }
    }
    return word;
  }

  std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < image_.size(); ++i) {
      os << (i ? " " : "") << image_[i] + 1;
    }
    os << ']';
    return os.str();
  }

}  // namespace tiedmon
