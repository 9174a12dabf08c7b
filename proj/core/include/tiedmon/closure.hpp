#ifndef TIEDMON_CLOSURE_HPP_
#define TIEDMON_CLOSURE_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tiedmon/error.hpp"

namespace tiedmon {

  template <typename T>
  struct Labelled {
    std::string label;
    T           value;
  };

  // The submonoid generated by a list of labelled generators: elements in
  // discovery order (element 0 is the identity) and the right Cayley graph,
  // edges[x][g] = index of elements[x] * gens[g].
  template <typename T>
  class MonoidTable {
   public:
    MonoidTable() = default;

    MonoidTable(std::vector<std::string> labels,
                std::vector<T>           elements,
                std::vector<std::vector<int>> edges)
        : labels_(std::move(labels)),
          elements_(std::move(elements)),
          edges_(std::move(edges)) {
      index_.reserve(elements_.size());
      for (std::size_t x = 0; x < elements_.size(); ++x) {
        if (!index_.emplace(elements_[x], static_cast<int>(x)).second) {
          throw MalformedInput("duplicate element in monoid table");
        }
      }
      for (auto const& row : edges_) {
        if (row.size() != labels_.size()) {
          throw MalformedInput("edge row length differs from generator count");
        }
        for (int y : row) {
          if (y < 0 || static_cast<std::size_t>(y) >= elements_.size()) {
            throw MalformedInput("edge target outside the monoid table");
          }
        }
      }
    }

    std::size_t size() const noexcept {
      return elements_.size();
    }
    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }
    std::vector<T> const& elements() const noexcept {
      return elements_;
    }
    T const& operator[](std::size_t x) const {
      return elements_[x];
    }
    std::vector<std::vector<int>> const& edges() const noexcept {
      return edges_;
    }
    int edge(std::size_t x, std::size_t g) const {
      return edges_[x][g];
    }

    std::optional<int> find(T const& t) const {
      auto it = index_.find(t);
      if (it == index_.end()) {
        return std::nullopt;
      }
      return it->second;
    }
    bool contains(T const& t) const {
      return index_.count(t) != 0;
    }

    friend bool operator==(MonoidTable const& a, MonoidTable const& b) {
      return a.labels_ == b.labels_ && a.elements_ == b.elements_ && a.edges_ == b.edges_;
    }

   private:
    std::vector<std::string>      labels_;
    std::vector<T>                elements_;
    std::vector<std::vector<int>> edges_;
    std::unordered_map<T, int>    index_;
  };

  inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

  // Breadth-first right multiplication: elements are processed in discovery
  // order and each is multiplied by the generators in the given order.
  // Throws BudgetExceeded once more than `limit` elements would be needed.
  template <typename T>
  MonoidTable<T> closure(T const&                         identity,
                         std::vector<Labelled<T>> const&  gens,
                         std::size_t                      limit = kNoLimit) {
    std::vector<std::string> labels;
    labels.reserve(gens.size());
    for (auto const& g : gens) {
      labels.push_back(g.label);
    }
    std::vector<T>                elements{identity};
    std::vector<std::vector<int>> edges;
    std::unordered_map<T, int>    index{{identity, 0}};
    if (limit < 1) {
      throw BudgetExceeded("closure budget of 0 elements", 0);
    }
    for (std::size_t x = 0; x < elements.size(); ++x) {
      std::vector<int> row(gens.size());
      for (std::size_t g = 0; g < gens.size(); ++g) {
        T    y             = elements[x] * gens[g].value;
        auto [it, created] = index.try_emplace(std::move(y), static_cast<int>(elements.size()));
        if (created) {
          if (elements.size() >= limit) {
            throw BudgetExceeded("closure exceeded the budget of " + std::to_string(limit)
                                     + " elements",
                                 elements.size());
          }
          elements.push_back(it->first);
        }
        row[g] = it->second;
      }
      edges.push_back(std::move(row));
    }
    return MonoidTable<T>(std::move(labels), std::move(elements), std::move(edges));
  }

}  // namespace tiedmon

#endif  // TIEDMON_CLOSURE_HPP_
