#ifndef TIEDMON_COUNTING_HPP_
#define TIEDMON_COUNTING_HPP_

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tiedmon {

  using BigInt = boost::multiprecision::cpp_int;

  // Largest argument accepted by the memoized tables below.
  inline constexpr int kCountTableBound = 256;

  BigInt factorial(int n);
  BigInt double_factorial_odd(int n);  // (2n-1)!!, with (-1)!! = 1
  BigInt binomial(int n, int k);       // 0 outside 0 <= k <= n
  BigInt catalan_number(int n);
  BigInt power_of_two(int n);

  // Exact Bell numbers b_m and Stirling numbers of the second kind
  // S(m,k), memoized up to a fixed bound. Thread-safe after construction.
  class CountTable {
   public:
    explicit CountTable(int bound = kCountTableBound);

    int bound() const noexcept {
      return bound_;
    }
    BigInt const& bell(int m) const;
    BigInt const& stirling2(int m, int k) const;

   private:
    int                              bound_;
    std::vector<BigInt>              bell_;
    std::vector<std::vector<BigInt>> stirling_;
  };

  // Shared process-wide table.
  CountTable const& count_table();

  inline BigInt const& bell(int m) {
    return count_table().bell(m);
  }
  inline BigInt const& stirling2(int m, int k) {
    return count_table().stirling2(m, k);
  }

}  // namespace tiedmon

#endif  // TIEDMON_COUNTING_HPP_
