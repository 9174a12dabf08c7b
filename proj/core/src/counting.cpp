#include "tiedmon/counting.hpp"

#include <string>

#include "tiedmon/error.hpp"

namespace tiedmon {

  BigInt factorial(int n) {
    if (n < 0) {
      throw DomainError("factorial of a negative number");
    }
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) {
      r *= i;
    }
    return r;
  }

  BigInt double_factorial_odd(int n) {
    if (n < 0) {
      throw DomainError("(2n-1)!! needs n >= 0");
    }
    BigInt r = 1;
    for (int i = 3; i <= 2 * n - 1; i += 2) {
      r *= i;
    }
    return r;
  }

  BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
      return 0;
    }
    if (k > n - k) {
      k = n - k;
    }
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
      r *= n - k + i;
      r /= i;
    }
    return r;
  }

  BigInt catalan_number(int n) {
    return binomial(2 * n, n) / (n + 1);
  }

  BigInt power_of_two(int n) {
    BigInt r = 1;
    r <<= n;
    return r;
  }

  CountTable::CountTable(int bound) : bound_(bound) {
    stirling_.assign(bound + 1, std::vector<BigInt>());
    stirling_[0].assign(1, BigInt(1));
    for (int m = 1; m <= bound; ++m) {
      auto& row = stirling_[m];
      row.assign(m + 1, BigInt(0));
      for (int k = 1; k <= m; ++k) {
        BigInt v = stirling_[m - 1].size() > static_cast<std::size_t>(k)
                       ? stirling_[m - 1][k] * k
                       : BigInt(0);
        v += stirling_[m - 1][k - 1];
        row[k] = std::move(v);
      }
    }
    bell_.resize(bound + 1);
    for (int m = 0; m <= bound; ++m) {
      BigInt s = 0;
      for (auto const& v : stirling_[m]) {
        s += v;
      }
      bell_[m] = std::move(s);
    }
  }

  BigInt const& CountTable::bell(int m) const {
    if (m < 0 || m > bound_) {
      throw BudgetExceeded("Bell number index " + std::to_string(m)
                               + " outside the table bound",
                           static_cast<std::size_t>(bound_));
    }
    return bell_[m];
  }

  BigInt const& CountTable::stirling2(int m, int k) const {
    static BigInt const zero = 0;
    if (m < 0 || m > bound_) {
      throw BudgetExceeded("Stirling number index " + std::to_string(m)
                               + " outside the table bound",
                           static_cast<std::size_t>(bound_));
    }
    if (k < 0 || k > m) {
      return zero;
    }
    return stirling_[m][k];
  }

  CountTable const& count_table() {
    static CountTable const table;
    return table;
  }

}  // namespace tiedmon
