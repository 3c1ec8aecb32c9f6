#pragma once

// Direct implementations of the gallery examples over std containers, with
// no recursion schemes involved. Tests and the gallery registry compare
// against these.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schemata::oracle {

using BigInt = boost::multiprecision::cpp_int;

inline std::vector<long> sorted(std::vector<long> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

/// Longest strictly increasing subsequence by trying all 2^n subsequences.
inline long lis_brute(const std::vector<long>& xs) {
  const std::size_t n = xs.size();
  long best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    long len = 0;
    bool ok = true;
    std::optional<long> last;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      if (last && !(*last < xs[i])) ok = false;
      last = xs[i];
      ++len;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

/// Quadratic table over suffixes.
inline long lis_dp(const std::vector<long>& xs) {
  std::vector<long> from(xs.size(), 1);
  long best = 0;
  for (std::size_t i = xs.size(); i-- > 0;) {
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] < xs[j]) from[i] = std::max(from[i], from[j] + 1);
    best = std::max(best, from[i]);
  }
  return best;
}

/// The unmemoised lis' recursion on suffixes, counting its calls. Under lazy
/// evaluation the inner recursion only forces the first component, so that
/// is all lis_first computes; lis_naive walks the spine for the second.
inline long lis_first(const std::vector<long>& xs, std::size_t start, std::uint64_t& calls) {
  ++calls;
  if (start == xs.size()) return 0;
  long best_next = 0;
  for (std::size_t sub = start + 1; sub <= xs.size(); ++sub)
    if (sub == xs.size() || xs[start] < xs[sub]) best_next = std::max(best_next, lis_first(xs, sub, calls));
  return 1 + best_next;
}

inline long lis_naive(const std::vector<long>& xs, std::uint64_t& calls) {
  long b = 0;
  ++calls;  // lis' [] at the end of the spine
  for (std::size_t start = xs.size(); start-- > 0;) b = std::max(b, lis_first(xs, start, calls));
  return b;
}

inline long lcs_dp(const std::string& a, const std::string& b) {
  std::vector<std::vector<long>> t(a.size() + 1, std::vector<long>(b.size() + 1, 0));
  for (std::size_t i = a.size(); i-- > 0;)
    for (std::size_t j = b.size(); j-- > 0;)
      t[i][j] = a[i] == b[j] ? t[i + 1][j + 1] + 1 : std::max(t[i + 1][j], t[i][j + 1]);
  return t[0][0];
}

inline std::string rld_expand(const std::vector<std::pair<long, char>>& runs) {
  std::string out;
  for (const auto& [n, c] : runs) out.append(static_cast<std::size_t>(n), c);
  return out;
}

/// The Ackermann recurrence with an explicit stack.
inline std::uint64_t ack(std::uint64_t m, std::uint64_t n) {
  std::vector<std::uint64_t> stack{m};
  while (!stack.empty()) {
    std::uint64_t k = stack.back();
    stack.pop_back();
    if (k == 0) {
      n = n + 1;
    } else if (n == 0) {
      stack.push_back(k - 1);
      n = 1;
    } else {
      stack.push_back(k - 1);
      stack.push_back(k);
      n = n - 1;
    }
  }
  return n;
}

inline BigInt fib(std::uint64_t n) {
  BigInt a = 0, b = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

inline BigInt factorial(std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline long wc(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  long n = 0;
  while (in >> word) ++n;
  return n;
}

inline std::vector<long> merge(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<long> insert(long y, std::vector<long> xs) {
  auto at = std::find_if(xs.begin(), xs.end(), [y](long x) { return y <= x; });
  xs.insert(at, y);
  return xs;
}

inline std::vector<double> linspace(double s, double e, long n) {
  std::vector<double> out;
  double step = (e - s) / static_cast<double>(n + 1);
  for (double i = s; i < e; i += step) out.push_back(i);
  return out;
}

}  // namespace schemata::oracle
