#ifndef BCINTERP_PARTITION_HPP
#define BCINTERP_PARTITION_HPP

#include <string>
#include <vector>

#include "bcinterp/errors.hpp"

namespace bcinterp {

/*
 * Partition: weakly decreasing nonnegative integers, stored without
 * trailing zeros. Parts are addressed 1-based like the diagrams they
 * describe; part(i) is 0 beyond the length. Statistics that mention an
 * ambient variable count n take n as an argument, because the same
 * partition is reused across different n.
 */
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<long> parts);
  static Partition parse(const std::string& text);  // "2,1,0"

  const std::vector<long>& parts() const { return parts_; }
  long part(int i) const {  // 1-based
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int length() const { return static_cast<int>(parts_.size()); }
  long weight() const;
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  long n_stat() const;  // n(mu) = sum (i-1) mu_i
  bool contains(const Partition& nu) const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const;  // graded, then lex descending

  std::string to_string() const;  // "2,1" ; "0" for the empty partition

  Partition plus_one(int n) const;   // (mu_1+1, ..., mu_n+1)
  Partition minus_one(int n) const;  // requires mu_n > 0
  Partition drop_first() const;      // (mu_2, mu_3, ...)
  Partition tail_from(int i) const;  // (mu_i, mu_{i+1}, ...), 1-based

private:
  std::vector<long> parts_;
};

// Arm/leg statistics of a square, plus the mirror-image statistics of the
// enlarged diagram: a_mirror = mu_i + a', l_mirror = l + 2(n - mu'_j).
struct SquareStats {
  int i = 0, j = 0;
  long arm = 0, leg = 0, arm_colength = 0, leg_colength = 0;
  long arm_mirror = 0, leg_mirror = 0;
};

SquareStats square_stats(const Partition& mu, int n, int i, int j);

// nu interlaces mu from below: mu_1 >= nu_1 >= mu_2 >= nu_2 >= ...
bool interlaces(const Partition& nu, const Partition& mu);

// All partitions with |mu| <= max_weight and length <= max_length, in
// graded-lex order starting from the empty partition.
std::vector<Partition> partitions_upto(long max_weight, int max_length);

// Complement-transpose in an m^n box: (n - mu'_m, ..., n - mu'_1).
Partition tilde(const Partition& mu, int n, int m);

/*
 * Reverse tableau on mu with entries in 1..n: strictly decreasing down
 * columns, weakly decreasing along rows. Stored as the descending chain
 * mu = shape(0) > shape(1) > ... > shape(n) = empty, where shape(j) holds
 * the squares with entry > j; consecutive shapes interlace.
 */
class ReverseTableau {
public:
  ReverseTableau(Partition shape, std::vector<Partition> chain);

  const Partition& shape() const { return shape_; }
  int entries_bound() const { return static_cast<int>(chain_.size()) - 1; }  // n
  const std::vector<Partition>& chain() const { return chain_; }
  int entry(int i, int j) const;  // 1-based square coordinates

private:
  Partition shape_;
  std::vector<Partition> chain_;
};

std::vector<ReverseTableau> reverse_tableaux(const Partition& mu, int n);

}  // namespace bcinterp

#endif
