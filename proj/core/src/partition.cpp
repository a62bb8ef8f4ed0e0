#include "bcinterp/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bcinterp {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error("negative part in partition");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& text) {
  std::vector<long> parts;
  if (text.empty()) return Partition(parts);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = std::stol(item, &used);
    if (used != item.size()) throw Error("malformed partition: " + text);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

long Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

Partition Partition::conjugate() const {
  std::vector<long> conj;
  if (parts_.empty()) return Partition(conj);
  conj.resize(static_cast<std::size_t>(parts_[0]), 0);
  for (long p : parts_)
    for (long j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

long Partition::n_stat() const {
  long acc = 0;
  for (int i = 1; i <= length(); ++i) acc += static_cast<long>(i - 1) * part(i);
  return acc;
}

bool Partition::contains(const Partition& nu) const {
  for (int i = 1; i <= nu.length(); ++i)
    if (nu.part(i) > part(i)) return false;
  return true;
}

bool Partition::operator<(const Partition& o) const {
  long wa = weight(), wb = o.weight();
  if (wa != wb) return wa < wb;
  return parts_ > o.parts_;  // lex-descending within a grade
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  return out.str();
}

Partition Partition::plus_one(int n) const {
  if (length() > n) throw LengthExceeded();
  std::vector<long> parts(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) parts[static_cast<std::size_t>(i - 1)] = part(i) + 1;
  return Partition(std::move(parts));
}

Partition Partition::minus_one(int n) const {
  if (length() > n) throw LengthExceeded();
  if (part(n) <= 0) throw NotStrictlyPositive();
  std::vector<long> parts(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) parts[static_cast<std::size_t>(i - 1)] = part(i) - 1;
  return Partition(std::move(parts));
}

Partition Partition::drop_first() const { return tail_from(2); }

Partition Partition::tail_from(int i) const {
  std::vector<long> parts;
  for (int k = i; k <= length(); ++k) parts.push_back(part(k));
  return Partition(std::move(parts));
}

SquareStats square_stats(const Partition& mu, int n, int i, int j) {
  if (mu.length() > n) throw LengthExceeded();
  if (i < 1 || j < 1 || j > mu.part(i)) throw OutOfDiagram(i, j);
  Partition conj = mu.conjugate();
  SquareStats st;
  st.i = i;
  st.j = j;
  st.arm = mu.part(i) - j;
  st.leg = conj.part(j) - i;
  st.arm_colength = j - 1;
  st.leg_colength = i - 1;
  st.arm_mirror = mu.part(i) + st.arm_colength;
  st.leg_mirror = st.leg + 2 * (n - conj.part(j));
  return st;
}

bool interlaces(const Partition& nu, const Partition& mu) {
  int len = std::max(nu.length(), mu.length());
  for (int i = 1; i <= len; ++i) {
    if (nu.part(i) > mu.part(i)) return false;
    if (nu.part(i) < mu.part(i + 1)) return false;
  }
  return true;
}

std::vector<Partition> partitions_upto(long max_weight, int max_length) {
  std::vector<Partition> out;
  std::vector<long> current;
  auto rec = [&](auto&& self, long remaining, long cap) -> void {
    out.emplace_back(current);
    if (static_cast<int>(current.size()) >= max_length) return;
    long bound = std::min(remaining, cap);
    for (long p = 1; p <= bound; ++p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  if (max_weight >= 0 && max_length >= 0) rec(rec, max_weight, max_weight);
  std::sort(out.begin(), out.end());
  return out;
}

Partition tilde(const Partition& mu, int n, int m) {
  if (mu.length() > n || mu.part(1) > m) throw NotInBox();
  Partition conj = mu.conjugate();
  std::vector<long> parts(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) parts[static_cast<std::size_t>(j - 1)] = n - conj.part(m - j + 1);
  return Partition(std::move(parts));
}

ReverseTableau::ReverseTableau(Partition shape, std::vector<Partition> chain)
    : shape_(std::move(shape)), chain_(std::move(chain)) {
  if (chain_.empty() || chain_.front() != shape_ || !chain_.back().empty())
    throw Error("tableau chain must run from the shape down to the empty partition");
  for (std::size_t r = 1; r < chain_.size(); ++r)
    if (!interlaces(chain_[r], chain_[r - 1])) throw Error("tableau chain steps must interlace");
}

int ReverseTableau::entry(int i, int j) const {
  if (i < 1 || j < 1 || j > shape_.part(i)) throw OutOfDiagram(i, j);
  // chain_[e-1] contains the square, chain_[e] does not; the entry is e.
  for (int e = 1; e <= entries_bound(); ++e)
    if (j > chain_[static_cast<std::size_t>(e)].part(i)) return e;
  throw Error("tableau chain does not reach the empty partition");
}

std::vector<ReverseTableau> reverse_tableaux(const Partition& mu, int n) {
  if (mu.length() > n) throw LengthExceeded();
  std::vector<ReverseTableau> out;
  std::vector<Partition> chain{mu};
  auto rec = [&](auto&& self, const Partition& top, int levels_left) -> void {
    if (levels_left == 0) {
      if (top.empty()) out.emplace_back(mu, chain);
      return;
    }
    // All nu interlacing top from below: nu_i in [top_{i+1}, top_i]. The
    // ranges force nu weakly decreasing, so a plain product walk suffices.
    int rows = top.length();
    std::vector<long> lo(static_cast<std::size_t>(rows)), hi(static_cast<std::size_t>(rows));
    for (int i = 1; i <= rows; ++i) {
      lo[static_cast<std::size_t>(i - 1)] = top.part(i + 1);
      hi[static_cast<std::size_t>(i - 1)] = top.part(i);
    }
    std::vector<long> cur = lo;
    while (true) {
      Partition nu{std::vector<long>(cur)};
      chain.push_back(nu);
      self(self, nu, levels_left - 1);
      chain.pop_back();
      int k = rows - 1;
      while (k >= 0 && cur[static_cast<std::size_t>(k)] == hi[static_cast<std::size_t>(k)]) --k;
      if (k < 0) break;
      ++cur[static_cast<std::size_t>(k)];
      for (int j = k + 1; j < rows; ++j)
        cur[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
    }
  };
  rec(rec, mu, n);
  return out;
}

}  // namespace bcinterp
