#ifndef PATHCRYSTAL_PARTITION_HPP
#define PATHCRYSTAL_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

namespace pathcrystal {

// Integer partition: weakly decreasing positive parts.  The empty partition is
// allowed.  Two partitions are equal iff their positive parts agree, so
// trailing zeros are stripped on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // "3,2,1"; "" parses to the empty partition.
  static Partition parse(const std::string& s);

  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based
  int size() const;    // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }

  Partition conjugate() const;
  bool dominates(const Partition& o) const;  // pre: equal sizes

  std::string str() const;  // "3,2,1"

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// All partitions of N with at most max_length parts, each at most max_part.
// Deterministic order: lexicographically decreasing part vectors.
std::vector<Partition> partitions_of(int N, int max_length = -1,
                                     int max_part = -1);

}  // namespace pathcrystal

#endif
