#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

#include "orbitk/numeric.hpp"

namespace orbitk {

/// Integer partition: weakly decreasing nonnegative parts, trailing zeros
/// dropped (canonical form), so two partitions are equal iff their part
/// vectors are.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;               // |lambda|
  int part(int i) const;          // 0-based, 0 past the end
  bool empty() const { return parts_.empty(); }

  Partition transpose() const;
  bool contains(const Partition& mu) const;  // mu_i <= lambda_i for all i

  /// Pad with zeros to exactly len parts (len >= length()).
  std::vector<int> padded(int len) const;

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

/// All partial sums of mu dominate those of lambda.  Requires |mu| == |lambda|.
bool dominance_geq(const Partition& mu, const Partition& lambda);

/// Hook (n-k+1, 1^{k-1}); requires 1 <= k <= n.
Partition hook_shape(int n, int k);

/// All partitions of n in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);

/// All partitions of n with at most max_len parts.
std::vector<Partition> partitions_of(int n, int max_len);

}  // namespace orbitk
