#include "orbitk/partition.hpp"

#include <algorithm>

namespace orbitk {

namespace {
void validate_and_trim(std::vector<int>& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) throw Error("bad_partition", "negative part");
    if (i + 1 < p.size() && p[i] < p[i + 1])
      throw Error("bad_partition", "parts not weakly decreasing");
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
}
}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
  validate_and_trim(parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  validate_and_trim(parts_);
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::part(int i) const {
  return (i >= 0 && i < length()) ? parts_[i] : 0;
}

Partition Partition::transpose() const {
  if (parts_.empty()) return Partition{};
  std::vector<int> t(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) t[j]++;
  return Partition(std::move(t));
}

bool Partition::contains(const Partition& mu) const {
  for (int i = 0; i < mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

std::vector<int> Partition::padded(int len) const {
  std::vector<int> out(parts_);
  out.resize(len, 0);
  return out;
}

bool dominance_geq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size())
    throw Error("size_mismatch", "dominance comparison of unequal sizes");
  int len = std::max(mu.length(), lambda.length());
  int sm = 0, sl = 0;
  for (int i = 0; i < len; ++i) {
    sm += mu.part(i);
    sl += lambda.part(i);
    if (sm < sl) return false;
  }
  return true;
}

Partition hook_shape(int n, int k) {
  if (k < 1 || k > n) throw Error("bad_hook", "hook index out of range");
  std::vector<int> p(k, 1);
  p[0] = n - k + 1;
  return Partition(std::move(p));
}

namespace {
void gen_parts(int n, int max_part, int max_len, std::vector<int>& cur,
               std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(cur));
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_parts(n - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

std::vector<Partition> partitions_of(int n, int max_len) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n == 0) {
    out.push_back(Partition{});
    return out;
  }
  gen_parts(n, n, max_len, cur, out);
  return out;
}

}  // namespace orbitk
