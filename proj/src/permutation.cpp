#include "normcov/permutation.hpp"

#include <algorithm>

#include "normcov/errors.hpp"

namespace normcov {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int y : img_) {
    if (y < 0 || static_cast<std::size_t>(y) >= img_.size() || seen[static_cast<std::size_t>(y)])
      throw domain_error("image vector is not a permutation");
    seen[static_cast<std::size_t>(y)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    img[static_cast<std::size_t>(i)] = i;
  return Perm(std::move(img));
}

Perm Perm::of_type(const Partition &t, int first) {
  const int n = first + t.degree();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    img[static_cast<std::size_t>(i)] = i;
  int start = first;
  for (int len : t.parts()) {
    for (int i = 0; i < len; ++i)
      img[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
    start += len;
  }
  return Perm(std::move(img));
}

Perm Perm::transposition(int n, int a, int b) {
  Perm p = identity(n);
  std::swap(p.img_[static_cast<std::size_t>(a)], p.img_[static_cast<std::size_t>(b)]);
  return p;
}

Perm Perm::compose(const Perm &other) const {
  std::vector<int> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    img[x] = img_[static_cast<std::size_t>(other.img_[x])];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    img[static_cast<std::size_t>(img_[x])] = static_cast<int>(x);
  return Perm(std::move(img));
}

Perm Perm::pow(u64 e) const {
  Perm result = identity(degree());
  Perm base = *this;
  while (e) {
    if (e & 1)
      result = result.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return result;
}

Perm Perm::conjugate_by(const Perm &g) const { return g.inverse().compose(*this).compose(g); }

Partition Perm::cycle_type() const {
  const int n = degree();
  std::vector<int> lens;
  std::vector<bool> seen(img_.size(), false);
  for (int x = 0; x < n; ++x) {
    if (seen[static_cast<std::size_t>(x)])
      continue;
    int len = 0;
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = img_[static_cast<std::size_t>(y)]) {
      seen[static_cast<std::size_t>(y)] = true;
      ++len;
    }
    lens.push_back(len);
  }
  return Partition::from_parts(lens);
}

u64 Perm::order() const {
  const int n = degree();
  Perm p = *this;
  const Perm id = identity(n);
  u64 k = 1;
  while (!(p == id)) {
    p = p.compose(*this);
    ++k;
  }
  return k;
}

bool Perm::is_even() const {
  const Partition t = cycle_type();
  return (t.degree() - t.part_count()) % 2 == 0;
}

bool stabilizes_set(std::span<const Perm> gens, const std::vector<bool> &members) {
  for (const Perm &g : gens)
    for (std::size_t x = 0; x < members.size(); ++x)
      if (members[x] && !members[static_cast<std::size_t>(g(static_cast<int>(x)))])
        return false;
  return true;
}

bool preserves_blocks(std::span<const Perm> gens, std::span<const int> block_of) {
  const std::size_t n = block_of.size();
  for (const Perm &g : gens) {
    // Each block must map into a single block.
    std::vector<int> image_block(n, -1);
    for (std::size_t x = 0; x < n; ++x) {
      const int src = block_of[x];
      const int dst = block_of[static_cast<std::size_t>(g(static_cast<int>(x)))];
      int &slot = image_block[static_cast<std::size_t>(src)];
      if (slot == -1)
        slot = dst;
      else if (slot != dst)
        return false;
    }
  }
  return true;
}

void for_each_subset(int n, int k, const std::function<bool(const std::vector<bool> &)> &visit) {
  if (k < 0 || k > n)
    return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    idx[static_cast<std::size_t>(i)] = i;
  std::vector<bool> members(static_cast<std::size_t>(n));
  while (true) {
    std::fill(members.begin(), members.end(), false);
    for (int i : idx)
      members[static_cast<std::size_t>(i)] = true;
    if (!visit(members))
      return;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
      --i;
    if (i < 0)
      return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

namespace {

// Fills the lowest unassigned letter's block with b-1 further letters.
bool block_systems_rec(int b, int n, std::vector<int> &block_of, int next_block,
                       const std::function<bool(std::span<const int>)> &visit) {
  int first = -1;
  for (int x = 0; x < n; ++x)
    if (block_of[static_cast<std::size_t>(x)] == -1) {
      first = x;
      break;
    }
  if (first == -1)
    return visit(block_of);
  block_of[static_cast<std::size_t>(first)] = next_block;
  std::vector<int> chosen;
  std::function<bool(int)> pick = [&](int from) -> bool {
    if (static_cast<int>(chosen.size()) == b - 1)
      return block_systems_rec(b, n, block_of, next_block + 1, visit);
    for (int y = from; y < n; ++y) {
      if (block_of[static_cast<std::size_t>(y)] != -1)
        continue;
      block_of[static_cast<std::size_t>(y)] = next_block;
      chosen.push_back(y);
      const bool go_on = pick(y + 1);
      chosen.pop_back();
      block_of[static_cast<std::size_t>(y)] = -1;
      if (!go_on)
        return false;
    }
    return true;
  };
  const bool go_on = pick(first + 1);
  block_of[static_cast<std::size_t>(first)] = -1;
  return go_on;
}

} // namespace

void for_each_block_system(int b, int m,
                           const std::function<bool(std::span<const int>)> &visit) {
  const int n = b * m;
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  block_systems_rec(b, n, block_of, 0, visit);
}

std::vector<Perm> affine_group(int p) {
  std::vector<Perm> out;
  for (int a = 1; a < p; ++a)
    for (int c = 0; c < p; ++c) {
      std::vector<int> img(static_cast<std::size_t>(p));
      for (int x = 0; x < p; ++x)
        img[static_cast<std::size_t>(x)] = (a * x + c) % p;
      out.emplace_back(std::move(img));
    }
  return out;
}

} // namespace normcov
