#include <mutex>

#include "baxter/shuffle.hpp"

namespace baxter {

std::vector<MixableShuffle> enumerate_mixable_shuffles(std::size_t m, std::size_t n, std::size_t limit) {
  if (m + n > limit)
    throw Error(ErrorCode::EnumerationTooLarge,
                "S(" + std::to_string(m) + "," + std::to_string(n) + ") exceeds the bound m+n <= " + std::to_string(limit));
  std::vector<MixableShuffle> out;
  const std::size_t total = m + n;
  if (m == 0 || n == 0) {
    MixableShuffle s{m, n, {}, {}};
    for (std::size_t i = 1; i <= m; ++i) s.positions.push_back(i);
    out.push_back(std::move(s));
    return out;
  }

  std::vector<std::size_t> pos(m);
  for (std::size_t i = 0; i < m; ++i) pos[i] = i + 1;
  std::vector<char> from_x(total + 2, 0);
  std::vector<std::size_t> admissible;
  while (true) {
    std::fill(from_x.begin(), from_x.end(), 0);
    for (std::size_t p : pos) from_x[p] = 1;
    admissible.clear();
    for (std::size_t k = 1; k < total; ++k)
      if (from_x[k] && !from_x[k + 1]) admissible.push_back(k);

    const std::size_t subsets = std::size_t{1} << admissible.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      MixableShuffle s{m, n, pos, {}};
      for (std::size_t b = 0; b < admissible.size(); ++b)
        if (mask & (std::size_t{1} << b)) s.merges.push_back(admissible[b]);
      out.push_back(std::move(s));
    }

    // Next m-subset of {1..total} in lexicographic order.
    std::size_t i = m;
    while (i > 0 && pos[i - 1] == total - m + i) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t j = i; j < m; ++j) pos[j] = pos[j - 1] + 1;
  }
  return out;
}

std::shared_ptr<const std::vector<MixableShuffle>> cached_mixable_shuffles(std::size_t m, std::size_t n) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const std::vector<MixableShuffle>>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({m, n});
    if (it != cache.end()) return it->second;
  }
  auto computed = std::make_shared<const std::vector<MixableShuffle>>(enumerate_mixable_shuffles(m, n));
  std::lock_guard lock(mutex);
  return cache.try_emplace({m, n}, std::move(computed)).first->second;
}

MixedFactors apply_mixable_shuffle(std::span<const Monomial> xplus, std::span<const Monomial> yplus,
                                   const MixableShuffle& s) {
  if (xplus.size() != s.m || yplus.size() != s.n)
    throw Error(ErrorCode::ShapeMismatch, "factor counts " + std::to_string(xplus.size()) + "," +
                                              std::to_string(yplus.size()) + " do not match S(" +
                                              std::to_string(s.m) + "," + std::to_string(s.n) + ")");
  if (s.positions.size() != s.m) throw Error(ErrorCode::ShapeMismatch, "positions must list m slots");
  const std::size_t total = s.m + s.n;
  MixedFactors out;
  out.factors.reserve(total - s.merges.size());
  out.merge_count = s.merges.size();
  std::size_t next_pos = 0;    // index into s.positions
  std::size_t next_merge = 0;  // index into s.merges
  std::size_t xi = 0;
  std::size_t yi = 0;
  for (std::size_t slot = 1; slot <= total; ++slot) {
    const bool is_x = next_pos < s.positions.size() && s.positions[next_pos] == slot;
    if (is_x) {
      ++next_pos;
      if (next_merge < s.merges.size() && s.merges[next_merge] == slot) {
        // Slot k holds x, slot k+1 holds y; both fold into one factor.
        if (slot == total || (next_pos < s.positions.size() && s.positions[next_pos] == slot + 1))
          throw Error(ErrorCode::ShapeMismatch, "merge at slot " + std::to_string(slot) + " is not admissible");
        ++next_merge;
        out.factors.push_back(xplus[xi++] * yplus[yi++]);
        ++slot;
      } else {
        out.factors.push_back(xplus[xi++]);
      }
    } else {
      if (yi == s.n) throw Error(ErrorCode::ShapeMismatch, "malformed mixable shuffle");
      out.factors.push_back(yplus[yi++]);
    }
  }
  if (next_merge != s.merges.size() || xi != s.m || yi != s.n)
    throw Error(ErrorCode::ShapeMismatch, "malformed mixable shuffle");
  return out;
}

}  // namespace baxter
