#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "pseudoprob/error.hpp"
#include "pseudoprob/scheme.hpp"

namespace pseudoprob {

namespace {

std::vector<std::size_t> members(std::uint32_t mask) {
  std::vector<std::size_t> out;
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

// best[mask] is the largest number of feasible blocks partitioning `mask`
// (-1 if none). Each partition is counted once by always putting the lowest
// remaining event in the block chosen first.
CoarseGraining minimal_coarse_graining(std::span<const double> entries, double eps) {
  const std::size_t n = entries.size();
  if (n == 0) throw Error(errc::kInvalidArgument, "empty event space");
  if (n > kMaxCoarseGrainingEvents) {
    throw Error(errc::kPartitionSearchTooLarge, std::to_string(n) + " events exceed the limit of " +
                                                    std::to_string(kMaxCoarseGrainingEvents));
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;

  std::vector<double> sum(std::size_t{full} + 1, 0.0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    sum[mask] = sum[mask & (mask - 1)] + entries[low];
  }
  auto feasible = [&](std::uint32_t block) { return sum[block] >= -eps; };

  std::vector<int> best(std::size_t{full} + 1, -1);
  std::vector<std::uint64_t> count(std::size_t{full} + 1, 0);
  best[0] = 0;
  count[0] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    // Enumerate every subset of `rest`, including the empty one.
    std::uint32_t sub = rest;
    while (true) {
      const std::uint32_t block = sub | low;
      const std::uint32_t remainder = mask ^ block;
      if (feasible(block) && best[remainder] >= 0) {
        const int candidate = best[remainder] + 1;
        if (candidate > best[mask]) {
          best[mask] = candidate;
          count[mask] = count[remainder];
        } else if (candidate == best[mask]) {
          count[mask] += count[remainder];
        }
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  }
  if (best[full] < 0) {
    throw Error(errc::kInvalidArgument, "no partition has all block sums >= -eps (total is negative)");
  }

  CoarseGraining out{Partition{}, static_cast<std::size_t>(best[full]), count[full]};
  std::uint32_t mask = full;
  while (mask != 0) {
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t rest = mask ^ low;
    std::vector<std::size_t> chosen;
    std::uint32_t chosen_mask = 0;
    std::uint32_t sub = rest;
    while (true) {
      const std::uint32_t block = sub | low;
      const std::uint32_t remainder = mask ^ block;
      if (feasible(block) && best[remainder] >= 0 && best[remainder] + 1 == best[mask]) {
        auto candidate = members(block);
        if (chosen.empty() || candidate < chosen) {
          chosen = std::move(candidate);
          chosen_mask = block;
        }
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
    out.partition.blocks.push_back(std::move(chosen));
    mask ^= chosen_mask;
  }
  return out;
}

}  // namespace pseudoprob
