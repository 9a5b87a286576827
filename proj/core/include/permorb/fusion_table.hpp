#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "permorb/orbifold.hpp"

namespace permorb {

struct TableOptions {
  /// Refuse to build the table when l exceeds this bound.
  std::size_t max_l = 64;
  /// 0 means one worker per hardware thread.
  unsigned threads = 0;
};

/// All fusion products of an orbifold, N[a][b][c], stored sparsely. Labels are
/// numbered in the global order of Orbifold::modules().
class FusionTable {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (c, multiplicity)

  /// Throws TableTooLarge when l > options.max_l.
  explicit FusionTable(const Orbifold& orbifold, TableOptions options = {});

  const std::vector<OrbifoldLabel>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t index(const OrbifoldLabel& m) const;

  /// Nonzero entries of a x b, sorted by c.
  std::span<const Entry> product(std::size_t a, std::size_t b) const;
  unsigned operator()(std::size_t a, std::size_t b, std::size_t c) const;

 private:
  std::size_t slot(std::size_t a, std::size_t b) const;

  std::vector<OrbifoldLabel> labels_;
  std::vector<std::size_t> offsets_;
  std::vector<Entry> entries_;
};

}  // namespace permorb
