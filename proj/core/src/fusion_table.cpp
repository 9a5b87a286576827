#include "permorb/fusion_table.hpp"

#include <algorithm>

#include "permorb/error.hpp"
#include "permorb/parallel.hpp"

namespace permorb {

FusionTable::FusionTable(const Orbifold& orbifold, TableOptions options) {
  const std::size_t l = orbifold.discriminant_order();
  if (l > options.max_l) {
    throw Error(ErrorKind::TableTooLarge,
                "l = " + std::to_string(l) + " exceeds the table bound " + std::to_string(options.max_l));
  }
  labels_ = orbifold.modules();
  const std::size_t n = labels_.size();

  // Row a holds the products a x b for b >= a.
  std::vector<std::vector<Entry>> rows(n);
  std::vector<std::vector<std::size_t>> row_sizes(n);
  parallel_for(
      n,
      [&](std::size_t a) {
        for (std::size_t b = a; b < n; ++b) {
          const auto product = orbifold.fuse(labels_[a], labels_[b]);
          row_sizes[a].push_back(product.size());
          for (const auto& [c, mult] : product)
            rows[a].emplace_back(static_cast<std::uint32_t>(index(c)), mult);
        }
      },
      options.threads);

  offsets_.reserve(n * (n + 1) / 2 + 1);
  offsets_.push_back(0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t s : row_sizes[a]) offsets_.push_back(offsets_.back() + s);
    entries_.insert(entries_.end(), rows[a].begin(), rows[a].end());
    std::vector<Entry>().swap(rows[a]);
  }
}

std::size_t FusionTable::index(const OrbifoldLabel& m) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), m);
  if (it == labels_.end() || *it != m) throw Error(ErrorKind::NotInAmbientGroup, "label is not canonical");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t FusionTable::slot(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  const std::size_t n = labels_.size();
  return a * n - a * (a - 1) / 2 + (b - a);
}

std::span<const FusionTable::Entry> FusionTable::product(std::size_t a, std::size_t b) const {
  const std::size_t s = slot(a, b);
  return {entries_.data() + offsets_[s], offsets_[s + 1] - offsets_[s]};
}

unsigned FusionTable::operator()(std::size_t a, std::size_t b, std::size_t c) const {
  const auto p = product(a, b);
  auto it = std::lower_bound(p.begin(), p.end(), Entry{static_cast<std::uint32_t>(c), 0},
                             [](const Entry& x, const Entry& y) { return x.first < y.first; });
  return it != p.end() && it->first == c ? it->second : 0;
}

}  // namespace permorb
