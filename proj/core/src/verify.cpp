#include "permorb/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>

#include "permorb/error.hpp"
#include "permorb/fusion_table.hpp"
#include "permorb/parallel.hpp"

namespace permorb {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool Report::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult* Report::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

namespace {

/// Collects the first witness reported by any worker.
class Witness {
 public:
  bool found() const { return found_.load(std::memory_order_relaxed); }
  void set(std::string text) {
    std::lock_guard lock(mutex_);
    if (!found_) {
      text_ = std::move(text);
      found_ = true;
    }
  }
  CheckResult result(std::string name, std::string summary) const {
    if (found_) return {std::move(name), CheckStatus::Fail, text_};
    return {std::move(name), CheckStatus::Pass, std::move(summary)};
  }

 private:
  std::atomic<bool> found_{false};
  std::mutex mutex_;
  std::string text_;
};

std::string multiset_text(const Orbifold& orb, const FusionMultiset& m) {
  std::string out = "{";
  bool first = true;
  for (const auto& [label, n] : m) {
    if (!first) out += ", ";
    first = false;
    if (n != 1) out += std::to_string(n) + "*";
    out += orb.to_string(label);
  }
  return out + "}";
}

FusionMultiset to_multiset(const FusionTable& table, std::span<const FusionTable::Entry> p) {
  FusionMultiset m;
  for (const auto& [c, n] : p) m[table.labels()[c]] = n;
  return m;
}

using Counts = std::vector<std::uint64_t>;

// (a x b) x c and a x (b x c) as dense count vectors.
void triple_products(const FusionTable& t, std::size_t a, std::size_t b, std::size_t c, Counts& left, Counts& right) {
  std::fill(left.begin(), left.end(), 0);
  std::fill(right.begin(), right.end(), 0);
  for (const auto& [e, n] : t.product(a, b))
    for (const auto& [d, m] : t.product(e, c)) left[d] += std::uint64_t{n} * m;
  for (const auto& [f, n] : t.product(b, c))
    for (const auto& [d, m] : t.product(a, f)) right[d] += std::uint64_t{n} * m;
}

}  // namespace

Report verify_orbifold(const Orbifold& orb, const VerifyOptions& options) {
  Report report;
  const std::size_t l = orb.discriminant_order();
  const Integer det = orb.lattice().det();
  const FusionTable table(orb, TableOptions{options.max_l, options.threads});
  const auto& labels = table.labels();
  const std::size_t n = labels.size();
  const std::size_t id = table.index(orb.identity());
  auto name = [&](std::size_t i) { return orb.to_string(labels[i]); };

  {
    const auto mods = orb.modules();
    const bool unique = std::adjacent_find(mods.begin(), mods.end()) == mods.end();
    const std::size_t expected = Orbifold::expected_module_count(l);
    if (mods.size() == expected && unique) {
      report.checks.push_back({"module-count", CheckStatus::Pass, std::to_string(expected) + " modules"});
    } else {
      report.checks.push_back({"module-count", CheckStatus::Fail,
                               "found " + std::to_string(mods.size()) + " (unique: " + (unique ? "yes" : "no") +
                                   "), expected " + std::to_string(expected)});
    }
  }

  {
    Witness w;
    for (std::size_t a = 0; a < n && !w.found(); ++a) {
      const auto p = table.product(id, a);
      if (p.size() != 1 || p[0].first != a || p[0].second != 1)
        w.set(name(id) + " x " + name(a) + " = " + multiset_text(orb, to_multiset(table, p)));
    }
    report.checks.push_back(w.result("identity", name(id) + " is a two-sided identity"));
  }

  {
    Witness w;
    parallel_for(
        n,
        [&](std::size_t a) {
          for (std::size_t b = a + 1; b < n && !w.found(); ++b) {
            const auto ab = orb.fuse(labels[a], labels[b]);
            const auto ba = orb.fuse(labels[b], labels[a]);
            if (ab != ba) w.set(name(a) + " x " + name(b) + " = " + multiset_text(orb, ab) + " but reversed gives " +
                                multiset_text(orb, ba));
          }
        },
        options.threads);
    report.checks.push_back(w.result("commutativity", "all pairs"));
  }

  if (l <= options.associativity_max_l) {
    Witness w;
    parallel_for(
        n,
        [&](std::size_t a) {
          Counts left(n), right(n);
          for (std::size_t b = 0; b < n && !w.found(); ++b)
            for (std::size_t c = 0; c < n; ++c) {
              triple_products(table, a, b, c, left, right);
              if (left != right) {
                w.set("(" + name(a) + " x " + name(b) + ") x " + name(c) + " differs from " + name(a) + " x (" +
                      name(b) + " x " + name(c) + ")");
                return;
              }
            }
        },
        options.threads);
    report.checks.push_back(w.result("associativity", std::to_string(n * n * n) + " triples"));
  } else {
    report.checks.push_back({"associativity", CheckStatus::Skipped,
                             "l = " + std::to_string(l) + " exceeds " + std::to_string(options.associativity_max_l)});
  }

  std::vector<QSqrt> qd;
  for (const auto& m : labels) qd.push_back(orb.qdim(m));

  {
    Witness w;
    parallel_for(
        n,
        [&](std::size_t a) {
          for (std::size_t b = a; b < n && !w.found(); ++b) {
            QSqrt sum(det);
            for (const auto& [c, mult] : table.product(a, b)) sum += static_cast<long>(mult) * qd[c];
            const QSqrt prod = qd[a] * qd[b];
            if (sum != prod)
              w.set("qdim(" + name(a) + ") * qdim(" + name(b) + ") = " + to_string(prod) + " but the product sums to " +
                    to_string(sum));
          }
        },
        options.threads);
    report.checks.push_back(w.result("qdim-homomorphism", "all pairs"));
  }

  {
    Witness w;
    for (std::size_t a = 0; a < n && !w.found(); ++a)
      if (!qd[a].at_least(1)) w.set("qdim(" + name(a) + ") = " + to_string(qd[a]));
    report.checks.push_back(w.result("qdim-lower-bound", "every qdim >= 1"));
  }

  {
    Witness w;
    parallel_for(
        n,
        [&](std::size_t a) {
          const std::size_t dual = table.index(orb.dual(labels[a]));
          for (std::size_t b = 0; b < n && !w.found(); ++b) {
            const unsigned expect = b == dual ? 1 : 0;
            if (table(a, b, id) != expect)
              w.set("N(" + name(a) + ", " + name(b) + "; " + name(id) + ") = " + std::to_string(table(a, b, id)) +
                    ", expected " + std::to_string(expect));
          }
        },
        options.threads);
    report.checks.push_back(w.result("duality-pairing", "N(a, b; identity) = [b = a']"));
  }

  {
    Witness w;
    parallel_for(
        n,
        [&](std::size_t a) {
          const auto da = orb.dual(labels[a]);
          for (std::size_t b = a; b < n && !w.found(); ++b) {
            FusionMultiset mapped;
            for (const auto& [c, mult] : table.product(a, b)) mapped[orb.dual(labels[c])] += mult;
            const auto direct = orb.fuse(da, orb.dual(labels[b]));
            if (mapped != direct)
              w.set("dual(" + name(a) + " x " + name(b) + ") = " + multiset_text(orb, mapped) + " but a' x b' = " +
                    multiset_text(orb, direct));
          }
        },
        options.threads);
    report.checks.push_back(w.result("dual-automorphism", "dual(a x b) = a' x b'"));
  }

  {
    const QSqrt g = orb.glob();
    const QSqrt expect(det, Rational(4 * det * det));
    if (g == expect) {
      report.checks.push_back({"glob", CheckStatus::Pass, "glob = " + to_string(g)});
    } else {
      report.checks.push_back({"glob", CheckStatus::Fail, "glob = " + to_string(g) + ", expected " + to_string(expect)});
    }
  }

  {
    const BaseFusion& base = orb.base();
    const std::size_t summands = std::size_t{1} << orb.dim();
    Witness decomposition, twisted_shape, induction;
    for (std::size_t a = 0; a < n; ++a) {
      const auto parts = orb.decompose(labels[a]);
      QSqrt total(det);
      for (const auto& [v, w] : parts) total += base.qdim(v) * base.qdim(w);
      const QSqrt expect = static_cast<long>(summands) * qd[a];
      if (parts.size() != summands || total != expect)
        decomposition.set(name(a) + " has " + std::to_string(parts.size()) + " constituents of total qdim " +
                          to_string(total) + ", expected " + std::to_string(summands) + " of total " + to_string(expect));
      if (labels[a].kind != OrbifoldLabel::Kind::Twisted) continue;
      for (const auto& part : parts) {
        if (!std::holds_alternative<TwistedSplit>(part.second)) {
          twisted_shape.set(name(a) + " has constituent " + base.to_string(part.first) + " x " +
                            base.to_string(part.second));
        }
        const auto back = orb.induce(part);
        if (!back || *back != labels[a]) {
          induction.set("constituent " + base.to_string(part.first) + " x " + base.to_string(part.second) + " of " +
                        name(a) + " induces to " + (back ? orb.to_string(*back) : std::string("nothing")));
        }
      }
    }
    report.checks.push_back(decomposition.result("decomposition", "qdim of constituents sums to 2^d qdim"));
    report.checks.push_back(twisted_shape.result("twisted-decomposition", "2^d twisted constituents each"));
    report.checks.push_back(induction.result("induction", "every twisted constituent induces back"));
  }

  {
    std::vector<std::size_t> nondiag;
    for (std::size_t a = 0; a < n; ++a)
      if (labels[a].kind == OrbifoldLabel::Kind::NonDiag) nondiag.push_back(a);
    Witness w;
    parallel_for(
        nondiag.size(),
        [&](std::size_t i) {
          const auto& a = labels[nondiag[i]];
          for (std::size_t j = 0; j < nondiag.size() && !w.found(); ++j) {
            const auto& b = labels[nondiag[j]];
            const auto unified = orb.fuse(a, b);
            bool any = false;
            for (bool sa : {false, true})
              for (bool sb : {false, true}) {
                const auto literal = orb.fuse_nondiag_literal(a, b, PairOrientation{sa, sb});
                if (!literal) continue;
                any = true;
                if (*literal != unified)
                  w.set(orb.to_string(a) + " x " + orb.to_string(b) + ": unified rule gives " +
                        multiset_text(orb, unified) + ", literal case gives " + multiset_text(orb, *literal));
              }
            if (!any) w.set(orb.to_string(a) + " x " + orb.to_string(b) + ": no literal case applies");
          }
        },
        options.threads);
    report.checks.push_back(w.result("nondiag-rule", std::to_string(nondiag.size() * nondiag.size()) + " pairs"));
  }

  {
    Witness mult, simple;
    for (std::size_t a = 0; a < n; ++a) {
      bool irreducible_products = true;
      for (std::size_t b = 0; b < n; ++b) {
        const auto p = table.product(a, b);
        for (const auto& [c, m] : p)
          if (m != 1) mult.set("N(" + name(a) + ", " + name(b) + "; " + name(c) + ") = " + std::to_string(m));
        if (p.size() != 1 || p[0].second != 1) irreducible_products = false;
      }
      if (irreducible_products != orb.is_simple_current(labels[a]))
        simple.set(name(a) + ": qdim " + to_string(qd[a]) + " but fusion products " +
                   (irreducible_products ? "are" : "are not") + " all irreducible");
    }
    report.checks.push_back(mult.result("multiplicity-one", "all multiplicities are 1"));
    report.checks.push_back(simple.result("simple-currents", "qdim 1 exactly for simple currents"));
  }

  const std::size_t base_labels = orb.base().vlplus_labels().size();
  if (base_labels <= options.base_max_labels) {
    report.append(verify_base(orb.base(), {}, options.threads));
  } else {
    report.checks.push_back({"base-suite", CheckStatus::Skipped,
                             std::to_string(base_labels) + " labels exceeds " + std::to_string(options.base_max_labels)});
  }
  return report;
}

Report verify_base(const BaseFusion& base, const RowMask& disabled, unsigned threads) {
  Report report;
  const auto labels = base.vlplus_labels();
  const std::size_t n = labels.size();
  const Integer det = base.lattice().det();
  auto name = [&](std::size_t i) { return base.to_string(labels[i]); };
  auto at = [&](std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; };

  // Completed rule and raw table lookup for every triple.
  std::vector<std::uint8_t> completed(n * n * n), raw(n * n * n);
  parallel_for(
      n,
      [&](std::size_t a) {
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) {
            completed[at(a, b, c)] = static_cast<std::uint8_t>(base.fusion_rule(labels[a], labels[b], labels[c], disabled));
            raw[at(a, b, c)] = static_cast<std::uint8_t>(base.table_rule(labels[a], labels[b], labels[c], disabled));
          }
      },
      threads);
  std::vector<std::vector<std::size_t>> products(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (completed[at(a, b, c)]) products[a * n + b].push_back(c);

  const std::size_t id = static_cast<std::size_t>(
      std::lower_bound(labels.begin(), labels.end(), VlPlusLabel{UntwistedSplit{0, Sign::Plus}}) - labels.begin());
  auto product_text = [&](std::size_t a, std::size_t b) {
    std::string s = "{";
    for (std::size_t c : products[a * n + b]) s += (s.size() > 1 ? ", " : "") + name(c);
    return s + "}";
  };

  {
    Witness w;
    for (std::size_t a = 0; a < n && !w.found(); ++a)
      for (std::size_t b : {a * n + id, id * n + a})
        if (products[b] != std::vector<std::size_t>{a})
          w.set(name(b / n) + " x " + name(b % n) + " = " + product_text(b / n, b % n));
    report.checks.push_back(w.result("base-identity", name(id) + " is a two-sided identity"));
  }

  {
    Witness w;
    for (std::size_t a = 0; a < n && !w.found(); ++a)
      for (std::size_t b = 0; b < n && !w.found(); ++b)
        for (std::size_t c = 0; c < n; ++c) {
          if (completed[at(a, b, c)] != completed[at(b, a, c)]) {
            w.set("N(" + name(a) + ", " + name(b) + "; " + name(c) + ") is not symmetric");
            break;
          }
          if (raw[at(a, b, c)] != raw[at(b, a, c)]) {
            w.set("table rows for " + name(a) + " and " + name(b) + " disagree on " + name(c));
            break;
          }
        }
    report.checks.push_back(w.result("base-commutativity", "completed rule and raw table"));
  }

  {
    Witness w;
    for (std::size_t a = 0; a < n && !w.found(); ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const unsigned expect = a == b ? 1 : 0;
        if (completed[at(a, b, id)] != expect) {
          w.set("N(" + name(a) + ", " + name(b) + "; " + name(id) + ") = " + std::to_string(completed[at(a, b, id)]));
          break;
        }
      }
      for (std::size_t b = 0; b < n && !w.found(); ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (raw[at(a, b, c)] != raw[at(a, c, b)]) {
            w.set("table row for " + name(a) + " lists (" + name(b) + ", " + name(c) + ") but not the reverse");
            break;
          }
    }
    report.checks.push_back(w.result("base-self-duality", "N(a, a; identity) = 1 and N(a, b; c) = N(a, c; b)"));
  }

  std::vector<QSqrt> qd;
  for (const auto& a : labels) qd.push_back(base.qdim(a));
  {
    Witness w;
    for (std::size_t a = 0; a < n && !w.found(); ++a)
      for (std::size_t b = 0; b < n; ++b) {
        QSqrt sum(det);
        for (std::size_t c : products[a * n + b]) sum += qd[c];
        if (sum != qd[a] * qd[b]) {
          w.set("qdim(" + name(a) + ") * qdim(" + name(b) + ") = " + to_string(qd[a] * qd[b]) + " but " +
                product_text(a, b) + " has qdim " + to_string(sum));
          break;
        }
      }
    report.checks.push_back(w.result("base-qdim-homomorphism", "all pairs"));
  }

  {
    Witness w;
    parallel_for(
        n,
        [&](std::size_t a) {
          std::vector<std::uint64_t> left(n), right(n);
          for (std::size_t b = 0; b < n && !w.found(); ++b)
            for (std::size_t c = 0; c < n; ++c) {
              std::fill(left.begin(), left.end(), 0);
              std::fill(right.begin(), right.end(), 0);
              for (std::size_t e : products[a * n + b])
                for (std::size_t d : products[e * n + c]) ++left[d];
              for (std::size_t f : products[b * n + c])
                for (std::size_t d : products[a * n + f]) ++right[d];
              if (left != right) {
                w.set("(" + name(a) + " x " + name(b) + ") x " + name(c) + " differs from " + name(a) + " x (" +
                      name(b) + " x " + name(c) + ")");
                return;
              }
            }
        },
        threads);
    report.checks.push_back(w.result("base-associativity", std::to_string(n * n * n) + " triples"));
  }

  {
    Witness w;
    const QSqrt one(det, 1);
    for (std::size_t a = 0; a < n && !w.found(); ++a) {
      bool irreducible_products = true;
      for (std::size_t b = 0; b < n; ++b)
        if (products[a * n + b].size() != 1) irreducible_products = false;
      if (irreducible_products != (qd[a] == one))
        w.set(name(a) + ": qdim " + to_string(qd[a]) + " but fusion products " +
              (irreducible_products ? "are" : "are not") + " all irreducible");
    }
    report.checks.push_back(w.result("base-simple-currents", "qdim 1 exactly for simple currents"));
  }
  return report;
}

}  // namespace permorb
