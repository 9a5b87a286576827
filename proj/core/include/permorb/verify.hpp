#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "permorb/base_fusion.hpp"
#include "permorb/orbifold.hpp"

namespace permorb {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  /// Witness on failure, reason when skipped, a short summary otherwise.
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// nullptr when no check of that name ran.
  const CheckResult* find(std::string_view name) const;
  void append(const Report& other);
};

struct VerifyOptions {
  /// Bound on l for building the fusion table at all.
  std::size_t max_l = 64;
  /// Associativity is exhaustive over label triples; skipped above this l.
  std::size_t associativity_max_l = 12;
  /// The V_{sqrt2 L}^+ suite works on a dense N[a][b][c] cube; skipped above
  /// this many labels.
  std::size_t base_max_labels = 128;
  unsigned threads = 0;
};

/// Fusion-ring axioms and structural checks for the orbifold, followed by the
/// V_{sqrt2 L}^+ suite when it is small enough. Throws TableTooLarge when
/// l > options.max_l.
Report verify_orbifold(const Orbifold& orbifold, const VerifyOptions& options = {});

/// Identity, commutativity, self-duality, qdim homomorphism, associativity and
/// the simple-current characterization for V_{sqrt2 L}^+, with the given table
/// rows switched off.
Report verify_base(const BaseFusion& base, const RowMask& disabled = {}, unsigned threads = 0);

}  // namespace permorb
