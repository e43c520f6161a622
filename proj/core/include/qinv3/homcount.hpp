#pragma once

#include "qinv3/fingroup.hpp"
#include "qinv3/fpgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qinv3 {

struct HomCountOptions {
  int threads = 0;                  ///< 0: QINV3_THREADS or 1
  bool symmetry_reduction = true;   ///< first generator over class representatives
};

/// |Hom(pi, G)| for the group presented by p. Depth-first assignment of
/// generators (most-constrained first) with relators checked as soon as all
/// their generators are assigned; a generator occurring once in a ready
/// relator is solved for instead of enumerated.
BigInt count_homs(const Presentation& p, const GroupTable& g, const HomCountOptions& opts = {});

/// Untwisted Dijkgraaf-Witten invariant |Hom(pi, G)| / |G|.
Rational dw_invariant(const Presentation& p, const GroupTable& g, const HomCountOptions& opts = {});

struct FingerprintEntry {
  std::string spec;
  long long order = 0;
  BigInt count;
  friend bool operator==(const FingerprintEntry&, const FingerprintEntry&) = default;
};

/// Hom counts over a group catalog, sorted by (order, spec string).
struct Fingerprint {
  std::vector<FingerprintEntry> entries;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Canonical catalog order: by group order, then spec string; duplicates dropped.
std::vector<std::string> canonical_catalog(std::vector<std::string> specs);

Fingerprint fingerprint(const Presentation& p, const std::vector<std::string>& catalog,
                        const HomCountOptions& opts = {});

struct FingerprintComparison {
  bool indistinguishable = true;
  std::string catalog_bound;            ///< e.g. "catalog <= 120, 33 groups"
  std::optional<FingerprintEntry> first_difference_p;
  std::optional<FingerprintEntry> first_difference_q;
  int groups_checked = 0;

  /// "indistinguishable (catalog <= n)" or "distinguished by G (x vs y)".
  std::string verdict() const;
};

/// Walks the catalog in canonical order and stops at the first group whose
/// counts differ. "indistinguishable" only ever refers to the catalog used.
FingerprintComparison compare_fingerprints(const Presentation& p, const Presentation& q,
                                           const std::vector<std::string>& catalog,
                                           const HomCountOptions& opts = {});

}  // namespace qinv3
