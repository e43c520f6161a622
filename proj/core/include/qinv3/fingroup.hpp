#pragma once

#include "qinv3/cyclotomic.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qinv3 {

/// Unvalidated multiplication table, as read from a file or built by hand.
struct RawTable {
  int order = 0;
  std::vector<int> entries;  ///< row-major, entries[i*order+j] = i*j
};

struct TableReport {
  bool passed = true;
  std::vector<std::string> violations;  ///< first few, human readable
};

/// Identity at index 0, two-sided inverses, Latin-square rows and columns,
/// associativity (all triples up to order 128, 10^6 seeded random triples
/// beyond).
TableReport validate_table(const RawTable& t);

/// A finite group as a validated Cayley table. Identity is element 0.
class GroupTable {
 public:
  /// Validates; throws SpecError with the first violation on failure.
  GroupTable(RawTable table, std::string name);

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  int mul(int a, int b) const { return product_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& table() const { return product_; }
  const std::vector<int>& inverses() const { return inverse_; }

  bool is_abelian() const;
  int element_order(int a) const;
  int exponent() const;
  RawTable raw() const { return {n_, product_}; }

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.n_ == b.n_ && a.product_ == b.product_;
  }

 private:
  int n_;
  std::string name_;
  std::vector<int> product_;
  std::vector<int> inverse_;
};

/// Group spec grammar (compact strings, products joined by 'x'):
///   Z<n>       cyclic, elements 0..n-1 (n >= 1)
///   D<n>       dihedral of order 2n, elements r^i then s r^i (n >= 1)
///   S<n>       symmetric, permutations in lexicographic one-line order (n <= 6)
///   A<n>       alternating, even permutations in that order (n <= 6)
///   Q8         quaternions 1,-1,i,-i,j,-j,k,-k
///   Dic<n>     dicyclic of order 4n, a^i x^e with a^2n = 1, x^2 = a^n (n >= 2)
///   SL2_<p>    SL(2, F_p) for prime p <= 7; identity first, then
///              lexicographic (a,b,c,d)
///   G1xG2      direct product, elements as row-major pairs
GroupTable make_group(std::string_view spec);
/// Order computed from the spec grammar without building the table.
long long group_spec_order(std::string_view spec);

/// The fingerprint catalog: one group per isomorphism class of order <= 15,
/// followed by S4, SL2_3, A5, SL2_5 and S5. Sorted by (order, spec).
std::vector<std::string> full_catalog();
std::vector<std::string> catalog_up_to(int max_order);

struct ConjClasses {
  std::vector<int> class_of;           ///< per element
  std::vector<int> representatives;    ///< least element of each class
  std::vector<int> sizes;
  std::vector<long long> centralizer_orders;
  int count() const { return static_cast<int>(representatives.size()); }
};

ConjClasses conjugacy_classes(const GroupTable& g);

/// Characters of an abelian group. Values are exact roots of unity:
/// chi_r(g) = zeta_N^exponent(r, g) with N the group exponent.
struct CharacterTable {
  int order = 0;
  int root_order = 1;
  std::vector<int> exponents;  ///< row-major, rows = characters, cols = elements

  int exponent(int chi, int g) const { return exponents[static_cast<std::size_t>(chi) * order + g]; }
  Cyclotomic value(int chi, int g) const { return Cyclotomic::root(root_order, exponent(chi, g)); }
  std::complex<long double> approx(int chi, int g) const;
};

/// Throws SpecError for non-abelian input. Row 0 is the trivial character.
CharacterTable characters_abelian(const GroupTable& g);

/// `order: n` then n rows of n indices; validated on import.
GroupTable parse_group_table(std::string_view text, std::string name = "table");
std::string format_group_table(const GroupTable& g);

}  // namespace qinv3
