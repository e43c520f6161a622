#pragma once

#include "qinv3/cyclotomic.hpp"
#include "qinv3/fingroup.hpp"
#include "qinv3/mat2.hpp"
#include "qinv3/report.hpp"
#include "qinv3/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qinv3 {

/// Torus data of the Drinfeld double of an abelian group. Simple (g, chi) has
/// index g * |G| + chi; entries live in Q(zeta_N), N the group exponent.
struct ModularData {
  int group_order = 1;
  std::vector<std::pair<int, int>> simples;
  CycloMatrix S{1, 1};
  CycloMatrix T{1, 1};
  std::vector<int> t_exponent;  ///< T entry of simple i is zeta_N^t_exponent[i]
  int charge_conjugate(int i) const;
  int dim() const { return static_cast<int>(simples.size()); }
};

/// S_{(g,chi),(h,psi)} = conj(chi(h) psi(g)) / |G|, T_{(g,chi)} = chi(g).
/// The relations S^4 = 1, S^2 = C, (ST)^3 = S^2, S symmetric and unitary are
/// checked exactly; throws IntegrityError if one fails and SpecError for a
/// non-abelian group.
ModularData dg_modular_data(const GroupTable& g);
ValidationReport validate_modular_data(const ModularData& md);

/// A word in S and powers of T, stored as syllables. Exponent 0 never occurs;
/// S syllables have exponent 1 or 2 (S^2 = -1).
struct STWord {
  struct Syllable {
    char letter;  ///< 'S' or 'T'
    long long power;
    friend bool operator==(const Syllable&, const Syllable&) = default;
  };
  std::vector<Syllable> syllables;

  Mat2 matrix() const;
  /// "T^3 S T^-1 S", "1" for the empty word.
  std::string to_string() const;
};

/// Continued-fraction factorization with nearest-integer quotients: at most
/// 2 * (2 + log2 max|entry|) syllables. Throws SpecError if det != 1.
STWord st_decompose(const Mat2& a);

/// Matrix of the torus representation along st_decompose(a).
CycloMatrix torus_representation(const Mat2& a, const ModularData& md);

/// Trace of the torus representation: the invariant of the mapping torus.
Scalar tv_trace(const Mat2& a, const GroupTable& g);
Scalar tv_trace(const Mat2& a, const ModularData& md);

/// Some P in SL(2, Z/m) with P A P^-1 = B mod m, found by exhaustive search.
std::optional<Mat2> conjugator_mod_m(const Mat2& a, const Mat2& b, int m);
bool conjugate_mod_m(const Mat2& a, const Mat2& b, int m);

/// Some P in SL(2, Z) with all |entries| <= bound and P A P^-1 = B. No result
/// only means none was found up to the bound.
std::optional<Mat2> z_conjugate_bounded(const Mat2& a, const Mat2& b, int bound);

/// One representative per SL(2,Z) class of hyperbolic matrices with
/// 3 <= trace <= trace_bound: products of R and L containing both letters,
/// one per cyclic word (least rotation), sorted by (trace, matrix).
std::vector<Mat2> hyperbolic_class_representatives(int trace_bound);

struct PairEvidence {
  std::vector<std::pair<int, Mat2>> congruence_conjugators;  ///< (m, P mod m), m = 2..m_bound
  int conj_bound = 0;
  std::vector<std::string> checks;  ///< human-readable record of every check made
};

struct CongruencePair {
  Mat2 a;
  Mat2 b;
  PairEvidence evidence;
};

/// Pairs of hyperbolic classes with equal trace that are conjugate mod every
/// m <= m_bound, with no SL(2,Z) conjugator of height <= conj_bound from A to
/// any of B, B^-1, B^T, JBJ, JB^-1J (J = diag(1,-1)); the last four give
/// homeomorphic mapping tori. Positive traces only: -A has the same
/// fingerprint data up to the sign. Results in canonical (trace, A, B) order.
std::vector<CongruencePair> search_congruence_pairs(int trace_bound, int m_bound, int conj_bound,
                                                    int threads = 0);

/// Fixture text: one pair per line, "A | B", matrices as a,b;c,d.
std::string format_pairs(const std::vector<CongruencePair>& pairs);
std::vector<std::pair<Mat2, Mat2>> parse_pairs(std::string_view text);

}  // namespace qinv3
