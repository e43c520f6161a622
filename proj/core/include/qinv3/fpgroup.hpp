#pragma once

#include "qinv3/scalar.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qinv3 {

// ---------------------------------------------------------------------------
// Words in a free group
// ---------------------------------------------------------------------------

struct Letter {
  int generator = 0;  ///< 0-based generator index
  int exponent = 1;   ///< nonzero

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the free group on indexed generators. Construction does not
/// reduce; call free_reduce() for the normal form.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word generator(int index, int exponent = 1) { return Word{{index, exponent}}; }
  static Word commutator(const Word& x, const Word& y);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  /// Sum of |exponent| over letters.
  long long length() const;
  int max_generator() const;

  Word inverse() const;
  Word operator*(const Word& other) const;

  /// Exponents expanded to a +-1 letter sequence.
  std::vector<Letter> expanded() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Unique freely reduced representative: no adjacent letters share a
/// generator, no zero exponents. Idempotent, never lengthens the word.
Word free_reduce(const Word& w);

/// Exponent sum of each generator (size = num_generators).
std::vector<BigInt> exponent_sums(const Word& w, int num_generators);

// ---------------------------------------------------------------------------
// Finitely presented groups
// ---------------------------------------------------------------------------

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int num_generators() const { return static_cast<int>(generators.size()); }
  /// Throws SpecError if names are invalid/duplicated or a relator uses an
  /// out-of-range generator.
  void validate() const;
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

bool is_valid_generator_name(std::string_view name);

/// Text form of a word with caret exponents, e.g. "a b^-1 a^3".
std::string format_word(const Word& w, const std::vector<std::string>& names);
/// Inverse of format_word. Tokens are separated by whitespace.
Word parse_word(std::string_view text, const std::vector<std::string>& names);

/// `gens:` / `rel:` line format; `#` starts a comment.
Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& p);
Presentation read_presentation_file(const std::string& path);

/// <a1,b1,...,ag,bg | [a1,b1]...[ag,bg]>, genus >= 1.
Presentation surface_presentation(int genus);

/// pi_1 of the mapping torus: adds a stable letter t and relators
/// t x_i t^-1 images[i]^-1.
Presentation mapping_torus_presentation(const Presentation& base, const std::vector<Word>& images);

/// Disjoint union of generators and relators; q's generators are renamed
/// with a numeric suffix on collision.
Presentation free_product(const Presentation& p, const Presentation& q);

// ---------------------------------------------------------------------------
// Integer linear algebra
// ---------------------------------------------------------------------------

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}
  IntegerMatrix(int rows, int cols, std::initializer_list<long long> values);
  static IntegerMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const BigInt& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntegerMatrix transpose() const;
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> entries_;
};

/// Determinant by fraction-free (Bareiss) elimination; square input only.
BigInt determinant(const IntegerMatrix& m);

struct SmithForm {
  /// Nonzero diagonal entries d1 | d2 | ... (positive; includes 1s).
  std::vector<BigInt> factors;
  int rank = 0;  ///< number of nonzero factors
  int rows = 0;
  int cols = 0;
  /// When requested: left * m * right == diagonal, both unimodular.
  std::optional<IntegerMatrix> left;
  std::optional<IntegerMatrix> right;

  /// Rank of the cokernel Z^rows / im(m^T)... i.e. of Z^cols / rowspace.
  int cokernel_free_rank() const { return cols - rank; }
};

SmithForm smith_normal_form(const IntegerMatrix& m, bool with_transforms = false);

/// Relator exponent sums: rows = relators, cols = generators. The cokernel
/// Z^gens / rowspace is the abelianization.
IntegerMatrix abelianization_matrix(const Presentation& p);

struct H1Invariants {
  int free_rank = 0;
  std::vector<BigInt> torsion;  ///< d1 | d2 | ..., each >= 2

  friend bool operator==(const H1Invariants&, const H1Invariants&) = default;
  std::string to_string() const;  ///< "Z^1 + Z/2 + Z/6" style
};

/// Cokernel of the row space of m in Z^cols.
H1Invariants cokernel_invariants(const IntegerMatrix& m);
H1Invariants h1_invariants(const Presentation& p);

// ---------------------------------------------------------------------------
// Surface monodromies given by generator images
// ---------------------------------------------------------------------------

struct MonodromyReport {
  bool relator_preserved = false;
  bool invertible_on_h1 = false;
  IntegerMatrix h1_matrix;  ///< column i = abelianized image of generator i
  BigInt determinant;
  std::string detail;

  bool passed() const { return relator_preserved && invertible_on_h1; }
};

/// Checks that images define a plausible surface automorphism: the surface
/// relator maps to the identity (Dehn's algorithm for genus >= 2, abelian
/// check for genus 1) and the induced H_1 matrix lies in GL(2g, Z). This is
/// not a full automorphism test (injectivity/surjectivity are not checked).
MonodromyReport validate_monodromy(int genus, const std::vector<Word>& images);

/// Dehn's algorithm for the genus-g surface group (g >= 2): true iff w is
/// trivial in pi_1 of the closed genus-g surface.
bool surface_word_is_trivial(int genus, const Word& w);

/// Genus-1 images realizing a 2x2 integer matrix on H_1:
/// a -> a^m00 b^m10, b -> a^m01 b^m11.
std::vector<Word> torus_images(long long m00, long long m01, long long m10, long long m11);

}  // namespace qinv3
