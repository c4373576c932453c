#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "carkwork/integer.hpp"

namespace carkwork {

/// Generators of PSL2(Z): S = (0 -1; 1 0) of order 2, L = (1 -1; 1 0) of
/// order 3, and L2 = L*L.
enum class Letter : std::uint8_t { S, L, L2 };

using Letters = std::vector<Letter>;

/// The letter of the inverse generator: S -> S, L <-> L2.
Letter inverse(Letter letter);

/// An element of PSL2(Z), stored as the sign-normalized lift (p q; r s):
/// determinant exactly 1 and the first nonzero of (p, q, r, s) positive.
class GroupElement {
 public:
  GroupElement();  // identity

  /// Throws std::invalid_argument unless ps - qr == 1.
  GroupElement(Integer p, Integer q, Integer r, Integer s);

  static GroupElement identity() { return {}; }
  static GroupElement generator(Letter letter);

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& r() const { return r_; }
  const Integer& s() const { return s_; }

  /// Trace of the normalized lift (the sign is only meaningful up to +-).
  Integer trace() const { return p_ + s_; }

  bool is_identity() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  struct Unchecked {};
  GroupElement(Unchecked, Integer p, Integer q, Integer r, Integer s);
  void normalize_sign();

  Integer p_{1}, q_{0}, r_{0}, s_{1};

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend GroupElement inverse(const GroupElement& a);
};

GroupElement operator*(const GroupElement& a, const GroupElement& b);

inline GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  return a * b;
}

GroupElement inverse(const GroupElement& a);

enum class ElementClass { elliptic, parabolic, hyperbolic };

std::string_view to_string(ElementClass c);

ElementClass classify_element(const GroupElement& w);

/// True when S and L-blocks strictly alternate.
bool is_normal_form(std::span<const Letter> letters);

/// A word over {S, L, L2} in the normal form of the free product Z/2 * Z/3.
/// Construction validates the normal form.
class Word {
 public:
  Word() = default;

  /// Throws DomainError(invalid_word) if `letters` is not in normal form.
  explicit Word(Letters letters);

  /// Parses the wire spelling: letters "S" and "L", with "LL" read as L2.
  static Word parse(std::string_view text);

  const Letters& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter back() const { return letters_.back(); }

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Letters letters_;
};

/// Reads a letter string without the normal-form check. "LL" is one L2
/// token; "LLL" is L2 followed by L.
Letters parse_letters(std::string_view text);

std::string to_string(std::span<const Letter> letters);

/// Multiplies the generator matrices left to right; any letter sequence.
GroupElement word_to_matrix(std::span<const Letter> letters);
inline GroupElement word_to_matrix(const Word& w) {
  return word_to_matrix(w.letters());
}

/// Free reduction in Z/2 * Z/3: cancels SS, merges L-blocks mod 3.
Word free_reduce(std::span<const Letter> letters);

/// The unique normal-form word of `m`.
Word matrix_to_word(const GroupElement& m);

/// Longest common prefix of two normal-form words (W meet W').
Word word_meet(const Word& w, const Word& w2);

}  // namespace carkwork
