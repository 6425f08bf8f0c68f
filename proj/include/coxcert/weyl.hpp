#pragma once

// Weyl group elements as permutations of the root list.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcert/kernels.hpp"
#include "coxcert/rational.hpp"
#include "coxcert/rootsys.hpp"

namespace coxcert {

class MismatchedRootDatum : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonReducedWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GroupTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

using Word = std::vector<int>;  // 0-based simple indices, leftmost letter first

enum class WordStrategy {
  kRightDescentSmallest,  // canonical
  kLeftDescentLargest,
};

/// An element w of W, stored as i -> index of w(root_i).
class WeylElt {
 public:
  WeylElt() = default;

  static WeylElt identity(std::shared_ptr<const RootDatum> rd);
  static WeylElt simple(std::shared_ptr<const RootDatum> rd, int i);
  static WeylElt from_word(std::shared_ptr<const RootDatum> rd, std::span<const int> word);
  /// Throws std::invalid_argument unless perm is a negation-compatible
  /// permutation induced by a group element.
  static WeylElt from_perm(std::shared_ptr<const RootDatum> rd, std::span<const RootIndex> perm);

  const RootDatum& datum() const { return *rd_; }
  const std::shared_ptr<const RootDatum>& datum_ptr() const { return rd_; }
  std::span<const RootIndex> perm() const { return {perm_.data(), perm_.size() - kPad}; }
  const Word& word() const { return word_; }
  int length() const { return length_; }
  /// Index of w(root_idx).
  int image(int root_idx) const { return perm_[root_idx]; }

  bool is_identity() const { return length_ == 0; }
  std::size_t hash() const;
  /// Canonical order: length, then reduced word.
  bool operator<(const WeylElt& rhs) const;
  bool operator==(const WeylElt& rhs) const;

  std::string word_string() const;  // "1 2 1", 1-based

 private:
  friend WeylElt multiply(const WeylElt& u, const WeylElt& w);
  friend WeylElt inverse(const WeylElt& w);

  static constexpr std::size_t kPad = kernels::kPermPad;
  static WeylElt finish(std::shared_ptr<const RootDatum> rd, std::vector<RootIndex> perm);

  std::shared_ptr<const RootDatum> rd_;
  std::vector<RootIndex> perm_;
  Word word_;
  int length_ = 0;
};

struct WeylEltHash {
  std::size_t operator()(const WeylElt& w) const { return w.hash(); }
};

WeylElt multiply(const WeylElt& u, const WeylElt& w);
inline WeylElt operator*(const WeylElt& u, const WeylElt& w) { return multiply(u, w); }
WeylElt inverse(const WeylElt& w);
WeylElt power(const WeylElt& w, long long k);
inline int length(const WeylElt& w) { return w.length(); }

/// Inversion count computed directly from a root permutation.
int perm_length(const RootDatum& rd, std::span<const RootIndex> perm);
Word reduced_word(const WeylElt& w, WordStrategy strategy);

/// Longest element of the parabolic subgroup W_J (J = all simple indices when empty optional).
WeylElt longest_element(std::shared_ptr<const RootDatum> rd, std::span<const int> J);
WeylElt longest_element(std::shared_ptr<const RootDatum> rd);

/// Smallest J with w in W_J, sorted.
std::vector<int> support(const WeylElt& w);

enum class Side { kLeft, kRight };

/// kFlipped swaps the descent test in the recursion; it exists only so the
/// oracle harness can prove it notices a broken recursion.
enum class Recursion { kExact, kFlipped };

/// Weyl labels u of the Bruhat cells B u B inside (B x B)(B y B).
/// kLeft: `word` is a reduced word for x and `other` is y; the recursion
///        peels letters off the left of x.
/// kRight: `other` is x and `word` is a reduced word for y; letters are
///        peeled off the right of y.
/// Result sorted canonically. Throws NonReducedWord.
std::vector<WeylElt> cell_product_set(std::span<const int> word, const WeylElt& other, Side side,
                                      Recursion mode = Recursion::kExact);
inline std::vector<WeylElt> cell_product_set(const WeylElt& expanded, const WeylElt& other, Side side,
                                             Recursion mode = Recursion::kExact) {
  return cell_product_set(std::span<const int>(expanded.word()), other, side, mode);
}

/// Matrix of w on characters in the simple-root basis.
QMatrix character_matrix(const WeylElt& w);
/// Matrix of w on cocharacters in the simple-coroot basis (contragredient).
QMatrix cocharacter_matrix(const WeylElt& w);
QVector act_on_character(const WeylElt& w, std::span<const Rational> chi);
QVector act_on_cocharacter(const WeylElt& w, std::span<const Rational> nu);

/// |W| from the classical formulas (no enumeration).
std::uint64_t weyl_group_order(const CartanType& type);

/// Every element of W in canonical order. Throws GroupTooLarge beyond `limit`.
std::vector<WeylElt> enumerate_group(std::shared_ptr<const RootDatum> rd, std::size_t limit = 20000);

std::string word_to_string(std::span<const int> word);

}  // namespace coxcert
