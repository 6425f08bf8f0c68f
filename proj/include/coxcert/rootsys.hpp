#pragma once

// Irreducible crystallographic root systems with Bourbaki labelling.
//
// Roots are integer vectors in the simple-root basis. Cocharacters are
// rational vectors in the simple-coroot basis. The Cartan matrix follows
// cartan[i][j] = <alpha_j, alpha_i^vee>, so the simple reflection is
// s_i(beta) = beta - (sum_j cartan[i][j] beta_j) alpha_i.
//
// Root order: positives sorted by height ascending then coordinates
// lexicographically descending occupy indices [P, 2P); the negatives are
// stored mirrored in [0, P), so negation is i -> 2P - 1 - i and the simple
// root alpha_i sits at index P + i.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcert/rational.hpp"

namespace coxcert {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

class InvalidCartanType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CartanType {
  Series series = Series::A;
  int rank = 1;

  /// Throws InvalidCartanType unless (series, rank) names an irreducible type.
  void validate() const;
  std::string name() const;  // "E8"
  static CartanType parse(const std::string& s);  // "E8", no twist prefix

  bool operator==(const CartanType&) const = default;
};

/// Every irreducible type of rank in [1, max_rank], in table order.
std::vector<CartanType> all_types(int max_rank);

using RootIndex = std::int16_t;

class RootDatum {
 public:
  explicit RootDatum(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<IVector>& cartan() const { return cartan_; }

  const std::vector<IVector>& roots() const { return roots_; }
  int root_count() const { return static_cast<int>(roots_.size()); }
  int positive_count() const { return positive_count_; }
  const IVector& root(int idx) const { return roots_[idx]; }
  bool is_positive(int idx) const { return idx >= positive_count_; }
  int negate(int idx) const { return root_count() - 1 - idx; }
  int simple_index(int i) const { return positive_count_ + i; }
  int height(int idx) const;
  /// -1 when the vector is not a root.
  int index_of(const IVector& v) const;

  const IVector& highest_root() const { return roots_.back(); }

  /// alpha_i^* in the simple-coroot basis, dual to the simple roots.
  const std::vector<QVector>& fundamental_coweights() const { return coweights_; }

  /// <chi, nu> for chi in the simple-root basis and nu in the simple-coroot basis.
  Rational pairing(std::span<const Rational> chi, std::span<const Rational> nu) const;
  Rational pairing(std::span<const int> chi, std::span<const Rational> nu) const;
  /// <beta, alpha_i^vee>
  int coroot_pairing(std::span<const int> beta, int i) const;

  /// Root permutation of the simple reflection s_i.
  std::span<const RootIndex> simple_reflection(int i) const { return simple_perms_[i]; }

  /// Cartan matrix as a rational matrix (maps root coords to coroot pairings).
  const QMatrix& cartan_q() const { return cartan_q_; }
  const QMatrix& cartan_q_inverse() const { return cartan_q_inv_; }

 private:
  CartanType type_;
  std::vector<IVector> cartan_;
  std::vector<IVector> roots_;
  int positive_count_ = 0;
  std::map<IVector, int> index_;
  std::vector<QVector> coweights_;
  std::vector<std::vector<RootIndex>> simple_perms_;
  QMatrix cartan_q_;
  QMatrix cartan_q_inv_;
};

std::vector<IVector> cartan_matrix(const CartanType& type);

std::shared_ptr<const RootDatum> build_root_system(const CartanType& type);

/// max over simple alpha of <highest root, alpha^*>.
int m_constant(const RootDatum& rd);

}  // namespace coxcert
