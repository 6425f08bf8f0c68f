#pragma once

// Diagram automorphisms, twisted Coxeter elements and the Frobenius F = q c sigma.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxcert/rational.hpp"
#include "coxcert/rootsys.hpp"
#include "coxcert/weyl.hpp"

namespace coxcert {

class InvalidTwist : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OddCoxeterNumber : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class MissingFrobeniusParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (F - 1) singular, or the two routes to its inverse disagree.
class FrobeniusDiscrepancy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation of the simple indices preserving the Cartan matrix.
struct DiagramAut {
  std::vector<int> perm;  // alpha_i -> alpha_{perm[i]}
  int order = 1;

  bool is_identity() const { return order == 1; }
  /// sigma-orbits on the simple indices, each listed from its smallest member
  /// along sigma, orbits sorted by smallest member.
  std::vector<std::vector<int>> orbits() const;
};

/// Throws InvalidTwist when perm is not a Cartan-preserving permutation.
DiagramAut make_diagram_aut(const RootDatum& rd, std::vector<int> perm);
/// The standard automorphism of the given order (1, 2 or 3) for the type.
DiagramAut standard_diagram_aut(const RootDatum& rd, int order);
/// Orders of the standard automorphisms admitted by the type (always contains 1).
std::vector<int> admissible_twists(const CartanType& type);

/// A type string such as "E8", "2A4", "3D4".
struct TwistedType {
  CartanType type;
  int twist = 1;

  std::string name() const;
  static TwistedType parse(const std::string& s);
};

/// Every (type, twist) of rank <= max_rank.
std::vector<TwistedType> all_twisted_types(int max_rank);

/// The root permutation induced by sigma^k.
std::vector<RootIndex> sigma_root_perm(const RootDatum& rd, const DiagramAut& sigma, int k = 1);
/// sigma^k(w) = sigma^k w sigma^{-k}.
WeylElt apply_sigma(const DiagramAut& sigma, const WeylElt& w, int k = 1);

/// The root permutation of c sigma.
std::vector<RootIndex> tau_perm(const WeylElt& c, const DiagramAut& sigma);

struct TwistedCoxeter {
  WeylElt element;
  Word word;  // the product of one representative per orbit, in the order used
};

/// One simple reflection per sigma-orbit in every order, deduplicated as group
/// elements (first occurrence kept; representatives and orders enumerated
/// lexicographically).
std::vector<TwistedCoxeter> twisted_coxeter_elements(std::shared_ptr<const RootDatum> rd, const DiagramAut& sigma);

/// Order of the linear map c sigma.
int coxeter_number(const WeylElt& c, const DiagramAut& sigma);

struct TwistedFrob {
  std::shared_ptr<const RootDatum> rd;
  DiagramAut sigma;
  WeylElt c;
  Word c_word;
  int h = 0;
  std::optional<long> q;  // unset = symbolic

  const RootDatum& datum() const { return *rd; }
  TwistedFrob with_q(long value) const;
};

TwistedFrob make_twisted_frob(std::shared_ptr<const RootDatum> rd, DiagramAut sigma, WeylElt c, Word c_word,
                              std::optional<long> q = std::nullopt);

/// Lengths of c sigma(c) ... sigma^{i-1}(c) for i = 0..floor(h/2).
std::vector<int> partial_product_lengths(const WeylElt& c, const DiagramAut& sigma, int h);

struct GoodPairResult {
  TwistedFrob frob;
  std::vector<int> partial_lengths;
  std::size_t candidates = 0;  // distinct twisted Coxeter elements scanned
  std::size_t passing = 0;
};

class GoodPairSearchFailure : public std::runtime_error {
 public:
  GoodPairSearchFailure(std::string msg, std::vector<std::pair<Word, std::vector<int>>> scan)
      : std::runtime_error(std::move(msg)), scan_(std::move(scan)) {}
  const std::vector<std::pair<Word, std::vector<int>>>& scan() const { return scan_; }

 private:
  std::vector<std::pair<Word, std::vector<int>>> scan_;
};

/// First twisted Coxeter element whose partial twisted products have additive
/// length up to floor(h/2). Throws GoodPairSearchFailure with the whole scan.
GoodPairResult good_pair_search(std::shared_ptr<const RootDatum> rd, const DiagramAut& sigma);

/// c_k = (c sigma)^k sigma^{-k} for any integer k.
WeylElt c_power(const TwistedFrob& tf, long long k);

/// Whether c sigma(c) ... sigma^{h/2-1}(c) is the longest element. Throws
/// OddCoxeterNumber for odd h.
bool w0_identity_check(const TwistedFrob& tf);

struct ShiftGraph {
  std::vector<WeylElt> vertices;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
  bool connected = false;
};

/// Twisted Coxeter elements joined by length-additive cyclic shifts
/// w1 w2 -> w2 sigma(w1).
ShiftGraph cyclic_shift_connectivity(std::shared_ptr<const RootDatum> rd, const DiagramAut& sigma);

/// Matrix of c sigma on characters (simple-root basis).
QMatrix tau_matrix(const TwistedFrob& tf);
/// q times tau_matrix. Throws MissingFrobeniusParameter unless q >= 2.
QMatrix frob_matrix(const TwistedFrob& tf);
/// The adjoint of F on cocharacters (simple-coroot basis): <F chi, nu> = <chi, F nu>.
QMatrix frob_cocharacter_matrix(const TwistedFrob& tf);

/// (q^h - 1)^{-1} sum_{i<h} F^i.
QMatrix frob_minus_one_inverse_by_sum(const TwistedFrob& tf);
/// Gauss-Jordan inverse of F - 1.
QMatrix frob_minus_one_inverse_direct(const TwistedFrob& tf);
/// Both routes; throws FrobeniusDiscrepancy if F - 1 is singular or they differ.
QMatrix frob_minus_one_inverse(const TwistedFrob& tf);

/// Primitive cocharacter mu (simple-coroot basis) with F mu - mu in Q chi,
/// first nonzero coordinate positive. Throws std::invalid_argument for chi = 0.
std::vector<Integer> h_chi_direction(const TwistedFrob& tf, std::span<const Rational> chi);

struct RegularityCertificate {
  long q = 0;
  std::vector<std::vector<Rational>> table;  // [root index][simple index]
  bool verdict = false;
  bool routes_agree = false;  // character-side and cocharacter-side values coincide
  std::optional<std::pair<int, int>> zero_witness;  // (root index, simple index)
};

/// <(F-1)^{-1} gamma, alpha^*> for every root gamma and simple alpha.
RegularityCertificate regularity_certificate(const TwistedFrob& tf);

/// Orbit length of every root under c sigma, indexed by root.
std::vector<int> tau_orbit_sizes(const TwistedFrob& tf);

}  // namespace coxcert
