#pragma once

// Brute-force ground truth: SL2, SL3 and Sp4 over F2 and F3 with their
// upper-triangular Borel subgroups, used to check the cell-product recursion
// against literal products of double cosets.

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxcert/weyl.hpp"

namespace coxcert {

class UnsupportedOracleGroup : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A dim x dim matrix over F_p, row-major; unused entries stay zero.
using SmallMatrix = std::array<std::uint8_t, 16>;

class FiniteChevalleyGroup {
 public:
  /// A1 -> SL2, A2 -> SL3, B2 -> Sp4; field_size 2 or 3.
  static FiniteChevalleyGroup enumerate(const CartanType& type, int field_size);

  const CartanType& type() const { return type_; }
  int field_size() const { return p_; }
  int dim() const { return dim_; }
  const std::shared_ptr<const RootDatum>& datum() const { return rd_; }

  std::size_t order() const { return elements_.size(); }
  const std::vector<SmallMatrix>& elements() const { return elements_; }
  const std::vector<std::size_t>& borel() const { return borel_; }
  const std::vector<WeylElt>& weyl() const { return weyl_; }
  const SmallMatrix& weyl_rep(std::size_t w) const { return weyl_reps_[w]; }
  /// Indices of the elements in B w B.
  const std::vector<std::size_t>& cell(std::size_t w) const { return cells_[w]; }
  /// Index into weyl() of the double coset containing the element.
  std::size_t label(const SmallMatrix& g) const;
  std::size_t weyl_index(const WeylElt& w) const;

  SmallMatrix multiply(const SmallMatrix& a, const SmallMatrix& b) const;
  std::uint64_t key(const SmallMatrix& m) const;

 private:
  CartanType type_;
  int p_ = 2;
  int dim_ = 2;
  std::shared_ptr<const RootDatum> rd_;
  std::vector<SmallMatrix> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::size_t> borel_;
  std::vector<WeylElt> weyl_;
  std::vector<SmallMatrix> weyl_reps_;
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<std::size_t> labels_;
};

/// Classical |G| for the realised group.
std::size_t classical_order(const CartanType& type, int field_size);

/// Weyl labels of the double cosets met by (B x B)(B y B), computed from the
/// literal products: kLeft multiplies every element of B x B by the lift of y,
/// kRight multiplies the lift of x by every element of B y B. Sorted.
std::vector<WeylElt> double_coset_product_set(const FiniteChevalleyGroup& g, const WeylElt& x, const WeylElt& y,
                                              Side side);

/// Whether |B w B| = |B| p^{l(w)} for every w.
bool cell_size_law_holds(const FiniteChevalleyGroup& g);

struct OracleMismatch {
  std::string group;  // e.g. "B2/F3"
  WeylElt x, y;
  Side side = Side::kLeft;
  std::vector<WeylElt> literal;
  std::vector<WeylElt> recursion;
};

struct OracleGroupSummary {
  std::string group;
  std::size_t order = 0;
  std::size_t pairs = 0;  // (x, y, side) triples compared
  bool order_matches = false;
  bool cell_law = false;
};

struct OracleReport {
  std::vector<OracleGroupSummary> groups;
  std::vector<OracleMismatch> mismatches;

  bool ok() const;
};

/// All of A1, A2, B2 over F2 and F3, every (x, y) and both sides, compared
/// with cell_product_set in the given recursion mode.
OracleReport oracle_sweep(Recursion mode = Recursion::kExact);

}  // namespace coxcert
