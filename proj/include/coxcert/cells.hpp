#pragma once

// Cell combinatorics over a fixed (q, c, sigma): W^F, the root sets of
// v^{-1}U cap F^a(U), the proper-Levi test, the double-coset non-emptiness
// criterion and the exceptional-pair scan for consecutive Coxeter powers.

#include <cstdint>
#include <optional>
#include <vector>

#include "coxcert/twist.hpp"
#include "coxcert/weyl.hpp"

namespace coxcert {

/// (v, a) with a reduced mod h.
struct CellKey {
  WeylElt v;
  int a = 0;
};

CellKey make_cell_key(const TwistedFrob& tf, WeylElt v, long long a);

/// u = c_I sigma(vd) = vd sigma^a(c)_J, I and J as positions in the words of
/// c and sigma^a(c).
struct CellWitness {
  WeylElt u;
  std::vector<int> left_positions;
  std::vector<int> right_positions;
};

struct ClassifierVerdict {
  CellKey key;
  bool nonempty_possible = false;
  bool in_wf = false;
  bool proper_levi = false;
  std::vector<int> intersection_roots;  // root indices
  std::optional<CellWitness> witness;

  /// nonempty_possible implies in_wf or proper_levi.
  bool consistent() const { return !nonempty_possible || in_wf || proper_levi; }
};

/// w -> c sigma(w) c^{-1}.
WeylElt frob_on_weyl(const TwistedFrob& tf, const WeylElt& w);
bool in_wf(const TwistedFrob& tf, const WeylElt& w);

/// {c_k : 0 <= k < h, sigma^k = 1}, deduplicated, in increasing k. Each member
/// is checked to be F-fixed (std::logic_error otherwise).
std::vector<WeylElt> wf_elements(const TwistedFrob& tf);
/// The k values matching wf_elements().
std::vector<int> wf_exponents(const TwistedFrob& tf);
/// Fixed points of frob_on_weyl over all of W (small groups only).
std::vector<WeylElt> wf_by_enumeration(const TwistedFrob& tf, std::size_t limit = 20000);

/// v^{-1}(Phi+) cap c_a(Phi+), as sorted root indices.
std::vector<int> intersection_roots(const TwistedFrob& tf, const CellKey& key);
/// Whether the roots span a proper subspace of the root lattice.
bool proper_levi_test(const RootDatum& rd, const std::vector<int>& roots);

struct NonemptyResult {
  bool nonempty = false;
  std::vector<WeylElt> left;   // cells of (B c B)(B sigma(vd) B)
  std::vector<WeylElt> right;  // cells of (B vd B)(B sigma^a(c) B)
  std::optional<CellWitness> witness;
};

NonemptyResult sigma_nonempty_test(const TwistedFrob& tf, const CellKey& key, bool want_witness = true);

ClassifierVerdict classify_cell(const TwistedFrob& tf, const CellKey& key, bool want_witness = true);

struct Prop61Report {
  int a = 0;
  std::size_t checked = 0;
  std::size_t nonempty = 0;
  std::size_t via_wf = 0;
  std::size_t via_levi = 0;
  std::vector<ClassifierVerdict> violators;

  bool ok() const { return violators.empty(); }
};

/// Classifies every v in `vs` at residue a (in parallel, order preserved).
Prop61Report prop61_verify(const TwistedFrob& tf, int a, const std::vector<WeylElt>& vs);

/// The v-list for large groups: W^F, the translates w0 c_k, and `sample`
/// elements drawn from random words (deterministic in seed), deduplicated.
std::vector<WeylElt> prop61_sample(const TwistedFrob& tf, std::uint64_t seed, std::size_t sample = 256);

struct Lemma64Pair {
  int k = 0;  // v = c_k
  int l = 0;  // w = c_l
  bool sigma_trivial = false;
  bool v_is_w0_translate = false;  // c_{k+a} = w0
  bool v_is_wc = false;            // k = l + 1 mod h

  bool conclusion_holds() const { return sigma_trivial && v_is_w0_translate && v_is_wc; }
};

struct Lemma64Report {
  int a = 0;
  std::size_t pairs = 0;
  std::vector<Lemma64Pair> flagged;

  bool ok() const;
};

/// Both displayed double-coset conditions for all v = c_k != w = c_l in W^F.
Lemma64Report lemma64_scan(const TwistedFrob& tf, int a);

}  // namespace coxcert
