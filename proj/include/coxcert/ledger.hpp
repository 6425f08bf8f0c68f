#pragma once

// Rewriting walk over residues a mod h that links h_{0,v} to a known base cell
// for every v in W^F.

#include <optional>
#include <string>
#include <vector>

#include "coxcert/twist.hpp"

namespace coxcert {

enum class LedgerRule { kShiftUp, kShiftDown, kBaseEven, kBaseOdd };

/// Which base-case member v c_a matched.
enum class BaseMember {
  kW0,            // w0
  kCW0,           // c w0
  kW0SigmaCInv,   // w0 sigma^a(c^{-1})
  kMiddleBelow,   // c_{floor(h/2) - 1}
  kMiddleAbove,   // c_{floor(h/2) + 1}
};

std::string to_string(LedgerRule rule);
std::string to_string(BaseMember member);

struct LedgerStep {
  LedgerRule rule = LedgerRule::kShiftUp;
  int a_before = 0;
  int a_after = 0;
  std::optional<BaseMember> matched;  // base steps only
};

struct LedgerTrace {
  int k = 0;  // v = c_k
  WeylElt v;
  std::vector<LedgerStep> steps;
  bool certified = false;
};

/// Whether h_{a,v} = h_{a+direction,v} may be used. direction is +1 or -1.
bool shift_allowed(const TwistedFrob& tf, const WeylElt& v, int a, int direction);

/// The base-case member matched by v c_a, if any.
std::optional<BaseMember> base_case(const TwistedFrob& tf, const WeylElt& v, int a);

/// Breadth-first search from (v, 0) to a base state; base beats shift, +1
/// beats -1.
LedgerTrace certify_element(const TwistedFrob& tf, int k, const WeylElt& v);

/// One trace per element of W^F, ordered by k.
std::vector<LedgerTrace> certify_theorem(const TwistedFrob& tf);

/// Re-checks every step of a trace from scratch. Returns an empty string on
/// success, otherwise a description of the first bad step.
std::string replay_trace(const TwistedFrob& tf, const LedgerTrace& trace);

}  // namespace coxcert
