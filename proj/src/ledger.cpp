#include "coxcert/ledger.hpp"

#include <deque>

#include "coxcert/cells.hpp"

namespace coxcert {
namespace {

int mod(long long x, int h) {
  const long long r = x % h;
  return static_cast<int>(r < 0 ? r + h : r);
}

}  // namespace

std::string to_string(LedgerRule rule) {
  switch (rule) {
    case LedgerRule::kShiftUp: return "shift_up";
    case LedgerRule::kShiftDown: return "shift_down";
    case LedgerRule::kBaseEven: return "base_even";
    case LedgerRule::kBaseOdd: return "base_odd";
  }
  return "?";
}

std::string to_string(BaseMember member) {
  switch (member) {
    case BaseMember::kW0: return "w0";
    case BaseMember::kCW0: return "c*w0";
    case BaseMember::kW0SigmaCInv: return "w0*sigma^a(c^-1)";
    case BaseMember::kMiddleBelow: return "c_{floor(h/2)-1}";
    case BaseMember::kMiddleAbove: return "c_{floor(h/2)+1}";
  }
  return "?";
}

bool shift_allowed(const TwistedFrob& tf, const WeylElt& v, int a, int direction) {
  if (direction != 1 && direction != -1) throw std::invalid_argument("shift direction must be +1 or -1");
  if (direction == -1) return shift_allowed(tf, v, mod(a - 1LL, tf.h), 1);
  if (!tf.sigma.is_identity()) return true;
  const WeylElt w0 = longest_element(tf.rd);
  return !(v == w0 * c_power(tf, -a) || v == w0 * c_power(tf, -a - 1LL));
}

std::optional<BaseMember> base_case(const TwistedFrob& tf, const WeylElt& v, int a) {
  const WeylElt vca = v * c_power(tf, a);
  if (tf.h % 2 == 0) {
    const WeylElt w0 = longest_element(tf.rd);
    if (vca == w0) return BaseMember::kW0;
    if (vca == tf.c * w0) return BaseMember::kCW0;
    if (vca == w0 * apply_sigma(tf.sigma, inverse(tf.c), a)) return BaseMember::kW0SigmaCInv;
    return std::nullopt;
  }
  if (vca == c_power(tf, tf.h / 2 - 1)) return BaseMember::kMiddleBelow;
  if (vca == c_power(tf, tf.h / 2 + 1)) return BaseMember::kMiddleAbove;
  return std::nullopt;
}

LedgerTrace certify_element(const TwistedFrob& tf, int k, const WeylElt& v) {
  LedgerTrace trace;
  trace.k = k;
  trace.v = v;
  const int h = tf.h;
  const LedgerRule base_rule = h % 2 == 0 ? LedgerRule::kBaseEven : LedgerRule::kBaseOdd;

  std::vector<int> parent(h, -2);  // -2 unvisited, -1 root
  std::vector<LedgerRule> via(h, LedgerRule::kShiftUp);
  std::deque<int> queue{0};
  parent[0] = -1;
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    if (const auto member = base_case(tf, v, a)) {
      std::vector<LedgerStep> path;
      for (int cur = a; parent[cur] >= 0; cur = parent[cur]) path.push_back({via[cur], parent[cur], cur, std::nullopt});
      trace.steps.assign(path.rbegin(), path.rend());
      trace.steps.push_back({base_rule, a, a, member});
      trace.certified = true;
      return trace;
    }
    for (int dir : {1, -1}) {
      const int next = mod(a + dir, h);
      if (parent[next] != -2 || !shift_allowed(tf, v, a, dir)) continue;
      parent[next] = a;
      via[next] = dir == 1 ? LedgerRule::kShiftUp : LedgerRule::kShiftDown;
      queue.push_back(next);
    }
  }
  return trace;
}

std::vector<LedgerTrace> certify_theorem(const TwistedFrob& tf) {
  std::vector<LedgerTrace> out;
  const auto ks = wf_exponents(tf);
  const auto vs = wf_elements(tf);
  for (std::size_t i = 0; i < ks.size(); ++i) out.push_back(certify_element(tf, ks[i], vs[i]));
  return out;
}

std::string replay_trace(const TwistedFrob& tf, const LedgerTrace& trace) {
  if (!trace.certified) return "trace is not certified";
  if (trace.steps.empty()) return "trace has no steps";
  if (!in_wf(tf, trace.v)) return "v is not in W^F";
  if (!(trace.v == c_power(tf, trace.k))) return "v differs from c_k";
  int a = 0;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const LedgerStep& s = trace.steps[i];
    const std::string where = "step " + std::to_string(i) + ": ";
    if (s.a_before != a) return where + "does not chain on a";
    const bool last = i + 1 == trace.steps.size();
    switch (s.rule) {
      case LedgerRule::kShiftUp:
      case LedgerRule::kShiftDown: {
        if (last) return where + "trace ends with a shift";
        const int dir = s.rule == LedgerRule::kShiftUp ? 1 : -1;
        if (s.a_after != mod(a + dir, tf.h)) return where + "wrong residue after shift";
        if (!shift_allowed(tf, trace.v, a, dir)) return where + "shift is blocked";
        a = s.a_after;
        break;
      }
      case LedgerRule::kBaseEven:
      case LedgerRule::kBaseOdd: {
        if (!last) return where + "base rule before the end";
        if ((s.rule == LedgerRule::kBaseEven) != (tf.h % 2 == 0)) return where + "base rule parity mismatch";
        if (s.a_after != a) return where + "base rule moves a";
        const auto member = base_case(tf, trace.v, a);
        if (!member || member != s.matched) return where + "base membership fails";
        break;
      }
    }
  }
  return {};
}

}  // namespace coxcert
