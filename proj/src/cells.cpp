#include "coxcert/cells.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "coxcert/parallel.hpp"
#include "perm_util.hpp"

namespace coxcert {
namespace {

using detail::Perm;

bool contains(const std::vector<WeylElt>& sorted, const WeylElt& w) {
  return std::binary_search(sorted.begin(), sorted.end(), w);
}

// Smallest mask (as an integer) whose subword, multiplied on the given side
// of `fixed`, lands on `target`.
std::vector<int> subword_positions(const RootDatum& rd, const Word& word, const Perm& fixed, const WeylElt& target,
                                   bool subword_on_left) {
  const int n = rd.root_count();
  const int m = static_cast<int>(word.size());
  std::vector<Perm> letters;
  for (int x : word) letters.push_back(detail::padded_copy(rd.simple_reflection(x)));
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    Perm p = detail::padded_identity(n);
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) p = detail::compose(p, letters[i], n);
    const Perm full = subword_on_left ? detail::compose(p, fixed, n) : detail::compose(fixed, p, n);
    if (detail::same_perm(full, target.perm())) {
      std::vector<int> pos;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) pos.push_back(i);
      return pos;
    }
  }
  throw std::logic_error("cell label " + target.word_string() + " is not a subword product");
}

}  // namespace

CellKey make_cell_key(const TwistedFrob& tf, WeylElt v, long long a) {
  long long r = a % tf.h;
  if (r < 0) r += tf.h;
  return {std::move(v), static_cast<int>(r)};
}

WeylElt frob_on_weyl(const TwistedFrob& tf, const WeylElt& w) { return tf.c * apply_sigma(tf.sigma, w) * inverse(tf.c); }

bool in_wf(const TwistedFrob& tf, const WeylElt& w) { return frob_on_weyl(tf, w) == w; }

std::vector<int> wf_exponents(const TwistedFrob& tf) {
  std::vector<int> ks;
  std::vector<WeylElt> seen;
  for (int k = 0; k < tf.h; ++k) {
    if (k % tf.sigma.order != 0) continue;
    WeylElt ck = c_power(tf, k);
    if (std::find(seen.begin(), seen.end(), ck) != seen.end()) continue;
    seen.push_back(std::move(ck));
    ks.push_back(k);
  }
  return ks;
}

std::vector<WeylElt> wf_elements(const TwistedFrob& tf) {
  std::vector<WeylElt> out;
  for (int k : wf_exponents(tf)) {
    WeylElt ck = c_power(tf, k);
    if (!in_wf(tf, ck)) throw std::logic_error("c_" + std::to_string(k) + " is not fixed by F");
    out.push_back(std::move(ck));
  }
  return out;
}

std::vector<WeylElt> wf_by_enumeration(const TwistedFrob& tf, std::size_t limit) {
  std::vector<WeylElt> out;
  for (auto& w : enumerate_group(tf.rd, limit))
    if (in_wf(tf, w)) out.push_back(std::move(w));
  return out;
}

std::vector<int> intersection_roots(const TwistedFrob& tf, const CellKey& key) {
  const RootDatum& rd = tf.datum();
  const WeylElt d_inv = inverse(c_power(tf, key.a));
  std::vector<int> out;
  for (int b = 0; b < rd.root_count(); ++b)
    if (rd.is_positive(key.v.image(b)) && rd.is_positive(d_inv.image(b))) out.push_back(b);
  return out;
}

bool proper_levi_test(const RootDatum& rd, const std::vector<int>& roots) {
  std::vector<IVector> vecs;
  vecs.reserve(roots.size());
  for (int r : roots) vecs.push_back(rd.root(r));
  return span_rank(vecs, rd.rank()) < static_cast<std::size_t>(rd.rank());
}

NonemptyResult sigma_nonempty_test(const TwistedFrob& tf, const CellKey& key, bool want_witness) {
  const RootDatum& rd = tf.datum();
  const WeylElt vd = key.v * c_power(tf, key.a);
  const WeylElt sigma_vd = apply_sigma(tf.sigma, vd);
  Word sigma_a_word;
  for (int x : tf.c_word) {
    int y = x;
    for (int i = 0; i < key.a % tf.sigma.order; ++i) y = tf.sigma.perm[y];
    sigma_a_word.push_back(y);
  }

  NonemptyResult res;
  res.left = cell_product_set(std::span<const int>(tf.c_word), sigma_vd, Side::kLeft);
  res.right = cell_product_set(std::span<const int>(sigma_a_word), vd, Side::kRight);
  const WeylElt* common = nullptr;
  for (const auto& u : res.left)
    if (contains(res.right, u)) {
      common = &u;
      break;
    }
  res.nonempty = common != nullptr;
  if (res.nonempty && want_witness) {
    CellWitness w{*common, {}, {}};
    w.left_positions = subword_positions(rd, tf.c_word, detail::padded_copy(sigma_vd.perm()), *common, true);
    w.right_positions = subword_positions(rd, sigma_a_word, detail::padded_copy(vd.perm()), *common, false);
    res.witness = std::move(w);
  }
  return res;
}

ClassifierVerdict classify_cell(const TwistedFrob& tf, const CellKey& key, bool want_witness) {
  ClassifierVerdict out;
  out.key = key;
  NonemptyResult ne = sigma_nonempty_test(tf, key, want_witness);
  out.nonempty_possible = ne.nonempty;
  out.witness = std::move(ne.witness);
  out.in_wf = in_wf(tf, key.v);
  out.intersection_roots = intersection_roots(tf, key);
  out.proper_levi = proper_levi_test(tf.datum(), out.intersection_roots);
  return out;
}

Prop61Report prop61_verify(const TwistedFrob& tf, int a, const std::vector<WeylElt>& vs) {
  std::vector<ClassifierVerdict> verdicts(vs.size());
  parallel_for(vs.size(), [&](std::size_t i) { verdicts[i] = classify_cell(tf, make_cell_key(tf, vs[i], a), false); });
  Prop61Report rep;
  rep.a = make_cell_key(tf, WeylElt::identity(tf.rd), a).a;
  rep.checked = vs.size();
  for (auto& v : verdicts) {
    if (!v.nonempty_possible) continue;
    ++rep.nonempty;
    if (v.in_wf) ++rep.via_wf;
    if (v.proper_levi) ++rep.via_levi;
    if (!v.consistent()) rep.violators.push_back(classify_cell(tf, v.key, true));
  }
  return rep;
}

std::vector<WeylElt> prop61_sample(const TwistedFrob& tf, std::uint64_t seed, std::size_t sample) {
  std::vector<WeylElt> out;
  std::unordered_set<WeylElt, WeylEltHash> seen;
  auto add = [&](WeylElt w) {
    if (seen.insert(w).second) out.push_back(std::move(w));
  };
  for (auto& w : wf_elements(tf)) add(std::move(w));
  const WeylElt w0 = longest_element(tf.rd);
  for (int k = 0; k < tf.h; ++k) add(w0 * c_power(tf, k));

  const RootDatum& rd = tf.datum();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(0, rd.rank() - 1);
  std::uniform_int_distribution<int> len(0, rd.positive_count());
  for (std::size_t i = 0; i < sample; ++i) {
    Word word(len(rng));
    for (auto& x : word) x = letter(rng);
    add(WeylElt::from_word(tf.rd, word));
  }
  return out;
}

bool Lemma64Report::ok() const {
  return std::all_of(flagged.begin(), flagged.end(), [](const Lemma64Pair& p) { return p.conclusion_holds(); });
}

Lemma64Report lemma64_scan(const TwistedFrob& tf, int a) {
  Lemma64Report rep;
  rep.a = make_cell_key(tf, WeylElt::identity(tf.rd), a).a;
  const int h = tf.h;
  const std::vector<int> ks = wf_exponents(tf);
  std::vector<WeylElt> cs;
  for (int j = 0; j < h; ++j) cs.push_back(c_power(tf, j));
  auto c_at = [&](long long j) -> const WeylElt& { return cs[((j % h) + h) % h]; };

  const WeylElt sigma_a_c = apply_sigma(tf.sigma, tf.c, rep.a);
  const WeylElt sigma_a_c_inv = inverse(sigma_a_c);
  const WeylElt w0 = longest_element(tf.rd);

  // (B c_{l+a+1} B)(B sigma^a(c^{-1}) B) per l, and (B c_{k+a} B)(B sigma^a(c) B) per k.
  std::vector<std::vector<WeylElt>> first(ks.size()), second(ks.size());
  parallel_for(ks.size(), [&](std::size_t i) {
    first[i] = cell_product_set(sigma_a_c_inv, c_at(ks[i] + rep.a + 1), Side::kRight);
    second[i] = cell_product_set(sigma_a_c, c_at(ks[i] + rep.a), Side::kRight);
  });

  for (std::size_t ik = 0; ik < ks.size(); ++ik)
    for (std::size_t il = 0; il < ks.size(); ++il) {
      const int k = ks[ik], l = ks[il];
      const WeylElt& v = cs[k];
      const WeylElt& w = cs[l];
      if (v == w) continue;
      ++rep.pairs;
      const bool cond1 = contains(first[il], c_at(k + rep.a));
      const bool cond2 = contains(second[ik], c_at(l + rep.a + 1));
      if (!(cond1 && cond2)) continue;
      Lemma64Pair p;
      p.k = k;
      p.l = l;
      p.sigma_trivial = tf.sigma.is_identity();
      p.v_is_w0_translate = c_at(k + rep.a) == w0;
      p.v_is_wc = v == w * tf.c;
      rep.flagged.push_back(p);
    }
  return rep;
}

}  // namespace coxcert
