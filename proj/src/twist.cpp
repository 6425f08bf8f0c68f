#include "coxcert/twist.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "perm_util.hpp"

namespace coxcert {
namespace {

using detail::compose;
using detail::inverse_perm;
using detail::padded_copy;
using detail::padded_identity;
using detail::Perm;

std::size_t perm_hash(const Perm& p, int n) {
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < n; ++i) {
    h ^= static_cast<std::uint16_t>(p[i]);
    h *= 1099511628211ull;
  }
  return h;
}

int perm_order(const Perm& p, int n) {
  // lcm of cycle lengths
  std::vector<char> seen(n, 0);
  long order = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return static_cast<int>(order);
}

QMatrix root_perm_matrix(const RootDatum& rd, std::span<const RootIndex> perm) {
  const int n = rd.rank();
  QMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    const IVector& img = rd.root(perm[rd.simple_index(j)]);
    for (int i = 0; i < n; ++i) m(i, j) = img[i];
  }
  return m;
}

long require_q(const TwistedFrob& tf) {
  if (!tf.q) throw MissingFrobeniusParameter("a concrete q is required");
  if (*tf.q < 2) throw MissingFrobeniusParameter("q must be at least 2");
  return *tf.q;
}

}  // namespace

std::vector<std::vector<int>> DiagramAut::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int j = static_cast<int>(i); !seen[j]; j = perm[j]) {
      seen[j] = 1;
      orbit.push_back(j);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

DiagramAut make_diagram_aut(const RootDatum& rd, std::vector<int> perm) {
  const int n = rd.rank();
  if (static_cast<int>(perm.size()) != n) throw InvalidTwist("diagram automorphism has wrong size");
  std::vector<char> hit(n, 0);
  for (int x : perm) {
    if (x < 0 || x >= n || hit[x]) throw InvalidTwist("diagram automorphism is not a permutation");
    hit[x] = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rd.cartan()[perm[i]][perm[j]] != rd.cartan()[i][j])
        throw InvalidTwist("permutation does not preserve the Cartan matrix of " + rd.type().name());
  DiagramAut sigma{std::move(perm), 1};
  std::vector<int> cur = sigma.perm;
  auto is_id = [&] {
    for (int i = 0; i < n; ++i)
      if (cur[i] != i) return false;
    return true;
  };
  if (!std::all_of(sigma.perm.begin(), sigma.perm.end(), [i = 0](int x) mutable { return x == i++; })) {
    while (!is_id()) {
      for (int i = 0; i < n; ++i) cur[i] = sigma.perm[cur[i]];
      ++sigma.order;
    }
  }
  return sigma;
}

std::vector<int> admissible_twists(const CartanType& type) {
  type.validate();
  switch (type.series) {
    case Series::A: return type.rank >= 2 ? std::vector<int>{1, 2} : std::vector<int>{1};
    case Series::D: return type.rank == 4 ? std::vector<int>{1, 2, 3} : std::vector<int>{1, 2};
    case Series::E: return type.rank == 6 ? std::vector<int>{1, 2} : std::vector<int>{1};
    default: return {1};
  }
}

DiagramAut standard_diagram_aut(const RootDatum& rd, int order) {
  const CartanType& t = rd.type();
  const int n = t.rank;
  const auto allowed = admissible_twists(t);
  if (std::find(allowed.begin(), allowed.end(), order) == allowed.end())
    throw InvalidTwist("type " + t.name() + " admits no diagram automorphism of order " + std::to_string(order));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (order == 2) {
    switch (t.series) {
      case Series::A:
        for (int i = 0; i < n; ++i) perm[i] = n - 1 - i;
        break;
      case Series::D: std::swap(perm[n - 2], perm[n - 1]); break;
      case Series::E:
        std::swap(perm[0], perm[5]);
        std::swap(perm[2], perm[4]);
        break;
      default: break;
    }
  } else if (order == 3) {
    // D4 triality: 1 -> 3 -> 4 -> 1 (Bourbaki labels).
    perm = {2, 1, 3, 0};
  }
  return make_diagram_aut(rd, std::move(perm));
}

std::string TwistedType::name() const { return (twist == 1 ? std::string() : std::to_string(twist)) + type.name(); }

TwistedType TwistedType::parse(const std::string& s) {
  if (s.empty()) throw InvalidCartanType("empty type string");
  TwistedType out;
  std::string rest = s;
  if (std::isdigit(static_cast<unsigned char>(s[0]))) {
    out.twist = s[0] - '0';
    rest = s.substr(1);
  }
  out.type = CartanType::parse(rest);
  const auto allowed = admissible_twists(out.type);
  if (std::find(allowed.begin(), allowed.end(), out.twist) == allowed.end())
    throw InvalidTwist("type " + out.type.name() + " admits no twist of order " + std::to_string(out.twist));
  return out;
}

std::vector<TwistedType> all_twisted_types(int max_rank) {
  std::vector<TwistedType> out;
  for (const auto& t : all_types(max_rank))
    for (int k : admissible_twists(t)) out.push_back({t, k});
  return out;
}

std::vector<RootIndex> sigma_root_perm(const RootDatum& rd, const DiagramAut& sigma, int k) {
  const int n = rd.rank();
  k %= sigma.order;
  if (k < 0) k += sigma.order;
  std::vector<int> pk(n);
  std::iota(pk.begin(), pk.end(), 0);
  for (int step = 0; step < k; ++step)
    for (int i = 0; i < n; ++i) pk[i] = sigma.perm[pk[i]];
  std::vector<RootIndex> out(rd.root_count());
  for (int idx = 0; idx < rd.root_count(); ++idx) {
    const IVector& beta = rd.root(idx);
    IVector img(n);
    for (int i = 0; i < n; ++i) img[pk[i]] = beta[i];
    out[idx] = static_cast<RootIndex>(rd.index_of(img));
  }
  return out;
}

WeylElt apply_sigma(const DiagramAut& sigma, const WeylElt& w, int k) {
  const RootDatum& rd = w.datum();
  const int n = rd.root_count();
  const Perm s = padded_copy(sigma_root_perm(rd, sigma, k));
  const Perm s_inv = inverse_perm(s, n);
  const Perm wp = padded_copy(w.perm());
  const Perm out = compose(compose(s, wp, n), s_inv, n);
  return WeylElt::from_perm(w.datum_ptr(), std::span<const RootIndex>(out.data(), n));
}

std::vector<RootIndex> tau_perm(const WeylElt& c, const DiagramAut& sigma) {
  const RootDatum& rd = c.datum();
  const int n = rd.root_count();
  const Perm s = padded_copy(sigma_root_perm(rd, sigma));
  const Perm out = compose(padded_copy(c.perm()), s, n);
  return {out.begin(), out.begin() + n};
}

std::vector<TwistedCoxeter> twisted_coxeter_elements(std::shared_ptr<const RootDatum> rd, const DiagramAut& sigma) {
  const int n = rd->root_count();
  const auto orbits = sigma.orbits();
  const std::size_t r = orbits.size();
  std::vector<Perm> simple;
  for (int i = 0; i < rd->rank(); ++i) simple.push_back(padded_copy(rd->simple_reflection(i)));

  std::vector<TwistedCoxeter> out;
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
  std::vector<Perm> kept;

  // Representative choice as a mixed-radix counter.
  std::vector<std::size_t> choice(r, 0);
  for (;;) {
    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    do {
      Perm p = padded_identity(n);
      Word word;
      for (std::size_t pos : order) {
        const int letter = orbits[pos][choice[pos]];
        word.push_back(letter);
        p = compose(p, simple[letter], n);
      }
      const std::size_t h = perm_hash(p, n);
      bool dup = false;
      for (std::size_t idx : buckets[h])
        if (std::equal(kept[idx].begin(), kept[idx].begin() + n, p.begin())) dup = true;
      if (dup) continue;
      buckets[h].push_back(kept.size());
      kept.push_back(p);
      out.push_back({WeylElt::from_perm(rd, std::span<const RootIndex>(p.data(), n)), std::move(word)});
    } while (std::next_permutation(order.begin(), order.end()));

    std::size_t pos = 0;
    while (pos < r && ++choice[pos] == orbits[pos].size()) choice[pos++] = 0;
    if (pos == r) break;
  }
  return out;
}

int coxeter_number(const WeylElt& c, const DiagramAut& sigma) {
  const auto t = tau_perm(c, sigma);
  const Perm p = padded_copy(t);
  return perm_order(p, static_cast<int>(t.size()));
}

TwistedFrob TwistedFrob::with_q(long value) const {
  TwistedFrob out = *this;
  out.q = value;
  return out;
}

TwistedFrob make_twisted_frob(std::shared_ptr<const RootDatum> rd, DiagramAut sigma, WeylElt c, Word c_word,
                              std::optional<long> q) {
  TwistedFrob tf;
  tf.h = coxeter_number(c, sigma);
  tf.rd = std::move(rd);
  tf.sigma = std::move(sigma);
  tf.c = std::move(c);
  tf.c_word = std::move(c_word);
  tf.q = q;
  return tf;
}

std::vector<int> partial_product_lengths(const WeylElt& c, const DiagramAut& sigma, int h) {
  std::vector<int> lengths{0};
  WeylElt acc = WeylElt::identity(c.datum_ptr());
  for (int i = 1; i <= h / 2; ++i) {
    acc = acc * apply_sigma(sigma, c, i - 1);
    lengths.push_back(acc.length());
  }
  return lengths;
}

GoodPairResult good_pair_search(std::shared_ptr<const RootDatum> rd, const DiagramAut& sigma) {
  const auto candidates = twisted_coxeter_elements(rd, sigma);
  std::optional<GoodPairResult> found;
  std::size_t passing = 0;
  std::vector<std::pair<Word, std::vector<int>>> scan;
  for (const auto& cand : candidates) {
    const int h = coxeter_number(cand.element, sigma);
    const auto lengths = partial_product_lengths(cand.element, sigma, h);
    bool additive = true;
    for (std::size_t i = 0; i < lengths.size(); ++i)
      if (lengths[i] != static_cast<int>(i) * cand.element.length()) additive = false;
    scan.emplace_back(cand.word, lengths);
    if (!additive) continue;
    ++passing;
    if (!found) {
      GoodPairResult res;
      res.frob = make_twisted_frob(rd, sigma, cand.element, cand.word);
      res.partial_lengths = lengths;
      found = std::move(res);
    }
  }
  if (!found)
    throw GoodPairSearchFailure("no twisted Coxeter element of " + rd->type().name() + " has additive partial lengths",
                                std::move(scan));
  found->candidates = candidates.size();
  found->passing = passing;
  return std::move(*found);
}

WeylElt c_power(const TwistedFrob& tf, long long k) {
  const RootDatum& rd = tf.datum();
  const int n = rd.root_count();
  long long kk = k % tf.h;
  if (kk < 0) kk += tf.h;
  const Perm tau = padded_copy(tau_perm(tf.c, tf.sigma));
  Perm acc = padded_identity(n);
  for (long long i = 0; i < kk; ++i) acc = compose(acc, tau, n);
  const Perm s = padded_copy(sigma_root_perm(rd, tf.sigma, static_cast<int>(-(kk % tf.sigma.order))));
  const Perm out = compose(acc, s, n);
  return WeylElt::from_perm(tf.rd, std::span<const RootIndex>(out.data(), n));
}

bool w0_identity_check(const TwistedFrob& tf) {
  if (tf.h % 2 != 0)
    throw OddCoxeterNumber("Coxeter number " + std::to_string(tf.h) + " of " + tf.datum().type().name() + " is odd");
  WeylElt acc = WeylElt::identity(tf.rd);
  for (int i = 0; i < tf.h / 2; ++i) acc = acc * apply_sigma(tf.sigma, tf.c, i);
  return acc == longest_element(tf.rd);
}

ShiftGraph cyclic_shift_connectivity(std::shared_ptr<const RootDatum> rd, const DiagramAut& sigma) {
  ShiftGraph g;
  for (auto& tc : twisted_coxeter_elements(rd, sigma)) g.vertices.push_back(std::move(tc.element));
  std::unordered_map<WeylElt, int, WeylEltHash> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], static_cast<int>(i));

  std::vector<WeylElt> simple;
  for (int i = 0; i < rd->rank(); ++i) simple.push_back(WeylElt::simple(rd, i));

  std::vector<std::pair<int, int>> edges;
  for (std::size_t vi = 0; vi < g.vertices.size(); ++vi) {
    const WeylElt& w = g.vertices[vi];
    // Left divisors w1 of w (l(w1) + l(w1^{-1} w) = l(w)), grown one letter at a time.
    std::unordered_set<WeylElt, WeylEltHash> seen{WeylElt::identity(rd)};
    std::deque<WeylElt> queue{WeylElt::identity(rd)};
    while (!queue.empty()) {
      const WeylElt w1 = queue.front();
      queue.pop_front();
      const WeylElt w2 = inverse(w1) * w;
      if (!w1.is_identity()) {
        const WeylElt shifted = w2 * apply_sigma(sigma, w1);
        auto it = index.find(shifted);
        if (it != index.end() && it->second != static_cast<int>(vi) && shifted.length() == w.length()) {
          const int a = std::min<int>(static_cast<int>(vi), it->second);
          const int b = std::max<int>(static_cast<int>(vi), it->second);
          edges.emplace_back(a, b);
        }
      }
      for (const auto& s : simple) {
        WeylElt next = w1 * s;
        if (next.length() != w1.length() + 1) continue;
        if ((inverse(next) * w).length() != w.length() - next.length()) continue;
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.edges = std::move(edges);

  const std::size_t nv = g.vertices.size();
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : g.edges) parent[find(a)] = find(b);
  std::size_t components = 0;
  for (std::size_t i = 0; i < nv; ++i) components += find(static_cast<int>(i)) == static_cast<int>(i);
  g.connected = components == 1;
  return g;
}

QMatrix tau_matrix(const TwistedFrob& tf) {
  const auto t = tau_perm(tf.c, tf.sigma);
  return root_perm_matrix(tf.datum(), t);
}

QMatrix frob_matrix(const TwistedFrob& tf) { return tau_matrix(tf).scaled(Rational(require_q(tf))); }

QMatrix frob_cocharacter_matrix(const TwistedFrob& tf) {
  // nu^T A F chi = (F' nu)^T A chi  =>  F' = A^{-T} F^T A^T
  const RootDatum& rd = tf.datum();
  return rd.cartan_q_inverse().transpose() * frob_matrix(tf).transpose() * rd.cartan_q().transpose();
}

QMatrix frob_minus_one_inverse_by_sum(const TwistedFrob& tf) {
  const long q = require_q(tf);
  const QMatrix f = frob_matrix(tf);
  const std::size_t n = f.rows();
  QMatrix sum(n, n);
  QMatrix power = QMatrix::identity(n);
  for (int i = 0; i < tf.h; ++i) {
    sum = sum + power;
    power = power * f;
  }
  Integer qh;
  mpz_ui_pow_ui(qh.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(tf.h));
  if (!(power == QMatrix::identity(n).scaled(Rational(qh))))
    throw FrobeniusDiscrepancy("F^h differs from q^h on the character lattice");
  return sum.scaled(Rational(1) / Rational(qh - 1));
}

QMatrix frob_minus_one_inverse_direct(const TwistedFrob& tf) {
  const QMatrix f = frob_matrix(tf);
  try {
    return (f - QMatrix::identity(f.rows())).inverse();
  } catch (const SingularMatrixError&) {
    throw FrobeniusDiscrepancy("F - 1 is singular");
  }
}

QMatrix frob_minus_one_inverse(const TwistedFrob& tf) {
  QMatrix by_sum = frob_minus_one_inverse_by_sum(tf);
  if (!(by_sum == frob_minus_one_inverse_direct(tf)))
    throw FrobeniusDiscrepancy("summation formula and direct inversion of F - 1 disagree");
  return by_sum;
}

std::vector<Integer> h_chi_direction(const TwistedFrob& tf, std::span<const Rational> chi) {
  const int n = tf.datum().rank();
  if (static_cast<int>(chi.size()) != n) throw DimensionError("h_chi_direction: dimension mismatch");
  if (std::all_of(chi.begin(), chi.end(), [](const Rational& x) { return sgn(x) == 0; }))
    throw std::invalid_argument("h_chi_direction: chi must be nonzero");
  const QMatrix f = frob_cocharacter_matrix(tf);
  QMatrix inv;
  try {
    inv = (f - QMatrix::identity(f.rows())).inverse();
  } catch (const SingularMatrixError&) {
    throw FrobeniusDiscrepancy("F - 1 is singular on cocharacters");
  }
  const QVector line = inv.apply(chi);
  return primitive_integral(line);
}

RegularityCertificate regularity_certificate(const TwistedFrob& tf) {
  const RootDatum& rd = tf.datum();
  const int n = rd.rank();
  RegularityCertificate cert;
  cert.q = require_q(tf);
  const QMatrix inv = frob_minus_one_inverse(tf);

  // Cocharacter side: (F' - 1)^{-1} alpha_i^* with F' the adjoint.
  const QMatrix f_co = frob_cocharacter_matrix(tf);
  const QMatrix inv_co = (f_co - QMatrix::identity(n)).inverse();
  std::vector<QVector> pulled;
  for (int i = 0; i < n; ++i) pulled.push_back(inv_co.apply(std::span<const Rational>(rd.fundamental_coweights()[i])));

  cert.verdict = true;
  cert.routes_agree = true;
  cert.table.assign(rd.root_count(), std::vector<Rational>(n));
  for (int g = 0; g < rd.root_count(); ++g) {
    const QVector img = inv.apply(std::span<const int>(rd.root(g)));
    for (int i = 0; i < n; ++i) {
      const Rational value = rd.pairing(std::span<const Rational>(img), rd.fundamental_coweights()[i]);
      cert.table[g][i] = value;
      if (value != rd.pairing(std::span<const int>(rd.root(g)), pulled[i])) cert.routes_agree = false;
      if (sgn(value) == 0 && cert.verdict) {
        cert.verdict = false;
        cert.zero_witness = std::make_pair(g, i);
      }
    }
  }
  return cert;
}

std::vector<int> tau_orbit_sizes(const TwistedFrob& tf) {
  const auto t = tau_perm(tf.c, tf.sigma);
  const int n = static_cast<int>(t.size());
  std::vector<int> sizes(n, 0);
  for (int i = 0; i < n; ++i) {
    if (sizes[i]) continue;
    std::vector<int> cycle;
    for (int j = i; !sizes[j] && std::find(cycle.begin(), cycle.end(), j) == cycle.end(); j = t[j]) cycle.push_back(j);
    for (int j : cycle) sizes[j] = static_cast<int>(cycle.size());
  }
  return sizes;
}

}  // namespace coxcert
