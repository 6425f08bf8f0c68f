#include "coxcert/weyl.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "coxcert/kernels.hpp"

namespace coxcert {
namespace {

static_assert(sizeof(RootIndex) == sizeof(std::int16_t));

std::vector<RootIndex> padded(std::size_t n) { return std::vector<RootIndex>(n + kernels::kPermPad, 0); }

std::vector<RootIndex> compose_perm(std::span<const RootIndex> outer, std::span<const RootIndex> inner) {
  // `outer` must come from a padded buffer.
  std::vector<RootIndex> out = padded(inner.size());
  kernels::compose(outer, inner, std::span<RootIndex>(out.data(), inner.size()));
  return out;
}

std::vector<RootIndex> padded_copy(std::span<const RootIndex> p) {
  std::vector<RootIndex> out = padded(p.size());
  std::copy(p.begin(), p.end(), out.begin());
  return out;
}

void require_same(const WeylElt& u, const WeylElt& w) {
  if (&u.datum() != &w.datum() && !(u.datum().type() == w.datum().type()))
    throw MismatchedRootDatum("Weyl elements belong to different root data");
}

// Greedy reduction; returns the word and whether the permutation reduced to
// the identity.
std::pair<Word, bool> extract_word(const RootDatum& rd, std::span<const RootIndex> perm, WordStrategy strategy) {
  const int n = rd.rank();
  const int p = rd.positive_count();
  std::vector<RootIndex> cur = padded_copy(perm);
  auto view = [&] { return std::span<const RootIndex>(cur.data(), perm.size()); };
  Word rev;
  for (int guard = 0; guard <= p; ++guard) {
    int pick = -1;
    if (strategy == WordStrategy::kRightDescentSmallest) {
      for (int i = 0; i < n; ++i)
        if (!rd.is_positive(cur[rd.simple_index(i)])) {
          pick = i;
          break;
        }
      if (pick < 0) break;
      // w -> w s_i
      std::vector<RootIndex> simple = padded_copy(rd.simple_reflection(pick));
      cur = compose_perm(view(), std::span<const RootIndex>(simple.data(), perm.size()));
    } else {
      // left descent: w^{-1}(alpha_i) < 0, i.e. some negative root maps onto alpha_i.
      for (int i = n - 1; i >= 0; --i) {
        const int target = rd.simple_index(i);
        const auto it = std::find(cur.begin(), cur.begin() + perm.size(), static_cast<RootIndex>(target));
        if (!rd.is_positive(static_cast<int>(it - cur.begin()))) {
          pick = i;
          break;
        }
      }
      if (pick < 0) break;
      // w -> s_i w
      std::vector<RootIndex> simple = padded_copy(rd.simple_reflection(pick));
      cur = compose_perm(std::span<const RootIndex>(simple.data(), perm.size()), view());
    }
    rev.push_back(pick);
  }
  bool identity = true;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (cur[i] != static_cast<RootIndex>(i)) identity = false;
  Word word;
  if (strategy == WordStrategy::kRightDescentSmallest)
    word.assign(rev.rbegin(), rev.rend());
  else
    word = rev;
  return {word, identity};
}

}  // namespace

int perm_length(const RootDatum& rd, std::span<const RootIndex> perm) {
  const int p = rd.positive_count();
  return static_cast<int>(kernels::count_below(perm.subspan(p), static_cast<RootIndex>(p)));
}

WeylElt WeylElt::finish(std::shared_ptr<const RootDatum> rd, std::vector<RootIndex> perm) {
  WeylElt w;
  const std::size_t n = perm.size() - kPad;
  const std::span<const RootIndex> view(perm.data(), n);
  w.length_ = perm_length(*rd, view);
  auto [word, ok] = extract_word(*rd, view, WordStrategy::kRightDescentSmallest);
  if (!ok || static_cast<int>(word.size()) != w.length_)
    throw std::invalid_argument("permutation is not induced by a Weyl group element");
  w.word_ = std::move(word);
  w.perm_ = std::move(perm);
  w.rd_ = std::move(rd);
  return w;
}

WeylElt WeylElt::identity(std::shared_ptr<const RootDatum> rd) {
  WeylElt w;
  w.perm_ = padded(rd->root_count());
  for (int i = 0; i < rd->root_count(); ++i) w.perm_[i] = static_cast<RootIndex>(i);
  w.rd_ = std::move(rd);
  return w;
}

WeylElt WeylElt::simple(std::shared_ptr<const RootDatum> rd, int i) {
  if (i < 0 || i >= rd->rank()) throw std::out_of_range("simple reflection index out of range");
  WeylElt w;
  w.perm_ = padded_copy(rd->simple_reflection(i));
  w.word_ = {i};
  w.length_ = 1;
  w.rd_ = std::move(rd);
  return w;
}

WeylElt WeylElt::from_word(std::shared_ptr<const RootDatum> rd, std::span<const int> word) {
  std::vector<RootIndex> cur = padded(rd->root_count());
  for (int i = 0; i < rd->root_count(); ++i) cur[i] = static_cast<RootIndex>(i);
  const auto n = static_cast<std::size_t>(rd->root_count());
  for (int letter : word) {
    if (letter < 0 || letter >= rd->rank()) throw std::out_of_range("word letter out of range");
    std::vector<RootIndex> s = padded_copy(rd->simple_reflection(letter));
    cur = compose_perm(std::span<const RootIndex>(cur.data(), n), std::span<const RootIndex>(s.data(), n));
  }
  return finish(std::move(rd), std::move(cur));
}

WeylElt WeylElt::from_perm(std::shared_ptr<const RootDatum> rd, std::span<const RootIndex> perm) {
  const int n = rd->root_count();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation has wrong size");
  std::vector<char> hit(n, 0);
  for (int i = 0; i < n; ++i) {
    const int img = perm[i];
    if (img < 0 || img >= n || hit[img]) throw std::invalid_argument("not a permutation of the roots");
    hit[img] = 1;
    if (perm[rd->negate(i)] != rd->negate(img)) throw std::invalid_argument("permutation does not commute with negation");
  }
  return finish(std::move(rd), padded_copy(perm));
}

std::size_t WeylElt::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (RootIndex x : perm()) {
    h ^= static_cast<std::uint16_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

bool WeylElt::operator==(const WeylElt& rhs) const {
  if (!rd_ || !rhs.rd_) return rd_ == rhs.rd_;
  const auto a = perm(), b = rhs.perm();
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

bool WeylElt::operator<(const WeylElt& rhs) const {
  if (length_ != rhs.length_) return length_ < rhs.length_;
  return word_ < rhs.word_;
}

std::string WeylElt::word_string() const { return word_to_string(word_); }

std::string word_to_string(std::span<const int> word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << word[i] + 1;
  return os.str();
}

WeylElt multiply(const WeylElt& u, const WeylElt& w) {
  require_same(u, w);
  // (uw)(beta) = u(w(beta))
  return WeylElt::finish(u.datum_ptr(), compose_perm(u.perm(), w.perm()));
}

WeylElt inverse(const WeylElt& w) {
  const auto p = w.perm();
  std::vector<RootIndex> inv = padded(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<RootIndex>(i);
  return WeylElt::finish(w.datum_ptr(), std::move(inv));
}

WeylElt power(const WeylElt& w, long long k) {
  WeylElt base = k < 0 ? inverse(w) : w;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  WeylElt acc = WeylElt::identity(w.datum_ptr());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

Word reduced_word(const WeylElt& w, WordStrategy strategy) {
  if (strategy == WordStrategy::kRightDescentSmallest) return w.word();
  return extract_word(w.datum(), w.perm(), strategy).first;
}

WeylElt longest_element(std::shared_ptr<const RootDatum> rd, std::span<const int> J) {
  WeylElt w = WeylElt::identity(rd);
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : J) {
      if (rd->is_positive(w.image(rd->simple_index(i)))) {
        w = w * WeylElt::simple(rd, i);
        grew = true;
        break;
      }
    }
  }
  return w;
}

WeylElt longest_element(std::shared_ptr<const RootDatum> rd) {
  std::vector<int> all(rd->rank());
  for (int i = 0; i < rd->rank(); ++i) all[i] = i;
  return longest_element(std::move(rd), all);
}

std::vector<int> support(const WeylElt& w) {
  std::vector<int> s(w.word().begin(), w.word().end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<WeylElt> cell_product_set(std::span<const int> word, const WeylElt& other, Side side, Recursion mode) {
  const auto& rdp = other.datum_ptr();
  const WeylElt expanded = WeylElt::from_word(rdp, word);
  if (expanded.length() != static_cast<int>(word.size()))
    throw NonReducedWord("cell_product_set: word '" + word_to_string(word) + "' is not reduced");

  std::unordered_set<WeylElt, WeylEltHash> current{other};
  auto step = [&](int letter) {
    const WeylElt s = WeylElt::simple(rdp, letter);
    std::unordered_set<WeylElt, WeylEltHash> next;
    for (const WeylElt& u : current) {
      WeylElt moved = side == Side::kLeft ? s * u : u * s;
      const bool descent = moved.length() < u.length();
      if (descent != (mode == Recursion::kFlipped)) next.insert(u);
      next.insert(std::move(moved));
    }
    current = std::move(next);
  };
  if (side == Side::kLeft) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) step(*it);
  } else {
    for (int letter : word) step(letter);
  }
  std::vector<WeylElt> out(current.begin(), current.end());
  std::sort(out.begin(), out.end());
  return out;
}

QMatrix character_matrix(const WeylElt& w) {
  const RootDatum& rd = w.datum();
  const int n = rd.rank();
  QMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    const IVector& img = rd.root(w.image(rd.simple_index(j)));
    for (int i = 0; i < n; ++i) m(i, j) = img[i];
  }
  return m;
}

QMatrix cocharacter_matrix(const WeylElt& w) {
  // <w chi, w nu> = <chi, nu> with <chi, nu> = nu^T A chi gives
  // N = A^{-T} M^{-T} A^T for the character matrix M.
  const RootDatum& rd = w.datum();
  const QMatrix m_inv_t = character_matrix(inverse(w)).transpose();
  return rd.cartan_q_inverse().transpose() * m_inv_t * rd.cartan_q().transpose();
}

QVector act_on_character(const WeylElt& w, std::span<const Rational> chi) {
  if (static_cast<int>(chi.size()) != w.datum().rank()) throw DimensionError("act_on_character: dimension mismatch");
  return character_matrix(w).apply(chi);
}

QVector act_on_cocharacter(const WeylElt& w, std::span<const Rational> nu) {
  if (static_cast<int>(nu.size()) != w.datum().rank()) throw DimensionError("act_on_cocharacter: dimension mismatch");
  return cocharacter_matrix(w).apply(nu);
}

std::uint64_t weyl_group_order(const CartanType& type) {
  type.validate();
  const int n = type.rank;
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  switch (type.series) {
    case Series::A: return fact * (n + 1);
    case Series::B:
    case Series::C: return (std::uint64_t{1} << n) * fact;
    case Series::D: return (std::uint64_t{1} << (n - 1)) * fact;
    case Series::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Series::F: return 1152;
    case Series::G: return 12;
  }
  return 0;
}

std::vector<WeylElt> enumerate_group(std::shared_ptr<const RootDatum> rd, std::size_t limit) {
  std::unordered_set<WeylElt, WeylEltHash> seen;
  std::deque<WeylElt> queue;
  WeylElt e = WeylElt::identity(rd);
  seen.insert(e);
  queue.push_back(e);
  std::vector<WeylElt> gens;
  for (int i = 0; i < rd->rank(); ++i) gens.push_back(WeylElt::simple(rd, i));
  while (!queue.empty()) {
    WeylElt cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      WeylElt next = cur * s;
      if (seen.insert(next).second) {
        if (seen.size() > limit)
          throw GroupTooLarge("Weyl group of " + rd->type().name() + " exceeds the enumeration limit");
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<WeylElt> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxcert
