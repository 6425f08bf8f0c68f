#include "coxcert/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace coxcert {

void CartanType::validate() const {
  const int n = rank;
  bool ok = false;
  switch (series) {
    case Series::A: ok = n >= 1; break;
    case Series::B: ok = n >= 2; break;
    case Series::C: ok = n >= 2; break;
    case Series::D: ok = n >= 4; break;
    case Series::E: ok = n >= 6 && n <= 8; break;
    case Series::F: ok = n == 4; break;
    case Series::G: ok = n == 2; break;
  }
  if (!ok) throw InvalidCartanType("not an irreducible Cartan type: " + name());
}

std::string CartanType::name() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw InvalidCartanType("cannot parse Cartan type '" + s + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (std::string("ABCDEFG").find(letter) == std::string::npos)
    throw InvalidCartanType("unknown series in '" + s + "'");
  const std::string digits = s.substr(1);
  if (digits.empty() || digits.size() > 2 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InvalidCartanType("bad rank in '" + s + "'");
  CartanType t{static_cast<Series>(letter), std::stoi(digits)};
  t.validate();
  return t;
}

std::vector<CartanType> all_types(int max_rank) {
  std::vector<CartanType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Series::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Series::B, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Series::C, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Series::D, n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Series::E, n});
  if (max_rank >= 4) out.push_back({Series::F, 4});
  if (max_rank >= 2) out.push_back({Series::G, 2});
  return out;
}

std::vector<IVector> cartan_matrix(const CartanType& type) {
  type.validate();
  const int n = type.rank;
  std::vector<IVector> a(n, IVector(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (type.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Series::E:
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;
      break;
    case Series::G:
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
  }
  return a;
}

namespace {

IVector reflect(const std::vector<IVector>& cartan, const IVector& beta, int i) {
  int c = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) c += cartan[i][j] * beta[j];
  IVector out = beta;
  out[i] -= c;
  return out;
}

int vec_height(const IVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

RootDatum::RootDatum(CartanType type) : type_(type), cartan_(cartan_matrix(type)) {
  const int n = type_.rank;

  // W-orbit of the simple roots.
  std::set<IVector> seen;
  std::deque<IVector> queue;
  for (int i = 0; i < n; ++i) {
    IVector e(n, 0);
    e[i] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    IVector beta = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      IVector img = reflect(cartan_, beta, i);
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }

  std::vector<IVector> positives;
  for (const auto& v : seen)
    if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; })) positives.push_back(v);
  std::sort(positives.begin(), positives.end(), [](const IVector& x, const IVector& y) {
    const int hx = vec_height(x), hy = vec_height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  positive_count_ = static_cast<int>(positives.size());
  roots_.reserve(2 * positives.size());
  for (auto it = positives.rbegin(); it != positives.rend(); ++it) {
    IVector neg = *it;
    for (auto& x : neg) x = -x;
    roots_.push_back(std::move(neg));
  }
  for (auto& p : positives) roots_.push_back(std::move(p));
  for (int idx = 0; idx < root_count(); ++idx) index_.emplace(roots_[idx], idx);

  simple_perms_.assign(n, std::vector<RootIndex>(roots_.size()));
  for (int i = 0; i < n; ++i)
    for (int idx = 0; idx < root_count(); ++idx)
      simple_perms_[i][idx] = static_cast<RootIndex>(index_of(reflect(cartan_, roots_[idx], i)));

  cartan_q_ = QMatrix::from_int_rows(cartan_);
  cartan_q_inv_ = cartan_q_.inverse();
  // Column k of A^{-T} is the coweight dual to alpha_k.
  const QMatrix inv_t = cartan_q_inv_.transpose();
  coweights_.assign(n, QVector(n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) coweights_[k][i] = inv_t(i, k);
}

int RootDatum::height(int idx) const { return vec_height(roots_[idx]); }

int RootDatum::index_of(const IVector& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

Rational RootDatum::pairing(std::span<const Rational> chi, std::span<const Rational> nu) const {
  if (static_cast<int>(chi.size()) != rank() || static_cast<int>(nu.size()) != rank())
    throw DimensionError("pairing: vector dimension does not match the rank");
  Rational out = 0;
  for (int i = 0; i < rank(); ++i) {
    if (sgn(nu[i]) == 0) continue;
    Rational c = 0;
    for (int j = 0; j < rank(); ++j) c += cartan_[i][j] * chi[j];
    out += nu[i] * c;
  }
  return out;
}

Rational RootDatum::pairing(std::span<const int> chi, std::span<const Rational> nu) const {
  QVector q = to_rational(chi);
  return pairing(std::span<const Rational>(q), nu);
}

int RootDatum::coroot_pairing(std::span<const int> beta, int i) const {
  if (static_cast<int>(beta.size()) != rank()) throw DimensionError("coroot_pairing: dimension mismatch");
  int c = 0;
  for (int j = 0; j < rank(); ++j) c += cartan_[i][j] * beta[j];
  return c;
}

std::shared_ptr<const RootDatum> build_root_system(const CartanType& type) {
  type.validate();
  return std::make_shared<const RootDatum>(type);
}

int m_constant(const RootDatum& rd) {
  // <alpha_0, alpha_i^*> is the i-th simple-root coordinate of alpha_0; computed
  // through the pairing so the dual-basis property is exercised.
  int best = 0;
  const IVector& top = rd.highest_root();
  for (int i = 0; i < rd.rank(); ++i) {
    const Rational v = rd.pairing(std::span<const int>(top), rd.fundamental_coweights()[i]);
    best = std::max(best, static_cast<int>(v.get_num().get_si()));
  }
  return best;
}

}  // namespace coxcert
