#include "coxcert/oracle.hpp"

#include <algorithm>

#include "coxcert/parallel.hpp"

namespace coxcert {
namespace {

constexpr std::size_t kNoLabel = static_cast<std::size_t>(-1);

struct Realisation {
  int dim;
  bool symplectic;
};

Realisation realisation(const CartanType& type) {
  if (type == CartanType{Series::A, 1}) return {2, false};
  if (type == CartanType{Series::A, 2}) return {3, false};
  if (type == CartanType{Series::B, 2}) return {4, true};
  throw UnsupportedOracleGroup("no oracle group for type " + type.name() + " (supported: A1, A2, B2)");
}

int det_mod(const SmallMatrix& m, int dim, int p) {
  auto at = [&](int i, int j) { return static_cast<int>(m[i * dim + j]); };
  int d = 0;
  if (dim == 2) {
    d = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  } else if (dim == 3) {
    d = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) - at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
        at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  } else {
    throw std::logic_error("det_mod: unsupported dimension");
  }
  return ((d % p) + p) % p;
}

// Gram matrix of the symplectic form: w(e1, e4) = w(e2, e3) = 1.
SmallMatrix symplectic_form(int p) {
  SmallMatrix j{};
  auto set = [&](int r, int c, int v) { j[r * 4 + c] = static_cast<std::uint8_t>(((v % p) + p) % p); };
  set(0, 3, 1);
  set(1, 2, 1);
  set(2, 1, -1);
  set(3, 0, -1);
  return j;
}

SmallMatrix from_rows(int p, std::initializer_list<int> entries) {
  SmallMatrix m{};
  int i = 0;
  for (int v : entries) m[i++] = static_cast<std::uint8_t>(((v % p) + p) % p);
  return m;
}

}  // namespace

std::size_t classical_order(const CartanType& type, int q) {
  const std::size_t q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
  const Realisation r = realisation(type);
  if (r.dim == 2) return q * (q2 - 1);
  if (r.dim == 3) return q3 * (q2 - 1) * (q3 - 1);
  return q4 * (q2 - 1) * (q4 - 1);
}

SmallMatrix FiniteChevalleyGroup::multiply(const SmallMatrix& a, const SmallMatrix& b) const {
  SmallMatrix out{};
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      int s = 0;
      for (int k = 0; k < dim_; ++k) s += a[i * dim_ + k] * b[k * dim_ + j];
      out[i * dim_ + j] = static_cast<std::uint8_t>(s % p_);
    }
  return out;
}

std::uint64_t FiniteChevalleyGroup::key(const SmallMatrix& m) const {
  std::uint64_t k = 0;
  for (int i = 0; i < dim_ * dim_; ++i) k = k * p_ + m[i];
  return k;
}

std::size_t FiniteChevalleyGroup::label(const SmallMatrix& g) const {
  const auto it = index_.find(key(g));
  if (it == index_.end()) throw std::logic_error("matrix is not a group element");
  return labels_[it->second];
}

std::size_t FiniteChevalleyGroup::weyl_index(const WeylElt& w) const {
  const auto it = std::lower_bound(weyl_.begin(), weyl_.end(), w);
  if (it == weyl_.end() || !(*it == w)) throw std::invalid_argument("element is not in this Weyl group");
  return static_cast<std::size_t>(it - weyl_.begin());
}

FiniteChevalleyGroup FiniteChevalleyGroup::enumerate(const CartanType& type, int field_size) {
  if (field_size != 2 && field_size != 3)
    throw UnsupportedOracleGroup("oracle fields are F2 and F3, got size " + std::to_string(field_size));
  const Realisation real = realisation(type);
  FiniteChevalleyGroup g;
  g.type_ = type;
  g.p_ = field_size;
  g.dim_ = real.dim;
  g.rd_ = build_root_system(type);
  const int p = g.p_;
  const int dim = g.dim_;

  const SmallMatrix form = symplectic_form(p);
  auto transpose = [&](const SmallMatrix& m) {
    SmallMatrix t{};
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) t[j * dim + i] = m[i * dim + j];
    return t;
  };
  auto in_group = [&](const SmallMatrix& m) {
    if (real.symplectic) return g.multiply(g.multiply(transpose(m), form), m) == form;
    return det_mod(m, dim, p) == 1;
  };
  SmallMatrix identity{};
  for (int i = 0; i < dim; ++i) identity[i * dim + i] = 1;

  // Upper-triangular elements of G.
  std::vector<SmallMatrix> borel;
  {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j) slots.emplace_back(i, j);
    std::vector<int> digits(slots.size(), 0);
    for (;;) {
      SmallMatrix m{};
      bool unit_diagonal = true;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        const auto [i, j] = slots[s];
        const int v = i == j ? digits[s] + 1 : digits[s];  // diagonal ranges over F_p^*
        if (i == j && v >= p) unit_diagonal = false;
        m[i * dim + j] = static_cast<std::uint8_t>(v);
      }
      if (unit_diagonal && in_group(m)) borel.push_back(m);
      std::size_t s = 0;
      for (; s < slots.size(); ++s) {
        const int radix = slots[s].first == slots[s].second ? p - 1 : p;
        if (++digits[s] < radix) break;
        digits[s] = 0;
      }
      if (s == slots.size()) break;
    }
  }

  // Monomial lifts of the simple reflections.
  std::vector<SmallMatrix> simple;
  if (dim == 2) {
    simple.push_back(from_rows(p, {0, 1, -1, 0}));
  } else if (dim == 3) {
    simple.push_back(from_rows(p, {0, 1, 0, -1, 0, 0, 0, 0, 1}));
    simple.push_back(from_rows(p, {1, 0, 0, 0, 0, 1, 0, -1, 0}));
  } else {
    // s1: the long root 2e2 (rotation of e2, e3); s2: e1 - e2 (swap e1 <-> e2, e3 <-> e4).
    simple.push_back(from_rows(p, {1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 1}));
    simple.push_back(from_rows(p, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}));
  }
  for (const auto& s : simple)
    if (!in_group(s)) throw std::logic_error("simple reflection lift is not in the group");

  auto closure = [&](const std::vector<SmallMatrix>& gens) {
    std::vector<SmallMatrix> elems{identity};
    std::unordered_map<std::uint64_t, std::size_t> seen{{g.key(identity), 0}};
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (const auto& s : gens) {
        SmallMatrix next = g.multiply(elems[i], s);
        if (seen.emplace(g.key(next), elems.size()).second) elems.push_back(next);
      }
    return std::make_pair(std::move(elems), std::move(seen));
  };

  // A small generating set of B, picked greedily.
  std::vector<SmallMatrix> gens;
  {
    auto [sub, sub_index] = closure(gens);
    for (const auto& b : borel)
      if (!sub_index.count(g.key(b))) {
        gens.push_back(b);
        std::tie(sub, sub_index) = closure(gens);
      }
    if (sub.size() != borel.size()) throw std::logic_error("upper-triangular elements do not form a group");
  }
  gens.insert(gens.end(), simple.begin(), simple.end());
  std::tie(g.elements_, g.index_) = closure(gens);

  for (const auto& b : borel) g.borel_.push_back(g.index_.at(g.key(b)));

  g.weyl_ = enumerate_group(g.rd_);
  for (const auto& w : g.weyl_) {
    SmallMatrix m = identity;
    for (int letter : w.word()) m = g.multiply(m, simple[letter]);
    g.weyl_reps_.push_back(m);
  }

  // Bruhat decomposition by brute force: B w B for every w must be disjoint
  // and exhaust G.
  g.labels_.assign(g.elements_.size(), kNoLabel);
  g.cells_.resize(g.weyl_.size());
  for (std::size_t w = 0; w < g.weyl_.size(); ++w) {
    for (std::size_t i : g.borel_) {
      const SmallMatrix left = g.multiply(g.elements_[i], g.weyl_reps_[w]);
      for (std::size_t j : g.borel_) {
        const std::size_t idx = g.index_.at(g.key(g.multiply(left, g.elements_[j])));
        if (g.labels_[idx] == w) continue;
        if (g.labels_[idx] != kNoLabel)
          throw std::logic_error("double cosets of " + g.weyl_[w].word_string() + " and " +
                                 g.weyl_[g.labels_[idx]].word_string() + " overlap");
        g.labels_[idx] = w;
        g.cells_[w].push_back(idx);
      }
    }
    std::sort(g.cells_[w].begin(), g.cells_[w].end());
  }
  if (std::find(g.labels_.begin(), g.labels_.end(), kNoLabel) != g.labels_.end())
    throw std::logic_error("double cosets do not cover the group");
  return g;
}

std::vector<WeylElt> double_coset_product_set(const FiniteChevalleyGroup& g, const WeylElt& x, const WeylElt& y,
                                              Side side) {
  const std::size_t xi = g.weyl_index(x);
  const std::size_t yi = g.weyl_index(y);
  std::vector<char> hit(g.weyl().size(), 0);
  if (side == Side::kLeft) {
    const SmallMatrix& rep = g.weyl_rep(yi);
    for (std::size_t idx : g.cell(xi)) hit[g.label(g.multiply(g.elements()[idx], rep))] = 1;
  } else {
    const SmallMatrix& rep = g.weyl_rep(xi);
    for (std::size_t idx : g.cell(yi)) hit[g.label(g.multiply(rep, g.elements()[idx]))] = 1;
  }
  std::vector<WeylElt> out;
  for (std::size_t w = 0; w < hit.size(); ++w)
    if (hit[w]) out.push_back(g.weyl()[w]);
  return out;  // weyl() is already in canonical order
}

bool cell_size_law_holds(const FiniteChevalleyGroup& g) {
  const std::size_t b = g.borel().size();
  for (std::size_t w = 0; w < g.weyl().size(); ++w) {
    std::size_t expect = b;
    for (int i = 0; i < g.weyl()[w].length(); ++i) expect *= g.field_size();
    if (g.cell(w).size() != expect) return false;
  }
  return true;
}

bool OracleReport::ok() const {
  if (!mismatches.empty() || groups.empty()) return false;
  return std::all_of(groups.begin(), groups.end(),
                     [](const OracleGroupSummary& s) { return s.order_matches && s.cell_law && s.pairs > 0; });
}

OracleReport oracle_sweep(Recursion mode) {
  OracleReport report;
  for (const char* name : {"A1", "A2", "B2"})
    for (int p : {2, 3}) {
      const CartanType type = CartanType::parse(name);
      const FiniteChevalleyGroup g = FiniteChevalleyGroup::enumerate(type, p);
      OracleGroupSummary s;
      s.group = std::string(name) + "/F" + std::to_string(p);
      s.order = g.order();
      s.order_matches = g.order() == classical_order(type, p);
      s.cell_law = cell_size_law_holds(g);

      const auto& w = g.weyl();
      const std::size_t n = w.size();
      std::vector<std::vector<OracleMismatch>> found(n * n);
      parallel_for(n * n, [&](std::size_t i) {
        const WeylElt& x = w[i / n];
        const WeylElt& y = w[i % n];
        for (Side side : {Side::kLeft, Side::kRight}) {
          auto literal = double_coset_product_set(g, x, y, side);
          auto recursion = side == Side::kLeft ? cell_product_set(x, y, side, mode) : cell_product_set(y, x, side, mode);
          if (literal != recursion) found[i].push_back({s.group, x, y, side, std::move(literal), std::move(recursion)});
        }
      });
      s.pairs = 2 * n * n;
      for (auto& f : found)
        for (auto& m : f) report.mismatches.push_back(std::move(m));
      report.groups.push_back(s);
    }
  return report;
}

}  // namespace coxcert
