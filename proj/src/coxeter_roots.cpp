#include "coxsupport/coxeter.hpp"
#include "coxsupport/qsqrt5.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace coxsupport {

namespace {

// Gram matrix of the simple roots for crystallographic types. Squared lengths:
// 2 for simply laced, 2/1 for long/short in B_n, F4 and I2(4), 3/1 for I2(6).
std::vector<std::vector<Rational>> crystallographic_gram(const CoxeterLabel& label) {
  const auto n = static_cast<std::size_t>(label.rank);
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, 0));
  auto m = label.coxeter_matrix();
  std::vector<Rational> norm(n, 2);
  if (label.family == Family::B) norm[n - 1] = 1;
  if (label.family == Family::F) norm[2] = norm[3] = 1;
  if (label.family == Family::I && label.p == 4) norm = {2, 1};
  if (label.family == Family::I && label.p == 6) norm = {3, 1};
  for (std::size_t i = 0; i < n; ++i) {
    g[i][i] = norm[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || m[i][j] == 2) continue;
      // (a_i, a_j) = -|a_i||a_j| cos(pi/m); with the chosen lengths this is rational.
      Rational lo = std::min(norm[i], norm[j]);
      switch (m[i][j]) {
        case 3: g[i][j] = -lo / 2; break;
        case 4: g[i][j] = -lo; break;
        case 6: g[i][j] = Rational(-3, 2) * lo; break;
        default: throw std::logic_error("non-crystallographic edge in crystallographic type");
      }
    }
  }
  return g;
}

std::vector<std::vector<QSqrt5>> h_gram(const CoxeterLabel& label) {
  const auto n = static_cast<std::size_t>(label.rank);
  auto m = label.coxeter_matrix();
  std::vector<std::vector<QSqrt5>> g(n, std::vector<QSqrt5>(n, QSqrt5(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) g[i][j] = QSqrt5(2);
      else if (m[i][j] == 3) g[i][j] = QSqrt5(-1);
      else if (m[i][j] == 5) g[i][j] = -QSqrt5::golden();
    }
  }
  return g;
}

// Positive roots by closure under simple reflections, starting from the simple roots.
// Scalar needs +,-,*,/, ordering for set membership, and a sign() test.
template <class Scalar, class SignFn>
std::vector<std::vector<Scalar>> close_positive(const std::vector<std::vector<Scalar>>& gram, SignFn sign) {
  const std::size_t n = gram.size();
  std::vector<std::vector<Scalar>> out;
  std::set<std::vector<Scalar>> seen;
  std::deque<std::vector<Scalar>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> e(n, Scalar(0));
    e[i] = Scalar(1);
    seen.insert(e);
    out.push_back(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Scalar ip(0);
      for (std::size_t j = 0; j < n; ++j) ip = ip + beta[j] * gram[j][i];
      Scalar coef = Scalar(2) * ip / gram[i][i];
      if (sign(coef) == 0) continue;
      auto img = beta;
      img[i] = img[i] - coef;
      bool nonneg = std::all_of(img.begin(), img.end(), [&](const Scalar& x) { return sign(x) >= 0; });
      if (!nonneg) continue;  // only s_i(alpha_i) leaves the positive cone
      if (seen.insert(img).second) {
        out.push_back(img);
        queue.push_back(img);
      }
    }
  }
  return out;
}

std::vector<int> union_find_classes(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && m[i][j] % 2 == 1) parent[find(i)] = find(j);
    }
  }
  std::vector<int> cls(n, 1);
  std::size_t first = find(0);
  for (std::size_t i = 0; i < n; ++i) cls[i] = find(i) == first ? 1 : 2;
  return cls;
}

std::unique_ptr<RootSystem> build(const CoxeterLabel& label) {
  label.validate();
  auto rs = std::make_unique<RootSystem>();
  rs->label = label;
  rs->rank = label.rank;
  rs->crystallographic = label.crystallographic();
  const auto n = static_cast<std::size_t>(label.rank);
  rs->node_class = union_find_classes(label.coxeter_matrix());

  std::vector<RootVec> positive;
  if (rs->crystallographic) {
    auto g = crystallographic_gram(label);
    auto roots = close_positive(g, [](const Rational& x) { return sgn(x); });
    std::vector<std::vector<int>> ints;
    for (const auto& r : roots) {
      std::vector<int> v;
      for (const auto& x : r) v.push_back(static_cast<int>(x.get_num().get_si()));
      ints.push_back(v);
    }
    // Simple roots first, then by height.
    std::stable_sort(ints.begin() + static_cast<long>(n), ints.end(), [](const auto& a, const auto& b) {
      int ha = std::accumulate(a.begin(), a.end(), 0);
      int hb = std::accumulate(b.begin(), b.end(), 0);
      return ha != hb ? ha < hb : a > b;
    });
    for (const auto& v : ints) {
      RootVec rv;
      for (int x : v) rv.emplace_back(static_cast<long>(x));
      positive.push_back(rv);
      std::array<int, 2> ht{0, 0};
      for (std::size_t i = 0; i < n; ++i) ht[static_cast<std::size_t>(rs->node_class[i] - 1)] += v[i];
      rs->heights.push_back(ht);
    }
    rs->int_coords = std::move(ints);
    rs->gram.assign(n, std::vector<CycloNum>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) rs->gram[i][j] = CycloNum(g[i][j]);
    }
  } else if (label.family == Family::H) {
    auto g = h_gram(label);
    auto roots = close_positive(g, [](const QSqrt5& x) { return x.sign(); });
    for (const auto& r : roots) {
      RootVec rv;
      for (const auto& x : r) rv.push_back(x.to_cyclo());
      positive.push_back(rv);
    }
    rs->gram.assign(n, std::vector<CycloNum>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) rs->gram[i][j] = g[i][j].to_cyclo();
    }
  } else {
    // I2(p): the root at angle k*pi/p is (S_{p-1-k}, S_k) in simple-root coordinates,
    // with S_j = sin(j pi/p)/sin(pi/p) = sum_i zeta^{j-1-2i}, zeta = exp(i pi/p).
    const long p = label.p;
    const long cond = 2 * p;
    auto chebyshev_s = [&](long j) {
      CycloNum s(0);
      for (long i = 0; i < j; ++i) s += CycloNum::zeta(cond, j - 1 - 2 * i);
      return s;
    };
    positive.push_back({CycloNum(1), CycloNum(0)});
    positive.push_back({CycloNum(0), CycloNum(1)});
    for (long k = 1; k + 1 < p; ++k) positive.push_back({chebyshev_s(p - 1 - k), chebyshev_s(k)});
    CycloNum two_cos = CycloNum::zeta(cond, 1) + CycloNum::zeta(cond, -1);
    rs->gram = {{CycloNum(2), -two_cos}, {-two_cos, CycloNum(2)}};
  }

  rs->num_positive = static_cast<int>(positive.size());
  if (rs->num_positive != label.num_positive_roots()) {
    throw std::logic_error("root construction for " + label.name() + " produced " +
                           std::to_string(rs->num_positive) + " positive roots");
  }
  rs->roots = positive;
  for (const auto& r : positive) {
    RootVec neg;
    for (const auto& x : r) neg.push_back(-x);
    rs->roots.push_back(neg);
  }
  for (std::size_t k = 0; k < rs->roots.size(); ++k) rs->lookup.emplace(rs->roots[k], static_cast<int>(k));

  rs->reflect.assign(n, std::vector<int>(rs->roots.size(), -1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < rs->roots.size(); ++k) {
      rs->reflect[i][k] = rs->reflect_root(static_cast<int>(i), static_cast<int>(k));
      if (rs->reflect[i][k] < 0) throw std::logic_error("root set of " + label.name() + " is not closed");
    }
  }

  // Classes spread from the simple roots along simple reflections.
  rs->root_class.assign(rs->roots.size(), 0);
  std::deque<int> queue;
  for (std::size_t i = 0; i < n; ++i) {
    rs->root_class[i] = rs->node_class[i];
    queue.push_back(static_cast<int>(i));
  }
  while (!queue.empty()) {
    int k = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      int img = rs->reflect[i][static_cast<std::size_t>(k)];
      if (rs->root_class[static_cast<std::size_t>(img)] == 0) {
        rs->root_class[static_cast<std::size_t>(img)] = rs->root_class[static_cast<std::size_t>(k)];
        queue.push_back(img);
      }
    }
  }
  for (int k = 0; k < rs->num_positive; ++k) {
    rs->root_class[static_cast<std::size_t>(rs->negate(k))] = rs->root_class[static_cast<std::size_t>(k)];
  }
  return rs;
}

}  // namespace

CycloNum RootSystem::inner(const RootVec& x, const RootVec& y) const {
  CycloNum s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (!y[j].is_zero()) s += x[i] * gram[i][j] * y[j];
    }
  }
  return s;
}

int RootSystem::index_of(const RootVec& v) const {
  auto it = lookup.find(v);
  return it == lookup.end() ? -1 : it->second;
}

int RootSystem::reflect_root(int a, int b) const {
  const auto& ra = roots[static_cast<std::size_t>(a)];
  const auto& rb = roots[static_cast<std::size_t>(b)];
  CycloNum coef = CycloNum(2) * inner(rb, ra) / inner(ra, ra);
  if (coef.is_zero()) return b;
  RootVec img = rb;
  for (std::size_t i = 0; i < img.size(); ++i) img[i] -= coef * ra[i];
  return index_of(img);
}

int RootSystem::count_class(int cls) const {
  int c = 0;
  for (int k = 0; k < num_positive; ++k) c += root_class[static_cast<std::size_t>(k)] == cls;
  return c;
}

const RootSystem& root_system(const CoxeterLabel& label) {
  static std::mutex mutex;
  static std::map<CoxeterLabel, std::unique_ptr<RootSystem>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(label); it != cache.end()) return *it->second;
  }
  auto built = build(label);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(label, std::move(built));
  return *it->second;
}

std::vector<int> degrees_from_heights(const RootSystem& rs) {
  if (!rs.crystallographic) throw std::invalid_argument("height oracle needs a crystallographic root system");
  std::map<int, int> per_height;
  for (const auto& v : rs.int_coords) per_height[std::accumulate(v.begin(), v.end(), 0)]++;
  std::vector<int> degrees;
  for (int j = 1; j <= rs.rank; ++j) {
    int exponent = 0;
    for (const auto& [h, count] : per_height) exponent += count >= j;
    degrees.push_back(exponent + 1);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace coxsupport
