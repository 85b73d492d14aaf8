#include "coxsupport/poincare.hpp"

#include <stdexcept>

namespace coxsupport {

namespace {

void add(std::map<Binomial, int>& m, Binomial b, int k = 1) {
  if ((m[b] += k) == 0) m.erase(b);
}

// One-variable factor (1 - q^d)/(1 - q) placed on variable 0 or 1.
void add_single_class(FactoredBiPoincare& f, const std::vector<int>& degrees, int cls) {
  for (int d : degrees) {
    add(f.numerator, cls == 1 ? Binomial{d, 0} : Binomial{0, d});
    add(f.denominator, cls == 1 ? Binomial{1, 0} : Binomial{0, 1});
  }
}

FactoredBiPoincare two_class_factor(const Factor& factor) {
  FactoredBiPoincare f;
  const CoxeterLabel& l = factor.label;
  if (l.crystallographic()) {
    const RootSystem& rs = root_system(l);
    for (int k = 0; k < rs.num_positive; ++k) {
      auto h = rs.heights[static_cast<std::size_t>(k)];
      int cls = rs.root_class[static_cast<std::size_t>(k)];
      Binomial num = h;
      num[cls == 1 ? 0 : 1] += 1;
      add(f.numerator, num);
      add(f.denominator, h);
    }
  } else {
    const int m = l.p / 2;
    add(f.numerator, {2, 0});
    add(f.numerator, {0, 2});
    add(f.numerator, {m, m});
    add(f.denominator, {1, 0});
    add(f.denominator, {0, 1});
    add(f.denominator, {1, 1});
  }
  if (factor.swapped()) {
    FactoredBiPoincare s;
    for (auto [b, k] : f.numerator) add(s.numerator, {b[1], b[0]}, k);
    for (auto [b, k] : f.denominator) add(s.denominator, {b[1], b[0]}, k);
    f = s;
  }
  f.cancel();
  return f;
}

}  // namespace

void FactoredBiPoincare::multiply_by(const FactoredBiPoincare& other) {
  for (auto [b, k] : other.numerator) add(numerator, b, k);
  for (auto [b, k] : other.denominator) add(denominator, b, k);
}

void FactoredBiPoincare::cancel() {
  for (auto it = denominator.begin(); it != denominator.end();) {
    auto n = numerator.find(it->first);
    if (n == numerator.end()) {
      ++it;
      continue;
    }
    int k = std::min(n->second, it->second);
    n->second -= k;
    it->second -= k;
    if (n->second == 0) numerator.erase(n);
    it = it->second == 0 ? denominator.erase(it) : std::next(it);
  }
}

BiLaurent FactoredBiPoincare::expand() const {
  BiLaurent p = BiLaurent::constant(1);
  for (auto [b, k] : numerator) {
    for (int i = 0; i < k; ++i) p *= binomial(b[0], b[1]);
  }
  for (auto [b, k] : denominator) {
    for (int i = 0; i < k; ++i) {
      auto q = divide_by_binomial(p, b[0], b[1]);
      if (!q) throw std::logic_error("factored Poincare form does not expand to a polynomial");
      p = std::move(*q);
    }
  }
  return p;
}

std::string FactoredBiPoincare::to_string() const {
  auto side = [](const std::map<Binomial, int>& m) {
    std::string s;
    for (auto [b, k] : m) {
      std::string term = "(1-";
      if (b[0] != 0) term += b[0] == 1 ? "q1" : "q1^" + std::to_string(b[0]);
      if (b[1] != 0) term += b[1] == 1 ? "q2" : "q2^" + std::to_string(b[1]);
      term += ")";
      if (k != 1) term += "^" + std::to_string(k);
      s += term;
    }
    return s.empty() ? std::string("1") : s;
  };
  return side(numerator) + " / " + side(denominator);
}

int a_count(const std::vector<int>& degrees, int m) {
  if (m < 1) throw std::invalid_argument("a-count needs m >= 1");
  int n = 0;
  for (int d : degrees) n += d % m == 0;
  return n;
}

int a_count(const CoxeterType& t, int m) { return a_count(t.degrees(), m); }

UniPoly poincare1(const CoxeterType& t) {
  UniPoly p = UniPoly::constant(1);
  for (int d : t.degrees()) p *= q_integer(d);
  return p;
}

FactoredBiPoincare poincare2(const CoxeterType& t) {
  if (!t.labeled && !t.two_class()) {
    throw std::invalid_argument(t.name() + " has no two-class structure; use the one-variable polynomial");
  }
  FactoredBiPoincare f;
  for (const auto& factor : t.factors) {
    if (factor.label.two_class()) {
      f.multiply_by(two_class_factor(factor));
    } else {
      add_single_class(f, factor.label.degrees(), factor.node_class.empty() ? 1 : factor.node_class[0]);
    }
  }
  f.cancel();
  return f;
}

UniPoly poincare_bruteforce1(const CoxeterLabel& l, long cap) {
  UniPoly p;
  for (const auto& g : enumerate_elements(l, cap)) p.add_term(g.length, 1);
  return p;
}

BiLaurent poincare_bruteforce2(const CoxeterLabel& l, long cap) {
  BiLaurent p;
  for (const auto& g : enumerate_elements(l, cap)) p.add_term({g.length1, g.length2}, 1);
  return p;
}

DivisionResult poincare_ratio(const CoxeterType& w, const CoxeterType& wsub) {
  return poly_div_exact(poincare1(w), poincare1(wsub));
}

}  // namespace coxsupport
