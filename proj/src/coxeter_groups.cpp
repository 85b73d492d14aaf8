#include "coxsupport/coxeter.hpp"
#include "coxsupport/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace coxsupport {

// ---------------------------------------------------------------- elements

Matrix GroupElement::matrix(const RootSystem& rs) const {
  const auto n = static_cast<std::size_t>(rs.rank);
  Matrix m(n, std::vector<CycloNum>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const auto& col = rs.roots[perm[j]];
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

long GroupElement::order() const {
  std::vector<bool> seen(perm.size(), false);
  long o = 1;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (seen[k]) continue;
    long len = 0;
    for (std::size_t x = k; !seen[x]; x = perm[x]) {
      seen[x] = true;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

bool GroupElement::is_elliptic(const RootSystem& rs) const {
  Matrix m = matrix(rs);
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= CycloNum(1);
  return exact_rank(m) == rs.rank;
}

long enumeration_cap() {
  if (const char* env = std::getenv("COXSUPPORT_ENUM_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationCap;
}

namespace {

void fill_lengths(const RootSystem& rs, GroupElement& g) {
  g.length = g.length1 = g.length2 = 0;
  for (int k = 0; k < rs.num_positive; ++k) {
    if (!rs.is_positive(g.perm[static_cast<std::size_t>(k)])) {
      ++g.length;
      (rs.root_class[static_cast<std::size_t>(k)] == 1 ? g.length1 : g.length2)++;
    }
  }
}

std::uint64_t element_key(const GroupElement& g, int rank) {
  std::uint64_t key = 0;
  for (int j = 0; j < rank; ++j) key = (key << 8) | g.perm[static_cast<std::size_t>(j)];
  return key;
}

GroupElement identity_element(const RootSystem& rs) {
  GroupElement e;
  e.perm.resize(rs.roots.size());
  std::iota(e.perm.begin(), e.perm.end(), 0);
  return e;
}

// Right multiplication w -> w s_i.
GroupElement times_generator(const RootSystem& rs, const GroupElement& w, int i) {
  GroupElement r;
  r.perm.resize(w.perm.size());
  const auto& s = rs.reflect[static_cast<std::size_t>(i)];
  for (std::size_t k = 0; k < w.perm.size(); ++k) r.perm[k] = w.perm[static_cast<std::size_t>(s[k])];
  return r;
}

std::vector<GroupElement> enumerate_dihedral(const RootSystem& rs) {
  // Normal forms: the alternating words of length k < p starting with either
  // generator, and the single longest word of length p.
  const int p = rs.label.p;
  const bool two = p % 2 == 0;
  std::vector<GroupElement> out;
  GroupElement e = identity_element(rs);
  out.push_back(e);
  for (int k = 1; k <= p; ++k) {
    for (int first = 0; first < 2; ++first) {
      if (k == p && first == 1) break;
      GroupElement w = identity_element(rs);
      int count[2] = {0, 0};
      for (int pos = 0; pos < k; ++pos) {
        int gen = (first + pos) % 2;
        w = times_generator(rs, w, gen);
        ++count[gen];
      }
      w.length = k;
      w.length1 = two ? count[0] : k;
      w.length2 = two ? count[1] : 0;
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

std::vector<GroupElement> enumerate_elements(const CoxeterLabel& label, long cap) {
  label.validate();
  BigInt order = label.order();
  if (order > cap) {
    throw ScopeError("enumeration of " + label.name() + " refused: |W| = " + order.get_str() +
                     " exceeds the cap " + std::to_string(cap) + " (raise COXSUPPORT_ENUM_CAP to override)");
  }
  const RootSystem& rs = root_system(label);
  if (rs.roots.size() > 256) throw ScopeError("enumeration supports at most 256 roots");
  if (label.family == Family::I) return enumerate_dihedral(rs);

  std::vector<GroupElement> out;
  std::unordered_map<std::uint64_t, std::size_t> seen;
  out.push_back(identity_element(rs));
  seen.emplace(element_key(out[0], rs.rank), 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < rs.rank; ++i) {
      GroupElement next = times_generator(rs, out[head], i);
      if (seen.emplace(element_key(next, rs.rank), out.size()).second) out.push_back(std::move(next));
    }
  }
  for (auto& g : out) fill_lengths(rs, g);
  if (BigInt(static_cast<long>(out.size())) != order) {
    throw std::logic_error("enumeration of " + label.name() + " found " + std::to_string(out.size()) + " elements");
  }
  return out;
}

// ---------------------------------------------------------- classification

namespace {

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix permuted(const IntMatrix& m, const std::vector<int>& order) {
  IntMatrix r(order.size(), std::vector<int>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      r[i][j] = m[static_cast<std::size_t>(order[i])][static_cast<std::size_t>(order[j])];
    }
  }
  return r;
}

std::vector<int> neighbours(const IntMatrix& m, int v) {
  std::vector<int> out;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (static_cast<int>(j) != v && m[static_cast<std::size_t>(v)][j] >= 3) out.push_back(static_cast<int>(j));
  }
  return out;
}

// Walk from `start` away from `prev` along a chain of degree <= 2 nodes.
std::vector<int> walk(const IntMatrix& m, int start, int prev) {
  std::vector<int> path{start};
  int cur = start;
  while (true) {
    int next = -1;
    for (int nb : neighbours(m, cur)) {
      if (nb != prev) next = nb;
    }
    if (next < 0) break;
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  return path;
}

// Candidate (label, catalog ordering) pairs for a connected diagram.
std::vector<std::pair<CoxeterLabel, std::vector<int>>> candidates(const IntMatrix& m) {
  const int k = static_cast<int>(m.size());
  std::vector<std::pair<CoxeterLabel, std::vector<int>>> out;
  if (k == 1) {
    out.push_back({CoxeterLabel::A(1), {0}});
    return out;
  }
  if (k == 2) {
    int e = m[0][1];
    CoxeterLabel l = e == 3 ? CoxeterLabel::A(2) : e == 4 ? CoxeterLabel::B(2) : CoxeterLabel::I2(e);
    out.push_back({l, {0, 1}});
    out.push_back({l, {1, 0}});
    return out;
  }
  int branch = -1;
  std::vector<int> ends;
  for (int v = 0; v < k; ++v) {
    auto d = neighbours(m, v).size();
    if (d >= 3) branch = v;
    if (d == 1) ends.push_back(v);
  }
  if (branch < 0) {
    for (int end : ends) {
      std::vector<int> path = walk(m, end, -1);
      if (static_cast<int>(path.size()) != k) continue;
      for (auto label : {CoxeterLabel::A(k), CoxeterLabel::B(k), CoxeterLabel{Family::F, k, 0},
                         CoxeterLabel::H(k)}) {
        out.push_back({label, path});
      }
    }
    return out;
  }
  std::vector<std::vector<int>> legs;
  for (int nb : neighbours(m, branch)) legs.push_back(walk(m, nb, branch));
  if (legs.size() != 3) return out;
  std::sort(legs.begin(), legs.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  // D_k: long leg far end first, centre, then the two short legs.
  if (legs[0].size() == 1 && legs[1].size() == 1) {
    std::vector<int> order(legs[2].rbegin(), legs[2].rend());
    order.push_back(branch);
    order.push_back(legs[0][0]);
    order.push_back(legs[1][0]);
    out.push_back({CoxeterLabel::D(k), order});
  }
  // E_n: 0-2-3-4-5..., node 1 on node 3.
  if (legs[0].size() == 1 && legs[1].size() == 2) {
    for (int swap = 0; swap < 2; ++swap) {
      const auto& two = swap ? legs[2] : legs[1];
      const auto& longleg = swap ? legs[1] : legs[2];
      if (two.size() != 2) continue;
      std::vector<int> order{two[1], legs[0][0], two[0], branch};
      order.insert(order.end(), longleg.begin(), longleg.end());
      out.push_back({CoxeterLabel::E(k), order});
    }
  }
  return out;
}

bool label_in_catalog(const CoxeterLabel& l) {
  try {
    l.validate();
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

Factor classify_component(const std::vector<std::vector<int>>& m, const std::vector<int>& classes) {
  Factor best;
  bool found = false;
  for (auto& [label, order] : candidates(m)) {
    if (!label_in_catalog(label)) continue;
    if (permuted(m, order) != label.coxeter_matrix()) continue;
    Factor f{label, {}};
    for (int v : order) f.node_class.push_back(classes[static_cast<std::size_t>(v)]);
    // Prefer the ordering whose first node is class 1 (the catalog default).
    if (!found || (best.node_class[0] != 1 && f.node_class[0] == 1)) {
      best = f;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unrecognized Coxeter diagram of rank " + std::to_string(m.size()));
  return best;
}

CoxeterType classify_subdiagram(const std::vector<std::vector<int>>& m, const std::vector<int>& classes,
                                const std::vector<int>& nodes, bool labeled) {
  std::vector<Factor> factors;
  std::vector<bool> used(nodes.size(), false);
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (used[s]) continue;
    std::vector<std::size_t> comp{s};
    used[s] = true;
    for (std::size_t h = 0; h < comp.size(); ++h) {
      for (std::size_t t = 0; t < nodes.size(); ++t) {
        if (!used[t] && m[static_cast<std::size_t>(nodes[comp[h]])][static_cast<std::size_t>(nodes[t])] >= 3) {
          used[t] = true;
          comp.push_back(t);
        }
      }
    }
    IntMatrix sub(comp.size(), std::vector<int>(comp.size()));
    std::vector<int> cls;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      cls.push_back(classes[static_cast<std::size_t>(nodes[comp[i]])]);
      for (std::size_t j = 0; j < comp.size(); ++j) {
        sub[i][j] = m[static_cast<std::size_t>(nodes[comp[i]])][static_cast<std::size_t>(nodes[comp[j]])];
      }
    }
    factors.push_back(classify_component(sub, cls));
  }
  return CoxeterType::from_factors(std::move(factors), labeled);
}

// --------------------------------------------------------------- parabolics

std::vector<ParabolicClass> standard_parabolics(const CoxeterType& t) {
  const auto m = t.coxeter_matrix();
  const auto classes = t.node_classes();
  const int r = t.rank();
  if (r > 20) throw ScopeError("parabolic enumeration limited to rank 20");
  std::vector<std::uint32_t> masks(std::size_t{1} << r);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::map<std::string, std::size_t> index;
  std::vector<ParabolicClass> out;
  for (std::uint32_t mask : masks) {
    std::vector<int> nodes;
    for (int v = 0; v < r; ++v) {
      if (mask >> v & 1u) nodes.push_back(v);
    }
    CoxeterType sub;
    if (static_cast<int>(nodes.size()) == r) {
      sub = t;
    } else {
      sub = classify_subdiagram(m, classes, nodes, t.labeled);
    }
    std::string key = sub.name();
    auto [it, inserted] = index.emplace(key, out.size());
    if (inserted) {
      ParabolicClass pc;
      pc.nodes = nodes;
      pc.rank = static_cast<int>(nodes.size());
      pc.degrees = sub.degrees();
      pc.maximal = pc.rank == r - 1;
      pc.type = std::move(sub);
      out.push_back(std::move(pc));
    }
    out[it->second].subset_count++;
    out[it->second].masks.push_back(mask);
  }
  std::stable_sort(out.begin(), out.end(), [](const ParabolicClass& a, const ParabolicClass& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.type.name() < b.type.name();
  });
  return out;
}

std::vector<ParabolicClass> maximal_parabolics(const CoxeterType& t) {
  std::vector<ParabolicClass> out;
  for (auto& pc : standard_parabolics(t)) {
    if (pc.maximal) out.push_back(std::move(pc));
  }
  return out;
}

// ---------------------------------------------------------------- subsystems

namespace {

std::vector<int> positive_closure_check(const RootSystem& rs, const std::vector<int>& positive_roots) {
  std::set<int> s;
  for (int k : positive_roots) {
    if (k < 0 || k >= static_cast<int>(rs.roots.size())) throw std::invalid_argument("root index out of range");
    s.insert(rs.is_positive(k) ? k : rs.negate(k));
  }
  for (int a : s) {
    for (int b : s) {
      int img = rs.reflect_root(a, b);
      int pos = rs.is_positive(img) ? img : rs.negate(img);
      if (!s.count(pos)) {
        throw std::invalid_argument("root subset is not closed under its own reflections");
      }
    }
  }
  return {s.begin(), s.end()};
}

}  // namespace

std::vector<int> subsystem_simple_roots(const RootSystem& rs, const std::vector<int>& positive_roots) {
  auto s = positive_closure_check(rs, positive_roots);
  std::vector<int> simple;
  for (int a : s) {
    bool ok = true;
    for (int b : s) {
      if (b != a && !rs.is_positive(rs.reflect_root(a, b))) {
        ok = false;
        break;
      }
    }
    if (ok) simple.push_back(a);
  }
  return simple;
}

CoxeterType identify_subsystem(const RootSystem& rs, const std::vector<int>& positive_roots) {
  auto simple = subsystem_simple_roots(rs, positive_roots);
  const std::size_t k = simple.size();
  IntMatrix m(k, std::vector<int>(k, 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      // Order of the rotation s_i s_j, read off its orbit on alpha_i.
      int start = simple[i];
      int cur = start;
      int steps = 0;
      do {
        cur = rs.reflect_root(simple[i], rs.reflect_root(simple[j], cur));
        ++steps;
      } while (cur != start && steps < 1000);
      m[i][j] = m[j][i] = steps;
    }
  }
  std::vector<int> classes;
  for (int a : simple) classes.push_back(rs.root_class[static_cast<std::size_t>(a)]);
  std::vector<int> nodes(k);
  std::iota(nodes.begin(), nodes.end(), 0);
  return classify_subdiagram(m, classes, nodes, rs.label.two_class());
}

}  // namespace coxsupport
