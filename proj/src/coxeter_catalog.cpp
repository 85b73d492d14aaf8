#include "coxsupport/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace coxsupport {

namespace {

std::string trim_copy(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

int parse_positive_int(const std::string& digits, std::string_view whole) {
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw std::invalid_argument("unknown Coxeter type '" + std::string(whole) +
                                "': expected e.g. A3, B4, D5, E6, F4, H3, G2, I2:8");
  }
  return std::stoi(digits);
}

}  // namespace

CoxeterLabel CoxeterLabel::parse(std::string_view text) {
  std::string s = trim_copy(text);
  if (s.empty()) throw std::invalid_argument("empty Coxeter type name");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::string rest = s.substr(1);
  CoxeterLabel label;
  if (f == 'G') {
    if (rest != "2") throw std::invalid_argument("unknown Coxeter type '" + s + "': only G2 exists");
    label = I2(6);
  } else if (f == 'I') {
    if (rest.rfind("2:", 0) == 0) {
      label = I2(parse_positive_int(rest.substr(2), text));
    } else if (rest.rfind("2(", 0) == 0 && rest.back() == ')') {
      label = I2(parse_positive_int(rest.substr(2, rest.size() - 3), text));
    } else {
      throw std::invalid_argument("unknown Coxeter type '" + s + "': dihedral groups are written I2:p");
    }
  } else {
    int n = parse_positive_int(rest, text);
    switch (f) {
      case 'A': label = A(n); break;
      case 'B': case 'C': label = B(n); break;
      case 'D': label = D(n); break;
      case 'E': label = E(n); break;
      case 'F': label = {Family::F, n, 0}; break;
      case 'H': label = H(n); break;
      default:
        throw std::invalid_argument("unknown Coxeter family '" + std::string(1, f) + "' in '" + s + "'");
    }
  }
  label.validate();
  return label;
}

void CoxeterLabel::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::H: ok = rank == 3 || rank == 4; break;
    case Family::I: ok = rank == 2 && p >= 3; break;
  }
  if (!ok) {
    throw std::invalid_argument("'" + name() +
                                "' is not in the catalog (A_n n>=1, B_n n>=2, D_n n>=4, E6-8, F4, H3, H4, I2(p) p>=3)");
  }
}

std::string CoxeterLabel::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(rank);
    case Family::B: return "B" + std::to_string(rank);
    case Family::D: return "D" + std::to_string(rank);
    case Family::E: return "E" + std::to_string(rank);
    case Family::F: return "F" + std::to_string(rank);
    case Family::H: return "H" + std::to_string(rank);
    case Family::I: return "I2(" + std::to_string(p) + ")";
  }
  return "?";
}

std::vector<int> CoxeterLabel::degrees() const {
  std::vector<int> d;
  switch (family) {
    case Family::A:
      for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
      break;
    case Family::B:
      for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < rank; ++i) d.push_back(2 * i);
      d.push_back(rank);
      break;
    case Family::E:
      if (rank == 6) d = {2, 5, 6, 8, 9, 12};
      if (rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (rank == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::H:
      d = rank == 3 ? std::vector<int>{2, 6, 10} : std::vector<int>{2, 12, 20, 30};
      break;
    case Family::I: d = {2, p}; break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

int CoxeterLabel::num_positive_roots() const {
  int n = 0;
  for (int d : degrees()) n += d - 1;
  return n;
}

BigInt CoxeterLabel::order() const {
  BigInt o = 1;
  for (int d : degrees()) o *= d;
  return o;
}

bool CoxeterLabel::crystallographic() const {
  if (family == Family::H) return false;
  if (family == Family::I) return p == 3 || p == 4 || p == 6;
  return true;
}

bool CoxeterLabel::two_class() const {
  return family == Family::B || family == Family::F || (family == Family::I && p % 2 == 0);
}

std::vector<std::vector<int>> CoxeterLabel::coxeter_matrix() const {
  const int n = rank;
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  auto edge = [&](int i, int j, int v) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  };
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, 3);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, i + 2 == n ? 4 : 3);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, 3);
      edge(n - 3, n - 1, 3);
      break;
    case Family::E:
      edge(0, 2, 3);
      edge(1, 3, 3);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, 3);
      break;
    case Family::F:
      edge(0, 1, 3);
      edge(1, 2, 4);
      edge(2, 3, 3);
      break;
    case Family::H:
      edge(0, 1, 5);
      for (int i = 1; i + 1 < n; ++i) edge(i, i + 1, 3);
      break;
    case Family::I: edge(0, 1, p); break;
  }
  return m;
}

bool Factor::swapped() const {
  if (!label.two_class() || node_class.empty()) return false;
  return node_class[0] == 2;
}

std::string Factor::name(bool labeled) const {
  std::string n = label.name();
  if (!labeled) return n;
  if (label.two_class()) return swapped() ? n + "(swap)" : n;
  return n + "(c" + std::to_string(node_class.empty() ? 1 : node_class[0]) + ")";
}

namespace {

std::vector<int> default_classes(const CoxeterLabel& label) {
  std::vector<int> cls(static_cast<std::size_t>(label.rank), 1);
  if (label.family == Family::B) cls.back() = 2;
  if (label.family == Family::F) cls[2] = cls[3] = 2;
  if (label.family == Family::I && label.p % 2 == 0) cls[1] = 2;
  return cls;
}

}  // namespace

CoxeterType CoxeterType::single(const CoxeterLabel& label) {
  label.validate();
  return from_factors({Factor{label, default_classes(label)}}, label.two_class());
}

CoxeterType CoxeterType::from_factors(std::vector<Factor> factors, bool labeled) {
  std::sort(factors.begin(), factors.end());
  CoxeterType t;
  t.factors = std::move(factors);
  t.labeled = labeled;
  return t;
}

CoxeterType CoxeterType::parse(std::string_view text) {
  std::string s = trim_copy(text);
  if (s.empty()) throw std::invalid_argument("empty Coxeter type");
  if (s == "trivial" || s == "1") return CoxeterType{};
  std::vector<Factor> factors;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t pos = s.find_first_of("x*", start);
    std::string part = s.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    CoxeterLabel label = CoxeterLabel::parse(part);
    factors.push_back(Factor{label, default_classes(label)});
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  bool labeled = factors.size() == 1 && factors[0].label.two_class();
  return from_factors(std::move(factors), labeled);
}

int CoxeterType::rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.label.rank;
  return r;
}

std::vector<int> CoxeterType::degrees() const {
  std::vector<int> d;
  for (const auto& f : factors) {
    auto fd = f.label.degrees();
    d.insert(d.end(), fd.begin(), fd.end());
  }
  std::sort(d.begin(), d.end());
  return d;
}

BigInt CoxeterType::order() const {
  BigInt o = 1;
  for (const auto& f : factors) o *= f.label.order();
  return o;
}

std::string CoxeterType::name() const {
  if (factors.empty()) return "trivial";
  std::string n;
  for (const auto& f : factors) {
    if (!n.empty()) n += "x";
    n += f.name(labeled);
  }
  return n;
}

std::vector<std::vector<int>> CoxeterType::coxeter_matrix() const {
  const auto r = static_cast<std::size_t>(rank());
  std::vector<std::vector<int>> m(r, std::vector<int>(r, 2));
  std::size_t offset = 0;
  for (const auto& f : factors) {
    auto fm = f.label.coxeter_matrix();
    for (std::size_t i = 0; i < fm.size(); ++i) {
      for (std::size_t j = 0; j < fm.size(); ++j) m[offset + i][offset + j] = fm[i][j];
    }
    offset += fm.size();
  }
  return m;
}

std::vector<int> CoxeterType::node_classes() const {
  std::vector<int> c;
  for (const auto& f : factors) c.insert(c.end(), f.node_class.begin(), f.node_class.end());
  return c;
}

}  // namespace coxsupport
