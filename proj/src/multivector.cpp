// Cl(n,0) arithmetic backed by product tables precomputed per dimension.

#include "clw/multivector.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace clw {

namespace {

// Sign accumulated when merging the generator lists of two blades given as
// bitmasks (bit k <-> generator e_{k+1}); equal generators contract to +1.
int reorder_sign(unsigned a, unsigned b) {
  a >>= 1;
  int swaps = 0;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

struct AlgebraTables {
  int n = 0;
  int blades = 0;
  std::array<unsigned, kMaxBlades> mask_of_index{};  // canonical index -> bitmask
  std::array<int, kMaxBlades> index_of_mask{};
  std::array<int, kMaxBlades> grade{};
  std::array<std::array<int, kMaxBlades>, kMaxBlades> prod_index{};
  std::array<std::array<double, kMaxBlades>, kMaxBlades> prod_sign{};
  std::array<double, kMaxBlades> reverse_sign{};

  explicit AlgebraTables(int dim) : n(dim), blades(1 << dim) {
    // Canonical order: sort bitmasks by (grade, value); within a grade the
    // ascending bitmask order equals lexicographic generator order.
    int pos = 0;
    for (int g = 0; g <= n; ++g) {
      for (unsigned mask = 0; mask < static_cast<unsigned>(blades); ++mask) {
        if (std::popcount(mask) == g) {
          mask_of_index[pos] = mask;
          index_of_mask[mask] = pos;
          grade[pos] = g;
          ++pos;
        }
      }
    }
    for (int i = 0; i < blades; ++i) {
      const int g = grade[i];
      reverse_sign[i] = ((g * (g - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
      for (int j = 0; j < blades; ++j) {
        const unsigned ma = mask_of_index[i];
        const unsigned mb = mask_of_index[j];
        prod_index[i][j] = index_of_mask[ma ^ mb];
        prod_sign[i][j] = static_cast<double>(reorder_sign(ma, mb));
      }
    }
  }
};

const AlgebraTables& tables(int n) {
  static const AlgebraTables t2(2);
  static const AlgebraTables t3(3);
  return n == 2 ? t2 : t3;
}

void check_same_dim(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("multivector operands have dimensions " +
                            std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
  }
}

}  // namespace

void check_dimension(int n) {
  if (n != 2 && n != 3) {
    throw DimensionMismatch("unsupported algebra dimension " +
                            std::to_string(n) + " (expected 2 or 3)");
  }
}

int blade_grade(int n, int index) {
  check_dimension(n);
  return tables(n).grade[index];
}

std::string blade_name(int n, int index) {
  check_dimension(n);
  const unsigned mask = tables(n).mask_of_index[index];
  if (mask == 0) return "1";
  std::string name = "e";
  for (int k = 0; k < n; ++k) {
    if (mask & (1u << k)) name += static_cast<char>('1' + k);
  }
  return name;
}

Multivector::Multivector(int n) : n_(n) {
  check_dimension(n);
  coeffs_.fill(0.0);
}

Multivector Multivector::scalar(int n, double value) {
  Multivector m(n);
  m[0] = value;
  return m;
}

Multivector Multivector::blade(int n, int index, double value) {
  Multivector m(n);
  if (index < 0 || index >= m.size()) {
    throw Error("blade index " + std::to_string(index) + " out of range");
  }
  m[index] = value;
  return m;
}

Multivector Multivector::basis_vector(int n, int axis) {
  check_dimension(n);
  if (axis < 0 || axis >= n) {
    throw Error("basis vector axis " + std::to_string(axis) + " out of range");
  }
  return blade(n, tables(n).index_of_mask[1u << axis]);
}

Multivector Multivector::operator+(const Multivector& rhs) const {
  Multivector out = *this;
  out += rhs;
  return out;
}

Multivector Multivector::operator-(const Multivector& rhs) const {
  Multivector out = *this;
  out -= rhs;
  return out;
}

Multivector Multivector::operator-() const {
  Multivector out = *this;
  for (int i = 0; i < size(); ++i) out[i] = -out[i];
  return out;
}

Multivector Multivector::operator*(double s) const {
  Multivector out = *this;
  out *= s;
  return out;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  check_same_dim(*this, rhs);
  for (int i = 0; i < size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  check_same_dim(*this, rhs);
  for (int i = 0; i < size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (int i = 0; i < size(); ++i) coeffs_[i] *= s;
  return *this;
}

bool Multivector::operator==(const Multivector& rhs) const {
  if (n_ != rhs.n_) return false;
  for (int i = 0; i < size(); ++i) {
    if (coeffs_[i] != rhs.coeffs_[i]) return false;
  }
  return true;
}

Multivector geometric_product(const Multivector& lhs, const Multivector& rhs) {
  check_same_dim(lhs, rhs);
  const AlgebraTables& t = tables(lhs.dim());
  Multivector out(lhs.dim());
  for (int i = 0; i < t.blades; ++i) {
    const double a = lhs[i];
    if (a == 0.0) continue;
    for (int j = 0; j < t.blades; ++j) {
      out[t.prod_index[i][j]] += t.prod_sign[i][j] * a * rhs[j];
    }
  }
  return out;
}

Multivector wedge(const Multivector& lhs, const Multivector& rhs) {
  check_same_dim(lhs, rhs);
  const AlgebraTables& t = tables(lhs.dim());
  Multivector out(lhs.dim());
  for (int i = 0; i < t.blades; ++i) {
    const double a = lhs[i];
    if (a == 0.0) continue;
    for (int j = 0; j < t.blades; ++j) {
      if (t.mask_of_index[i] & t.mask_of_index[j]) continue;
      out[t.prod_index[i][j]] += t.prod_sign[i][j] * a * rhs[j];
    }
  }
  return out;
}

Multivector reverse(const Multivector& m) {
  const AlgebraTables& t = tables(m.dim());
  Multivector out(m.dim());
  for (int i = 0; i < t.blades; ++i) out[i] = t.reverse_sign[i] * m[i];
  return out;
}

Multivector grade_project(const Multivector& m, int k) {
  if (k < 0 || k > m.dim()) {
    throw Error("grade " + std::to_string(k) + " out of range for n=" +
                std::to_string(m.dim()));
  }
  const AlgebraTables& t = tables(m.dim());
  Multivector out(m.dim());
  for (int i = 0; i < t.blades; ++i) {
    if (t.grade[i] == k) out[i] = m[i];
  }
  return out;
}

double scalar_product(const Multivector& m, const Multivector& n) {
  check_same_dim(m, n);
  double acc = 0.0;
  for (int i = 0; i < m.size(); ++i) acc += m[i] * n[i];
  return acc;
}

double modulus(const Multivector& m) { return std::sqrt(scalar_product(m, m)); }

Multivector pseudoscalar(int n) {
  check_dimension(n);
  return Multivector::blade(n, (1 << n) - 1);
}

Multivector dual(const Multivector& b) {
  return geometric_product(b, -pseudoscalar(b.dim()));
}

bool subspace_contains(const Multivector& b, const Multivector& x) {
  check_same_dim(b, x);
  if (modulus(x - grade_project(x, 1)) > 0.0) {
    throw Error("subspace_contains expects a grade-1 probe vector");
  }
  const double tol = 1e-12 * modulus(x) * modulus(b);
  return modulus(wedge(x, b)) <= tol;
}

ParityParts parity_split(const Multivector& m) {
  const AlgebraTables& t = tables(m.dim());
  ParityParts parts{Multivector(m.dim()), Multivector(m.dim())};
  for (int i = 0; i < t.blades; ++i) {
    if (t.grade[i] % 2 == 0) {
      parts.even[i] = m[i];
    } else {
      parts.odd[i] = m[i];
    }
  }
  return parts;
}

Multivector exp_pseudoscalar(int n, double lambda) {
  Multivector out = Multivector::scalar(n, std::cos(lambda));
  out[(1 << n) - 1] = std::sin(lambda);
  return out;
}

Multivector invert_grade01(const Multivector& m) {
  const Multivector s = grade_project(m, 0);
  const Multivector v = grade_project(m, 1);
  const double s2 = s[0] * s[0];
  const double v2 = scalar_product(v, v);
  const double tol = 1e-12 * (s2 + v2);

  double higher2 = 0.0;
  for (int k = 2; k <= m.dim(); ++k) {
    const Multivector part = grade_project(m, k);
    higher2 += scalar_product(part, part);
  }
  if (higher2 > tol) {
    throw UnsupportedGradeContent(
        "invert_grade01 requires grade {0,1} content, got |higher|^2 = " +
        std::to_string(higher2));
  }

  const double denom = s2 - v2;
  if (std::abs(denom) <= tol) {
    throw NonInvertible("grade-{0,1} multivector with <m>_0^2 = <m>_1^2");
  }
  return (s - v) * (1.0 / denom);
}

std::string to_string(const Multivector& m) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < m.size(); ++i) {
    const double c = m[i];
    if (c == 0.0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    out << std::abs(c);
    if (i != 0) out << " " << blade_name(m.dim(), i);
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

Multivector parse_multivector(int n, const std::string& text) {
  check_dimension(n);
  Multivector out(n);
  std::stringstream stream(text);
  std::string term;
  while (std::getline(stream, term, ',')) {
    if (term.empty()) continue;
    const auto colon = term.find(':');
    std::string name = colon == std::string::npos ? "1" : term.substr(0, colon);
    const std::string value_text =
        colon == std::string::npos ? term : term.substr(colon + 1);
    // A bare real means a scalar term.
    if (colon == std::string::npos) name = "1";
    int index = -1;
    for (int i = 0; i < blade_count(n); ++i) {
      if (blade_name(n, i) == name) {
        index = i;
        break;
      }
    }
    if (index < 0) {
      throw Error("unknown blade name '" + name + "' for n=" +
                  std::to_string(n));
    }
    char* end = nullptr;
    const double value = std::strtod(value_text.c_str(), &end);
    if (end == value_text.c_str() || *end != '\0') {
      throw Error("cannot parse coefficient '" + value_text + "'");
    }
    out[index] += value;
  }
  return out;
}

}  // namespace clw
