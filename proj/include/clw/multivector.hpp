// Dense multivectors over the real Clifford algebras Cl(2,0) and Cl(3,0).
//
// Coefficients are stored in the canonical blade order (grade-major,
// lexicographic within grade):
//   n = 2:  1, e1, e2, e12
//   n = 3:  1, e1, e2, e3, e12, e13, e23, e123
// Sources that index bivectors as e31 use the opposite sign on that
// coefficient: e31 = -e13.

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "clw/errors.hpp"

namespace clw {

constexpr int kMaxBlades = 8;

inline int blade_count(int n) { return 1 << n; }

// Validates n in {2,3}; every entry point that takes a dimension calls this.
void check_dimension(int n);

// Grade of the canonical blade `index` in dimension n.
int blade_grade(int n, int index);

// Canonical blade name ("1", "e1", ..., "e123").
std::string blade_name(int n, int index);

class Multivector {
 public:
  Multivector() : n_(2) { coeffs_.fill(0.0); }
  explicit Multivector(int n);

  static Multivector scalar(int n, double value);
  // Unit blade by canonical index.
  static Multivector blade(int n, int index, double value = 1.0);
  // Basis vector e_{axis+1}, axis in [0, n).
  static Multivector basis_vector(int n, int axis);

  int dim() const { return n_; }
  int size() const { return 1 << n_; }

  double operator[](int index) const { return coeffs_[index]; }
  double& operator[](int index) { return coeffs_[index]; }

  Multivector operator+(const Multivector& rhs) const;
  Multivector operator-(const Multivector& rhs) const;
  Multivector operator-() const;
  Multivector operator*(double s) const;
  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(double s);

  bool operator==(const Multivector& rhs) const;

 private:
  std::array<double, kMaxBlades> coeffs_;
  int n_;
};

inline Multivector operator*(double s, const Multivector& m) { return m * s; }

// Geometric product; e_i e_i = +1 for all generators.
Multivector geometric_product(const Multivector& lhs, const Multivector& rhs);
inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

// Outer (wedge) product: blade pairs with shared generators drop out.
Multivector wedge(const Multivector& lhs, const Multivector& rhs);

// Grade-k part multiplied by (-1)^{k(k-1)/2}.
Multivector reverse(const Multivector& m);

Multivector grade_project(const Multivector& m, int k);

// <M N~>_0 = sum_A M_A N_A.
double scalar_product(const Multivector& m, const Multivector& n);

// sqrt(sum_A M_A^2).
double modulus(const Multivector& m);

// i_n = e_1 e_2 ... e_n; squares to -1 for n = 2, 3.
Multivector pseudoscalar(int n);

// B* = B i_n^{-1} = -B i_n.
Multivector dual(const Multivector& b);

// True iff the vector x lies in the subspace of the simple blade b,
// i.e. |x ^ b| <= 1e-12 |x| |b|.
bool subspace_contains(const Multivector& b, const Multivector& x);

struct ParityParts {
  Multivector even;
  Multivector odd;
};

// Splits into even grades {0,2,...} and odd grades {1,3,...}.
ParityParts parity_split(const Multivector& m);

// cos(lambda) + i_n sin(lambda).
Multivector exp_pseudoscalar(int n, double lambda);

// Inverse of a grade-{0,1} multivector m = s + v:
//   m^{-1} = (s - v) / (s^2 - |v|^2).
// Throws UnsupportedGradeContent if grade >= 2 parts exceed tolerance,
// NonInvertible if the denominator vanishes.
Multivector invert_grade01(const Multivector& m);

// "2.5 + 1 e1 - 0.25 e12" style rendering; omits zero components.
std::string to_string(const Multivector& m);

// Parses "1:2.5,e1:1,e12:-0.25" or a bare real ("2.5") into a multivector.
Multivector parse_multivector(int n, const std::string& text);

}  // namespace clw
