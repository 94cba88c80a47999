#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace harmonic::poly {

using Complex = std::complex<double>;
using EvalFn = std::function<Complex(const Eigen::VectorXcd&)>;

/// Tuple of nonnegative integer exponents (v_1, ..., v_n).
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int dimension() const { return static_cast<int>(entries_.size()); }
  int order() const;         // |v| = sum v_i
  double factorial() const;  // v! = v_1! ... v_n!

  bool operator==(const MultiIndex& other) const { return entries_ == other.entries_; }
  bool operator<(const MultiIndex& other) const { return entries_ < other.entries_; }

 private:
  std::vector<int> entries_;
};

/// Finite sum of monomials c_v z^v on C^n; zero coefficients are not stored.
class ComplexPolynomial {
 public:
  explicit ComplexPolynomial(int dimension);

  int dimension() const { return dimension_; }
  const std::map<MultiIndex, Complex>& terms() const { return terms_; }

  void set_coeff(const MultiIndex& v, Complex c);
  Complex coeff(const MultiIndex& v) const;

  Complex operator()(const Eigen::VectorXcd& z) const;

  /// Text form: one term per line, "coeff_re coeff_im : v1 v2 ... vn".
  static ComplexPolynomial parse(std::istream& in);
  static ComplexPolynomial from_file(const std::string& path);
  std::string to_text() const;

 private:
  int dimension_;
  std::map<MultiIndex, Complex> terms_;
};

/// max |v| over stored terms; throws "degree undefined" for the zero polynomial.
int degree(const ComplexPolynomial& p);

/// True iff all stored terms share the same order.
bool is_homogeneous(const ComplexPolynomial& p);

/// Polydisk with given center and strictly positive polyradius.
struct PolydiskSpec {
  Eigen::VectorXcd center;
  Eigen::VectorXd radii;

  PolydiskSpec(Eigen::VectorXcd center_, Eigen::VectorXd radii_);
  int dimension() const { return static_cast<int>(radii.size()); }
};

/// Iterated Cauchy integral (1/2pi i)^n of f(zeta) / prod (zeta_j - z_j) over
/// the distinguished boundary, by tensor-product trapezoid quadrature with
/// `nodes` points per circle (rule of thumb: nodes >= 2 * expected degree + 8,
/// since circle trapezoid sums integrate trigonometric polynomials exactly
/// below the Nyquist limit). The black-box form is limited to n <= 4
/// (O(nodes^n) cost); z must be strictly interior.
Complex cauchy_eval(const EvalFn& f, const PolydiskSpec& disk,
                    const Eigen::VectorXcd& z, int nodes);

/// Taylor coefficient a_v of f about 0: the iterated integral of
/// f(zeta) / prod zeta_j^{v_j + 1}. The polydisk must be centered at 0.
Complex taylor_coeff(const EvalFn& f, const PolydiskSpec& disk, const MultiIndex& v,
                     int nodes);

/// Partial derivative d^{|v|} f / dz^v at z: v! times the coefficient-style
/// integral over circles recentered at z.
Complex partial_derivative(const EvalFn& f, const MultiIndex& v,
                           const Eigen::VectorXcd& z, const PolydiskSpec& disk,
                           int nodes);

/// Stored-term overloads: the tensor-product sum factorizes exactly over the
/// monomials, so these compute the same quadrature in O(terms * n * nodes)
/// and carry no dimension cap.
Complex cauchy_eval(const ComplexPolynomial& p, const PolydiskSpec& disk,
                    const Eigen::VectorXcd& z, int nodes);
Complex taylor_coeff(const ComplexPolynomial& p, const PolydiskSpec& disk,
                     const MultiIndex& v, int nodes);
Complex partial_derivative(const ComplexPolynomial& p, const MultiIndex& v,
                           const Eigen::VectorXcd& z, const PolydiskSpec& disk,
                           int nodes);

}  // namespace harmonic::poly
