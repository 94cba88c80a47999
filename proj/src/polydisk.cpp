#include "harmonic/polydisk.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace harmonic::poly {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_dimension_cap(int n) {
  if (n > 4)
    throw std::invalid_argument(
        "tensor-product quadrature over black-box maps is limited to n <= 4");
}

void check_interior(const PolydiskSpec& disk, const Eigen::VectorXcd& z) {
  if (z.size() != disk.dimension())
    throw std::invalid_argument("evaluation point dimension mismatch");
  for (int j = 0; j < disk.dimension(); ++j) {
    if (!(std::abs(z[j] - disk.center[j]) < disk.radii[j]))
      throw std::domain_error("evaluation point must lie strictly inside the polydisk");
  }
}

void check_index(const PolydiskSpec& disk, const MultiIndex& v) {
  if (v.dimension() != disk.dimension())
    throw std::invalid_argument("multi-index dimension mismatch");
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("MultiIndex: empty index");
  for (int e : entries_)
    if (e < 0) throw std::invalid_argument("MultiIndex: entries must be nonnegative");
}

int MultiIndex::order() const {
  int total = 0;
  for (int e : entries_) total += e;
  return total;
}

double MultiIndex::factorial() const {
  double result = 1.0;
  for (int e : entries_)
    for (int k = 2; k <= e; ++k) result *= k;
  return result;
}

ComplexPolynomial::ComplexPolynomial(int dimension) : dimension_(dimension) {
  if (dimension_ < 1)
    throw std::invalid_argument("ComplexPolynomial: dimension must be >= 1");
}

void ComplexPolynomial::set_coeff(const MultiIndex& v, Complex c) {
  if (v.dimension() != dimension_)
    throw std::invalid_argument("ComplexPolynomial: multi-index dimension mismatch");
  if (c == Complex(0.0, 0.0))
    terms_.erase(v);
  else
    terms_[v] = c;
}

Complex ComplexPolynomial::coeff(const MultiIndex& v) const {
  const auto it = terms_.find(v);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

Complex ComplexPolynomial::operator()(const Eigen::VectorXcd& z) const {
  if (z.size() != dimension_)
    throw std::invalid_argument("ComplexPolynomial: point dimension mismatch");
  Complex sum(0.0, 0.0);
  for (const auto& [v, c] : terms_) {
    Complex monomial(1.0, 0.0);
    for (int j = 0; j < dimension_; ++j) {
      for (int k = 0; k < v.entries()[j]; ++k) monomial *= z[j];
    }
    sum += c * monomial;
  }
  return sum;
}

ComplexPolynomial ComplexPolynomial::parse(std::istream& in) {
  std::vector<std::pair<std::vector<int>, Complex>> parsed;
  int dimension = -1;
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      std::istringstream probe(line);
      std::string token;
      if (probe >> token)
        throw std::runtime_error("polynomial text: missing ':' separator");
      continue;  // blank line
    }
    std::istringstream head(line.substr(0, colon));
    double re = 0.0, im = 0.0;
    if (!(head >> re >> im))
      throw std::runtime_error("polynomial text: expected 'coeff_re coeff_im' before ':'");
    std::istringstream tail(line.substr(colon + 1));
    std::vector<int> exponents;
    int e = 0;
    while (tail >> e) exponents.push_back(e);
    if (exponents.empty())
      throw std::runtime_error("polynomial text: expected exponents after ':'");
    if (dimension == -1) dimension = static_cast<int>(exponents.size());
    if (static_cast<int>(exponents.size()) != dimension)
      throw std::runtime_error("polynomial text: inconsistent exponent count");
    parsed.emplace_back(std::move(exponents), Complex(re, im));
  }
  if (dimension == -1) throw std::runtime_error("polynomial text: no terms");
  ComplexPolynomial p(dimension);
  for (auto& [exponents, c] : parsed)
    p.set_coeff(MultiIndex(exponents), p.coeff(MultiIndex(exponents)) + c);
  return p;
}

ComplexPolynomial ComplexPolynomial::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open polynomial file: " + path);
  return parse(in);
}

std::string ComplexPolynomial::to_text() const {
  std::ostringstream out;
  for (const auto& [v, c] : terms_) {
    out << c.real() << " " << c.imag() << " :";
    for (int e : v.entries()) out << " " << e;
    out << "\n";
  }
  return out.str();
}

int degree(const ComplexPolynomial& p) {
  if (p.terms().empty()) throw std::domain_error("degree undefined");
  int deg = 0;
  for (const auto& [v, c] : p.terms()) deg = std::max(deg, v.order());
  return deg;
}

bool is_homogeneous(const ComplexPolynomial& p) {
  if (p.terms().empty()) throw std::domain_error("degree undefined");
  const int first = p.terms().begin()->first.order();
  for (const auto& [v, c] : p.terms())
    if (v.order() != first) return false;
  return true;
}

PolydiskSpec::PolydiskSpec(Eigen::VectorXcd center_, Eigen::VectorXd radii_)
    : center(std::move(center_)), radii(std::move(radii_)) {
  if (center.size() != radii.size())
    throw std::invalid_argument("PolydiskSpec: center/radii dimension mismatch");
  if (radii.size() == 0) throw std::invalid_argument("PolydiskSpec: empty polydisk");
  for (int j = 0; j < radii.size(); ++j)
    if (!(radii[j] > 0.0))
      throw std::invalid_argument("PolydiskSpec: radii must be positive");
}

namespace {

/// Per-circle factor tables for the iterated integral. With zeta = a + R e^{i phi}
/// on circle j, one trapezoid node contributes
///   cauchy kernel:      (1/N) R e^{i phi} / (zeta - z_j)
///   coefficient kernel: (1/N) e^{-i v_j phi} / R^{v_j}
struct CircleTable {
  Eigen::VectorXcd zeta;    // node positions on the circle
  Eigen::VectorXcd factor;  // per-node weight including 1/N
};

enum class KernelKind { Cauchy, Coefficient };

CircleTable circle_table(Complex center, double radius, int nodes, KernelKind kind,
                         Complex pole, int exponent) {
  CircleTable table;
  table.zeta.resize(nodes);
  table.factor.resize(nodes);
  for (int k = 0; k < nodes; ++k) {
    const double phi = kTwoPi * k / nodes;
    const Complex unit(std::cos(phi), std::sin(phi));
    table.zeta[k] = center + radius * unit;
    if (kind == KernelKind::Cauchy) {
      table.factor[k] = radius * unit / (table.zeta[k] - pole) / double(nodes);
    } else {
      const Complex down(std::cos(exponent * phi), -std::sin(exponent * phi));
      table.factor[k] = down / std::pow(radius, exponent) / double(nodes);
    }
  }
  return table;
}

/// Full tensor-product accumulation over the distinguished boundary.
Complex iterate(const EvalFn& f, const std::vector<CircleTable>& tables) {
  const int n = static_cast<int>(tables.size());
  std::vector<int> idx(n, 0);
  Eigen::VectorXcd zeta(n);
  Complex sum(0.0, 0.0);
  while (true) {
    Complex weight(1.0, 0.0);
    for (int j = 0; j < n; ++j) {
      zeta[j] = tables[j].zeta[idx[j]];
      weight *= tables[j].factor[idx[j]];
    }
    sum += weight * f(zeta);
    int j = n - 1;
    while (j >= 0 && ++idx[j] == static_cast<int>(tables[j].zeta.size())) idx[j--] = 0;
    if (j < 0) break;
  }
  return sum;
}

void check_nodes(int nodes) {
  if (nodes < 8) throw std::invalid_argument("quadrature needs at least 8 nodes per circle");
}

}  // namespace

Complex cauchy_eval(const EvalFn& f, const PolydiskSpec& disk,
                    const Eigen::VectorXcd& z, int nodes) {
  check_dimension_cap(disk.dimension());
  check_interior(disk, z);
  check_nodes(nodes);
  std::vector<CircleTable> tables;
  for (int j = 0; j < disk.dimension(); ++j)
    tables.push_back(circle_table(disk.center[j], disk.radii[j], nodes,
                                  KernelKind::Cauchy, z[j], 0));
  return iterate(f, tables);
}

Complex taylor_coeff(const EvalFn& f, const PolydiskSpec& disk, const MultiIndex& v,
                     int nodes) {
  check_dimension_cap(disk.dimension());
  check_index(disk, v);
  check_nodes(nodes);
  if (disk.center.cwiseAbs().maxCoeff() != 0.0)
    throw std::invalid_argument("taylor_coeff: polydisk must be centered at 0");
  std::vector<CircleTable> tables;
  for (int j = 0; j < disk.dimension(); ++j)
    tables.push_back(circle_table(Complex(0.0, 0.0), disk.radii[j], nodes,
                                  KernelKind::Coefficient, Complex(0.0, 0.0),
                                  v.entries()[j]));
  return iterate(f, tables);
}

Complex partial_derivative(const EvalFn& f, const MultiIndex& v,
                           const Eigen::VectorXcd& z, const PolydiskSpec& disk,
                           int nodes) {
  check_dimension_cap(disk.dimension());
  check_index(disk, v);
  check_nodes(nodes);
  if (z.size() != disk.dimension())
    throw std::invalid_argument("partial_derivative: point dimension mismatch");
  std::vector<CircleTable> tables;
  for (int j = 0; j < disk.dimension(); ++j)
    tables.push_back(circle_table(z[j], disk.radii[j], nodes, KernelKind::Coefficient,
                                  Complex(0.0, 0.0), v.entries()[j]));
  return v.factorial() * iterate(f, tables);
}

namespace {

/// (1/2pi i) integral over circle j of zeta^w times the requested kernel; the
/// tensor-product trapezoid sum of a monomial is exactly the product of these.
Complex monomial_circle_factor(int power, const CircleTable& table) {
  Complex sum(0.0, 0.0);
  for (int k = 0; k < table.zeta.size(); ++k) {
    Complex zp(1.0, 0.0);
    for (int q = 0; q < power; ++q) zp *= table.zeta[k];
    sum += zp * table.factor[k];
  }
  return sum;
}

template <class TableFn>
Complex factorized(const ComplexPolynomial& p, const TableFn& table_for) {
  Complex total(0.0, 0.0);
  for (const auto& [w, c] : p.terms()) {
    Complex product = c;
    for (int j = 0; j < p.dimension(); ++j)
      product *= monomial_circle_factor(w.entries()[j], table_for(j));
    total += product;
  }
  return total;
}

}  // namespace

Complex cauchy_eval(const ComplexPolynomial& p, const PolydiskSpec& disk,
                    const Eigen::VectorXcd& z, int nodes) {
  if (p.dimension() != disk.dimension())
    throw std::invalid_argument("cauchy_eval: polynomial dimension mismatch");
  check_interior(disk, z);
  check_nodes(nodes);
  std::vector<CircleTable> tables;
  for (int j = 0; j < disk.dimension(); ++j)
    tables.push_back(circle_table(disk.center[j], disk.radii[j], nodes,
                                  KernelKind::Cauchy, z[j], 0));
  return factorized(p, [&](int j) -> const CircleTable& { return tables[j]; });
}

Complex taylor_coeff(const ComplexPolynomial& p, const PolydiskSpec& disk,
                     const MultiIndex& v, int nodes) {
  if (p.dimension() != disk.dimension())
    throw std::invalid_argument("taylor_coeff: polynomial dimension mismatch");
  check_index(disk, v);
  check_nodes(nodes);
  if (disk.center.cwiseAbs().maxCoeff() != 0.0)
    throw std::invalid_argument("taylor_coeff: polydisk must be centered at 0");
  std::vector<CircleTable> tables;
  for (int j = 0; j < disk.dimension(); ++j)
    tables.push_back(circle_table(Complex(0.0, 0.0), disk.radii[j], nodes,
                                  KernelKind::Coefficient, Complex(0.0, 0.0),
                                  v.entries()[j]));
  return factorized(p, [&](int j) -> const CircleTable& { return tables[j]; });
}

Complex partial_derivative(const ComplexPolynomial& p, const MultiIndex& v,
                           const Eigen::VectorXcd& z, const PolydiskSpec& disk,
                           int nodes) {
  if (p.dimension() != disk.dimension())
    throw std::invalid_argument("partial_derivative: polynomial dimension mismatch");
  check_index(disk, v);
  check_nodes(nodes);
  std::vector<CircleTable> tables;
  for (int j = 0; j < disk.dimension(); ++j)
    tables.push_back(circle_table(z[j], disk.radii[j], nodes, KernelKind::Coefficient,
                                  Complex(0.0, 0.0), v.entries()[j]));
  return v.factorial() *
         factorized(p, [&](int j) -> const CircleTable& { return tables[j]; });
}

}  // namespace harmonic::poly
