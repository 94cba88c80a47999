#include "harmonic/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "harmonic/ball_poisson.hpp"
#include "harmonic/diffops.hpp"
#include "harmonic/disk_poisson.hpp"
#include "harmonic/polydisk.hpp"
#include "harmonic/rkc.hpp"
#include "harmonic/tennis_ball.hpp"
#include "harmonic/wood.hpp"

namespace harmonic::cli {

namespace {

using json = nlohmann::ordered_json;
using Complex = std::complex<double>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string format = "json";
  long seed = 0;
};

/// All floating output carries 12 significant digits; reports are rounded to
/// that precision before serialization so that runs are byte-identical.
std::string fmt12(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

double round12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

void emit(const json& report, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "csv") {
    for (const auto& [key, value] : report.items()) {
      if (value.is_number_float())
        out << key << "," << fmt12(value.get<double>()) << "\n";
      else if (value.is_string())
        out << key << "," << value.get<std::string>() << "\n";
      else
        out << key << "," << value.dump() << "\n";
    }
  } else {
    out << report.dump(2) << "\n";
  }
}

std::vector<double> parse_numbers(const std::string& text, std::size_t expect) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed numeric argument: '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
      ++used;
    if (used != item.size())
      throw UsageError("malformed numeric argument: '" + item + "'");
    values.push_back(v);
  }
  if (values.size() != expect)
    throw UsageError("expected " + std::to_string(expect) + " comma-separated numbers, got '" +
                     text + "'");
  return values;
}

/// Boundary mini-language: identity | sinperturb:a=0.3 | fourier:FILE | samples:FILE.
disk::BoundaryMap parse_boundary(const std::string& spec) {
  if (spec == "identity")
    return disk::BoundaryMap::fourier({{1, Complex(1.0, 0.0)}});
  if (spec.rfind("sinperturb:", 0) == 0) {
    const std::string tail = spec.substr(11);
    if (tail.rfind("a=", 0) != 0) throw UsageError("sinperturb spec must be sinperturb:a=VALUE");
    return disk::BoundaryMap::sin_perturb_homeo(parse_numbers(tail.substr(2), 1)[0]);
  }
  if (spec.rfind("fourier:", 0) == 0)
    return disk::BoundaryMap::fourier_from_file(spec.substr(8));
  if (spec.rfind("samples:", 0) == 0)
    return disk::BoundaryMap::sampled_from_file(spec.substr(8));
  throw UsageError("unknown boundary spec: '" + spec + "'");
}

json jacobian_report_json(const rkc::InjectivityReport& report) {
  json j;
  j["grid_radial"] = report.grid.radial;
  j["grid_angular"] = report.grid.angular;
  j["grid_max_radius"] = round12(report.grid.max_radius);
  j["tol"] = round12(report.tol);
  j["min_jacobian"] = round12(report.min_jacobian);
  j["min_jacobian_x"] = round12(report.min_jacobian_at[0]);
  j["min_jacobian_y"] = round12(report.min_jacobian_at[1]);
  j["min_image_separation"] = round12(report.min_image_separation);
  j["collisions"] = report.collision ? 1 : 0;
  j["verdict"] = rkc::to_string(report.verdict);
  return j;
}

int cmd_kernel(double r, double theta, const RunConfig& cfg, std::ostream& out) {
  json j;
  j["r"] = round12(r);
  j["theta"] = round12(theta);
  j["value"] = round12(disk::kernel_closed(r, theta));
  emit(j, cfg, out);
  return 0;
}

int cmd_extend_disk(const std::string& boundary, const std::string& at, int nodes,
                    double max_radius, const RunConfig& cfg, std::ostream& out) {
  const auto point = parse_numbers(at, 2);
  const disk::DiskExtension ext(parse_boundary(boundary), nodes, max_radius);
  const Complex value = disk::extend(ext, point[0], point[1]);
  json j;
  j["r"] = round12(point[0]);
  j["theta"] = round12(point[1]);
  j["re"] = round12(value.real());
  j["im"] = round12(value.imag());
  emit(j, cfg, out);
  return 0;
}

int cmd_rkc_verify(const std::string& boundary, const std::string& grid_text,
                   double tol, int nodes, const RunConfig& cfg, std::ostream& out) {
  rkc::GridSpec grid;
  if (!grid_text.empty()) {
    const auto x = grid_text.find('x');
    if (x == std::string::npos) throw UsageError("grid must be NRxNT, e.g. 24x96");
    try {
      grid.radial = std::stoi(grid_text.substr(0, x));
      grid.angular = std::stoi(grid_text.substr(x + 1));
    } catch (const std::exception&) {
      throw UsageError("grid must be NRxNT, e.g. 24x96");
    }
  }
  rkc::ExtensionConfig ext_cfg;
  ext_cfg.nodes = nodes;
  const auto report = rkc::rkc_scan(parse_boundary(boundary), ext_cfg, grid, tol);
  emit(jacobian_report_json(report), cfg, out);
  return report.verdict == rkc::Verdict::ConsistentWithInjective ? 0 : 2;
}

int cmd_lemma_hz(const std::string& boundary, int nodes, double tol,
                 const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto map = parse_boundary(boundary);
  try {
    const auto report = rkc::lemma_sign_check(map, nodes, tol);
    json j;
    j["gz0_re"] = round12(report.hz.real());
    j["gz0_im"] = round12(report.hz.imag());
    j["im_gz0"] = round12(report.im_hz);
    j["verdict"] = report.nonzero ? "nonzero" : "zero";
    emit(j, cfg, out);
    return report.nonzero ? 0 : 2;
  } catch (const std::domain_error& e) {
    err << "lemma-hz: " << e.what() << "\n";
    return 2;
  }
}

int cmd_wood(int dim, const std::string& eval_at, const std::string& invert_at,
             bool check, const RunConfig& cfg, std::ostream& out) {
  if (!eval_at.empty()) {
    const auto p = parse_numbers(eval_at, dim);
    const Eigen::VectorXd image =
        wood::evalN(Eigen::Map<const Eigen::VectorXd>(p.data(), dim), dim);
    for (int i = 0; i < image.size(); ++i)
      out << (i ? " " : "") << fmt12(image[i]);
    out << "\n";
    return 0;
  }
  if (!invert_at.empty()) {
    if (dim != 3) throw UsageError("wood --invert supports --dim 3 only");
    const auto p = parse_numbers(invert_at, 3);
    const Eigen::Vector3d source = wood::invert3(p[0], p[1], p[2]);
    out << fmt12(source[0]) << " " << fmt12(source[1]) << " " << fmt12(source[2]) << "\n";
    return 0;
  }
  if (!check) throw UsageError("wood: one of --eval, --invert, --check is required");

  std::mt19937 rng(static_cast<unsigned>(cfg.seed));
  std::uniform_real_distribution<double> wide(-10.0, 10.0);
  std::uniform_real_distribution<double> narrow(-2.0, 2.0);

  double roundtrip = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Eigen::Vector3d p(wide(rng), wide(rng), wide(rng));
    // The inverse is ill-conditioned near the degenerate plane {x = 0}: the
    // cube root amplifies the last-ulp noise of the forward image there.
    if (std::abs(p[0]) < 0.05) p[0] = p[0] < 0.0 ? p[0] - 0.05 : p[0] + 0.05;
    const Eigen::Vector3d image = wood::eval3(p[0], p[1], p[2]);
    const Eigen::Vector3d back = wood::invert3(image[0], image[1], image[2]);
    roundtrip = std::max(roundtrip, (back - p).cwiseAbs().maxCoeff());
  }

  std::vector<Eigen::VectorXd> samples;
  for (int i = 0; i < 50; ++i) {
    Eigen::VectorXd x(dim);
    for (int j = 0; j < dim; ++j) x[j] = narrow(rng);
    samples.push_back(x);
  }
  const auto harmonic = wood::harmonicity_report(dim, samples);

  double jacobian_gap = 0.0;
  for (int i = 0; i < 50; ++i) {
    Eigen::VectorXd x(dim);
    for (int j = 0; j < dim; ++j) x[j] = narrow(rng) * 1.5;
    auto map = [dim](const Eigen::VectorXd& w) { return wood::evalN(w, dim); };
    const double fd_det = diffops::fd_jacobian(map, x).determinant();
    jacobian_gap = std::max(
        jacobian_gap, std::abs(fd_det - wood::jacobian_det3(x[dim - 3], x[dim - 2],
                                                            x[dim - 1])));
  }

  double zero_plane = 0.0;
  for (int i = 0; i < 20; ++i) {
    Eigen::VectorXd x(dim);
    for (int j = 0; j < dim; ++j) x[j] = narrow(rng);
    x[dim - 3] = 0.0;
    zero_plane = std::max(zero_plane,
                          std::abs(wood::jacobian_det3(x[dim - 3], x[dim - 2], x[dim - 1])));
  }

  const bool pass = roundtrip < 1e-9 && harmonic.worst() < 1e-5 &&
                    jacobian_gap < 1e-5 && zero_plane == 0.0;
  json j;
  j["dim"] = dim;
  j["roundtrip_max_error"] = round12(roundtrip);
  j["laplacian_max"] = round12(harmonic.worst());
  j["jacobian_vs_closed_form_max_error"] = round12(jacobian_gap);
  j["zero_plane_max_abs_det"] = round12(zero_plane);
  j["pass"] = pass;
  emit(j, cfg, out);
  return pass ? 0 : 2;
}

int cmd_tennisball(double p, const std::string& eval_at, bool identities,
                   const RunConfig& cfg, std::ostream& out) {
  if (!eval_at.empty()) {
    const auto point = parse_numbers(eval_at, 2);
    const tennis::SphericalCoord image = tennis::k(point[0], point[1], p);
    out << fmt12(image.phi) << " " << fmt12(image.theta) << "\n";
    return 0;
  }
  if (!identities)
    throw UsageError("tennisball: one of --eval, --identities is required");
  const auto report = tennis::identity_suite(p);
  json j;
  j["p"] = round12(p);
  j["g_reflect_pi"] = round12(report.g_reflect_pi);
  j["g_reflect_3pi"] = round12(report.g_reflect_3pi);
  j["g_fix_zero"] = round12(report.g_fix_zero);
  j["g_fix_two_pi"] = round12(report.g_fix_two_pi);
  j["g_seam_half_pi"] = round12(report.g_seam_half_pi);
  j["worst"] = round12(report.worst());
  j["pass"] = report.worst() < 1e-12;
  emit(j, cfg, out);
  return report.worst() < 1e-12 ? 0 : 2;
}

int cmd_ball_extend(double p, const std::string& at, int nphi, int ntheta,
                    double max_radius, const RunConfig& cfg, std::ostream& out) {
  const auto point = parse_numbers(at, 3);
  const ball::SphereQuadrature quad(nphi, ntheta);
  const ball::BallExtension3 ext(
      [p](const Eigen::Vector3d& zeta) { return tennis::f_sphere(zeta, p); }, quad,
      max_radius);
  const Eigen::Vector3d value = ext({point[0], point[1], point[2]});
  json j;
  j["p"] = round12(p);
  j["x"] = round12(point[0]);
  j["y"] = round12(point[1]);
  j["z"] = round12(point[2]);
  j["F1"] = round12(value[0]);
  j["F2"] = round12(value[1]);
  j["F3"] = round12(value[2]);
  emit(j, cfg, out);
  return 0;
}

json fold_json(const ball::FoldReport& report) {
  json j;
  j["p"] = round12(report.p);
  j["z"] = round12(report.z);
  j["F3_plus"] = round12(report.F3_plus);
  j["F3_minus"] = round12(report.F3_minus);
  j["folded"] = report.folded;
  j["axis_offset"] = round12(report.axis_offset);
  j["convergence_change"] = round12(report.convergence_change);
  j["resolution_flagged"] = report.resolution_flagged;
  return j;
}

int cmd_fold(double p, double z, bool sweep, int nphi, int ntheta,
             const RunConfig& cfg, std::ostream& out) {
  const ball::SphereQuadrature quad(nphi, ntheta);
  if (!sweep) {
    const auto report = ball::fold_check(p, z, quad);
    emit(fold_json(report), cfg, out);
    return report.folded ? 0 : 2;
  }
  const std::vector<double> ps = {1.0, 5.0, 20.0, 50.0, 100.0};
  bool any = false;
  json table = json::array();
  for (double pv : ps) {
    const auto report = ball::fold_check(pv, z, quad);
    any = any || report.folded;
    table.push_back(fold_json(report));
  }
  if (cfg.format == "csv") {
    out << "p,z,F3_plus,F3_minus,folded,convergence_change\n";
    for (const auto& row : table)
      out << fmt12(row["p"].get<double>()) << "," << fmt12(row["z"].get<double>()) << ","
          << fmt12(row["F3_plus"].get<double>()) << ","
          << fmt12(row["F3_minus"].get<double>()) << ","
          << (row["folded"].get<bool>() ? 1 : 0) << ","
          << fmt12(row["convergence_change"].get<double>()) << "\n";
  } else {
    out << table.dump(2) << "\n";
  }
  return any ? 0 : 2;
}

int cmd_axis_profile(double p, int count, int nphi, int ntheta, double max_radius,
                     const RunConfig& cfg, std::ostream& out) {
  tennis::FoldParams params(p);
  if (count < 2) throw UsageError("axis-profile: --count must be >= 2");
  const ball::SphereQuadrature quad(nphi, ntheta);
  std::vector<double> zs(count);
  for (int i = 0; i < count; ++i)
    zs[i] = -max_radius + 2.0 * max_radius * i / (count - 1);
  const auto profile = ball::axis_profile(params.p, zs, quad, max_radius);
  if (cfg.format == "csv") {
    out << "z,F1,F2,F3\n";
    for (const auto& row : profile)
      out << fmt12(row.z) << "," << fmt12(row.F[0]) << "," << fmt12(row.F[1]) << ","
          << fmt12(row.F[2]) << "\n";
  } else {
    json table = json::array();
    for (const auto& row : profile) {
      json j;
      j["z"] = round12(row.z);
      j["F1"] = round12(row.F[0]);
      j["F2"] = round12(row.F[1]);
      j["F3"] = round12(row.F[2]);
      table.push_back(j);
    }
    out << table.dump(2) << "\n";
  }
  return 0;
}

int cmd_collision(double p, double tol, int nphi, int ntheta, const RunConfig& cfg,
                  std::ostream& out) {
  const ball::SphereQuadrature quad(nphi, ntheta);
  const auto collision = ball::find_collision(p, quad, tol);
  json j;
  j["p"] = round12(p);
  if (collision) {
    j["z1"] = round12(collision->z1);
    j["z2"] = round12(collision->z2);
    j["image_distance"] = round12(collision->image_distance);
  } else {
    j["collision"] = "none";
  }
  emit(j, cfg, out);
  return collision ? 0 : 2;
}

int cmd_polydisk(const std::string& poly_file, bool degree_flag, bool homogeneous_flag,
                 const std::string& eval_at, const std::string& coeff_at,
                 const std::string& radii_text, int nodes, const RunConfig& cfg,
                 std::ostream& out) {
  const auto p = poly::ComplexPolynomial::from_file(poly_file);
  json j;
  if (degree_flag) {
    j["degree"] = poly::degree(p);
    emit(j, cfg, out);
    return 0;
  }
  if (homogeneous_flag) {
    j["homogeneous"] = poly::is_homogeneous(p);
    emit(j, cfg, out);
    return 0;
  }

  Eigen::VectorXd radii = Eigen::VectorXd::Ones(p.dimension());
  if (!radii_text.empty()) {
    const auto parsed = parse_numbers(radii_text, p.dimension());
    for (int i = 0; i < p.dimension(); ++i) radii[i] = parsed[i];
  }
  if (nodes <= 0) nodes = 2 * poly::degree(p) + 8;
  const poly::PolydiskSpec disk_spec(Eigen::VectorXcd::Zero(p.dimension()), radii);

  if (!eval_at.empty()) {
    const auto coords = parse_numbers(eval_at, 2 * p.dimension());
    Eigen::VectorXcd z(p.dimension());
    for (int i = 0; i < p.dimension(); ++i) z[i] = Complex(coords[2 * i], coords[2 * i + 1]);
    const Complex by_integral = poly::cauchy_eval(p, disk_spec, z, nodes);
    const Complex direct = p(z);
    j["re"] = round12(by_integral.real());
    j["im"] = round12(by_integral.imag());
    j["direct_re"] = round12(direct.real());
    j["direct_im"] = round12(direct.imag());
    emit(j, cfg, out);
    return 0;
  }
  if (!coeff_at.empty()) {
    const auto entries = parse_numbers(coeff_at, p.dimension());
    std::vector<int> v;
    for (double e : entries) {
      if (e < 0.0 || e != std::floor(e))
        throw UsageError("--coeff expects nonnegative integers");
      v.push_back(static_cast<int>(e));
    }
    const Complex c = poly::taylor_coeff(p, disk_spec, poly::MultiIndex(v), nodes);
    j["re"] = round12(c.real());
    j["im"] = round12(c.imag());
    emit(j, cfg, out);
    return 0;
  }
  throw UsageError("polydisk: one of --degree, --homogeneous, --eval, --coeff is required");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"harmonic extensions of circle and sphere maps, with injectivity checks"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", cfg.seed, "seed for random sample generation");

  auto* kernel = app.add_subcommand("kernel", "Poisson kernel value on the disk");
  double kernel_r = 0.0, kernel_theta = 0.0;
  kernel->add_option("--r", kernel_r)->required();
  kernel->add_option("--theta", kernel_theta)->required();

  auto* extend_disk = app.add_subcommand("extend-disk", "harmonic extension value");
  std::string ed_boundary, ed_at;
  int ed_nodes = 512;
  double ed_max_radius = 0.95;
  extend_disk->add_option("--boundary", ed_boundary)->required();
  extend_disk->add_option("--at", ed_at, "R,THETA")->required();
  extend_disk->add_option("--nodes", ed_nodes);
  extend_disk->add_option("--max-radius", ed_max_radius);

  auto* rkc_verify = app.add_subcommand("rkc-verify", "injectivity scan of an extension");
  std::string rv_boundary, rv_grid;
  double rv_tol = 1e-6;
  int rv_nodes = 1024;
  rkc_verify->add_option("--boundary", rv_boundary)->required();
  rkc_verify->add_option("--grid", rv_grid, "NRxNT");
  rkc_verify->add_option("--tol", rv_tol);
  rkc_verify->add_option("--nodes", rv_nodes);

  auto* lemma = app.add_subcommand("lemma-hz", "g_z(0) quadrature and sign verdict");
  std::string lh_boundary;
  int lh_nodes = 1024;
  double lh_tol = 1e-9;
  lemma->add_option("--boundary", lh_boundary)->required();
  lemma->add_option("--nodes", lh_nodes);
  lemma->add_option("--tol", lh_tol);

  auto* wood_cmd = app.add_subcommand("wood", "harmonic bijection with vanishing Jacobian");
  int wd_dim = 3;
  std::string wd_eval, wd_invert;
  bool wd_check = false;
  wood_cmd->add_option("--dim", wd_dim);
  wood_cmd->add_option("--eval", wd_eval, "comma-separated point");
  wood_cmd->add_option("--invert", wd_invert, "comma-separated point");
  wood_cmd->add_flag("--check", wd_check);

  auto* tennis_cmd = app.add_subcommand("tennisball", "sphere fold homeomorphism");
  double tb_p = 1.0;
  std::string tb_eval;
  bool tb_identities = false;
  tennis_cmd->add_option("--p", tb_p)->required();
  tennis_cmd->add_option("--eval", tb_eval, "PHI,THETA");
  tennis_cmd->add_flag("--identities", tb_identities);

  auto* ball_extend = app.add_subcommand("ball-extend", "ball extension value");
  double be_p = 1.0, be_max_radius = 0.8;
  std::string be_at;
  int be_nphi = 128, be_ntheta = 256;
  ball_extend->add_option("--p", be_p)->required();
  ball_extend->add_option("--at", be_at, "X,Y,Z")->required();
  ball_extend->add_option("--nphi", be_nphi);
  ball_extend->add_option("--ntheta", be_ntheta);
  ball_extend->add_option("--max-radius", be_max_radius);

  auto* fold = app.add_subcommand("fold", "axis fold check");
  double fd_p = 50.0, fd_z = 0.4;
  bool fd_sweep = false;
  int fd_nphi = 256, fd_ntheta = 512;
  fold->add_option("--p", fd_p);
  fold->add_option("--z", fd_z);
  fold->add_flag("--sweep", fd_sweep);
  fold->add_option("--nphi", fd_nphi);
  fold->add_option("--ntheta", fd_ntheta);

  auto* axis = app.add_subcommand("axis-profile", "F along the z-axis");
  double ax_p = 5.0, ax_max_radius = 0.8;
  int ax_count = 33, ax_nphi = 128, ax_ntheta = 256;
  axis->add_option("--p", ax_p)->required();
  axis->add_option("--count", ax_count);
  axis->add_option("--nphi", ax_nphi);
  axis->add_option("--ntheta", ax_ntheta);
  axis->add_option("--max-radius", ax_max_radius);

  auto* collision = app.add_subcommand("collision", "axis collision search");
  double cl_p = 5.0, cl_tol = 1e-6;
  int cl_nphi = 256, cl_ntheta = 512;
  collision->add_option("--p", cl_p)->required();
  collision->add_option("--tol", cl_tol);
  collision->add_option("--nphi", cl_nphi);
  collision->add_option("--ntheta", cl_ntheta);

  auto* polydisk = app.add_subcommand("polydisk", "polynomial Cauchy integrals");
  std::string pd_poly, pd_eval, pd_coeff, pd_radii;
  bool pd_degree = false, pd_homogeneous = false;
  int pd_nodes = 0;
  polydisk->add_option("--poly", pd_poly)->required();
  polydisk->add_flag("--degree", pd_degree);
  polydisk->add_flag("--homogeneous", pd_homogeneous);
  polydisk->add_option("--eval", pd_eval, "re,im per variable");
  polydisk->add_option("--coeff", pd_coeff, "multi-index entries");
  polydisk->add_option("--radii", pd_radii);
  polydisk->add_option("--nodes", pd_nodes);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (*kernel) return cmd_kernel(kernel_r, kernel_theta, cfg, out);
    if (*extend_disk)
      return cmd_extend_disk(ed_boundary, ed_at, ed_nodes, ed_max_radius, cfg, out);
    if (*rkc_verify) return cmd_rkc_verify(rv_boundary, rv_grid, rv_tol, rv_nodes, cfg, out);
    if (*lemma) return cmd_lemma_hz(lh_boundary, lh_nodes, lh_tol, cfg, out, err);
    if (*wood_cmd) return cmd_wood(wd_dim, wd_eval, wd_invert, wd_check, cfg, out);
    if (*tennis_cmd) return cmd_tennisball(tb_p, tb_eval, tb_identities, cfg, out);
    if (*ball_extend)
      return cmd_ball_extend(be_p, be_at, be_nphi, be_ntheta, be_max_radius, cfg, out);
    if (*fold) return cmd_fold(fd_p, fd_z, fd_sweep, fd_nphi, fd_ntheta, cfg, out);
    if (*axis)
      return cmd_axis_profile(ax_p, ax_count, ax_nphi, ax_ntheta, ax_max_radius, cfg, out);
    if (*collision) return cmd_collision(cl_p, cl_tol, cl_nphi, cl_ntheta, cfg, out);
    if (*polydisk)
      return cmd_polydisk(pd_poly, pd_degree, pd_homogeneous, pd_eval, pd_coeff,
                          pd_radii, pd_nodes, cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand selected\n";
  return 1;
}

}  // namespace harmonic::cli
