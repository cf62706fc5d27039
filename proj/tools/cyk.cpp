#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyk/combinatorics.hpp"
#include "cyk/cover.hpp"
#include "cyk/curve.hpp"
#include "cyk/deform.hpp"
#include "cyk/domain.hpp"
#include "cyk/error.hpp"
#include "cyk/json_io.hpp"
#include "cyk/rational.hpp"
#include "cyk/theta.hpp"
#include "cyk/verify.hpp"

using namespace cyk;

namespace {

struct Global {
  double tol = 1e-10;
  std::uint64_t seed = 7;
  int g = 2;
  bool json_stdout = false;
  std::string out;
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, "'" + path + "': " + e.what());
  }
}

bool looks_scalar(const std::string& s) {
  try {
    parse_complex(s);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// A scalar t stands for t * I_g; anything else is a JSON file holding a
// matrix, optionally under `key`.
CMat load_matrix(const std::string& arg, int g, const std::string& key) {
  if (looks_scalar(arg)) return parse_complex(arg) * CMat::Identity(g, g);
  const json j = load_json_file(arg);
  if (j.is_object()) {
    if (!j.contains(key)) throw Error(ErrorCode::MalformedInput, "missing key '" + key + "' in " + arg);
    return cmat_from_json(j.at(key));
  }
  return cmat_from_json(j);
}

std::vector<cplx> load_branch_points(const std::string& curve_file, const std::string& lambdas) {
  if (!lambdas.empty()) {
    const CVec v = parse_complex_list(lambdas);
    return {v.data(), v.data() + v.size()};
  }
  if (curve_file.empty()) throw Error(ErrorCode::InvalidArgument, "give --curve or --lambda");
  const json j = load_json_file(curve_file);
  if (!j.is_object() || !j.contains("branch_points"))
    throw Error(ErrorCode::MalformedInput, "curve file needs a 'branch_points' array");
  const CVec v = cvec_from_json(j.at("branch_points"));
  return {v.data(), v.data() + v.size()};
}

json header(const std::string& command, const Global& gl) {
  return {{"schema", "cyk/1"}, {"command", command}, {"tol", gl.tol}, {"seed", gl.seed}};
}

int emit(json report, bool ok, const Global& gl) {
  report["ok"] = ok;
  const std::string text = report.dump(2) + "\n";
  if (!gl.out.empty()) {
    std::ofstream f(gl.out);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + gl.out + "'");
    f << text;
  }
  if (gl.json_stdout || gl.out.empty()) std::cout << text;
  return ok ? 0 : 1;
}

void check_tol(const Global& gl) {
  if (!(gl.tol >= 1e-14 && gl.tol <= 1e-2)) throw Error(ErrorCode::InvalidArgument, "--tol must lie in [1e-14, 1e-2]");
}

json residuals_json(const PeriodResiduals& r) {
  return {{"symmetry", r.symmetry}, {"min_eig_im", r.min_eig_im}, {"quadrature_error", r.quadrature_error}};
}

int cmd_periods(const Global& gl, const std::string& curve_file, const std::string& lambdas) {
  check_tol(gl);
  const auto curve = new_curve(load_branch_points(curve_file, lambdas));
  if (curve.genus > 3) throw Error(ErrorCode::GTooLarge, "period computations are limited to g <= 3");
  const auto cycles = build_cycles(curve);
  const auto pm = period_matrix(curve, cycles, gl.tol);
  json r = header("periods", gl);
  r["g"] = curve.genus;
  r["branch_points"] = to_json(CVec(Eigen::Map<const CVec>(curve.branch_points.data(), curve.genus * 2 + 1)));
  r["raw"] = to_json(pm.raw);
  r["Z"] = to_json(pm.Z);
  r["residuals"] = residuals_json(pm.residuals);
  const bool symplectic = intersection_matrix(cycles) == standard_symplectic(curve.genus).cast<int>();
  r["cycle_pairing_standard"] = symplectic;
  return emit(r, symplectic && pm.residuals.symmetry < 1e-6 && pm.residuals.min_eig_im > 0.0, gl);
}

int cmd_theta(const Global& gl, const std::string& zfile, const std::string& chr, const std::string& zarg) {
  check_tol(gl);
  const CVec z = parse_complex_list(zarg);
  const CMat Z = load_matrix(zfile, static_cast<int>(z.size()), "Z");
  const auto ch = chr.empty() ? zero_characteristic(static_cast<int>(Z.rows())) : parse_characteristic(chr);
  const auto res = theta(ch, z, Z, gl.tol);
  json r = header("theta", gl);
  r["value"] = to_json(res.value);
  r["radius"] = res.radius;
  r["terms"] = res.terms;
  r["parity"] = ch.parity();
  return emit(r, true, gl);
}

int cmd_abel(const Global& gl, const std::string& curve_file, const std::string& lambdas, const std::string& points,
             const std::string& sheets) {
  check_tol(gl);
  const auto curve = new_curve(load_branch_points(curve_file, lambdas));
  if (curve.genus > 3) throw Error(ErrorCode::GTooLarge, "period computations are limited to g <= 3");
  const auto pm = period_matrix(curve, build_cycles(curve), gl.tol);
  std::vector<CurvePoint> pts;
  if (!points.empty()) {
    const CVec zs = parse_complex_list(points);
    std::vector<int> sh(zs.size(), 1);
    if (!sheets.empty()) {
      std::stringstream ss(sheets);
      std::string item;
      std::size_t k = 0;
      while (std::getline(ss, item, ',')) {
        if (k >= sh.size() || (item != "1" && item != "-1" && item != "+1"))
          throw Error(ErrorCode::MalformedInput, "--sheets takes one of 1/-1 per point");
        sh[k++] = item == "-1" ? -1 : 1;
      }
      if (k != sh.size()) throw Error(ErrorCode::MalformedInput, "--sheets length differs from --points");
    }
    for (Eigen::Index i = 0; i < zs.size(); ++i) pts.push_back({zs(i), sh[i], false});
  }
  AbelOptions opt;
  opt.tol = std::min(gl.tol, 1e-10);
  const auto jp = abel_jacobi(curve, pm, pts, infinity_point(), opt);
  json r = header("abel", gl);
  r["vector"] = to_json(jp.vector);
  r["reduced"] = to_json(jp.reduced);
  r["lattice_residual"] = lattice_residual(jp.vector, pm.Z);
  r["Z"] = to_json(pm.Z);
  return emit(r, true, gl);
}

int cmd_domain(const Global& gl, const std::string& action, const std::string& zarg, const std::string& marg) {
  json r = header("domain " + action, gl);
  const int g = gl.g;
  if (action == "check") {
    const CMat Z = load_matrix(zarg, g, "Z");
    const bool in = contains(Z, 0.0);
    r["contains"] = in;
    r["min_eig"] = min_eig_hermitian(CMat::Identity(Z.rows(), Z.rows()) - Z * Z.adjoint());
    if (in) {
      const auto pos = hodge_positivity_check(weight1_hodge(Z), gl.tol);
      r["hodge_positive"] = pos.ok;
      r["witness"] = to_json(transitive_witness(Z));
    }
    return emit(r, in, gl);
  }
  const CMat M = load_matrix(marg, 2 * g, "M");
  const bool su = su_check(M, std::max(gl.tol, 1e-10));
  r["su"] = su;
  if (action == "act") {
    const CMat Z = load_matrix(zarg, static_cast<int>(M.rows() / 2), "Z");
    const CMat W = act(M, Z);
    r["image"] = to_json(W);
    r["image_in_domain"] = contains(W, 0.0);
    return emit(r, su && contains(W, 0.0), gl);
  }
  if (action == "embed") {
    const RMat S = embed_sp(M);
    const RMat J = realified_form(static_cast<int>(M.rows() / 2));
    const double defect = max_abs(RMat(S.transpose() * J * S - J));
    r["S"] = to_json(S);
    r["symplectic_defect"] = defect;
    return emit(r, su && defect < 1e-10, gl);
  }
  throw Error(ErrorCode::InvalidArgument, "domain action must be check, act or embed");
}

int cmd_wp(const Global& gl, const std::string& taus) {
  const CMat tau = load_matrix(taus, gl.g, "tau");
  const auto pot = wp_potential(tau);
  json r = header("wp", gl);
  r["g"] = tau.rows();
  r["potential"] = {{"pairing_sum", pot.pairing_sum}, {"closed_form", pot.closed_form}};
  r["metric"] = to_json(wp_metric(tau));
  const double smax = Eigen::JacobiSVD<CMat>(tau).singularValues()(0);
  if (smax <= 0.5) {
    const auto R = wp_curvature(tau);
    CVec e = CVec::Zero(R.n);
    e(0) = 1.0;
    r["holomorphic_sectional_e11"] = R.holomorphic_sectional(e);
  }
  return emit(r, std::abs(pot.pairing_sum - pot.closed_form) < 1e-12, gl);
}

int cmd_cover(const Global& gl, const std::string& lambdas) {
  std::vector<GaussRational> ls;
  int g = gl.g;
  if (!lambdas.empty()) {
    std::stringstream ss(lambdas);
    std::string item;
    while (std::getline(ss, item, ',')) ls.push_back(GaussRational(parse_rational(item)));
    if (ls.size() % 2 == 0) throw Error(ErrorCode::EvenCount, "expected 2g+1 finite branch points");
    g = static_cast<int>(ls.size() - 1) / 2;
  } else {
    for (int i = 0; i <= 2 * g; ++i) ls.push_back(GaussRational(i));
  }
  if (g > 6) throw Error(ErrorCode::GTooLarge, "cover combinatorics are limited to g <= 6");
  const auto arr = branch_arrangement(ls);
  const auto gp = general_position(arr);
  json r = header("cover", gl);
  r["g"] = g;
  r["general_position"] = {{"ok", gp.ok}, {"subsets_checked", gp.subsets_checked}, {"violating", gp.violating}};
  bool ok = gp.ok;
  if (gp.ok) {
    const auto flats = pairwise_intersections(arr);
    r["pairwise_flats"] = {{"count", flats.size()}, {"projective_dim", g - 2}, {"vacuous", g < 2}};
  }
  const auto N = group_N(g);
  r["group"] = {{"order", N.order}, {"full_order", N.full_order}, {"index", N.index}, {"closed", N.closed},
                {"sign_kernel", N.is_sign_kernel}};
  ok = ok && N.index == 2 && N.closed;
  const auto inv = invariance_check(g);
  r["invariance"] = {{"classes", inv.classes},
                     {"invariant_under_N", inv.invariant_under_N},
                     {"invariant_under_full_group", inv.invariant_under_full}};
  ok = ok && inv.ok;
  if (g <= 4) {
    const auto ram = ramification_analysis(g);
    r["ramification"] = {{"tuples", ram.tuples},
                         {"mismatches", ram.mismatches},
                         {"components", ram.ramification_components},
                         {"ok", ram.ok}};
    ok = ok && ram.ok;
  }
  if (g >= 2) {
    const auto d = hodge_numbers(g);
    json h = {{"middle", d.middle}, {"cross_checked", d.cross_checked}};
    if (g >= 3) h["b2"] = d.b2;
    if (d.b2_flagged) h["b2_flag"] = d.note;
    r["hodge"] = h;
    ok = ok && d.cross_checked;
  }
  return emit(r, ok, gl);
}

int cmd_verify(const Global& gl) {
  if (gl.g < 1 || gl.g > 6) throw Error(ErrorCode::GTooLarge, "--g must lie in 1..6");
  VerifyConfig cfg;
  cfg.seed = gl.seed;
  cfg.g = gl.g;
  json r = header("verify-all", gl);
  r["g"] = gl.g;
  json list = json::array();
  bool ok = true;
  for (const auto& c : run_all(cfg)) {
    list.push_back(to_json(c));
    ok = ok && c.pass;
    if (!gl.json_stdout) std::cerr << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "\n";
  }
  r["criteria"] = list;
  return emit(r, ok, gl);
}

int error_exit(ErrorCode code, const std::string& msg, const Global& gl) {
  json r = {{"schema", "cyk/1"}, {"error", {{"code", std::string(error_code_name(code))}, {"message", msg}}}};
  std::cerr << msg << "\n";
  if (gl.json_stdout) std::cout << r.dump(2) << "\n";
  return is_input_error(code) ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperelliptic periods, theta functions and the type I domain"};
  app.require_subcommand(1);
  Global gl;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--tol", gl.tol, "Tolerance");
    s->add_option("--seed", gl.seed, "Random seed");
    s->add_option("--g", gl.g, "Genus");
    s->add_flag("--json", gl.json_stdout, "Print the JSON report on stdout");
    s->add_option("--out,--report", gl.out, "Write the JSON report to this file");
  };

  std::string curve_file, lambdas, zfile, chr, zarg, points, sheets, marg, taus;
  auto* periods = app.add_subcommand("periods", "Period matrix of y^2 = prod (z - lambda)");
  periods->add_option("--curve", curve_file, "JSON file with branch_points");
  periods->add_option("--lambda", lambdas, "Comma separated branch points");
  add_common(periods);

  auto* th = app.add_subcommand("theta", "Riemann theta with characteristic");
  th->add_option("--Z", zfile, "Period JSON file or scalar")->required();
  th->add_option("--char", chr, "Characteristic as delta,epsilon bit strings");
  th->add_option("--z", zarg, "Comma separated complex vector")->required();
  add_common(th);

  auto* ab = app.add_subcommand("abel", "Abel-Jacobi image of a divisor, base point at infinity");
  ab->add_option("--curve", curve_file, "JSON file with branch_points");
  ab->add_option("--lambda", lambdas, "Comma separated branch points");
  ab->add_option("--points", points, "Comma separated x coordinates");
  ab->add_option("--sheets", sheets, "Comma separated 1/-1 per point");
  add_common(ab);

  std::string action;
  auto* dom = app.add_subcommand("domain", "Type I domain utilities");
  dom->add_option("action", action, "check | act | embed")->required()->check(CLI::IsMember({"check", "act", "embed"}));
  dom->add_option("--Z", zarg, "Matrix JSON file or scalar");
  dom->add_option("--M", marg, "SU(g,g) matrix JSON file or scalar");
  add_common(dom);

  auto* wp = app.add_subcommand("wp", "Weil-Petersson potential, metric and curvature");
  wp->add_option("--tau", taus, "Matrix JSON file or scalar times identity")->required();
  add_common(wp);

  auto* cov = app.add_subcommand("cover", "Arrangement, group and invariance combinatorics");
  cov->add_option("--lambda", lambdas, "Comma separated rational branch points");
  add_common(cov);

  auto* ver = app.add_subcommand("verify-all", "Run every acceptance check");
  add_common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*periods) return cmd_periods(gl, curve_file, lambdas);
    if (*th) return cmd_theta(gl, zfile, chr, zarg);
    if (*ab) return cmd_abel(gl, curve_file, lambdas, points, sheets);
    if (*dom) {
      if (zarg.empty() && action != "embed") throw Error(ErrorCode::InvalidArgument, "--Z is required");
      if (marg.empty() && action != "check") throw Error(ErrorCode::InvalidArgument, "--M is required");
      return cmd_domain(gl, action, zarg, marg);
    }
    if (*wp) return cmd_wp(gl, taus);
    if (*cov) return cmd_cover(gl, lambdas);
    if (*ver) return cmd_verify(gl);
  } catch (const Error& e) {
    return error_exit(e.code(), e.what(), gl);
  } catch (const json::exception& e) {
    return error_exit(ErrorCode::MalformedInput, e.what(), gl);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
