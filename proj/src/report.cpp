#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "walkclass/classify.hpp"
#include "walkclass/error.hpp"

namespace walkclass {

using Json = nlohmann::ordered_json;

namespace {

Json ext_json(const ExtReal& e) {
  if (e.infinite) return "infinity";
  return e.value;
}

Json cplx_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json weights_json(const WeightTable& w) { return Json::parse(canonical_json(w)); }

Json lattice_json(const UniformSummary& u) {
  Json j;
  j["g2"] = u.g2;
  j["g3"] = u.g3;
  j["e"] = Json::array({u.e1, u.e2, u.e3});
  j["omega1"] = cplx_json(u.omega1);
  j["omega2"] = u.omega2;
  j["omega3"] = u.omega3;
  j["omega3_over_omega2"] = u.ratio;
  j["omega3_quadrature"] = u.omega3_quadrature;
  j["kernel_residual"] = u.kernel_residual;
  Json a = Json::array(), b = Json::array();
  for (int i = 0; i < 4; ++i) {
    a.push_back(ext_json(u.a[i]));
    b.push_back(ext_json(u.b[i]));
  }
  j["a"] = a;
  j["b"] = b;
  return j;
}

template <class T>
Json opt_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json report_json(const ClassificationReport& r) {
  Json j;
  j["model"] = weights_json(r.weights);
  j["t"] = to_string(r.t);
  j["pattern"] = pattern_name(r.pattern);
  j["genus"] = genus_name(r.genus);
  j["drift"] = Json::array({to_string(r.drift.first), to_string(r.drift.second)});
  j["stationary_weight"] = r.stationary_weight;
  Json verdict;
  verdict["kind"] = verdict_name(r.verdict);
  verdict["criterion"] = r.criterion == 0 ? Json(nullptr) : Json(r.criterion);
  verdict["t_specific"] = r.t_specific;
  if (r.verdict == Verdict::DifferentiallyTranscendental)
    verdict["assumption"] = "t transcendental over Q";
  j["verdict"] = verdict;
  Json g;
  g["order_p1p1"] = opt_json(r.group.order_p1p1);
  g["probe_sets_agree"] = r.group.probe_sets_agree;
  g["parity_consistent"] = r.group.parity_consistent;
  g["order_on_curve"] = opt_json(r.group.order_on_curve);
  g["tau_confirmation"] = r.group.tau_confirmation;
  g["orbit_sum_p1p1"] = tri_state_name(r.group.orbit_sum_p1p1);
  Json ws = Json::array();
  for (const auto& v : r.group.orbit_sum_witnesses) ws.push_back(to_string(v));
  g["orbit_sum_p1p1_values"] = ws;
  g["orbit_sum_on_curve_max"] = opt_json(r.group.orbit_sum_on_curve_max);
  g["orbit_sum_on_curve_o1_plus_o2"] = opt_json(r.group.orbit_sum_on_curve_o1_plus_o2);
  g["orbit_sum_on_curve_zero"] = opt_json(r.group.orbit_sum_on_curve_zero);
  j["group"] = g;
  j["uniformization"] = r.uniform ? lattice_json(*r.uniform) : Json(nullptr);
  Json ev = Json::array();
  for (const auto& e : r.evidence) {
    Json x;
    x["claim"] = e.claim;
    x["basis"] = e.basis;
    x["value"] = e.value;
    ev.push_back(x);
  }
  j["evidence"] = ev;
  j["notes"] = r.notes;
  return j;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::string report_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "model      " << canonical_json(r.weights) << "\n";
  os << "t          " << to_string(r.t) << "\n";
  os << "pattern    " << pattern_name(r.pattern) << "\n";
  os << "genus      " << genus_name(r.genus) << "\n";
  os << "drift      (" << to_string(r.drift.first) << ", " << to_string(r.drift.second) << ")\n";
  os << "verdict    " << verdict_name(r.verdict);
  if (r.criterion) os << "(" << r.criterion << ")";
  if (r.t_specific) os << " [specific to this t]";
  os << "\n";
  if (r.verdict == Verdict::DifferentiallyTranscendental) os << "assumes    t transcendental over Q\n";
  if (r.genus == GenusTag::Elliptic) {
    os << "group      P1xP1 order "
       << (r.group.order_p1p1 ? std::to_string(*r.group.order_p1p1) : std::string("none within cap"))
       << ", curve order "
       << (r.group.order_on_curve ? std::to_string(*r.group.order_on_curve) : std::string("none within cap"))
       << ", exact orbit sum " << tri_state_name(r.group.orbit_sum_p1p1) << "\n";
  }
  if (r.uniform) {
    const auto& u = *r.uniform;
    os << "lattice    g2=" << fmt(u.g2) << " g3=" << fmt(u.g3) << " omega1=" << fmt(u.omega1.imag())
       << "i omega2=" << fmt(u.omega2) << " omega3=" << fmt(u.omega3) << " ratio=" << fmt(u.ratio) << "\n";
    os << "a          ";
    for (const auto& a : u.a) os << to_string(a) << " ";
    os << "\nb          ";
    for (const auto& b : u.b) os << to_string(b) << " ";
    os << "\n";
  }
  for (const auto& e : r.evidence) os << "evidence   " << e.claim << " [" << e.basis << "]: " << e.value << "\n";
  for (const auto& n : r.notes) os << "note       " << n << "\n";
  return os.str();
}

void write_path_file(const std::filesystem::path& file, const PathSample& ps, bool x_is_base,
                     const std::vector<ProjPoint>& other, const char* branch) {
  std::ofstream out(file);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + file.string());
  out.precision(17);
  out << "re_x,im_x,re_y,im_y,branch\n";
  for (std::size_t k = 0; k < ps.base.size(); ++k) {
    const cplx base = ps.base[k];
    const cplx v = other[k].value();
    const cplx x = x_is_base ? base : v;
    const cplx y = x_is_base ? v : base;
    out << x.real() << "," << x.imag() << "," << y.real() << "," << y.imag() << "," << branch << "\n";
  }
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + file.string());
}

}  // namespace

std::string emit_report(const ClassificationReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) return report_json(r).dump(2) + "\n";
  return report_text(r);
}

std::vector<std::string> emit_path_csv(const KernelContext& ctx, const std::string& dir, int n) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir + ": " + ec.message());
  const PathSample px = unit_circle_paths(ctx, n);
  const PathSample py = unit_circle_paths_y(ctx, n);
  const fs::path d(dir);
  std::vector<std::string> written;
  const auto emit = [&](const char* name, const PathSample& ps, bool x_base, const std::vector<ProjPoint>& v,
                        const char* branch) {
    write_path_file(d / name, ps, x_base, v, branch);
    written.push_back((d / name).string());
  };
  emit("gamma_x_minus.csv", px, true, px.inside, "Y-");
  emit("gamma_x_plus.csv", px, true, px.outside, "Y+");
  emit("gamma_y_minus.csv", py, false, py.inside, "X-");
  emit("gamma_y_plus.csv", py, false, py.outside, "X+");
  return written;
}

std::string uniformize_json(const KernelContext& ctx) {
  const Uniformization u = uniformize(ctx);
  Json j;
  j["model"] = weights_json(ctx.weights());
  j["t"] = to_string(ctx.t());
  j["g2"] = u.lattice.g2;
  j["g3"] = u.lattice.g3;
  j["g2_from_y"] = u.g2_from_y;
  j["g3_from_y"] = u.g3_from_y;
  j["e"] = Json::array({u.lattice.e1, u.lattice.e2, u.lattice.e3});
  j["omega1"] = cplx_json(u.lattice.omega1);
  j["omega2"] = u.lattice.omega2;
  j["omega3"] = u.omega3;
  j["omega3_quadrature"] = u.omega3_quadrature;
  j["omega3_over_omega2"] = u.omega3 / u.lattice.omega2;
  Json a = Json::array(), b = Json::array();
  for (int i = 0; i < 4; ++i) {
    a.push_back(ext_json(u.bp.a[i]));
    b.push_back(ext_json(u.bp.b[i]));
  }
  j["a"] = a;
  j["b"] = b;
  // x at the half periods against the branch points they should hit.
  const cplx w1 = u.lattice.omega1, w2 = u.lattice.omega2;
  const std::array<std::pair<const char*, std::pair<cplx, int>>, 4> pts = {{
      {"0", {0.0, 3}}, {"omega2/2", {w2 / 2.0, 0}}, {"omega1/2", {w1 / 2.0, 2}}, {"(omega1+omega2)/2", {(w1 + w2) / 2.0, 1}}}};
  Json corr = Json::array();
  for (const auto& [name, pr] : pts) {
    const ProjPoint x = lambda_map(pr.first, u).first;
    Json c;
    c["w"] = name;
    c["branch_point"] = "a" + std::to_string(pr.second + 1);
    c["chordal_error"] = chordal_distance(x, u.bp.a[static_cast<std::size_t>(pr.second)].proj());
    corr.push_back(c);
  }
  j["correspondence"] = corr;
  const TauOrder tau = tau_order_on_curve(u);
  j["tau_order"] = tau.ell ? Json(*tau.ell) : Json(nullptr);
  j["tau_ratio"] = tau.ell ? Json(std::to_string(tau.k) + "/" + std::to_string(*tau.ell)) : Json(nullptr);
  return j.dump(2) + "\n";
}

std::string series_json(const KernelContext& ctx, int K) {
  const SeriesTruncation s = walk_dp(ctx.weights(), K);
  Json j;
  j["model"] = weights_json(ctx.weights());
  j["order"] = K;
  Json q00 = Json::array(), mass = Json::array();
  for (int k = 0; k <= K; ++k) {
    q00.push_back(to_string(s.q(0, 0, k)));
    mass.push_back(to_string(s.mass(k)));
  }
  j["q00"] = q00;
  j["mass"] = mass;
  j["t"] = to_string(ctx.t());
  j["functional_equation_exact_through_degree"] = verify_functional_equation(ctx, K);
  const BoundarySeries bs(ctx, s);
  j["Q00_at_t"] = bs.q00();
  j["tail_bound"] = bs.tail();
  return j.dump(2) + "\n";
}

std::string orbit_sum_json(const WeightTable& w, const std::optional<Rational>& t, const ClassifyOptions& opts) {
  Json j;
  j["model"] = weights_json(w);
  const OrbitSumFormal os = orbit_sum_formal(w, opts.cap, opts.seed, opts.probes);
  j["order_p1p1"] = opt_json(os.order);
  j["orbit_sum_p1p1"] = tri_state_name(os.state);
  Json probes = Json::array();
  for (std::size_t i = 0; i < os.probes.size(); ++i) {
    Json p;
    p["x"] = to_string(os.probes[i].x);
    p["y"] = to_string(os.probes[i].y);
    p["value"] = i < os.values.size() ? Json(to_string(os.values[i])) : Json(nullptr);
    probes.push_back(p);
  }
  j["probes"] = probes;
  if (t) {
    const KernelContext ctx(w, *t);
    const Uniformization u = uniformize(ctx);
    const TauOrder tau = tau_order_on_curve(u, opts.cap, opts.tol, opts.confirm_tol);
    j["t"] = to_string(*t);
    j["order_on_curve"] = tau.ell ? Json(2 * *tau.ell) : Json(nullptr);
    if (tau.ell) {
      const OrbitSumOnCurve oc = orbit_sum_on_curve(u, *tau.ell, opts.samples, opts.orbit_tol, opts.seed);
      j["orbit_sum_on_curve_max"] = oc.max_abs_o2;
      j["orbit_sum_on_curve_o1_plus_o2"] = oc.max_abs_o1_plus_o2;
      j["orbit_sum_on_curve_scale"] = oc.scale;
      j["orbit_sum_on_curve_zero"] = oc.is_zero;
    }
  }
  return j.dump(2) + "\n";
}

std::string critical_t_json(const WeightTable& w) {
  const CriticalPoint c = critical_t(w);
  Json j;
  j["model"] = weights_json(w);
  j["x0"] = c.x0;
  j["y0"] = c.y0;
  j["t0"] = c.t0;
  j["gradient_norm"] = c.gradient_norm;
  j["iterations"] = c.iterations;
  return j.dump(2) + "\n";
}

}  // namespace walkclass
