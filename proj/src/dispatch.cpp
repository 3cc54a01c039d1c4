#include "skewcliff/dispatch.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "skewcliff/analyze.hpp"
#include "skewcliff/error.hpp"

namespace skewcliff {

using nlohmann::json;

namespace {

json scalars_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

json matrix_json(const ScalarMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(row);
  }
  return out;
}

json polys_json(const std::vector<NcPoly>& ps, char letter) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(render(p, letter));
  return out;
}

std::string join(const std::vector<std::size_t>& v, std::size_t offset = 0) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i] + offset);
  }
  return out;
}

class Context {
 public:
  Context(const AlgebraSpecFile& spec, const DispatchOptions& opts)
      : spec_(spec), opts_(opts), pres_(build_gsca(spec.mu, spec.forms)) {}

  const AlgebraSpecFile& spec() const { return spec_; }
  const DispatchOptions& opts() const { return opts_; }
  const CliffordPresentation& pres() const { return pres_; }
  std::size_t n() const { return spec_.n; }
  std::size_t max_deg() const {
    const std::size_t d = opts_.max_degree.value_or(2 * spec_.n + 2);
    if (d < 2) throw Error("--max-deg must be at least 2");
    return d;
  }

  PresentedAlgebra chosen_algebra() const {
    switch (opts_.algebra) {
      case AlgebraChoice::skew:
        return build_skew_ring(spec_.mu);
      case AlgebraChoice::quotient:
        return quotient_by_forms(spec_.mu, quadric_system_of(pres_).forms);
      case AlgebraChoice::x:
        break;
    }
    return pres_.algebra();
  }
  char letter() const { return opts_.algebra == AlgebraChoice::x ? 'x' : 'z'; }
  std::string algebra_name() const {
    switch (opts_.algebra) {
      case AlgebraChoice::skew:
        return "skew";
      case AlgebraChoice::quotient:
        return "quotient";
      case AlgebraChoice::x:
        break;
    }
    return "x";
  }

  NcPoly poly_option() const {
    if (!opts_.poly) throw Error("this command needs --poly");
    return parse_poly(*opts_.poly, spec_.n);
  }

 private:
  const AlgebraSpecFile& spec_;
  const DispatchOptions& opts_;
  CliffordPresentation pres_;
};

using Handler = std::function<void(const Context&, Report&)>;

void cmd_build(const Context& ctx, Report& r) {
  const auto& p = ctx.pres();
  r.evidence["relations"] = polys_json(p.x_relations, 'x');
  r.evidence["y_expressions"] = polys_json(p.y_expressions, 'x');
  json piv = json::array();
  for (const auto& [i, j] : p.pivot_rows) piv.push_back({i, j});
  r.evidence["pivot_rows"] = piv;
  const std::size_t expected = ctx.n() * (ctx.n() - 1) / 2;
  r.verdicts.push_back({"relation-count", p.x_relations.size() == expected,
                        std::to_string(p.x_relations.size()) + " quadratic relations, expected " + std::to_string(expected)});
}

void cmd_gb(const Context& ctx, Report& r) {
  const GroebnerData gb = groebner(ctx.chosen_algebra(), ctx.max_deg());
  r.evidence["algebra"] = ctx.algebra_name();
  r.evidence["complete_through"] = gb.complete_through();
  r.evidence["elements"] = polys_json(gb.elements(), ctx.letter());
}

void cmd_nf(const Context& ctx, Report& r) {
  const NcPoly p = ctx.poly_option();
  const GroebnerData gb = groebner(ctx.chosen_algebra(), std::max<std::size_t>(ctx.max_deg(), std::max<std::size_t>(p.max_degree(), 2)));
  r.evidence["algebra"] = ctx.algebra_name();
  r.evidence["input"] = render(p, ctx.letter());
  r.evidence["normal_form"] = render(normal_form(p, gb), ctx.letter());
}

void cmd_hilbert(const Context& ctx, Report& r) {
  const GroebnerData gb = groebner(ctx.chosen_algebra(), ctx.max_deg());
  r.evidence["algebra"] = ctx.algebra_name();
  r.evidence["hilbert"] = hilbert_coeffs(gb, ctx.max_deg());
}

void cmd_dim(const Context& ctx, Report& r) {
  const GroebnerData gb = groebner(ctx.chosen_algebra(), ctx.max_deg());
  const FiniteDimVerdict v = finite_dim_check(gb);
  r.evidence["algebra"] = ctx.algebra_name();
  r.evidence["bound"] = v.bound;
  r.evidence["dims"] = hilbert_coeffs(gb, ctx.max_deg());
  if (v.finite) {
    r.evidence["dimension"] = v.dimension;
    r.verdicts.push_back({"finite-dimensional", true, "dimension " + std::to_string(v.dimension)});
  } else {
    r.verdicts.push_back({"finite-dimensional", false, "unknown: no vanishing degree through " + std::to_string(v.bound)});
  }
}

json bpf_json(const BasePointVerdict& v) {
  json out{{"base_point_free", v.base_point_free}, {"bound", v.bound}, {"quotient_dims", v.quotient_dims}};
  if (v.base_point_free) out["quotient_dimension"] = v.dimension;
  if (v.warning) out["warning"] = *v.warning;
  return out;
}

Verdict bpf_verdict(const BasePointVerdict& v) {
  return {"base-point-free", v.base_point_free,
          v.base_point_free ? "quotient dim " + std::to_string(v.dimension)
                            : "has-or-unknown: quotient not finite through degree " + std::to_string(v.bound)};
}

Verdict normalizing_verdict(const NormalizingVerdict& v) {
  return {"normalizing", v.normalizing,
          v.normalizing ? "order " + join(v.order, 1)
                        : "not-found among " + std::to_string(v.orders_tried) + " orders"};
}

void cmd_bpf(const Context& ctx, Report& r) {
  const BasePointVerdict v = base_point_free_check(quadric_system_of(ctx.pres()), ctx.max_deg());
  r.evidence["base_points"] = bpf_json(v);
  r.verdicts.push_back(bpf_verdict(v));
}

void cmd_normalizing(const Context& ctx, Report& r) {
  const QuadricSystem sys = quadric_system_of(ctx.pres());
  const NormalizingVerdict v = normalizing_check(sys, std::max<std::size_t>(ctx.max_deg(), 3));
  json forms = json::array();
  for (const auto& q : sys.forms) forms.push_back(render(q.to_poly(), 'z'));
  r.evidence["forms"] = forms;
  r.evidence["orders_tried"] = v.orders_tried;
  if (v.normalizing) {
    std::vector<std::size_t> one_based;
    for (auto i : v.order) one_based.push_back(i + 1);
    r.evidence["order"] = one_based;
  }
  r.verdicts.push_back(normalizing_verdict(v));
}

void cmd_regular(const Context& ctx, Report& r) {
  const RegularityReport v = regularity_verdict(ctx.pres(), ctx.max_deg());
  r.evidence["base_points"] = bpf_json(v.base_points);
  r.evidence["hilbert"] = v.hilbert;
  r.evidence["expected_hilbert"] = v.expected;
  r.evidence["hard_failure"] = v.hard_failure;
  r.verdicts.push_back(normalizing_verdict(v.normalizing));
  r.verdicts.push_back(bpf_verdict(v.base_points));
  r.verdicts.push_back({"hilbert-series", v.hilbert_matches,
                        v.hilbert_matches ? "matches 1/(1-t)^" + std::to_string(ctx.n()) + " through degree " +
                                                std::to_string(ctx.max_deg())
                                          : "differs from 1/(1-t)^" + std::to_string(ctx.n())});
  r.verdicts.push_back({"regular", v.regular && !v.hard_failure,
                        v.regular ? (v.hard_failure ? "HARD FAILURE: declared regular but Hilbert data disagrees"
                                                    : "quadratic and regular (normalizing, base-point free)")
                                  : "not regular: criterion not met"});
}

void cmd_twist_check(const Context& ctx, Report& r) {
  const TwistVerdict v = twist_criterion(ctx.spec().mu);
  if (v.is_twist) {
    r.evidence["lambdas"] = scalars_json(v.lambdas);
    r.verdicts.push_back({"twist-criterion", true, "is-twist, lambda = (" + [&] {
                            std::string s;
                            for (std::size_t i = 0; i < v.lambdas.size(); ++i) s += (i ? "," : "") + v.lambdas[i].str();
                            return s;
                          }() + ")"});
  } else {
    const auto [i, j, k] = v.witness;
    const auto& mu = ctx.spec().mu;
    r.evidence["witness"] = {i, j, k};
    r.evidence["mu_ik"] = mu(i, k).str();
    r.evidence["mu_ij_mu_jk"] = (mu(i, j) * mu(j, k)).str();
    r.verdicts.push_back({"twist-criterion", false,
                          "not-twist, witness (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                              "): mu_" + std::to_string(i) + std::to_string(k) + " = " + mu(i, k).str() + " != " +
                              (mu(i, j) * mu(j, k)).str() + " = mu_" + std::to_string(i) + std::to_string(j) + " mu_" +
                              std::to_string(j) + std::to_string(k)});
  }
}

void cmd_twist(const Context& ctx, Report& r) {
  if (!ctx.spec().tau) throw Error("twist needs \"tau\" in the algebra file");
  const DiagonalAutomorphism& tau = *ctx.spec().tau;
  const PresentedAlgebra twisted = twist_presentation(ctx.pres().algebra(), tau);
  r.evidence["tau"] = scalars_json(tau.lambdas());
  r.evidence["relations"] = polys_json(twisted.relations(), 'x');
  // The twist is again a GSCA: mu'_ij = mu_ij l_j / l_i, M'_k = M_k diag(l).
  const std::size_t n = ctx.n();
  ScalarMatrix mu_entries(n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) mu_entries(i - 1, j - 1) = ctx.spec().mu(i, j) * tau.lambda(j) / tau.lambda(i);
  const MuMatrix mu2(mu_entries);
  std::vector<MuSymmetricMatrix> ms;
  for (const auto& m : ctx.spec().forms) {
    ScalarMatrix e(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e(i, j) = m.entries()(i, j) * tau.lambda(j + 1);
    ms.emplace_back(std::move(e), mu2);
  }
  const CliffordPresentation target = build_gsca(mu2, ms);
  r.evidence["twisted_mu"] = matrix_json(mu2.entries());
  const bool same = same_relation_span(twisted, target.algebra());
  r.verdicts.push_back({"twist-is-gsca", same,
                        same ? "twisted relations span the GSCA relations for the twisted mu"
                             : "twisted relations differ from the predicted GSCA"});
}

std::vector<NcPoly> side_for(const Context& ctx) {
  return ctx.opts().side_y ? ctx.pres().y_expressions : generators_of_degree_one(ctx.n());
}

void cmd_normal(const Context& ctx, Report& r) {
  const NcPoly a = ctx.poly_option();
  const auto side = side_for(ctx);
  const GroebnerData gb = groebner(ctx.chosen_algebra(), ctx.max_deg());
  const NormalVerdict v = is_normal(a, gb, side);
  r.evidence["algebra"] = ctx.algebra_name();
  r.evidence["element"] = render(a, ctx.letter());
  r.evidence["side_basis"] = polys_json(side, ctx.letter());
  if (v.normal) {
    r.evidence["left_scalars"] = matrix_json(v.left);
    r.evidence["right_scalars"] = matrix_json(v.right);
    r.verdicts.push_back({"normal", true, "normal"});
  } else {
    r.evidence["witness"] = *v.witness + 1;
    r.verdicts.push_back({"normal", false, "not-normal, witness side element " + std::to_string(*v.witness + 1) +
                                               " (" + v.failing_side + " containment)"});
  }
}

void cmd_central(const Context& ctx, Report& r) {
  const NcPoly a = ctx.poly_option();
  const auto side = side_for(ctx);
  const GroebnerData gb = groebner(ctx.chosen_algebra(), ctx.max_deg());
  const CentralVerdict v = is_central(a, gb, side);
  r.evidence["algebra"] = ctx.algebra_name();
  r.evidence["element"] = render(a, ctx.letter());
  r.evidence["side_basis"] = polys_json(side, ctx.letter());
  if (v.central) {
    r.verdicts.push_back({"central", true, "central"});
  } else {
    r.evidence["witness"] = *v.witness + 1;
    r.verdicts.push_back({"central", false, "not central, witness side element " + std::to_string(*v.witness + 1)});
  }
}

void cmd_normal_locus(const Context& ctx, Report& r) {
  const auto& ys = ctx.pres().y_expressions;
  const GroebnerData gb = groebner(ctx.pres().algebra(), ctx.max_deg());
  const NormalLocusReport loc = normal_locus_in_span(gb, ys, ys, default_grid(ys.size(), ctx.opts().grid_radius));
  r.evidence["span"] = polys_json(ys, 'x');
  r.evidence["minor_order"] = loc.minor_order;
  r.evidence["total_minors"] = loc.total_minors;
  json minors = json::array();
  for (const auto& m : loc.distinct_nonzero_minors) minors.push_back(m.str());
  r.evidence["distinct_nonzero_minors"] = minors;
  std::size_t normal = 0, certified = 0, uncertified = 0;
  json points = json::array();
  for (const auto& p : loc.points) {
    json jp{{"point", scalars_json(p.point)}, {"normal", p.normal}};
    if (p.certificate) {
      ++certified;
      jp["certificate"] = {{"rows", p.certificate->rows}, {"cols", p.certificate->cols},
                           {"minor", p.certificate->minor.str()}, {"value", p.certificate->value.str()}};
    } else if (p.normal) {
      ++normal;
    } else {
      ++uncertified;
      jp["witness"] = *p.witness + 1;
    }
    points.push_back(jp);
  }
  r.evidence["points"] = points;
  r.evidence["scope"] =
      "grid evidence only: a nonzero minor certifies non-normality over every extension field, "
      "normal points are verified exactly, other span elements are not classified";
  r.evidence["normal_points"] = normal;
  r.evidence["certified_not_normal"] = certified;
  r.evidence["not_normal_without_minor"] = uncertified;
  r.verdicts.push_back({"grid-classified", true,
                        std::to_string(loc.points.size()) + " points: " + std::to_string(normal) + " normal, " +
                            std::to_string(certified) + " not-normal by minor certificate, " +
                            std::to_string(uncertified) + " not-normal by witness"});
}

void cmd_verify_theorem(const Context& ctx, Report& r) {
  const auto& spec = ctx.spec();
  const std::size_t n = ctx.n();
  std::vector<ScalarMatrix> ns;
  std::optional<DiagonalAutomorphism> tau = spec.tau;
  if (spec.kind == AlgebraKind::gca) {
    if (!tau) throw Error("verify-theorem on a gca file needs \"tau\"");
    for (const auto& m : spec.forms) ns.push_back(m.entries());
  } else {
    const TwistVerdict crit = twist_criterion(spec.mu);
    if (!crit.is_twist) {
      const auto [i, j, k] = crit.witness;
      r.evidence["witness"] = {i, j, k};
      r.verdicts.push_back({"twist-criterion", false,
                            "not a twist of a GCA: S is not a twist of a polynomial ring, witness (" + std::to_string(i) +
                                "," + std::to_string(j) + "," + std::to_string(k) + ")"});
      return;
    }
    if (!tau) tau = DiagonalAutomorphism(crit.lambdas);
    if (!(mu_from_lambdas(tau->lambdas()) == spec.mu)) throw Error("mu/tau mismatch");
    // Untwist the forms: N_k(i,j) = M_k(i,j) / lambda_j is symmetric.
    for (const auto& m : spec.forms) {
      ScalarMatrix e(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e(i, j) = m.entries()(i, j) / tau->lambda(j + 1);
      ns.push_back(std::move(e));
    }
  }
  const TheoremReport t = verify_twist_theorem(ns, *tau, std::max<std::size_t>(ctx.max_deg(), 4));

  r.evidence["lambdas"] = scalars_json(t.lambdas);
  r.evidence["through"] = t.through;
  r.evidence["warnings"] = t.warnings;
  json zero = json::array();
  for (const auto& [i, j] : t.zero_r) zero.push_back({i, j});
  r.evidence["zero_r"] = zero;
  json scal = json::array();
  for (const auto& s : t.normality_scalars) {
    scal.push_back({{"k", s.k}, {"i", s.i}, {"j", s.j}, {"expected", s.expected.str()},
                    {"recovered", s.recovered ? s.recovered->str() : "none"}});
  }
  r.evidence["normality_scalars"] = scal;
  json dag = json::array();
  for (const auto& d : t.dagger_checks) dag.push_back({{"ij", {d.i, d.j}}, {"kp", {d.k, d.p}}, {"factor", d.factor.str()}, {"holds", d.pass}});
  r.evidence["dagger"] = dag;
  r.evidence["r_dims_expected"] = t.r_dims_expected;
  r.evidence["r_dims_computed"] = t.r_dims_computed;
  json cs = json::array();
  for (const auto& c : t.c_checks) {
    cs.push_back({{"ij", {c.i, c.j}}, {"scale", c.scale ? c.scale->str() : "zero"}, {"untwists_to_r", c.untwists_to_r}});
  }
  r.evidence["c_elements"] = cs;

  r.verdicts.push_back({"twist-criterion", t.criterion.is_twist && t.lambdas_consistent, "mu_ij = lambda_j / lambda_i"});
  const bool pres_ok = t.presentation_matches && t.relation_count == n * (n - 1) / 2 && t.r_span_equals_y_span;
  r.verdicts.push_back({"twisted-presentation", pres_ok,
                        std::to_string(t.relation_count) + " relations; r-span equals y-span: " +
                            (t.r_span_equals_y_span ? "yes" : "no")});
  r.verdicts.push_back({"normality-scalars", t.normality_pass, "x_k r_ij = mu_ki mu_kj r_ij x_k"});
  r.verdicts.push_back({"dagger-relations", t.dagger_pass, "r_ij r_kp = mu_ik^2 mu_jp^2 r_kp r_ij"});
  r.verdicts.push_back({"nu-cocycle", t.nu_cocycle, "nu_ijkp nu_kpab = nu_ijab"});
  r.verdicts.push_back({"r-hilbert", t.r_hilbert_pass, "R dims match 1/(1-t^2)^" + std::to_string(n)});
  r.verdicts.push_back({"c-twist", t.c_twist, "c_ij c_kp^(tau^2) = nu_ijkp c_kp c_ij^(tau^2) in B"});
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"build", cmd_build},
      {"gb", cmd_gb},
      {"nf", cmd_nf},
      {"hilbert", cmd_hilbert},
      {"dim", cmd_dim},
      {"bpf", cmd_bpf},
      {"normalizing", cmd_normalizing},
      {"regular", cmd_regular},
      {"twist-check", cmd_twist_check},
      {"twist", cmd_twist},
      {"normal", cmd_normal},
      {"central", cmd_central},
      {"normal-locus", cmd_normal_locus},
      {"verify-theorem", cmd_verify_theorem},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Report dispatch(const std::string& command, const AlgebraSpecFile& spec, const DispatchOptions& options) {
  const auto it = handlers().find(command);
  if (it == handlers().end()) throw Error("unknown command \"" + command + "\"");
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.command = command;
  r.input = spec.source;
  r.input_digest = "fnv1a64:" + spec.digest;
  const Context ctx(spec, options);
  it->second(ctx, r);
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace skewcliff
