#include "skewcliff/analyze.hpp"

#include <set>

#include "skewcliff/error.hpp"

namespace skewcliff {

std::vector<NcPoly> generators_of_degree_one(std::size_t n) {
  std::vector<NcPoly> gens;
  for (unsigned i = 1; i <= n; ++i) gens.push_back(NcPoly::generator(i));
  return gens;
}

namespace {

std::size_t degree_of(const NcPoly& p, const char* what) {
  const auto d = p.homogeneous_degree();
  if (!d) throw Error(std::string(what) + " must be nonzero and homogeneous: " + render(p));
  return *d;
}

std::size_t common_degree(const std::vector<NcPoly>& polys, const char* what) {
  std::optional<std::size_t> deg;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    const std::size_t d = degree_of(p, what);
    if (deg && *deg != d) throw Error(std::string(what) + " elements must share one degree");
    deg = d;
  }
  if (!deg) throw Error(std::string(what) + " has no nonzero element");
  return *deg;
}

bool is_zero_vector(const ScalarVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

NormalVerdict is_normal(const NcPoly& a, const GroebnerData& gb, const std::vector<NcPoly>& side_basis) {
  NormalVerdict v;
  const std::size_t m = side_basis.size();
  v.left = ScalarMatrix(m, m, Scalar(0));
  v.right = ScalarMatrix(m, m, Scalar(0));
  if (a.is_zero() || m == 0) {
    v.normal = true;
    return v;
  }
  const std::size_t da = degree_of(a, "element");
  const std::size_t top = da + common_degree(side_basis, "side basis");
  if (top > gb.complete_through()) {
    throw DegreeBoundError("degree exceeds completeness bound (" + std::to_string(top) + " > " +
                           std::to_string(gb.complete_through()) + ")");
  }
  const DegreeCoordinates coords(gb, top);
  std::vector<ScalarVector> ah, ha;
  for (const auto& h : side_basis) {
    ah.push_back(coords.coordinates(a * h));
    ha.push_back(coords.coordinates(h * a));
  }
  for (std::size_t s = 0; s < m; ++s) {
    const auto sol = solve_in_span(ha[s], ah);  // g_s a in span{a h}
    if (!sol) {
      v.witness = s;
      v.failing_side = "left";
      return v;
    }
    for (std::size_t h = 0; h < m; ++h) v.left(s, h) = (*sol)[h];
  }
  for (std::size_t s = 0; s < m; ++s) {
    const auto sol = solve_in_span(ah[s], ha);  // a g_s in span{h a}
    if (!sol) {
      v.witness = s;
      v.failing_side = "right";
      return v;
    }
    for (std::size_t h = 0; h < m; ++h) v.right(s, h) = (*sol)[h];
  }
  v.normal = true;
  return v;
}

CentralVerdict is_central(const NcPoly& a, const GroebnerData& gb, const std::vector<NcPoly>& side_basis) {
  CentralVerdict v;
  for (std::size_t s = 0; s < side_basis.size(); ++s) {
    const NcPoly comm = side_basis[s] * a - a * side_basis[s];
    if (!normal_form(comm, gb).is_zero()) {
      v.witness = s;
      return v;
    }
  }
  v.central = true;
  return v;
}

std::vector<std::size_t> SubalgebraBasis::dims() const {
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d <= through; ++d) {
    auto it = per_degree.find(d);
    out.push_back(it == per_degree.end() ? 0 : it->second.size());
  }
  return out;
}

SubalgebraBasis subalgebra_basis(const GroebnerData& gb, const std::vector<NcPoly>& generators, std::size_t through) {
  if (through > gb.complete_through()) {
    throw DegreeBoundError("degree exceeds completeness bound (" + std::to_string(through) + " > " +
                           std::to_string(gb.complete_through()) + ")");
  }
  SubalgebraBasis out;
  out.generators = generators;
  out.through = through;
  out.generator_degree = common_degree(generators, "generator list");
  for (std::size_t d = 0; d <= through; ++d) out.per_degree[d];
  out.per_degree[0].push_back(NcPoly::unit());

  std::vector<NcPoly> gen_nf;
  for (const auto& g : generators) gen_nf.push_back(normal_form(g, gb));

  // Normal forms of all generator words of the current length, in
  // lexicographic order of generator indices.
  std::vector<NcPoly> level{NcPoly::unit()};
  for (std::size_t length = 1; length * out.generator_degree <= through; ++length) {
    const std::size_t d = length * out.generator_degree;
    const DegreeCoordinates coords(gb, d);
    EchelonBasis independent(coords.dim());
    std::vector<NcPoly> next;
    next.reserve(level.size() * gen_nf.size());
    for (const auto& prefix : level) {
      for (const auto& g : gen_nf) {
        NcPoly word = prefix.is_zero() || g.is_zero() ? NcPoly{} : normal_form(prefix * g, gb);
        if (!word.is_zero() && independent.insert(coords.coordinates(word))) out.per_degree[d].push_back(word);
        next.push_back(std::move(word));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<std::size_t> weighted_polynomial_dims(std::size_t n, std::size_t e, std::size_t through) {
  const std::vector<std::size_t> base = polynomial_ring_dims(n, through / e);
  std::vector<std::size_t> out(through + 1, 0);
  for (std::size_t d = 0; d <= through; d += e) out[d] = base[d / e];
  return out;
}

std::vector<std::vector<Scalar>> default_grid(std::size_t params, long radius) {
  std::vector<std::vector<Scalar>> out;
  std::vector<long> cur(params, -radius);
  while (true) {
    bool nonzero = false;
    for (long c : cur) nonzero = nonzero || c != 0;
    if (nonzero) {
      std::vector<Scalar> point;
      for (long c : cur) point.emplace_back(c);
      out.push_back(std::move(point));
    }
    std::size_t i = params;
    while (i > 0 && cur[i - 1] == radius) {
      cur[i - 1] = -radius;
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

NormalLocusReport normal_locus_in_span(const GroebnerData& gb, const std::vector<NcPoly>& span_gens,
                                       const std::vector<NcPoly>& side_basis,
                                       const std::vector<std::vector<Scalar>>& grid) {
  const std::size_t k = span_gens.size();
  const std::size_t m = side_basis.size();
  if (k == 0 || m == 0) throw Error("normal_locus_in_span: empty span or side basis");
  const std::size_t top = common_degree(span_gens, "span") + common_degree(side_basis, "side basis");
  if (top > gb.complete_through()) {
    throw DegreeBoundError("degree exceeds completeness bound (" + std::to_string(top) + " > " +
                           std::to_string(gb.complete_through()) + ")");
  }
  const DegreeCoordinates coords(gb, top);

  // Column h: a h; column m + h: h a; both linear in the parameters.
  ParamMatrix full(coords.dim(), 2 * m, ParamPoly(k));
  for (std::size_t c = 0; c < k; ++c) {
    const ParamPoly param = ParamPoly::variable(k, c);
    for (std::size_t h = 0; h < m; ++h) {
      const ScalarVector left = coords.coordinates(span_gens[c] * side_basis[h]);
      const ScalarVector right = coords.coordinates(side_basis[h] * span_gens[c]);
      for (std::size_t r = 0; r < coords.dim(); ++r) {
        if (!left[r].is_zero()) full(r, h) += param * left[r];
        if (!right[r].is_zero()) full(r, m + h) += param * right[r];
      }
    }
  }

  NormalLocusReport report;
  report.num_params = k;
  report.minor_order = m + 1;
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < full.rows(); ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < full.cols(); ++c) zero = zero && full(r, c).is_zero();
    if (zero) continue;
    bool duplicate = false;
    for (std::size_t prev : keep) {
      bool same = true;
      for (std::size_t c = 0; c < full.cols() && same; ++c) same = full(r, c) == full(prev, c);
      duplicate = duplicate || same;
    }
    if (!duplicate) keep.push_back(r);
  }
  ParamMatrix mat(keep.size(), full.cols(), ParamPoly(k));
  for (std::size_t r = 0; r < keep.size(); ++r) {
    report.row_words.push_back(coords.basis()[keep[r]]);
    for (std::size_t c = 0; c < full.cols(); ++c) mat(r, c) = full(keep[r], c);
  }

  if (report.minor_order <= mat.rows() && report.minor_order <= mat.cols()) {
    const std::vector<ParamPoly> minors = parametric_minors(mat, report.minor_order);
    report.total_minors = minors.size();
    std::set<std::string> seen;
    for (const auto& p : minors) {
      if (p.is_zero()) continue;
      if (seen.insert(p.str()).second) report.distinct_nonzero_minors.push_back(p);
    }
  }

  for (const auto& point : grid) {
    if (point.size() != k) throw Error("grid point has wrong number of parameters");
    LocusPoint lp;
    lp.point = point;
    const ScalarMatrix spec = specialize(mat, point);
    if (rank(spec) >= report.minor_order) {
      // Greedy independent columns, then independent rows among them.
      MinorCertificate cert;
      EchelonBasis col_basis(spec.rows());
      for (std::size_t c = 0; c < spec.cols() && cert.cols.size() < report.minor_order; ++c) {
        ScalarVector col(spec.rows());
        for (std::size_t r = 0; r < spec.rows(); ++r) col[r] = spec(r, c);
        if (col_basis.insert(col)) cert.cols.push_back(c);
      }
      EchelonBasis row_basis(report.minor_order);
      for (std::size_t r = 0; r < spec.rows() && cert.rows.size() < report.minor_order; ++r) {
        ScalarVector row;
        for (std::size_t c : cert.cols) row.push_back(spec(r, c));
        if (row_basis.insert(row)) cert.rows.push_back(r);
      }
      ParamMatrix sub(report.minor_order, report.minor_order, ParamPoly(k));
      for (std::size_t a = 0; a < report.minor_order; ++a)
        for (std::size_t b = 0; b < report.minor_order; ++b) sub(a, b) = mat(cert.rows[a], cert.cols[b]);
      cert.minor = parametric_minors(sub, report.minor_order).front();
      cert.value = cert.minor.evaluate(point);
      if (cert.value.is_zero()) throw Error("normal_locus_in_span: certificate minor vanished");
      lp.certificate = std::move(cert);
    } else {
      NcPoly a;
      for (std::size_t c = 0; c < k; ++c) a += span_gens[c] * point[c];
      const NormalVerdict v = is_normal(a, gb, side_basis);
      lp.normal = v.normal;
      lp.witness = v.witness;
    }
    report.points.push_back(std::move(lp));
  }
  return report;
}

std::vector<RElement> build_r_elements(const CliffordPresentation& a, const DiagonalAutomorphism& tau,
                                       const GroebnerData& gb) {
  if (tau.n() != a.n() || !(a.mu == mu_from_lambdas(tau.lambdas()))) throw Error("mu/tau mismatch");
  std::vector<RElement> out;
  for (std::size_t i = 1; i <= a.n(); ++i)
    for (std::size_t j = i; j <= a.n(); ++j) {
      RElement r;
      r.i = i;
      r.j = j;
      r.raw = NcPoly::monomial(Word{static_cast<unsigned>(i), static_cast<unsigned>(j)}, tau.lambda(i));
      r.raw.add_term(Word{static_cast<unsigned>(j), static_cast<unsigned>(i)}, tau.lambda(j));
      r.value = normal_form(r.raw, gb);
      out.push_back(std::move(r));
    }
  return out;
}

Scalar nu(const MuMatrix& mu, std::size_t i, std::size_t j, std::size_t k, std::size_t p) {
  return mu(i, k).pow(2) * mu(j, p).pow(2);
}

bool nu_cocycle_holds(const MuMatrix& mu) {
  const std::size_t n = mu.n();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t p = 1; p <= n; ++p)
          for (std::size_t a = 1; a <= n; ++a)
            for (std::size_t b = 1; b <= n; ++b)
              if (nu(mu, i, j, k, p) * nu(mu, k, p, a, b) != nu(mu, i, j, a, b)) return false;
  return true;
}

bool TheoremReport::overall() const {
  return criterion.is_twist && lambdas_consistent && presentation_matches && relation_count == n * (n - 1) / 2 &&
         r_span_equals_y_span && normality_pass && dagger_pass && nu_cocycle && r_hilbert_pass && c_twist;
}

namespace {

bool same_span(const std::vector<ScalarVector>& a, const std::vector<ScalarVector>& b, std::size_t dim) {
  EchelonBasis ea(dim), eb(dim);
  for (const auto& v : a) ea.insert(v);
  for (const auto& v : b) eb.insert(v);
  for (const auto& v : a)
    if (!eb.contains(v)) return false;
  for (const auto& v : b)
    if (!ea.contains(v)) return false;
  return true;
}

}  // namespace

TheoremReport verify_twist_theorem(const std::vector<ScalarMatrix>& b_data, const DiagonalAutomorphism& tau,
                                   std::size_t through) {
  if (through < 4) throw Error("verify_twist_theorem needs a degree bound of at least 4");
  const std::size_t n = b_data.size();
  if (tau.n() != n) throw Error("tau has " + std::to_string(tau.n()) + " entries, expected " + std::to_string(n));

  TheoremReport rep;
  rep.n = n;
  rep.through = through;
  rep.lambdas = tau.lambdas();

  const CliffordPresentation b = build_gca(b_data);
  const BasePointVerdict b_points = base_point_free_check(quadric_system_of(b), std::max<std::size_t>(through, 3));
  if (!b_points.base_point_free) rep.warnings.push_back("quadric system of B has base points within the bound");
  if (b_points.warning) rep.warnings.push_back(*b_points.warning);

  const MuMatrix mu = mu_from_lambdas(tau.lambdas());
  rep.criterion = twist_criterion(mu);
  rep.lambdas_consistent = rep.criterion.is_twist;
  for (std::size_t i = 1; i <= n && rep.lambdas_consistent; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (rep.criterion.lambdas[j - 1] * tau.lambda(i) != rep.criterion.lambdas[i - 1] * tau.lambda(j)) {
        rep.lambdas_consistent = false;
      }

  // A as the twist of B, and as the GSCA on M_k = N_k diag(lambda).
  const PresentedAlgebra a_alg = twist_presentation(b.algebra(), tau);
  std::vector<MuSymmetricMatrix> ms;
  for (const auto& nk : b_data) {
    ScalarMatrix mk(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mk(i, j) = nk(i, j) * tau.lambda(j + 1);
    ms.emplace_back(std::move(mk), mu);
  }
  const CliffordPresentation a = build_gsca(mu, ms);
  rep.presentation_matches = same_relation_span(a_alg, a.algebra());
  rep.relation_count = a.x_relations.size();

  const GroebnerData gb_a = groebner(a_alg, through);
  const GroebnerData gb_b = groebner(b.algebra(), through);
  const std::vector<RElement> rs = build_r_elements(a, tau, gb_a);
  std::vector<const RElement*> nonzero;
  for (const auto& r : rs) {
    if (r.is_zero()) {
      rep.zero_r.emplace_back(r.i, r.j);
    } else {
      nonzero.push_back(&r);
    }
  }

  {
    const DegreeCoordinates c2(gb_a, 2);
    std::vector<ScalarVector> r_vecs, y_vecs;
    for (const auto& r : rs) r_vecs.push_back(c2.coordinates(r.value));
    for (const auto& y : a.y_expressions) y_vecs.push_back(c2.coordinates(y));
    rep.r_span_equals_y_span = same_span(r_vecs, y_vecs, c2.dim());
  }

  // (1) x_k r_ij = mu_ki mu_kj r_ij x_k.
  {
    const DegreeCoordinates c3(gb_a, 3);
    rep.normality_pass = true;
    for (std::size_t k = 1; k <= n; ++k) {
      const NcPoly xk = NcPoly::generator(static_cast<unsigned>(k));
      for (const RElement* r : nonzero) {
        NormalityScalar ns{k, r->i, r->j, std::nullopt, mu(k, r->i) * mu(k, r->j), false};
        const ScalarVector lhs = c3.coordinates(xk * r->value);
        const ScalarVector rhs = c3.coordinates(r->value * xk);
        const std::vector<ScalarVector> basis{rhs};
        if (!is_zero_vector(rhs)) {
          if (auto s = solve_in_span(lhs, basis)) ns.recovered = (*s)[0];
        }
        ns.pass = ns.recovered && *ns.recovered == ns.expected &&
                  normal_form(xk * r->value - r->value * xk * ns.expected, gb_a).is_zero();
        rep.normality_pass = rep.normality_pass && ns.pass;
        rep.normality_scalars.push_back(std::move(ns));
      }
    }
  }

  // (2) r_ij r_kp = mu_ik^2 mu_jp^2 r_kp r_ij.
  rep.dagger_pass = true;
  for (const RElement* r : nonzero)
    for (const RElement* s : nonzero) {
      DaggerCheck dc{r->i, r->j, s->i, s->j, mu(r->i, s->i).pow(2) * mu(r->j, s->j).pow(2), false};
      dc.pass = normal_form(r->value * s->value - s->value * r->value * dc.factor, gb_a).is_zero();
      rep.dagger_pass = rep.dagger_pass && dc.pass;
      rep.dagger_checks.push_back(std::move(dc));
    }

  // (3)
  rep.nu_cocycle = nu_cocycle_holds(mu);

  // (4) R is a skew polynomial ring on n generators of degree 2.
  rep.r_dims_computed = subalgebra_basis(gb_a, a.y_expressions, through).dims();
  rep.r_dims_expected = weighted_polynomial_dims(n, 2, through);
  rep.r_hilbert_pass = rep.r_dims_computed == rep.r_dims_expected;

  // (5) c_ij = tau(X_i X_j + X_j X_i) and the tau^2-twisted commutation in B.
  {
    const LinearMap tau_map = tau.as_linear_map();
    const LinearMap tau_sq = tau.power(2).as_linear_map();
    const DegreeCoordinates c2(gb_b, 2);
    std::vector<NcPoly> cs;
    std::vector<IndexPair> keys;
    bool scales_ok = true;
    for (const auto& r : rs) {
      const NcPoly e = skew_anticommutator(MuMatrix::ones(n), r.i, r.j);
      const NcPoly c = apply_linear(tau_map, e);
      CTwistCheck cc{r.i, r.j, std::nullopt, false, false};
      const ScalarVector ev = c2.coordinates(e);
      const ScalarVector cv = c2.coordinates(c);
      if (is_zero_vector(ev)) {
        cc.pass = is_zero_vector(cv);
      } else if (auto s = solve_in_span(cv, std::vector<ScalarVector>{ev})) {
        cc.scale = (*s)[0];
        cc.pass = !cc.scale->is_zero();
      }
      cc.untwists_to_r = untwist(r.raw, tau) == c;
      cc.pass = cc.pass && cc.untwists_to_r;
      scales_ok = scales_ok && cc.pass;
      rep.c_checks.push_back(std::move(cc));
      cs.push_back(c);
      keys.emplace_back(r.i, r.j);
    }
    rep.c_commutation_pass = true;
    for (std::size_t u = 0; u < cs.size(); ++u)
      for (std::size_t w = 0; w < cs.size(); ++w) {
        const Scalar factor = nu(mu, keys[u].first, keys[u].second, keys[w].first, keys[w].second);
        const NcPoly lhs = cs[u] * apply_linear(tau_sq, cs[w]);
        const NcPoly rhs = cs[w] * apply_linear(tau_sq, cs[u]) * factor;
        if (!normal_form(lhs - rhs, gb_b).is_zero()) rep.c_commutation_pass = false;
      }
    rep.c_twist = scales_ok && rep.c_commutation_pass;
  }
  return rep;
}

}  // namespace skewcliff
