#include "lagrangelab/report.hpp"

#include <algorithm>

#include "lagrangelab/errors.hpp"
#include "lagrangelab/gale.hpp"

namespace lagrangelab {

std::optional<bool> LagrangianReport::delzant() const {
  if (!polytope_side.delzant) return std::nullopt;
  return polytope_side.delzant->is_delzant;
}

std::optional<Rational> LagrangianReport::fano_c() const {
  if (!polytope_side.computed || !polytope_side.fano.fano) return std::nullopt;
  return polytope_side.fano.fano->c;
}

namespace {

bool has_circle_homology(const TopologyExpr& e) {
  using Kind = TopologyExpr::Kind;
  switch (e.kind) {
    case Kind::Sphere:
      return e.value == 1;
    case Kind::Torus:
      return true;
    case Kind::SurfaceGenus:
      return e.value > 0;
    case Kind::Product:
    case Kind::ConnSum:
    case Kind::Disjoint:
      for (const auto& p : e.parts)
        if (has_circle_homology(p)) return true;
      return false;
    case Kind::Unknown:
      return false;
  }
  return false;
}

void run_polytope_side(LagrangianReport& r, const CheckOptions& opt) {
  const auto& p = r.polytope;
  auto& side = r.polytope_side;
  if (r.quadrics.variables() > opt.polytope_facet_limit) {
    side.skipped_reason = std::to_string(r.quadrics.variables()) + " facets exceeds the polytope-side limit of " +
                          std::to_string(opt.polytope_facet_limit);
    return;
  }
  if (enumeration_cost(p) > opt.polytope_subset_budget) {
    side.skipped_reason = "vertex enumeration needs " + std::to_string(enumeration_cost(p)) + " subsets";
    return;
  }
  side.computed = true;
  side.vertices = enumerate_vertices(p);
  side.flags = structural_flags(p, side.vertices);
  if (side.flags.generic_simple) side.delzant = delzant_check(p, side.vertices);
  side.fano = fano_check(p);
  if (side.flags.bounded && side.flags.generic_simple) {
    try {
      side.connectivity = connectivity_bound(p, side.vertices);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge) throw;
      r.diagnostics.push_back(std::string("connectivity bound skipped: ") + e.what());
    }
  }
}

void compare_flags(const LagrangianReport& r) {
  const auto& pf = r.polytope_side.flags;
  const auto& qf = r.quadric_side.flags;
  if (pf.bounded != qf.bounded) fail(ErrorKind::Invariant, "polytope and quadric sides disagree on boundedness");
  if (!pf.bounded) return;
  if (pf.nonempty != qf.nonempty) fail(ErrorKind::Invariant, "polytope and quadric sides disagree on emptiness");
  if (pf.generic_simple != qf.smooth)
    fail(ErrorKind::Invariant, "generic presentation does not match smoothness of the quadrics");
  // The two notions only coincide for generic presentations.
  if (pf.generic_simple && pf.irredundant != qf.connected)
    fail(ErrorKind::Invariant, "irredundant presentation does not match connectedness of the quadrics");
}

void reject_if_degenerate(const QuadricFlags& f) {
  if (!f.nonempty) fail(ErrorKind::Structural, "rejected: the polytope is empty");
  if (!f.bounded) fail(ErrorKind::Structural, "rejected: the polyhedron is unbounded");
  if (!f.smooth) fail(ErrorKind::Structural, "rejected: the presentation is not generic (singular fiber)");
  if (!f.connected) fail(ErrorKind::Structural, "rejected: the presentation is redundant (disconnected fiber)");
}

LagrangianReport run(Input input, PolytopePresentation p, QuadricSystem q, const CheckOptions& opt) {
  LagrangianReport r;
  r.input = std::move(input);
  r.polytope = std::move(p);
  r.quadrics = std::move(q);

  QuadricAnalysis qa = analyze_quadrics(r.quadrics);
  r.quadric_side.flags = qa.flags;
  r.quadric_side.column_classes = qa.classes.vectors.cols();
  r.quadric_side.class_vertices = qa.vertices.size();

  run_polytope_side(r, opt);
  if (r.polytope_side.computed) compare_flags(r);
  reject_if_degenerate(qa.flags);

  r.quadric_side.embedding = embedding_check(r.quadrics, qa);
  if (auto d = r.delzant(); d && *d != r.embedded())
    fail(ErrorKind::Invariant, "Delzant verdict differs from the lattice embedding test");

  r.lattice = lattice_data(r.quadrics);
  auto actions = sign_actions(r.quadrics, r.lattice);
  r.maslov = maslov_report(r.quadrics, r.lattice);

  if (r.polytope_side.computed) {
    if (r.delzant().value_or(false) && r.polytope_side.flags.primitive_normals) {
      auto fc = r.fano_c();
      if (fc.has_value() != r.maslov.mono_c.has_value() || (fc && *fc != *r.maslov.mono_c))
        fail(ErrorKind::Invariant, "Fano verdict differs from monotonicity of the quadrics");
    }
    if (!r.polytope_side.fano.diagnostic.empty()) r.diagnostics.push_back(r.polytope_side.fano.diagnostic);
  } else {
    r.diagnostics.push_back("polytope side skipped: " + r.polytope_side.skipped_reason);
  }

  FiberContext ctx{qa.flags.bounded, qa.flags.smooth, qa.flags.connected, r.polytope_side.connectivity};
  r.fiber = classify_fiber(r.quadrics, ctx);
  r.fibration = fibration_descriptor(r.quadrics, actions, r.fiber, r.maslov.mu);
  if (has_circle_homology(r.fiber))
    r.diagnostics.push_back("N computed from base generators; fiber classes contribute 0");

  r.isotopy = pigeonhole_report(std::vector<IsotopyInput>{isotopy_input(r, "input")});

  if (opt.numeric && r.quadrics.variables() <= opt.numeric_variable_limit) {
    r.numeric = numeric_check(r.quadrics, r.lattice, opt.seed, opt.tol);
    if (!r.numeric->ok) r.diagnostics.push_back("numerical check of psi exceeded its tolerances");
  }
  return r;
}

}  // namespace

LagrangianReport check(const Input& input, const CheckOptions& opt) {
  if (const auto* pp = std::get_if<PolytopePresentation>(&input)) {
    validate(*pp);
    PolytopePresentation p = opt.normalize_normals ? normalize_normals(*pp) : *pp;
    QuadricSystem q = polytope_to_quadrics(p);
    return run(input, std::move(p), std::move(q), opt);
  }
  const auto& q = std::get<QuadricSystem>(input);
  validate(q);
  // Recovering the polytope needs a kernel of an n x n system; skip it when
  // the polytope side would not run anyway.
  PolytopePresentation p;
  if (q.variables() <= opt.polytope_facet_limit) p = quadrics_to_polytope(q);
  return run(input, std::move(p), q, opt);
}

LagrangianReport check_pair(const QuadricSystem& q, const PolytopePresentation& p, const CheckOptions& opt) {
  validate(q);
  validate(p);
  if (!(canonical_form(q) == polytope_to_quadrics(p)))
    fail(ErrorKind::Invariant, "quadric system and polytope are not Gale dual");
  return run(q, p, q, opt);
}

IsotopyInput isotopy_input(const LagrangianReport& r, std::string label) {
  IsotopyInput in;
  in.label = std::move(label);
  in.fiber = r.fiber;
  in.base_dim = r.fibration.base_torus_dim;
  in.trivial = r.fibration.trivial_hint == TrivialHint::Trivial;
  in.orientable = r.fibration.orientable;
  in.embedded = r.embedded();
  in.ambient_n = r.ambient_dim();
  in.minimal_maslov = r.maslov.minimal_maslov;
  return in;
}

IsotopyVerdict pigeonhole_report(const std::vector<LagrangianReport>& family) {
  std::vector<IsotopyInput> in;
  for (std::size_t i = 0; i < family.size(); ++i) in.push_back(isotopy_input(family[i], std::to_string(i)));
  return pigeonhole_report(in);
}

std::string render_total_space(const LagrangianReport& r) {
  const auto base = static_cast<long>(r.fibration.base_torus_dim);
  if (r.fibration.trivial_hint == TrivialHint::Trivial) {
    TopologyExpr total = canonicalize(TopologyExpr::product({r.fiber, TopologyExpr::torus(base)}));
    // Written with the torus last, as in "#_5(S^3 × S^4) × T^3".
    if (total.kind == TopologyExpr::Kind::Product)
      std::stable_partition(total.parts.begin(), total.parts.end(),
                            [](const TopologyExpr& e) { return e.kind != TopologyExpr::Kind::Torus; });
    return render(total);
  }
  return render(r.fiber) + " ×_D T^" + std::to_string(base);
}

}  // namespace lagrangelab
