#include "lagrangelab/io.hpp"

#include "lagrangelab/errors.hpp"
#include "lagrangelab/gale.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

namespace lagrangelab {

using nlohmann::ordered_json;

namespace {

// Start offsets of every value in a document that is already known to be
// valid JSON, keyed by JSON pointer.
class Locator {
 public:
  explicit Locator(std::string_view text) : t_(text) { value(""); }

  [[nodiscard]] std::string where(std::string ptr) const {
    auto it = pos_.find(ptr);
    while (it == pos_.end() && !ptr.empty()) {
      ptr = ptr.substr(0, ptr.rfind('/'));
      it = pos_.find(ptr);
    }
    std::size_t off = it == pos_.end() ? 0 : it->second;
    return line_col(t_, off);
  }

  static std::string line_col(std::string_view t, std::size_t off) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < off && i < t.size(); ++i) {
      if (t[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
  }

 private:
  void ws() {
    while (i_ < t_.size() && (t_[i_] == ' ' || t_[i_] == '\n' || t_[i_] == '\r' || t_[i_] == '\t')) ++i_;
  }

  std::string string() {
    std::string out;
    ++i_;
    while (i_ < t_.size() && t_[i_] != '"') {
      if (t_[i_] == '\\') ++i_;
      if (i_ < t_.size()) out += t_[i_++];
    }
    ++i_;
    return out;
  }

  void value(const std::string& ptr) {
    ws();
    pos_[ptr] = i_;
    if (i_ >= t_.size()) return;
    char c = t_[i_];
    if (c == '{') {
      ++i_;
      ws();
      while (i_ < t_.size() && t_[i_] != '}') {
        std::string key = string();
        ws();
        ++i_;  // ':'
        value(ptr + "/" + key);
        ws();
        if (i_ < t_.size() && t_[i_] == ',') ++i_;
        ws();
      }
      ++i_;
    } else if (c == '[') {
      ++i_;
      ws();
      std::size_t idx = 0;
      while (i_ < t_.size() && t_[i_] != ']') {
        value(ptr + "/" + std::to_string(idx++));
        ws();
        if (i_ < t_.size() && t_[i_] == ',') ++i_;
        ws();
      }
      ++i_;
    } else if (c == '"') {
      string();
    } else {
      while (i_ < t_.size() && t_[i_] != ',' && t_[i_] != ']' && t_[i_] != '}' && t_[i_] != ' ' &&
             t_[i_] != '\n' && t_[i_] != '\r' && t_[i_] != '\t')
        ++i_;
    }
  }

  std::string_view t_;
  std::size_t i_ = 0;
  std::map<std::string, std::size_t> pos_;
};

struct Reader {
  const ordered_json& doc;
  Locator loc;

  [[noreturn]] void error(const std::string& ptr, const std::string& msg) const {
    fail(ErrorKind::Input, loc.where(ptr) + ": " + msg);
  }

  const ordered_json& at(const std::string& key) const {
    if (!doc.contains(key)) error("", "missing field \"" + key + "\"");
    return doc.at(key);
  }

  Integer integer(const ordered_json& v, const std::string& ptr) const {
    if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(v.get<std::uint64_t>()) : Integer(v.get<std::int64_t>());
    if (v.is_string()) {
      Rational q;
      try {
        q = parse_rational(v.get<std::string>());
      } catch (const Error& e) {
        error(ptr, e.what());
      }
      if (!is_integral(q)) error(ptr, "expected an integer");
      return numerator(q);
    }
    error(ptr, "expected an integer");
  }

  Rational rational(const ordered_json& v, const std::string& ptr) const {
    if (v.is_number_integer()) return Rational(integer(v, ptr));
    if (v.is_string()) {
      try {
        return parse_rational(v.get<std::string>());
      } catch (const Error& e) {
        error(ptr, e.what());
      }
    }
    error(ptr, "expected an integer or a \"p/q\" string");
  }

  // Rows of equal positive length.
  std::vector<IntVector> int_rows(const std::string& key) const {
    const auto& m = at(key);
    const std::string base = "/" + key;
    if (!m.is_array() || m.empty()) error(base, "\"" + key + "\" must be a nonempty array of arrays");
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::string rp = base + "/" + std::to_string(i);
      if (!m[i].is_array() || m[i].empty()) error(rp, "expected a nonempty array of integers");
      if (!rows.empty() && m[i].size() != rows.front().size())
        error(rp, "row has " + std::to_string(m[i].size()) + " entries, expected " +
                      std::to_string(rows.front().size()));
      IntVector row;
      for (std::size_t j = 0; j < m[i].size(); ++j) row.push_back(integer(m[i][j], rp + "/" + std::to_string(j)));
      rows.push_back(std::move(row));
    }
    return rows;
  }

  RatVector rationals(const std::string& key, std::size_t expected, const char* what) const {
    const auto& v = at(key);
    const std::string base = "/" + key;
    if (!v.is_array()) error(base, "\"" + key + "\" must be an array");
    if (v.size() != expected)
      error(base, "\"" + key + "\" has " + std::to_string(v.size()) + " entries but there are " +
                      std::to_string(expected) + " " + what);
    RatVector out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational(v[i], base + "/" + std::to_string(i)));
    return out;
  }
};

ordered_json rat(const Rational& q) { return to_string(q); }

ordered_json integer_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return z.convert_to<std::int64_t>();
  return z.str();
}

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json a = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
    a.push_back(std::move(row));
  }
  return a;
}

ordered_json matrix_json(const RatMatrix& m) {
  ordered_json a = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat(m(r, c)));
    a.push_back(std::move(row));
  }
  return a;
}

template <class V>
ordered_json vec_json(const V& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
      a.push_back(rat(x));
    } else if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Integer>) {
      a.push_back(integer_json(x));
    } else {
      a.push_back(x);
    }
  }
  return a;
}

// 1-based indices for anything a reader would match against u_j or facets.
ordered_json one_based(const std::vector<std::size_t>& v) {
  ordered_json a = ordered_json::array();
  for (auto i : v) a.push_back(i + 1);
  return a;
}

ordered_json polytope_json(const PolytopePresentation& p) {
  ordered_json normals = ordered_json::array();
  for (std::size_t i = 0; i < p.facets(); ++i) normals.push_back(vec_json(p.normals.column(i)));
  return {{"kind", "polytope"}, {"normals", normals}, {"offsets", vec_json(p.offsets)}};
}

ordered_json quadrics_json(const QuadricSystem& q) {
  return {{"kind", "quadrics"}, {"gamma", matrix_json(q.gamma)}, {"delta", vec_json(q.delta)}};
}

ordered_json input_object(const Input& input) {
  if (const auto* p = std::get_if<PolytopePresentation>(&input)) return polytope_json(*p);
  return quadrics_json(std::get<QuadricSystem>(input));
}

template <class T>
ordered_json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, Rational>) {
    return rat(*v);
  } else if constexpr (std::is_same_v<T, Integer>) {
    return integer_json(*v);
  } else {
    return *v;
  }
}

ordered_json isotopy_json(const IsotopyVerdict& v) {
  return {{"dim_L", v.dim_l},
          {"applicable", v.applicable},
          {"h1_mod2_rank", opt_json(v.h1_mod2_rank)},
          {"smooth_class_bound", v.smooth_class_bound ? integer_json(*v.smooth_class_bound) : ordered_json("infinite")},
          {"distinct_maslov_values", vec_json(v.distinct_maslov_values)},
          {"collision", v.collision},
          {"note", v.note}};
}

ordered_json report_object(const LagrangianReport& r) {
  ordered_json j;
  j["input"] = input_object(r.input);
  if (r.polytope.facets() > 0) {
    j["polytope"] = polytope_json(r.polytope);
  } else {
    j["polytope"] = nullptr;
  }
  j["quadrics"] = quadrics_json(r.quadrics);

  const auto& ps = r.polytope_side;
  ordered_json pj;
  pj["computed"] = ps.computed;
  if (!ps.computed) {
    pj["skipped_reason"] = ps.skipped_reason;
  } else {
    pj["vertices"] = ps.vertices.size();
    pj["flags"] = {{"nonempty", ps.flags.nonempty},
                   {"bounded", ps.flags.bounded},
                   {"generic_simple", ps.flags.generic_simple},
                   {"irredundant", ps.flags.irredundant},
                   {"primitive_normals", ps.flags.primitive_normals}};
    pj["delzant"] = ps.delzant ? ordered_json(ps.delzant->is_delzant) : ordered_json(nullptr);
    if (ps.delzant && ps.delzant->witness)
      pj["delzant_witness_active_facets"] = one_based(ps.vertices[*ps.delzant->witness].active);
    if (ps.fano.fano) {
      pj["fano"] = {{"c", rat(ps.fano.fano->c)}, {"translation", vec_json(ps.fano.fano->translation)}};
    } else {
      pj["fano"] = nullptr;
      if (!ps.fano.diagnostic.empty()) pj["fano_diagnostic"] = ps.fano.diagnostic;
    }
    pj["connectivity"] = opt_json(ps.connectivity);
  }
  j["polytope_side"] = pj;

  const auto& qs = r.quadric_side;
  j["quadric_side"] = {{"flags",
                        {{"nonempty", qs.flags.nonempty},
                         {"bounded", qs.flags.bounded},
                         {"smooth", qs.flags.smooth},
                         {"connected", qs.flags.connected}}},
                       {"column_classes", qs.column_classes},
                       {"class_vertices", qs.class_vertices},
                       {"embedded", qs.embedding.embedded}};

  j["delzant"] = opt_json(r.delzant());
  j["embedded"] = r.embedded();
  j["fano"] = opt_json(r.fano_c());
  j["monotone"] = opt_json(r.monotone_c());

  j["lattice"] = {{"basis_columns", one_based(r.lattice.basis_columns)},
                  {"dual_basis", matrix_json(r.lattice.dual_basis)},
                  {"lattice_basis", matrix_json(r.lattice.lattice_basis)}};
  const auto& m = r.maslov;
  j["maslov"] = {{"t", vec_json(m.t)},
                 {"orientation", m.orientation},
                 {"mu", vec_json(m.mu)},
                 {"area_over_pi", vec_json(m.area_half_pi)},
                 {"minimal_maslov", integer_json(m.minimal_maslov)},
                 {"monotone", m.monotone},
                 {"c", opt_json(m.mono_c)}};
  j["fiber"] = render(r.fiber);
  j["total_space"] = render_total_space(r);
  ordered_json flips = ordered_json::array();
  for (const auto& a : r.fibration.actions) {
    std::size_t count = 0;
    for (bool b : a.flips) count += b ? 1 : 0;
    flips.push_back(count);
  }
  j["fibration"] = {{"base_torus_dim", r.fibration.base_torus_dim},
                    {"flipped_coordinates", flips},
                    {"generator_orientation_preserving", r.fibration.generator_orientation_preserving},
                    {"orientable", r.fibration.orientable},
                    {"bundle", to_string(r.fibration.trivial_hint)}};
  j["isotopy"] = isotopy_json(r.isotopy);
  if (r.numeric) {
    j["numeric"] = {{"membership_residual", r.numeric->membership_residual},
                    {"lagrangian_residual", r.numeric->lagrangian_residual},
                    {"liouville_relative_error", r.numeric->liouville_relative_error},
                    {"ok", r.numeric->ok}};
  } else {
    j["numeric"] = nullptr;
  }
  j["diagnostics"] = r.diagnostics;
  return j;
}

ordered_json with_schema(ordered_json body) {
  ordered_json j;
  j["schema"] = 1;
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string bundle_text(const FibrationDescriptor& f) {
  if (!f.orientable) return "non-orientable";
  return f.trivial_hint == TrivialHint::Trivial ? "orientable, trivial" : "orientable, triviality unknown";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class V>
std::string tuple_text(const V& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(to_string(x));
  return "(" + join(parts, ", ") + ")";
}

std::string opt_text(const std::optional<Rational>& q) { return q ? "c = " + to_string(*q) : "no"; }

ordered_json params_json(const ParamPoint& p) {
  ordered_json o = ordered_json::object();
  for (const auto& [k, v] : p) o[k] = v;
  return o;
}

}  // namespace

Input parse_input(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    std::string what = e.what();
    if (auto p = what.find("parse error"); p != std::string::npos) what = what.substr(p);
    if (auto p = what.find(": "); p != std::string::npos) what = what.substr(p + 2);
    fail(ErrorKind::Input, Locator::line_col(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + what);
  }
  Reader rd{doc, Locator(text)};
  if (!doc.is_object()) rd.error("", "expected a JSON object");
  if (doc.contains("schema") && !(doc["schema"].is_number_integer() && doc["schema"].get<int>() == 1))
    rd.error("/schema", "unsupported schema version");
  const auto& kind = rd.at("kind");
  if (!kind.is_string()) rd.error("/kind", "\"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  for (const auto& [key, v] : doc.items()) {
    static const std::map<std::string, std::vector<std::string>> allowed = {
        {"polytope", {"schema", "kind", "normals", "offsets", "name"}},
        {"quadrics", {"schema", "kind", "gamma", "delta", "name"}}};
    auto it = allowed.find(k);
    if (it == allowed.end()) rd.error("/kind", "unknown kind \"" + k + "\" (expected polytope or quadrics)");
    if (std::find(it->second.begin(), it->second.end(), key) == it->second.end())
      rd.error("/" + key, "unexpected field \"" + key + "\"");
  }
  if (k == "polytope") {
    auto normals = rd.int_rows("normals");
    PolytopePresentation p;
    const std::size_t n = normals.size(), dim = normals.front().size();
    p.normals = IntMatrix(dim, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < dim; ++r) p.normals(r, i) = normals[i][r];
    p.offsets = rd.rationals("offsets", n, "normals");
    return p;
  }
  auto rows = rd.int_rows("gamma");
  QuadricSystem q;
  q.gamma = IntMatrix::from_rows(rows, rows.front().size());
  q.delta = rd.rationals("delta", rows.size(), "rows in gamma");
  return q;
}

std::string input_json(const Input& input) { return with_schema(input_object(input)).dump(2) + "\n"; }

std::string report_json(const LagrangianReport& r) { return with_schema(report_object(r)).dump(2) + "\n"; }

std::string report_text(const LagrangianReport& r) {
  std::ostringstream os;
  os << "quadrics: " << r.quadrics.equations() << " x " << r.quadrics.variables() << ", delta = " << tuple_text(r.quadrics.delta)
     << "\n";
  const auto& ps = r.polytope_side;
  if (ps.computed) {
    os << "polytope: dimension " << r.polytope.dim() << ", " << r.polytope.facets() << " facets, " << ps.vertices.size()
       << " vertices\n";
    os << "  simple " << yes_no(ps.flags.generic_simple) << ", irredundant " << yes_no(ps.flags.irredundant)
       << ", primitive normals " << yes_no(ps.flags.primitive_normals) << "\n";
    os << "  Delzant: " << (ps.delzant ? yes_no(ps.delzant->is_delzant) : "n/a") << "\n";
    os << "  Fano: " << (ps.fano.fano ? "c = " + to_string(ps.fano.fano->c) : "no") << "\n";
    if (ps.connectivity) os << "  any " << *ps.connectivity << " facets meet\n";
  } else {
    os << "polytope side skipped: " << ps.skipped_reason << "\n";
  }
  os << "quadric side: " << r.quadric_side.column_classes << " column classes, " << r.quadric_side.class_vertices
     << " class vertices\n";
  os << "embedded: " << yes_no(r.embedded()) << "\n";
  os << "monotone: " << opt_text(r.monotone_c()) << "\n";
  os << "lattice basis columns:";
  for (auto c : r.lattice.basis_columns) os << " " << c + 1;
  if (r.lattice.basis_columns.empty()) os << " none, using the Hermite basis";
  os << "\n";
  os << "t = " << tuple_text(r.maslov.t) << "\n";
  os << "mu = " << tuple_text(r.maslov.mu) << "\n";
  os << "minimal Maslov number N = " << r.maslov.minimal_maslov << "\n";
  os << "fiber: " << render(r.fiber) << "\n";
  os << "total space: " << render_total_space(r) << "\n";
  os << "fibration: " << bundle_text(r.fibration) << "\n";
  os << "isotopy: " << r.isotopy.note << "\n";
  if (r.numeric) {
    os << "numeric: membership " << r.numeric->membership_residual << ", lagrangian " << r.numeric->lagrangian_residual
       << ", liouville " << r.numeric->liouville_relative_error << (r.numeric->ok ? " (ok)" : " (FAILED)") << "\n";
  }
  for (const auto& d : r.diagnostics) os << "note: " << d << "\n";
  return os.str();
}

namespace {

struct GaleView {
  PolytopePresentation polytope;
  QuadricSystem quadrics;
  QuadricSystem canonical;
  ColumnClasses classes;
};

GaleView gale_view(const Input& input) {
  GaleView g;
  if (const auto* p = std::get_if<PolytopePresentation>(&input)) {
    validate(*p);
    g.polytope = *p;
    g.quadrics = polytope_to_quadrics(*p);
  } else {
    g.quadrics = std::get<QuadricSystem>(input);
    validate(g.quadrics);
    g.polytope = quadrics_to_polytope(g.quadrics);
  }
  g.canonical = canonical_form(g.quadrics);
  g.classes = column_classes(g.quadrics.gamma);
  return g;
}

}  // namespace

std::string gale_json(const Input& input) {
  GaleView g = gale_view(input);
  ordered_json classes = ordered_json::array();
  for (std::size_t c = 0; c < g.classes.multiplicity.size(); ++c)
    classes.push_back({{"vector", vec_json(g.classes.vectors.column(c))},
                       {"multiplicity", g.classes.multiplicity[c]},
                       {"columns", one_based(g.classes.members[c])}});
  ordered_json j = {{"polytope", polytope_json(g.polytope)},
                    {"quadrics", quadrics_json(g.quadrics)},
                    {"canonical", quadrics_json(g.canonical)},
                    {"column_classes", classes}};
  return with_schema(j).dump(2) + "\n";
}

std::string gale_text(const Input& input) {
  GaleView g = gale_view(input);
  std::ostringstream os;
  os << "polytope (one normal per facet, offset last):\n";
  for (std::size_t i = 0; i < g.polytope.facets(); ++i)
    os << "  a_" << i + 1 << " = " << tuple_text(g.polytope.normals.column(i)) << ", b = " << to_string(g.polytope.offsets[i])
       << "\n";
  os << "quadrics (gamma | delta):\n";
  for (std::size_t r = 0; r < g.quadrics.equations(); ++r) {
    os << " ";
    for (std::size_t c = 0; c < g.quadrics.variables(); ++c) os << " " << g.quadrics.gamma(r, c);
    os << " | " << to_string(g.quadrics.delta[r]) << "\n";
  }
  os << "canonical form:\n";
  for (std::size_t r = 0; r < g.canonical.equations(); ++r) {
    os << " ";
    for (std::size_t c = 0; c < g.canonical.variables(); ++c) os << " " << g.canonical.gamma(r, c);
    os << " | " << to_string(g.canonical.delta[r]) << "\n";
  }
  os << "column classes:\n";
  for (std::size_t c = 0; c < g.classes.multiplicity.size(); ++c)
    os << "  " << tuple_text(g.classes.vectors.column(c)) << " x " << g.classes.multiplicity[c] << "\n";
  return os.str();
}

std::string topology_text(const LagrangianReport& r) {
  std::ostringstream os;
  os << "fiber: " << render(r.fiber) << "\n";
  if (auto d = dimension(r.fiber)) os << "fiber dimension: " << *d << "\n";
  os << "base: T^" << r.fibration.base_torus_dim << "\n";
  os << "fibration: " << bundle_text(r.fibration) << "\n";
  os << "total space: " << render_total_space(r) << "\n";
  if (r.polytope_side.connectivity)
    os << "any " << *r.polytope_side.connectivity << " facets meet\n";
  return os.str();
}

std::string reproduce_json(const std::string& family, const std::vector<ReproduceRow>& rows) {
  ordered_json table = ordered_json::array();
  for (const auto& row : rows) {
    const auto& r = row.report;
    table.push_back({{"params", params_json(row.params)},
                     {"minimal_maslov", integer_json(r.maslov.minimal_maslov)},
                     {"mu", vec_json(r.maslov.mu)},
                     {"monotone", opt_json(r.monotone_c())},
                     {"embedded", r.embedded()},
                     {"fiber", render(r.fiber)},
                     {"total_space", render_total_space(r)},
                     {"orientable", r.fibration.orientable},
                     {"bundle", to_string(r.fibration.trivial_hint)}});
  }
  return with_schema({{"family", family}, {"rows", table}}).dump(2) + "\n";
}

std::string reproduce_text(const std::string& family, const std::vector<ReproduceRow>& rows) {
  std::ostringstream os;
  os << "family " << family << "\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    os << format_params(row.params) << (row.params.empty() ? "" : ": ") << "N = " << r.maslov.minimal_maslov
       << ", mu = " << tuple_text(r.maslov.mu) << ", " << (r.fibration.orientable ? "orientable" : "non-orientable")
       << ", " << (r.embedded() ? "embedded" : "immersed") << ", " << render_total_space(r) << "\n";
  }
  return os.str();
}

std::string scan_json(const std::string& family, const ScanResult& res) {
  ordered_json groups = ordered_json::array();
  for (const auto& g : res.groups) {
    ordered_json members = ordered_json::array();
    for (std::size_t i = 0; i < g.members.size(); ++i)
      members.push_back({{"params", params_json(g.members[i])}, {"minimal_maslov", integer_json(g.member_maslov[i])}});
    groups.push_back({{"fiber", g.fiber},
                      {"base_torus_dim", g.base_dim},
                      {"ambient_n", g.ambient_n},
                      {"bundle", g.bundle},
                      {"members", members},
                      {"verdict", isotopy_json(g.verdict)}});
  }
  return with_schema({{"family", family}, {"points", res.points}, {"rejected", res.rejected}, {"groups", groups}})
             .dump(2) +
         "\n";
}

std::string scan_text(const std::string& family, const ScanResult& res) {
  std::ostringstream os;
  os << "family " << family << ": " << res.points << " points, " << res.rejected << " outside the constraints\n";
  for (const auto& g : res.groups) {
    os << "\n" << g.fiber << " over T^" << g.base_dim << " in C^" << g.ambient_n << " (" << g.bundle << "), "
       << g.members.size() << " members\n";
    std::vector<std::string> vals;
    for (const auto& v : g.verdict.distinct_maslov_values) vals.push_back(to_string(v));
    os << "  distinct N: {" << join(vals, ", ") << "}\n";
    os << "  smooth class bound: "
       << (g.verdict.smooth_class_bound ? to_string(*g.verdict.smooth_class_bound)
                                        : std::string(g.verdict.applicable ? "infinite" : "n/a"))
       << "\n";
    os << "  " << (g.verdict.collision ? "collision: " : "") << g.verdict.note << "\n";
  }
  return os.str();
}

}  // namespace lagrangelab
