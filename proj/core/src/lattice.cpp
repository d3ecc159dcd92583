#include "lagrangelab/lattice.hpp"

#include "lagrangelab/combinations.hpp"
#include "lagrangelab/errors.hpp"
#include "lagrangelab/normal_forms.hpp"

#include <algorithm>
#include <map>

namespace lagrangelab {

LatticeData lattice_data(const QuadricSystem& q) {
  validate(q);
  const std::size_t d = q.equations();
  LatticeData ld;
  ld.lattice_basis = lattice_basis(q.gamma.transpose());
  if (ld.lattice_basis.rows() != d) fail(ErrorKind::Structural, "columns of gamma do not span");
  const Integer det_l = abs(determinant(ld.lattice_basis));

  // Distinct columns, each represented by its last index.
  std::map<IntVector, std::size_t> last;
  for (std::size_t j = 0; j < q.gamma.cols(); ++j) last[q.gamma.column(j)] = j;
  std::vector<std::size_t> reps;
  for (const auto& [col, j] : last) reps.push_back(j);
  std::sort(reps.begin(), reps.end());

  std::vector<std::size_t> chosen;
  for_each_combination_desc(reps.size(), d, [&](const std::vector<std::size_t>& c) {
    std::vector<std::size_t> idx;
    for (auto i : c) idx.push_back(reps[i]);
    if (abs(determinant(q.gamma.select_cols(idx))) == det_l) {
      chosen = std::move(idx);
      return false;
    }
    return true;
  });
  // Without a unimodular vertex cone there may be no generating column
  // subset, e.g. gamma = (4 5 3). The HNF basis of Lambda then stands in.
  auto inv = chosen.empty() ? inverse(ld.lattice_basis.transpose()) : inverse(q.gamma.select_cols(chosen));
  if (!inv) fail(ErrorKind::Invariant, "selected lattice basis is singular");
  ld.basis_columns = std::move(chosen);
  ld.dual_basis = std::move(*inv);
  ld.full_rank = true;
  return ld;
}

std::vector<SignAction> sign_actions(const QuadricSystem& q, const LatticeData& l) {
  const std::size_t d = q.equations();
  std::vector<SignAction> out;
  for (std::size_t i = 0; i < d; ++i) {
    SignAction a{i, std::vector<bool>(q.gamma.cols())};
    for (std::size_t j = 0; j < q.gamma.cols(); ++j) {
      Rational p = 0;
      for (std::size_t r = 0; r < d; ++r) p += l.dual_basis(i, r) * Rational(q.gamma(r, j));
      if (!is_integral(p)) fail(ErrorKind::Invariant, "deck pairing is not integral");
      a.flips[j] = (numerator(p) % 2) != 0;
    }
    out.push_back(std::move(a));
  }
  return out;
}

namespace {

bool generates(const QuadricSystem& q, const IntMatrix& full, const std::vector<std::size_t>& cols) {
  if (cols.empty()) return false;
  IntMatrix sub = q.gamma.select_cols(cols).transpose();
  auto idx = lattice_index(sub, full);
  return idx && *idx == 1;
}

}  // namespace

EmbeddingResult embedding_check(const QuadricSystem& q, const std::vector<VertexData>& verts) {
  validate(q);
  const IntMatrix full = q.gamma.transpose();
  EmbeddingResult res{true, std::nullopt};
  for (std::size_t v = 0; v < verts.size(); ++v) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < q.gamma.cols(); ++j)
      if (!std::binary_search(verts[v].active.begin(), verts[v].active.end(), j)) support.push_back(j);
    if (!generates(q, full, support)) {
      res = {false, v};
      break;
    }
  }
  return res;
}

EmbeddingResult embedding_check(const QuadricSystem& q, const QuadricAnalysis& qa) {
  const IntMatrix full = qa.classes.vectors.transpose();
  EmbeddingResult res{true, std::nullopt};
  for (std::size_t v = 0; v < qa.vertices.size(); ++v) {
    std::vector<std::size_t> support;
    for (auto c : qa.vertices[v].support) support.push_back(qa.classes.members[c].front());
    if (!generates(q, full, support)) {
      res = {false, v};
      break;
    }
  }
  return res;
}

}  // namespace lagrangelab
