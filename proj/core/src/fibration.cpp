#include "lagrangelab/fibration.hpp"

#include "lagrangelab/errors.hpp"

namespace lagrangelab {

const char* to_string(TrivialHint h) {
  switch (h) {
    case TrivialHint::Trivial:
      return "trivial";
    case TrivialHint::NonOrientable:
      return "non-orientable";
    case TrivialHint::OrientableUnknown:
      return "orientable, triviality unknown";
  }
  return "";
}

std::vector<bool> orientability_parity_check(std::span<const Integer> mu) {
  std::vector<bool> out;
  for (const auto& m : mu) out.push_back(m % 2 == 0);
  return out;
}

FibrationDescriptor fibration_descriptor(const QuadricSystem& q, const std::vector<SignAction>& actions,
                                         const TopologyExpr& fiber, std::span<const Integer> mu) {
  if (actions.size() != mu.size()) fail(ErrorKind::Input, "one Maslov value per generator expected");
  FibrationDescriptor fd;
  fd.base_torus_dim = q.equations();
  fd.fiber = fiber;
  fd.actions = actions;
  const std::vector<bool> parity = orientability_parity_check(mu);
  fd.orientable = true;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    std::size_t flips = 0;
    for (bool f : actions[i].flips) flips += f ? 1 : 0;
    bool preserving = flips % 2 == 0;
    if (preserving != parity[i]) fail(ErrorKind::Invariant, "flip parity disagrees with Maslov parity");
    fd.generator_orientation_preserving.push_back(preserving);
    fd.orientable = fd.orientable && preserving;
  }
  if (!fd.orientable) {
    fd.trivial_hint = TrivialHint::NonOrientable;
    return fd;
  }
  // Flips come in blocks of identical columns; an even block can be undone
  // by rotations in pairs of coordinates.
  ColumnClasses cc = column_classes(q.gamma);
  bool trivial = true;
  for (const auto& a : actions)
    for (std::size_t c = 0; c < cc.members.size() && trivial; ++c)
      if (a.flips[cc.members[c].front()] && cc.multiplicity[c] % 2 != 0) trivial = false;
  fd.trivial_hint = trivial ? TrivialHint::Trivial : TrivialHint::OrientableUnknown;
  return fd;
}

}  // namespace lagrangelab
