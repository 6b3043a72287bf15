#include "jk/trees/lcst.hpp"

#include <algorithm>

#include "jk/errors.hpp"

namespace jk::trees {

namespace {

std::size_t count_half_words(const LieContext& ctx, int k, const Multidegree& md) {
  return k % 2 == 0 ? half_slots(ctx, k, md).size() : 0;
}

}  // namespace

LcstComponent lcst_component(const LieContext& ctx, int k, const Multidegree& md) {
  LcstComponent c;
  c.md = md;
  c.dim = ComponentBasis::get(ctx, k, md).dim();
  c.invariants = kernels::component_invariants(ctx, k, {md}, kernels::Exec::Serial).front();
  c.rank = c.invariants.size();
  c.expected_z2 = count_half_words(ctx, k, md);
  return c;
}

LcstReport lcst_quotient(int genus, int k, kernels::Exec exec) {
  if (k < 1 || k > 4) throw CapabilityError("tree degree must be between 1 and 4");
  const LieContext& ctx = LieContext::get(genus, 5);
  LcstReport report;
  report.genus = genus;
  report.degree = k;
  std::vector<Multidegree> mds;
  for (const auto& md : multidegrees(ctx.rank(), k + 2))
    if (ComponentBasis::get(ctx, k, md).dim() > 0) mds.push_back(md);
  const auto invariants = kernels::component_invariants(ctx, k, mds, exec);
  std::vector<Integer> all;
  for (std::size_t i = 0; i < mds.size(); ++i) {
    LcstComponent c;
    c.md = mds[i];
    c.dim = ComponentBasis::get(ctx, k, mds[i]).dim();
    c.invariants = invariants[i];
    c.rank = c.invariants.size();
    c.expected_z2 = count_half_words(ctx, k, mds[i]);
    report.ambient_dim += c.dim;
    report.rank += c.rank;
    report.expected_z2 += c.expected_z2;
    for (const auto& d : c.invariants) {
      if (d != 1 && d != 2) report.elementary_two = false;
      if (d != 1) all.push_back(d);
    }
    report.components.push_back(std::move(c));
  }
  report.torsion = merge_invariants(all);
  report.z2_count = static_cast<std::size_t>(std::count(report.torsion.begin(), report.torsion.end(), Integer(2)));
  return report;
}

}  // namespace jk::trees
