#include "veegroups/braiding.hpp"

#include "veegroups/common.hpp"

namespace veegroups {

BraidIsoReport braiding_is_group_iso_check(const GradedGroup& g1, const GradedGroup& g2) {
  GradedGroup p = graded_product_group(g1, g2);
  if (p.order() > kValidationCap)
    throw size_cap_error("braiding iso check: product exceeds the validation cap");
  BraidMap<GradedGroup> beta = block_braiding(p, static_cast<int>(g1.factors().size()));
  const GradedGroup& q = beta.target;
  for (int a = 0; a < p.order(); ++a)
    for (int b = 0; b < p.order(); ++b)
      if (beta(p.mul(a, b)) != q.mul(beta(a), beta(b))) return {false, a, b};
  return {};
}

}  // namespace veegroups
