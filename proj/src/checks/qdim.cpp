#include "btau/checks.hpp"

namespace btau {

namespace {

nlohmann::json coefficient_list(const QSeries& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : s.coeffs()) out.push_back(to_string(c));
  return out;
}

Outcome from_report(const QDimReport& r) {
  Outcome o;
  if (!r.equal()) {
    const int k = r.equal_through + 1;
    o.fail(r.tag + " l=" + std::to_string(r.l) + " q^" + std::to_string(k) + ": lhs=" + to_string(r.lhs[k]) + " rhs=" + to_string(r.rhs[k]));
  }
  return o;
}

}  // namespace

nlohmann::json report_json(const QDimReport& r) {
  return {{"space", r.tag}, {"l", r.l}, {"N", r.order}, {"lhs", coefficient_list(r.lhs)}, {"rhs", coefficient_list(r.rhs)}, {"equal_through", r.equal_through}};
}

Outcome check_class_gf(int kmax, int smax, int order) {
  Outcome o;
  for (int k = 0; k <= kmax; ++k) {
    for (int s = 0; s <= smax; ++s) {
      for (bool strict : {false, true}) {
        const PartitionClassSpec spec{k, s, strict};
        o.merge(compare_series(class_gf(spec, order), class_gf_enum(spec, order)),
                std::string(strict ? "D" : "P") + "(k=" + std::to_string(k) + ",s=" + std::to_string(s) + ")");
      }
    }
  }
  return o;
}

Outcome check_space(Space space, int lmin, int lmax, int order) {
  Outcome o;
  for (int l = lmin; l <= lmax; ++l) o.merge(from_report(verify_space(space, l, order)), "sum vs closed");
  return o;
}

Outcome check_identity(Identity id, int lmin, int lmax, int order) {
  Outcome o;
  for (int l = lmin; l <= lmax; ++l) {
    const QDimReport r = verify_identity(id, l, order);
    o.merge(from_report(r), identity_name(id));
    if (lmin == lmax) o.detail = report_json(r);
  }
  return o;
}

Outcome check_census(int lmax, int order) {
  Outcome o;
  for (int l = -lmax; l <= lmax; ++l) {
    o.merge(compare_series(fock_census(l, order), qdim_sum(Space::M, l, order)), "census l=" + std::to_string(l));
  }
  const QSeries zero = fock_census(0, std::max(order, 2));
  if (zero[2] != 3) o.fail("census l=0 at q^2: " + to_string(zero[2]) + ", expected 3");
  return o;
}

}  // namespace btau
