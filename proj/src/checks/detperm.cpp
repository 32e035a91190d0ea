#include "btau/checks.hpp"

namespace btau {

namespace {

nlohmann::json rationals(const std::vector<Rational>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

}  // namespace

Outcome check_det_perm_examples() {
  Outcome o;
  RationalMatrix id(3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  const RationalMatrix m = RationalMatrix::from_rows({{1, 2}, {3, 4}});
  auto expect = [&](const Rational& got, const Rational& want, const std::string& name) {
    if (got != want) o.fail(name + ": got " + to_string(got) + ", expected " + to_string(want));
  };
  expect(det_exact(id), 1, "det I3");
  expect(perm_exact(id), 1, "perm I3");
  expect(det_exact(m), -2, "det [[1,2],[3,4]]");
  expect(perm_exact(m), 10, "perm [[1,2],[3,4]]");
  expect(cauchy_det(PointConfig{{0}, {1}}), -1, "cauchy n=1");
  const PointConfig two{{0, 1}, {2, 3}};
  expect(cauchy_det(two), det_exact(cauchy_matrix(two)), "cauchy n=2");
  const BorchardtReport r = borchardt_verify(two);
  if (!r.equal) o.fail("borchardt n=2: lhs " + to_string(r.lhs) + " rhs " + to_string(r.rhs));
  return o;
}

Outcome borchardt_record(const PointConfig& pts) {
  Outcome o;
  const BorchardtReport r = borchardt_verify(pts);
  const Rational d = det_exact(cauchy_matrix(pts)), p = perm_exact(cauchy_matrix(pts));
  o.detail = {{"n", r.n}, {"z", rationals(pts.z)}, {"w", rationals(pts.w)}, {"lhs", to_string(r.lhs)},
              {"det_side", to_string(d)}, {"perm_side", to_string(p)}, {"equal", r.equal}};
  if (!r.equal) o.fail("det(C^2)=" + to_string(r.lhs) + " but det(C) perm(C)=" + to_string(r.rhs));
  return o;
}

Outcome check_borchardt(Rng& rng, int n, int trials) {
  Outcome o;
  for (int t = 0; t < trials && o.pass; ++t) {
    const PointConfig pts = random_config(n, rng, 20);
    const BorchardtReport r = borchardt_verify(pts);
    if (!r.equal) o.fail("trial " + std::to_string(t) + ": det(C^2)=" + to_string(r.lhs) + " but det(C) perm(C)=" + to_string(r.rhs));
  }
  return o;
}

Outcome check_cauchy(Rng& rng, int n, int trials) {
  Outcome o;
  for (int t = 0; t < trials && o.pass; ++t) {
    const PointConfig pts = random_config(n, rng, 20);
    const Rational closed = cauchy_det(pts), direct = det_exact(cauchy_matrix(pts));
    if (closed != direct) o.fail("trial " + std::to_string(t) + ": closed " + to_string(closed) + " direct " + to_string(direct));
  }
  return o;
}

}  // namespace btau
