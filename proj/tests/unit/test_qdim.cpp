#include <doctest.h>

#include <vector>

#include "btau/checks.hpp"
#include "btau/qdim.hpp"
#include "support.hpp"

using namespace btau;

namespace {

// Counts sequences k <= l_1 <= ... <= l_s (strictly increasing when strict)
// of each weight by plain recursion.
void count_sequences(int remaining, int lo, int weight, bool strict, int order, std::vector<long>& out) {
  if (remaining == 0) {
    ++out[static_cast<std::size_t>(weight)];
    return;
  }
  for (int part = lo; weight + part * remaining <= order; ++part)
    count_sequences(remaining - 1, strict ? part + 1 : part, weight + part, strict, order, out);
}

std::vector<long> brute_class(const PartitionClassSpec& spec, int order) {
  std::vector<long> out(static_cast<std::size_t>(order + 1), 0);
  count_sequences(spec.s, spec.k, 0, spec.strict, order, out);
  return out;
}

}  // namespace

TEST_CASE("class generating functions") {
  CHECK(class_gf({0, 1, false}, 3).to_string() == "1,1,1,1");
  CHECK(class_gf({2, 0, false}, 3).to_string() == "1,0,0,0");
  CHECK(class_gf({1, 2, true}, 5).to_string() == "0,0,0,1,1,2");
  for (int k = 0; k <= 3; ++k) {
    for (int s = 0; s <= 4; ++s) {
      for (bool strict : {false, true}) {
        const PartitionClassSpec spec{k, s, strict};
        const QSeries g = class_gf(spec, 15);
        const std::vector<long> oracle = brute_class(spec, 15);
        for (int n = 0; n <= 15; ++n) CHECK(g[n] == oracle[static_cast<std::size_t>(n)]);
      }
    }
  }
  CHECK(error_message([] { class_gf({-1, 1, false}, 3); }) == "class needs k >= 0 and s >= 0");
}

TEST_CASE("q-dimensions of the charge sectors") {
  CHECK(qdim_sum(Space::M, 0, 2).to_string() == "1,1,3");
  CHECK(qdim_closed(Space::M, 0, 2).to_string() == "1,1,3");
  CHECK(qdim_sum(Space::F, 0, 4).to_string() == "1,1,2,3,5");
  CHECK(qdim_F_closed(0, 4).to_string() == "1,1,2,3,5");
  CHECK(qdim_closed(Space::Fbar, 0, 5)[0] == 1);
  for (int l = 1; l <= 3; ++l) {
    const QSeries m = qdim_sum(Space::M, l, 8);
    for (int n = 0; n < l; ++n) CHECK(m[n] == 0);
    CHECK(m[l] != 0);
  }
  for (int l = -3; l < 0; ++l) CHECK(qdim_sum(Space::M, l, 8)[0] == 1);
}

TEST_CASE("Fock census under the built-in charge convention") {
  CHECK(fock_census(0, 2).to_string() == "1,1,3");
  CHECK(fock_census(-1, 5).to_string() == "1,2,4,8,15,27");
  CHECK(fock_census(1, 3)[0] == 0);
  CHECK(fock_census(1, 3)[1] != 0);
  CHECK(fock_census(1, 3, true) == fock_census(-1, 3));
  CHECK(charge_convention_check(10) == 1);
}

TEST_CASE("series identities") {
  const QDimReport euler = verify_identity(Identity::euler, 0, 20);
  CHECK(euler.equal());
  CHECK(euler.lhs == q_pochhammer_inf(20).inverse());
  CHECK(verify_identity(Identity::first, 0, 2).lhs.to_string() == "1,1,3");
  CHECK(verify_identity(Identity::first, 0, 2).equal());
  CHECK(verify_identity(Identity::second, 1, 10).equal_through == 10);
  CHECK(verify_identity(Identity::corollary, 2, 20).equal());
  CHECK(verify_identity(Identity::euler, -3, 20).equal());
  CHECK(error_message([] { verify_identity(Identity::first, -1, 5); }) == "identity requires l >= 0");

  const QDimReport off = compare("off", 0, QSeries(3, {1, 1, 2, 3}), QSeries(3, {1, 1, 5, 3}));
  CHECK(off.equal_through == 1);
  CHECK_FALSE(off.equal());
}

TEST_CASE("identity names round-trip") {
  for (Identity id : {Identity::first, Identity::second, Identity::euler, Identity::corollary})
    CHECK(parse_identity(identity_name(id)) == id);
  CHECK(parse_identity("euler") == Identity::euler);
  CHECK(starts_with(error_message([] { parse_identity("nope"); }), "unknown identity"));
}

TEST_CASE("sum and closed forms agree across sectors") {
  CHECK(check_class_gf(3, 5, 15).pass);
  CHECK(check_space(Space::M, -3, 3, 20).pass);
  CHECK(check_space(Space::Fbar, -3, 3, 20).pass);
  CHECK(check_space(Space::F, -3, 3, 20).pass);
  CHECK(check_identity(Identity::first, 0, 3, 20).pass);
  CHECK(check_identity(Identity::second, 0, 3, 20).pass);
  CHECK(check_identity(Identity::euler, -3, 3, 20).pass);
  CHECK(check_census(2, 8).pass);
}
