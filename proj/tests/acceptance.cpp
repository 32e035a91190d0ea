// Runs every acceptance criterion once and prints one line per criterion.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "btau/checks.hpp"

using namespace btau;

namespace {

struct Criterion {
  int number;
  std::string name;
  double max_seconds;  // 0 means no runtime bound
  std::function<Outcome(Rng&)> run;
};

Outcome all(std::vector<std::pair<std::string, Outcome>> parts) {
  Outcome out;
  for (const auto& [label, o] : parts) out.merge(o, label);
  return out;
}

Outcome run_verify_all() {
  const std::string cmd = std::string("\"") + BTAU_EXECUTABLE + "\" verify-all > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  Outcome out;
  if (status == -1 || !WIFEXITED(status)) {
    out.fail("verify-all did not exit normally");
  } else if (WEXITSTATUS(status) != 0) {
    out.fail("verify-all exit code " + std::to_string(WEXITSTATUS(status)));
  }
  return out;
}

}  // namespace

int main() {
  const Caps defaults{8, 6, 3};
  const std::vector<Criterion> criteria = {
      {1, "Euler identity at l = 0 through q^50", 5,
       [](Rng&) { return check_identity(Identity::euler, 0, 0, 50); }},
      {2, "identity-1 and identity-2 for l = 0..5, Euler family for |l| <= 5, through q^40", 0,
       [](Rng&) {
         return all({{"identity-1", check_identity(Identity::first, 0, 5, 40)},
                     {"identity-2", check_identity(Identity::second, 0, 5, 40)},
                     {"euler-family", check_identity(Identity::euler, -5, 5, 40)}});
       }},
      {3, "sum forms equal closed forms for M^l and Fbar^l, -4 <= l <= 4, through q^40", 0,
       [](Rng&) {
         return all({{"M", check_space(Space::M, -4, 4, 40)}, {"Fbar", check_space(Space::Fbar, -4, 4, 40)}});
       }},
      {4, "Fock census equals q-dimension of M^l for |l| <= 3 through q^10; count 3 at (l = 0, q^2)", 0,
       [](Rng&) {
         Outcome o = check_census(3, 10);
         const QSeries c = fock_census(0, 2);
         if (c[2] != 3) o.fail("census at (l = 0, q^2) is " + to_string(c[2]));
         return o;
       }},
      {5, "Borchardt and Cauchy identities, n = 1..5, 100 random configurations each", 0,
       [](Rng& rng) {
         Outcome o;
         for (int n = 1; n <= 5; ++n) {
           o.merge(check_borchardt(rng, n, 100), "borchardt n=" + std::to_string(n));
           o.merge(check_cauchy(rng, n, 100), "cauchy n=" + std::to_string(n));
         }
         return o;
       }},
      {6, "phistar_0^n.1 = (-1)^n n! p^n S_n(-x) for n <= 6", 0,
       [=](Rng&) { return check_zero_mode_powers(6, defaults); }},
      {7, "phistar_-1^n.1 = (-1)^n n! p^n S*_n for n <= 5; binomial intermediate for n <= 3", 0,
       [=](Rng&) {
         return all({{"minus-one powers", check_minus1_mode_powers(5, defaults)},
                     {"intermediate", check_binomial_intermediate(3, 3, defaults)}});
       }},
      {8, "exp(sum a_j phi_-j phistar_0).1 closed form for s <= 3, parameter order 4, degree 8", 0,
       [](Rng&) { return check_tau_th1(3, Caps{8, 6, 4}); }},
      {9, "exp(a phi_-j phistar_-1).1 for j <= 3; (s,t) in {(1,2),(2,2)}; two-factor (1,1,1,0)", 0,
       [=](Rng&) {
         return all({{"th2", check_tau_th2(3, defaults)},
                     {"general", check_tau_general({{1, 2}, {2, 2}}, defaults)},
                     {"two-factor", check_tau_two_factor(1, 1, 1, 0, defaults)}});
       }},
      {10, "quadratic taus solve the residue equation through degree 7; vacuum is the only polynomial solution", 0,
       [=](Rng& rng) {
         return all({{"quadratic", check_residue_quadratic_tau(rng, 20, defaults)},
                     {"uniqueness", check_vacuum_uniqueness(rng, 100, 4, 3)}});
       }},
      {11, "residue equals mode sum on 200 pairs; embedding and commutators for |index| <= 3", 0,
       [=](Rng& rng) {
         return all({{"mode sum", check_residue_mode_equivalence(rng, 200, defaults)},
                     {"embedding", check_embedding_module_map(rng, 20, defaults, 3)},
                     {"commutators", check_boson_commutators(rng, 10, defaults, 3)}});
       }},
      {12, "restricted PDE residuals vanish through degree D-2; (t,s) coordinates reproduce 4 f_tt", 0,
       [=](Rng& rng) {
         return all({{"pde", check_pde_residuals(defaults)},
                     {"coordinates", check_harmonic_coordinates(rng, 20, defaults)}});
       }},
      {13, "verify-all at default caps exits 0 in under 10 minutes", 600, [](Rng&) { return run_verify_all(); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Rng rng(derive_seed(0, "acceptance." + std::to_string(c.number)));
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(rng);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && c.max_seconds > 0 && seconds >= c.max_seconds)
      o.fail("runtime " + std::to_string(seconds) + " s exceeds " + std::to_string(c.max_seconds) + " s");
    if (!o.pass) ++failed;
    std::printf("criterion %2d  %s  tolerance=exact  %.2fs  %s\n", c.number, o.pass ? "PASS" : "FAIL", seconds, c.name.c_str());
    if (!o.pass) std::printf("              witness: %s\n", o.witness.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
