// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "oracles/oracles.hpp"
#include "skyline/correspondences.hpp"
#include "skyline/crystal.hpp"
#include "skyline/demazure.hpp"
#include "skyline/kernel.hpp"
#include "skyline/permutations.hpp"
#include "skyline/skyline.hpp"

namespace skyline {
namespace {

// Collects the first few failed checks of a criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  // Counts work done inside a single expect, e.g. biwords in one report.
  void add_checks(long k) { checks_ += k; }
  bool ok() const { return failures_ == 0; }
  long checks() const { return checks_; }
  std::string notes() const { return notes_.str(); }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::ostringstream notes_;
};

std::vector<WeakComposition> orbit_range(int n, int max_size) {
  std::vector<WeakComposition> out;
  for (int s = 0; s <= max_size; ++s) {
    for (const auto& lambda : partitions_of(s, n)) {
      for (const auto& a : orbit(lambda.padded(n))) out.push_back(a);
    }
  }
  return out;
}

void worked_examples(Checker& c) {
  c.expect(min_coset_rep(WeakComposition({1, 3, 0, 0, 1})) == Permutation::parse("21534"), "min_coset_rep");

  Tableau t({{1, 1, 1, 3}, {2, 3, 4}, {3, 4}, {5}}, 5);
  c.expect(psi(t).shape() == WeakComposition({2, 0, 4, 3, 1}), "psi shape");
  c.expect(right_key(t) == key_tableau(WeakComposition({2, 0, 4, 3, 1})), "right key");

  InsertionResult ins = insert(3, Ssaf::from_columns({{}, {}, {3, 2, 1}, {4, 1}, {}, {6}}));
  c.expect(ins.chain == std::vector<int>{3, 2, 1}, "bump chain");
  c.expect(ins.filling.shape() == WeakComposition({0, 0, 3, 2, 0, 2}), "insertion shape");

  SsafPair a = phi(Biword::parse("4 6 6 7 / 4 1 2 1"), 7);
  c.expect(a.f.shape() == WeakComposition({2, 1, 0, 1, 0, 0, 0}), "phi 1 sh(F)");
  c.expect(a.g.shape() == WeakComposition({0, 0, 0, 1, 0, 2, 1}), "phi 1 sh(G)");
  c.expect(orbit_bruhat_leq(a.g.shape(), a.f.shape().reversed()), "phi 1 keys");

  std::vector<PhiStep> steps = phi_trace(Biword::parse("1 2 3 3 5 6 / 6 3 2 4 3 1"), 6);
  const WeakComposition g6 = steps.back().g.shape();
  const WeakComposition wf6 = steps.back().f.shape().reversed();
  c.expect(orbit_bruhat_leq(wf6, g6) && g6 != wf6, "phi 2 final keys strictly greater");
  const WeakComposition g4 = steps[3].g.shape();
  const WeakComposition wf4 = steps[3].f.shape().reversed();
  c.expect(!orbit_bruhat_leq(g4, wf4) && !orbit_bruhat_leq(wf4, g4), "phi 2 step 4 incomparable");

  Polynomial expected(3);
  for (const auto& e : std::vector<std::vector<int>>{
           {3, 1, 0}, {2, 2, 0}, {1, 3, 0}, {3, 0, 1}, {2, 1, 1}, {2, 0, 2}, {1, 2, 1}, {1, 1, 2}, {1, 0, 3}}) {
    expected += Polynomial::monomial(WeakComposition(e));
  }
  c.expect(key_polynomial(WeakComposition({1, 0, 3})) == expected, "key (1,0,3)");

  std::set<Tableau> r = bounded_entry_restriction(demazure_crystal(WeakComposition({0, 0, 2, 1, 1})).members, 4);
  c.expect(r == demazure_crystal(WeakComposition({0, 1, 2, 1, 0})).members, "crystal intersection");
  c.expect(alpha_vector(WeakComposition({1, 1, 2}), make_kernel_instance(5, 4, 3)) == WeakComposition({1, 2, 1}),
           "alpha vector");
}

void main_theorem(Checker& c) {
  for (int n = 2; n <= 4; ++n) {
    MainTheoremReport r = verify_main_theorem(n, 4, 1);
    c.add_checks(static_cast<long>(r.checked) - 1);
    c.expect(r.ok(), "n=" + std::to_string(n) + (r.first_failure ? " at " + r.first_failure->to_string() : ""));
  }
}

void operator_algebra(Checker& c) {
  std::mt19937 rng(20261015);
  for (int sample = 0; sample < 100; ++sample) {
    const int n = 2 + sample % 3;
    Polynomial f = oracle::random_polynomial(rng, n, 4, 6);
    for (int i = 1; i < n; ++i) {
      c.expect(pi(i, pi(i, f)) == pi(i, f), "idempotence");
      c.expect(pihat(i, pihat(i, f)) == -pihat(i, f), "quadratic");
      for (int j = i + 2; j < n; ++j) {
        c.expect(pi(i, pi(j, f)) == pi(j, pi(i, f)), "commutation");
        c.expect(pihat(i, pihat(j, f)) == pihat(j, pihat(i, f)), "commutation hat");
      }
      if (i + 1 < n) {
        c.expect(apply_op_word(OpKind::kPi, {i, i + 1, i}, f) == apply_op_word(OpKind::kPi, {i + 1, i, i + 1}, f),
                 "braid");
        c.expect(apply_op_word(OpKind::kPiHat, {i, i + 1, i}, f) ==
                     apply_op_word(OpKind::kPiHat, {i + 1, i, i + 1}, f),
                 "braid hat");
      }
    }
  }
}

void three_routes(Checker& c) {
  for (int n = 1; n <= 4; ++n) {
    for (int s = 0; s <= 5; ++s) {
      for (const auto& lambda : partitions_of(s, n)) {
        std::vector<WeakComposition> orb = orbit(lambda.padded(n));
        Polynomial total(n);
        for (const auto& a : orb) {
          const std::string tag = a.to_string();
          const Polynomial k = key_polynomial(a);
          const Polynomial at = atom(a);
          c.expect(k == key_via_ssaf(a), "key via ssaf " + tag);
          c.expect(k == weight_polynomial(demazure_crystal(a).members, n), "key via crystal " + tag);
          c.expect(at == atom_via_ssaf(a), "atom via ssaf " + tag);
          c.expect(at == weight_polynomial(atom_set(a), n), "atom via crystal " + tag);
          Polynomial sum(n);
          for (const auto& b : orb) {
            if (orbit_bruhat_leq(b, a)) sum += atom(b);
          }
          c.expect(sum == k, "atom decomposition " + tag);
          total += at;
        }
        c.expect(total == schur_polynomial(lambda, n), "schur " + lambda.to_string());
      }
    }
  }
}

void kernel_expansions(Checker& c) {
  for (auto [n, m, k, d] : {std::tuple{3, 3, 3, 4}, std::tuple{4, 4, 4, 3}, std::tuple{5, 4, 3, 3},
                             std::tuple{5, 3, 4, 3}, std::tuple{4, 3, 2, 4}, std::tuple{4, 4, 3, 3}}) {
    KernelInstance inst = make_kernel_instance(n, m, k);
    ExpansionReport r = verify_expansion(inst, d, 1);
    c.add_checks(static_cast<long>(r.lhs.num_terms()) - 1);
    c.expect(r.equal, inst.to_string() + " d=" + std::to_string(d));
    if (inst.is_rectangle()) c.expect(classical_cauchy_rhs(inst, d) == r.rhs, "classical " + inst.to_string());
  }
}

void roundtrips(Checker& c) {
  for (int n = 1; n <= 4; ++n) {
    for (int s = 0; s <= 6; ++s) {
      for (const auto& lambda : partitions_of(s, n)) {
        for_each_ssyt(Partition(lambda), n, [&](const Tableau& t) {
          c.expect(psi_inverse(psi(t)) == t, "psi roundtrip " + t.to_string());
        });
      }
      for (const auto& shape : compositions_of(s, n)) {
        for (const auto& f : enumerate_ssaf(shape)) {
          c.expect(psi(psi_inverse(f)) == f, "psi inverse roundtrip " + f.to_string());
        }
      }
    }
  }
  for (int len = 0; len <= 3; ++len) {
    for (const auto& w : enumerate_biwords(3, len)) {
      SsafPair fg = phi(w, 3);
      c.expect(phi_inverse(fg.f, fg.g) == w, "phi roundtrip " + w.to_string());
      c.expect(rsk_commutes_check(w, 3), "rsk commutes " + w.to_string());
    }
  }
}

}  // namespace
}  // namespace skyline

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<void(skyline::Checker&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 worked examples", 1.0, skyline::worked_examples},
      {"2 staircase criterion for phi, n<=4, <=4 biletters", 300.0, skyline::main_theorem},
      {"3 operator relations on random polynomials", 60.0, skyline::operator_algebra},
      {"4 key and atom routes agree", 120.0, skyline::three_routes},
      {"5 kernel expansions", 300.0, skyline::kernel_expansions},
      {"6 bijection roundtrips", 60.0, skyline::roundtrips},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    skyline::Checker checker;
    const auto start = Clock::now();
    cr.run(checker);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = secs <= cr.budget_seconds;
    const bool pass = checker.ok() && in_time;
    std::printf("%s criterion %s: %ld checks, %.2fs (budget %.0fs)%s%s\n", pass ? "PASS" : "FAIL", cr.name,
                checker.checks(), secs, cr.budget_seconds, checker.ok() ? "" : " failed: ",
                checker.ok() ? (in_time ? "" : " over budget") : checker.notes().c_str());
    failed += pass ? 0 : 1;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
