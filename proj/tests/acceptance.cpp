// Acceptance suite: one check per numbered criterion, each printing a
// PASS/FAIL line. Exit status 0 iff every criterion holds.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "pg/counting.hpp"

using namespace pg;

namespace {

int failures = 0;

struct Criterion {
  std::string name;
  std::ostringstream detail;
  bool ok = true;
  explicit Criterion(std::string n) : name(std::move(n)) {}

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "    FAILED: " << what << "\n";
    }
  }
  template <typename A, typename B>
  void expect_eq(const A& a, const B& b, const std::string& what) {
    std::ostringstream sa, sb;
    sa << a;
    sb << b;
    expect(sa.str() == sb.str(), what + " (got " + sa.str() + ", want " + sb.str() + ")");
  }
  ~Criterion() {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n" << detail.str();
    if (!ok) ++failures;
  }
};

PermGroup two_sylow_s4() {
  return PermGroup::generated(
      4, {parse_perm("(1 3)", 4), parse_perm("(1 2 3 4)", 4)});
}

PowerGraphBundle bundle_sn(int n, bool with_explicit) {
  BundleOptions o;
  o.build_explicit = with_explicit;
  return build_bundle(PermGroup::symmetric(n), o);
}

void criterion_1_table1() {
  Criterion c("criterion 1: Table 1 by quotient BFS (n = 2..7)");
  auto start = std::chrono::steady_clock::now();
  const long c0[] = {1, 4, 13, 31, 83, 128};
  const int ct[] = {1, 2, 3, 3, 4, 3};
  const int co[] = {1, 2, 2, 2, 2, 2};
  for (int n = 2; n <= 7; ++n) {
    PowerGraphBundle b = bundle_sn(n, false);
    c.expect_eq(b.quotient_components.count(), c0[n - 2],
                "c_0(S_" + std::to_string(n) + ")");
    c.expect_eq(components(b.type_graph).count(), ct[n - 2],
                "c_0(T(S_" + std::to_string(n) + "))");
    c.expect_eq(components(b.order_graph).count(), co[n - 2],
                "c_0(O(S_" + std::to_string(n) + "))");
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 60.0, "runtime under 60 s");
}

void criterion_2_table2() {
  Criterion c("criterion 2: Table 2 spot rows (n = 8, 9 BFS; 10..13 closed form)");
  auto start = std::chrono::steady_clock::now();
  PowerGraphBundle b8 = bundle_sn(8, false);
  c.expect_eq(b8.quotient_components.count(), 961, "c_0(S_8) = 8*(8-3)!+1");
  PowerGraphBundle b9 = bundle_sn(9, false);
  c.expect_eq(b9.quotient_components.count(), 1, "c_0(S_9)");
  c.expect(count_via_theorem_a(b9).total == 1, "procedure total at n=9");
  for (int n = 10; n <= 13; ++n) {
    ClosedFormResult r = closed_form_sn(n);
    BigCount formula;
    if (is_prime(n)) {
      formula = factorial(n - 2) + 1;
      c.expect(r.regime == Regime::Prime, "regime at n=" + std::to_string(n));
    } else if (is_prime(n - 1)) {
      formula = BigCount(n) * factorial(n - 3) + 1;
      c.expect(r.regime == Regime::PrimePlusOne, "regime at n=" + std::to_string(n));
    } else {
      formula = 1;
      c.expect(r.regime == Regime::Neither, "regime at n=" + std::to_string(n));
    }
    c.expect_eq(to_decimal(r.c0), to_decimal(formula),
                "closed form at n=" + std::to_string(n));
    c.expect_eq(components(type_graph_sn(n).first).count(), r.c0_type,
                "c_0(T(S_n)) at n=" + std::to_string(n));
    c.expect_eq(components(order_graph_sn(n).first).count(), r.c0_order,
                "c_0(O(S_n)) at n=" + std::to_string(n));
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 600.0, "runtime under 10 minutes");
}

void criterion_3_oracle() {
  Criterion c("criterion 3: pairwise-power oracle matches the quotient count");
  for (int n = 3; n <= 7; ++n) {
    PermGroup g = PermGroup::symmetric(n);
    LabeledGraph oracle = explicit_power_graph_bruteforce(g);
    PowerGraphBundle b = bundle_sn(n, false);
    c.expect_eq(components(oracle).count(), b.quotient_components.count(),
                "S_" + std::to_string(n));
  }
  PermGroup sylow = two_sylow_s4();
  LabeledGraph oracle = explicit_power_graph_bruteforce(sylow);
  PowerGraphBundle b = build_bundle(sylow);
  c.expect_eq(components(oracle).count(), b.quotient_components.count(),
              "2-Sylow of S_4");
}

void criterion_4_theorem_a() {
  Criterion c("criterion 4: Theorem A total equals the BFS count (n = 4..8)");
  for (int n = 4; n <= 8; ++n) {
    PowerGraphBundle b = bundle_sn(n, false);
    ProcedureTrace t = count_via_theorem_a(b);  // divisions exact or throws
    c.expect(t.total == BigCount(b.quotient_components.count()),
             "S_" + std::to_string(n) + ": " + to_decimal(t.total) + " vs BFS " +
                 std::to_string(b.quotient_components.count()));
  }
}

void criterion_5_procedure() {
  Criterion c("criterion 5: procedure stops in c_0(T(S_n)) steps; shuffles agree");
  for (int n = 2; n <= 8; ++n) {
    PowerGraphBundle b = bundle_sn(n, false);
    ProcedureTrace t = count_via_theorem_a(b);
    c.expect_eq(t.step_count(), components(b.type_graph).count(),
                "steps at n=" + std::to_string(n));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      ProcedureTrace s = run_procedure_sn_shuffled(n, seed);
      if (s.total != t.total) {
        c.expect(false, "shuffle seed " + std::to_string(seed) + " at n=" +
                            std::to_string(n) + " changed the total");
        break;
      }
    }
  }
}

void criterion_6_no_fusion_example() {
  Criterion c("criterion 6: the 2-Sylow of S_4 (quotient shape, o~ verdicts)");
  PowerGraphBundle b = build_bundle(two_sylow_s4());
  c.expect_eq(b.quotient_graph.vertex_count(), 6, "quotient vertices");
  c.expect_eq(b.quotient_components.count(), 5, "quotient components");
  c.expect(is_complete_map(b.o_tilde()), "o~ complete");
  c.expect(!is_pseudo_covering(b.o_tilde()), "o~ not pseudo-covering");
}

void criterion_7_theorem_d() {
  Criterion c("criterion 7: Theorem D shape at n = 8");
  StructureReport r = structure_report(bundle_sn(8, false));
  c.expect_eq(r.others.size(), 960, "non-main quotient components");
  bool all_isolated_17 = true, all_explicit_k6 = true;
  for (const auto& other : r.others) {
    if (other.size != 1 || other.type_census.count("[1,7]") == 0) {
      all_isolated_17 = false;
    }
    if (other.explicit_size != 6 || !other.explicit_complete) {
      all_explicit_k6 = false;
    }
  }
  c.expect(all_isolated_17, "every non-main component is an isolated [1,7] vertex");
  c.expect(all_explicit_k6, "every companion explicit component is K_6");
  c.expect(!r.main.is_complete, "main quotient component not complete");
  c.expect(!r.main.explicit_complete, "main explicit component not complete");
  c.expect(!r.main_type_complete, "main type component not complete");
}

void criterion_8_homomorphism_suite() {
  Criterion c("criterion 8: homomorphism suite (n = 3..7)");
  for (int n = 3; n <= 7; ++n) {
    std::string tag = " at n=" + std::to_string(n);
    PowerGraphBundle b = bundle_sn(n, true);
    c.expect(is_tame(b.pi()), "pi tame" + tag);
    c.expect(is_pseudo_covering(b.pi()), "pi pseudo-covering" + tag);
    c.expect(is_two_homomorphism(b.t_tilde()), "t~ 2-hom" + tag);
    c.expect(is_complete_map(b.t_tilde()), "t~ complete" + tag);
    c.expect(is_two_homomorphism(b.o_tilde()), "o~ 2-hom" + tag);
    c.expect(is_complete_map(b.o_tilde()), "o~ complete" + tag);
    c.expect(is_two_homomorphism(b.o_type()), "o_T 2-hom" + tag);
    c.expect(is_complete_map(b.o_type()), "o_T complete" + tag);
    bool commutes = true;
    for (int v = 0; v < b.quotient_graph.vertex_count(); ++v) {
      if (b.ot_assign[b.t_assign[v]] != b.o_assign[v]) commutes = false;
    }
    c.expect(commutes, "o_T o t~ = o~ pointwise" + tag);

    // orbit generators: F_x for x in {(1 2), (1 2 ... n)}
    std::vector<CyclicClass> classes;
    for (const auto& ci : b.classes) classes.push_back({ci.rep, ci.size, ci.order});
    std::vector<int> cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n + 1;
    std::vector<std::vector<int>> gens = {
        fx_automorphism(parse_perm("(1 2)", n), classes),
        fx_automorphism(Perm::from_images(cycle), classes)};
    c.expect(is_orbit_map(b.t_tilde(), gens), "t~ orbit map" + tag);
  }
}

void criterion_9_partition_properties() {
  Criterion c("criterion 9: partition algebra property suite (10,000 cases)");
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> n_dist(1, 10);
  std::uniform_int_distribution<long> e_dist(1, 30);
  auto random_partition = [&rng](int n) {
    std::vector<int> parts;
    int remaining = n;
    while (remaining > 0) {
      std::uniform_int_distribution<int> dist(1, remaining);
      int p = dist(rng);
      parts.push_back(p);
      remaining -= p;
    }
    return Partition(std::move(parts));
  };
  long bad = 0;
  for (int i = 0; i < 10000; ++i) {
    int n = n_dist(rng);
    Partition t = random_partition(n);
    long a = e_dist(rng), b = e_dist(rng);

    if (power(power(t, a), b) != power(t, a * b)) ++bad;
    if ((power(t, a) == t) != (std::gcd(a, t.order()) == 1)) ++bad;
    if (power(t, a).is_trivial() != (a % t.order() == 0)) ++bad;
    if (power(t, a).order() != t.order() / std::gcd(a, t.order())) ++bad;

    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    std::shuffle(word.begin(), word.end(), rng);
    Perm psi = Perm::from_images(word);
    if (cycle_type(perm_power(psi, a)) != power(cycle_type(psi), a)) ++bad;

    if (classify_power(t, a) == PowerKind::Proper) {
      Partition ta = power(t, a);
      bool repeat = false;
      for (auto [part, mult] : ta.normal_form()) {
        if (mult >= 2) repeat = true;
        if (mult == 1) {
          if (std::gcd(a, static_cast<long>(part)) != 1) ++bad;
          bool in_t = false;
          for (auto [tp, tm] : t.normal_form()) in_t |= (tp == part);
          if (!in_t) ++bad;
        }
      }
      if (!repeat) ++bad;
    }
  }
  c.expect_eq(bad, 0L, "failed property instances");
}

void criterion_10_corollary_c() {
  Criterion c("criterion 10: Corollary C equivalences");
  for (int n : {2, 7, 9, 12, 16, 25}) {
    ConnectivityReport r = connectivity_equivalences(n);
    c.expect(r.all_equal(), "flags agree at n=" + std::to_string(n));
  }
  int min_all_true = 0;
  for (int n = 3; n <= 9; ++n) {
    ConnectivityReport r = connectivity_equivalences(n);
    if (r.all_equal() && r.arithmetic) {
      min_all_true = n;
      break;
    }
  }
  c.expect_eq(min_all_true, 9, "minimum n >= 3 with all flags true");
}

void criterion_11_census() {
  Criterion c("criterion 11: quotient census k(T) = mu_T / phi(o(T)) (n = 3..7)");
  for (int n = 3; n <= 7; ++n) {
    PowerGraphBundle b = bundle_sn(n, false);
    std::map<std::string, long> census;
    for (const auto& ci : b.classes) census[ci.type.bracket()]++;
    for (const auto& t : partitions_of(n)) {
      if (t.is_trivial()) continue;
      BigCount expected =
          divide_exact(mu_symmetric(t), BigCount(totient(t.order())));
      long got = census.count(t.bracket()) ? census[t.bracket()] : 0;
      if (BigCount(got) != expected) {
        c.expect(false, "type " + t.bracket() + " at n=" + std::to_string(n) +
                            ": " + std::to_string(got) + " classes, want " +
                            to_decimal(expected));
      }
    }
  }
}

}  // namespace

int main() {
  criterion_1_table1();
  criterion_2_table2();
  criterion_3_oracle();
  criterion_4_theorem_a();
  criterion_5_procedure();
  criterion_6_no_fusion_example();
  criterion_7_theorem_d();
  criterion_8_homomorphism_suite();
  criterion_9_partition_properties();
  criterion_10_corollary_c();
  criterion_11_census();
  if (failures == 0) {
    std::cout << "ALL CRITERIA PASS\n";
    return 0;
  }
  std::cout << failures << " criteria FAILED\n";
  return 1;
}
