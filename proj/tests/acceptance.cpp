// Acceptance suite: every check is exact (polynomial identity over Q(i) in
// all symbolic parameters); each criterion also carries a wall-clock budget.
// Prints one line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "confrb/formal.hpp"
#include "confrb/search.hpp"
#include "oracles.hpp"

using namespace confrb;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    bool in_budget = secs < budget_seconds;
    if (!in_budget) detail += (detail.empty() ? "" : "; ") + std::string("over budget");
    bool pass = ok && in_budget;
    std::printf("[%s] criterion %d: %s (%.2fs, budget %.0fs)%s%s\n",
                pass ? "PASS" : "FAIL", number, label.c_str(), secs, budget_seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

} // namespace

int main() {
    auto sl2 = LieAlgebra::sl2();
    auto cur = ConformalAlgebra::cur_of(sl2);
    auto rk2 = ConformalAlgebra::rank2_example();

    // 1. conformal axiom suite: exact zero defect reports, < 1 s each
    criterion(1, "conformal axioms for Cur(sl2), Vir, rank-2 example", 3.0,
              [&](std::string& detail) {
                  for (auto& [name, L] :
                       std::vector<std::pair<std::string, ConformalAlgebra>>{
                           {"cur-sl2", cur},
                           {"vir", ConformalAlgebra::vir()},
                           {"rank2", rk2}}) {
                      auto t0 = std::chrono::steady_clock::now();
                      bool ok = check_conformal_axioms(L).ok();
                      double secs = std::chrono::duration<double>(
                                        std::chrono::steady_clock::now() - t0)
                                        .count();
                      if (!ok || secs >= 1.0) {
                          detail = name + (ok ? " exceeded 1 s" : " has defects");
                          return false;
                      }
                  }
                  return true;
              });

    // 2. catalog verification with fully symbolic parameters, < 10 s total
    criterion(2, "operator catalogs verify symbolically", 10.0,
              [&](std::string& detail) {
                  for (int w : {0, 1})
                      for (auto& e : catalog_cur_sl2(w))
                          if (!check_conformal_rb(cur, e.map, e.weight).ok()) {
                              detail = e.name;
                              return false;
                          }
                  for (auto& e : catalog_rank2())
                      if (!check_conformal_rb(rk2, e.map, e.weight).ok()) {
                          detail = e.name;
                          return false;
                      }
                  for (int w : {0, 1})
                      for (auto& e : catalog_sl2(w))
                          if (!check_rb(sl2, e.map, e.weight).ok()) {
                              detail = e.name;
                              return false;
                          }
                  // the normalized target forms themselves: (R1) is the R1
                  // family; (R2) with symbolic q
                  Ring pr = cur_sl2_param_ring();
                  GaussPoly q = generic_q(pr), z = GaussPoly::zero(pr);
                  ConformalMap r2form = ConformalMap::make(
                      pr, mat_from_cols(pr, {{z, z, z}, {z, z, z}, {z, z, q}}));
                  if (!check_conformal_rb(cur, r2form, GaussPoly::zero(pr)).ok()) {
                      detail = "(R2)";
                      return false;
                  }
                  return true;
              });

    // 3. generic system derivation matches the transcribed references
    criterion(3, "18+18 equation derivation matches the references", 5.0,
              [&](std::string& detail) {
                  for (int w : {0, 1}) {
                      auto rep = match_system(derive_rb_system(w), reference_rb_system(w));
                      if (!rep.perfect()) {
                          detail = "weight " + std::to_string(w) + ": " +
                                   std::to_string(rep.matched()) + "/18";
                          return false;
                      }
                  }
                  return true;
              });

    // 4. normalization identities at the stated parameter points
    criterion(4, "normalizing automorphisms reduce R2, R3, R4", 10.0,
              [&](std::string& detail) {
                  Ring pr = cur_sl2_param_ring();
                  GaussPoly q = generic_q(pr), z = GaussPoly::zero(pr);
                  // psi^{-1} R2 psi = (R2) exactly, symbolic alpha and q
                  {
                      auto R2 = catalog_cur_sl2_entry("R2");
                      auto conj = conjugate_conformal(
                          cur, R2.map, psi_normalizer(GaussPoly::variable(pr, "alpha")));
                      ConformalMap expected = ConformalMap::make(
                          pr, mat_from_cols(pr, {{z, z, z}, {z, z, z}, {z, z, q}}));
                      if (!(conj == expected)) {
                          detail = "psi/R2";
                          return false;
                      }
                  }
                  // xi^{-1} R3 xi in the (R2) family at alpha = 4
                  {
                      GaussRat quarter{Rational(1, 4)};
                      ConformalMap R3frac = ConformalMap::make(
                          pr, mat_from_cols(pr, {{q, GaussPoly::constant(pr, 4) * q, z},
                                                 {q * quarter, q, z},
                                                 {z, z, z}}));
                      auto conj = conjugate_conformal(
                          cur, R3frac, xi_normalizer(GaussRat(4), GaussRat(2)));
                      if (!in_R2_family(conj)) {
                          detail = "xi/R3";
                          return false;
                      }
                  }
                  // pi^{-1} R4 pi in the (R1) family at (alpha, beta) = (-1, 1)
                  {
                      auto R4 = instantiate(catalog_cur_sl2_entry("R4").map,
                                            {{"alpha", GaussRat(-1)}, {"beta", GaussRat(1)}});
                      auto conj = conjugate_conformal(cur, R4, pi_normalizer(GaussRat(1)));
                      if (!in_R1_family(conj)) {
                          detail = "pi/R4";
                          return false;
                      }
                  }
                  // theta^{-1} R4 theta in the (R2) family at (3, 1), D = 2
                  {
                      auto R4 = instantiate(catalog_cur_sl2_entry("R4").map,
                                            {{"alpha", GaussRat(3)}, {"beta", GaussRat(1)}});
                      auto conj = conjugate_conformal(
                          cur, R4, theta_normalizer(GaussRat(3), GaussRat(1), GaussRat(2)));
                      if (!in_R2_family(conj)) {
                          detail = "theta/R4";
                          return false;
                      }
                  }
                  return true;
              });

    // 5. projection / extension / conjugation compatibility on 100 random
    //    parameter instantiations
    criterion(5, "projection, extension and conjugation lemmas (100 instances)", 30.0,
              [&](std::string& detail) {
                  testing::Rng rng(0xACCE55);
                  LinearMap swap{Ring::make({}),
                                 {{GaussPoly::constant(Ring::make({}), 0),
                                   GaussPoly::constant(Ring::make({}), 1),
                                   GaussPoly::constant(Ring::make({}), 0)},
                                  {GaussPoly::constant(Ring::make({}), 1),
                                   GaussPoly::constant(Ring::make({}), 0),
                                   GaussPoly::constant(Ring::make({}), 0)},
                                  {GaussPoly::constant(Ring::make({}), 0),
                                   GaussPoly::constant(Ring::make({}), 0),
                                   GaussPoly::constant(Ring::make({}), -1)}}};
                  std::vector<LinearMap> pool{
                      swap, pi_normalizer(GaussRat(1)),
                      xi_normalizer(GaussRat(4), GaussRat(2)),
                      theta_normalizer(GaussRat(3), GaussRat(1), GaussRat(2)),
                      psi_normalizer(GaussPoly::constant(Ring::make({}), 2))};
                  for (int trial = 0; trial < 100; ++trial) {
                      auto cat = catalog_cur_sl2((int)rng.integer(0, 1));
                      auto& entry = cat[(size_t)rng.integer(0, (long)cat.size() - 1)];
                      std::map<std::string, GaussRat> params{
                          {"alpha", rng.rat()}, {"beta", rng.rat()}, {"t", rng.rat()},
                          {"q0", rng.rat()},    {"q1", rng.rat()},   {"q2", rng.rat()},
                          {"q3", rng.rat()}};
                      ConformalMap R = instantiate(entry.map, params);
                      // Lemma (a): the projection is a base RB operator
                      LinearMap R0 = project_R0(R);
                      if (!check_rb(sl2, R0, entry.weight).ok()) {
                          detail = "projection of " + entry.name;
                          return false;
                      }
                      // Lemma (b): extensions of base catalog entries verify
                      auto lie_cat = catalog_sl2((int)rng.integer(0, 1));
                      auto& lie_entry =
                          lie_cat[(size_t)rng.integer(0, (long)lie_cat.size() - 1)];
                      LinearMap P = instantiate(lie_entry.map, {{"t", rng.rat()}});
                      ConformalMap ext = extend_partial(P);
                      if (!check_conformal_rb(cur, ext,
                                              lie_entry.weight.promote(ext.ring))
                               .ok()) {
                          detail = "extension of " + lie_entry.name;
                          return false;
                      }
                      // conjugation compatibility: (R^psi)_0 = (R_0)^psi_0
                      auto& psi0 = pool[(size_t)rng.integer(0, (long)pool.size() - 1)];
                      LinearMap lhs = project_R0(conjugate_conformal(cur, R, psi0));
                      LinearMap rhs = conjugate_map(sl2, R0, psi0);
                      if (!mat_equal(lhs.m, rhs.m)) {
                          detail = "conjugation compatibility for " + entry.name;
                          return false;
                      }
                  }
                  return true;
              });

    // 6. CCYBE solution families map to odd-q operators
    criterion(6, "solution families: skew, CCYBE, induced operators, odd q", 30.0,
              [&](std::string& detail) {
                  auto F = ConformalForm::make(cur);
                  Ring fr = Ring::make({"x"});
                  std::vector<std::pair<std::string, GaussPoly>> fs{
                      {"1", GaussPoly::constant(fr, 1)},
                      {"x+3", GaussPoly::variable(fr, "x") + GaussPoly::constant(fr, 3)},
                      {"x-2", GaussPoly::variable(fr, "x") - GaussPoly::constant(fr, 2)}};
                  for (auto& [fname, f] : fs) {
                      for (std::string kase : {"i", "ii"}) {
                          auto r = cursl2_solution_family(kase, f, "x", GaussRat(0),
                                                          GaussRat(0), GaussRat(0),
                                                          GaussRat(1));
                          if (!is_skew(r) || !check_ccybe(cur, r)) {
                              detail = "family " + kase + ", f=" + fname;
                              return false;
                          }
                          ConformalMap P = rb_from_solution(F, r);
                          if (!check_conformal_rb(cur, P, GaussPoly::zero(P.ring)).ok()) {
                              detail = "operator for " + kase + ", f=" + fname;
                              return false;
                          }
                          GaussPoly qpoly;
                          if (kase == "i") {
                              auto fam = in_R1_family(P);
                              if (!fam) {
                                  detail = "family i output not in (R1)";
                                  return false;
                              }
                              qpoly = fam->first;
                          } else {
                              auto fam = in_R2_family(P);
                              if (!fam) {
                                  detail = "family ii output not in (R2)";
                                  return false;
                              }
                              qpoly = *fam;
                          }
                          if (!qpoly.is_odd_in(var::del)) {
                              detail = "q not odd for " + kase + ", f=" + fname;
                              return false;
                          }
                      }
                  }
                  // family (iii) instance h wedge e
                  auto r3 = cursl2_solution_family("iii", GaussPoly::constant(fr, 1), "x",
                                                   GaussRat(1), GaussRat(0), GaussRat(0),
                                                   GaussRat(1));
                  if (!is_skew(r3) || !check_ccybe(cur, r3)) {
                      detail = "family iii h^e";
                      return false;
                  }
                  ConformalMap P3 = rb_from_solution(F, r3);
                  if (!check_conformal_rb(cur, P3, GaussPoly::zero(P3.ring)).ok()) {
                      detail = "operator for h^e";
                      return false;
                  }
                  return true;
              });

    // 7. constant tensors: conformal double bracket vs classical CYBE oracle
    criterion(7, "50 random constant tensors match the classical CYBE oracle", 60.0,
              [&](std::string& detail) {
                  testing::Rng rng(0x07ac1e);
                  Ring w2 = slot_ring(2);
                  for (int trial = 0; trial < 50; ++trial) {
                      std::vector<std::vector<GaussRat>> A(3, std::vector<GaussRat>(3));
                      TensorElement r = TensorElement::zero(w2, 2, 3);
                      for (int i = 0; i < 3; ++i)
                          for (int j = 0; j < 3; ++j) {
                              A[(size_t)i][(size_t)j] = rng.rat(-3, 3);
                              if (!A[(size_t)i][(size_t)j].is_zero())
                                  r.add_term({i, j},
                                             GaussPoly::constant(w2, A[(size_t)i][(size_t)j]));
                          }
                      if (!(double_bracket(cur, r) ==
                            reduce_mod_d3(testing::classical_cybe(sl2, A)))) {
                          detail = "trial " + std::to_string(trial);
                          return false;
                      }
                  }
                  return true;
              });

    // 8. desk-scale Virasoro search
    criterion(8, "Virasoro lattice search finds only R = 0", 60.0,
              [&](std::string& detail) {
                  auto vir = ConformalAlgebra::vir();
                  auto res = bounded_search(vir, GaussRat(0), 3,
                                            {GaussRat(-1), GaussRat(0), GaussRat(1)});
                  if (res.hits.size() != 1 ||
                      !mat_equal(res.hits[0].m, mat_zero(res.hits[0].ring, 1))) {
                      detail = "unexpected hits: " + std::to_string(res.hits.size());
                      return false;
                  }
                  return true;
              });

    // 9. negative controls
    criterion(9, "perturbed catalogs and wrong weights are rejected", 60.0,
              [&](std::string& detail) {
                  // a d*e_1 perturbation of the first image breaks every entry
                  // (note: some other single-entry perturbations stay inside a
                  // family, e.g. (R2) absorbs d h into q)
                  for (int w : {0, 1})
                      for (auto& e : catalog_cur_sl2(w)) {
                          ConformalMap M = e.map;
                          M.m[0][0] += GaussPoly::variable(M.ring, var::del);
                          if (check_conformal_rb(cur, M, e.weight).ok()) {
                              detail = "perturbed " + e.name + " still verifies";
                              return false;
                          }
                      }
                  for (auto& e : catalog_rank2()) {
                      ConformalMap M = e.map;
                      M.m[0][0] += GaussPoly::variable(M.ring, var::del);
                      if (check_conformal_rb(rk2, M, e.weight).ok()) {
                          detail = "perturbed " + e.name + " still verifies";
                          return false;
                      }
                  }
                  auto Q1 = catalog_cur_sl2_entry("Q1");
                  if (check_conformal_rb(cur, Q1.map, GaussPoly::zero(Q1.map.ring)).ok()) {
                      detail = "Q1 passes at weight 0";
                      return false;
                  }
                  return true;
              });

    if (g_failures == 0) std::printf("acceptance: all criteria passed\n");
    else std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
