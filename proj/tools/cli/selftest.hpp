#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "ssav/arith.hpp"
#include "ssav/count.hpp"
#include "ssav/hecke.hpp"
#include "ssav/modclass.hpp"
#include "ssav/qform.hpp"

// Reduced-scale version of the full invariant suite. Every random choice is
// drawn from one generator seeded by --seed.
namespace ssav::cli {

struct SelftestCheck {
  std::string name;
  std::function<bool(std::mt19937_64&)> body;
};

inline std::vector<SelftestCheck> selftest_checks() {
  using modclass::DecompInvariants;
  std::vector<SelftestCheck> checks;

  checks.push_back({"count closed form = genus sum (p < 300, g <= 4)", [](std::mt19937_64&) {
                      for (std::uint64_t p = 2; p < 300; ++p) {
                        if (!arith::is_prime(p)) continue;
                        for (std::uint64_t g = 1; g <= 4; ++g) {
                          const auto r = count::count_superspecial(p, g);
                          if (r.total != r.genus_sum_total) return false;
                        }
                      }
                      return true;
                    }});

  checks.push_back({"class number enumeration = Dirichlet (|D| < 3000)", [](std::mt19937_64&) {
                      for (std::int64_t d = -3; d > -3000; --d) {
                        const auto r = ((d % 4) + 4) % 4;
                        if (r != 0 && r != 1) continue;
                        if (qform::factor_discriminant(d).conductor > 2) continue;
                        if (qform::class_number(d) != qform::class_number_dirichlet(d)) return false;
                      }
                      return true;
                    }});

  checks.push_back({"unit index law (p < 2000)", [](std::mt19937_64&) {
                      for (std::uint64_t p = 3; p < 2000; p += 4) {
                        if (!arith::is_prime(p)) continue;
                        const auto sp = static_cast<std::int64_t>(p);
                        if (qform::class_number(-4 * sp) != count::unit_index(p) * qform::class_number(-sp))
                          return false;
                      }
                      return true;
                    }});

  checks.push_back({"small primes: |S'| = 3, 4", [](std::mt19937_64&) {
                      return count::sprime_small(2) == 3 && count::sprime_small(3) == 4;
                    }});

  checks.push_back({"Deuring parity and two-twist relation (p < 2000)", [](std::mt19937_64&) {
                      for (std::uint64_t p = 5; p < 2000; ++p) {
                        if (!arith::is_prime(p)) continue;
                        if (count::type_number_check(p) < 1) return false;
                        if (count::count_superspecial(p, 1).total != 2 * count::deuring_hprime(p)) return false;
                      }
                      return true;
                    }});

  checks.push_back({"module classifier on random conjugates (n <= 6)", [](std::mt19937_64& rng) {
                      for (const auto& [p, k] : std::vector<std::pair<std::uint64_t, int>>{{3, 6}, {11, 6}, {7, 6}, {23, 6}}) {
                        const auto kase = modclass::module_case(p);
                        for (std::size_t r = 0; r <= 3; ++r)
                          for (std::size_t s = 0; s <= 6; ++s)
                            for (std::size_t t = 0; t <= (kase == modclass::ModuleCase::b ? 6u : 0u); ++t) {
                              const DecompInvariants inv{kase, r, s, t};
                              if (inv.rank() == 0 || inv.rank() > 6) continue;
                              const auto canon = modclass::canonical_module(p, k, inv);
                              for (int trial = 0; trial < 5; ++trial) {
                                const auto m = modclass::random_conjugate(canon, rng());
                                if (!(modclass::decompose(m) == inv)) return false;
                                const auto res = modclass::split(m);
                                const auto u_inv = arith::inverse(res.basis);
                                if (!u_inv || !(*u_inv * m.action * res.basis == canon.action)) return false;
                              }
                            }
                      }
                      return true;
                    }});

  checks.push_back({"Hecke guarantee implies trivial field quotient", [](std::mt19937_64&) {
                      for (std::uint64_t p = 3; p < 200; p += 4) {
                        if (!arith::is_prime(p)) continue;
                        for (std::uint64_t ell : {3, 5, 7, 11, 13}) {
                          if (ell == p) continue;
                          const auto rep = hecke::hecke_orbit_report(p, 3, ell);
                          if (rep.guarantee && rep.orbit_total_guaranteed != 4u) return false;
                        }
                      }
                      return true;
                    }});

  checks.push_back({"class group axioms on random triples", [](std::mt19937_64& rng) {
                      for (std::int64_t d : {-23, -47, -44, -92, -163}) {
                        const auto g = qform::class_group(d);
                        const auto n = g.size();
                        for (std::size_t i = 0; i < n; ++i)
                          if (n % g.order(i) != 0) return false;
                        for (int trial = 0; trial < 200; ++trial) {
                          const auto a = rng() % n, b = rng() % n, c = rng() % n;
                          if (g.compose(a, g.identity()) != a) return false;
                          if (g.compose(a, g.inverse(a)) != g.identity()) return false;
                          if (g.compose(a, b) != g.compose(b, a)) return false;
                          if (g.compose(g.compose(a, b), c) != g.compose(a, g.compose(b, c))) return false;
                        }
                      }
                      return true;
                    }});
  return checks;
}

inline int run_selftest(std::uint64_t seed, std::ostream& out, std::ostream& err) {
  std::mt19937_64 rng(seed);
  int failed = 0;
  for (const auto& check : selftest_checks()) {
    bool ok = false;
    try {
      ok = check.body(rng);
    } catch (const std::exception& e) {
      err << "selftest: " << check.name << ": " << e.what() << "\n";
    }
    out << (ok ? "PASS " : "FAIL ") << check.name << "\n";
    if (!ok) ++failed;
  }
  out << "seed " << seed << ": " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace ssav::cli
