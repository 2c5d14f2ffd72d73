#pragma once

#include <cstdint>
#include <exception>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/selftest.hpp"
#include "json.hpp"
#include "ssav/arith.hpp"
#include "ssav/count.hpp"
#include "ssav/errors.hpp"
#include "ssav/hecke.hpp"
#include "ssav/modclass.hpp"
#include "ssav/qform.hpp"

namespace ssav::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitMalformed = 2;

// int64 forms: keep |D| where enumeration and the character table stay cheap
inline constexpr std::int64_t kMaxClassnumDisc = 100'000'000;
inline constexpr std::int64_t kMaxClassgroupDisc = 10'000'000;
inline constexpr std::uint64_t kMaxTablePrime = 10'000'000;
inline constexpr std::uint64_t kDefaultSeed = 20240917;

using json = nlohmann::ordered_json;

namespace detail {

inline std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

inline json count_json(const count::CountReport& r) {
  json doc;
  doc["p"] = r.p;
  doc["g"] = r.g;
  doc["branch"] = std::string(count::branch_name(r.branch));
  doc["h_field"] = r.h_field;
  doc["h_order"] = r.h_order;
  doc["unit_index"] = r.unit_index;
  doc["per_genus"] = r.per_genus;
  doc["total"] = r.total;
  return doc;
}

inline void require_disc(std::int64_t d, std::int64_t cap) {
  if (d >= 0) throw std::invalid_argument("discriminant must be negative, got " + std::to_string(d));
  if (-d > cap) throw std::invalid_argument("|D| must be at most " + std::to_string(cap));
  qform::check_discriminant(d);
}

inline std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
  if (n > kMaxTablePrime) throw std::invalid_argument("--pmax must be at most " + std::to_string(kMaxTablePrime));
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p)
    if (arith::is_prime(p)) out.push_back(p);
  return out;
}

inline int cmd_count(std::uint64_t p, std::uint64_t g, bool as_json, std::ostream& out) {
  const auto r = count::count_superspecial(p, g);
  if (r.total != r.genus_sum_total) throw InvariantViolation("closed form and genus sum disagree");
  if (as_json) {
    out << count_json(r).dump() << "\n";
  } else {
    out << "p=" << r.p << " g=" << r.g << " branch=" << count::branch_name(r.branch) << " h_field=" << r.h_field
        << " h_order=" << r.h_order << " unit_index=" << r.unit_index << " per_genus=" << join(r.per_genus)
        << " total=" << r.total << "\n";
  }
  return kExitOk;
}

inline int cmd_table(std::uint64_t pmax, std::uint64_t g, const std::string& format, std::ostream& out,
                     std::ostream& err) {
  if (g < 1) throw std::invalid_argument("g must be >= 1");
  std::vector<count::CountReport> rows;
  for (const auto p : primes_upto(pmax)) {
    rows.push_back(count::count_superspecial(p, g));
    if (rows.back().total != rows.back().genus_sum_total) {
      err << "table: p=" << p << " total " << rows.back().total << " != genus sum " << rows.back().genus_sum_total
          << "\n";
      return kExitViolation;
    }
  }
  if (format == "csv") {
    out << "p,g,branch,h_field,h_order,unit_index,total,genus_sum_total\n";
    for (const auto& r : rows)
      out << r.p << "," << r.g << "," << count::branch_name(r.branch) << "," << r.h_field << "," << r.h_order << ","
          << r.unit_index << "," << r.total << "," << r.genus_sum_total << "\n";
  } else {
    auto arr = json::array();
    for (const auto& r : rows) {
      json row;
      row["p"] = r.p;
      row["g"] = r.g;
      row["branch"] = std::string(count::branch_name(r.branch));
      row["h_field"] = r.h_field;
      row["h_order"] = r.h_order;
      row["unit_index"] = r.unit_index;
      row["total"] = r.total;
      row["genus_sum_total"] = r.genus_sum_total;
      arr.push_back(std::move(row));
    }
    out << arr.dump() << "\n";
  }
  return kExitOk;
}

inline int cmd_classnum(std::int64_t d, bool oracle, std::ostream& out) {
  require_disc(d, kMaxClassnumDisc);
  const std::size_t h = qform::class_number(d);
  if (!oracle) {
    out << h << "\n";
    return kExitOk;
  }
  const auto f = qform::factor_discriminant(d);
  if (f.conductor > 2) {
    out << h << ", oracle n/a (conductor " << f.conductor << ")\n";
    return kExitOk;
  }
  const std::size_t h2 = qform::class_number_dirichlet(d);
  out << h << ", oracle " << h2 << ", " << (h == h2 ? "agree" : "disagree") << "\n";
  return h == h2 ? kExitOk : kExitViolation;
}

inline int cmd_classgroup(std::int64_t d, std::ostream& out) {
  require_disc(d, kMaxClassgroupDisc);
  const auto g = qform::class_group(d);
  json doc;
  doc["disc"] = d;
  doc["h"] = g.size();
  doc["cyclic"] = g.is_cyclic();
  auto elems = json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& f = g.element(i);
    if (g.size() % g.order(i) != 0) throw InvariantViolation("element order does not divide h");
    elems.push_back(json{{"form", {f.a, f.b, f.c}}, {"order", g.order(i)}});
  }
  doc["elements"] = std::move(elems);
  out << doc.dump() << "\n";
  return kExitOk;
}

inline int cmd_decompose(const std::string& path, bool with_split, std::ostream& out) {
  const auto m = modclass::load_module(path);
  if (const auto v = modclass::validate(m); !v) throw std::invalid_argument("invalid module: " + v.diagnostic);
  json doc;
  if (with_split) {
    const auto res = modclass::split(m);
    doc = modclass::invariants_to_json(res.invariants);
    doc["basis"] = modclass::matrix_to_json(res.basis);
    doc["canonical"] = modclass::matrix_to_json(modclass::canonical_module(m.p, m.precision(), res.invariants).action);
  } else {
    doc = modclass::invariants_to_json(modclass::decompose(m));
  }
  out << doc.dump() << "\n";
  return kExitOk;
}

inline int cmd_hecke(std::uint64_t p, std::uint64_t g, std::uint64_t ell, std::ostream& out) {
  const auto r = hecke::hecke_orbit_report(p, g, ell);
  json doc;
  doc["p"] = r.p;
  doc["g"] = r.g;
  doc["ell"] = r.ell;
  doc["pic_O_loc"] = r.pic_O_loc;
  doc["pic_R_loc"] = r.pic_R_loc;
  doc["guarantee"] = r.guarantee;
  doc["orbit_total_guaranteed"] = r.orbit_total_guaranteed ? json(*r.orbit_total_guaranteed) : json(nullptr);
  doc["per_genus_quotients"] = r.per_genus_quotients;
  out << doc.dump() << "\n";
  return kExitOk;
}

inline int cmd_deuring(std::uint64_t pmax, std::ostream& out) {
  int status = kExitOk;
  out << "p,h,hprime,t,parity,integrality\n";
  for (const auto p : primes_upto(pmax)) {
    if (p <= 3) continue;
    const auto h = count::eichler_h(p);
    const auto hp = count::deuring_hprime(p);
    const bool even = (h + hp) % 2 == 0;
    const std::size_t t = (h + hp) / 2;
    const bool integral = even && t >= 1 && count::count_superspecial(p, 1).total == 2 * hp;
    out << p << "," << h << "," << hp << "," << (even ? std::to_string(t) : "-") << ","
        << (even ? "ok" : "FAIL") << "," << (integral ? "ok" : "FAIL") << "\n";
    if (!even || !integral) status = kExitViolation;
  }
  return status;
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Superspecial abelian variety counts, form class groups and 2-adic module classification", "ssav"};
  app.require_subcommand(1, 1);

  std::uint64_t p = 0, g = 1, ell = 0, pmax = 0, seed = kDefaultSeed;
  std::int64_t disc = 0;
  bool as_json = false, oracle = false, with_split = false;
  std::string format = "csv", file;

  auto* count = app.add_subcommand("count", "count isomorphism classes for one (p, g)");
  count->add_option("--p", p, "prime")->required();
  count->add_option("--g", g, "dimension")->required();
  count->add_flag("--json", as_json, "emit JSON");

  auto* table = app.add_subcommand("table", "count for every prime up to --pmax");
  table->add_option("--pmax", pmax)->required();
  table->add_option("--g", g)->required();
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* classnum = app.add_subcommand("classnum", "class number of a negative discriminant");
  classnum->add_option("--disc", disc)->required();
  classnum->add_flag("--oracle", oracle, "cross-check with the analytic class number formula");

  auto* classgroup = app.add_subcommand("classgroup", "reduced forms with their orders");
  classgroup->add_option("--disc", disc)->required();

  auto* decompose = app.add_subcommand("decompose", "invariants (r, s, t) of a 2-adic module");
  decompose->add_option("--file", file)->required();
  decompose->add_flag("--split", with_split, "also emit a splitting basis");

  auto* hecke = app.add_subcommand("hecke", "ell-adic Hecke orbit report");
  hecke->add_option("--p", p)->required();
  hecke->add_option("--g", g)->required();
  hecke->add_option("--ell", ell)->required();

  auto* deuring = app.add_subcommand("deuring", "h, h' and type number for primes up to --pmax");
  deuring->add_option("--pmax", pmax)->required();

  auto* selftest = app.add_subcommand("selftest", "reduced-scale invariant suite");
  selftest->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }

  try {
    if (*count) return detail::cmd_count(p, g, as_json, out);
    if (*table) return detail::cmd_table(pmax, g, format, out, err);
    if (*classnum) return detail::cmd_classnum(disc, oracle, out);
    if (*classgroup) return detail::cmd_classgroup(disc, out);
    if (*decompose) return detail::cmd_decompose(file, with_split, out);
    if (*hecke) return detail::cmd_hecke(p, g, ell, out);
    if (*deuring) return detail::cmd_deuring(pmax, out);
    if (*selftest) return run_selftest(seed, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    // PrecisionError, InvariantViolation and internal logic errors
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitMalformed;
}

}  // namespace ssav::cli
