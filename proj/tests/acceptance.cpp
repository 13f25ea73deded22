// One PASS/FAIL line per acceptance criterion. Exit status 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "zclosure/closures.hpp"
#include "zclosure/suites.hpp"
#include "zclosure/witnesses.hpp"

using namespace zclosure;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool passed = true;
  std::string detail;
};

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string seconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << s << " s";
  return out.str();
}

// Runs a suite; lists failing rows in the detail.
Verdict suite(const std::string& name, double limit_seconds) {
  const auto start = Clock::now();
  const SuiteReport report = run_suite(name);
  const double elapsed = since(start);
  Verdict v{report.passed() && elapsed < limit_seconds, std::to_string(report.rows.size()) + " rows"};
  for (const CheckRow& row : report.rows) {
    if (!row.passed) v.detail += "; failed: " + row.name + " [" + row.detail + "]";
    if (row.seconds) v.detail += "; " + row.name + " " + seconds(*row.seconds);
  }
  v.detail += "; " + seconds(elapsed) + " (limit " + seconds(limit_seconds) + ")";
  return v;
}

Verdict oracle_roundtrips() {
  Verdict v;
  std::size_t checks = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok && v.passed) v.detail = "first failure: " + what + "; ";
    v.passed = v.passed && ok;
  };

  const auto exact = oracle::pascal(300);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField f(p);
    for (int n = 0; n <= 300; ++n) {
      for (int m = 0; m <= 300; ++m) {
        const std::uint32_t want = m <= n ? oracle::mod(exact[n][m], p) : 0;
        expect(binom_mod_p(n, m, f) == want, "binomial " + std::to_string(n) + "," + std::to_string(m));
      }
    }
  }

  std::mt19937_64 rng(20240611);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField f(p);
    for (int n = 0; n <= 12; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<Elem> values(n + 1);
        for (Elem& x : values) x = static_cast<Elem>(rng() % p);
        const SymmetricPoly g = weights_to_sigma_coeffs(f, values);
        expect(sym_weight_values(g) == values, "sigma round trip");
        for (int w = 0; w <= n; ++w) expect(oracle::sym_value(g.coeffs(), w, p) == values[w], "sigma value");
        if (n <= 8) {
          const auto table = sym_to_multilinear(g).value_table();
          for (std::uint32_t x = 0; x < table.size(); ++x) expect(table[x] == values[std::popcount(x)], "sigma expansion");
        }
      }
    }
  }

  for (const auto& [p, max_d, max_n] : {std::tuple{2u, 6, 8}, std::tuple{3u, 4, 7}}) {
    for (int n = 0; n <= max_n; ++n) {
      for (int d = 0; d <= max_d; ++d) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
          const auto e = oracle::bitmap(n, bits);
          const auto q = ClosureQuery::make(PrimeField(p), n, d, SymmetricSet::from_weights(n, oracle::weights(e)));
          expect(symcl(q).closure.weights() == oracle::weights(oracle::symcl(p, n, d, e)), "symcl " + q.e.to_string());
        }
      }
    }
  }

  std::size_t witnesses = 0;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField f(p);
    const int n = 20;
    for (int i = 0; i <= n; ++i) {
      const int m = static_cast<int>(int_pow(p, ell_p(i, f)));
      const auto h = h_report(i, f, n);
      const auto& hp = std::get<SymmetricPoly>(h.polynomial);
      bool ok = h.verified && degree_at_most(hp.degree(), m - 1);
      for (int w = 0; w <= n; ++w) ok = ok && (oracle::sym_value(hp.coeffs(), w, p) != 0) == (w % m == i % m);
      expect(ok, "h_" + std::to_string(i));
      ++witnesses;
      for (int j = i + m; j <= n; j += m) {
        const auto r = r_report(i, j, f, n);
        const auto& rp = std::get<SymmetricPoly>(r.polynomial);
        bool good = r.verified && degree_at_most(rp.degree(), j - i - m) && oracle::sym_value(rp.coeffs(), j, p) != 0;
        for (int w = i + m; w < j; w += m) good = good && oracle::sym_value(rp.coeffs(), w, p) == 0;
        expect(good, "r_" + std::to_string(i) + "," + std::to_string(j));
        ++witnesses;
      }
    }
  }
  v.detail += std::to_string(checks) + " checks, " + std::to_string(witnesses) + " witnesses";
  return v;
}

Verdict performance() {
  const int n = 2000;
  std::mt19937_64 rng(20240611);
  std::vector<int> all(n + 1);
  for (int w = 0; w <= n; ++w) all[w] = w;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(500);
  const auto q = ClosureQuery::make(PrimeField(2), n, 200, SymmetricSet::from_weights(n, all));
  const auto start = Clock::now();
  const auto result = symcl(q);
  const double elapsed = since(start);
  return {elapsed < 5.0 && q.e.is_subset_of(result.closure),
          "p=2 n=2000 d=200 |E|=500: " + seconds(elapsed) + " (limit 5.00 s), closure size " +
              std::to_string(result.closure.size())};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"layer theorem", [] { return suite("layer-theorem", 300); }},
      {"main theorem", [] { return suite("main-theorem", 1800); }},
      {"motivating lemmas", [] { return suite("motivating-lemmas", 600); }},
      {"counterexample", [] { return suite("counterexample", 10); }},
      {"duality", [] { return suite("duality", 600); }},
      {"structural lemmas", [] { return suite("translate-lemmas", 600); }},
      {"oracle round trips", oracle_roundtrips},
      {"symcl performance", performance},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all = all && v.passed;
    std::cout << (v.passed ? "PASS" : "FAIL") << "  " << k + 1 << ". " << criteria[k].first << "  (" << v.detail << ")"
              << std::endl;
  }
  return all ? 0 : 1;
}
