#include "zclosure/suites.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>

#include "zclosure/closures.hpp"
#include "zclosure/codes.hpp"
#include "zclosure/error.hpp"
#include "zclosure/witnesses.hpp"

namespace zclosure {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

SymmetricSet set_from_bits(int n, std::uint64_t bits) {
  SymmetricSet e(n);
  for (int w = 0; w <= n; ++w) {
    if ((bits >> w) & 1u) e.insert(w);
  }
  return e;
}

std::uint64_t bits_of(const SymmetricSet& e) {
  std::uint64_t bits = 0;
  for (int w : e.weights()) bits |= std::uint64_t{1} << w;
  return bits;
}

std::string brace(const SymmetricSet& e) { return "{" + e.to_string() + "}"; }

// Memoized closures for the exhaustive loops.
class ClosureCache {
 public:
  const SymmetricSet& zcl(const PrimeField& f, int n, int d, const SymmetricSet& e) { return get(f, n, d, e, false); }
  const SymmetricSet& sym(const PrimeField& f, int n, int d, const SymmetricSet& e) { return get(f, n, d, e, true); }

 private:
  const SymmetricSet& get(const PrimeField& f, int n, int d, const SymmetricSet& e, bool symmetric) {
    const auto key = std::make_tuple(f.p(), n, d, bits_of(e), symmetric);
    auto it = memo_.find(key);
    if (it == memo_.end()) {
      const ClosureQuery q = ClosureQuery::make(f, n, d, e);
      it = memo_.emplace(key, symmetric ? symcl(q).closure : zcl_bruteforce(q).closure).first;
    }
    return it->second;
  }

  std::map<std::tuple<std::uint32_t, int, int, std::uint64_t, bool>, SymmetricSet> memo_;
};

// Tally of one named check.
struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::string first_violation;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (violations++ == 0) first_violation = what;
  }

  CheckRow row(std::string name) const {
    std::string detail = std::to_string(checked) + " instances, " + std::to_string(violations) + " violations";
    if (violations != 0) detail += "; first: " + first_violation;
    return {std::move(name), violations == 0 && checked > 0, std::move(detail), std::nullopt};
  }
};

std::string instance(std::uint32_t p, int n, int d, const SymmetricSet& e) {
  return "p=" + std::to_string(p) + " n=" + std::to_string(n) + " d=" + std::to_string(d) + " E=" + brace(e);
}

std::uint64_t modulus_for(int d, const PrimeField& f) { return int_pow(f.p(), ell_p(static_cast<std::uint64_t>(d), f)); }

// --- layer theorem ---------------------------------------------------------

CheckRow layer_row(std::uint32_t p, int max_n) {
  const PrimeField f(p);
  Tally tally;
  for (int n = 1; n <= max_n; ++n) {
    for (int d = 0; d <= n; ++d) {
      for (int i = 0; i <= n; ++i) {
        const ClosureQuery q = ClosureQuery::make(f, n, d, SymmetricSet::from_weights(n, {i}));
        const SymmetricSet formula = layer_zcl(q).closure;
        const SymmetricSet brute = zcl_bruteforce(q).closure;
        tally.expect(formula == brute, instance(p, n, d, q.e) + ": formula " + brace(formula) + " vs " + brace(brute));
      }
    }
  }
  return tally.row("layer formula = brute force, p=" + std::to_string(p) + ", n<=" + std::to_string(max_n) + ", all (i,d)");
}

// --- main theorem ----------------------------------------------------------

struct MainCase {
  std::uint32_t p;
  int n;
  int d;
  bool exhaustive;
};

CheckRow main_row(const MainCase& c, std::uint64_t seed, int samples, ClosureCache& cache) {
  const PrimeField f(c.p);
  const auto start = Clock::now();
  Tally tally;
  const int width = c.n - 2 * c.d + 1;
  auto check = [&](std::uint64_t sub) {
    const SymmetricSet e = set_from_bits(c.n, sub << c.d);
    const ClosureQuery q = ClosureQuery::make(f, c.n, c.d, e);
    if (!main_theorem_applies(q)) {
      tally.expect(false, instance(c.p, c.n, c.d, e) + ": hypotheses unexpectedly fail");
      return;
    }
    const SymmetricSet& brute = cache.zcl(f, c.n, c.d, e);
    const SymmetricSet fast = zcl_fast(q).closure;
    tally.expect(brute == fast, instance(c.p, c.n, c.d, e) + ": zcl " + brace(brute) + " vs symcl " + brace(fast));
  };
  std::string how;
  if (c.exhaustive) {
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << width); ++sub) check(sub);
    how = "all subsets";
  } else {
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) check(rng() & ((std::uint64_t{1} << width) - 1));
    how = std::to_string(samples) + " random subsets, seed " + std::to_string(seed);
  }
  CheckRow row = tally.row("zcl = symcl, p=" + std::to_string(c.p) + " n=" + std::to_string(c.n) + " d=" +
                           std::to_string(c.d) + " (" + how + ")");
  row.seconds = seconds_since(start);
  return row;
}

// --- motivating lemmas -----------------------------------------------------

bool in_zcl(const PrimeField& f, int n, int d, int i, int j) {
  return zcl_bruteforce(ClosureQuery::make(f, n, d, SymmetricSet::from_weights(n, {i}))).closure.contains(j);
}

std::string membership(int j, int n, int d, int i, bool member = true) {
  return std::to_string(j) + (member ? " in" : " not in") + " zcl_{" + std::to_string(n) + "," + std::to_string(d) + "}(" +
         std::to_string(i) + ")";
}

// --- permutations ----------------------------------------------------------

std::uint32_t permute_mask(std::uint32_t mask, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if ((mask >> i) & 1u) out |= std::uint32_t{1} << perm[i];
  }
  return out;
}

}  // namespace

bool SuiteReport::passed() const noexcept {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"layer-theorem",    "main-theorem",      "duality",
                                              "translate-lemmas", "motivating-lemmas", "counterexample"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "layer-theorem") return layer_theorem_suite();
  if (name == "main-theorem") return main_theorem_suite(options);
  if (name == "duality") return duality_suite();
  if (name == "translate-lemmas") return translate_lemmas_suite();
  if (name == "motivating-lemmas") return motivating_lemmas_suite();
  if (name == "counterexample") return counterexample_suite();
  raise(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

SuiteReport layer_theorem_suite() {
  const auto start = Clock::now();
  SuiteReport report{"layer-theorem", {}, {}, 0.0};
  report.rows.push_back(layer_row(2, 12));
  report.rows.push_back(layer_row(3, 10));
  report.seconds = seconds_since(start);
  return report;
}

SuiteReport main_theorem_suite(const SuiteOptions& options) {
  const auto start = Clock::now();
  SuiteReport report{"main-theorem", {}, {}, 0.0};
  ClosureCache cache;
  const std::vector<MainCase> cases{{2, 7, 1, true},   {2, 8, 1, true},   {3, 11, 1, false},
                                    {3, 11, 2, false}, {2, 15, 2, false}, {2, 15, 3, false}};
  for (std::size_t k = 0; k < cases.size(); ++k) {
    report.rows.push_back(main_row(cases[k], options.seed + k, options.samples, cache));
  }
  report.notes.push_back("seed " + std::to_string(options.seed) + " (row k uses seed + k)");
  report.seconds = seconds_since(start);
  return report;
}

SuiteReport duality_suite() {
  const auto start = Clock::now();
  SuiteReport report{"duality", {}, {}, 0.0};
  const PrimeField f2(2);
  const PrimeField f3(3);

  for (const auto& [field, max_n] : {std::pair{f2, 6}, std::pair{f3, 4}}) {
    Tally tally;
    for (int n = 1; n <= max_n; ++n) {
      for (int d = 0; d <= n; ++d) {
        tally.expect(check_rm_duality(field, n, d), "n=" + std::to_string(n) + " d=" + std::to_string(d));
      }
    }
    report.rows.push_back(tally.row("Reed-Muller dual, p=" + std::to_string(field.p()) + ", n<=" + std::to_string(max_n) + ", all d"));
  }

  struct WeightedCase {
    PrimeField field;
    int max_r;
    std::vector<int> ks;
  };
  for (const WeightedCase& c : {WeightedCase{f2, 3, {1}}, WeightedCase{f3, 2, {1, 2}}}) {
    Tally tally;
    for (int r = 0; r <= c.max_r; ++r) {
      for (int k : c.ks) {
        const int big_n = (k + 1) * static_cast<int>(int_pow(c.field.p(), static_cast<unsigned>(r))) - 1;
        for (int d = 0; d <= big_n; ++d) {
          tally.expect(check_weighted_duality(c.field, r, k, d),
                       "r=" + std::to_string(r) + " k=" + std::to_string(k) + " d=" + std::to_string(d));
        }
      }
    }
    report.rows.push_back(tally.row("weighted Reed-Muller dual, p=" + std::to_string(c.field.p()) + ", r<=" +
                                    std::to_string(c.max_r) + ", all d<=N"));
  }

  for (const auto& [field, n] : {std::pair{f2, 3}, std::pair{f2, 7}, std::pair{f3, 5}, std::pair{f3, 8}}) {
    Tally tally;
    for (int d = 0; d <= n; ++d) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
        const SymmetricSet e = set_from_bits(n, bits);
        const TopLayerCheck c = top_layer_equivalence_check(ClosureQuery::make(field, n, d, e));
        tally.expect(c.via_zcl == c.via_symcl, instance(field.p(), n, d, e));
      }
    }
    report.rows.push_back(tally.row("top layer: zcl and symcl agree, p=" + std::to_string(field.p()) + " n=" +
                                    std::to_string(n) + ", all E, all d"));
  }
  report.seconds = seconds_since(start);
  return report;
}

SuiteReport translate_lemmas_suite() {
  const auto start = Clock::now();
  SuiteReport report{"translate-lemmas", {}, {}, 0.0};
  ClosureCache cache;
  const std::vector<PrimeField> fields{PrimeField(2), PrimeField(3)};
  constexpr int kZclMaxN = 7;
  constexpr int kSymMaxN = 9;

  // Closure monotone in n, reflection, and shift.
  {
    Tally grow, reflect_tally, shift;
    for (const PrimeField& f : fields) {
      for (int n = 1; n <= kZclMaxN - 2; ++n) {
        for (int d = 0; d <= n; ++d) {
          for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
            const SymmetricSet e = set_from_bits(n, bits);
            const SymmetricSet& cl = cache.zcl(f, n, d, e);
            const SymmetricSet& mirrored = cache.zcl(f, n, d, reflect(e));
            for (int j : cl.weights()) {
              for (int m = n + 1; m <= n + 2; ++m) {
                grow.expect(cache.zcl(f, m, d, set_from_bits(m, bits)).contains(j),
                            instance(f.p(), n, d, e) + " j=" + std::to_string(j) + " m=" + std::to_string(m));
              }
              reflect_tally.expect(mirrored.contains(n - j), instance(f.p(), n, d, e) + " j=" + std::to_string(j));
              for (int k = 1; k <= 2; ++k) {
                shift.expect(cache.zcl(f, n + k, d, translate(e, k, n + k)).contains(j + k),
                             instance(f.p(), n, d, e) + " j=" + std::to_string(j) + " k=" + std::to_string(k));
              }
            }
          }
        }
      }
    }
    report.rows.push_back(grow.row("j in zcl_{n,d}(E) => j in zcl_{m,d}(E), m in {n+1,n+2}"));
    report.rows.push_back(reflect_tally.row("j in zcl_{n,d}(E) => n-j in zcl_{n,d}(n-E)"));
    report.rows.push_back(shift.row("j in zcl_{n,d}(E) => j+k in zcl_{n+k,d}(E+k), k in {1,2}"));
  }

  // Symmetric closure commutes with translation.
  {
    Tally tally;
    for (const PrimeField& f : fields) {
      for (int n = 1; n <= kSymMaxN; ++n) {
        for (int d = 0; d <= n; ++d) {
          for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
            const SymmetricSet e = set_from_bits(n, bits);
            const SymmetricSet& base = cache.sym(f, n, d, e);
            const int top = e.empty() ? 0 : e.weights().back();
            for (int k = 1; top + k <= n; ++k) {
              const SymmetricSet& moved = cache.sym(f, n, d, translate(e, k, n));
              for (int j = 0; j + k <= n; ++j) {
                tally.expect(base.contains(j) == moved.contains(j + k),
                             instance(f.p(), n, d, e) + " j=" + std::to_string(j) + " k=" + std::to_string(k));
              }
            }
          }
        }
      }
    }
    report.rows.push_back(tally.row("j in symcl_{n,d}(E) <=> j+k in symcl_{n,d}(E+k)"));
  }

  // f^+ and f^-: mutual inverses and layer shifts of the zero set.
  {
    Tally inverse, plus, minus;
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const PrimeField f(p);
      const int max_d = p == 2 ? 4 : (p == 3 ? 3 : 2);
      for (int n = 1; n <= 8; ++n) {
        const int d_top = std::min(max_d, n);
        const std::uint64_t count = int_pow(p, static_cast<unsigned>(d_top + 1));
        for (std::uint64_t code = 0; code < count; ++code) {
          std::vector<Elem> coeffs(static_cast<std::size_t>(n) + 1, 0);
          std::uint64_t rest = code;
          for (int u = 0; u <= d_top; ++u) {
            coeffs[u] = static_cast<Elem>(rest % p);
            rest /= p;
          }
          const SymmetricPoly g(f, n, coeffs);
          const SymmetricPoly gp = f_plus(g);
          const SymmetricPoly gm = f_minus(g);
          const std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " code=" + std::to_string(code);
          inverse.expect(f_minus(gp) == g && f_plus(gm) == g, tag);
          const auto v = sym_weight_values(g);
          const auto vp = sym_weight_values(gp);
          const auto vm = sym_weight_values(gm);
          for (int j = 0; j < n; ++j) plus.expect((v[j] == 0) == (vp[j + 1] == 0), tag + " j=" + std::to_string(j));
          for (int j = 1; j <= n; ++j) minus.expect((v[j] == 0) == (vm[j - 1] == 0), tag + " j=" + std::to_string(j));
        }
      }
    }
    report.rows.push_back(inverse.row("(f+)- = (f-)+ = f"));
    // The suffix-sum map sum_{v >= u} c_v undoes f+ only up to degree 1.
    const PrimeField f2(2);
    const SymmetricPoly s2 = SymmetricPoly::sigma(f2, 2, 2);
    const SymmetricPoly shifted = f_plus(s2);
    std::vector<Elem> suffix(3, 0);
    for (int u = 2; u >= 0; --u) suffix[u] = f2.add(shifted.coeff(u), u < 2 ? suffix[u + 1] : 0);
    report.notes.push_back(std::string("suffix sums of f+ ") + (SymmetricPoly(f2, 2, suffix) == s2 ? "recover" : "do not recover") +
                           " f = sigma_2 over F_2 (n = 2)");
    report.rows.push_back(plus.row("f vanishes on layer j <=> f+ vanishes on layer j+1"));
    report.rows.push_back(minus.row("f vanishes on layer j <=> f- vanishes on layer j-1"));
  }

  // Residue-class invariance of both closures.
  {
    Tally swap_sym, class_sym, swap_zcl, class_zcl;
    for (const PrimeField& f : fields) {
      for (int n = 1; n <= kSymMaxN; ++n) {
        for (int d = 0; d <= n; ++d) {
          const auto m = static_cast<int>(std::min<std::uint64_t>(modulus_for(d, f), 1000));
          for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
            const SymmetricSet e = set_from_bits(n, bits);
            const SymmetricSet& cl = cache.sym(f, n, d, e);
            for (int j : e.weights()) {
              if (j + m > n) continue;
              SymmetricSet moved = e;
              moved.erase(j);
              moved.insert(j + m);
              swap_sym.expect(cache.sym(f, n, d, moved) == cl, instance(f.p(), n, d, e) + " j=" + std::to_string(j));
            }
            for (int j = 0; j <= n; ++j) {
              const SymmetricSet cls = e_oplus(SymmetricSet::from_weights(n, {j}), static_cast<std::uint64_t>(m));
              class_sym.expect(cl.contains(j) == cls.is_subset_of(cl), instance(f.p(), n, d, e) + " j=" + std::to_string(j));
            }
          }
        }
      }
      for (int n = 1; n <= kZclMaxN; ++n) {
        for (int d = 0; 2 * d <= n; ++d) {
          const auto m = static_cast<int>(modulus_for(d, f));
          const int width = n - 2 * d + 1;
          for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << width); ++sub) {
            const SymmetricSet e = set_from_bits(n, sub << d);
            const SymmetricSet& cl = cache.zcl(f, n, d, e);
            for (int j : e.weights()) {
              if (j + m > n - d) continue;
              SymmetricSet moved = e;
              moved.erase(j);
              moved.insert(j + m);
              swap_zcl.expect(cache.zcl(f, n, d, moved) == cl, instance(f.p(), n, d, e) + " j=" + std::to_string(j));
            }
            for (int j = d; j <= n - d; ++j) {
              const SymmetricSet cls = e_oplus(SymmetricSet::from_weights(n, {j}), static_cast<std::uint64_t>(m));
              class_zcl.expect(cl.contains(j) == cls.is_subset_of(cl), instance(f.p(), n, d, e) + " j=" + std::to_string(j));
            }
          }
        }
      }
    }
    report.rows.push_back(swap_sym.row("symcl unchanged when j in E is replaced by j + p^l"));
    report.rows.push_back(class_sym.row("j in symcl(E) <=> j (+) p^l inside symcl(E)"));
    report.rows.push_back(swap_zcl.row("zcl unchanged when j in E is replaced by j + p^l inside [d,n-d]"));
    report.rows.push_back(class_zcl.row("j in zcl(E) <=> j (+) p^l inside zcl(E), E and j inside [d,n-d]"));
  }

  // Reduction of E to one window of length p^l.
  {
    Tally sym_tally, zcl_tally;
    for (const PrimeField& f : fields) {
      for (int n = 1; n <= kZclMaxN; ++n) {
        for (int d = 0; 2 * d <= n; ++d) {
          const auto m = static_cast<int>(modulus_for(d, f));
          const int width = n - 2 * d + 1;
          if (m > width) continue;
          for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << width); ++sub) {
            const SymmetricSet e = set_from_bits(n, sub << d);
            for (int lo = d; lo + m - 1 <= n - d; ++lo) {
              const SymmetricSet window = restrict_to_interval(e, lo, lo + m - 1, static_cast<std::uint64_t>(m));
              const std::string tag = instance(f.p(), n, d, e) + " I=[" + std::to_string(lo) + "," + std::to_string(lo + m - 1) + "]";
              sym_tally.expect(cache.sym(f, n, d, e) == cache.sym(f, n, d, window), tag);
              zcl_tally.expect(cache.zcl(f, n, d, e) == cache.zcl(f, n, d, window), tag);
            }
          }
        }
      }
    }
    report.rows.push_back(sym_tally.row("symcl(E) = symcl(E_I) for windows I inside [d,n-d]"));
    report.rows.push_back(zcl_tally.row("zcl(E) = zcl(E_I) for windows I inside [d,n-d]"));
  }

  report.seconds = seconds_since(start);
  return report;
}

SuiteReport motivating_lemmas_suite() {
  const auto start = Clock::now();
  SuiteReport report{"motivating-lemmas", {}, {}, 0.0};
  for (const int p : {2, 3}) {
    const PrimeField f(static_cast<std::uint32_t>(p));
    const std::string ps = "p=" + std::to_string(p) + ": ";

    const bool zero_low = in_zcl(f, 2 * p, p - 1, p, 0);
    const bool zero_high = in_zcl(f, 2 * p, p, p, 0);
    report.rows.push_back({ps + membership(0, 2 * p, p - 1, p), zero_low, zero_low ? "holds" : "fails", std::nullopt});
    report.rows.push_back({ps + membership(0, 2 * p, p, p, false), !zero_high, !zero_high ? "holds" : "fails", std::nullopt});

    const bool three_low = in_zcl(f, 4 * p, p - 1, 2 * p, 3 * p);
    const bool three_high = in_zcl(f, 4 * p, p, 2 * p, 3 * p);
    report.rows.push_back({ps + membership(3 * p, 4 * p, p - 1, 2 * p), three_low, three_low ? "holds" : "fails", std::nullopt});
    report.rows.push_back({ps + membership(3 * p, 4 * p, p, 2 * p, false), !three_high, !three_high ? "holds" : "fails", std::nullopt});

    report.notes.push_back(ps + "negated reading '" + membership(0, 2 * p, p - 1, p, false) + "' is " +
                           (zero_low ? "false" : "true") + " by brute force");
    report.notes.push_back(ps + "negated reading '" + membership(3 * p, 4 * p, p - 1, 2 * p, false) + "' is " +
                           (three_low ? "false" : "true") + " by brute force");

    Tally tally;
    for (unsigned l = 1; l <= 2; ++l) {
      const auto m = static_cast<int>(int_pow(static_cast<std::uint64_t>(p), l));
      const int d = m - 1;
      for (int n = 1; n <= 12; ++n) {
        for (int i = m - 1; i <= n - m + 1; ++i) {
          const SymmetricSet e = SymmetricSet::from_weights(n, {i});
          const SymmetricSet brute = zcl_bruteforce(ClosureQuery::make(f, n, d, e)).closure;
          const SymmetricSet expected = e_oplus(e, static_cast<std::uint64_t>(m));
          tally.expect(brute == expected, instance(f.p(), n, d, e) + ": " + brace(brute) + " vs " + brace(expected));
        }
      }
    }
    report.rows.push_back(tally.row(ps + "zcl_{n,p^l-1}(i) = i (+) p^l, i in [p^l-1, n-p^l+1], l in {1,2}, n<=12"));
  }
  report.seconds = seconds_since(start);
  return report;
}

SuiteReport counterexample_suite() {
  const auto start = Clock::now();
  SuiteReport report{"counterexample", {}, {}, 0.0};
  const PrimeField f2(2);
  const SymmetricSet e = SymmetricSet::from_weights(5, {1, 4});
  const ClosureQuery q = ClosureQuery::make(f2, 5, 2, e);

  const SymmetricSet brute = zcl_bruteforce(q).closure;
  report.rows.push_back({"zcl_{5,2}({1,4}) = {1,4}", brute == e, "brute force gives " + brace(brute), std::nullopt});
  const SymmetricSet sym = symcl(q).closure;
  const SymmetricSet sym_expected = SymmetricSet::from_weights(5, {0, 1, 4, 5});
  report.rows.push_back({"symcl_{5,2}({1,4}) = {0,1,4,5}", sym == sym_expected, "symcl gives " + brace(sym), std::nullopt});

  const WitnessReport witness = counterexample_report();
  report.rows.push_back({"(1+X1+X2+X3+X4)(1+X2+X3+X4+X5) vanishes on layers 1,4, is nonzero at 00000, degree <= 2",
                         witness.verified, witness.verified ? "verified" : "verification failed", std::nullopt});

  const auto gm = search_product_witness(f2, 5, 2, e, 0, ProductForm::GmTimesSymmetric);
  report.rows.push_back({"gm-times-symmetric search for 0 exhausts with no witness", !gm.has_value(),
                         gm ? "unexpected witness found" : "search space exhausted", std::nullopt});

  const auto affine = search_product_witness(f2, 5, 2, e, 0, ProductForm::AffineTimesSymmetric);
  bool matches = false;
  std::string detail = "no witness found";
  if (affine) {
    const auto& found = std::get<MultilinearPoly>(affine->report.polynomial);
    matches = affine->report.verified && equal_up_to_permutation(found, counterexample_polynomial());
    detail = std::to_string(affine->affine_factors.size()) + " affine factors, cofactor degree " +
             std::to_string(affine->cofactor.degree().value_or(-1)) +
             (matches ? ", equal to the explicit witness up to a permutation" : ", differs from the explicit witness");
  }
  report.rows.push_back({"affine-times-symmetric search finds the explicit witness", matches, detail, std::nullopt});

  const double elapsed = seconds_since(start);
  report.rows.push_back({"runtime under 10 s", elapsed < 10.0, "limit 10 s", elapsed});
  report.seconds = elapsed;
  return report;
}

ScanReport scan_small_n(std::uint32_t p, int max_n) {
  if (max_n < 0) raise(ErrorKind::InvalidArgument, "max n must be nonnegative");
  if (max_n > 10) raise(ErrorKind::SizeCapExceeded, "small-n scan is capped at n = 10");
  require_enumerable(max_n, "small-n scan");
  const PrimeField f(p);
  ScanReport report{p, max_n, 0, {}, {}};
  for (int n = 1; n <= max_n; ++n) {
    for (int d = 0; d <= n; ++d) {
      const std::uint64_t m = modulus_for(d, f);
      if (m <= static_cast<std::uint64_t>(n) && 4 * m - 1 <= static_cast<std::uint64_t>(n)) continue;
      const SymmetricSet middle = SymmetricSet::interval(n, d, n - d);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n + 1)); ++bits) {
        const SymmetricSet e = set_from_bits(n, bits);
        const ClosureQuery q = ClosureQuery::make(f, n, d, e);
        ScanMismatch row{n, d, e, zcl_bruteforce(q).closure, symcl(q).closure};
        ++report.instances;
        if (row.zcl == row.symcl) continue;
        const bool inside = 2 * d <= n && e.is_subset_of(middle);
        (inside ? report.in_hypothesis : report.outside_hypothesis).push_back(std::move(row));
      }
    }
  }
  return report;
}

Json to_json(const SuiteReport& report) {
  Json rows = Json::array();
  for (const CheckRow& r : report.rows) rows.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  Json out;
  out["suite"] = report.suite;
  out["passed"] = report.passed();
  out["rows"] = std::move(rows);
  out["notes"] = report.notes;
  return out;
}

Json to_json(const ScanReport& report) {
  auto list = [](const std::vector<ScanMismatch>& rows) {
    Json out = Json::array();
    for (const ScanMismatch& m : rows) {
      out.push_back({{"n", m.n}, {"d", m.d}, {"E", to_json(m.e)}, {"zcl", to_json(m.zcl)}, {"symcl", to_json(m.symcl)}});
    }
    return out;
  };
  Json out;
  out["mode"] = "small-n";
  out["p"] = report.p;
  out["max_n"] = report.max_n;
  out["instances"] = report.instances;
  out["in_hypothesis_mismatches"] = list(report.in_hypothesis);
  out["outside_hypothesis_mismatches"] = list(report.outside_hypothesis);
  return out;
}

std::string format_table(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << "\n";
  for (const CheckRow& r : report.rows) {
    out << (r.passed ? "  PASS  " : "  FAIL  ") << r.name << "  [" << r.detail;
    if (r.seconds) out << "; " << std::fixed << std::setprecision(2) << *r.seconds << " s";
    out << "]\n";
  }
  for (const std::string& note : report.notes) out << "  note  " << note << "\n";
  out << (report.passed() ? "PASS " : "FAIL ") << report.suite << "\n";
  return out.str();
}

std::string format_scan(const ScanReport& report, std::size_t list_limit) {
  std::ostringstream out;
  out << "small-n scan p=" << report.p << " n<=" << report.max_n << ": " << report.instances << " instances\n";
  auto list = [&](const char* title, const std::vector<ScanMismatch>& rows) {
    out << title << ": " << rows.size() << "\n";
    for (std::size_t i = 0; i < rows.size() && i < list_limit; ++i) {
      const ScanMismatch& m = rows[i];
      out << "  n=" << m.n << " d=" << m.d << " E=" << brace(m.e) << "  zcl=" << brace(m.zcl) << "  symcl=" << brace(m.symcl) << "\n";
    }
    if (rows.size() > list_limit) out << "  ... " << rows.size() - list_limit << " more\n";
  };
  list("mismatches with E inside [d,n-d]", report.in_hypothesis);
  list("mismatches with E outside [d,n-d]", report.outside_hypothesis);
  return out.str();
}

MultilinearPoly permute_variables(const MultilinearPoly& f, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != f.n()) raise(ErrorKind::DimensionMismatch, "permutation length differs from n");
  MultilinearPoly out(f.field(), f.n());
  for (const auto& [mask, c] : f.terms()) out.add_term(permute_mask(mask, perm), c);
  return out;
}

bool equal_up_to_permutation(const MultilinearPoly& f, const MultilinearPoly& g) {
  if (f.n() != g.n() || !(f.field() == g.field())) return false;
  if (f.n() > 8) raise(ErrorKind::SizeCapExceeded, "permutation search is capped at n = 8");
  std::vector<int> perm(static_cast<std::size_t>(f.n()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (permute_variables(f, perm) == g) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace zclosure
