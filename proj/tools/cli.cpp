#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include "zclosure/closures.hpp"
#include "zclosure/cube.hpp"
#include "zclosure/error.hpp"
#include "zclosure/json_io.hpp"
#include "zclosure/suites.hpp"
#include "zclosure/witnesses.hpp"

namespace zclosure::cli {
namespace {

constexpr int kVerifyMaxN = 12;

struct Options {
  std::uint32_t p = 2;
  bool json = false;
  std::uint64_t seed = SuiteOptions{}.seed;
  std::optional<int> cap_n;

  int n = -1;
  int d = -1;
  std::string e;
  int i = -1;
  int j = -1;
  std::string method = "auto";
  bool verify = false;
  std::string kind = "h";
  std::string form = "gm";
  std::string suite;
  int samples = SuiteOptions{}.samples;
  std::string mode = "small-n";
  int max_n = 7;
  std::size_t limit = 20;
};

// Restores the enumeration cap when a command finishes.
class CapGuard {
 public:
  CapGuard() : saved_(enumeration_cap()) {}
  ~CapGuard() { set_enumeration_cap(saved_); }
  CapGuard(const CapGuard&) = delete;
  CapGuard& operator=(const CapGuard&) = delete;

 private:
  int saved_;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeCapExceeded: return kExitSizeCap;
    case ErrorKind::Internal: return kExitFailure;
    default: return kExitValidation;
  }
}

void require_n(const Options& o) {
  if (o.n < 0) raise(ErrorKind::InvalidArgument, "-n must be given and nonnegative");
}

ClosureQuery make_query(const Options& o, std::ostream& err) {
  require_n(o);
  if (o.d < 0) raise(ErrorKind::InvalidArgument, "-d must be given and nonnegative");
  ClosureQuery q = ClosureQuery::make(PrimeField(o.p), o.n, o.d, SymmetricSet::parse(o.n, o.e));
  if (q.degree_clamped) err << "warning: degree " << o.d << " exceeds n = " << o.n << "; using d = " << q.d << "\n";
  return q;
}

void print_closure(std::ostream& out, const ClosureResult& r) {
  out << "closure: " << r.closure.to_string() << "\n";
  out << "method: " << to_string(r.method) << "\n";
  if (r.hilbert_dim) out << "hilbert_dim: " << *r.hilbert_dim << "\n";
}

std::string describe(const WitnessPolynomial& f) {
  std::ostringstream s;
  if (const auto* sym = std::get_if<SymmetricPoly>(&f)) {
    bool first = true;
    for (std::size_t k = 0; k < sym->coeffs().size(); ++k) {
      if (sym->coeffs()[k] == 0) continue;
      s << (first ? "" : " + ") << sym->coeffs()[k] << "*sigma_" << k;
      first = false;
    }
    if (first) s << "0";
  } else {
    const auto& ml = std::get<MultilinearPoly>(f);
    bool first = true;
    for (const auto& [mask, c] : ml.terms()) {
      s << (first ? "" : " + ") << c;
      for (int v = 0; v < ml.n(); ++v) {
        if ((mask >> v) & 1u) s << "*X" << v + 1;
      }
      first = false;
    }
    if (first) s << "0";
  }
  return s.str();
}

void print_witness(std::ostream& out, const WitnessReport& w) {
  out << "form: " << w.form << "\n";
  out << "polynomial: " << describe(w.polynomial) << "\n";
  out << "claimed_degree: " << w.claimed_degree << "\n";
  out << "verified: " << (w.verified ? "true" : "false") << "\n";
}

int cmd_zcl(const Options& o, std::ostream& out, std::ostream& err) {
  const ClosureQuery q = make_query(o, err);
  ClosureResult r = o.method == "bruteforce" ? zcl_bruteforce(q) : (o.method == "fast" ? zcl_fast(q) : zcl_auto(q));
  std::optional<bool> verified;
  if (o.verify) {
    if (q.n > kVerifyMaxN) {
      err << "warning: --verify skipped for n > " << kVerifyMaxN << "\n";
    } else {
      verified = zcl_bruteforce(q).closure == r.closure;
    }
  }
  if (o.json) {
    Json body = closure_json(q, r);
    if (verified) body["verified"] = *verified;
    out << dump(envelope("zcl", body));
  } else {
    print_closure(out, r);
    if (verified) out << "verified: " << (*verified ? "true" : "false") << "\n";
  }
  if (verified && !*verified) {
    err << "error: brute force disagrees with " << to_string(r.method) << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_symcl(const Options& o, std::ostream& out, std::ostream& err) {
  const ClosureQuery q = make_query(o, err);
  const ClosureResult r = symcl(q);
  if (o.json) {
    out << dump(envelope("symcl", closure_json(q, r)));
  } else {
    print_closure(out, r);
  }
  return kExitOk;
}

int cmd_layer(Options o, std::ostream& out, std::ostream& err) {
  require_n(o);
  if (o.i < 0 || o.i > o.n) raise(ErrorKind::InvalidWeight, "-i must lie in [0, n]");
  o.e = std::to_string(o.i);
  const ClosureQuery q = make_query(o, err);
  const ClosureResult r = layer_zcl(q);
  if (o.json) {
    out << dump(envelope("layer", closure_json(q, r)));
  } else {
    print_closure(out, r);
  }
  return kExitOk;
}

int cmd_witness(const Options& o, std::ostream& out, std::ostream&) {
  const PrimeField field(o.p);
  std::optional<WitnessReport> w;
  if (o.kind == "counterexample") {
    w = counterexample_report();
  } else {
    require_n(o);
    if (o.i < 0) raise(ErrorKind::InvalidArgument, "-i must be given and nonnegative");
    if (o.kind == "h") {
      w = h_report(o.i, field, o.n);
    } else {
      w = r_report(o.i, o.j, field, o.n);
    }
  }
  if (o.json) {
    out << dump(envelope("witness", to_json(*w)));
  } else {
    print_witness(out, *w);
  }
  return w->verified ? kExitOk : kExitFailure;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const ClosureQuery q = make_query(o, err);
  const ProductForm form = o.form == "gm" ? ProductForm::GmTimesSymmetric : ProductForm::AffineTimesSymmetric;
  const auto found = search_product_witness(q.field, q.n, q.d, q.e, o.j, form);
  if (o.json) {
    Json body;
    body["p"] = q.field.p();
    body["n"] = q.n;
    body["d"] = q.d;
    body["E"] = to_json(q.e);
    body["j"] = o.j;
    body["form"] = to_string(form);
    body["found"] = found.has_value();
    if (found) body["result"] = to_json(*found);
    out << dump(envelope("search-witness", body));
  } else if (found) {
    out << "found: true\n";
    print_witness(out, found->report);
  } else {
    out << "found: false\n";
  }
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream&) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suite_names();
  } else {
    names = {o.suite};
  }
  const SuiteOptions options{o.seed, o.samples};
  bool all_passed = true;
  Json suites = Json::array();
  for (const std::string& name : names) {
    const SuiteReport report = run_suite(name, options);
    all_passed = all_passed && report.passed();
    if (o.json) {
      suites.push_back(to_json(report));
    } else {
      out << format_table(report);
    }
  }
  if (o.json) {
    Json body;
    body["seed"] = o.seed;
    body["passed"] = all_passed;
    body["suites"] = std::move(suites);
    out << dump(envelope("check", body));
  } else {
    out << "seed: " << o.seed << "\n";
  }
  return all_passed ? kExitOk : kExitFailure;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream&) {
  const ScanReport report = scan_small_n(o.p, o.max_n);
  if (o.json) {
    out << dump(envelope("scan", to_json(report)));
  } else {
    out << format_scan(report, o.limit);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite-degree Zariski and symmetric closures over prime fields", "zclosure"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("-p,--prime", o.p, "field characteristic");
  app.add_flag("--json", o.json, "emit JSON");
  app.add_option("--seed", o.seed, "seed for sampled checks");
  app.add_option("--cap-n", o.cap_n, "enumeration cap on n (at most 24)");

  auto* zcl = app.add_subcommand("zcl", "degree-d Zariski closure of a symmetric set");
  auto* sym = app.add_subcommand("symcl", "degree-d symmetric closure");
  auto* layer = app.add_subcommand("layer", "closure of a single layer by the closed formula");
  auto* witness = app.add_subcommand("witness", "build and verify a witness polynomial");
  auto* search = app.add_subcommand("search-witness", "bounded search for a product-form witness");
  auto* check = app.add_subcommand("check", "run a named check suite");
  auto* scan = app.add_subcommand("scan", "compare zcl and symcl outside the main theorem's range");

  for (auto* sub : {zcl, sym, layer, search}) {
    sub->add_option("-n", o.n, "cube dimension")->required();
    sub->add_option("-d", o.d, "degree bound")->required();
  }
  for (auto* sub : {zcl, sym, search}) sub->add_option("-E", o.e, "weights, e.g. 1,4");
  zcl->add_option("--method", o.method, "auto, bruteforce or fast")->check(CLI::IsMember({"auto", "bruteforce", "fast"}));
  zcl->add_flag("--verify", o.verify, "re-run brute force and compare (n <= 12)");
  layer->add_option("-i", o.i, "layer weight")->required();

  witness->add_option("--kind", o.kind, "h, r or counterexample")->check(CLI::IsMember({"h", "r", "counterexample"}));
  witness->add_option("-n", o.n, "cube dimension");
  witness->add_option("-i", o.i, "weight i");
  witness->add_option("-j", o.j, "weight j (kind r)");

  search->add_option("-j", o.j, "target weight")->required();
  search->add_option("--form", o.form, "gm or affine")->check(CLI::IsMember({"gm", "affine"}));

  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  check->add_option("suite", o.suite, "suite name or all")->required()->check(CLI::IsMember(suite_choices));
  check->add_option("--samples", o.samples, "random weight sets per sampled configuration")->check(CLI::PositiveNumber);

  scan->add_option("--mode", o.mode, "scan mode")->check(CLI::IsMember({"small-n"}));
  scan->add_option("--max-n", o.max_n, "largest n scanned (at most 10)");
  scan->add_option("--limit", o.limit, "mismatches listed per category");

  std::vector<const char*> argv{"zclosure"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // Help requests print the relevant subcommand's usage and succeed.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitValidation;
  }

  CapGuard guard;
  try {
    apply_cap_from_environment();
    if (o.cap_n) set_enumeration_cap(*o.cap_n);
    if (zcl->parsed()) return cmd_zcl(o, out, err);
    if (sym->parsed()) return cmd_symcl(o, out, err);
    if (layer->parsed()) return cmd_layer(o, out, err);
    if (witness->parsed()) return cmd_witness(o, out, err);
    if (search->parsed()) return cmd_search(o, out, err);
    if (check->parsed()) return cmd_check(o, out, err);
    if (scan->parsed()) return cmd_scan(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace zclosure::cli
