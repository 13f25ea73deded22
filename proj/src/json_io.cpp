#include "zclosure/json_io.hpp"

#include <bit>

#include "zclosure/error.hpp"

namespace zclosure {
namespace {

std::string bitstring(int n, std::uint32_t mask) { return CubePoint{n, mask}.to_string(); }

std::uint32_t parse_bitstring(int n, const std::string& s) {
  if (static_cast<int>(s.size()) != n) raise(ErrorKind::DimensionMismatch, "bitstring '" + s + "' does not have length n");
  std::uint32_t mask = 0;
  for (int i = 0; i < n; ++i) {
    if (s[i] == '1') {
      mask |= std::uint32_t{1} << i;
    } else if (s[i] != '0') {
      raise(ErrorKind::InvalidArgument, "bitstring '" + s + "' has characters other than 0 and 1");
    }
  }
  return mask;
}

Json points_json(int n, const std::vector<std::uint32_t>& points) {
  Json out = Json::array();
  for (std::uint32_t x : points) out.push_back(bitstring(n, x));
  return out;
}

int polynomial_n(const WitnessPolynomial& f) {
  return std::visit([](const auto& poly) { return poly.n(); }, f);
}

}  // namespace

Json to_json(const SymmetricSet& e) { return Json(e.weights()); }

SymmetricSet set_from_json(int n, const Json& j) {
  if (!j.is_array()) raise(ErrorKind::InvalidArgument, "weight set must be a JSON array");
  SymmetricSet e(n);
  for (const auto& w : j) e.insert(w.get<int>());
  return e;
}

Json to_json(const SymmetricPoly& f) {
  Json out;
  out["kind"] = "symmetric";
  out["p"] = f.field().p();
  out["n"] = f.n();
  out["sigma"] = f.coeffs();
  return out;
}

Json to_json(const MultilinearPoly& f) {
  Json out;
  out["kind"] = "multilinear";
  out["p"] = f.field().p();
  out["n"] = f.n();
  Json terms = Json::object();
  for (const auto& [mask, c] : f.terms()) terms[bitstring(f.n(), mask)] = c;
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const WitnessPolynomial& f) {
  return std::visit([](const auto& poly) { return to_json(poly); }, f);
}

WitnessPolynomial polynomial_from_json(const Json& j) {
  const PrimeField field(j.at("p").get<std::uint32_t>());
  const int n = j.at("n").get<int>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "symmetric") {
    auto coeffs = j.at("sigma").get<std::vector<Elem>>();
    if (static_cast<int>(coeffs.size()) != n + 1) raise(ErrorKind::DimensionMismatch, "sigma needs n + 1 coefficients");
    for (Elem& c : coeffs) c = field.reduce(c);
    return SymmetricPoly(field, n, std::move(coeffs));
  }
  if (kind == "multilinear") {
    MultilinearPoly f(field, n);
    for (const auto& [key, value] : j.at("terms").items()) f.add_term(parse_bitstring(n, key), value.get<Elem>());
    return f;
  }
  raise(ErrorKind::InvalidArgument, "unknown polynomial kind '" + kind + "'");
}

Json to_json(const VanishingSpec& spec, int n) {
  Json out;
  out["vanish_weights"] = spec.vanish_weights;
  out["vanish_points"] = points_json(n, spec.vanish_points);
  out["nonvanish_weights"] = spec.nonvanish_weights;
  out["nonvanish_points"] = points_json(n, spec.nonvanish_points);
  out["nonvanish_on"] = spec.nonvanish_on_all_points ? "all" : "some";
  return out;
}

Json to_json(const WitnessReport& w) {
  const int n = polynomial_n(w.polynomial);
  Json out;
  out["form"] = w.form;
  out["claimed_degree"] = w.claimed_degree;
  const Degree deg = std::visit([](const auto& poly) { return poly.degree(); }, w.polynomial);
  out["degree"] = deg ? Json(*deg) : Json(nullptr);
  out["spec"] = to_json(w.spec, n);
  out["verified"] = w.verified;
  out["polynomial"] = to_json(w.polynomial);
  return out;
}

Json to_json(const ProductWitness& w) {
  Json out;
  out["form"] = to_string(w.form);
  const int n = w.cofactor.n();
  if (w.monomial) {
    out["monomial"] = {{"S", bitstring(n, w.monomial->s)}, {"T", bitstring(n, w.monomial->t)}};
  }
  if (w.form == ProductForm::AffineTimesSymmetric) {
    Json factors = Json::array();
    for (const AffineForm& f : w.affine_factors) factors.push_back({{"constant", f.constant}, {"linear", f.linear}});
    out["affine_factors"] = std::move(factors);
  }
  out["cofactor"] = to_json(w.cofactor);
  out["witness"] = to_json(w.report);
  return out;
}

Json closure_json(const ClosureQuery& q, const ClosureResult& r) {
  Json out;
  out["p"] = q.field.p();
  out["n"] = q.n;
  out["d"] = q.d;
  out["degree_clamped"] = q.degree_clamped;
  out["E"] = to_json(q.e);
  out["closure"] = to_json(r.closure);
  out["method"] = std::string(to_string(r.method));
  if (r.hilbert_dim) out["hilbert_dim"] = *r.hilbert_dim;
  return out;
}

Json envelope(const std::string& command, const Json& body) {
  Json out;
  out["schema"] = kSchema;
  out["command"] = command;
  for (const auto& [key, value] : body.items()) out[key] = value;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace zclosure
