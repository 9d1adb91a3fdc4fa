#include "qch/serde.hpp"

#include <stdexcept>

namespace qch {

namespace {

long long parse_order_token(const std::string& t) {
  if (t.empty()) throw std::invalid_argument("empty field order");
  size_t caret = t.find('^');
  auto to_int = [](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad number in field notation: '" + s + "'");
    if (s.size() > 9) throw std::invalid_argument("field order out of range");
    return std::stoll(s);
  };
  if (caret == std::string::npos) return to_int(t);
  long long p = to_int(t.substr(0, caret));
  long long k = to_int(t.substr(caret + 1));
  if (k < 1 || k > FieldSpec::max_degree)
    throw std::invalid_argument("field order out of range");
  long long q = 1;
  for (long long i = 0; i < k; ++i) {
    q *= p;
    if (q > 1'000'000'000) throw std::invalid_argument("field order out of range");
  }
  return q;
}

}  // namespace

const FieldSpec& parse_field_notation(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  std::string order_part = t;
  std::string modulus_part;
  size_t colon = t.find(':');
  if (colon != std::string::npos) {
    order_part = t.substr(0, colon);
    std::string rest = t.substr(colon + 1);
    const std::string tag = "modulus=";
    if (rest.rfind(tag, 0) != 0)
      throw std::invalid_argument("expected ':modulus=<poly>' in field notation");
    modulus_part = rest.substr(tag.size());
  }
  long long q = parse_order_token(order_part);
  const FieldSpec& base = FieldSpec::of_order(q);  // validates the prime power
  if (modulus_part.empty()) return base;
  const FieldSpec& prime = FieldSpec::make(base.p(), 1);
  Poly mod = parse_poly(modulus_part, prime);
  if (mod.is_zero()) throw std::invalid_argument("zero modulus");
  std::vector<long long> coeffs;
  for (int i = 0; i <= mod.degree(); ++i) coeffs.push_back(mod.coeff(i).rep(0));
  return FieldSpec::make(base.p(), base.k(), coeffs);
}

std::string field_notation(const FieldSpec& f) {
  std::string s = std::to_string(f.q());
  if (f.k() > 1) {
    const FieldSpec& prime = FieldSpec::make(f.p(), 1);
    std::vector<long long> coeffs(f.modulus().begin(), f.modulus().end());
    s += ":modulus=" + to_string(Poly::from_ints(prime, coeffs));
  }
  return s;
}

RingElement ring_element_from_string(const std::string& s, const FieldSpec& f, int m) {
  return RingElement(parse_poly(s, f), m);
}

nlohmann::json to_json(const QcSpec& spec) {
  nlohmann::json gens = nlohmann::json::array();
  for (const RingElement& a : spec.generators()) gens.push_back(to_string(a.lift()));
  return {{"family", "qc1gen"},
          {"q", field_notation(spec.field())},
          {"m", spec.m()},
          {"generators", gens}};
}

nlohmann::json to_json(const DcSpec& spec) {
  return {{"family", "dc"},
          {"q", field_notation(spec.field())},
          {"m", spec.m()},
          {"a", to_string(spec.a().lift())}};
}

nlohmann::json to_json(const FcSpec& spec) {
  return {{"family", "fc"},
          {"q", field_notation(spec.field())},
          {"m", spec.m()},
          {"a1", to_string(spec.a1().lift())},
          {"a2", to_string(spec.a2().lift())}};
}

namespace {

void check_family(const nlohmann::json& j, const std::string& want) {
  if (!j.is_object() || !j.contains("family") || j.at("family") != want)
    throw std::invalid_argument("expected a spec with family '" + want + "'");
  if (!j.contains("q") || !j.contains("m") || !j.at("m").is_number_integer())
    throw std::invalid_argument("spec needs 'q' and integer 'm'");
}

}  // namespace

QcSpec qc_from_json(const nlohmann::json& j) {
  check_family(j, "qc1gen");
  const FieldSpec& f = parse_field_notation(j.at("q").get<std::string>());
  int m = j.at("m").get<int>();
  if (!j.contains("generators") || !j.at("generators").is_array() || j.at("generators").empty())
    throw std::invalid_argument("qc1gen spec needs a nonempty 'generators' array");
  std::vector<RingElement> gens;
  for (const auto& g : j.at("generators"))
    gens.push_back(ring_element_from_string(g.get<std::string>(), f, m));
  return QcSpec(std::move(gens));
}

DcSpec dc_from_json(const nlohmann::json& j) {
  check_family(j, "dc");
  const FieldSpec& f = parse_field_notation(j.at("q").get<std::string>());
  int m = j.at("m").get<int>();
  if (!j.contains("a")) throw std::invalid_argument("dc spec needs 'a'");
  return DcSpec(ring_element_from_string(j.at("a").get<std::string>(), f, m));
}

FcSpec fc_from_json(const nlohmann::json& j) {
  check_family(j, "fc");
  const FieldSpec& f = parse_field_notation(j.at("q").get<std::string>());
  int m = j.at("m").get<int>();
  if (!j.contains("a1") || !j.contains("a2"))
    throw std::invalid_argument("fc spec needs 'a1' and 'a2'");
  return FcSpec(ring_element_from_string(j.at("a1").get<std::string>(), f, m),
                ring_element_from_string(j.at("a2").get<std::string>(), f, m));
}

}  // namespace qch
