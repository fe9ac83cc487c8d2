#include "core/jsonio.hpp"

#include <cstdio>

namespace f1an {

namespace {

Json int_to_json(const Int& n) {
  if (n.fits_slong_p()) return static_cast<long>(n.get_si());
  return n.get_str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw F1Error(Errc::ParseError, "expected an integer");
}

std::string sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

unsigned g_default_precision = 32;

}  // namespace

unsigned default_padic_precision() { return g_default_precision; }
void set_default_padic_precision(unsigned N) { g_default_precision = N; }

Json rat_to_json(const Rat& q) {
  return Json{{"num", int_to_json(q.get_num())}, {"den", int_to_json(q.get_den())}};
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return rat_from_str(j.get<std::string>());
  if (j.is_object() && j.contains("num")) {
    Rat q(int_from_json(j.at("num")), j.contains("den") ? int_from_json(j.at("den")) : Int(1));
    if (q.get_den() == 0) throw F1Error(Errc::ParseError, "zero denominator");
    q.canonicalize();
    return q;
  }
  throw F1Error(Errc::ParseError, "expected a rational");
}

Json norm_to_json(const NormValue& v) {
  Json j;
  if (auto r = v.exact_rational())
    j["exact"] = rat_to_json(*r);
  else
    j["approx"] = sig12(v.value());
  j["log2"] = v.is_zero() ? Json(nullptr) : Json(v.log2_magnitude());
  return j;
}

namespace {

NormValue norm_param_from_json(const Json& j) {
  // rational, or {"base":..,"exp":..} for an exact power
  if (j.is_object() && j.contains("base"))
    return NormValue::pow_rat(rat_from_json(j.at("base")), rat_from_json(j.at("exp")));
  return NormValue::from_rat(rat_from_json(j));
}

}  // namespace

Json set_to_json(const FiniteNormedSet& s) {
  Json j;
  j["elements"] = s.elements;
  j["basepoint"] = s.basepoint;
  Json norms = Json::object();
  for (const auto& [e, v] : s.norms) {
    if (auto r = v.exact_rational())
      norms[e] = rat_to_json(*r);
    else
      norms[e] = Json{{"approx", sig12(v.value())}};
  }
  j["norms"] = std::move(norms);
  return j;
}

FiniteNormedSet set_from_json(const Json& j) {
  std::vector<std::string> elements = j.at("elements").get<std::vector<std::string>>();
  std::string basepoint = j.at("basepoint").get<std::string>();
  std::map<std::string, NormValue> norms;
  if (j.contains("norms"))
    for (const auto& [e, v] : j.at("norms").items()) norms[e] = norm_param_from_json(v);
  return make_normed_set(elements, basepoint, norms);
}

Json monoid_to_json(const GeometricMonoid& m) {
  Json j;
  switch (m.carrier) {
    case Carrier::N: j["carrier"] = "N"; break;
    case Carrier::Z: j["carrier"] = "Z"; break;
    case Carrier::FracN: j["carrier"] = "fracN"; break;
    case Carrier::FracZ: j["carrier"] = "fracZ"; break;
    case Carrier::Q: j["carrier"] = "Q"; break;
  }
  if (m.carrier == Carrier::FracN || m.carrier == Carrier::FracZ) j["den"] = m.frac_den;
  auto radius_json = [](const Radius& r) -> Json {
    if (r.exp == 1) return rat_to_json(r.base);
    return Json{{"base", rat_to_json(r.base)}, {"exp", rat_to_json(r.exp)}};
  };
  if (m.two_sided)
    j["radii"] = Json::array({radius_json(m.r1), radius_json(m.r2)});
  else
    j["radius"] = radius_json(m.r1);
  return j;
}

GeometricMonoid monoid_from_json(const Json& j) {
  std::string c = j.at("carrier").get<std::string>();
  Carrier carrier;
  if (c == "N") carrier = Carrier::N;
  else if (c == "Z") carrier = Carrier::Z;
  else if (c == "fracN") carrier = Carrier::FracN;
  else if (c == "fracZ") carrier = Carrier::FracZ;
  else if (c == "Q") carrier = Carrier::Q;
  else throw F1Error(Errc::ParseError, "unknown carrier: " + c);
  unsigned long den = j.value("den", 1ul);
  auto radius_from = [](const Json& rj) -> Radius {
    if (rj.is_object() && rj.contains("base"))
      return Radius{rat_from_json(rj.at("base")), rat_from_json(rj.at("exp"))};
    return Radius{rat_from_json(rj)};
  };
  if (j.contains("radii")) {
    const Json& rr = j.at("radii");
    return make_two_sided(carrier, radius_from(rr.at(0)), radius_from(rr.at(1)), den);
  }
  return make_single(carrier, radius_from(j.at("radius")), den);
}

Json scalar_to_json(const GroundScalar& x) {
  Json j;
  switch (x.tag) {
    case GroundScalar::Tag::Fp:
      j["ring"] = "fp";
      j["p"] = x.p;
      j["value"] = int_to_json(x.ival);
      break;
    case GroundScalar::Tag::Padic: {
      j["ring"] = "padic";
      j["p"] = x.p;
      j["N"] = x.N;
      if (x.ival == 0) {
        j["digits"] = Json::array();
        j["val"] = 0;
        j["exact_zero"] = x.exact_zero;
      } else {
        Json digits = Json::array();
        Int u = x.ival, P(static_cast<long>(x.p));
        for (unsigned i = 0; i < x.N; ++i) {
          digits.push_back(static_cast<unsigned long>(Int(u % P).get_ui()));
          u /= P;
        }
        j["digits"] = std::move(digits);
        j["val"] = x.val;
      }
      break;
    }
    case GroundScalar::Tag::ArchInt:
      j["ring"] = "archint";
      j["value"] = int_to_json(x.ival);
      break;
    case GroundScalar::Tag::TrivQ:
      j["ring"] = "trivq";
      j["value"] = rat_to_json(x.rval);
      break;
    case GroundScalar::Tag::Real:
      j["ring"] = "real";
      j["value"] = x.cval.real();
      break;
    case GroundScalar::Tag::Complex:
      j["ring"] = "complex";
      j["re"] = x.cval.real();
      j["im"] = x.cval.imag();
      break;
  }
  return j;
}

GroundScalar scalar_from_json(const Json& j) {
  std::string ring = j.at("ring").get<std::string>();
  if (ring == "fp") return fp_make(j.at("p").get<unsigned long>(), int_from_json(j.at("value")));
  if (ring == "padic") {
    unsigned long p = j.at("p").get<unsigned long>();
    unsigned N = j.contains("N") ? j.at("N").get<unsigned>() : default_padic_precision();
    if (j.contains("value")) return padic_from_rational(rat_from_json(j.at("value")), p, N);
    const Json& digits = j.at("digits");
    if (digits.empty()) {
      GroundScalar z = padic_from_integer(0, p, N);
      z.exact_zero = j.value("exact_zero", true);
      return z;
    }
    Int u = 0, P(static_cast<long>(p));
    for (std::size_t i = digits.size(); i-- > 0;)
      u = u * P + Int(digits.at(i).get<unsigned long>());
    GroundScalar z = padic_from_integer(u, p, N);
    z.val += j.value("val", 0l);
    return z;
  }
  if (ring == "archint") return archint_make(int_from_json(j.at("value")));
  if (ring == "trivq") return trivq_make(rat_from_json(j.at("value")));
  if (ring == "real") return real_make(j.at("value").get<double>());
  if (ring == "complex")
    return complex_make({j.at("re").get<double>(), j.at("im").get<double>()});
  throw F1Error(Errc::ParseError, "unknown ring: " + ring);
}

Json f1elem_to_json(const F1Element& e) {
  Json j;
  j["base"] = monoid_to_json(e.base);
  Json terms = Json::array();
  for (const auto& [q, c] : e.support)
    terms.push_back(Json{{"exp", rat_to_json(q)}, {"coeff", scalar_to_json(c)}});
  j["terms"] = std::move(terms);
  return j;
}

F1Element f1elem_from_json(const Json& j) {
  GeometricMonoid base = monoid_from_json(j.at("base"));
  std::vector<std::pair<Rat, GroundScalar>> terms;
  for (const auto& t : j.at("terms"))
    terms.emplace_back(rat_from_json(t.at("exp")), scalar_from_json(t.at("coeff")));
  return f1_make(base, terms);
}

Json puiseux_to_json(const PuiseuxPoly& f) {
  Json j;
  j["p"] = f.p;
  j["lattice"] = Json{{"kind", f.lattice.kind == ExponentLattice::Kind::PPower ? "p-power" : "over-n"},
                      {"bound", f.lattice.param}};
  Json terms = Json::array();
  for (const auto& [q, c] : f.terms)
    terms.push_back(Json{{"exp", rat_to_json(q)}, {"c", c}});
  j["terms"] = std::move(terms);
  return j;
}

PuiseuxPoly puiseux_from_json(const Json& j) {
  unsigned long p = j.at("p").get<unsigned long>();
  ExponentLattice lat;
  if (j.contains("lattice")) {
    std::string kind = j.at("lattice").at("kind").get<std::string>();
    if (kind == "p-power") lat.kind = ExponentLattice::Kind::PPower;
    else if (kind == "over-n") lat.kind = ExponentLattice::Kind::OverN;
    else throw F1Error(Errc::ParseError, "unknown lattice kind: " + kind);
    lat.param = j.at("lattice").at("bound").get<unsigned long>();
  }
  std::map<Rat, long> terms;
  for (const auto& t : j.at("terms"))
    terms[rat_from_json(t.at("exp"))] += t.at("c").get<long>();
  return pp_make(p, lat, terms);
}

Json witt_to_json(const WittVector& w) {
  Json j;
  j["p"] = w.p;
  Json digits = Json::array();
  for (const auto& d : w.digits) digits.push_back(puiseux_to_json(d));
  j["digits"] = std::move(digits);
  return j;
}

WittVector witt_from_json(const Json& j) {
  WittVector w;
  w.p = j.at("p").get<unsigned long>();
  for (const auto& d : j.at("digits")) {
    w.digits.push_back(puiseux_from_json(d));
    if (w.digits.back().p != w.p) throw F1Error(Errc::ParseError, "digit characteristic differs");
  }
  return w;
}

Json ff_to_json(const FFElement& x) {
  Json j;
  j["p"] = x.p;
  Json terms = Json::array();
  for (const auto& [n, a] : x.terms)
    terms.push_back(Json{{"n", n}, {"coeff", puiseux_to_json(a)}});
  j["terms"] = std::move(terms);
  return j;
}

FFElement ff_from_json(const Json& j) {
  unsigned long p = j.at("p").get<unsigned long>();
  std::vector<std::pair<long, PuiseuxPoly>> terms;
  for (const auto& t : j.at("terms"))
    terms.emplace_back(t.at("n").get<long>(), puiseux_from_json(t.at("coeff")));
  return ff_make(p, terms);
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw F1Error(Errc::ParseError, "malformed JSON");
  return j;
}

}  // namespace f1an
