#include "f1an.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/jsonio.hpp"
#include "core/spectrum.hpp"
#include "core/verify.hpp"

using namespace f1an;

struct f1an_set {
  FiniteNormedSet value;
};

namespace {

thread_local std::string g_last_error;

f1an_status status_of(Errc c) {
  switch (c) {
    case Errc::ParseError: return F1AN_EPARSE;
    case Errc::Unsupported: return F1AN_EUNSUPPORTED;
    case Errc::TooLarge:
    case Errc::LatticeOverflow: return F1AN_ETOOLARGE;
    case Errc::PrecisionExhausted: return F1AN_EPRECISION;
    case Errc::Unbounded:
    case Errc::NotBounded: return F1AN_EUNBOUNDED;
    case Errc::CounterexampleFound: return F1AN_ECOUNTEREXAMPLE;
    case Errc::InternalError: return F1AN_EINTERNAL;
    default: return F1AN_EDOMAIN;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
f1an_status guarded(Fn&& fn) {
  try {
    fn();
    return F1AN_OK;
  } catch (const F1Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return F1AN_EINTERNAL;
  }
}

Radius radius_from_json(const Json& j) {
  if (j.is_object() && j.contains("base"))
    return Radius{rat_from_json(j.at("base")),
                  j.contains("exp") ? rat_from_json(j.at("exp")) : Rat(1)};
  return Radius{rat_from_json(j), Rat(1)};
}

Json radius_to_json(const Radius& r) {
  if (r.exp == 1) return rat_to_json(r.base);
  return Json{{"base", rat_to_json(r.base)}, {"exp", rat_to_json(r.exp)}};
}

NormSpec normspec_from_json(const Json& j) {
  NormSpec spec;
  if (j.is_null()) return spec;
  std::string kind = j.value("kind", "plain");
  if (kind == "exponent") {
    spec.kind = NormSpec::Kind::Exponent;
    spec.s = rat_from_json(j.at("s"));
  } else if (kind == "two-sided") {
    spec.kind = NormSpec::Kind::TwoSided;
    spec.s1 = rat_from_json(j.at("s1"));
    spec.s2 = rat_from_json(j.at("s2"));
  } else if (kind != "plain") {
    throw F1Error(Errc::ParseError, "unknown norm spec kind: " + kind);
  }
  return spec;
}

GaussNormSpec gauss_spec_from_json(const Json& j) {
  GaussNormSpec spec;
  if (j.is_null()) return spec;
  if (j.value("mode", "l1") == "sup") spec.mode = GaussNormSpec::Mode::Sup;
  if (j.contains("scalar")) spec.scalar = normspec_from_json(j.at("scalar"));
  if (j.contains("radius")) spec.radius = radius_from_json(j.at("radius"));
  return spec;
}

std::vector<std::pair<Rat, GroundScalar>> terms_from_json(const Json& j) {
  std::vector<std::pair<Rat, GroundScalar>> out;
  for (const auto& t : j)
    out.emplace_back(rat_from_json(t.at("exp")), scalar_from_json(t.at("c")));
  return out;
}

SpectrumPoint point_from_json(const Json& j) {
  std::string branch = j.value("branch", "trivial");
  if (branch == "trivial") return trivial_point();
  if (branch == "prime") {
    unsigned long p = j.at("p").get<unsigned long>();
    if (j.contains("eps") && j.at("eps").is_string() &&
        j.at("eps").get<std::string>() == "inf")
      return prime_residue_point(p);
    if (j.value("residue", false)) return prime_residue_point(p);
    return prime_point(p, rat_from_json(j.at("eps")));
  }
  if (branch == "arch") return arch_point(rat_from_json(j.at("eps")));
  throw F1Error(Errc::ParseError, "unknown branch: " + branch);
}

Json keycase_to_json(const KeyCase& c) {
  return Json{{"applicable", c.applicable},
              {"holds", c.holds},
              {"lhs_log2", c.lhs_log2},
              {"rhs_log2", c.rhs_log2}};
}

Json eval_request(const Json& req) {
  std::string op = req.value("op", "");
  if (op == "monoid-norm") {
    GeometricMonoid m = monoid_from_json(req.at("monoid"));
    return Json{{"norm", norm_to_json(m.norm_of(rat_from_json(req.at("q"))))}};
  }
  if (op == "scale-by-p") {
    ScaleByP act = scale_by_p(monoid_from_json(req.at("monoid")),
                              req.at("p").get<unsigned long>());
    return Json{{"target", monoid_to_json(act.target)},
                {"invertible", act.invertible}};
  }
  if (op == "quotient-norm") {
    NormValue v = quotient_cokernel_norm(radius_from_json(req.at("r_prime")),
                                         radius_from_json(req.at("r")),
                                         req.at("n").get<unsigned long>());
    return Json{{"norm", norm_to_json(v)}};
  }
  if (op == "scalar-norm") {
    GroundScalar x = scalar_from_json(req.at("x"));
    NormSpec spec = normspec_from_json(req.contains("spec") ? req.at("spec") : Json());
    return Json{{"norm", norm_to_json(scalar_norm(x, spec))}};
  }
  if (op == "padic-digits") {
    Json digits = Json::array();
    for (unsigned long d : padic_digits(scalar_from_json(req.at("x")))) digits.push_back(d);
    return Json{{"digits", digits}};
  }
  if (op == "bc-norm") {
    F1Element e = f1elem_from_json(req.at("elem"));
    GaussNormSpec spec =
        gauss_spec_from_json(req.contains("spec") ? req.at("spec") : Json());
    return Json{{"norm", norm_to_json(bc_norm(e, spec))}};
  }
  if (op == "convolve") {
    F1Element z = convolve(f1elem_from_json(req.at("x")), f1elem_from_json(req.at("y")));
    return Json{{"result", f1elem_to_json(z)}};
  }
  if (op == "cofinality") {
    CofinalityReport rep = cofinality_check(f1elem_from_json(req.at("elem")),
                                            rat_from_json(req.at("rho")),
                                            rat_from_json(req.at("rho_prime")));
    return Json{{"ok", rep.ok},
                {"l1_at_rho_prime", norm_to_json(rep.l1_at_rho_prime)},
                {"sup_at_rho", norm_to_json(rep.sup_at_rho)},
                {"bound", norm_to_json(rep.bound)}};
  }
  if (op == "witt-add" || op == "witt-mul") {
    WittVector x = witt_from_json(req.at("x")), y = witt_from_json(req.at("y"));
    unsigned n = static_cast<unsigned>(std::max(x.digits.size(), y.digits.size()));
    if (!witt_table_feasible(x.p, n))
      throw F1Error(Errc::TooLarge, "witt table infeasible at this p and length");
    WittPolyTable tab = gen_witt_polys(x.p, n);
    WittVector z = op == "witt-add" ? witt_add(x, y, tab) : witt_mul(x, y, tab);
    return Json{{"result", witt_to_json(z)}};
  }
  if (op == "witt-teichmuller") {
    WittVector w = teichmuller(puiseux_from_json(req.at("x")),
                               req.at("len").get<unsigned>());
    return Json{{"result", witt_to_json(w)}};
  }
  if (op == "witt-alpha-norm") {
    NormValue v = witt_alpha_norm(witt_from_json(req.at("x")),
                                  rat_from_json(req.at("alpha")),
                                  rat_from_json(req.at("radius")));
    return Json{{"norm", norm_to_json(v)}};
  }
  if (op == "ff-gauss-norm" || op == "ff-two-sided-norm") {
    FFElement x = ff_from_json(req.at("x"));
    Rat rho = rat_from_json(req.at("rho"));
    Rat r = rat_from_json(req.at("radius"));
    NormValue v = op == "ff-gauss-norm" ? ff_gauss_norm(x, rho, r)
                                        : ff_two_sided_norm(x, rho, r);
    return Json{{"norm", norm_to_json(v)}};
  }
  if (op == "ff-frobenius") {
    FFElement z = ff_frobenius(ff_from_json(req.at("x")), req.at("m").get<long>());
    return Json{{"result", ff_to_json(z)}};
  }
  if (op == "ff-convolve") {
    FFElement z = ff_convolve(ff_from_json(req.at("x")), ff_from_json(req.at("y")),
                              req.value("len", 4u));
    return Json{{"result", ff_to_json(z)}};
  }
  if (op == "pp-mul") {
    PuiseuxPoly z = pp_mul(puiseux_from_json(req.at("x")), puiseux_from_json(req.at("y")));
    return Json{{"result", puiseux_to_json(z)}};
  }
  if (op == "pp-root") {
    PuiseuxPoly x = puiseux_from_json(req.at("x"));
    return Json{{"result", puiseux_to_json(pp_root(x, x.p))}};
  }
  if (op == "pp-sup-norm") {
    NormValue v = pp_sup_norm(puiseux_from_json(req.at("x")),
                              rat_from_json(req.at("radius")));
    return Json{{"norm", norm_to_json(v)}};
  }
  if (op == "key-transform") {
    double s = key_exponent_transform(req.at("s").get<double>(),
                                      rat_from_json(req.at("R")),
                                      rat_from_json(req.at("r")));
    return Json{{"s_i", s}};
  }
  if (op == "key-check") {
    KeyReport rep = key_inequality_check(
        terms_from_json(req.at("terms")), req.at("s").get<double>(),
        rat_from_json(req.at("R")), rat_from_json(req.at("r1")),
        rat_from_json(req.at("r2")));
    return Json{{"ok", rep.ok},
                {"pos_small", keycase_to_json(rep.pos_small)},
                {"pos_large", keycase_to_json(rep.pos_large)},
                {"neg_small", keycase_to_json(rep.neg_small)},
                {"neg_large", keycase_to_json(rep.neg_large)}};
  }
  if (op == "spectrum-eval") {
    SpectrumPoint pt = point_from_json(req.at("point"));
    const Json& nj = req.at("n");
    Int n = nj.is_string() ? Int(nj.get<std::string>()) : Int(nj.get<long>());
    return Json{{"norm", norm_to_json(eval_point(pt, n))}};
  }
  if (op == "spectrum-validate") {
    SpectrumPoint pt = point_from_json(req.at("point"));
    std::vector<Int> samples;
    for (const auto& s : req.at("samples")) samples.push_back(Int(s.get<long>()));
    ValidationReport rep = validate_point(pt, samples);
    return Json{{"ok", rep.ok}, {"witness", rep.witness}};
  }
  throw F1Error(Errc::ParseError, "unknown op: " + op);
}

ExportOptions export_options_from_json(const Json& j) {
  ExportOptions opt;
  opt.max_prime = j.value("max_prime", 7ul);
  opt.samples_per_branch = j.value("samples", 9u);
  if (j.value("format", "json") == "svg") opt.format = ExportOptions::Format::Svg;
  if (j.contains("overlays")) {
    for (const auto& o : j.at("overlays")) {
      IntervalRingSpec spec;
      if (o.value("ring", "padic") == "real") spec.kind = IntervalRingSpec::Kind::Real;
      spec.p = o.value("p", 2ul);
      spec.r1 = rat_from_json(o.at("r1"));
      spec.r2 = rat_from_json(o.at("r2"));
      spec.integral = o.value("integral", false);
      opt.overlays.push_back(spec);
    }
  }
  return opt;
}

Json report_to_json(const VerifyReport& rep) {
  Json cases = Json::array();
  for (const auto& c : rep.cases)
    cases.push_back(Json{{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"suite", rep.suite}, {"ok", rep.ok}, {"cases", cases}};
}

}  // namespace

extern "C" {

const char* f1an_last_error(void) { return g_last_error.c_str(); }

void f1an_string_free(char* s) { std::free(s); }

f1an_status f1an_set_parse(const char* json, f1an_set** out) {
  return guarded([&] {
    if (!json || !out) throw F1Error(Errc::ParseError, "null argument");
    *out = new f1an_set{set_from_json(parse_json(json))};
  });
}

f1an_status f1an_set_to_json(const f1an_set* s, char** json_out) {
  return guarded([&] {
    if (!s || !json_out) throw F1Error(Errc::ParseError, "null argument");
    *json_out = dup_string(set_to_json(s->value).dump(2) + "\n");
  });
}

void f1an_set_free(f1an_set* s) { delete s; }

#define F1AN_BINOP(name, fn)                                               \
  f1an_status name(const f1an_set* x, const f1an_set* y, f1an_set** out) { \
    return guarded([&] {                                                   \
      if (!x || !y || !out) throw F1Error(Errc::ParseError, "null argument"); \
      *out = new f1an_set{fn(x->value, y->value)};                         \
    });                                                                    \
  }

F1AN_BINOP(f1an_set_product, product)
F1AN_BINOP(f1an_set_coproduct, coproduct)
F1AN_BINOP(f1an_set_smash, smash_tensor)
F1AN_BINOP(f1an_set_hom, internal_hom)

#undef F1AN_BINOP

f1an_status f1an_set_separation(const f1an_set* x, f1an_set** out) {
  return guarded([&] {
    if (!x || !out) throw F1Error(Errc::ParseError, "null argument");
    *out = new f1an_set{separation(x->value)};
  });
}

f1an_status f1an_eval(const char* request_json, char** result_json_out) {
  return guarded([&] {
    if (!request_json || !result_json_out)
      throw F1Error(Errc::ParseError, "null argument");
    Json result = eval_request(parse_json(request_json));
    *result_json_out = dup_string(result.dump(2) + "\n");
  });
}

f1an_status f1an_spectrum_export(const char* options_json, char** out) {
  return guarded([&] {
    if (!options_json || !out) throw F1Error(Errc::ParseError, "null argument");
    *out = dup_string(export_tree(export_options_from_json(parse_json(options_json))));
  });
}

f1an_status f1an_verify(const char* suite, uint64_t seed, char** report_json_out) {
  return guarded([&] {
    if (!suite || !report_json_out) throw F1Error(Errc::ParseError, "null argument");
    VerifyReport rep = run_suite(suite, seed);
    *report_json_out = dup_string(report_to_json(rep).dump(2) + "\n");
  });
}

}  // extern "C"
