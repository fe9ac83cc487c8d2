#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "core/jsonio.hpp"
#include "core/spectrum.hpp"
#include "core/verify.hpp"

using namespace f1an;

namespace {

Rat parse_rat_flag(const std::string& text) {
  try {
    return rat_from_str(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected a rational like 1/2, got '" + text + "'");
  }
}

Rat parse_decimal_or_rat(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) return rat_from_str(text);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  Rat q(Int(digits), ipow(Int(10), text.size() - dot - 1));
  q.canonicalize();
  return q;
}

std::string read_stdin() {
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

// Bare arrays like [1,0] are accepted as constant-digit Witt vectors.
WittVector witt_arg(const std::string& text, unsigned long p) {
  Json j = parse_json(text);
  if (j.is_array()) {
    WittVector w = witt_zero(p, static_cast<unsigned>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
      w.digits[i] = pp_const(p, j.at(i).get<long>());
    return w;
  }
  return witt_from_json(j);
}

// Print constant-digit results back in the compact array form.
void print_witt(const WittVector& w) {
  bool constant = true;
  for (const auto& d : w.digits)
    constant = constant && (d.is_zero() || (d.terms.size() == 1 && d.terms.begin()->first == 0));
  if (constant) {
    Json arr = Json::array();
    for (const auto& d : w.digits)
      arr.push_back(d.is_zero() ? 0ul : d.terms.begin()->second);
    std::cout << arr.dump() << "\n";
  } else {
    std::cout << witt_to_json(w).dump(2) << "\n";
  }
}

int classify_exit(const F1Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
      return 2;
    default:
      return 1;
  }
}

void print_error(const F1Error& e) {
  Json j{{"error", errc_name(e.code())}, {"detail", e.what()}};
  std::cerr << j.dump(2) << "\n";
}

struct NormFlags {
  std::string q, rho, radius, alpha, mode = "l1";
};

int run_norm(const NormFlags& fl) {
  Json in = parse_json(read_stdin());
  NormValue result;
  if (in.is_object() && in.contains("carrier")) {
    if (fl.q.empty()) throw F1Error(Errc::ParseError, "monoid input needs --q");
    result = monoid_from_json(in).norm_of(parse_rat_flag(fl.q));
  } else if (in.is_object() && in.contains("lattice")) {
    if (fl.radius.empty()) throw F1Error(Errc::ParseError, "puiseux input needs --radius");
    result = pp_sup_norm(puiseux_from_json(in), parse_rat_flag(fl.radius));
  } else if (in.is_object() && in.contains("digits")) {
    if (fl.alpha.empty() || fl.radius.empty())
      throw F1Error(Errc::ParseError, "witt input needs --alpha and --radius");
    result = witt_alpha_norm(witt_from_json(in), parse_rat_flag(fl.alpha),
                             parse_rat_flag(fl.radius));
  } else if (in.is_object() && in.contains("terms") && in.contains("p") &&
             !in.contains("base")) {
    if (fl.rho.empty() || fl.radius.empty())
      throw F1Error(Errc::ParseError, "ff input needs --rho and --radius");
    result = ff_gauss_norm(ff_from_json(in), parse_rat_flag(fl.rho),
                           parse_rat_flag(fl.radius));
  } else {
    GaussNormSpec spec;
    if (fl.mode == "sup") spec.mode = GaussNormSpec::Mode::Sup;
    if (!fl.rho.empty()) {
      spec.scalar.kind = NormSpec::Kind::Exponent;
      spec.scalar.s = parse_rat_flag(fl.rho);
    }
    if (!fl.radius.empty()) spec.radius = Radius{parse_rat_flag(fl.radius), 1};
    result = bc_norm(f1elem_from_json(in), spec);
  }
  std::cout << norm_to_json(result).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* prec = std::getenv("F1AN_PRECISION")) {
    char* end = nullptr;
    long n = std::strtol(prec, &end, 10);
    if (end && *end == '\0' && n > 0 && n <= 4096)
      set_default_padic_precision(static_cast<unsigned>(n));
  }

  CLI::App app{"analytic geometry over F1: norms, Witt vectors, spectra"};
  app.require_subcommand(1);

  NormFlags nf;
  auto* norm = app.add_subcommand("norm", "norm of a JSON element read from stdin");
  norm->add_option("--q", nf.q, "monoid exponent (rational)");
  norm->add_option("--rho", nf.rho, "scalar norm exponent / Gauss radius");
  norm->add_option("--radius", nf.radius, "radius num/den");
  norm->add_option("--alpha", nf.alpha, "alpha num/den (Witt norm)");
  norm->add_option("--mode", nf.mode, "l1 or sup")->check(CLI::IsMember({"l1", "sup"}));

  std::string witt_verb, wx, wy, walpha = "1/2", wradius = "1/2";
  unsigned long wp = 2;
  unsigned wlen = 2;
  long wm = 1;
  auto* witt = app.add_subcommand("witt", "truncated Witt-vector arithmetic");
  witt->add_option("verb", witt_verb, "add | mul | teichmuller | frobenius | norm")
      ->required()
      ->check(CLI::IsMember({"add", "mul", "teichmuller", "frobenius", "norm"}));
  witt->add_option("--p", wp, "prime");
  witt->add_option("--len", wlen, "digit count");
  witt->add_option("--x", wx, "left operand (JSON)");
  witt->add_option("--y", wy, "right operand (JSON)");
  witt->add_option("--m", wm, "Frobenius power");
  witt->add_option("--alpha", walpha, "alpha num/den");
  witt->add_option("--radius", wradius, "coefficient radius num/den");

  std::string bc_rho, bc_rho_prime, bc_radius, bc_mode = "l1";
  bool bc_cofinal = false;
  auto* bc = app.add_subcommand("basechange", "ground-ring base change of a stdin element");
  bc->add_option("--rho", bc_rho, "scalar norm exponent");
  bc->add_option("--rho-prime", bc_rho_prime, "smaller radius for the cofinality check");
  bc->add_option("--radius", bc_radius, "radius override num/den");
  bc->add_option("--mode", bc_mode, "l1 or sup")->check(CLI::IsMember({"l1", "sup"}));
  bc->add_flag("--cofinality", bc_cofinal, "check l1(rho') against sup(rho) bound");

  std::string q_rp, q_r;
  unsigned long q_n = 0;
  auto* quot = app.add_subcommand("quotient", "cokernel quotient norm of class n");
  quot->add_option("--r-prime", q_rp, "r' num/den")->required();
  quot->add_option("--r", q_r, "r num/den")->required();
  quot->add_option("--n", q_n, "class index")->required();

  std::string sp_format = "json", sp_out, sp_verb = "export";
  unsigned long sp_maxp = 7;
  unsigned sp_samples = 9;
  std::vector<std::string> sp_overlays;
  auto* spc = app.add_subcommand("spectrum", "export the spectrum of Z");
  spc->add_option("verb", sp_verb, "export")->check(CLI::IsMember({"export"}));
  spc->add_option("--format", sp_format, "json or svg")
      ->check(CLI::IsMember({"json", "svg"}));
  spc->add_option("--max-prime", sp_maxp, "largest prime branch");
  spc->add_option("--samples", sp_samples, "points per branch");
  spc->add_option("--overlay", sp_overlays, "interval-ring overlay (JSON, repeatable)");
  spc->add_option("--output", sp_out, "write to file instead of stdout");

  std::string v_suite = "all";
  std::uint64_t v_seed = 0;
  auto* ver = app.add_subcommand("verify", "run a named verification suite");
  ver->add_option("suite", v_suite, "suite name or 'all'")
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("--seed", v_seed, "seed for randomized cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*norm) return run_norm(nf);

    if (*witt) {
      if (witt_verb == "add" || witt_verb == "mul") {
        WittVector x = witt_arg(wx, wp), y = witt_arg(wy, wp);
        unsigned n = std::max<unsigned>(
            wlen, static_cast<unsigned>(std::max(x.digits.size(), y.digits.size())));
        if (!witt_table_feasible(wp, n))
          throw F1Error(Errc::TooLarge, "digit count out of range for this prime");
        WittPolyTable tab = gen_witt_polys(wp, n);
        print_witt(witt_verb == "add" ? witt_add(x, y, tab) : witt_mul(x, y, tab));
      } else if (witt_verb == "teichmuller") {
        Json jx = parse_json(wx);
        PuiseuxPoly a = jx.is_number_integer() ? pp_const(wp, jx.get<long>())
                        : jx.is_array() ? pp_const(wp, jx.at(0).get<long>())
                                        : puiseux_from_json(jx);
        print_witt(teichmuller(a, wlen));
      } else if (witt_verb == "frobenius") {
        print_witt(witt_frobenius(witt_arg(wx, wp), wm));
      } else {
        NormValue v = witt_alpha_norm(witt_arg(wx, wp), parse_rat_flag(walpha),
                                      parse_rat_flag(wradius));
        std::cout << norm_to_json(v).dump(2) << "\n";
      }
      return 0;
    }

    if (*bc) {
      F1Element e = f1elem_from_json(parse_json(read_stdin()));
      if (bc_cofinal) {
        if (bc_rho.empty() || bc_rho_prime.empty())
          throw F1Error(Errc::ParseError, "--cofinality needs --rho and --rho-prime");
        CofinalityReport rep = cofinality_check(e, parse_rat_flag(bc_rho),
                                                parse_rat_flag(bc_rho_prime));
        Json j{{"ok", rep.ok},
               {"l1_at_rho_prime", norm_to_json(rep.l1_at_rho_prime)},
               {"sup_at_rho", norm_to_json(rep.sup_at_rho)},
               {"bound", norm_to_json(rep.bound)}};
        std::cout << j.dump(2) << "\n";
        return rep.ok ? 0 : 1;
      }
      GaussNormSpec spec;
      if (bc_mode == "sup") spec.mode = GaussNormSpec::Mode::Sup;
      if (!bc_rho.empty()) {
        spec.scalar.kind = NormSpec::Kind::Exponent;
        spec.scalar.s = parse_rat_flag(bc_rho);
      }
      if (!bc_radius.empty()) spec.radius = Radius{parse_rat_flag(bc_radius), 1};
      std::cout << norm_to_json(bc_norm(e, spec)).dump(2) << "\n";
      return 0;
    }

    if (*quot) {
      NormValue v = quotient_cokernel_norm(Radius{parse_rat_flag(q_rp), 1},
                                           Radius{parse_rat_flag(q_r), 1}, q_n);
      std::cout << norm_to_json(v).dump(2) << "\n";
      return 0;
    }

    if (*spc) {
      ExportOptions opt;
      opt.max_prime = sp_maxp;
      opt.samples_per_branch = sp_samples;
      if (sp_format == "svg") opt.format = ExportOptions::Format::Svg;
      for (const std::string& text : sp_overlays) {
        IntervalRingSpec spec;
        if (!text.empty() && text.front() != '{') {
          // colon form: kind:p:r1:r2[:integral]
          std::vector<std::string> parts;
          std::istringstream is(text);
          for (std::string piece; std::getline(is, piece, ':');) parts.push_back(piece);
          if (parts.size() < 4)
            throw F1Error(Errc::ParseError, "overlay needs kind:p:r1:r2");
          if (parts[0] == "real") spec.kind = IntervalRingSpec::Kind::Real;
          else if (parts[0] != "padic")
            throw F1Error(Errc::ParseError, "overlay kind must be padic or real");
          spec.p = std::stoul(parts[1]);
          spec.r1 = parse_decimal_or_rat(parts[2]);
          spec.r2 = parse_decimal_or_rat(parts[3]);
          spec.integral = parts.size() > 4 && parts[4] == "integral";
        } else {
          Json o = parse_json(text);
          if (o.value("ring", "padic") == "real") spec.kind = IntervalRingSpec::Kind::Real;
          spec.p = o.value("p", 2ul);
          spec.r1 = rat_from_json(o.at("r1"));
          spec.r2 = rat_from_json(o.at("r2"));
          spec.integral = o.value("integral", false);
        }
        opt.overlays.push_back(spec);
      }
      std::string doc = export_tree(opt);
      if (sp_out.empty()) {
        std::cout << doc;
      } else {
        std::ofstream f(sp_out, std::ios::binary);
        f << doc;
      }
      return 0;
    }

    if (*ver) {
      VerifyReport rep = run_suite(v_suite, v_seed);
      for (const auto& c : rep.cases)
        std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.id
                  << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
      std::cout << (rep.ok ? "ok" : "FAILED") << " (" << rep.cases.size()
                << " cases, suite " << rep.suite << ", seed " << v_seed << ")\n";
      if (!rep.ok) {
        for (const auto& c : rep.cases)
          if (!c.pass) {
            Json j{{"suite", rep.suite}, {"case", c.id}, {"detail", c.detail}};
            std::cerr << j.dump(2) << "\n";
          }
        return 1;
      }
      return 0;
    }
  } catch (const F1Error& e) {
    print_error(e);
    return classify_exit(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
