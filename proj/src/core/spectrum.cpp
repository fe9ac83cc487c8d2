#include "core/spectrum.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace f1an {

SpectrumPoint trivial_point() { return {}; }

SpectrumPoint prime_point(unsigned long p, const Rat& eps) {
  if (eps <= 0) throw F1Error(Errc::InvalidElement, "prime branch needs eps > 0");
  SpectrumPoint pt;
  pt.branch = SpectrumPoint::Branch::Prime;
  pt.p = p;
  pt.eps = eps;
  return pt;
}

SpectrumPoint prime_residue_point(unsigned long p) {
  SpectrumPoint pt;
  pt.branch = SpectrumPoint::Branch::Prime;
  pt.p = p;
  pt.residue_tip = true;
  return pt;
}

SpectrumPoint arch_point(const Rat& eps) {
  if (eps <= 0 || eps > 1) throw F1Error(Errc::InvalidElement, "arch branch needs eps in (0,1]");
  SpectrumPoint pt;
  pt.branch = SpectrumPoint::Branch::Arch;
  pt.eps = eps;
  return pt;
}

NormValue eval_point(const SpectrumPoint& pt, const Int& n) {
  if (n == 0) return NormValue::zero();
  switch (pt.branch) {
    case SpectrumPoint::Branch::Trivial:
      return NormValue::one();
    case SpectrumPoint::Branch::Prime: {
      unsigned long v = p_valuation(n, pt.p);
      if (pt.residue_tip) return v > 0 ? NormValue::zero() : NormValue::one();
      return NormValue::pow_rat(Rat(static_cast<long>(pt.p)),
                                -pt.eps * Rat(static_cast<long>(v)));
    }
    case SpectrumPoint::Branch::Arch:
      return NormValue::pow_rat(Rat(abs(n)), pt.eps);
  }
  throw F1Error(Errc::InternalError, "bad branch");
}

ValidationReport validate_point(const SpectrumPoint& pt, const std::vector<Int>& samples) {
  ValidationReport rep;
  for (const Int& a : samples) {
    // branch boundedness
    NormValue na = eval_point(pt, a);
    bool bounded = true;
    if (pt.branch == SpectrumPoint::Branch::Arch)
      bounded = a == 0 || na.leq(NormValue::from_rat(Rat(abs(a))));
    else
      bounded = na.leq(NormValue::one());
    if (!bounded) {
      rep.ok = false;
      rep.witness = "unbounded at n=" + a.get_str();
      return rep;
    }
    for (const Int& b : samples) {
      NormValue lhs = eval_point(pt, a * b);
      NormValue rhs = na * eval_point(pt, b);
      bool match = (lhs.is_zero() && rhs.is_zero()) ||
                   (!lhs.is_zero() && !rhs.is_zero() && lhs.approx_eq(rhs));
      if (!match) {
        rep.ok = false;
        rep.witness = "|ab| != |a||b| at a=" + a.get_str() + ", b=" + b.get_str();
        return rep;
      }
    }
  }
  return rep;
}

bool interval_contains(const IntervalRingSpec& spec, const SpectrumPoint& pt) {
  if (spec.kind == IntervalRingSpec::Kind::Padic) {
    if (pt.branch != SpectrumPoint::Branch::Prime || pt.p != spec.p) return false;
    if (pt.residue_tip) return false;
    if (spec.integral) return pt.eps < spec.r2;  // (r1,r2) collapses to [0,r2)
    return pt.eps > spec.r1 && pt.eps < spec.r2;
  }
  if (pt.branch != SpectrumPoint::Branch::Arch) return false;
  return pt.eps > spec.r1 && pt.eps < spec.r2;
}

namespace {

std::vector<unsigned long> primes_upto(unsigned long m) {
  std::vector<unsigned long> out;
  for (unsigned long k = 2; k <= m; ++k) {
    bool prime = true;
    for (unsigned long d = 2; d * d <= k; ++d)
      if (k % d == 0) prime = false;
    if (prime) out.push_back(k);
  }
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fmt3(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

struct BranchPlan {
  std::string label;
  bool arch = false;
  unsigned long p = 0;
  std::vector<Rat> eps;
  bool has_residue_tip = false;
};

std::vector<BranchPlan> plan_branches(const ExportOptions& opt) {
  std::vector<BranchPlan> out;
  for (unsigned long p : primes_upto(opt.max_prime)) {
    BranchPlan b;
    b.label = "p=" + std::to_string(p);
    b.p = p;
    b.has_residue_tip = true;
    for (unsigned j = 1; j <= opt.samples_per_branch; ++j) {
      Rat e(j, 2u);
      e.canonicalize();
      b.eps.push_back(e);
    }
    out.push_back(std::move(b));
  }
  BranchPlan arch;
  arch.label = "arch";
  arch.arch = true;
  for (unsigned j = 1; j <= opt.samples_per_branch; ++j) {
    Rat e(j, opt.samples_per_branch);
    e.canonicalize();
    arch.eps.push_back(e);
  }
  out.push_back(std::move(arch));
  return out;
}

SpectrumPoint plan_point(const BranchPlan& b, const Rat& eps) {
  return b.arch ? arch_point(eps) : prime_point(b.p, eps);
}

}  // namespace

std::string export_tree(const ExportOptions& opt) {
  auto branches = plan_branches(opt);
  if (opt.format == ExportOptions::Format::Json) {
    nlohmann::ordered_json doc;
    doc["center"] = {{"branch", "trivial"}};
    doc["branches"] = nlohmann::ordered_json::array();
    for (const auto& b : branches) {
      nlohmann::ordered_json jb;
      jb["label"] = b.label;
      jb["kind"] = b.arch ? "arch" : "prime";
      if (!b.arch) jb["p"] = b.p;
      jb["samples"] = nlohmann::ordered_json::array();
      for (const Rat& e : b.eps) {
        SpectrumPoint pt = plan_point(b, e);
        bool overlaid = false;
        for (const auto& ov : opt.overlays) overlaid = overlaid || interval_contains(ov, pt);
        jb["samples"].push_back({{"eps", {{"num", e.get_num().get_str()},
                                          {"den", e.get_den().get_str()}}},
                                 {"overlay", overlaid}});
      }
      if (b.has_residue_tip) jb["residue_tip"] = true;
      doc["branches"].push_back(std::move(jb));
    }
    return doc.dump(2) + "\n";
  }

  // SVG: fixed radial layout, branch angle from a label hash (cosmetic only).
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
         "viewBox=\"0 0 600 600\">\n";
  svg += "<circle cx=\"300\" cy=\"300\" r=\"5\" fill=\"black\"/>\n";
  svg += "<text x=\"306\" y=\"296\" font-size=\"12\">trivial</text>\n";
  for (const auto& b : branches) {
    double ang = static_cast<double>(fnv1a(b.label) % 3600) / 10.0 * M_PI / 180.0;
    double ux = std::cos(ang), uy = std::sin(ang);
    double x1 = 300 + 250 * ux, y1 = 300 + 250 * uy;
    svg += "<line x1=\"300\" y1=\"300\" x2=\"" + fmt3(x1) + "\" y2=\"" + fmt3(y1) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + fmt3(300 + 262 * ux) + "\" y=\"" + fmt3(300 + 262 * uy) +
           "\" font-size=\"12\">" + b.label + "</text>\n";
    std::size_t count = b.eps.size() + (b.has_residue_tip ? 1 : 0);
    for (std::size_t j = 0; j < b.eps.size(); ++j) {
      double t = static_cast<double>(j + 1) / static_cast<double>(count + 1);
      SpectrumPoint pt = plan_point(b, b.eps[j]);
      bool overlaid = false;
      for (const auto& ov : opt.overlays) overlaid = overlaid || interval_contains(ov, pt);
      svg += "<circle cx=\"" + fmt3(300 + 250 * t * ux) + "\" cy=\"" +
             fmt3(300 + 250 * t * uy) + "\" r=\"" + (overlaid ? "4" : "2") + "\" fill=\"" +
             (overlaid ? "red" : "black") + "\"/>\n";
    }
    if (b.has_residue_tip)
      svg += "<circle cx=\"" + fmt3(300 + 250 * ux) + "\" cy=\"" + fmt3(300 + 250 * uy) +
             "\" r=\"3\" fill=\"blue\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::complex<double> complex_eval(const F1Element& f, std::complex<double> z) {
  if (z.real() >= 0) throw F1Error(Errc::InvalidElement, "need Re z < 0");
  std::complex<double> acc = 0;
  double l1 = 0;
  for (const auto& [q, c] : f.support) {
    if (c.tag != GroundScalar::Tag::Complex && c.tag != GroundScalar::Tag::Real)
      throw F1Error(Errc::TagMismatch, "complex evaluation needs float coefficients");
    double qd = rat_double(q);
    acc += c.cval * std::exp(qd * z);
    l1 += std::abs(c.cval) * std::exp(qd * z.real());
  }
  if (std::abs(acc) > l1 + 1e-9)
    throw F1Error(Errc::InternalError, "evaluation exceeded its own L1 bound");
  return acc;
}

}  // namespace f1an
