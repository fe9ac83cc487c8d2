// Acceptance gate: twelve property checks at full scale, one line each.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "core/spectrum.hpp"
#include "core/verify.hpp"

namespace {

const char* kNames[12] = {
    "witt-ghost oracle equivalence",
    "Z_p isometry of the alpha norm",
    "scale-by-p isometry",
    "cofinality bound",
    "codiagonal base-change compatibility",
    "frobenius gauss-norm law",
    "key-lemma case inequalities",
    "cokernel quotient norm",
    "perfectoid sup-norm multiplicativity",
    "spectrum validity and golden export",
    "currying isometry",
    "norm-family sandwich",
};

bool golden_export_matches(std::string& detail) {
  auto slurp = [](const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
  };
  f1an::ExportOptions opt;
  std::string want;
  if (!slurp(std::string(F1AN_GOLDEN_DIR) + "/spectrum_tree.json", want)) {
    detail = "missing golden spectrum_tree.json";
    return false;
  }
  if (f1an::export_tree(opt) != want) {
    detail = "json export drifted from the golden bytes";
    return false;
  }
  opt.format = f1an::ExportOptions::Format::Svg;
  if (!slurp(std::string(F1AN_GOLDEN_DIR) + "/spectrum_tree.svg", want)) {
    detail = "missing golden spectrum_tree.svg";
    return false;
  }
  if (f1an::export_tree(opt) != want) {
    detail = "svg export drifted from the golden bytes";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
  std::vector<f1an::VerifyCase> cases = f1an::acceptance_criteria(seed);
  bool all_pass = true;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    bool pass = cases[i].pass;
    std::string detail = cases[i].detail;
    if (i == 9 && pass) {  // criterion 10 additionally pins the export bytes
      std::string gd;
      if (!golden_export_matches(gd)) {
        pass = false;
        detail = gd;
      }
    }
    all_pass = all_pass && pass;
    std::cout << "criterion " << (i + 1 < 10 ? "0" : "") << i + 1 << " ["
              << kNames[i] << "]: " << (pass ? "pass" : "FAIL")
              << (pass || detail.empty() ? "" : " — " + detail) << "\n";
  }
  std::cout << (all_pass ? "ACCEPTANCE: all criteria pass"
                         : "ACCEPTANCE: FAILURES above")
            << " (seed " << seed << ")\n";
  return all_pass ? 0 : 1;
}
