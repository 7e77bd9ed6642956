// Walks one Sperner family through the whole exact pipeline: canonical form,
// profiles, the module by all three constructions, duality, influence, and
// the certified fixed point. Pass a family string to inspect your own, e.g.
//
//   demo_module_walkthrough "n=4;{1,2},{3,4}"

#include <cstdio>
#include <string>

#include "selector/fixed_point.hpp"
#include "selector/io.hpp"
#include "selector/module_calc.hpp"
#include "selector/sperner.hpp"

using namespace selector;

namespace {

std::string poly_text(const RationalPoly& p) {
  if (p.coeffs.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    if (p.coeffs[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += rational_to_string(p.coeffs[k]);
    if (k >= 1) out += "*t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string text = argc > 1 ? argv[1] : "n=3;{1,2},{2,3}";
  SpernerFamily f;
  try {
    f = parse_family(text);
  } catch (const selector_error& e) {
    std::fprintf(stderr, "%s\n", error_to_json(e).c_str());
    return 2;
  }

  std::printf("family          %s\n", family_to_text(f).c_str());
  std::printf("classification  %s\n", classification_name(classify(f)));

  Profile pr = profile(f);
  std::printf("a-profile      ");
  for (long long v : pr.a) std::printf(" %lld", v);
  std::printf("\nb-profile      ");
  for (long long v : pr.b) std::printf(" %lld", v);
  std::printf("\n");

  RationalPoly h = module_inclusion_exclusion(f);
  std::printf("module h        %s\n", poly_text(h).c_str());
  std::printf("  via profile   %s\n", poly_text(module_from_profile(pr)).c_str());
  std::printf("  via recursion %s\n", poly_text(module_by_recursion(f)).c_str());
  RationalPoly g = sperner_g_of(h);
  std::printf("dual g          %s\n", poly_text(g).c_str());
  std::printf("dual family     %s\n", family_to_text(transversal_dual(f)).c_str());

  auto [M, b] = bounds_exponents(f);
  std::printf("bounds          t^%d <= h(t) <= 1-(1-t)^%d\n", b, M);
  std::printf("influence(1/2)  %s\n",
              rational_to_string(total_influence(f, Rational(1, 2))).c_str());

  try {
    FixedPointReport rep = sperner_point(f, Rational(1, Int(1) << 40));
    std::printf("fixed point     omega = %.15g in [%s, %s]\n", rep.omega,
                rational_to_string(rep.lo).c_str(), rational_to_string(rep.hi).c_str());
    std::printf("slope there     h'(omega) = %.15g\n", rep.hprime_at_omega);
  } catch (const selector_error& e) {
    std::printf("fixed point     n/a (%s)\n", e.what());
  }
  return 0;
}
