// Synthesizes a numerator for an interval quartic family given on the command
// line as eight bounds (a1- a1+ a2- a2+ a3- a3+ a4- a4+), then re-checks it on
// random members of the box.

#include <cstdlib>
#include <iostream>
#include <random>

#include "sprsynth/sprsynth.hpp"

int main(int argc, char** argv) {
  using namespace sprsynth;
  std::array<Rational, 4> lo{11, 56, 88, 1}, hi{89, 56, 88, 50};
  if (argc == 9) {
    for (int i = 0; i < 4; ++i) {
      lo[static_cast<std::size_t>(i)] = parse_rational(argv[1 + 2 * i]);
      hi[static_cast<std::size_t>(i)] = parse_rational(argv[2 + 2 * i]);
    }
  } else if (argc != 1) {
    std::cerr << "usage: " << argv[0] << " [a1- a1+ a2- a2+ a3- a3+ a4- a4+]\n";
    return 2;
  }

  try {
    const IntervalQuartic family(lo, hi);
    const SynthesisResult r = synthesize_interval(family);
    std::cout << "point (" << to_decimal_string(r.point.x) << ", " << to_decimal_string(r.point.y) << ") via "
              << r.construction << "\n"
              << "eps = " << to_decimal_string(r.epsilon) << " of max " << to_decimal_string(r.epsilon_max) << "\n"
              << "r   = " << to_decimal_string(r.r) << " of max " << to_decimal_string(r.r_max) << "\n"
              << "b~(s) = " << to_string(r.numerator) << "\n";

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> frac(0, 64);
    int ok = 0;
    const int members = 20;
    for (int m = 0; m < members; ++m) {
      std::array<Rational, 4> u;
      for (auto& x : u) x = make_rational(frac(rng), 64);
      ok += is_spr(r.numerator, family.member(u)).is_spr ? 1 : 0;
    }
    std::cout << ok << "/" << members << " random members SPR\n";
    return ok == members ? 0 : 1;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }
}
