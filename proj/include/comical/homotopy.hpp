#pragma once

// The homotopy relation on 1-cubes and the homotopy 1-category of a finite,
// sufficiently filled marked cubical set.  A homotopy f ~ g is a marked
// square whose boundary places f and g against degenerate edges in one of
// eight ways; composites of 1-cubes are marked squares filling one of the
// four 2-dimensional open boxes.  Nothing here fills boxes: the input must
// already contain the witnesses, and ho1 reports the first missing one
// instead of guessing.

#include "comical/cubeset.hpp"

#include <optional>
#include <vector>

namespace comical {

// The eight boundary patterns for a homotopy square, named by the labels of
// the display that introduces them.  Writing the faces of a square s as
// (left, right, top, bottom) = (s d(1,0), s d(1,1), s d(2,0), s d(2,1)) and
// 1x, 1y for the degenerate edges on the shared endpoints of f, g : x -> y:
//
//   phi   (g,  1y, f,  1y)     chi   (f,  g,  1x, 1y)
//   psi   (1x, 1y, f,  g )     omega (1x, f,  1x, g )
//
// and the primed patterns swap f and g.
enum class HomotopyPattern { phi, phi_prime, chi, chi_prime, psi, psi_prime, omega, omega_prime };

inline constexpr HomotopyPattern kAllPatterns[] = {
    HomotopyPattern::phi, HomotopyPattern::phi_prime,   HomotopyPattern::chi,
    HomotopyPattern::chi_prime, HomotopyPattern::psi,   HomotopyPattern::psi_prime,
    HomotopyPattern::omega, HomotopyPattern::omega_prime};

std::string to_string(HomotopyPattern kind);

struct HomotopyWitness {
    HomotopyPattern kind;
    Cube square; // marked 2-dimensional element realizing the pattern
};

// A (k,e)-composite of f : x -> y then g : y -> z is the missing (k,e)-face
// of a marked square whose remaining boundary is the corresponding open box:
//
//   (1,0) (a,  g,  f,  1z)  ->  a     (1,1) (f,  b,  1x, g)  ->  b
//   (2,0) (f,  1z, c,  g )  ->  c     (2,1) (1x, g,  f,  d)  ->  d
struct CompositeWitness {
    int k = 1, e = 0;
    Cube square;
    Cube result; // the (k,e)-face of the square
};

// All elements of dimension n: every cell of dimension m <= n under every
// degeneracy-part operator box^n -> box^m.
std::vector<Cube> elements_of_dim(const MarkedCubicalSet& x, int n);

// First marked square realizing the given pattern for f, g, or nothing.
// f and g must be parallel 1-dimensional elements (ParameterError otherwise).
std::optional<Cube> pattern_square(const MarkedCubicalSet& x, HomotopyPattern kind, const Cube& f,
                                   const Cube& g);

// Tries the eight patterns in declaration order and reports the first hit.
std::optional<HomotopyWitness> are_homotopic(const MarkedCubicalSet& x, const Cube& f,
                                             const Cube& g);

// Every composite witness of every kind for the composable pair f, g.
std::vector<CompositeWitness> composites(const MarkedCubicalSet& x, const Cube& f, const Cube& g);

// The category of 0-cells and homotopy classes of 1-dimensional elements.
// Classes are the union-find closure of all witness hits; the construction
// then audits that the hit relation was already transitive, that parallel
// composite witnesses agree up to homotopy, and that the category axioms
// hold, throwing IncompletenessError naming the offending pair when the
// input lacks a witness it needs.
FiniteCategory ho1(const MarkedCubicalSet& x);

} // namespace comical
