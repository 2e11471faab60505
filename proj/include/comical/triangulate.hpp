#pragma once

// Triangulation of marked cubical sets.  Simplices of (Δ¹)ⁿ are encoded as
// slot functions {1..n} → {1..r} ∪ {±∞} recording where each coordinate
// switches from 0 to 1 (+∞ = constantly 0, −∞ = constantly 1); the functor T
// keeps one cell per (non-degenerate cube cell, interior non-degenerate slot
// function) pair and lands in pre-complicial sets after reflection.  The
// module also carries the comparison maps T(X⊗Y) → T(X)⊗T(Y) for both tensor
// modes and the diagonality/disorder bookkeeping used to peel marking
// extensions apart into complicial horn attachments.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "comical/gray.hpp"
#include "comical/simpset.hpp"

namespace comical {

// Slot sentinels, ordered −∞ < 1 < ... < r < +∞ under the usual int order.
inline constexpr int kMinusInf = -(1 << 28);
inline constexpr int kPlusInf = 1 << 28;

struct CubeSimplex {
    int r = 0;            // simplex dimension
    std::vector<int> phi; // slot i stored at phi[i-1]

    int n() const { return static_cast<int>(phi.size()); }
    int operator()(int i) const { return phi.at(static_cast<size_t>(i) - 1); }

    bool interior() const;         // no infinite slots
    bool is_nondegenerate() const; // every level 1..r is hit
    static CubeSimplex iota(int n);

    // Sequence notation: levels as digits, '-'/'+' for the sentinels.
    std::string to_string() const;

    auto operator<=>(const CubeSimplex&) const = default;
};

// The action of a simplicial operator on slot functions.
CubeSimplex act_cs(const CubeSimplex& phi, const SimplicialOperator& alpha);

// Pushforward along a box operator, computed on the vertex path.
CubeSimplex transport_cs(const CubeSimplex& phi, const BoxOperator& d);

// Marking in the Gray tensor power: unmarked iff an increasing sequence of
// slots realizes every level in order.  Dimension 0 is never marked.
bool is_marked_tp(const CubeSimplex& phi);

// How far from a diagonal embedding the simplex is: finite slots minus r.
int diagonality(const CubeSimplex& phi);
// The in-order slot pairs (i,j) with i < j and phi(i) < phi(j).
std::set<std::pair<int, int>> disorder(const CubeSimplex& phi);

struct StrategyState {
    CubeSimplex phi;
    int p = 0;          // pivot level, the least one with two or more slots
    int i = 0;          // pivot slot, the least preimage of p
    CubeSimplex lifted; // the (r+1)-simplex with lifted·δ_p = phi
};

// Requires diagonality(phi) >= 1; throws ParameterError otherwise.
StrategyState strategy_lift(const CubeSimplex& phi);

// A triangulated cubical set together with the cell bookkeeping needed to
// evaluate arbitrary (cube cell, slot function) pairs inside it.
class Triangulation {
  public:
    MarkedSimplicialSet object;

    const MarkedCubicalSet& base() const { return base_; }
    CellId cube_of(CellId s) const { return cube_of_.at(static_cast<size_t>(s)); }
    const CubeSimplex& simplex_of(CellId s) const {
        return simplex_of_.at(static_cast<size_t>(s));
    }
    // The cell representing an interior non-degenerate pair.
    CellId id_of(CellId cube, const CubeSimplex& phi) const;
    // EZ value of any pair: faces strip infinite slots, missed levels factor
    // out as simplicial degeneracies.
    Simplex value(CellId cube, CubeSimplex phi) const;

  private:
    friend Triangulation triangulate_full(const MarkedCubicalSet&, bool);
    MarkedCubicalSet base_;
    std::vector<CellId> cube_of_;
    std::vector<CubeSimplex> simplex_of_;
    std::map<std::pair<CellId, CubeSimplex>, CellId> index_;
};

Triangulation triangulate_full(const MarkedCubicalSet& x, bool reflect = true);
MarkedSimplicialSet triangulate(const MarkedCubicalSet& x, bool reflect = true);
SimplicialMap triangulate_map(const PresheafMap& f, bool reflect = true);

struct ComparisonResult {
    SimplicialMap map; // T(X⊗Y) -> T(X)⊗T(Y), both sides reflected
    bool iso = false;
};

// The canonical comparison for the lax or pseudo mode (geometric mode has no
// marked counterpart on the simplicial side and is rejected).
ComparisonResult monoidal_comparison(const MarkedCubicalSet& x, const MarkedCubicalSet& y,
                                     TensorMode mode);

} // namespace comical
