#pragma once

// Gray tensor products of marked cubical sets.  The underlying geometric
// product has non-degenerate cells the pairs of non-degenerate cells of the
// factors; the lax and pseudo modes differ only in marking.  Leibniz
// constructions are computed through the cubeset pushout machinery.

#include "comical/cubeset.hpp"

namespace comical {

enum class TensorMode { geometric, lax, pseudo };

// Cells are pairs "a|b"; the (i,e)-face acts on the left factor for i <= dim a
// and on the right factor otherwise, with the degeneracy shift absorbed into
// the tensor of the component down operators.
MarkedCubicalSet tensor(const MarkedCubicalSet& x, const MarkedCubicalSet& y, TensorMode mode);

PresheafMap tensor_map(const PresheafMap& f, const PresheafMap& g, TensorMode mode);

// The entire comparison lax(X,Y) -> pseudo(X,Y), identity on cells.
PresheafMap mu(const MarkedCubicalSet& x, const MarkedCubicalSet& y);

struct LeibnizResult {
    PushoutResult corner; // (X⊗B) ⊔_{A⊗B} (A⊗Y) with its two legs
    PresheafMap induced;  // corner.object -> X⊗Y
};

// Leibniz tensor of monomorphisms f: A -> X and g: B -> Y.
LeibnizResult leibniz(const PresheafMap& f, const PresheafMap& g, TensorMode mode);

// Coherence isomorphisms, returned as explicit maps so tests can compose
// them: (x⊗y)⊗z -> x⊗(y⊗z) and the unit identifications.
PresheafMap tensor_associator(const MarkedCubicalSet& x, const MarkedCubicalSet& y,
                              const MarkedCubicalSet& z, TensorMode mode);
PresheafMap tensor_left_unit(const MarkedCubicalSet& x, TensorMode mode);  // □⁰⊗x -> x
PresheafMap tensor_right_unit(const MarkedCubicalSet& x, TensorMode mode); // x⊗□⁰ -> x

// Anti-monoidality of the duals: (x⊗y)^co -> y^co ⊗ x^co swaps the factors,
// (x⊗y)^coop -> x^coop ⊗ y^coop keeps them.
PresheafMap tensor_co_swap(const MarkedCubicalSet& x, const MarkedCubicalSet& y, TensorMode mode);
PresheafMap tensor_coop_iso(const MarkedCubicalSet& x, const MarkedCubicalSet& y, TensorMode mode);

} // namespace comical
