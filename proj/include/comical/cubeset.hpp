#pragma once

// Finite marked cubical sets in EZ-normalized form: only non-degenerate cells
// are stored, and every face points at a (degeneracy-word, cell) pair.  The
// module also houses the standard objects (cubes, boundaries, open boxes,
// comical cubes, marking-extension pairs, Rezk data), pushouts, map
// enumeration, lifting checks, duals, and a small 1-category nerve used as a
// homotopy fixture.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "comical/boxcat.hpp"
#include "comical/errors.hpp"

namespace comical {

using CellId = int;

// An EZ pair: the value cell.down, with down in the degeneracy part.  When
// down is the identity the value is the (non-degenerate) cell itself.
struct Cube {
    BoxOperator down;
    CellId cell = -1;

    bool operator==(const Cube&) const = default;
    bool is_degenerate() const { return !down.is_identity(); }
};

class MarkedCubicalSet {
  public:
    struct CellData {
        std::string name;
        int dim = 0;
        bool marked = false;
        std::vector<Cube> faces; // slot 2*(i-1)+e holds the (i,e)-face

        bool operator==(const CellData&) const = default;
    };

    // --- construction (objects are frozen after validate/first use) ---
    CellId add_cell(const std::string& name, int dim, bool marked = false);
    void set_face(CellId x, int i, int e, Cube value);
    void set_marked(CellId x, bool marked);

    // Structural sanity plus action coherence on all length-2 face words;
    // throws IntegrityError naming the first offending cell.
    void validate() const;

    // --- inspection ---
    int cell_count() const { return static_cast<int>(cells_.size()); }
    int top_dim() const;
    const CellData& cell(CellId x) const { return cells_.at(size_t(x)); }
    std::optional<CellId> find(const std::string& name) const;
    std::vector<CellId> cells_of_dim(int n) const;
    int count_of_dim(int n) const;

    Cube face(CellId x, int i, int e) const;
    bool is_marked(CellId x) const { return cell(x).marked; }
    bool is_marked(const Cube& c) const { return c.is_degenerate() || is_marked(c.cell); }

    // Contravariant action: op must have target dimension dim(x); the result
    // is the EZ form of x.op.
    Cube act(CellId x, const BoxOperator& op) const;
    Cube act(const Cube& c, const BoxOperator& op) const;

    bool operator==(const MarkedCubicalSet&) const = default;

  private:
    std::vector<CellData> cells_;
    std::map<std::string, CellId> index_;
};

// A map of marked cubical sets, stored as the EZ value of each non-degenerate
// source cell.  Source and target are embedded by value (objects are small).
struct PresheafMap {
    MarkedCubicalSet src;
    MarkedCubicalSet tgt;
    std::vector<Cube> assign; // per source cell id

    Cube apply(CellId x) const { return assign.at(size_t(x)); }
    Cube apply(const Cube& c) const; // tgt-side EZ form of f(cell).down

    // Naturality with every face action plus marking preservation; throws
    // IntegrityError on the first offending cell.
    void validate() const;

    bool is_mono() const;   // all downs identities, injective on cells
    bool is_entire() const; // bijective on cells (an iso except for marking)
    bool is_iso() const;    // entire and marking-reflecting

    bool operator==(const PresheafMap&) const = default;
};

// g after f; throws CompositionError when f's target differs from g's source.
PresheafMap compose(const PresheafMap& g, const PresheafMap& f);
PresheafMap identity_map(const MarkedCubicalSet& x);

// --- standard objects ---

// The cell of a cube object is named by its {0,1,*} mask ("pt" in dim 0).
MarkedCubicalSet standard_cube(int n);
MarkedCubicalSet boundary(int n);                      // cube minus top cell
MarkedCubicalSet open_box(int n, int k, int e);        // boundary minus (k,e) face
MarkedCubicalSet marked_cube(int n);                   // top cell marked
MarkedCubicalSet comical_cube(int n, int k, int e);    // comical marking
MarkedCubicalSet comical_open_box(int n, int k, int e);// regular restriction

// The entire inclusion L'(n,k,e) -> L''(n,k,e) (the elementary comical
// marking extension).
PresheafMap marking_extension_pair(int n, int k, int e);

// The subobject inclusion for the standard families: boundary -> cube,
// open_box -> cube, comical_open_box -> comical_cube.
PresheafMap boundary_inclusion(int n);
PresheafMap open_box_inclusion(int n, int k, int e);
PresheafMap comical_box_inclusion(int n, int k, int e);

enum class RezkLeg { forward, backward }; // orientation of each marked square

// The basic Rezk map for the chosen pair of leg orientations: an entire map
// from a gluing of two marked squares to its 0-truncation.
PresheafMap rezk_map(RezkLeg x, RezkLeg y);

// --- marking operations ---

MarkedCubicalSet truncate(const MarkedCubicalSet& x, int n); // mark dims > n
MarkedCubicalSet core(const MarkedCubicalSet& x, int n);     // max n-trivial subobject

// --- colimits ---

struct PushoutResult {
    MarkedCubicalSet object;
    PresheafMap left;  // X -> P
    PresheafMap right; // Y -> P
};

// Pushout of X <-f- A -g-> Y; f must be a monomorphism.
PushoutResult pushout(const PresheafMap& f, const PresheafMap& g);

// The induced map P -> Z from a cocone (u: X -> Z, v: Y -> Z).
PresheafMap factor_through_pushout(const PushoutResult& p, const PresheafMap& u,
                                   const PresheafMap& v);

// --- map search ---

struct MapSearch {
    std::vector<std::vector<Cube>> assignments;
    bool overflow = false;
    size_t nodes = 0;
};

inline constexpr size_t kDefaultSearchLimit = 1000000;

MapSearch enumerate_maps(const MarkedCubicalSet& a, const MarkedCubicalSet& x,
                         size_t limit = kDefaultSearchLimit);

struct RlpResult {
    bool holds = false;
    bool overflow = false;
    std::optional<PresheafMap> counterexample; // a map A -> X with no extension
};

// Right lifting property of X against a monomorphism f: A -> B.
RlpResult has_rlp(const MarkedCubicalSet& x, const PresheafMap& f,
                  size_t limit = kDefaultSearchLimit);

// Isomorphism search (identity downs, bijective, marking-reflecting).
std::optional<PresheafMap> find_isomorphism(const MarkedCubicalSet& x,
                                            const MarkedCubicalSet& y,
                                            size_t limit = kDefaultSearchLimit);

// --- comical checks ---

struct CheckReport {
    struct Entry {
        std::string name;
        bool pass = false;
        bool overflow = false;
        std::string detail;
    };
    std::vector<Entry> entries;
    bool all_pass() const;
};

CheckReport is_comical(const MarkedCubicalSet& x, int max_dim, bool saturated = false,
                       size_t limit = kDefaultSearchLimit);

// --- duals ---

MarkedCubicalSet dual(const MarkedCubicalSet& x, Duality w);
PresheafMap dual(const PresheafMap& f, Duality w);

// --- finite categories and the cubical nerve ---

class FiniteCategory {
  public:
    struct Arrow {
        std::string name;
        int src = 0, tgt = 0;
    };

    int add_object(const std::string& name);
    int add_arrow(const std::string& name, int src, int tgt); // non-identity
    void set_composite(int g, int f, int gf);                 // g after f

    int object_count() const { return static_cast<int>(objects_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); } // incl. identities
    const std::string& object_name(int o) const { return objects_.at(size_t(o)); }
    const Arrow& arrow(int a) const { return arrows_.at(size_t(a)); }
    int identity(int o) const { return ids_.at(size_t(o)); }
    bool is_identity(int a) const;
    int compose(int g, int f) const; // g after f
    std::vector<int> arrows_from_to(int s, int t) const;
    bool is_invertible(int a) const;

    void validate() const; // category axioms
    FiniteCategory opposite() const;

    // Finds an isomorphism of categories (object/arrow bijections preserving
    // everything); brute force, suitable for the small fixtures here.
    static bool isomorphic(const FiniteCategory& c, const FiniteCategory& d);

  private:
    std::vector<std::string> objects_;
    std::vector<Arrow> arrows_;
    std::vector<int> ids_;           // identity arrow per object
    std::map<std::pair<int, int>, int> comp_; // (g, f) -> g.f
};

// Poset helpers for fixtures: relations is a list of (lower, upper) pairs,
// closed under transitivity by the constructor.
FiniteCategory poset_category(int n_objects, const std::vector<std::pair<int, int>>& relations);

// n-cubes = commuting cubes of arrows in c (functors [1]^n -> c) up to
// max_dim; 1-cubes marked iff invertible, everything above dimension 1
// marked.
MarkedCubicalSet cubical_nerve(const FiniteCategory& c, int max_dim);

} // namespace comical
