#pragma once

// Finite marked simplicial sets with the complicial toolkit: the simplex
// category as monotone maps in image form, EZ-normalized presheaves mirroring
// the cubical side, the pseudo product ⊛, Verity's Gray tensor via the
// fully-cloven test, the pre-complicial reflection fixpoint, pushouts, map
// search, lifting checks, and the op-dual.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "comical/errors.hpp"

namespace comical {

using CellId = int;

// A monotone map [src]→[tgt] stored by its image vector; equality is equality
// of functions, which doubles as the normal form.
class SimplicialOperator {
  public:
    SimplicialOperator() = default; // identity on [0]

    static SimplicialOperator identity(int n);
    static SimplicialOperator face(int n, int j);       // δⱼ: [n−1]→[n]
    static SimplicialOperator degeneracy(int n, int j); // σⱼ: [n+1]→[n]
    static SimplicialOperator from_image(int tgt, std::vector<int> img);
    static SimplicialOperator front(int p, int q); // [p]→[p+q], i ↦ i
    static SimplicialOperator back(int p, int q);  // [q]→[p+q], i ↦ p+i

    int src_dim() const { return static_cast<int>(img_.size()) - 1; }
    int tgt_dim() const { return tgt_; }
    int operator()(int i) const { return img_.at(static_cast<size_t>(i)); }
    const std::vector<int>& image() const { return img_; }

    bool is_identity() const;
    bool is_injective() const;
    bool is_surjective() const;

    std::string to_string() const;

    bool operator==(const SimplicialOperator&) const = default;
    bool operator<(const SimplicialOperator& o) const;

  private:
    int tgt_ = 0;
    std::vector<int> img_ = {0};
};

SimplicialOperator compose(const SimplicialOperator& g, const SimplicialOperator& f); // g∘f

// Inverse of to_string: "[0 1 3]->4" is the map [2]→[4] with that image.
SimplicialOperator parse_simplicial_operator(const std::string& text);

// Minimal monotone section of a surjection (picks least preimages).
SimplicialOperator section(const SimplicialOperator& s);

// Conjugation by the order reversal of both ends.
SimplicialOperator dual_op(const SimplicialOperator& a);

// The join α ⋆ id_{[k]}: [m+1+k] → [n+1+k].
SimplicialOperator join_id(const SimplicialOperator& a, int k);

struct SimplicialEpiMono {
    SimplicialOperator epi;  // surjective part
    SimplicialOperator mono; // injective part, a = mono ∘ epi
};
SimplicialEpiMono epi_mono_factor(const SimplicialOperator& a);

std::vector<SimplicialOperator> all_operators_s(int m, int n);      // all monotone [m]→[n]
std::vector<SimplicialOperator> all_down_operators_s(int m, int n); // surjections only

// An EZ pair: the simplex cell·down with down surjective; degenerate iff the
// down part is not an identity.
struct Simplex {
    SimplicialOperator down;
    CellId cell = -1;

    bool operator==(const Simplex&) const = default;
    bool is_degenerate() const { return !down.is_identity(); }
};

class MarkedSimplicialSet {
  public:
    struct CellData {
        std::string name;
        int dim = 0;
        bool marked = false;
        std::vector<Simplex> faces; // slot j holds the δⱼ-face

        bool operator==(const CellData&) const = default;
    };

    CellId add_cell(const std::string& name, int dim, bool marked = false);
    void set_face(CellId x, int j, Simplex value);
    void set_marked(CellId x, bool marked);

    // Face-table shape, the simplicial identity on all face pairs, and the
    // no-marked-vertex rule; throws IntegrityError naming the offender.
    void validate() const;

    int cell_count() const { return static_cast<int>(cells_.size()); }
    int top_dim() const;
    const CellData& cell(CellId x) const { return cells_.at(static_cast<size_t>(x)); }
    std::optional<CellId> find(const std::string& name) const;
    std::vector<CellId> cells_of_dim(int n) const;
    int count_of_dim(int n) const;

    Simplex face(CellId x, int j) const;
    bool is_marked(CellId x) const { return cell(x).marked; }
    bool is_marked(const Simplex& s) const { return s.is_degenerate() || is_marked(s.cell); }

    // Contravariant action by any monotone operator with tgt_dim = dim(x).
    Simplex act(CellId x, const SimplicialOperator& op) const;
    Simplex act(const Simplex& s, const SimplicialOperator& op) const;

    bool operator==(const MarkedSimplicialSet&) const = default;

  private:
    std::vector<CellData> cells_;
    std::map<std::string, CellId> index_;
};

struct SimplicialMap {
    MarkedSimplicialSet src;
    MarkedSimplicialSet tgt;
    std::vector<Simplex> assign; // per source cell id

    Simplex apply(CellId x) const { return assign.at(static_cast<size_t>(x)); }
    Simplex apply(const Simplex& s) const;

    void validate() const;

    bool is_mono() const;
    bool is_entire() const;
    bool is_iso() const;

    bool operator==(const SimplicialMap&) const = default;
};

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
SimplicialMap identity_map(const MarkedSimplicialSet& x);

// --- standard objects (cells named by their vertex strings) ---

MarkedSimplicialSet standard_simplex(int n);
MarkedSimplicialSet marker_simplex(int n);            // mΔⁿ: top simplex marked
MarkedSimplicialSet complicial_simplex(int n, int k); // Δⁿₖ: vertex-containment marking
MarkedSimplicialSet complicial_horn(int n, int k);    // Λⁿₖ as a regular subset
MarkedSimplicialSet prime_simplex(int n, int k);      // Δ'ⁿₖ
MarkedSimplicialSet double_prime_simplex(int n, int k); // Δ''ⁿₖ = trunc_{n−2}Δⁿₖ

SimplicialMap horn_inclusion_s(int n, int k);    // Λⁿₖ -> Δⁿₖ
SimplicialMap marking_extension_s(int n, int k); // Δ'ⁿₖ -> Δ''ⁿₖ (entire)

// --- products ---

// The pseudo product ⊛: jointly non-degenerate pairs, marked iff both
// components are marked (degenerate components count as marked).
MarkedSimplicialSet product(const MarkedSimplicialSet& s, const MarkedSimplicialSet& t);

// Verity's Gray tensor ⊗: same cells, marked iff fully cloven.
MarkedSimplicialSet verity_gray(const MarkedSimplicialSet& s, const MarkedSimplicialSet& t);

enum class SimplicialTensor { product, gray };

SimplicialMap tensor_map_s(const SimplicialMap& f, const SimplicialMap& g, SimplicialTensor t);

// EZ form of a pair of equal-dimension values: the common surjection followed
// by a jointly non-degenerate pair of components.
struct JointFactor {
    SimplicialOperator epi;
    Simplex x, y;
};

JointFactor joint_factor(const Simplex& x, const Simplex& y);

// Canonical name of the tensor cell holding a jointly non-degenerate pair,
// matching the cells produced by product/verity_gray on a and b.
std::string tensor_cell_name(const MarkedSimplicialSet& a, const MarkedSimplicialSet& b,
                             const Simplex& x, const Simplex& y);

struct SPushoutResult {
    MarkedSimplicialSet object;
    SimplicialMap left;
    SimplicialMap right;
};

SPushoutResult pushout_s(const SimplicialMap& f, const SimplicialMap& g); // f mono
SimplicialMap factor_through_pushout_s(const SPushoutResult& p, const SimplicialMap& u,
                                       const SimplicialMap& v);

struct SLeibnizResult {
    SPushoutResult corner;
    SimplicialMap induced;
};

SLeibnizResult leibniz_s(const SimplicialMap& f, const SimplicialMap& g, SimplicialTensor t);

// --- marking operations ---

MarkedSimplicialSet truncate_s(const MarkedSimplicialSet& x, int n);
MarkedSimplicialSet core_s(const MarkedSimplicialSet& x, int n);

// Least marking extension closed under the prime-pattern rule: whenever the
// faces of a marked n-simplex match Δ'ⁿₖ, the δₖ-face gets marked too.
MarkedSimplicialSet precomplicial_reflect(const MarkedSimplicialSet& x);

// --- map search and lifting ---

struct SMapSearch {
    std::vector<std::vector<Simplex>> assignments;
    bool overflow = false;
    size_t nodes = 0;
};

inline constexpr size_t kDefaultSearchLimitS = 1000000;

SMapSearch enumerate_maps_s(const MarkedSimplicialSet& a, const MarkedSimplicialSet& x,
                            size_t limit = kDefaultSearchLimitS);

struct SRlpResult {
    bool holds = false;
    bool overflow = false;
    std::optional<SimplicialMap> counterexample;
};

SRlpResult has_rlp_s(const MarkedSimplicialSet& x, const SimplicialMap& f,
                     size_t limit = kDefaultSearchLimitS);

std::optional<SimplicialMap> find_isomorphism_s(const MarkedSimplicialSet& x,
                                                const MarkedSimplicialSet& y,
                                                size_t limit = kDefaultSearchLimitS);

// --- duals ---

MarkedSimplicialSet dual_op_s(const MarkedSimplicialSet& x);
SimplicialMap dual_op_s(const SimplicialMap& f);

} // namespace comical
