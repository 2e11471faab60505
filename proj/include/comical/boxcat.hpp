#pragma once

// The box category with connections: objects are the cubes [1]^n, maps are
// generated by faces d(i,e), degeneracies s(i) and connections g(i,e) subject
// to the cubical identities.  Every map has a unique normal form
//
//     d(k1,e1)...d(kt,et) . g(j1,h1)...g(js,hs) . s(i1)...s(ir)
//
// (function order, rightmost factor applied first) with i1 < ... < ir,
// j1 <= ... <= js (equal indices alternate signs), k1 > ... > kt.
// BoxOperator stores exactly that data; composition renormalizes.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "comical/errors.hpp"

namespace comical {

// A vertex of [1]^n, i.e. a bit string of length n.
struct Vertex {
    std::vector<int> coords; // entries 0/1, coordinate i at coords[i-1]

    int dim() const { return static_cast<int>(coords.size()); }
    bool operator==(const Vertex&) const = default;
};

// Enumerate all 2^n vertices of [1]^n in lexicographic order.
std::vector<Vertex> all_vertices(int n);

class BoxOperator {
  public:
    struct Face {
        int index; // insertion position in the target of its stage
        int sign;  // 0 or 1
        bool operator==(const Face&) const = default;
    };
    struct Conn {
        int index; // merge position in the source of its stage
        int sign;  // 1 = max-connection, 0 = min-connection
        bool operator==(const Conn&) const = default;
    };

    // Identity of [1]^n.
    static BoxOperator identity(int n);
    // d(i,e) : [1]^(n-1) -> [1]^n inserting e at slot i; n is the target dim.
    static BoxOperator face(int n, int i, int e);
    // s(i) : [1]^n -> [1]^(n-1) dropping coordinate i; n is the source dim.
    static BoxOperator degeneracy(int n, int i);
    // g(i,e) : [1]^n -> [1]^(n-1) merging coordinates i, i+1 by max (e=1) or
    // min (e=0); n is the source dim.
    static BoxOperator connection(int n, int i, int e);

    BoxOperator() = default;

    int src_dim() const { return src_; }
    int tgt_dim() const { return tgt_; }
    bool is_identity() const { return faces_.empty() && conns_.empty() && degens_.empty(); }
    // True when the operator lies in the degeneracy part (no faces).
    bool in_down() const { return faces_.empty(); }
    // True when the operator is a composite of faces only.
    bool in_up() const { return conns_.empty() && degens_.empty(); }

    const std::vector<Face>& faces() const { return faces_; }
    const std::vector<Conn>& conns() const { return conns_; }
    const std::vector<int>& degens() const { return degens_; }

    // Splits into (up, down) with *this == up . down, up a face word and
    // down a degeneracy/connection word.
    std::pair<BoxOperator, BoxOperator> ez_factor() const;

    // Action on vertices: the monotone map [1]^src -> [1]^tgt.
    Vertex evaluate(const Vertex& v) const;

    // The full vertex table, indexed by the lexicographic vertex order of the
    // source; used as the semantic oracle in tests.
    std::vector<Vertex> vertex_table() const;

    // Post-compose a single generator on the right (the generator is applied
    // first).  These implement the cubical identities and keep normal form.
    void absorb_degeneracy(int i);
    void absorb_connection(int i, int sign);
    void absorb_face(int i, int sign);

    // A section of a degeneracy/connection word: an operator s with
    // (*this) . s == identity.  Requires in_down().
    BoxOperator section() const;

    bool operator==(const BoxOperator&) const = default;

    std::string to_string() const; // application order, ';'-separated
    size_t hash() const;

    // Verifies the structural invariants of the normal form; throws
    // IntegrityError on violation.  Cheap; used liberally in tests.
    void check_invariants() const;

  private:
    int src_ = 0, tgt_ = 0;
    std::vector<Face> faces_;  // indices strictly decreasing
    std::vector<Conn> conns_;  // indices non-decreasing, equal => signs alternate
    std::vector<int> degens_;  // indices strictly increasing

    friend BoxOperator compose(const BoxOperator&, const BoxOperator&);
};

// after . before (before applied first).  Throws CompositionError when the
// dimensions do not chain.
BoxOperator compose(const BoxOperator& after, const BoxOperator& before);

// Composite of a word given in application order (word[0] applied first).
// Throws CompositionError naming the offending position on a dimension
// mismatch.
BoxOperator compose_word(const std::vector<BoxOperator>& word);

enum class Duality { co, coop, op };

// The three strict dualities.  co reverses the coordinate order, coop swaps
// the roles of 0 and 1, op is their composite.
BoxOperator dual(const BoxOperator& f, Duality d);

// Monoidal structure on operators: f (x) g acts as f on the first block of
// coordinates and as g on the rest.
BoxOperator tensor_op(const BoxOperator& f, const BoxOperator& g);

// Parsing / printing of the textual syntax: tokens d{i},{e} | s{i} | g{i},{e}
// joined by ';' in application order (first applied first); "id" denotes an
// identity.  When src_dim is absent the minimal admissible source dimension
// is inferred.
BoxOperator parse_box_operator(const std::string& text, std::optional<int> src_dim = std::nullopt);

// --- enumeration helpers (used by the map search and the test oracle) ---

// All operators [1]^src -> [1]^tgt in normal form.
std::vector<BoxOperator> all_box_operators(int src, int tgt);
// All degeneracy/connection-part operators [1]^src -> [1]^tgt.
std::vector<BoxOperator> all_down_operators(int src, int tgt);
// All single generators with the given source dimension (faces raise to
// src+1 provided src+1 <= max_tgt).
std::vector<BoxOperator> all_generators_from(int src, int max_tgt);

std::ostream& operator<<(std::ostream&, const BoxOperator&);

} // namespace comical

template <> struct std::hash<comical::BoxOperator> {
    size_t operator()(const comical::BoxOperator& f) const { return f.hash(); }
};
