#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "comical/simpset.hpp"

using namespace comical;

namespace {

std::set<std::string> marked_names(const MarkedSimplicialSet& x) {
    std::set<std::string> out;
    for (CellId c = 0; c < x.cell_count(); ++c)
        if (x.is_marked(c)) out.insert(x.cell(c).name);
    return out;
}

std::string image_name(const SimplicialOperator& mono, const MarkedSimplicialSet&) {
    std::string s;
    for (int v : mono.image()) s += static_cast<char>('0' + v);
    return s;
}

// Locate a (Δ¹)^{⊗2} cell by its path of vertex pairs, e.g. {"00","01","11"}.
CellId cell_by_path(const MarkedSimplicialSet& p, const std::vector<std::string>& path) {
    const int n = static_cast<int>(path.size()) - 1;
    for (CellId c : p.cells_of_dim(n)) {
        // name has the shape "01:<sx>|01:<sy>" with single-digit images
        const std::string& name = p.cell(c).name;
        const auto bar = name.find('|');
        const std::string sx = name.substr(name.find(':') + 1, bar - name.find(':') - 1);
        const std::string sy = name.substr(name.find(':', bar) + 1);
        bool match = true;
        for (int i = 0; i <= n && match; ++i) {
            // vertex i of the component "01"·s is s(i) itself
            const std::string at = {sx[static_cast<size_t>(i)], sy[static_cast<size_t>(i)]};
            if (at != path[static_cast<size_t>(i)]) match = false;
        }
        if (match) return c;
    }
    REQUIRE(false);
    return -1;
}

} // namespace

TEST_CASE("operator algebra: factorization, sections, duals") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            for (const SimplicialOperator& a : all_operators_s(m, n)) {
                const SimplicialEpiMono em = epi_mono_factor(a);
                CHECK(em.epi.is_surjective());
                CHECK(em.mono.is_injective());
                CHECK(compose(em.mono, em.epi) == a);
                if (a.is_surjective()) {
                    CHECK(compose(a, section(a)) == SimplicialOperator::identity(n));
                }
                CHECK(dual_op(dual_op(a)) == a);
            }
    // contravariant pairs compose functorially under the dual
    for (const SimplicialOperator& f : all_operators_s(2, 3))
        for (const SimplicialOperator& g : all_operators_s(3, 4))
            CHECK(dual_op(compose(g, f)) == compose(dual_op(g), dual_op(f)));

    CHECK(SimplicialOperator::front(1, 2).image() == std::vector<int>{0, 1});
    CHECK(SimplicialOperator::back(1, 2).image() == std::vector<int>{1, 2, 3});
    // join with the identity on [0] plants the operator in front
    const SimplicialOperator j = join_id(SimplicialOperator::face(2, 1), 0);
    CHECK(j.image() == std::vector<int>{0, 2, 3});
    CHECK(j.tgt_dim() == 3);
}

TEST_CASE("standard simplex satisfies the Yoneda action oracle") {
    for (int n = 0; n <= 3; ++n) {
        const MarkedSimplicialSet s = standard_simplex(n);
        s.validate();
        CHECK(s.cell_count() == (1 << (n + 1)) - 1);
        std::vector<int> all(static_cast<size_t>(n) + 1);
        for (int v = 0; v <= n; ++v) all[static_cast<size_t>(v)] = v;
        const CellId top = *s.find(image_name(SimplicialOperator::from_image(n, all), s));
        for (int m = 0; m <= n + 1; ++m)
            for (const SimplicialOperator& a : all_operators_s(m, n)) {
                const Simplex got = s.act(top, a);
                const SimplicialEpiMono em = epi_mono_factor(a);
                CHECK(got.down == em.epi);
                CHECK(s.cell(got.cell).name == image_name(em.mono, s));
            }
    }
}

TEST_CASE("complicial family markings") {
    CHECK(marked_names(complicial_simplex(2, 1)) == std::set<std::string>{"012"});
    CHECK(marked_names(double_prime_simplex(2, 1)) ==
          std::set<std::string>{"012", "01", "02", "12"});
    CHECK(marked_names(prime_simplex(2, 1)) == std::set<std::string>{"012", "01", "12"});
    CHECK(marked_names(marker_simplex(3)) == std::set<std::string>{"0123"});
    // Λ²₁ keeps five flat cells
    const MarkedSimplicialSet horn = complicial_horn(2, 1);
    horn.validate();
    CHECK(horn.cell_count() == 5);
    CHECK(marked_names(horn).empty());
    // the 3-dimensional complicial marking follows the vertex-containment rule
    const MarkedSimplicialSet c31 = complicial_simplex(3, 1);
    c31.validate();
    CHECK(marked_names(c31) == std::set<std::string>{"0123", "012"});
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            complicial_simplex(n, k).validate();
            prime_simplex(n, k).validate();
            double_prime_simplex(n, k).validate();
        }
    CHECK_THROWS_AS(complicial_simplex(2, 3), ParameterError);
}

TEST_CASE("horn inclusions and marking extensions are the expected maps") {
    const SimplicialMap h = horn_inclusion_s(3, 1);
    h.validate();
    CHECK(h.is_mono());
    CHECK_FALSE(h.is_entire());
    const SimplicialMap e = marking_extension_s(3, 1);
    e.validate();
    CHECK(e.is_entire());
    CHECK_FALSE(e.is_iso());
    // the two objects differ exactly in the δₖ-face marking
    std::set<std::string> diff;
    for (CellId c = 0; c < e.src.cell_count(); ++c)
        if (e.src.is_marked(c) != e.tgt.is_marked(e.apply(c).cell))
            diff.insert(e.src.cell(c).name);
    CHECK(diff == std::set<std::string>{"023"});
    // dimension 1 is vacuous: the extension is an isomorphism there
    CHECK(marking_extension_s(1, 0).is_iso());
}

TEST_CASE("op dual flips the complicial index") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) {
            const MarkedSimplicialSet d = dual_op_s(complicial_simplex(n, k));
            d.validate();
            CHECK(find_isomorphism_s(d, complicial_simplex(n, n - k)).has_value());
        }
    // and is involutive on maps
    const SimplicialMap f = horn_inclusion_s(2, 0);
    CHECK(dual_op_s(dual_op_s(f)) == f);
}

TEST_CASE("validate rejects incoherent face tables") {
    MarkedSimplicialSet bad;
    const CellId v0 = bad.add_cell("a", 0);
    const CellId v1 = bad.add_cell("b", 0);
    const CellId e0 = bad.add_cell("e", 1);
    const CellId e1 = bad.add_cell("f", 1);
    bad.set_face(e0, 0, Simplex{SimplicialOperator::identity(0), v1});
    bad.set_face(e0, 1, Simplex{SimplicialOperator::identity(0), v0});
    bad.set_face(e1, 0, Simplex{SimplicialOperator::identity(0), v0});
    bad.set_face(e1, 1, Simplex{SimplicialOperator::identity(0), v1});
    const CellId t = bad.add_cell("t", 2);
    bad.set_face(t, 0, Simplex{SimplicialOperator::identity(1), e0});
    bad.set_face(t, 1, Simplex{SimplicialOperator::identity(1), e1});
    // face 2 deliberately disagrees at the shared vertex
    bad.set_face(t, 2, Simplex{SimplicialOperator::identity(1), e0});
    CHECK_THROWS_AS(bad.validate(), IntegrityError);
}

TEST_CASE("pseudo product of intervals is the marked square") {
    const MarkedSimplicialSet p = product(standard_simplex(1), standard_simplex(1));
    p.validate();
    CHECK(p.cell_count() == 11);
    CHECK(p.count_of_dim(0) == 4);
    CHECK(p.count_of_dim(1) == 5);
    CHECK(p.count_of_dim(2) == 2);
    // the categorical product marks pairs of marked simplices, and degenerate
    // components count as marked: both shuffle 2-simplices are marked
    CHECK(p.is_marked(cell_by_path(p, {"00", "01", "11"})));
    CHECK(p.is_marked(cell_by_path(p, {"00", "10", "11"})));
    for (CellId c : p.cells_of_dim(1)) CHECK_FALSE(p.is_marked(c));
}

TEST_CASE("product units and the marked diagonal") {
    const MarkedSimplicialSet s = complicial_simplex(2, 1);
    const auto iso = find_isomorphism_s(product(s, standard_simplex(0)), s);
    REQUIRE(iso.has_value());
    CHECK(iso->is_iso());

    // with both factors marked every positive-dimensional pair is marked
    const MarkedSimplicialSet mm = product(marker_simplex(1), marker_simplex(1));
    mm.validate();
    for (CellId c = 0; c < mm.cell_count(); ++c)
        if (mm.cell(c).dim >= 1) CHECK(mm.is_marked(c));
    // a flat factor blocks exactly the pairs whose moving part lives in it
    const MarkedSimplicialSet ms = product(marker_simplex(1), standard_simplex(1));
    CHECK(ms.is_marked(cell_by_path(ms, {"00", "10"})));
    CHECK_FALSE(ms.is_marked(cell_by_path(ms, {"00", "01"})));
    CHECK_FALSE(ms.is_marked(cell_by_path(ms, {"00", "11"})));
}

TEST_CASE("verity gray marks shuffles by the fully-cloven rule") {
    const MarkedSimplicialSet g = verity_gray(standard_simplex(1), standard_simplex(1));
    g.validate();
    CHECK(g.cell_count() == 11);
    // x switching first is unmarked, y switching first is marked
    CHECK_FALSE(g.is_marked(cell_by_path(g, {"00", "10", "11"})));
    CHECK(g.is_marked(cell_by_path(g, {"00", "01", "11"})));
    for (CellId c : g.cells_of_dim(1)) CHECK_FALSE(g.is_marked(c));

    const auto iso = find_isomorphism_s(verity_gray(marker_simplex(2), standard_simplex(0)),
                                        marker_simplex(2));
    REQUIRE(iso.has_value());
    CHECK(iso->is_iso());
}

TEST_CASE("gray marking is monotone in the factor markings") {
    const MarkedSimplicialSet lo = verity_gray(standard_simplex(1), standard_simplex(1));
    const MarkedSimplicialSet hi = verity_gray(marker_simplex(1), marker_simplex(1));
    REQUIRE(lo.cell_count() == hi.cell_count());
    for (CellId c = 0; c < lo.cell_count(); ++c) {
        CHECK(lo.cell(c).name == hi.cell(c).name);
        if (lo.is_marked(c)) CHECK(hi.is_marked(c));
    }
}

TEST_CASE("reflection closes the prime pattern to double prime") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(precomplicial_reflect(prime_simplex(n, k)) == double_prime_simplex(n, k));
        }
}

TEST_CASE("reflection is idempotent and fixes flat simplices") {
    const MarkedSimplicialSet g = verity_gray(marker_simplex(1), complicial_simplex(2, 1));
    const MarkedSimplicialSet r = precomplicial_reflect(g);
    CHECK(precomplicial_reflect(r) == r);
    CHECK(precomplicial_reflect(standard_simplex(3)) == standard_simplex(3));
}

TEST_CASE("interval gray powers are pre-complicial after truncation") {
    MarkedSimplicialSet power = standard_simplex(1);
    for (int n = 2; n <= 3; ++n) {
        power = verity_gray(power, standard_simplex(1));
        const MarkedSimplicialSet t = truncate_s(power, n - 1);
        CHECK(precomplicial_reflect(t) == t);
    }
}

TEST_CASE("reflection agrees with lifting against the marking extensions") {
    const MarkedSimplicialSet s = verity_gray(marker_simplex(1), standard_simplex(1));
    const MarkedSimplicialSet r = precomplicial_reflect(s);
    for (int n = 2; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(has_rlp_s(r, marking_extension_s(n, k)).holds);
        }
    // an object carrying an unclosed pattern genuinely fails the lift
    CHECK_FALSE(has_rlp_s(prime_simplex(2, 1), marking_extension_s(2, 1)).holds);
    CHECK(has_rlp_s(precomplicial_reflect(prime_simplex(2, 1)), marking_extension_s(2, 1)).holds);
}

TEST_CASE("pseudo leibniz of entire maps becomes invertible after reflection") {
    SimplicialMap marker;
    marker.src = standard_simplex(1);
    marker.tgt = marker_simplex(1);
    marker.assign.push_back(Simplex{SimplicialOperator::identity(0), 0});
    marker.assign.push_back(Simplex{SimplicialOperator::identity(0), 1});
    marker.assign.push_back(Simplex{SimplicialOperator::identity(1), 2});
    marker.validate();
    CHECK(marker.is_entire());

    const SLeibnizResult r = leibniz_s(marker, marker, SimplicialTensor::product);
    r.induced.validate();
    CHECK(r.induced.is_entire());
    CHECK_FALSE(r.induced.is_iso()); // the diagonal marking is missing upstairs

    SimplicialMap reflected = r.induced;
    reflected.src = precomplicial_reflect(r.induced.src);
    reflected.tgt = precomplicial_reflect(r.induced.tgt);
    reflected.validate();
    CHECK(reflected.is_iso());
}

TEST_CASE("map search mirrors the operator counts on simplices") {
    CHECK(enumerate_maps_s(standard_simplex(1), standard_simplex(1)).assignments.size() ==
          all_operators_s(1, 1).size());
    CHECK(enumerate_maps_s(standard_simplex(1), standard_simplex(2)).assignments.size() ==
          all_operators_s(1, 2).size());
    CHECK(enumerate_maps_s(standard_simplex(2), standard_simplex(1)).assignments.size() ==
          all_operators_s(2, 1).size());
}

TEST_CASE("truncation and core mirror the cubical behaviour") {
    CHECK(truncate_s(standard_simplex(2), 1) == marker_simplex(2));
    const MarkedSimplicialSet c = core_s(standard_simplex(2), 1);
    CHECK(c.cell_count() == 6);
    CHECK(c.top_dim() == 1);
    CHECK(core_s(marker_simplex(2), 1) == marker_simplex(2));
}

TEST_CASE("pushouts glue along horns") {
    const SimplicialMap h = horn_inclusion_s(2, 1);
    const SPushoutResult p = pushout_s(h, h);
    p.object.validate();
    CHECK(p.object.cell_count() == 9); // 7 + 7 − 5
    p.left.validate();
    p.right.validate();
    const SimplicialMap back =
        factor_through_pushout_s(p, identity_map(h.tgt), identity_map(h.tgt));
    back.validate();
    CHECK_FALSE(back.is_mono());
}

TEST_CASE("reflection commutes with the op dual") {
    for (int k = 0; k <= 3; ++k) {
        const MarkedSimplicialSet s = prime_simplex(3, k);
        CHECK(precomplicial_reflect(dual_op_s(s)) == dual_op_s(precomplicial_reflect(s)));
    }
}
