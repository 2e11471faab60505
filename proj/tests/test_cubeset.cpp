#include "doctest.h"

#include <algorithm>
#include <set>

#include "comical/cubeset.hpp"

using namespace comical;

namespace {

int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    int r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// The mask of a pure face word: start from all stars and pin its letters.
std::string face_mask(const BoxOperator& up, int n) {
    std::string m(size_t(n), '*');
    std::string scratch = m;
    // letters pin final target positions directly (indices strictly decrease)
    for (const auto& f : up.faces()) scratch[size_t(f.index - 1)] = char('0' + f.sign);
    return up.faces().empty() && n == 0 ? "pt" : scratch;
}

std::set<std::string> marked_names(const MarkedCubicalSet& x, int dim) {
    std::set<std::string> out;
    for (CellId c : x.cells_of_dim(dim))
        if (x.is_marked(c)) out.insert(x.cell(c).name);
    return out;
}

// Non-degenerate commuting squares of a thin category, counted directly from
// vertex tuples: a square is degenerate exactly when its vertices match a
// sigma or connection pattern.
int thin_square_count(const FiniteCategory& c) {
    int count = 0;
    int n = c.object_count();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w) {
                    if (c.arrows_from_to(x, y).empty() || c.arrows_from_to(x, z).empty() ||
                        c.arrows_from_to(y, w).empty() || c.arrows_from_to(z, w).empty())
                        continue;
                    bool deg = (x == z && y == w) || (x == y && z == w) ||
                               (y == z && z == w) || (x == y && y == z);
                    if (!deg) ++count;
                }
    return count;
}

FiniteCategory free_iso() {
    FiniteCategory c;
    int a = c.add_object("a");
    int b = c.add_object("b");
    int f = c.add_arrow("f", a, b);
    int g = c.add_arrow("g", b, a);
    c.set_composite(g, f, c.identity(a));
    c.set_composite(f, g, c.identity(b));
    return c;
}

} // namespace

TEST_CASE("standard cube families match the closed-form counts") {
    for (int n = 0; n <= 4; ++n) {
        MarkedCubicalSet cube = standard_cube(n);
        cube.validate();
        CHECK(cube.cell_count() == [&] {
            int t = 1;
            for (int i = 0; i < n; ++i) t *= 3;
            return t;
        }());
        for (int j = 0; j <= n; ++j) CHECK(cube.count_of_dim(j) == binom(n, j) * (1 << (n - j)));
        for (CellId c = 0; c < cube.cell_count(); ++c) CHECK_FALSE(cube.is_marked(c));
    }
    for (int n = 1; n <= 4; ++n) {
        MarkedCubicalSet bd = boundary(n);
        bd.validate();
        CHECK(bd.count_of_dim(n) == 0);
        for (int j = 0; j < n; ++j) CHECK(bd.count_of_dim(j) == binom(n, j) * (1 << (n - j)));
    }
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= n; ++k)
            for (int e = 0; e <= 1; ++e) {
                MarkedCubicalSet box = open_box(n, k, e);
                box.validate();
                CHECK(box.count_of_dim(n) == 0);
                CHECK(box.count_of_dim(n - 1) == 2 * n - 1);
            }
    CHECK_THROWS_AS(standard_cube(-1), ParameterError);
    CHECK_THROWS_AS(open_box(2, 3, 0), ParameterError);
    CHECK_THROWS_AS(comical_cube(2, 1, 2), ParameterError);
}

TEST_CASE("action on the representable agrees with EZ factorization") {
    // by Yoneda, top.op is exactly the EZ pair of op itself
    for (int n = 0; n <= 3; ++n) {
        MarkedCubicalSet cube = standard_cube(n);
        std::string top(size_t(n), '*');
        CellId t = *cube.find(n == 0 ? "pt" : top);
        for (int m = 0; m <= n; ++m)
            for (const BoxOperator& op : all_box_operators(m, n)) {
                auto [up, down] = op.ez_factor();
                Cube got = cube.act(t, op);
                CHECK(got.down == down);
                CHECK(cube.cell(got.cell).name == face_mask(up, n));
            }
    }
    // functoriality through stored face tables
    MarkedCubicalSet cube = standard_cube(3);
    CellId top = *cube.find("***");
    for (const BoxOperator& w1 : all_box_operators(2, 3))
        for (const BoxOperator& w2 : all_box_operators(1, 2)) {
            Cube once = cube.act(top, compose(w1, w2));
            Cube twice = cube.act(cube.act(top, w1), w2);
            CHECK(once == twice);
        }
}

TEST_CASE("action normalizes through stored degenerate faces") {
    // a square whose left and top edges are collapsed onto a vertex
    MarkedCubicalSet x;
    CellId a = x.add_cell("a", 0);
    CellId b = x.add_cell("b", 0);
    CellId e = x.add_cell("e", 1);
    x.set_face(e, 1, 0, Cube{BoxOperator::identity(0), a});
    x.set_face(e, 1, 1, Cube{BoxOperator::identity(0), b});
    CellId q = x.add_cell("q", 2);
    x.set_face(q, 1, 0, Cube{BoxOperator::degeneracy(1, 1), a});
    x.set_face(q, 2, 0, Cube{BoxOperator::degeneracy(1, 1), a});
    x.set_face(q, 1, 1, Cube{BoxOperator::identity(1), e});
    x.set_face(q, 2, 1, Cube{BoxOperator::identity(1), e});
    x.validate();

    BoxOperator corner = compose(BoxOperator::face(2, 1, 0), BoxOperator::face(1, 1, 0));
    CHECK(x.act(q, corner) == Cube{BoxOperator::identity(0), a});
    // a word that normalizes to the identity acts trivially
    CHECK(compose(BoxOperator::degeneracy(1, 1), BoxOperator::face(1, 1, 0)).is_identity());
    CHECK(x.act(a, compose(BoxOperator::degeneracy(1, 1), BoxOperator::face(1, 1, 0))) ==
          Cube{BoxOperator::identity(0), a});
    CHECK(x.act(q, BoxOperator::face(2, 1, 0)) == Cube{BoxOperator::degeneracy(1, 1), a});
    CHECK_THROWS_AS(x.act(e, BoxOperator::face(3, 1, 0)), ArityError);
}

TEST_CASE("validate rejects malformed sets") {
    MarkedCubicalSet x;
    CHECK_THROWS_AS(x.add_cell("v", 0, true), ParameterError);
    x.add_cell("v", 0);
    CHECK_THROWS_AS(x.add_cell("v", 0), ParameterError);
    CellId e = x.add_cell("e", 1);
    CHECK_THROWS_AS(x.validate(), IntegrityError); // faces of e missing
    x.set_face(e, 1, 0, Cube{BoxOperator::identity(0), 0});
    x.set_face(e, 1, 1, Cube{BoxOperator::identity(0), 0});
    x.validate();
    CHECK_THROWS_AS(x.set_marked(0, true), ParameterError);

    // square whose corner routes disagree
    MarkedCubicalSet y;
    CellId u = y.add_cell("u", 0);
    CellId v = y.add_cell("v", 0);
    CellId e1 = y.add_cell("e1", 1);
    CellId e2 = y.add_cell("e2", 1);
    y.set_face(e1, 1, 0, Cube{BoxOperator::identity(0), u});
    y.set_face(e1, 1, 1, Cube{BoxOperator::identity(0), v});
    y.set_face(e2, 1, 0, Cube{BoxOperator::identity(0), v});
    y.set_face(e2, 1, 1, Cube{BoxOperator::identity(0), u});
    CellId s = y.add_cell("s", 2);
    y.set_face(s, 1, 0, Cube{BoxOperator::identity(1), e1});
    y.set_face(s, 1, 1, Cube{BoxOperator::identity(1), e2});
    y.set_face(s, 2, 0, Cube{BoxOperator::identity(1), e1});
    y.set_face(s, 2, 1, Cube{BoxOperator::identity(1), e1}); // corner 01 disagrees
    CHECK_THROWS_AS(y.validate(), IntegrityError);
}

TEST_CASE("comical marking singles out the admissible faces") {
    MarkedCubicalSet adm = comical_cube(3, 2, 0);
    adm.validate();
    CHECK(marked_names(adm, 3) == std::set<std::string>{"***"});
    CHECK(marked_names(adm, 2) == std::set<std::string>{"1**", "**1"});
    CHECK(marked_names(adm, 1) == std::set<std::string>{"1*1"});
    CHECK(marked_names(adm, 0).empty());

    CHECK(marked_names(marked_cube(2), 2) == std::set<std::string>{"**"});
    CHECK(marked_names(marked_cube(2), 1).empty());

    MarkedCubicalSet box = open_box(2, 1, 0);
    CHECK(box.cell_count() == 7);
    CHECK_FALSE(box.find("0*"));
    for (CellId c = 0; c < box.cell_count(); ++c) CHECK_FALSE(box.is_marked(c));

    // the open box of the comical cube carries the restricted marking
    MarkedCubicalSet cbox = comical_open_box(3, 2, 0);
    cbox.validate();
    for (CellId c = 0; c < cbox.cell_count(); ++c)
        CHECK(cbox.is_marked(c) == adm.is_marked(*adm.find(cbox.cell(c).name)));

    PresheafMap inc = comical_box_inclusion(3, 2, 0);
    inc.validate();
    CHECK(inc.is_mono());
    CHECK_FALSE(inc.is_entire());
}

TEST_CASE("marking extension pairs add exactly the critical face") {
    PresheafMap ext = marking_extension_pair(3, 2, 0);
    ext.validate();
    CHECK(ext.is_entire());
    CHECK_FALSE(ext.is_iso());
    std::set<std::string> lower = marked_names(ext.src, 2);
    std::set<std::string> upper = marked_names(ext.tgt, 2);
    CHECK(lower == std::set<std::string>{"1**", "**1", "0**", "*1*", "**0"});
    CHECK(upper == std::set<std::string>{"1**", "**1", "0**", "*0*", "*1*", "**0"});
    CHECK(marked_names(ext.src, 3) == marked_names(ext.tgt, 3));
    CHECK(marked_names(ext.src, 1) == marked_names(ext.tgt, 1));

    PresheafMap small = marking_extension_pair(2, 1, 0);
    small.validate();
    std::set<std::string> diff;
    for (CellId c = 0; c < small.src.cell_count(); ++c)
        if (small.tgt.is_marked(c) && !small.src.is_marked(c)) diff.insert(small.src.cell(c).name);
    CHECK(diff == std::set<std::string>{"0*"});
}

TEST_CASE("pushouts glue along monomorphisms") {
    MarkedCubicalSet pt = standard_cube(0);
    MarkedCubicalSet interval = standard_cube(1);

    PresheafMap f; // endpoint 1 of the first interval
    f.src = pt;
    f.tgt = interval;
    f.assign = {Cube{BoxOperator::identity(0), *interval.find("1")}};
    PresheafMap g; // endpoint 0 of the second interval
    g.src = pt;
    g.tgt = interval;
    g.assign = {Cube{BoxOperator::identity(0), *interval.find("0")}};

    PushoutResult path = pushout(f, g);
    path.object.validate();
    path.left.validate();
    path.right.validate();
    CHECK(path.object.count_of_dim(0) == 3);
    CHECK(path.object.count_of_dim(1) == 2);
    // the glued endpoint: first interval's 1-end equals second's 0-end
    CHECK(path.left.apply(*interval.find("1")) == path.right.apply(*interval.find("0")));
    CHECK(factor_through_pushout(path, path.left, path.right) == identity_map(path.object));

    // collapsing the boundary of the interval yields a loop
    PresheafMap collapse;
    collapse.src = boundary(1);
    collapse.tgt = pt;
    collapse.assign = {Cube{BoxOperator::identity(0), 0}, Cube{BoxOperator::identity(0), 0}};
    PushoutResult loop = pushout(boundary_inclusion(1), collapse);
    loop.object.validate();
    CHECK(loop.object.count_of_dim(0) == 1);
    CHECK(loop.object.count_of_dim(1) == 1);

    // marking transports through identifications with identity downs
    PresheafMap m_id;
    m_id.src = interval;
    m_id.tgt = marked_cube(1);
    for (CellId c = 0; c < interval.cell_count(); ++c)
        m_id.assign.push_back(Cube{BoxOperator::identity(interval.cell(c).dim), c});
    PushoutResult marked = pushout(m_id, identity_map(interval));
    CHECK(marked.object.is_marked(*marked.object.find("*")));

    CHECK_THROWS_AS(pushout(collapse, collapse), ParameterError); // collapse is not mono
}

TEST_CASE("rezk gluings have the expected shape") {
    PresheafMap basic = rezk_map(RezkLeg::forward, RezkLeg::forward);
    basic.validate();
    CHECK(basic.is_entire());
    const MarkedCubicalSet& l = basic.src;
    l.validate();
    CHECK(l.count_of_dim(0) == 6);
    CHECK(l.count_of_dim(1) == 7);
    CHECK(l.count_of_dim(2) == 2);
    // middle edge unmarked, the four one-sided-inverse witnesses marked
    CHECK(marked_names(l, 1) == std::set<std::string>{"1*", "*0", "0*'", "*1'"});
    CHECK(marked_names(l, 2).size() == 2);
    // the codomain is the 0-trivialization
    for (CellId c = 0; c < basic.tgt.cell_count(); ++c)
        CHECK(basic.tgt.is_marked(c) == (basic.tgt.cell(c).dim >= 1));

    for (RezkLeg x : {RezkLeg::forward, RezkLeg::backward})
        for (RezkLeg y : {RezkLeg::forward, RezkLeg::backward}) {
            PresheafMap r = rezk_map(x, y);
            r.validate();
            r.src.validate();
            CHECK(r.src.cell_count() == 15);
            CHECK(marked_names(r.src, 1).size() == 4);
        }
}

TEST_CASE("truncate and core") {
    CHECK(truncate(standard_cube(2), 1) == marked_cube(2));
    MarkedCubicalSet c = core(marked_cube(2), 0);
    c.validate();
    CHECK(c.cell_count() == 4);
    CHECK(c.top_dim() == 0);
    MarkedCubicalSet m1 = marked_cube(1);
    CHECK(truncate(m1, 0) == m1); // already 0-trivial
    CHECK(core(truncate(standard_cube(2), 0), 0) == truncate(standard_cube(2), 0));
}

TEST_CASE("enumerate_maps agrees with the Yoneda counts") {
    MarkedCubicalSet interval = standard_cube(1);
    CHECK(enumerate_maps(standard_cube(0), standard_cube(2)).assignments.size() == 4);
    CHECK(enumerate_maps(interval, interval).assignments.size() == 3);
    CHECK(enumerate_maps(marked_cube(1), interval).assignments.size() == 2);
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}})
        CHECK(enumerate_maps(standard_cube(m), standard_cube(n)).assignments.size() ==
              all_box_operators(m, n).size());

    MapSearch tiny = enumerate_maps(standard_cube(2), standard_cube(2), 5);
    CHECK(tiny.overflow);

    // every reported assignment is a valid map
    for (const auto& a : enumerate_maps(boundary(2), interval).assignments) {
        PresheafMap h;
        h.src = boundary(2);
        h.tgt = interval;
        h.assign = a;
        h.validate();
    }
}

TEST_CASE("lifting properties against the comical generators") {
    // the comical interval lifts against its own box in both directions
    for (int e = 0; e <= 1; ++e) {
        RlpResult self = has_rlp(comical_cube(1, 1, e), comical_box_inclusion(1, 1, e));
        CHECK(self.holds);
        CHECK_FALSE(self.overflow);
    }

    // the comical square is a cofibrant generator, not a fibrant object: the
    // map squashing all of the open box except the (2,1)-edge onto a vertex
    // admits no filler (checked by hand against all EZ pairs (down, cell))
    RlpResult self2 = has_rlp(comical_cube(2, 1, 0), comical_box_inclusion(2, 1, 0));
    CHECK_FALSE(self2.holds);
    REQUIRE(self2.counterexample.has_value());
    self2.counterexample->validate();

    // connection squares fill every open box of the flat interval: the two
    // base maps hitting the edge extend via *.gamma and *.sigma respectively
    RlpResult flat = has_rlp(standard_cube(1), comical_box_inclusion(2, 1, 0));
    CHECK(flat.holds);

    // entire map adding no marking lifts trivially
    RlpResult entire = has_rlp(standard_cube(2), identity_map(standard_cube(1)));
    CHECK(entire.holds);
}

TEST_CASE("is_comical reports per generator") {
    CheckReport pt = is_comical(standard_cube(0), 2, true);
    CHECK(pt.all_pass());

    // the flat interval is the nerve of the arrow poset, hence comical; its
    // report must agree with the nerve's generator by generator
    CheckReport flat = is_comical(standard_cube(1), 2);
    CHECK(flat.all_pass());
    CheckReport nerve2 = is_comical(cubical_nerve(poset_category(2, {{0, 1}}), 2), 2);
    REQUIRE(flat.entries.size() == nerve2.entries.size());
    for (size_t i = 0; i < flat.entries.size(); ++i)
        CHECK(flat.entries[i].pass == nerve2.entries[i].pass);

    // the comical square fails its own box
    CheckReport square = is_comical(comical_cube(2, 1, 0), 2);
    CHECK_FALSE(square.all_pass());
    bool box21_fails = false;
    for (const auto& e : square.entries)
        if (!e.pass && e.name.rfind("box(2,1,0", 0) == 0) box21_fails = true;
    CHECK(box21_fails);

    CheckReport nerve_report = is_comical(cubical_nerve(poset_category(3, {{0, 1}, {1, 2}}), 3), 3);
    for (const auto& e : nerve_report.entries) {
        INFO(e.name);
        CHECK(e.pass);
    }
}

TEST_CASE("duals re-index faces and preserve marking") {
    MarkedCubicalSet adm = comical_cube(3, 1, 0);
    for (Duality w : {Duality::co, Duality::coop, Duality::op}) {
        MarkedCubicalSet d = dual(adm, w);
        d.validate();
        CHECK(dual(d, w) == adm);
    }
    CHECK(find_isomorphism(dual(comical_cube(2, 1, 0), Duality::coop), comical_cube(2, 1, 1))
              .has_value());
    CHECK(find_isomorphism(dual(comical_cube(3, 1, 0), Duality::co), comical_cube(3, 3, 0))
              .has_value());
    CHECK(dual(standard_cube(0), Duality::co) == standard_cube(0));
    CHECK(dual(dual(rezk_map(RezkLeg::forward, RezkLeg::forward).src, Duality::op), Duality::op) ==
          rezk_map(RezkLeg::forward, RezkLeg::forward).src);

    // op-dual = co then coop on maps as well
    PresheafMap inc = comical_box_inclusion(2, 1, 0);
    PresheafMap two_step = dual(dual(inc, Duality::co), Duality::coop);
    CHECK(dual(inc, Duality::op) == two_step);
    dual(inc, Duality::op).validate();
}

TEST_CASE("isomorphism search distinguishes marking and shape") {
    CHECK(find_isomorphism(standard_cube(2), standard_cube(2)).has_value());
    CHECK_FALSE(find_isomorphism(standard_cube(2), boundary(2)).has_value());
    CHECK_FALSE(find_isomorphism(marked_cube(1), standard_cube(1)).has_value());
    auto iso = find_isomorphism(comical_cube(2, 1, 0), comical_cube(2, 1, 0));
    REQUIRE(iso.has_value());
    CHECK(iso->is_iso());
}

TEST_CASE("finite categories enforce the axioms") {
    FiniteCategory chain = poset_category(3, {{0, 1}, {1, 2}});
    chain.validate();
    CHECK(chain.object_count() == 3);
    CHECK(chain.arrow_count() == 6); // three identities + 01, 12, 02
    CHECK_FALSE(chain.is_invertible(chain.arrows_from_to(0, 1).front()));

    CHECK_THROWS_AS(poset_category(2, {{0, 1}, {1, 0}}), ParameterError);

    FiniteCategory partial;
    int a = partial.add_object("a");
    int b = partial.add_object("b");
    int cc = partial.add_object("c");
    int f = partial.add_arrow("f", a, b);
    int g = partial.add_arrow("g", b, cc);
    CHECK_THROWS_AS(partial.compose(g, f), IncompletenessError);
    CHECK_THROWS_AS(partial.validate(), IncompletenessError);
    CHECK_THROWS_AS(partial.compose(f, g), CompositionError);

    FiniteCategory iso_cat = free_iso();
    iso_cat.validate();
    for (int arr = 0; arr < iso_cat.arrow_count(); ++arr) CHECK(iso_cat.is_invertible(arr));

    FiniteCategory chain_relabeled = poset_category(3, {{1, 2}, {0, 1}, {0, 2}});
    CHECK(FiniteCategory::isomorphic(chain, chain_relabeled));
    CHECK_FALSE(FiniteCategory::isomorphic(chain, poset_category(3, {})));
    CHECK(FiniteCategory::isomorphic(chain.opposite().opposite(), chain));
    chain.opposite().validate();
}

TEST_CASE("cubical nerve EZ-normalizes functor cubes") {
    MarkedCubicalSet n2 = cubical_nerve(poset_category(2, {{0, 1}}), 2);
    n2.validate();
    CHECK(n2.count_of_dim(0) == 2);
    CHECK(n2.count_of_dim(1) == 1);
    CHECK(n2.count_of_dim(2) == 0);
    CHECK_FALSE(n2.is_marked(n2.cells_of_dim(1).front()));

    FiniteCategory iso_cat = free_iso();
    MarkedCubicalSet niso = cubical_nerve(iso_cat, 2);
    niso.validate();
    CHECK(niso.count_of_dim(1) == 2);
    for (CellId c : niso.cells_of_dim(1)) CHECK(niso.is_marked(c));
    CHECK(niso.count_of_dim(2) == thin_square_count(iso_cat));

    FiniteCategory chain = poset_category(3, {{0, 1}, {1, 2}});
    MarkedCubicalSet n3 = cubical_nerve(chain, 2);
    n3.validate();
    CHECK(n3.count_of_dim(1) == 3);
    CHECK(n3.count_of_dim(2) == thin_square_count(chain));
    for (CellId c : n3.cells_of_dim(2)) CHECK(n3.is_marked(c));
    for (CellId c : n3.cells_of_dim(1)) CHECK_FALSE(n3.is_marked(c));
}
