#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "comical/homotopy.hpp"

#include "comical/errors.hpp"

#include <string>
#include <vector>

using namespace comical;

namespace {

Cube nondeg(const MarkedCubicalSet& x, const std::string& name) {
    auto c = x.find(name);
    REQUIRE(c.has_value());
    return Cube{BoxOperator::identity(x.cell(*c).dim), *c};
}

Cube idedge(const MarkedCubicalSet& x, const std::string& vertex) {
    auto c = x.find(vertex);
    REQUIRE(c.has_value());
    return Cube{BoxOperator::degeneracy(1, 1), *c};
}

// The unique non-degenerate edge with the given endpoint names.
Cube edge_between(const MarkedCubicalSet& x, const std::string& from, const std::string& to) {
    std::vector<Cube> hits;
    for (CellId c : x.cells_of_dim(1))
        if (x.cell(x.face(c, 1, 0).cell).name == from && x.cell(x.face(c, 1, 1).cell).name == to)
            hits.push_back(Cube{BoxOperator::identity(1), c});
    REQUIRE(hits.size() == 1);
    return hits.front();
}

FiniteCategory free_iso() {
    FiniteCategory c;
    int x = c.add_object("x"), y = c.add_object("y");
    int f = c.add_arrow("f", x, y), g = c.add_arrow("g", y, x);
    c.set_composite(g, f, c.identity(x));
    c.set_composite(f, g, c.identity(y));
    return c;
}

FiniteCategory parallel_pair() {
    FiniteCategory c;
    int a = c.add_object("a"), b = c.add_object("b");
    c.add_arrow("u", a, b);
    c.add_arrow("v", a, b);
    return c;
}

// x --f,g,h--> y with marked squares witnessing f ~ g and g ~ h only.
MarkedCubicalSet chained_homotopies() {
    MarkedCubicalSet s;
    CellId x = s.add_cell("x", 0), y = s.add_cell("y", 0);
    const Cube vx{BoxOperator::identity(0), x}, vy{BoxOperator::identity(0), y};
    for (const char* n : {"f", "g", "h"}) {
        CellId e = s.add_cell(n, 1);
        s.set_face(e, 1, 0, vx);
        s.set_face(e, 1, 1, vy);
    }
    const Cube iy{BoxOperator::degeneracy(1, 1), y};
    const auto square = [&](const char* name, const char* left, const char* top) {
        CellId q = s.add_cell(name, 2, true);
        s.set_face(q, 1, 0, Cube{BoxOperator::identity(1), *s.find(left)});
        s.set_face(q, 1, 1, iy);
        s.set_face(q, 2, 0, Cube{BoxOperator::identity(1), *s.find(top)});
        s.set_face(q, 2, 1, iy);
    };
    square("q1", "g", "f");
    square("q2", "h", "g");
    s.validate();
    return s;
}

} // namespace

TEST_CASE("element enumeration walks cells under every down operator") {
    const MarkedCubicalSet interval = standard_cube(1);
    CHECK(elements_of_dim(interval, 0).size() == 2);
    CHECK(elements_of_dim(interval, 1).size() == 3);  // 01 and the two identities
    CHECK(elements_of_dim(interval, 2).size() == 6);  // 4 epis on 01, one collapse per vertex
    CHECK(all_down_operators(2, 1).size() == 4);
    CHECK_THROWS_AS(elements_of_dim(interval, -1), ParameterError);
}

TEST_CASE("degenerate squares realize exactly the expected patterns") {
    const MarkedCubicalSet interval = standard_cube(1);
    const Cube f = nondeg(interval, "*");

    const auto square_for = [&](HomotopyPattern kind) {
        auto s = pattern_square(interval, kind, f, f);
        REQUIRE(s.has_value());
        return *s;
    };
    // phi places f on the left and top: the max connection.  chi doubles f
    // horizontally: the first degeneracy.  psi doubles it vertically, and
    // omega puts f on the right and bottom: the min connection.
    CHECK(square_for(HomotopyPattern::phi) == Cube{BoxOperator::connection(2, 1, 1), f.cell});
    CHECK(square_for(HomotopyPattern::phi_prime) == Cube{BoxOperator::connection(2, 1, 1), f.cell});
    CHECK(square_for(HomotopyPattern::chi) == Cube{BoxOperator::degeneracy(2, 1), f.cell});
    CHECK(square_for(HomotopyPattern::chi_prime) == Cube{BoxOperator::degeneracy(2, 1), f.cell});
    CHECK(square_for(HomotopyPattern::psi) == Cube{BoxOperator::degeneracy(2, 2), f.cell});
    CHECK(square_for(HomotopyPattern::psi_prime) == Cube{BoxOperator::degeneracy(2, 2), f.cell});
    CHECK(square_for(HomotopyPattern::omega) == Cube{BoxOperator::connection(2, 1, 0), f.cell});
    CHECK(square_for(HomotopyPattern::omega_prime) == Cube{BoxOperator::connection(2, 1, 0), f.cell});

    auto w = are_homotopic(interval, f, f);
    REQUIRE(w.has_value());
    CHECK(w->kind == HomotopyPattern::phi);

    CHECK_THROWS_AS(are_homotopic(interval, f, idedge(interval, "0")), ParameterError);
    CHECK_THROWS_AS(
        pattern_square(interval, HomotopyPattern::phi, Cube{BoxOperator::identity(0), 0}, f),
        ParameterError);
}

TEST_CASE("witness-equivalence: the eight searches agree on nerve fixtures") {
    const std::vector<MarkedCubicalSet> fixtures = {
        cubical_nerve(poset_category(3, {{0, 1}, {1, 2}}), 2),
        cubical_nerve(poset_category(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), 2),
        cubical_nerve(free_iso(), 2),
        cubical_nerve(parallel_pair(), 2),
    };
    for (const MarkedCubicalSet& x : fixtures) {
        const std::vector<Cube> edges = elements_of_dim(x, 1);
        for (const Cube& f : edges)
            for (const Cube& g : edges) {
                if (x.act(f, BoxOperator::face(1, 1, 0)) != x.act(g, BoxOperator::face(1, 1, 0)))
                    continue;
                if (x.act(f, BoxOperator::face(1, 1, 1)) != x.act(g, BoxOperator::face(1, 1, 1)))
                    continue;
                int hits = 0;
                for (HomotopyPattern kind : kAllPatterns)
                    hits += pattern_square(x, kind, f, g).has_value() ? 1 : 0;
                // in a nerve of a 1-category, homotopic means equal
                CHECK(hits == (f == g ? 8 : 0));
            }
    }
}

TEST_CASE("composites in a chain nerve: all four kinds, one result") {
    const MarkedCubicalSet n = cubical_nerve(poset_category(3, {{0, 1}, {1, 2}}), 2);
    const Cube f = edge_between(n, "0", "1");
    const Cube g = edge_between(n, "1", "2");
    const Cube h = edge_between(n, "0", "2");

    const std::vector<CompositeWitness> ws = composites(n, f, g);
    REQUIRE(ws.size() == 4);
    bool seen[2][2] = {};
    for (const CompositeWitness& w : ws) {
        CHECK(w.result == h);
        CHECK(!seen[w.k - 1][w.e]);
        seen[w.k - 1][w.e] = true;
    }

    // identities compose via degenerate squares
    bool id_then_f = false;
    for (const CompositeWitness& w : composites(n, idedge(n, "0"), f)) id_then_f |= w.result == f;
    CHECK(id_then_f);
    bool f_then_id = false;
    for (const CompositeWitness& w : composites(n, f, idedge(n, "1"))) f_then_id |= w.result == f;
    CHECK(f_then_id);

    CHECK_THROWS_AS(composites(n, g, f), ParameterError); // endpoints do not chain

    // no squares at all: nothing to find
    const MarkedCubicalSet flat = cubical_nerve(poset_category(3, {{0, 1}, {1, 2}}), 1);
    CHECK(composites(flat, edge_between(flat, "0", "1"), edge_between(flat, "1", "2")).empty());
}

TEST_CASE("ho1 recovers the category from its nerve") {
    CHECK(ho1(standard_cube(0)).object_count() == 1);
    CHECK(ho1(standard_cube(0)).arrow_count() == 1);

    const std::vector<FiniteCategory> cats = {
        poset_category(4, {{0, 1}, {1, 2}, {2, 3}}),
        poset_category(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}),
        free_iso(),
        parallel_pair(),
    };
    for (const FiniteCategory& c : cats)
        CHECK(FiniteCategory::isomorphic(ho1(cubical_nerve(c, 2)), c));

    // and through a nerve that also carries 3-dimensional cells
    const FiniteCategory chain = poset_category(3, {{0, 1}, {1, 2}});
    CHECK(FiniteCategory::isomorphic(ho1(cubical_nerve(chain, 3)), chain));
}

TEST_CASE("ho1 of an op-dual is the opposite category") {
    const std::vector<FiniteCategory> cats = {
        poset_category(3, {{0, 1}, {1, 2}}),
        poset_category(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}),
        free_iso(),
    };
    for (const FiniteCategory& c : cats) {
        const MarkedCubicalSet n = cubical_nerve(c, 2);
        CHECK(FiniteCategory::isomorphic(ho1(dual(n, Duality::op)), ho1(n).opposite()));
    }
}

TEST_CASE("ho1 reports what is missing instead of guessing") {
    // edges that should compose but have no filling square
    const MarkedCubicalSet flat = cubical_nerve(poset_category(3, {{0, 1}, {1, 2}}), 1);
    CHECK_THROWS_AS(ho1(flat), IncompletenessError);

    // f ~ g ~ h with no direct witness f ~ h
    CHECK_THROWS_AS(ho1(chained_homotopies()), IncompletenessError);

    // two composite witnesses landing in different classes
    MarkedCubicalSet s;
    CellId x = s.add_cell("x", 0), y = s.add_cell("y", 0), z = s.add_cell("z", 0);
    const Cube vx{BoxOperator::identity(0), x}, vy{BoxOperator::identity(0), y},
        vz{BoxOperator::identity(0), z};
    const auto edge = [&](const char* n, const Cube& a, const Cube& b) {
        CellId e = s.add_cell(n, 1);
        s.set_face(e, 1, 0, a);
        s.set_face(e, 1, 1, b);
        return Cube{BoxOperator::identity(1), e};
    };
    const Cube f = edge("f", vx, vy), g = edge("g", vy, vz);
    const Cube h1 = edge("h1", vx, vz), h2 = edge("h2", vx, vz);
    const Cube iz{BoxOperator::degeneracy(1, 1), z};
    for (const auto& [name, left] : {std::pair{"w1", h1}, std::pair{"w2", h2}}) {
        CellId q = s.add_cell(name, 2, true);
        s.set_face(q, 1, 0, left);
        s.set_face(q, 1, 1, g);
        s.set_face(q, 2, 0, f);
        s.set_face(q, 2, 1, iz);
    }
    s.validate();
    CHECK(composites(s, f, g).size() == 2);
    CHECK_THROWS_AS(ho1(s), IncompletenessError);
}

TEST_CASE("a non-nerve fixture with a genuine homotopy collapses in ho1") {
    MarkedCubicalSet s = chained_homotopies();
    // add the missing direct witness f ~ h, making the relation transitive
    CellId q = s.add_cell("q3", 2, true);
    s.set_face(q, 1, 0, Cube{BoxOperator::identity(1), *s.find("h")});
    s.set_face(q, 1, 1, Cube{BoxOperator::degeneracy(1, 1), *s.find("y")});
    s.set_face(q, 2, 0, Cube{BoxOperator::identity(1), *s.find("f")});
    s.set_face(q, 2, 1, Cube{BoxOperator::degeneracy(1, 1), *s.find("y")});
    s.validate();

    const Cube f = nondeg(s, "f"), g = nondeg(s, "g"), h = nondeg(s, "h");
    auto w = are_homotopic(s, f, g);
    REQUIRE(w.has_value());
    CHECK(w->kind == HomotopyPattern::phi);
    CHECK(are_homotopic(s, f, h).has_value());
    CHECK(are_homotopic(s, g, h).has_value());

    const FiniteCategory c = ho1(s);
    CHECK(c.object_count() == 2);
    CHECK(c.arrow_count() == 3); // two identities and the single class f ~ g ~ h
}
