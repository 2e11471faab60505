#include "comical/cubeset.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace comical {

// --- mask-presented cubes ---
//
// Cells of the standard n-cube are {0,1,*}-masks: stars are free coordinates,
// pinned positions cut the corresponding face.  The (i,e)-face of a mask pins
// its i-th star to e; all face downs are identities.

namespace {

int mask_dim(const std::string& m) { return static_cast<int>(std::count(m.begin(), m.end(), '*')); }

std::string pin_star(const std::string& m, int i, int e) {
    std::string out = m;
    int seen = 0;
    for (char& c : out)
        if (c == '*' && ++seen == i) {
            c = char('0' + e);
            return out;
        }
    throw ParameterError("pin_star: mask '" + m + "' has no " + std::to_string(i) + "-th star");
}

std::string mask_name(const std::string& m) { return m.empty() ? "pt" : m; }

// All masks of length n, dimension-ascending, lexicographic ('0'<'1'<'*')
// within each dimension.
std::vector<std::string> all_masks(int n) {
    std::vector<std::string> out{""};
    for (int p = 0; p < n; ++p) {
        std::vector<std::string> next;
        for (const std::string& m : out)
            for (char c : {'0', '1', '*'}) next.push_back(m + c);
        out = std::move(next);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const std::string& a, const std::string& b) { return mask_dim(a) < mask_dim(b); });
    return out;
}

// The pin set of a mask: (position, value) per non-star coordinate, where
// position counts 1-based coordinates of the ambient cube.
std::vector<std::pair<int, int>> pins(const std::string& m) {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < static_cast<int>(m.size()); ++p)
        if (m[size_t(p)] != '*') out.emplace_back(p + 1, m[size_t(p)] - '0');
    return out;
}

MarkedCubicalSet build_mask_object(int n, const std::function<bool(const std::string&)>& keep,
                                   const std::function<bool(const std::string&)>& marked) {
    if (n < 0) throw ParameterError("cube dimension must be non-negative");
    MarkedCubicalSet x;
    std::vector<std::string> masks;
    for (const std::string& m : all_masks(n))
        if (keep(m)) masks.push_back(m);
    for (const std::string& m : masks) x.add_cell(mask_name(m), mask_dim(m), marked(m));
    for (const std::string& m : masks) {
        CellId c = *x.find(mask_name(m));
        for (int i = 1; i <= mask_dim(m); ++i)
            for (int e = 0; e <= 1; ++e) {
                auto f = x.find(mask_name(pin_star(m, i, e)));
                if (!f) throw IntegrityError("mask object: cell set not face-closed at '" + m + "'");
                x.set_face(c, i, e, Cube{BoxOperator::identity(mask_dim(m) - 1), *f});
            }
    }
    return x;
}

void require_box_params(int n, int k, int e) {
    if (n < 1 || k < 1 || k > n || (e != 0 && e != 1))
        throw ParameterError("box parameters (" + std::to_string(n) + "," + std::to_string(k) + "," +
                             std::to_string(e) + ") out of range");
}

// Comical marking: a positive-dimensional mask is marked unless it pins one
// of (k-1,e), (k,e), (k,1-e), (k+1,e).
bool comical_marked(const std::string& m, int k, int e) {
    if (mask_dim(m) == 0) return false;
    for (auto [p, v] : pins(m))
        if ((p == k - 1 && v == e) || (p == k && v == e) || (p == k && v == 1 - e) ||
            (p == k + 1 && v == e))
            return false;
    return true;
}

PresheafMap inclusion_by_name(const MarkedCubicalSet& sub, const MarkedCubicalSet& super) {
    PresheafMap f;
    f.src = sub;
    f.tgt = super;
    for (CellId c = 0; c < sub.cell_count(); ++c) {
        auto t = super.find(sub.cell(c).name);
        if (!t) throw IntegrityError("inclusion: no cell named '" + sub.cell(c).name + "'");
        f.assign.push_back(Cube{BoxOperator::identity(sub.cell(c).dim), *t});
    }
    return f;
}

} // namespace

MarkedCubicalSet standard_cube(int n) {
    return build_mask_object(
        n, [](const std::string&) { return true; }, [](const std::string&) { return false; });
}

MarkedCubicalSet boundary(int n) {
    // n = 0 is allowed: the point has empty boundary.
    return build_mask_object(
        n, [n](const std::string& m) { return mask_dim(m) < n; },
        [](const std::string&) { return false; });
}

MarkedCubicalSet open_box(int n, int k, int e) {
    require_box_params(n, k, e);
    // drop the top cell and the single mask pinned exactly at (k,e)
    return build_mask_object(
        n,
        [&](const std::string& m) {
            auto ps = pins(m);
            if (ps.empty()) return false;
            return !(ps.size() == 1 && ps[0] == std::make_pair(k, e));
        },
        [](const std::string&) { return false; });
}

MarkedCubicalSet marked_cube(int n) {
    if (n < 1) throw ParameterError("marked_cube: dimension must be positive");
    return build_mask_object(
        n, [](const std::string&) { return true; },
        [n](const std::string& m) { return mask_dim(m) == n; });
}

MarkedCubicalSet comical_cube(int n, int k, int e) {
    require_box_params(n, k, e);
    return build_mask_object(
        n, [](const std::string&) { return true; },
        [&](const std::string& m) { return comical_marked(m, k, e); });
}

MarkedCubicalSet comical_open_box(int n, int k, int e) {
    require_box_params(n, k, e);
    return build_mask_object(
        n,
        [&](const std::string& m) {
            auto ps = pins(m);
            if (ps.empty()) return false;
            return !(ps.size() == 1 && ps[0] == std::make_pair(k, e));
        },
        [&](const std::string& m) { return comical_marked(m, k, e); });
}

PresheafMap boundary_inclusion(int n) { return inclusion_by_name(boundary(n), standard_cube(n)); }

PresheafMap open_box_inclusion(int n, int k, int e) {
    return inclusion_by_name(open_box(n, k, e), standard_cube(n));
}

PresheafMap comical_box_inclusion(int n, int k, int e) {
    return inclusion_by_name(comical_open_box(n, k, e), comical_cube(n, k, e));
}

PresheafMap marking_extension_pair(int n, int k, int e) {
    require_box_params(n, k, e);
    // Source: comical marking plus every (n-1)-face other than (k,e); target
    // additionally marks the (k,e)-face.  (For n = 1 the faces are vertices
    // and both objects are the comical interval.)
    auto lower = [&](const std::string& m) {
        if (comical_marked(m, k, e)) return true;
        auto ps = pins(m);
        return n >= 2 && ps.size() == 1 && ps[0] != std::make_pair(k, e);
    };
    auto upper = [&](const std::string& m) {
        return comical_marked(m, k, e) || (n >= 2 && pins(m).size() == 1);
    };
    MarkedCubicalSet src =
        build_mask_object(n, [](const std::string&) { return true; }, lower);
    MarkedCubicalSet tgt =
        build_mask_object(n, [](const std::string&) { return true; }, upper);
    PresheafMap f = inclusion_by_name(src, tgt);
    return f;
}

namespace {

// A marked square with the given extra marked edges, glued along glue_mask.
PresheafMap interval_into_square(const std::vector<std::string>& marked_edges,
                                 const std::string& glue_mask) {
    MarkedCubicalSet sq = build_mask_object(
        2, [](const std::string&) { return true; },
        [&](const std::string& m) {
            return mask_dim(m) == 2 ||
                   std::find(marked_edges.begin(), marked_edges.end(), m) != marked_edges.end();
        });
    PresheafMap f;
    f.src = standard_cube(1);
    f.tgt = sq;
    for (CellId c = 0; c < f.src.cell_count(); ++c) {
        const std::string& m = f.src.cell(c).name;
        std::string image = m == "*" ? glue_mask : pin_star(glue_mask, 1, m[0] - '0');
        f.assign.push_back(Cube{BoxOperator::identity(f.src.cell(c).dim), *sq.find(image)});
    }
    return f;
}

} // namespace

PresheafMap rezk_map(RezkLeg x, RezkLeg y) {
    // Each leg is a marked square exhibiting a one-sided inverse of the shared
    // middle edge; the backward orientation is the transposed square.
    PresheafMap f = x == RezkLeg::forward ? interval_into_square({"0*", "*1"}, "1*")
                                          : interval_into_square({"*0", "1*"}, "*1");
    PresheafMap g = y == RezkLeg::forward ? interval_into_square({"1*", "*0"}, "0*")
                                          : interval_into_square({"*1", "0*"}, "*0");
    PushoutResult po = pushout(f, g);
    PresheafMap out;
    out.src = po.object;
    out.tgt = truncate(po.object, 0);
    for (CellId c = 0; c < out.src.cell_count(); ++c)
        out.assign.push_back(Cube{BoxOperator::identity(out.src.cell(c).dim), c});
    return out;
}

// --- finite categories ---

int FiniteCategory::add_object(const std::string& name) {
    for (const std::string& o : objects_)
        if (o == name) throw ParameterError("add_object: duplicate object '" + name + "'");
    int o = static_cast<int>(objects_.size());
    objects_.push_back(name);
    arrows_.push_back(Arrow{"1_" + name, o, o});
    ids_.push_back(static_cast<int>(arrows_.size()) - 1);
    return o;
}

int FiniteCategory::add_arrow(const std::string& name, int src, int tgt) {
    if (src < 0 || src >= object_count() || tgt < 0 || tgt >= object_count())
        throw ParameterError("add_arrow: endpoints of '" + name + "' out of range");
    for (const Arrow& a : arrows_)
        if (a.name == name) throw ParameterError("add_arrow: duplicate arrow '" + name + "'");
    arrows_.push_back(Arrow{name, src, tgt});
    return static_cast<int>(arrows_.size()) - 1;
}

void FiniteCategory::set_composite(int g, int f, int gf) {
    const Arrow &af = arrow(f), &ag = arrow(g), &agf = arrow(gf);
    if (af.tgt != ag.src) throw CompositionError("set_composite: " + ag.name + " after " + af.name);
    if (agf.src != af.src || agf.tgt != ag.tgt)
        throw ParameterError("set_composite: endpoints of '" + agf.name + "' do not match");
    if (is_identity(f) || is_identity(g)) {
        int forced = is_identity(f) ? g : f;
        if (gf != forced)
            throw ParameterError("set_composite: unit law forces a different composite");
        return;
    }
    auto [it, fresh] = comp_.emplace(std::make_pair(g, f), gf);
    if (!fresh && it->second != gf)
        throw ParameterError("set_composite: conflicting composite for " + ag.name + " after " +
                             af.name);
}

bool FiniteCategory::is_identity(int a) const { return identity(arrow(a).src) == a; }

int FiniteCategory::compose(int g, int f) const {
    const Arrow &af = arrow(f), &ag = arrow(g);
    if (af.tgt != ag.src)
        throw CompositionError("compose: " + ag.name + " after " + af.name + " is not composable");
    if (is_identity(f)) return g;
    if (is_identity(g)) return f;
    auto it = comp_.find(std::make_pair(g, f));
    if (it == comp_.end())
        throw IncompletenessError("no composite defined for " + ag.name + " after " + af.name);
    return it->second;
}

std::vector<int> FiniteCategory::arrows_from_to(int s, int t) const {
    std::vector<int> out;
    for (int a = 0; a < arrow_count(); ++a)
        if (arrows_[size_t(a)].src == s && arrows_[size_t(a)].tgt == t) out.push_back(a);
    return out;
}

bool FiniteCategory::is_invertible(int a) const {
    const Arrow& f = arrow(a);
    for (int g : arrows_from_to(f.tgt, f.src))
        if (compose(g, a) == identity(f.src) && compose(a, g) == identity(f.tgt)) return true;
    return false;
}

void FiniteCategory::validate() const {
    for (const auto& [key, gf] : comp_) {
        const Arrow &af = arrow(key.second), &ag = arrow(key.first), &agf = arrow(gf);
        if (af.tgt != ag.src || agf.src != af.src || agf.tgt != ag.tgt)
            throw IntegrityError("validate: stored composite " + agf.name + " is malformed");
    }
    for (int f = 0; f < arrow_count(); ++f)
        for (int g = 0; g < arrow_count(); ++g) {
            if (arrow(f).tgt != arrow(g).src) continue;
            int gf = compose(g, f); // IncompletenessError if missing
            for (int h = 0; h < arrow_count(); ++h) {
                if (arrow(g).tgt != arrow(h).src) continue;
                if (compose(h, gf) != compose(compose(h, g), f))
                    throw IntegrityError("validate: associativity fails at " + arrow(h).name +
                                         ", " + arrow(g).name + ", " + arrow(f).name);
            }
        }
}

FiniteCategory FiniteCategory::opposite() const {
    FiniteCategory d;
    d.objects_ = objects_;
    d.ids_ = ids_;
    d.arrows_ = arrows_;
    for (Arrow& a : d.arrows_) std::swap(a.src, a.tgt);
    for (const auto& [key, gf] : comp_) d.comp_[std::make_pair(key.second, key.first)] = gf;
    return d;
}

bool FiniteCategory::isomorphic(const FiniteCategory& c, const FiniteCategory& d) {
    if (c.object_count() != d.object_count() || c.arrow_count() != d.arrow_count()) return false;
    int n = c.object_count();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[size_t(i)] = i;

    auto try_arrows = [&](const std::vector<int>& obj_map) -> bool {
        std::vector<int> amap(size_t(c.arrow_count()), -1);
        std::vector<bool> used(size_t(d.arrow_count()), false);
        for (int o = 0; o < n; ++o) {
            amap[size_t(c.identity(o))] = d.identity(obj_map[size_t(o)]);
            used[size_t(d.identity(obj_map[size_t(o)]))] = true;
        }
        std::function<bool(int)> place = [&](int a) -> bool {
            while (a < c.arrow_count() && amap[size_t(a)] >= 0) ++a;
            if (a == c.arrow_count()) {
                for (int f = 0; f < c.arrow_count(); ++f)
                    for (int g = 0; g < c.arrow_count(); ++g) {
                        if (c.arrow(f).tgt != c.arrow(g).src) continue;
                        if (amap[size_t(c.compose(g, f))] !=
                            d.compose(amap[size_t(g)], amap[size_t(f)]))
                            return false;
                    }
                return true;
            }
            int s = obj_map[size_t(c.arrow(a).src)], t = obj_map[size_t(c.arrow(a).tgt)];
            for (int b : d.arrows_from_to(s, t)) {
                if (used[size_t(b)] || d.is_identity(b)) continue;
                amap[size_t(a)] = b;
                used[size_t(b)] = true;
                if (place(a + 1)) return true;
                amap[size_t(a)] = -1;
                used[size_t(b)] = false;
            }
            return false;
        };
        return place(0);
    };

    std::sort(perm.begin(), perm.end());
    do {
        if (try_arrows(perm)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

FiniteCategory poset_category(int n_objects, const std::vector<std::pair<int, int>>& relations) {
    if (n_objects < 0) throw ParameterError("poset_category: negative object count");
    std::vector<std::vector<bool>> leq(static_cast<size_t>(n_objects),
                                       std::vector<bool>(static_cast<size_t>(n_objects)));
    for (int i = 0; i < n_objects; ++i) leq[size_t(i)][size_t(i)] = true;
    for (auto [i, j] : relations) {
        if (i < 0 || i >= n_objects || j < 0 || j >= n_objects)
            throw ParameterError("poset_category: relation out of range");
        leq[size_t(i)][size_t(j)] = true;
    }
    for (int k = 0; k < n_objects; ++k)
        for (int i = 0; i < n_objects; ++i)
            for (int j = 0; j < n_objects; ++j)
                if (leq[size_t(i)][size_t(k)] && leq[size_t(k)][size_t(j)])
                    leq[size_t(i)][size_t(j)] = true;
    for (int i = 0; i < n_objects; ++i)
        for (int j = 0; j < n_objects; ++j)
            if (i != j && leq[size_t(i)][size_t(j)] && leq[size_t(j)][size_t(i)])
                throw ParameterError("poset_category: relations are not antisymmetric");

    FiniteCategory c;
    for (int i = 0; i < n_objects; ++i) c.add_object(std::to_string(i));
    std::map<std::pair<int, int>, int> ar;
    for (int i = 0; i < n_objects; ++i)
        for (int j = 0; j < n_objects; ++j)
            if (i != j && leq[size_t(i)][size_t(j)])
                ar[{i, j}] = c.add_arrow(std::to_string(i) + "->" + std::to_string(j), i, j);
    for (int i = 0; i < n_objects; ++i)
        for (int j = 0; j < n_objects; ++j)
            for (int k = 0; k < n_objects; ++k)
                if (i != j && j != k && leq[size_t(i)][size_t(j)] && leq[size_t(j)][size_t(k)])
                    c.set_composite(ar[{j, k}], ar[{i, j}], ar[{i, k}]);
    return c;
}

// --- the cubical nerve ---

namespace {

// A functor [1]^n -> C: objects per vertex (vertex id has coordinate 1 as its
// most significant bit) and arrows per covering edge, stored at slot
// (i-1)*2^n + v for the edge raising coordinate i of vertex v.
struct FunCube {
    int dim = 0;
    std::vector<int> obj;
    std::vector<int> edge;

    bool operator==(const FunCube&) const = default;
};

int coord_bit(int n, int i) { return 1 << (n - i); }

Vertex vertex_coords(int v, int n) {
    Vertex out;
    out.coords.assign(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) out.coords[size_t(i - 1)] = (v & coord_bit(n, i)) ? 1 : 0;
    return out;
}

int vertex_id(const Vertex& vx) {
    int v = 0;
    for (int b : vx.coords) v = 2 * v + b;
    return v;
}

int edge_slot(int n, int v, int i) { return (i - 1) * (1 << n) + v; }

FunCube apply_op(const FunCube& f, const BoxOperator& op, const FiniteCategory& cat) {
    if (op.tgt_dim() != f.dim) throw ArityError("nerve action: dimension mismatch");
    int m = op.src_dim();
    FunCube g;
    g.dim = m;
    g.obj.assign(size_t(1) << m, -1);
    g.edge.assign(size_t(m) * (size_t(1) << m), -1);
    std::vector<int> image(size_t(1) << m);
    for (int v = 0; v < (1 << m); ++v) {
        image[size_t(v)] = vertex_id(op.evaluate(vertex_coords(v, m)));
        g.obj[size_t(v)] = f.obj[size_t(image[size_t(v)])];
    }
    for (int i = 1; i <= m; ++i)
        for (int v = 0; v < (1 << m); ++v) {
            if (v & coord_bit(m, i)) continue;
            int w0 = image[size_t(v)], w1 = image[size_t(v | coord_bit(m, i))];
            if (w0 == w1) {
                g.edge[size_t(edge_slot(m, v, i))] = cat.identity(f.obj[size_t(w0)]);
            } else {
                int raised = w0 ^ w1; // exactly one target coordinate moves
                int j = f.dim - static_cast<int>(std::countr_zero(unsigned(raised)));
                g.edge[size_t(edge_slot(m, v, i))] = f.edge[size_t(edge_slot(f.dim, w0, j))];
            }
        }
    return g;
}

// EZ decomposition of a functor cube: peel degeneracies and connections until
// the core is non-degenerate.
std::pair<BoxOperator, FunCube> ez_core(FunCube f, const FiniteCategory& cat) {
    BoxOperator down = BoxOperator::identity(f.dim);
    bool reduced = true;
    while (reduced) {
        reduced = false;
        std::vector<BoxOperator> gens;
        for (int i = 1; i <= f.dim; ++i) gens.push_back(BoxOperator::degeneracy(f.dim, i));
        for (int i = 1; i + 1 <= f.dim; ++i)
            for (int e = 0; e <= 1; ++e) gens.push_back(BoxOperator::connection(f.dim, i, e));
        for (const BoxOperator& g : gens) {
            FunCube cand = apply_op(f, g.section(), cat);
            if (apply_op(cand, g, cat) == f) {
                down = compose(g, down);
                f = std::move(cand);
                reduced = true;
                break;
            }
        }
    }
    return {down, f};
}

std::string fun_cube_key(const FunCube& f) {
    std::ostringstream os;
    os << f.dim << ':';
    for (int o : f.obj) os << o << ',';
    os << ';';
    for (int e : f.edge) os << e << ',';
    return os.str();
}

std::string fun_cube_name(const FunCube& f, const FiniteCategory& cat) {
    if (f.dim == 0) return cat.object_name(f.obj[0]);
    std::ostringstream os;
    os << '[';
    for (size_t v = 0; v < f.obj.size(); ++v)
        os << (v ? "," : "") << cat.object_name(f.obj[v]);
    os << ';';
    bool first = true;
    for (int i = 1; i <= f.dim; ++i)
        for (int v = 0; v < (1 << f.dim); ++v) {
            if (v & coord_bit(f.dim, i)) continue;
            os << (first ? "" : ",") << cat.arrow(f.edge[size_t(edge_slot(f.dim, v, i))]).name;
            first = false;
        }
    os << ']';
    return os.str();
}

} // namespace

MarkedCubicalSet cubical_nerve(const FiniteCategory& cat, int max_dim) {
    if (max_dim < 0) throw ParameterError("cubical_nerve: negative dimension bound");
    cat.validate();

    // all functor cubes per dimension, degenerate ones included
    std::vector<std::vector<FunCube>> layer(size_t(max_dim) + 1);
    for (int o = 0; o < cat.object_count(); ++o) {
        FunCube f;
        f.dim = 0;
        f.obj = {o};
        layer[0].push_back(f);
    }
    for (int n = 1; n <= max_dim; ++n) {
        int half = 1 << (n - 1);
        for (const FunCube& a : layer[size_t(n - 1)])
            for (const FunCube& b : layer[size_t(n - 1)]) {
                // choose a transformation a -> b, one arrow per vertex, such
                // that every mixed square commutes
                std::vector<int> h(size_t(half), -1);
                std::function<void(int)> extend = [&](int v) {
                    if (v == half) {
                        FunCube f;
                        f.dim = n;
                        f.obj.assign(size_t(2) * size_t(half), -1);
                        f.edge.assign(size_t(n) * 2 * size_t(half), -1);
                        for (int u = 0; u < half; ++u) {
                            f.obj[size_t(2 * u)] = a.obj[size_t(u)];
                            f.obj[size_t(2 * u + 1)] = b.obj[size_t(u)];
                        }
                        for (int i = 1; i < n; ++i)
                            for (int u = 0; u < half; ++u) {
                                if (u & coord_bit(n - 1, i)) continue;
                                f.edge[size_t(edge_slot(n, 2 * u, i))] =
                                    a.edge[size_t(edge_slot(n - 1, u, i))];
                                f.edge[size_t(edge_slot(n, 2 * u + 1, i))] =
                                    b.edge[size_t(edge_slot(n - 1, u, i))];
                            }
                        for (int u = 0; u < half; ++u)
                            f.edge[size_t(edge_slot(n, 2 * u, n))] = h[size_t(u)];
                        layer[size_t(n)].push_back(std::move(f));
                        return;
                    }
                    for (int arr : cat.arrows_from_to(a.obj[size_t(v)], b.obj[size_t(v)])) {
                        bool ok = true;
                        for (int i = 1; i < n && ok; ++i) {
                            if (v & coord_bit(n - 1, i)) continue;
                            int w = v | coord_bit(n - 1, i);
                            if (h[size_t(w)] < 0) continue;
                            int ae = a.edge[size_t(edge_slot(n - 1, v, i))];
                            int be = b.edge[size_t(edge_slot(n - 1, v, i))];
                            ok = cat.compose(h[size_t(w)], ae) == cat.compose(be, arr);
                        }
                        for (int i = 1; i < n && ok; ++i) {
                            if (!(v & coord_bit(n - 1, i))) continue;
                            int w = v & ~coord_bit(n - 1, i);
                            if (h[size_t(w)] < 0) continue;
                            int ae = a.edge[size_t(edge_slot(n - 1, w, i))];
                            int be = b.edge[size_t(edge_slot(n - 1, w, i))];
                            ok = cat.compose(arr, ae) == cat.compose(be, h[size_t(w)]);
                        }
                        if (!ok) continue;
                        h[size_t(v)] = arr;
                        extend(v + 1);
                        h[size_t(v)] = -1;
                    }
                };
                extend(0);
            }
    }

    MarkedCubicalSet nerve;
    std::map<std::string, CellId> by_key;
    std::vector<std::vector<const FunCube*>> nondeg(size_t(max_dim) + 1);
    for (int n = 0; n <= max_dim; ++n)
        for (const FunCube& f : layer[size_t(n)]) {
            auto [down, core] = ez_core(f, cat);
            if (!down.is_identity()) continue;
            bool marked = n >= 2 || (n == 1 && cat.is_invertible(f.edge[0]));
            by_key[fun_cube_key(f)] = nerve.add_cell(fun_cube_name(f, cat), n, marked);
            nondeg[size_t(n)].push_back(&f);
        }
    for (int n = 1; n <= max_dim; ++n)
        for (const FunCube* f : nondeg[size_t(n)]) {
            CellId c = by_key.at(fun_cube_key(*f));
            for (int i = 1; i <= n; ++i)
                for (int e = 0; e <= 1; ++e) {
                    auto [down, core] = ez_core(apply_op(*f, BoxOperator::face(n, i, e), cat), cat);
                    nerve.set_face(c, i, e, Cube{down, by_key.at(fun_cube_key(core))});
                }
        }
    return nerve;
}

} // namespace comical
