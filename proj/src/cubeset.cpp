#include "comical/cubeset.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace comical {

CellId MarkedCubicalSet::add_cell(const std::string& name, int dim, bool marked) {
    if (dim < 0) throw ParameterError("add_cell: negative dimension");
    if (marked && dim == 0) throw ParameterError("add_cell: 0-cube '" + name + "' cannot be marked");
    if (index_.count(name)) throw ParameterError("add_cell: duplicate cell name '" + name + "'");
    CellId id = static_cast<CellId>(cells_.size());
    CellData c;
    c.name = name;
    c.dim = dim;
    c.marked = marked;
    c.faces.assign(size_t(2 * dim), Cube{});
    cells_.push_back(std::move(c));
    index_[name] = id;
    return id;
}

void MarkedCubicalSet::set_face(CellId x, int i, int e, Cube value) {
    CellData& c = cells_.at(size_t(x));
    if (i < 1 || i > c.dim || (e != 0 && e != 1))
        throw ParameterError("set_face: (" + std::to_string(i) + "," + std::to_string(e) +
                             ") out of range for cell '" + c.name + "'");
    c.faces[size_t(2 * (i - 1) + e)] = std::move(value);
}

void MarkedCubicalSet::set_marked(CellId x, bool marked) {
    CellData& c = cells_.at(size_t(x));
    if (marked && c.dim == 0)
        throw ParameterError("set_marked: 0-cube '" + c.name + "' cannot be marked");
    c.marked = marked;
}

int MarkedCubicalSet::top_dim() const {
    int d = 0;
    for (const CellData& c : cells_) d = std::max(d, c.dim);
    return d;
}

std::optional<CellId> MarkedCubicalSet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<CellId> MarkedCubicalSet::cells_of_dim(int n) const {
    std::vector<CellId> out;
    for (CellId x = 0; x < cell_count(); ++x)
        if (cells_[size_t(x)].dim == n) out.push_back(x);
    return out;
}

int MarkedCubicalSet::count_of_dim(int n) const {
    return static_cast<int>(cells_of_dim(n).size());
}

Cube MarkedCubicalSet::face(CellId x, int i, int e) const {
    const CellData& c = cell(x);
    if (i < 1 || i > c.dim || (e != 0 && e != 1))
        throw ParameterError("face: (" + std::to_string(i) + "," + std::to_string(e) +
                             ") out of range for cell '" + c.name + "'");
    const Cube& f = c.faces[size_t(2 * (i - 1) + e)];
    if (f.cell < 0)
        throw IntegrityError("face: cell '" + c.name + "' has no (" + std::to_string(i) + "," +
                             std::to_string(e) + ") entry");
    return f;
}

Cube MarkedCubicalSet::act(CellId x, const BoxOperator& op) const {
    if (op.tgt_dim() != cell(x).dim)
        throw ArityError("act: operator targets dimension " + std::to_string(op.tgt_dim()) +
                         " but cell '" + cell(x).name + "' has dimension " +
                         std::to_string(cell(x).dim));
    if (op.in_down()) return Cube{op, x};
    // peel the outermost face (the first letter of the normal form): with
    // op = d(k,e).rest we have x.op = (x.d(k,e)).rest, and the face table
    // gives x.d(k,e) = x0.down
    const BoxOperator::Face f = op.faces().front();
    BoxOperator rest;
    // rest = op without its leading face letter: absorbing the remaining
    // (still normal) word into an identity reproduces it
    {
        BoxOperator tail = BoxOperator::identity(op.tgt_dim() - 1);
        const auto& fs = op.faces();
        for (size_t q = 1; q < fs.size(); ++q) tail.absorb_face(fs[q].index, fs[q].sign);
        for (const auto& cte : op.conns()) tail.absorb_connection(cte.index, cte.sign);
        for (int d : op.degens()) tail.absorb_degeneracy(d);
        rest = tail;
    }
    Cube via = face(x, f.index, f.sign);
    return act(via.cell, compose(via.down, rest));
}

Cube MarkedCubicalSet::act(const Cube& c, const BoxOperator& op) const {
    return act(c.cell, compose(c.down, op));
}

void MarkedCubicalSet::validate() const {
    for (CellId x = 0; x < cell_count(); ++x) {
        const CellData& c = cells_[size_t(x)];
        if (c.marked && c.dim == 0)
            throw IntegrityError("validate: marked 0-cube '" + c.name + "'");
        for (int i = 1; i <= c.dim; ++i)
            for (int e = 0; e <= 1; ++e) {
                Cube f = face(x, i, e);
                if (f.cell < 0 || f.cell >= cell_count())
                    throw IntegrityError("validate: dangling face of '" + c.name + "'");
                if (!f.down.in_down())
                    throw IntegrityError("validate: face of '" + c.name + "' not EZ-normalized");
                if (f.down.src_dim() != c.dim - 1 || f.down.tgt_dim() != cell(f.cell).dim)
                    throw IntegrityError("validate: face of '" + c.name + "' has wrong dimensions");
            }
        // action coherence on all length-2 face words
        for (int i = 1; i <= c.dim; ++i)
            for (int e = 0; e <= 1; ++e)
                for (int j = 1; j <= c.dim - 1; ++j)
                    for (int h = 0; h <= 1; ++h) {
                        BoxOperator w =
                            compose(BoxOperator::face(c.dim, i, e), BoxOperator::face(c.dim - 1, j, h));
                        Cube via = face(x, i, e);
                        Cube route1 = act(via.cell, compose(via.down, BoxOperator::face(c.dim - 1, j, h)));
                        Cube route2 = act(x, w);
                        if (!(route1 == route2))
                            throw IntegrityError("validate: face actions on '" + c.name +
                                                 "' do not commute at (" + std::to_string(i) + "," +
                                                 std::to_string(e) + ")(" + std::to_string(j) + "," +
                                                 std::to_string(h) + ")");
                    }
    }
}

Cube PresheafMap::apply(const Cube& c) const {
    Cube v = apply(c.cell);
    return Cube{compose(v.down, c.down), v.cell};
}

void PresheafMap::validate() const {
    if (assign.size() != size_t(src.cell_count()))
        throw IntegrityError("map: assignment size mismatch");
    for (CellId x = 0; x < src.cell_count(); ++x) {
        const auto& c = src.cell(x);
        const Cube& v = assign[size_t(x)];
        if (v.cell < 0 || v.cell >= tgt.cell_count())
            throw IntegrityError("map: dangling value on '" + c.name + "'");
        if (!v.down.in_down() || v.down.src_dim() != c.dim ||
            v.down.tgt_dim() != tgt.cell(v.cell).dim)
            throw IntegrityError("map: value on '" + c.name + "' has wrong dimensions");
        if (c.marked && !tgt.is_marked(v))
            throw IntegrityError("map: marked cell '" + c.name + "' has unmarked image");
        for (int i = 1; i <= c.dim; ++i)
            for (int e = 0; e <= 1; ++e) {
                // f(x).d(i,e) must equal f(x.d(i,e))
                Cube lhs = tgt.act(v.cell, compose(v.down, BoxOperator::face(c.dim, i, e)));
                Cube via = src.face(x, i, e);
                Cube img = apply(via.cell);
                Cube rhs = Cube{compose(img.down, via.down), img.cell};
                if (!(lhs == rhs))
                    throw IntegrityError("map: not natural at '" + c.name + "' face (" +
                                         std::to_string(i) + "," + std::to_string(e) + ")");
            }
    }
}

bool PresheafMap::is_mono() const {
    std::set<CellId> seen;
    for (const Cube& v : assign) {
        if (v.is_degenerate()) return false;
        if (!seen.insert(v.cell).second) return false;
    }
    return true;
}

bool PresheafMap::is_entire() const {
    return is_mono() && src.cell_count() == tgt.cell_count();
}

bool PresheafMap::is_iso() const {
    if (!is_entire()) return false;
    for (CellId x = 0; x < src.cell_count(); ++x)
        if (src.is_marked(x) != tgt.is_marked(assign[size_t(x)].cell)) return false;
    return true;
}

PresheafMap compose(const PresheafMap& g, const PresheafMap& f) {
    if (!(f.tgt == g.src)) throw CompositionError("map composition: middle objects differ");
    PresheafMap h;
    h.src = f.src;
    h.tgt = g.tgt;
    h.assign.reserve(f.assign.size());
    for (const Cube& v : f.assign) h.assign.push_back(g.apply(v));
    return h;
}

PresheafMap identity_map(const MarkedCubicalSet& x) {
    PresheafMap f;
    f.src = x;
    f.tgt = x;
    for (CellId c = 0; c < x.cell_count(); ++c)
        f.assign.push_back(Cube{BoxOperator::identity(x.cell(c).dim), c});
    return f;
}

MarkedCubicalSet truncate(const MarkedCubicalSet& x, int n) {
    if (n < 0) throw ParameterError("truncate: negative level");
    MarkedCubicalSet y = x;
    for (CellId c = 0; c < y.cell_count(); ++c)
        if (y.cell(c).dim > n) y.set_marked(c, true);
    return y;
}

namespace {

// Restriction to a face-closed set of cells, keeping marking; keep[] must be
// closed under the face table.
MarkedCubicalSet subobject(const MarkedCubicalSet& x, const std::vector<bool>& keep,
                           std::vector<CellId>* old_to_new = nullptr) {
    MarkedCubicalSet y;
    std::vector<CellId> remap(size_t(x.cell_count()), -1);
    for (CellId c = 0; c < x.cell_count(); ++c)
        if (keep[size_t(c)])
            remap[size_t(c)] = y.add_cell(x.cell(c).name, x.cell(c).dim, x.cell(c).marked);
    for (CellId c = 0; c < x.cell_count(); ++c) {
        if (!keep[size_t(c)]) continue;
        for (int i = 1; i <= x.cell(c).dim; ++i)
            for (int e = 0; e <= 1; ++e) {
                Cube f = x.face(c, i, e);
                if (remap[size_t(f.cell)] < 0)
                    throw IntegrityError("subobject: cell set not face-closed at '" +
                                         x.cell(c).name + "'");
                y.set_face(remap[size_t(c)], i, e, Cube{f.down, remap[size_t(f.cell)]});
            }
    }
    if (old_to_new) *old_to_new = std::move(remap);
    return y;
}

} // namespace

MarkedCubicalSet core(const MarkedCubicalSet& x, int n) {
    if (n < 0) throw ParameterError("core: negative level");
    // bad = unmarked above level n, or having a bad iterated face
    std::vector<int> state(size_t(x.cell_count()), 0); // 0 unknown, 1 good, 2 bad
    std::function<bool(CellId)> bad = [&](CellId c) -> bool {
        int& s = state[size_t(c)];
        if (s) return s == 2;
        s = (x.cell(c).dim > n && !x.is_marked(c)) ? 2 : 1;
        if (s == 1)
            for (int i = 1; i <= x.cell(c).dim && s == 1; ++i)
                for (int e = 0; e <= 1 && s == 1; ++e)
                    if (bad(x.face(c, i, e).cell)) s = 2;
        return s == 2;
    };
    std::vector<bool> keep(size_t(x.cell_count()));
    for (CellId c = 0; c < x.cell_count(); ++c) keep[size_t(c)] = !bad(c);
    return subobject(x, keep);
}

PushoutResult pushout(const PresheafMap& f, const PresheafMap& g) {
    if (!(f.src == g.src)) throw CompositionError("pushout: the two legs have different sources");
    if (!f.is_mono()) throw ParameterError("pushout: first leg must be a monomorphism");
    const MarkedCubicalSet &a = f.src, &x = f.tgt, &y = g.tgt;

    // rewrite rule for the identified X-cells: f(a) -> g(a)
    std::vector<std::optional<Cube>> rule(size_t(x.cell_count()));
    for (CellId c = 0; c < a.cell_count(); ++c) rule[size_t(f.apply(c).cell)] = g.apply(c);

    MarkedCubicalSet p;
    std::vector<CellId> ymap(size_t(y.cell_count()), -1);
    std::vector<CellId> xmap(size_t(x.cell_count()), -1);
    for (CellId c = 0; c < y.cell_count(); ++c)
        ymap[size_t(c)] = p.add_cell(y.cell(c).name, y.cell(c).dim, y.cell(c).marked);
    for (CellId c = 0; c < x.cell_count(); ++c) {
        if (rule[size_t(c)]) continue;
        std::string name = x.cell(c).name;
        while (p.find(name)) name += "'";
        xmap[size_t(c)] = p.add_cell(name, x.cell(c).dim, x.cell(c).marked);
    }
    // marking transported through identifications
    for (CellId c = 0; c < x.cell_count(); ++c)
        if (rule[size_t(c)] && x.is_marked(c) && !rule[size_t(c)]->is_degenerate())
            p.set_marked(ymap[size_t(rule[size_t(c)]->cell)], true);

    auto x_value = [&](const Cube& v) -> Cube {
        // image of an X-side EZ pair in P
        if (rule[size_t(v.cell)]) {
            const Cube& r = *rule[size_t(v.cell)];
            return Cube{compose(r.down, v.down), ymap[size_t(r.cell)]};
        }
        return Cube{v.down, xmap[size_t(v.cell)]};
    };

    for (CellId c = 0; c < y.cell_count(); ++c)
        for (int i = 1; i <= y.cell(c).dim; ++i)
            for (int e = 0; e <= 1; ++e) {
                Cube fc = y.face(c, i, e);
                p.set_face(ymap[size_t(c)], i, e, Cube{fc.down, ymap[size_t(fc.cell)]});
            }
    for (CellId c = 0; c < x.cell_count(); ++c) {
        if (rule[size_t(c)]) continue;
        for (int i = 1; i <= x.cell(c).dim; ++i)
            for (int e = 0; e <= 1; ++e) p.set_face(xmap[size_t(c)], i, e, x_value(x.face(c, i, e)));
    }

    PushoutResult out;
    out.object = p;
    out.left.src = x;
    out.left.tgt = p;
    for (CellId c = 0; c < x.cell_count(); ++c)
        out.left.assign.push_back(x_value(Cube{BoxOperator::identity(x.cell(c).dim), c}));
    out.right.src = y;
    out.right.tgt = p;
    for (CellId c = 0; c < y.cell_count(); ++c)
        out.right.assign.push_back(Cube{BoxOperator::identity(y.cell(c).dim), ymap[size_t(c)]});
    return out;
}

PresheafMap factor_through_pushout(const PushoutResult& p, const PresheafMap& u,
                                   const PresheafMap& v) {
    if (!(u.src == p.left.src) || !(v.src == p.right.src) || !(u.tgt == v.tgt))
        throw CompositionError("factor_through_pushout: cocone does not match the pushout");
    PresheafMap h;
    h.src = p.object;
    h.tgt = u.tgt;
    h.assign.assign(size_t(p.object.cell_count()), Cube{});
    for (CellId c = 0; c < p.right.src.cell_count(); ++c) {
        const Cube& leg = p.right.apply(c);
        if (!leg.is_degenerate()) h.assign[size_t(leg.cell)] = v.apply(c);
    }
    for (CellId c = 0; c < p.left.src.cell_count(); ++c) {
        const Cube& leg = p.left.apply(c);
        if (!leg.is_degenerate()) h.assign[size_t(leg.cell)] = u.apply(c);
    }
    for (const Cube& w : h.assign)
        if (w.cell < 0) throw IntegrityError("factor_through_pushout: uncovered cell");
    return h;
}

// --- map search ---

namespace {

struct Searcher {
    const MarkedCubicalSet& a;
    const MarkedCubicalSet& x;
    size_t limit;
    bool stop_at_first;
    MapSearch result;
    std::vector<CellId> order; // descending dimension
    std::vector<std::optional<Cube>> partial;

    Searcher(const MarkedCubicalSet& a_, const MarkedCubicalSet& x_, size_t limit_,
             bool stop_at_first_)
        : a(a_), x(x_), limit(limit_), stop_at_first(stop_at_first_),
          partial(size_t(a_.cell_count())) {
        for (CellId c = 0; c < a.cell_count(); ++c) order.push_back(c);
        std::stable_sort(order.begin(), order.end(),
                         [&](CellId l, CellId r) { return a.cell(l).dim > a.cell(r).dim; });
    }

    bool marking_ok(CellId c, const Cube& v) const { return !a.is_marked(c) || x.is_marked(v); }

    // Sets partial[c] = v and forces all faces; returns false on conflict.
    // Records every touched cell in trail for undo.
    bool propagate(CellId c, const Cube& v, std::vector<CellId>& trail) {
        if (partial[size_t(c)]) return *partial[size_t(c)] == v;
        if (!marking_ok(c, v)) return false;
        partial[size_t(c)] = v;
        trail.push_back(c);
        int n = a.cell(c).dim;
        for (int i = 1; i <= n; ++i)
            for (int e = 0; e <= 1; ++e) {
                Cube via = a.face(c, i, e);         // a.d(i,e) = a' . d
                Cube want = x.act(v.cell, compose(v.down, BoxOperator::face(n, i, e)));
                // need value(a') with value(a').d == want
                Cube forced;
                if (via.down.is_identity()) {
                    forced = want;
                } else {
                    BoxOperator w = compose(want.down, via.down.section());
                    if (!(compose(w, via.down) == want.down)) return false;
                    forced = Cube{w, want.cell};
                }
                if (!propagate(via.cell, forced, trail)) return false;
            }
        return true;
    }

    void search(size_t at) {
        if (result.overflow || (stop_at_first && !result.assignments.empty())) return;
        while (at < order.size() && partial[size_t(order[at])]) ++at;
        if (at == order.size()) {
            std::vector<Cube> full;
            full.reserve(partial.size());
            for (const auto& v : partial) full.push_back(*v);
            result.assignments.push_back(std::move(full));
            return;
        }
        CellId c = order[at];
        int n = a.cell(c).dim;
        for (int k = 0; k <= n && !result.overflow; ++k) {
            for (const BoxOperator& down : all_down_operators(n, k)) {
                for (CellId z : x.cells_of_dim(k)) {
                    if (++result.nodes > limit) {
                        result.overflow = true;
                        return;
                    }
                    std::vector<CellId> trail;
                    if (propagate(c, Cube{down, z}, trail)) {
                        search(at + 1);
                        if (stop_at_first && !result.assignments.empty()) return;
                    }
                    for (CellId t : trail) partial[size_t(t)].reset();
                }
            }
        }
    }
};

} // namespace

MapSearch enumerate_maps(const MarkedCubicalSet& a, const MarkedCubicalSet& x, size_t limit) {
    Searcher s(a, x, limit, false);
    s.search(0);
    return std::move(s.result);
}

RlpResult has_rlp(const MarkedCubicalSet& x, const PresheafMap& f, size_t limit) {
    if (!f.is_mono()) throw ParameterError("has_rlp: f must be a monomorphism");
    RlpResult out;
    MapSearch base = enumerate_maps(f.src, x, limit);
    out.overflow = base.overflow;
    for (const auto& m : base.assignments) {
        // fast path for entire f: the underlying cells are shared, so the
        // only question is whether m respects B's (finer) marking
        if (f.is_entire()) {
            std::vector<Cube> lifted(size_t(f.tgt.cell_count()));
            for (CellId c = 0; c < f.src.cell_count(); ++c)
                lifted[size_t(f.apply(c).cell)] = m[size_t(c)];
            bool ok = true;
            for (CellId b = 0; b < f.tgt.cell_count() && ok; ++b)
                if (f.tgt.is_marked(b) && !x.is_marked(lifted[size_t(b)])) ok = false;
            if (ok) continue;
        } else {
            Searcher s(f.tgt, x, limit, true);
            bool feasible = true;
            std::vector<CellId> trail;
            for (CellId c = 0; c < f.src.cell_count() && feasible; ++c)
                feasible = s.propagate(f.apply(c).cell, m[size_t(c)], trail);
            if (feasible) s.search(0);
            if (s.result.overflow) out.overflow = true;
            if (feasible && !s.result.assignments.empty()) continue;
        }
        out.holds = false;
        PresheafMap cex;
        cex.src = f.src;
        cex.tgt = x;
        cex.assign = m;
        out.counterexample = std::move(cex);
        return out;
    }
    out.holds = true;
    return out;
}

std::optional<PresheafMap> find_isomorphism(const MarkedCubicalSet& x, const MarkedCubicalSet& y,
                                            size_t limit) {
    if (x.cell_count() != y.cell_count()) return std::nullopt;
    for (int d = 0; d <= std::max(x.top_dim(), y.top_dim()); ++d)
        if (x.count_of_dim(d) != y.count_of_dim(d)) return std::nullopt;

    std::vector<CellId> order;
    for (CellId c = 0; c < x.cell_count(); ++c) order.push_back(c);
    std::stable_sort(order.begin(), order.end(),
                     [&](CellId l, CellId r) { return x.cell(l).dim > x.cell(r).dim; });

    std::vector<std::optional<CellId>> partial(size_t(x.cell_count()));
    std::vector<bool> used(size_t(y.cell_count()), false);
    size_t nodes = 0;

    std::function<bool(CellId, CellId, std::vector<CellId>&)> assign =
        [&](CellId c, CellId z, std::vector<CellId>& trail) -> bool {
        if (partial[size_t(c)]) return *partial[size_t(c)] == z;
        if (used[size_t(z)]) return false;
        if (x.cell(c).dim != y.cell(z).dim) return false;
        if (x.is_marked(c) != y.is_marked(z)) return false;
        partial[size_t(c)] = z;
        used[size_t(z)] = true;
        trail.push_back(c);
        for (int i = 1; i <= x.cell(c).dim; ++i)
            for (int e = 0; e <= 1; ++e) {
                Cube fx = x.face(c, i, e);
                Cube fy = y.face(z, i, e);
                if (!(fx.down == fy.down)) return false;
                if (!assign(fx.cell, fy.cell, trail)) return false;
            }
        return true;
    };

    std::function<bool(size_t)> search = [&](size_t at) -> bool {
        while (at < order.size() && partial[size_t(order[at])]) ++at;
        if (at == order.size()) return true;
        CellId c = order[at];
        for (CellId z : y.cells_of_dim(x.cell(c).dim)) {
            if (++nodes > limit) return false;
            std::vector<CellId> trail;
            if (assign(c, z, trail) && search(at + 1)) return true;
            for (CellId t : trail) {
                used[size_t(*partial[size_t(t)])] = false;
                partial[size_t(t)].reset();
            }
        }
        return false;
    };

    if (!search(0)) return std::nullopt;
    PresheafMap f;
    f.src = x;
    f.tgt = y;
    for (CellId c = 0; c < x.cell_count(); ++c)
        f.assign.push_back(Cube{BoxOperator::identity(x.cell(c).dim), *partial[size_t(c)]});
    return f;
}

bool CheckReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.pass; });
}

CheckReport is_comical(const MarkedCubicalSet& x, int max_dim, bool saturated, size_t limit) {
    CheckReport report;
    auto run = [&](const std::string& name, const PresheafMap& f) {
        RlpResult r = has_rlp(x, f, limit);
        CheckReport::Entry e;
        e.name = name;
        e.pass = r.holds && !r.overflow;
        e.overflow = r.overflow;
        if (r.counterexample) {
            const PresheafMap& m = *r.counterexample;
            for (CellId c = 0; c < m.src.cell_count(); ++c)
                e.detail += (e.detail.empty() ? "" : " ") + m.src.cell(c).name + "->" +
                            m.tgt.cell(m.apply(c).cell).name;
        }
        report.entries.push_back(std::move(e));
    };
    for (int n = 1; n <= max_dim; ++n)
        for (int k = 1; k <= n; ++k)
            for (int e = 0; e <= 1; ++e) {
                run("box(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(e) +
                        ")",
                    comical_box_inclusion(n, k, e));
                run("ext(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(e) +
                        ")",
                    marking_extension_pair(n, k, e));
            }
    if (saturated && max_dim >= 2)
        for (RezkLeg lx : {RezkLeg::forward, RezkLeg::backward})
            for (RezkLeg ly : {RezkLeg::forward, RezkLeg::backward})
                run(std::string("rezk(") + (lx == RezkLeg::forward ? "f" : "b") + "," +
                        (ly == RezkLeg::forward ? "f" : "b") + ")",
                    rezk_map(lx, ly));
    return report;
}

MarkedCubicalSet dual(const MarkedCubicalSet& x, Duality w) {
    MarkedCubicalSet y;
    for (CellId c = 0; c < x.cell_count(); ++c)
        y.add_cell(x.cell(c).name, x.cell(c).dim, x.cell(c).marked);
    for (CellId c = 0; c < x.cell_count(); ++c) {
        int n = x.cell(c).dim;
        for (int i = 1; i <= n; ++i)
            for (int e = 0; e <= 1; ++e) {
                // the w-dual of d(i,e) in target dimension n
                BoxOperator df = dual(BoxOperator::face(n, i, e), w);
                Cube f = x.face(c, df.faces().front().index, df.faces().front().sign);
                y.set_face(c, i, e, Cube{dual(f.down, w), f.cell});
            }
    }
    return y;
}

PresheafMap dual(const PresheafMap& f, Duality w) {
    PresheafMap g;
    g.src = dual(f.src, w);
    g.tgt = dual(f.tgt, w);
    for (const Cube& v : f.assign) g.assign.push_back(Cube{dual(v.down, w), v.cell});
    return g;
}

} // namespace comical
