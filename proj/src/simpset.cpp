#include "comical/simpset.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace comical {

CellId MarkedSimplicialSet::add_cell(const std::string& name, int dim, bool marked) {
    if (dim < 0) throw ParameterError("add_cell: negative dimension");
    if (marked && dim == 0)
        throw ParameterError("add_cell: 0-simplex '" + name + "' cannot be marked");
    if (index_.count(name)) throw ParameterError("add_cell: duplicate cell name '" + name + "'");
    CellId id = static_cast<CellId>(cells_.size());
    CellData c;
    c.name = name;
    c.dim = dim;
    c.marked = marked;
    c.faces.assign(dim >= 1 ? size_t(dim) + 1 : 0, Simplex{});
    cells_.push_back(std::move(c));
    index_[name] = id;
    return id;
}

void MarkedSimplicialSet::set_face(CellId x, int j, Simplex value) {
    CellData& c = cells_.at(size_t(x));
    if (c.dim < 1 || j < 0 || j > c.dim)
        throw ParameterError("set_face: slot " + std::to_string(j) + " out of range for cell '" +
                             c.name + "'");
    c.faces[size_t(j)] = std::move(value);
}

void MarkedSimplicialSet::set_marked(CellId x, bool marked) {
    CellData& c = cells_.at(size_t(x));
    if (marked && c.dim == 0)
        throw ParameterError("set_marked: 0-simplex '" + c.name + "' cannot be marked");
    c.marked = marked;
}

int MarkedSimplicialSet::top_dim() const {
    int d = 0;
    for (const CellData& c : cells_) d = std::max(d, c.dim);
    return d;
}

std::optional<CellId> MarkedSimplicialSet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<CellId> MarkedSimplicialSet::cells_of_dim(int n) const {
    std::vector<CellId> out;
    for (CellId x = 0; x < cell_count(); ++x)
        if (cells_[size_t(x)].dim == n) out.push_back(x);
    return out;
}

int MarkedSimplicialSet::count_of_dim(int n) const {
    return static_cast<int>(cells_of_dim(n).size());
}

Simplex MarkedSimplicialSet::face(CellId x, int j) const {
    const CellData& c = cell(x);
    if (c.dim < 1 || j < 0 || j > c.dim)
        throw ParameterError("face: slot " + std::to_string(j) + " out of range for cell '" +
                             c.name + "'");
    const Simplex& f = c.faces[size_t(j)];
    if (f.cell < 0)
        throw IntegrityError("face: cell '" + c.name + "' has no face " + std::to_string(j));
    return f;
}

Simplex MarkedSimplicialSet::act(CellId x, const SimplicialOperator& op) const {
    if (op.tgt_dim() != cell(x).dim)
        throw ArityError("act: operator targets dimension " + std::to_string(op.tgt_dim()) +
                         " but cell '" + cell(x).name + "' has dimension " +
                         std::to_string(cell(x).dim));
    const SimplicialEpiMono em = epi_mono_factor(op);
    if (em.mono.is_identity()) return Simplex{em.epi, x};
    // peel the largest value skipped by the injective part
    const int n = cell(x).dim;
    std::vector<bool> hit(size_t(n) + 1, false);
    for (int i = 0; i <= em.mono.src_dim(); ++i) hit[size_t(em.mono(i))] = true;
    int j = n;
    while (hit[size_t(j)]) --j;
    std::vector<int> rest(size_t(em.mono.src_dim()) + 1);
    for (int i = 0; i <= em.mono.src_dim(); ++i)
        rest[size_t(i)] = em.mono(i) < j ? em.mono(i) : em.mono(i) - 1;
    const Simplex f = face(x, j);
    // x·op = ((x·δⱼ)·rest)·epi = f.cell·(f.down ∘ rest ∘ epi)
    const SimplicialOperator tail =
        compose(compose(f.down, SimplicialOperator::from_image(n - 1, std::move(rest))), em.epi);
    return act(f.cell, tail);
}

Simplex MarkedSimplicialSet::act(const Simplex& s, const SimplicialOperator& op) const {
    return act(s.cell, compose(s.down, op));
}

void MarkedSimplicialSet::validate() const {
    for (CellId x = 0; x < cell_count(); ++x) {
        const CellData& c = cells_[size_t(x)];
        if (c.marked && c.dim == 0)
            throw IntegrityError("validate: marked 0-simplex '" + c.name + "'");
        if (c.faces.size() != (c.dim >= 1 ? size_t(c.dim) + 1 : 0))
            throw IntegrityError("validate: face table of '" + c.name + "' has wrong size");
        for (int j = 0; j <= c.dim && c.dim >= 1; ++j) {
            Simplex f = face(x, j);
            if (f.cell < 0 || f.cell >= cell_count())
                throw IntegrityError("validate: dangling face of '" + c.name + "'");
            if (!f.down.is_surjective())
                throw IntegrityError("validate: face of '" + c.name + "' not EZ-normalized");
            if (f.down.src_dim() != c.dim - 1 || f.down.tgt_dim() != cell(f.cell).dim)
                throw IntegrityError("validate: face of '" + c.name + "' has wrong dimensions");
        }
        // action coherence on all length-2 face words
        for (int j = 0; j <= c.dim && c.dim >= 2; ++j)
            for (int h = 0; h <= c.dim - 1; ++h) {
                SimplicialOperator w = compose(SimplicialOperator::face(c.dim, j),
                                               SimplicialOperator::face(c.dim - 1, h));
                Simplex via = face(x, j);
                Simplex route1 =
                    act(via.cell, compose(via.down, SimplicialOperator::face(c.dim - 1, h)));
                Simplex route2 = act(x, w);
                if (!(route1 == route2))
                    throw IntegrityError("validate: face actions on '" + c.name +
                                         "' do not commute at " + std::to_string(j) + "," +
                                         std::to_string(h));
            }
    }
}

Simplex SimplicialMap::apply(const Simplex& s) const {
    Simplex v = apply(s.cell);
    return Simplex{compose(v.down, s.down), v.cell};
}

void SimplicialMap::validate() const {
    if (assign.size() != size_t(src.cell_count()))
        throw IntegrityError("map: assignment size mismatch");
    for (CellId x = 0; x < src.cell_count(); ++x) {
        const auto& c = src.cell(x);
        const Simplex& v = assign[size_t(x)];
        if (v.cell < 0 || v.cell >= tgt.cell_count())
            throw IntegrityError("map: dangling value on '" + c.name + "'");
        if (!v.down.is_surjective() || v.down.src_dim() != c.dim ||
            v.down.tgt_dim() != tgt.cell(v.cell).dim)
            throw IntegrityError("map: value on '" + c.name + "' has wrong dimensions");
        if (c.marked && !tgt.is_marked(v))
            throw IntegrityError("map: marked cell '" + c.name + "' has unmarked image");
        for (int j = 0; j <= c.dim && c.dim >= 1; ++j) {
            Simplex lhs = tgt.act(v.cell, compose(v.down, SimplicialOperator::face(c.dim, j)));
            Simplex via = src.face(x, j);
            Simplex img = apply(via.cell);
            Simplex rhs = Simplex{compose(img.down, via.down), img.cell};
            if (!(lhs == rhs))
                throw IntegrityError("map: not natural at '" + c.name + "' face " +
                                     std::to_string(j));
        }
    }
}

bool SimplicialMap::is_mono() const {
    std::set<CellId> seen;
    for (const Simplex& v : assign) {
        if (v.is_degenerate()) return false;
        if (!seen.insert(v.cell).second) return false;
    }
    return true;
}

bool SimplicialMap::is_entire() const {
    return is_mono() && src.cell_count() == tgt.cell_count();
}

bool SimplicialMap::is_iso() const {
    if (!is_entire()) return false;
    for (CellId x = 0; x < src.cell_count(); ++x)
        if (src.is_marked(x) != tgt.is_marked(assign[size_t(x)].cell)) return false;
    return true;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (!(f.tgt == g.src)) throw CompositionError("map composition: middle objects differ");
    SimplicialMap h;
    h.src = f.src;
    h.tgt = g.tgt;
    h.assign.reserve(f.assign.size());
    for (const Simplex& v : f.assign) h.assign.push_back(g.apply(v));
    return h;
}

SimplicialMap identity_map(const MarkedSimplicialSet& x) {
    SimplicialMap f;
    f.src = x;
    f.tgt = x;
    for (CellId c = 0; c < x.cell_count(); ++c)
        f.assign.push_back(Simplex{SimplicialOperator::identity(x.cell(c).dim), c});
    return f;
}

MarkedSimplicialSet truncate_s(const MarkedSimplicialSet& x, int n) {
    if (n < 0) throw ParameterError("truncate_s: negative level");
    MarkedSimplicialSet y = x;
    for (CellId c = 0; c < y.cell_count(); ++c)
        if (y.cell(c).dim > n) y.set_marked(c, true);
    return y;
}

namespace {

MarkedSimplicialSet subobject_s(const MarkedSimplicialSet& x, const std::vector<bool>& keep,
                                std::vector<CellId>* old_to_new = nullptr) {
    MarkedSimplicialSet y;
    std::vector<CellId> remap(size_t(x.cell_count()), -1);
    for (CellId c = 0; c < x.cell_count(); ++c)
        if (keep[size_t(c)])
            remap[size_t(c)] = y.add_cell(x.cell(c).name, x.cell(c).dim, x.cell(c).marked);
    for (CellId c = 0; c < x.cell_count(); ++c) {
        if (!keep[size_t(c)]) continue;
        for (int j = 0; j <= x.cell(c).dim && x.cell(c).dim >= 1; ++j) {
            Simplex f = x.face(c, j);
            if (remap[size_t(f.cell)] < 0)
                throw IntegrityError("subobject: cell set not face-closed at '" + x.cell(c).name +
                                     "'");
            y.set_face(remap[size_t(c)], j, Simplex{f.down, remap[size_t(f.cell)]});
        }
    }
    if (old_to_new) *old_to_new = std::move(remap);
    return y;
}

} // namespace

MarkedSimplicialSet core_s(const MarkedSimplicialSet& x, int n) {
    if (n < 0) throw ParameterError("core_s: negative level");
    std::vector<int> state(size_t(x.cell_count()), 0); // 0 unknown, 1 good, 2 bad
    std::function<bool(CellId)> bad = [&](CellId c) -> bool {
        int& s = state[size_t(c)];
        if (s) return s == 2;
        s = (x.cell(c).dim > n && !x.is_marked(c)) ? 2 : 1;
        if (s == 1)
            for (int j = 0; j <= x.cell(c).dim && x.cell(c).dim >= 1 && s == 1; ++j)
                if (bad(x.face(c, j).cell)) s = 2;
        return s == 2;
    };
    std::vector<bool> keep(size_t(x.cell_count()));
    for (CellId c = 0; c < x.cell_count(); ++c) keep[size_t(c)] = !bad(c);
    return subobject_s(x, keep);
}

SPushoutResult pushout_s(const SimplicialMap& f, const SimplicialMap& g) {
    if (!(f.src == g.src)) throw CompositionError("pushout: the two legs have different sources");
    if (!f.is_mono()) throw ParameterError("pushout: first leg must be a monomorphism");
    const MarkedSimplicialSet &a = f.src, &x = f.tgt, &y = g.tgt;

    std::vector<std::optional<Simplex>> rule(size_t(x.cell_count()));
    for (CellId c = 0; c < a.cell_count(); ++c) rule[size_t(f.apply(c).cell)] = g.apply(c);

    MarkedSimplicialSet p;
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
    for (CellId c = 0; c < x.cell_count(); ++c)
        if (rule[size_t(c)] && x.is_marked(c) && !rule[size_t(c)]->is_degenerate())
            p.set_marked(ymap[size_t(rule[size_t(c)]->cell)], true);

    auto x_value = [&](const Simplex& v) -> Simplex {
        if (rule[size_t(v.cell)]) {
            const Simplex& r = *rule[size_t(v.cell)];
            return Simplex{compose(r.down, v.down), ymap[size_t(r.cell)]};
        }
        return Simplex{v.down, xmap[size_t(v.cell)]};
    };

    for (CellId c = 0; c < y.cell_count(); ++c)
        for (int j = 0; j <= y.cell(c).dim && y.cell(c).dim >= 1; ++j) {
            Simplex fc = y.face(c, j);
            p.set_face(ymap[size_t(c)], j, Simplex{fc.down, ymap[size_t(fc.cell)]});
        }
    for (CellId c = 0; c < x.cell_count(); ++c) {
        if (rule[size_t(c)]) continue;
        for (int j = 0; j <= x.cell(c).dim && x.cell(c).dim >= 1; ++j)
            p.set_face(xmap[size_t(c)], j, x_value(x.face(c, j)));
    }

    SPushoutResult out;
    out.object = p;
    out.left.src = x;
    out.left.tgt = p;
    for (CellId c = 0; c < x.cell_count(); ++c)
        out.left.assign.push_back(x_value(Simplex{SimplicialOperator::identity(x.cell(c).dim), c}));
    out.right.src = y;
    out.right.tgt = p;
    for (CellId c = 0; c < y.cell_count(); ++c)
        out.right.assign.push_back(
            Simplex{SimplicialOperator::identity(y.cell(c).dim), ymap[size_t(c)]});
    return out;
}

SimplicialMap factor_through_pushout_s(const SPushoutResult& p, const SimplicialMap& u,
                                       const SimplicialMap& v) {
    if (!(u.src == p.left.src) || !(v.src == p.right.src) || !(u.tgt == v.tgt))
        throw CompositionError("factor_through_pushout: cocone does not match the pushout");
    SimplicialMap h;
    h.src = p.object;
    h.tgt = u.tgt;
    h.assign.assign(size_t(p.object.cell_count()), Simplex{});
    for (CellId c = 0; c < p.right.src.cell_count(); ++c) {
        const Simplex& leg = p.right.apply(c);
        if (!leg.is_degenerate()) h.assign[size_t(leg.cell)] = v.apply(c);
    }
    for (CellId c = 0; c < p.left.src.cell_count(); ++c) {
        const Simplex& leg = p.left.apply(c);
        if (!leg.is_degenerate()) h.assign[size_t(leg.cell)] = u.apply(c);
    }
    for (const Simplex& w : h.assign)
        if (w.cell < 0) throw IntegrityError("factor_through_pushout: uncovered cell");
    return h;
}

// --- map search ---

namespace {

struct SearcherS {
    const MarkedSimplicialSet& a;
    const MarkedSimplicialSet& x;
    size_t limit;
    bool stop_at_first;
    SMapSearch result;
    std::vector<CellId> order;
    std::vector<std::optional<Simplex>> partial;

    SearcherS(const MarkedSimplicialSet& a_, const MarkedSimplicialSet& x_, size_t limit_,
              bool stop_at_first_)
        : a(a_), x(x_), limit(limit_), stop_at_first(stop_at_first_),
          partial(size_t(a_.cell_count())) {
        for (CellId c = 0; c < a.cell_count(); ++c) order.push_back(c);
        std::stable_sort(order.begin(), order.end(),
                         [&](CellId l, CellId r) { return a.cell(l).dim > a.cell(r).dim; });
    }

    bool marking_ok(CellId c, const Simplex& v) const {
        return !a.is_marked(c) || x.is_marked(v);
    }

    bool propagate(CellId c, const Simplex& v, std::vector<CellId>& trail) {
        if (partial[size_t(c)]) return *partial[size_t(c)] == v;
        if (!marking_ok(c, v)) return false;
        partial[size_t(c)] = v;
        trail.push_back(c);
        int n = a.cell(c).dim;
        for (int j = 0; j <= n && n >= 1; ++j) {
            Simplex via = a.face(c, j);
            Simplex want = x.act(v.cell, compose(v.down, SimplicialOperator::face(n, j)));
            Simplex forced;
            if (via.down.is_identity()) {
                forced = want;
            } else {
                SimplicialOperator w = compose(want.down, section(via.down));
                if (!(compose(w, via.down) == want.down)) return false;
                forced = Simplex{w, want.cell};
            }
            if (!propagate(via.cell, forced, trail)) return false;
        }
        return true;
    }

    void search(size_t at) {
        if (result.overflow || (stop_at_first && !result.assignments.empty())) return;
        while (at < order.size() && partial[size_t(order[at])]) ++at;
        if (at == order.size()) {
            std::vector<Simplex> full;
            full.reserve(partial.size());
            for (const auto& v : partial) full.push_back(*v);
            result.assignments.push_back(std::move(full));
            return;
        }
        CellId c = order[at];
        int n = a.cell(c).dim;
        for (int k = 0; k <= n && !result.overflow; ++k) {
            for (const SimplicialOperator& down : all_down_operators_s(n, k)) {
                for (CellId z : x.cells_of_dim(k)) {
                    if (++result.nodes > limit) {
                        result.overflow = true;
                        return;
                    }
                    std::vector<CellId> trail;
                    if (propagate(c, Simplex{down, z}, trail)) {
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

SMapSearch enumerate_maps_s(const MarkedSimplicialSet& a, const MarkedSimplicialSet& x,
                            size_t limit) {
    SearcherS s(a, x, limit, false);
    s.search(0);
    return std::move(s.result);
}

SRlpResult has_rlp_s(const MarkedSimplicialSet& x, const SimplicialMap& f, size_t limit) {
    if (!f.is_mono()) throw ParameterError("has_rlp_s: f must be a monomorphism");
    SRlpResult out;
    SMapSearch base = enumerate_maps_s(f.src, x, limit);
    out.overflow = base.overflow;
    for (const auto& m : base.assignments) {
        if (f.is_entire()) {
            std::vector<Simplex> lifted(size_t(f.tgt.cell_count()));
            for (CellId c = 0; c < f.src.cell_count(); ++c)
                lifted[size_t(f.apply(c).cell)] = m[size_t(c)];
            bool ok = true;
            for (CellId b = 0; b < f.tgt.cell_count() && ok; ++b)
                if (f.tgt.is_marked(b) && !x.is_marked(lifted[size_t(b)])) ok = false;
            if (ok) continue;
        } else {
            SearcherS s(f.tgt, x, limit, true);
            bool feasible = true;
            std::vector<CellId> trail;
            for (CellId c = 0; c < f.src.cell_count() && feasible; ++c)
                feasible = s.propagate(f.apply(c).cell, m[size_t(c)], trail);
            if (feasible) s.search(0);
            if (s.result.overflow) out.overflow = true;
            if (feasible && !s.result.assignments.empty()) continue;
        }
        out.holds = false;
        SimplicialMap cex;
        cex.src = f.src;
        cex.tgt = x;
        cex.assign = m;
        out.counterexample = std::move(cex);
        return out;
    }
    out.holds = true;
    return out;
}

std::optional<SimplicialMap> find_isomorphism_s(const MarkedSimplicialSet& x,
                                                const MarkedSimplicialSet& y, size_t limit) {
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
        for (int j = 0; j <= x.cell(c).dim && x.cell(c).dim >= 1; ++j) {
            Simplex fx = x.face(c, j);
            Simplex fy = y.face(z, j);
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
    SimplicialMap f;
    f.src = x;
    f.tgt = y;
    for (CellId c = 0; c < x.cell_count(); ++c)
        f.assign.push_back(Simplex{SimplicialOperator::identity(x.cell(c).dim), *partial[size_t(c)]});
    return f;
}

// --- duals ---

MarkedSimplicialSet dual_op_s(const MarkedSimplicialSet& x) {
    MarkedSimplicialSet y;
    for (CellId c = 0; c < x.cell_count(); ++c)
        y.add_cell(x.cell(c).name, x.cell(c).dim, x.cell(c).marked);
    for (CellId c = 0; c < x.cell_count(); ++c) {
        const int n = x.cell(c).dim;
        for (int j = 0; j <= n && n >= 1; ++j) {
            // δⱼ conjugated by the order reversal is δ_{n−j}
            Simplex f = x.face(c, n - j);
            y.set_face(c, j, Simplex{dual_op(f.down), f.cell});
        }
    }
    return y;
}

SimplicialMap dual_op_s(const SimplicialMap& f) {
    SimplicialMap g;
    g.src = dual_op_s(f.src);
    g.tgt = dual_op_s(f.tgt);
    g.assign.reserve(f.assign.size());
    for (const Simplex& v : f.assign) g.assign.push_back(Simplex{dual_op(v.down), v.cell});
    return g;
}

} // namespace comical
