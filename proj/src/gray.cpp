#include "comical/gray.hpp"

namespace comical {

namespace {

// Cells of x⊗y are added in a-major order, so a pair id is always
// a * y.cell_count() + b.  The helpers below lean on that layout.
CellId pair_id(CellId a, CellId b, int y_count) {
    return a * y_count + b;
}

std::string pair_name(const MarkedCubicalSet& x, CellId a, const MarkedCubicalSet& y, CellId b) {
    return x.cell(a).name + "|" + y.cell(b).name;
}

bool tensor_marked(const MarkedCubicalSet& x, CellId a, const MarkedCubicalSet& y, CellId b,
                   TensorMode mode) {
    const int k = x.cell(a).dim;
    const int l = y.cell(b).dim;
    if (k + l == 0) return false;
    switch (mode) {
        case TensorMode::geometric:
            return false;
        case TensorMode::lax:
            return x.is_marked(a) || y.is_marked(b);
        case TensorMode::pseudo:
            // Unmarked only when one factor is a point and the other is an
            // unmarked cell; in particular any pair with both dims positive
            // is marked.
            return !((k == 0 && !y.is_marked(b)) || (l == 0 && !x.is_marked(a)));
    }
    return false;
}

// The identity-on-pairs map between two tensors whose cell grids agree.
PresheafMap relabel(MarkedCubicalSet src, MarkedCubicalSet tgt,
                    const std::function<CellId(CellId)>& image) {
    PresheafMap m;
    m.src = std::move(src);
    m.tgt = std::move(tgt);
    m.assign.resize(static_cast<size_t>(m.src.cell_count()));
    for (CellId c = 0; c < m.src.cell_count(); ++c)
        m.assign[static_cast<size_t>(c)] =
            Cube{BoxOperator::identity(m.src.cell(c).dim), image(c)};
    return m;
}

} // namespace

MarkedCubicalSet tensor(const MarkedCubicalSet& x, const MarkedCubicalSet& y, TensorMode mode) {
    MarkedCubicalSet t;
    const int yn = y.cell_count();
    for (CellId a = 0; a < x.cell_count(); ++a)
        for (CellId b = 0; b < yn; ++b)
            t.add_cell(pair_name(x, a, y, b), x.cell(a).dim + y.cell(b).dim,
                       tensor_marked(x, a, y, b, mode));
    for (CellId a = 0; a < x.cell_count(); ++a) {
        const int k = x.cell(a).dim;
        for (CellId b = 0; b < yn; ++b) {
            const int l = y.cell(b).dim;
            for (int i = 1; i <= k + l; ++i) {
                for (int e = 0; e <= 1; ++e) {
                    // A face on the left factor commutes past the right one by
                    // tensoring its degeneracy word with an identity; same on
                    // the other side.  The result is already in EZ form since
                    // tensors of non-degenerate pairs are non-degenerate.
                    Cube v;
                    if (i <= k) {
                        const Cube fa = x.face(a, i, e);
                        v = Cube{tensor_op(fa.down, BoxOperator::identity(l)),
                                 pair_id(fa.cell, b, yn)};
                    } else {
                        const Cube fb = y.face(b, i - k, e);
                        v = Cube{tensor_op(BoxOperator::identity(k), fb.down),
                                 pair_id(a, fb.cell, yn)};
                    }
                    t.set_face(pair_id(a, b, yn), i, e, v);
                }
            }
        }
    }
    return t;
}

PresheafMap tensor_map(const PresheafMap& f, const PresheafMap& g, TensorMode mode) {
    PresheafMap h;
    h.src = tensor(f.src, g.src, mode);
    h.tgt = tensor(f.tgt, g.tgt, mode);
    const int bn = g.src.cell_count();
    const int yn = g.tgt.cell_count();
    h.assign.resize(static_cast<size_t>(f.src.cell_count()) * static_cast<size_t>(bn));
    for (CellId a = 0; a < f.src.cell_count(); ++a) {
        const Cube fa = f.apply(a);
        for (CellId b = 0; b < bn; ++b) {
            const Cube gb = g.apply(b);
            h.assign[static_cast<size_t>(pair_id(a, b, bn))] =
                Cube{tensor_op(fa.down, gb.down), pair_id(fa.cell, gb.cell, yn)};
        }
    }
    return h;
}

PresheafMap mu(const MarkedCubicalSet& x, const MarkedCubicalSet& y) {
    return relabel(tensor(x, y, TensorMode::lax), tensor(x, y, TensorMode::pseudo),
                   [](CellId c) { return c; });
}

LeibnizResult leibniz(const PresheafMap& f, const PresheafMap& g, TensorMode mode) {
    if (!f.is_mono() || !g.is_mono())
        throw ParameterError("leibniz: both arguments must be monomorphisms");
    const PresheafMap fb = tensor_map(f, identity_map(g.src), mode); // A⊗B -> X⊗B
    const PresheafMap ag = tensor_map(identity_map(f.src), g, mode); // A⊗B -> A⊗Y
    LeibnizResult r{pushout(fb, ag), PresheafMap{}};
    const PresheafMap u = tensor_map(identity_map(f.tgt), g, mode); // X⊗B -> X⊗Y
    const PresheafMap v = tensor_map(f, identity_map(g.tgt), mode); // A⊗Y -> X⊗Y
    r.induced = factor_through_pushout(r.corner, u, v);
    return r;
}

PresheafMap tensor_associator(const MarkedCubicalSet& x, const MarkedCubicalSet& y,
                              const MarkedCubicalSet& z, TensorMode mode) {
    // Both bracketings lay out triples in the same lexicographic order, so the
    // associator is the identity permutation of cell ids.
    return relabel(tensor(tensor(x, y, mode), z, mode),
                   tensor(x, tensor(y, z, mode), mode), [](CellId c) { return c; });
}

PresheafMap tensor_left_unit(const MarkedCubicalSet& x, TensorMode mode) {
    return relabel(tensor(standard_cube(0), x, mode), x, [](CellId c) { return c; });
}

PresheafMap tensor_right_unit(const MarkedCubicalSet& x, TensorMode mode) {
    return relabel(tensor(x, standard_cube(0), mode), x, [](CellId c) { return c; });
}

PresheafMap tensor_co_swap(const MarkedCubicalSet& x, const MarkedCubicalSet& y, TensorMode mode) {
    const int xn = x.cell_count();
    const int yn = y.cell_count();
    return relabel(dual(tensor(x, y, mode), Duality::co),
                   tensor(dual(y, Duality::co), dual(x, Duality::co), mode),
                   [xn, yn](CellId c) { return pair_id(c % yn, c / yn, xn); });
}

PresheafMap tensor_coop_iso(const MarkedCubicalSet& x, const MarkedCubicalSet& y, TensorMode mode) {
    return relabel(dual(tensor(x, y, mode), Duality::coop),
                   tensor(dual(x, Duality::coop), dual(y, Duality::coop), mode),
                   [](CellId c) { return c; });
}

} // namespace comical
