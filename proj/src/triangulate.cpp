#include "comical/triangulate.hpp"

#include <algorithm>

namespace comical {

namespace {

bool finite_slot(int v) { return v != kMinusInf && v != kPlusInf; }

// All surjections {1..n} -> {1..r} in lexicographic slot order.
std::vector<CubeSimplex> interior_simplices(int n, int r) {
    std::vector<CubeSimplex> out;
    if (r > n || r < 0) return out;
    if (n == 0) {
        out.push_back(CubeSimplex{0, {}});
        return out;
    }
    if (r == 0) return out; // a positive-dimensional cube has no interior vertices
    std::vector<int> slots(static_cast<size_t>(n), 1);
    for (;;) {
        CubeSimplex c{r, slots};
        if (c.is_nondegenerate()) out.push_back(c);
        int i = n - 1;
        while (i >= 0 && slots[static_cast<size_t>(i)] == r) {
            slots[static_cast<size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++slots[static_cast<size_t>(i)];
    }
    return out;
}

} // namespace

bool CubeSimplex::interior() const {
    return std::all_of(phi.begin(), phi.end(), finite_slot);
}

bool CubeSimplex::is_nondegenerate() const {
    std::vector<char> hit(static_cast<size_t>(r) + 1, 0);
    for (int v : phi)
        if (finite_slot(v)) {
            if (v < 1 || v > r)
                throw ParameterError("slot value " + std::to_string(v) +
                                     " outside the levels of a " + std::to_string(r) +
                                     "-simplex");
            hit[static_cast<size_t>(v)] = 1;
        }
    for (int p = 1; p <= r; ++p)
        if (!hit[static_cast<size_t>(p)]) return false;
    return true;
}

CubeSimplex CubeSimplex::iota(int n) {
    CubeSimplex c{n, std::vector<int>(static_cast<size_t>(n))};
    for (int i = 1; i <= n; ++i) c.phi[static_cast<size_t>(i) - 1] = i;
    return c;
}

std::string CubeSimplex::to_string() const {
    std::string s;
    for (int v : phi) {
        if (v == kMinusInf)
            s += '-';
        else if (v == kPlusInf)
            s += '+';
        else if (v <= 9)
            s += static_cast<char>('0' + v);
        else
            s += "(" + std::to_string(v) + ")";
    }
    return s.empty() ? std::string("()") : s;
}

CubeSimplex act_cs(const CubeSimplex& phi, const SimplicialOperator& alpha) {
    if (alpha.tgt_dim() != phi.r)
        throw CompositionError("act_cs: operator targets dimension " +
                               std::to_string(alpha.tgt_dim()) + ", simplex has dimension " +
                               std::to_string(phi.r));
    const int q = alpha.src_dim();
    CubeSimplex out{q, phi.phi};
    for (int i = 1; i <= phi.n(); ++i) {
        const int v = phi(i);
        int w;
        if (v > alpha(q))
            w = kPlusInf;
        else if (v <= alpha(0))
            w = kMinusInf;
        else {
            w = 0;
            for (int p = 1; p <= q; ++p)
                if (alpha(p - 1) < v && v <= alpha(p)) {
                    w = p;
                    break;
                }
        }
        out.phi[static_cast<size_t>(i) - 1] = w;
    }
    return out;
}

CubeSimplex transport_cs(const CubeSimplex& phi, const BoxOperator& d) {
    if (d.src_dim() != phi.n())
        throw CompositionError("transport_cs: operator source dimension " +
                               std::to_string(d.src_dim()) + ", simplex lives in dimension " +
                               std::to_string(phi.n()));
    const int r = phi.r;
    // Push the vertex path of phi through the operator and read the switch
    // level of each target coordinate back off.
    std::vector<Vertex> path;
    path.reserve(static_cast<size_t>(r) + 1);
    for (int q = 0; q <= r; ++q) {
        Vertex v;
        v.coords.resize(static_cast<size_t>(phi.n()));
        for (int i = 1; i <= phi.n(); ++i)
            v.coords[static_cast<size_t>(i) - 1] = q >= phi(i) ? 1 : 0;
        path.push_back(d.evaluate(v));
    }
    const int k = d.tgt_dim();
    CubeSimplex out{r, std::vector<int>(static_cast<size_t>(k))};
    for (int i = 0; i < k; ++i) {
        if (path[0].coords[static_cast<size_t>(i)] == 1)
            out.phi[static_cast<size_t>(i)] = kMinusInf;
        else if (path[static_cast<size_t>(r)].coords[static_cast<size_t>(i)] == 0)
            out.phi[static_cast<size_t>(i)] = kPlusInf;
        else
            for (int q = 1; q <= r; ++q)
                if (path[static_cast<size_t>(q)].coords[static_cast<size_t>(i)] == 1) {
                    out.phi[static_cast<size_t>(i)] = q;
                    break;
                }
    }
    return out;
}

bool is_marked_tp(const CubeSimplex& phi) {
    // greedy left-to-right witness search; unmarked iff every level is found
    int p = 1;
    for (int i = 1; i <= phi.n() && p <= phi.r; ++i)
        if (phi(i) == p) ++p;
    return p <= phi.r;
}

int diagonality(const CubeSimplex& phi) {
    int finite = 0;
    for (int v : phi.phi)
        if (finite_slot(v)) ++finite;
    return finite - phi.r;
}

std::set<std::pair<int, int>> disorder(const CubeSimplex& phi) {
    std::set<std::pair<int, int>> out;
    for (int i = 1; i <= phi.n(); ++i)
        for (int j = i + 1; j <= phi.n(); ++j)
            if (phi(i) < phi(j)) out.insert({i, j});
    return out;
}

StrategyState strategy_lift(const CubeSimplex& phi) {
    if (diagonality(phi) < 1)
        throw ParameterError("strategy_lift: no pivot, diagonality is " +
                             std::to_string(diagonality(phi)));
    StrategyState st;
    st.phi = phi;
    for (int p = 1; st.p == 0 && p <= phi.r; ++p) {
        int count = 0, least = 0;
        for (int i = 1; i <= phi.n(); ++i)
            if (phi(i) == p) {
                ++count;
                if (least == 0) least = i;
            }
        if (count >= 2) {
            st.p = p;
            st.i = least;
        }
    }
    st.lifted = CubeSimplex{phi.r + 1, phi.phi};
    for (int i = 1; i <= phi.n(); ++i) {
        const int v = phi(i);
        const bool bump = (finite_slot(v) && v > st.p) || v == kPlusInf || i == st.i;
        st.lifted.phi[static_cast<size_t>(i) - 1] = finite_slot(v) ? v + (bump ? 1 : 0) : v;
    }
    return st;
}

// --- the functor ---

CellId Triangulation::id_of(CellId cube, const CubeSimplex& phi) const {
    const auto it = index_.find({cube, phi});
    if (it == index_.end())
        throw IntegrityError("triangulation has no cell " + base_.cell(cube).name + "/" +
                             phi.to_string());
    return it->second;
}

Simplex Triangulation::value(CellId cube, CubeSimplex phi) const {
    if (phi.n() != base_.cell(cube).dim)
        throw CompositionError("value: simplex lives in dimension " + std::to_string(phi.n()) +
                               ", cell " + base_.cell(cube).name + " has dimension " +
                               std::to_string(base_.cell(cube).dim));
    phi.is_nondegenerate(); // range-checks the slots
    SimplicialOperator total = SimplicialOperator::identity(phi.r);
    for (;;) {
        // strip the least constant coordinate into the matching cube face
        int slot = 0;
        for (int i = 1; i <= phi.n() && slot == 0; ++i)
            if (!finite_slot(phi(i))) slot = i;
        if (slot != 0) {
            const Cube f = base_.face(cube, slot, phi(slot) == kPlusInf ? 0 : 1);
            CubeSimplex rest{phi.r, phi.phi};
            rest.phi.erase(rest.phi.begin() + (slot - 1));
            phi = transport_cs(rest, f.down);
            cube = f.cell;
            continue;
        }
        // factor the least missed level out as a simplicial degeneracy
        std::vector<char> hit(static_cast<size_t>(phi.r) + 1, 0);
        for (int v : phi.phi) hit[static_cast<size_t>(v)] = 1;
        int missed = 0;
        for (int p = 1; p <= phi.r && missed == 0; ++p)
            if (!hit[static_cast<size_t>(p)]) missed = p;
        if (missed != 0) {
            for (int& v : phi.phi)
                if (v > missed) --v;
            total = compose(SimplicialOperator::degeneracy(phi.r - 1, missed - 1), total);
            --phi.r;
            continue;
        }
        break;
    }
    return Simplex{total, id_of(cube, phi)};
}

Triangulation triangulate_full(const MarkedCubicalSet& x, bool reflect) {
    Triangulation t;
    t.base_ = x;
    for (int r = 0; r <= x.top_dim(); ++r)
        for (CellId c = 0; c < x.cell_count(); ++c) {
            const int n = x.cell(c).dim;
            for (const CubeSimplex& phi : interior_simplices(n, r)) {
                const bool marked =
                    is_marked_tp(phi) || (x.is_marked(c) && phi == CubeSimplex::iota(n));
                const CellId id =
                    t.object.add_cell(x.cell(c).name + "/" + phi.to_string(), r, marked);
                t.cube_of_.push_back(c);
                t.simplex_of_.push_back(phi);
                t.index_[{c, phi}] = id;
            }
        }
    for (CellId s = 0; s < t.object.cell_count(); ++s) {
        const int r = t.object.cell(s).dim;
        if (r == 0) continue;
        for (int j = 0; j <= r; ++j)
            t.object.set_face(
                s, j, t.value(t.cube_of(s), act_cs(t.simplex_of(s), SimplicialOperator::face(r, j))));
    }
    t.object.validate();
    if (reflect) t.object = precomplicial_reflect(t.object);
    return t;
}

MarkedSimplicialSet triangulate(const MarkedCubicalSet& x, bool reflect) {
    return triangulate_full(x, reflect).object;
}

SimplicialMap triangulate_map(const PresheafMap& f, bool reflect) {
    const Triangulation src = triangulate_full(f.src, reflect);
    const Triangulation tgt = triangulate_full(f.tgt, reflect);
    SimplicialMap out;
    out.src = src.object;
    out.tgt = tgt.object;
    for (CellId s = 0; s < src.object.cell_count(); ++s) {
        const Cube img = f.apply(src.cube_of(s));
        out.assign.push_back(tgt.value(img.cell, transport_cs(src.simplex_of(s), img.down)));
    }
    return out;
}

ComparisonResult monoidal_comparison(const MarkedCubicalSet& x, const MarkedCubicalSet& y,
                                     TensorMode mode) {
    if (mode == TensorMode::geometric)
        throw ParameterError("monoidal_comparison: no marked comparison for the geometric mode");
    const MarkedCubicalSet xy = tensor(x, y, mode);
    const Triangulation txy = triangulate_full(xy, true);
    const Triangulation tx = triangulate_full(x, true);
    const Triangulation ty = triangulate_full(y, true);
    const MarkedSimplicialSet tensor_t =
        mode == TensorMode::lax ? verity_gray(tx.object, ty.object)
                                : product(tx.object, ty.object);

    ComparisonResult res;
    res.map.src = txy.object;
    res.map.tgt = precomplicial_reflect(tensor_t);
    const int yn = y.cell_count();
    for (CellId s = 0; s < txy.object.cell_count(); ++s) {
        const CellId pair = txy.cube_of(s);
        const CellId a = pair / yn, b = pair % yn;
        if (xy.cell(pair).name != x.cell(a).name + "|" + y.cell(b).name)
            throw IntegrityError("tensor cell layout does not match the pair encoding at " +
                                 xy.cell(pair).name);
        const CubeSimplex& phi = txy.simplex_of(s);
        const int k = x.cell(a).dim;
        CubeSimplex left{phi.r, std::vector<int>(phi.phi.begin(), phi.phi.begin() + k)};
        CubeSimplex right{phi.r, std::vector<int>(phi.phi.begin() + k, phi.phi.end())};
        const JointFactor jf = joint_factor(tx.value(a, left), ty.value(b, right));
        const auto cell = res.map.tgt.find(tensor_cell_name(tx.object, ty.object, jf.x, jf.y));
        if (!cell)
            throw IntegrityError("comparison target lacks the pair " +
                                 tensor_cell_name(tx.object, ty.object, jf.x, jf.y));
        res.map.assign.push_back(Simplex{jf.epi, *cell});
    }
    res.map.validate();
    res.iso = res.map.is_iso();
    return res;
}

} // namespace comical
