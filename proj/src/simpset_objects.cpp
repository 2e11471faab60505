#include "comical/simpset.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace comical {

namespace {

std::string vertex_string(const std::vector<int>& verts) {
    std::string s;
    for (int v : verts) s += static_cast<char>('0' + v);
    return s;
}

// Nonempty subsets of {0..n} in dimension-ascending, then lexicographic order.
std::vector<std::vector<int>> all_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int m = 0; m <= n; ++m) {
        std::vector<int> pick;
        const std::function<void(int)> rec = [&](int lo) {
            if (static_cast<int>(pick.size()) == m + 1) {
                out.push_back(pick);
                return;
            }
            for (int v = lo; v <= n; ++v) {
                pick.push_back(v);
                rec(v + 1);
                pick.pop_back();
            }
        };
        rec(0);
    }
    return out;
}

std::vector<int> admissible_triple(int n, int k) {
    std::vector<int> t;
    for (int v : {k - 1, k, k + 1})
        if (v >= 0 && v <= n) t.push_back(v);
    return t;
}

bool contains_all(const std::vector<int>& verts, const std::vector<int>& t) {
    return std::includes(verts.begin(), verts.end(), t.begin(), t.end());
}

MarkedSimplicialSet simplex_with_marking(
    int n, const std::function<bool(const std::vector<int>&)>& marked) {
    if (n < 0 || n > 9) throw ParameterError("standard simplices support 0 <= n <= 9");
    MarkedSimplicialSet s;
    const auto subsets = all_subsets(n);
    for (const auto& verts : subsets) {
        const int dim = static_cast<int>(verts.size()) - 1;
        s.add_cell(vertex_string(verts), dim, dim >= 1 && marked(verts));
    }
    for (const auto& verts : subsets) {
        const int dim = static_cast<int>(verts.size()) - 1;
        if (dim < 1) continue;
        const CellId c = *s.find(vertex_string(verts));
        for (int j = 0; j <= dim; ++j) {
            std::vector<int> rest = verts;
            rest.erase(rest.begin() + j);
            s.set_face(c, j,
                       Simplex{SimplicialOperator::identity(dim - 1), *s.find(vertex_string(rest))});
        }
    }
    return s;
}

void check_complicial_range(int n, int k) {
    if (n < 1 || k < 0 || k > n)
        throw ParameterError("complicial objects need n >= 1 and 0 <= k <= n");
}

} // namespace

MarkedSimplicialSet standard_simplex(int n) {
    return simplex_with_marking(n, [](const std::vector<int>&) { return false; });
}

MarkedSimplicialSet marker_simplex(int n) {
    if (n < 1) throw ParameterError("marker_simplex needs n >= 1");
    return simplex_with_marking(
        n, [n](const std::vector<int>& v) { return static_cast<int>(v.size()) == n + 1; });
}

MarkedSimplicialSet complicial_simplex(int n, int k) {
    check_complicial_range(n, k);
    const std::vector<int> t = admissible_triple(n, k);
    return simplex_with_marking(n, [t](const std::vector<int>& v) { return contains_all(v, t); });
}

MarkedSimplicialSet complicial_horn(int n, int k) {
    check_complicial_range(n, k);
    const MarkedSimplicialSet full = complicial_simplex(n, k);
    std::vector<int> missing; // the δₖ-face vertex set
    for (int v = 0; v <= n; ++v)
        if (v != k) missing.push_back(v);
    MarkedSimplicialSet horn;
    std::vector<bool> keep(static_cast<size_t>(full.cell_count()), true);
    keep[static_cast<size_t>(*full.find(vertex_string(missing)))] = false;
    std::vector<int> all(static_cast<size_t>(n) + 1);
    for (int v = 0; v <= n; ++v) all[static_cast<size_t>(v)] = v;
    keep[static_cast<size_t>(*full.find(vertex_string(all)))] = false;
    for (CellId c = 0; c < full.cell_count(); ++c)
        if (keep[static_cast<size_t>(c)])
            horn.add_cell(full.cell(c).name, full.cell(c).dim, full.cell(c).marked);
    for (CellId c = 0; c < full.cell_count(); ++c) {
        if (!keep[static_cast<size_t>(c)] || full.cell(c).dim < 1) continue;
        const CellId h = *horn.find(full.cell(c).name);
        for (int j = 0; j <= full.cell(c).dim; ++j) {
            const Simplex f = full.face(c, j);
            horn.set_face(h, j, Simplex{f.down, *horn.find(full.cell(f.cell).name)});
        }
    }
    return horn;
}

MarkedSimplicialSet prime_simplex(int n, int k) {
    check_complicial_range(n, k);
    const std::vector<int> t = admissible_triple(n, k);
    return simplex_with_marking(n, [n, k, t](const std::vector<int>& v) {
        if (contains_all(v, t)) return true;
        // the horn's (n−1)-faces are marked by the truncation leg
        if (static_cast<int>(v.size()) != n) return false;
        for (int j = 0; j <= n; ++j)
            if (j != k && std::find(v.begin(), v.end(), j) == v.end()) return true;
        return false;
    });
}

MarkedSimplicialSet double_prime_simplex(int n, int k) {
    check_complicial_range(n, k);
    if (n == 1) return complicial_simplex(n, k);
    return truncate_s(complicial_simplex(n, k), n - 2);
}

SimplicialMap horn_inclusion_s(int n, int k) {
    SimplicialMap f;
    f.src = complicial_horn(n, k);
    f.tgt = complicial_simplex(n, k);
    for (CellId c = 0; c < f.src.cell_count(); ++c)
        f.assign.push_back(Simplex{SimplicialOperator::identity(f.src.cell(c).dim),
                                   *f.tgt.find(f.src.cell(c).name)});
    return f;
}

SimplicialMap marking_extension_s(int n, int k) {
    SimplicialMap f;
    f.src = prime_simplex(n, k);
    f.tgt = double_prime_simplex(n, k);
    for (CellId c = 0; c < f.src.cell_count(); ++c)
        f.assign.push_back(Simplex{SimplicialOperator::identity(f.src.cell(c).dim), c});
    return f;
}

// --- products and the Verity Gray tensor ---

namespace {

using PairKey = std::tuple<CellId, std::vector<int>, CellId, std::vector<int>>;
using PairTable = std::map<PairKey, CellId>;

std::string digits(const SimplicialOperator& a) {
    std::string s;
    for (int v : a.image()) s += static_cast<char>('0' + v);
    return s;
}

bool jointly_injective(const SimplicialOperator& s, const SimplicialOperator& t) {
    for (int i = 1; i <= s.src_dim(); ++i)
        if (s(i) == s(i - 1) && t(i) == t(i - 1)) return false;
    return true;
}

// EZ form of the pair (x·sx, y·sy): extract the largest common degeneracy.
struct JointEZ {
    SimplicialOperator rho;
    PairKey key;
};

JointEZ joint_ez(const Simplex& sx, const Simplex& sy) {
    const int m = sx.down.src_dim();
    std::vector<int> rho(static_cast<size_t>(m) + 1, 0);
    for (int i = 1; i <= m; ++i)
        rho[static_cast<size_t>(i)] =
            rho[static_cast<size_t>(i) - 1] +
            ((sx.down(i) > sx.down(i - 1) || sy.down(i) > sy.down(i - 1)) ? 1 : 0);
    const int r = rho[static_cast<size_t>(m)];
    const SimplicialOperator rho_op = SimplicialOperator::from_image(r, std::move(rho));
    const SimplicialOperator s = section(rho_op);
    return JointEZ{rho_op, PairKey{sx.cell, compose(sx.down, s).image(), sy.cell,
                                   compose(sy.down, s).image()}};
}

bool gray_marked(const MarkedSimplicialSet& a, const MarkedSimplicialSet& b, CellId x,
                 const SimplicialOperator& sx, CellId y, const SimplicialOperator& sy) {
    const int n = sx.src_dim();
    for (int i = 0; i <= n; ++i) {
        const bool front_marked =
            a.is_marked(a.act(x, compose(sx, SimplicialOperator::front(i, n - i))));
        const bool back_marked =
            b.is_marked(b.act(y, compose(sy, SimplicialOperator::back(i, n - i))));
        if (!front_marked && !back_marked) return false; // not i-cloven
    }
    return true;
}

MarkedSimplicialSet build_product(const MarkedSimplicialSet& a, const MarkedSimplicialSet& b,
                                  SimplicialTensor mode, PairTable* table_out) {
    MarkedSimplicialSet p;
    PairTable table;
    const int topn = a.top_dim() + b.top_dim();
    for (int n = 0; n <= topn; ++n) {
        for (CellId x = 0; x < a.cell_count(); ++x) {
            const int px = a.cell(x).dim;
            if (px > n) continue;
            for (const SimplicialOperator& sx : all_down_operators_s(n, px)) {
                for (CellId y = 0; y < b.cell_count(); ++y) {
                    const int py = b.cell(y).dim;
                    if (py > n || px + py < n) continue;
                    for (const SimplicialOperator& sy : all_down_operators_s(n, py)) {
                        if (!jointly_injective(sx, sy)) continue;
                        const std::string name = a.cell(x).name + ":" + digits(sx) + "|" +
                                                 b.cell(y).name + ":" + digits(sy);
                        bool marked = false;
                        if (n >= 1) {
                            if (mode == SimplicialTensor::product)
                                marked = a.is_marked(Simplex{sx, x}) && b.is_marked(Simplex{sy, y});
                            else
                                marked = gray_marked(a, b, x, sx, y, sy);
                        }
                        const CellId id = p.add_cell(name, n, marked);
                        table[PairKey{x, sx.image(), y, sy.image()}] = id;
                    }
                }
            }
        }
    }
    // face tables via componentwise action followed by joint renormalization
    for (const auto& [key, id] : table) {
        const auto& [x, sximg, y, syimg] = key;
        const int n = p.cell(id).dim;
        if (n < 1) continue;
        const SimplicialOperator sx = SimplicialOperator::from_image(a.cell(x).dim, sximg);
        const SimplicialOperator sy = SimplicialOperator::from_image(b.cell(y).dim, syimg);
        for (int j = 0; j <= n; ++j) {
            const SimplicialOperator dj = SimplicialOperator::face(n, j);
            const JointEZ ez = joint_ez(a.act(x, compose(sx, dj)), b.act(y, compose(sy, dj)));
            p.set_face(id, j, Simplex{ez.rho, table.at(ez.key)});
        }
    }
    if (table_out) *table_out = std::move(table);
    return p;
}

} // namespace

MarkedSimplicialSet product(const MarkedSimplicialSet& s, const MarkedSimplicialSet& t) {
    return build_product(s, t, SimplicialTensor::product, nullptr);
}

MarkedSimplicialSet verity_gray(const MarkedSimplicialSet& s, const MarkedSimplicialSet& t) {
    return build_product(s, t, SimplicialTensor::gray, nullptr);
}

JointFactor joint_factor(const Simplex& x, const Simplex& y) {
    const JointEZ ez = joint_ez(x, y);
    const SimplicialOperator s = section(ez.rho);
    return JointFactor{ez.rho, Simplex{compose(x.down, s), x.cell},
                       Simplex{compose(y.down, s), y.cell}};
}

std::string tensor_cell_name(const MarkedSimplicialSet& a, const MarkedSimplicialSet& b,
                             const Simplex& x, const Simplex& y) {
    return a.cell(x.cell).name + ":" + digits(x.down) + "|" + b.cell(y.cell).name + ":" +
           digits(y.down);
}

SimplicialMap tensor_map_s(const SimplicialMap& f, const SimplicialMap& g, SimplicialTensor t) {
    SimplicialMap h;
    PairTable ts, tt;
    h.src = build_product(f.src, g.src, t, &ts);
    h.tgt = build_product(f.tgt, g.tgt, t, &tt);
    h.assign.assign(static_cast<size_t>(h.src.cell_count()), Simplex{});
    for (const auto& [key, id] : ts) {
        const auto& [x, sximg, y, syimg] = key;
        const Simplex fx = f.apply(x);
        const Simplex gy = g.apply(y);
        const SimplicialOperator sx = SimplicialOperator::from_image(f.src.cell(x).dim, sximg);
        const SimplicialOperator sy = SimplicialOperator::from_image(g.src.cell(y).dim, syimg);
        const JointEZ ez = joint_ez(Simplex{compose(fx.down, sx), fx.cell},
                                    Simplex{compose(gy.down, sy), gy.cell});
        h.assign[static_cast<size_t>(id)] = Simplex{ez.rho, tt.at(ez.key)};
    }
    return h;
}

SLeibnizResult leibniz_s(const SimplicialMap& f, const SimplicialMap& g, SimplicialTensor t) {
    if (!f.is_mono() || !g.is_mono())
        throw ParameterError("leibniz_s: both arguments must be monomorphisms");
    const SimplicialMap fb = tensor_map_s(f, identity_map(g.src), t);
    const SimplicialMap ag = tensor_map_s(identity_map(f.src), g, t);
    SLeibnizResult r{pushout_s(fb, ag), SimplicialMap{}};
    const SimplicialMap u = tensor_map_s(identity_map(f.tgt), g, t);
    const SimplicialMap v = tensor_map_s(f, identity_map(g.tgt), t);
    r.induced = factor_through_pushout_s(r.corner, u, v);
    return r;
}

// --- pre-complicial reflection ---

namespace {

// Injective operators [m]→[n] with m <= n−2 whose image contains the triple
// {k−1,k,k+1}∩[n]; these pick out the lower-dimensional marked faces of Δ'ⁿₖ.
std::vector<SimplicialOperator> admissible_face_ops(int n, int k) {
    const std::vector<int> t = admissible_triple(n, k);
    std::vector<SimplicialOperator> out;
    std::vector<int> pick;
    const std::function<void(int)> rec = [&](int lo) {
        const int sz = static_cast<int>(pick.size());
        if (sz >= static_cast<int>(t.size()) && sz <= n - 1 && contains_all(pick, t))
            out.push_back(SimplicialOperator::from_image(n, pick));
        if (sz >= n - 1) return;
        for (int v = lo; v <= n; ++v) {
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace

MarkedSimplicialSet precomplicial_reflect(const MarkedSimplicialSet& x) {
    MarkedSimplicialSet y = x;
    // Degenerate top simplices never fire the rule: a degenerate z = w·σₗ has
    // z·δⱼ = w for the second j in {ℓ, ℓ+1}, so the hypotheses already demand
    // the conclusion.  Hence scanning non-degenerate cells suffices.
    bool changed = true;
    while (changed) {
        changed = false;
        for (CellId z = 0; z < y.cell_count(); ++z) {
            const int n = y.cell(z).dim;
            if (n < 2 || !y.is_marked(z)) continue;
            for (int k = 0; k <= n; ++k) {
                const Simplex target = y.face(z, k);
                if (y.is_marked(target)) continue;
                bool ok = true;
                for (int j = 0; j <= n && ok; ++j)
                    if (j != k && !y.is_marked(y.face(z, j))) ok = false;
                if (ok)
                    for (const SimplicialOperator& al : admissible_face_ops(n, k)) {
                        if (!y.is_marked(y.act(z, al))) {
                            ok = false;
                            break;
                        }
                    }
                if (ok) {
                    y.set_marked(target.cell, true);
                    changed = true;
                }
            }
        }
    }
    return y;
}

} // namespace comical
