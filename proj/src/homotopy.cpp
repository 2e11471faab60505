#include "comical/homotopy.hpp"

#include "comical/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace comical {

namespace {

// Faces of a square in reading order: left d(1,0), right d(1,1), top d(2,0),
// bottom d(2,1).  Left and top share the initial vertex.
struct Frame {
    Cube l, r, t, b;
    bool operator==(const Frame&) const = default;
};

Frame frame_of(const MarkedCubicalSet& x, const Cube& s) {
    return Frame{x.act(s, BoxOperator::face(2, 1, 0)), x.act(s, BoxOperator::face(2, 1, 1)),
                 x.act(s, BoxOperator::face(2, 2, 0)), x.act(s, BoxOperator::face(2, 2, 1))};
}

Frame pattern_frame(HomotopyPattern kind, const Cube& f, const Cube& g, const Cube& ix,
                    const Cube& iy) {
    switch (kind) {
        case HomotopyPattern::phi: return Frame{g, iy, f, iy};
        case HomotopyPattern::phi_prime: return Frame{f, iy, g, iy};
        case HomotopyPattern::chi: return Frame{f, g, ix, iy};
        case HomotopyPattern::chi_prime: return Frame{g, f, ix, iy};
        case HomotopyPattern::psi: return Frame{ix, iy, f, g};
        case HomotopyPattern::psi_prime: return Frame{ix, iy, g, f};
        case HomotopyPattern::omega: return Frame{ix, f, ix, g};
        case HomotopyPattern::omega_prime: return Frame{ix, g, ix, f};
    }
    throw ParameterError("pattern_frame: unknown pattern");
}

CellId endpoint(const MarkedCubicalSet& x, const Cube& f, int e) {
    return x.act(f, BoxOperator::face(1, 1, e)).cell;
}

Cube degenerate_edge(CellId v) { return Cube{BoxOperator::degeneracy(1, 1), v}; }

std::string cube_label(const MarkedCubicalSet& x, const Cube& c) {
    std::string s = x.cell(c.cell).name;
    if (c.is_degenerate()) s += "." + c.down.to_string();
    return s;
}

void require_edge(const MarkedCubicalSet& x, const Cube& f, const char* who) {
    if (f.down.src_dim() != 1)
        throw ParameterError(std::string(who) + ": '" + cube_label(x, f) +
                             "' is not 1-dimensional");
}

// Marked squares with their boundaries, computed once per search.
std::vector<std::pair<Frame, Cube>> marked_frames(const MarkedCubicalSet& x) {
    std::vector<std::pair<Frame, Cube>> out;
    for (const Cube& s : elements_of_dim(x, 2))
        if (x.is_marked(s)) out.emplace_back(frame_of(x, s), s);
    return out;
}

std::optional<Cube> scan(const std::vector<std::pair<Frame, Cube>>& squares, const Frame& want) {
    for (const auto& [frame, s] : squares)
        if (frame == want) return s;
    return std::nullopt;
}

} // namespace

std::string to_string(HomotopyPattern kind) {
    switch (kind) {
        case HomotopyPattern::phi: return "phi";
        case HomotopyPattern::phi_prime: return "phi'";
        case HomotopyPattern::chi: return "chi";
        case HomotopyPattern::chi_prime: return "chi'";
        case HomotopyPattern::psi: return "psi";
        case HomotopyPattern::psi_prime: return "psi'";
        case HomotopyPattern::omega: return "omega";
        case HomotopyPattern::omega_prime: return "omega'";
    }
    throw ParameterError("to_string: unknown pattern");
}

std::vector<Cube> elements_of_dim(const MarkedCubicalSet& x, int n) {
    if (n < 0) throw ParameterError("elements_of_dim: negative dimension");
    std::vector<Cube> out;
    for (int m = 0; m <= n; ++m)
        for (const BoxOperator& down : all_down_operators(n, m))
            for (CellId c : x.cells_of_dim(m)) out.push_back(Cube{down, c});
    return out;
}

std::optional<Cube> pattern_square(const MarkedCubicalSet& x, HomotopyPattern kind, const Cube& f,
                                   const Cube& g) {
    require_edge(x, f, "pattern_square");
    require_edge(x, g, "pattern_square");
    const CellId sx = endpoint(x, f, 0), sy = endpoint(x, f, 1);
    if (sx != endpoint(x, g, 0) || sy != endpoint(x, g, 1))
        throw ParameterError("pattern_square: '" + cube_label(x, f) + "' and '" +
                             cube_label(x, g) + "' are not parallel");
    const Frame want = pattern_frame(kind, f, g, degenerate_edge(sx), degenerate_edge(sy));
    return scan(marked_frames(x), want);
}

std::optional<HomotopyWitness> are_homotopic(const MarkedCubicalSet& x, const Cube& f,
                                             const Cube& g) {
    require_edge(x, f, "are_homotopic");
    require_edge(x, g, "are_homotopic");
    const CellId sx = endpoint(x, f, 0), sy = endpoint(x, f, 1);
    if (sx != endpoint(x, g, 0) || sy != endpoint(x, g, 1))
        throw ParameterError("are_homotopic: '" + cube_label(x, f) + "' and '" +
                             cube_label(x, g) + "' are not parallel");
    const std::vector<std::pair<Frame, Cube>> squares = marked_frames(x);
    const Cube ix = degenerate_edge(sx), iy = degenerate_edge(sy);
    for (HomotopyPattern kind : kAllPatterns)
        if (std::optional<Cube> s = scan(squares, pattern_frame(kind, f, g, ix, iy)))
            return HomotopyWitness{kind, *s};
    return std::nullopt;
}

std::vector<CompositeWitness> composites(const MarkedCubicalSet& x, const Cube& f, const Cube& g) {
    require_edge(x, f, "composites");
    require_edge(x, g, "composites");
    if (endpoint(x, f, 1) != endpoint(x, g, 0))
        throw ParameterError("composites: '" + cube_label(x, g) + "' does not follow '" +
                             cube_label(x, f) + "'");
    const Cube ix = degenerate_edge(endpoint(x, f, 0));
    const Cube iz = degenerate_edge(endpoint(x, g, 1));

    std::vector<CompositeWitness> out;
    for (const auto& [frame, s] : marked_frames(x)) {
        if (frame.r == g && frame.t == f && frame.b == iz)
            out.push_back(CompositeWitness{1, 0, s, frame.l});
        if (frame.l == f && frame.t == ix && frame.b == g)
            out.push_back(CompositeWitness{1, 1, s, frame.r});
        if (frame.l == f && frame.r == iz && frame.b == g)
            out.push_back(CompositeWitness{2, 0, s, frame.t});
        if (frame.l == ix && frame.r == g && frame.t == f)
            out.push_back(CompositeWitness{2, 1, s, frame.b});
    }
    return out;
}

FiniteCategory ho1(const MarkedCubicalSet& x) {
    FiniteCategory cat;
    std::map<CellId, int> object_of;
    for (CellId v : x.cells_of_dim(0)) object_of[v] = cat.add_object(x.cell(v).name);

    const std::vector<Cube> edges = elements_of_dim(x, 1);
    const int n = static_cast<int>(edges.size());
    std::vector<CellId> src(static_cast<size_t>(n)), tgt(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        src[static_cast<size_t>(a)] = endpoint(x, edges[static_cast<size_t>(a)], 0);
        tgt[static_cast<size_t>(a)] = endpoint(x, edges[static_cast<size_t>(a)], 1);
    }

    const std::vector<std::pair<Frame, Cube>> squares = marked_frames(x);
    auto hit = [&](int a, int b) {
        const Cube ix = degenerate_edge(src[static_cast<size_t>(a)]);
        const Cube iy = degenerate_edge(tgt[static_cast<size_t>(a)]);
        for (HomotopyPattern kind : kAllPatterns)
            if (scan(squares, pattern_frame(kind, edges[static_cast<size_t>(a)],
                                            edges[static_cast<size_t>(b)], ix, iy)))
                return true;
        return false;
    };

    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<size_t>(a)] != a) a = parent[static_cast<size_t>(a)];
        return a;
    };

    std::vector<std::vector<bool>> direct(static_cast<size_t>(n),
                                          std::vector<bool>(static_cast<size_t>(n), false));
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            if (src[static_cast<size_t>(a)] != src[static_cast<size_t>(b)] ||
                tgt[static_cast<size_t>(a)] != tgt[static_cast<size_t>(b)])
                continue;
            if (!hit(a, b)) continue;
            direct[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
            direct[static_cast<size_t>(b)][static_cast<size_t>(a)] = true;
            parent[static_cast<size_t>(find(a))] = find(b);
        }

    for (int a = 0; a < n; ++a)
        if (!direct[static_cast<size_t>(a)][static_cast<size_t>(a)])
            throw IncompletenessError("ho1: no reflexivity witness for '" +
                                      cube_label(x, edges[static_cast<size_t>(a)]) + "'");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (src[static_cast<size_t>(a)] != src[static_cast<size_t>(b)] ||
                tgt[static_cast<size_t>(a)] != tgt[static_cast<size_t>(b)])
                continue;
            if (find(a) == find(b) && !direct[static_cast<size_t>(a)][static_cast<size_t>(b)])
                throw IncompletenessError(
                    "ho1: homotopy is not transitive on the given cells: '" +
                    cube_label(x, edges[static_cast<size_t>(a)]) + "' ~ '" +
                    cube_label(x, edges[static_cast<size_t>(b)]) +
                    "' only by chaining witnesses");
        }

    // One arrow per class; a class containing the degenerate edge of a
    // vertex is that vertex's identity.
    std::map<int, std::vector<int>> members;
    for (int a = 0; a < n; ++a) members[find(a)].push_back(a);
    std::map<int, int> arrow_of;
    for (const auto& [root, elems] : members) {
        int degenerate = -1;
        for (int a : elems)
            if (edges[static_cast<size_t>(a)].down == BoxOperator::degeneracy(1, 1))
                degenerate = a;
        if (degenerate >= 0) {
            arrow_of[root] = cat.identity(object_of.at(src[static_cast<size_t>(degenerate)]));
        } else {
            const int rep = elems.front();
            arrow_of[root] = cat.add_arrow(cube_label(x, edges[static_cast<size_t>(rep)]),
                                           object_of.at(src[static_cast<size_t>(rep)]),
                                           object_of.at(tgt[static_cast<size_t>(rep)]));
        }
    }

    for (const auto& [froot, felems] : members)
        for (const auto& [groot, gelems] : members) {
            if (tgt[static_cast<size_t>(felems.front())] != src[static_cast<size_t>(gelems.front())])
                continue;
            if (cat.is_identity(arrow_of.at(froot)) || cat.is_identity(arrow_of.at(groot)))
                continue; // forced by the unit law
            std::vector<int> results;
            for (int a : felems)
                for (int b : gelems)
                    for (const CompositeWitness& w :
                         composites(x, edges[static_cast<size_t>(a)], edges[static_cast<size_t>(b)])) {
                        int c = -1;
                        for (int e = 0; e < n && c < 0; ++e)
                            if (edges[static_cast<size_t>(e)] == w.result) c = find(e);
                        if (c < 0)
                            throw IntegrityError("ho1: composite face is not an element");
                        results.push_back(c);
                    }
            const std::string pair_label =
                "'" + cube_label(x, edges[static_cast<size_t>(felems.front())]) + "' then '" +
                cube_label(x, edges[static_cast<size_t>(gelems.front())]) + "'";
            if (results.empty())
                throw IncompletenessError("ho1: no composite witness for " + pair_label);
            for (int c : results)
                if (c != results.front())
                    throw IncompletenessError("ho1: composite witnesses for " + pair_label +
                                              " land in different homotopy classes");
            cat.set_composite(arrow_of.at(groot), arrow_of.at(froot),
                              arrow_of.at(results.front()));
        }

    cat.validate();
    return cat;
}

} // namespace comical
