#include "comical/suites.hpp"

#include "comical/boxcat.hpp"
#include "comical/cubeset.hpp"
#include "comical/errors.hpp"
#include "comical/gray.hpp"
#include "comical/homotopy.hpp"
#include "comical/simpset.hpp"
#include "comical/triangulate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace comical {

namespace {

// ---------------------------------------------------------------------------
// bookkeeping

struct Ctx {
    SuiteParams params;
    std::vector<CheckResult> checks;
    long long cap = 0; // 0 = unlimited
    long long nodes = 0;
    bool exhausted = false;

    explicit Ctx(const SuiteParams& p) : params(p) {
        cap = p.budget;
        if (cap == 0)
            if (const char* env = std::getenv("COMICAL_SUITE_BUDGET")) cap = std::atoll(env);
    }

    // Account for one unit (or n units) of search work; once the cap is hit
    // every later check records a skip instead of running.
    bool spend(long long n = 1) {
        nodes += n;
        if (cap > 0 && nodes > cap) exhausted = true;
        return !exhausted;
    }

    void record(std::string name, CheckStatus status, std::string detail) {
        checks.push_back({std::move(name), status, std::move(detail)});
    }
    void check(std::string name, bool ok, std::string detail_on_fail) {
        if (exhausted)
            record(std::move(name), CheckStatus::skip, "search budget exhausted");
        else
            record(std::move(name), ok ? CheckStatus::pass : CheckStatus::fail,
                   ok ? std::string() : std::move(detail_on_fail));
    }
    void skip(std::string name, std::string why) {
        record(std::move(name), CheckStatus::skip, std::move(why));
    }

    // Run a check body that reports failure by returning a nonempty string;
    // thrown engine errors also count as failures, with the message captured.
    void guarded(const std::string& name, const std::function<std::string()>& body) {
        if (exhausted) {
            skip(name, "search budget exhausted");
            return;
        }
        std::string detail;
        try {
            detail = body();
        } catch (const Error& e) {
            detail = e.what();
        }
        check(name, detail.empty(), detail);
    }

    int dim_or(int fallback) const { return params.max_dim > 0 ? params.max_dim : fallback; }
};

template <typename... Parts> std::string cat(Parts&&... parts) {
    std::ostringstream out;
    (out << ... << parts);
    return out.str();
}

// ---------------------------------------------------------------------------
// name plumbing shared by the tensor-shaped suites

// Flatten a (possibly nested) tensor cell name: "0*|*|pt" -> "0**".
std::string splice_name(const std::string& name) {
    std::string out, seg;
    auto flush = [&] {
        if (seg != "pt") out += seg;
        seg.clear();
    };
    for (char ch : name) {
        if (ch == '|')
            flush();
        else
            seg += ch;
    }
    flush();
    return out.empty() ? std::string("pt") : out;
}

// Split a cube mask into the two-factor tensor name with an m/rest cut.
std::string unsplice_name(const std::string& mask, int m) {
    const std::string a = m == 0 ? "pt" : mask.substr(0, static_cast<size_t>(m));
    const std::string b =
        mask.size() == static_cast<size_t>(m) ? "pt" : mask.substr(static_cast<size_t>(m));
    return a + "|" + b;
}

PresheafMap map_by_name(const MarkedCubicalSet& src, const MarkedCubicalSet& tgt,
                        const std::function<std::string(const std::string&)>& rename) {
    PresheafMap f{src, tgt, {}};
    f.assign.reserve(static_cast<size_t>(src.cell_count()));
    for (CellId x = 0; x < src.cell_count(); ++x) {
        const auto& data = src.cell(x);
        const std::string want = rename(data.name);
        const auto hit = tgt.find(want);
        if (!hit) throw IntegrityError("map_by_name: no target cell named " + want);
        f.assign.push_back(Cube{BoxOperator::identity(data.dim), *hit});
    }
    return f;
}

PresheafMap inclusion_by_name(const MarkedCubicalSet& src, const MarkedCubicalSet& tgt) {
    return map_by_name(src, tgt, [](const std::string& n) { return n; });
}

PresheafMap marker_inclusion(int n) {
    return inclusion_by_name(standard_cube(n), marked_cube(n));
}

bool is_regular_mono(const PresheafMap& f) {
    if (!f.is_mono()) return false;
    for (CellId x = 0; x < f.src.cell_count(); ++x)
        if (f.src.is_marked(x) != f.tgt.is_marked(f.apply(x).cell)) return false;
    return true;
}

SimplicialMap smap_by_name(const MarkedSimplicialSet& src, const MarkedSimplicialSet& tgt,
                           const std::function<std::string(const std::string&)>& rename) {
    SimplicialMap f{src, tgt, {}};
    f.assign.reserve(static_cast<size_t>(src.cell_count()));
    for (CellId x = 0; x < src.cell_count(); ++x) {
        const auto& data = src.cell(x);
        const std::string want = rename(data.name);
        const auto hit = tgt.find(want);
        if (!hit) throw IntegrityError("smap_by_name: no target cell named " + want);
        f.assign.push_back(Simplex{SimplicialOperator::identity(data.dim), *hit});
    }
    return f;
}

SimplicialMap s_inclusion_by_name(const MarkedSimplicialSet& src, const MarkedSimplicialSet& tgt) {
    return smap_by_name(src, tgt, [](const std::string& n) { return n; });
}

// ---------------------------------------------------------------------------
// boxcat-oracle: normal forms against the vertex-function semantics, plus the
// six cubical identity families.

void suite_boxcat(Ctx& ctx) {
    const int dmax = std::min(ctx.dim_or(4), 4);

    // Words of generators, length <= 4, all ambient dimensions <= dmax: the
    // normalized composite must act on vertices exactly as the word does.
    {
        std::string failure;
        long long words = 0;
        std::vector<BoxOperator> word;
        std::function<void(int, int)> grow = [&](int dim, int len) {
            if (!failure.empty()) return;
            for (const BoxOperator& g : all_generators_from(dim, dmax)) {
                if (!ctx.spend()) return;
                word.push_back(g);
                ++words;
                const BoxOperator n = compose_word(word);
                for (const Vertex& v : all_vertices(word.front().src_dim())) {
                    Vertex w = v;
                    for (const BoxOperator& step : word) w = step.evaluate(w);
                    if (!(n.evaluate(v) == w)) {
                        std::string text;
                        for (const BoxOperator& step : word)
                            text += (text.empty() ? "" : " then ") + step.to_string();
                        failure = "word " + text + " disagrees with stepwise evaluation";
                        break;
                    }
                }
                if (failure.empty() && len + 1 < 4) grow(g.tgt_dim(), len + 1);
                word.pop_back();
                if (!failure.empty()) return;
            }
        };
        for (int d = 0; d <= dmax && failure.empty(); ++d) grow(d, 0);
        ctx.check("oracle/words", failure.empty(), failure);
        ctx.check("oracle/word-count", words > 0, "no words enumerated");
    }

    // Distinct normal forms define distinct vertex functions, per hom-set.
    for (int src = 0; src <= dmax; ++src)
        for (int tgt = 0; tgt <= dmax; ++tgt) {
            if (ctx.exhausted) {
                ctx.skip(cat("oracle/injective/s", src, "t", tgt), "search budget exhausted");
                continue;
            }
            const auto ops = all_box_operators(src, tgt);
            ctx.spend(static_cast<long long>(ops.size()));
            std::set<std::vector<std::vector<int>>> tables;
            for (const BoxOperator& f : ops) {
                std::vector<std::vector<int>> table;
                for (const Vertex& v : f.vertex_table()) table.push_back(v.coords);
                tables.insert(std::move(table));
            }
            ctx.check(cat("oracle/injective/s", src, "t", tgt), tables.size() == ops.size(),
                      cat(ops.size() - tables.size(), " vertex-table collisions"));
        }

    // The six identity families, checked as equalities of both normal forms
    // and vertex tables over every admissible index at dimensions <= dmax.
    const auto both_equal = [](const BoxOperator& a, const BoxOperator& b) {
        return a == b && a.vertex_table() == b.vertex_table();
    };

    {
        std::string bad;
        for (int n = 2; n <= dmax && bad.empty(); ++n)
            for (int i = 1; i <= n - 1 && bad.empty(); ++i)
                for (int j = 1; j <= i && bad.empty(); ++j)
                    for (int e1 = 0; e1 <= 1 && bad.empty(); ++e1)
                        for (int e2 = 0; e2 <= 1; ++e2) {
                            const auto lhs = compose(BoxOperator::face(n, j, e1),
                                                     BoxOperator::face(n - 1, i, e2));
                            const auto rhs = compose(BoxOperator::face(n, i + 1, e2),
                                                     BoxOperator::face(n - 1, j, e1));
                            if (!both_equal(lhs, rhs)) {
                                bad = cat("n=", n, " i=", i, " j=", j, " e=", e1, e2);
                                break;
                            }
                        }
        ctx.check("identities/faces-faces", bad.empty(), bad);
    }
    {
        std::string bad;
        for (int n = 2; n <= dmax && bad.empty(); ++n)
            for (int i = 1; i <= n - 1 && bad.empty(); ++i)
                for (int j = 1; j <= i && j <= n - 1; ++j) {
                    const auto lhs = compose(BoxOperator::degeneracy(n - 1, i),
                                             BoxOperator::degeneracy(n, j));
                    const auto rhs = compose(BoxOperator::degeneracy(n - 1, j),
                                             BoxOperator::degeneracy(n, i + 1));
                    if (!both_equal(lhs, rhs)) {
                        bad = cat("n=", n, " i=", i, " j=", j);
                        break;
                    }
                }
        ctx.check("identities/degen-degen", bad.empty(), bad);
    }
    {
        std::string bad;
        for (int n = 1; n <= dmax && bad.empty(); ++n)
            for (int i = 1; i <= n && bad.empty(); ++i)
                for (int j = 1; j <= n && bad.empty(); ++j)
                    for (int e = 0; e <= 1; ++e) {
                        const auto lhs =
                            compose(BoxOperator::degeneracy(n, j), BoxOperator::face(n, i, e));
                        BoxOperator rhs;
                        if (j < i)
                            rhs = compose(BoxOperator::face(n - 1, i - 1, e),
                                          BoxOperator::degeneracy(n - 1, j));
                        else if (j == i)
                            rhs = BoxOperator::identity(n - 1);
                        else
                            rhs = compose(BoxOperator::face(n - 1, i, e),
                                          BoxOperator::degeneracy(n - 1, j - 1));
                        if (!both_equal(lhs, rhs)) {
                            bad = cat("n=", n, " i=", i, " j=", j, " e=", e);
                            break;
                        }
                    }
        ctx.check("identities/degen-face", bad.empty(), bad);
    }
    {
        std::string bad;
        for (int n = 2; n <= dmax && bad.empty(); ++n)
            for (int i = 1; i <= n - 1 && bad.empty(); ++i)
                for (int j = 1; j <= n - 1 && bad.empty(); ++j)
                    for (int e = 0; e <= 1; ++e) {
                        const auto lhs = compose(BoxOperator::degeneracy(n - 1, j),
                                                 BoxOperator::connection(n, i, e));
                        BoxOperator rhs;
                        if (j < i)
                            rhs = compose(BoxOperator::connection(n - 1, i - 1, e),
                                          BoxOperator::degeneracy(n, j));
                        else if (j == i)
                            rhs = compose(BoxOperator::degeneracy(n - 1, i),
                                          BoxOperator::degeneracy(n, i));
                        else
                            rhs = compose(BoxOperator::connection(n - 1, i, e),
                                          BoxOperator::degeneracy(n, j + 1));
                        if (!both_equal(lhs, rhs)) {
                            bad = cat("n=", n, " i=", i, " j=", j, " e=", e);
                            break;
                        }
                    }
        ctx.check("identities/degen-conn", bad.empty(), bad);
    }
    {
        std::string bad;
        for (int n = 3; n <= dmax && bad.empty(); ++n)
            for (int i = 1; i <= n - 1 && bad.empty(); ++i)
                for (int j = 1; j <= n - 2 && bad.empty(); ++j)
                    for (int d = 0; d <= 1 && bad.empty(); ++d)
                        for (int e = 0; e <= 1; ++e) {
                            const auto lhs = compose(BoxOperator::connection(n - 1, j, e),
                                                     BoxOperator::connection(n, i, d));
                            std::optional<BoxOperator> rhs;
                            if (j > i)
                                rhs = compose(BoxOperator::connection(n - 1, i, d),
                                              BoxOperator::connection(n, j + 1, e));
                            else if (j == i && d == e)
                                rhs = compose(BoxOperator::connection(n - 1, i, d),
                                              BoxOperator::connection(n, i + 1, d));
                            if (rhs && !both_equal(lhs, *rhs)) {
                                bad = cat("n=", n, " i=", i, " j=", j, " de=", d, e);
                                break;
                            }
                        }
        ctx.check("identities/conn-conn", bad.empty(), bad);
    }
    {
        std::string bad;
        for (int n = 2; n <= dmax && bad.empty(); ++n)
            for (int i = 1; i <= n && bad.empty(); ++i)
                for (int j = 1; j <= n - 1 && bad.empty(); ++j)
                    for (int d = 0; d <= 1 && bad.empty(); ++d)
                        for (int e = 0; e <= 1; ++e) {
                            const auto lhs = compose(BoxOperator::connection(n, j, e),
                                                     BoxOperator::face(n, i, d));
                            BoxOperator rhs;
                            if (j < i - 1)
                                rhs = compose(BoxOperator::face(n - 1, i - 1, d),
                                              BoxOperator::connection(n - 1, j, e));
                            else if (j > i)
                                rhs = compose(BoxOperator::face(n - 1, i, d),
                                              BoxOperator::connection(n - 1, j - 1, e));
                            else if (d != e)
                                rhs = BoxOperator::identity(n - 1);
                            else
                                rhs = compose(BoxOperator::face(n - 1, j, d),
                                              BoxOperator::degeneracy(n - 1, j));
                            if (!both_equal(lhs, rhs)) {
                                bad = cat("n=", n, " i=", i, " j=", j, " de=", d, e);
                                break;
                            }
                        }
        ctx.check("identities/conn-face", bad.empty(), bad);
    }
}

// ---------------------------------------------------------------------------
// boundary-products: the geometric Leibniz product of boundary and open-box
// inclusions against the standard objects, via the mask-splicing comparison.

// Compare the corner of a geometric Leibniz square with a standard subobject
// of the (m+n)-cube; empty return = success.
std::string geom_corner_matches(Ctx& ctx, const LeibnizResult& res,
                                const MarkedCubicalSet& model) {
    const MarkedCubicalSet& corner = res.corner.object;
    ctx.spend(corner.cell_count());
    if (corner.cell_count() != model.cell_count())
        return cat("corner has ", corner.cell_count(), " cells, model has ", model.cell_count());
    // the induced map must keep each corner cell at its own tensor name
    for (CellId c = 0; c < corner.cell_count(); ++c) {
        const Cube img = res.induced.apply(c);
        if (!img.down.is_identity()) return "induced map degenerates " + corner.cell(c).name;
        if (splice_name(res.induced.tgt.cell(img.cell).name) != splice_name(corner.cell(c).name))
            return "induced map moves " + corner.cell(c).name;
    }
    PresheafMap cmp = map_by_name(corner, model, splice_name);
    cmp.validate();
    if (!cmp.is_iso()) return "splice comparison is not an isomorphism";
    return {};
}

void suite_boundary_products(Ctx& ctx) {
    const int total = std::min(ctx.dim_or(5), 5);
    for (int m = 0; m <= total; ++m)
        for (int n = 0; m + n <= total; ++n) {
            ctx.guarded(cat("bdry/m", m, "n", n), [&] {
                const LeibnizResult res =
                    leibniz(boundary_inclusion(m), boundary_inclusion(n), TensorMode::geometric);
                return geom_corner_matches(ctx, res, boundary(m + n));
            });
        }
    for (int m = 1; m <= total; ++m)
        for (int n = 0; m + n <= total; ++n)
            for (int k = 1; k <= m; ++k)
                for (int e = 0; e <= 1; ++e) {
                    ctx.guarded(cat("boxl/m", m, "k", k, "e", e, "n", n), [&] {
                        const LeibnizResult res = leibniz(open_box_inclusion(m, k, e),
                                                          boundary_inclusion(n),
                                                          TensorMode::geometric);
                        return geom_corner_matches(ctx, res, open_box(m + n, k, e));
                    });
                }
    for (int m = 0; m <= total; ++m)
        for (int n = 1; m + n <= total; ++n)
            for (int k = 1; k <= n; ++k)
                for (int e = 0; e <= 1; ++e) {
                    ctx.guarded(cat("boxr/m", m, "n", n, "k", k, "e", e), [&] {
                        const LeibnizResult res = leibniz(boundary_inclusion(m),
                                                          open_box_inclusion(n, k, e),
                                                          TensorMode::geometric);
                        return geom_corner_matches(ctx, res, open_box(m + n, m + k, e));
                    });
                }
}

// ---------------------------------------------------------------------------
// tensor-power: the closed-form marking of (Δ¹)^{⊗n} against the marking
// computed by folding verity_gray, for every slot function with r <= n.

Simplex interval_simplex(const MarkedSimplicialSet& d1, int r, int v) {
    if (v == kPlusInf || v == kMinusInf) {
        const CellId cell = *d1.find(v == kPlusInf ? "0" : "1");
        return Simplex{
            SimplicialOperator::from_image(0, std::vector<int>(static_cast<size_t>(r) + 1, 0)),
            cell};
    }
    std::vector<int> img(static_cast<size_t>(r) + 1);
    for (int w = 0; w <= r; ++w) img[static_cast<size_t>(w)] = w >= v ? 1 : 0;
    return Simplex{SimplicialOperator::from_image(1, img), *d1.find("01")};
}

void suite_tensor_power(Ctx& ctx) {
    const int nmax = std::min(ctx.dim_or(4), 4);
    const MarkedSimplicialSet d1 = standard_simplex(1);
    std::vector<MarkedSimplicialSet> powers(static_cast<size_t>(nmax) + 1);
    powers[1] = d1;
    for (int k = 2; k <= nmax; ++k)
        powers[static_cast<size_t>(k)] = verity_gray(powers[static_cast<size_t>(k) - 1], d1);

    for (int n = 1; n <= nmax; ++n) {
        ctx.guarded(cat("power/n", n), [&]() -> std::string {
            for (int r = 0; r <= n; ++r) {
                // odometer over slot values {1..r, -inf, +inf}
                std::vector<int> levels;
                for (int v = 1; v <= r; ++v) levels.push_back(v);
                levels.push_back(kMinusInf);
                levels.push_back(kPlusInf);
                std::vector<size_t> pick(static_cast<size_t>(n), 0);
                while (true) {
                    if (!ctx.spend()) return {};
                    std::vector<int> phi(static_cast<size_t>(n));
                    for (int i = 0; i < n; ++i)
                        phi[static_cast<size_t>(i)] = levels[pick[static_cast<size_t>(i)]];
                    const CubeSimplex cs{r, phi};

                    Simplex cur = interval_simplex(d1, r, phi[0]);
                    bool ok = true;
                    for (int k = 2; k <= n && ok; ++k) {
                        const Simplex nxt =
                            interval_simplex(d1, r, phi[static_cast<size_t>(k) - 1]);
                        const JointFactor jf = joint_factor(cur, nxt);
                        const auto cell = powers[static_cast<size_t>(k)].find(tensor_cell_name(
                            powers[static_cast<size_t>(k) - 1], d1, jf.x, jf.y));
                        if (!cell) {
                            ok = false;
                            break;
                        }
                        cur = Simplex{jf.epi, *cell};
                    }
                    if (!ok) return "no tensor cell for " + cs.to_string();
                    const bool via_gray = powers[static_cast<size_t>(n)].is_marked(cur);
                    if (via_gray != is_marked_tp(cs))
                        return cat("marking mismatch at ", cs.to_string(), ": gray=", via_gray,
                                   " closed-form=", !via_gray);

                    size_t i = 0;
                    while (i < pick.size() && ++pick[i] == levels.size()) pick[i++] = 0;
                    if (i == pick.size()) break;
                }
            }
            return {};
        });
    }
}

// ---------------------------------------------------------------------------
// strong-monoidal: the triangulation comparison map is invertible on every
// pair from the small cube/marked-cube family, in both marked modes.

void suite_strong_monoidal(Ctx& ctx) {
    std::vector<std::pair<std::string, MarkedCubicalSet>> pool;
    pool.emplace_back("c0", standard_cube(0));
    pool.emplace_back("c1", standard_cube(1));
    pool.emplace_back("c2", standard_cube(2));
    pool.emplace_back("m1", marked_cube(1));
    pool.emplace_back("m2", marked_cube(2));

    for (const auto& [an, a] : pool)
        for (const auto& [bn, b] : pool)
            for (TensorMode mode : {TensorMode::lax, TensorMode::pseudo}) {
                const char* mn = mode == TensorMode::lax ? "lax" : "pseudo";
                ctx.guarded(cat("pair/", an, "x", bn, "/", mn), [&]() -> std::string {
                    ctx.spend(100);
                    const ComparisonResult res = monoidal_comparison(a, b, mode);
                    if (!res.iso) return "comparison map is not invertible";
                    return {};
                });
            }
}

// ---------------------------------------------------------------------------
// table1: the eight horn/marking-extension pushouts filtering the inclusion
// T(open box) -> T(comical cube) at (3,2,0), against the stated interiors,
// missing faces, and endpoint.

struct T1Row {
    int n, k;
    bool truncated; // rows using trunc₁Λ ↪ Δ'' instead of Λ ↪ Δ
    const char* interior;
    const char* missing;
};

constexpr T1Row kTable1Rows[] = {
    {2, 1, false, "211", "111"}, {2, 1, false, "2+1", "1+1"}, {3, 2, false, "312", "212"},
    {3, 1, false, "213", "112"}, {3, 2, false, "123", "122"}, {3, 2, true, "321", "221"},
    {3, 1, true, "231", "121"},  {3, 3, false, "132", "1+2"},
};

// Sequence notation ("2+1") to the triangulated cell name ("*0*/21").
std::string seq_cell_name(const std::string& seq) {
    std::string mask, digits;
    for (char ch : seq) {
        if (ch == '+')
            mask += '0';
        else if (ch == '-')
            mask += '1';
        else {
            mask += '*';
            digits += ch;
        }
    }
    return mask + "/" + digits;
}

std::vector<int> vertex_digits(const std::string& name) {
    std::vector<int> img;
    for (char ch : name) img.push_back(ch - '0');
    return img;
}

void suite_table1(Ctx& ctx) {
    const MarkedSimplicialSet B = triangulate(comical_cube(3, 2, 0));
    const MarkedSimplicialSet A0 = triangulate(comical_open_box(3, 2, 0));
    ctx.spend(B.cell_count() + A0.cell_count());

    // the base is a regular subset: same names, same markings
    ctx.guarded("base/regular", [&]() -> std::string {
        for (CellId x = 0; x < A0.cell_count(); ++x) {
            const auto hit = B.find(A0.cell(x).name);
            if (!hit) return "missing in B: " + A0.cell(x).name;
            if (A0.is_marked(x) != B.is_marked(*hit))
                return "marking differs at " + A0.cell(x).name;
        }
        return {};
    });

    MarkedSimplicialSet cur = A0;
    SimplicialMap u = s_inclusion_by_name(A0, B);
    std::map<CellId, CellId> inv; // B cell -> current filtration cell
    for (CellId x = 0; x < A0.cell_count(); ++x) inv[u.apply(x).cell] = x;

    std::set<CellId> added; // B cells introduced across the rows
    std::set<std::string> marked_expected;
    bool aborted = false;

    for (int s = 1; s <= 8; ++s) {
        const T1Row& row = kTable1Rows[s - 1];
        const std::string row_name = cat("row", s, "/");
        if (aborted || ctx.exhausted) {
            ctx.skip(row_name + "pushout", aborted ? "earlier row failed" : "budget exhausted");
            continue;
        }
        marked_expected.insert(seq_cell_name(row.interior));
        if (row.truncated) marked_expected.insert(seq_cell_name(row.missing));

        ctx.guarded(row_name + "pushout", [&]() -> std::string {
            const auto int_hit = B.find(seq_cell_name(row.interior));
            const auto miss_hit = B.find(seq_cell_name(row.missing));
            if (!int_hit || !miss_hit) {
                aborted = true;
                return "stated interior/missing cell absent from B";
            }

            MarkedSimplicialSet horn = complicial_horn(row.n, row.k);
            MarkedSimplicialSet filler = complicial_simplex(row.n, row.k);
            if (row.truncated) {
                horn = truncate_s(horn, 1);
                filler = double_prime_simplex(row.n, row.k);
            }
            const SimplicialMap incl = s_inclusion_by_name(horn, filler);

            // characteristic map of the interior: vertex strings pick faces
            SimplicialMap chi{filler, B, {}};
            for (CellId x = 0; x < filler.cell_count(); ++x)
                chi.assign.push_back(B.act(
                    *int_hit, SimplicialOperator::from_image(row.n,
                                                             vertex_digits(filler.cell(x).name))));
            chi.validate();

            // the attachment: pull the horn part of chi back along u
            SimplicialMap attach{horn, cur, {}};
            for (CellId x = 0; x < horn.cell_count(); ++x) {
                const Simplex b = chi.apply(*filler.find(horn.cell(x).name));
                const auto pre = inv.find(b.cell);
                if (pre == inv.end()) {
                    aborted = true;
                    return "horn face " + horn.cell(x).name + " not yet in the filtration";
                }
                attach.assign.push_back(Simplex{b.down, pre->second});
            }
            attach.validate(); // marked horn faces must land on marked cells

            const SPushoutResult p = pushout_s(incl, attach);
            const SimplicialMap next_u = factor_through_pushout_s(p, chi, u);
            next_u.validate();

            if (p.object.cell_count() != cur.cell_count() + 2) {
                aborted = true;
                return cat("pushout adds ", p.object.cell_count() - cur.cell_count(),
                           " cells, expected 2");
            }

            // locate the two fresh cells and pin them to the stated ones
            std::string top_name, miss_name;
            for (int j = 0; j <= row.n; ++j) {
                top_name += static_cast<char>('0' + j);
                if (j != row.k) miss_name += static_cast<char>('0' + j);
            }
            const Simplex top_in_p = p.left.apply(*filler.find(top_name));
            const Simplex miss_in_p = p.left.apply(*filler.find(miss_name));
            if (top_in_p.is_degenerate() || miss_in_p.is_degenerate()) {
                aborted = true;
                return "fresh cells degenerate in the pushout";
            }
            const Simplex top_img = next_u.apply(top_in_p.cell);
            const Simplex miss_img = next_u.apply(miss_in_p.cell);
            if (!(top_img == Simplex{SimplicialOperator::identity(row.n), *int_hit})) {
                aborted = true;
                return "interior lands away from " + seq_cell_name(row.interior);
            }
            if (!(miss_img == Simplex{SimplicialOperator::identity(row.n - 1), *miss_hit})) {
                aborted = true;
                return "missing face lands away from " + seq_cell_name(row.missing);
            }
            if (inv.count(*int_hit) || inv.count(*miss_hit)) {
                aborted = true;
                return "stated cells were already attached in an earlier row";
            }
            if (p.object.is_marked(top_in_p.cell) != B.is_marked(*int_hit) ||
                p.object.is_marked(miss_in_p.cell) != B.is_marked(*miss_hit)) {
                aborted = true;
                return "transported marking disagrees with B";
            }

            // advance the filtration
            std::map<CellId, CellId> next_inv;
            for (const auto& [bcell, acell] : inv)
                next_inv[bcell] = p.right.apply(acell).cell;
            next_inv[*int_hit] = top_in_p.cell;
            next_inv[*miss_hit] = miss_in_p.cell;
            inv = std::move(next_inv);
            added.insert(*int_hit);
            added.insert(*miss_hit);
            cur = p.object;
            u = next_u;
            return {};
        });
    }

    ctx.check("colimit/is-B", !aborted && u.is_iso(),
              aborted ? "filtration aborted" : "final comparison with B is not an isomorphism");
    ctx.guarded("coverage/once", [&]() -> std::string {
        if (aborted) return "filtration aborted";
        if (static_cast<int>(added.size()) != 16)
            return cat("rows attached ", added.size(), " distinct cells, expected 16");
        if (A0.cell_count() + 16 != B.cell_count())
            return "attached cells do not exhaust B minus A";
        for (CellId x : added)
            if (A0.find(B.cell(x).name)) return "row cell already present in A: " + B.cell(x).name;
        return {};
    });
    // the marking census of B \ A: interiors plus the rows that attach their
    // missing face through a marking-extension filler
    ctx.guarded("marking/b-minus-a", [&]() -> std::string {
        for (CellId x = 0; x < B.cell_count(); ++x) {
            if (A0.find(B.cell(x).name)) continue;
            const bool want = marked_expected.count(B.cell(x).name) > 0;
            if (B.is_marked(x) != want)
                return cat("cell ", B.cell(x).name, " marked=", B.is_marked(x), " expected=",
                           want);
        }
        return {};
    });
}

// ---------------------------------------------------------------------------
// marking-ext-invertible: triangulation sends the elementary comical marking
// extensions to isomorphisms once both sides are reflected.

void suite_marking_ext(Ctx& ctx) {
    const int nmax = std::min(ctx.dim_or(3), 3);
    for (int n = 1; n <= nmax; ++n)
        for (int k = 1; k <= n; ++k)
            for (int e = 0; e <= 1; ++e) {
                ctx.guarded(cat("ext/n", n, "k", k, "e", e), [&]() -> std::string {
                    ctx.spend(50);
                    const SimplicialMap t = triangulate_map(marking_extension_pair(n, k, e));
                    t.validate();
                    if (!t.is_iso()) return "triangulated extension is not invertible";
                    return {};
                });
            }
}

// ---------------------------------------------------------------------------
// elementary-boxes: the Leibniz decompositions of the comical box inclusions,
// as isomorphisms of maps over the mask-splicing comparison.

// Verify that an induced Leibniz map is the comical box inclusion (n,k,e)
// after splicing; empty return = success.
std::string matches_box_inclusion(Ctx& ctx, const PresheafMap& induced, int n, int k, int e) {
    ctx.spend(induced.tgt.cell_count());
    const PresheafMap model = comical_box_inclusion(n, k, e);
    for (CellId c = 0; c < induced.src.cell_count(); ++c) {
        const Cube img = induced.apply(c);
        if (!img.down.is_identity()) return "induced map degenerates a corner cell";
        if (splice_name(induced.tgt.cell(img.cell).name) != splice_name(induced.src.cell(c).name))
            return "induced map moves " + induced.src.cell(c).name;
    }
    PresheafMap src_cmp = map_by_name(induced.src, model.src, splice_name);
    src_cmp.validate();
    if (!src_cmp.is_iso()) return "corner does not match the open box";
    PresheafMap tgt_cmp = map_by_name(induced.tgt, model.tgt, splice_name);
    tgt_cmp.validate();
    if (!tgt_cmp.is_iso()) return "tensor does not match the comical cube";
    return {};
}

void suite_elementary_boxes(Ctx& ctx) {
    const int nmax = std::min(ctx.dim_or(4), 4);
    for (int n = 2; n <= nmax; ++n)
        for (int k = 1; k <= n; ++k)
            for (int e = 0; e <= 1; ++e) {
                ctx.guarded(cat("box/n", n, "k", k, "e", e), [&]() -> std::string {
                    PresheafMap lhs;
                    if (k == 1) {
                        lhs = leibniz(comical_box_inclusion(2, 1, e), boundary_inclusion(n - 2),
                                      TensorMode::lax)
                                  .induced;
                    } else if (k == n) {
                        lhs = leibniz(boundary_inclusion(n - 2), comical_box_inclusion(2, 2, e),
                                      TensorMode::lax)
                                  .induced;
                    } else {
                        const PresheafMap mid =
                            leibniz(boundary_inclusion(k - 2), comical_box_inclusion(3, 2, e),
                                    TensorMode::lax)
                                .induced;
                        lhs = leibniz(mid, boundary_inclusion(n - k - 1), TensorMode::lax).induced;
                    }
                    return matches_box_inclusion(ctx, lhs, n, k, e);
                });
            }
}

// ---------------------------------------------------------------------------
// monoidal-model-squares: the three pushout squares behind the closure of
// comical maps under the Gray tensors, plus the Leibniz clauses for the
// generating monomorphisms.

// Build the comparison map out of the square's pushout.  vert_left: TL -> BL
// must share cell names with BL's masks; the top map is found by pulling the
// bottom one back through the (cell-bijective-on-its-image) induced map.
struct SquareCheck {
    PushoutResult p;
    PresheafMap cmp;
    MarkedCubicalSet BL;
    std::string failure; // nonempty when construction already failed
};

SquareCheck build_square(const PresheafMap& vert_left, const LeibnizResult& L, int m) {
    SquareCheck out;
    out.BL = vert_left.tgt;
    const MarkedCubicalSet& TL = vert_left.src;
    const MarkedCubicalSet& BR = L.induced.tgt;

    PresheafMap v = map_by_name(out.BL, BR, [m](const std::string& w) {
        return unsplice_name(w, m);
    });
    v.validate();

    std::map<CellId, CellId> pre;
    for (CellId c = 0; c < L.corner.object.cell_count(); ++c)
        pre[L.induced.apply(c).cell] = c;

    PresheafMap u{TL, L.corner.object, {}};
    for (CellId x = 0; x < TL.cell_count(); ++x) {
        const auto hit = BR.find(unsplice_name(TL.cell(x).name, m));
        if (!hit || !pre.count(*hit)) {
            out.failure = "corner misses " + TL.cell(x).name;
            return out;
        }
        u.assign.push_back(Cube{BoxOperator::identity(TL.cell(x).dim), pre.at(*hit)});
    }
    u.validate();

    out.p = pushout(vert_left, u);
    out.cmp = factor_through_pushout(out.p, v, L.induced);
    return out;
}

// Marks present in the comparison target but not in the pushout.
std::vector<std::string> missing_marks(const PresheafMap& cmp) {
    std::vector<std::string> out;
    for (CellId c = 0; c < cmp.src.cell_count(); ++c) {
        const Cube img = cmp.apply(c);
        if (!cmp.src.is_marked(c) && cmp.tgt.is_marked(img.cell))
            out.push_back(cmp.tgt.cell(img.cell).name);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void suite_monoidal_model(Ctx& ctx) {
    const int mmax = std::min(ctx.dim_or(3), 3);
    for (int m = 1; m <= mmax; ++m)
        for (int k = 1; k <= m; ++k)
            for (int e = 0; e <= 1; ++e)
                for (int n = 0; n <= 2; ++n)
                    for (TensorMode mode : {TensorMode::lax, TensorMode::pseudo}) {
                        const char* mn = mode == TensorMode::lax ? "lax" : "pseudo";
                        const std::string stem = cat("/m", m, "k", k, "e", e, "n", n, "/", mn);

                        // (open box -> comical cube) ⊗̂ (boundary -> cube):
                        // a pushout for the lax tensor; for the pseudo tensor
                        // with m >= 2, n >= 1 the comparison is entire and
                        // misses exactly one mark, which the elementary
                        // marking extension at (m+n,k,e) supplies.
                        ctx.guarded("squares/f" + stem, [&]() -> std::string {
                            ctx.spend(100);
                            const LeibnizResult L = leibniz(comical_box_inclusion(m, k, e),
                                                            boundary_inclusion(n), mode);
                            SquareCheck sq = build_square(comical_box_inclusion(m + n, k, e), L, m);
                            if (!sq.failure.empty()) return sq.failure;
                            const bool want_pushout =
                                mode == TensorMode::lax || m == 1 || n == 0;
                            if (want_pushout)
                                return sq.cmp.is_iso() ? std::string()
                                                       : "comparison is not invertible";
                            if (sq.cmp.is_iso()) return "unexpectedly already a pushout";
                            if (!sq.cmp.is_entire()) return "comparison is not entire";
                            std::string face_mask(static_cast<size_t>(m), '*');
                            face_mask[static_cast<size_t>(k) - 1] = static_cast<char>('0' + e);
                            const std::string expect =
                                unsplice_name(face_mask + std::string(static_cast<size_t>(n), '*'),
                                              m);
                            const auto misses = missing_marks(sq.cmp);
                            if (misses != std::vector<std::string>{expect})
                                return cat("missing marks are not exactly ", expect);
                            // the single comical marking extension closes it
                            const PresheafMap ext = marking_extension_pair(m + n, k, e);
                            for (CellId x = 0; x < ext.src.cell_count(); ++x) {
                                if (!ext.src.is_marked(x)) continue;
                                const Cube in_p =
                                    sq.p.left.apply(*sq.BL.find(ext.src.cell(x).name));
                                if (!sq.p.object.is_marked(in_p))
                                    return "extension premise unmarked at " + ext.src.cell(x).name;
                            }
                            std::string cube_mask(static_cast<size_t>(m + n), '*');
                            cube_mask[static_cast<size_t>(k) - 1] = static_cast<char>('0' + e);
                            MarkedCubicalSet closed = sq.p.object;
                            closed.set_marked(sq.p.left.apply(*sq.BL.find(cube_mask)).cell, true);
                            const PresheafMap after{closed, sq.cmp.tgt, sq.cmp.assign};
                            if (!after.is_iso()) return "marking extension does not close the gap";
                            return {};
                        });

                        // (open box -> comical cube) ⊗̂ (cube -> marked cube)
                        if (n == 0) {
                            ctx.skip("squares/g" + stem, "no marked 0-cube");
                        } else {
                            ctx.guarded("squares/g" + stem, [&]() -> std::string {
                                ctx.spend(100);
                                const LeibnizResult L = leibniz(comical_box_inclusion(m, k, e),
                                                                marker_inclusion(n), mode);
                                SquareCheck sq =
                                    build_square(marking_extension_pair(m + n, k, e), L, m);
                                if (!sq.failure.empty()) return sq.failure;
                                return sq.cmp.is_iso() ? std::string()
                                                       : "comparison is not invertible";
                            });
                        }

                        // (marking extension) ⊗̂ (boundary -> cube)
                        ctx.guarded("squares/h" + stem, [&]() -> std::string {
                            ctx.spend(100);
                            const LeibnizResult L =
                                leibniz(marking_extension_pair(m, k, e), boundary_inclusion(n),
                                        mode);
                            SquareCheck sq =
                                build_square(marking_extension_pair(m + n, k, e), L, m);
                            if (!sq.failure.empty()) return sq.failure;
                            return sq.cmp.is_iso() ? std::string() : "comparison is not invertible";
                        });
                    }

    // Leibniz clauses on the generating monomorphisms: boundaries are the
    // regular generators, markers the entire ones.
    std::vector<std::pair<std::string, PresheafMap>> gens;
    for (int a = 0; a <= 3; ++a) gens.emplace_back(cat("b", a), boundary_inclusion(a));
    for (int a = 1; a <= 3; ++a) gens.emplace_back(cat("m", a), marker_inclusion(a));
    const auto gen_dim = [](const std::string& name) { return name[1] - '0'; };

    for (const auto& [fn, f] : gens)
        for (const auto& [gn, g] : gens) {
            if (gen_dim(fn) + gen_dim(gn) > 3) continue;
            const std::string stem = cat("monos/", fn, "x", gn);
            ctx.guarded(stem + "/mono", [&]() -> std::string {
                ctx.spend(20);
                const LeibnizResult L = leibniz(f, g, TensorMode::lax);
                if (!L.induced.is_mono()) return "Leibniz of monos is not mono";
                const bool f_reg = is_regular_mono(f), g_reg = is_regular_mono(g);
                const bool f_ent = f.is_entire(), g_ent = g.is_entire();
                if (f_reg && g_reg && !is_regular_mono(L.induced))
                    return "clause 1: Leibniz of regular monos is not regular";
                if ((f_ent || g_ent) && !L.induced.is_entire())
                    return "clause 2: Leibniz with an entire factor is not entire";
                if (f_ent && g_ent && !L.induced.is_iso())
                    return "clause 3: Leibniz of entire maps is not invertible";
                return {};
            });
            if (f.is_entire() || g.is_entire()) {
                ctx.guarded(stem + "/mu-pushout", [&]() -> std::string {
                    ctx.spend(50);
                    const LeibnizResult lax = leibniz(f, g, TensorMode::lax);
                    const LeibnizResult pse = leibniz(f, g, TensorMode::pseudo);
                    PresheafMap corner_mu =
                        inclusion_by_name(lax.corner.object, pse.corner.object);
                    corner_mu.validate();
                    const PushoutResult square = pushout(lax.induced, corner_mu);
                    const PresheafMap cmp =
                        factor_through_pushout(square, mu(f.tgt, g.tgt), pse.induced);
                    if (!cmp.is_iso()) return "clause 4: the mu square is not a pushout";
                    return {};
                });
            }
        }
}

// ---------------------------------------------------------------------------
// homotopy: the eight-pattern relation, composites, and ho1 on nerve fixtures.

Cube edge_end(const MarkedCubicalSet& x, const Cube& f, int e) {
    return x.act(f, BoxOperator::face(1, 1, e));
}

void suite_homotopy(Ctx& ctx) {
    std::vector<std::pair<std::string, FiniteCategory>> fixtures;
    fixtures.emplace_back("chain2", poset_category(2, {{0, 1}}));
    fixtures.emplace_back("chain3", poset_category(3, {{0, 1}, {1, 2}}));
    fixtures.emplace_back("chain4", poset_category(4, {{0, 1}, {1, 2}, {2, 3}}));
    fixtures.emplace_back("square", poset_category(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
    {
        FiniteCategory iso;
        const int x = iso.add_object("x");
        const int y = iso.add_object("y");
        const int f = iso.add_arrow("f", x, y);
        const int g = iso.add_arrow("g", y, x);
        iso.set_composite(g, f, iso.identity(x));
        iso.set_composite(f, g, iso.identity(y));
        iso.validate();
        fixtures.emplace_back("freeiso", std::move(iso));
    }
    {
        FiniteCategory par;
        const int x = par.add_object("x");
        const int y = par.add_object("y");
        par.add_arrow("f", x, y);
        par.add_arrow("g", x, y);
        par.validate();
        fixtures.emplace_back("parallel", std::move(par));
    }

    for (const auto& [fx, cat_fx] : fixtures) {
        MarkedCubicalSet nerve = cubical_nerve(cat_fx, 3);
        ctx.spend(nerve.cell_count());
        const std::vector<Cube> edges = elements_of_dim(nerve, 1);

        // groups of parallel 1-elements
        std::map<std::pair<int, int>, std::vector<Cube>> groups;
        for (const Cube& f : edges)
            groups[{edge_end(nerve, f, 0).cell, edge_end(nerve, f, 1).cell}].push_back(f);

        ctx.guarded(cat("patterns/", fx), [&]() -> std::string {
            for (const auto& [ends, list] : groups)
                for (const Cube& f : list)
                    for (const Cube& g : list) {
                        if (!ctx.spend(8)) return {};
                        int hits = 0;
                        for (HomotopyPattern kind : kAllPatterns)
                            if (pattern_square(nerve, kind, f, g)) ++hits;
                        if (hits != 0 && hits != 8)
                            return cat("only ", hits, " of 8 patterns admit a witness");
                    }
            return {};
        });

        ctx.guarded(cat("equiv/", fx), [&]() -> std::string {
            for (const auto& [ends, list] : groups) {
                const int sz = static_cast<int>(list.size());
                std::vector<std::vector<bool>> rel(static_cast<size_t>(sz),
                                                   std::vector<bool>(static_cast<size_t>(sz)));
                for (int i = 0; i < sz; ++i)
                    for (int j = 0; j < sz; ++j) {
                        ctx.spend();
                        rel[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                            are_homotopic(nerve, list[static_cast<size_t>(i)],
                                          list[static_cast<size_t>(j)])
                                .has_value();
                    }
                for (int i = 0; i < sz; ++i) {
                    if (!rel[static_cast<size_t>(i)][static_cast<size_t>(i)])
                        return "relation is not reflexive";
                    for (int j = 0; j < sz; ++j) {
                        if (rel[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                            rel[static_cast<size_t>(j)][static_cast<size_t>(i)])
                            return "relation is not symmetric";
                        for (int l = 0; l < sz; ++l)
                            if (rel[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
                                rel[static_cast<size_t>(j)][static_cast<size_t>(l)] &&
                                !rel[static_cast<size_t>(i)][static_cast<size_t>(l)])
                                return "relation is not transitive";
                    }
                }
            }
            return {};
        });

        ctx.guarded(cat("composites/", fx), [&]() -> std::string {
            for (const Cube& f : edges)
                for (const Cube& g : edges) {
                    if (!(edge_end(nerve, f, 1) == edge_end(nerve, g, 0))) continue;
                    if (!ctx.spend(4)) return {};
                    const auto found = composites(nerve, f, g);
                    if (found.empty()) return "a composable pair has no composite witness";
                    for (size_t i = 1; i < found.size(); ++i)
                        if (!are_homotopic(nerve, found[0].result, found[i].result))
                            return "two composites of the same pair are not homotopic";
                }
            return {};
        });

        ctx.guarded(cat("ho1/", fx), [&]() -> std::string {
            ctx.spend(50);
            const FiniteCategory h = ho1(nerve);
            h.validate();
            if (!FiniteCategory::isomorphic(h, cat_fx))
                return "ho1 of the nerve differs from the source category";
            return {};
        });

        ctx.guarded(cat("op/", fx), [&]() -> std::string {
            ctx.spend(50);
            const FiniteCategory lhs = ho1(dual(nerve, Duality::op));
            const FiniteCategory rhs = ho1(nerve).opposite();
            if (!FiniteCategory::isomorphic(lhs, rhs))
                return "ho1 does not intertwine op-duality";
            return {};
        });

        if (fx == "parallel") {
            ctx.guarded("distinct/parallel", [&]() -> std::string {
                const auto f = nerve.find("f");
                const auto g = nerve.find("g");
                if (!f || !g) return "fixture arrows missing from the nerve";
                if (are_homotopic(nerve, Cube{BoxOperator::identity(1), *f},
                                  Cube{BoxOperator::identity(1), *g}))
                    return "distinct parallel arrows reported homotopic";
                return {};
            });
        }
    }
}

// ---------------------------------------------------------------------------
// reflection: idempotence, the prime/double-prime diff, tensor-power
// fixpoints, Gray closure, and the entire-map Leibniz extension property.

void suite_reflection(Ctx& ctx) {
    // seeded random marking toggles over a small object pool
    std::vector<MarkedSimplicialSet> pool;
    pool.push_back(standard_simplex(3));
    for (int k = 0; k <= 3; ++k) pool.push_back(complicial_simplex(3, k));
    for (int k = 0; k <= 3; ++k) pool.push_back(complicial_horn(3, k));
    pool.push_back(product(standard_simplex(1), standard_simplex(2)));
    pool.push_back(verity_gray(standard_simplex(1), standard_simplex(2)));
    pool.push_back(triangulate(comical_cube(2, 1, 0)));
    pool.push_back(triangulate(comical_cube(3, 2, 1)));

    ctx.guarded("idempotent/seeded", [&]() -> std::string {
        std::mt19937 rng(ctx.params.seed == 0 ? 2026u : ctx.params.seed);
        for (int trial = 0; trial < 50; ++trial) {
            MarkedSimplicialSet x = pool[static_cast<size_t>(trial) % pool.size()];
            for (CellId c = 0; c < x.cell_count(); ++c) {
                if (x.cell(c).dim == 0) continue;
                if (rng() % 3 == 0) x.set_marked(c, !x.is_marked(c));
            }
            if (!ctx.spend(x.cell_count())) return {};
            const MarkedSimplicialSet r = precomplicial_reflect(x);
            if (!(precomplicial_reflect(r) == r))
                return cat("reflection not idempotent on trial ", trial);
            for (CellId c = 0; c < x.cell_count(); ++c)
                if (x.is_marked(c) && !r.is_marked(c))
                    return cat("reflection lost a mark on trial ", trial);
        }
        return {};
    });

    const int nmax = std::min(ctx.dim_or(4), 4);
    for (int n = 2; n <= nmax; ++n)
        for (int k = 0; k <= n; ++k) {
            ctx.guarded(cat("prime/n", n, "k", k), [&]() -> std::string {
                ctx.spend(20);
                const MarkedSimplicialSet r = precomplicial_reflect(prime_simplex(n, k));
                if (!(r == double_prime_simplex(n, k)))
                    return "reflection of the prime simplex misses the double prime";
                return {};
            });
        }

    std::vector<MarkedSimplicialSet> powers;
    powers.push_back(standard_simplex(1));
    for (int n = 2; n <= nmax; ++n)
        powers.push_back(verity_gray(powers.back(), standard_simplex(1)));
    for (int n = 1; n <= nmax; ++n) {
        ctx.guarded(cat("fixpoint/n", n), [&]() -> std::string {
            ctx.spend(powers[static_cast<size_t>(n) - 1].cell_count());
            const MarkedSimplicialSet t = truncate_s(powers[static_cast<size_t>(n) - 1], n - 1);
            if (!(precomplicial_reflect(t) == t)) return "truncated tensor power is not a fixpoint";
            return {};
        });
    }

    // Gray closure on reflect-fixed objects of dimension <= 2
    std::vector<std::pair<std::string, MarkedSimplicialSet>> fixed;
    fixed.emplace_back("tp1", truncate_s(powers[0], 0));
    fixed.emplace_back("tp2", truncate_s(powers.size() > 1 ? powers[1]
                                                           : verity_gray(powers[0], powers[0]),
                                         1));
    fixed.emplace_back("dpp1", double_prime_simplex(2, 1));
    fixed.emplace_back("tcc", triangulate(comical_cube(2, 1, 0)));
    fixed.emplace_back("d2", standard_simplex(2));
    for (const auto& [an, a] : fixed)
        for (const auto& [bn, b] : fixed) {
            ctx.guarded(cat("closure/", an, "x", bn), [&]() -> std::string {
                if (!(precomplicial_reflect(a) == a) || !(precomplicial_reflect(b) == b))
                    return "a factor is not reflect-fixed";
                if (!ctx.spend(a.cell_count() * b.cell_count())) return {};
                const MarkedSimplicialSet g = verity_gray(a, b);
                if (!(precomplicial_reflect(g) == g))
                    return "Gray tensor of pre-complicial sets is not pre-complicial";
                return {};
            });
        }

    // entire maps: the pseudo-product Leibniz map is a marking extension whose
    // extra marks are complicially forced
    std::vector<std::pair<std::string, SimplicialMap>> entire;
    for (int k = 0; k <= 2; ++k) {
        try {
            entire.emplace_back(cat("ext2", k), marking_extension_s(2, k));
        } catch (const Error&) {
            // out-of-range variants are simply not instances
        }
    }
    for (int n = 1; n <= 2; ++n)
        entire.emplace_back(cat("mark", n),
                            s_inclusion_by_name(standard_simplex(n), marker_simplex(n)));
    for (const auto& [fn, f] : entire)
        for (const auto& [gn, g] : entire) {
            ctx.guarded(cat("entire-gray/", fn, "x", gn), [&]() -> std::string {
                if (!f.is_entire() || !g.is_entire()) return "pool map is not entire";
                if (!ctx.spend(f.tgt.cell_count() * g.tgt.cell_count())) return {};
                const SLeibnizResult L = leibniz_s(f, g, SimplicialTensor::product);
                if (!L.induced.is_entire()) return "Leibniz of entire maps is not entire";
                MarkedSimplicialSet before = L.induced.tgt;
                for (CellId c = 0; c < before.cell_count(); ++c)
                    if (before.cell(c).dim > 0) before.set_marked(c, false);
                for (CellId c = 0; c < L.corner.object.cell_count(); ++c)
                    if (L.corner.object.is_marked(c)) {
                        const Simplex img = L.induced.apply(c);
                        if (!img.down.is_identity())
                            return "entire Leibniz map degenerates a cell";
                        before.set_marked(img.cell, true);
                    }
                if (!(precomplicial_reflect(before) == precomplicial_reflect(L.induced.tgt)))
                    return "added marks are not complicially forced";
                return {};
            });
        }
}

// ---------------------------------------------------------------------------

using SuiteFn = void (*)(Ctx&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"boxcat-oracle", suite_boxcat},
        {"boundary-products", suite_boundary_products},
        {"tensor-power", suite_tensor_power},
        {"strong-monoidal", suite_strong_monoidal},
        {"table1", suite_table1},
        {"marking-ext-invertible", suite_marking_ext},
        {"elementary-boxes", suite_elementary_boxes},
        {"monoidal-model-squares", suite_monoidal_model},
        {"homotopy", suite_homotopy},
        {"reflection", suite_reflection},
    };
    return table;
}

} // namespace

bool SuiteReport::passed() const {
    for (const CheckResult& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

int SuiteReport::count(CheckStatus s) const {
    int n = 0;
    for (const CheckResult& c : checks)
        if (c.status == s) ++n;
    return n;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
    for (const auto& [key, fn] : registry()) {
        if (key != name) continue;
        Ctx ctx(params);
        const auto start = std::chrono::steady_clock::now();
        fn(ctx);
        const auto stop = std::chrono::steady_clock::now();
        std::sort(ctx.checks.begin(), ctx.checks.end(),
                  [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
        SuiteReport report;
        report.suite = name;
        report.checks = std::move(ctx.checks);
        report.wall_seconds = std::chrono::duration<double>(stop - start).count();
        return report;
    }
    throw ParameterError("unknown suite: " + name);
}

} // namespace comical
