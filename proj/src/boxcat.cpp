#include "comical/boxcat.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace comical {

std::vector<Vertex> all_vertices(int n) {
    if (n < 0) throw ParameterError("all_vertices: negative dimension");
    std::vector<Vertex> out;
    out.reserve(size_t(1) << n);
    for (unsigned long long bits = 0; bits < (1ull << n); ++bits) {
        Vertex v;
        v.coords.resize(n);
        for (int j = 0; j < n; ++j) v.coords[j] = int((bits >> (n - 1 - j)) & 1u);
        out.push_back(std::move(v));
    }
    return out;
}

BoxOperator BoxOperator::identity(int n) {
    if (n < 0) throw ParameterError("identity: negative dimension");
    BoxOperator f;
    f.src_ = f.tgt_ = n;
    return f;
}

BoxOperator BoxOperator::face(int n, int i, int e) {
    if (n < 1 || i < 1 || i > n || (e != 0 && e != 1))
        throw ArityError("face d" + std::to_string(i) + "," + std::to_string(e) +
                         " undefined with target dimension " + std::to_string(n));
    BoxOperator f;
    f.src_ = n - 1;
    f.tgt_ = n;
    f.faces_.push_back({i, e});
    return f;
}

BoxOperator BoxOperator::degeneracy(int n, int i) {
    if (n < 1 || i < 1 || i > n)
        throw ArityError("degeneracy s" + std::to_string(i) +
                         " undefined with source dimension " + std::to_string(n));
    BoxOperator f;
    f.src_ = n;
    f.tgt_ = n - 1;
    f.degens_.push_back(i);
    return f;
}

BoxOperator BoxOperator::connection(int n, int i, int e) {
    if (n < 2 || i < 1 || i > n - 1 || (e != 0 && e != 1))
        throw ArityError("connection g" + std::to_string(i) + "," + std::to_string(e) +
                         " undefined with source dimension " + std::to_string(n));
    BoxOperator f;
    f.src_ = n;
    f.tgt_ = n - 1;
    f.conns_.push_back({i, e});
    return f;
}

std::pair<BoxOperator, BoxOperator> BoxOperator::ez_factor() const {
    int mid = tgt_ - static_cast<int>(faces_.size());
    BoxOperator up;
    up.src_ = mid;
    up.tgt_ = tgt_;
    up.faces_ = faces_;
    BoxOperator down;
    down.src_ = src_;
    down.tgt_ = mid;
    down.conns_ = conns_;
    down.degens_ = degens_;
    return {up, down};
}

Vertex BoxOperator::evaluate(const Vertex& v) const {
    if (v.dim() != src_)
        throw ArityError("evaluate: vertex dimension " + std::to_string(v.dim()) +
                         " != source dimension " + std::to_string(src_));
    // degeneracies drop the coordinates listed in degens_
    std::vector<int> w;
    w.reserve(src_);
    {
        size_t d = 0;
        for (int pos = 1; pos <= src_; ++pos) {
            if (d < degens_.size() && degens_[d] == pos) {
                ++d;
                continue;
            }
            w.push_back(v.coords[pos - 1]);
        }
    }
    // connections merge adjacent coordinates, rightmost factor first
    for (size_t p = conns_.size(); p-- > 0;) {
        int j = conns_[p].index;
        int merged = conns_[p].sign == 1 ? std::max(w[j - 1], w[j]) : std::min(w[j - 1], w[j]);
        w[j - 1] = merged;
        w.erase(w.begin() + j);
    }
    // faces pin target coordinates to constants
    Vertex out;
    out.coords.assign(tgt_, -1);
    for (const Face& f : faces_) out.coords[f.index - 1] = f.sign;
    size_t next = 0;
    for (int pos = 0; pos < tgt_; ++pos)
        if (out.coords[pos] < 0) out.coords[pos] = w[next++];
    return out;
}

std::vector<Vertex> BoxOperator::vertex_table() const {
    std::vector<Vertex> table;
    for (const Vertex& v : all_vertices(src_)) table.push_back(evaluate(v));
    return table;
}

void BoxOperator::absorb_degeneracy(int i) {
    if (i < 1 || i > src_ + 1)
        throw ArityError("absorb_degeneracy: index " + std::to_string(i) +
                         " out of range for source dimension " + std::to_string(src_ + 1));
    std::vector<int> s;
    s.reserve(degens_.size() + 1);
    bool placed = false;
    for (int d : degens_) {
        int shifted = d < i ? d : d + 1;
        if (!placed && i < shifted) {
            s.push_back(i);
            placed = true;
        }
        s.push_back(shifted);
    }
    if (!placed) s.push_back(i);
    degens_ = std::move(s);
    ++src_;
}

namespace {

// Inserts g(i,sign) at the right end of the connection word and bubbles it
// into sorted position via g(j,e).g(i,d) = g(i,d).g(j+1,e)  (j > i)  and
// g(i,d).g(i,d) = g(i,d).g(i+1,d).
void insert_connection(std::vector<BoxOperator::Conn>& conns, int i, int sign) {
    size_t pos = conns.size();
    while (pos > 0 && conns[pos - 1].index > i) {
        conns[pos - 1].index += 1;
        --pos;
    }
    if (pos > 0 && conns[pos - 1].index == i && conns[pos - 1].sign == sign)
        conns.insert(conns.begin() + pos, {i + 1, sign});
    else
        conns.insert(conns.begin() + pos, {i, sign});
}

} // namespace

void BoxOperator::absorb_connection(int i, int sign) {
    if (i < 1 || i > src_ || (sign != 0 && sign != 1))
        throw ArityError("absorb_connection: g" + std::to_string(i) + "," + std::to_string(sign) +
                         " undefined with source dimension " + std::to_string(src_ + 1));
    auto it = std::find(degens_.begin(), degens_.end(), i);
    if (it != degens_.end()) {
        // the merged coordinate is dropped: drop both halves instead
        std::vector<int> s;
        s.reserve(degens_.size() + 1);
        for (int d : degens_) {
            if (d == i) continue;
            s.push_back(d < i ? d : d + 1);
        }
        s.push_back(i);
        s.push_back(i + 1);
        std::sort(s.begin(), s.end());
        degens_ = std::move(s);
        ++src_;
        return;
    }
    int below = int(std::count_if(degens_.begin(), degens_.end(), [&](int d) { return d < i; }));
    for (int& d : degens_)
        if (d > i) ++d;
    ++src_;
    insert_connection(conns_, i - below, sign);
}

namespace {

// Pushes s(a) rightward through conns[p..] and finally into the drop set,
// using s(a).g(j,e) = g(j-1,e).s(a) (a<j), s(a).g(a,e) = s(a).s(a), and
// s(a).g(j,e) = g(j,e).s(a+1) (a>j).  src is the source dimension of the
// degeneracy word at the time of the merge.
void push_degeneracy_right(std::vector<BoxOperator::Conn>& conns, size_t p, int a,
                           std::vector<int>& degens, int src) {
    size_t q = p;
    while (q < conns.size()) {
        int j = conns[q].index;
        if (a < j) {
            conns[q].index = j - 1;
            ++q;
        } else if (a == j) {
            conns.erase(conns.begin() + q);
            push_degeneracy_right(conns, q, a, degens, src); // right copy of s(a)
            // the left copy continues from the same position
        } else {
            ++a;
            ++q;
        }
    }
    // merge: s(a) after the drop set removes the a-th surviving coordinate
    int seen = 0;
    for (int pos = 1; pos <= src; ++pos) {
        if (std::binary_search(degens.begin(), degens.end(), pos)) continue;
        if (++seen == a) {
            degens.insert(std::lower_bound(degens.begin(), degens.end(), pos), pos);
            return;
        }
    }
    throw IntegrityError("push_degeneracy_right: no surviving coordinate to drop");
}

} // namespace

void BoxOperator::absorb_face(int i, int sign) {
    if (src_ < 1 || i < 1 || i > src_ || (sign != 0 && sign != 1))
        throw ArityError("absorb_face: d" + std::to_string(i) + "," + std::to_string(sign) +
                         " undefined with target dimension " + std::to_string(src_));
    auto it = std::find(degens_.begin(), degens_.end(), i);
    if (it != degens_.end()) {
        // inserted coordinate immediately dropped
        std::vector<int> s;
        s.reserve(degens_.size());
        for (int d : degens_) {
            if (d == i) continue;
            s.push_back(d < i ? d : d - 1);
        }
        degens_ = std::move(s);
        --src_;
        return;
    }
    int below = int(std::count_if(degens_.begin(), degens_.end(), [&](int d) { return d < i; }));
    for (int& d : degens_)
        if (d > i) --d;
    --src_;
    int cur = i - below;
    // walk the face leftward through the connection word
    for (size_t p = conns_.size(); p-- > 0;) {
        int j = conns_[p].index;
        int s2 = conns_[p].sign;
        if (j < cur - 1) {
            --cur; // d passes: g(j).d(cur) = d(cur-1).g(j)
        } else if (j > cur) {
            conns_[p].index = j - 1; // g(j).d(cur) = d(cur).g(j-1)
        } else if (s2 != sign) {
            conns_.erase(conns_.begin() + p); // g(j,e).d(cur,1-e) = id
            return;
        } else {
            // g(j,e).d(cur,e) = d(j,e).s(j): face continues as d(j,e), a new
            // degeneracy s(j) is pushed right through the already-passed tail
            conns_.erase(conns_.begin() + p);
            cur = j;
            push_degeneracy_right(conns_, p, j, degens_, src_);
        }
    }
    // merge the surviving face: it inserts at the cur-th coordinate of the
    // target not already pinned by faces_
    int seen = 0;
    for (int pos = 1; pos <= tgt_; ++pos) {
        bool pinned = std::any_of(faces_.begin(), faces_.end(),
                                  [&](const Face& f) { return f.index == pos; });
        if (pinned) continue;
        if (++seen == cur) {
            auto at = std::lower_bound(faces_.begin(), faces_.end(), pos,
                                       [](const Face& f, int v) { return f.index > v; });
            faces_.insert(at, {pos, sign});
            return;
        }
    }
    throw IntegrityError("absorb_face: no free target coordinate");
}

BoxOperator compose(const BoxOperator& after, const BoxOperator& before) {
    if (after.src_dim() != before.tgt_dim())
        throw CompositionError("compose: source dimension " + std::to_string(after.src_dim()) +
                               " != target dimension " + std::to_string(before.tgt_dim()));
    BoxOperator n = after;
    for (const BoxOperator::Face& f : before.faces()) n.absorb_face(f.index, f.sign);
    for (const BoxOperator::Conn& c : before.conns()) n.absorb_connection(c.index, c.sign);
    for (int d : before.degens()) n.absorb_degeneracy(d);
    return n;
}

BoxOperator compose_word(const std::vector<BoxOperator>& word) {
    if (word.empty()) throw ParameterError("compose_word: empty word");
    BoxOperator n = word.front();
    for (size_t p = 1; p < word.size(); ++p) {
        if (word[p].src_dim() != n.tgt_dim())
            throw CompositionError("compose_word: entry " + std::to_string(p) +
                                   " expects source dimension " + std::to_string(word[p].src_dim()) +
                                   " but receives " + std::to_string(n.tgt_dim()));
        n = compose(word[p], n);
    }
    return n;
}

namespace {

struct Gen {
    char kind; // 'd', 's', 'g'
    int dim;   // the constructor dimension (target for 'd', source for 's'/'g')
    int index;
    int sign;
};

// Expansion into single generators, application order (first applied first).
std::vector<Gen> expand(const BoxOperator& f) {
    std::vector<Gen> gens;
    int cur = f.src_dim();
    for (size_t p = f.degens().size(); p-- > 0;) {
        gens.push_back({'s', cur, f.degens()[p], 0});
        --cur;
    }
    for (size_t p = f.conns().size(); p-- > 0;) {
        gens.push_back({'g', cur, f.conns()[p].index, f.conns()[p].sign});
        --cur;
    }
    for (size_t p = f.faces().size(); p-- > 0;) {
        ++cur;
        gens.push_back({'d', cur, f.faces()[p].index, f.faces()[p].sign});
    }
    return gens;
}

BoxOperator realize(const Gen& g) {
    switch (g.kind) {
    case 'd': return BoxOperator::face(g.dim, g.index, g.sign);
    case 's': return BoxOperator::degeneracy(g.dim, g.index);
    default: return BoxOperator::connection(g.dim, g.index, g.sign);
    }
}

} // namespace

BoxOperator BoxOperator::section() const {
    if (!in_down()) throw ParameterError("section: operator has a face part");
    if (is_identity()) return *this;
    // with d = gL...g1 (g1 applied first), a section is sec(g1)...sec(gL),
    // i.e. the word [sec(gL),...,sec(g1)] in application order
    std::vector<Gen> gens = expand(*this);
    std::vector<BoxOperator> word;
    for (size_t p = gens.size(); p-- > 0;) {
        const Gen& g = gens[p];
        if (g.kind == 's')
            word.push_back(BoxOperator::face(g.dim, g.index, 0));
        else // a section of g(i,e) is d(i,1-e)
            word.push_back(BoxOperator::face(g.dim, g.index, 1 - g.sign));
    }
    return compose_word(word);
}

BoxOperator dual(const BoxOperator& f, Duality d) {
    std::vector<Gen> gens = expand(f);
    for (Gen& g : gens) {
        bool reverse = d == Duality::co || d == Duality::op;
        bool flip = d == Duality::coop || d == Duality::op;
        switch (g.kind) {
        case 'd':
            if (reverse) g.index = g.dim + 1 - g.index;
            if (flip) g.sign = 1 - g.sign;
            break;
        case 's':
            if (reverse) g.index = g.dim + 1 - g.index;
            break;
        case 'g':
            if (reverse) g.index = g.dim - g.index;
            if (flip) g.sign = 1 - g.sign;
            break;
        }
    }
    if (gens.empty()) return f;
    std::vector<BoxOperator> word;
    for (const Gen& g : gens) word.push_back(realize(g));
    return compose_word(word);
}

BoxOperator tensor_op(const BoxOperator& f, const BoxOperator& g) {
    // f (x) g = (f (x) id) . (id (x) g)
    int a = f.src_dim(), dd = g.tgt_dim();
    BoxOperator left = BoxOperator::identity(a + g.src_dim()); // id_a (x) g
    for (const Gen& gen : expand(g)) {
        Gen shifted = gen;
        shifted.dim += a;
        shifted.index += a;
        left = compose(realize(shifted), left);
    }
    BoxOperator right = BoxOperator::identity(a + dd); // f (x) id_d
    for (const Gen& gen : expand(f)) {
        Gen shifted = gen;
        shifted.dim += dd;
        right = compose(realize(shifted), right);
    }
    return compose(right, left);
}

std::string BoxOperator::to_string() const {
    if (is_identity()) return "id";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << ';';
        first = false;
    };
    for (size_t p = degens_.size(); p-- > 0;) {
        sep();
        os << 's' << degens_[p];
    }
    for (size_t p = conns_.size(); p-- > 0;) {
        sep();
        os << 'g' << conns_[p].index << ',' << conns_[p].sign;
    }
    for (size_t p = faces_.size(); p-- > 0;) {
        sep();
        os << 'd' << faces_[p].index << ',' << faces_[p].sign;
    }
    return os.str();
}

size_t BoxOperator::hash() const {
    size_t h = std::hash<int>()(src_) * 31 + std::hash<int>()(tgt_);
    auto mix = [&](int v) { h = h * 1000003 + size_t(v) + 0x9e3779b9; };
    for (const Face& f : faces_) {
        mix(f.index);
        mix(f.sign + 2);
    }
    mix(-1);
    for (const Conn& c : conns_) {
        mix(c.index);
        mix(c.sign + 2);
    }
    mix(-2);
    for (int d : degens_) mix(d);
    return h;
}

void BoxOperator::check_invariants() const {
    if (src_ < 0 || tgt_ < 0) throw IntegrityError("box operator: negative dimension");
    int r = int(degens_.size()), s = int(conns_.size()), t = int(faces_.size());
    if (src_ - r - s + t != tgt_) throw IntegrityError("box operator: dimension bookkeeping broken");
    for (size_t p = 0; p < degens_.size(); ++p) {
        if (degens_[p] < 1 || degens_[p] > src_) throw IntegrityError("degeneracy index out of range");
        if (p > 0 && degens_[p - 1] >= degens_[p]) throw IntegrityError("degeneracy indices not increasing");
    }
    int b = src_ - r - s;
    for (int p = 1; p <= s; ++p) {
        const Conn& c = conns_[p - 1];
        if (c.sign != 0 && c.sign != 1) throw IntegrityError("connection sign out of range");
        if (c.index < 1 || c.index > b + p - 1) throw IntegrityError("connection index out of range");
        if (p > 1) {
            if (conns_[p - 2].index > c.index) throw IntegrityError("connection indices decreasing");
            if (conns_[p - 2].index == c.index && conns_[p - 2].sign == c.sign)
                throw IntegrityError("equal connection indices must alternate signs");
        }
    }
    for (int q = 1; q <= t; ++q) {
        const Face& f = faces_[q - 1];
        if (f.sign != 0 && f.sign != 1) throw IntegrityError("face sign out of range");
        if (f.index < 1 || f.index > tgt_ - q + 1) throw IntegrityError("face index out of range");
        if (q > 1 && faces_[q - 2].index <= f.index) throw IntegrityError("face indices not decreasing");
    }
}

BoxOperator parse_box_operator(const std::string& text, std::optional<int> src_dim) {
    struct Tok {
        char kind;
        int index;
        int sign; // -1 for 's'
    };
    std::vector<Tok> toks;
    std::string trimmed;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (!(trimmed.empty() || trimmed == "id")) {
        size_t pos = 0;
        while (pos < trimmed.size()) {
            size_t end = trimmed.find(';', pos);
            std::string tok = trimmed.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
            pos = end == std::string::npos ? trimmed.size() : end + 1;
            if (tok.empty()) throw SchemaError("operator syntax: empty token in '" + text + "'");
            char kind = tok[0];
            if (kind != 'd' && kind != 's' && kind != 'g')
                throw SchemaError("operator syntax: unknown generator '" + tok + "'");
            std::string rest = tok.substr(1);
            int index = 0, sign = -1;
            try {
                if (kind == 's') {
                    size_t used = 0;
                    index = std::stoi(rest, &used);
                    if (used != rest.size()) throw std::invalid_argument("trailing");
                } else {
                    size_t comma = rest.find(',');
                    if (comma == std::string::npos) throw std::invalid_argument("missing sign");
                    size_t used = 0;
                    index = std::stoi(rest.substr(0, comma), &used);
                    if (used != comma) throw std::invalid_argument("trailing");
                    std::string se = rest.substr(comma + 1);
                    if (se != "0" && se != "1") throw std::invalid_argument("sign");
                    sign = se == "1" ? 1 : 0;
                }
            } catch (const std::exception&) {
                throw SchemaError("operator syntax: cannot parse token '" + tok + "'");
            }
            if (index < 1) throw SchemaError("operator syntax: index must be positive in '" + tok + "'");
            toks.push_back({kind, index, sign});
        }
    }
    // infer the minimal admissible source dimension
    int cur = 0, need = 0;
    for (const Tok& t : toks) {
        switch (t.kind) {
        case 's': need = std::max(need, t.index - cur); cur -= 1; break;
        case 'g': need = std::max(need, t.index + 1 - cur); cur -= 1; break;
        case 'd': need = std::max(need, t.index - 1 - cur); need = std::max(need, -cur); cur += 1; break;
        }
    }
    int n0 = src_dim.value_or(need);
    if (n0 < need)
        throw ArityError("operator '" + text + "' needs source dimension >= " + std::to_string(need));
    std::vector<BoxOperator> word;
    int dim = n0;
    for (const Tok& t : toks) {
        switch (t.kind) {
        case 's': word.push_back(BoxOperator::degeneracy(dim, t.index)); --dim; break;
        case 'g': word.push_back(BoxOperator::connection(dim, t.index, t.sign)); --dim; break;
        case 'd': word.push_back(BoxOperator::face(dim + 1, t.index, t.sign)); ++dim; break;
        }
    }
    if (word.empty()) return BoxOperator::identity(n0);
    return compose_word(word);
}

namespace {

void conn_words(int s, int bound_base, std::vector<BoxOperator::Conn>& cur,
                const std::function<void(const std::vector<BoxOperator::Conn>&)>& emit) {
    if (int(cur.size()) == s) {
        emit(cur);
        return;
    }
    int p = int(cur.size()) + 1;
    int lo = cur.empty() ? 1 : cur.back().index;
    int hi = bound_base + p - 1;
    for (int j = lo; j <= hi; ++j) {
        for (int e = 0; e <= 1; ++e) {
            if (!cur.empty() && cur.back().index == j && cur.back().sign == e) continue;
            cur.push_back({j, e});
            conn_words(s, bound_base, cur, emit);
            cur.pop_back();
        }
    }
}

void subsets(int n, int k, int start, std::vector<int>& cur,
             const std::function<void(const std::vector<int>&)>& emit) {
    if (int(cur.size()) == k) {
        emit(cur);
        return;
    }
    for (int v = start; v <= n; ++v) {
        cur.push_back(v);
        subsets(n, k, v + 1, cur, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<BoxOperator> all_box_operators(int src, int tgt) {
    std::vector<BoxOperator> out;
    if (src < 0 || tgt < 0) return out;
    for (int r = 0; r <= src; ++r) {
        int a = src - r;
        for (int s = 0; s <= a; ++s) {
            int b = a - s;
            int t = tgt - b;
            if (t < 0 || t > tgt) continue;
            std::vector<int> degset;
            subsets(src, r, 1, degset, [&](const std::vector<int>& S) {
                std::vector<BoxOperator::Conn> cw;
                conn_words(s, b, cw, [&](const std::vector<BoxOperator::Conn>& C) {
                    std::vector<int> faceset;
                    subsets(tgt, t, 1, faceset, [&](const std::vector<int>& K) {
                        for (int signs = 0; signs < (1 << t); ++signs) {
                            // the triple (K+signs, C, S) is already a normal
                            // form, so absorbing its generators in function
                            // order reproduces it verbatim
                            BoxOperator op = BoxOperator::identity(tgt);
                            for (int q = t - 1; q >= 0; --q)
                                op.absorb_face(K[q], (signs >> q) & 1);
                            for (const auto& cc : C) op.absorb_connection(cc.index, cc.sign);
                            for (int dd : S) op.absorb_degeneracy(dd);
                            out.push_back(std::move(op));
                        }
                    });
                });
            });
        }
    }
    return out;
}

std::vector<BoxOperator> all_down_operators(int src, int tgt) {
    std::vector<BoxOperator> out;
    for (BoxOperator& f : all_box_operators(src, tgt))
        if (f.in_down()) out.push_back(std::move(f));
    return out;
}

std::vector<BoxOperator> all_generators_from(int src, int max_tgt) {
    std::vector<BoxOperator> out;
    for (int i = 1; i <= src; ++i) out.push_back(BoxOperator::degeneracy(src, i));
    for (int i = 1; i + 1 <= src; ++i)
        for (int e = 0; e <= 1; ++e) out.push_back(BoxOperator::connection(src, i, e));
    if (src + 1 <= max_tgt)
        for (int i = 1; i <= src + 1; ++i)
            for (int e = 0; e <= 1; ++e) out.push_back(BoxOperator::face(src + 1, i, e));
    return out;
}

std::ostream& operator<<(std::ostream& os, const BoxOperator& f) {
    return os << f.to_string() << " : [1]^" << f.src_dim() << " -> [1]^" << f.tgt_dim();
}

} // namespace comical
