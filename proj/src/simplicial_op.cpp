#include "comical/simpset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace comical {

namespace {

void check_monotone(int tgt, const std::vector<int>& img) {
    if (tgt < 0 || img.empty())
        throw ParameterError("simplicial operator needs tgt >= 0 and a nonempty image");
    for (size_t i = 0; i < img.size(); ++i) {
        if (img[i] < 0 || img[i] > tgt)
            throw ParameterError("simplicial operator image value out of range");
        if (i > 0 && img[i] < img[i - 1])
            throw ParameterError("simplicial operator image must be weakly monotone");
    }
}

} // namespace

SimplicialOperator SimplicialOperator::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) img[static_cast<size_t>(i)] = i;
    return from_image(n, std::move(img));
}

SimplicialOperator SimplicialOperator::face(int n, int j) {
    if (n < 1 || j < 0 || j > n) throw ParameterError("face needs n >= 1 and 0 <= j <= n");
    std::vector<int> img;
    img.reserve(static_cast<size_t>(n));
    for (int i = 0; i <= n; ++i)
        if (i != j) img.push_back(i);
    return from_image(n, std::move(img));
}

SimplicialOperator SimplicialOperator::degeneracy(int n, int j) {
    if (n < 0 || j < 0 || j > n) throw ParameterError("degeneracy needs 0 <= j <= n");
    std::vector<int> img;
    img.reserve(static_cast<size_t>(n) + 2);
    for (int i = 0; i <= n + 1; ++i) img.push_back(i <= j ? i : i - 1);
    return from_image(n, std::move(img));
}

SimplicialOperator SimplicialOperator::from_image(int tgt, std::vector<int> img) {
    check_monotone(tgt, img);
    SimplicialOperator a;
    a.tgt_ = tgt;
    a.img_ = std::move(img);
    return a;
}

SimplicialOperator SimplicialOperator::front(int p, int q) {
    if (p < 0 || q < 0) throw ParameterError("front needs p, q >= 0");
    std::vector<int> img(static_cast<size_t>(p) + 1);
    for (int i = 0; i <= p; ++i) img[static_cast<size_t>(i)] = i;
    return from_image(p + q, std::move(img));
}

SimplicialOperator SimplicialOperator::back(int p, int q) {
    if (p < 0 || q < 0) throw ParameterError("back needs p, q >= 0");
    std::vector<int> img(static_cast<size_t>(q) + 1);
    for (int i = 0; i <= q; ++i) img[static_cast<size_t>(i)] = p + i;
    return from_image(p + q, std::move(img));
}

bool SimplicialOperator::is_identity() const {
    if (src_dim() != tgt_) return false;
    for (int i = 0; i <= tgt_; ++i)
        if (img_[static_cast<size_t>(i)] != i) return false;
    return true;
}

bool SimplicialOperator::is_injective() const {
    for (size_t i = 1; i < img_.size(); ++i)
        if (img_[i] == img_[i - 1]) return false;
    return true;
}

bool SimplicialOperator::is_surjective() const {
    int expect = 0;
    for (int v : img_) {
        if (v > expect) return false;
        if (v == expect) ++expect;
    }
    return expect == tgt_ + 1;
}

std::string SimplicialOperator::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < img_.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(img_[i]);
    }
    out += "]->" + std::to_string(tgt_);
    return out;
}

bool SimplicialOperator::operator<(const SimplicialOperator& o) const {
    if (tgt_ != o.tgt_) return tgt_ < o.tgt_;
    return img_ < o.img_;
}

SimplicialOperator compose(const SimplicialOperator& g, const SimplicialOperator& f) {
    if (f.tgt_dim() != g.src_dim())
        throw CompositionError("simplicial compose: dims " + f.to_string() + " then " +
                               g.to_string());
    std::vector<int> img(static_cast<size_t>(f.src_dim()) + 1);
    for (int i = 0; i <= f.src_dim(); ++i) img[static_cast<size_t>(i)] = g(f(i));
    return SimplicialOperator::from_image(g.tgt_dim(), std::move(img));
}

SimplicialOperator parse_simplicial_operator(const std::string& text) {
    const size_t open = text.find('[');
    const size_t close = text.find("]->");
    if (open != 0 || close == std::string::npos)
        throw ParameterError("parse_simplicial_operator: expected '[i j ...]->n', got '" + text +
                             "'");
    std::istringstream body(text.substr(1, close - 1));
    std::vector<int> img;
    for (int v; body >> v;) img.push_back(v);
    if (!body.eof())
        throw ParameterError("parse_simplicial_operator: bad image list in '" + text + "'");
    int tgt = 0;
    try {
        size_t used = 0;
        tgt = std::stoi(text.substr(close + 3), &used);
        if (close + 3 + used != text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParameterError("parse_simplicial_operator: bad target dimension in '" + text + "'");
    }
    return SimplicialOperator::from_image(tgt, std::move(img));
}

SimplicialOperator section(const SimplicialOperator& s) {
    if (!s.is_surjective()) throw ParameterError("section requires a surjection");
    std::vector<int> img(static_cast<size_t>(s.tgt_dim()) + 1, -1);
    for (int i = s.src_dim(); i >= 0; --i) img[static_cast<size_t>(s(i))] = i;
    return SimplicialOperator::from_image(s.src_dim(), std::move(img));
}

SimplicialOperator dual_op(const SimplicialOperator& a) {
    const int m = a.src_dim();
    const int n = a.tgt_dim();
    std::vector<int> img(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) img[static_cast<size_t>(i)] = n - a(m - i);
    return SimplicialOperator::from_image(n, std::move(img));
}

SimplicialOperator join_id(const SimplicialOperator& a, int k) {
    if (k < 0) throw ParameterError("join_id needs k >= 0");
    const int m = a.src_dim();
    const int n = a.tgt_dim();
    std::vector<int> img(static_cast<size_t>(m + k) + 2);
    for (int i = 0; i <= m; ++i) img[static_cast<size_t>(i)] = a(i);
    for (int i = m + 1; i <= m + 1 + k; ++i) img[static_cast<size_t>(i)] = n + i - m;
    return SimplicialOperator::from_image(n + 1 + k, std::move(img));
}

SimplicialEpiMono epi_mono_factor(const SimplicialOperator& a) {
    std::vector<int> values; // distinct image values in order
    for (int i = 0; i <= a.src_dim(); ++i)
        if (values.empty() || values.back() != a(i)) values.push_back(a(i));
    const int mid = static_cast<int>(values.size()) - 1;
    std::vector<int> epi(static_cast<size_t>(a.src_dim()) + 1);
    int rank = 0;
    for (int i = 0; i <= a.src_dim(); ++i) {
        if (i > 0 && a(i) > a(i - 1)) ++rank;
        epi[static_cast<size_t>(i)] = rank;
    }
    return SimplicialEpiMono{SimplicialOperator::from_image(mid, std::move(epi)),
                             SimplicialOperator::from_image(a.tgt_dim(), std::move(values))};
}

std::vector<SimplicialOperator> all_operators_s(int m, int n) {
    if (m < 0 || n < 0) throw ParameterError("all_operators_s needs m, n >= 0");
    std::vector<SimplicialOperator> out;
    std::vector<int> img(static_cast<size_t>(m) + 1, 0);
    const std::function<void(int)> rec = [&](int i) {
        if (i > m) {
            out.push_back(SimplicialOperator::from_image(n, img));
            return;
        }
        const int lo = i == 0 ? 0 : img[static_cast<size_t>(i) - 1];
        for (int v = lo; v <= n; ++v) {
            img[static_cast<size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<SimplicialOperator> all_down_operators_s(int m, int n) {
    std::vector<SimplicialOperator> out;
    for (auto& a : all_operators_s(m, n))
        if (a.is_surjective()) out.push_back(a);
    return out;
}

} // namespace comical
