#include "f1rep/rep.hpp"

#include <stdexcept>
#include <string>

namespace f1rep {

Representation::Representation(QuiverPtr quiver, DimensionVector dims, std::vector<F1Map> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps))
{
    if (!quiver_)
        throw std::invalid_argument("Representation: null quiver");
    const int n = quiver_->vertex_count();
    if (static_cast<int>(dims_.size()) != n)
        throw std::invalid_argument("Representation: dims has length " +
                                    std::to_string(dims_.size()) + ", expected " +
                                    std::to_string(n));
    for (int d : dims_)
        if (d < 0)
            throw std::invalid_argument("Representation: negative dimension");
    if (static_cast<int>(maps_.size()) != quiver_->arrow_count())
        throw std::invalid_argument("Representation: expected one map per arrow");
    for (int a = 0; a < quiver_->arrow_count(); ++a) {
        const Arrow& ar = quiver_->arrow(a);
        if (maps_[a].src_dim() != dims_[ar.source - 1] || maps_[a].dst_dim() != dims_[ar.target - 1])
            throw std::invalid_argument("Representation: map for arrow '" + ar.id +
                                        "' has dimensions incompatible with its endpoints");
    }
}

Representation Representation::zero(QuiverPtr quiver)
{
    DimensionVector dims(quiver->vertex_count(), 0);
    std::vector<F1Map> maps(quiver->arrow_count(), F1Map::zero(0, 0));
    return Representation(std::move(quiver), std::move(dims), std::move(maps));
}

Representation build_interval(const QuiverPtr& q, int k, int l)
{
    if (!q->is_linear_chain())
        throw std::invalid_argument("build_interval: quiver is not the linear A_n chain");
    const int n = q->vertex_count();
    if (k < 1 || k > n || l > n)
        throw std::invalid_argument("build_interval: interval [" + std::to_string(k) + "," +
                                    std::to_string(l) + "] out of range for A_" +
                                    std::to_string(n));
    if (l < k)
        return Representation::zero(q);
    DimensionVector dims(n, 0);
    for (int i = k; i <= l; ++i)
        dims[i - 1] = 1;
    std::vector<F1Map> maps;
    for (int a = 0; a < q->arrow_count(); ++a) {
        const Arrow& ar = q->arrow(a);
        int s = dims[ar.source - 1], t = dims[ar.target - 1];
        // Arrow i+1 -> i carries the identity iff both endpoints sit in [k,l].
        if (s == 1 && t == 1)
            maps.push_back(F1Map::identity(1));
        else
            maps.push_back(F1Map::zero(s, t));
    }
    return Representation(q, std::move(dims), std::move(maps));
}

DimensionVector dimension_vector(const Representation& m)
{
    return m.dims();
}

Representation direct_sum_object(const Representation& m, const Representation& n)
{
    if (!(*m.quiver() == *n.quiver()))
        throw std::invalid_argument("direct_sum: quiver mismatch");
    const Quiver& q = *m.quiver();
    DimensionVector dims(q.vertex_count());
    for (int v = 1; v <= q.vertex_count(); ++v)
        dims[v - 1] = m.dim(v) + n.dim(v);
    std::vector<F1Map> maps;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const F1Map &fm = m.map(a), &fn = n.map(a);
        std::vector<int> img(dims[ar.source - 1]);
        for (int j = 1; j <= fm.src_dim(); ++j)
            img[j - 1] = fm(j);
        int shift_s = fm.src_dim(), shift_t = fm.dst_dim();
        for (int j = 1; j <= fn.src_dim(); ++j) {
            int w = fn(j);
            img[shift_s + j - 1] = w == 0 ? 0 : shift_t + w;
        }
        maps.emplace_back(dims[ar.source - 1], dims[ar.target - 1], std::move(img));
    }
    return Representation(m.quiver(), std::move(dims), std::move(maps));
}

Representation relabel(const Representation& m, const std::vector<std::vector<int>>& perm)
{
    const Quiver& q = *m.quiver();
    std::vector<F1Map> maps;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const std::vector<int>& ps = perm[ar.source - 1];
        const std::vector<int>& pt = perm[ar.target - 1];
        const F1Map& f = m.map(a);
        std::vector<int> img(f.src_dim());
        for (int j = 1; j <= f.src_dim(); ++j) {
            int w = f(j);
            img[ps[j - 1] - 1] = w == 0 ? 0 : pt[w - 1];
        }
        maps.emplace_back(f.src_dim(), f.dst_dim(), std::move(img));
    }
    return Representation(m.quiver(), m.dims(), std::move(maps));
}

}  // namespace f1rep
