#include "f1rep/f1.hpp"

#include <algorithm>

namespace f1rep {

bool F1Map::check(int src_dim, int dst_dim, const std::vector<int>& img, std::string* why)
{
    auto fail = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };
    if (src_dim < 0 || dst_dim < 0)
        return fail("negative dimension");
    if (static_cast<int>(img.size()) != src_dim)
        return fail("image array has length " + std::to_string(img.size()) +
                    ", expected " + std::to_string(src_dim));
    std::vector<int> seen_at(dst_dim + 1, 0);
    for (int j = 1; j <= src_dim; ++j) {
        int w = img[j - 1];
        if (w < 0 || w > dst_dim)
            return fail("element " + std::to_string(j) + " maps to " + std::to_string(w) +
                        ", outside 0.." + std::to_string(dst_dim));
        if (w != 0) {
            if (seen_at[w] != 0)
                return fail("elements " + std::to_string(seen_at[w]) + " and " +
                            std::to_string(j) + " both map to " + std::to_string(w) +
                            " (injectivity off the basepoint broken)");
            seen_at[w] = j;
        }
    }
    return true;
}

bool F1Map::is_zero() const
{
    return std::all_of(img_.begin(), img_.end(), [](int w) { return w == 0; });
}

bool F1Map::is_injective() const
{
    return std::all_of(img_.begin(), img_.end(), [](int w) { return w != 0; });
}

bool F1Map::is_surjective() const
{
    int hit = 0;
    for (int w : img_)
        if (w != 0)
            ++hit;
    return hit == dst_;
}

F1Map compose(const F1Map& g, const F1Map& f)
{
    if (f.dst_dim() != g.src_dim())
        throw std::invalid_argument("compose: target of f has dim " +
                                    std::to_string(f.dst_dim()) + " but source of g has dim " +
                                    std::to_string(g.src_dim()));
    std::vector<int> img(f.src_dim());
    for (int j = 1; j <= f.src_dim(); ++j)
        img[j - 1] = g(f(j));
    return F1Map(f.src_dim(), g.dst_dim(), std::move(img));
}

F1Map dual(const F1Map& f)
{
    std::vector<int> img(f.dst_dim(), 0);
    for (int j = 1; j <= f.src_dim(); ++j) {
        int w = f(j);
        if (w != 0)
            img[w - 1] = j;
    }
    return F1Map(f.dst_dim(), f.src_dim(), std::move(img));
}

std::vector<int> kernel_elements(const F1Map& f)
{
    std::vector<int> out;
    for (int j = 1; j <= f.src_dim(); ++j)
        if (f(j) == 0)
            out.push_back(j);
    return out;
}

std::vector<int> image_elements(const F1Map& f)
{
    std::vector<int> out;
    for (int j = 1; j <= f.src_dim(); ++j)
        if (f(j) != 0)
            out.push_back(f(j));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<F1Map> all_f1_maps(int src_dim, int dst_dim)
{
    std::vector<F1Map> out;
    std::vector<int> img(src_dim, 0);
    std::vector<char> used(dst_dim + 1, 0);
    auto rec = [&](auto&& self, int j) -> void {
        if (j > src_dim) {
            out.emplace_back(src_dim, dst_dim, img);
            return;
        }
        for (int w = 0; w <= dst_dim; ++w) {
            if (w != 0 && used[w])
                continue;
            img[j - 1] = w;
            if (w != 0)
                used[w] = 1;
            self(self, j + 1);
            if (w != 0)
                used[w] = 0;
        }
        img[j - 1] = 0;
    };
    rec(rec, 1);
    return out;
}

}  // namespace f1rep
