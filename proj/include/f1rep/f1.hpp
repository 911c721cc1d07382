// Vector spaces over F1: finite pointed sets and pointed partial injections.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace f1rep {

// A finite pointed set {0,1,...,dim} with 0 the basepoint. dim = |V| - 1.
struct PointedSet {
    int dim = 0;

    PointedSet() = default;
    explicit PointedSet(int d) : dim(d)
    {
        if (d < 0)
            throw std::invalid_argument("PointedSet: negative dimension");
    }
    bool operator==(const PointedSet&) const = default;
};

// An F1-linear map f: V -> W. Stored densely: img[j-1] = f(j) for the nonzero
// elements j = 1..dim V; f(0) = 0 is implicit. Off the preimage of 0 the map
// must be injective.
class F1Map {
  public:
    F1Map() = default;

    F1Map(int src_dim, int dst_dim, std::vector<int> img)
        : src_(src_dim), dst_(dst_dim), img_(std::move(img))
    {
        std::string why;
        if (!check(src_, dst_, img_, &why))
            throw std::invalid_argument("F1Map: " + why);
    }

    static F1Map zero(int src_dim, int dst_dim)
    {
        return F1Map(src_dim, dst_dim, std::vector<int>(src_dim, 0));
    }

    static F1Map identity(int dim)
    {
        std::vector<int> img(dim);
        for (int j = 1; j <= dim; ++j)
            img[j - 1] = j;
        return F1Map(dim, dim, std::move(img));
    }

    // Validity of a raw image array; on failure *why names the broken constraint.
    static bool check(int src_dim, int dst_dim, const std::vector<int>& img,
                      std::string* why = nullptr);

    int src_dim() const { return src_; }
    int dst_dim() const { return dst_; }
    PointedSet source() const { return PointedSet(src_); }
    PointedSet target() const { return PointedSet(dst_); }
    const std::vector<int>& img() const { return img_; }

    // f(j), defined for 0 <= j <= src_dim.
    int operator()(int j) const { return j == 0 ? 0 : img_[j - 1]; }

    bool is_zero() const;
    bool is_injective() const;   // empty kernel: no nonzero element maps to 0
    bool is_surjective() const;  // every nonzero target element is hit
    bool is_bijective() const { return is_injective() && is_surjective(); }

    bool operator==(const F1Map&) const = default;

  private:
    int src_ = 0;
    int dst_ = 0;
    std::vector<int> img_;
};

// g o f. Requires f.target == g.source.
F1Map compose(const F1Map& g, const F1Map& f);

// The duality f^t: W -> V, sending each nonzero image element to its unique
// preimage and everything else to 0.
F1Map dual(const F1Map& f);

// { nonzero j : f(j) = 0 }, ascending.
std::vector<int> kernel_elements(const F1Map& f);

// f(V) \ {0}, ascending.
std::vector<int> image_elements(const F1Map& f);

// All valid F1Maps V -> W for the given dimensions, in lexicographic order of
// the image array. Their number is sum_k C(dimV,k) C(dimW,k) k!.
std::vector<F1Map> all_f1_maps(int src_dim, int dst_dim);

}  // namespace f1rep
