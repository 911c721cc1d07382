// F1-representations of a quiver: a pointed set per vertex, a partial
// injection per arrow.
#pragma once

#include "f1rep/f1.hpp"
#include "f1rep/quiver.hpp"

namespace f1rep {

class Representation {
  public:
    Representation() = default;
    Representation(QuiverPtr quiver, DimensionVector dims, std::vector<F1Map> maps);

    // The zero representation.
    static Representation zero(QuiverPtr quiver);

    const QuiverPtr& quiver() const { return quiver_; }
    const DimensionVector& dims() const { return dims_; }
    int dim(int v) const { return dims_[v - 1]; }
    const F1Map& map(int arrow) const { return maps_[arrow]; }
    const std::vector<F1Map>& maps() const { return maps_; }
    int total_dim() const { return total(dims_); }
    bool is_zero() const { return total_dim() == 0; }

    bool operator==(const Representation& o) const
    {
        return *quiver_ == *o.quiver_ && dims_ == o.dims_ && maps_ == o.maps_;
    }

  private:
    QuiverPtr quiver_;
    DimensionVector dims_;
    std::vector<F1Map> maps_;
};

// The interval representation [k,l] of the linear A_n quiver: F1 on vertices
// k..l, identity arrow maps inside, zero elsewhere. l < k gives the zero
// representation.
Representation build_interval(const QuiverPtr& q, int k, int l);

DimensionVector dimension_vector(const Representation& m);

// M (+) N with N's elements listed after M's at each vertex. The variant
// returning the canonical inclusions and projections lives in morphism.hpp.
Representation direct_sum_object(const Representation& m, const Representation& n);

// Relabel every vertex set by the given permutations: perm[v-1][x-1] is the
// new label of element x at vertex v. Arrow maps are transported.
Representation relabel(const Representation& m, const std::vector<std::vector<int>>& perm);

}  // namespace f1rep
