// Morphisms of representations and exhaustive morphism enumeration.
#pragma once

#include <functional>
#include <optional>

#include "f1rep/rep.hpp"

namespace f1rep {

// A morphism M -> N: one F1Map per vertex, commuting with the arrow maps.
class RepMorphism {
  public:
    RepMorphism() = default;
    RepMorphism(Representation source, Representation target, std::vector<F1Map> components);

    static RepMorphism identity(const Representation& m);
    static RepMorphism zero(const Representation& source, const Representation& target);

    const Representation& source() const { return source_; }
    const Representation& target() const { return target_; }
    const F1Map& component(int v) const { return components_[v - 1]; }
    const std::vector<F1Map>& components() const { return components_; }

    // phi_v(x)
    int apply(int v, int x) const { return components_[v - 1](x); }

    bool is_zero() const;

    bool operator==(const RepMorphism&) const = default;

    // Raw component arrays commute with the arrow maps of M and N?
    static bool commutes(const Representation& m, const Representation& n,
                         const std::vector<std::vector<int>>& comp);

  private:
    Representation source_, target_;
    std::vector<F1Map> components_;
};

RepMorphism compose(const RepMorphism& g, const RepMorphism& f);
RepMorphism invert(const RepMorphism& iso);

bool is_mono(const RepMorphism& phi);
bool is_epi(const RepMorphism& phi);
bool is_iso(const RepMorphism& phi);

struct MorphismOptions {
    // pins[v-1][x-1]: required value (0..dim N_v), or -1 for free.
    const std::vector<std::vector<int>>* pins = nullptr;
    bool bijective = false;
};

// Enumerate component arrays of morphisms M -> N in lexicographic order,
// pruning with the arrow constraints as elements get assigned. The callback
// returns false to stop; the function returns false iff it was stopped.
bool for_each_morphism(const Representation& m, const Representation& n,
                       const MorphismOptions& opt,
                       const std::function<bool(const std::vector<std::vector<int>>&)>& yield);

// All morphisms M -> N, zero morphism included, ordered by component encoding.
std::vector<RepMorphism> enumerate_morphisms(const Representation& m, const Representation& n);

// Number of nonzero morphisms (the pointed-set dimension of Hom(M,N)).
int hom_dim(const Representation& m, const Representation& n);

std::vector<RepMorphism> enumerate_isos(const Representation& m, const Representation& n);

// M (+) N together with the canonical inclusions and projections.
struct DirectSumResult {
    Representation sum;
    RepMorphism incl_left, incl_right, proj_left, proj_right;
};
DirectSumResult direct_sum(const Representation& m, const Representation& n);

}  // namespace f1rep
