#pragma once

#include <string>
#include <vector>

#include "uqmod/error.hpp"

namespace uqmod {

/// Validated Cartan matrix of finite type together with its connected
/// components, per-component Dynkin type tags, and minimal symmetrizers.
struct CartanComponent {
    std::vector<int> vertices; // ascending
    std::string type;          // "A".."G"
    int rank = 0;
    long positive_roots = 0;
    int highest_root_height = 0;
};

struct ComponentData {
    std::vector<CartanComponent> components;
    std::vector<int> comp_of; // vertex -> component index
    std::vector<long> d;      // minimal symmetrizers, d_i in {1,2,3}
};

class CartanMatrix {
public:
    CartanMatrix() = default;

    int rank() const { return static_cast<int>(a_.size()); }
    long entry(int i, int j) const { return a_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const std::vector<std::vector<long>>& entries() const { return a_; }
    const ComponentData& components() const { return comp_; }
    bool same_component(int i, int j) const { return comp_.comp_of[static_cast<size_t>(i)] == comp_.comp_of[static_cast<size_t>(j)]; }
    long d(int i) const { return comp_.d[static_cast<size_t>(i)]; }

    bool operator==(const CartanMatrix& o) const { return a_ == o.a_; }

    friend CartanMatrix validate_cartan(const std::vector<std::vector<long>>& m);

private:
    std::vector<std::vector<long>> a_;
    ComponentData comp_;
};

/// Checks the generalized-Cartan axioms and recognizes each connected
/// component as a finite-type Dynkin diagram. Err::NotGeneralizedCartan or
/// Err::NotFiniteType on failure, naming the offending entry or component.
CartanMatrix validate_cartan(const std::vector<std::vector<long>>& m);

/// Cartan matrix of the given type letter and rank (Bourbaki numbering).
std::vector<std::vector<long>> cartan_of_type(char type, int rank);

/// DOT rendering of the Dynkin diagram (multi-edges drawn with labels).
std::string dynkin_dot(const CartanMatrix& cm);

} // namespace uqmod
