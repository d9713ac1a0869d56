#pragma once

#include <vector>

namespace rcat {

/// Product of a finite family: the object plus one projection per factor.
template <class O, class M>
struct ProdData {
    O obj;
    std::vector<M> legs;  // projections obj -> factor
    std::vector<O> factors;
};

/// Coproduct of a finite family: the object plus one injection per summand.
template <class O, class M>
struct CoprodData {
    O obj;
    std::vector<M> legs;  // injections summand -> obj
    std::vector<O> factors;
};

}  // namespace rcat
