#pragma once

#include <string>
#include <vector>

#include "rackkit/rack.hpp"

namespace rackkit {

/// Names accepted by builtin().
std::vector<std::string> builtin_names();

/// Built-in example rack bialgebras:
///   nc5       non-cocommutative 1,x,y,z,t example
///   nc5_c0    its cocommutative degeneration (x,y,z,t primitive)
///   trivial1  one-element rack a◁a = a, linearised and counitised
///   gg1       basis 1,g with g group-like and g◁g = 1
///   conjZ2    conjugation rack of Z/2 (the trivial rack on two elements)
///   abelian1  one-dimensional abelian Leibniz algebra
///   leibniz2  [x,x] = y, other brackets zero
///   lie2      [x,y] = x = −[y,x]
///   trivial2  a◁b = ε(b)a on k1 ⊕ span{a,b} with a,b primitive
QRack builtin(const std::string& name);

bool is_builtin(const std::string& name);

LeibnizAlgebra leibniz_abelian1();
LeibnizAlgebra leibniz_leibniz2();
LeibnizAlgebra leibniz_lie2();

}  // namespace rackkit
