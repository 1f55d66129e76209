#pragma once

#include <ostream>

#include "bsphere/symmetric_poly.hpp"

namespace bsphere {

inline void PrintTo(const SymmetricPoly& p, std::ostream* os) {
    *os << (p.constant() ? "1 + " : "") << "{";
    for (auto d : p.support()) *os << d << " ";
    *os << "}";
    if (p.is_periodic()) *os << " period " << p.period();
}

}  // namespace bsphere
