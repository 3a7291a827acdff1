#pragma once

// Variant payloads behind AnalyticFn, exposed for visitors (serialization,
// structural inspection).  Construction still goes through the AnalyticFn
// factories so the parameter invariants hold.

#include <variant>

#include "lipop/fn.hpp"

namespace lipop {

struct PolyNode {
    std::vector<cplx> coeffs; // c_0 .. c_N
};
struct PowerNode {
    cplx c, a;
    double gamma;
};
struct TestFnNode {
    cplx a;
    double alpha;
};
struct AffineNode {
    cplx s, c;
};
struct BlaschkeNode {
    cplx a;
};
struct SumNode {
    std::vector<AnalyticFn> terms;
};
struct ScaleNode {
    cplx c;
    AnalyticFn inner;
};
struct ProductNode {
    AnalyticFn lhs, rhs;
};

struct AnalyticFn::Node {
    std::variant<PolyNode, PowerNode, TestFnNode, AffineNode, BlaschkeNode, SumNode, ScaleNode,
                 ProductNode>
        v;
};

} // namespace lipop
