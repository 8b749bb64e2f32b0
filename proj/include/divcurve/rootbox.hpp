#ifndef DIVCURVE_ROOTBOX_HPP
#define DIVCURVE_ROOTBOX_HPP

#include <vector>

#include "divcurve/interval.hpp"
#include "divcurve/intpoly.hpp"

namespace divcurve {

// Complex rectangle with rational endpoints isolating exactly one root of an
// associated squarefree polynomial.
struct RootBox {
    mpq_class re_lo, re_hi, im_lo, im_hi;
    long prec = 64;  // working precision the box was certified at

    mpq_class re_width() const { return re_hi - re_lo; }
    mpq_class im_width() const { return im_hi - im_lo; }
    bool contains(const RootBox& inner) const {
        return re_lo <= inner.re_lo && inner.re_hi <= re_hi && im_lo <= inner.im_lo && inner.im_hi <= im_hi;
    }
    bool intersects(const RootBox& o) const {
        return re_lo <= o.re_hi && o.re_lo <= re_hi && im_lo <= o.im_hi && o.im_lo <= im_hi;
    }
};

bool rootbox_less(const RootBox& a, const RootBox& b);

ComplexInterval to_interval(const RootBox& b, mpfr_prec_t prec);

// All complex roots of the squarefree part of a, as disjoint boxes of width
// at most `width`, sorted by position. Certified: each box contains exactly
// one root, the union covers all roots.
std::vector<RootBox> isolate_roots(const IntPoly& a, const mpq_class& width);

// Shrink `box` (isolating one root of squarefree `poly`) to width <= `width`.
// The result is contained in `box`.
RootBox refine_box(const IntPoly& poly, const RootBox& box, const mpq_class& width);

// Interval enclosure of the unique root in `box`, at the requested precision
// (refines internally as needed).
ComplexInterval root_interval(const IntPoly& poly, RootBox& box, mpfr_prec_t prec);

}  // namespace divcurve

#endif
