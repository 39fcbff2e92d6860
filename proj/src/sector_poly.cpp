#include "orbiqc/sector_poly.hpp"

namespace orbiqc {

SectorPoly<ZLaurent> expand_reciprocal_factor(long w, const Rational& b, long cap) {
    if (w <= 0) throw std::invalid_argument("expand_reciprocal_factor: weight must be positive");
    if (!(b > Rational(0)))
        throw std::invalid_argument(
            "expand_reciprocal_factor: b must be positive (division by zero in z-leading "
            "coefficient)");
    SectorPoly<ZLaurent> r(cap);
    Rational c = b.inverse();          // (-w)^p / b^(p+1), built incrementally
    for (long p = 0; p <= cap; ++p) {
        r.set_coeff(p, ZLaurent::monomial(c, -p - 1));
        c *= Rational(-w) / b;
    }
    return r;
}

SectorPoly<ZLaurent> linear_factor(long cap, const Rational& w, const Rational& b) {
    SectorPoly<ZLaurent> r(cap);
    r.set_coeff(0, ZLaurent::monomial(b, 1));
    if (cap >= 1) r.set_coeff(1, ZLaurent(w));
    return r;
}

} // namespace orbiqc
