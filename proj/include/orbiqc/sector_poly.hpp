/**
 * @file sector_poly.hpp
 * @brief Truncated polynomials in the hyperplane class P over a scalar ring.
 *
 * A SectorPoly<C> models sum c_p P^p for p = 0..cap with the relation
 * P^(cap+1) = 0; cap is the complex dimension of the sector the value lives
 * on. The coefficient ring C is NovikovScalar, ZLaurent or Rational.
 */
#ifndef ORBIQC_SECTOR_POLY_HPP
#define ORBIQC_SECTOR_POLY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "orbiqc/rational.hpp"
#include "orbiqc/zlaurent.hpp"

namespace orbiqc {

template <typename C>
class SectorPoly {
public:
    SectorPoly() : coeffs_(1) {}
    explicit SectorPoly(long cap) : coeffs_(check_cap(cap) + 1) {}

    static SectorPoly monomial(long cap, long p, C c) {
        SectorPoly r(cap);
        if (p < 0 || p > cap) throw std::invalid_argument("SectorPoly: power out of range");
        r.coeffs_[static_cast<size_t>(p)] = std::move(c);
        return r;
    }

    static SectorPoly one(long cap) { return monomial(cap, 0, C(1)); }

    long cap() const { return static_cast<long>(coeffs_.size()) - 1; }

    const C& coeff(long p) const {
        if (p < 0 || p > cap()) throw std::invalid_argument("SectorPoly: power out of range");
        return coeffs_[static_cast<size_t>(p)];
    }

    void set_coeff(long p, C c) {
        if (p < 0 || p > cap()) throw std::invalid_argument("SectorPoly: power out of range");
        coeffs_[static_cast<size_t>(p)] = std::move(c);
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    SectorPoly operator-() const {
        SectorPoly r(cap());
        for (long p = 0; p <= cap(); ++p) r.coeffs_[p] = -coeffs_[p];
        return r;
    }

    SectorPoly& operator+=(const SectorPoly& o) {
        require_same_cap(o);
        for (long p = 0; p <= cap(); ++p) coeffs_[p] += o.coeffs_[p];
        return *this;
    }

    SectorPoly& operator-=(const SectorPoly& o) {
        require_same_cap(o);
        for (long p = 0; p <= cap(); ++p) coeffs_[p] -= o.coeffs_[p];
        return *this;
    }

    /// Truncated product: convolution discarding P-powers above cap.
    SectorPoly& operator*=(const SectorPoly& o) {
        require_same_cap(o);
        SectorPoly r(cap());
        for (long a = 0; a <= cap(); ++a) {
            if (coeffs_[a].is_zero()) continue;
            for (long b = 0; a + b <= cap(); ++b) r.coeffs_[a + b] += coeffs_[a] * o.coeffs_[b];
        }
        coeffs_ = std::move(r.coeffs_);
        return *this;
    }

    SectorPoly& operator*=(const C& c) {
        for (auto& v : coeffs_) v = v * c;
        return *this;
    }

    friend SectorPoly operator+(SectorPoly a, const SectorPoly& b) { return a += b; }
    friend SectorPoly operator-(SectorPoly a, const SectorPoly& b) { return a -= b; }
    friend SectorPoly operator*(SectorPoly a, const SectorPoly& b) { return a *= b; }
    friend SectorPoly operator*(SectorPoly a, const C& c) { return a *= c; }
    friend SectorPoly operator*(const C& c, SectorPoly a) { return a *= c; }

    friend bool operator==(const SectorPoly& a, const SectorPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SectorPoly& a, const SectorPoly& b) { return !(a == b); }

    /// Applies f to every coefficient, producing a SectorPoly over the
    /// functor's result ring (e.g. z-coefficient extraction).
    template <typename F>
    auto map_coeffs(F&& f) const {
        using R = decltype(f(coeffs_[0]));
        SectorPoly<R> r(cap());
        for (long p = 0; p <= cap(); ++p) r.set_coeff(p, f(coeffs_[p]));
        return r;
    }

private:
    static long check_cap(long cap) {
        if (cap < 0) throw std::invalid_argument("SectorPoly: negative cap");
        return cap;
    }

    void require_same_cap(const SectorPoly& o) const {
        if (cap() != o.cap())
            throw std::invalid_argument("SectorPoly: cap mismatch (" + std::to_string(cap()) +
                                        " vs " + std::to_string(o.cap()) + ")");
    }

    std::vector<C> coeffs_;  // coeffs_[p] multiplies P^p; size = cap + 1
};

/// Expansion of 1/(w P + b z) modulo P^(cap+1):
///   sum_{p=0}^{cap} (-w)^p b^(-p-1) z^(-p-1) P^p.
/// Multiplying back by (w P + b z) and truncating gives 1. Requires b > 0.
SectorPoly<ZLaurent> expand_reciprocal_factor(long w, const Rational& b, long cap);

/// The linear polynomial w P + b z (b may be zero or negative here; this is
/// the plain polynomial, not an expansion).
SectorPoly<ZLaurent> linear_factor(long cap, const Rational& w, const Rational& b);

} // namespace orbiqc

#endif
