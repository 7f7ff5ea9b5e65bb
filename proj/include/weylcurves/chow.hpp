#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "weylcurves/errors.hpp"

namespace weylcurves {

using Integer = mpz_class;

// Blow-up of P^r at s general points.
struct Space {
    int r = 2;
    int s = 0;

    Space() = default;
    Space(int r_, int s_);

    friend bool operator==(const Space&, const Space&) = default;
};

std::string to_string(const Space& sp);

enum class Kind { curve, divisor };

// (d; m_1..m_s) in A^{r-1} (curves) or A^1 (divisors). Multiplicities are kept in
// the order given; sorting is always an explicit step.
template <Kind K>
class ClassVector {
public:
    static constexpr Kind kind = K;

    ClassVector(Space sp, Integer d, std::vector<Integer> m);
    ClassVector(Space sp, long d, std::initializer_list<long> m);

    static ClassVector zero(Space sp) { return ClassVector(sp, Integer(0), std::vector<Integer>(sp.s)); }

    const Space& space() const { return space_; }
    int r() const { return space_.r; }
    int s() const { return space_.s; }
    const Integer& d() const { return d_; }
    const std::vector<Integer>& m() const { return m_; }
    // 1-based, as points are labelled in the literature
    const Integer& mult(int i) const { return m_.at(static_cast<std::size_t>(i - 1)); }

    Integer multiplicity_sum() const;

    ClassVector operator-() const;
    friend ClassVector operator+(const ClassVector& a, const ClassVector& b) { return combine(a, b, 1); }
    friend ClassVector operator-(const ClassVector& a, const ClassVector& b) { return combine(a, b, -1); }
    ClassVector scaled(const Integer& k) const;
    friend ClassVector operator*(const Integer& k, const ClassVector& a) { return a.scaled(k); }

    friend bool operator==(const ClassVector& a, const ClassVector& b)
    {
        return a.space_ == b.space_ && a.d_ == b.d_ && a.m_ == b.m_;
    }

private:
    static ClassVector combine(const ClassVector& a, const ClassVector& b, int sign);

    Space space_;
    Integer d_;
    std::vector<Integer> m_;
};

using CurveClass = ClassVector<Kind::curve>;
using DivisorClass = ClassVector<Kind::divisor>;

template <Kind K>
std::string to_string(const ClassVector<K>& c);

template <Kind K>
std::ostream& operator<<(std::ostream& os, const ClassVector<K>& c)
{
    return os << to_string(c);
}

// named classes; point indices are 1-based
CurveClass h(Space sp);
CurveClass e(Space sp, int i);
CurveClass line_through(Space sp, int i, int j);
CurveClass anticanonical_curve_class(Space sp);
DivisorClass H(Space sp);
DivisorClass E(Space sp, int i);
DivisorClass canonical_class(Space sp);

void require_same_space(const Space& a, const Space& b);

Integer intersect(const DivisorClass& D, const CurveClass& c);
Integer q_curve(const CurveClass& c);
Integer q_divisor(const DivisorClass& D);
Integer bilinear_curve(const CurveClass& x, const CurveClass& y);
Integer bilinear_divisor(const DivisorClass& x, const DivisorClass& y);
Integer F_squared(Space sp);

inline Integer q_form(const CurveClass& c) { return q_curve(c); }
inline Integer q_form(const DivisorClass& D) { return q_divisor(D); }

// <c, F>, equal to (-K . c)
Integer anticanonical_degree(const CurveClass& c);

std::vector<Integer> to_integers(std::initializer_list<long> xs);

template <Kind K>
struct ClassHash {
    std::size_t operator()(const ClassVector<K>& c) const;
};

} // namespace weylcurves
