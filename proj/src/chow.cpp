#include "weylcurves/chow.hpp"

#include <sstream>

namespace weylcurves {

Space::Space(int r_, int s_) : r(r_), s(s_)
{
    if (r < 2) throw DomainError("r must be at least 2, got " + std::to_string(r));
    if (s < 0) throw DomainError("s must be non-negative, got " + std::to_string(s));
}

std::string to_string(const Space& sp)
{
    return "Y^" + std::to_string(sp.r) + "_" + std::to_string(sp.s);
}

template <Kind K>
ClassVector<K>::ClassVector(Space sp, Integer d, std::vector<Integer> m)
    : space_(sp), d_(std::move(d)), m_(std::move(m))
{
    if (m_.size() != static_cast<std::size_t>(sp.s))
        throw ArgumentError("multiplicity vector has length " + std::to_string(m_.size()) + " but s = " +
                            std::to_string(sp.s));
}

template <Kind K>
ClassVector<K>::ClassVector(Space sp, long d, std::initializer_list<long> m)
    : ClassVector(sp, Integer(d), to_integers(m))
{
}

template <Kind K>
Integer ClassVector<K>::multiplicity_sum() const
{
    Integer t = 0;
    for (const auto& x : m_) t += x;
    return t;
}

template <Kind K>
ClassVector<K> ClassVector<K>::operator-() const
{
    std::vector<Integer> m(m_.size());
    for (std::size_t i = 0; i < m_.size(); ++i) m[i] = -m_[i];
    return ClassVector(space_, -d_, std::move(m));
}

template <Kind K>
ClassVector<K> ClassVector<K>::combine(const ClassVector& a, const ClassVector& b, int sign)
{
    require_same_space(a.space_, b.space_);
    std::vector<Integer> m(a.m_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = a.m_[i] + sign * b.m_[i];
    return ClassVector(a.space_, a.d_ + sign * b.d_, std::move(m));
}

template <Kind K>
ClassVector<K> ClassVector<K>::scaled(const Integer& k) const
{
    std::vector<Integer> m(m_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = k * m_[i];
    return ClassVector(space_, k * d_, std::move(m));
}

template class ClassVector<Kind::curve>;
template class ClassVector<Kind::divisor>;

template <Kind K>
std::string to_string(const ClassVector<K>& c)
{
    std::ostringstream os;
    os << '(' << c.d() << ';';
    for (std::size_t i = 0; i < c.m().size(); ++i) os << (i ? "," : "") << c.m()[i];
    os << ")_" << c.r();
    return os.str();
}

template std::string to_string(const CurveClass&);
template std::string to_string(const DivisorClass&);

template <Kind K>
std::size_t ClassHash<K>::operator()(const ClassVector<K>& c) const
{
    auto mix = [](std::size_t h, const Integer& x) {
        std::size_t v = mpz_fdiv_ui(x.get_mpz_t(), 4294967291UL) * 2 + (sgn(x) < 0);
        return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    };
    std::size_t h = mix(static_cast<std::size_t>(c.s()), c.d());
    for (const auto& x : c.m()) h = mix(h, x);
    return h;
}

template struct ClassHash<Kind::curve>;
template struct ClassHash<Kind::divisor>;

std::vector<Integer> to_integers(std::initializer_list<long> xs)
{
    std::vector<Integer> out;
    out.reserve(xs.size());
    for (long x : xs) out.emplace_back(x);
    return out;
}

namespace {

void check_point(const Space& sp, int i)
{
    if (i < 1 || i > sp.s)
        throw ArgumentError("point index " + std::to_string(i) + " outside 1.." + std::to_string(sp.s));
}

} // namespace

CurveClass h(Space sp) { return CurveClass(sp, Integer(1), std::vector<Integer>(sp.s)); }

CurveClass e(Space sp, int i)
{
    check_point(sp, i);
    std::vector<Integer> m(sp.s);
    m[i - 1] = -1;
    return CurveClass(sp, Integer(0), std::move(m));
}

CurveClass line_through(Space sp, int i, int j)
{
    check_point(sp, i);
    check_point(sp, j);
    if (i == j) throw ArgumentError("a line through two points needs distinct points");
    std::vector<Integer> m(sp.s);
    m[i - 1] = 1;
    m[j - 1] = 1;
    return CurveClass(sp, Integer(1), std::move(m));
}

CurveClass anticanonical_curve_class(Space sp)
{
    return CurveClass(sp, Integer(sp.r + 1), std::vector<Integer>(sp.s, Integer(1)));
}

DivisorClass H(Space sp) { return DivisorClass(sp, Integer(1), std::vector<Integer>(sp.s)); }

DivisorClass E(Space sp, int i)
{
    check_point(sp, i);
    std::vector<Integer> m(sp.s);
    m[i - 1] = -1;
    return DivisorClass(sp, Integer(0), std::move(m));
}

DivisorClass canonical_class(Space sp)
{
    return DivisorClass(sp, Integer(-(sp.r + 1)), std::vector<Integer>(sp.s, Integer(-(sp.r - 1))));
}

void require_same_space(const Space& a, const Space& b)
{
    if (!(a == b)) throw DimensionError("space mismatch: " + to_string(a) + " vs " + to_string(b));
}

namespace {

Integer dot_m(const std::vector<Integer>& a, const std::vector<Integer>& b)
{
    Integer t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i] * b[i];
    return t;
}

} // namespace

Integer intersect(const DivisorClass& D, const CurveClass& c)
{
    require_same_space(D.space(), c.space());
    return D.d() * c.d() - dot_m(D.m(), c.m());
}

Integer q_curve(const CurveClass& c) { return bilinear_curve(c, c); }

Integer q_divisor(const DivisorClass& D) { return bilinear_divisor(D, D); }

Integer bilinear_curve(const CurveClass& x, const CurveClass& y)
{
    require_same_space(x.space(), y.space());
    return x.d() * y.d() - (x.r() - 1) * dot_m(x.m(), y.m());
}

Integer bilinear_divisor(const DivisorClass& x, const DivisorClass& y)
{
    require_same_space(x.space(), y.space());
    return (x.r() - 1) * x.d() * y.d() - dot_m(x.m(), y.m());
}

Integer F_squared(Space sp)
{
    Integer r1 = sp.r + 1;
    return r1 * r1 - Integer(sp.s) * (sp.r - 1);
}

Integer anticanonical_degree(const CurveClass& c)
{
    return (c.r() + 1) * c.d() - (c.r() - 1) * c.multiplicity_sum();
}

} // namespace weylcurves
