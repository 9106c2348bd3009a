#pragma once

// Exact arithmetic in the real quadratic field K = Q(sqrt(5)) and its ring
// of integers O_K = Z[(1+sqrt5)/2].  The field is fixed: all explicit
// constructions downstream (phi_2, chi_5, chi_6, the Klein-type relation)
// live over Q(sqrt5) only.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace hmf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;  // always stored reduced

inline Rat rat(long n, long d = 1) { return Rat(n, d); }

// Element x + y*sqrt5 of K.  Equality is componentwise; there is no hidden
// denominator, so values compare structurally.
class QuadElem {
public:
    Rat x, y;

    QuadElem() : x(0), y(0) {}
    QuadElem(Rat x_, Rat y_ = Rat(0)) : x(std::move(x_)), y(std::move(y_)) {}
    QuadElem(long n) : x(n), y(0) {}

    static QuadElem sqrt5() { return QuadElem(Rat(0), Rat(1)); }
    // fundamental unit eps = (1+sqrt5)/2 and its conjugate
    static QuadElem eps() { return QuadElem(Rat(1, 2), Rat(1, 2)); }
    static QuadElem eps_conj() { return QuadElem(Rat(1, 2), Rat(-1, 2)); }

    bool is_zero() const { return x == 0 && y == 0; }
    bool is_rational() const { return y == 0; }

    QuadElem conj() const { return QuadElem(x, -y); }
    Rat trace() const { return 2 * x; }
    Rat norm() const { return x * x - 5 * y * y; }

    QuadElem operator-() const { return QuadElem(-x, -y); }
    QuadElem operator+(const QuadElem& o) const { return QuadElem(x + o.x, y + o.y); }
    QuadElem operator-(const QuadElem& o) const { return QuadElem(x - o.x, y - o.y); }
    QuadElem operator*(const QuadElem& o) const {
        return QuadElem(x * o.x + 5 * y * o.y, x * o.y + y * o.x);
    }
    QuadElem inverse() const {
        Rat n = norm();
        if (n == 0) throw std::domain_error("QuadElem: division by zero");
        return QuadElem(x / n, -y / n);
    }
    QuadElem operator/(const QuadElem& o) const { return *this * o.inverse(); }

    QuadElem& operator+=(const QuadElem& o) { x += o.x; y += o.y; return *this; }
    QuadElem& operator-=(const QuadElem& o) { x -= o.x; y -= o.y; return *this; }
    QuadElem& operator*=(const QuadElem& o) { return *this = *this * o; }

    bool operator==(const QuadElem& o) const { return x == o.x && y == o.y; }
    bool operator!=(const QuadElem& o) const { return !(*this == o); }

    // Exact sign of x + y*sqrt5 as a real number (-1, 0, +1).
    int sign() const {
        int sx = x.sign(), sy = y.sign();
        if (sy == 0) return sx;
        if (sx == 0) return sy;
        if (sx == sy) return sx;
        // x and y have opposite signs: decided by x^2 vs 5 y^2
        Rat d = x * x - 5 * y * y;
        if (d == 0) return 0;  // only possible for x = y = 0, kept for safety
        return d.sign() > 0 ? sx : sy;
    }

    bool is_positive() const { return sign() > 0; }
    // positive under both embeddings (strict)
    bool is_totally_positive() const { return sign() > 0 && conj().sign() > 0; }

    // real embeddings sigma1 (sqrt5 -> +2.236...) and sigma2 (-2.236...)
    double embed1() const {
        return static_cast<double>(x) + static_cast<double>(y) * kSqrt5;
    }
    double embed2() const {
        return static_cast<double>(x) - static_cast<double>(y) * kSqrt5;
    }

    std::string str() const;

    static constexpr double kSqrt5 = 2.2360679774997896964091736687747;
};

inline QuadElem operator*(const Rat& c, const QuadElem& v) { return QuadElem(c * v.x, c * v.y); }
inline QuadElem operator*(long c, const QuadElem& v) { return QuadElem(c * v.x, c * v.y); }

// Element (u + v*sqrt5)/2 of O_K; requires u = v (mod 2).
class OKElem {
public:
    Int u, v;

    OKElem() : u(0), v(0) {}
    OKElem(Int u_, Int v_) : u(std::move(u_)), v(std::move(v_)) {
        if (((u - v) % 2) != 0)
            throw std::invalid_argument("OKElem: u and v must have equal parity");
    }
    OKElem(long n) : u(2 * n), v(0) {}

    static OKElem eps() { return OKElem(Int(1), Int(1)); }
    static OKElem eps_conj() { return OKElem(Int(1), Int(-1)); }
    static OKElem sqrt5() { return OKElem(Int(0), Int(2)); }

    bool is_zero() const { return u == 0 && v == 0; }

    QuadElem to_quad() const { return QuadElem(Rat(u, 2), Rat(v, 2)); }
    OKElem conj() const { return OKElem(u, -v); }
    Int norm() const { return (u * u - 5 * v * v) / 4; }  // exact: u^2 = 5v^2 mod 4
    Int trace() const { return u; }

    OKElem operator-() const { return OKElem(-u, -v); }
    OKElem operator+(const OKElem& o) const { return OKElem(u + o.u, v + o.v); }
    OKElem operator-(const OKElem& o) const { return OKElem(u - o.u, v - o.v); }
    OKElem operator*(const OKElem& o) const {
        // ((u1+v1 s)/2)((u2+v2 s)/2) = ((u1u2+5v1v2) + (u1v2+u2v1) s)/4
        Int a = u * o.u + 5 * v * o.v;
        Int b = u * o.v + v * o.u;
        return OKElem(a / 2, b / 2);  // a, b are even when both factors are integral
    }

    bool operator==(const OKElem& o) const { return u == o.u && v == o.v; }
    bool operator!=(const OKElem& o) const { return !(*this == o); }
    bool operator<(const OKElem& o) const { return u != o.u ? u < o.u : v < o.v; }

    bool is_unit() const { Int n = norm(); return n == 1 || n == -1; }

    // exact quotient if divisible in O_K, otherwise nullopt-like flag
    bool divides(const OKElem& target, OKElem* quotient = nullptr) const;
};

std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);

}  // namespace hmf
