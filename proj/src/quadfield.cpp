#include "hmf/quadfield.hpp"

#include <sstream>

namespace hmf {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
    return Rat(num, den);
}

std::string QuadElem::str() const {
    if (y == 0) return rat_str(x);
    std::string s = rat_str(x);
    s += (y > 0) ? "+" : "-";
    Rat ay = y > 0 ? y : Rat(-y);
    if (ay != 1) { s += rat_str(ay); s += "*"; }
    s += "sqrt5";
    return s;
}

bool OKElem::divides(const OKElem& target, OKElem* quotient) const {
    if (is_zero()) return target.is_zero();
    QuadElem q = target.to_quad() / to_quad();
    // q = x + y sqrt5 lies in O_K iff 2x, 2y are integers of equal parity
    Rat tu = 2 * q.x, tv = 2 * q.y;
    if (denominator(tu) != 1 || denominator(tv) != 1) return false;
    Int iu = numerator(tu), iv = numerator(tv);
    if (((iu - iv) % 2) != 0) return false;
    if (quotient) *quotient = OKElem(iu, iv);
    return true;
}

}  // namespace hmf
