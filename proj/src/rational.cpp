#include "prelie/rational.hpp"

#include <ostream>

namespace prelie {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
    if (v.get_den() == 0)
        throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

}  // namespace prelie
