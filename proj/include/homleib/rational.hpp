#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace homleib {

// Exact field of scalars. cpp_rational keeps denominator > 0 and the
// fraction reduced after every operation, which is exactly the canonical
// form the rest of the library relies on.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Serialized form is "p" or "p/q" with q > 0.
inline std::string rationalToString(const Rational &r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parseRational(const std::string &s, const std::string &where = "") {
    auto fail = [&](const std::string &msg) -> Rational {
        throw InputError("bad rational \"" + s + "\"" +
                         (where.empty() ? "" : " at " + where) + ": " + msg);
    };
    if (s.empty())
        return fail("empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty())
            return fail("missing numerator or denominator");
        Integer q(den);
        if (q == 0)
            return fail("zero denominator");
        return Rational(Integer(num), q);
    } catch (const InputError &) {
        throw;
    } catch (const std::exception &) {
        return fail("not an integer fraction");
    }
}

} // namespace homleib
