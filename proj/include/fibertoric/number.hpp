#ifndef FIBERTORIC_NUMBER_HPP
#define FIBERTORIC_NUMBER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fibertoric
{

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<RatVector>;

/// Thrown for violated preconditions of kernel operations.
class kernel_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

inline Integer numerator(const Rational &q)
{
    return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational &q)
{
    return boost::multiprecision::denominator(q);
}

inline bool is_integral(const Rational &q)
{
    return denominator(q) == 1;
}

inline Integer gcd(const Integer &a, const Integer &b)
{
    return boost::multiprecision::gcd(a, b);
}

inline Integer abs(const Integer &a)
{
    return a < 0 ? Integer(-a) : a;
}

inline Rational abs(const Rational &a)
{
    return a < 0 ? Rational(-a) : a;
}

inline Integer factorial(unsigned n)
{
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

inline Integer binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    return factorial(n) / (factorial(k) * factorial(n - k));
}

/// Canonical text form: "p/q" with q > 0 and gcd(p, q) = 1, or "p" when q = 1.
inline std::string to_string(const Rational &q)
{
    if (is_integral(q)) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const Integer &z)
{
    return z.str();
}

namespace detail
{

inline Integer parse_integer(std::string_view s)
{
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw kernel_error("malformed integer: '" + std::string(s) + "'");
    }
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw kernel_error("malformed integer: '" + std::string(s) + "'");
        }
    }
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
}

} // namespace detail

/// Parses "p", "-p" or "p/q" (q != 0) into a reduced rational.
inline Rational parse_rational(std::string_view s)
{
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(detail::parse_integer(s));
    }
    const Integer p = detail::parse_integer(s.substr(0, slash));
    const Integer q = detail::parse_integer(s.substr(slash + 1));
    if (q == 0) {
        throw kernel_error("zero denominator in rational: '" + std::string(s) + "'");
    }
    return q < 0 ? Rational(-p, -q) : Rational(p, q);
}

inline RatVector to_rational(const IntVector &v)
{
    return RatVector(v.begin(), v.end());
}

template <typename A, typename B>
auto dot(const std::vector<A> &a, const std::vector<B> &b)
{
    if (a.size() != b.size()) {
        throw kernel_error("dot: rank mismatch");
    }
    using R = std::conditional_t<std::is_same_v<A, Integer> && std::is_same_v<B, Integer>, Integer,
                                 Rational>;
    R s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += R(a[i]) * R(b[i]);
    }
    return s;
}

} // namespace fibertoric

#endif
