#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace heis {

/// Arbitrary-precision signed integer used for every coordinate and matrix entry.
using integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// Thrown by every textual parser in the library.
class parse_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline integer abs(const integer &n) { return n < 0 ? integer(-n) : n; }

// Quotient rounded toward negative infinity.
inline integer floor_div(const integer &num, const integer &den)
{
  integer q = num / den;
  if (q * den != num && ((num < 0) != (den < 0)))
    --q;
  return q;
}

// Quotient rounded to the nearest integer, ties toward positive infinity.
inline integer round_div(const integer &num, const integer &den)
{
  return floor_div(2 * num + den, 2 * den);
}

/// n(n-1)/2, exact for every integer n.
inline integer choose2(const integer &n) { return n * (n - 1) / 2; }

inline std::string to_string(const integer &n) { return n.str(); }

/// Parses an optional leading minus followed by one or more decimal digits.
inline integer parse_integer(std::string_view text)
{
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-')
    ++i;
  if (i == text.size())
    throw parse_error("expected integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9')
      throw parse_error("expected integer, got '" + std::string(text) + "'");
  return integer(std::string(text));
}

} // namespace heis
