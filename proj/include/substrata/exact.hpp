#ifndef SUBSTRATA_EXACT_HPP
#define SUBSTRATA_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace substrata {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace substrata

#endif  // SUBSTRATA_EXACT_HPP
