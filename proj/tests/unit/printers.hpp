#pragma once

#include <string>

#include "doctest.h"
#include "homlie/qrational.hpp"

namespace doctest {
template <>
struct StringMaker<homlie::QRational> {
  static String convert(const homlie::QRational& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<homlie::LaurentPoly> {
  static String convert(const homlie::LaurentPoly& x) { return x.to_string().c_str(); }
};
}  // namespace doctest
