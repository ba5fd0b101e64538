#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace chromabound {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace chromabound
