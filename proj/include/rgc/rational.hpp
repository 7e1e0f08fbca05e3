#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace rgc {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& q) {
  return q.str();
}

// "num/den" with den > 0; plain integer when den == 1.
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

inline int parity(long long k) { return static_cast<int>(((k % 2) + 2) % 2); }

// (-1)^k
inline int neg_one_pow(long long k) { return parity(k) == 0 ? 1 : -1; }

}  // namespace rgc
