#include "efountain/ring.hpp"

namespace efountain {

bool ModularRing::try_invert(Elem& out, Elem a) const {
  // Extended Euclid over signed 128-bit to cope with any uint64 modulus.
  using I = __int128;
  I r0 = static_cast<I>(m_), r1 = static_cast<I>(a % m_);
  I t0 = 0, t1 = 1;
  while (r1 != 0) {
    I q = r0 / r1;
    I r2 = r0 - q * r1;
    I t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) return false;  // gcd(a, m) != 1
  I t = t0 % static_cast<I>(m_);
  if (t < 0) t += static_cast<I>(m_);
  out = static_cast<Elem>(t);
  return true;
}

RingSpec RingSpec::parse(const std::string& text) {
  if (text == "int") return {Kind::integer, 0};
  if (text == "rational") return {Kind::rational, 0};
  if (text.rfind("mod", 0) == 0 && text.size() > 3) {
    std::uint64_t m = 0;
    for (size_t i = 3; i < text.size(); ++i) {
      char c = text[i];
      if (c < '0' || c > '9')
        fail(ErrorCode::invalid_argument, "bad ring spec '" + text + "'");
      m = m * 10 + static_cast<std::uint64_t>(c - '0');
      if (m > (1ull << 62)) fail(ErrorCode::invalid_argument, "modulus too large");
    }
    if (m < 2) fail(ErrorCode::invalid_argument, "modulus must be at least 2");
    return {Kind::modular, m};
  }
  fail(ErrorCode::invalid_argument,
       "bad ring spec '" + text + "' (expected int, rational or modN)");
}

std::string RingSpec::name() const {
  switch (kind) {
    case Kind::integer: return "int";
    case Kind::rational: return "rational";
    case Kind::modular: return "mod" + std::to_string(modulus);
  }
  return "?";
}

}  // namespace efountain
