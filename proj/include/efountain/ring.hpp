#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "efountain/error.hpp"

namespace efountain {

// Coefficient rings are passed as explicit objects so that a runtime
// modulus fits the same mold as the exact global rings. A ring provides
// zero/one, +, unary -, *, equality and a partial inverse.

class IntegerRing {
 public:
  using Elem = boost::multiprecision::cpp_int;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const { return v; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool try_invert(Elem& out, const Elem& a) const {
    if (a == 1 || a == -1) {
      out = a;
      return true;
    }
    return false;
  }
  std::string str(const Elem& a) const { return a.str(); }
  std::string name() const { return "int"; }
};

class RationalRing {
 public:
  using Elem = boost::multiprecision::cpp_rational;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const { return v; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool try_invert(Elem& out, const Elem& a) const {
    if (a == 0) return false;
    out = 1 / a;
    return true;
  }
  std::string str(const Elem& a) const { return a.str(); }
  std::string name() const { return "rational"; }
};

/// Integers modulo m (m >= 2, not necessarily prime).
class ModularRing {
 public:
  using Elem = std::uint64_t;

  explicit ModularRing(std::uint64_t modulus) : m_(modulus) {
    if (modulus < 2) fail(ErrorCode::invalid_argument, "modulus must be at least 2");
  }

  std::uint64_t modulus() const { return m_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % m_; }
  Elem from_int(long v) const {
    long long r = static_cast<long long>(v) % static_cast<long long>(m_);
    if (r < 0) r += static_cast<long long>(m_);
    return static_cast<Elem>(r);
  }
  Elem add(Elem a, Elem b) const { return (a + b) % m_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : m_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % m_);
  }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool is_zero(Elem a) const { return a == 0; }
  bool try_invert(Elem& out, Elem a) const;
  std::string str(Elem a) const { return std::to_string(a); }
  std::string name() const { return "mod" + std::to_string(m_); }

 private:
  std::uint64_t m_;
};

/// CLI-facing ring selector: "int", "rational" or "mod<N>".
struct RingSpec {
  enum class Kind { integer, rational, modular } kind = Kind::integer;
  std::uint64_t modulus = 0;

  static RingSpec parse(const std::string& text);
  std::string name() const;
};

/// Calls fn with the ring object selected by spec and returns its result.
template <typename Fn>
auto with_ring(const RingSpec& spec, Fn&& fn) {
  switch (spec.kind) {
    case RingSpec::Kind::integer: return fn(IntegerRing{});
    case RingSpec::Kind::rational: return fn(RationalRing{});
    case RingSpec::Kind::modular: return fn(ModularRing{spec.modulus});
  }
  fail(ErrorCode::invalid_argument, "unknown ring kind");
}

}  // namespace efountain
