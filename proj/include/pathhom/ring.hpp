#pragma once
#include <gmpxx.h>

#include <string>

#include "pathhom/errors.hpp"

namespace pathhom {

using Scalar = mpq_class;
using Int = mpz_class;

enum class RingKind { Integers, Rationals, PrimeField };

struct Ring {
  RingKind kind = RingKind::Integers;
  unsigned long p = 0;  // set iff kind == PrimeField

  bool is_field() const { return kind != RingKind::Integers; }
  bool operator==(const Ring&) const = default;

  static Ring Z() { return {RingKind::Integers, 0}; }
  static Ring Q() { return {RingKind::Rationals, 0}; }
  static Ring Fp(unsigned long p);

  std::string name() const;
};

bool is_prime(unsigned long p);

// All scalars are kept canonical: integers over Z, reduced fractions over Q,
// representatives in [0,p) over F_p.
struct RingOps {
  Ring ring;

  explicit RingOps(Ring r) : ring(r) {}

  Scalar canon(const Scalar& x) const;
  Scalar add(const Scalar& a, const Scalar& b) const { return canon(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return canon(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return canon(a * b); }
  Scalar neg(const Scalar& a) const { return canon(-a); }
  // Division must be exact over Z; over fields it is a true inverse.
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;
  bool is_zero(const Scalar& a) const { return canon(a) == 0; }
};

// Modular inverse of a mod p, a not divisible by p.
Int mod_inverse(const Int& a, const Int& p);

}  // namespace pathhom
