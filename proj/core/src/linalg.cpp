#include "bcc/linalg.hpp"

namespace bcc::linalg {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("prime_field: " + std::to_string(p) + " is not prime");
  }
  FieldSpec spec;
  spec.kind = Kind::prime;
  spec.prime = p;
  return spec;
}

std::string FieldSpec::name() const {
  if (kind == Kind::rationals) return "Q";
  return "GF(" + std::to_string(prime) + ")";
}

FieldSpec parse_field_spec(std::string_view text) {
  if (text == "q" || text == "Q") return FieldSpec::rationals();
  if (text.starts_with("p=")) {
    std::uint64_t p = 0;
    std::string digits(text.substr(2));
    try {
      std::size_t pos = 0;
      p = std::stoull(digits, &pos);
      if (pos != digits.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad field spec '" + std::string(text) + "'");
    }
    return FieldSpec::prime_field(p);
  }
  throw std::invalid_argument("bad field spec '" + std::string(text) +
                              "' (expected 'q' or 'p=<prime>')");
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
  }
}

PrimeField::Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw std::invalid_argument("PrimeField: division by zero");
  return powmod(a, p_ - 2, p_);
}

PrimeField::Scalar PrimeField::div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

}  // namespace bcc::linalg
