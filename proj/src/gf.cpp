#include "spair/gf.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace spair::gf {
namespace {

using Digits = std::vector<std::uint32_t>;

// Field tables are precomputed up to this order; larger fields fall back to
// digit arithmetic.
constexpr std::uint32_t kTableLimit = 256;

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor, coefficients mod p.
Digits rem_monic(Digits a, const Digits& divisor, std::uint32_t p) {
  trim(a);
  const std::size_t dd = divisor.size() - 1;
  while (a.size() > dd) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dd;
    for (std::size_t j = 0; j <= dd; ++j) {
      const std::uint64_t t = static_cast<std::uint64_t>(lead) * divisor[j] % p;
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - t) % p);
    }
    trim(a);
  }
  return a;
}

Digits to_digits(std::uint64_t code, std::uint32_t p, std::size_t width) {
  Digits d(width, 0);
  for (std::size_t k = 0; k < width; ++k) {
    d[k] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t k = d.size(); k-- > 0;) code = code * p + d[k];
  return static_cast<std::uint32_t>(code);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> coeffs) {
  if (coeffs.size() < 2) throw std::invalid_argument("is_irreducible: degree must be >= 1");
  if (coeffs.back() != 1) throw std::invalid_argument("is_irreducible: polynomial must be monic");
  for (auto c : coeffs)
    if (c >= p) throw std::invalid_argument("is_irreducible: coefficient out of range for F_p");

  const Digits f(coeffs.begin(), coeffs.end());
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < d; ++k) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Digits g = to_digits(low, p, d);
      g.push_back(1);
      if (rem_monic(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct FieldSpec::Tables {
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> sub;
  std::vector<std::uint16_t> mul;
};

FieldSpec::FieldSpec(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), q_(1), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw std::invalid_argument("field characteristic " + std::to_string(p_) + " is not prime");
  if (!is_irreducible(p_, modulus_)) throw std::invalid_argument("field modulus " + modulus_string() + " is reducible");

  std::uint64_t q = 1;
  for (std::uint32_t k = 0; k < m(); ++k) {
    q *= p_;
    if (q > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("field order exceeds 32-bit encoding range");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (q_ <= kTableLimit) {
    auto t = std::make_shared<Tables>();
    const std::size_t cells = static_cast<std::size_t>(q_) * q_;
    t->add.resize(cells);
    t->sub.resize(cells);
    t->mul.resize(cells);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        const std::size_t idx = static_cast<std::size_t>(a) * q_ + b;
        t->add[idx] = static_cast<std::uint16_t>(add_direct(a, b, false));
        t->sub[idx] = static_cast<std::uint16_t>(add_direct(a, b, true));
        t->mul[idx] = static_cast<std::uint16_t>(mul_direct(a, b));
      }
    }
    tables_ = std::move(t);
  }
}

FieldElement FieldSpec::element(std::uint64_t code) const {
  if (code >= q_) throw std::out_of_range("element encoding " + std::to_string(code) + " is not below q = " + std::to_string(q_));
  return FieldElement{static_cast<std::uint32_t>(code)};
}

std::uint32_t FieldSpec::add_direct(std::uint32_t a, std::uint32_t b, bool subtract) const {
  if (m() == 1) return subtract ? (a + p_ - b) % p_ : (a + b) % p_;
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t k = 0; k < m(); ++k) {
    const std::uint32_t da = a % p_;
    const std::uint32_t db = b % p_;
    a /= p_;
    b /= p_;
    out += place * (subtract ? (da + p_ - db) % p_ : (da + db) % p_);
    place *= p_;
  }
  return out;
}

std::uint32_t FieldSpec::mul_direct(std::uint32_t a, std::uint32_t b) const {
  if (m() == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  const Digits da = to_digits(a, p_, m());
  const Digits db = to_digits(b, p_, m());
  Digits prod(2 * m() - 1, 0);
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (da[i] == 0) continue;
    for (std::size_t j = 0; j < db.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
  }
  return from_digits(rem_monic(std::move(prod), modulus_, p_), p_);
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const {
  if (tables_) return FieldElement{tables_->add[static_cast<std::size_t>(a.code) * q_ + b.code]};
  return FieldElement{add_direct(a.code, b.code, false)};
}

FieldElement FieldSpec::sub(FieldElement a, FieldElement b) const {
  if (tables_) return FieldElement{tables_->sub[static_cast<std::size_t>(a.code) * q_ + b.code]};
  return FieldElement{add_direct(a.code, b.code, true)};
}

FieldElement FieldSpec::neg(FieldElement a) const { return sub(zero(), a); }

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
  if (tables_) return FieldElement{tables_->mul[static_cast<std::size_t>(a.code) * q_ + b.code]};
  return FieldElement{mul_direct(a.code, b.code)};
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t k) const {
  FieldElement result = one();
  while (k > 0) {
    if (k & 1U) result = mul(result, a);
    a = mul(a, a);
    k >>= 1U;
  }
  return result;
}

FieldElement FieldSpec::inv(FieldElement a) const {
  if (a.is_zero()) throw std::domain_error("division by zero in F_" + std::to_string(q_));
  return pow(a, static_cast<std::uint64_t>(q_) - 2);
}

std::vector<FieldElement> FieldSpec::enumerate_elements() const {
  std::vector<FieldElement> out(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out[c] = FieldElement{c};
  return out;
}

std::string FieldSpec::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = modulus_.size(); k-- > 0;) {
    const auto c = modulus_[k];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || c != 1) os << c;
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

FieldSpec build_field(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t count = 1;
  for (std::uint32_t k = 0; k < m; ++k) {
    count *= p;
    if (count > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("field order exceeds 32-bit encoding range");
  }
  for (std::uint64_t low = 0; low < count; ++low) {
    Digits cand = to_digits(low, p, m);
    cand.push_back(1);
    if (is_irreducible(p, cand)) return FieldSpec(p, std::move(cand));
  }
  throw std::logic_error("no irreducible polynomial of degree " + std::to_string(m) + " over F_" + std::to_string(p));
}

}  // namespace spair::gf
