#include "spair/codes.hpp"

#include <limits>
#include <stdexcept>

namespace spair::codes {
namespace {

constexpr std::uint64_t kMaxLength = std::uint64_t{1} << 32;

// p^k, or 0 on overflow past kMaxLength.
std::uint64_t checked_pow(std::uint64_t p, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t j = 0; j < k; ++j) {
    r *= p;
    if (r > kMaxLength) return 0;
  }
  return r;
}

std::uint64_t ipow(std::uint64_t p, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t j = 0; j < k; ++j) r *= p;
  return r;
}

class BranchCollector {
 public:
  explicit BranchCollector(const char* what) : what_(what) {}

  void offer(bool applies, std::uint64_t value, std::string label) {
    if (!applies) return;
    if (!found_) {
      found_ = true;
      result_ = BranchValue{value, std::move(label)};
    } else if (result_.value != value) {
      throw std::logic_error(std::string(what_) + ": cases '" + result_.branch + "' and '" + label + "' disagree (" +
                             std::to_string(result_.value) + " vs " + std::to_string(value) + ")");
    }
  }

  BranchValue take(const CodeSpec& s) {
    if (!found_)
      throw std::logic_error(std::string(what_) + ": no case covers p=" + std::to_string(s.p) + " e=" + std::to_string(s.e) +
                             " i=" + std::to_string(s.i));
    return std::move(result_);
  }

 private:
  const char* what_;
  bool found_ = false;
  BranchValue result_;
};

std::string tag(const char* name, std::uint64_t v) { return std::string(name) + "=" + std::to_string(v); }

}  // namespace

std::uint64_t CodeSpec::n() const { return ipow(p, e); }
std::uint64_t CodeSpec::q() const { return ipow(p, m); }

void CodeSpec::validate() const {
  if (!gf::is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (m == 0) throw std::invalid_argument("m must be >= 1");
  if (e == 0) throw std::invalid_argument("e must be >= 1");
  if (checked_pow(p, e) == 0) throw std::invalid_argument("code length p^e is too large");
  if (checked_pow(p, m) == 0 || checked_pow(p, m) > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("field order p^m is too large");
  if (i > n()) throw std::invalid_argument("generator exponent i = " + std::to_string(i) + " exceeds p^e = " + std::to_string(n()));
}

BranchValue classify_hamming_distance(const CodeSpec& s) {
  s.validate();
  const std::uint64_t p = s.p;
  const std::uint64_t e = s.e;
  const std::uint64_t n = s.n();
  const std::uint64_t i = s.i;
  const std::uint64_t top = ipow(p, e - 1);

  BranchCollector c("Hamming distance");
  c.offer(i == 0, 1, "i=0");
  c.offer(i == n, 0, "i=p^e");
  for (std::uint64_t beta = 0; beta + 2 <= p; ++beta)
    c.offer(beta * top + 1 <= i && i <= (beta + 1) * top, beta + 2, "beta+2, " + tag("beta", beta));
  for (std::uint64_t k = 1; k + 1 <= e; ++k) {
    const std::uint64_t base = n - ipow(p, e - k);
    const std::uint64_t step = ipow(p, e - k - 1);
    for (std::uint64_t t = 1; t + 1 <= p; ++t)
      c.offer(base + (t - 1) * step + 1 <= i && i <= base + t * step, (t + 1) * ipow(p, k),
              "(t+1)p^k, " + tag("t", t) + "," + tag("k", k));
  }
  return c.take(s);
}

std::uint64_t closed_form_hamming_distance(const CodeSpec& spec) { return classify_hamming_distance(spec).value; }

BranchValue classify_pair_distance(const CodeSpec& s) {
  s.validate();
  const std::uint64_t p = s.p;
  const std::uint64_t e = s.e;
  const std::uint64_t n = s.n();
  const std::uint64_t i = s.i;

  BranchCollector c("pair distance");
  c.offer(n == 2 && i == 1, 2, "p^e=2");
  if (e == 1) {
    c.offer(i == p, 0, "i=p");
    c.offer(i + 2 <= p, i + 2, "i+2");
    c.offer(i + 1 == p, p, "i=p-1");
    return c.take(s);
  }

  const std::uint64_t top = ipow(p, e - 1);
  c.offer(i == n, 0, "i=p^e");
  c.offer(i == 0, 2, "i=0");
  c.offer(i == 1, 3, "i=1");
  c.offer(2 <= i && i <= top, 4, "2<=i<=p^(e-1)");
  for (std::uint64_t beta = 1; beta + 2 <= p; ++beta)
    c.offer(beta * top + 1 <= i && i <= (beta + 1) * top, 2 * (beta + 2), "2(beta+2), " + tag("beta", beta));
  for (std::uint64_t k = 1; k + 2 <= e; ++k) {
    const std::uint64_t base = n - ipow(p, e - k);
    const std::uint64_t step = ipow(p, e - k - 1);
    const std::uint64_t pk = ipow(p, k);
    c.offer(i == base + 1, 3 * pk, "3p^k, " + tag("k", k));
    c.offer(base + 2 <= i && i <= base + step, 4 * pk, "4p^k, " + tag("k", k));
    for (std::uint64_t beta = 1; beta + 2 <= p; ++beta)
      c.offer(base + beta * step + 1 <= i && i <= base + (beta + 1) * step, 2 * (beta + 2) * pk,
              "2(beta+2)p^k, " + tag("k", k) + "," + tag("beta", beta));
  }
  for (std::uint64_t j = 0; j + 2 <= p; ++j) c.offer(i == n - p + j, (j + 2) * top, "(j+2)p^(e-1), " + tag("j", j));
  c.offer(i == n - 1, n, "i=p^e-1");
  // Listed separately in the case analysis but implied by the ranges above;
  // kept as an extra agreement check.
  for (std::uint64_t k = 1; k + 1 <= e; ++k) c.offer(i == n - ipow(p, e - k), 2 * ipow(p, k), "2p^k, " + tag("k", k));
  return c.take(s);
}

std::uint64_t closed_form_pair_distance(const CodeSpec& spec) { return classify_pair_distance(spec).value; }

bool is_mds_pair(const CodeSpec& spec) {
  spec.validate();
  if (spec.i == spec.n()) throw std::invalid_argument("the zero code has no pair-Singleton classification");
  return closed_form_pair_distance(spec) == spec.i + 2;
}

std::vector<DistanceRecord> distance_table(std::uint32_t p, std::uint32_t e, std::uint32_t m) {
  CodeSpec spec{p, m, e, 0};
  spec.validate();
  std::vector<DistanceRecord> rows;
  rows.reserve(spec.n() + 1);
  for (std::uint64_t i = 0; i <= spec.n(); ++i) {
    spec.i = i;
    DistanceRecord r;
    r.i = i;
    r.dimension = spec.dimension();
    r.d_h = closed_form_hamming_distance(spec);
    const BranchValue dp = classify_pair_distance(spec);
    r.d_p = dp.value;
    r.branch = dp.branch;
    if (i < spec.n()) r.mds_pair = dp.value == i + 2;
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

FieldSpec checked_field(const CodeSpec& spec, FieldSpec field) {
  spec.validate();
  if (field.p() != spec.p || field.m() != spec.m)
    throw std::invalid_argument("field F_" + std::to_string(field.q()) + " does not match code parameters");
  return field;
}

}  // namespace

CyclicCode::CyclicCode(const CodeSpec& spec) : CyclicCode(spec, gf::build_field((spec.validate(), spec.p), spec.m)) {}

CyclicCode::CyclicCode(const CodeSpec& spec, FieldSpec field)
    : spec_(spec),
      field_(checked_field(spec, std::move(field))),
      generator_(ring::x_minus_one_power(field_, static_cast<std::size_t>(spec.i), static_cast<std::size_t>(spec.n()))) {}

RingElement CyclicCode::encode(const Poly& message) const {
  if (!message.is_zero() && static_cast<std::uint64_t>(message.degree()) >= spec_.dimension())
    throw std::invalid_argument("message degree " + std::to_string(message.degree()) + " must be below the dimension " +
                                std::to_string(spec_.dimension()));
  for (auto c : message.coeffs())
    if (!field_.contains(c)) throw std::out_of_range("message coefficient outside the field");
  return ring::ring_mul(field_, ring::to_ring(field_, message, length()), generator_);
}

bool CyclicCode::contains(const RingElement& v) const {
  if (v.size() != length())
    throw std::invalid_argument("vector length " + std::to_string(v.size()) + " does not match code length " +
                                std::to_string(length()));
  Poly lift = ring::to_poly(v);
  const Poly x_minus_one({field_.neg(FieldSpec::one()), FieldSpec::one()});
  for (std::uint64_t k = 0; k < spec_.i && !lift.is_zero(); ++k) {
    auto [quot, rem] = ring::poly_divrem(field_, lift, x_minus_one);
    if (!rem.is_zero()) return false;
    lift = std::move(quot);
  }
  return true;
}

}  // namespace spair::codes
