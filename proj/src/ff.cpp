#include "oigraph/ff.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace oigraph {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    }
    trim(a);
  }
  return a;
}

std::uint64_t ipow(std::uint64_t b, unsigned k) {
  std::uint64_t r = 1;
  while (k--) r *= b;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t parse_uint(std::string_view s, const char* what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw Error(std::string("cannot parse ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  const std::size_t deg = monic.size() - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly divisor(d + 1);
      std::uint64_t x = idx;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      divisor[d] = 1;
      if (poly_mod(monic, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t e) {
  if (e == 1) return {0, 1};
  // Odometer over (c0, ..., c_{e-1}) with c_{e-1} varying fastest, which is
  // lexicographic order with c0 most significant.
  Poly coeffs(e, 0);
  while (true) {
    Poly candidate = coeffs;
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) return candidate;
    std::size_t i = e;
    while (i > 0) {
      --i;
      if (++coeffs[i] < p) break;
      coeffs[i] = 0;
      if (i == 0) throw Error("no irreducible polynomial found");
    }
  }
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t e,
                     std::optional<std::vector<std::uint32_t>> modulus) {
  if (p == 2) throw Error("characteristic 2 is not supported; p must be an odd prime");
  if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
  if (e == 0) throw Error("extension degree must be at least 1");
  const std::uint64_t q = ipow(p, e);
  if (q > (1u << 16)) throw Error("field order exceeds 2^16");
  bool is_default = !modulus.has_value();
  std::vector<std::uint32_t> m;
  if (modulus) {
    m = *modulus;
    if (m.size() != e + 1 || m.back() != 1) {
      throw Error("modulus must be monic of degree " + std::to_string(e));
    }
    for (auto c : m) {
      if (c >= p) throw Error("modulus coefficient out of range");
    }
    if (!is_irreducible(m, p)) throw Error("modulus is reducible");
    is_default = (m == least_irreducible(p, e));
  } else {
    m = least_irreducible(p, e);
  }
  return FieldPtr(new Field(p, e, std::move(m), is_default));
}

FieldPtr Field::parse(std::string_view spec, std::optional<std::vector<std::uint32_t>> modulus) {
  const auto caret = spec.find('^');
  if (caret == std::string_view::npos) {
    // Bare q: split a prime power into p^e.
    const std::uint32_t q = parse_uint(spec, "field");
    std::uint32_t p = 2;
    while (p < q && q % p != 0) ++p;
    std::uint32_t e = 0, rest = q;
    while (rest > 1 && rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (q < 2 || rest != 1) throw Error("field size " + std::to_string(q) + " is not a prime power");
    return make(p, e, std::move(modulus));
  }
  return make(parse_uint(spec.substr(0, caret), "field characteristic"),
              parse_uint(spec.substr(caret + 1), "field degree"), std::move(modulus));
}

Field::Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus, bool is_default)
    : p_(p), e_(e), q_(static_cast<std::uint32_t>(ipow(p, e))), modulus_(std::move(modulus)),
      default_modulus_(is_default) {
  neg_table_.resize(q_);
  order_key_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t x = a, out = 0, place = 1, key = 0;
    for (std::uint32_t i = 0; i < e_; ++i) {
      const std::uint32_t c = x % p_;
      x /= p_;
      out += ((p_ - c) % p_) * place;
      place *= p_;
      key = key * p_ + c;
    }
    neg_table_[a] = out;
    order_key_[a] = key;
  }
  if (q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_slow(Elem{a}, Elem{b}).code;
    }
  }

  // Find a primitive element by testing g^((q-1)/r) != 1 for every prime r | q-1.
  const auto factors = prime_factors(q_ - 1);
  auto slow_pow = [&](std::uint32_t g, std::uint64_t k) {
    std::uint32_t r = 1, b = g;
    while (k) {
      if (k & 1) r = mul_poly(r, b);
      b = mul_poly(b, b);
      k >>= 1;
    }
    return r;
  };
  std::uint32_t gen = 0;
  for (std::uint32_t g = 1; g < q_ && gen == 0; ++g) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(g, (q_ - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) gen = g;
  }
  if (q_ == 2) gen = 1;
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = cur;
    log_[cur] = i;
    cur = mul_poly(cur, gen);
  }

  square_.assign(q_, 0);
  for (std::uint32_t a = 1; a < q_; ++a) square_[mul(Elem{a}, Elem{a}).code] = 1;

  std::optional<Elem> best;
  for (std::uint32_t a = 1; a < q_; ++a) {
    if (!square_[a] && (!best || order_key_[a] < order_key_[best->code])) best = Elem{a};
  }
  nonsquare_ = *best;
}

Elem Field::add_slow(Elem a, Elem b) const {
  std::uint32_t x = a.code, y = b.code, out = 0, place = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return Elem{out};
}

std::uint32_t Field::mul_poly(std::uint32_t a, std::uint32_t b) const {
  const auto ca = coeffs(Elem{a});
  const auto cb = coeffs(Elem{b});
  Poly prod(2 * e_, 0);
  for (std::uint32_t i = 0; i < e_; ++i) {
    for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  }
  Poly r = poly_mod(prod, modulus_, p_);
  r.resize(e_, 0);
  return from_coeffs(r).code;
}

Elem Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_code(std::uint32_t code) const {
  if (code >= q_) throw Error("element code " + std::to_string(code) + " out of range for F_" + std::to_string(q_));
  return Elem{code};
}

Elem Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() > e_) throw Error("too many coefficients for field element");
  std::uint32_t out = 0, place = 1;
  for (auto v : c) {
    if (v >= p_) throw Error("coefficient out of range");
    out += v * place;
    place *= p_;
  }
  return Elem{out};
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> c(e_);
  std::uint32_t x = a.code;
  for (std::uint32_t i = 0; i < e_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) throw Error("inverse of zero");
  const std::uint32_t l = log_[a.code];
  return Elem{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t l = (static_cast<std::uint64_t>(log_[a.code]) * (k % (q_ - 1))) % (q_ - 1);
  return Elem{exp_[l]};
}

bool Field::is_square(Elem a) const {
  if (a.code == 0) throw Error("is_square is undefined for zero");
  return square_[a.code] != 0;
}

bool Field::is_square_euler(Elem a) const {
  if (a.code == 0) throw Error("is_square is undefined for zero");
  // Square and multiply on the polynomial representation, independent of the tables.
  std::uint32_t r = 1, b = a.code;
  std::uint64_t k = (q_ - 1) / 2;
  while (k) {
    if (k & 1) r = mul_poly(r, b);
    b = mul_poly(b, b);
    k >>= 1;
  }
  return r == 1;
}

Elem Field::sqrt_of_square(Elem a) const {
  if (a.code == 0 || !square_[a.code]) throw Error("sqrt_of_square needs a nonzero square");
  const Elem r{exp_[log_[a.code] / 2]};
  const Elem s = neg(r);
  return lex_less(r, s) ? r : s;
}

Elem Field::frobenius(Elem a, std::uint32_t j) const {
  if (j >= e_) throw Error("Frobenius index out of range");
  return pow(a, ipow(p_, j));
}

std::vector<Elem> Field::nonzero_elements() const {
  std::vector<Elem> out;
  out.reserve(q_ - 1);
  for (std::uint32_t a = 1; a < q_; ++a) out.push_back(Elem{a});
  return out;
}

std::string Field::descriptor() const {
  return e_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(e_);
}

std::string Field::to_string(Elem a) const {
  if (e_ == 1) return std::to_string(a.code);
  const auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return first ? "0" : os.str();
}

const Field& FieldElem::common(const FieldElem& o) const {
  if (!field_->same_as(*o.field_)) throw Error("field mismatch");
  return *field_;
}

FieldElem FieldElem::operator+(const FieldElem& o) const { return {field_, common(o).add(value_, o.value_)}; }
FieldElem FieldElem::operator-(const FieldElem& o) const { return {field_, common(o).sub(value_, o.value_)}; }
FieldElem FieldElem::operator*(const FieldElem& o) const { return {field_, common(o).mul(value_, o.value_)}; }
FieldElem FieldElem::operator/(const FieldElem& o) const { return {field_, common(o).div(value_, o.value_)}; }

}  // namespace oigraph
