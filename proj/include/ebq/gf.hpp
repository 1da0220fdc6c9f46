#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ebq/common.hpp"

namespace ebq {

/// Element of a finite field, encoded as an integer in [0, q).
/// The base-p digits of the code are the coefficients of the residue
/// polynomial, least significant digit = constant term.
using ffe = std::uint16_t;

namespace detail {

inline bool is_prime(long n) {
  if (n < 2)
    return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// Dense polynomials over the prime field, coefficient vectors with
// c[i] the coefficient of x^i. Normalized: no trailing zeros.
inline std::vector<int> ptrim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
  return a;
}

inline std::vector<int> pmul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  if (a.empty() || b.empty())
    return {};
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return ptrim(std::move(c));
}

inline std::vector<int> pmod(std::vector<int> a, const std::vector<int>& m, int p) {
  a = ptrim(std::move(a));
  while (a.size() >= m.size()) {
    int lead = a.back(); // m is monic
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i)
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    a = ptrim(std::move(a));
  }
  return a;
}

inline bool divides(const std::vector<int>& d, const std::vector<int>& a, int p) {
  return pmod(a, d, p).empty();
}

struct FieldData {
  int p = 0;
  int e = 0;
  int q = 0;
  std::vector<int> modulus; // monic, degree e, coefficient of x^i at index i
  std::vector<ffe> add_table;
  std::vector<ffe> mul_table;
  std::vector<ffe> inv_table;
};

} // namespace detail

/// GF(p^e) with full arithmetic tables. The modulus is the first monic
/// irreducible degree-e polynomial in increasing order of its base-p
/// coefficient encoding, so two Field(p, e) instances always agree.
class Field {
public:
  Field(int p, int e) {
    require(detail::is_prime(p), "Field: p = " + std::to_string(p) + " is not prime");
    require(e >= 1, "Field: extension degree must be >= 1");
    long q = 1;
    for (int i = 0; i < e; ++i) {
      q *= p;
      require(q <= 1024, "Field: order p^e exceeds supported cap 1024");
    }
    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->e = e;
    d->q = static_cast<int>(q);
    d->modulus = find_modulus(p, e);
    build_tables(*d);
    data_ = std::move(d);
  }

  int p() const { return data_->p; }
  int e() const { return data_->e; }
  int q() const { return data_->q; }
  const std::vector<int>& modulus() const { return data_->modulus; }

  ffe zero() const { return 0; }
  ffe one() const { return 1; }

  ffe add(ffe a, ffe b) const { return data_->add_table[a * data_->q + b]; }
  ffe neg(ffe a) const { return sub(0, a); }
  ffe sub(ffe a, ffe b) const {
    // b + (-b) = 0 digitwise; -b computed on the fly via table-free digits
    return data_->add_table[a * data_->q + neg_code(b)];
  }
  ffe mul(ffe a, ffe b) const { return data_->mul_table[a * data_->q + b]; }
  ffe inv(ffe a) const {
    require(a != 0, "Field: inverse of zero");
    return data_->inv_table[a];
  }
  ffe div(ffe a, ffe b) const { return mul(a, inv(b)); }

  ffe pow(ffe a, long long k) const {
    if (a == 0) {
      require(k > 0, "Field: 0^k needs k > 0");
      return 0;
    }
    long long m = data_->q - 1;
    k %= m;
    if (k < 0)
      k += m;
    ffe r = 1, base = a;
    while (k > 0) {
      if (k & 1)
        r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }

  /// Frobenius power a^(p^k).
  ffe frob(ffe a, int k) const {
    ffe r = a;
    for (int i = 0; i < k; ++i)
      r = pow(r, data_->p);
    return r;
  }

  /// Inverse of the k-fold Frobenius (the Frobenius has order e).
  ffe frob_inv(ffe a, int k) const {
    int kk = k % data_->e;
    return kk == 0 ? a : frob(a, data_->e - kk);
  }

  /// Embed an integer through the prime subfield.
  ffe from_int(long long v) const {
    long long r = v % data_->p;
    if (r < 0)
      r += data_->p;
    return static_cast<ffe>(r);
  }

  bool operator==(const Field& o) const { return p() == o.p() && e() == o.e(); }
  bool operator!=(const Field& o) const { return !(*this == o); }

private:
  ffe neg_code(ffe a) const {
    int p = data_->p, r = 0, mult = 1, x = a;
    while (x) {
      int digit = x % p;
      r += ((p - digit) % p) * mult;
      x /= p;
      mult *= p;
    }
    return static_cast<ffe>(r);
  }

  static std::vector<int> find_modulus(int p, int e) {
    long pe = 1;
    for (int i = 0; i < e; ++i)
      pe *= p;
    for (long code = 0; code < pe; ++code) {
      std::vector<int> m(e + 1, 0);
      long x = code;
      for (int i = 0; i < e; ++i) {
        m[i] = static_cast<int>(x % p);
        x /= p;
      }
      m[e] = 1;
      if (is_irreducible(m, p))
        return m;
    }
    throw Error("Field: no irreducible modulus found (unreachable)");
  }

  static bool is_irreducible(const std::vector<int>& m, int p) {
    int e = static_cast<int>(m.size()) - 1;
    if (e == 1)
      return true;
    // trial division by every monic polynomial of degree 1..e/2
    for (int d = 1; 2 * d <= e; ++d) {
      long pd = 1;
      for (int i = 0; i < d; ++i)
        pd *= p;
      for (long code = 0; code < pd; ++code) {
        std::vector<int> f(d + 1, 0);
        long x = code;
        for (int i = 0; i < d; ++i) {
          f[i] = static_cast<int>(x % p);
          x /= p;
        }
        f[d] = 1;
        if (detail::divides(f, m, p))
          return false;
      }
    }
    return true;
  }

  static void build_tables(detail::FieldData& d) {
    int q = d.q, p = d.p, e = d.e;
    d.add_table.assign(static_cast<size_t>(q) * q, 0);
    d.mul_table.assign(static_cast<size_t>(q) * q, 0);
    d.inv_table.assign(q, 0);
    auto decode = [&](int code) {
      std::vector<int> c(e, 0);
      for (int i = 0; i < e; ++i) {
        c[i] = code % p;
        code /= p;
      }
      return c;
    };
    auto encode = [&](const std::vector<int>& c) {
      int code = 0, mult = 1;
      for (size_t i = 0; i < static_cast<size_t>(e); ++i) {
        code += (i < c.size() ? c[i] : 0) * mult;
        mult *= p;
      }
      return static_cast<ffe>(code);
    };
    for (int a = 0; a < q; ++a) {
      auto ca = decode(a);
      for (int b = 0; b < q; ++b) {
        auto cb = decode(b);
        std::vector<int> s(e);
        for (int i = 0; i < e; ++i)
          s[i] = (ca[i] + cb[i]) % p;
        d.add_table[static_cast<size_t>(a) * q + b] = encode(s);
        auto prod = detail::pmod(detail::pmul(ca, cb, p), d.modulus, p);
        d.mul_table[static_cast<size_t>(a) * q + b] = encode(prod);
      }
    }
    for (int a = 1; a < q; ++a)
      for (int b = 1; b < q; ++b)
        if (d.mul_table[static_cast<size_t>(a) * q + b] == 1) {
          d.inv_table[a] = static_cast<ffe>(b);
          break;
        }
  }

  std::shared_ptr<const detail::FieldData> data_;
};

} // namespace ebq
