#include "poly_mod.hpp"

#include <algorithm>
#include <limits>

#include "anonrs/error.hpp"
#include "anonrs/modular.hpp"

namespace anonrs::detail {
namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

// True when `terms` products of two residues (plus one residue) fit in a u64.
bool accumulation_fits(std::uint64_t p, std::uint64_t terms) {
  const unsigned __int128 sq = static_cast<unsigned __int128>(p - 1) * (p - 1);
  return sq * (terms + 1) + p <= kU64Max;
}

}  // namespace

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs fp_sub(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = sub_mod(x, y, p);
  }
  trim(out);
  return out;
}

Coeffs fp_mul(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], p), p);
    }
  }
  trim(out);
  return out;
}

void fp_divmod(const Coeffs& a, const Coeffs& b, std::uint64_t p, Coeffs* quot, Coeffs* rem) {
  if (b.empty()) raise(Errc::division_by_zero, "polynomial division by zero");
  Coeffs r = a;
  trim(r);
  const std::size_t db = b.size() - 1;
  Coeffs q(r.size() >= b.size() ? r.size() - db : 0, 0);
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  for (std::size_t i = r.size(); i-- > db;) {
    const std::uint64_t c = mul_mod(r[i], lead_inv, p);
    if (c == 0) continue;
    q[i - db] = c;
    const std::size_t base = i - db;
    for (std::size_t j = 0; j <= db; ++j) {
      r[base + j] = sub_mod(r[base + j], mul_mod(c, b[j], p), p);
    }
  }
  trim(r);
  trim(q);
  if (quot) *quot = std::move(q);
  if (rem) *rem = std::move(r);
}

Coeffs fp_gcd(Coeffs a, Coeffs b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r;
    fp_divmod(a, b, p, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = mul_mod(c, inv, p);
  }
  return a;
}

PolyModRing::PolyModRing(std::uint64_t p, Coeffs modulus) : p_(p), m_(std::move(modulus)) {
  trim(m_);
  if (m_.size() < 2 || m_.back() != 1) {
    raise(Errc::contract, "modulus must be monic of degree >= 1");
  }
  d_ = m_.size() - 1;
  for (std::size_t j = 0; j < d_; ++j) {
    if (m_[j] != 0) tail_.emplace_back(j, p_ - m_[j]);
  }
  lazy_mul_ = accumulation_fits(p_, 2 * d_);
}

Coeffs PolyModRing::one() const {
  Coeffs out(d_, 0);
  out[0] = 1 % p_;
  return out;
}

Coeffs PolyModRing::x() const {
  const std::uint64_t lin[2] = {0, 1 % p_};
  return reduce(lin);
}

Coeffs PolyModRing::finish(std::vector<std::uint64_t>& buf, bool lazy) const {
  for (std::size_t i = buf.size(); i-- > d_;) {
    const std::uint64_t c = lazy ? buf[i] % p_ : buf[i];
    if (c == 0) continue;
    const std::size_t base = i - d_;
    if (lazy) {
      for (const auto& [j, nj] : tail_) buf[base + j] += c * nj;
    } else {
      for (const auto& [j, nj] : tail_) buf[base + j] = add_mod(buf[base + j], mul_mod(c, nj, p_), p_);
    }
  }
  Coeffs out(d_, 0);
  const std::size_t keep = std::min(d_, buf.size());
  for (std::size_t j = 0; j < keep; ++j) out[j] = lazy ? buf[j] % p_ : buf[j];
  return out;
}

Coeffs PolyModRing::mul(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) const {
  std::vector<std::uint64_t> buf(2 * d_ - 1, 0);
  if (lazy_mul_) {
    for (std::size_t i = 0; i < d_; ++i) {
      const std::uint64_t ai = a[i];
      if (ai == 0) continue;
      std::uint64_t* row = buf.data() + i;
      for (std::size_t j = 0; j < d_; ++j) row[j] += ai * b[j];
    }
  } else {
    for (std::size_t i = 0; i < d_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < d_; ++j) {
        buf[i + j] = add_mod(buf[i + j], mul_mod(a[i], b[j], p_), p_);
      }
    }
  }
  return finish(buf, lazy_mul_);
}

Coeffs PolyModRing::reduce(std::span<const std::uint64_t> wide) const {
  std::vector<std::uint64_t> buf(wide.begin(), wide.end());
  const std::uint64_t tops = buf.size() > d_ ? buf.size() - d_ : 0;
  return finish(buf, accumulation_fits(p_, tops));
}

Coeffs PolyModRing::pow(std::span<const std::uint64_t> a, std::uint64_t e) const {
  Coeffs result = one();
  Coeffs base(a.begin(), a.end());
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

std::optional<Coeffs> PolyModRing::inverse(std::span<const std::uint64_t> a) const {
  Coeffs r0 = m_;
  Coeffs r1(a.begin(), a.end());
  trim(r1);
  if (r1.empty()) return std::nullopt;
  Coeffs s0;
  Coeffs s1{1};
  while (!r1.empty()) {
    Coeffs q, r;
    fp_divmod(r0, r1, p_, &q, &r);
    Coeffs s2 = fp_sub(s0, fp_mul(q, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) return std::nullopt;
  const std::uint64_t scale = inv_mod(r0[0], p_);
  Coeffs out(d_, 0);
  for (std::size_t i = 0; i < s0.size() && i < d_; ++i) out[i] = mul_mod(s0[i], scale, p_);
  return out;
}

FrobeniusMap::FrobeniusMap(const PolyModRing& ring)
    : ring_(&ring), narrow_(ring.p() <= 0xffffffffu) {
  const std::size_t d = ring.degree();
  const std::uint64_t p = ring.p();
  std::vector<Coeffs> rows;
  rows.reserve(d);
  rows.push_back(ring.one());
  // Multiplying by x^p is a shift followed by a reduction touching only the
  // nonzero modulus terms; prefer it whenever it beats a dense product.
  const bool by_shift = static_cast<unsigned __int128>(p) * (ring.modulus_weight() + 1) <
                            static_cast<unsigned __int128>(d) * d &&
                        accumulation_fits(p, p);
  Coeffs xp;
  if (!by_shift) xp = ring.pow(ring.x(), p);
  for (std::size_t j = 1; j < d; ++j) {
    if (by_shift) {
      std::vector<std::uint64_t> shifted(d + p, 0);
      std::copy(rows.back().begin(), rows.back().end(), shifted.begin() + p);
      rows.push_back(ring.reduce(shifted));
    } else {
      rows.push_back(ring.mul(rows.back(), xp));
    }
  }
  if (narrow_) {
    narrow_rows_.resize(d * d);
    for (std::size_t j = 0; j < d; ++j) {
      std::copy(rows[j].begin(), rows[j].end(), narrow_rows_.begin() + j * d);
    }
  } else {
    wide_rows_.resize(d * d);
    for (std::size_t j = 0; j < d; ++j) {
      std::copy(rows[j].begin(), rows[j].end(), wide_rows_.begin() + j * d);
    }
  }
}

Coeffs FrobeniusMap::apply(std::span<const std::uint64_t> a) const {
  const std::size_t d = ring_->degree();
  const std::uint64_t p = ring_->p();
  std::vector<std::uint64_t> acc(d, 0);
  if (narrow_ && accumulation_fits(p, d)) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::uint64_t aj = a[j];
      if (aj == 0) continue;
      const std::uint32_t* row = narrow_rows_.data() + j * d;
      for (std::size_t i = 0; i < d; ++i) acc[i] += aj * row[i];
    }
    for (auto& c : acc) c %= p;
    return acc;
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (a[j] == 0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      const std::uint64_t entry = narrow_ ? narrow_rows_[j * d + i] : wide_rows_[j * d + i];
      acc[i] = add_mod(acc[i], mul_mod(a[j], entry, p), p);
    }
  }
  return acc;
}

bool rabin_irreducible(std::uint64_t p, const Coeffs& m) {
  PolyModRing ring(p, m);
  const std::size_t d = ring.degree();
  if (d == 1) return true;

  std::vector<std::size_t> checkpoints;
  {
    std::size_t rest = d;
    for (std::size_t r = 2; r * r <= rest; ++r) {
      if (rest % r != 0) continue;
      checkpoints.push_back(d / r);
      while (rest % r == 0) rest /= r;
    }
    if (rest > 1) checkpoints.push_back(d / rest);
  }

  const FrobeniusMap frob(ring);
  const Coeffs x = ring.x();
  Coeffs h = x;
  for (std::size_t i = 1; i <= d; ++i) {
    h = frob.apply(h);
    if (std::find(checkpoints.begin(), checkpoints.end(), i) == checkpoints.end()) continue;
    Coeffs diff = fp_sub(h, x, p);
    // h == x here means m has a factor of degree dividing i < d.
    if (diff.empty()) return false;
    if (fp_gcd(diff, m, p).size() != 1) return false;
  }
  Coeffs h_trim = h;
  Coeffs x_trim = x;
  trim(h_trim);
  trim(x_trim);
  return h_trim == x_trim;
}

}  // namespace anonrs::detail
