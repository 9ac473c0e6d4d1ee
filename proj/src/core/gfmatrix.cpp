#include "normalp/gfmatrix.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "normalp/error.hpp"

namespace normalp {
namespace {

std::uint32_t inverse_mod(std::uint32_t x, std::uint32_t q) {
  return static_cast<std::uint32_t>(pow_mod(x, q - 2, q));
}

void require_same_shape(const GFMatrix& a, const GFMatrix& b) {
  if (a.dimension() != b.dimension() || a.modulus() != b.modulus()) {
    throw InvalidArgument("matrix shape or modulus mismatch");
  }
}

void require_field(std::uint32_t t, std::uint64_t q) {
  if (t == 0) throw InvalidArgument("matrix dimension must be at least 1");
  if (!is_prime(q)) throw InvalidArgument("matrix modulus must be prime, got " + std::to_string(q));
}

// Row echelon reduction in place; returns the rank and the determinant
// (meaningful only for square input).
std::pair<std::size_t, std::uint32_t> eliminate(std::vector<std::vector<std::uint32_t>>& rows,
                                                std::uint32_t cols, std::uint32_t q) {
  std::size_t rank = 0;
  std::uint64_t det = 1;
  for (std::uint32_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      std::swap(rows[pivot], rows[rank]);
      det = (q - det) % q;
    }
    const std::uint32_t lead = rows[rank][col];
    det = det * lead % q;
    const std::uint32_t inv = inverse_mod(lead, q);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const std::uint64_t factor = static_cast<std::uint64_t>(rows[r][col]) * inv % q;
      for (std::uint32_t c = col; c < cols; ++c) {
        rows[r][c] = static_cast<std::uint32_t>(
            (rows[r][c] + static_cast<std::uint64_t>(q - factor) * rows[rank][c]) % q);
      }
    }
    ++rank;
  }
  if (rank < cols) det = 0;
  return {rank, static_cast<std::uint32_t>(det)};
}

std::vector<std::vector<std::uint32_t>> to_rows(const GFMatrix& a) {
  const std::uint32_t t = a.dimension();
  std::vector<std::vector<std::uint32_t>> rows(t, std::vector<std::uint32_t>(t));
  for (std::uint32_t i = 0; i < t; ++i) {
    for (std::uint32_t j = 0; j < t; ++j) rows[i][j] = a.at(i, j);
  }
  return rows;
}

GFMatrix embed_block(const GFMatrix& block, std::uint32_t t, std::uint32_t offset) {
  GFMatrix out = GFMatrix::identity(t, block.modulus());
  for (std::uint32_t i = 0; i < block.dimension(); ++i) {
    for (std::uint32_t j = 0; j < block.dimension(); ++j) {
      out.set(offset + i, offset + j, block.at(i, j));
    }
  }
  return out;
}

}  // namespace

GFMatrix::GFMatrix(std::uint32_t t, std::uint32_t q) : t_(t), q_(q), entries_(std::size_t{t} * t, 0) {
  require_field(t, q);
}

GFMatrix::GFMatrix(std::uint32_t t, std::uint32_t q, std::vector<std::uint32_t> entries)
    : t_(t), q_(q), entries_(std::move(entries)) {
  require_field(t, q);
  if (entries_.size() != std::size_t{t} * t) {
    throw InvalidArgument("expected " + std::to_string(t * t) + " matrix entries, got " +
                          std::to_string(entries_.size()));
  }
  for (auto& e : entries_) e %= q;
}

GFMatrix GFMatrix::identity(std::uint32_t t, std::uint32_t q) {
  GFMatrix out(t, q);
  for (std::uint32_t i = 0; i < t; ++i) out.entries_[i * t + i] = 1;
  return out;
}

bool GFMatrix::is_identity() const noexcept {
  for (std::uint32_t i = 0; i < t_; ++i) {
    for (std::uint32_t j = 0; j < t_; ++j) {
      if (entries_[i * t_ + j] != (i == j ? 1U : 0U)) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> GFMatrix::apply(std::span<const std::uint32_t> x) const {
  if (x.size() != t_) throw InvalidArgument("vector length does not match matrix dimension");
  std::vector<std::uint32_t> y(t_, 0);
  for (std::uint32_t i = 0; i < t_; ++i) {
    std::uint64_t acc = 0;
    for (std::uint32_t j = 0; j < t_; ++j) acc += static_cast<std::uint64_t>(entries_[i * t_ + j]) * x[j];
    y[i] = static_cast<std::uint32_t>(acc % q_);
  }
  return y;
}

std::size_t GFMatrixHash::operator()(const GFMatrix& a) const noexcept {
  std::size_t h = a.dimension() * 1315423911U + a.modulus();
  for (auto e : a.entries()) h = h * 1000003U ^ e;
  return h;
}

GFMatrix mat_mul(const GFMatrix& a, const GFMatrix& b) {
  require_same_shape(a, b);
  const std::uint32_t t = a.dimension();
  const std::uint32_t q = a.modulus();
  GFMatrix out(t, q);
  for (std::uint32_t i = 0; i < t; ++i) {
    for (std::uint32_t j = 0; j < t; ++j) {
      std::uint64_t acc = 0;
      for (std::uint32_t k = 0; k < t; ++k) acc += static_cast<std::uint64_t>(a.at(i, k)) * b.at(k, j);
      out.set(i, j, acc);
    }
  }
  return out;
}

GFMatrix mat_pow(const GFMatrix& a, std::uint64_t exponent) {
  GFMatrix result = GFMatrix::identity(a.dimension(), a.modulus());
  GFMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = mat_mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = mat_mul(base, base);
  }
  return result;
}

std::uint32_t determinant(const GFMatrix& a) {
  auto rows = to_rows(a);
  return eliminate(rows, a.dimension(), a.modulus()).second;
}

std::size_t rank(const GFMatrix& a) {
  auto rows = to_rows(a);
  return eliminate(rows, a.dimension(), a.modulus()).first;
}

GFMatrix mat_inverse(const GFMatrix& a) {
  const std::uint32_t t = a.dimension();
  const std::uint32_t q = a.modulus();
  // Gauss-Jordan on [A | I].
  std::vector<std::vector<std::uint32_t>> rows(t, std::vector<std::uint32_t>(2 * t, 0));
  for (std::uint32_t i = 0; i < t; ++i) {
    for (std::uint32_t j = 0; j < t; ++j) rows[i][j] = a.at(i, j);
    rows[i][t + i] = 1;
  }
  for (std::uint32_t col = 0; col < t; ++col) {
    std::uint32_t pivot = col;
    while (pivot < t && rows[pivot][col] == 0) ++pivot;
    if (pivot == t) throw SingularMatrix("matrix is singular over F_" + std::to_string(q));
    std::swap(rows[pivot], rows[col]);
    const std::uint32_t inv = inverse_mod(rows[col][col], q);
    for (auto& e : rows[col]) e = static_cast<std::uint32_t>(static_cast<std::uint64_t>(e) * inv % q);
    for (std::uint32_t r = 0; r < t; ++r) {
      if (r == col || rows[r][col] == 0) continue;
      const std::uint64_t factor = rows[r][col];
      for (std::uint32_t c = 0; c < 2 * t; ++c) {
        rows[r][c] = static_cast<std::uint32_t>((rows[r][c] + (q - factor) * rows[col][c]) % q);
      }
    }
  }
  GFMatrix out(t, q);
  for (std::uint32_t i = 0; i < t; ++i) {
    for (std::uint32_t j = 0; j < t; ++j) out.set(i, j, rows[i][t + j]);
  }
  return out;
}

std::uint64_t matrix_order(const GFMatrix& a) {
  if (determinant(a) == 0) throw SingularMatrix("matrix order is undefined for a singular matrix");
  std::uint64_t k = 1;
  GFMatrix power = a;
  while (!power.is_identity()) {
    power = mat_mul(power, a);
    ++k;
  }
  return k;
}

BigNat gl_order(std::uint32_t t, std::uint64_t q) {
  require_field(t, q);
  BigNat scale = 1;
  for (std::uint64_t i = 0; i < std::uint64_t{t} * (t - 1) / 2; ++i) scale *= q;
  return scale * gamma(t, q);
}

std::vector<GFMatrix> enumerate_gl(std::uint32_t t, std::uint32_t q, std::uint64_t cap) {
  const BigNat order = gl_order(t, q);
  if (order > cap) {
    throw CapExceeded("|GL(" + std::to_string(t) + "," + std::to_string(q) + ")| = " + order.str() +
                      " exceeds enumeration cap " + std::to_string(cap));
  }
  const std::uint64_t row_count = checked_pow(q, t);
  std::vector<GFMatrix> out;
  out.reserve(static_cast<std::size_t>(order));
  std::vector<std::vector<std::uint32_t>> chosen;

  auto row_of = [&](std::uint64_t code) {
    std::vector<std::uint32_t> row(t);
    for (std::uint32_t j = t; j-- > 0;) {
      row[j] = static_cast<std::uint32_t>(code % q);
      code /= q;
    }
    return row;
  };
  // Depth-first over rows in lexicographic order keeps the output sorted.
  auto recurse = [&](auto&& self) -> void {
    if (chosen.size() == t) {
      std::vector<std::uint32_t> entries;
      entries.reserve(std::size_t{t} * t);
      for (const auto& row : chosen) entries.insert(entries.end(), row.begin(), row.end());
      out.emplace_back(t, q, std::move(entries));
      return;
    }
    for (std::uint64_t code = 1; code < row_count; ++code) {
      chosen.push_back(row_of(code));
      auto scratch = chosen;
      if (eliminate(scratch, t, q).first == chosen.size()) self(self);
      chosen.pop_back();
    }
  };
  recurse(recurse);
  return out;
}

GFMatrix singer_cycle(std::uint32_t d, std::uint32_t q) {
  require_field(d, q);
  const std::uint64_t group_order = checked_pow(q, d) - 1;
  const Factorization f = factorize(group_order);
  auto is_generator = [&](const GFMatrix& c) {
    if (!mat_pow(c, group_order).is_identity()) return false;
    for (const auto& part : f.parts) {
      if (mat_pow(c, group_order / part.prime).is_identity()) return false;
    }
    return true;
  };
  // Companion matrices of x^d + a_{d-1} x^{d-1} + ... + a_0 in lexicographic
  // order of (a_0, ..., a_{d-1}), a_0 != 0.
  std::vector<std::uint32_t> coeffs(d, 0);
  const std::uint64_t total = checked_pow(q, d);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (std::uint32_t i = d; i-- > 0;) {
      coeffs[i] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    if (coeffs[0] == 0) continue;
    GFMatrix c(d, q);
    for (std::uint32_t i = 0; i + 1 < d; ++i) c.set(i + 1, i, 1);
    for (std::uint32_t i = 0; i < d; ++i) c.set(i, d - 1, q - coeffs[i]);
    if (is_generator(c)) return c;
  }
  throw InvalidArgument("no primitive polynomial found");  // unreachable for prime q
}

std::vector<std::vector<std::uint32_t>> symmetric_sylow_generators(std::uint32_t r, std::uint64_t p) {
  std::vector<std::vector<std::uint32_t>> gens;
  std::vector<std::uint32_t> digits;
  for (std::uint32_t rest = r; rest > 0; rest = static_cast<std::uint32_t>(rest / p)) {
    digits.push_back(static_cast<std::uint32_t>(rest % p));
  }
  std::uint32_t offset = 0;
  for (std::size_t k = digits.size(); k-- > 0;) {
    const std::uint64_t block = checked_pow(p, static_cast<std::uint32_t>(k));
    for (std::uint32_t copy = 0; copy < digits[k]; ++copy) {
      std::uint64_t span = 1;
      for (std::size_t level = 1; level <= k; ++level) {
        const std::uint64_t shift = span;
        span *= p;
        std::vector<std::uint32_t> images(r);
        for (std::uint32_t x = 0; x < r; ++x) images[x] = x;
        for (std::uint64_t x = 0; x < span; ++x) {
          images[offset + x] = static_cast<std::uint32_t>(offset + (x + shift) % span);
        }
        gens.push_back(std::move(images));
      }
      offset += static_cast<std::uint32_t>(block);
    }
  }
  return gens;
}

std::vector<GFMatrix> sylow_gl_structured(std::uint32_t t, std::uint32_t q, std::uint64_t p) {
  require_field(t, q);
  if (!is_prime(p)) throw InvalidArgument("p must be prime, got " + std::to_string(p));
  if (p == q) throw InvalidArgument("structured Sylow construction needs p != q");
  if (gamma_valuation(t, q, p) == 0) return {};

  std::uint32_t d = 1;
  std::vector<GFMatrix> base;
  bool extra_sign = false;
  if (p == 2 && q % 4 == 3) {
    // Semidihedral Sylow 2-subgroup of GL(2, q): the 2-part of a Singer
    // cycle together with the Frobenius x -> x^q.
    d = 2;
    const GFMatrix singer = singer_cycle(2, q);
    const std::uint64_t order = std::uint64_t{q} * q - 1;
    const std::uint64_t two_part = std::uint64_t{1} << padic_valuation(order, 2);
    GFMatrix frobenius = GFMatrix::identity(2, q);
    frobenius.set(0, 1, singer.at(1, 1));
    frobenius.set(1, 1, q - 1);
    base = {mat_pow(singer, order / two_part), frobenius};
    extra_sign = t % 2 == 1;
  } else {
    d = p == 2 ? 1 : static_cast<std::uint32_t>(multiplicative_order(q % p, p));
    const std::uint64_t order = checked_pow(q, d) - 1;
    const std::uint64_t p_part = checked_pow(p, padic_valuation(order, p));
    base = {mat_pow(singer_cycle(d, q), order / p_part)};
  }

  const std::uint32_t blocks = t / d;
  std::vector<GFMatrix> gens;
  for (std::uint32_t j = 0; j < blocks; ++j) {
    for (const auto& b : base) gens.push_back(embed_block(b, t, j * d));
  }
  for (const auto& sigma : symmetric_sylow_generators(blocks, p)) {
    GFMatrix perm = GFMatrix::identity(t, q);
    for (std::uint32_t j = 0; j < blocks; ++j) {
      for (std::uint32_t k = 0; k < d; ++k) {
        perm.set(j * d + k, j * d + k, 0);
      }
    }
    for (std::uint32_t j = 0; j < blocks; ++j) {
      for (std::uint32_t k = 0; k < d; ++k) perm.set(sigma[j] * d + k, j * d + k, 1);
    }
    gens.push_back(std::move(perm));
  }
  if (extra_sign) {
    GFMatrix sign = GFMatrix::identity(t, q);
    sign.set(t - 1, t - 1, q - 1);
    gens.push_back(std::move(sign));
  }
  return gens;
}

std::vector<GFMatrix> matrix_group_elements(std::span<const GFMatrix> gens, std::uint32_t t,
                                            std::uint32_t q, std::uint64_t cap) {
  std::unordered_set<GFMatrix, GFMatrixHash> seen;
  std::vector<GFMatrix> out{GFMatrix::identity(t, q)};
  seen.insert(out.front());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      GFMatrix next = mat_mul(out[i], g);
      if (seen.insert(next).second) {
        if (out.size() >= cap) throw CapExceeded("matrix group exceeds cap " + std::to_string(cap));
        out.push_back(std::move(next));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GFMatrix> sylow_gl_by_climbing(std::uint32_t t, std::uint32_t q, std::uint64_t p,
                                           std::uint64_t cap) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime, got " + std::to_string(p));
  const std::vector<GFMatrix> all = enumerate_gl(t, q, cap);
  const std::uint32_t target_exp = padic_valuation(gl_order(t, q), p);
  const BigNat target = boost::multiprecision::pow(BigNat(p), target_exp);

  std::vector<GFMatrix> inverses;
  inverses.reserve(all.size());
  for (const auto& g : all) inverses.push_back(mat_inverse(g));

  std::vector<GFMatrix> gens;
  std::vector<GFMatrix> members{GFMatrix::identity(t, q)};
  std::unordered_set<GFMatrix, GFMatrixHash> member_set(members.begin(), members.end());
  while (BigNat(members.size()) < target) {
    bool grown = false;
    for (std::size_t i = 0; i < all.size() && !grown; ++i) {
      const GFMatrix& g = all[i];
      if (member_set.contains(g)) continue;
      if (!member_set.contains(mat_pow(g, p))) continue;
      const bool normalizes = std::all_of(gens.begin(), gens.end(), [&](const GFMatrix& h) {
        return member_set.contains(mat_mul(mat_mul(inverses[i], h), g));
      });
      if (!normalizes) continue;
      // g normalizes P and g^p lies in P, so <P, g> is the union of the
      // cosets P g^k for k < p.
      std::vector<GFMatrix> next = members;
      GFMatrix power = g;
      for (std::uint64_t k = 1; k < p; ++k) {
        for (const auto& h : members) next.push_back(mat_mul(h, power));
        power = mat_mul(power, g);
      }
      members = std::move(next);
      member_set = {members.begin(), members.end()};
      gens.push_back(g);
      grown = true;
    }
    if (!grown) throw InvalidArgument("Sylow climbing stalled");  // contradicts Sylow theory
  }
  return gens;
}

}  // namespace normalp
