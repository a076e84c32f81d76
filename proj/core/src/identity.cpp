#include "ternac/identity.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ternac {

namespace {

struct KindInfo {
  IdentityKind kind;
  const char* name;
  const char* long_name;
  int arity;
};

constexpr std::array<KindInfo, 14> kKinds{{
    {IdentityKind::TotallyAssociative, "total", "TotallyAssociative", 3},
    {IdentityKind::WeakTotallyAssociative, "weak", "WeakTotallyAssociative", 3},
    {IdentityKind::PartiallyAssociative, "partial", "PartiallyAssociative", 3},
    {IdentityKind::AlternateFirstKind, "alt1", "AlternateFirstKind", 3},
    {IdentityKind::AlternateSecondKind, "alt2", "AlternateSecondKind", 3},
    {IdentityKind::Symmetric, "symmetric", "Symmetric", 3},
    {IdentityKind::SkewSymmetric, "skew", "SkewSymmetric", 3},
    {IdentityKind::Commutative, "commutative", "Commutative", 3},
    {IdentityKind::TernaryLieS5, "lie-s5", "TernaryLieS5", 3},
    {IdentityKind::TernaryLieS3, "lie-s3", "TernaryLieS3", 3},
    {IdentityKind::NambuFundamental, "nambu", "NambuFundamental", 3},
    {IdentityKind::LieTriple, "lie-triple", "LieTriple", 3},
    {IdentityKind::BinaryAssociative, "assoc", "BinaryAssociative", 2},
    {IdentityKind::BinarySkewAssociative, "skew-assoc", "BinarySkewAssociative", 2},
}};

const KindInfo& info(IdentityKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k;
  throw std::logic_error("unhandled identity kind");
}

// Basis-level evaluator of nested compositions.
class Nester {
 public:
  explicit Nester(const Algebra& alg) : alg_(alg), n_(alg.dim()) {}

  std::span<const Scalar> m(std::size_t i, std::size_t j, std::size_t k) const {
    return alg_.product((i * n_ + j) * n_ + k);
  }
  std::span<const Scalar> mu(std::size_t i, std::size_t j) const { return alg_.product(i * n_ + j); }

  // m(m(i,j,k),l,q)
  Vector left(std::size_t i, std::size_t j, std::size_t k, std::size_t l, std::size_t q) const {
    return contract(m(i, j, k), [&](std::size_t t) { return m(t, l, q); });
  }
  // m(i,m(j,k,l),q)
  Vector mid(std::size_t i, std::size_t j, std::size_t k, std::size_t l, std::size_t q) const {
    return contract(m(j, k, l), [&](std::size_t t) { return m(i, t, q); });
  }
  // m(i,j,m(k,l,q))
  Vector right(std::size_t i, std::size_t j, std::size_t k, std::size_t l, std::size_t q) const {
    return contract(m(k, l, q), [&](std::size_t t) { return m(i, j, t); });
  }
  // mu(mu(i,j),k)
  Vector left2(std::size_t i, std::size_t j, std::size_t k) const {
    return contract(mu(i, j), [&](std::size_t t) { return mu(t, k); });
  }
  // mu(i,mu(j,k))
  Vector right2(std::size_t i, std::size_t j, std::size_t k) const {
    return contract(mu(j, k), [&](std::size_t t) { return mu(i, t); });
  }

  std::size_t dim() const { return n_; }

 private:
  template <class Outer>
  Vector contract(std::span<const Scalar> inner, Outer outer) const {
    Vector out(n_);
    for (std::size_t t = 0; t < n_; ++t) {
      if (inner[t].is_zero()) continue;
      auto p = outer(t);
      for (std::size_t s = 0; s < n_; ++s) add_product(out[s], inner[t], p[s]);
    }
    return out;
  }

  const Algebra& alg_;
  std::size_t n_;
};

Vector combine(std::initializer_list<std::pair<int, Vector>> terms) {
  Vector out(terms.begin()->second.size());
  for (const auto& [sign, v] : terms)
    for (std::size_t s = 0; s < v.size(); ++s) {
      if (v[s].is_zero()) continue;
      if (sign > 0) out[s] += v[s];
      else out[s] -= v[s];
    }
  return out;
}

Vector to_vector(std::span<const Scalar> s) { return {s.begin(), s.end()}; }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// Calls check(tuple) over all k-tuples in lexicographic order; check returns
// a defect vector (zero when the equation holds there).
std::optional<Counterexample> scan(std::size_t n, std::size_t k, const std::string& clause,
                                   const std::function<Vector(const std::vector<std::size_t>&)>& check) {
  std::vector<std::size_t> x(k, 0);
  while (true) {
    Vector d = check(x);
    if (!is_zero(d)) return Counterexample{x, std::move(d), clause};
    std::size_t pos = k;
    while (pos > 0 && ++x[pos - 1] == n) x[--pos] = 0;
    if (pos == 0) return std::nullopt;
  }
}

int permutation_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) sign = -sign;
  return sign;
}

std::vector<std::pair<std::vector<std::size_t>, int>> signed_permutations(std::size_t k) {
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::pair<std::vector<std::size_t>, int>> out;
  do {
    out.emplace_back(p, permutation_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::optional<Counterexample> skew_symmetry(const Nester& nz) {
  auto perms = signed_permutations(3);
  return scan(nz.dim(), 3, "skew-symmetry", [&](const std::vector<std::size_t>& x) {
    auto base = nz.m(x[0], x[1], x[2]);
    for (const auto& [p, sign] : perms) {
      Vector d = to_vector(nz.m(x[p[0]], x[p[1]], x[p[2]]));
      for (std::size_t s = 0; s < d.size(); ++s) d[s] -= sign > 0 ? base[s] : -base[s];
      if (!is_zero(d)) return d;
    }
    return Vector(nz.dim());
  });
}

std::optional<Counterexample> fundamental(const Nester& nz) {
  return scan(nz.dim(), 5, "fundamental identity", [&](const std::vector<std::size_t>& x) {
    return combine({{1, nz.right(x[0], x[1], x[2], x[3], x[4])},
                    {-1, nz.left(x[0], x[1], x[2], x[3], x[4])},
                    {-1, nz.mid(x[2], x[0], x[1], x[3], x[4])},
                    {-1, nz.right(x[2], x[3], x[0], x[1], x[4])}});
  });
}

std::optional<Counterexample> lie_jacobi(const Nester& nz, std::size_t permuted) {
  auto perms = signed_permutations(permuted);
  return scan(nz.dim(), 5, "generalized Jacobi", [&](const std::vector<std::size_t>& x) {
    Vector acc(nz.dim());
    std::array<std::size_t, 5> y{};
    for (const auto& [p, sign] : perms) {
      for (std::size_t a = 0; a < 5; ++a) y[a] = a < permuted ? x[p[a]] : x[a];
      Vector t = nz.left(y[0], y[1], y[2], y[3], y[4]);
      for (std::size_t s = 0; s < t.size(); ++s) {
        if (sign > 0) acc[s] += t[s];
        else acc[s] -= t[s];
      }
    }
    return acc;
  });
}

std::optional<Counterexample> associator(const Nester& nz, int mid_sign, int right_sign, const char* clause) {
  return scan(nz.dim(), 5, clause, [&](const std::vector<std::size_t>& x) {
    return combine({{1, nz.left(x[0], x[1], x[2], x[3], x[4])},
                    {mid_sign, nz.mid(x[0], x[1], x[2], x[3], x[4])},
                    {right_sign, nz.right(x[0], x[1], x[2], x[3], x[4])}});
  });
}

std::optional<Counterexample> run_check(const Algebra& alg, IdentityKind kind) {
  const Nester nz(alg);
  const std::size_t n = alg.dim();
  switch (kind) {
    case IdentityKind::TotallyAssociative:
      if (auto c = scan(n, 5, "left = middle", [&](const std::vector<std::size_t>& x) {
            return combine({{1, nz.left(x[0], x[1], x[2], x[3], x[4])},
                            {-1, nz.mid(x[0], x[1], x[2], x[3], x[4])}});
          }))
        return c;
      return scan(n, 5, "middle = right", [&](const std::vector<std::size_t>& x) {
        return combine({{1, nz.mid(x[0], x[1], x[2], x[3], x[4])},
                        {-1, nz.right(x[0], x[1], x[2], x[3], x[4])}});
      });
    case IdentityKind::WeakTotallyAssociative:
      return scan(n, 5, "left = right", [&](const std::vector<std::size_t>& x) {
        return combine({{1, nz.left(x[0], x[1], x[2], x[3], x[4])},
                        {-1, nz.right(x[0], x[1], x[2], x[3], x[4])}});
      });
    case IdentityKind::PartiallyAssociative:
      return associator(nz, 1, 1, "left + middle + right = 0");
    case IdentityKind::AlternateFirstKind:
      return associator(nz, -1, 1, "left - middle + right = 0");
    case IdentityKind::AlternateSecondKind:
      return associator(nz, -1, -1, "left - middle - right = 0");
    case IdentityKind::Symmetric: {
      auto perms = signed_permutations(3);
      return scan(n, 3, "symmetry", [&](const std::vector<std::size_t>& x) {
        auto base = nz.m(x[0], x[1], x[2]);
        for (const auto& [p, sign] : perms) {
          Vector d = to_vector(nz.m(x[p[0]], x[p[1]], x[p[2]]));
          for (std::size_t s = 0; s < d.size(); ++s) d[s] -= base[s];
          if (!is_zero(d)) return d;
        }
        return Vector(n);
      });
    }
    case IdentityKind::SkewSymmetric:
      return skew_symmetry(nz);
    case IdentityKind::Commutative: {
      auto perms = signed_permutations(3);
      return scan(n, 3, "signed symmetrization = 0", [&](const std::vector<std::size_t>& x) {
        Vector acc(n);
        for (const auto& [p, sign] : perms) {
          auto t = nz.m(x[p[0]], x[p[1]], x[p[2]]);
          for (std::size_t s = 0; s < n; ++s) {
            if (sign > 0) acc[s] += t[s];
            else acc[s] -= t[s];
          }
        }
        return acc;
      });
    }
    case IdentityKind::TernaryLieS5:
      if (auto c = skew_symmetry(nz)) return c;
      return lie_jacobi(nz, 5);
    case IdentityKind::TernaryLieS3:
      if (auto c = skew_symmetry(nz)) return c;
      return lie_jacobi(nz, 3);
    case IdentityKind::NambuFundamental:
      return fundamental(nz);
    case IdentityKind::LieTriple:
      if (auto c = scan(n, 3, "cyclic sum = 0", [&](const std::vector<std::size_t>& x) {
            Vector acc(n);
            for (auto t : {nz.m(x[0], x[1], x[2]), nz.m(x[1], x[2], x[0]), nz.m(x[2], x[0], x[1])})
              for (std::size_t s = 0; s < n; ++s) acc[s] += t[s];
            return acc;
          }))
        return c;
      return fundamental(nz);
    case IdentityKind::BinaryAssociative:
      return scan(n, 3, "(xy)z = x(yz)", [&](const std::vector<std::size_t>& x) {
        return combine({{1, nz.left2(x[0], x[1], x[2])}, {-1, nz.right2(x[0], x[1], x[2])}});
      });
    case IdentityKind::BinarySkewAssociative:
      return scan(n, 3, "(xy)z = -x(yz)", [&](const std::vector<std::size_t>& x) {
        return combine({{1, nz.left2(x[0], x[1], x[2])}, {1, nz.right2(x[0], x[1], x[2])}});
      });
  }
  throw std::logic_error("unhandled identity kind");
}

}  // namespace

std::vector<IdentityKind> all_identity_kinds() {
  std::vector<IdentityKind> out;
  for (const auto& k : kKinds) out.push_back(k.kind);
  return out;
}

std::string identity_name(IdentityKind kind) { return info(kind).name; }

IdentityKind parse_identity(std::string_view name) {
  for (const auto& k : kKinds)
    if (name == k.name || name == k.long_name) return k.kind;
  throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

int identity_arity(IdentityKind kind) { return info(kind).arity; }

IdentityReport check_identity(const Algebra& alg, IdentityKind kind) {
  if (alg.arity() != identity_arity(kind))
    throw std::invalid_argument("identity '" + identity_name(kind) + "' needs an algebra of arity " +
                                std::to_string(identity_arity(kind)));
  IdentityReport report{kind, true, run_check(alg, kind)};
  report.holds = !report.counterexample.has_value();
  return report;
}

}  // namespace ternac
