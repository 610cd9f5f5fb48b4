#include "kleinfour/kernels.hpp"

#include <atomic>
#include <string>

namespace kleinfour::kernels {
namespace {

void require(bool ok, const char* what, std::uint32_t bound) {
  if (!ok) throw budget_error(std::string(what) + " (bound q <= " + std::to_string(bound) + ")");
}

bool admissible_scan_serial(const FqAlgebra& A) {
  const FqExt& ext = A.ext();
  const std::uint64_t n = ext.size();
  for (std::uint64_t ix = 0; ix < n; ++ix) {
    ExtElem<Fq> x = ext.element(ix);
    for (std::uint64_t iy = (ix == 0 ? 1 : 0); iy < n; ++iy) {
      if (ext.is_zero(A.q_of({x, ext.element(iy)}))) return false;
    }
  }
  return true;
}

bool admissible_scan_parallel(const FqAlgebra& A) {
  const FqExt& ext = A.ext();
  const std::int64_t n = static_cast<std::int64_t>(ext.size());
  std::atomic<bool> isotropic{false};
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t ix = 0; ix < n; ++ix) {
    if (isotropic.load(std::memory_order_relaxed)) continue;
    ExtElem<Fq> x = ext.element(static_cast<std::uint64_t>(ix));
    for (std::int64_t iy = (ix == 0 ? 1 : 0); iy < n; ++iy) {
      if (ext.is_zero(A.q_of({x, ext.element(static_cast<std::uint64_t>(iy))}))) {
        isotropic.store(true, std::memory_order_relaxed);
        break;
      }
    }
  }
  return !isotropic.load();
}

}  // namespace

bool admissible_bruteforce(const FqAlgebra& A, Exec exec, const Budget& budget) {
  require(A.base().size() <= budget.max_q_scan, "admissibility scan budget exceeded",
          budget.max_q_scan);
  return exec == Exec::serial ? admissible_scan_serial(A) : admissible_scan_parallel(A);
}

std::uint64_t triple_index(const Fq& F, const FqTriple& c) {
  return (F.index(c.c1) * F.size() + F.index(c.c2)) * F.size() + F.index(c.c3);
}

FqTriple triple_at(const Fq& F, std::uint64_t index) {
  std::uint64_t q = F.size();
  return {F.element(index / (q * q)), F.element(index / q % q), F.element(index % q)};
}

std::vector<std::uint8_t> admissible_sweep(const FqExt& ext, Exec exec, const Budget& budget) {
  const Fq& F = ext.base();
  require(F.size() <= budget.max_q_sweep, "triple sweep budget exceeded", budget.max_q_sweep);
  const std::int64_t total = static_cast<std::int64_t>(F.size() * F.size() * F.size());
  std::vector<std::uint8_t> flags(total, 0);
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < total; ++i)
      flags[i] = admissible_scan_serial(FqAlgebra(ext, triple_at(F, i))) ? 1 : 0;
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < total; ++i)
      flags[i] = admissible_scan_serial(FqAlgebra(ext, triple_at(F, i))) ? 1 : 0;
  }
  return flags;
}

bool h_pair_anisotropic(const FqExt& ext, const FqElem& a, const FqElem& b, Exec exec,
                        const Budget& budget) {
  // h_{a,b} = q_c for c = (c1, c2, c3) with 1 - c1 = 1, c1 = a, c2 = 1, c3 = -b
  // shifted: h(x,y) = x^2 + a x conj x - y^2 + b y conj y. Reuse the algebra
  // scan with the matching triple: (1-c1) = 1 forces c1 = 0 only when a = 0,
  // so evaluate h directly instead.
  require(ext.base().size() <= budget.max_q_scan, "pair scan budget exceeded", budget.max_q_scan);
  const Fq& F = ext.base();
  const std::int64_t n = static_cast<std::int64_t>(ext.size());
  auto h_zero_at = [&](std::uint64_t ix, std::uint64_t iy) {
    ExtElem<Fq> x = ext.element(ix), y = ext.element(iy);
    ExtElem<Fq> v = ext.sub(ext.mul(x, x), ext.mul(y, y));
    v = ext.add(v, ext.scale(F.mul(a, ext.norm(x)), ext.one()));
    v = ext.add(v, ext.scale(F.mul(b, ext.norm(y)), ext.one()));
    return ext.is_zero(v);
  };
  if (exec == Exec::serial) {
    for (std::int64_t ix = 0; ix < n; ++ix)
      for (std::int64_t iy = (ix == 0 ? 1 : 0); iy < n; ++iy)
        if (h_zero_at(ix, iy)) return false;
    return true;
  }
  std::atomic<bool> isotropic{false};
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t ix = 0; ix < n; ++ix) {
    if (isotropic.load(std::memory_order_relaxed)) continue;
    for (std::int64_t iy = (ix == 0 ? 1 : 0); iy < n; ++iy)
      if (h_zero_at(ix, iy)) {
        isotropic.store(true, std::memory_order_relaxed);
        break;
      }
  }
  return !isotropic.load();
}

namespace {

// Indices of all elements of B squaring to the given central value.
std::vector<std::uint64_t> square_roots_of_central(const FqAlgebra& B, const FqElem& scalar,
                                                   Exec exec) {
  const FqExt& ext = B.ext();
  const std::uint64_t n = ext.size();
  const std::int64_t total = static_cast<std::int64_t>(n * n);
  AlgElem<Fq> want = B.scale(scalar, B.one());
  std::vector<std::uint8_t> hit(total, 0);
  auto probe = [&](std::int64_t i) {
    AlgElem<Fq> cand{ext.element(static_cast<std::uint64_t>(i) % n),
                     ext.element(static_cast<std::uint64_t>(i) / n)};
    if (B.eq(B.mul(cand, cand), want)) hit[i] = 1;
  };
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < total; ++i) probe(i);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) probe(i);
  }
  std::vector<std::uint64_t> out;
  for (std::int64_t i = 0; i < total; ++i)
    if (hit[i]) out.push_back(static_cast<std::uint64_t>(i));
  return out;
}

}  // namespace

std::vector<Mat<Fq>> brute_force_morphisms(const FqAlgebra& A, const FqAlgebra& B, Exec exec,
                                           const Budget& budget) {
  const FqExt& ext = A.ext();
  if (&ext != &B.ext()) throw context_mismatch("brute_force_morphisms: differing extensions");
  const Fq& F = ext.base();
  require(F.size() <= budget.max_q_morphism, "morphism scan budget exceeded", budget.max_q_morphism);

  // {1, u, j, ju} must be a basis of the source.
  {
    Mat<Fq> m(F, 4, 4);
    auto bas = A.standard_basis();
    for (std::size_t colv = 0; colv < 4; ++colv) {
      auto co = A.coords(bas[colv]);
      for (std::size_t r = 0; r < 4; ++r) m.at(r, colv) = co[r];
    }
    if (m.rank() != 4) throw std::logic_error("brute_force_morphisms: generators do not span");
  }

  // mu(u)^2 = mu(u^2) = t 1_B and mu(j)^2 = mu(j^2) = (c2 + c3) 1_B are two of
  // the 16 product constraints; they cut the candidate pairs down before the
  // full check.
  const FqElem t = ext.t();
  const FqElem j_sq = F.add(A.triple().c2, A.triple().c3);
  std::vector<std::uint64_t> u_images = square_roots_of_central(B, t, exec);
  std::vector<std::uint64_t> j_images = square_roots_of_central(B, j_sq, exec);

  const std::uint64_t n = ext.size();
  auto alg_at = [&](std::uint64_t i) {
    return AlgElem<Fq>{ext.element(i % n), ext.element(i / n)};
  };
  auto bas = A.standard_basis();
  std::vector<Mat<Fq>> found;
  for (std::uint64_t pi : u_images) {
    AlgElem<Fq> P = alg_at(pi);
    for (std::uint64_t qi : j_images) {
      AlgElem<Fq> Q = alg_at(qi);
      std::array<AlgElem<Fq>, 4> img{B.one(), P, Q, B.mul(Q, P)};
      auto mu = [&](const AlgElem<Fq>& z) {
        auto co = A.coords(z);
        AlgElem<Fq> out = B.zero();
        for (std::size_t m = 0; m < 4; ++m) out = B.add(out, B.scale(co[m], img[m]));
        return out;
      };
      bool ok = true;
      for (std::size_t i = 0; i < 4 && ok; ++i)
        for (std::size_t j = 0; j < 4 && ok; ++j)
          ok = B.eq(mu(A.mul(bas[i], bas[j])), B.mul(img[i], img[j]));
      if (!ok) continue;
      Mat<Fq> m(F, 4, 4);
      for (std::size_t colv = 0; colv < 4; ++colv) {
        auto co = B.coords(img[colv]);
        for (std::size_t r = 0; r < 4; ++r) m.at(r, colv) = co[r];
      }
      found.push_back(std::move(m));
    }
  }
  return found;
}

}  // namespace kleinfour::kernels
