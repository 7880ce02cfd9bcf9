// This file is part of urlat, a workbench for finite residuated lattices.
// Distributed under the MIT License; see the LICENSE file.

#include "urlat/frames.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "urlat/analyze.hpp"

namespace urlat {

namespace {

/// Index-lexicographic comparison of bit rows viewed as ascending member
/// lists ({0,1} before {0,2} before {1}; prefixes first).
bool bits_lex_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    int la = std::countr_zero(a);
    int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace

Frame build_frame(const FinRL& A, std::vector<int> B) {
  if (!A.bot || !A.top) {
    throw Error(Err::NotBounded, "frame construction needs a bounded algebra");
  }
  std::sort(B.begin(), B.end());
  if (std::adjacent_find(B.begin(), B.end()) != B.end()) {
    throw Error(Err::SemanticError, "subset has duplicate indices");
  }
  if (!B.empty() && (B.front() < 0 || B.back() >= A.n)) {
    throw Error(Err::SemanticError, "subset index out of range");
  }
  auto in_b = [&](int v) {
    return std::binary_search(B.begin(), B.end(), v);
  };
  if (!in_b(*A.bot) || !in_b(*A.top) || !in_b(A.unit)) {
    throw Error(Err::SemanticError,
                "subset must contain the bounds and the unit");
  }

  Frame fr;
  fr.A = A;
  fr.B = B;

  // W: least mul-closed superset of B containing the unit.
  std::vector<std::uint8_t> in_w(A.n, 0);
  in_w[A.unit] = 1;
  for (int b : B) in_w[b] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < A.n; ++x) {
      if (!in_w[x]) continue;
      for (int y = 0; y < A.n; ++y) {
        if (!in_w[y]) continue;
        int p = A.prod(x, y);
        if (!in_w[p]) {
          in_w[p] = 1;
          grew = true;
        }
      }
    }
  }
  for (int x = 0; x < A.n; ++x) {
    if (in_w[x]) fr.W.push_back(x);
  }
  if (fr.W.size() > 64) {
    throw Error(Err::CapExceeded, "generated submonoid exceeds 64 elements",
                {static_cast<int>(fr.W.size())});
  }

  const int nw = static_cast<int>(fr.W.size());
  auto wpos = [&](int v) {
    return static_cast<int>(
        std::find(fr.W.begin(), fr.W.end(), v) - fr.W.begin());
  };
  fr.unit_pos = wpos(A.unit);
  fr.wmul.assign(static_cast<std::size_t>(nw) * nw, 0);
  for (int i = 0; i < nw; ++i) {
    for (int j = 0; j < nw; ++j) {
      fr.wmul[i * nw + j] = wpos(A.prod(fr.W[i], fr.W[j]));
    }
  }

  // Distinct traces over all triples (y, b, z): {x in W : y x z <= b}.
  std::set<std::uint64_t> traces;
  for (int y : fr.W) {
    for (int b : B) {
      for (int z : fr.W) {
        std::uint64_t row = 0;
        for (int i = 0; i < nw; ++i) {
          int t = A.prod(A.prod(y, fr.W[i]), z);
          if (A.le(t, b)) row |= std::uint64_t{1} << i;
        }
        traces.insert(row);
      }
    }
  }
  fr.traces.assign(traces.begin(), traces.end());
  return fr;
}

std::uint64_t galois_closure(const Frame& fr, std::uint64_t X) {
  std::uint64_t acc = fr.full_mask();
  for (std::uint64_t t : fr.traces) {
    if ((X & t) == X) acc &= t;
  }
  return acc;
}

GaloisAlgebra build_galois_algebra(const Frame& fr) {
  GaloisAlgebra g;
  g.frame = fr;
  const int nw = static_cast<int>(fr.W.size());

  // Closed sets: all intersections of traces, plus W itself.
  std::set<std::uint64_t> closed(fr.traces.begin(), fr.traces.end());
  closed.insert(fr.full_mask());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> snapshot(closed.begin(), closed.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::uint64_t t : fr.traces) {
        if (closed.insert(snapshot[i] & t).second) grew = true;
      }
    }
    if (closed.size() > 4096) {
      throw Error(Err::CapExceeded, "more than 4096 closed sets");
    }
  }
  g.closed.assign(closed.begin(), closed.end());
  std::sort(g.closed.begin(), g.closed.end(), bits_lex_less);

  const int n = static_cast<int>(g.closed.size());
  auto index_of = [&](std::uint64_t s) {
    for (int i = 0; i < n; ++i) {
      if (g.closed[i] == s) return i;
    }
    throw Error(Err::ClassificationViolation,
                "operation left the closed-set family");
  };

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      leq[i * n + j] = (g.closed[i] & g.closed[j]) == g.closed[i];
    }
  }

  std::vector<int> mul(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> ldiv(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> rdiv(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::uint64_t prod_set = 0;
      std::uint64_t x = g.closed[i];
      while (x) {
        int xi = std::countr_zero(x);
        x &= x - 1;
        std::uint64_t y = g.closed[j];
        while (y) {
          int yi = std::countr_zero(y);
          y &= y - 1;
          prod_set |= std::uint64_t{1} << fr.wmul[xi * nw + yi];
        }
      }
      mul[i * n + j] = index_of(galois_closure(fr, prod_set));
    }
  }
  // Divisions directly from residuation over W: X\Z = {w : X w subset Z},
  // Z/Y = {w : w Y subset Z}.  Cross-checked against derived residuals by
  // the assembly below.
  for (int xi = 0; xi < n; ++xi) {
    for (int zi = 0; zi < n; ++zi) {
      std::uint64_t l = 0, r = 0;
      for (int w = 0; w < nw; ++w) {
        bool okl = true, okr = true;
        std::uint64_t x = g.closed[xi];
        while (x && (okl || okr)) {
          int p = std::countr_zero(x);
          x &= x - 1;
          if (!((g.closed[zi] >> fr.wmul[p * nw + w]) & 1)) okl = false;
          if (!((g.closed[zi] >> fr.wmul[w * nw + p]) & 1)) okr = false;
        }
        if (okl) l |= std::uint64_t{1} << w;
        if (okr) r |= std::uint64_t{1} << w;
      }
      ldiv[xi * n + zi] = index_of(l);
      rdiv[zi * n + xi] = index_of(r);
    }
  }

  int unit = index_of(
      galois_closure(fr, std::uint64_t{1} << fr.unit_pos));
  g.algebra =
      assemble_algebra_with_divisions(n, std::move(leq), std::move(mul), unit,
                                      std::move(ldiv), std::move(rdiv),
                                      Err::ClassificationViolation);

  g.image.clear();
  for (int b : fr.B) {
    int p = static_cast<int>(
        std::find(fr.W.begin(), fr.W.end(), b) - fr.W.begin());
    g.image.push_back(index_of(galois_closure(fr, std::uint64_t{1} << p)));
  }
  return g;
}

EmbeddingReport check_fep_embedding(const GaloisAlgebra& G) {
  const FinRL& A = G.frame.A;
  const std::vector<int>& B = G.frame.B;
  const FinRL& W = G.algebra;
  EmbeddingReport rep;

  auto bpos = [&](int v) {
    return static_cast<int>(
        std::find(B.begin(), B.end(), v) - B.begin());
  };

  rep.injective = true;
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = i + 1; j < B.size(); ++j) {
      if (G.image[i] == G.image[j]) {
        throw Error(Err::EmbeddingFailure, "two subset elements collide",
                    {-1, B[i], B[j]});
      }
    }
  }

  rep.unit_ok = G.image[bpos(A.unit)] == W.unit;
  rep.bot_ok = W.bot && G.image[bpos(*A.bot)] == *W.bot;
  rep.top_ok = W.top && G.image[bpos(*A.top)] == *W.top;
  if (!rep.unit_ok) {
    throw Error(Err::EmbeddingFailure, "unit not preserved", {A.unit});
  }
  if (!rep.bot_ok || !rep.top_ok) {
    throw Error(Err::EmbeddingFailure, "bounds not preserved");
  }

  PartialAlgebra part = induced_partial(A, B);
  using Op = PartialAlgebra::Op;
  const Op ops[] = {Op::Meet, Op::Join, Op::Mul, Op::Ldiv, Op::Rdiv};
  for (int oi = 0; oi < 5; ++oi) {
    for (int b1 : B) {
      for (int b2 : B) {
        if (!part.defined(ops[oi], b1, b2)) continue;
        int val = part.parent_value(ops[oi], b1, b2);
        int lhs = -1;
        int e1 = G.image[bpos(b1)], e2 = G.image[bpos(b2)];
        switch (ops[oi]) {
          case Op::Meet: lhs = W.mt(e1, e2); break;
          case Op::Join: lhs = W.jn(e1, e2); break;
          case Op::Mul: lhs = W.prod(e1, e2); break;
          case Op::Ldiv: lhs = W.ld(e1, e2); break;
          case Op::Rdiv: lhs = W.rd(e1, e2); break;
        }
        if (lhs != G.image[bpos(val)]) {
          throw Error(Err::EmbeddingFailure,
                      "partial operation instance not preserved",
                      {oi, b1, b2});
        }
        ++rep.checked[oi];
      }
    }
  }
  rep.ok = true;
  return rep;
}

EmbeddingReport check_fep_embedding(const FinRL& A, std::vector<int> B) {
  return check_fep_embedding(build_galois_algebra(build_frame(A, std::move(B))));
}

bool is_commutative(const FinRL& R) {
  for (int x = 0; x < R.n; ++x) {
    for (int y = x + 1; y < R.n; ++y) {
      if (R.prod(x, y) != R.prod(y, x)) return false;
    }
  }
  return true;
}

PreservationCheck check_preservation_knotted(const FinRL& A, const FinRL& ext,
                                             int m, int n) {
  PreservationCheck c;
  c.holds_in_source = check_knotted(A, m, n);
  c.holds_in_extension = check_knotted(ext, m, n);
  c.conditional_ok = !c.holds_in_source || c.holds_in_extension;
  return c;
}

PreservationCheck check_preservation_weak_comm(const FinRL& A,
                                               const FinRL& ext,
                                               const std::vector<int>& exps) {
  PreservationCheck c;
  c.holds_in_source = check_weak_commutativity(A, exps);
  c.holds_in_extension = check_weak_commutativity(ext, exps);
  c.conditional_ok = !c.holds_in_source || c.holds_in_extension;
  return c;
}

PreservationCheck check_preservation_commutative(const FinRL& A,
                                                 const FinRL& ext) {
  PreservationCheck c;
  c.holds_in_source = is_commutative(A);
  c.holds_in_extension = is_commutative(ext);
  c.conditional_ok = !c.holds_in_source || c.holds_in_extension;
  return c;
}

}  // namespace urlat
