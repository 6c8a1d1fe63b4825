#include <sstream>

#include "binar/array.hpp"
#include "binar/binomial.hpp"
#include "binar/transform.hpp"
#include "suite_common.hpp"

namespace binar::detail {

namespace {

std::string kv(std::initializer_list<std::pair<const char*, long>> items) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : items) {
    if (!first) os << ",";
    os << k << "=" << v;
    first = false;
  }
  return os.str();
}

void closed_form_vs_fill(SuiteReport& out, std::uint64_t seed, long cases) {
  Family fam("ClosedFormPascalAgreement",
             "random degree<=6 initial conditions; windows k in [0,deg+6], n in [-6,6]");
  auto rng = family_rng(seed, "ClosedFormPascalAgreement");
  const long arrays = std::max<long>(6, cases / 25);
  for (long c = 0; c < arrays; ++c) {
    const long deg = rand_range(rng, 0, 6);
    const BinomialArray A = make_array(rand_poly(rng, deg));
    const Window w = A.window(0, deg + 6, -6, 6);
    bool ok = true;
    std::string where;
    for (long k = w.k_min(); k <= w.k_max() && ok; ++k)
      for (long n = w.n_min(); n <= w.n_max() && ok; ++n)
        if (w.at(k, n) != A.entry(k, n)) {
          ok = false;
          where = kv({{"case", c}, {"k", k}, {"n", n}});
        }
    fam.check_flag(ok ? kv({{"case", c}}) : where, ok);
  }
  out.families.push_back(fam.take());
}

void entry_anchors(SuiteReport& out) {
  Family fam("EntryAnchors", "fixed spot values of B(1-x) and the extended Pascal triangle");
  const BinomialArray A = make_array(InitialSequence{1, -1});
  fam.check("B(1-x),k=3,n=6", A.entry(3, 6), Scalar(5));
  fam.check("B(1-x),k=1,n=-1", A.entry(1, -1), Scalar(-2));
  for (long t = 1; t <= 6; ++t)
    fam.check(kv({{"near-zero t", t}}), A.entry(t, 2 * t), catalan(t));
  const BinomialArray E = make_array(InitialSequence{1});
  for (long k = 0; k <= 6; ++k)
    for (long n = -6; n <= 6; ++n)
      fam.check(kv({{"pascal k", k}, {"n", n}}), E.entry(k, n), binomial(n, k));
  out.families.push_back(fam.take());
}

void transform_round_trip(SuiteReport& out, std::uint64_t seed) {
  Family fam("TransformRoundTrip", "100 seeded prefixes, length <= 10, n <= 8");
  auto rng = family_rng(seed, "TransformRoundTrip");
  for (long c = 0; c < 100; ++c) {
    const long len = rand_range(rng, 1, 10);
    const long n = rand_range(rng, 0, 8);
    const SeqVec a = rand_prefix(rng, len);
    const bool ok = inverse_transform(forward_transform(a, n), n) == a &&
                    forward_transform(inverse_transform(a, n), n) == a;
    fam.check_flag(kv({{"case", c}, {"len", len}, {"n", n}}), ok);
  }
  out.families.push_back(fam.take());
}

void transform_composition(SuiteReport& out, std::uint64_t seed, long cases) {
  Family fam("TransformComposition", "random prefixes; shifts n1, n2 in [-6,6]");
  auto rng = family_rng(seed, "TransformComposition");
  const long reps = std::max<long>(40, cases / 5);
  for (long c = 0; c < reps; ++c) {
    const long len = rand_range(rng, 1, 9);
    const long n1 = rand_range(rng, -6, 6), n2 = rand_range(rng, -6, 6);
    const SeqVec a = rand_prefix(rng, len);
    SeqVec mid(a.size()), twice(a.size()), direct(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) mid[k] = transform_entry(a, n2, static_cast<long>(k));
    for (std::size_t k = 0; k < a.size(); ++k) {
      twice[k] = transform_entry(mid, n1, static_cast<long>(k));
      direct[k] = transform_entry(a, n1 + n2, static_cast<long>(k));
    }
    fam.check_flag(kv({{"case", c}, {"n1", n1}, {"n2", n2}}), twice == direct);
  }
  out.families.push_back(fam.take());
}

void linearity(SuiteReport& out, std::uint64_t seed, long cases) {
  Family fam("Linearity", "entry(B(r*a+b)) = r*entry(B(a)) + entry(B(b)) at random cells");
  auto rng = family_rng(seed, "Linearity");
  const long reps = std::max<long>(40, cases / 5);
  for (long c = 0; c < reps; ++c) {
    const InitialSequence a = rand_poly(rng, rand_range(rng, 0, 5));
    const InitialSequence b = rand_poly(rng, rand_range(rng, 0, 5));
    const Scalar r = rand_coeff(rng);
    const BinomialArray A = make_array(a), B = make_array(b);
    const BinomialArray C = linear_combination({{r, A}, {Scalar(1), B}});
    const long k = rand_range(rng, 0, 8), n = rand_range(rng, -6, 6);
    fam.check(kv({{"case", c}, {"k", k}, {"n", n}}), C.entry(k, n),
              r * A.entry(k, n) + B.entry(k, n));
  }
  out.families.push_back(fam.take());
}

void basis_decomposition(SuiteReport& out, std::uint64_t seed, long cases) {
  Family fam("BasisDecomposition", "B(a) = sum_j a_j P(j) at random cells");
  auto rng = family_rng(seed, "BasisDecomposition");
  const long reps = std::max<long>(30, cases / 8);
  for (long c = 0; c < reps; ++c) {
    const InitialSequence a = rand_poly(rng, rand_range(rng, 0, 5));
    std::vector<std::pair<Scalar, BinomialArray>> terms;
    for (long j = 0; j < static_cast<long>(a.coeffs().size()); ++j)
      terms.emplace_back(a.term(j), pascal_basis(j));
    const BinomialArray S = linear_combination(terms);
    const BinomialArray A = make_array(a);
    const long k = rand_range(rng, 0, 8), n = rand_range(rng, -6, 6);
    fam.check(kv({{"case", c}, {"k", k}, {"n", n}}), S.entry(k, n), A.entry(k, n));
  }
  out.families.push_back(fam.take());
}

void taylor_families(SuiteReport& out, std::uint64_t seed, long cases) {
  {
    Family fam("TaylorAnchors", "fixed cubic expansions at x = -1");
    const InitialSequence pstar{-6, 1, 5, 2};  // 2x^3+5x^2+x-6
    const InitialSequence p{2, 5, 1, -6};      // -6x^3+x^2+5x+2
    fam.check_flag("2x^3+5x^2+x-6",
                   taylor_at_minus_one(pstar) == SeqVec({-4, -3, -1, 2}));
    fam.check_flag("-6x^3+x^2+5x+2",
                   taylor_at_minus_one(p) == SeqVec({4, -15, 19, -6}));
    out.families.push_back(fam.take());
  }
  {
    Family fam("TaylorConsistency", "random polynomials: expansion re-evaluates to p");
    auto rng = family_rng(seed, "TaylorConsistency");
    const long reps = std::max<long>(30, cases / 8);
    for (long c = 0; c < reps; ++c) {
      const InitialSequence p = rand_poly(rng, rand_range(rng, 0, 6));
      const SeqVec t = taylor_at_minus_one(p);
      // Rebuild sum_j t_j (x+1)^j and compare coefficientwise.
      SeqVec rebuilt;
      for (std::size_t j = 0; j < t.size(); ++j)
        rebuilt = poly::add(rebuilt, poly::scale(t[j], poly::one_plus_x_power(static_cast<long>(j))));
      fam.check_flag(kv({{"case", c}}), InitialSequence(rebuilt) == p);
    }
    out.families.push_back(fam.take());
  }
}

void reverse_and_interchange(SuiteReport& out, std::uint64_t seed, long cases) {
  {
    Family fam("ReverseInvolution", "reversed columns; applying twice is the identity");
    auto rng = family_rng(seed, "ReverseInvolution");
    const long reps = std::max<long>(30, cases / 8);
    for (long c = 0; c < reps; ++c) {
      const long m = rand_range(rng, 0, 6);
      const InitialSequence p = rand_poly(rng, m);
      const BinomialArray A = make_array(p);
      const BinomialArray R = reverse_involution(A);
      const long n = rand_range(rng, 0, 6);
      const long k = rand_range(rng, 0, n + m);
      bool ok = R.entry(k, n) == A.entry(n + m - k, n);
      // Reversal is involutive only when x does not divide p.
      if (ok && !p.term(0).is_zero())
        ok = reverse_involution(R).entry(k, n) == A.entry(k, n);
      fam.check_flag(kv({{"case", c}, {"k", k}, {"n", n}}), ok);
    }
    out.families.push_back(fam.take());
  }
  {
    Family fam("TrapezoidInterchange",
               "entry(A,k,n) = (-1)^k entry(A',k,k-n-m-1) for n <= -1; involutive");
    auto rng = family_rng(seed, "TrapezoidInterchange");
    const long reps = std::max<long>(30, cases / 8);
    for (long c = 0; c < reps; ++c) {
      const long m = rand_range(rng, 0, 5);
      const InitialSequence p = rand_poly(rng, m);
      const BinomialArray A = make_array(p);
      const BinomialArray T = trapezoid_interchange(A);
      bool ok = true;
      std::string where = kv({{"case", c}});
      for (long k = 0; k <= m + 5 && ok; ++k)
        for (long n = -6; n <= -1 && ok; ++n) {
          Scalar lhs = A.entry(k, n);
          Scalar rhs = T.entry(k, k - n - m - 1);
          if (k % 2 != 0) rhs = -rhs;
          if (lhs != rhs) {
            ok = false;
            where = kv({{"case", c}, {"k", k}, {"n", n}});
          }
        }
      // The interchange is involutive when the image keeps the same degree.
      if (ok && T.poly_degree() == A.poly_degree()) {
        const BinomialArray TT = trapezoid_interchange(T);
        if (!(TT.base_initial() == A.base_initial())) {
          ok = false;
          where = kv({{"case", c}, {"double", 1}});
        }
      }
      fam.check_flag(where, ok);
    }
    // Degree-1 map: B(-sx+r) -> B((r+s)x+r).
    for (long r = -3; r <= 3; ++r)
      for (long s = -3; s <= 3; ++s) {
        if (r == 0 || s == 0 || s == -r) continue;  // keep degree exactly 1 on both sides
        const BinomialArray A = make_array(InitialSequence{r, -s});
        const BinomialArray T = trapezoid_interchange(A);
        fam.check_flag(kv({{"r", r}, {"s", s}}),
                       T.base_initial() == InitialSequence(SeqVec{Scalar(r), Scalar(r + s)}));
      }
    out.families.push_back(fam.take());
  }
}

void border_families(SuiteReport& out, std::uint64_t seed, long cases) {
  Family fam("BorderProfile", "top line, lower-right diagonal, |column -1| tail");
  const BinomialArray anchor = make_array(InitialSequence{2, 1, 5, -6});
  const BorderProfile bp = border_profile(anchor);
  fam.check("anchor top", bp.top, Scalar(2));
  fam.check("anchor diag", bp.diag, Scalar(-6));
  fam.check("anchor |col -1|", bp.col_minus_one_abs, Scalar(12));
  auto rng = family_rng(seed, "BorderProfile");
  const long reps = std::max<long>(20, cases / 10);
  for (long c = 0; c < reps; ++c) {
    const long m = rand_range(rng, 0, 6);
    const InitialSequence p = rand_poly(rng, m);
    const BinomialArray A = make_array(p);
    const BorderProfile b = border_profile(A);
    Scalar alt(0);
    for (long i = 0; i <= m; ++i) alt += (i % 2 == 0 ? p.term(i) : -p.term(i));
    const long n = rand_range(rng, 1, 6);
    bool ok = b.top == p.term(0) && b.diag == p.term(m) && b.col_minus_one_abs == abs(alt) &&
              A.entry(0, n) == b.top && A.entry(n + m, n) == b.diag &&
              abs(A.entry(m + rand_range(rng, 1, 5), -1)) == b.col_minus_one_abs;
    fam.check_flag(kv({{"case", c}}), ok);
  }
  out.families.push_back(fam.take());
}

void shift_origin_family(SuiteReport& out, std::uint64_t seed, long cases) {
  Family fam("ShiftOrigin", "entry(shift(A,t),k,n) = entry(A,k,n+t)");
  auto rng = family_rng(seed, "ShiftOrigin");
  const long reps = std::max<long>(30, cases / 8);
  for (long c = 0; c < reps; ++c) {
    const InitialSequence p = rand_poly(rng, rand_range(rng, 0, 5));
    const BinomialArray A = make_array(p);
    const long t = rand_range(rng, -4, 4);
    const BinomialArray S = shift_origin(A, t);
    const long k = rand_range(rng, 0, 8), n = rand_range(rng, -5, 5);
    fam.check(kv({{"case", c}, {"t", t}, {"k", k}, {"n", n}}), S.entry(k, n), A.entry(k, n + t));
  }
  out.families.push_back(fam.take());
}

}  // namespace

void run_core(SuiteReport& out, std::uint64_t seed, long cases) {
  closed_form_vs_fill(out, seed, cases);
  entry_anchors(out);
  transform_round_trip(out, seed);
  transform_composition(out, seed, cases);
  linearity(out, seed, cases);
  basis_decomposition(out, seed, cases);
  taylor_families(out, seed, cases);
  reverse_and_interchange(out, seed, cases);
  border_families(out, seed, cases);
  shift_origin_family(out, seed, cases);
}

}  // namespace binar::detail
