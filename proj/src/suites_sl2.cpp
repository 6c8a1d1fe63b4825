#include <sstream>

#include "binar/sl2.hpp"
#include "binar/transform.hpp"
#include "suite_common.hpp"

namespace binar::detail {

namespace {

RepVector rand_vector(std::mt19937_64& rng, long n) {
  RepVector v = RepVector::zero(n);
  v.coeffs = rand_prefix(rng, n + 1);
  return v;
}

void pairing_triple(SuiteReport& out, std::uint64_t seed, long cases) {
  Family fam("PairingTriple", "random p, q with deg <= n <= 10");
  auto rng = family_rng(seed, "PairingTriple");
  const long reps = std::max<long>(100, cases);
  for (long c = 0; c < reps; ++c) {
    const long n = rand_range(rng, 0, 10);
    const SeqVec p = rand_prefix(rng, rand_range(rng, 1, n + 1));
    const SeqVec q = rand_prefix(rng, rand_range(rng, 1, n + 1));
    const PairingCheckResult res = pairing_check(p, q, n);
    std::ostringstream os;
    os << "case=" << c << ",n=" << n;
    fam.check_flag(os.str(), res.equal && res.lhs == res.mid && res.mid == res.rhs);
  }
  out.families.push_back(fam.take());
}

void pairing_vs_convolution(SuiteReport& out, std::uint64_t seed, long cases) {
  Family fam("PairingVsConvolution",
             "primed form against the shifted convolution identity at index n");
  auto rng = family_rng(seed, "PairingVsConvolution");
  const long reps = std::max<long>(50, cases / 4);
  for (long c = 0; c < reps; ++c) {
    const long n = rand_range(rng, 0, 10);
    const SeqVec p = rand_prefix(rng, n + 1), q = rand_prefix(rng, n + 1);
    const PairingCheckResult res = pairing_check(p, q, n);
    const DwyerFrankelResult df = dwyer_frankel_check(p, q, rand_range(rng, -6, 6), n);
    std::ostringstream os;
    os << "case=" << c << ",n=" << n;
    fam.check_flag(os.str(),
                   res.equal && df.equal && res.mid == df.lhs && res.rhs == df.rhs);
  }
  out.families.push_back(fam.take());
}

void form_invariance(SuiteReport& out, std::uint64_t seed, long cases) {
  Family fam("FormInvariance", "<fu,v> = -<u,fv> and <fu,v>' = <u,fv>', n <= 10");
  auto rng = family_rng(seed, "FormInvariance");
  const long reps = std::max<long>(40, cases / 5);
  for (long c = 0; c < reps; ++c) {
    const long n = rand_range(rng, 1, 10);
    const RepVector u = rand_vector(rng, n), v = rand_vector(rng, n);
    std::ostringstream os;
    os << "case=" << c << ",n=" << n;
    fam.check(os.str() + ",invariant", invariant_form(f_action(u), v),
              -invariant_form(u, f_action(v)));
    fam.check(os.str() + ",primed", primed_form(f_action(u), v),
              primed_form(u, f_action(v)));
    fam.check(os.str() + ",via-s", primed_form(u, v), invariant_form(u, s_involution(v)));
  }
  out.families.push_back(fam.take());
}

void form_parity(SuiteReport& out, std::uint64_t seed, long cases) {
  Family fam("FormParity", "invariant form symmetric for even n, alternating for odd n");
  auto rng = family_rng(seed, "FormParity");
  const long reps = std::max<long>(40, cases / 5);
  for (long c = 0; c < reps; ++c) {
    const long n = rand_range(rng, 0, 10);
    const RepVector u = rand_vector(rng, n), v = rand_vector(rng, n);
    const Scalar sgn(n % 2 == 0 ? 1 : -1);
    std::ostringstream os;
    os << "case=" << c << ",n=" << n;
    fam.check(os.str(), invariant_form(u, v), sgn * invariant_form(v, u));
    if (n % 2 == 1) fam.check(os.str() + ",isotropic", invariant_form(u, u), Scalar(0));
  }
  out.families.push_back(fam.take());
}

void b_f_families(SuiteReport& out, std::uint64_t seed, long cases) {
  Family rt("BfRoundTrip", "B_f B_f^{-1} = B_f^{-1} B_f = id, n <= 12");
  Family pres("BfPreservesPrimed", "<B_f u, B_f^{-1} v>' = <u,v>', n <= 12");
  auto rng = family_rng(seed, "BfRoundTrip");
  const long reps = std::max<long>(40, cases / 5);
  for (long c = 0; c < reps; ++c) {
    const long n = rand_range(rng, 0, 12);
    const RepVector u = rand_vector(rng, n), v = rand_vector(rng, n);
    std::ostringstream os;
    os << "case=" << c << ",n=" << n;
    rt.check_flag(os.str(), b_f_inverse(b_f(u)) == u && b_f(b_f_inverse(u)) == u);
    pres.check(os.str(), primed_form(b_f(u), b_f_inverse(v)), primed_form(u, v));
  }
  out.families.push_back(rt.take());
  out.families.push_back(pres.take());
}

void anchors(SuiteReport& out) {
  Family fam("Sl2Anchors", "fixed low-dimensional values");
  fam.check("<f^2 phi, phi> n=2", invariant_form(RepVector::basis(2, 2), RepVector::basis(2, 0)),
            Scalar(1));
  fam.check("<f phi, f phi> n=2", invariant_form(RepVector::basis(2, 1), RepVector::basis(2, 1)),
            Scalar(-1));
  {
    RepVector expect = RepVector::zero(2);
    expect.coeffs = SeqVec{Scalar(1), Scalar(-1), Scalar(1)};
    fam.check_flag("Bf^{-1} phi n=2", b_f_inverse(RepVector::basis(2, 0)) == expect);
  }
  {
    const SeqVec one_x_x2{Scalar(1), Scalar(1), Scalar(1)};
    const PairingCheckResult res = pairing_check(one_x_x2, one_x_x2, 2);
    fam.check("p=q=1+X+X^2 n=2", res.rhs, Scalar(3));
    fam.check_flag("p=q=1+X+X^2 n=2 triple", res.equal);
  }
  out.families.push_back(fam.take());
}

}  // namespace

void run_sl2(SuiteReport& out, std::uint64_t seed, long cases) {
  pairing_triple(out, seed, cases);
  pairing_vs_convolution(out, seed, cases);
  form_invariance(out, seed, cases);
  form_parity(out, seed, cases);
  b_f_families(out, seed, cases);
  anchors(out);
}

}  // namespace binar::detail
