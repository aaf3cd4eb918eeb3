#include "parteq/diopheq.hpp"
#include "parteq/error.hpp"
#include "parteq/quasipoly.hpp"

namespace parteq {

SolutionCertificate a1a2_construct(const PartSet& a, const RatPoly& f, const Int& m) {
  if (a.size() != 2) throw Error(ErrorCode::WrongArity, "need exactly two parts, got " + a.to_string());
  const std::uint64_t a1 = a.parts()[0], a2 = a.parts()[1];
  if (a.gcd() != 1) throw Error(ErrorCode::HypothesisViolated, a.to_string() + " is not coprime");
  if (f.leading() <= 0) throw Error(ErrorCode::HypothesisViolated, "f needs a positive leading coefficient");
  Rat fv = f.eval(m);
  if (!is_integer(fv)) throw Error(ErrorCode::HypothesisViolated, "f(" + to_string(m) + ") = " + to_string(fv));
  if (fv <= 1) throw Error(ErrorCode::HypothesisViolated, "f(" + to_string(m) + ") = " + to_string(fv) + " <= 1");

  SolutionCertificate c;
  c.equation = "P_" + a.to_string() + "(x) = " + f.to_string('y');
  c.kind = CertificateKind::point;
  c.value = fv.get_num();
  c.x = Int(a1 * a2) * (c.value - 1);
  c.y = m;
  Int dp = piece_source(a)->value(c.x);
  c.verified = dp == c.value;
  c.transcript.push_back("x = " + std::to_string(a1) + "*" + std::to_string(a2) + "*(f(" + to_string(m) + ") - 1) = " +
                         to_string(c.x));
  c.transcript.push_back("P_A(" + to_string(c.x) + ") = " + to_string(dp) + " (DP)");
  if (!c.verified)
    throw Error(ErrorCode::VerificationFailed, "P_A(" + to_string(c.x) + ") = " + to_string(dp) + " != " + to_string(c.value));
  return c;
}

}  // namespace parteq
