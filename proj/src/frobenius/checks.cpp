#include "tqft/frobenius.hpp"

namespace tqft {

AxiomReport check_frobenius(const FrobeniusAlgebra& a) {
  const std::size_t n = a.dim();
  const Matrix id = Matrix::identity(n);
  const Matrix& m = a.mult();
  const Matrix& u = a.unit();
  const Matrix& e = a.counit();
  const Matrix& d = a.comult();
  const Matrix swap = braiding(n, n);

  AxiomReport r;
  r.expect_equal("associativity", compose(m, kron(m, id)), compose(m, kron(id, m)));
  r.expect_equal("left_unit", compose(m, kron(u, id)), id);
  r.expect_equal("right_unit", compose(m, kron(id, u)), id);
  r.expect_equal("coassociativity", compose(kron(d, id), d), compose(kron(id, d), d));
  r.expect_equal("left_counit", compose(kron(e, id), d), id);
  r.expect_equal("right_counit", compose(kron(id, e), d), id);
  const Matrix dm = compose(d, m);
  r.expect_equal("frobenius_left", compose(kron(id, m), kron(d, id)), dm);
  r.expect_equal("frobenius_right", dm, compose(kron(m, id), kron(id, d)));
  r.expect_equal("commutativity", compose(m, swap), m);
  r.expect_equal("cocommutativity", compose(swap, d), d);
  return r;
}

namespace {

void morphism_diagrams(AxiomReport& r, const std::string& prefix, const FrobeniusAlgebra& src,
                       const FrobeniusAlgebra& dst, const Matrix& f) {
  const Matrix ff = kron(f, f);
  r.expect_equal(prefix + "unit", compose(f, src.unit()), dst.unit());
  r.expect_equal(prefix + "mult", compose(f, src.mult()), compose(dst.mult(), ff));
  r.expect_equal(prefix + "counit", compose(dst.counit(), f), src.counit());
  r.expect_equal(prefix + "comult", compose(dst.comult(), f), compose(ff, src.comult()));
}

}  // namespace

AxiomReport check_morphism(const FrobeniusMorphism& f) {
  AxiomReport r;
  morphism_diagrams(r, "", f.source(), f.target(), f.map());
  return r;
}

AxiomReport check_extended_morphism(const ExtendedFrobeniusMorphism& f) {
  AxiomReport r;
  morphism_diagrams(r, "", f.source().base(), f.target().base(), f.map());
  r.expect_equal("theta", compose(f.map(), f.source().point()), f.target().point());
  r.expect_equal("phi", compose(f.map(), f.source().involution()),
                 compose(f.target().involution(), f.map()));
  return r;
}

AxiomReport check_involution(const FrobeniusAlgebra& a, const Matrix& phi) {
  if (phi.rows() != a.dim() || phi.cols() != a.dim()) {
    throw ShapeError("phi must be " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) +
                     ", got " + phi.shape());
  }
  AxiomReport r;
  r.expect_equal("involution", compose(phi, phi), Matrix::identity(a.dim()));
  morphism_diagrams(r, "phi_", a, a, phi);
  return r;
}

AxiomReport check_extended(const ExtendedFrobeniusAlgebra& e) {
  const FrobeniusAlgebra& a = e.base();
  const Matrix id = Matrix::identity(a.dim());
  const Matrix& phi = e.involution();
  const Matrix& theta = e.point();

  AxiomReport r = check_involution(a, phi);
  const Matrix times_theta = compose(a.mult(), kron(theta, id));
  r.expect_equal("theta_fixed", compose(phi, times_theta), times_theta);
  r.expect_equal("crosscap", compose(a.mult(), kron(theta, theta)),
                 compose(compose(a.mult(), kron(phi, id)), compose(a.comult(), a.unit())));
  r.expect_equal("phi_theta", compose(phi, theta), theta);
  return r;
}

}  // namespace tqft
